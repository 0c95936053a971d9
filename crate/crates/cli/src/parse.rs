//! Parsers for the text formats the CLI consumes: algebra definition
//! files, element literals, and tensor coefficient files.

use std::fmt;

use alg_core::{builtin, Algebra, AlgebraElement, Field, FieldValue, TensorOperator};

/// Parse failure with an optional 1-based line number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: Some(line), message: message.into() }
    }

    fn new(message: impl Into<String>) -> ParseError {
        ParseError { line: None, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parsed algebra definition: either a reference into the builtin catalog
/// or an explicit structure-constant table.
#[derive(Clone, Debug)]
pub enum AlgebraFile {
    Builtin { name: String },
    Table(AlgebraTable),
}

/// Explicit table from an algebra definition file.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub basis_names: Option<Vec<String>>,
    pub triples: Vec<(usize, usize, usize, FieldValue)>,
    pub declared_unit: Option<Vec<FieldValue>>,
}

/// Strips a `#` comment and surrounding whitespace; `None` for blanks.
fn significant(line: &str) -> Option<&str> {
    let code = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let code = code.trim();
    if code.is_empty() {
        None
    } else {
        Some(code)
    }
}

impl AlgebraFile {
    /// Parses the line-oriented algebra format.
    ///
    /// Either a single `builtin <name>` line, or the block
    /// `algebra <name>` / `field <descriptor>` / `dim <n>` /
    /// optional `basis <names...>` / `sc <i> <j> <k> <value>` lines /
    /// optional `unit [c0, ...]` / `end`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter_map(|(idx, raw)| significant(raw).map(|code| (idx + 1, code)));

        let (first_no, first) = lines
            .next()
            .ok_or_else(|| ParseError::new("empty algebra definition"))?;

        if let Some(rest) = first.strip_prefix("builtin") {
            let name = rest.trim();
            if name.is_empty() {
                return Err(ParseError::at(first_no, "builtin reference needs a name"));
            }
            if let Some((line_no, _)) = lines.next() {
                return Err(ParseError::at(line_no, "content after builtin reference"));
            }
            return Ok(AlgebraFile::Builtin { name: name.to_string() });
        }

        let name = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["algebra", name] => name.to_string(),
            _ => return Err(ParseError::at(first_no, "expected `algebra <name>`")),
        };

        let (line_no, line) = lines
            .next()
            .ok_or_else(|| ParseError::new("missing `field` line"))?;
        let field = match line.strip_prefix("field") {
            Some(descriptor) => Field::parse_descriptor(descriptor.trim())
                .map_err(|e| ParseError::at(line_no, e.to_string()))?,
            None => return Err(ParseError::at(line_no, "expected `field <descriptor>`")),
        };

        let (line_no, line) = lines
            .next()
            .ok_or_else(|| ParseError::new("missing `dim` line"))?;
        let dim: usize = match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["dim", n] => n
                .parse()
                .map_err(|_| ParseError::at(line_no, format!("bad dimension `{n}`")))?,
            _ => return Err(ParseError::at(line_no, "expected `dim <n>`")),
        };
        if dim == 0 {
            return Err(ParseError::at(line_no, "dimension must be at least 1"));
        }

        let mut basis_names: Option<Vec<String>> = None;
        let mut triples = Vec::new();
        let mut declared_unit: Option<Vec<FieldValue>> = None;
        let mut ended = false;

        for (line_no, line) in lines {
            if ended {
                return Err(ParseError::at(line_no, "content after `end`"));
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("basis") => {
                    if basis_names.is_some() || !triples.is_empty() || declared_unit.is_some() {
                        return Err(ParseError::at(
                            line_no,
                            "`basis` must come right after `dim`",
                        ));
                    }
                    let names: Vec<String> = tokens.map(str::to_string).collect();
                    if names.len() != dim {
                        return Err(ParseError::at(
                            line_no,
                            format!("expected {dim} basis names, got {}", names.len()),
                        ));
                    }
                    basis_names = Some(names);
                }
                Some("sc") => {
                    if declared_unit.is_some() {
                        return Err(ParseError::at(line_no, "`sc` after `unit`"));
                    }
                    let parts: Vec<&str> = tokens.collect();
                    let [i, j, k, value] = parts.as_slice() else {
                        return Err(ParseError::at(
                            line_no,
                            "expected `sc <i> <j> <k> <value>`",
                        ));
                    };
                    let parse_index = |text: &str| -> Result<usize, ParseError> {
                        let idx: usize = text.parse().map_err(|_| {
                            ParseError::at(line_no, format!("bad index `{text}`"))
                        })?;
                        if idx >= dim {
                            return Err(ParseError::at(
                                line_no,
                                format!("index {idx} out of range for dimension {dim}"),
                            ));
                        }
                        Ok(idx)
                    };
                    let (i, j, k) = (parse_index(i)?, parse_index(j)?, parse_index(k)?);
                    let value = field
                        .parse(value)
                        .map_err(|e| ParseError::at(line_no, e.to_string()))?;
                    triples.push((i, j, k, value));
                }
                Some("unit") => {
                    if declared_unit.is_some() {
                        return Err(ParseError::at(line_no, "second `unit` line"));
                    }
                    let literal = line["unit".len()..].trim();
                    let coords = parse_bracketed(literal, field, dim)
                        .map_err(|e| ParseError::at(line_no, e.message))?;
                    declared_unit = Some(coords);
                }
                Some("end") => {
                    if tokens.next().is_some() {
                        return Err(ParseError::at(line_no, "trailing tokens after `end`"));
                    }
                    ended = true;
                }
                Some(other) => {
                    return Err(ParseError::at(line_no, format!("unknown directive `{other}`")));
                }
                None => unreachable!("blank lines were filtered"),
            }
        }
        if !ended {
            return Err(ParseError::new("missing `end`"));
        }
        Ok(AlgebraFile::Table(AlgebraTable {
            name,
            field,
            dim,
            basis_names,
            triples,
            declared_unit,
        }))
    }

    /// Builds the algebra, verifying any declared unit against the one
    /// detected from the structure constants.
    pub fn build(&self) -> Result<Algebra, ParseError> {
        match self {
            AlgebraFile::Builtin { name } => builtin(name, Field::rational())
                .map_err(|e| ParseError::new(e.to_string())),
            AlgebraFile::Table(table) => {
                let algebra = Algebra::new(
                    table.field,
                    table.dim,
                    table
                        .triples
                        .iter()
                        .map(|(i, j, k, v)| ((*i, *j, *k), v.clone())),
                    table.basis_names.clone(),
                )
                .map_err(|e| ParseError::new(e.to_string()))?;
                if let Some(declared) = &table.declared_unit {
                    match algebra.unit() {
                        Some(unit) if unit.coords() == declared.as_slice() => {}
                        Some(unit) => {
                            return Err(ParseError::new(format!(
                                "algebra `{}`: declared unit does not match the detected unit {unit}",
                                table.name
                            )));
                        }
                        None => {
                            return Err(ParseError::new(format!(
                                "algebra `{}`: a unit is declared but the algebra has none",
                                table.name
                            )));
                        }
                    }
                }
                Ok(algebra)
            }
        }
    }
}

fn parse_bracketed(text: &str, field: Field, dim: usize) -> Result<Vec<FieldValue>, ParseError> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| ParseError::new(format!("expected `[c0, ...]`, got `{text}`")))?;
    let coords = inner
        .split(',')
        .map(|chunk| {
            let chunk = chunk.trim();
            field
                .parse(chunk)
                .map_err(|e| ParseError::new(format!("bad coordinate `{chunk}`: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != dim {
        return Err(ParseError::new(format!(
            "expected {dim} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(coords)
}

/// Parses an element literal: a bracketed coordinate vector
/// `[c0, c1, ...]` or a named sum like `3/2*e0 + -1*e3` (a bare basis
/// name means coefficient one).
pub fn parse_element(text: &str, algebra: &Algebra) -> Result<AlgebraElement, ParseError> {
    let text = text.trim();
    let field = algebra.field();
    if text.starts_with('[') {
        let coords = parse_bracketed(text, field, algebra.dim())?;
        return algebra
            .element(coords)
            .map_err(|e| ParseError::new(e.to_string()));
    }
    if text == "0" {
        return Ok(algebra.zero());
    }
    let mut coords = vec![field.zero(); algebra.dim()];
    for chunk in text.split('+') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(ParseError::new(format!("empty term in `{text}`")));
        }
        let (scalar, name) = match chunk.split_once('*') {
            Some((scalar, name)) => {
                let scalar = field
                    .parse(scalar.trim())
                    .map_err(|e| ParseError::new(format!("bad coefficient in `{chunk}`: {e}")))?;
                (scalar, name.trim())
            }
            None => (field.one(), chunk),
        };
        let index = algebra
            .basis_names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ParseError::new(format!("unknown basis name `{name}`")))?;
        coords[index] = coords[index]
            .add(&scalar)
            .expect("element coordinates share the algebra field");
    }
    algebra
        .element(coords)
        .map_err(|e| ParseError::new(e.to_string()))
}

/// Parses the tensor coefficient format produced by `invert-op`:
/// a `tensor` line, `c <p> <q> <value>` lines, and `end`.
pub fn parse_tensor(text: &str, algebra: &Algebra) -> Result<TensorOperator, ParseError> {
    let n = algebra.dim();
    let field = algebra.field();
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(idx, raw)| significant(raw).map(|code| (idx + 1, code)));
    match lines.next() {
        Some((_, "tensor")) => {}
        Some((line_no, _)) => return Err(ParseError::at(line_no, "expected `tensor`")),
        None => return Err(ParseError::new("empty tensor definition")),
    }
    let mut coefficients = vec![field.zero(); n * n];
    let mut seen = vec![false; n * n];
    let mut ended = false;
    for (line_no, line) in lines {
        if ended {
            return Err(ParseError::at(line_no, "content after `end`"));
        }
        if line == "end" {
            ended = true;
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let ["c", p, q, value] = parts.as_slice() else {
            return Err(ParseError::at(line_no, "expected `c <p> <q> <value>`"));
        };
        let parse_index = |text: &str| -> Result<usize, ParseError> {
            let idx: usize = text
                .parse()
                .map_err(|_| ParseError::at(line_no, format!("bad index `{text}`")))?;
            if idx >= n {
                return Err(ParseError::at(
                    line_no,
                    format!("index {idx} out of range for dimension {n}"),
                ));
            }
            Ok(idx)
        };
        let (p, q) = (parse_index(p)?, parse_index(q)?);
        if seen[p * n + q] {
            return Err(ParseError::at(line_no, format!("duplicate coefficient ({p}, {q})")));
        }
        seen[p * n + q] = true;
        coefficients[p * n + q] = field
            .parse(value)
            .map_err(|e| ParseError::at(line_no, e.to_string()))?;
    }
    if !ended {
        return Err(ParseError::new("missing `end`"));
    }
    TensorOperator::new(algebra, coefficients).map_err(|e| ParseError::new(e.to_string()))
}
