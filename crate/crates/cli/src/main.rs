//! `alg`: exact solving of linear sandwich equations in finite-dimensional
//! algebras given by structure constants.

mod parse;
mod print;

use std::fmt;
use std::fs;
use std::io::Read;
use std::process::exit;

use clap::{Parser, Subcommand};

use alg_core::{
    builtin, commutator_unit_solve, right_inverse, Algebra, AlgebraElement, Field, Grouping,
    OperatorError, OperatorExpression, SandwichTerm, SolveOutcome,
};
use parse::{parse_element, parse_tensor, AlgebraFile, ParseError};

const EXIT_OK: i32 = 0;
/// Negative mathematical result: inconsistent equation, no right inverse,
/// no unit element.
const EXIT_NEGATIVE: i32 = 1;
/// Singular or non-representable operator.
const EXIT_SINGULAR: i32 = 2;
const EXIT_USAGE: i32 = 64;
const EXIT_PARSE: i32 = 65;
const EXIT_IO: i32 = 66;

#[derive(Parser)]
#[command(
    name = "alg",
    version,
    about = "Exact linear sandwich-equation solver for finite-dimensional algebras",
    after_help = "Algebras are given as `builtin:<name>` (e.g. builtin:quaternions, \
builtin:\"matrix 2\") or as a path to an algebra definition file. Elements are \
written `[c0, c1, ...]` or as named sums like `3/2*e0 + -1*e3`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report dimension, associativity, commutativity, and the unit.
    Info {
        #[arg(long)]
        algebra: String,
    },
    /// Multiply two elements.
    Mul {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Solve a sandwich equation `sum_s left_s * x * right_s = rhs`.
    Solve {
        #[arg(long)]
        algebra: String,
        /// Term `LEFT:RIGHT[:L|R]`; grouping defaults to L = (left*x)*right.
        #[arg(long = "term", allow_hyphen_values = true)]
        terms: Vec<String>,
        /// Like --term with the left coefficient negated.
        #[arg(long = "minus-term", allow_hyphen_values = true)]
        minus_terms: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Invert a bijective sandwich operator in tensor form.
    InvertOp {
        #[arg(long)]
        algebra: String,
        #[arg(long = "term", allow_hyphen_values = true)]
        terms: Vec<String>,
        #[arg(long = "minus-term", allow_hyphen_values = true)]
        minus_terms: Vec<String>,
    },
    /// Apply a tensor-form operator (as printed by invert-op) to an element.
    ApplyTensor {
        #[arg(long)]
        algebra: String,
        /// Path to a tensor coefficient file, or `-` for stdin.
        #[arg(long)]
        tensor: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Compute the right inverse of an element, if it exists.
    RightInverse {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Determinant of the left-multiplication matrix of an element.
    DetLeft {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Solve `a*x - x*a = unit` for the given element a.
    CommutatorUnit {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
}

enum CliError {
    Usage(String),
    Parse(ParseError),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                exit(EXIT_OK);
            }
            eprint!("{e}");
            exit(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            exit(e.exit_code());
        }
    }
}

fn load_algebra(reference: &str) -> Result<Algebra, CliError> {
    if let Some(name) = reference.strip_prefix("builtin:") {
        return builtin(name, Field::rational())
            .map_err(|e| CliError::Parse(ParseError { line: None, message: e.to_string() }));
    }
    let text = fs::read_to_string(reference)
        .map_err(|e| CliError::Io(format!("cannot read `{reference}`: {e}")))?;
    Ok(AlgebraFile::parse(&text)?.build()?)
}

fn element(text: &str, algebra: &Algebra) -> Result<AlgebraElement, CliError> {
    Ok(parse_element(text, algebra)?)
}

/// Parses `LEFT:RIGHT[:L|R]`, negating the left coefficient when the term
/// came from `--minus-term`.
fn term(text: &str, algebra: &Algebra, negate: bool) -> Result<SandwichTerm, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let (left_text, right_text, grouping) = match parts.as_slice() {
        [left, right] => (*left, *right, Grouping::LeftFirst),
        [left, right, "L"] => (*left, *right, Grouping::LeftFirst),
        [left, right, "R"] => (*left, *right, Grouping::RightFirst),
        _ => {
            return Err(CliError::Parse(ParseError {
                line: None,
                message: format!("expected `LEFT:RIGHT[:L|R]`, got `{text}`"),
            }))
        }
    };
    let mut left = element(left_text, algebra)?;
    if negate {
        left = left.neg();
    }
    let right = element(right_text, algebra)?;
    SandwichTerm::new(left, right, grouping).map_err(|e| {
        CliError::Parse(ParseError { line: None, message: e.to_string() })
    })
}

fn expression(
    terms: &[String],
    minus_terms: &[String],
    algebra: &Algebra,
) -> Result<OperatorExpression, CliError> {
    if terms.is_empty() && minus_terms.is_empty() {
        return Err(CliError::Usage(
            "at least one --term or --minus-term is required".to_string(),
        ));
    }
    let mut parsed = Vec::new();
    for t in terms {
        parsed.push(term(t, algebra, false)?);
    }
    for t in minus_terms {
        parsed.push(term(t, algebra, true)?);
    }
    OperatorExpression::new(parsed).map_err(|e| {
        CliError::Parse(ParseError { line: None, message: e.to_string() })
    })
}

fn solve_exit_code(outcome: &SolveOutcome<AlgebraElement>) -> i32 {
    match outcome {
        SolveOutcome::Inconsistent { .. } => EXIT_NEGATIVE,
        _ => EXIT_OK,
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Info { algebra } => {
            let algebra = load_algebra(&algebra)?;
            println!("{}", print::info_line(&algebra));
            Ok(EXIT_OK)
        }
        Command::Mul { algebra, lhs, rhs } => {
            let algebra = load_algebra(&algebra)?;
            let product = element(&lhs, &algebra)?
                .mul(&element(&rhs, &algebra)?)
                .expect("operands parsed in the same algebra");
            println!("PRODUCT: {product}");
            Ok(EXIT_OK)
        }
        Command::Solve { algebra, terms, minus_terms, rhs } => {
            let algebra = load_algebra(&algebra)?;
            let expr = expression(&terms, &minus_terms, &algebra)?;
            let b = element(&rhs, &algebra)?;
            let outcome = expr.solve(&b).expect("operands parsed in the same algebra");
            for line in print::outcome_lines(&outcome) {
                println!("{line}");
            }
            Ok(solve_exit_code(&outcome))
        }
        Command::InvertOp { algebra, terms, minus_terms } => {
            let algebra = load_algebra(&algebra)?;
            let expr = expression(&terms, &minus_terms, &algebra)?;
            match expr.inverse_tensor() {
                Ok(tensor) => {
                    for line in print::tensor_lines(&tensor) {
                        println!("{line}");
                    }
                    Ok(EXIT_OK)
                }
                Err(OperatorError::Singular) => {
                    println!("SINGULAR");
                    Ok(EXIT_SINGULAR)
                }
                Err(OperatorError::NotRepresentable) => {
                    println!("NOT-REPRESENTABLE");
                    Ok(EXIT_SINGULAR)
                }
                Err(OperatorError::NonassociativeUnsupported) => {
                    println!("NONASSOCIATIVE");
                    Ok(EXIT_SINGULAR)
                }
                Err(e) => Err(CliError::Parse(ParseError {
                    line: None,
                    message: e.to_string(),
                })),
            }
        }
        Command::ApplyTensor { algebra, tensor, element: elem } => {
            let algebra = load_algebra(&algebra)?;
            let text = if tensor == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
                buf
            } else {
                fs::read_to_string(&tensor)
                    .map_err(|e| CliError::Io(format!("cannot read `{tensor}`: {e}")))?
            };
            let tensor = parse_tensor(&text, &algebra)?;
            let b = element(&elem, &algebra)?;
            let result = tensor.apply(&b).expect("operands parsed in the same algebra");
            println!("RESULT: {result}");
            Ok(EXIT_OK)
        }
        Command::RightInverse { algebra, element: elem } => {
            let algebra = load_algebra(&algebra)?;
            let a = element(&elem, &algebra)?;
            match right_inverse(&a) {
                Ok(Some(x)) => {
                    println!("RIGHT-INVERSE: {x}");
                    Ok(EXIT_OK)
                }
                Ok(None) => {
                    println!("NO-RIGHT-INVERSE");
                    Ok(EXIT_NEGATIVE)
                }
                Err(OperatorError::NoUnit) => {
                    println!("NO-UNIT");
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(CliError::Parse(ParseError {
                    line: None,
                    message: e.to_string(),
                })),
            }
        }
        Command::DetLeft { algebra, element: elem } => {
            let algebra = load_algebra(&algebra)?;
            let a = element(&elem, &algebra)?;
            let det = a
                .left_mul_matrix()
                .det()
                .expect("left-multiplication matrix is square");
            println!("DET-LEFT: {det}");
            Ok(EXIT_OK)
        }
        Command::CommutatorUnit { algebra, element: elem } => {
            let algebra = load_algebra(&algebra)?;
            let a = element(&elem, &algebra)?;
            match commutator_unit_solve(&a) {
                Ok(outcome) => {
                    for line in print::outcome_lines(&outcome) {
                        println!("{line}");
                    }
                    Ok(solve_exit_code(&outcome))
                }
                Err(OperatorError::NoUnit) => {
                    println!("NO-UNIT");
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(CliError::Parse(ParseError {
                    line: None,
                    message: e.to_string(),
                })),
            }
        }
    }
}
