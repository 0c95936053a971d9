//! Line-oriented report formatting. Output is deterministic and
//! machine-parsable: an outcome label on the first line where relevant,
//! then one `KEY: value` pair per line.

use alg_core::{Algebra, AlgebraElement, SolveOutcome, TensorOperator};

/// `dim <n> / associative: <yes|no> / commutative: <yes|no> / unit: <u|none>`
pub fn info_line(algebra: &Algebra) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let unit = match algebra.unit() {
        Some(u) => u.to_string(),
        None => "none".to_string(),
    };
    format!(
        "dim {} / associative: {} / commutative: {} / unit: {}",
        algebra.dim(),
        yes_no(algebra.is_associative()),
        yes_no(algebra.is_commutative()),
        unit
    )
}

/// Outcome label, then the solution, the particular solution with its
/// kernel basis, or the witness ranks.
pub fn outcome_lines(outcome: &SolveOutcome<AlgebraElement>) -> Vec<String> {
    match outcome {
        SolveOutcome::Unique(x) => vec!["UNIQUE".to_string(), format!("SOLUTION: {x}")],
        SolveOutcome::Affine { particular, kernel } => {
            let mut lines = vec!["AFFINE".to_string(), format!("PARTICULAR: {particular}")];
            lines.extend(kernel.iter().map(|v| format!("KERNEL: {v}")));
            lines
        }
        SolveOutcome::Inconsistent { rank, augmented_rank } => vec![
            "INCONSISTENT".to_string(),
            format!("RANK: {rank}"),
            format!("AUGMENTED-RANK: {augmented_rank}"),
        ],
    }
}

/// The `tensor` / `c p q value` / `end` block; consumable by
/// `apply-tensor`.
pub fn tensor_lines(tensor: &TensorOperator) -> Vec<String> {
    let mut lines = vec!["tensor".to_string()];
    for (p, q, value) in tensor.nonzero_coefficients() {
        lines.push(format!("c {p} {q} {value}"));
    }
    lines.push("end".to_string());
    lines
}
