//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Every check is exact (zero tolerance); random sampling uses fixed
//! seeds so runs are reproducible.
//!
//! Run with `cargo test -p alg-cli --test acceptance` (add
//! `-- --nocapture` to see the PASS lines).

use std::process::{Command, Output};

use alg_core::{
    builtin, commutator_unit_solve, is_right_invertible, matrix_algebra, Algebra, AlgebraElement,
    Field, FieldValue, Grouping, Matrix, OperatorExpression, SandwichTerm, SolveOutcome,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q() -> Field {
    Field::rational()
}

fn random_scalar(rng: &mut ChaCha8Rng, field: Field) -> FieldValue {
    match field.modulus() {
        None => {
            let n = rng.gen_range(-8i64..=8);
            let d = rng.gen_range(1i64..=4);
            field.parse(&format!("{n}/{d}")).unwrap()
        }
        Some(p) => field.from_integer(rng.gen_range(0..p.min(64)) as i64),
    }
}

fn random_element(rng: &mut ChaCha8Rng, alg: &Algebra) -> AlgebraElement {
    let coords = (0..alg.dim())
        .map(|_| random_scalar(rng, alg.field()))
        .collect();
    alg.element(coords).unwrap()
}

fn random_expression(rng: &mut ChaCha8Rng, alg: &Algebra) -> OperatorExpression {
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| {
            let grouping = if rng.gen_bool(0.5) {
                Grouping::LeftFirst
            } else {
                Grouping::RightFirst
            };
            SandwichTerm::new(
                random_element(rng, alg),
                random_element(rng, alg),
                grouping,
            )
            .unwrap()
        })
        .collect();
    OperatorExpression::new(terms).unwrap()
}

/// Reshape an element of `matrix_algebra(m)` into its m-by-m matrix.
fn as_square_matrix(a: &AlgebraElement, m: usize) -> Matrix {
    Matrix::from_fn(a.algebra().field(), m, m, |p, r| a.coords()[p * m + r].clone()).unwrap()
}

/// Criterion 1: for random non-central quaternions a, the equation
/// `a x - x a = 1` has no solution.
#[test]
fn criterion_1_quaternion_commutator_insolvable() {
    let h = builtin("quaternions", q()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    let mut checked = 0;
    while checked < 100 {
        let a = random_element(&mut rng, &h);
        if a.coords()[1..].iter().all(FieldValue::is_zero) {
            continue; // central: not in scope for this criterion
        }
        checked += 1;
        let outcome = commutator_unit_solve(&a).unwrap();
        assert!(
            matches!(outcome, SolveOutcome::Inconsistent { .. }),
            "commutator equation unexpectedly solvable for {a}"
        );
    }
    println!("PASS: criterion 1 — quaternion commutator equation inconsistent for 100 random a");
}

/// Criterion 2: `a x - x a = 1` has no solution in the 2x2 matrix algebra
/// over the rationals.
#[test]
fn criterion_2_matrix2_commutator_insolvable() {
    let m2 = matrix_algebra(2, q()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..100 {
        let a = random_element(&mut rng, &m2);
        let outcome = commutator_unit_solve(&a).unwrap();
        assert!(
            matches!(outcome, SolveOutcome::Inconsistent { .. }),
            "commutator equation unexpectedly solvable for {a}"
        );
    }
    println!("PASS: criterion 2 — 2x2 rational matrix commutator equation inconsistent for 100 random a");
}

/// Criterion 3: over GF(2) the situation changes. Brute force over all
/// 16x16 pairs finds solutions of `a x - x a = 1`, and the solver's
/// classification matches the brute-force solution set for every a.
#[test]
fn criterion_3_characteristic_two_extension() {
    let gf2 = Field::gf(2).unwrap();
    let m2 = matrix_algebra(2, gf2).unwrap();
    let unit = m2.unit().unwrap();
    let all: Vec<AlgebraElement> = (0..16)
        .map(|bits: i64| {
            m2.element_from_integers(&[
                bits & 1,
                (bits >> 1) & 1,
                (bits >> 2) & 1,
                (bits >> 3) & 1,
            ])
            .unwrap()
        })
        .collect();
    let mut total_pairs = 0;
    for a in &all {
        let brute: Vec<&AlgebraElement> = all
            .iter()
            .filter(|x| a.mul(x).unwrap().sub(&x.mul(a).unwrap()).unwrap() == unit)
            .collect();
        total_pairs += brute.len();
        match commutator_unit_solve(a).unwrap() {
            SolveOutcome::Unique(x) => {
                assert_eq!(brute, vec![&x]);
            }
            SolveOutcome::Affine { particular, kernel } => {
                // enumerate the affine solution set over GF(2)
                let mut solutions: Vec<AlgebraElement> = Vec::new();
                for mask in 0u32..(1 << kernel.len()) {
                    let mut x = particular.clone();
                    for (bit, v) in kernel.iter().enumerate() {
                        if mask & (1 << bit) != 0 {
                            x = x.add(v).unwrap();
                        }
                    }
                    solutions.push(x);
                }
                assert_eq!(solutions.len(), brute.len());
                for x in &solutions {
                    assert!(brute.contains(&x));
                }
            }
            SolveOutcome::Inconsistent { .. } => {
                assert!(brute.is_empty(), "solver missed solutions for a = {a}");
            }
        }
    }
    assert!(total_pairs > 0, "no (a, x) pair solves the equation over GF(2)");
    println!(
        "PASS: criterion 3 — GF(2) brute force ({total_pairs} solving pairs) agrees with the solver for all 16 elements"
    );
}

/// Criterion 4: in the m-by-m matrix algebra, det(L_a) = (det a)^m
/// exactly, and right invertibility is equivalent to det a != 0.
#[test]
fn criterion_4_right_inverse_criterion_on_matrix_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(204);
    for m in 1..=3usize {
        let alg = matrix_algebra(m, q()).unwrap();
        for round in 0..200 {
            let mut a = random_element(&mut rng, &alg);
            if round % 4 == 0 {
                // force singular matrices into the sample: zero out a row
                let mut coords = a.coords().to_vec();
                let row = rng.gen_range(0..m);
                for c in 0..m {
                    coords[row * m + c] = q().zero();
                }
                a = alg.element(coords).unwrap();
            }
            let det_left = a.left_mul_matrix().det().unwrap();
            let det_a = as_square_matrix(&a, m).det().unwrap();
            let mut power = q().one();
            for _ in 0..m {
                power = power.mul(&det_a).unwrap();
            }
            assert_eq!(det_left, power, "det(L_a) != (det a)^{m}");
            assert_eq!(is_right_invertible(&a), !det_a.is_zero());
        }
    }
    println!("PASS: criterion 4 — det(L_a) = (det a)^m and the right-inverse criterion hold for 200 random a, m in 1..=3");
}

/// Criterion 5: solutions re-substitute exactly across 500 random
/// equations spanning the builtin catalog, in every outcome class.
#[test]
fn criterion_5_trichotomy_soundness() {
    let gf5 = Field::gf(5).unwrap();
    let algebras = [
        builtin("rational", q()).unwrap(),
        builtin("complex", q()).unwrap(),
        builtin("dual", q()).unwrap(),
        builtin("quaternions", q()).unwrap(),
        builtin("octonions", q()).unwrap(),
        matrix_algebra(2, q()).unwrap(),
        matrix_algebra(2, gf5).unwrap(),
        builtin("quaternions", Field::gf(3).unwrap()).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(205);
    let (mut unique, mut affine, mut inconsistent) = (0usize, 0usize, 0usize);
    for round in 0..500 {
        let alg = &algebras[round % algebras.len()];
        let expr = random_expression(&mut rng, alg);
        let b = match round % 3 {
            0 => expr.apply(&random_element(&mut rng, alg)).unwrap(),
            1 => alg.zero(),
            _ => random_element(&mut rng, alg),
        };
        match expr.solve(&b).unwrap() {
            SolveOutcome::Unique(x) => {
                unique += 1;
                assert_eq!(expr.apply(&x).unwrap(), b);
            }
            SolveOutcome::Affine { particular, kernel } => {
                affine += 1;
                assert_eq!(expr.apply(&particular).unwrap(), b);
                assert!(!kernel.is_empty());
                for v in &kernel {
                    assert!(expr.apply(v).unwrap().is_zero());
                }
            }
            SolveOutcome::Inconsistent { rank, augmented_rank } => {
                inconsistent += 1;
                assert_eq!(augmented_rank, rank + 1);
                assert_eq!(expr.matrix().rank(), rank);
            }
        }
    }
    assert!(unique > 0 && affine > 0 && inconsistent > 0);
    println!(
        "PASS: criterion 5 — 500 random equations re-substitute exactly ({unique} unique, {affine} affine, {inconsistent} inconsistent)"
    );
}

/// Criterion 6: tensor-form inversion round-trips on 100 random bijective
/// operators in the quaternions and the 2x2 matrix algebra; being central
/// simple, these algebras never yield a non-representable inverse.
#[test]
fn criterion_6_inverse_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(206);
    for alg in [builtin("quaternions", q()).unwrap(), matrix_algebra(2, q()).unwrap()] {
        let mut found = 0;
        while found < 50 {
            let expr = random_expression(&mut rng, &alg);
            if expr.matrix().det().unwrap().is_zero() {
                continue;
            }
            found += 1;
            let tensor = expr
                .inverse_tensor()
                .expect("bijective operator on a central simple algebra is representable");
            for m in 0..alg.dim() {
                let e = alg.basis_element(m);
                assert_eq!(
                    tensor.apply(&expr.apply(&e).unwrap()).unwrap(),
                    e,
                    "round trip failed on basis vector {m}"
                );
            }
        }
    }
    println!("PASS: criterion 6 — tensor inverse round-trips on 100 random bijective operators");
}

/// Criterion 7: the octonions report nonassociativity, left
/// multiplication by nonzero elements is always invertible, and operator
/// matrices for both groupings match direct multiplication on the basis.
#[test]
fn criterion_7_nonassociative_coverage() {
    let o = builtin("octonions", q()).unwrap();
    assert!(!o.is_associative());
    let mut rng = ChaCha8Rng::seed_from_u64(207);
    let mut checked = 0;
    while checked < 100 {
        let a = random_element(&mut rng, &o);
        if a.is_zero() {
            continue;
        }
        checked += 1;
        assert!(
            !a.left_mul_matrix().det().unwrap().is_zero(),
            "det(L_a) = 0 for nonzero octonion {a}"
        );
    }
    for _ in 0..25 {
        let left = random_element(&mut rng, &o);
        let right = random_element(&mut rng, &o);
        for grouping in [Grouping::LeftFirst, Grouping::RightFirst] {
            let expr =
                OperatorExpression::sandwich(left.clone(), right.clone(), grouping).unwrap();
            let m = expr.matrix();
            for j in 0..8 {
                let direct = expr.apply(&o.basis_element(j)).unwrap();
                for k in 0..8 {
                    assert_eq!(m.entry(k, j), &direct.coords()[k]);
                }
            }
        }
    }
    println!("PASS: criterion 7 — octonion nonassociativity, nonsingular L_a, and both groupings match the oracle");
}

/// Criterion 8: determinants match an independent cofactor oracle,
/// rank-nullity holds, and GF(5) classifications match brute force.
#[test]
fn criterion_8_linear_algebra_kernel() {
    // independent oracle: cofactor expansion along the first row
    fn cofactor_det(m: &Matrix) -> FieldValue {
        let n = m.rows();
        if n == 1 {
            return m.entry(0, 0).clone();
        }
        let mut acc = m.field().zero();
        for c in 0..n {
            let a = m.entry(0, c);
            if a.is_zero() {
                continue;
            }
            let minor = Matrix::from_fn(m.field(), n - 1, n - 1, |i, j| {
                m.entry(i + 1, if j < c { j } else { j + 1 }).clone()
            })
            .unwrap();
            let term = a.mul(&cofactor_det(&minor)).unwrap();
            acc = if c % 2 == 0 {
                acc.add(&term).unwrap()
            } else {
                acc.sub(&term).unwrap()
            };
        }
        acc
    }

    let gf5 = Field::gf(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(208);
    for round in 0..200 {
        let field = if round % 2 == 0 { q() } else { gf5 };
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let mut m = Matrix::from_fn(field, rows, cols, |_, _| random_scalar(&mut rng, field))
            .unwrap();
        if rows > 1 && round % 4 == 0 {
            // make rank deficiency common: duplicate a row
            let src = rng.gen_range(0..rows);
            let dst = (src + 1) % rows;
            m = Matrix::from_fn(field, rows, cols, |r, c| {
                m.entry(if r == dst { src } else { r }, c).clone()
            })
            .unwrap();
        }
        // rank-nullity
        assert_eq!(m.rank() + m.kernel().len(), cols);
        // determinant oracle
        if rows == cols {
            assert_eq!(m.det().unwrap(), cofactor_det(&m));
        }
        // brute-force classification over GF(5)
        if field == gf5 {
            let rhs: Vec<FieldValue> = (0..rows).map(|_| random_scalar(&mut rng, field)).collect();
            let mut brute: Vec<Vec<FieldValue>> = Vec::new();
            for combo in 0..5u64.pow(cols as u32) {
                let mut c = combo;
                let x: Vec<FieldValue> = (0..cols)
                    .map(|_| {
                        let v = field.from_integer((c % 5) as i64);
                        c /= 5;
                        v
                    })
                    .collect();
                if m.apply(&x).unwrap() == rhs {
                    brute.push(x);
                }
            }
            match m.solve(&rhs).unwrap() {
                SolveOutcome::Unique(x) => assert_eq!(brute, vec![x]),
                SolveOutcome::Affine { particular, kernel } => {
                    assert_eq!(brute.len(), 5usize.pow(kernel.len() as u32));
                    assert!(brute.contains(&particular));
                }
                SolveOutcome::Inconsistent { .. } => assert!(brute.is_empty()),
            }
        }
    }
    println!("PASS: criterion 8 — 200 random matrices: Bareiss = cofactor oracle, rank-nullity, GF(5) brute-force agreement");
}

/// Criterion 9: the pinned CLI invocations produce their stated outputs
/// and exit codes.
#[test]
fn criterion_9_cli_end_to_end() {
    const QUAT_FILE: &str = "\
algebra quaternions
field rational
dim 4
sc 0 0 0 1
sc 0 1 1 1
sc 0 2 2 1
sc 0 3 3 1
sc 1 0 1 1
sc 2 0 2 1
sc 3 0 3 1
sc 1 1 0 -1
sc 2 2 0 -1
sc 3 3 0 -1
sc 1 2 3 1
sc 2 1 3 -1
sc 2 3 1 1
sc 3 2 1 -1
sc 3 1 2 1
sc 1 3 2 -1
unit [1, 0, 0, 0]
end
";
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("quat.alg"), QUAT_FILE).unwrap();
    let run = |args: &[&str]| -> Output {
        Command::new(env!("CARGO_BIN_EXE_alg"))
            .args(args)
            .current_dir(dir.path())
            .output()
            .expect("binary runs")
    };

    // i x - x i = 1 in the quaternions: inconsistent, exit 1
    let out = run(&[
        "solve",
        "--algebra",
        "quat.alg",
        "--term",
        "[0,1,0,0]:[1,0,0,0]",
        "--minus-term",
        "[1,0,0,0]:[0,1,0,0]",
        "--rhs",
        "[1,0,0,0]",
    ]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().next(), Some("INCONSISTENT"));
    assert_eq!(out.status.code(), Some(1));

    // octonion info line, byte for byte
    let out = run(&["info", "--algebra", "builtin:octonions"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "dim 8 / associative: no / commutative: no / unit: e0\n"
    );
    assert_eq!(out.status.code(), Some(0));

    // singular matrix unit has no right inverse, exit 1
    let out = run(&[
        "right-inverse",
        "--algebra",
        "builtin:matrix 2",
        "--element",
        "[1,0,0,0]",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "NO-RIGHT-INVERSE\n");
    assert_eq!(out.status.code(), Some(1));

    println!("PASS: criterion 9 — pinned CLI invocations match their stated outputs and exit codes");
}
