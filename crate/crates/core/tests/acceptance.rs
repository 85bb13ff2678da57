//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dzrel_core::lie::{ds_check, ds_solve, poisson};
use dzrel_core::linalg::{kernel, same_span, Matrix};
use dzrel_core::matrices::{
    block_check, build_a, build_a_symbolic, build_b, build_d, conjugate_m, symmetry_product,
};
use dzrel_core::numeric::verify_relation;
use dzrel_core::period::{a_vector, ek_basis, ek_dim_formula, q_vector};
use dzrel_core::regularization::{convergent_words, fz_quotient_dim, sh_basis_dim, shuffle_regularize};
use dzrel_core::relations::{gkz_relations, ihara_relations, Relation, RelationKind, RelationTerm};
use dzrel_core::scalar::canonical_integer_vector;
use dzrel_core::{QPoly, RatMatrix, RatVector, Rational, Word};
use num_bigint::BigInt;

const RESIDUAL_DIGITS: u32 = 20;
const NUMERIC_DIGITS: u32 = 30;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn even(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).step_by(2)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rats(v: &[i64]) -> RatVector {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

fn failing<I: Iterator<Item = usize>>(ks: I, check: impl Fn(usize) -> bool) -> Vec<usize> {
    ks.filter(|&k| !check(k)).collect()
}

fn ac1() -> Outcome {
    let a = build_a(12).unwrap();
    let m = conjugate_m(12).unwrap();
    let a_ok = a == RatMatrix::from_i64_rows(&[&[1, 6, 15, 28], &[0, 1, 15, 42], &[0, 0, -14, -42], &[0, -6, -15, -27]]);
    let m_ok = m == RatMatrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[-28, -21, -27, -9], &[-42, -15, -42, -14]]);
    outcome(a_ok && m_ok, format!("A(12) {}, M(12) {}", a_ok, m_ok))
}

fn ac2() -> Outcome {
    let a = build_a(12).unwrap();
    let ker = kernel(&a);
    let ker_t = kernel(&a.transpose());
    let ker_ok = ker == vec![rats(&[1, -3, 3, -1])];
    let expected_t = canonical_integer_vector(&rats(&[0, 168, 150, 28]));
    let ker_t_ok = ker_t.len() == 1 && canonical_integer_vector(&ker_t[0]) == expected_t;
    let shown: Vec<String> = ker_t
        .iter()
        .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    outcome(ker_ok && ker_t_ok, format!("Ker tA(12) = {} (canonical form of 0,168,150,28)", shown.join(";")))
}

fn ac3() -> Outcome {
    let expected = RatMatrix::from_i64_rows(&[
        &[14, 84, 210, 392],
        &[84, 507, 1305, 2478],
        &[210, 1305, 3783, 7644],
        &[392, 2478, 7644, 15890],
    ])
    .scale(&Rational::new(1.into(), 630.into()));
    let golden = symmetry_product(12).unwrap() == expected;
    let bad = failing(even(12, 40), |k| symmetry_product(k).unwrap().is_symmetric());
    outcome(golden && bad.is_empty(), format!("k=12 golden {golden}, asymmetric weights {bad:?}"))
}

fn ac4() -> Outcome {
    let bad = failing(even(12, 30), |k| build_a_symbolic(k).unwrap() == build_a(k).unwrap());
    outcome(bad.is_empty(), format!("mismatching weights {bad:?}"))
}

fn ac5() -> Outcome {
    let bad = failing(even(12, 40), |k| {
        let d = ek_dim_formula(k).unwrap();
        kernel(&build_a(k).unwrap()).len() == d && ek_basis(k).unwrap().len() == d
    });
    outcome(bad.is_empty(), format!("mismatching weights {bad:?}"))
}

fn ac6() -> Outcome {
    let bad = failing(even(12, 40), |k| block_check(&conjugate_m(k).unwrap(), k).unwrap());
    outcome(bad.is_empty(), format!("failing weights {bad:?}"))
}

fn ac7() -> Outcome {
    let bad = failing(even(12, 40), |k| {
        let n = (k - 4) / 2;
        let a = build_a(k).unwrap();
        let db = build_d(k).unwrap().try_mul(&build_b(k).unwrap()).unwrap();
        let mapped: Vec<RatVector> = kernel(&a).iter().map(|v| db.mul_vec(v).unwrap()).collect();
        let spans = same_span(&kernel(&a.transpose()), &mapped, n);
        let per_element = ek_basis(k)
            .unwrap()
            .iter()
            .all(|p| q_vector(p).entries == db.mul_vec(&a_vector(p).unwrap()).unwrap());
        spans && per_element
    });
    outcome(bad.is_empty(), format!("failing weights {bad:?}"))
}

fn ac8() -> Outcome {
    let i12 = ihara_relations(12).unwrap();
    let i16 = ihara_relations(16).unwrap();
    let ihara_ok = i12.len() == 1
        && i12[0].coefficients() == ints(&[1, -3])
        && i16.len() == 1
        && i16[0].coefficients() == ints(&[2, -7, 11]);
    let g = gkz_relations(12).unwrap();
    let order_ok = g.len() == 1
        && g[0].terms.iter().map(|t| (t.r, t.s)).collect::<Vec<_>>() == vec![(9, 3), (7, 5), (5, 7), (3, 9)];
    let golden = canonical_integer_vector(&rats(&[28, 150, 168, 0]));
    let gkz_ok = order_ok && g[0].coefficients() == golden;
    let emitted: Vec<String> = g.iter().flat_map(|r| r.coefficients()).map(|c| c.to_string()).collect();
    outcome(
        ihara_ok && gkz_ok,
        format!("bracket k=12,16 {ihara_ok}; double zeta k=12 emitted ({}) = canonical form of (28,150,168,0)", emitted.join(",")),
    )
}

fn ac9() -> Outcome {
    let rel = Relation {
        weight: 12,
        kind: RelationKind::DoubleZeta,
        terms: [(9, 28), (7, 150), (5, 168), (3, 0)]
            .iter()
            .map(|&(r, c)| RelationTerm { r, s: 12 - r, coeff: BigInt::from(c) })
            .collect(),
        scalar_estimate: None,
    };
    let check = verify_relation(&rel, NUMERIC_DIGITS).unwrap();
    let scalar_ok = check.scalar == Rational::new(5197.into(), 691.into());
    let residual_ok = check.relation_residual.below_decimal(RESIDUAL_DIGITS);
    outcome(
        scalar_ok && residual_ok && check.stable,
        format!(
            "scalar {} (stable {}), residual {:.3e}",
            check.scalar,
            check.stable,
            check.relation_residual.to_f64()
        ),
    )
}

fn ac10() -> Outcome {
    let zero_ok = shuffle_regularize(Word::x()).is_zero() && shuffle_regularize(Word::y()).is_zero();
    let symbols = convergent_words(3);
    let rel_rows: Vec<RatVector> = fz_quotient_dim(3)
        .unwrap()
        .relations
        .iter()
        .map(|r| symbols.iter().map(|w| r.coeff(*w)).collect())
        .collect();
    let euler = QPoly::from_terms([
        ("xyy".parse().unwrap(), Rational::from_integer(1.into())),
        ("xxy".parse().unwrap(), Rational::from_integer((-1).into())),
    ]);
    let mut with_euler = rel_rows.clone();
    with_euler.push(symbols.iter().map(|w| euler.coeff(*w)).collect());
    let euler_ok = same_span(&rel_rows, &with_euler, symbols.len());
    let dims: Vec<usize> = (2..=8).map(|n| sh_basis_dim(n).unwrap()).collect();
    let dims_ok = dims.iter().zip(2..).all(|(&d, n)| d == 1 << (n - 2));
    outcome(
        zero_ok && euler_ok && dims_ok,
        format!("Z(x)=Z(y)=0 {zero_ok}, Euler in span {euler_ok}, SH dims {dims:?}"),
    )
}

// ds_n by dense elimination over all words: Dynkin rows plus stuffle rows.
fn dense_ds_dim(n: usize) -> usize {
    use dzrel_core::lie::{admissible_pairs, left_bracketing};
    use dzrel_core::poly::stuffle;
    let words: Vec<Word> = Word::all_of_length(n).collect();
    let images: Vec<QPoly> = words.iter().map(|w| left_bracketing::<Rational>(*w)).collect();
    let mut rows: Vec<RatVector> = Vec::new();
    for (i, target) in words.iter().enumerate() {
        let mut row: RatVector = images.iter().map(|img| img.coeff(*target)).collect();
        row[i] -= Rational::from_integer((n as i64).into());
        rows.push(row);
    }
    for (u, v) in admissible_pairs(n) {
        let s = stuffle::<Rational>(u, v).unwrap();
        rows.push(words.iter().map(|w| s.coeff(*w)).collect());
    }
    words.len() - Matrix::from_rows(rows, words.len()).unwrap().rank()
}

fn ac11() -> Outcome {
    let dims: Vec<usize> = (3..=7).map(|n| ds_solve(n).unwrap().len()).collect();
    let oracle: Vec<usize> = (3..=7).map(dense_ds_dim).collect();
    let dims_ok = dims == vec![1, 0, 1, 0, 1] && dims == oracle;
    let f3 = &ds_solve(3).unwrap()[0];
    let f5 = &ds_solve(5).unwrap()[0];
    let violations = ds_check(&poisson(f3, f5)).unwrap();
    outcome(
        dims_ok && violations.is_empty(),
        format!("dims 3..7 {dims:?} (oracle {oracle:?}), {{f3,f5}} violations {}", violations.len()),
    )
}

type Criterion = (&'static str, &'static str, Option<Duration>, fn() -> Outcome);

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 11] = [
        ("AC1", "golden matrices A(12), M(12)", Some(Duration::from_secs(1)), ac1),
        ("AC2", "golden kernels at k=12", None, ac2),
        ("AC3", "symmetry product", secs(10), ac3),
        ("AC4", "symbolic A equals closed form, 12..30", secs(60), ac4),
        ("AC5", "dimension sweep, 12..40", None, ac5),
        ("AC6", "block structure, 12..40", None, ac6),
        ("AC7", "duality Ker tA = DB Ker A, 12..40", None, ac7),
        ("AC8", "golden relations", None, ac8),
        ("AC9", "numeric weight-12 relation", secs(10), ac9),
        ("AC10", "regularization", None, ac10),
        ("AC11", "ds closure instance", secs(30), ac11),
    ];
    let mut failures = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let ok = result.ok && in_time;
        if !ok {
            failures += 1;
        }
        let limit_note = limit.map(|l| format!(" / limit {:.0}s", l.as_secs_f64())).unwrap_or_default();
        println!(
            "{id:<5} {} {name}: {} [{:.2}s{limit_note}]",
            if ok { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", 11 - failures, 11);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
