use dzrel_core::linalg::{kernel, same_span, span_rank};
use dzrel_core::matrices::{
    block_check, build_a, build_a_symbolic, build_b, build_d, build_s, build_t, conjugate_m,
    symmetry_product,
};
use dzrel_core::period::{a_vector, ek_basis, ek_dim_formula, q_vector, PeriodPoly};
use dzrel_core::{RatMatrix, RatVector, Rational};
use num_traits::{One, Zero};

fn even(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).step_by(2)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn pow(x: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

// Direct evaluation of both functional equations at a point, no expansion.
fn functional_equations_hold_at(p: &PeriodPoly, x: &Rational) -> bool {
    let k = p.weight();
    let one = Rational::one();
    let antisym = p.eval(x) + pow(x, k - 2) * p.eval(&(&one / x));
    let three_term = p.eval(x)
        + pow(x, k - 2) * p.eval(&(&one - &one / x))
        + pow(&(x - &one), k - 2) * p.eval(&(&one / (&one - x)));
    antisym.is_zero() && three_term.is_zero()
}

#[test]
fn basis_satisfies_functional_equations_at_rational_points() {
    let points = [q(2, 1), q(3, 1), q(-1, 3), q(5, 7), q(-9, 4)];
    for k in even(4, 40) {
        for p in ek_basis(k).unwrap() {
            assert!(p.satisfies_functional_equations(), "k = {k}");
            for x in &points {
                assert!(functional_equations_hold_at(&p, x), "k = {k}, x = {x}");
            }
        }
    }
}

#[test]
fn basis_size_matches_dimension_formula() {
    for k in even(12, 40) {
        assert_eq!(ek_basis(k).unwrap().len(), ek_dim_formula(k).unwrap(), "k = {k}");
    }
}

#[test]
fn non_period_fails_oracle() {
    let p = PeriodPoly::from_i64(12, &[1, -2, 2, -1]).unwrap();
    assert!(!p.satisfies_functional_equations());
    assert!(!functional_equations_hold_at(&p, &q(3, 1)));
    assert!(!functional_equations_hold_at(&p, &q(5, 7)));
}

#[test]
fn a_vector_round_trips() {
    for k in even(12, 40) {
        for p in ek_basis(k).unwrap() {
            let a = a_vector(&p).unwrap();
            assert_eq!(PeriodPoly::from_a_vector(k, &a).unwrap(), p);
        }
    }
}

#[test]
fn period_space_is_kernel_of_a() {
    for k in even(12, 40) {
        let a = build_a(k).unwrap();
        let n = (k - 4) / 2;
        let from_periods: Vec<RatVector> =
            ek_basis(k).unwrap().iter().map(|p| a_vector(p).unwrap()).collect();
        assert!(same_span(&from_periods, &kernel(&a), n), "k = {k}");
    }
}

#[test]
fn q_vector_is_db_times_a() {
    for k in even(12, 40) {
        let db = build_d(k).unwrap().try_mul(&build_b(k).unwrap()).unwrap();
        for p in ek_basis(k).unwrap() {
            let expected = db.mul_vec(&a_vector(&p).unwrap()).unwrap();
            assert_eq!(q_vector(&p).entries, expected, "k = {k}");
        }
    }
}

#[test]
fn symbolic_a_matches_closed_form() {
    for k in even(12, 30) {
        assert_eq!(build_a_symbolic(k).unwrap(), build_a(k).unwrap(), "k = {k}");
    }
}

#[test]
fn symmetry_and_transposed_kernel() {
    for k in even(12, 40) {
        let n = (k - 4) / 2;
        let p = symmetry_product(k).unwrap();
        assert!(p.is_symmetric(), "k = {k}");
        let a = build_a(k).unwrap();
        let db = build_d(k).unwrap().try_mul(&build_b(k).unwrap()).unwrap();
        let mapped: Vec<RatVector> =
            kernel(&a).iter().map(|v| db.mul_vec(v).unwrap()).collect();
        assert!(same_span(&kernel(&a.transpose()), &mapped, n), "k = {k}");
    }
}

#[test]
fn t_columns_are_s_eigenvectors() {
    for k in even(12, 40) {
        let n = (k - 4) / 2;
        let h = (k - 4) / 4;
        let s = build_s(k).unwrap();
        let t = build_t(k).unwrap();
        for c in 0..n {
            let col = t.column(c);
            let image = s.mul_vec(&col).unwrap();
            // v_j and w_0 have eigenvalue -1, w_j has +1
            let sign = if c < n - h { -Rational::one() } else { Rational::one() };
            let scaled: Vec<Rational> = col.iter().map(|x| x * &sign).collect();
            assert_eq!(image, scaled, "k = {k}, column {c}");
        }
        assert_eq!(span_rank(&(0..n).map(|c| t.column(c)).collect::<Vec<_>>(), n), n);
    }
}

#[test]
fn block_structure_all_weights() {
    for k in even(12, 40) {
        assert!(block_check(&conjugate_m(k).unwrap(), k).unwrap(), "k = {k}");
    }
}

#[test]
fn rank_nullity_for_a() {
    for k in even(12, 40) {
        let a = build_a(k).unwrap();
        assert_eq!(a.rank() + kernel(&a).len(), a.cols());
        let _: &RatMatrix = &a;
    }
}
