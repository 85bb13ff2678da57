use dzrel_core::numeric::{
    verify_relation, zeta_double, zeta_double_with, zeta_single, zeta_single_with, BigFloat, Method,
};
use dzrel_core::relations::{gkz_relations, Relation, RelationKind, RelationTerm};
use dzrel_core::{Error, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

// π to `bits` fractional bits by Machin's formula on plain integers.
fn machin_pi(bits: u32) -> BigInt {
    let one = BigInt::one() << (bits + 20);
    let arctan_inv = |x: u64| {
        let x2 = BigInt::from(x * x);
        let mut power = &one / BigInt::from(x);
        let mut sum = BigInt::zero();
        let mut n = 0u64;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * n + 1);
            if n.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &x2;
            n += 1;
        }
        sum
    };
    (BigInt::from(16) * arctan_inv(5) - BigInt::from(4) * arctan_inv(239)) >> 20
}

fn pi_power_times(bits: u32, e: u32, num: i64, den: i64) -> BigFloat {
    let wide = bits + 64;
    let pi = machin_pi(wide);
    let mut acc = BigInt::one() << wide;
    for _ in 0..e {
        acc = (acc * &pi) >> wide;
    }
    let v = acc * BigInt::from(num) / BigInt::from(den);
    BigFloat::from_rational(&Rational::new(v, BigInt::one() << wide), bits)
}

fn close(a: &BigFloat, b: &BigFloat, digits: u32) -> bool {
    (a - b).abs().below_decimal(digits)
}

#[test]
fn zeta_two_is_pi_squared_over_six() {
    for digits in [30, 100] {
        let z = zeta_single(2, digits).unwrap();
        assert!(close(&z, &pi_power_times(z.bits(), 2, 1, 6), digits), "{digits} digits");
    }
    assert!(zeta_single(2, 30).unwrap().to_decimal(20).starts_with("1.64493406684822643647"));
}

#[test]
fn zeta_twelve_matches_euler_formula() {
    for method in [Method::Auto, Method::Direct, Method::Split] {
        let z = zeta_single_with(12, 30, method).unwrap();
        assert!(close(&z, &pi_power_times(z.bits(), 12, 691, 638_512_875), 30), "{method:?}");
    }
    let z = zeta_single(12, 100).unwrap();
    assert!(close(&z, &pi_power_times(z.bits(), 12, 691, 638_512_875), 100));
}

#[test]
fn euler_relation_numerically() {
    let a = zeta_double(2, 1, 20).unwrap();
    let b = zeta_single(3, 20).unwrap();
    assert!(close(&a, &b, 20));
    let a = zeta_double_with(2, 1, 40, Method::Split).unwrap();
    let b = zeta_single(3, 40).unwrap();
    assert!(close(&a, &b, 40));
}

#[test]
fn stuffle_identity_numerically() {
    for r in 2..=10u32 {
        for s in 2..=(12 - r) {
            let d = 20;
            let lhs = &zeta_single(r, d).unwrap() * &zeta_single(s, d).unwrap();
            let rhs = &(&zeta_double(r, s, d).unwrap() + &zeta_double(s, r, d).unwrap())
                + &zeta_single(r + s, d).unwrap();
            assert!(close(&lhs, &rhs, d - 1), "({r},{s})");
        }
    }
}

#[test]
fn refinement_is_monotone() {
    for (r, s) in [(9, 3), (5, 7), (2, 1)] {
        let lo = zeta_double(r, s, 25).unwrap();
        let hi = zeta_double(r, s, 45).unwrap();
        assert!(close(&lo, &hi, 25), "({r},{s})");
    }
    assert!(zeta_double(9, 3, 30).unwrap() > BigFloat::zero(100));
}

fn relation(k: usize, coeffs: &[(usize, i64)]) -> Relation {
    Relation {
        weight: k,
        kind: RelationKind::DoubleZeta,
        terms: coeffs
            .iter()
            .map(|&(r, c)| RelationTerm { r, s: k - r, coeff: BigInt::from(c) })
            .collect(),
        scalar_estimate: None,
    }
}

#[test]
fn weight_twelve_scalar() {
    let literal = relation(12, &[(9, 28), (7, 150), (5, 168), (3, 0)]);
    let check = verify_relation(&literal, 30).unwrap();
    assert_eq!(check.scalar, Rational::new(5197.into(), 691.into()));
    assert!(check.stable);
    assert!(check.relation_residual.below_decimal(25));
    assert!(check.scalar_residual.below_decimal(25));

    let emitted = &gkz_relations(12).unwrap()[0];
    let check = verify_relation(emitted, 30).unwrap();
    assert_eq!(check.scalar, Rational::new(5197.into(), 1382.into()));
}

#[test]
fn weight_sixteen_scalar_is_stable() {
    let rel = &gkz_relations(16).unwrap()[0];
    let c30 = verify_relation(rel, 30).unwrap();
    let c40 = verify_relation(rel, 40).unwrap();
    assert_eq!(c30.scalar, c40.scalar);
    assert!(c30.stable);
    assert!(c30.scalar_residual.below_decimal(15));
    // recorded on first run
    assert_eq!(c30.scalar, Rational::new(78967.into(), 3617.into()));
}

#[test]
fn zero_relation_and_wrong_kind() {
    let zero = relation(12, &[(9, 0), (7, 0), (5, 0), (3, 0)]);
    let c = verify_relation(&zero, 30).unwrap();
    assert!(c.scalar.is_zero());
    assert!(c.relation_residual.is_zero());
    let mut bracket = zero.clone();
    bracket.kind = RelationKind::Bracket;
    assert_eq!(verify_relation(&bracket, 30).unwrap_err(), Error::WrongRelationKind);
}
