use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

use crate::Rational;

/// Coefficient field for polynomials and matrices.
///
/// Exact types (`Rational`) make every equality test meaningful; `f64` works for
/// the arithmetic but equality and kernel computations are then only as good as
/// floating point allows.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

/// Converts a small integer into any scalar.
pub fn from_i64<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("every scalar type represents small integers")
}

/// `C(n, k)` with the convention `C(n, k) = 0` whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient as a rational.
pub fn binomial_q(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rescales a rational vector to coprime integers whose first nonzero entry is positive.
///
/// The zero vector is returned unchanged.
pub fn canonical_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;

    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return ints;
    }
    let negate = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in &mut ints {
        *x = &*x / &gcd;
        if negate {
            *x = -&*x;
        }
    }
    ints
}

/// Same as [`canonical_integer_vector`] but kept in the rational type.
pub fn canonicalize(v: &[Rational]) -> Vec<Rational> {
    canonical_integer_vector(v)
        .into_iter()
        .map(Rational::from_integer)
        .collect()
}

/// Serializes rationals as `"p/q"` strings.
pub fn serialize_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(10, 2), BigInt::from(45));
        assert_eq!(binomial(10, 4), BigInt::from(210));
        assert_eq!(binomial(2, 8), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn canonical_vectors() {
        let v = vec![rat(0), ratio(-2, 15), ratio(-5, 42), ratio(-1, 45)];
        let c: Vec<i64> = canonical_integer_vector(&v)
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        // content 1, first nonzero positive
        assert_eq!(c, vec![0, 84, 75, 14]);
        assert_eq!(canonicalize(&[rat(0), rat(0)]), vec![rat(0), rat(0)]);
        assert_eq!(canonicalize(&[rat(-3), rat(6)]), vec![rat(1), rat(-2)]);
    }
}
