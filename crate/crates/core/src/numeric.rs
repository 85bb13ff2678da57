//! High-precision values of `ζ(k)` and `ζ(r, s)`, and numerical checks of
//! double zeta relations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{check_weight, Error, Result};
use crate::relations::{Relation, RelationKind};
use crate::words::{word_of_composition, Composition, Word};
use crate::Rational;

/// Extra decimal digits carried by every summation.
pub const GUARD_DIGITS: u32 = 10;
pub const MAX_SINGLE_DIGITS: u32 = 100;
pub const MAX_DOUBLE_DIGITS: u32 = 50;
/// Above this many terms the direct series gives way to the split evaluation.
pub const DIRECT_TERM_LIMIT: u64 = 200_000;
/// Hard ceiling for an explicitly requested direct summation.
pub const DIRECT_TERM_CEILING: u64 = 50_000_000;

/// Binary fixed-point number `mant / 2^bits`.
#[derive(Clone, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    bits: u32,
}

/// Working precision in bits for a target number of decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits + GUARD_DIGITS) * 3322 / 1000 + 33
}

impl BigFloat {
    pub fn zero(bits: u32) -> Self {
        BigFloat { mant: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        BigFloat { mant: BigInt::one() << bits, bits }
    }

    pub fn from_integer(n: &BigInt, bits: u32) -> Self {
        BigFloat { mant: n << bits, bits }
    }

    /// Nearest representable value, ties away from zero.
    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let num = r.numer() << (bits + 1);
        let q = num / r.denom();
        let mant = if q.is_negative() { (q - 1) / 2 } else { (q + 1) / 2 };
        BigFloat { mant, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    /// Same value at a different precision (truncating when bits decrease).
    pub fn with_bits(&self, bits: u32) -> Self {
        let mant = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mant.clone(),
            Ordering::Greater => &self.mant << (bits - self.bits),
            Ordering::Less => &self.mant >> (self.bits - bits),
        };
        BigFloat { mant, bits }
    }

    fn aligned(a: &Self, b: &Self) -> (BigInt, BigInt, u32) {
        let bits = a.bits.min(b.bits);
        (a.with_bits(bits).mant, b.with_bits(bits).mant, bits)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), bits: self.bits }
    }

    pub fn div_int(&self, d: &BigInt) -> Self {
        BigFloat { mant: &self.mant / d, bits: self.bits }
    }

    pub fn mul_int(&self, m: &BigInt) -> Self {
        BigFloat { mant: &self.mant * m, bits: self.bits }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        BigFloat { mant: &self.mant * r.numer() / r.denom(), bits: self.bits }
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.mant.to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(-(self.bits as i32))
    }

    /// Rounded decimal expansion with `digits` digits after the point.
    pub fn to_decimal(&self, digits: u32) -> String {
        let half: BigInt = (BigInt::one() << self.bits) / 2;
        let scaled: BigInt = (self.mant.abs() * BigInt::from(10u32).pow(digits) + half) >> self.bits;
        let s = format!("{:0>width$}", scaled.to_string(), width = digits as usize + 1);
        let (int, frac) = s.split_at(s.len() - digits as usize);
        let sign = if self.is_negative() && !scaled.is_zero() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// `true` iff `|self| < 10^{-digits}`.
    pub fn below_decimal(&self, digits: u32) -> bool {
        let bound = BigInt::from(10u32).pow(digits);
        (self.mant.abs() * bound) < (BigInt::one() << self.bits)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.bits.saturating_sub(33)) * 1000 / 3322) as usize);
        f.write_str(&self.to_decimal(digits as u32))
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({:.30})", self)
    }
}

impl Serialize for BigFloat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = Self::aligned(self, other);
        Some(a.cmp(&b))
    }
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        let (a, b, bits) = BigFloat::aligned(self, rhs);
        BigFloat { mant: a + b, bits }
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        let (a, b, bits) = BigFloat::aligned(self, rhs);
        BigFloat { mant: a - b, bits }
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        let (a, b, bits) = BigFloat::aligned(self, rhs);
        BigFloat { mant: (a * b) >> bits, bits }
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    /// Panics on division by zero.
    fn div(self, rhs: &BigFloat) -> BigFloat {
        let (a, b, bits) = BigFloat::aligned(self, rhs);
        BigFloat { mant: (a << bits) / b, bits }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -&self.mant, bits: self.bits }
    }
}

/// How a value is summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Direct when the cutoff is at most [`DIRECT_TERM_LIMIT`], split otherwise.
    Auto,
    /// The defining series, truncated by its integral tail bound.
    Direct,
    /// Iterated integral cut at 1/2, each half a rapidly convergent nested series.
    Split,
}

fn check_digits(digits: u32, max: u32) -> Result<()> {
    if digits > max {
        return Err(Error::PrecisionOutOfRange { digits, max });
    }
    Ok(())
}

/// Smallest `N` with `N^{1−k}/(k−1) < 10^{−(digits+5)}`.
pub fn single_cutoff(k: u32, digits: u32) -> f64 {
    let km1 = (k - 1) as f64;
    let log_n = (digits as f64 + 5.0 - km1.log10()) / km1;
    10f64.powf(log_n).ceil().max(1.0)
}

/// Smallest `M` with `tail(M) < 10^{−(digits+5)}`, where the tail of the outer sum
/// is at most `ζ(s) M^{1−r}/(r−1)` for `s ≥ 2` and `(ln M + 1) M^{1−r}/(r−1)` for `s = 1`.
pub fn double_cutoff(r: u32, s: u32, digits: u32) -> f64 {
    let target = -(digits as f64 + 5.0);
    let rm1 = (r - 1) as f64;
    let log_tail = |m: f64| {
        let inner = if s >= 2 { 1.645f64 } else { m.ln() + 1.0 };
        inner.log10() + (1.0 - r as f64) * m.log10() - rm1.log10()
    };
    let mut m = 10f64.powf((-target + 1.645f64.log10() - rm1.log10()) / rm1).ceil().max(2.0);
    while log_tail(m) >= target {
        m *= 1.25;
    }
    m.ceil()
}

fn checked_cutoff(n: f64) -> Result<u64> {
    if n > DIRECT_TERM_CEILING as f64 {
        return Err(Error::CutoffTooLarge { terms: n.min(u64::MAX as f64) as u64 });
    }
    Ok(n as u64)
}

fn direct_single(k: u32, digits: u32) -> Result<BigFloat> {
    let n_max = checked_cutoff(single_cutoff(k, digits))?;
    let bits = bits_for_digits(digits);
    let one = BigInt::one() << bits;
    let mut acc = BigInt::zero();
    for n in 1..=n_max {
        acc += &one / BigInt::from(n).pow(k);
    }
    Ok(BigFloat { mant: acc, bits })
}

fn direct_double(r: u32, s: u32, digits: u32) -> Result<BigFloat> {
    let m_max = checked_cutoff(double_cutoff(r, s, digits))?;
    let bits = bits_for_digits(digits);
    let one = BigInt::one() << bits;
    // inner = Σ_{n<m} 1/n^s
    let mut inner = BigInt::zero();
    let mut acc = BigInt::zero();
    for m in 1..=m_max {
        let mb = BigInt::from(m);
        acc += &inner / mb.pow(r);
        inner += &one / mb.pow(s);
    }
    Ok(BigFloat { mant: acc, bits })
}

/// Number of terms making the nested series at 1/2 of depth `depth` accurate
/// to `2^{−bits}`: the tail past `N` is below `2^{1−N} (2 + ln N)^{depth−1}`.
fn half_cutoff(depth: usize, bits: u32) -> u64 {
    let mut n = bits as f64 + 2.0;
    for _ in 0..50 {
        let next = bits as f64 + 1.0 + (depth.saturating_sub(1)) as f64 * (2.0 + n.ln()).log2();
        if (next - n).abs() < 0.5 {
            break;
        }
        n = next;
    }
    n.ceil() as u64 + 1
}

/// `Σ_{n_1 > … > n_d ≥ 1} 2^{−n_1} / (n_1^{s_1} ⋯ n_d^{s_d})` for the blocks of
/// `w = x^{s_1−1} y ⋯ x^{s_d−1} y`; the empty word gives 1.
fn at_half(w: Word, bits: u32) -> BigFloat {
    let blocks = w.y_blocks().expect("words passed here end in y");
    let one = BigInt::one() << bits;
    if blocks.is_empty() {
        return BigFloat { mant: one, bits };
    }
    let d = blocks.len();
    // level[j] = Σ_{m ≤ n} level[j+1](m−1) / m^{s_{j+1}}, level[d] = 1; level[0] also carries 2^{−m}
    let mut level = vec![BigInt::zero(); d];
    for n in 1..=half_cutoff(d, bits) {
        let nb = BigInt::from(n);
        for j in 0..d {
            let below = if j + 1 < d { &level[j + 1] } else { &one };
            if below.is_zero() {
                continue;
            }
            let mut term = below / nb.pow(blocks[j]);
            if j == 0 {
                term >>= n;
            }
            level[j] += term;
        }
    }
    BigFloat { mant: level.swap_remove(0), bits }
}

/// `ζ(w) = Σ_i I(swap(reverse(w[..i]))) · I(w[i..])` where `I(v)` is the
/// iterated integral of `v` from 0 to 1/2.
fn split_word(w: Word, digits: u32) -> BigFloat {
    // one extra guard word absorbs the n + 1 products
    let bits = bits_for_digits(digits) + 32;
    let mut acc = BigFloat::zero(bits);
    for i in 0..=w.len() {
        let head = w.slice(0, i).reversed().swapped();
        let tail = w.slice(i, w.len());
        acc = &acc + &(&at_half(head, bits) * &at_half(tail, bits));
    }
    acc.with_bits(bits_for_digits(digits))
}

pub fn zeta_single(k: u32, digits: u32) -> Result<BigFloat> {
    zeta_single_with(k, digits, Method::Auto)
}

/// `ζ(k) = Σ_{n>0} n^{−k}` with absolute error below `10^{−digits}`.
pub fn zeta_single_with(k: u32, digits: u32, method: Method) -> Result<BigFloat> {
    check_weight(k as i64, k >= 2, "k ≥ 2")?;
    check_digits(digits, MAX_SINGLE_DIGITS)?;
    single_unchecked(k, digits, method)
}

fn single_unchecked(k: u32, digits: u32, method: Method) -> Result<BigFloat> {
    let direct = match method {
        Method::Auto => single_cutoff(k, digits) <= DIRECT_TERM_LIMIT as f64,
        Method::Direct => true,
        Method::Split => false,
    };
    if direct {
        direct_single(k, digits)
    } else {
        Ok(split_word(word_of_composition(&Composition::new(vec![k])?), digits))
    }
}

pub fn zeta_double(r: u32, s: u32, digits: u32) -> Result<BigFloat> {
    zeta_double_with(r, s, digits, Method::Auto)
}

/// `ζ(r, s) = Σ_{m>n>0} m^{−r} n^{−s}` with absolute error below `10^{−digits}`.
pub fn zeta_double_with(r: u32, s: u32, digits: u32, method: Method) -> Result<BigFloat> {
    check_weight(r as i64, r >= 2, "r ≥ 2")?;
    check_weight(s as i64, s >= 1, "s ≥ 1")?;
    check_digits(digits, MAX_DOUBLE_DIGITS)?;
    double_unchecked(r, s, digits, method)
}

fn double_unchecked(r: u32, s: u32, digits: u32, method: Method) -> Result<BigFloat> {
    let direct = match method {
        Method::Auto => double_cutoff(r, s, digits) <= DIRECT_TERM_LIMIT as f64,
        Method::Direct => true,
        Method::Split => false,
    };
    if direct {
        direct_double(r, s, digits)
    } else {
        Ok(split_word(word_of_composition(&Composition::new(vec![r, s])?), digits))
    }
}

/// Last continued-fraction convergent of `x` with denominator at most `bound`.
pub fn rational_reconstruction(x: &Rational, bound: &BigInt) -> Rational {
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    let mut best = Rational::from(x.floor().to_integer());
    while !den.is_zero() {
        let (a, rem) = num.div_mod_floor(&den);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if &q2 > bound {
            break;
        }
        best = Rational::new(p2.clone(), q2.clone());
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        (num, den) = (den, rem);
    }
    best
}

pub const RECONSTRUCTION_BOUND: u64 = 1_000_000;

/// Outcome of evaluating a double zeta relation against `ζ(k)`.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub digits: u32,
    /// `Σ c_{r,s} ζ(r, s)`
    pub combination: BigFloat,
    pub zeta_k: BigFloat,
    /// `combination / ζ(k)`
    pub ratio: BigFloat,
    #[serde(serialize_with = "crate::relations::serialize_display")]
    pub scalar: Rational,
    /// `|ratio − scalar|`
    pub scalar_residual: BigFloat,
    /// `|combination − scalar · ζ(k)|`
    pub relation_residual: BigFloat,
    /// Same reconstruction at `digits + 10`.
    pub stable: bool,
}

fn combination(rel: &Relation, digits: u32) -> Result<(BigFloat, BigFloat)> {
    let bits = bits_for_digits(digits);
    let mut acc = BigFloat::zero(bits);
    for t in rel.terms.iter().filter(|t| !t.coeff.is_zero()) {
        let z = double_unchecked(t.r as u32, t.s as u32, digits, Method::Auto)?;
        acc = &acc + &z.mul_int(&t.coeff);
    }
    Ok((acc, single_unchecked(rel.weight as u32, digits, Method::Auto)?))
}

/// Evaluates `Σ c ζ(r, s) / ζ(k)` and recovers it as a rational with
/// denominator at most 10⁶, repeating at `digits + 10` for stability.
pub fn verify_relation(rel: &Relation, digits: u32) -> Result<RelationCheck> {
    if rel.kind != RelationKind::DoubleZeta {
        return Err(Error::WrongRelationKind);
    }
    check_digits(digits, MAX_DOUBLE_DIGITS)?;
    let bound = BigInt::from(RECONSTRUCTION_BOUND);
    let (comb, zk) = combination(rel, digits)?;
    let ratio = &comb / &zk;
    let scalar = rational_reconstruction(&ratio.to_rational(), &bound);
    let bits = ratio.bits();
    let scalar_f = BigFloat::from_rational(&scalar, bits);
    let scalar_residual = (&ratio - &scalar_f).abs();
    let relation_residual = (&comb - &zk.mul_rational(&scalar)).abs();
    let (comb2, zk2) = combination(rel, digits + GUARD_DIGITS)?;
    let scalar2 = rational_reconstruction(&(&comb2 / &zk2).to_rational(), &bound);
    Ok(RelationCheck {
        digits,
        combination: comb,
        zeta_k: zk,
        ratio,
        stable: scalar2 == scalar,
        scalar,
        scalar_residual,
        relation_residual,
    })
}

/// Copies the reconstructed scalar into the relation.
pub fn with_scalar_estimate(rel: &Relation, check: &RelationCheck) -> Relation {
    Relation { scalar_estimate: Some(check.scalar.clone()), ..rel.clone() }
}

impl BigFloat {
    /// Sign as `-1`, `0` or `1`.
    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
}
