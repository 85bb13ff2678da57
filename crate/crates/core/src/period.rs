//! Restricted even period polynomials and their coefficient vectors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{check_weight, Error, Result};
use crate::linalg::kernel;
use crate::scalar::{binomial, canonical_integer_vector, from_i64};
use crate::{RatMatrix, RatVector, Rational};

/// `P(X) = Σ p_{2i} X^{2i}` for `1 ≤ i ≤ (k−4)/2`, homogenized in weight `k − 2`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct PeriodPoly {
    weight: usize,
    /// `coeffs[i−1] = p_{2i}`
    #[serde(serialize_with = "crate::scalar::serialize_rationals")]
    coeffs: Vec<Rational>,
}

fn check_even_weight(k: usize, min: usize, max: usize, expected: &'static str) -> Result<()> {
    check_weight(k as i64, k.is_multiple_of(2) && (min..=max).contains(&k), expected)
}

/// Number of free coefficients `(k−4)/2`.
pub fn coefficient_count(k: usize) -> usize {
    (k - 4) / 2
}

impl PeriodPoly {
    pub fn new(weight: usize, coeffs: Vec<Rational>) -> Result<Self> {
        check_even_weight(weight, 4, usize::MAX, "even k ≥ 4")?;
        let n = coefficient_count(weight);
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "weight {weight} needs {n} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(PeriodPoly { weight, coeffs })
    }

    pub fn from_i64(weight: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(weight, coeffs.iter().map(|&c| from_i64(c)).collect())
    }

    /// Rebuilds `P` from `(a_1, …, a_{(k−4)/2})`.
    pub fn from_a_vector(weight: usize, a: &[Rational]) -> Result<Self> {
        let p = Self::new(weight, a.to_vec())?;
        if !p.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        Ok(p)
    }

    pub fn zero(weight: usize) -> Result<Self> {
        check_even_weight(weight, 4, usize::MAX, "even k ≥ 4")?;
        Ok(PeriodPoly { weight, coeffs: vec![Rational::zero(); coefficient_count(weight)] })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^e`; zero outside the even range `2..=k−4`.
    pub fn coeff(&self, e: usize) -> Rational {
        if e % 2 == 1 || e < 2 || e > self.weight - 4 {
            return Rational::zero();
        }
        self.coeffs[e / 2 - 1].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `p_{2i} + p_{k−2−2i} = 0` for every `i`.
    pub fn is_antisymmetric(&self) -> bool {
        let k = self.weight;
        (1..=coefficient_count(k)).all(|i| (self.coeff(2 * i) + self.coeff(k - 2 - 2 * i)).is_zero())
    }

    /// Dense coefficients of `P(X) + X^{k−2} P(1/X)`, degrees `0..=k−2`.
    pub fn antisymmetry_residual(&self) -> Vec<Rational> {
        let k = self.weight;
        (0..=k - 2).map(|m| self.coeff(m) + self.coeff(k - 2 - m)).collect()
    }

    /// Dense coefficients of `P(X) + X^{k−2}P(1 − 1/X) + (X−1)^{k−2}P(1/(1−X))`,
    /// degrees `0..=k−2`, with denominators cleared before expansion.
    pub fn three_term_residual(&self) -> Vec<Rational> {
        let k = self.weight;
        let mut out = vec![Rational::zero(); k - 1];
        for i in 1..=coefficient_count(k) {
            let p = &self.coeffs[i - 1];
            if p.is_zero() {
                continue;
            }
            for (m, c) in three_term_column(k, i).into_iter().enumerate() {
                if !c.is_zero() {
                    out[m] += p * Rational::from(c);
                }
            }
        }
        out
    }

    pub fn satisfies_functional_equations(&self) -> bool {
        self.antisymmetry_residual().iter().all(Zero::is_zero)
            && self.three_term_residual().iter().all(Zero::is_zero)
    }

    /// Evaluates the inhomogeneous polynomial at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let x2 = x * x;
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc + c) * &x2;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PeriodPoly { weight: self.weight, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }
}

/// Image of `X^{2i}` under `P ↦ P(X) + X^{k−2}P(1−1/X) + (X−1)^{k−2}P(1/(1−X))`:
/// `X^{2i} + (X−1)^{2i} X^{k−2−2i} + (X−1)^{k−2−2i}`.
fn three_term_column(k: usize, i: usize) -> Vec<BigInt> {
    let (k, e) = (k as i64, 2 * i as i64);
    let sign = |n: i64| if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
    (0..=k - 2)
        .map(|m| {
            let mut c = BigInt::zero();
            if m == e {
                c += 1;
            }
            let t = m - (k - 2 - e);
            if t >= 0 {
                c += binomial(e, t) * sign(e - t);
            }
            if m <= k - 2 - e {
                c += binomial(k - 2 - e, m) * sign(k - 2 - e - m);
            }
            c
        })
        .collect()
}

/// Linear system whose kernel is `E_k`: antisymmetry rows, then the three-term rows.
pub fn ek_constraints(k: usize) -> Result<RatMatrix> {
    check_even_weight(k, 4, 60, "even 4 ≤ k ≤ 60")?;
    let n = coefficient_count(k);
    let mut rows: Vec<RatVector> = Vec::new();
    for m in 0..=k - 2 {
        let mut row = vec![Rational::zero(); n];
        for (i, slot) in row.iter_mut().enumerate() {
            let e = 2 * (i + 1);
            if e == m {
                *slot += Rational::from_integer(1.into());
            }
            if e == k - 2 - m {
                *slot += Rational::from_integer(1.into());
            }
        }
        rows.push(row);
    }
    let columns: Vec<Vec<BigInt>> = (1..=n).map(|i| three_term_column(k, i)).collect();
    for m in 0..=k - 2 {
        rows.push(columns.iter().map(|col| Rational::from(col[m].clone())).collect());
    }
    RatMatrix::from_rows(rows, n)
}

/// Basis of `E_k`, each element with coprime integer coefficients and
/// positive lowest-degree coefficient.
pub fn ek_basis(k: usize) -> Result<Vec<PeriodPoly>> {
    let system = ek_constraints(k)?;
    kernel(&system).into_iter().map(|v| PeriodPoly::new(k, v)).collect()
}

/// `⌊(k−4)/4⌋ − ⌊(k−2)/6⌋`.
pub fn ek_dim_formula(k: usize) -> Result<usize> {
    check_even_weight(k, 4, usize::MAX, "even k ≥ 4")?;
    Ok((k - 4) / 4 - (k - 2) / 6)
}

/// `(a_1, …, a_{(k−4)/2})` with `P(X,Y) = Σ a_i (X^{2i}Y^{k−2−2i} − X^{k−2−2i}Y^{2i})`
/// over the lower half; the upper half is `a_i = −a_{(k−2−2i)/2}`.
pub fn a_vector(p: &PeriodPoly) -> Result<RatVector> {
    if !p.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let n = coefficient_count(p.weight);
    let h = (p.weight - 4) / 4;
    let mut a = vec![Rational::zero(); n];
    for i in 1..=h {
        a[i - 1] = p.coeff(2 * i);
    }
    for i in h + 1..=n {
        let mirror = (p.weight - 2 - 2 * i) / 2;
        a[i - 1] = if mirror == i { Rational::zero() } else { -a[mirror - 1].clone() };
    }
    Ok(a)
}

/// `q_{2j+1,k−2j−1}` for `j = 1, …, (k−4)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QVector {
    pub weight: usize,
    #[serde(serialize_with = "crate::scalar::serialize_rationals")]
    pub entries: Vec<Rational>,
}

impl QVector {
    /// First arguments `r = 3, 5, …, k−3` paired with their entries.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let k = self.weight;
        self.entries.iter().enumerate().map(move |(j, q)| (2 * j + 3, k - 2 * j - 3, q))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn canonical_integers(&self) -> Vec<BigInt> {
        canonical_integer_vector(&self.entries)
    }
}

/// Coefficients of `X^m Y^{k−2−m}` in `P(X+Y, Y)`, `m = 0..=k−2`.
pub fn shifted_coefficients(p: &PeriodPoly) -> Vec<Rational> {
    let k = p.weight as i64;
    (0..=k - 2)
        .map(|m| {
            p.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| c * Rational::from(binomial(2 * (i as i64 + 1), m)))
                .sum()
        })
        .collect()
}

/// Reads `q_{r,k−r}` off `P(X+Y, Y) = Σ C(k−2, r−1) q_{r,k−r} X^{r−1} Y^{k−r−1}` at odd `r`.
pub fn q_vector(p: &PeriodPoly) -> QVector {
    let k = p.weight;
    let shifted = shifted_coefficients(p);
    let entries = (1..=coefficient_count(k))
        .map(|j| &shifted[2 * j] / Rational::from(binomial(k as i64 - 2, 2 * j as i64)))
        .collect();
    QVector { weight: k, entries }
}

impl fmt::Display for PeriodPoly {
    /// Pairs `p_{2i}(X^{2i} - X^{k-2-2i})` from the lowest degree up; falls back
    /// to a plain monomial list when `P` is not antisymmetric.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.weight;
        let terms: Vec<(Rational, String)> = if self.is_antisymmetric() {
            (1..=(k - 4) / 4)
                .map(|i| (self.coeff(2 * i), format!("(X^{} - X^{})", 2 * i, k - 2 - 2 * i)))
                .collect()
        } else {
            (1..=coefficient_count(k)).map(|i| (self.coeff(2 * i), format!("X^{}", 2 * i))).collect()
        };
        let mut first = true;
        for (c, body) in terms.into_iter().filter(|(c, _)| !c.is_zero()) {
            let mag = c.abs();
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            if mag == Rational::from_integer(1.into()) {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign}{mag}{body}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PeriodPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodPoly[k={}: {}]", self.weight, self)
    }
}
