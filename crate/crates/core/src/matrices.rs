//! The weight-`k` matrices relating period polynomials to double zeta relations.
//!
//! All matrices are `n × n` with `n = (k−4)/2`; indices in the formulas below
//! are 1-based.

use num_traits::{One, Zero};

use crate::error::{check_weight, Result};
use crate::lie::{ad_x_pow, odot};
use crate::scalar::{binomial_q, from_i64};
use crate::words::{Letter, Word};
use crate::{QPoly, RatMatrix, Rational};

fn check_k(k: usize, max: usize, expected: &'static str) -> Result<usize> {
    check_weight(k as i64, k.is_multiple_of(2) && (12..=max).contains(&k), expected)?;
    Ok((k - 4) / 2)
}

fn at_least_twelve(k: usize) -> Result<usize> {
    check_k(k, usize::MAX, "even k ≥ 12")
}

/// `A_ij = C(2j, 2i) − C(2j, k−2−2i) + δ(i + j = (k−2)/2)`.
pub fn build_a(k: usize) -> Result<RatMatrix> {
    let n = at_least_twelve(k)?;
    let k = k as i64;
    Ok(RatMatrix::from_fn(n, n, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let delta = if i + j == (k - 2) / 2 { Rational::one() } else { Rational::zero() };
        binomial_q(2 * j, 2 * i) - binomial_q(2 * j, k - 2 - 2 * i) + delta
    }))
}

/// `x^a y x^b y`
fn depth_two_word(a: usize, b: usize) -> Word {
    Word::x_pow(a).push(Letter::Y).concat(Word::x_pow(b)).push(Letter::Y)
}

/// `A_ij` read off `f_{2j+1} ⊙ f_{k−2j−1}` with `f_m = ad(x)^{m−1}(y)` as the
/// coefficient of `x^{2i} y x^{k−2i−2} y`.
pub fn build_a_symbolic(k: usize) -> Result<RatMatrix> {
    let n = check_k(k, 30, "even 12 ≤ k ≤ 30")?;
    let columns: Vec<QPoly> = (1..=n)
        .map(|j| odot(&ad_x_pow::<Rational>(2 * j), &ad_x_pow::<Rational>(k - 2 - 2 * j)))
        .collect();
    Ok(RatMatrix::from_fn(n, n, |r, c| {
        let i = r + 1;
        columns[c].coeff(depth_two_word(2 * i, k - 2 * i - 2))
    }))
}

/// `−1` along the antidiagonal.
pub fn build_s(k: usize) -> Result<RatMatrix> {
    let n = at_least_twelve(k)?;
    Ok(RatMatrix::from_fn(n, n, |i, j| if i + j == n - 1 { -Rational::one() } else { Rational::zero() }))
}

/// Columns `v_1, …, v_h`, then `w_0` when `k ≡ 2 (mod 4)`, then `w_1, …, w_h`,
/// with `h = ⌊(k−4)/4⌋`, `v_j = e_j + e_{n+1−j}`, `w_j = −e_j + e_{n+1−j}` and
/// `w_0 = e_{(k−2)/4}`.
pub fn build_t(k: usize) -> Result<RatMatrix> {
    let n = at_least_twelve(k)?;
    let h = (k - 4) / 4;
    let e = |i: usize, sign: i64| {
        let mut v = vec![Rational::zero(); n];
        v[i - 1] = from_i64(sign);
        v
    };
    let plus = |a: Vec<Rational>, b: Vec<Rational>| a.into_iter().zip(b).map(|(x, y)| x + y).collect();
    let mut cols: Vec<Vec<Rational>> = (1..=h).map(|j| plus(e(j, 1), e(n + 1 - j, 1))).collect();
    if k % 4 == 2 {
        cols.push(e((k - 2) / 4, 1));
    }
    cols.extend((1..=h).map(|j| plus(e(j, -1), e(n + 1 - j, 1))));
    RatMatrix::from_columns(&cols, n)
}

/// `D = diag(1 / C(k−2, 2i))`.
pub fn build_d(k: usize) -> Result<RatMatrix> {
    let n = at_least_twelve(k)?;
    Ok(RatMatrix::from_fn(n, n, |r, c| {
        if r == c {
            binomial_q(k as i64 - 2, 2 * (r as i64 + 1)).recip()
        } else {
            Rational::zero()
        }
    }))
}

/// `B_ij = C(2j, 2i)`.
pub fn build_b(k: usize) -> Result<RatMatrix> {
    let n = at_least_twelve(k)?;
    Ok(RatMatrix::from_fn(n, n, |r, c| binomial_q(2 * (c as i64 + 1), 2 * (r as i64 + 1))))
}

/// `M = T⁻¹ A T`.
pub fn conjugate_m(k: usize) -> Result<RatMatrix> {
    let a = build_a(k)?;
    let t = build_t(k)?;
    t.inverse()?.try_mul(&a)?.try_mul(&t)
}

/// Sizes `(p, n − p)` of the identity and zero blocks in the upper rows of `M`,
/// `p = ⌈n/2⌉`.
pub fn block_shape(k: usize) -> Result<(usize, usize)> {
    let n = at_least_twelve(k)?;
    let p = n.div_ceil(2);
    Ok((p, n - p))
}

/// Checks that the first `p` rows of `M` are `[ I_p | 0 ]`.
pub fn block_check(m: &RatMatrix, k: usize) -> Result<bool> {
    let (p, q) = block_shape(k)?;
    if m.rows() != p + q || m.cols() != p + q {
        return Ok(false);
    }
    Ok(m.block(0, 0, p, p) == RatMatrix::identity(p) && m.block(0, p, p, q) == RatMatrix::zeros(p, q))
}

/// `ᵗA · D · B`.
pub fn symmetry_product(k: usize) -> Result<RatMatrix> {
    build_a(k)?.transpose().try_mul(&build_d(k)?)?.try_mul(&build_b(k)?)
}
