//! Free Lie algebra on `x`, `y`: brackets, the derivations `D_f`, the Poisson
//! bracket, the product `f ⊙ g = fg + D_f(g)`, and the double shuffle
//! conditions.

use serde::Serialize;

use crate::error::{check_weight, Error, Result};
use crate::linalg::RowEchelon;
use crate::poly::{stuffle, NcPoly};
use crate::scalar::{binomial, from_i64, Scalar};
use crate::words::{Letter, Word};
use crate::{QPoly, Rational};

/// `[f, g] = fg − gf`.
pub fn bracket<T: Scalar>(f: &NcPoly<T>, g: &NcPoly<T>) -> NcPoly<T> {
    f.concat(g) - g.concat(f)
}

/// `ad_x^n(y) = Σ_i (−1)^i C(n, i) x^{n−i} y x^i`.
pub fn ad_x_pow<T: Scalar>(n: usize) -> NcPoly<T> {
    NcPoly::from_terms((0..=n).map(|i| {
        let c = i64::try_from(binomial(n as i64, i as i64)).expect("C(n, i) fits in i64");
        let c = from_i64::<T>(if i % 2 == 1 { -c } else { c });
        (Word::x_pow(n - i).push(Letter::Y).concat(Word::x_pow(i)), c)
    }))
}

/// Left-normed bracketing `[…[[a_1, a_2], a_3], …, a_n]` of a word.
pub fn left_bracketing<T: Scalar>(w: Word) -> NcPoly<T> {
    let mut letters = w.letters();
    let Some(first) = letters.next() else {
        return NcPoly::zero();
    };
    let mut acc = NcPoly::from_word(Word::letter(first));
    for l in letters {
        acc = bracket(&acc, &NcPoly::from_word(Word::letter(l)));
    }
    acc
}

/// Dynkin criterion: a homogeneous `f` of weight `n ≥ 1` is a Lie polynomial
/// iff the left-normed bracketing map sends it to `n·f`.
pub fn is_lie<T: Scalar>(f: &NcPoly<T>) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let n = f.homogeneous_weight().ok_or(Error::NotHomogeneous)?;
    if n == 0 {
        return Ok(false);
    }
    let image = f.map_linear(left_bracketing);
    Ok(image == f.scale(&from_i64::<T>(n as i64)))
}

/// The derivation `D_f` with `D_f(x) = 0`, `D_f(y) = [y, f]`, applied to `g`.
pub fn derivation_apply<T: Scalar>(f: &NcPoly<T>, g: &NcPoly<T>) -> NcPoly<T> {
    let y_image = bracket(&NcPoly::from_word(Word::y()), f);
    g.map_linear(|w| {
        let mut out = NcPoly::zero();
        for i in 0..w.len() {
            if w.get(i) == Letter::Y {
                let prefix = NcPoly::from_word(w.slice(0, i));
                let suffix = NcPoly::from_word(w.slice(i + 1, w.len()));
                out += &prefix.concat(&y_image).concat(&suffix);
            }
        }
        out
    })
}

/// `{f, g} = [f, g] + D_f(g) − D_g(f)`.
pub fn poisson<T: Scalar>(f: &NcPoly<T>, g: &NcPoly<T>) -> NcPoly<T> {
    bracket(f, g) + derivation_apply(f, g) - derivation_apply(g, f)
}

/// `f ⊙ g = fg + D_f(g)`.
///
/// This is the enveloping-algebra product only when `f` itself lies in the
/// double shuffle Lie algebra (or is the depth-one part of such an element);
/// the caller is responsible for that.
pub fn odot<T: Scalar>(f: &NcPoly<T>, g: &NcPoly<T>) -> NcPoly<T> {
    f.concat(g) + derivation_apply(f, g)
}

/// Lyndon words of length exactly `n` over `x < y`, in increasing order
/// (Duval's algorithm).
pub fn lyndon_words(n: usize) -> Vec<Word> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(
                Word::from_letters(w.iter().map(|&b| if b == 0 { Letter::X } else { Letter::Y }))
                    .expect("length within bounds"),
            );
        }
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

fn is_lyndon(w: Word) -> bool {
    let n = w.len();
    n > 0 && (1..n).all(|i| lex_less(w, w.slice(i, n)))
}

fn lex_less(a: Word, b: Word) -> bool {
    let la: Vec<Letter> = a.letters().collect();
    let lb: Vec<Letter> = b.letters().collect();
    la < lb
}

/// Standard bracketing of a Lyndon word: `P(w) = [P(u), P(v)]` where `v` is
/// the longest proper Lyndon suffix.
pub fn lyndon_bracket<T: Scalar>(w: Word) -> NcPoly<T> {
    if w.len() <= 1 {
        return NcPoly::from_word(w);
    }
    let n = w.len();
    let split = (1..n)
        .find(|&i| is_lyndon(w.slice(i, n)))
        .expect("a word of length ≥ 2 has a proper Lyndon suffix");
    bracket(&lyndon_bracket(w.slice(0, split)), &lyndon_bracket(w.slice(split, n)))
}

/// Pairs `(u, v)` of nonempty words ending in `y`, with `|u| + |v| = n`, not
/// both powers of `y`.
pub fn admissible_pairs(n: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for a in 1..n {
        for u in Word::all_of_length(a).filter(|u| u.ends_in_y()) {
            for v in Word::all_of_length(n - a).filter(|v| v.ends_in_y()) {
                if !(u.is_y_power() && v.is_y_power()) {
                    out.push((u, v));
                }
            }
        }
    }
    out
}

/// A reason for a polynomial to fail membership in `ds`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum DsViolation {
    NotLie,
    Stuffle { u: Word, v: Word, value: String },
}

/// Lists every way `f` fails the double shuffle conditions; empty iff `f ∈ ds`.
pub fn ds_check(f: &QPoly) -> Result<Vec<DsViolation>> {
    if f.is_zero() {
        return Ok(Vec::new());
    }
    let n = f.homogeneous_weight().ok_or(Error::NotHomogeneous)?;
    check_weight(n as i64, n >= 3, "ds membership needs weight ≥ 3")?;
    let mut out = Vec::new();
    if !is_lie(f)? {
        out.push(DsViolation::NotLie);
    }
    for (u, v) in admissible_pairs(n) {
        let value = f.coeff_of(&stuffle::<Rational>(u, v)?);
        if !num_traits::Zero::is_zero(&value) {
            out.push(DsViolation::Stuffle { u, v, value: value.to_string() });
        }
    }
    Ok(out)
}

/// Linear system cutting `ds_n` out of `Lie_n[x, y]`, in the Lyndon basis.
#[derive(Debug, Clone)]
pub struct DsConstraintSystem {
    pub weight: usize,
    pub basis_words: Vec<Word>,
    pub basis: Vec<QPoly>,
    pub pairs: Vec<(Word, Word)>,
    pub reduced: RowEchelon,
}

impl DsConstraintSystem {
    pub fn new(weight: usize) -> Result<Self> {
        let basis_words = lyndon_words(weight);
        let basis: Vec<QPoly> = basis_words.iter().map(|w| lyndon_bracket(*w)).collect();
        // (u, v) and (v, u) give the same functional
        let pairs: Vec<(Word, Word)> =
            admissible_pairs(weight).into_iter().filter(|(u, v)| u <= v).collect();
        let mut reduced = RowEchelon::new(basis.len());
        for &(u, v) in &pairs {
            let s = stuffle::<Rational>(u, v)?;
            reduced.insert(basis.iter().map(|b| b.coeff_of(&s)).collect());
        }
        Ok(DsConstraintSystem { weight, basis_words, basis, pairs, reduced })
    }

    /// Polynomial with the given coordinates in the Lyndon basis.
    pub fn combine(&self, coords: &[Rational]) -> QPoly {
        let mut f = QPoly::zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            f += &b.scale(c);
        }
        f
    }
}

/// Basis of `ds_n` for `3 ≤ n ≤ 10`.
///
/// Each element whose coefficient of `x^{n−1} y` is nonzero is scaled to make
/// that coefficient one.
pub fn ds_solve(n: usize) -> Result<Vec<QPoly>> {
    check_weight(n as i64, (3..=10).contains(&n), "3 ≤ n ≤ 10")?;
    let system = DsConstraintSystem::new(n)?;
    let lead = Word::x_pow(n - 1).push(Letter::Y);
    Ok(system
        .reduced
        .kernel()
        .iter()
        .map(|coords| {
            let f = system.combine(coords);
            let c = f.coeff(lead);
            if num_traits::Zero::is_zero(&c) {
                f
            } else {
                f.scale(&c.recip())
            }
        })
        .collect())
}
