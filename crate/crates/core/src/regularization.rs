//! Formal zeta symbols: shuffle regularization of non-convergent words, the
//! star (stuffle) regularization, and the linear relations they generate.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{check_weight, Error, Result};
use crate::linalg::RowEchelon;
use crate::poly::{shuffle, stuffle};
use crate::scalar::{from_i64, ratio};
use crate::words::{composition_of_word, Word};
use crate::{QPoly, Rational};

/// Rational combination of symbols `Z(w)` for convergent `w`, plus a scalar
/// (weight 0) part.
#[derive(Clone, PartialEq, Default)]
pub struct FormalZetaCombo {
    scalar: Rational,
    terms: QPoly,
}

impl FormalZetaCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        FormalZetaCombo { scalar: c, terms: QPoly::zero() }
    }

    /// `Z(w)` for a convergent word.
    pub fn symbol(w: Word) -> Result<Self> {
        Self::from_poly(QPoly::from_word(w))
    }

    /// Reads a polynomial on convergent words as a combination of symbols; the
    /// empty word goes to the scalar slot.
    pub fn from_poly(p: QPoly) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in p.into_terms() {
            if w.is_empty() {
                out.scalar = c;
            } else if w.is_convergent() {
                out.terms.add_term(w, c);
            } else {
                return Err(Error::NotConvergent(w.to_string()));
            }
        }
        Ok(out)
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn terms(&self) -> &QPoly {
        &self.terms
    }

    pub fn coeff(&self, w: Word) -> Rational {
        self.terms.coeff(w)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.terms.is_zero()
    }

    /// The scalar and word parts as a single polynomial (scalar on the empty word).
    pub fn to_poly(&self) -> QPoly {
        let mut p = self.terms.clone();
        p.add_term(Word::EMPTY, self.scalar.clone());
        p
    }

    /// Weight if homogeneous; a pure scalar has weight 0, the zero combo none.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        self.to_poly().homogeneous_weight()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FormalZetaCombo { scalar: &self.scalar * c, terms: self.terms.scale(c) }
    }

    /// `Z(u) Z(v) = Z(u ш v)`, extended bilinearly.
    pub fn product(&self, other: &Self) -> Self {
        let p = self.to_poly().shuffle(&other.to_poly());
        Self::from_poly(p).expect("shuffles of convergent words are convergent")
    }

    pub fn add(&self, other: &Self) -> Self {
        FormalZetaCombo { scalar: &self.scalar + &other.scalar, terms: &self.terms + &other.terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        FormalZetaCombo { scalar: &self.scalar - &other.scalar, terms: &self.terms - &other.terms }
    }
}

impl fmt::Display for FormalZetaCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(Rational, String)> = Vec::new();
        if !self.scalar.is_zero() {
            parts.push((self.scalar.clone(), String::new()));
        }
        for (w, c) in self.terms.terms() {
            let c_str = composition_of_word(*w).expect("stored words are convergent");
            parts.push((c.clone(), format!("Z{c_str}")));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, sym)) in parts.iter().enumerate() {
            let negative = c < &Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if sym.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(sym)?;
            } else {
                write!(f, "{mag} {sym}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FormalZetaCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormalZetaCombo[{self}]")
    }
}

impl Serialize for FormalZetaCombo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Shuffle regularization of an arbitrary word.
///
/// Writing `w = y^r v x^s` with `v` convergent or empty,
/// `Z(w) = Σ_{a ≤ r, b ≤ s} (−1)^{a+b} π(y^a ш y^{r−a} v x^{s−b} ш x^b)`;
/// the `a = b = 0` term is `π(w)`, which vanishes unless `w` is convergent.
/// The empty word maps to the unit.
pub fn shuffle_regularize(w: Word) -> FormalZetaCombo {
    if w.is_empty() {
        return FormalZetaCombo::unit();
    }
    if w.is_convergent() {
        return FormalZetaCombo::symbol(w).expect("convergent");
    }
    let (r, v, s) = w.regularization_split();
    let mut acc = QPoly::zero();
    for a in 0..=r {
        for b in 0..=s {
            if a == 0 && b == 0 {
                continue;
            }
            let middle = Word::y_pow(r - a).concat(v).concat(Word::x_pow(s - b));
            let left = shuffle::<Rational>(Word::y_pow(a), middle);
            let full = left.shuffle(&QPoly::from_word(Word::x_pow(b))).pi_convergent();
            let sign = from_i64::<Rational>(if (a + b) % 2 == 0 { 1 } else { -1 });
            acc += &full.scale(&sign);
        }
    }
    FormalZetaCombo::from_poly(acc).expect("projected onto convergent words")
}

/// Regularizes every word of a polynomial and sums.
pub fn shuffle_regularize_poly(p: &QPoly) -> FormalZetaCombo {
    p.terms().fold(FormalZetaCombo::zero(), |acc, (w, c)| {
        acc.add(&shuffle_regularize(*w).scale(c))
    })
}

/// `Z*(1, …, 1)` (r ones) for `r ≤ bound`, read off the series
/// `exp Σ_{r≥1} ((−1)^{r−1}/r) Z(x^{r−1} y) T^r`.
#[derive(Debug, Clone)]
pub struct StarSymbolTable {
    bound: usize,
    values: Vec<FormalZetaCombo>,
}

impl StarSymbolTable {
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `Z*(1^r)`; panics past the table bound.
    pub fn get(&self, r: usize) -> &FormalZetaCombo {
        assert!(r <= self.bound, "star table computed only up to weight {}", self.bound);
        &self.values[r]
    }
}

pub const STAR_TABLE_BOUND: usize = 12;

/// Expands the exponential through weight `n` using `r·e_r = Σ_{m=1}^r m·ℓ_m·e_{r−m}`.
pub fn star_units(n: usize) -> Result<StarSymbolTable> {
    check_weight(n as i64, n <= STAR_TABLE_BOUND, "N ≤ 12")?;
    // m·ℓ_m = (−1)^{m−1} Z(x^{m−1} y), with Z(y) = 0
    let m_log: Vec<FormalZetaCombo> = (0..=n)
        .map(|m| {
            if m == 0 {
                return FormalZetaCombo::zero();
            }
            let z = shuffle_regularize(Word::x_pow(m - 1).push(crate::Letter::Y));
            if m % 2 == 0 {
                z.scale(&-Rational::one())
            } else {
                z
            }
        })
        .collect();
    let mut values = vec![FormalZetaCombo::unit()];
    for r in 1..=n {
        let mut acc = FormalZetaCombo::zero();
        for m in 1..=r {
            acc = acc.add(&m_log[m].product(&values[r - m]));
        }
        values.push(acc.scale(&ratio(1, r as i64)));
    }
    Ok(StarSymbolTable { bound: n, values })
}

fn star_table() -> &'static StarSymbolTable {
    static TABLE: OnceLock<StarSymbolTable> = OnceLock::new();
    TABLE.get_or_init(|| star_units(STAR_TABLE_BOUND).expect("bound within range"))
}

/// Star regularization `Z*(w)` of a word ending in `y`.
///
/// Convergent words are unchanged, `y^m` gives `Z*(1^m)`, and
/// `Z*(y^m v) = Σ_{r=0}^m Z*(1^r) Z(y^{m−r} v)` for convergent `v`.
pub fn star_regularize(w: Word) -> Result<FormalZetaCombo> {
    if w.is_empty() {
        return Ok(FormalZetaCombo::unit());
    }
    if !w.ends_in_y() {
        return Err(Error::NotEndingInY(w.to_string()));
    }
    check_weight(w.len() as i64, w.len() <= STAR_TABLE_BOUND, "star regularization up to weight 12")?;
    if w.is_convergent() {
        return FormalZetaCombo::symbol(w);
    }
    let table = star_table();
    if w.is_y_power() {
        return Ok(table.get(w.len()).clone());
    }
    let m = w.letters().take_while(|&l| l == crate::Letter::Y).count();
    let v = w.slice(m, w.len());
    let mut acc = FormalZetaCombo::zero();
    for r in 0..=m {
        let inner = shuffle_regularize(Word::y_pow(m - r).concat(v));
        acc = acc.add(&table.get(r).product(&inner));
    }
    Ok(acc)
}

/// `Z*(u) Z*(v) − Z*(u * v)`, a linear relation among convergent symbols.
pub fn stuffle_relation(u: Word, v: Word) -> Result<FormalZetaCombo> {
    let lhs = star_regularize(u)?.product(&star_regularize(v)?);
    let mut rhs = FormalZetaCombo::zero();
    for (w, c) in stuffle::<Rational>(u, v)?.terms() {
        rhs = rhs.add(&star_regularize(*w)?.scale(c));
    }
    Ok(lhs.sub(&rhs))
}

/// The weight-`n` part of the quotient of the convergent symbols by all
/// stuffle relations.
#[derive(Debug, Clone, Serialize)]
pub struct FzQuotient {
    pub weight: usize,
    /// Number of convergent symbols of weight `n`.
    pub symbols: usize,
    pub dim: usize,
    /// Reduced relation basis.
    pub relations: Vec<FormalZetaCombo>,
}

/// Words `u, v` ending in `y` with `|u| + |v| = n`, `u ≤ v`.
fn stuffle_pairs(n: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for a in 1..n {
        for u in Word::all_of_length(a).filter(|u| u.ends_in_y()) {
            for v in Word::all_of_length(n - a).filter(|v| v.ends_in_y()) {
                if u <= v {
                    out.push((u, v));
                }
            }
        }
    }
    out
}

pub fn convergent_words(n: usize) -> Vec<Word> {
    Word::all_of_length(n).filter(|w| w.is_convergent()).collect()
}

pub fn fz_quotient_dim(n: usize) -> Result<FzQuotient> {
    check_weight(n as i64, (2..=8).contains(&n), "2 ≤ n ≤ 8")?;
    let symbols = convergent_words(n);
    let mut system = RowEchelon::new(symbols.len());
    for (u, v) in stuffle_pairs(n) {
        let rel = stuffle_relation(u, v)?;
        debug_assert!(rel.scalar().is_zero());
        system.insert(symbols.iter().map(|w| rel.coeff(*w)).collect());
    }
    let relations = system
        .basis()
        .iter()
        .map(|row| {
            FormalZetaCombo::from_poly(QPoly::from_terms(
                symbols.iter().zip(row).map(|(w, c)| (*w, c.clone())),
            ))
            .expect("convergent symbols")
        })
        .collect();
    Ok(FzQuotient { weight: n, symbols: symbols.len(), dim: symbols.len() - system.rank(), relations })
}

/// Dimension of the weight-`n` polynomials `f` with `(f | w) = (f | Z(w))` for
/// every non-convergent `w`, where `Z(w)` is the shuffle regularization read
/// back as a polynomial.
pub fn sh_basis_dim(n: usize) -> Result<usize> {
    check_weight(n as i64, (2..=8).contains(&n), "2 ≤ n ≤ 8")?;
    let words: Vec<Word> = Word::all_of_length(n).collect();
    let index = |w: Word| words.binary_search(&w).expect("word of weight n");
    let mut system = RowEchelon::new(words.len());
    for w in words.iter().filter(|w| !w.is_convergent()) {
        let mut row = vec![Rational::zero(); words.len()];
        row[index(*w)] += Rational::one();
        for (v, c) in shuffle_regularize(*w).terms().terms() {
            row[index(*v)] -= c;
        }
        system.insert(row);
    }
    Ok(words.len() - system.rank())
}
