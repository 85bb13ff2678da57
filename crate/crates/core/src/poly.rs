//! Sparse noncommutative polynomials in `x`, `y` and the shuffle and stuffle
//! products of words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::Result;
use crate::scalar::{from_i64, Scalar};
use crate::words::{Letter, Word};

/// Finite linear combination of words with nonzero coefficients.
///
/// Terms are kept in the canonical word order, so iteration and printing are
/// deterministic.
#[derive(Clone, PartialEq)]
pub struct NcPoly<T> {
    terms: BTreeMap<Word, T>,
}

impl<T: Scalar> Default for NcPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> NcPoly<T> {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    /// The empty word with coefficient one.
    pub fn one() -> Self {
        Self::from_word(Word::EMPTY)
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, T::one())
    }

    pub fn monomial(w: Word, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c·w`, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &T)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, T)> {
        self.terms.into_iter()
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.terms.keys().copied()
    }

    /// `(f | w)`: the coefficient of `w`, zero when absent.
    pub fn coeff(&self, w: Word) -> T {
        self.terms.get(&w).cloned().unwrap_or_else(T::zero)
    }

    /// `(f | g) = Σ_w g_w (f | w)`.
    pub fn coeff_of(&self, g: &NcPoly<T>) -> T {
        g.terms().fold(T::zero(), |acc, (w, c)| acc + c.clone() * self.coeff(*w))
    }

    /// The weight if every term has the same length; `None` for the zero
    /// polynomial or a mixed-weight one.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(|w| w.len());
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    /// Smallest number of `y`s in a term. `None` stands for the infinite depth of
    /// the zero polynomial.
    pub fn depth(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.depth()).min()
    }

    /// Terms of exactly the given depth.
    pub fn depth_part(&self, d: usize) -> Self {
        self.filter(|w| w.depth() == d)
    }

    pub fn filter<F: Fn(Word) -> bool>(&self, keep: F) -> Self {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(**w))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, v)| (*w, v.clone() * c.clone())).collect(),
        }
    }

    /// Applies a linear map given on words.
    pub fn map_linear<F: FnMut(Word) -> NcPoly<T>>(&self, mut image: F) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            for (v, d) in image(*w).into_terms() {
                out.add_term(v, d * c.clone());
            }
        }
        out
    }

    /// Bilinear extension of word concatenation.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(*v), a.clone() * b.clone());
            }
        }
        out
    }

    /// Keeps only the convergent words.
    pub fn pi_convergent(&self) -> Self {
        self.filter(Word::is_convergent)
    }

    /// Bilinear extension of the shuffle product.
    pub fn shuffle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let ab = a.clone() * b.clone();
                for (w, n) in shuffle_counts(*u, *v) {
                    out.add_term(w, ab.clone() * from_i64::<T>(n as i64));
                }
            }
        }
        out
    }

    /// Bilinear extension of the stuffle product; every word must end in `y`.
    pub fn stuffle(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let ab = a.clone() * b.clone();
                for (w, n) in stuffle_counts(*u, *v)? {
                    out.add_term(w, ab.clone() * from_i64::<T>(n as i64));
                }
            }
        }
        Ok(out)
    }
}

/// Shuffle product of two words.
pub fn shuffle<T: Scalar>(u: Word, v: Word) -> NcPoly<T> {
    NcPoly::from_terms(
        shuffle_counts(u, v).into_iter().map(|(w, n)| (w, from_i64::<T>(n as i64))),
    )
}

/// Stuffle product of two words ending in `y` (the empty word is the unit).
pub fn stuffle<T: Scalar>(u: Word, v: Word) -> Result<NcPoly<T>> {
    Ok(NcPoly::from_terms(
        stuffle_counts(u, v)?.into_iter().map(|(w, n)| (w, from_i64::<T>(n as i64))),
    ))
}

type Counts = BTreeMap<Word, u64>;

fn prepend_all(letter_word: Word, counts: &Counts, out: &mut Counts) {
    for (w, n) in counts {
        *out.entry(letter_word.concat(*w)).or_insert(0) += n;
    }
}

/// Multiplicities of `u ш v`, computed bottom-up over pairs of suffixes with
/// `su ш tv = s(u ш tv) + t(su ш v)`.
pub fn shuffle_counts(u: Word, v: Word) -> Counts {
    let (m, n) = (u.len(), v.len());
    // table[i][j] = u[i..] ш v[j..]
    let mut table: Vec<Vec<Counts>> = vec![vec![Counts::new(); n + 1]; m + 1];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            let mut cell = Counts::new();
            if i == m {
                cell.insert(v.slice(j, n), 1);
            } else if j == n {
                cell.insert(u.slice(i, m), 1);
            } else {
                prepend_all(Word::letter(u.get(i)), &table[i + 1][j], &mut cell);
                prepend_all(Word::letter(v.get(j)), &table[i][j + 1], &mut cell);
            }
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

/// Multiplicities of `u * v` via
/// `y_i w * y_j w' = y_i(w * y_j w') + y_j(y_i w * w') + y_{i+j}(w * w')`.
pub fn stuffle_counts(u: Word, v: Word) -> Result<Counts> {
    let a = u.y_blocks()?;
    let b = v.y_blocks()?;
    let (m, n) = (a.len(), b.len());
    let block = |i: u32| Word::x_pow(i as usize - 1).push(Letter::Y);
    let mut table: Vec<Vec<Counts>> = vec![vec![Counts::new(); n + 1]; m + 1];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            let mut cell = Counts::new();
            if i == m {
                cell.insert(Word::from_y_blocks(&b[j..]), 1);
            } else if j == n {
                cell.insert(Word::from_y_blocks(&a[i..]), 1);
            } else {
                prepend_all(block(a[i]), &table[i + 1][j], &mut cell);
                prepend_all(block(b[j]), &table[i][j + 1], &mut cell);
                prepend_all(block(a[i] + b[j]), &table[i + 1][j + 1], &mut cell);
            }
            table[i][j] = cell;
        }
    }
    Ok(std::mem::take(&mut table[0][0]))
}

impl<T: Scalar> From<Word> for NcPoly<T> {
    fn from(w: Word) -> Self {
        NcPoly::from_word(w)
    }
}

impl<T: Scalar> Add for &NcPoly<T> {
    type Output = NcPoly<T>;
    fn add(self, rhs: &NcPoly<T>) -> NcPoly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Scalar> Add for NcPoly<T> {
    type Output = NcPoly<T>;
    fn add(mut self, rhs: NcPoly<T>) -> NcPoly<T> {
        self += &rhs;
        self
    }
}

impl<T: Scalar> AddAssign<&NcPoly<T>> for NcPoly<T> {
    fn add_assign(&mut self, rhs: &NcPoly<T>) {
        for (w, c) in rhs.terms() {
            self.add_term(*w, c.clone());
        }
    }
}

impl<T: Scalar> SubAssign<&NcPoly<T>> for NcPoly<T> {
    fn sub_assign(&mut self, rhs: &NcPoly<T>) {
        for (w, c) in rhs.terms() {
            self.add_term(*w, -c.clone());
        }
    }
}

impl<T: Scalar> Sub for &NcPoly<T> {
    type Output = NcPoly<T>;
    fn sub(self, rhs: &NcPoly<T>) -> NcPoly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Sub for NcPoly<T> {
    type Output = NcPoly<T>;
    fn sub(mut self, rhs: NcPoly<T>) -> NcPoly<T> {
        self -= &rhs;
        self
    }
}

impl<T: Scalar> Neg for &NcPoly<T> {
    type Output = NcPoly<T>;
    fn neg(self) -> NcPoly<T> {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (*w, -c.clone())).collect() }
    }
}

impl<T: Scalar> Neg for NcPoly<T> {
    type Output = NcPoly<T>;
    fn neg(self) -> NcPoly<T> {
        -&self
    }
}

/// Concatenation product.
impl<T: Scalar> Mul for &NcPoly<T> {
    type Output = NcPoly<T>;
    fn mul(self, rhs: &NcPoly<T>) -> NcPoly<T> {
        self.concat(rhs)
    }
}

impl<T: Scalar> Mul for NcPoly<T> {
    type Output = NcPoly<T>;
    fn mul(self, rhs: NcPoly<T>) -> NcPoly<T> {
        self.concat(&rhs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for NcPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if magnitude == "1" {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                write!(f, "{magnitude} {w}")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for NcPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::{QPoly, Rational};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(terms: &[(&str, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|(s, c)| (w(s), rat(*c))))
    }

    #[test]
    fn coefficient_lookup() {
        let f = p(&[("xy", 1), ("yx", 2)]);
        assert_eq!(f.coeff(w("yx")), rat(2));
        assert_eq!(f.coeff(w("yy")), rat(0));
        assert_eq!(QPoly::zero().coeff(w("xyx")), rat(0));
        // [x,[x,y]] = xxy - 2xyx + yxx
        let ad2 = p(&[("xxy", 1), ("xyx", -2), ("yxx", 1)]);
        assert_eq!(ad2.coeff(w("xyx")), rat(-2));
        assert_eq!(ad2.coeff_of(&p(&[("xxy", 3), ("xyx", 1)])), rat(1));
    }

    #[test]
    fn zero_terms_are_pruned() {
        let mut f = p(&[("xy", 1)]);
        f.add_term(w("xy"), rat(-1));
        assert!(f.is_zero());
        assert_eq!(f.depth(), None);
        assert_eq!(p(&[("xy", 1), ("yy", 0)]).len(), 1);
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle::<Rational>(w("x"), w("y")), p(&[("xy", 1), ("yx", 1)]));
        assert_eq!(shuffle::<Rational>(w("xyx"), Word::EMPTY), p(&[("xyx", 1)]));
        assert_eq!(shuffle::<Rational>(w("y"), w("xy")), p(&[("yxy", 1), ("xyy", 2)]));
    }

    #[test]
    fn stuffle_examples() {
        assert_eq!(stuffle::<Rational>(w("y"), w("y")).unwrap(), p(&[("yy", 2), ("xy", 1)]));
        assert_eq!(
            stuffle::<Rational>(w("y"), w("xy")).unwrap(),
            p(&[("yxy", 1), ("xyy", 1), ("xxy", 1)])
        );
        assert!(stuffle::<Rational>(w("yx"), w("y")).is_err());
        assert_eq!(stuffle::<Rational>(Word::EMPTY, w("xy")).unwrap(), p(&[("xy", 1)]));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(p(&[("x", 1)]).concat(&p(&[("y", 1)])), p(&[("xy", 1)]));
        let f = p(&[("xy", 1), ("yx", 3)]);
        assert_eq!(f.concat(&QPoly::one()), f);
        assert_eq!(
            p(&[("xy", 1), ("yx", 1)]) * p(&[("y", 1)]),
            p(&[("xyy", 1), ("yxy", 1)])
        );
    }

    #[test]
    fn projection_onto_convergent_words() {
        assert_eq!(p(&[("yxy", 1), ("xyy", 2)]).pi_convergent(), p(&[("xyy", 2)]));
        assert_eq!(p(&[("xy", 1)]).pi_convergent(), p(&[("xy", 1)]));
        assert!(p(&[("y", 1), ("x", 1)]).pi_convergent().is_zero());
    }

    #[test]
    fn display() {
        let f = p(&[("xxy", 1), ("xyx", -2), ("yxx", 1)]);
        assert_eq!(f.to_string(), "xxy - 2 xyx + yxx");
        let g = QPoly::from_terms([(Word::EMPTY, rat(-1)), (w("xy"), crate::scalar::ratio(1, 2))]);
        assert_eq!(g.to_string(), "-1 + 1/2 xy");
    }

    #[test]
    fn generic_over_f64() {
        let f = crate::F64Poly::from_terms([(w("xy"), 0.5), (w("yx"), 2.0)]);
        let g = f.shuffle(&crate::F64Poly::from_word(w("x")));
        assert_eq!(g.coeff(w("xxy")), 1.0);
        assert_eq!(g.coeff(w("yxx")), 4.0);
    }
}
