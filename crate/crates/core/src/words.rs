//! Words over the alphabet `{x, y}` and their correspondence with compositions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest word that fits the packed representation.
pub const MAX_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word in `x`, `y`, packed as one bit per letter (`x = 0`, `y = 1`) with the
/// first letter in the most significant position.
///
/// Words order by length first and then lexicographically with `x < y`, which is
/// exactly the derived order on `(len, bits)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn x() -> Word {
        Word { len: 1, bits: 0 }
    }

    pub fn y() -> Word {
        Word { len: 1, bits: 1 }
    }

    pub fn letter(l: Letter) -> Word {
        Word { len: 1, bits: l.bit() }
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Word {
        assert!(n <= MAX_LEN, "word too long");
        Word { len: n as u8, bits: 0 }
    }

    /// `y^n`.
    pub fn y_pow(n: usize) -> Word {
        assert!(n <= MAX_LEN, "word too long");
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Word { len: n as u8, bits }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
        let mut w = Word::EMPTY;
        for l in letters {
            if w.len() == MAX_LEN {
                return Err(Error::WordTooLong { len: MAX_LEN + 1 });
            }
            w = w.push(l);
        }
        Ok(w)
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Weight is the length of the word.
    pub fn weight(self) -> usize {
        self.len()
    }

    /// Number of `y` letters.
    pub fn depth(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Letter at position `i`, counted from the left.
    pub fn get(self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index out of range");
        if (self.bits >> (self.len() - 1 - i)) & 1 == 1 {
            Letter::Y
        } else {
            Letter::X
        }
    }

    pub fn first(self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.get(0))
    }

    pub fn last(self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.get(self.len() - 1))
    }

    pub fn letters(self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Appends a letter on the right.
    pub fn push(self, l: Letter) -> Word {
        assert!(self.len() < MAX_LEN, "word too long");
        Word { len: self.len + 1, bits: (self.bits << 1) | l.bit() }
    }

    /// Prepends a letter on the left.
    pub fn prepend(self, l: Letter) -> Word {
        assert!(self.len() < MAX_LEN, "word too long");
        Word { len: self.len + 1, bits: self.bits | (l.bit() << self.len) }
    }

    pub fn concat(self, other: Word) -> Word {
        let len = self.len() + other.len();
        assert!(len <= MAX_LEN, "word too long");
        let shifted = if other.len() == 64 { 0 } else { self.bits << other.len() };
        Word { len: len as u8, bits: shifted | other.bits }
    }

    /// Letters `start..end`.
    pub fn slice(self, start: usize, end: usize) -> Word {
        assert!(start <= end && end <= self.len(), "slice out of range");
        let len = end - start;
        let shifted = self.bits >> (self.len() - end);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Word { len: len as u8, bits: shifted & mask }
    }

    pub fn reversed(self) -> Word {
        let mut w = Word::EMPTY;
        for l in self.letters().rev() {
            w = w.push(l);
        }
        w
    }

    /// Exchanges `x` and `y` letter by letter.
    pub fn swapped(self) -> Word {
        let mask = if self.len == 64 { u64::MAX } else { (1u64 << self.len) - 1 };
        Word { len: self.len, bits: !self.bits & mask }
    }

    /// `true` iff the word is `x v y` for some possibly empty `v`.
    pub fn is_convergent(self) -> bool {
        self.first() == Some(Letter::X) && self.last() == Some(Letter::Y)
    }

    pub fn ends_in_y(self) -> bool {
        self.last() == Some(Letter::Y)
    }

    pub fn is_y_power(self) -> bool {
        self.depth() == self.len()
    }

    /// For a word ending in `y` (or empty), the exponents `i_1, …, i_r` with
    /// `w = y_{i_1} … y_{i_r}` and `y_i = x^{i-1} y`.
    pub fn y_blocks(self) -> Result<Vec<u32>> {
        if !self.is_empty() && !self.ends_in_y() {
            return Err(Error::NotEndingInY(self.to_string()));
        }
        let mut blocks = Vec::with_capacity(self.depth());
        let mut run = 1u32;
        for l in self.letters() {
            match l {
                Letter::X => run += 1,
                Letter::Y => {
                    blocks.push(run);
                    run = 1;
                }
            }
        }
        Ok(blocks)
    }

    /// Inverse of [`Word::y_blocks`].
    pub fn from_y_blocks(blocks: &[u32]) -> Word {
        blocks.iter().fold(Word::EMPTY, |w, &i| {
            w.concat(Word::x_pow(i as usize - 1)).push(Letter::Y)
        })
    }

    /// Splits the word as `y^r · v · x^s` with maximal runs `r` and `s`.
    ///
    /// The middle `v` is empty or convergent. A word made only of `y`s gives
    /// `(len, ε, 0)`.
    pub fn regularization_split(self) -> (usize, Word, usize) {
        let n = self.len();
        let r = self.letters().take_while(|&l| l == Letter::Y).count();
        if r == n {
            return (r, Word::EMPTY, 0);
        }
        let s = self.letters().rev().take_while(|&l| l == Letter::X).count();
        (r, self.slice(r, n - s), s)
    }

    /// All words of the given length, in the canonical order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < 64, "enumeration limited to words shorter than 64 letters");
        (0..(1u64 << n)).map(move |bits| Word { len: n as u8, bits })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a string over `{x, y}`; `""` and `"1"` both give the empty word.
    fn from_str(s: &str) -> Result<Word> {
        if s == "1" {
            return Ok(Word::EMPTY);
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::ParseWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.len() > MAX_LEN {
            return Err(Error::WordTooLong { len: letters.len() });
        }
        Word::from_letters(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Index sequence `(r_1, …, r_k)` of a multiple zeta value, `r_1 ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        let valid = parts.first().is_some_and(|&r| r >= 2) && parts.iter().all(|&r| r >= 1);
        if !valid {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        word_of_composition(self).cmp(&word_of_composition(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// `(r_1, …, r_k) ↦ x^{r_1-1} y ⋯ x^{r_k-1} y`.
pub fn word_of_composition(c: &Composition) -> Word {
    Word::from_y_blocks(c.parts())
}

/// Inverse of [`word_of_composition`]; only convergent words have a composition.
pub fn composition_of_word(w: Word) -> Result<Composition> {
    if !w.is_convergent() {
        return Err(Error::NotConvergent(w.to_string()));
    }
    Composition::new(w.y_blocks()?)
}
