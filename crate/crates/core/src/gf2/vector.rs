//! Dense bit-packed vectors over GF(2).

use std::fmt;
use std::ops::{Add, AddAssign};

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Storage for packed coordinates. Dimensions up to 64 stay inline.
type Words = SmallVec<[u64; 1]>;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Parity of a vector: the parity of its Hamming weight, equivalently `v . v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A vector in Z_2^n.
///
/// Coordinate `i` lives in word `i / 64`, bit `i % 64`. Bits at positions
/// `>= len` are always zero, so word-wise comparisons and popcounts are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    len: usize,
    words: Words,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: SmallVec::from_elem(0, word_count(len)),
        }
    }

    /// The standard basis vector with a single one at coordinate `i`.
    ///
    /// # Panics
    /// Panics if `i >= len`.
    pub fn standard_basis(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn all_ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: SmallVec::from_elem(u64::MAX, word_count(len)),
        };
        v.mask_tail();
        v
    }

    /// Builds a vector of length `len <= 64` whose coordinate `i` is bit `i` of `word`.
    ///
    /// # Panics
    /// Panics if `len > 64`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= WORD_BITS, "from_word: length {len} exceeds 64");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = word;
            v.mask_tail();
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Coordinate `i` of the result is one exactly when `i` appears in `ones`.
    ///
    /// # Panics
    /// Panics if an index is out of range.
    pub fn from_support<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The packed words, least significant coordinate first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The first 64 coordinates packed into one word.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// # Panics
    /// Panics if `i >= len`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if `i >= len`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// # Panics
    /// Panics if `i >= len`.
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn parity(&self) -> Parity {
        let folded = self.words.iter().fold(0u64, |acc, w| acc ^ w);
        Parity::from_bit(folded.count_ones() & 1 == 1)
    }

    pub fn is_odd(&self) -> bool {
        self.parity().is_odd()
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + tz)
                }
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Index of the lowest nonzero coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    /// The binary dot product `sum_n a[n] b[n] mod 2`.
    pub fn try_dot(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.dot(other))
    }

    /// Like [`try_dot`](Self::try_dot) but panics on a length mismatch.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        let folded = self
            .words
            .iter()
            .zip(&other.words)
            .fold(0u64, |acc, (a, b)| acc ^ (a & b));
        folded.count_ones() & 1 == 1
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self + other)
    }

    /// Appends `extra` zero coordinates.
    pub fn extend_zeros(&self, extra: usize) -> Self {
        let mut v = Self::zeros(self.len + extra);
        v.words[..self.words.len()].copy_from_slice(&self.words);
        v
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.extend_zeros(other.len);
        for i in other.ones() {
            v.set(self.len + i, true);
        }
        v
    }

    /// Renders the vector as a string over `{0,1}`.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Parses a string over `{0,1}`; surrounding whitespace is ignored.
    pub fn parse_bits(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        message: format!("unexpected character {other:?} in bit string"),
                    })
                }
            }
        }
        Ok(v)
    }
}

impl AddAssign<&Gf2Vector> for Gf2Vector {
    fn add_assign(&mut self, rhs: &Gf2Vector) {
        assert_eq!(self.len, rhs.len, "add: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl Add<&Gf2Vector> for &Gf2Vector {
    type Output = Gf2Vector;

    fn add(self, rhs: &Gf2Vector) -> Gf2Vector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Gf2Vector {
    type Output = Gf2Vector;

    fn add(mut self, rhs: Gf2Vector) -> Gf2Vector {
        self += &rhs;
        self
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({})", self.to_bit_string())
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Gf2Vector {
        Gf2Vector::parse_bits(s).unwrap()
    }

    #[test]
    fn dot_examples() {
        assert!(!v("101").dot(&v("111")));
        assert!(!v("11").dot(&v("11")));
        for i in 0..4 {
            for j in 0..4 {
                let ei = Gf2Vector::standard_basis(4, i);
                let ej = Gf2Vector::standard_basis(4, j);
                assert_eq!(ei.dot(&ej), i == j);
            }
        }
    }

    #[test]
    fn dot_length_mismatch_is_an_error() {
        assert_eq!(
            v("10").try_dot(&v("101")),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn parity_examples() {
        assert_eq!(v("111").parity(), Parity::Odd);
        assert_eq!(v("00").parity(), Parity::Even);
        assert_eq!(v("1100").parity(), Parity::Even);
        assert_eq!(v("1100").parity().is_odd(), v("1100").dot(&v("1100")));
    }

    #[test]
    fn multiword_vectors_keep_padding_clean() {
        let ones = Gf2Vector::all_ones(130);
        assert_eq!(ones.weight(), 130);
        assert_eq!(ones.words().len(), 3);
        assert_eq!(ones.words()[2], 0b11);
        let e = Gf2Vector::standard_basis(130, 129);
        assert!(ones.dot(&e));
        assert_eq!((&ones + &e).weight(), 129);
        assert_eq!(ones.ones().last(), Some(129));
    }

    #[test]
    fn concat_and_extend() {
        assert_eq!(v("10").concat(&v("011")), v("10011"));
        assert_eq!(v("1").extend_zeros(2), v("100"));
        assert_eq!(v("1").extend_zeros(70).len(), 71);
    }

    #[test]
    fn rejects_bad_characters() {
        assert!(Gf2Vector::parse_bits("10x").is_err());
    }
}
