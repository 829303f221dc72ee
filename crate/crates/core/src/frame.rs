//! Frames for Z_2^d, their operators, and their duals.
//!
//! A frame is stored as its ordered list of vectors, which are the columns of
//! the synthesis matrix. Non-spanning sequences (including the empty one) are
//! representable; the predicates simply report `false` for them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{check_permutation, Gf2Matrix, Gf2Vector, SymmetricMatrix};

/// Explicit dual enumeration is refused above `2^24` duals unless forced.
pub const DUAL_ENUMERATION_LIMIT: usize = 24;

/// Prescribed dot products, one bit per frame vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaVector(Gf2Vector);

impl AlphaVector {
    pub fn new(bits: Gf2Vector) -> Self {
        Self(bits)
    }

    pub fn zeros(len: usize) -> Self {
        Self(Gf2Vector::zeros(len))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Gf2Vector::parse_bits(s).map(Self)
    }

    /// # Panics
    /// Panics on malformed input; meant for literals.
    pub fn from_str_lit(s: &str) -> Self {
        Self::parse(s).expect("alpha literal")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0.get(i)
    }

    pub fn bits(&self) -> &Gf2Vector {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_all_ones(&self) -> bool {
        self.weight() == self.len()
    }
}

impl fmt::Debug for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alpha({})", self.0)
    }
}

impl fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An ordered sequence of `K` vectors in Z_2^d.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    dim: usize,
    vectors: Vec<Gf2Vector>,
}

/// JSON form of a frame: the columns of the synthesis matrix as bit strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameRecord {
    pub d: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub columns: Vec<String>,
}

impl Frame {
    pub fn new(dim: usize, vectors: Vec<Gf2Vector>) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        Ok(Self { dim, vectors })
    }

    /// The frame whose vectors are the columns of `theta`.
    pub fn from_synthesis(theta: &Gf2Matrix) -> Self {
        Self {
            dim: theta.rows(),
            vectors: theta.columns(),
        }
    }

    pub fn standard_basis(dim: usize) -> Self {
        Self {
            dim,
            vectors: (0..dim).map(|i| Gf2Vector::standard_basis(dim, i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors `K`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Gf2Vector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &Gf2Vector {
        &self.vectors[i]
    }

    pub fn into_vectors(self) -> Vec<Gf2Vector> {
        self.vectors
    }

    /// The `d x K` synthesis matrix.
    pub fn synthesis(&self) -> Gf2Matrix {
        Gf2Matrix::from_columns(self.dim, &self.vectors).expect("vector lengths checked")
    }

    /// The `K x d` analysis matrix, whose rows are the frame vectors.
    pub fn analysis(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.dim, self.vectors.clone()).expect("vector lengths checked")
    }

    /// `S = Theta Theta*`, always symmetric.
    pub fn frame_operator(&self) -> SymmetricMatrix {
        SymmetricMatrix::new(self.synthesis().gram_of_rows()).expect("Gram matrices are symmetric")
    }

    pub fn rank(&self) -> usize {
        self.analysis().rank()
    }

    pub fn is_frame(&self) -> bool {
        self.rank() == self.dim
    }

    /// `Theta Theta* = I`; this already implies spanning.
    pub fn is_parseval(&self) -> bool {
        *self.frame_operator().matrix() == Gf2Matrix::identity(self.dim)
    }

    /// `alpha[i] = (f_i, f_i)`.
    pub fn self_diag(&self) -> AlphaVector {
        AlphaVector(Gf2Vector::from_support(
            self.len(),
            (0..self.len()).filter(|&i| self.vectors[i].is_odd()),
        ))
    }

    /// Number of odd vectors, i.e. the weight of [`self_diag`](Self::self_diag).
    pub fn odd_count(&self) -> usize {
        self.vectors.iter().filter(|v| v.is_odd()).count()
    }

    /// `alpha[i] = (h_i, f_i)`, the diagonal of the cross-Gramian.
    pub fn cross_gram_diag(&self, other: &Frame) -> Result<AlphaVector> {
        self.check_same_shape(other)?;
        Ok(AlphaVector(Gf2Vector::from_support(
            self.len(),
            (0..self.len()).filter(|&i| self.vectors[i].dot(&other.vectors[i])),
        )))
    }

    fn check_same_shape(&self, other: &Frame) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Whether `Theta_F Theta_H* = I`.
    pub fn is_dual(&self, other: &Frame) -> Result<bool> {
        self.check_same_shape(other)?;
        let product = &self.synthesis() * &other.analysis();
        Ok(product == Gf2Matrix::identity(self.dim))
    }

    fn require_frame(&self) -> Result<()> {
        let rank = self.rank();
        if rank != self.dim {
            return Err(Error::NotAFrame {
                dim: self.dim,
                rank,
            });
        }
        Ok(())
    }

    /// The dual built from the leftmost basis inside the frame: with `B` the
    /// `d x d` block of those columns, the dual vector at the `i`-th basis
    /// position is row `i` of `B^-1`, and every other dual vector is zero.
    pub fn natural_dual(&self) -> Result<Frame> {
        let theta = self.synthesis();
        let basis = theta.independent_columns();
        if basis.len() != self.dim {
            return Err(Error::NotAFrame {
                dim: self.dim,
                rank: basis.len(),
            });
        }
        let inv = theta.select_columns(&basis).inverse()?;
        let mut vectors = vec![Gf2Vector::zeros(self.dim); self.len()];
        for (i, &j) in basis.iter().enumerate() {
            vectors[j] = inv.row(i).clone();
        }
        Ok(Frame {
            dim: self.dim,
            vectors,
        })
    }

    /// All duals, as the natural dual plus a parametrization of the rest.
    pub fn dual_space(&self) -> Result<DualSpace> {
        self.require_frame()?;
        Ok(DualSpace {
            natural: self.natural_dual()?,
            generators: self.synthesis().nullspace_basis(),
        })
    }

    /// `F_pi = (f_{pi(0)}, ..., f_{pi(K-1)})`.
    pub fn permute(&self, perm: &[usize]) -> Result<Frame> {
        check_permutation(perm, self.len())?;
        Ok(Frame {
            dim: self.dim,
            vectors: perm.iter().map(|&p| self.vectors[p].clone()).collect(),
        })
    }

    /// Appends `count` zero vectors; the frame operator is unchanged.
    pub fn pad_zeros(&self, count: usize) -> Frame {
        let mut vectors = self.vectors.clone();
        vectors.extend(std::iter::repeat_n(Gf2Vector::zeros(self.dim), count));
        Frame {
            dim: self.dim,
            vectors,
        }
    }

    pub fn to_record(&self) -> FrameRecord {
        FrameRecord {
            d: self.dim,
            k: self.len(),
            columns: self.vectors.iter().map(Gf2Vector::to_bit_string).collect(),
        }
    }

    pub fn from_record(rec: &FrameRecord) -> Result<Self> {
        if rec.columns.len() != rec.k {
            return Err(Error::InvalidInput(format!(
                "frame record declares K = {} but lists {} columns",
                rec.k,
                rec.columns.len()
            )));
        }
        let vectors = rec
            .columns
            .iter()
            .map(|c| Gf2Vector::parse_bits(c))
            .collect::<Result<Vec<_>>>()?;
        Frame::new(rec.d, vectors)
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Frame{")?;
        for (i, v) in self.vectors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Frame {
    /// The synthesis matrix in the plain-text matrix format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.synthesis().to_text())
    }
}

/// A frame together with a dual: `Theta_F Theta_H* = I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    pub primal: Frame,
    pub dual: Frame,
}

impl DualPair {
    /// Checks duality before pairing.
    pub fn new(primal: Frame, dual: Frame) -> Result<Self> {
        if !primal.is_dual(&dual)? {
            return Err(Error::InvalidInput("frames are not dual to each other".into()));
        }
        Ok(Self { primal, dual })
    }

    /// `(f_i, h_i)` for every `i`.
    pub fn cross_diag(&self) -> AlphaVector {
        self.primal
            .cross_gram_diag(&self.dual)
            .expect("pair shapes agree")
    }

    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        Ok(Self {
            primal: self.primal.permute(perm)?,
            dual: self.dual.permute(perm)?,
        })
    }
}

/// Every dual of a frame `F` is `Theta_H* = Theta_G* + C` where `G` is the
/// natural dual and each column of `C` lies in the null space of `Theta_F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSpace {
    pub natural: Frame,
    /// Null space basis of `Theta_F`, vectors in Z_2^K.
    pub generators: Vec<Gf2Vector>,
}

impl DualSpace {
    /// `log2` of the number of duals, `d (K - d)`.
    pub fn count_exponent(&self) -> usize {
        self.natural.dim() * self.generators.len()
    }

    /// Number of duals when it fits in a `u128`.
    pub fn count(&self) -> Option<u128> {
        let e = self.count_exponent();
        (e < 128).then(|| 1u128 << e)
    }

    /// The dual selected by `index`: bits `j*g .. (j+1)*g` of `index` choose the
    /// generator combination used for coordinate axis `j`, where `g` is the
    /// number of generators.
    pub fn dual_at(&self, index: u64) -> Frame {
        let d = self.natural.dim();
        let k = self.natural.len();
        let g = self.generators.len();
        let mut vectors = self.natural.vectors().to_vec();
        for axis in 0..d {
            let mut col = Gf2Vector::zeros(k);
            for (t, gen) in self.generators.iter().enumerate() {
                let bit = axis * g + t;
                if bit < 64 && (index >> bit) & 1 == 1 {
                    col += gen;
                }
            }
            for i in col.ones() {
                vectors[i].flip(axis);
            }
        }
        Frame { dim: d, vectors }
    }

    /// Iterates over every dual. Refused when there are more than
    /// `2^DUAL_ENUMERATION_LIMIT` of them unless `force` is set; even forced,
    /// at most `2^63` can be listed.
    pub fn enumerate(&self, force: bool) -> Result<impl Iterator<Item = Frame> + '_> {
        let exponent = self.count_exponent();
        if (exponent > DUAL_ENUMERATION_LIMIT && !force) || exponent > 63 {
            return Err(Error::EnumerationGuard {
                exponent,
                limit: if force { 63 } else { DUAL_ENUMERATION_LIMIT },
            });
        }
        Ok((0..1u64 << exponent).map(move |i| self.dual_at(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(rows: &[&str]) -> Frame {
        Frame::from_synthesis(&Gf2Matrix::from_strs(rows))
    }

    fn cols(d: usize, cols: &[&str]) -> Frame {
        Frame::new(d, cols.iter().map(|c| Gf2Vector::parse_bits(c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn frame_operator_examples() {
        assert_eq!(
            Frame::standard_basis(4).frame_operator(),
            SymmetricMatrix::identity(4)
        );
        assert_eq!(
            frame(&["1100000", "1000000", "1111000"]).frame_operator(),
            SymmetricMatrix::from_strs(&["010", "111", "010"])
        );
        let twice = cols(3, &["101", "101"]);
        assert_eq!(twice.frame_operator(), SymmetricMatrix::zeros(3));
    }

    #[test]
    fn frame_and_parseval_predicates() {
        let p = cols(3, &["011", "101", "110", "111"]);
        assert!(p.is_parseval() && p.is_frame());
        let e1e1 = cols(2, &["10", "10"]);
        assert!(!e1e1.is_frame() && !e1e1.is_parseval());
        // S = I + (e1+e2)(e1+e2)* = [01;10] by hand.
        let f = cols(2, &["10", "01", "11"]);
        assert!(f.is_frame());
        assert!(!f.is_parseval());
        assert_eq!(f.frame_operator(), SymmetricMatrix::from_strs(&["01", "10"]));
        let empty = Frame::new(2, vec![]).unwrap();
        assert!(!empty.is_frame());
        assert_eq!(empty.frame_operator(), SymmetricMatrix::zeros(2));
    }

    #[test]
    fn diagonal_examples() {
        assert!(Frame::standard_basis(3).self_diag().is_all_ones());
        let f1 = frame(&["1110100", "1010100", "0100100"]);
        assert_eq!(f1.self_diag(), AlphaVector::from_str_lit("0000100"));
        assert_eq!(f1.cross_gram_diag(&f1).unwrap(), f1.self_diag());
        assert!(f1.cross_gram_diag(&Frame::standard_basis(3)).is_err());
    }

    #[test]
    fn natural_dual_examples() {
        let b = Frame::standard_basis(3);
        assert_eq!(b.natural_dual().unwrap(), b);
        let f = cols(2, &["10", "01", "11"]);
        let g = f.natural_dual().unwrap();
        assert_eq!(g, cols(2, &["10", "01", "00"]));
        assert!(f.is_dual(&g).unwrap());
        let basis = cols(3, &["110", "011", "111"]);
        let g = basis.natural_dual().unwrap();
        assert!(basis.cross_gram_diag(&g).unwrap().is_all_ones());
        assert_eq!(
            cols(2, &["10", "10"]).natural_dual(),
            Err(Error::NotAFrame { dim: 2, rank: 1 })
        );
    }

    #[test]
    fn dual_space_small_example() {
        let f = cols(2, &["10", "01", "11"]);
        let space = f.dual_space().unwrap();
        assert_eq!(space.generators, vec![Gf2Vector::parse_bits("111").unwrap()]);
        assert_eq!(space.count(), Some(4));
        // Brute force over all 2^6 candidate sequences H.
        let mut brute = Vec::new();
        for w in 0..64u64 {
            let h = Frame::new(
                2,
                (0..3).map(|i| Gf2Vector::from_word(2, (w >> (2 * i)) & 3)).collect(),
            )
            .unwrap();
            if f.is_dual(&h).unwrap() {
                brute.push(h);
            }
        }
        let mut listed: Vec<Frame> = space.enumerate(false).unwrap().collect();
        let key = |h: &Frame| h.vectors().iter().map(Gf2Vector::to_bit_string).collect::<String>();
        listed.sort_by_key(key);
        brute.sort_by_key(key);
        assert_eq!(listed, brute);
    }

    #[test]
    fn basis_has_a_unique_dual() {
        let f = cols(3, &["110", "011", "111"]);
        let space = f.dual_space().unwrap();
        assert!(space.generators.is_empty());
        assert_eq!(space.count(), Some(1));
    }

    #[test]
    fn enumeration_guard() {
        let f = Frame::standard_basis(5).pad_zeros(5);
        let space = f.dual_space().unwrap();
        assert_eq!(space.count_exponent(), 25);
        assert!(matches!(space.enumerate(false), Err(Error::EnumerationGuard { .. })));
        assert!(space.enumerate(true).is_ok());
    }

    #[test]
    fn permutation_behaviour() {
        let f = frame(&["1100000", "1000000", "1111000"]);
        assert_eq!(f.permute(&[0, 1, 2, 3, 4, 5, 6]).unwrap(), f);
        let p = f.permute(&[6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(p.frame_operator(), f.frame_operator());
        assert!(f.permute(&[0, 1]).is_err());
        assert!(f.permute(&[0, 0, 1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn record_round_trip() {
        let f = cols(3, &["011", "101"]);
        let rec = f.to_record();
        assert_eq!(rec.k, 2);
        assert_eq!(Frame::from_record(&rec).unwrap(), f);
        let bad = FrameRecord {
            d: 3,
            k: 3,
            columns: rec.columns.clone(),
        };
        assert!(Frame::from_record(&bad).is_err());
    }
}
