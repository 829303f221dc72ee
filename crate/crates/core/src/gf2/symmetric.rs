//! Symmetric matrices over GF(2).

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// A square matrix with `M[i][j] = M[j][i]`, checked on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymmetricMatrix(Gf2Matrix);

impl SymmetricMatrix {
    pub fn new(m: Gf2Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self(m))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(Gf2Matrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(Gf2Matrix::identity(dim))
    }

    /// `J - I`: zero diagonal, ones everywhere else.
    pub fn ones_off_diagonal(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut r = Gf2Vector::all_ones(dim);
                r.flip(i);
                r
            })
            .collect();
        Self(Gf2Matrix::from_rows(dim, rows).expect("square"))
    }

    /// # Panics
    /// Panics if the literal is not symmetric; meant for tests and fixtures.
    pub fn from_strs(rows: &[&str]) -> Self {
        Self::new(Gf2Matrix::from_strs(rows)).expect("symmetric literal")
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Gf2Matrix {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.0.get(i, j)
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        self.0.row(i)
    }

    pub fn diag(&self) -> Gf2Vector {
        self.0.diag()
    }

    pub fn trace_mod2(&self) -> bool {
        self.0.trace_mod2()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Zero diagonal; equivalently `x* S x = 0` for every `x`.
    pub fn is_alternating(&self) -> bool {
        self.diag().is_zero()
    }

    /// `S_ii = 1` exactly when row `i` is odd.
    pub fn is_parity_indicative(&self) -> bool {
        (0..self.dim()).all(|i| self.get(i, i) == self.row(i).is_odd())
    }

    /// Number of symmetric `dim x dim` matrices, `2^(dim(dim+1)/2)`.
    pub fn count(dim: usize) -> u128 {
        1u128 << upper_bits(dim)
    }

    /// Decodes a matrix from its upper triangle packed row by row
    /// (`(0,0), (0,1), ..., (0,d-1), (1,1), ...`), least significant bit first.
    ///
    /// # Panics
    /// Panics if `dim(dim+1)/2 > 64`.
    pub fn from_upper_key(dim: usize, key: u64) -> Self {
        assert!(upper_bits(dim) <= 64, "dimension {dim} too large for a packed key");
        let mut m = Gf2Matrix::zeros(dim, dim);
        let mut bit = 0;
        for i in 0..dim {
            for j in i..dim {
                if (key >> bit) & 1 == 1 {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
                bit += 1;
            }
        }
        Self(m)
    }

    /// Inverse of [`from_upper_key`](Self::from_upper_key).
    pub fn upper_key(&self) -> u64 {
        let d = self.dim();
        assert!(upper_bits(d) <= 64, "dimension {d} too large for a packed key");
        let mut key = 0u64;
        let mut bit = 0;
        for i in 0..d {
            for j in i..d {
                if self.get(i, j) {
                    key |= 1 << bit;
                }
                bit += 1;
            }
        }
        key
    }
}

/// Bits in the packed upper triangle of a `dim x dim` symmetric matrix.
pub fn upper_bits(dim: usize) -> usize {
    dim * (dim + 1) / 2
}

impl TryFrom<Gf2Matrix> for SymmetricMatrix {
    type Error = Error;

    fn try_from(m: Gf2Matrix) -> Result<Self> {
        Self::new(m)
    }
}

impl AsRef<Gf2Matrix> for SymmetricMatrix {
    fn as_ref(&self) -> &Gf2Matrix {
        &self.0
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symmetric{:?}", self.0)
    }
}

impl fmt::Display for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
