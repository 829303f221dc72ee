//! Dense row-major matrices over GF(2).
//!
//! Every matrix stores its rows as [`Gf2Vector`]s, so row operations are word-wise
//! XORs. Elimination always pivots on the leftmost remaining column and, within
//! it, the topmost available row; all results are deterministic.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vector>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub reduced: Gf2Matrix,
    /// `pivots[i]` is the pivot column of row `i` of `reduced`.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| Gf2Vector::standard_basis(n, i)).collect(),
        }
    }

    /// Builds a matrix from its rows. `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a `rows x columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Gf2Vector]) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: bad.len(),
            });
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in c.ones() {
                m.data[i].set(j, true);
            }
        }
        Ok(m)
    }

    /// Parses rows given as `{0,1}` strings.
    ///
    /// # Panics
    /// Panics on malformed input; meant for literals in tests and fixtures.
    pub fn from_strs(rows: &[&str]) -> Self {
        let parsed: Vec<Gf2Vector> = rows
            .iter()
            .map(|r| Gf2Vector::parse_bits(r).expect("bit string"))
            .collect();
        let cols = parsed.first().map_or(0, Gf2Vector::len);
        Self::from_rows(cols, parsed).expect("ragged rows")
    }

    /// The outer product `u v*`.
    pub fn outer(u: &Gf2Vector, v: &Gf2Vector) -> Self {
        let data = (0..u.len())
            .map(|i| {
                if u.get(i) {
                    v.clone()
                } else {
                    Gf2Vector::zeros(v.len())
                }
            })
            .collect();
        Self {
            rows: u.len(),
            cols: v.len(),
            data,
        }
    }

    /// Square matrix with `diag` on the diagonal.
    pub fn diagonal(diag: &Gf2Vector) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for i in diag.ones() {
            m.data[i].set(i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[Gf2Vector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<Gf2Vector> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        assert!(j < self.cols, "column {j} out of range (cols={})", self.cols);
        let mut c = Gf2Vector::zeros(self.rows);
        for (i, r) in self.data.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn columns(&self) -> Vec<Gf2Vector> {
        self.transpose().into_rows()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for j in r.ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `self * other`; row `i` of the product is the XOR of the rows of `other`
    /// selected by the ones in row `i` of `self`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = Gf2Vector::zeros(other.cols);
                for k in r.ones() {
                    acc += &other.data[k];
                }
                acc
            })
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(self.cols, v.len(), "mul_vec: length mismatch");
        let mut out = Gf2Vector::zeros(self.rows);
        for (i, r) in self.data.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// `self * self*`, the Gram matrix of the rows.
    pub fn gram_of_rows(&self) -> Self {
        let mut g = Self::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                if self.data[i].dot(&self.data[j]) {
                    g.data[i].set(j, true);
                    g.data[j].set(i, true);
                }
            }
        }
        g
    }

    pub fn diag(&self) -> Gf2Vector {
        let n = self.rows.min(self.cols);
        Gf2Vector::from_support(n, (0..n).filter(|&i| self.get(i, i)))
    }

    /// Trace reduced mod 2.
    pub fn trace_mod2(&self) -> bool {
        self.diag().parity().is_odd()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Gf2Vector::is_zero)
    }

    /// Reduced row echelon form, leftmost-column / topmost-row pivoting.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == m.len() {
                break;
            }
            let Some(p) = (next..m.len()).find(|&i| m[i].get(col)) else {
                continue;
            };
            m.swap(next, p);
            let pivot_row = m[next].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != next && row.get(col) {
                    *row += &pivot_row;
                }
            }
            pivots.push(col);
            next += 1;
        }
        Echelon {
            reduced: Self {
                rows: self.rows,
                cols: self.cols,
                data: m,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminate on whichever side is shorter; the result is the same.
        if self.cols < self.rows {
            return self.transpose().rank();
        }
        let mut basis = RowBasis::new(self.cols);
        for r in &self.data {
            basis.insert(r.clone());
        }
        basis.rank()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let p = (col..n).find(|&i| a[i].get(col)).ok_or(Error::Singular)?;
            a.swap(col, p);
            inv.swap(col, p);
            let (pa, pi) = (a[col].clone(), inv[col].clone());
            for i in 0..n {
                if i != col && a[i].get(col) {
                    a[i] += &pa;
                    inv[i] += &pi;
                }
            }
        }
        Ok(Self {
            rows: n,
            cols: n,
            data: inv,
        })
    }

    /// A basis of `{x : M x = 0}`, one vector per free column in ascending order.
    pub fn nullspace_basis(&self) -> Vec<Gf2Vector> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = Gf2Vector::standard_basis(self.cols, f);
                for (i, &p) in ech.pivots.iter().enumerate() {
                    if ech.reduced.get(i, f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }

    /// Leftmost greedy maximal set of linearly independent columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.echelon().pivots
    }

    /// Leftmost greedy maximal set of linearly independent rows.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut basis = RowBasis::new(self.cols);
        (0..self.rows)
            .filter(|&i| basis.insert(self.data[i].clone()))
            .collect()
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.cols)?;
        Ok(self.select_columns(perm))
    }

    /// Row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.rows)?;
        Ok(self.select_rows(perm))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let data = self
            .data
            .iter()
            .map(|r| Gf2Vector::from_support(idx.len(), (0..idx.len()).filter(|&j| r.get(idx[j]))))
            .collect();
        Self {
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self {
            rows: idx.len(),
            cols: self.cols,
            data: idx.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Appends `extra` zero columns.
    pub fn pad_columns(&self, extra: usize) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols + extra,
            data: self.data.iter().map(|r| r.extend_zeros(extra)).collect(),
        }
    }

    /// The permutation matrix `P` with rows `e_{perm[0]}*, e_{perm[1]}*, ...`,
    /// so that `P M` reorders the rows of `M` by `perm`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        check_permutation(perm, perm.len())?;
        let n = perm.len();
        Ok(Self {
            rows: n,
            cols: n,
            data: perm.iter().map(|&p| Gf2Vector::standard_basis(n, p)).collect(),
        })
    }

    /// Rows as `{0,1}` strings, one per line, each terminated by a newline.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.data {
            s.push_str(&r.to_bit_string());
            s.push('\n');
        }
        s
    }
}

impl Mul for &Gf2Matrix {
    type Output = Gf2Matrix;

    /// # Panics
    /// Panics on non-conformable shapes; use [`Gf2Matrix::try_mul`] to get an error.
    fn mul(self, rhs: &Gf2Matrix) -> Gf2Matrix {
        self.try_mul(rhs).expect("matrix product: non-conformable shapes")
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub(crate) fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    if perm.len() != len {
        return Err(Error::InvalidPermutation { len });
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || seen[p] {
            return Err(Error::InvalidPermutation { len });
        }
        seen[p] = true;
    }
    Ok(())
}

/// Incrementally maintained echelon basis of a row space.
#[derive(Debug, Clone)]
pub struct RowBasis {
    len: usize,
    /// Basis rows, each with a distinct leading coordinate.
    rows: Vec<(usize, Gf2Vector)>,
}

impl RowBasis {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: Gf2Vector) -> Gf2Vector {
        assert_eq!(v.len(), self.len, "RowBasis: length mismatch");
        for (lead, b) in &self.rows {
            if v.get(*lead) {
                v += b;
            }
        }
        v
    }

    pub fn contains(&self, v: &Gf2Vector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the basis; returns whether it was independent.
    pub fn insert(&mut self, v: Gf2Vector) -> bool {
        let r = self.reduce(v);
        match r.first_one() {
            None => false,
            Some(lead) => {
                self.rows.push((lead, r));
                true
            }
        }
    }
}
