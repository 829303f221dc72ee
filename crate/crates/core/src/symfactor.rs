//! Symmetric matrices over GF(2): congruence classification, minimal
//! factorization `S = A A*`, and the block decomposition for singular `S`.
//!
//! Minimal factors come from a congruence normal form rather than a direct
//! column reduction. A symmetric `S` of rank `r` is congruent to `I_r + 0` when
//! its diagonal is nonzero and to `H + ... + H + 0` (with `H = [01;10]`) when
//! it is alternating. The first case factors with `r` columns, the second needs
//! `r + 1`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector, SymmetricMatrix};

/// Whether `S` has a nonzero diagonal or is alternating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CongruenceKind {
    NonAlternating,
    Alternating,
}

/// `S = T C T*` with `T` invertible and `C` canonical for `kind` and `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceDecomposition {
    pub t: Gf2Matrix,
    pub kind: CongruenceKind,
    pub rank: usize,
}

impl CongruenceDecomposition {
    /// The canonical form `C`: `I_r + 0`, or `r/2` hyperbolic blocks `+ 0`.
    pub fn canonical(&self) -> Gf2Matrix {
        let d = self.t.rows();
        canonical_form(d, self.kind, self.rank)
    }
}

fn canonical_form(dim: usize, kind: CongruenceKind, rank: usize) -> Gf2Matrix {
    let mut c = Gf2Matrix::zeros(dim, dim);
    match kind {
        CongruenceKind::NonAlternating => {
            for i in 0..rank {
                c.set(i, i, true);
            }
        }
        CongruenceKind::Alternating => {
            for b in (0..rank).step_by(2) {
                c.set(b, b + 1, true);
                c.set(b + 1, b, true);
            }
        }
    }
    c
}

/// `S = P* T [L 0; 0 0] T* P` for singular `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LempelBlocks {
    /// Row `i` of `P` is `e_{perm[i]}*`.
    pub perm: Vec<usize>,
    pub p: Gf2Matrix,
    pub t: Gf2Matrix,
    /// Nonsingular `r x r` leading block.
    pub l: SymmetricMatrix,
}

impl LempelBlocks {
    pub fn rank(&self) -> usize {
        self.l.dim()
    }

    /// `V = P* T`, so that `S = V [L 0; 0 0] V*`.
    pub fn v(&self) -> Gf2Matrix {
        &self.p.transpose() * &self.t
    }
}

pub fn is_alternating(s: &Gf2Matrix) -> Result<bool> {
    Ok(SymmetricMatrix::new(s.clone())?.is_alternating())
}

pub fn is_parity_indicative(s: &Gf2Matrix) -> Result<bool> {
    Ok(SymmetricMatrix::new(s.clone())?.is_parity_indicative())
}

/// Working state for symmetric elimination: `w = e S e*` throughout.
struct Congruence {
    w: Vec<Gf2Vector>,
    e: Vec<Gf2Vector>,
}

impl Congruence {
    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.w.swap(a, b);
        for row in &mut self.w {
            let (x, y) = (row.get(a), row.get(b));
            row.set(a, y);
            row.set(b, x);
        }
        self.e.swap(a, b);
    }

    /// Basis vector `b` becomes `b + a`.
    fn add(&mut self, from: usize, to: usize) {
        let src = self.w[from].clone();
        self.w[to] += &src;
        for row in &mut self.w {
            if row.get(from) {
                row.flip(to);
            }
        }
        let src = self.e[from].clone();
        self.e[to] += &src;
    }
}

/// Deterministic congruence normal form of `S`.
///
/// Diagonal pivots are taken first (leftmost), then hyperbolic pairs (first
/// nonzero entry in row-major order). Once no diagonal one remains the rest
/// of the working block stays alternating, so the form is `I_a + H^b + 0`.
/// When both kinds occur each `H + I_1` is rewritten as `I_3`.
pub fn congruence_canonical(s: &SymmetricMatrix) -> CongruenceDecomposition {
    let d = s.dim();
    let mut st = Congruence {
        w: s.matrix().row_vectors().to_vec(),
        e: Gf2Matrix::identity(d).into_rows(),
    };
    let mut p = 0;
    let mut ones = 0;
    while let Some(i) = (p..d).find(|&i| st.w[i].get(i)) {
        st.swap(p, i);
        for k in p + 1..d {
            if st.w[k].get(p) {
                st.add(p, k);
            }
        }
        p += 1;
        ones += 1;
    }
    let mut pairs = 0;
    loop {
        let hit = (p..d).find_map(|i| (i + 1..d).find(|&j| st.w[i].get(j)).map(|j| (i, j)));
        let Some((i, j)) = hit else { break };
        st.swap(p, i);
        st.swap(p + 1, j);
        for k in p + 2..d {
            if st.w[k].get(p) {
                st.add(p + 1, k);
            }
            if st.w[k].get(p + 1) {
                st.add(p, k);
            }
        }
        p += 2;
        pairs += 1;
    }
    let rank = ones + 2 * pairs;
    let kind = if ones > 0 {
        // e_a (a unit vector) and a hyperbolic pair e_b, e_{b+1} give the
        // orthonormal triple e_b + e_a, e_{b+1} + e_a, e_b + e_{b+1} + e_a.
        for b in (ones..rank).step_by(2) {
            let a = st.e[0].clone();
            let (x, y) = (st.e[b].clone(), st.e[b + 1].clone());
            st.e[0] = &(&x + &y) + &a;
            st.e[b] = &x + &a;
            st.e[b + 1] = &y + &a;
        }
        CongruenceKind::NonAlternating
    } else {
        CongruenceKind::Alternating
    };
    let e = Gf2Matrix::from_rows(d, st.e).expect("rows have length d");
    let t = e.inverse().expect("elimination steps are invertible");
    let out = CongruenceDecomposition { t, kind, rank };
    debug_assert_eq!(
        &(&out.t * &out.canonical()) * &out.t.transpose(),
        *s.matrix(),
        "congruence does not reproduce S"
    );
    out
}

/// `E_k`, a `2k x (2k+1)` matrix with `E_k E_k* = H + ... + H` (`k` blocks).
fn hyperbolic_factor(k: usize) -> Gf2Matrix {
    static CACHE: OnceLock<Mutex<HashMap<usize, Gf2Matrix>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().unwrap().get(&k) {
        return e.clone();
    }
    let n = 2 * k;
    // Rows e_i + e_{n+1} factor J - I; pull them back through J - I = T' H^k T'*.
    let e0 = Gf2Matrix::from_rows(
        n + 1,
        (0..n).map(|i| Gf2Vector::from_support(n + 1, [i, n])).collect(),
    )
    .expect("rows have length n + 1");
    let dec = congruence_canonical(&SymmetricMatrix::ones_off_diagonal(n));
    assert_eq!(dec.kind, CongruenceKind::Alternating);
    assert_eq!(dec.rank, n);
    let ek = &dec.t.inverse().expect("invertible") * &e0;
    assert_eq!(
        &ek * &ek.transpose(),
        canonical_form(n, CongruenceKind::Alternating, n),
        "hyperbolic factor is wrong"
    );
    cache.lock().unwrap().entry(k).or_insert(ek).clone()
}

/// Number of columns of a minimal factor: `rank`, plus one when alternating
/// (including the zero matrix).
pub fn minimal_columns(s: &SymmetricMatrix) -> usize {
    s.rank() + usize::from(s.is_alternating())
}

/// `A` with `A A* = S`, `rank(A) = rank(S)` and [`minimal_columns`] columns.
/// The zero matrix gets a single zero column.
pub fn minimal_factor(s: &SymmetricMatrix) -> Gf2Matrix {
    let d = s.dim();
    let dec = congruence_canonical(s);
    let r = dec.rank;
    let a = if r == 0 {
        Gf2Matrix::zeros(d, 1)
    } else {
        let lead: Vec<usize> = (0..r).collect();
        let t_r = dec.t.select_columns(&lead);
        match dec.kind {
            CongruenceKind::NonAlternating => t_r,
            CongruenceKind::Alternating => &t_r * &hyperbolic_factor(r / 2),
        }
    };
    assert_eq!(&a * &a.transpose(), *s.matrix(), "minimal factor is wrong");
    a
}

/// The minimal factor padded with zero columns up to `n`.
pub fn factor_with_columns(s: &SymmetricMatrix, n: usize) -> Result<Gf2Matrix> {
    let minimum = minimal_columns(s);
    if n < minimum {
        return Err(Error::TooFewColumns {
            requested: n,
            minimum,
        });
    }
    Ok(minimal_factor(s).pad_columns(n - minimum))
}

/// Block decomposition of a singular `S`.
///
/// `P` moves the leftmost greedy independent rows of `S` to the top, `L` is
/// the principal block on those rows and `T = [I 0; X I]` with `X = M* L^-1`,
/// where `M` is the block to the right of `L`.
pub fn lempel_blocks(s: &SymmetricMatrix) -> Result<LempelBlocks> {
    let d = s.dim();
    let lead = s.matrix().independent_rows();
    let r = lead.len();
    if r == d {
        return Err(Error::FullRank);
    }
    let mut perm = lead.clone();
    perm.extend((0..d).filter(|i| !lead.contains(i)));
    let p = Gf2Matrix::permutation(&perm)?;
    let moved = &(&p * s.matrix()) * &p.transpose();
    let head: Vec<usize> = (0..r).collect();
    let tail: Vec<usize> = (r..d).collect();
    let l = moved.select_rows(&head).select_columns(&head);
    let m = moved.select_rows(&head).select_columns(&tail);
    let x = &m.transpose() * &l.inverse().expect("leading block is nonsingular");
    let mut t = Gf2Matrix::identity(d);
    for (i, row) in tail.iter().enumerate() {
        for j in 0..r {
            t.set(*row, j, x.get(i, j));
        }
    }
    let l = SymmetricMatrix::new(l).expect("principal block of a symmetric matrix");
    let blocks = LempelBlocks { perm, p, t, l };
    let mut c = Gf2Matrix::zeros(d, d);
    for i in 0..r {
        for j in 0..r {
            c.set(i, j, blocks.l.get(i, j));
        }
    }
    let v = blocks.v();
    assert_eq!(&(&v * &c) * &v.transpose(), *s.matrix(), "block decomposition is wrong");
    Ok(blocks)
}
