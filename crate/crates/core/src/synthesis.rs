//! Frames with a prescribed frame operator, optionally with prescribed
//! vector parities.

use std::fmt;

use serde::Serialize;

use crate::dual::matching_permutation;
use crate::error::{Error, Result};
use crate::frame::{AlphaVector, Frame};
use crate::gf2::{Gf2Matrix, Gf2Vector, RowBasis, SymmetricMatrix};
use crate::symfactor::{lempel_blocks, minimal_factor};

/// Why a `(S, K, m)` request is or is not attainable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    #[serde(rename = "OK")]
    Ok,
    /// `m` and `Tr(S)` differ mod 2.
    ParityMismatch,
    /// `K` is below the minimal frame size.
    TooShort,
    /// Parity-indicative `S` at a length where every frame is all odd.
    MinimalForcesAllOdd,
    /// `S` is not parity indicative, so some vector must be even.
    #[serde(rename = "NotPIForbidsAllOdd")]
    NotPiForbidsAllOdd,
    /// A spanning set contains an odd vector.
    ZeroWeight,
}

impl Reason {
    pub fn name(self) -> &'static str {
        match self {
            Reason::Ok => "OK",
            Reason::ParityMismatch => "ParityMismatch",
            Reason::TooShort => "TooShort",
            Reason::MinimalForcesAllOdd => "MinimalForcesAllOdd",
            Reason::NotPiForbidsAllOdd => "NotPIForbidsAllOdd",
            Reason::ZeroWeight => "ZeroWeight",
        }
    }

    fn explanation(self) -> &'static str {
        match self {
            Reason::Ok => "attainable",
            Reason::ParityMismatch => "the number of odd vectors must have the parity of Tr(S)",
            Reason::TooShort => "K is below the minimal frame size for S",
            Reason::MinimalForcesAllOdd => {
                "S is parity indicative and every frame of this length consists of odd vectors"
            }
            Reason::NotPiForbidsAllOdd => {
                "S is not parity indicative, so at least one vector must be even"
            }
            Reason::ZeroWeight => "a spanning set must contain an odd vector",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub reason: Reason,
}

impl FeasibilityReport {
    pub fn from_reason(reason: Reason) -> Self {
        Self {
            feasible: reason == Reason::Ok,
            reason,
        }
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.reason.name(), self.reason.explanation())
    }
}

/// The invariants of `S` that decide feasibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OperatorProfile {
    pub dim: usize,
    pub rank: usize,
    pub trace: bool,
    pub alternating: bool,
    pub parity_indicative: bool,
}

impl OperatorProfile {
    pub fn of(s: &SymmetricMatrix) -> Self {
        Self {
            dim: s.dim(),
            rank: s.rank(),
            trace: s.trace_mod2(),
            alternating: s.is_alternating(),
            parity_indicative: s.is_parity_indicative(),
        }
    }

    pub fn min_frame_size(&self) -> usize {
        let d = self.dim;
        if self.rank < d {
            2 * d - self.rank
        } else if self.alternating {
            d + 1
        } else {
            d
        }
    }

    /// Whether every `K`-frame with this operator is forced to be all odd.
    fn forces_all_odd(&self, k: usize) -> bool {
        let d = self.dim;
        self.parity_indicative
            && ((self.rank == d && !self.alternating && k == d)
                || (self.alternating && self.rank + 1 == d && k == d + 1))
    }

    /// Feasibility of `m` odd vectors among `K`, for `m <= K`.
    pub fn check(&self, k: usize, m: usize) -> Reason {
        debug_assert!(m <= k);
        if k < self.min_frame_size() {
            Reason::TooShort
        } else if (m % 2 == 1) != self.trace {
            Reason::ParityMismatch
        } else if m == 0 {
            Reason::ZeroWeight
        } else if self.forces_all_odd(k) && m != k {
            Reason::MinimalForcesAllOdd
        } else if !self.parity_indicative && m == k {
            Reason::NotPiForbidsAllOdd
        } else {
            Reason::Ok
        }
    }
}

/// Fewest vectors in a frame with operator `S`.
pub fn min_frame_size(s: &SymmetricMatrix) -> usize {
    OperatorProfile::of(s).min_frame_size()
}

/// Whether some `K`-frame has operator `S` and exactly `m` odd vectors.
pub fn feasible(s: &SymmetricMatrix, k: usize, m: usize) -> Result<FeasibilityReport> {
    if s.dim() == 0 {
        return Err(Error::InvalidInput("S must be at least 1x1".into()));
    }
    if m > k {
        return Err(Error::InvalidInput(format!(
            "m = {m} exceeds the frame length K = {k}"
        )));
    }
    Ok(FeasibilityReport::from_reason(OperatorProfile::of(s).check(k, m)))
}

fn assert_frame_for(s: &SymmetricMatrix, vectors: &[Gf2Vector]) -> Frame {
    let f = Frame::new(s.dim(), vectors.to_vec()).expect("vectors have length d");
    assert_eq!(&f.frame_operator(), s, "constructed frame has the wrong operator");
    assert!(f.is_frame(), "constructed vectors do not span");
    f
}

/// The minimal construction: `min_frame_size(S)` vectors with operator `S`.
fn minimal_frame_matrix(s: &SymmetricMatrix) -> Gf2Matrix {
    let d = s.dim();
    let Ok(blocks) = lempel_blocks(s) else {
        return minimal_factor(s);
    };
    let r = blocks.rank();
    let a_l = minimal_factor(&blocks.l);
    let mut block = Gf2Matrix::zeros(d, 2 * d - r);
    for i in 0..r {
        for j in 0..a_l.cols() {
            block.set(i, j, a_l.get(i, j));
        }
    }
    if !blocks.l.is_alternating() {
        // [A_L 0; 0 B] with B the doubled standard basis of Z_2^(d-r).
        for i in 0..d - r {
            block.set(r + i, r + 2 * i, true);
            block.set(r + i, r + 2 * i + 1, true);
        }
    } else {
        // A_L has r + 1 columns. Row r is [1 ... 1 | 1 0 ... 0]; the rows
        // below carry a zero column and then doubled basis vectors.
        for j in 0..=r + 1 {
            block.set(r, j, true);
        }
        for i in 0..d - r - 1 {
            block.set(r + 1 + i, r + 2 + 2 * i, true);
            block.set(r + 1 + i, r + 3 + 2 * i, true);
        }
    }
    &blocks.v() * &block
}

/// A frame of length `K` with operator `S`: the minimal construction followed
/// by zero vectors.
pub fn frame_with_operator(s: &SymmetricMatrix, k: usize) -> Result<Frame> {
    let minimum = min_frame_size(s);
    if k < minimum {
        return Err(Error::TooShort { len: k, minimum });
    }
    let theta = minimal_frame_matrix(s);
    debug_assert_eq!(theta.cols(), minimum);
    Ok(assert_frame_for(s, &theta.pad_columns(k - minimum).columns()))
}

fn check_parity_of(v: &Gf2Vector, odd: bool, name: &str) -> Result<()> {
    if v.is_odd() != odd {
        return Err(Error::ParityViolation(format!(
            "{name} = {v} must be {}",
            if odd { "odd" } else { "even" }
        )));
    }
    Ok(())
}

fn check_lengths(vs: &[&Gf2Vector]) -> Result<()> {
    let n = vs[0].len();
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

/// One even and three odd vectors to three even and one odd, keeping the
/// span and the sum of outer products. Returns `(f1, f2, f3, p)`.
pub fn eoswap_up(
    e: &Gf2Vector,
    o1: &Gf2Vector,
    o2: &Gf2Vector,
    o3: &Gf2Vector,
) -> Result<[Gf2Vector; 4]> {
    check_lengths(&[e, o1, o2, o3])?;
    check_parity_of(e, false, "e")?;
    check_parity_of(o1, true, "o1")?;
    check_parity_of(o2, true, "o2")?;
    check_parity_of(o3, true, "o3")?;
    let s12 = o1 + o2;
    Ok([
        e + &s12,
        &(e + o1) + o3,
        &(e + o2) + o3,
        &s12 + o3,
    ])
}

/// Three even and one odd vector to one even and three odd. Returns
/// `(f, p1, p2, p3)`.
pub fn eoswap_down(
    e1: &Gf2Vector,
    e2: &Gf2Vector,
    e3: &Gf2Vector,
    o: &Gf2Vector,
) -> Result<[Gf2Vector; 4]> {
    check_lengths(&[e1, e2, e3, o])?;
    check_parity_of(e1, false, "e1")?;
    check_parity_of(e2, false, "e2")?;
    check_parity_of(e3, false, "e3")?;
    check_parity_of(o, true, "o")?;
    Ok([
        &(e1 + e2) + e3,
        &(e1 + e2) + o,
        &(e1 + e3) + o,
        &(e2 + e3) + o,
    ])
}

/// All-odd `K`-frame for a parity-indicative `S`.
///
/// Non-alternating `S`: the minimal factor has independent, hence odd,
/// columns. Alternating `S`: the minimal factor has even columns; append a
/// zero column and complement a row that depends on the others, which flips
/// every column to odd and raises the rank by one. Missing directions are
/// filled with doubled standard basis vectors and the remaining length with
/// doubled copies of the first vector.
fn all_odd_vectors(s: &SymmetricMatrix, k: usize) -> Vec<Gf2Vector> {
    let d = s.dim();
    let a = minimal_factor(s);
    let mut cols = if !s.is_alternating() {
        a.columns()
    } else {
        let b = a.pad_columns(1);
        let n = (0..d)
            .find(|&n| {
                let others: Vec<usize> = (0..d).filter(|&i| i != n).collect();
                b.select_rows(&others).rank() == b.rank()
            })
            .expect("rank < d leaves a dependent row");
        let mut cols = b.columns();
        for c in &mut cols {
            c.flip(n);
        }
        cols
    };
    assert!(cols.iter().all(Gf2Vector::is_odd), "all-odd base has an even column");
    let mut span = RowBasis::new(d);
    for c in &cols {
        span.insert(c.clone());
    }
    for i in 0..d {
        let e = Gf2Vector::standard_basis(d, i);
        if span.insert(e.clone()) {
            cols.push(e.clone());
            cols.push(e);
        }
    }
    assert!(cols.len() <= k && (k - cols.len()) % 2 == 0);
    let first = cols[0].clone();
    cols.resize(k, first);
    cols
}

/// Replaces a repeated pair `(v, v)` of the given parity by `(v + u, v + u)`
/// with `u` an odd vector elsewhere in the list; `u` lies in the span of the
/// rest, so the span is unchanged, and the pair still contributes nothing to
/// the operator.
fn flip_pair(vs: &mut [Gf2Vector], odd: bool) -> bool {
    for i in 0..vs.len() {
        if vs[i].is_odd() != odd {
            continue;
        }
        for j in i + 1..vs.len() {
            if vs[j] != vs[i] {
                continue;
            }
            if let Some(u) = (0..vs.len()).find(|&u| u != i && u != j && vs[u].is_odd()) {
                let w = &vs[i] + &vs[u];
                vs[i] = w.clone();
                vs[j] = w;
                return true;
            }
        }
    }
    false
}

/// Even indices with zero vectors first.
fn evens(vs: &[Gf2Vector]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vs.len()).filter(|&i| !vs[i].is_odd()).collect();
    idx.sort_by_key(|&i| (!vs[i].is_zero(), i));
    idx
}

fn odds(vs: &[Gf2Vector]) -> Vec<usize> {
    (0..vs.len()).filter(|&i| vs[i].is_odd()).collect()
}

/// Moves the odd count to `m` in steps of two. Parity swaps write their
/// outputs back into the input positions.
fn adjust_odd_count(mut vs: Vec<Gf2Vector>, m: usize) -> Option<Vec<Gf2Vector>> {
    loop {
        let (ev, od) = (evens(&vs), odds(&vs));
        let cur = od.len();
        if cur == m {
            return Some(vs);
        }
        if cur < m {
            if ev.len() >= 3 && !od.is_empty() {
                let (i, j, l, o) = (ev[0], ev[1], ev[2], od[od.len() - 1]);
                let [f, p1, p2, p3] = eoswap_down(&vs[i], &vs[j], &vs[l], &vs[o]).ok()?;
                vs[o] = f;
                vs[i] = p1;
                vs[j] = p2;
                vs[l] = p3;
            } else if !flip_pair(&mut vs, false) {
                return None;
            }
        } else if !ev.is_empty() && od.len() >= 3 {
            let (e, a, b, c) = (ev[0], od[0], od[1], od[2]);
            let [f1, f2, f3, p] = eoswap_up(&vs[e], &vs[a], &vs[b], &vs[c]).ok()?;
            vs[a] = f1;
            vs[b] = f2;
            vs[c] = f3;
            vs[e] = p;
        } else if !flip_pair(&mut vs, true) {
            return None;
        }
    }
}

/// A frame with operator `S` and `(f_i, f_i) = alpha[i]`, `K = alpha.len()`.
pub fn frame_with_operator_and_alpha(s: &SymmetricMatrix, alpha: &AlphaVector) -> Result<Frame> {
    let k = alpha.len();
    let m = alpha.weight();
    let report = feasible(s, k, m)?;
    if !report.feasible {
        return Err(Error::Infeasible(report));
    }
    let vectors = if m == k {
        all_odd_vectors(s, k)
    } else {
        let base = frame_with_operator(s, k)?.into_vectors();
        adjust_odd_count(base, m)
            .or_else(|| {
                s.is_parity_indicative()
                    .then(|| adjust_odd_count(all_odd_vectors(s, k), m))
                    .flatten()
            })
            .unwrap_or_else(|| panic!("no parity adjustment reaches m = {m} for K = {k}"))
    };
    let frame = assert_frame_for(s, &vectors);
    let perm = matching_permutation(&frame.self_diag(), alpha);
    let frame = frame.permute(&perm).expect("valid permutation");
    assert_eq!(&frame.self_diag(), alpha, "constructed frame misses alpha");
    Ok(frame)
}
