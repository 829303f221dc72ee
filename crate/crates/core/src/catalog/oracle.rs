//! Exhaustive search over multisets of vectors.
//!
//! The operator of a multiset depends only on which vectors occur an odd
//! number of times, and the odd count only on the multiplicities of odd
//! vectors, so multisets (not sequences) are enough. Vectors of Z_2^d are the
//! integers `0..2^d`; the search carries the packed key of the operator, the
//! odd count and an echelon basis of the span.

use rayon::prelude::*;

use super::{check_dim, check_k_range, matrix_count, AttainSet, AttainabilityMap, AttainabilityTable, TableColumn};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector, SymmetricMatrix};

/// Default cap on the number of multisets a single `K` may require.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub budget: u128,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            jobs: None,
        }
    }
}

/// `C(2^d + K - 1, K)`, saturating.
pub fn multiset_count(d: usize, k: usize) -> u128 {
    let n = 1u128 << d;
    let mut c: u128 = 1;
    for i in 1..=k as u128 {
        c = match c.checked_mul(n - 1 + i) {
            Some(x) => x / i,
            None => return u128::MAX,
        };
    }
    c
}

/// Echelon basis indexed by leading bit.
#[derive(Clone, Copy)]
struct Span {
    rows: [u64; 8],
    rank: usize,
}

impl Span {
    fn insert(&mut self, mut x: u64) {
        while x != 0 {
            let h = 63 - x.leading_zeros() as usize;
            if self.rows[h] == 0 {
                self.rows[h] = x;
                self.rank += 1;
                return;
            }
            x ^= self.rows[h];
        }
    }
}

struct Search<'a> {
    d: usize,
    outer: &'a [u32],
    odd: &'a [bool],
    sets: Vec<u64>,
}

impl Search<'_> {
    fn n(&self) -> usize {
        self.outer.len()
    }

    /// Chooses multiplicities for vectors `i..`, with `rem` slots left.
    fn run(&mut self, i: usize, rem: usize, key: u32, m: usize, span: Span) {
        if rem == 0 {
            if span.rank == self.d {
                self.sets[key as usize] |= 1 << m;
            }
            return;
        }
        let left = self.n() - i;
        if left == 0 || span.rank + rem.min(left) < self.d {
            return;
        }
        let lo = if left == 1 { rem } else { 0 };
        for c in lo..=rem {
            if c == 0 {
                self.run(i + 1, rem, key, m, span);
            } else {
                self.take(i, c, rem, key, m, span);
            }
        }
    }

    fn take(&mut self, i: usize, c: usize, rem: usize, key: u32, m: usize, mut span: Span) {
        span.insert(i as u64);
        let key = if c % 2 == 1 { key ^ self.outer[i] } else { key };
        let m = if self.odd[i] { m + c } else { m };
        self.run(i + 1, rem - c, key, m, span);
    }
}

fn search_map(d: usize, k: usize) -> AttainabilityMap {
    let n = 1usize << d;
    let vectors: Vec<Gf2Vector> = (0..n as u64).map(|w| Gf2Vector::from_word(d, w)).collect();
    let outer: Vec<u32> = vectors
        .iter()
        .map(|v| {
            let s = SymmetricMatrix::new(Gf2Matrix::outer(v, v)).expect("outer products are symmetric");
            s.upper_key() as u32
        })
        .collect();
    let odd: Vec<bool> = vectors.iter().map(Gf2Vector::is_odd).collect();
    let size = matrix_count(d);
    // Work item (i, c): the smallest vector used is i, with multiplicity c.
    let tasks: Vec<(usize, usize)> = (0..n).flat_map(|i| (1..=k).map(move |c| (i, c))).collect();
    let merged = tasks
        .par_iter()
        .fold(
            || vec![0u64; size],
            |acc, &(i, c)| {
                let mut s = Search {
                    d,
                    outer: &outer,
                    odd: &odd,
                    sets: acc,
                };
                s.take(i, c, k, 0, 0, Span { rows: [0; 8], rank: 0 });
                s.sets
            },
        )
        .reduce(
            || vec![0u64; size],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x |= y;
                }
                a
            },
        );
    AttainabilityMap {
        d,
        k,
        sets: merged.into_iter().map(AttainSet).collect(),
    }
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidInput(format!("cannot start {j} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn check_budget(d: usize, k: usize, opts: &OracleOptions) -> Result<()> {
    let multisets = multiset_count(d, k);
    if multisets > opts.budget {
        return Err(Error::ResourceGuard {
            multisets,
            budget: opts.budget,
        });
    }
    Ok(())
}

/// Attainable sets of every symmetric matrix at length `K`, by exhaustive search.
pub fn brute_force_map(d: usize, k: usize, opts: &OracleOptions) -> Result<AttainabilityMap> {
    check_dim(d)?;
    check_k_range(k, k)?;
    check_budget(d, k, opts)?;
    in_pool(opts.jobs, || search_map(d, k))
}

/// Catalog for `K = kmin..=kmax` by exhaustive search. The budget applies to
/// each `K` and is checked for all of them before any work starts.
pub fn brute_force_table(d: usize, kmin: usize, kmax: usize, opts: &OracleOptions) -> Result<AttainabilityTable> {
    check_dim(d)?;
    check_k_range(kmin, kmax)?;
    for k in kmin..=kmax {
        check_budget(d, k, opts)?;
    }
    let columns = in_pool(opts.jobs, || {
        (kmin..=kmax)
            .map(|k| TableColumn::from_map(&search_map(d, k)))
            .collect()
    })?;
    Ok(AttainabilityTable { d, columns })
}
