//! Attainability catalogs.
//!
//! For each symmetric `S` and length `K`, the attainable set is the set of odd
//! counts `m` for which some `K`-frame has operator `S` and exactly `m` odd
//! vectors. A catalog counts, per `K`, how many `S` share each attainable set.
//!
//! [`generate_table`] derives the sets from the feasibility predicate;
//! [`brute_force_table`] enumerates multisets of vectors and shares no code
//! with the synthesis modules. [`cross_validate`] compares them per matrix.

mod oracle;
mod table;
mod theory;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{upper_bits, SymmetricMatrix};

pub use oracle::{brute_force_map, brute_force_table, multiset_count, OracleOptions, DEFAULT_BUDGET};
pub use table::{AttainabilityTable, TableCell, TableColumn};
pub use theory::{attainable_set, generate_table, theory_map};

/// Largest dimension the catalog enumerates.
pub const MAX_DIM: usize = 6;

/// A set of odd counts, stored as a bitmask (`m <= 63`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AttainSet(pub u64);

impl AttainSet {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn from_weights<I: IntoIterator<Item = usize>>(ms: I) -> Self {
        Self(ms.into_iter().fold(0, |acc, m| acc | 1 << m))
    }

    pub fn contains(self, m: usize) -> bool {
        m < 64 && (self.0 >> m) & 1 == 1
    }

    pub fn insert(&mut self, m: usize) {
        self.0 |= 1 << m;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn smallest(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn weights(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&m| (self.0 >> m) & 1 == 1)
    }

    /// Space separated inside braces, as in the CSV output: `{1 3 5}`.
    pub fn to_csv_label(self) -> String {
        let inner: Vec<String> = self.weights().map(|m| m.to_string()).collect();
        format!("{{{}}}", inner.join(" "))
    }
}

/// Rows sort by set size, then by smallest element (then lexicographically).
impl Ord for AttainSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.weights().cmp(other.weights()))
    }
}

impl PartialOrd for AttainSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AttainSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.weights().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", inner.join(", "))
    }
}

impl Serialize for AttainSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.weights())
    }
}

/// Attainable sets of every `d x d` symmetric matrix at one length `K`,
/// indexed by [`SymmetricMatrix::upper_key`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttainabilityMap {
    pub d: usize,
    pub k: usize,
    pub sets: Vec<AttainSet>,
}

impl AttainabilityMap {
    pub fn get(&self, s: &SymmetricMatrix) -> AttainSet {
        self.sets[s.upper_key() as usize]
    }
}

pub(crate) fn check_dim(d: usize) -> Result<()> {
    if d == 0 || d > MAX_DIM {
        return Err(Error::InvalidInput(format!(
            "catalog dimension must be in 1..={MAX_DIM}, got {d}"
        )));
    }
    Ok(())
}

pub(crate) fn check_k_range(kmin: usize, kmax: usize) -> Result<()> {
    if kmin == 0 || kmin > kmax || kmax > 63 {
        return Err(Error::InvalidInput(format!(
            "need 1 <= kmin <= kmax <= 63, got {kmin}..={kmax}"
        )));
    }
    Ok(())
}

pub(crate) fn matrix_count(d: usize) -> usize {
    1usize << upper_bits(d)
}

/// First disagreement between the theory and the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MismatchWitness {
    pub s: SymmetricMatrix,
    pub k: usize,
    pub m: usize,
    pub theory: bool,
    pub search: bool,
}

impl fmt::Display for MismatchWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .s
            .matrix()
            .row_vectors()
            .iter()
            .map(|r| r.to_bit_string())
            .collect();
        write!(
            f,
            "S = [{}], K = {}, m = {}: theory says {}, exhaustive search says {}",
            rows.join(";"),
            self.k,
            self.m,
            if self.theory { "attainable" } else { "unattainable" },
            if self.search { "attainable" } else { "unattainable" },
        )
    }
}

/// Summary of a successful cross-validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub d: usize,
    pub kmin: usize,
    pub kmax: usize,
    /// Number of `(S, K)` pairs compared.
    pub cells: usize,
    pub theory: AttainabilityTable,
}

/// Compares the theory and the exhaustive search matrix by matrix.
pub fn cross_validate(d: usize, kmin: usize, kmax: usize, opts: &OracleOptions) -> Result<CrossValidation> {
    check_dim(d)?;
    check_k_range(kmin, kmax)?;
    let mut cells = 0;
    let mut columns = Vec::new();
    for k in kmin..=kmax {
        let theory = theory_map(d, k)?;
        let search = brute_force_map(d, k, opts)?;
        for (key, (t, s)) in theory.sets.iter().zip(&search.sets).enumerate() {
            if t != s {
                let m = (t.0 ^ s.0).trailing_zeros() as usize;
                return Err(Error::Mismatch(Box::new(MismatchWitness {
                    s: SymmetricMatrix::from_upper_key(d, key as u64),
                    k,
                    m,
                    theory: t.contains(m),
                    search: s.contains(m),
                })));
            }
        }
        cells += theory.sets.len();
        columns.push(TableColumn::from_map(&theory));
    }
    Ok(CrossValidation {
        d,
        kmin,
        kmax,
        cells,
        theory: AttainabilityTable { d, columns },
    })
}
