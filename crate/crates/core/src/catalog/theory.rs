use rayon::prelude::*;

use super::{check_dim, check_k_range, matrix_count, AttainSet, AttainabilityMap, AttainabilityTable, TableColumn};
use crate::error::Result;
use crate::gf2::SymmetricMatrix;
use crate::synthesis::{feasible, OperatorProfile, Reason};

/// `{ m : feasible(S, K, m) }`.
pub fn attainable_set(s: &SymmetricMatrix, k: usize) -> Result<AttainSet> {
    let mut set = AttainSet::empty();
    for m in 0..=k {
        if feasible(s, k, m)?.feasible {
            set.insert(m);
        }
    }
    Ok(set)
}

fn profiles(d: usize) -> Vec<OperatorProfile> {
    (0..matrix_count(d) as u64)
        .into_par_iter()
        .map(|key| OperatorProfile::of(&SymmetricMatrix::from_upper_key(d, key)))
        .collect()
}

fn map_from_profiles(d: usize, k: usize, profiles: &[OperatorProfile]) -> AttainabilityMap {
    let sets = profiles
        .iter()
        .map(|p| AttainSet::from_weights((0..=k).filter(|&m| p.check(k, m) == Reason::Ok)))
        .collect();
    AttainabilityMap { d, k, sets }
}

/// Attainable sets of every symmetric matrix at length `K`, from the theory.
pub fn theory_map(d: usize, k: usize) -> Result<AttainabilityMap> {
    check_dim(d)?;
    check_k_range(k, k)?;
    Ok(map_from_profiles(d, k, &profiles(d)))
}

/// Catalog for `K = kmin..=kmax` from the feasibility predicate.
pub fn generate_table(d: usize, kmin: usize, kmax: usize) -> Result<AttainabilityTable> {
    check_dim(d)?;
    check_k_range(kmin, kmax)?;
    let profiles = profiles(d);
    let columns = (kmin..=kmax)
        .map(|k| TableColumn::from_map(&map_from_profiles(d, k, &profiles)))
        .collect();
    Ok(AttainabilityTable { d, columns })
}
