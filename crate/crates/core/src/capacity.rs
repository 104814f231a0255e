//! Star- and top-capacities and the local simplex dimension.
//!
//! `s(λ)` is the largest number of addable corners admissibly paired with a
//! single removable corner, `t(λ)` the largest number of removable corners
//! paired with a single addable corner, and `dim_loc(λ) = max(s, t)`.

use serde::Serialize;

use crate::error::Result;
use crate::partition::{Corner, Partition};
use crate::transfer::{admissible_transfers, check_addable, check_removable, move_cell};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapacityRecord {
    pub partition: Partition,
    pub s: u32,
    pub t: u32,
    pub dim_loc: u32,
}

/// Addable corners `a` for which the transfer from `c` is admissible.
pub fn a_max_set(lambda: &Partition, c: Corner) -> Result<Vec<Corner>> {
    check_removable(lambda, c)?;
    Ok(lambda
        .addable_corners()
        .into_iter()
        .filter(|a| move_cell(lambda, c.row as usize, a.row as usize).is_some())
        .collect())
}

/// Removable corners `c` for which the transfer to `a` is admissible.
pub fn c_max_set(lambda: &Partition, a: Corner) -> Result<Vec<Corner>> {
    check_addable(lambda, a)?;
    Ok(lambda
        .removable_corners()
        .into_iter()
        .filter(|c| move_cell(lambda, c.row as usize, a.row as usize).is_some())
        .collect())
}

pub fn star_capacity(lambda: &Partition) -> u32 {
    capacity_record(lambda).s
}

pub fn top_capacity(lambda: &Partition) -> u32 {
    capacity_record(lambda).t
}

pub fn local_dim(lambda: &Partition) -> u32 {
    capacity_record(lambda).dim_loc
}

/// Computes `s` and `t` from one pass over the admissible transfers,
/// tallying per removable corner and per addable corner at once.
pub fn capacity_record(lambda: &Partition) -> CapacityRecord {
    let removable = lambda.removable_corners();
    let addable = lambda.addable_corners();
    let mut per_c = vec![0u32; removable.len()];
    let mut per_a = vec![0u32; addable.len()];
    for tr in admissible_transfers(lambda) {
        // Corner lists are in increasing row order, so rows locate the slot.
        let ci = removable.binary_search_by_key(&tr.c.row, |c| c.row).unwrap();
        let ai = addable.binary_search_by_key(&tr.a.row, |a| a.row).unwrap();
        per_c[ci] += 1;
        per_a[ai] += 1;
    }
    let s = per_c.into_iter().max().unwrap_or(0);
    let t = per_a.into_iter().max().unwrap_or(0);
    CapacityRecord {
        partition: lambda.clone(),
        s,
        t,
        dim_loc: s.max(t),
    }
}
