//! First appearance of each layer value as `n` grows, and comparison with
//! the one-cell extensions of staircases.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::capacity::CapacityRecord;
use crate::error::{AtlasError, Result};
use crate::partition::{staircase_family, Partition};
use crate::strata::layer_assignment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum OccurrenceStatus {
    Found { n_first: u32 },
    NotFoundBelow { n_max: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstOccurrenceRecord {
    pub r: u32,
    #[serde(flatten)]
    pub status: OccurrenceStatus,
    /// `F_r` in enumeration order; empty when not found.
    pub members: Vec<Partition>,
    /// `(s, t)` of each member, same order, so star-first and top-first
    /// mechanisms can be told apart.
    pub member_capacities: Vec<CapacityRecord>,
    pub staircase_match: bool,
    pub conjugation_closed: bool,
}

impl FirstOccurrenceRecord {
    pub fn n_first(&self) -> Option<u32> {
        match self.status {
            OccurrenceStatus::Found { n_first } => Some(n_first),
            OccurrenceStatus::NotFoundBelow { .. } => None,
        }
    }
}

fn is_conjugation_closed(members: &[Partition]) -> bool {
    let set: BTreeSet<&Partition> = members.iter().collect();
    members.iter().all(|l| set.contains(&l.conjugate()))
}

/// Scans `n = 1..=n_max` once, recording for each `r <= r_max` the first `n`
/// with `L_r(n)` nonempty. Stops early once every `r` has been found.
pub fn first_occurrence_scan(r_max: u32, n_max: u32) -> Result<Vec<FirstOccurrenceRecord>> {
    if n_max < 1 {
        return Err(AtlasError::InvalidSize(n_max));
    }
    let mut found: Vec<Option<(u32, Vec<CapacityRecord>)>> = vec![None; r_max as usize + 1];
    for n in 1..=n_max {
        if found.iter().all(Option::is_some) {
            break;
        }
        let assignment = layer_assignment(n)?;
        for (r, slot) in found.iter_mut().enumerate() {
            if slot.is_some() {
                continue;
            }
            let members: Vec<CapacityRecord> = assignment
                .records
                .iter()
                .filter(|rec| rec.dim_loc == r as u32)
                .cloned()
                .collect();
            if !members.is_empty() {
                *slot = Some((n, members));
            }
        }
    }

    let records = found
        .into_iter()
        .enumerate()
        .map(|(r, hit)| {
            let r = r as u32;
            match hit {
                Some((n_first, caps)) => {
                    let members: Vec<Partition> =
                        caps.iter().map(|c| c.partition.clone()).collect();
                    let mut rec = FirstOccurrenceRecord {
                        r,
                        status: OccurrenceStatus::Found { n_first },
                        conjugation_closed: is_conjugation_closed(&members),
                        members,
                        member_capacities: caps,
                        staircase_match: false,
                    };
                    rec.staircase_match = check_staircase_pattern(&rec)?;
                    Ok(rec)
                }
                None => Ok(FirstOccurrenceRecord {
                    r,
                    status: OccurrenceStatus::NotFoundBelow { n_max },
                    members: Vec::new(),
                    member_capacities: Vec::new(),
                    staircase_match: false,
                    conjugation_closed: true,
                }),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(records)
}

/// True iff `n_first = 1 + r(r+1)/2` and `F_r` is the staircase family.
pub fn check_staircase_pattern(record: &FirstOccurrenceRecord) -> Result<bool> {
    let n_first = match record.status {
        OccurrenceStatus::Found { n_first } => n_first,
        OccurrenceStatus::NotFoundBelow { n_max } => {
            return Err(AtlasError::NotFound { r: record.r, n_max })
        }
    };
    let r = record.r;
    let family: BTreeSet<Partition> = staircase_family(r).members.into_iter().collect();
    let members: BTreeSet<Partition> = record.members.iter().cloned().collect();
    Ok(n_first == 1 + r * (r + 1) / 2 && members == family)
}

/// One member per conjugate pair, the lexicographically larger one, in
/// descending lexicographic order.
pub fn representatives_up_to_conjugation(members: &[Partition]) -> Result<Vec<Partition>> {
    let set: BTreeSet<&Partition> = members.iter().collect();
    let mut reps = BTreeSet::new();
    for l in members {
        let conj = l.conjugate();
        if !set.contains(&conj) {
            return Err(AtlasError::NotConjugationClosed {
                partition: l.clone(),
                conjugate: conj,
            });
        }
        reps.insert(l.clone().max(conj));
    }
    Ok(reps.into_iter().rev().collect())
}
