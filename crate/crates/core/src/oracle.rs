//! Brute-force maximum clique through a vertex.
//!
//! This module sees only the adjacency structure of a [`PartitionGraph`]. It
//! exists to cross-check `dim_loc = max(s, t)` against `ω_loc - 1` and must
//! not call into the capacity code.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::partition::Partition;
use crate::transfer::{build_graph, PartitionGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub partition: Partition,
    pub formula_dim: u32,
    pub oracle_dim: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub n: u32,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[cfg(test)]
    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn subtract(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }
}

/// Exact maximum clique size of a small graph given as bitset rows.
/// Branch and bound: candidates are greedily coloured, and a branch is cut
/// when the clique so far plus the colour count cannot beat the incumbent.
fn max_clique(adj: &[BitSet]) -> usize {
    fn colour_order(adj: &[BitSet], cand: &BitSet) -> Vec<(usize, usize)> {
        // (vertex, colour bound) in nondecreasing colour order
        let mut uncoloured = cand.clone();
        let mut order = Vec::new();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                uncoloured.remove(v);
                avail.subtract(&adj[v]);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(adj: &[BitSet], size: usize, mut cand: BitSet, best: &mut usize) {
        let order = colour_order(adj, &cand);
        for &(v, bound) in order.iter().rev() {
            if size + bound <= *best {
                return;
            }
            let next = cand.intersect(&adj[v]);
            if next.is_empty() {
                *best = (*best).max(size + 1);
            } else {
                expand(adj, size + 1, next, best);
            }
            cand.remove(v);
        }
    }

    let mut all = BitSet::new(adj.len());
    for i in 0..adj.len() {
        all.insert(i);
    }
    let mut best = 0;
    if !adj.is_empty() {
        expand(adj, 0, all, &mut best);
    }
    best
}

/// `ω_loc(λ)`: one plus the clique number of the subgraph induced on the
/// neighbours of `λ`.
pub fn omega_loc_bruteforce(lambda: &Partition, g: &PartitionGraph) -> Result<u32> {
    let id = g.id_of(lambda).ok_or_else(|| AtlasError::NotAVertex {
        partition: lambda.clone(),
        n: g.n(),
    })?;
    let nbrs = g.neighbor_ids(id);
    let adj: Vec<BitSet> = nbrs
        .iter()
        .map(|&u| {
            let mut row = BitSet::new(nbrs.len());
            for (j, &v) in nbrs.iter().enumerate() {
                if u != v && g.has_edge(u, v) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    Ok(1 + max_clique(&adj) as u32)
}

/// Compares `dim_of(λ)` with `ω_loc(λ) - 1` for every partition of `n`.
/// The formula side is injected so a tampered implementation can be
/// exercised against the same oracle.
pub fn verify_dimension_formula_with<F>(n: u32, dim_of: F) -> Result<OracleReport>
where
    F: Fn(&Partition) -> u32 + Sync,
{
    let start = Instant::now();
    let g = build_graph(n)?;
    let rows: Vec<Option<Mismatch>> = g
        .vertices()
        .par_iter()
        .map(|l| {
            let oracle_dim = omega_loc_bruteforce(l, &g)? - 1;
            let formula_dim = dim_of(l);
            Ok((formula_dim != oracle_dim).then(|| Mismatch {
                partition: l.clone(),
                formula_dim,
                oracle_dim,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(OracleReport {
        n,
        checked: g.vertex_count(),
        mismatches: rows.into_iter().flatten().collect(),
        elapsed: start.elapsed(),
    })
}

pub fn verify_dimension_formula(n: u32) -> Result<OracleReport> {
    verify_dimension_formula_with(n, crate::capacity::local_dim)
}
