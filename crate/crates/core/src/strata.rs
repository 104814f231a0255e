//! Level sets of the local simplex dimension and the per-n layer profile.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::capacity::{capacity_record, CapacityRecord};
use crate::error::{AtlasError, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::transfer::{build_graph, PartitionGraph};

/// Capacity record for every partition of `n`, indexed by vertex id.
#[derive(Debug, Clone, Serialize)]
pub struct LayerAssignment {
    pub n: u32,
    pub records: Vec<CapacityRecord>,
}

impl LayerAssignment {
    pub fn vertex_count(&self) -> usize {
        self.records.len()
    }

    pub fn dim_of(&self, id: usize) -> u32 {
        self.records[id].dim_loc
    }

    pub fn dims(&self) -> impl Iterator<Item = u32> + '_ {
        self.records.iter().map(|r| r.dim_loc)
    }

    /// Members of `L_r(n)` in enumeration order.
    pub fn layer(&self, r: u32) -> Vec<Partition> {
        self.records
            .iter()
            .filter(|rec| rec.dim_loc == r)
            .map(|rec| rec.partition.clone())
            .collect()
    }

    pub fn profile(&self) -> LayerProfile {
        let mut counts = BTreeMap::new();
        for d in self.dims() {
            *counts.entry(d).or_insert(0usize) += 1;
        }
        LayerProfile::from_counts(self.n, counts)
    }
}

pub fn layer_assignment(n: u32) -> Result<LayerAssignment> {
    let vertices = enumerate_partitions(n)?;
    let records = vertices.par_iter().map(capacity_record).collect();
    Ok(LayerAssignment { n, records })
}

pub fn layer(n: u32, r: u32) -> Result<Vec<Partition>> {
    Ok(layer_assignment(n)?.layer(r))
}

/// `G_n` together with its layer assignment, sharing vertex ids.
#[derive(Debug, Clone)]
pub struct Stratification {
    graph: PartitionGraph,
    assignment: LayerAssignment,
}

impl Stratification {
    pub fn build(n: u32) -> Result<Self> {
        let graph = build_graph(n)?;
        let records = graph.vertices().par_iter().map(capacity_record).collect();
        Ok(Self {
            graph,
            assignment: LayerAssignment { n, records },
        })
    }

    /// Pairs a graph with an externally computed assignment. The assignment
    /// must list the same vertices in the same order.
    pub fn from_parts(graph: PartitionGraph, assignment: LayerAssignment) -> Result<Self> {
        if graph.n() != assignment.n {
            return Err(AtlasError::InvalidSize(assignment.n));
        }
        for (v, rec) in graph.vertices().iter().zip(&assignment.records) {
            if *v != rec.partition {
                return Err(AtlasError::NotAVertex {
                    partition: rec.partition.clone(),
                    n: graph.n(),
                });
            }
        }
        Ok(Self { graph, assignment })
    }

    pub fn n(&self) -> u32 {
        self.graph.n()
    }

    pub fn graph(&self) -> &PartitionGraph {
        &self.graph
    }

    pub fn assignment(&self) -> &LayerAssignment {
        &self.assignment
    }

    pub fn dim_of(&self, id: usize) -> u32 {
        self.assignment.dim_of(id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerProfile {
    pub n: u32,
    /// `a_{n,r}` for realized `r` only.
    pub counts: BTreeMap<u32, usize>,
    pub spectrum: Vec<u32>,
    pub delta_min: u32,
    pub delta_max: u32,
    pub top_size: usize,
    pub p_n: usize,
    pub is_interval: bool,
    pub gaps: Vec<u32>,
}

impl LayerProfile {
    fn from_counts(n: u32, counts: BTreeMap<u32, usize>) -> Self {
        let spectrum: Vec<u32> = counts.keys().copied().collect();
        let delta_min = spectrum[0];
        let delta_max = *spectrum.last().unwrap();
        let gaps: Vec<u32> = (delta_min..=delta_max)
            .filter(|r| !counts.contains_key(r))
            .collect();
        Self {
            n,
            top_size: counts[&delta_max],
            p_n: counts.values().sum(),
            is_interval: gaps.is_empty(),
            counts,
            spectrum,
            delta_min,
            delta_max,
            gaps,
        }
    }

    /// `a_{n,r}`, zero for unrealized `r`.
    pub fn count(&self, r: u32) -> usize {
        self.counts.get(&r).copied().unwrap_or(0)
    }
}

pub fn profile(n: u32) -> Result<LayerProfile> {
    Ok(layer_assignment(n)?.profile())
}

/// Profiles for `n_min..=n_max` in increasing `n`.
pub fn profile_sweep(n_min: u32, n_max: u32) -> Result<Vec<LayerProfile>> {
    if n_min < 1 {
        return Err(AtlasError::InvalidSize(n_min));
    }
    if n_min > n_max {
        return Err(AtlasError::InvalidSize(n_max));
    }
    (n_min..=n_max).into_par_iter().map(profile).collect()
}

/// `Δ_loc(n)` along a sweep.
pub fn delta_loc_sequence(profiles: &[LayerProfile]) -> Vec<u32> {
    profiles.iter().map(|p| p.delta_max).collect()
}

/// `τ_top(n) = |L_top(n)|` along a sweep.
pub fn tau_top_sequence(profiles: &[LayerProfile]) -> Vec<usize> {
    profiles.iter().map(|p| p.top_size).collect()
}

/// The fixed-layer column `a_r(n)` along a sweep.
pub fn layer_count_sequence(profiles: &[LayerProfile], r: u32) -> Vec<usize> {
    profiles.iter().map(|p| p.count(r)).collect()
}
