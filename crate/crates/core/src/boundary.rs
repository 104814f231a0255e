//! Interfaces between layers: adjacent-layer edge boundaries, their one-sided
//! and vertex boundaries, general cross-layer edges, and edge jumps.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::partition::Partition;
use crate::strata::Stratification;

/// An edge of `G_n` between layers, lower-dimensional endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LayerEdge {
    pub lower: Partition,
    pub upper: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundarySlice {
    pub n: u32,
    pub r: u32,
    pub edges: Vec<LayerEdge>,
    /// Endpoints in `L_r(n)`, enumeration order.
    pub lower_vertices: Vec<Partition>,
    /// Endpoints in `L_{r+1}(n)`, enumeration order.
    pub upper_vertices: Vec<Partition>,
    pub vertex_union: Vec<Partition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryRow {
    pub r: u32,
    pub b_e: usize,
    pub b_lower: usize,
    pub b_upper: usize,
    pub b_v: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CrossCount {
    pub r: u32,
    pub s: u32,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryTable {
    pub n: u32,
    pub rows: Vec<BoundaryRow>,
    pub max_jump: u32,
    /// `|E_{r,s}(n)|` for `r < s`, nonzero entries only, sorted by `(r, s)`.
    pub cross_counts: Vec<CrossCount>,
    /// Edges with both endpoints in the same layer, keyed by layer.
    pub intra_counts: BTreeMap<u32, usize>,
    pub edge_count: usize,
}

impl BoundaryTable {
    pub fn cross_count(&self, r: u32, s: u32) -> usize {
        let (r, s) = (r.min(s), r.max(s));
        self.cross_counts
            .iter()
            .find(|c| c.r == r && c.s == s)
            .map_or(0, |c| c.count)
    }

    pub fn row(&self, r: u32) -> Option<&BoundaryRow> {
        self.rows.iter().find(|row| row.r == r)
    }
}

fn edge_ids_between(strat: &Stratification, r: u32, s: u32) -> Vec<(usize, usize)> {
    strat
        .graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            let (du, dv) = (strat.dim_of(u), strat.dim_of(v));
            (du == r && dv == s) || (du == s && dv == r)
        })
        .collect()
}

/// Edges joining `L_r(n)` and `L_s(n)` with `r != s`, in edge-id order.
/// Returns nothing when `r == s`.
pub fn cross_layer_edges_in(strat: &Stratification, r: u32, s: u32) -> Vec<LayerEdge> {
    if r == s {
        return Vec::new();
    }
    let g = strat.graph();
    edge_ids_between(strat, r, s)
        .into_iter()
        .map(|(u, v)| {
            let (lo, hi) = if strat.dim_of(u) < strat.dim_of(v) {
                (u, v)
            } else {
                (v, u)
            };
            LayerEdge {
                lower: g.vertex(lo).clone(),
                upper: g.vertex(hi).clone(),
            }
        })
        .collect()
}

pub fn cross_layer_edges(n: u32, r: u32, s: u32) -> Result<Vec<LayerEdge>> {
    Ok(cross_layer_edges_in(&Stratification::build(n)?, r, s))
}

pub fn boundary_slice_in(strat: &Stratification, r: u32) -> BoundarySlice {
    let g = strat.graph();
    let ids = edge_ids_between(strat, r, r + 1);
    let mut lower = BTreeSet::new();
    let mut upper = BTreeSet::new();
    for &(u, v) in &ids {
        for w in [u, v] {
            if strat.dim_of(w) == r {
                lower.insert(w);
            } else {
                upper.insert(w);
            }
        }
    }
    let to_parts = |set: &BTreeSet<usize>| -> Vec<Partition> {
        set.iter().map(|&i| g.vertex(i).clone()).collect()
    };
    let union: BTreeSet<usize> = lower.union(&upper).copied().collect();
    BoundarySlice {
        n: strat.n(),
        r,
        edges: cross_layer_edges_in(strat, r, r + 1),
        lower_vertices: to_parts(&lower),
        upper_vertices: to_parts(&upper),
        vertex_union: to_parts(&union),
    }
}

pub fn boundary_slice(n: u32, r: u32) -> Result<BoundarySlice> {
    Ok(boundary_slice_in(&Stratification::build(n)?, r))
}

/// All interface counts for one `n`. Rows cover every `r` with `L_r` or
/// `L_{r+1}` nonempty; all other rows are zero.
pub fn boundary_table_in(strat: &Stratification) -> BoundaryTable {
    let g = strat.graph();
    let mut cross: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    let mut intra: BTreeMap<u32, usize> = BTreeMap::new();
    let mut max_jump = 0;
    for &(u, v) in g.edges() {
        let (du, dv) = (strat.dim_of(u), strat.dim_of(v));
        let (lo, hi) = (du.min(dv), du.max(dv));
        max_jump = max_jump.max(hi - lo);
        if lo == hi {
            *intra.entry(lo).or_default() += 1;
        } else {
            *cross.entry((lo, hi)).or_default() += 1;
        }
    }

    let profile = strat.assignment().profile();
    let first = profile.delta_min.saturating_sub(1);
    let rows = (first..=profile.delta_max)
        .map(|r| {
            let slice = boundary_slice_in(strat, r);
            BoundaryRow {
                r,
                b_e: slice.edges.len(),
                b_lower: slice.lower_vertices.len(),
                b_upper: slice.upper_vertices.len(),
                b_v: slice.vertex_union.len(),
            }
        })
        .collect();

    BoundaryTable {
        n: strat.n(),
        rows,
        max_jump,
        cross_counts: cross
            .into_iter()
            .map(|((r, s), count)| CrossCount { r, s, count })
            .collect(),
        intra_counts: intra,
        edge_count: g.edges().len(),
    }
}

pub fn boundary_table(n: u32) -> Result<BoundaryTable> {
    Ok(boundary_table_in(&Stratification::build(n)?))
}

/// Largest `|dim_loc(λ) - dim_loc(μ)|` over edges; 0 for an edgeless graph.
pub fn max_edge_jump(n: u32) -> Result<u32> {
    Ok(boundary_table(n)?.max_jump)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn edge(lo: &str, hi: &str) -> LayerEdge {
        LayerEdge {
            lower: p(lo),
            upper: p(hi),
        }
    }

    #[test]
    fn cross_edges_examples() {
        assert_eq!(
            cross_layer_edges(4, 1, 2).unwrap(),
            vec![edge("(4)", "(3,1)"), edge("(1,1,1,1)", "(2,1,1)")]
        );
        assert_eq!(
            cross_layer_edges(4, 2, 1).unwrap(),
            cross_layer_edges(4, 1, 2).unwrap()
        );
        assert!(cross_layer_edges(2, 0, 1).unwrap().is_empty());
        assert!(cross_layer_edges(4, 2, 2).unwrap().is_empty());
    }

    #[test]
    fn slice_examples() {
        let s = boundary_slice(4, 1).unwrap();
        assert_eq!(s.edges.len(), 2);
        assert_eq!(s.lower_vertices, vec![p("(4)"), p("(1,1,1,1)")]);
        assert_eq!(s.upper_vertices, vec![p("(3,1)"), p("(2,1,1)")]);
        assert_eq!(s.vertex_union.len(), 4);

        let empty = boundary_slice(1, 0).unwrap();
        assert!(empty.edges.is_empty() && empty.vertex_union.is_empty());
        assert!(boundary_slice(4, 2).unwrap().edges.is_empty());
    }

    #[test]
    fn table_examples() {
        let t4 = boundary_table(4).unwrap();
        assert_eq!(
            t4.row(1),
            Some(&BoundaryRow {
                r: 1,
                b_e: 2,
                b_lower: 2,
                b_upper: 2,
                b_v: 4
            })
        );
        assert_eq!(t4.rows.iter().map(|r| r.r).collect::<Vec<_>>(), [0, 1, 2]);
        assert_eq!(t4.max_jump, 1);
        assert_eq!(t4.edge_count, 5);
        assert_eq!(t4.cross_count(2, 1), 2);

        let t2 = boundary_table(2).unwrap();
        assert_eq!(t2.edge_count, 1);
        assert_eq!(t2.intra_counts, BTreeMap::from([(1, 1)]));
        assert!(t2
            .rows
            .iter()
            .all(|r| r.b_e == 0 && r.b_lower == 0 && r.b_upper == 0 && r.b_v == 0));
        assert_eq!(t2.max_jump, 0);

        let t7 = boundary_table(7).unwrap();
        assert!(t7.cross_count(2, 3) > 0);
        assert!(t7.max_jump >= 1);
    }

    #[test]
    fn jumps() {
        assert_eq!(max_edge_jump(1).unwrap(), 0);
        assert_eq!(max_edge_jump(4).unwrap(), 1);
    }
}
