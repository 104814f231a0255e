//! Elementary transfers and the partition graph `G_n`.
//!
//! A transfer moves one cell from a removable corner to an addable corner and
//! re-sorts. It is admissible when the result differs from the source; every
//! edge of `G_n` comes from [`neighbors`], the only admissibility check in
//! the crate.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::partition::{enumerate_partitions, Corner, CornerKind, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub source: Partition,
    pub c: Corner,
    pub a: Corner,
    pub result: Partition,
}

/// Moves a cell from row `from_row` to row `to_row` (1-based; `len + 1`
/// opens a new row), re-sorts, and returns `None` when nothing changed.
pub(crate) fn move_cell(lambda: &Partition, from_row: usize, to_row: usize) -> Option<Partition> {
    let mut parts = lambda.parts().to_vec();
    parts[from_row - 1] -= 1;
    if to_row > parts.len() {
        parts.push(1);
    } else {
        parts[to_row - 1] += 1;
    }
    parts.retain(|&p| p > 0);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    (parts.as_slice() != lambda.parts()).then(|| Partition::from_sorted(parts))
}

pub(crate) fn check_removable(lambda: &Partition, c: Corner) -> Result<()> {
    if c.kind == CornerKind::Removable && lambda.removable_corners().contains(&c) {
        Ok(())
    } else {
        Err(AtlasError::NotRemovable {
            corner: c,
            partition: lambda.clone(),
        })
    }
}

pub(crate) fn check_addable(lambda: &Partition, a: Corner) -> Result<()> {
    if a.kind == CornerKind::Addable && lambda.addable_corners().contains(&a) {
        Ok(())
    } else {
        Err(AtlasError::NotAddable {
            corner: a,
            partition: lambda.clone(),
        })
    }
}

/// Result of moving the cell at `c` to `a`, or `Ok(None)` when the transfer
/// is inadmissible. Errors only when the corners do not belong to `lambda`.
pub fn apply_transfer(lambda: &Partition, c: Corner, a: Corner) -> Result<Option<Partition>> {
    check_removable(lambda, c)?;
    check_addable(lambda, a)?;
    Ok(move_cell(lambda, c.row as usize, a.row as usize))
}

/// All admissible transfers, ordered by (removable row, addable row).
pub fn admissible_transfers(lambda: &Partition) -> Vec<Transfer> {
    let removable = lambda.removable_corners();
    let addable = lambda.addable_corners();
    let mut out = Vec::new();
    for &c in &removable {
        for &a in &addable {
            if let Some(result) = move_cell(lambda, c.row as usize, a.row as usize) {
                out.push(Transfer {
                    source: lambda.clone(),
                    c,
                    a,
                    result,
                });
            }
        }
    }
    out
}

pub fn neighbors(lambda: &Partition) -> BTreeSet<Partition> {
    admissible_transfers(lambda)
        .into_iter()
        .map(|t| t.result)
        .collect()
}

pub fn are_adjacent(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(AtlasError::SizeMismatch {
            left: lambda.clone(),
            right: mu.clone(),
            left_size: lambda.size(),
            right_size: mu.size(),
        });
    }
    Ok(neighbors(lambda).contains(mu))
}

/// The partition graph on all partitions of `n`.
#[derive(Debug, Clone)]
pub struct PartitionGraph {
    n: u32,
    vertices: Vec<Partition>,
    index: HashMap<Partition, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl PartitionGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Vertices in enumeration order; a vertex id is a position in this slice.
    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn id_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn vertex(&self, id: usize) -> &Partition {
        &self.vertices[id]
    }

    /// Sorted neighbor ids of a vertex.
    pub fn neighbor_ids(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    /// Unordered edges as `(low, high)` id pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }
}

/// Builds `G_n`. Neighbor generation runs on the current rayon pool; the
/// output does not depend on the number of workers.
pub fn build_graph(n: u32) -> Result<PartitionGraph> {
    let vertices = enumerate_partitions(n)?;
    let index: HashMap<Partition, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let adjacency: Vec<Vec<usize>> = vertices
        .par_iter()
        .map(|l| {
            let mut ids: Vec<usize> = neighbors(l).iter().map(|m| index[m]).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    for (u, ids) in adjacency.iter().enumerate() {
        for &v in ids {
            debug_assert!(
                adjacency[v].binary_search(&u).is_ok(),
                "asymmetric adjacency between {} and {}",
                vertices[u],
                vertices[v]
            );
        }
    }
    let edges = adjacency
        .iter()
        .enumerate()
        .flat_map(|(u, ids)| ids.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    Ok(PartitionGraph {
        n,
        vertices,
        index,
        adjacency,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Partition> {
        items.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn apply_transfer_examples() {
        assert_eq!(
            apply_transfer(&p("(2,2)"), Corner::removable(2, 2), Corner::addable(1, 3)).unwrap(),
            Some(p("(3,1)"))
        );
        assert_eq!(
            apply_transfer(&p("(1)"), Corner::removable(1, 1), Corner::addable(2, 1)).unwrap(),
            None
        );
        assert_eq!(
            apply_transfer(&p("(3,1)"), Corner::removable(1, 3), Corner::addable(1, 4)).unwrap(),
            None
        );
        assert_eq!(
            apply_transfer(&p("(2,1,1)"), Corner::removable(3, 1), Corner::addable(1, 3))
                .unwrap(),
            Some(p("(3,1)"))
        );
    }

    #[test]
    fn vanished_part_cannot_receive() {
        // c empties the row of size 1; a would extend that same row.
        assert_eq!(
            apply_transfer(&p("(3,1)"), Corner::removable(2, 1), Corner::addable(2, 2)).unwrap(),
            None
        );
    }

    #[test]
    fn apply_transfer_rejects_foreign_corners() {
        let l = p("(3,1)");
        assert!(matches!(
            apply_transfer(&l, Corner::removable(1, 2), Corner::addable(2, 2)),
            Err(AtlasError::NotRemovable { .. })
        ));
        assert!(matches!(
            apply_transfer(&l, Corner::removable(1, 3), Corner::addable(2, 3)),
            Err(AtlasError::NotAddable { .. })
        ));
        assert!(apply_transfer(&l, Corner::addable(1, 4), Corner::addable(2, 2)).is_err());
    }

    #[test]
    fn admissible_transfer_examples() {
        assert!(admissible_transfers(&p("(1)")).is_empty());
        let two = admissible_transfers(&p("(2)"));
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].result, p("(1,1)"));
        let results: BTreeSet<_> = admissible_transfers(&p("(3,1)"))
            .into_iter()
            .map(|t| t.result)
            .collect();
        assert_eq!(results, set(&["(4)", "(2,2)", "(2,1,1)"]));
    }

    #[test]
    fn admissible_transfers_are_ordered() {
        let ts = admissible_transfers(&p("(4,2,1)"));
        assert!(ts
            .windows(2)
            .all(|w| (w[0].c.row, w[0].a.row) < (w[1].c.row, w[1].a.row)));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&p("(2)")), set(&["(1,1)"]));
        assert_eq!(neighbors(&p("(4)")), set(&["(3,1)"]));
        assert_eq!(neighbors(&p("(3,1)")), set(&["(4)", "(2,2)", "(2,1,1)"]));
    }

    #[test]
    fn graph_examples() {
        let g1 = build_graph(1).unwrap();
        assert_eq!((g1.vertex_count(), g1.edges().len()), (1, 0));
        let g2 = build_graph(2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edges().len()), (2, 1));

        let g4 = build_graph(4).unwrap();
        assert_eq!(g4.vertex_count(), 5);
        let named: BTreeSet<(String, String)> = g4
            .edges()
            .iter()
            .map(|&(u, v)| (g4.vertex(u).to_string(), g4.vertex(v).to_string()))
            .collect();
        let expected: BTreeSet<(String, String)> = [
            ("(4)", "(3,1)"),
            ("(3,1)", "(2,2)"),
            ("(3,1)", "(2,1,1)"),
            ("(2,2)", "(2,1,1)"),
            ("(2,1,1)", "(1,1,1,1)"),
        ]
        .iter()
        .map(|&(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(named, expected);
        assert!(build_graph(0).is_err());
    }

    #[test]
    fn edges_sorted_and_low_first() {
        let g = build_graph(9).unwrap();
        assert!(g.edges().iter().all(|&(u, v)| u < v));
        assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn adjacency_examples() {
        assert!(are_adjacent(&p("(4)"), &p("(3,1)")).unwrap());
        assert!(!are_adjacent(&p("(4)"), &p("(2,2)")).unwrap());
        assert!(!are_adjacent(&p("(3,1)"), &p("(3,1)")).unwrap());
        assert!(matches!(
            are_adjacent(&p("(3,1)"), &p("(3)")),
            Err(AtlasError::SizeMismatch { .. })
        ));
    }
}
