//! Layers and boundaries restricted to a distinguished vertex subset.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::boundary::{cross_layer_edges_in, LayerEdge};
use crate::error::{AtlasError, Result};
use crate::partition::Partition;
use crate::strata::{LayerAssignment, Stratification};

pub const SELF_CONJUGATE_AXIS: &str = "self-conjugate-axis";

type Test = dyn Fn(&Partition) -> bool + Send + Sync;

/// A named vertex subset `X_n`, given by a pure membership test.
#[derive(Clone)]
pub struct RegionPredicate {
    name: String,
    test: Arc<Test>,
    conj_invariant_declared: bool,
}

impl fmt::Debug for RegionPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RegionPredicate")
            .field("name", &self.name)
            .field("conj_invariant_declared", &self.conj_invariant_declared)
            .finish_non_exhaustive()
    }
}

impl RegionPredicate {
    pub fn new<F>(name: impl Into<String>, conj_invariant_declared: bool, test: F) -> Self
    where
        F: Fn(&Partition) -> bool + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            test: Arc::new(test),
            conj_invariant_declared,
        }
    }

    pub fn self_conjugate_axis() -> Self {
        Self::new(SELF_CONJUGATE_AXIS, true, Partition::is_self_conjugate)
    }

    /// The always-true region.
    pub fn full() -> Self {
        Self::new("full", true, |_| true)
    }

    /// A region listed explicitly, per `n`.
    pub fn from_members(
        name: impl Into<String>,
        conj_invariant_declared: bool,
        members: BTreeSet<Partition>,
    ) -> Self {
        Self::new(name, conj_invariant_declared, move |l| members.contains(l))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn conj_invariant_declared(&self) -> bool {
        self.conj_invariant_declared
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        (self.test)(lambda)
    }

    /// Membership flags for every vertex of an assignment. A region declared
    /// conjugation-invariant is checked on each evaluated vertex.
    pub fn evaluate(&self, assignment: &LayerAssignment) -> Result<Vec<bool>> {
        assignment
            .records
            .iter()
            .map(|rec| {
                let inside = self.contains(&rec.partition);
                if self.conj_invariant_declared
                    && inside != self.contains(&rec.partition.conjugate())
                {
                    return Err(AtlasError::RegionNotConjugationInvariant {
                        region: self.name.clone(),
                        partition: rec.partition.clone(),
                    });
                }
                Ok(inside)
            })
            .collect()
    }
}

pub fn builtin_regions() -> Vec<RegionPredicate> {
    vec![RegionPredicate::self_conjugate_axis()]
}

pub fn builtin_region(name: &str) -> Option<RegionPredicate> {
    builtin_regions().into_iter().find(|r| r.name() == name)
}

/// Parses a region file: `# n=K` section headers followed by one partition
/// text per line. A `# conjugation-invariant` line declares invariance;
/// other `#` lines and blank lines are ignored.
pub fn parse_region_file(name: &str, text: &str) -> Result<RegionPredicate> {
    let mut members = BTreeSet::new();
    let mut current: Option<u32> = None;
    let mut declared = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(k) = comment.strip_prefix("n=") {
                let k: u32 = k.trim().parse().map_err(|_| AtlasError::RegionFile {
                    line: line_no,
                    reason: format!("bad section header {line:?}"),
                })?;
                current = Some(k);
            } else if comment == "conjugation-invariant" {
                declared = true;
            }
            continue;
        }
        let n = current.ok_or_else(|| AtlasError::RegionFile {
            line: line_no,
            reason: "partition listed before any `# n=K` header".into(),
        })?;
        let lambda: Partition = line.parse().map_err(|e: AtlasError| AtlasError::RegionFile {
            line: line_no,
            reason: e.to_string(),
        })?;
        if lambda.size() != n {
            return Err(AtlasError::RegionFile {
                line: line_no,
                reason: format!("{lambda} has size {} under section n={n}", lambda.size()),
            });
        }
        members.insert(lambda);
    }
    Ok(RegionPredicate::from_members(name, declared, members))
}

/// `L_r(n) ∩ X_n` in enumeration order.
pub fn restricted_layer_in(
    assignment: &LayerAssignment,
    region: &RegionPredicate,
    r: u32,
) -> Result<Vec<Partition>> {
    let inside = region.evaluate(assignment)?;
    Ok(assignment
        .records
        .iter()
        .zip(inside)
        .filter(|(rec, inside)| *inside && rec.dim_loc == r)
        .map(|(rec, _)| rec.partition.clone())
        .collect())
}

/// `|L_r(n) ∩ X_n|` for each realized `r`; absent keys mean zero.
pub fn restricted_layer_counts_in(
    assignment: &LayerAssignment,
    region: &RegionPredicate,
) -> Result<BTreeMap<u32, usize>> {
    let inside = region.evaluate(assignment)?;
    let mut counts = BTreeMap::new();
    for (rec, inside) in assignment.records.iter().zip(inside) {
        if inside {
            *counts.entry(rec.dim_loc).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

pub fn restricted_layer_counts(n: u32, region: &RegionPredicate) -> Result<BTreeMap<u32, usize>> {
    restricted_layer_counts_in(&crate::strata::layer_assignment(n)?, region)
}

/// Adjacent-layer boundary edges with both endpoints in the region.
pub fn restricted_boundary_edges_in(
    strat: &Stratification,
    region: &RegionPredicate,
    r: u32,
) -> Result<Vec<LayerEdge>> {
    region.evaluate(strat.assignment())?;
    Ok(cross_layer_edges_in(strat, r, r + 1)
        .into_iter()
        .filter(|e| region.contains(&e.lower) && region.contains(&e.upper))
        .collect())
}

pub fn restricted_boundary_count_in(
    strat: &Stratification,
    region: &RegionPredicate,
    r: u32,
) -> Result<usize> {
    Ok(restricted_boundary_edges_in(strat, region, r)?.len())
}

pub fn restricted_boundary_count(n: u32, r: u32, region: &RegionPredicate) -> Result<usize> {
    restricted_boundary_count_in(&Stratification::build(n)?, region, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::boundary_table;
    use crate::strata::layer_assignment;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn region_members(n: u32, region: &RegionPredicate) -> Vec<Partition> {
        let a = layer_assignment(n).unwrap();
        a.records
            .iter()
            .zip(region.evaluate(&a).unwrap())
            .filter(|(_, inside)| *inside)
            .map(|(rec, _)| rec.partition.clone())
            .collect()
    }

    #[test]
    fn builtin_is_only_the_axis() {
        let regions = builtin_regions();
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].name(), SELF_CONJUGATE_AXIS);
        assert!(regions[0].conj_invariant_declared());
        assert!(builtin_region("spine").is_none());
    }

    #[test]
    fn axis_members() {
        let axis = RegionPredicate::self_conjugate_axis();
        assert_eq!(region_members(4, &axis), vec![p("(2,2)")]);
        assert_eq!(region_members(1, &axis), vec![p("(1)")]);
        assert!(region_members(2, &axis).is_empty());
    }

    #[test]
    fn restricted_counts_examples() {
        let axis = RegionPredicate::self_conjugate_axis();
        assert_eq!(restricted_layer_counts(4, &axis).unwrap(), BTreeMap::from([(2, 1)]));
        assert_eq!(restricted_layer_counts(1, &axis).unwrap(), BTreeMap::from([(0, 1)]));
        assert!(restricted_layer_counts(2, &axis).unwrap().is_empty());
    }

    #[test]
    fn restricted_boundary_examples() {
        let axis = RegionPredicate::self_conjugate_axis();
        assert_eq!(restricted_boundary_count(4, 1, &axis).unwrap(), 0);
        assert_eq!(restricted_boundary_count(1, 0, &axis).unwrap(), 0);
        for n in [4, 7, 9] {
            let table = boundary_table(n).unwrap();
            for row in &table.rows {
                assert_eq!(
                    restricted_boundary_count(n, row.r, &RegionPredicate::full()).unwrap(),
                    row.b_e
                );
            }
        }
    }

    #[test]
    fn false_invariance_declaration_fails_loudly() {
        let lying = RegionPredicate::new("first-part-big", true, |l| l.part(1) >= 3);
        let err = restricted_layer_counts(4, &lying).unwrap_err();
        assert!(matches!(err, AtlasError::RegionNotConjugationInvariant { .. }));
        let honest = RegionPredicate::new("first-part-big", false, |l| l.part(1) >= 3);
        assert!(restricted_layer_counts(4, &honest).is_ok());
    }

    #[test]
    fn region_file_parsing() {
        let text = "# conjugation-invariant\n# n=4\n(3,1)\n(2,1,1)\n\n# n=5\n(3,1,1)\n";
        let region = parse_region_file("ring", text).unwrap();
        assert_eq!(region.name(), "ring");
        assert!(region.conj_invariant_declared());
        assert_eq!(region_members(4, &region), vec![p("(3,1)"), p("(2,1,1)")]);
        assert_eq!(region_members(5, &region), vec![p("(3,1,1)")]);

        assert!(matches!(
            parse_region_file("x", "(2,1)\n"),
            Err(AtlasError::RegionFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_region_file("x", "# n=4\n(2,1)\n"),
            Err(AtlasError::RegionFile { line: 2, .. })
        ));
        assert!(parse_region_file("x", "# n=four\n").is_err());
        assert!(parse_region_file("x", "# n=3\n(2,x)\n").is_err());
    }
}
