//! Canonical integer partitions and the diagram operations the layer theory
//! needs: enumeration, conjugation, corners and staircase families.
//!
//! A [`Partition`] always stores its parts weakly decreasing, so structural
//! equality is partition equality. The empty partition exists only as the
//! zeroth staircase and never as a vertex of a partition graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AtlasError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// Builds a partition from positive parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(AtlasError::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(AtlasError::NonPositivePart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// Caller guarantees `parts` is weakly decreasing with no zeros.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    pub(crate) fn empty() -> Self {
        Self {
            parts: Vec::new(),
            size: 0,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of rows of the diagram.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part in 1-based `row`, or 0 past the last row.
    pub fn part(&self, row: usize) -> u32 {
        row.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Number of distinct part values, which is also the number of removable corners.
    pub fn distinct_parts(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i + 1 == self.parts.len() || p > self.parts[i + 1])
            .count()
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn removable_corners(&self) -> Vec<Corner> {
        removable_corners(self)
    }

    pub fn addable_corners(&self) -> Vec<Corner> {
        addable_corners(self)
    }

    /// Adds one cell at an addable corner.
    pub fn add_cell(&self, corner: Corner) -> Result<Partition> {
        if corner.kind != CornerKind::Addable || !self.addable_corners().contains(&corner) {
            return Err(AtlasError::NotAddable {
                corner,
                partition: self.clone(),
            });
        }
        let mut parts = self.parts.clone();
        if corner.row as usize > parts.len() {
            parts.push(1);
        } else {
            parts[corner.row as usize - 1] += 1;
        }
        Ok(Self::from_sorted(parts))
    }
}

/// Builds a canonical partition from raw signed input, rejecting empty lists
/// and non-positive entries.
pub fn make_partition(raw: &[i64]) -> Result<Partition> {
    if raw.is_empty() {
        return Err(AtlasError::EmptyPartition);
    }
    let parts = raw
        .iter()
        .map(|&p| {
            if p < 1 {
                Err(AtlasError::NonPositivePart(p))
            } else {
                u32::try_from(p).map_err(|_| AtlasError::PartTooLarge(p))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = AtlasError;

    /// Parses the text form `(4,2,1)`. Parentheses are optional; parts may
    /// be given in any order and are canonicalized.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| AtlasError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
            (Some(_), Some(_)) if trimmed.len() >= 2 => &trimmed[1..trimmed.len() - 1],
            (None, None) => trimmed,
            _ => return Err(err("unbalanced parentheses")),
        };
        if inner.trim().is_empty() {
            return Err(AtlasError::EmptyPartition);
        }
        let raw = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| err("parts must be integers")))
            .collect::<Result<Vec<_>>>()?;
        make_partition(&raw)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CornerKind {
    Removable,
    Addable,
}

/// A diagram cell position, 1-based, tagged with its corner kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub row: u32,
    pub col: u32,
    pub kind: CornerKind,
}

impl Corner {
    pub fn removable(row: u32, col: u32) -> Self {
        Self {
            row,
            col,
            kind: CornerKind::Removable,
        }
    }

    pub fn addable(row: u32, col: u32) -> Self {
        Self {
            row,
            col,
            kind: CornerKind::Addable,
        }
    }

    pub fn transpose(self) -> Self {
        Self {
            row: self.col,
            col: self.row,
            kind: self.kind,
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CornerKind::Removable => "removable",
            CornerKind::Addable => "addable",
        };
        write!(f, "{kind}({},{})", self.row, self.col)
    }
}

/// Iterator over the partitions of `n` in descending lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Self {
            next: (n >= 1).then(|| vec![n]),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Rightmost part > 1 is decremented; it and the trailing ones are
        // redistributed greedily in chunks of the new value.
        if let Some(k) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..k].to_vec();
            let v = current[k] - 1;
            let mut rest = 1 + (current.len() - k - 1) as u32 + v;
            while rest > 0 {
                let take = rest.min(v);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_sorted(current))
    }
}

/// All partitions of `n`, descending lexicographic order.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n < 1 {
        return Err(AtlasError::InvalidSize(n));
    }
    Ok(Partitions::new(n).collect())
}

/// Diagram transpose: the j-th part of the result counts the rows of
/// length at least j.
pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.part(1) as usize;
    let mut cols = vec![0u32; width];
    for &p in lambda.parts() {
        for c in cols.iter_mut().take(p as usize) {
            *c += 1;
        }
    }
    Partition::from_sorted(cols)
}

/// Cells `(i, λ_i)` with `λ_i > λ_{i+1}`, in increasing row order.
pub fn removable_corners(lambda: &Partition) -> Vec<Corner> {
    let parts = lambda.parts();
    (0..parts.len())
        .filter(|&i| i + 1 == parts.len() || parts[i] > parts[i + 1])
        .map(|i| Corner::removable(i as u32 + 1, parts[i]))
        .collect()
}

/// Cells `(i, λ_i + 1)` where a box may be added, including the new row,
/// in increasing row order.
pub fn addable_corners(lambda: &Partition) -> Vec<Corner> {
    let parts = lambda.parts();
    let mut corners: Vec<Corner> = (0..parts.len())
        .filter(|&i| i == 0 || parts[i - 1] > parts[i])
        .map(|i| Corner::addable(i as u32 + 1, parts[i] + 1))
        .collect();
    corners.push(Corner::addable(parts.len() as u32 + 1, 1));
    corners
}

/// The staircase `(r, r-1, ..., 1)`; empty for `r = 0`.
pub fn staircase(r: u32) -> Partition {
    if r == 0 {
        return Partition::empty();
    }
    Partition::from_sorted((1..=r).rev().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseFamily {
    pub r: u32,
    pub base: Partition,
    /// Descending lexicographic order.
    pub members: Vec<Partition>,
}

/// One-cell extensions of the staircase of order `r`.
pub fn staircase_family(r: u32) -> StaircaseFamily {
    let base = staircase(r);
    let mut members: Vec<Partition> = base
        .addable_corners()
        .into_iter()
        .map(|a| base.add_cell(a).expect("corner comes from addable_corners"))
        .collect();
    members.sort_unstable_by(|a, b| b.cmp(a));
    StaircaseFamily { r, base, members }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn make_partition_sorts() {
        assert_eq!(make_partition(&[1, 3, 2]).unwrap(), p("(3,2,1)"));
        assert_eq!(make_partition(&[4, 2, 1]).unwrap().parts(), &[4, 2, 1]);
    }

    #[test]
    fn make_partition_rejects_bad_input() {
        assert_eq!(make_partition(&[1, 0]), Err(AtlasError::NonPositivePart(0)));
        assert_eq!(make_partition(&[2, -1]), Err(AtlasError::NonPositivePart(-1)));
        assert_eq!(make_partition(&[]), Err(AtlasError::EmptyPartition));
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(p("(4,2,1)").to_string(), "(4,2,1)");
        assert_eq!(p(" ( 1, 2 ,4 ) ").to_string(), "(4,2,1)");
        assert_eq!(p("3,1").to_string(), "(3,1)");
        assert!("(".parse::<Partition>().is_err());
        assert!("()".parse::<Partition>().is_err());
        assert!("(a,1)".parse::<Partition>().is_err());
        assert!("(2,0)".parse::<Partition>().is_err());
        assert_eq!(staircase(0).to_string(), "()");
    }

    #[test]
    fn enumerate_small() {
        let got: Vec<String> = enumerate_partitions(4)
            .unwrap()
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(got, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p("(1)")]);
        assert_eq!(enumerate_partitions(7).unwrap().len(), 15);
        assert_eq!(enumerate_partitions(0), Err(AtlasError::InvalidSize(0)));
    }

    #[test]
    fn enumeration_is_strictly_descending() {
        for n in 1..=15 {
            let all = enumerate_partitions(n).unwrap();
            assert!(all.windows(2).all(|w| w[0] > w[1]));
            assert!(all.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p("(3,1)")), p("(2,1,1)"));
        assert_eq!(conjugate(&p("(2,2)")), p("(2,2)"));
        assert_eq!(conjugate(&p("(4,2,1)")), p("(3,2,1,1)"));
        assert_eq!(conjugate(&staircase(0)), staircase(0));
    }

    #[test]
    fn removable_examples() {
        assert_eq!(
            removable_corners(&p("(2,1,1)")),
            vec![Corner::removable(1, 2), Corner::removable(3, 1)]
        );
        assert_eq!(removable_corners(&p("(1)")), vec![Corner::removable(1, 1)]);
        assert_eq!(removable_corners(&p("(3,3)")), vec![Corner::removable(2, 3)]);
    }

    #[test]
    fn addable_examples() {
        assert_eq!(
            addable_corners(&p("(2,1)")),
            vec![
                Corner::addable(1, 3),
                Corner::addable(2, 2),
                Corner::addable(3, 1)
            ]
        );
        assert_eq!(
            addable_corners(&p("(1)")),
            vec![Corner::addable(1, 2), Corner::addable(2, 1)]
        );
        assert_eq!(
            addable_corners(&p("(2,2)")),
            vec![Corner::addable(1, 3), Corner::addable(3, 1)]
        );
        assert_eq!(addable_corners(&staircase(0)), vec![Corner::addable(1, 1)]);
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(3), p("(3,2,1)"));
        assert_eq!(staircase(3).size(), 6);
        assert_eq!(staircase(4), p("(4,3,2,1)"));
        assert!(staircase(0).is_empty());
    }

    #[test]
    fn staircase_family_examples() {
        let fam = |r| -> Vec<String> {
            staircase_family(r)
                .members
                .iter()
                .map(|l| l.to_string())
                .collect()
        };
        assert_eq!(fam(2), ["(3,1)", "(2,2)", "(2,1,1)"]);
        assert_eq!(fam(3), ["(4,2,1)", "(3,3,1)", "(3,2,2)", "(3,2,1,1)"]);
        assert_eq!(fam(0), ["(1)"]);
    }

    #[test]
    fn add_cell_rejects_non_addable() {
        let l = p("(2,2)");
        assert!(l.add_cell(Corner::addable(2, 3)).is_err());
        assert!(l.add_cell(Corner::removable(1, 3)).is_err());
        assert_eq!(l.add_cell(Corner::addable(3, 1)).unwrap(), p("(2,2,1)"));
    }
}
