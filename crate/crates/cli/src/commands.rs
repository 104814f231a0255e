//! One function per subcommand. Each computes its tables, normalizes row
//! order, and hands them to the [`Exporter`].

use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use layer_atlas::boundary::boundary_table_in;
use layer_atlas::restriction::{restricted_boundary_count_in, restricted_layer_counts_in};
use layer_atlas::{
    builtin_region, builtin_regions, capacity_record, enumerate_partitions, first_occurrence_scan,
    parse_region_file, profile_sweep, representatives_up_to_conjugation,
    verify_dimension_formula_with, BoundaryTable, CapacityRecord, Partition, RegionPredicate,
    Stratification,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::AtlasConfig;
use crate::export::{join, Exporter, Row};
use crate::golden;

macro_rules! row {
    ($name:ident [$($header:literal),+] { $($body:tt)* }) => {
        #[derive(Debug, Clone, Serialize)]
        pub struct $name { $($body)* }
        impl Row for $name {
            const HEADER: &'static [&'static str] = &[$($header),+];
        }
    };
}

row!(ProfileRow ["n", "r", "count"] {
    pub n: u32,
    pub r: u32,
    pub count: usize,
});

row!(ProfileSummaryRow ["n", "delta_min", "delta_max", "top_size", "p_n", "is_interval", "gaps"] {
    pub n: u32,
    pub delta_min: u32,
    pub delta_max: u32,
    pub top_size: usize,
    pub p_n: usize,
    pub is_interval: bool,
    pub gaps: String,
});

row!(CapacityRow ["n", "partition", "s", "t", "dim_loc"] {
    pub n: u32,
    pub partition: Partition,
    pub s: u32,
    pub t: u32,
    pub dim_loc: u32,
});

row!(BoundaryRowOut ["n", "r", "b_E", "b_lower", "b_upper", "b_V"] {
    pub n: u32,
    pub r: u32,
    #[serde(rename = "b_E")]
    pub b_e: usize,
    pub b_lower: usize,
    pub b_upper: usize,
    #[serde(rename = "b_V")]
    pub b_v: usize,
});

row!(CrossEdgeRow ["n", "r", "s", "count"] {
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub count: usize,
});

row!(JumpRow ["n", "max_jump"] {
    pub n: u32,
    pub max_jump: u32,
});

row!(FirstOccurrenceRow ["r", "n_first", "size_F", "staircase_match", "representatives"] {
    pub r: u32,
    /// Empty when the layer was not found in the scanned window.
    pub n_first: Option<u32>,
    #[serde(rename = "size_F")]
    pub size_f: usize,
    pub staircase_match: bool,
    pub representatives: String,
});

row!(FirstOccurrenceMemberRow ["r", "n_first", "partition", "s", "t"] {
    pub r: u32,
    pub n_first: u32,
    pub partition: Partition,
    pub s: u32,
    pub t: u32,
});

row!(SequenceRow ["index", "value"] {
    pub index: u32,
    pub value: u64,
});

row!(RestrictedRow ["n", "region", "r", "count"] {
    pub n: u32,
    pub region: String,
    pub r: u32,
    pub count: usize,
});

row!(RestrictedBoundaryRow ["n", "region", "r", "b_E"] {
    pub n: u32,
    pub region: String,
    pub r: u32,
    #[serde(rename = "b_E")]
    pub b_e: usize,
});

row!(VertexRow ["n", "vertex_id", "partition", "neighbor_ids"] {
    pub n: u32,
    pub vertex_id: usize,
    pub partition: Partition,
    pub neighbor_ids: String,
});

row!(EdgeRow ["n", "src_id", "dst_id"] {
    pub n: u32,
    pub src_id: usize,
    pub dst_id: usize,
});

row!(OracleRow ["n", "checked", "mismatches", "s_conj_invariant", "t_conj_invariant"] {
    pub n: u32,
    pub checked: usize,
    pub mismatches: usize,
    pub s_conj_invariant: bool,
    pub t_conj_invariant: bool,
});

/// A named integer sequence starting at `offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceFile {
    pub name: String,
    pub offset: u32,
    pub values: Vec<u64>,
}

impl SequenceFile {
    fn rows(&self) -> Vec<SequenceRow> {
        (self.offset..)
            .zip(&self.values)
            .map(|(index, &value)| SequenceRow { index, value })
            .collect()
    }
}

fn exporter(config: &AtlasConfig) -> Result<Exporter> {
    Exporter::new(&config.output_dir, config.format)
}

fn report_written(ex: &Exporter, out: &mut dyn Write) -> Result<()> {
    for path in ex.written() {
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(())
}

fn stratifications(config: &AtlasConfig) -> Result<Vec<Stratification>> {
    config
        .window()
        .into_par_iter()
        .map(Stratification::build)
        .collect::<layer_atlas::Result<_>>()
        .map_err(Into::into)
}

pub fn profile(config: &AtlasConfig, out: &mut dyn Write) -> Result<()> {
    let profiles = profile_sweep(config.n_min, config.n_max)?;
    let rows: Vec<ProfileRow> = profiles
        .iter()
        .flat_map(|p| {
            p.counts.iter().map(move |(&r, &count)| ProfileRow {
                n: p.n,
                r,
                count,
            })
        })
        .collect();
    let summary: Vec<ProfileSummaryRow> = profiles
        .iter()
        .map(|p| ProfileSummaryRow {
            n: p.n,
            delta_min: p.delta_min,
            delta_max: p.delta_max,
            top_size: p.top_size,
            p_n: p.p_n,
            is_interval: p.is_interval,
            gaps: join(&p.gaps),
        })
        .collect();
    let mut ex = exporter(config)?;
    ex.table("profiles", &rows)?;
    ex.table("profile_summary", &summary)?;
    report_written(&ex, out)
}

pub fn layers(config: &AtlasConfig, out: &mut dyn Write) -> Result<()> {
    let per_n: Vec<Vec<CapacityRow>> = config
        .window()
        .into_par_iter()
        .map(|n| {
            let records = layer_atlas::layer_assignment(n)?.records;
            Ok(records
                .into_iter()
                .map(|rec| CapacityRow {
                    n,
                    partition: rec.partition,
                    s: rec.s,
                    t: rec.t,
                    dim_loc: rec.dim_loc,
                })
                .collect())
        })
        .collect::<layer_atlas::Result<_>>()?;
    let rows: Vec<CapacityRow> = per_n.into_iter().flatten().collect();
    let mut ex = exporter(config)?;
    ex.table("capacities", &rows)?;
    report_written(&ex, out)
}

pub fn boundaries(config: &AtlasConfig, out: &mut dyn Write) -> Result<()> {
    let tables: Vec<BoundaryTable> = stratifications(config)?
        .par_iter()
        .map(boundary_table_in)
        .collect();
    let mut rows = Vec::new();
    let mut cross = Vec::new();
    let mut jumps = Vec::new();
    for t in &tables {
        rows.extend(t.rows.iter().map(|row| BoundaryRowOut {
            n: t.n,
            r: row.r,
            b_e: row.b_e,
            b_lower: row.b_lower,
            b_upper: row.b_upper,
            b_v: row.b_v,
        }));
        cross.extend(t.cross_counts.iter().map(|c| CrossEdgeRow {
            n: t.n,
            r: c.r,
            s: c.s,
            count: c.count,
        }));
        jumps.push(JumpRow {
            n: t.n,
            max_jump: t.max_jump,
        });
    }
    let mut ex = exporter(config)?;
    ex.table("boundaries", &rows)?;
    ex.table("cross_edges", &cross)?;
    ex.table("jumps", &jumps)?;
    report_written(&ex, out)
}

pub fn first_occurrence(config: &AtlasConfig, out: &mut dyn Write) -> Result<()> {
    let records = first_occurrence_scan(config.r_max, config.n_max)?;
    let mut rows = Vec::new();
    let mut members = Vec::new();
    for rec in &records {
        let reps = representatives_up_to_conjugation(&rec.members)?;
        rows.push(FirstOccurrenceRow {
            r: rec.r,
            n_first: rec.n_first(),
            size_f: rec.members.len(),
            staircase_match: rec.staircase_match,
            representatives: join(&reps),
        });
        if let Some(n_first) = rec.n_first() {
            members.extend(rec.member_capacities.iter().map(|c| FirstOccurrenceMemberRow {
                r: rec.r,
                n_first,
                partition: c.partition.clone(),
                s: c.s,
                t: c.t,
            }));
        }
        match rec.n_first() {
            Some(n) => writeln!(
                out,
                "r={} n_first={n} |F|={} staircase_match={}",
                rec.r,
                rec.members.len(),
                rec.staircase_match
            )?,
            None => writeln!(out, "r={} not-found-below({})", rec.r, config.n_max)?,
        }
    }
    let mut ex = exporter(config)?;
    ex.table("first_occurrence", &rows)?;
    ex.table("first_occurrence_members", &members)?;
    report_written(&ex, out)
}

/// Builds all sequences: `delta_loc`, `tau_top`, `a_r` and `b_r` over the
/// window (offset `n_min`), and `n_first` over `r = 0..` (offset 0), cut at
/// the first layer not found within `n_max`.
pub fn build_sequences(config: &AtlasConfig) -> Result<Vec<SequenceFile>> {
    let profiles = profile_sweep(config.n_min, config.n_max)?;
    let tables: Vec<BoundaryTable> = stratifications(config)?
        .par_iter()
        .map(boundary_table_in)
        .collect();
    let offset = config.n_min;
    let mut seqs = vec![
        SequenceFile {
            name: "delta_loc".into(),
            offset,
            values: profiles.iter().map(|p| p.delta_max as u64).collect(),
        },
        SequenceFile {
            name: "tau_top".into(),
            offset,
            values: profiles.iter().map(|p| p.top_size as u64).collect(),
        },
    ];
    let records = first_occurrence_scan(config.r_max, config.n_max)?;
    seqs.push(SequenceFile {
        name: "n_first".into(),
        offset: 0,
        values: records
            .iter()
            .map_while(|r| r.n_first().map(u64::from))
            .collect(),
    });
    let fixed: BTreeSet<u32> = config.fixed_r.iter().copied().collect();
    for &r in &fixed {
        seqs.push(SequenceFile {
            name: format!("a_{r}"),
            offset,
            values: profiles.iter().map(|p| p.count(r) as u64).collect(),
        });
    }
    for &r in &fixed {
        seqs.push(SequenceFile {
            name: format!("b_{r}"),
            offset,
            values: tables
                .iter()
                .map(|t| t.row(r).map_or(0, |row| row.b_e as u64))
                .collect(),
        });
    }
    Ok(seqs)
}

pub fn sequences(config: &AtlasConfig, out: &mut dyn Write) -> Result<()> {
    let seqs = build_sequences(config)?;
    let mut ex = exporter(config)?;
    for seq in &seqs {
        ex.table(&seq.name, &seq.rows())?;
    }
    report_written(&ex, out)
}

fn load_regions(config: &AtlasConfig) -> Result<Vec<RegionPredicate>> {
    let mut regions = Vec::new();
    for name in &config.regions {
        let region = builtin_region(name).with_context(|| {
            let known: Vec<String> = builtin_regions().iter().map(|r| r.name().to_string()).collect();
            format!(
                "unknown region {name:?}; built-in regions: {}; load others with --region-file",
                known.join(", ")
            )
        })?;
        regions.push(region);
    }
    for path in &config.region_files {
        regions.push(load_region_file(path)?);
    }
    if regions.is_empty() {
        regions = builtin_regions();
    }
    Ok(regions)
}

fn load_region_file(path: &Path) -> Result<RegionPredicate> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading region file {}", path.display()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "region".into());
    parse_region_file(&name, &text).with_context(|| format!("parsing {}", path.display()))
}

pub fn restricted(config: &AtlasConfig, out: &mut dyn Write) -> Result<()> {
    let regions = load_regions(config)?;
    let strats = stratifications(config)?;
    let mut counts = Vec::new();
    let mut bounds = Vec::new();
    for strat in &strats {
        let table = boundary_table_in(strat);
        for region in &regions {
            for (r, count) in restricted_layer_counts_in(strat.assignment(), region)? {
                counts.push(RestrictedRow {
                    n: strat.n(),
                    region: region.name().to_string(),
                    r,
                    count,
                });
            }
            for row in &table.rows {
                bounds.push(RestrictedBoundaryRow {
                    n: strat.n(),
                    region: region.name().to_string(),
                    r: row.r,
                    b_e: restricted_boundary_count_in(strat, region, row.r)?,
                });
            }
        }
    }
    let mut ex = exporter(config)?;
    ex.table("restricted", &counts)?;
    ex.table("restricted_boundaries", &bounds)?;
    report_written(&ex, out)
}

pub fn graph_export(config: &AtlasConfig, out: &mut dyn Write) -> Result<()> {
    let strats = stratifications(config)?;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for strat in &strats {
        let g = strat.graph();
        let n = g.n();
        for (id, v) in g.vertices().iter().enumerate() {
            vertices.push(VertexRow {
                n,
                vertex_id: id,
                partition: v.clone(),
                neighbor_ids: join(g.neighbor_ids(id)),
            });
        }
        edges.extend(g.edges().iter().map(|&(src_id, dst_id)| EdgeRow { n, src_id, dst_id }));
    }
    let mut ex = exporter(config)?;
    ex.table("graph", &vertices)?;
    ex.table("edges", &edges)?;
    report_written(&ex, out)
}

/// Capacity source checked by `verify-oracle`; swapped out in tests to
/// confirm that a wrong value is caught.
pub type CapacitySource<'a> = &'a (dyn Fn(&Partition) -> CapacityRecord + Sync);

/// Runs the clique-oracle comparison for `n <= oracle_n_max`, the fixed
/// small-n capacity table, and the initial first-occurrence sets. Returns
/// whether everything matched; mismatches are dumped to `out`.
pub fn verify(config: &AtlasConfig, caps: CapacitySource<'_>, out: &mut dyn Write) -> Result<bool> {
    let mut ok = true;
    let mut rows = Vec::new();

    for n in 1..=config.oracle_n_max {
        let report = verify_dimension_formula_with(n, |l| caps(l).dim_loc)?;
        let (s_inv, t_inv) = capacity_conjugation_flags(n, caps)?;
        writeln!(
            out,
            "oracle n={n} checked={} mismatches={} elapsed_ms={} s_conj_invariant={s_inv} t_conj_invariant={t_inv}",
            report.checked,
            report.mismatches.len(),
            report.elapsed.as_millis(),
        )?;
        for m in &report.mismatches {
            writeln!(
                out,
                "  MISMATCH n={n} partition={} formula_dim={} oracle_dim={}",
                m.partition, m.formula_dim, m.oracle_dim
            )?;
        }
        ok &= report.verified();
        rows.push(OracleRow {
            n,
            checked: report.checked,
            mismatches: report.mismatches.len(),
            s_conj_invariant: s_inv,
            t_conj_invariant: t_inv,
        });
    }

    let mut table_mismatches = 0;
    for (text, s, t, dim) in golden::SMALL_CAPACITIES {
        let lambda: Partition = text.parse()?;
        let rec = caps(&lambda);
        if (rec.s, rec.t, rec.dim_loc) != (s, t, dim) {
            table_mismatches += 1;
            writeln!(
                out,
                "  MISMATCH reference {text}: expected (s,t,dim)=({s},{t},{dim}), got ({},{},{})",
                rec.s, rec.t, rec.dim_loc
            )?;
        }
    }
    writeln!(
        out,
        "reference-capacities checked={} mismatches={table_mismatches}",
        golden::SMALL_CAPACITIES.len()
    )?;
    ok &= table_mismatches == 0;

    let mut first_ok = true;
    for (r, n_expected, members) in golden::INITIAL_FIRST_OCCURRENCES {
        let expected: BTreeSet<Partition> =
            members.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
        let found = first_layer_hit(r, 10, caps)?;
        let matches = found.as_ref() == Some(&(n_expected, expected));
        if !matches {
            first_ok = false;
            writeln!(
                out,
                "  MISMATCH first occurrence r={r}: expected n={n_expected}, got {:?}",
                found.map(|(n, _)| n)
            )?;
        }
    }
    writeln!(
        out,
        "reference-first-occurrence r=0..3 {}",
        if first_ok { "ok" } else { "FAILED" }
    )?;
    ok &= first_ok;

    let mut ex = exporter(config)?;
    ex.table("oracle", &rows)?;
    report_written(&ex, out)?;
    writeln!(out, "verify: {}", if ok { "PASS" } else { "FAIL" })?;
    Ok(ok)
}

fn first_layer_hit(
    r: u32,
    n_max: u32,
    caps: CapacitySource<'_>,
) -> Result<Option<(u32, BTreeSet<Partition>)>> {
    for n in 1..=n_max {
        let members: BTreeSet<Partition> = enumerate_partitions(n)?
            .into_iter()
            .filter(|l| caps(l).dim_loc == r)
            .collect();
        if !members.is_empty() {
            return Ok(Some((n, members)));
        }
    }
    Ok(None)
}

/// Whether `s(λ') = s(λ)` and `t(λ') = t(λ)` hold for every partition of `n`.
/// Reported only.
fn capacity_conjugation_flags(n: u32, caps: CapacitySource<'_>) -> Result<(bool, bool)> {
    let mut s_inv = true;
    let mut t_inv = true;
    for l in enumerate_partitions(n)? {
        let (a, b) = (caps(&l), caps(&l.conjugate()));
        s_inv &= a.s == b.s;
        t_inv &= a.t == b.t;
    }
    Ok((s_inv, t_inv))
}

pub fn default_capacities(lambda: &Partition) -> CapacityRecord {
    capacity_record(lambda)
}
