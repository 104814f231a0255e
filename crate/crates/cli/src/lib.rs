//! Command-line driver for the layer atlas: parses flags and config, sets up
//! the worker pool, and dispatches to [`commands`].

pub mod commands;
pub mod config;
pub mod export;
pub mod golden;

use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::config::{AtlasConfig, Format, PartialConfig, OUT_DIR_ENV};

#[derive(Debug, Parser)]
#[command(name = "layer-atlas", version, about = "Layer stratification datasets for partition graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub shared: SharedArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Layer sizes a_{n,r} and per-n summaries
    Profile,
    /// Star/top capacities and local dimension of every partition
    Layers,
    /// Adjacent-layer boundaries, cross-layer edge counts, edge jumps
    Boundaries,
    /// First n at which each layer appears
    FirstOccurrence,
    /// Check the capacity formula against brute-force clique search
    VerifyOracle,
    /// Integer sequences in index,value form
    Sequences,
    /// Layer and boundary counts inside distinguished regions
    Restricted,
    /// Vertex and edge lists of the partition graphs
    GraphExport,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SharedArgs {
    #[arg(long, global = true)]
    pub n_min: Option<u32>,
    #[arg(long, global = true)]
    pub n_max: Option<u32>,
    #[arg(long, global = true)]
    pub r_max: Option<u32>,
    #[arg(long, global = true)]
    pub oracle_n_max: Option<u32>,
    /// Built-in region name; repeatable
    #[arg(long = "region", global = true)]
    pub regions: Vec<String>,
    /// Region given as partition lists under `# n=K` headers; repeatable
    #[arg(long = "region-file", global = true)]
    pub region_files: Vec<PathBuf>,
    /// Layer values for the a_r and b_r sequences, comma-separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub fixed_r: Vec<u32>,
    /// Output directory [env: LAYER_ATLAS_OUT; default: atlas-out]
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads, 0 for one per CPU
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// TOML config file; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

fn non_empty<T: Clone>(v: &[T]) -> Option<Vec<T>> {
    (!v.is_empty()).then(|| v.to_vec())
}

impl SharedArgs {
    fn as_partial(&self) -> PartialConfig {
        PartialConfig {
            n_min: self.n_min,
            n_max: self.n_max,
            r_max: self.r_max,
            oracle_n_max: self.oracle_n_max,
            regions: non_empty(&self.regions),
            region_files: non_empty(&self.region_files),
            fixed_r: non_empty(&self.fixed_r),
            output_dir: self.out.clone(),
            format: self.format,
            parallelism: self.jobs,
        }
    }

    pub fn resolve(&self) -> Result<AtlasConfig> {
        let file = match &self.config {
            Some(path) => PartialConfig::from_file(path)?,
            None => PartialConfig::default(),
        };
        let env_out = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
        file.overlay(self.as_partial()).resolve(env_out)
    }
}

/// Runs one command. `Ok(false)` means a verification failure.
pub fn run(command: Command, config: &AtlasConfig, out: &mut (dyn Write + Send)) -> Result<bool> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .context("starting worker pool")?;
    pool.install(|| {
        match command {
            Command::Profile => commands::profile(config, out)?,
            Command::Layers => commands::layers(config, out)?,
            Command::Boundaries => commands::boundaries(config, out)?,
            Command::FirstOccurrence => commands::first_occurrence(config, out)?,
            Command::VerifyOracle => {
                return commands::verify(config, &commands::default_capacities, out)
            }
            Command::Sequences => commands::sequences(config, out)?,
            Command::Restricted => commands::restricted(config, out)?,
            Command::GraphExport => commands::graph_export(config, out)?,
        }
        Ok(true)
    })
}
