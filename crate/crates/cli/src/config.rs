//! Run configuration: defaults, an optional TOML file, then flags.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Deserialize;

pub const OUT_DIR_ENV: &str = "LAYER_ATLAS_OUT";

const DEFAULT_N_MAX: u32 = 29;
const DEFAULT_R_MAX: u32 = 7;
const DEFAULT_ORACLE_N_MAX: u32 = 20;
const DEFAULT_OUT: &str = "atlas-out";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Both,
}

impl Format {
    pub fn csv(self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }

    pub fn json(self) -> bool {
        matches!(self, Format::Json | Format::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasConfig {
    pub n_min: u32,
    pub n_max: u32,
    pub r_max: u32,
    pub oracle_n_max: u32,
    pub regions: Vec<String>,
    pub region_files: Vec<PathBuf>,
    /// Layer values for the fixed-r sequences `a_r` and `b_r`.
    pub fixed_r: Vec<u32>,
    pub output_dir: PathBuf,
    pub format: Format,
    /// Worker count; 0 picks the number of CPUs.
    pub parallelism: usize,
}

/// Everything a config file or the command line may set.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialConfig {
    pub n_min: Option<u32>,
    pub n_max: Option<u32>,
    pub r_max: Option<u32>,
    pub oracle_n_max: Option<u32>,
    pub regions: Option<Vec<String>>,
    pub region_files: Option<Vec<PathBuf>>,
    pub fixed_r: Option<Vec<u32>>,
    pub output_dir: Option<PathBuf>,
    pub format: Option<Format>,
    pub parallelism: Option<usize>,
}

impl PartialConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config file {}", path.display()))
    }

    /// Fields set in `over` win.
    pub fn overlay(self, over: PartialConfig) -> PartialConfig {
        PartialConfig {
            n_min: over.n_min.or(self.n_min),
            n_max: over.n_max.or(self.n_max),
            r_max: over.r_max.or(self.r_max),
            oracle_n_max: over.oracle_n_max.or(self.oracle_n_max),
            regions: over.regions.or(self.regions),
            region_files: over.region_files.or(self.region_files),
            fixed_r: over.fixed_r.or(self.fixed_r),
            output_dir: over.output_dir.or(self.output_dir),
            format: over.format.or(self.format),
            parallelism: over.parallelism.or(self.parallelism),
        }
    }

    /// Fills defaults and validates. `env_out` is the output directory taken
    /// from the environment, used when neither file nor flags set one.
    pub fn resolve(self, env_out: Option<PathBuf>) -> Result<AtlasConfig> {
        let n_min = self.n_min.unwrap_or(1);
        let n_max = self.n_max.unwrap_or(DEFAULT_N_MAX);
        let oracle_n_max = self
            .oracle_n_max
            .unwrap_or_else(|| DEFAULT_ORACLE_N_MAX.min(n_max));
        let config = AtlasConfig {
            n_min,
            n_max,
            r_max: self.r_max.unwrap_or(DEFAULT_R_MAX),
            oracle_n_max,
            regions: self.regions.unwrap_or_default(),
            region_files: self.region_files.unwrap_or_default(),
            fixed_r: self.fixed_r.unwrap_or_else(|| vec![1, 2, 3]),
            output_dir: self
                .output_dir
                .or(env_out)
                .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT)),
            format: self.format.unwrap_or(Format::Csv),
            parallelism: self.parallelism.unwrap_or(0),
        };
        config.validate()?;
        Ok(config)
    }
}

impl AtlasConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 1 {
            bail!("--n-min must be at least 1");
        }
        if self.n_min > self.n_max {
            bail!("--n-min ({}) exceeds --n-max ({})", self.n_min, self.n_max);
        }
        if self.oracle_n_max > self.n_max {
            bail!(
                "--oracle-n-max ({}) exceeds --n-max ({})",
                self.oracle_n_max,
                self.n_max
            );
        }
        Ok(())
    }

    pub fn window(&self) -> std::ops::RangeInclusive<u32> {
        self.n_min..=self.n_max
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = PartialConfig::default().resolve(None).unwrap();
        assert_eq!((c.n_min, c.n_max, c.r_max, c.oracle_n_max), (1, 29, 7, 20));
        assert_eq!(c.output_dir, PathBuf::from("atlas-out"));
        assert_eq!(c.format, Format::Csv);
    }

    #[test]
    fn oracle_ceiling_follows_small_windows() {
        let c = PartialConfig {
            n_max: Some(7),
            ..Default::default()
        }
        .resolve(None)
        .unwrap();
        assert_eq!(c.oracle_n_max, 7);
    }

    #[test]
    fn flags_override_file_and_env() {
        let file: PartialConfig =
            toml::from_str("n_max = 12\nformat = \"json\"\noutput_dir = \"from-file\"").unwrap();
        let flags = PartialConfig {
            n_max: Some(9),
            ..Default::default()
        };
        let c = file
            .overlay(flags)
            .resolve(Some(PathBuf::from("from-env")))
            .unwrap();
        assert_eq!(c.n_max, 9);
        assert_eq!(c.format, Format::Json);
        assert_eq!(c.output_dir, PathBuf::from("from-file"));

        let c = PartialConfig::default()
            .resolve(Some(PathBuf::from("from-env")))
            .unwrap();
        assert_eq!(c.output_dir, PathBuf::from("from-env"));
    }

    #[test]
    fn invalid_windows_are_rejected() {
        let bad = |p: PartialConfig| p.resolve(None).is_err();
        assert!(bad(PartialConfig {
            n_min: Some(0),
            ..Default::default()
        }));
        assert!(bad(PartialConfig {
            n_min: Some(5),
            n_max: Some(4),
            ..Default::default()
        }));
        assert!(bad(PartialConfig {
            n_max: Some(10),
            oracle_n_max: Some(11),
            ..Default::default()
        }));
        assert!(toml::from_str::<PartialConfig>("bogus = 1").is_err());
    }
}
