//! Table writers. Every table is written as CSV, as a JSON array with the
//! same field names, or both, depending on the configured format.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use crate::config::Format;

/// A table row with a fixed CSV header matching its serialized field names.
pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
}

pub struct Exporter {
    dir: PathBuf,
    format: Format,
    written: Vec<PathBuf>,
}

impl Exporter {
    pub fn new(dir: &Path, format: Format) -> Result<Self> {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating output directory {}", dir.display()))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            format,
            written: Vec::new(),
        })
    }

    /// Writes `rows` as `<stem>.csv` and/or `<stem>.json`.
    pub fn table<T: Row>(&mut self, stem: &str, rows: &[T]) -> Result<()> {
        if self.format.csv() {
            let path = self.dir.join(format!("{stem}.csv"));
            write_csv(&path, rows).with_context(|| format!("writing {}", path.display()))?;
            self.written.push(path);
        }
        if self.format.json() {
            let path = self.dir.join(format!("{stem}.json"));
            write_json(&path, rows).with_context(|| format!("writing {}", path.display()))?;
            self.written.push(path);
        }
        Ok(())
    }

    pub fn written(&self) -> &[PathBuf] {
        &self.written
    }
}

fn write_csv<T: Row>(path: &Path, rows: &[T]) -> Result<()> {
    // Header is explicit so empty tables still carry it.
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_path(path)?;
    w.write_record(T::HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, rows)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

/// Semicolon-joined list, used for list-valued CSV cells.
pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}
