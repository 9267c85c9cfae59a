use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use hypertri_core::{
    count_all, parse_edge_list, EdgeDegreeTable, Hypergraph, IngestReport, OrientedHypergraph, ParseOptions,
};

use crate::error::{CliError, CliResult};
use crate::report::{CensusReport, OutputFormat};

/// Options of the `count` command.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: OutputFormat,
    /// Report destination; standard output when absent.
    pub output: Option<PathBuf>,
    /// Directory for `degree_dist.csv` and `outdegree_dist.csv`.
    pub dump_degrees: Option<PathBuf>,
    /// File for the per-edge degree table.
    pub dump_edge_degrees: Option<PathBuf>,
    pub allow_empty: bool,
}

pub fn load(path: &Path, allow_empty: bool) -> CliResult<(Hypergraph, IngestReport)> {
    let file = File::open(path).map_err(|e| CliError::io(format!("cannot open {}", path.display()), e))?;
    Ok(parse_edge_list(BufReader::new(file), &ParseOptions { allow_empty })?)
}

/// Run the census on `config.input`, write the report and any requested
/// dumps. Every file is written through a temporary file and renamed into
/// place, so a failed run leaves no partial output.
pub fn cmd_count(config: &RunConfig) -> CliResult<CensusReport> {
    let (g, ingest) = load(&config.input, config.allow_empty)?;
    let census = count_all(&g)?;
    let report = CensusReport::new(g.stats(), &census, ingest);

    if config.dump_degrees.is_some() || config.dump_edge_degrees.is_some() {
        let dah = OrientedHypergraph::degeneracy(&g);
        if let Some(dir) = &config.dump_degrees {
            cmd_dump_distributions(&g, &dah, dir)?;
        }
        if let Some(path) = &config.dump_edge_degrees {
            let table = EdgeDegreeTable::compute(&dah)?;
            write_atomic(path, render_edge_degrees(&g, &table).as_bytes())?;
        }
    }

    let rendered = report.render(config.format);
    match &config.output {
        Some(path) => write_atomic(path, rendered.as_bytes())?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(rendered.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("cannot write to stdout", e))?;
        }
    }
    Ok(report)
}

/// Write `degree_dist.csv` and `outdegree_dist.csv` (columns `value,count`,
/// ascending by value) into `dir`.
pub fn cmd_dump_distributions(g: &Hypergraph, dah: &OrientedHypergraph, dir: &Path) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(format!("cannot create {}", dir.display()), e))?;
    let degrees = histogram((0..g.n() as u32).map(|v| g.incident(v).len() as u64));
    let outdegrees = histogram((0..dah.n() as u32).map(|r| dah.out_degree(r)));
    write_atomic(&dir.join("degree_dist.csv"), render_histogram(&degrees).as_bytes())?;
    write_atomic(&dir.join("outdegree_dist.csv"), render_histogram(&outdegrees).as_bytes())?;
    Ok(())
}

pub fn histogram(values: impl Iterator<Item = u64>) -> BTreeMap<u64, u64> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

fn render_histogram(h: &BTreeMap<u64, u64>) -> String {
    let mut out = String::from("value,count\n");
    for (v, c) in h {
        out.push_str(&format!("{v},{c}\n"));
    }
    out
}

/// Per-edge degree table as CSV, one row per edge in input order.
pub fn render_edge_degrees(g: &Hypergraph, t: &EdgeDegreeTable) -> String {
    let mut out = String::from("edge,arity,d_prime,d_anc,d_desc,d_int\n");
    for e in 0..g.m() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            e,
            g.arity(e as u32),
            t.d_prime[e],
            t.d_anc[e],
            t.d_desc[e],
            t.d_int[e]
        ));
    }
    out
}

/// Write `bytes` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> CliResult<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let ctx = || format!("cannot write {}", path.display());
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(ctx(), e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(ctx(), e))?;
    tmp.as_file().sync_all().map_err(|e| CliError::io(ctx(), e))?;
    tmp.persist(path).map_err(|e| CliError::io(ctx(), e.error))?;
    Ok(())
}
