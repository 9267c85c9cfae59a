//! Inputs shared by the benchmarks.

use std::path::{Path, PathBuf};

use hypertri_core::oracle::{generate_random, RandomInstanceSpec};
use hypertri_core::{parse_edge_list, Hypergraph, ParseOptions};

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// A dataset from the workspace `data/` directory, if present.
pub fn dataset(file: &str) -> Option<Hypergraph> {
    let f = std::fs::File::open(data_dir().join(file)).ok()?;
    parse_edge_list(std::io::BufReader::new(f), &ParseOptions::default())
        .ok()
        .map(|(g, _)| g)
}

/// Seeded random instance with `m` edges of arity at most `r` on `n` labels.
pub fn random(n: usize, m: usize, r: usize, seed: u64) -> Hypergraph {
    generate_random(&RandomInstanceSpec::new(n, m, r, seed)).expect("feasible benchmark instance")
}
