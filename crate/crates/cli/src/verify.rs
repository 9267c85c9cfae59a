use std::fmt::Write as _;

use hypertri_core::oracle::{
    brute_force_census, brute_force_degeneracy, brute_force_edge_degrees, brute_force_gamma,
    brute_force_min_max_outdegree, generate_random, RandomInstanceSpec, MAX_CENSUS_EDGES,
    MAX_DEGENERACY_VERTICES, MAX_ORDERING_VERTICES,
};
use hypertri_core::{count_all, EdgeDegreeTable, Hypergraph, OrientedHypergraph, PatternCounts};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};

pub const MIN_VERTICES: usize = 4;
pub const MIN_EDGES: usize = 3;
pub const MAX_ARITY: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub instances: usize,
    pub max_n: usize,
    pub max_m: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            instances: 200,
            max_n: 12,
            max_m: 15,
        }
    }
}

/// Deliberate corruption of the pipeline output, for testing the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub instance: usize,
    pub pattern: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifySummary {
    pub instances: usize,
    pub checks: usize,
    pub ordering_checks: usize,
}

impl std::fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "verify: {} instances, {} checks ({} exhaustive ordering checks), all passed",
            self.instances, self.checks, self.ordering_checks
        )
    }
}

impl VerifyConfig {
    fn validate(&self) -> CliResult<()> {
        if self.max_n < MIN_VERTICES || self.max_n > MAX_DEGENERACY_VERTICES {
            return Err(CliError::Config(format!(
                "--max-n must lie in [{MIN_VERTICES}, {MAX_DEGENERACY_VERTICES}], got {}",
                self.max_n
            )));
        }
        if self.max_m < MIN_EDGES || self.max_m > MAX_CENSUS_EDGES {
            return Err(CliError::Config(format!(
                "--max-m must lie in [{MIN_EDGES}, {MAX_CENSUS_EDGES}], got {}",
                self.max_m
            )));
        }
        Ok(())
    }

    /// Instance parameters, drawn from the master seed.
    pub fn instance_specs(&self) -> Vec<RandomInstanceSpec> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.instances)
            .map(|_| {
                let n = rng.gen_range(MIN_VERTICES..=self.max_n);
                let max_arity = rng.gen_range(2..=MAX_ARITY.min(n));
                let capacity: usize = (2..=max_arity).map(|k| binomial(n, k)).sum();
                let m = rng.gen_range(MIN_EDGES..=self.max_m).min(capacity);
                let mut spec = RandomInstanceSpec::new(n, m, max_arity, rng.gen());
                spec.nesting_percent = rng.gen_range(0..=60);
                spec
            })
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Check the pipeline against the brute-force oracles on seeded random
/// instances: census, degeneracy (and, for `n ≤ 7`, the minimum over all
/// orderings of the maximum out-degree), edge degrees and complement counts.
pub fn cmd_verify(config: &VerifyConfig) -> CliResult<VerifySummary> {
    run_verify(config, None)
}

#[doc(hidden)]
pub fn cmd_verify_with_fault(config: &VerifyConfig, fault: Fault) -> CliResult<VerifySummary> {
    run_verify(config, Some(fault))
}

fn run_verify(config: &VerifyConfig, fault: Option<Fault>) -> CliResult<VerifySummary> {
    config.validate()?;
    let mut summary = VerifySummary::default();
    for (i, spec) in config.instance_specs().into_iter().enumerate() {
        let g = generate_random(&spec)?;
        let mut census = count_all(&g)?;
        if let Some(f) = fault.filter(|f| f.instance == i) {
            census.counts.set(f.pattern, census.counts.c(f.pattern) + 1);
        }

        let expected = brute_force_census(&g)?;
        if census.counts != expected {
            return Err(mismatch(i, &spec, &g, "census", &format_counts(&census.counts), &format_counts(&expected)));
        }

        let kappa = brute_force_degeneracy(&g)?;
        if census.kappa != kappa {
            return Err(mismatch(i, &spec, &g, "degeneracy", &census.kappa.to_string(), &kappa.to_string()));
        }
        if g.n() <= MAX_ORDERING_VERTICES {
            let best = brute_force_min_max_outdegree(&g)?;
            if census.kappa != best {
                return Err(mismatch(
                    i,
                    &spec,
                    &g,
                    "min-max out-degree",
                    &census.kappa.to_string(),
                    &best.to_string(),
                ));
            }
            summary.ordering_checks += 1;
            summary.checks += 1;
        }

        let table = EdgeDegreeTable::compute(&OrientedHypergraph::degeneracy(&g))?;
        let expected_table = brute_force_edge_degrees(&g)?;
        if table != expected_table {
            return Err(mismatch(
                i,
                &spec,
                &g,
                "edge degrees",
                &format!("{table:?}"),
                &format!("{expected_table:?}"),
            ));
        }

        let gamma = brute_force_gamma(&g)?;
        if census.gamma != gamma {
            return Err(mismatch(
                i,
                &spec,
                &g,
                "complement counts",
                &format!("{:?}", census.gamma.0),
                &format!("{:?}", gamma.0),
            ));
        }
        summary.checks += 4;
        summary.instances += 1;
    }
    Ok(summary)
}

fn format_counts(c: &PatternCounts) -> String {
    c.as_array().iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn mismatch(i: usize, spec: &RandomInstanceSpec, g: &Hypergraph, what: &str, got: &str, want: &str) -> CliError {
    let mut s = String::new();
    let _ = writeln!(s, "instance {i}: {what} mismatch ({spec:?})");
    let _ = writeln!(s, "--- instance (n = {}, m = {}) ---", g.n(), g.m());
    s.push_str(&g.to_edge_list());
    let _ = writeln!(s, "--- pipeline ---\n{got}");
    let _ = write!(s, "--- oracle ---\n{want}");
    CliError::VerifyFailed(s)
}
