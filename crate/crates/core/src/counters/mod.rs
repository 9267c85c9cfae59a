//! The census pipeline.
//!
//! Only the triangle-based patterns (4, 5, 7, 8, 11–20) and patterns 2, 3 are
//! enumerated. Everything else follows from aggregates that are cheap under a
//! degeneracy orientation:
//!
//! * pattern 1 and 6 from ancestor / descendant / intersection degrees,
//! * patterns 9 and 10 from the star count `S` and the weighted extended-star
//!   count `WS*`,
//! * patterns 21–26 from the complement counts `γ`, the degree tables and the
//!   total `Σ_e C(d'(e), 2)`.

mod containment;
mod open;
mod stars;
mod triangle;

use std::ops::Index;
use std::time::{Duration, Instant};

use crate::edge_degrees::EdgeDegreeTable;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::orientation::{peel, OrientedHypergraph};
use crate::pattern::PatternId;

pub use containment::{count_pattern1, count_pattern6, count_patterns_2_3};
pub use open::{compute_gamma, compute_local_indegrees, derive_open_counts, ComplementCounts, LocalIndegrees};
pub use stars::{compute_extended_stars, compute_stars, solve_star_counts};
pub use triangle::{count_triangle_based, TrianglePass};

/// Census vector `c(1..=26)`.
#[derive(Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct PatternCounts {
    c: [u64; PatternId::COUNT],
}

impl PatternCounts {
    pub fn from_array(c: [u64; PatternId::COUNT]) -> Self {
        PatternCounts { c }
    }

    pub fn as_array(&self) -> &[u64; PatternId::COUNT] {
        &self.c
    }

    /// Count of pattern `id` (1-based). Panics outside `1..=26`.
    #[inline]
    pub fn c(&self, id: usize) -> u64 {
        self.c[id - 1]
    }

    #[inline]
    pub fn set(&mut self, id: usize, value: u64) {
        self.c[id - 1] = value;
    }

    pub fn get(&self, id: PatternId) -> u64 {
        self.c[id.index()]
    }

    pub(crate) fn increment(&mut self, id: PatternId) -> Result<()> {
        let slot = &mut self.c[id.index()];
        *slot = slot.checked_add(1).ok_or(Error::Overflow("pattern count"))?;
        Ok(())
    }

    /// Sum of `c(lo..=hi)`.
    pub fn sum(&self, lo: usize, hi: usize) -> Result<u64> {
        self.c[lo - 1..hi]
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("pattern count sum"))
    }

    pub fn closed_total(&self) -> u64 {
        self.sum(1, 20).expect("closed total fits: bounded by sum of C(d', 2)")
    }

    pub fn open_total(&self) -> u64 {
        self.sum(21, 26).expect("open total fits: bounded by sum of C(d', 2)")
    }
}

impl Index<PatternId> for PatternCounts {
    type Output = u64;

    fn index(&self, id: PatternId) -> &u64 {
        &self.c[id.index()]
    }
}

impl std::fmt::Debug for PatternCounts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nonzero: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, x)| format!("c{}={}", i + 1, x))
            .collect();
        write!(f, "PatternCounts[{}]", nonzero.join(", "))
    }
}

/// Star count `S = Σ_{i≤16} c(i)` and weighted extended-star count `WS*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StarAggregates {
    pub stars: u64,
    pub ws_star: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    Degeneracy,
    EdgeDegrees,
    Triangle,
    Containment,
    Stars,
    ExtendedStars,
    OpenPatterns,
}

impl Phase {
    pub const ALL: [Phase; 7] = [
        Phase::Degeneracy,
        Phase::EdgeDegrees,
        Phase::Triangle,
        Phase::Containment,
        Phase::Stars,
        Phase::ExtendedStars,
        Phase::OpenPatterns,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            Phase::Degeneracy => "degeneracy",
            Phase::EdgeDegrees => "edge_degrees",
            Phase::Triangle => "triangle",
            Phase::Containment => "containment",
            Phase::Stars => "stars",
            Phase::ExtendedStars => "extended_stars",
            Phase::OpenPatterns => "open_patterns",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PhaseRecord {
    pub elapsed: Duration,
    /// Inner-loop iterations of the phase.
    pub iterations: u64,
}

/// Wall time and iteration counters per phase.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    records: [PhaseRecord; 7],
}

impl PhaseTimings {
    pub fn get(&self, phase: Phase) -> PhaseRecord {
        self.records[phase as usize]
    }

    fn record(&mut self, phase: Phase, start: Instant, iterations: u64) {
        let r = &mut self.records[phase as usize];
        r.elapsed += start.elapsed();
        r.iterations += iterations;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Phase, PhaseRecord)> + '_ {
        Phase::ALL.iter().map(|&p| (p, self.get(p)))
    }

    pub fn total(&self) -> Duration {
        self.records.iter().map(|r| r.elapsed).sum()
    }
}

/// Everything one run of the pipeline produces.
#[derive(Debug, Clone)]
pub struct Census {
    pub counts: PatternCounts,
    pub kappa: usize,
    pub stars: StarAggregates,
    pub gamma: ComplementCounts,
    pub timings: PhaseTimings,
}

/// Count all 26 patterns of `g`.
pub fn count_all(g: &Hypergraph) -> Result<Census> {
    let mut timings = PhaseTimings::default();

    let start = Instant::now();
    let peeling = peel(g);
    let kappa = peeling.kappa;
    let dah = OrientedHypergraph::build(g, peeling.ordering)?;
    timings.record(Phase::Degeneracy, start, g.n() as u64);
    if dah.kappa() != kappa {
        return Err(Error::consistency(format!(
            "peeling reported kappa {kappa}, orientation has max outdegree {}",
            dah.kappa()
        )));
    }

    let start = Instant::now();
    let table = EdgeDegreeTable::compute(&dah)?;
    timings.record(Phase::EdgeDegrees, start, g.input_size() as u64);
    check_degree_table(&table)?;

    count_oriented(&dah, &table, kappa, timings)
}

/// Count all patterns given an orientation and its degree table.
pub fn count_oriented(
    dah: &OrientedHypergraph,
    table: &EdgeDegreeTable,
    kappa: usize,
    mut timings: PhaseTimings,
) -> Result<Census> {
    let start = Instant::now();
    let tri = count_triangle_based(dah)?;
    timings.record(Phase::Triangle, start, tri.iterations);
    let mut counts = tri.counts;

    let start = Instant::now();
    counts.set(1, count_pattern1(table)?);
    let (c2, c3, pairs) = count_patterns_2_3(dah)?;
    counts.set(2, c2);
    counts.set(3, c3);
    counts.set(6, count_pattern6(table, &counts)?);
    timings.record(Phase::Containment, start, pairs);

    let start = Instant::now();
    let (stars, star_iters) = compute_stars(dah)?;
    timings.record(Phase::Stars, start, star_iters);

    let start = Instant::now();
    let (ws_star, ws_iters) = compute_extended_stars(dah)?;
    let (c9, c10) = solve_star_counts(stars, ws_star, &counts)?;
    counts.set(9, c9);
    counts.set(10, c10);
    timings.record(Phase::ExtendedStars, start, ws_iters);

    let start = Instant::now();
    let li = compute_local_indegrees(dah);
    let (gamma, gamma_iters) = compute_gamma(dah, &li)?;
    derive_open_counts(&gamma, table, &mut counts)?;
    timings.record(Phase::OpenPatterns, start, gamma_iters);

    check_total_counts(&counts, table)?;

    Ok(Census {
        counts,
        kappa,
        stars: StarAggregates { stars, ws_star },
        gamma,
        timings,
    })
}

fn check_degree_table(t: &EdgeDegreeTable) -> Result<()> {
    let anc: u64 = t.d_anc.iter().sum();
    let desc: u64 = t.d_desc.iter().sum();
    if anc != desc {
        return Err(Error::consistency(format!(
            "ancestor total {anc} differs from descendant total {desc}"
        )));
    }
    Ok(())
}

/// `Σ_{i≥21} c(i) + 3 Σ_{i≤20} c(i) = Σ_e C(d'(e), 2)`.
pub fn check_total_counts(counts: &PatternCounts, table: &EdgeDegreeTable) -> Result<()> {
    let lhs = (counts.sum(1, 20)? as u128) * 3 + counts.sum(21, 26)? as u128;
    let rhs: u128 = table.d_prime.iter().map(|&d| choose2(d) as u128).sum();
    if lhs != rhs {
        return Err(Error::consistency(format!(
            "pair identity: 3*closed + open = {lhs}, sum C(d', 2) = {rhs}"
        )));
    }
    Ok(())
}

/// Upper bounds on the inner iterations of the triangle pass
/// (`Σ_e Σ_{u<v∈e} dout(u)·dout(v)`) and of the star pass
/// (`Σ_v dout(v)³ + n`).
pub fn work_bounds(dah: &OrientedHypergraph) -> (u128, u128) {
    let mut tri = 0u128;
    for e in 0..dah.m() as u32 {
        let outs: Vec<u128> = dah.edge(e).iter().map(|&r| dah.out_degree(r) as u128).collect();
        let total: u128 = outs.iter().sum();
        let squares: u128 = outs.iter().map(|d| d * d).sum();
        tri += (total * total - squares) / 2;
    }
    let star = (0..dah.n() as u32)
        .map(|r| (dah.out_degree(r) as u128).pow(3))
        .sum::<u128>()
        + dah.n() as u128;
    (tri, star)
}

#[inline]
pub(crate) fn choose2(x: u64) -> u64 {
    if x < 2 {
        0
    } else {
        // x(x-1)/2 of a count below 2^32 fits easily.
        ((x as u128 * (x as u128 - 1)) / 2) as u64
    }
}

#[inline]
pub(crate) fn choose3(x: u64) -> u128 {
    if x < 3 {
        0
    } else {
        let x = x as u128;
        x * (x - 1) * (x - 2) / 6
    }
}

pub(crate) fn add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn narrow(x: u128, what: &'static str) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::Overflow(what))
}

/// `a - b`, failing with a consistency error naming the quantity if negative.
pub(crate) fn sub(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_sub(b)
        .ok_or_else(|| Error::consistency(format!("{what} would be negative ({a} - {b})")))
}
