//! Brute-force reference implementations.
//!
//! Everything here works from definitions only: set operations on sorted
//! vertex lists, full enumeration of edge triples, vertex subsets or
//! orderings. Each routine refuses instances above a size guard.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counters::{ComplementCounts, PatternCounts};
use crate::edge_degrees::EdgeDegreeTable;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::orientation::{build_dah, Ordering};
use crate::pattern::{Classification, PatternTable, RegionSignature};

pub const MAX_CENSUS_EDGES: usize = 500;
pub const MAX_DEGENERACY_VERTICES: usize = 20;
pub const MAX_ORDERING_VERTICES: usize = 7;
pub const MAX_PAIRWISE_EDGES: usize = 10_000;

fn guard(what: &str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::Refused(format!("{what}: {size} exceeds the limit of {limit}")));
    }
    Ok(())
}

fn contains(set: &[VertexId], v: VertexId) -> bool {
    set.binary_search(&v).is_ok()
}

fn intersection(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    a.iter().copied().filter(|&v| contains(b, v)).collect()
}

fn meets(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().any(|&v| contains(b, v))
}

fn subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|&v| contains(b, v))
}

/// Signature of three sorted vertex lists by membership tests on their union.
pub fn naive_region_signature(a: &[VertexId], b: &[VertexId], c: &[VertexId]) -> RegionSignature {
    let mut union: Vec<VertexId> = a.iter().chain(b).chain(c).copied().collect();
    union.sort_unstable();
    union.dedup();
    let mut sig = RegionSignature::default();
    for v in union {
        let mask = contains(a, v) as u8 | (contains(b, v) as u8) << 1 | (contains(c, v) as u8) << 2;
        sig.insert(mask);
    }
    sig
}

/// Census by classifying every triple of edges.
pub fn brute_force_census(g: &Hypergraph) -> Result<PatternCounts> {
    guard("edges", g.m(), MAX_CENSUS_EDGES)?;
    let table = PatternTable::global();
    let mut counts = PatternCounts::default();
    for (e1, e2, e3) in (0..g.m() as EdgeId).tuple_combinations() {
        let sig = naive_region_signature(g.edge(e1), g.edge(e2), g.edge(e3));
        if let Classification::Pattern(id) = table.classify(sig)? {
            counts.increment(id)?;
        }
    }
    Ok(counts)
}

/// `κ` as the maximum, over vertex subsets `U`, of the minimum degree in the
/// multiset `{e ∩ U : |e ∩ U| ≥ 2}`.
pub fn brute_force_degeneracy(g: &Hypergraph) -> Result<usize> {
    guard("vertices", g.n(), MAX_DEGENERACY_VERTICES)?;
    let masks: Vec<u32> = g
        .edges()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let mut best = 0;
    let mut degree = vec![0usize; g.n()];
    for subset in 1u32..(1u32 << g.n()) {
        degree.iter_mut().for_each(|d| *d = 0);
        for &mask in &masks {
            let trimmed = mask & subset;
            if trimmed.count_ones() >= 2 {
                for (v, d) in degree.iter_mut().enumerate() {
                    if trimmed >> v & 1 == 1 {
                        *d += 1;
                    }
                }
            }
        }
        let min = (0..g.n())
            .filter(|&v| subset >> v & 1 == 1)
            .map(|v| degree[v])
            .min()
            .unwrap_or(0);
        best = best.max(min);
    }
    Ok(best)
}

/// Minimum over all vertex orderings of the maximum out-degree.
pub fn brute_force_min_max_outdegree(g: &Hypergraph) -> Result<usize> {
    guard("vertices", g.n(), MAX_ORDERING_VERTICES)?;
    let mut best = usize::MAX;
    for perm in (0..g.n() as VertexId).permutations(g.n()) {
        let dah = build_dah(g, Ordering::from_sequence(perm)?)?;
        best = best.min(dah.max_outdegree());
    }
    Ok(if best == usize::MAX { 0 } else { best })
}

/// Edge degrees by comparing every pair of edges.
pub fn brute_force_edge_degrees(g: &Hypergraph) -> Result<EdgeDegreeTable> {
    guard("edges", g.m(), MAX_PAIRWISE_EDGES)?;
    let m = g.m();
    let mut t = EdgeDegreeTable {
        d_prime: vec![0; m],
        d_anc: vec![0; m],
        d_desc: vec![0; m],
        d_int: vec![0; m],
    };
    for (a, b) in (0..m as EdgeId).tuple_combinations() {
        let (ea, eb) = (g.edge(a), g.edge(b));
        if !meets(ea, eb) {
            continue;
        }
        let (a, b) = (a as usize, b as usize);
        t.d_prime[a] += 1;
        t.d_prime[b] += 1;
        if subset(ea, eb) {
            t.d_anc[a] += 1;
            t.d_desc[b] += 1;
        } else if subset(eb, ea) {
            t.d_anc[b] += 1;
            t.d_desc[a] += 1;
        } else {
            t.d_int[a] += 1;
            t.d_int[b] += 1;
        }
    }
    Ok(t)
}

/// `γ[i]`: for every `e1`, unordered pairs `{e2, e3}` of edges meeting `e1`
/// with `e1 ⊆ e2 ∪ e3` and `e1 ∩ e2 ∩ e3 = ∅`, where `i` of the two are strict
/// subsets of `e1`.
pub fn brute_force_gamma(g: &Hypergraph) -> Result<ComplementCounts> {
    guard("edges", g.m(), MAX_CENSUS_EDGES)?;
    let mut gamma = [0u64; 3];
    for e1 in 0..g.m() as EdgeId {
        let edge1 = g.edge(e1);
        let neighbours: Vec<EdgeId> = (0..g.m() as EdgeId)
            .filter(|&f| f != e1 && meets(edge1, g.edge(f)))
            .collect();
        for (e2, e3) in neighbours.iter().tuple_combinations() {
            let (a, b) = (intersection(edge1, g.edge(*e2)), intersection(edge1, g.edge(*e3)));
            if meets(&a, &b) || a.len() + b.len() != edge1.len() {
                continue;
            }
            let children = (a.len() == g.arity(*e2)) as usize + (b.len() == g.arity(*e3)) as usize;
            gamma[children] += 1;
        }
    }
    Ok(ComplementCounts(gamma))
}

/// Triples of edges with a common vertex.
pub fn brute_force_stars(g: &Hypergraph) -> Result<u64> {
    guard("edges", g.m(), MAX_CENSUS_EDGES)?;
    let mut total = 0;
    for (a, b, c) in (0..g.m() as EdgeId).tuple_combinations() {
        let ab = intersection(g.edge(a), g.edge(b));
        if meets(&ab, g.edge(c)) {
            total += 1;
        }
    }
    Ok(total)
}

/// Pairs `{e1, e2}` with third edges `e3` that meet `e1 ∩ e2` without
/// containing it.
pub fn brute_force_extended_stars(g: &Hypergraph) -> Result<u64> {
    guard("edges", g.m(), MAX_CENSUS_EDGES)?;
    let mut total = 0;
    for (a, b) in (0..g.m() as EdgeId).tuple_combinations() {
        let ab = intersection(g.edge(a), g.edge(b));
        if ab.is_empty() {
            continue;
        }
        for c in 0..g.m() as EdgeId {
            if c == a || c == b {
                continue;
            }
            let ec = g.edge(c);
            if meets(&ab, ec) && !subset(&ab, ec) {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Parameters of a random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomInstanceSpec {
    pub n: usize,
    pub m: usize,
    pub max_arity: usize,
    /// Probability, in percent, of deriving a new edge from an existing one by
    /// adding or dropping a vertex. Produces containment patterns.
    pub nesting_percent: u32,
    pub seed: u64,
}

impl RandomInstanceSpec {
    pub fn new(n: usize, m: usize, max_arity: usize, seed: u64) -> Self {
        RandomInstanceSpec {
            n,
            m,
            max_arity,
            nesting_percent: 30,
            seed,
        }
    }
}

/// Random hypergraph with `m` distinct edges on labels `0..n`. Vertices that
/// end up in no edge are not part of the result.
pub fn generate_random(spec: &RandomInstanceSpec) -> Result<Hypergraph> {
    let RandomInstanceSpec {
        n,
        m,
        max_arity,
        nesting_percent,
        seed,
    } = *spec;
    if max_arity < 2 || n < 2 {
        if m == 0 {
            return Ok(Hypergraph::from_labeled_edges(Vec::<Vec<u64>>::new()).0);
        }
        return Err(Error::domain(format!("no edge fits n = {n}, max arity = {max_arity}")));
    }
    let max_arity = max_arity.min(n);
    let capacity: u128 = (2..=max_arity).map(|k| binomial(n as u128, k as u128)).sum();
    if m as u128 > capacity {
        return Err(Error::domain(format!(
            "{m} distinct edges requested, only {capacity} exist with n = {n}, max arity = {max_arity}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<u64> = (0..n as u64).collect();
    let mut seen = std::collections::HashSet::new();
    let mut edges: Vec<Vec<u64>> = Vec::with_capacity(m);
    let budget = 1000 * (m + 1) + 100_000;
    for _ in 0..budget {
        if edges.len() == m {
            break;
        }
        let candidate = if !edges.is_empty() && rng.gen_range(0..100) < nesting_percent {
            let mut e = edges[rng.gen_range(0..edges.len())].clone();
            if rng.gen_bool(0.5) && e.len() > 2 {
                e.remove(rng.gen_range(0..e.len()));
            } else if e.len() < max_arity {
                let v = labels[rng.gen_range(0..n)];
                if !e.contains(&v) {
                    e.push(v);
                }
            }
            e
        } else {
            let k = rng.gen_range(2..=max_arity);
            labels.choose_multiple(&mut rng, k).copied().collect()
        };
        let mut e = candidate;
        e.sort_unstable();
        if e.len() >= 2 && seen.insert(e.clone()) {
            edges.push(e);
        }
    }
    if edges.len() < m {
        return Err(Error::domain(format!(
            "could not draw {m} distinct edges (got {}) with n = {n}, max arity = {max_arity}",
            edges.len()
        )));
    }
    Ok(Hypergraph::from_labeled_edges(edges).0)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
