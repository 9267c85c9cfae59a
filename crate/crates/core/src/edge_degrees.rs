//! Hyperedge degrees and their ancestor / descendant / proper-intersection split.

use crate::error::{Error, Result};
use crate::hypergraph::EdgeId;
use crate::orientation::{OrientedHypergraph, Rank};
use crate::scratch::Marker;

/// Per-edge neighbourhood counts.
///
/// `d_prime[e]` counts the other edges meeting `e`; of those, `d_anc[e]` are
/// strict supersets, `d_desc[e]` strict subsets and `d_int[e]` the rest.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeDegreeTable {
    pub d_prime: Vec<u64>,
    pub d_anc: Vec<u64>,
    pub d_desc: Vec<u64>,
    pub d_int: Vec<u64>,
}

impl EdgeDegreeTable {
    pub fn compute(dah: &OrientedHypergraph) -> Result<Self> {
        let d_prime = compute_hyperedge_degrees(dah);
        let (d_anc, d_desc) = compute_ancestor_descendant(dah);
        let d_int = derive_intersection_counts(&d_prime, &d_anc, &d_desc)?;
        Ok(EdgeDegreeTable {
            d_prime,
            d_anc,
            d_desc,
            d_int,
        })
    }

    pub fn len(&self) -> usize {
        self.d_prime.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d_prime.is_empty()
    }
}

/// `true` when `r` is the first vertex of `f` marked in `marker` (that is,
/// `r = source(e ∩ f)` with `e` marked).
#[inline]
fn is_first_marked(f: &[Rank], r: Rank, marker: &Marker) -> bool {
    for &x in f {
        if x == r {
            return true;
        }
        if marker.get(x) != 0 {
            return false;
        }
    }
    false
}

/// `d'(e)` for every edge.
///
/// A neighbour `f` of `e` either ends inside `e`, and is counted once through
/// `din` of its sink, or ends outside `e`, and is counted at `source(e ∩ f)`
/// while walking out-edges. `e` ends inside itself, hence the `- 1`.
pub fn compute_hyperedge_degrees(dah: &OrientedHypergraph) -> Vec<u64> {
    let mut marker = Marker::new(dah.n());
    let mut out = Vec::with_capacity(dah.m());
    for e in 0..dah.m() as EdgeId {
        let edge = dah.edge(e);
        marker.clear();
        marker.set_all(edge, 1);
        let mut deg: u64 = 0;
        for &v in edge {
            deg += dah.in_degree(v);
            for &f in dah.out_edges(v) {
                if f == e {
                    continue;
                }
                let fe = dah.edge(f);
                let sink = *fe.last().unwrap();
                if marker.get(sink) == 0 && is_first_marked(fe, v, &marker) {
                    deg += 1;
                }
            }
        }
        out.push(deg - 1);
    }
    out
}

/// `(d_a', d_d')` for every edge.
pub fn compute_ancestor_descendant(dah: &OrientedHypergraph) -> (Vec<u64>, Vec<u64>) {
    let mut d_anc = vec![0u64; dah.m()];
    let mut d_desc = vec![0u64; dah.m()];
    for e1 in 0..dah.m() as EdgeId {
        for f in ancestors(dah, e1) {
            d_anc[e1 as usize] += 1;
            d_desc[f as usize] += 1;
        }
    }
    (d_anc, d_desc)
}

/// `d_i' = d' - d_a' - d_d'`.
pub fn derive_intersection_counts(d_prime: &[u64], d_anc: &[u64], d_desc: &[u64]) -> Result<Vec<u64>> {
    d_prime
        .iter()
        .zip(d_anc.iter().zip(d_desc))
        .enumerate()
        .map(|(e, (&d, (&a, &c)))| {
            d.checked_sub(a)
                .and_then(|x| x.checked_sub(c))
                .ok_or_else(|| {
                    Error::consistency(format!(
                        "edge {e}: degree {d} smaller than ancestors {a} + descendants {c}"
                    ))
                })
        })
        .collect()
}

/// Streams the strict supersets of an edge.
///
/// Any strict superset `f` of `e` contains `source(e)` and a later vertex, so
/// it is an out-edge of `source(e)`; scanning that single out-list visits
/// every ancestor exactly once.
pub struct Ancestors<'a, 'g> {
    dah: &'a OrientedHypergraph<'g>,
    edge: &'a [Rank],
    id: EdgeId,
    candidates: std::slice::Iter<'a, EdgeId>,
}

impl Iterator for Ancestors<'_, '_> {
    type Item = EdgeId;

    fn next(&mut self) -> Option<EdgeId> {
        for &f in self.candidates.by_ref() {
            if f == self.id {
                continue;
            }
            let fe = self.dah.edge(f);
            if fe.len() > self.edge.len() && is_sorted_subset(self.edge, fe) {
                return Some(f);
            }
        }
        None
    }
}

/// Strict supersets of `e`.
pub fn ancestors<'a, 'g>(dah: &'a OrientedHypergraph<'g>, e: EdgeId) -> Ancestors<'a, 'g> {
    let edge = dah.edge(e);
    Ancestors {
        dah,
        edge,
        id: e,
        candidates: dah.out_edges(edge[0]).iter(),
    }
}

/// Ancestor lists of every edge, materialized. Uses memory proportional to
/// the number of containment pairs.
pub fn materialize_ancestors(dah: &OrientedHypergraph) -> Vec<Vec<EdgeId>> {
    (0..dah.m() as EdgeId).map(|e| ancestors(dah, e).collect()).collect()
}

/// `small ⊆ big` for ascending lists.
#[inline]
pub(crate) fn is_sorted_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    'outer: for &x in small {
        for &y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}
