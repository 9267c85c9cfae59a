//! Degeneracy ordering and the directed acyclic hypergraph (DAH) it induces.
//!
//! Every counting pass works in *rank space*: vertex `v` is replaced by its
//! position in the ordering, so each edge becomes an ascending list of ranks
//! whose first entry is its source and whose last entry is its sink.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// Position of a vertex in an [`Ordering`].
pub type Rank = u32;

/// A vertex ordering: `position[v]` is the rank of `v`, `inverse[r]` the
/// vertex at rank `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    position: Vec<Rank>,
    inverse: Vec<VertexId>,
}

impl Ordering {
    /// Ordering that visits vertices in the given sequence. Fails unless the
    /// sequence is a permutation of `0..sequence.len()`.
    pub fn from_sequence(sequence: Vec<VertexId>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![Rank::MAX; n];
        for (r, &v) in sequence.iter().enumerate() {
            let slot = position
                .get_mut(v as usize)
                .ok_or_else(|| Error::domain(format!("vertex {v} out of range in ordering of {n}")))?;
            if *slot != Rank::MAX {
                return Err(Error::domain(format!("vertex {v} appears twice in ordering")));
            }
            *slot = r as Rank;
        }
        Ok(Ordering {
            position,
            inverse: sequence,
        })
    }

    pub fn identity(n: usize) -> Self {
        let seq: Vec<VertexId> = (0..n as VertexId).collect();
        Ordering {
            position: seq.clone(),
            inverse: seq,
        }
    }

    pub fn reversed(&self) -> Self {
        let mut seq = self.inverse.clone();
        seq.reverse();
        Ordering::from_sequence(seq).expect("reversal of a permutation is a permutation")
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inverse.is_empty()
    }

    #[inline]
    pub fn position(&self, v: VertexId) -> Rank {
        self.position[v as usize]
    }

    #[inline]
    pub fn vertex_at(&self, r: Rank) -> VertexId {
        self.inverse[r as usize]
    }

    /// Vertices in order, first peeled first.
    pub fn sequence(&self) -> &[VertexId] {
        &self.inverse
    }

    /// The first vertex of `set` under this ordering.
    pub fn source(&self, set: &[VertexId]) -> Result<VertexId> {
        set.iter()
            .copied()
            .min_by_key(|&v| self.position(v))
            .ok_or_else(|| Error::domain("source of an empty vertex set"))
    }

    /// The last vertex of `set` under this ordering.
    pub fn sink(&self, set: &[VertexId]) -> Result<VertexId> {
        set.iter()
            .copied()
            .max_by_key(|&v| self.position(v))
            .ok_or_else(|| Error::domain("sink of an empty vertex set"))
    }
}

/// Output of the peeling procedure.
#[derive(Debug, Clone)]
pub struct Peeling {
    pub ordering: Ordering,
    pub kappa: usize,
    /// Degree of each vertex in the multi-trimmed subhypergraph at the moment
    /// it was peeled, indexed by rank.
    pub peel_degrees: Vec<usize>,
}

/// Bookkeeping for minimum-degree peeling. A vertex's `degree` is the number of
/// live edges containing it; an edge is live while at least two of its
/// vertices remain.
struct PeelState {
    degree: Vec<usize>,
    remaining: Vec<usize>,
    removed: Vec<bool>,
    queue: BinaryHeap<Reverse<(usize, VertexId)>>,
}

impl PeelState {
    fn new(g: &Hypergraph) -> Self {
        let degree: Vec<usize> = (0..g.n() as VertexId).map(|v| g.incident(v).len()).collect();
        let remaining = (0..g.m() as EdgeId).map(|e| g.arity(e)).collect();
        let queue = degree
            .iter()
            .enumerate()
            .map(|(v, &d)| Reverse((d, v as VertexId)))
            .collect();
        PeelState {
            degree,
            remaining,
            removed: vec![false; g.n()],
            queue,
        }
    }

    /// Minimum current degree, lowest vertex id among ties. Stale heap entries
    /// (removed vertices or outdated degrees) are skipped.
    fn pop_min(&mut self) -> Option<(VertexId, usize)> {
        while let Some(Reverse((d, v))) = self.queue.pop() {
            if !self.removed[v as usize] && self.degree[v as usize] == d {
                return Some((v, d));
            }
        }
        None
    }

    fn remove(&mut self, g: &Hypergraph, v: VertexId) {
        self.removed[v as usize] = true;
        for &e in g.incident(v) {
            let rem = &mut self.remaining[e as usize];
            if *rem < 2 {
                continue;
            }
            *rem -= 1;
            if *rem < 2 {
                // The edge is retired: its surviving member loses one incidence.
                for &w in g.edge(e) {
                    if !self.removed[w as usize] {
                        self.degree[w as usize] -= 1;
                        self.queue.push(Reverse((self.degree[w as usize], w)));
                    }
                }
            }
        }
    }
}

/// Minimum-degree peeling over the multi-trimmed subhypergraphs. Ties go to
/// the lowest vertex id.
pub fn peel(g: &Hypergraph) -> Peeling {
    let mut state = PeelState::new(g);
    let mut sequence = Vec::with_capacity(g.n());
    let mut peel_degrees = Vec::with_capacity(g.n());
    while let Some((v, d)) = state.pop_min() {
        sequence.push(v);
        peel_degrees.push(d);
        state.remove(g, v);
    }
    debug_assert_eq!(sequence.len(), g.n());
    let kappa = peel_degrees.iter().copied().max().unwrap_or(0);
    Peeling {
        ordering: Ordering::from_sequence(sequence).expect("peeling visits every vertex once"),
        kappa,
        peel_degrees,
    }
}

/// Degeneracy ordering and the hyperedge degeneracy `kappa`.
pub fn hyper_matula_beck(g: &Hypergraph) -> (Ordering, usize) {
    let p = peel(g);
    (p.ordering, p.kappa)
}

/// A hypergraph oriented by a vertex ordering.
#[derive(Debug, Clone)]
pub struct OrientedHypergraph<'g> {
    base: &'g Hypergraph,
    ordering: Ordering,
    /// Per-edge ranks, ascending; shares the base edge offsets.
    ranked: Vec<Rank>,
    din: Vec<u32>,
    out_offsets: Vec<usize>,
    out_edges: Vec<EdgeId>,
    max_outdegree: usize,
}

impl<'g> OrientedHypergraph<'g> {
    pub fn build(g: &'g Hypergraph, ordering: Ordering) -> Result<Self> {
        if ordering.len() != g.n() {
            return Err(Error::domain(format!(
                "ordering covers {} vertices, hypergraph has {}",
                ordering.len(),
                g.n()
            )));
        }
        let n = g.n();
        let offsets = g.edge_offsets();
        let mut ranked = Vec::with_capacity(offsets[g.m()]);
        let mut din = vec![0u32; n];
        let mut dout = vec![0usize; n];
        for e in g.edges() {
            let start = ranked.len();
            ranked.extend(e.iter().map(|&v| ordering.position(v)));
            let slice = &mut ranked[start..];
            slice.sort_unstable();
            let (&sink, rest) = slice.split_last().expect("edges have arity >= 2");
            din[sink as usize] += 1;
            for &r in rest {
                dout[r as usize] += 1;
            }
        }

        let mut out_offsets = Vec::with_capacity(n + 1);
        out_offsets.push(0);
        for d in &dout {
            out_offsets.push(out_offsets.last().unwrap() + d);
        }
        let mut fill = out_offsets.clone();
        let mut out_edges = vec![0 as EdgeId; *out_offsets.last().unwrap()];
        for e in 0..g.m() {
            let edge = &ranked[offsets[e]..offsets[e + 1]];
            for &r in &edge[..edge.len() - 1] {
                out_edges[fill[r as usize]] = e as EdgeId;
                fill[r as usize] += 1;
            }
        }

        Ok(OrientedHypergraph {
            base: g,
            ordering,
            ranked,
            din,
            out_offsets,
            out_edges,
            max_outdegree: dout.into_iter().max().unwrap_or(0),
        })
    }

    /// Orient by the degeneracy ordering.
    pub fn degeneracy(g: &'g Hypergraph) -> Self {
        let (ordering, _) = hyper_matula_beck(g);
        Self::build(g, ordering).expect("peeling ordering covers every vertex")
    }

    pub fn base(&self) -> &'g Hypergraph {
        self.base
    }

    pub fn ordering(&self) -> &Ordering {
        &self.ordering
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn m(&self) -> usize {
        self.base.m()
    }

    /// Ranks of `e`, ascending.
    #[inline]
    pub fn edge(&self, e: EdgeId) -> &[Rank] {
        let offsets = self.base.edge_offsets();
        let e = e as usize;
        &self.ranked[offsets[e]..offsets[e + 1]]
    }

    #[inline]
    pub fn source(&self, e: EdgeId) -> Rank {
        self.edge(e)[0]
    }

    #[inline]
    pub fn sink(&self, e: EdgeId) -> Rank {
        *self.edge(e).last().expect("edges are non-empty")
    }

    /// Number of edges whose sink is rank `r`.
    #[inline]
    pub fn in_degree(&self, r: Rank) -> u64 {
        self.din[r as usize] as u64
    }

    #[inline]
    pub fn out_degree(&self, r: Rank) -> u64 {
        let r = r as usize;
        (self.out_offsets[r + 1] - self.out_offsets[r]) as u64
    }

    /// Edges containing rank `r` that do not end at `r`, ascending by edge id.
    #[inline]
    pub fn out_edges(&self, r: Rank) -> &[EdgeId] {
        let r = r as usize;
        &self.out_edges[self.out_offsets[r]..self.out_offsets[r + 1]]
    }

    pub fn in_degree_of_vertex(&self, v: VertexId) -> u64 {
        self.in_degree(self.ordering.position(v))
    }

    pub fn out_degree_of_vertex(&self, v: VertexId) -> u64 {
        self.out_degree(self.ordering.position(v))
    }

    /// `max_v dout(v)`; equals `kappa` when oriented by the degeneracy ordering.
    pub fn max_outdegree(&self) -> usize {
        self.max_outdegree
    }

    pub fn kappa(&self) -> usize {
        self.max_outdegree
    }
}

/// Orient `g` by `ordering`.
pub fn build_dah(g: &Hypergraph, ordering: Ordering) -> Result<OrientedHypergraph<'_>> {
    OrientedHypergraph::build(g, ordering)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_str;

    fn graph(text: &str) -> Hypergraph {
        parse_str(text).unwrap().0
    }

    fn outdegrees(dah: &OrientedHypergraph) -> Vec<u64> {
        (0..dah.n() as VertexId).map(|v| dah.out_degree_of_vertex(v)).collect()
    }

    fn indegrees(dah: &OrientedHypergraph) -> Vec<u64> {
        (0..dah.n() as VertexId).map(|v| dah.in_degree_of_vertex(v)).collect()
    }

    #[test]
    fn triangle_kappa_and_order() {
        let g = graph("1 2\n2 3\n1 3\n");
        let (pi, kappa) = hyper_matula_beck(&g);
        assert_eq!(kappa, 2);
        assert_eq!(pi.sequence(), &[0, 1, 2]);
    }

    #[test]
    fn star_peels_leaves_first() {
        let g = graph("1 2\n1 3\n1 4\n");
        let (pi, kappa) = hyper_matula_beck(&g);
        assert_eq!(kappa, 1);
        // Labels (2, 3, 1, 4): once two leaves are gone the hub ties with the
        // last leaf and has the lower id.
        assert_eq!(pi.sequence(), &[1, 2, 0, 3]);
    }

    #[test]
    fn single_edge() {
        let g = graph("1 2\n");
        assert_eq!(hyper_matula_beck(&g).1, 1);
    }

    #[test]
    fn empty_hypergraph_has_kappa_zero() {
        let (g, _) = Hypergraph::from_labeled_edges(Vec::<Vec<u64>>::new());
        let (pi, kappa) = hyper_matula_beck(&g);
        assert!(pi.is_empty());
        assert_eq!(kappa, 0);
        let dah = build_dah(&g, pi).unwrap();
        assert_eq!(dah.max_outdegree(), 0);
    }

    #[test]
    fn triangle_dah_degrees() {
        let g = graph("1 2\n2 3\n1 3\n");
        let dah = build_dah(&g, Ordering::identity(3)).unwrap();
        assert_eq!(outdegrees(&dah), vec![2, 1, 0]);
        assert_eq!(indegrees(&dah), vec![0, 1, 2]);
    }

    #[test]
    fn star_dah_degrees() {
        let g = graph("1 2\n1 3\n1 4\n");
        let pi = Ordering::from_sequence(vec![1, 2, 3, 0]).unwrap();
        let dah = build_dah(&g, pi).unwrap();
        assert_eq!(outdegrees(&dah), vec![0, 1, 1, 1]);
        assert_eq!(indegrees(&dah), vec![3, 0, 0, 0]);
        assert_eq!(dah.out_edges(dah.ordering().position(0)), &[] as &[EdgeId]);
    }

    #[test]
    fn reversed_ordering_keeps_one_sink_per_edge() {
        let g = graph("1 2 3\n2 3 4 5\n1 5\n3 4\n");
        let (pi, _) = hyper_matula_beck(&g);
        let dah = build_dah(&g, pi.reversed()).unwrap();
        assert_eq!(indegrees(&dah).iter().sum::<u64>(), g.m() as u64);
        for v in 0..g.n() as VertexId {
            assert_eq!(
                dah.in_degree_of_vertex(v) + dah.out_degree_of_vertex(v),
                g.degree(v).unwrap() as u64
            );
        }
    }

    #[test]
    fn non_bijective_orderings_are_rejected() {
        assert!(matches!(Ordering::from_sequence(vec![0, 0, 1]), Err(Error::Domain(_))));
        assert!(matches!(Ordering::from_sequence(vec![0, 3]), Err(Error::Domain(_))));
        let g = graph("1 2\n2 3\n");
        assert!(matches!(build_dah(&g, Ordering::identity(2)), Err(Error::Domain(_))));
    }

    #[test]
    fn source_and_sink_of_sets() {
        let pi = Ordering::identity(6);
        assert_eq!(pi.source(&[1, 2]).unwrap(), 1);
        assert_eq!(pi.sink(&[1, 2]).unwrap(), 2);
        assert_eq!(pi.source(&[5]).unwrap(), 5);
        assert_eq!(pi.sink(&[5]).unwrap(), 5);
        assert!(pi.source(&[]).is_err());
        // e1 ∩ e2 for {1,2,3}, {2,3} (labels) is {2,3}: ids 1 and 2.
        let rev = pi.reversed();
        assert_eq!(rev.source(&[1, 2]).unwrap(), 2);
        assert_eq!(rev.sink(&[1, 2]).unwrap(), 1);
    }

    #[test]
    fn peel_degrees_match_outdegrees() {
        let g = graph("1 2 3\n2 3 4\n3 4 5 6\n1 6\n2 5\n4 6\n1 3 5\n");
        let p = peel(&g);
        let dah = build_dah(&g, p.ordering.clone()).unwrap();
        for (r, &d) in p.peel_degrees.iter().enumerate() {
            assert_eq!(dah.out_degree(r as Rank), d as u64);
        }
        assert_eq!(dah.kappa(), p.kappa);
        assert!(p.kappa <= g.max_degree());
    }
}
