use std::collections::HashMap;

use super::{add, choose2, mul, narrow, sub, PatternCounts};
use crate::edge_degrees::EdgeDegreeTable;
use crate::error::{Error, Result};
use crate::hypergraph::EdgeId;
use crate::orientation::{OrientedHypergraph, Rank};
use crate::scratch::Marker;

/// `li[e, v]`: edges ending at `v ∈ e` whose intersection with `e` starts at
/// an out-edge of its source, `e` itself included when it ends at `v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LocalIndegrees {
    map: HashMap<(EdgeId, Rank), u64>,
}

impl LocalIndegrees {
    pub fn get(&self, e: EdgeId, v: Rank) -> u64 {
        self.map.get(&(e, v)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((EdgeId, Rank), u64)> + '_ {
        self.map.iter().map(|(&k, &v)| (k, v))
    }
}

/// Complement counts `γ[i]`: pairs `{e2, e3}` of neighbours of `e1` that
/// cover `e1` and miss each other inside it, split by how many of the two are
/// strict subsets of `e1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ComplementCounts(pub [u64; 3]);

/// Fill `li` by walking, for every `e1` and `u ∈ e1`, the out-edges `e2` of
/// `u` with `u = source(e1 ∩ e2)` and `sink(e2) ∈ e1`.
pub fn compute_local_indegrees(dah: &OrientedHypergraph) -> LocalIndegrees {
    let mut marker = Marker::new(dah.n());
    let mut map = HashMap::new();
    for e1 in 0..dah.m() as EdgeId {
        let edge1 = dah.edge(e1);
        marker.clear();
        marker.set_all(edge1, 1);
        for &u in edge1 {
            for &e2 in dah.out_edges(u) {
                let sink = dah.sink(e2);
                if marker.get(sink) != 0 && first_marked(dah.edge(e2), &marker) == Some(u) {
                    *map.entry((e1, sink)).or_insert(0) += 1;
                }
            }
        }
    }
    LocalIndegrees { map }
}

#[inline]
fn first_marked(edge: &[Rank], marker: &Marker) -> Option<Rank> {
    edge.iter().copied().find(|&x| marker.get(x) != 0)
}

/// One neighbour `e2` of `e1` reached as an out-edge of `source(e1 ∩ e2)`.
struct Reached {
    edge: EdgeId,
    /// `|e1 ∩ e2|`.
    overlap: usize,
    /// `e2 ⊂ e1`.
    child: bool,
    /// Offset of the positions of `e1 ∩ e2` inside `e1`, as a bitset.
    words: usize,
}

/// `γ` and the number of candidate pairs examined.
///
/// Neighbours of `e1` that are out-edges at the source of their intersection
/// with `e1` are enumerated; the others meet `e1` in a single vertex `v` and
/// end there, so they number `din(v) − li[e1, v]`. Pairs of two enumerated
/// edges are checked directly, mixed pairs need the enumerated edge to cover
/// all of `e1` but one vertex, and pairs of two counted edges need `|e1| = 2`.
pub fn compute_gamma(dah: &OrientedHypergraph, li: &LocalIndegrees) -> Result<(ComplementCounts, u64)> {
    let mut marker = Marker::new(dah.n());
    let mut gamma = [0u128; 3];
    let mut iterations = 0u64;
    let mut position: Vec<u32> = vec![0; dah.n()];
    let mut reached: Vec<Vec<Reached>> = Vec::new();
    let mut bits: Vec<u64> = Vec::new();

    for e1 in 0..dah.m() as EdgeId {
        let edge1 = dah.edge(e1);
        let k = edge1.len();
        let nwords = k.div_ceil(64);
        marker.clear();
        marker.set_all(edge1, 1);
        for (i, &x) in edge1.iter().enumerate() {
            position[x as usize] = i as u32;
        }
        bits.clear();
        reached.resize_with(k, Vec::new);
        for (i, &u) in edge1.iter().enumerate() {
            let list = &mut reached[i];
            list.clear();
            for &e2 in dah.out_edges(u) {
                if e2 == e1 {
                    continue;
                }
                let edge2 = dah.edge(e2);
                if first_marked(edge2, &marker) != Some(u) {
                    continue;
                }
                let words = bits.len();
                bits.resize(words + nwords, 0);
                let mut overlap = 0;
                for &x in edge2 {
                    if marker.get(x) != 0 {
                        let p = position[x as usize] as usize;
                        bits[words + p / 64] |= 1 << (p % 64);
                        overlap += 1;
                    }
                }
                list.push(Reached {
                    edge: e2,
                    overlap,
                    child: overlap == edge2.len(),
                    words,
                });
            }
        }

        for i in 0..k {
            for j in i + 1..k {
                for a in &reached[i] {
                    for b in &reached[j] {
                        iterations += 1;
                        if a.overlap + b.overlap != k {
                            continue;
                        }
                        let disjoint = (0..nwords).all(|w| bits[a.words + w] & bits[b.words + w] == 0);
                        if disjoint {
                            debug_assert_ne!(a.edge, b.edge);
                            gamma[a.child as usize + b.child as usize] += 1;
                        }
                    }
                }
            }
        }

        for list in &reached[..k] {
            for a in list.iter().filter(|a| a.overlap + 1 == k) {
                iterations += 1;
                let missing = (0..k)
                    .find(|&p| bits[a.words + p / 64] & (1 << (p % 64)) == 0)
                    .expect("one position uncovered");
                let v = edge1[missing];
                gamma[a.child as usize] += single_vertex_neighbours(dah, li, e1, v)? as u128;
            }
        }

        if k == 2 {
            iterations += 1;
            let x = single_vertex_neighbours(dah, li, e1, edge1[0])?;
            let y = single_vertex_neighbours(dah, li, e1, edge1[1])?;
            gamma[0] += x as u128 * y as u128;
        }
    }

    let mut out = [0u64; 3];
    for (o, g) in out.iter_mut().zip(gamma) {
        *o = narrow(g, "complement count")?;
    }
    Ok((ComplementCounts(out), iterations))
}

/// Edges ending at `v` that meet `e1` only in `v`.
#[inline]
fn single_vertex_neighbours(dah: &OrientedHypergraph, li: &LocalIndegrees, e1: EdgeId, v: Rank) -> Result<u64> {
    let local = li.get(e1, v);
    dah.in_degree(v).checked_sub(local).ok_or_else(|| {
        Error::consistency(format!("edge {e1}, rank {v}: local in-degree {local} exceeds in-degree"))
    })
}

/// Fill `c21..=c26` from `γ`, the degree table and the closed counts.
pub fn derive_open_counts(
    gamma: &ComplementCounts,
    table: &EdgeDegreeTable,
    counts: &mut PatternCounts,
) -> Result<()> {
    let [g0, g1, g2] = gamma.0;
    let c = |counts: &PatternCounts, i| counts.c(i);

    counts.set(21, g2);
    counts.set(23, g1);
    let closed_correction = add(
        add(mul(3, c(counts, 17), "c25")?, mul(2, c(counts, 18), "c25")?, "c25")?,
        c(counts, 19),
        "c25",
    )?;
    counts.set(25, sub(g0, closed_correction, "c25")?);

    let desc_pairs = table
        .d_desc
        .iter()
        .try_fold(0u64, |acc, &d| add(acc, choose2(d), "c22"))?;
    let used = [1, 4, 5, 21].iter().try_fold(0, |a, &i| add(a, c(counts, i), "c22"))?;
    counts.set(22, sub(desc_pairs, used, "c22")?);

    let desc_int = table
        .d_desc
        .iter()
        .zip(&table.d_int)
        .try_fold(0u64, |acc, (&d, &i)| add(acc, mul(d, i, "c24")?, "c24"))?;
    let contained = add(c(counts, 2), c(counts, 3), "c24")?;
    let used = [6, 7, 8, 23]
        .iter()
        .try_fold(mul(2, contained, "c24")?, |a, &i| add(a, c(counts, i), "c24"))?;
    counts.set(24, sub(desc_int, used, "c24")?);

    let pairs = table
        .d_prime
        .iter()
        .try_fold(0u64, |acc, &d| add(acc, choose2(d), "c26"))?;
    let closed = mul(3, counts.sum(1, 20)?, "c26")?;
    let used = add(closed, counts.sum(21, 25)?, "c26")?;
    counts.set(26, sub(pairs, used, "c26")?);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_str;
    use crate::orientation::{build_dah, Ordering};

    #[test]
    fn local_indegree_counts_the_edge_itself() {
        let g = parse_str("1 2 3\n2 3\n").unwrap().0;
        let dah = build_dah(&g, Ordering::identity(3)).unwrap();
        let li = compute_local_indegrees(&dah);
        // Both edges end at rank 2 and meet each other before it.
        assert_eq!(li.get(0, 2), 2);
        assert_eq!(li.get(1, 2), 2);
        assert_eq!(li.get(0, 1), 0);
    }

    #[test]
    fn gamma_on_a_path() {
        let g = parse_str("1 2\n2 3\n3 4\n").unwrap().0;
        for pi in [Ordering::identity(4), Ordering::identity(4).reversed()] {
            let dah = build_dah(&g, pi).unwrap();
            let li = compute_local_indegrees(&dah);
            let (gamma, _) = compute_gamma(&dah, &li).unwrap();
            assert_eq!(gamma.0, [1, 0, 0]);
        }
    }
}
