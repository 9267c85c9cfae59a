use super::{add, choose2, choose3, narrow, sub, PatternCounts};
use crate::error::{Error, Result};
use crate::orientation::{OrientedHypergraph, Rank};
use crate::scratch::Marker;

/// Star count `S`: triples of distinct edges with a common vertex.
///
/// Let `T` be the common intersection. If some edge of the triple ends in `T`
/// it ends at `v = sink(T)`, and the triple is counted by binomials of
/// `din(v)` and `dout(v)`. Otherwise all three edges are out-edges of
/// `source(T)` and the triple is enumerated there. Returns `(S, iterations)`.
pub fn compute_stars(dah: &OrientedHypergraph) -> Result<(u64, u64)> {
    let mut marker = Marker::new(dah.n());
    let mut total: u128 = 0;
    let mut iterations = dah.n() as u64;
    for v in 0..dah.n() as Rank {
        let din = dah.in_degree(v);
        let dout = dah.out_degree(v);
        total += choose3(din) + choose2(din) as u128 * dout as u128 + din as u128 * choose2(dout) as u128;

        let outs = dah.out_edges(v);
        for (i, &e1) in outs.iter().enumerate() {
            for (j, &e2) in outs.iter().enumerate().skip(i + 1) {
                marker.clear();
                marker.set_all(dah.edge(e1), 1);
                marker.set_all(dah.edge(e2), 2);
                let sinks = [dah.sink(e1), dah.sink(e2)];
                for &e3 in &outs[j + 1..] {
                    iterations += 1;
                    if let Some((lo, hi)) = triple_bounds(dah.edge(e3), &marker) {
                        if lo == v && hi != dah.sink(e3) && !sinks.contains(&hi) {
                            total += 1;
                        }
                    }
                }
            }
        }
    }
    Ok((narrow(total, "star count")?, iterations))
}

/// Smallest and largest vertex of `e3` carrying both marks 1 and 2.
#[inline]
fn triple_bounds(e3: &[Rank], marker: &Marker) -> Option<(Rank, Rank)> {
    let mut lo = None;
    let mut hi = 0;
    for &x in e3 {
        if marker.get(x) == 3 {
            lo.get_or_insert(x);
            hi = x;
        }
    }
    lo.map(|lo| (lo, hi))
}

/// Weighted extended-star count `WS* = Σ_{i≤16} w_i·c(i)`.
///
/// Enumerates unordered pairs `{e1, e2}` of out-edges at every vertex `u`
/// and, for each, the third edges `e3` that meet `I = e1 ∩ e2` without
/// containing it:
///
/// 1. `sink(e3) ∈ I`: counted at `u = source(I)` through `din` over `I`,
///    after removing every out-edge of `u` that contains `I` and ends in it
///    (this includes `e1` or `e2` when they end in `I`);
/// 2. `sink(e3) ∉ I` and `e1 ∩ e2 ∩ e3 = {sink(I)}` with `sink(I)` the sink
///    of `e1` or `e2`: enumerated over `N⁺(sink(I))`;
/// 3. otherwise all three edges are out-edges of `source(e1 ∩ e2 ∩ e3)` and
///    the triple is enumerated there.
///
/// Returns `(WS*, iterations)`.
pub fn compute_extended_stars(dah: &OrientedHypergraph) -> Result<(u64, u64)> {
    let mut marker = Marker::new(dah.n());
    let mut total: u128 = 0;
    let mut iterations = 0u64;
    let mut inter: Vec<Rank> = Vec::new();

    for u in 0..dah.n() as Rank {
        let outs = dah.out_edges(u);
        for (i, &e1) in outs.iter().enumerate() {
            for &e2 in &outs[i + 1..] {
                marker.clear();
                marker.set_all(dah.edge(e1), 1);
                marker.set_all(dah.edge(e2), 2);
                inter.clear();
                inter.extend(dah.edge(e2).iter().copied().filter(|&x| marker.get(x) == 3));
                let (&lo, &hi) = (inter.first().unwrap(), inter.last().unwrap());

                if lo == u && inter.len() > 1 {
                    total += inter.iter().map(|&x| dah.in_degree(x) as u128).sum::<u128>();
                    for &e3 in outs {
                        iterations += 1;
                        let edge3 = dah.edge(e3);
                        if dah.sink(e3) == hi && contains_all_marked(edge3, inter.len(), &marker) {
                            total = total.checked_sub(1).ok_or_else(|| {
                                Error::consistency("extended-star subtraction below zero")
                            })?;
                        }
                    }
                    if hi == dah.sink(e1) || hi == dah.sink(e2) {
                        for &e3 in dah.out_edges(hi) {
                            iterations += 1;
                            if count_marked(dah.edge(e3), &marker) == 1 {
                                total += 1;
                            }
                        }
                    }
                }

                let sinks = [dah.sink(e1), dah.sink(e2)];
                for &e3 in outs {
                    if e3 == e1 || e3 == e2 {
                        continue;
                    }
                    iterations += 1;
                    let edge3 = dah.edge(e3);
                    if let Some((tlo, _)) = triple_bounds(edge3, &marker) {
                        let sink3 = dah.sink(e3);
                        let sink_in_i = marker.get(sink3) == 3;
                        let t_size = count_marked(edge3, &marker);
                        if tlo == u && t_size < inter.len() && !sink_in_i {
                            debug_assert!(!sinks.contains(&u));
                            total += 1;
                        }
                    }
                }
            }
        }
    }
    Ok((narrow(total, "extended-star count")?, iterations))
}

#[inline]
fn count_marked(edge: &[Rank], marker: &Marker) -> usize {
    edge.iter().filter(|&&x| marker.get(x) == 3).count()
}

#[inline]
fn contains_all_marked(edge: &[Rank], size: usize, marker: &Marker) -> bool {
    count_marked(edge, marker) == size
}

/// Solve for `(c9, c10)` given `S`, `WS*` and every other closed count up to
/// pattern 16.
///
/// `WS* = c1 + c3 + c6 + c10 + 2(c4 + c5 + c7 + c8 + c11 + c12) + 3(c13 + … + c16)`
/// and `S = Σ_{i≤16} c(i)`.
pub fn solve_star_counts(stars: u64, ws_star: u64, partial: &PatternCounts) -> Result<(u64, u64)> {
    let c = |i| partial.c(i);
    let once = [1, 3, 6].iter().try_fold(0, |a, &i| add(a, c(i), "c10"))?;
    let twice = [4, 5, 7, 8, 11, 12].iter().try_fold(0, |a, &i| add(a, c(i), "c10"))?;
    let thrice = partial.sum(13, 16)?;
    let weighted = once as u128 + 2 * twice as u128 + 3 * thrice as u128;
    let c10 = narrow(
        (ws_star as u128).checked_sub(weighted).ok_or_else(|| {
            Error::consistency(format!("c10 would be negative ({ws_star} - {weighted})"))
        })?,
        "c10",
    )?;
    let others = (1..=16)
        .filter(|&i| i != 9 && i != 10)
        .try_fold(c10, |a, i| add(a, c(i), "c9"))?;
    let c9 = sub(stars, others, "c9")?;
    Ok((c9, c10))
}

