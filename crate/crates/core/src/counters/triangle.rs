use super::PatternCounts;
use crate::error::Result;
use crate::orientation::OrientedHypergraph;
use crate::pattern::{scan_regions, witness, PatternTable};
use crate::scratch::Marker;

/// Output of the triangle pass: counts of patterns 4, 5, 7, 8 and 11–20.
#[derive(Debug, Clone, Default)]
pub struct TrianglePass {
    pub counts: PatternCounts,
    pub iterations: u64,
}

/// Enumerate `(u, e1, v, e2, e3)` with `e1, e2 ∈ N⁺(u)`, `v ∈ e1`, `v > u`
/// and `e3 ∈ N⁺(v)`, counting a triple only when its witness is `(u, v, w)`
/// with `w ∈ e2 ∩ e3`. Every instance of a witnessed pattern passes that test
/// for exactly one tuple.
pub fn count_triangle_based(dah: &OrientedHypergraph) -> Result<TrianglePass> {
    let table = PatternTable::global();
    let mut marker = Marker::new(dah.n());
    let mut out = TrianglePass::default();

    let mut second = Marker::new(dah.n());

    for u in 0..dah.n() as u32 {
        let outs_u = dah.out_edges(u);
        for &e2 in outs_u {
            let edge2 = dah.edge(e2);
            second.clear();
            second.set_all(edge2, 1);
            for &e1 in outs_u {
                if e1 == e2 {
                    continue;
                }
                let edge1 = dah.edge(e1);
                for &v in edge1.iter().filter(|&&v| v > u) {
                    let outs_v = dah.out_edges(v);
                    out.iterations += outs_v.len() as u64;
                    for &e3 in outs_v {
                        if e3 == e1 || e3 == e2 {
                            continue;
                        }
                        let edge3 = dah.edge(e3);
                        // The third witness vertex lies in e2 ∩ e3 after v.
                        if !edge3.iter().rev().take_while(|&&x| x > v).any(|&x| second.get(x) != 0) {
                            continue;
                        }
                        count_if_witnessed(table, &mut marker, (edge1, edge2, edge3), (u, v), &mut out.counts)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

#[inline]
fn count_if_witnessed(
    table: &PatternTable,
    marker: &mut Marker,
    (a, b, c): (&[u32], &[u32], &[u32]),
    (u, v): (u32, u32),
    counts: &mut PatternCounts,
) -> Result<()> {
    let scan = scan_regions(a, b, c, marker);
    let Some(id) = table.pattern(scan.signature) else {
        return Ok(());
    };
    if !id.has_witness() {
        return Ok(());
    }
    let w = witness(&scan, id)?.0;
    // Marks are still live: bit 2 for the second list, bit 4 for the third.
    if w[0] == u && w[1] == v && marker.get(w[2]) & 0b110 == 0b110 {
        counts.increment(id)?;
    }
    Ok(())
}

