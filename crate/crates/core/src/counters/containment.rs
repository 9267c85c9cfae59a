use super::{add, mul, sub, PatternCounts};
use crate::edge_degrees::{ancestors, EdgeDegreeTable};
use crate::error::Result;
use crate::hypergraph::EdgeId;
use crate::orientation::OrientedHypergraph;
use crate::pattern::{signature_of, PatternTable};
use crate::scratch::Marker;

/// `c1 = Σ_e d_d'(e)·d_a'(e)`: every chain `e3 ⊂ e2 ⊂ e1` is counted at its
/// middle edge.
pub fn count_pattern1(table: &EdgeDegreeTable) -> Result<u64> {
    table
        .d_desc
        .iter()
        .zip(&table.d_anc)
        .try_fold(0u64, |acc, (&d, &a)| add(acc, mul(d, a, "pattern 1")?, "pattern 1"))
}

/// `(c2, c3, pairs)`: edges contained in two others, classified by how the
/// two ancestors overlap. `pairs` is the number of ancestor pairs examined.
pub fn count_patterns_2_3(dah: &OrientedHypergraph) -> Result<(u64, u64, u64)> {
    let table = PatternTable::global();
    let mut marker = Marker::new(dah.n());
    let mut anc: Vec<EdgeId> = Vec::new();
    let (mut c2, mut c3, mut pairs) = (0u64, 0u64, 0u64);
    for e in 0..dah.m() as EdgeId {
        anc.clear();
        anc.extend(ancestors(dah, e));
        for (i, &a) in anc.iter().enumerate() {
            for &b in &anc[i + 1..] {
                pairs += 1;
                let sig = signature_of(dah.edge(e), dah.edge(a), dah.edge(b), &mut marker);
                match table.pattern(sig).map(|p| p.get()) {
                    Some(2) => c2 = add(c2, 1, "pattern 2")?,
                    Some(3) => c3 = add(c3, 1, "pattern 3")?,
                    _ => {}
                }
            }
        }
    }
    Ok((c2, c3, pairs))
}

/// `c6 = Σ_e d_a'(e)·d_i'(e) − c7 − c8 − 2(c4 + c5)`.
pub fn count_pattern6(table: &EdgeDegreeTable, partial: &PatternCounts) -> Result<u64> {
    let total = table
        .d_anc
        .iter()
        .zip(&table.d_int)
        .try_fold(0u64, |acc, (&a, &i)| add(acc, mul(a, i, "pattern 6")?, "pattern 6"))?;
    let c45 = add(partial.c(4), partial.c(5), "pattern 6")?;
    let correction = add(
        add(partial.c(7), partial.c(8), "pattern 6")?,
        mul(2, c45, "pattern 6")?,
        "pattern 6",
    )?;
    sub(total, correction, "c6")
}
