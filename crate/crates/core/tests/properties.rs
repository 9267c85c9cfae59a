use hypertri_core::counters::{check_total_counts, work_bounds};
use hypertri_core::oracle::{brute_force_census, naive_region_signature};
use hypertri_core::pattern::{scan_regions, witness};
use hypertri_core::scratch::Marker;
use hypertri_core::{
    classify, count_all, parse_str, peel, EdgeDegreeTable, Hypergraph, OrientedHypergraph, Phase, RegionSignature,
};
use proptest::prelude::*;

fn edge_lists(max_label: u64, max_edges: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..max_label, 1..6), 0..max_edges)
}

fn build(edges: &[Vec<u64>]) -> Hypergraph {
    Hypergraph::from_labeled_edges(edges.to_vec()).0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn census_matches_oracle(edges in edge_lists(10, 18)) {
        let g = build(&edges);
        prop_assert_eq!(count_all(&g).unwrap().counts, brute_force_census(&g).unwrap());
    }

    #[test]
    fn census_ignores_labels_and_edge_order(
        edges in edge_lists(9, 14),
        shift in 1u64..1000,
        scale in 1u64..7,
        rotate in 0usize..14,
    ) {
        let g = build(&edges);
        let mut moved: Vec<Vec<u64>> = edges.iter()
            .map(|e| e.iter().map(|&v| (8 - v) * scale + shift).collect())
            .collect();
        if !moved.is_empty() {
            let k = rotate % moved.len();
            moved.rotate_left(k);
        }
        let h = build(&moved);
        prop_assert_eq!(count_all(&g).unwrap().counts, count_all(&h).unwrap().counts);
    }

    #[test]
    fn every_triple_is_counted_once(edges in edge_lists(8, 16)) {
        let g = build(&edges);
        let census = count_all(&g).unwrap();
        let table = EdgeDegreeTable::compute(&OrientedHypergraph::degeneracy(&g)).unwrap();
        prop_assert!(check_total_counts(&census.counts, &table).is_ok());
        let m = g.m() as u64;
        let all_triples = if m < 3 { 0 } else { m * (m - 1) * (m - 2) / 6 };
        prop_assert!(census.counts.closed_total() + census.counts.open_total() <= all_triples);
    }

    #[test]
    fn orientation_and_peeling(edges in edge_lists(30, 40)) {
        let g = build(&edges);
        let p = peel(&g);
        let dah = OrientedHypergraph::build(&g, p.ordering.clone()).unwrap();
        prop_assert_eq!(dah.max_outdegree(), p.kappa);
        let din: u64 = (0..g.n() as u32).map(|r| dah.in_degree(r)).sum();
        let dout: u64 = (0..g.n() as u32).map(|r| dah.out_degree(r)).sum();
        prop_assert_eq!(din, g.m() as u64);
        prop_assert_eq!(din + dout, g.edges().map(|e| e.len() as u64).sum::<u64>());
        for e in 0..g.m() as u32 {
            let ranked = dah.edge(e);
            prop_assert!(ranked.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(dah.sink(e), *ranked.last().unwrap());
        }
        for (r, &d) in p.peel_degrees.iter().enumerate() {
            prop_assert_eq!(d as u64, dah.out_degree(r as u32));
        }
    }

    #[test]
    fn work_stays_within_bounds(edges in edge_lists(20, 40)) {
        let g = build(&edges);
        let census = count_all(&g).unwrap();
        let (tri, star) = work_bounds(&OrientedHypergraph::degeneracy(&g));
        prop_assert!(census.timings.get(Phase::Triangle).iterations as u128 <= tri);
        prop_assert!(census.timings.get(Phase::Stars).iterations as u128 <= star);
    }

    #[test]
    fn degree_table_partitions_neighbours(edges in edge_lists(15, 30)) {
        let g = build(&edges);
        let t = EdgeDegreeTable::compute(&OrientedHypergraph::degeneracy(&g)).unwrap();
        for e in 0..g.m() {
            prop_assert_eq!(t.d_prime[e], t.d_anc[e] + t.d_desc[e] + t.d_int[e]);
        }
        prop_assert_eq!(t.d_anc.iter().sum::<u64>(), t.d_desc.iter().sum::<u64>());
    }

    #[test]
    fn signatures_and_witnesses(
        a in prop::collection::btree_set(0u32..12, 1..6),
        b in prop::collection::btree_set(0u32..12, 1..6),
        c in prop::collection::btree_set(0u32..12, 1..6),
    ) {
        let (a, b, c): (Vec<u32>, Vec<u32>, Vec<u32>) =
            (a.into_iter().collect(), b.into_iter().collect(), c.into_iter().collect());
        let mut marker = Marker::new(12);
        let scan = scan_regions(&a, &b, &c, &mut marker);
        prop_assert_eq!(scan.signature, naive_region_signature(&a, &b, &c));
        let perms = [(&a, &b, &c), (&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)];
        let first = classify(scan.signature).unwrap();
        for (x, y, z) in perms {
            prop_assert_eq!(classify(naive_region_signature(x, y, z)).unwrap(), first);
        }
        if let Some(id) = first.pattern().filter(|id| id.has_witness()) {
            let w = witness(&scan, id).unwrap().0;
            prop_assert!(w[0] < w[1] && w[1] < w[2]);
            for v in w {
                let mask = a.contains(&v) as u8 | (b.contains(&v) as u8) << 1 | (c.contains(&v) as u8) << 2;
                prop_assert!(mask.count_ones() >= 2, "witness vertex {} in region {:03b}", v, mask);
            }
        }
    }
}

#[test]
fn every_signature_is_classified_consistently() {
    for bits in 0u8..128 {
        let sig = RegionSignature::from_bits(bits);
        let a = classify(sig);
        let b = classify(sig.canonical());
        match (a, b) {
            (Ok(x), Ok(y)) => assert_eq!(x, y, "{sig}"),
            (Err(_), Err(_)) => {}
            (x, y) => panic!("{sig}: {x:?} vs canonical {y:?}"),
        }
    }
}

#[test]
fn fixtures_from_text() {
    let (g, report) = parse_str("# header\n1 2 3\n3 2 1\n4\n\n2 3 4\n").unwrap();
    assert_eq!(g.m(), 2);
    assert_eq!(report.duplicates_removed, 1);
    assert_eq!(report.singletons_removed, 1);
    let census = count_all(&g).unwrap();
    assert_eq!(census.counts.closed_total() + census.counts.open_total(), 0);
}
