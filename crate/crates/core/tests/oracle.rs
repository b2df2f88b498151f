use cubicity_core::oracle::{
    exact_cubicity, indifference_supergraphs, is_indifference, realize_unit_interval, ExactOutcome, DEFAULT_MAX_B,
};
use cubicity_core::*;
use proptest::prelude::*;

/// Inclusion-maximal missing sets found by trying every subset of non-edges
/// to add back and testing each supergraph directly.
fn maximal_missing_by_subsets(g: &Graph) -> Vec<u32> {
    let ne = non_edges(g);
    let mut ok = Vec::new();
    for missing in 0u32..(1 << ne.len()) {
        let mut h = g.clone();
        for (i, &(u, v)) in ne.iter().enumerate() {
            if missing >> i & 1 == 0 {
                h.add_edge(u, v).unwrap();
            }
        }
        if is_indifference(&h).unwrap().is_some() {
            ok.push(missing);
        }
    }
    let mut maximal: Vec<u32> = ok
        .iter()
        .copied()
        .filter(|&m| !ok.iter().any(|&o| o != m && o & m == m))
        .collect();
    maximal.sort();
    maximal
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn order_closure_matches_subset_enumeration(g in small_graph()) {
        let cands = indifference_supergraphs(&g).unwrap();
        let mut masks: Vec<u32> = cands.candidates.iter().map(|c| c.missing).collect();
        masks.sort();
        prop_assert_eq!(masks, maximal_missing_by_subsets(&g));
    }

    #[test]
    fn every_candidate_has_an_explicit_unit_model(g in small_graph()) {
        let cands = indifference_supergraphs(&g).unwrap();
        for c in &cands.candidates {
            let h = cands.supergraph(&g, c.missing);
            prop_assert!(realize_unit_interval(&h, &c.order).is_some());
        }
    }

    #[test]
    fn exact_witness_realizes_graph(g in small_graph()) {
        if let ExactOutcome::Exact(r) = exact_cubicity(&g, DEFAULT_MAX_B).unwrap() {
            let rep = r.to_representation(&g).unwrap();
            prop_assert!(verify_representation(&g, &rep).unwrap().ok);
            let covered: std::collections::BTreeSet<_> = r.witness.iter().flatten().copied().collect();
            prop_assert_eq!(covered.into_iter().collect::<Vec<_>>(), non_edges(&g));
        }
    }
}

#[test]
fn stars_meet_log_lower_bound() {
    for (m, expected) in [(2, 1), (3, 2), (4, 2), (5, 3), (6, 3)] {
        let cub = exact_cubicity(&Graph::star(m), DEFAULT_MAX_B).unwrap().cub();
        assert_eq!(cub, Some(expected), "S({m})");
    }
}

#[test]
fn four_cycle_needs_two_dimensions() {
    assert_eq!(exact_cubicity(&Graph::cycle(4), DEFAULT_MAX_B).unwrap().cub(), Some(2));
}

#[test]
fn refusal_on_too_many_non_edges() {
    // 8 vertices, 25 non-edges.
    let g = Graph::from_edges(8, [(0, 1), (2, 3), (4, 5)]).unwrap();
    assert!(exact_cubicity(&g, 4).is_err());
}
