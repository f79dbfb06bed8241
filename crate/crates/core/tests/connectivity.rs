mod common;

use std::collections::BTreeSet;

use common::*;
use heegaard_rc::fixtures::bipartition_graph;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn ten_thousand_random_graphs_match_brute_force() {
    let mut rng = StdRng::seed_from_u64(0x2c0);
    for _ in 0..10_000 {
        let (n, edges, minus) = random_graph(&mut rng);
        let g = to_criteria_graph(n, &edges);
        assert_eq!(g.is_two_connected(), brute_two_connected(n, &edges), "{n} {edges:?}");
        let blocks: BTreeSet<usize> = (0..n).filter(|&v| minus[v]).collect();
        let p = g.with_partition(&blocks);
        assert_eq!(
            p.is_doubly_two_connected().unwrap(),
            brute_doubly(n, &edges, &minus),
            "{n} {edges:?} {minus:?}"
        );
    }
}

#[test]
fn bipartition_graph_verdicts() {
    let g = bipartition_graph();
    let bad = g.clone().with_partition(&[1, 2, 3].into_iter().collect());
    assert!(!bad.is_doubly_two_connected().unwrap());
    // deleting 2 and 5 cuts vertex 1 off
    assert_eq!(bad.reachable_without(&1, &[&2, &5]), [1].into_iter().collect());
    let good = g.with_partition(&[1, 2, 4, 5].into_iter().collect());
    assert!(good.is_doubly_two_connected().unwrap());
}

#[test]
fn disconnecting_pair_is_a_real_witness() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..2_000 {
        let (n, edges, minus) = random_graph(&mut rng);
        let blocks: BTreeSet<usize> = (0..n).filter(|&v| minus[v]).collect();
        let g = to_criteria_graph(n, &edges).with_partition(&blocks);
        if let Some((&u, &w)) = g.disconnecting_pair().unwrap() {
            assert!(minus[u] && !minus[w]);
            assert!(!connected_without(n, &edges, &[u, w]));
        }
    }
}

proptest! {
    #[test]
    fn two_connected_matches_brute_force(n in 2usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)) {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .enumerate()
            .filter(|(k, _)| bits[*k])
            .map(|(_, e)| e)
            .collect();
        prop_assert_eq!(to_criteria_graph(n, &edges).is_two_connected(), brute_two_connected(n, &edges));
    }
}
