use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::graph::aggregate;
use crate::io::read_edge_list;
use crate::oracle::delta_oracle;
use crate::synth::{random_graph, random_partition, Weights};

fn karate() -> Graph {
    read_edge_list(include_str!("../../data/karate.txt").as_bytes()).unwrap().0
}

fn triangle() -> Graph {
    Graph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
}

fn stats(st: &CriterionState) -> &CommunityStats {
    st.criterion().stats().unwrap()
}

#[test]
fn karate_ng_init() {
    let st = CriterionState::new(CriterionId::NewmanGirvan.build(), &karate()).unwrap();
    let s = stats(&st);
    assert_eq!(s.total_degree.iter().sum::<f64>(), 156.0);
    assert!(s.internal.iter().all(|&x| x == 0.0));
}

#[test]
fn zc_init_keeps_loop() {
    let g = Graph::from_edges(1, [(0, 0, 3.0)]);
    let st = CriterionState::new(CriterionId::ZahnCondorcet.build(), &g).unwrap();
    assert_eq!(stats(&st).internal[0], 3.0);
    assert_eq!(stats(&st).size[0], 1.0);
}

#[test]
fn zero_edge_mass_rejected() {
    let g = Graph::from_edges(3, []);
    for id in [
        CriterionId::NewmanGirvan,
        CriterionId::BalancedModularity,
        CriterionId::DeviationToIndetermination,
        CriterionId::DeviationToUniformity,
        CriterionId::ProfileDifference,
        CriterionId::Marcotorchino,
    ] {
        assert!(
            matches!(CriterionState::new(id.build(), &g), Err(Error::ZeroEdgeMass { .. })),
            "{id}"
        );
    }
    for id in [CriterionId::ZahnCondorcet, CriterionId::Goldberg] {
        assert!(CriterionState::new(id.build(), &g).is_ok());
    }
}

#[test]
fn remove_sole_member() {
    let g = Graph::from_edges(2, [(0, 1, 1.0), (0, 0, 2.0)]);
    let mut st = CriterionState::new(CriterionId::ZahnCondorcet.build(), &g).unwrap();
    st.remove(&g, 0, 0, 0.0).unwrap();
    assert_eq!(stats(&st).internal[0], 0.0);
    assert_eq!(stats(&st).size[0], 0.0);
    assert_eq!(st.community_of(0), None);
}

#[test]
fn zc_remove_from_pair() {
    let g = Graph::from_edges(2, [(0, 1, 2.0)]);
    let p = Partition::whole(2);
    let mut st = CriterionState::with_partition(CriterionId::ZahnCondorcet.build(), &g, &p).unwrap();
    let c = st.community_of(0).unwrap();
    assert_eq!(stats(&st).internal[c], 4.0);
    st.remove(&g, 0, c, 2.0).unwrap();
    assert_eq!(stats(&st).internal[c], 0.0);
}

#[test]
fn pd_kappa_tracks_emptied_communities() {
    let g = pretreat(CriterionId::ProfileDifference, &triangle()).unwrap();
    let mut st = CriterionState::new(CriterionId::ProfileDifference.build(), &g).unwrap();
    assert_eq!(stats(&st).kappa, 3);
    st.remove(&g, 0, 0, 0.0).unwrap();
    assert_eq!(stats(&st).kappa, 2);
    st.insert(&g, 0, 1, 0.5).unwrap();
    assert_eq!(stats(&st).kappa, 2);
    st.remove(&g, 0, 1, 0.5).unwrap();
    st.insert(&g, 0, 0, 0.0).unwrap();
    assert_eq!(stats(&st).kappa, 3);
}

#[test]
fn insert_into_empty() {
    let g = Graph::from_edges(2, [(0, 1, 1.0), (0, 0, 1.5)]);
    let mut st = CriterionState::new(CriterionId::Goldberg.build(), &g).unwrap();
    st.remove(&g, 0, 0, 0.0).unwrap();
    st.insert(&g, 0, 0, 0.0).unwrap();
    assert_eq!(stats(&st).internal[0], 1.5);
    assert_eq!(stats(&st).size[0], 1.0);
}

#[test]
fn ng_insert_adds_degree() {
    // node 0 has degree 4; community 1 = {1, 2} with degrees 5 + 5
    let g = Graph::from_edges(4, [(0, 3, 4.0), (1, 2, 1.0), (1, 3, 4.0), (2, 3, 4.0)]);
    let p = Partition::from_labels([0, 1, 1, 2]);
    let mut st = CriterionState::with_partition(CriterionId::NewmanGirvan.build(), &g, &p).unwrap();
    let c = st.community_of(1).unwrap();
    assert_eq!(stats(&st).total_degree[c], 10.0);
    let c0 = st.community_of(0).unwrap();
    st.remove(&g, 0, c0, 0.0).unwrap();
    st.insert(&g, 0, c, 0.0).unwrap();
    assert_eq!(stats(&st).total_degree[c], 14.0);
}

#[test]
fn checked_moves() {
    let g = triangle();
    let mut st = CriterionState::new(CriterionId::ZahnCondorcet.build(), &g).unwrap();
    assert!(matches!(st.remove(&g, 0, 1, 1.0), Err(Error::NodeNotInCommunity { node: 0, community: 1 })));
    assert!(matches!(st.insert(&g, 0, 1, 1.0), Err(Error::NodeAlreadyPlaced { node: 0 })));
    st.remove(&g, 0, 0, 0.0).unwrap();
    assert!(matches!(st.gain(&g, 0, 7, 0.0), Err(Error::UnknownCommunity { community: 7, .. })));
    assert!(matches!(st.insert(&g, 0, 3, 0.0), Err(Error::UnknownCommunity { .. })));
}

#[test]
fn ng_gain_to_empty_is_zero() {
    let g = triangle();
    let mut st = CriterionState::new(CriterionId::NewmanGirvan.build(), &g).unwrap();
    st.remove(&g, 0, 0, 0.0).unwrap();
    assert_eq!(st.gain(&g, 0, 0, 0.0).unwrap(), 0.0);
}

#[test]
fn pd_gain_to_empty() {
    // an isolated node with a loop normalizes to a unit diagonal
    let g = pretreat(
        CriterionId::ProfileDifference,
        &Graph::from_edges(3, [(0, 0, 2.0), (1, 2, 1.0)]),
    )
    .unwrap();
    assert_eq!(g.loop_weight(0), 1.0);
    let mut st = CriterionState::new(CriterionId::ProfileDifference.build(), &g).unwrap();
    st.remove(&g, 0, 0, 0.0).unwrap();
    assert_eq!(st.gain(&g, 0, 0, 0.0).unwrap(), 0.5);
}

#[test]
fn zc_unit_edge_gain() {
    let g = Graph::from_edges(2, [(0, 1, 1.0)]);
    let mut st = CriterionState::new(CriterionId::ZahnCondorcet.build(), &g).unwrap();
    st.remove(&g, 0, 0, 0.0).unwrap();
    assert_eq!(st.gain(&g, 0, 1, 1.0).unwrap(), 1.0);
    assert_eq!(st.gain(&g, 0, 0, 0.0).unwrap(), 0.0);
}

#[test]
fn one_community_totals_cancel() {
    let g = karate();
    let whole = Partition::whole(g.num_nodes());
    assert_eq!(evaluate(CriterionId::NewmanGirvan, &g, &whole).unwrap(), 0.0);
    assert!(evaluate(CriterionId::DeviationToUniformity, &g, &whole).unwrap().abs() < 1e-12);
}

#[test]
fn zc_singletons_total() {
    let g = karate();
    let n = 34.0;
    let f = evaluate(CriterionId::ZahnCondorcet, &g, &Partition::singleton(34)).unwrap();
    assert_eq!(f, n * n - n - 156.0);
}

#[test]
fn relational_singletons_match_init() {
    let g = karate();
    for id in CriterionId::all(0.3) {
        let g0 = pretreat(id, &g).unwrap();
        let st = CriterionState::new(id.build(), &g0).unwrap();
        let r = relational_total(id, &g0, &Partition::singleton(34)).unwrap();
        assert!((st.total() - r).abs() <= 1e-9 * r.abs().max(1.0), "{id}: {} vs {r}", st.total());
    }
}

#[test]
fn parse_codes_and_rejections() {
    for id in CriterionId::all(0.25) {
        assert_eq!(CriterionId::parse(id.code(), Some(0.25)).unwrap(), id);
    }
    assert_eq!("oz".parse::<CriterionId>().unwrap(), CriterionId::OwsinskiZadrozny { alpha: DEFAULT_ALPHA });
    for name in ["mg", "Mancoridis-Gansner", "sm", "shi-malik", "md", "michalski-decaestecker"] {
        let err = CriterionId::parse(name, None).unwrap_err();
        assert!(matches!(err, Error::NotPluggable { .. }), "{name}");
        assert!(err.to_string().contains("not pluggable"));
    }
    assert!(matches!(CriterionId::parse("xx", None), Err(Error::UnknownCriterion(_))));
    assert!(matches!(CriterionId::parse("oz", Some(1.0)), Err(Error::InvalidAlpha(_))));
    assert!(matches!(CriterionId::parse("oz", Some(0.0)), Err(Error::InvalidAlpha(_))));
}

/// Checks `F(i in C1) - F(i in C2) = scale * (gain(C1) - gain(C2))` for every
/// node and every pair of candidates, the left side by full re-evaluation.
fn check_gains_against_oracle(id: CriterionId, g0: &Graph, p: &Partition) {
    let n = g0.num_nodes();
    let k = p.num_communities();
    let lambda = id.build().scale();
    let base = relational_total(id, g0, p).unwrap();
    for i in 0..n {
        let mut st = CriterionState::with_partition(id.build(), g0, p).unwrap();
        let c_old = p.community_of(i);
        let mut scratch = crate::graph::NeighborWeights::new(n);
        scratch.collect(g0, i, st.assignment(), c_old);
        st.remove(g0, i, c_old, scratch.weight(c_old)).unwrap();
        // slot ids equal partition ids; slot k (if free) is the empty target
        let empty_slot = (0..n).find(|&c| st.occupancy(c) == 0);
        let mut candidates: Vec<(usize, usize)> = (0..k).map(|c| (c, c)).collect();
        if let Some(slot) = empty_slot {
            candidates.push((k, slot));
        }
        let scored: Vec<(f64, f64)> = candidates
            .iter()
            .map(|&(target, slot)| {
                let delta = delta_oracle(id, g0, p, i, target).unwrap();
                let gain = st.gain(g0, i, slot, scratch.weight(slot)).unwrap();
                (delta, gain)
            })
            .collect();
        for a in &scored {
            for b in &scored {
                let lhs = a.0 - b.0;
                let rhs = lambda * (a.1 - b.1);
                assert!(
                    (lhs - rhs).abs() <= 1e-9 * base.abs().max(1.0),
                    "{id} node {i}: dF {lhs} vs scaled dgain {rhs}"
                );
            }
        }
    }
}

#[test]
fn gains_match_brute_force_on_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..40 {
        let n = rng.gen_range(2..=8);
        let weights = if trial % 2 == 0 { Weights::Unit } else { Weights::Uniform(0.0, 5.0) };
        let raw = random_graph(n, rng.gen_range(0.2..0.8), weights, &mut rng);
        if raw.globals().two_m == 0.0 {
            continue;
        }
        let p = random_partition(n, rng.gen_range(1..=n), &mut rng);
        for id in CriterionId::all(0.3) {
            let Ok(g0) = pretreat(id, &raw) else { continue };
            check_gains_against_oracle(id, &g0, &p);
        }
    }
}

#[test]
fn meta_level_gains_match_flat_moves() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..30 {
        let n = rng.gen_range(4..=9);
        let raw = random_graph(n, 0.5, Weights::Unit, &mut rng);
        if raw.globals().two_m == 0.0 {
            continue;
        }
        let coarse = random_partition(n, n / 2 + 1, &mut rng);
        for id in CriterionId::all(0.7) {
            let g0 = pretreat(id, &raw).unwrap();
            let meta = aggregate(&g0, &coarse);
            let m = meta.num_nodes();
            let upper = random_partition(m, rng.gen_range(1..=m), &mut rng);
            let flat = coarse.compose(&upper);
            let mut st = CriterionState::with_partition(id.build(), &meta, &upper).unwrap();
            let total = st.total();
            let base = relational_total(id, &g0, &flat).unwrap();
            assert!((total - base).abs() <= 1e-9 * base.abs().max(1.0), "{id}");

            // move meta-node 0 to every other community of `upper`
            let c_old = upper.community_of(0);
            let mut scratch = crate::graph::NeighborWeights::new(m);
            scratch.collect(&meta, 0, st.assignment(), c_old);
            st.remove(&meta, 0, c_old, scratch.weight(c_old)).unwrap();
            let g_old = st.gain(&meta, 0, c_old, scratch.weight(c_old)).unwrap();
            for c in 0..upper.num_communities() {
                let mut labels = upper.as_slice().to_vec();
                labels[0] = c;
                let moved = coarse.compose(&Partition::from_labels(labels));
                let delta = relational_total(id, &g0, &moved).unwrap() - base;
                let g_new = st.gain(&meta, 0, c, scratch.weight(c)).unwrap();
                let scaled = st.criterion().scale() * (g_new - g_old);
                assert!((delta - scaled).abs() <= 1e-9 * base.abs().max(1.0), "{id}: {delta} vs {scaled}");
            }
        }
    }
}

proptest! {
    #[test]
    fn remove_insert_restores_accumulators(
        seed in any::<u64>(),
        n in 2usize..20,
        unit in any::<bool>(),
        node in 0usize..20,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights = if unit { Weights::Unit } else { Weights::Uniform(0.0, 5.0) };
        let raw = random_graph(n, 0.4, weights, &mut rng);
        prop_assume!(raw.globals().two_m > 0.0);
        let p = random_partition(n, n / 3 + 1, &mut rng);
        let i = node % n;
        for id in CriterionId::all(0.4) {
            let Ok(g0) = pretreat(id, &raw) else { continue };
            let mut st = CriterionState::with_partition(id.build(), &g0, &p).unwrap();
            let before = stats(&st).clone();
            let c = st.community_of(i).unwrap();
            let mut scratch = crate::graph::NeighborWeights::new(n);
            scratch.collect(&g0, i, st.assignment(), c);
            st.remove(&g0, i, c, scratch.weight(c)).unwrap();
            st.insert(&g0, i, c, scratch.weight(c)).unwrap();
            let after = stats(&st);
            prop_assert_eq!(before.kappa, after.kappa);
            prop_assert_eq!(&before.size, &after.size);
            let tol = if unit && !id.needs_pretreatment() { 0.0 } else { 1e-12 };
            for (x, y) in before.internal.iter().zip(&after.internal)
                .chain(before.total_degree.iter().zip(&after.total_degree))
                .chain(before.aux.iter().zip(&after.aux))
            {
                prop_assert!((x - y).abs() <= tol * x.abs().max(1.0), "{}: {} vs {}", id, x, y);
            }
        }
    }
}
