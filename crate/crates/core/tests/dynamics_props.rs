mod support;

use std::collections::BTreeSet;

use atam_core::dynamics::{
    enumerate, enumerate_with_jobs, frontier, is_producible, random_sequence, replay, replay_stages, AssemblyGraph,
    Bounds,
};
use atam_core::model::{is_subassembly, is_tau_stable, Assembly, Position, Tas, TileId};
use proptest::prelude::*;
use rand::Rng;

/// Exhaustive graphs of the small corpus systems.
fn corpus_graphs() -> Vec<(&'static str, Tas, AssemblyGraph)> {
    let mut out = Vec::new();
    for (name, bounds) in [
        ("sys-line.json", Bounds::max_tiles(6)),
        ("sys-l.json", Bounds::unbounded()),
        ("sys-coop.json", Bounds::unbounded()),
        ("sys-nondir.json", Bounds::unbounded()),
        ("sys-fsa-sep.json", Bounds::max_tiles(7)),
        ("sys-square-4.json", Bounds::unbounded()),
        ("sys-square-5.json", Bounds::unbounded()),
    ] {
        let tas = support::load(name);
        let g = enumerate(&tas, &bounds).unwrap();
        out.push((name, tas, g));
    }
    out
}

#[test]
fn frontier_is_monotone_along_the_subassembly_order() {
    for (name, tas, g) in corpus_graphs() {
        let frontiers: Vec<BTreeSet<(Position, TileId)>> = g
            .nodes()
            .iter()
            .map(|n| frontier(&tas, &n.assembly).unwrap().into_iter().map(|a| (a.position, a.tile)).collect())
            .collect();
        for (i, a) in g.nodes().iter().enumerate() {
            for (j, b) in g.nodes().iter().enumerate() {
                if !is_subassembly(&a.assembly, &b.assembly) {
                    continue;
                }
                for &(p, t) in &frontiers[i] {
                    if !b.assembly.contains(p) {
                        assert!(frontiers[j].contains(&(p, t)), "{name}: nodes {i} -> {j} lose {p} {t}");
                    }
                }
            }
        }
    }
}

#[test]
fn every_enumerated_node_is_stable() {
    for (name, tas, g) in corpus_graphs() {
        assert!(g.len() <= 1000);
        for n in g.nodes() {
            assert!(is_tau_stable(&n.assembly, tas.tileset(), tas.temperature()).unwrap(), "{name}");
        }
    }
}

#[test]
fn square_state_counts_are_central_binomials_minus_one() {
    for (n, expected) in [(4, 69), (5, 251)] {
        let tas = support::load(&format!("sys-square-{n}.json"));
        let g = enumerate(&tas, &Bounds::unbounded()).unwrap();
        assert_eq!(g.len(), expected);
        assert_eq!(g.terminals().count(), 1);
    }
}

/// One tile renamed, or one random placement added next to the assembly.
fn mutate(rng: &mut impl Rng, tas: &Tas, a: &Assembly) -> Assembly {
    let tiles = tas.tileset().len() as u32;
    let positions: Vec<Position> = a.positions().collect();
    let mut out = a.clone();
    if rng.random_bool(0.5) {
        let p = positions[rng.random_range(0..positions.len())];
        out.insert(p, TileId(rng.random_range(0..tiles)));
    } else {
        let base = positions[rng.random_range(0..positions.len())];
        let p = Position::new(base.x + rng.random_range(-2..=2), base.y + rng.random_range(-2..=2));
        out.insert(p, TileId(rng.random_range(0..tiles)));
    }
    out
}

#[test]
fn producibility_agrees_with_exhaustive_graphs() {
    let mut rng = support::rng(7);
    for (name, tas, g) in corpus_graphs() {
        if !g.is_exhaustive() {
            continue;
        }
        for n in g.nodes() {
            assert!(is_producible(&tas, &n.assembly).unwrap(), "{name}");
        }
        for _ in 0..100 {
            let base = &g.nodes()[rng.random_range(0..g.len())].assembly;
            let m = mutate(&mut rng, &tas, base);
            assert_eq!(is_producible(&tas, &m).unwrap(), g.find(&m).is_some(), "{name}: {m:?}");
        }
    }
}

#[test]
fn confluence_on_directed_corpus_systems() {
    for name in ["sys-l.json", "sys-coop.json", "sys-square-4.json", "sys-square-6.json"] {
        let tas = support::load(name);
        let mut terminal: Option<Assembly> = None;
        for seed in 0..40 {
            let s = random_sequence(&tas, seed, 1000).unwrap();
            let r = replay(&tas, &s).unwrap();
            assert!(frontier(&tas, &r).unwrap().is_empty(), "{name} did not finish");
            match &terminal {
                None => terminal = Some(r),
                Some(t) => assert_eq!(t, &r, "{name} rng seed {seed}"),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn enumeration_matches_naive_search(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (tas, all) = support::random_small_tas(&mut rng, 200);
        let g = enumerate(&tas, &Bounds::unbounded()).unwrap();
        prop_assert!(g.is_exhaustive());
        let nodes: BTreeSet<Assembly> = g.nodes().iter().map(|n| n.assembly.clone()).collect();
        prop_assert_eq!(nodes.len(), g.len());
        prop_assert_eq!(&nodes, &all);
        for n in g.nodes() {
            prop_assert_eq!(n.terminal, support::brute_frontier(&tas, &n.assembly).is_empty());
            prop_assert!(!n.truncated);
        }
        for e in g.edges() {
            let next = g.node(e.source).assembly.clone().with(e.attachment.position, e.attachment.tile);
            prop_assert_eq!(&next, &g.node(e.target).assembly);
        }
    }

    #[test]
    fn enumeration_ignores_worker_count(seed in any::<u64>(), k in 1usize..=9) {
        let mut rng = support::rng(seed);
        let (tas, _) = support::random_small_tas(&mut rng, 200);
        let bounds = Bounds::max_tiles(k);
        let one = enumerate_with_jobs(&tas, &bounds, 1).unwrap();
        for jobs in [2, 5] {
            let many = enumerate_with_jobs(&tas, &bounds, jobs).unwrap();
            prop_assert_eq!(one.nodes(), many.nodes());
            prop_assert_eq!(one.edges(), many.edges());
            prop_assert_eq!(one.status(), many.status());
        }
    }

    #[test]
    fn producibility_matches_naive_search(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (tas, all) = support::random_small_tas(&mut rng, 200);
        let nodes: Vec<&Assembly> = all.iter().collect();
        for _ in 0..20 {
            let base = nodes[rng.random_range(0..nodes.len())];
            let m = mutate(&mut rng, &tas, base);
            prop_assert_eq!(is_producible(&tas, &m).unwrap(), all.contains(&m));
        }
    }

    #[test]
    fn replay_result_is_the_union_of_its_prefixes(seed in any::<u64>(), rng_seed in any::<u64>(), steps in 0usize..40) {
        let mut rng = support::rng(seed);
        let (tas, _) = support::random_small_tas(&mut rng, 200);
        let s = random_sequence(&tas, rng_seed, steps).unwrap();
        prop_assert!(s.steps.len() <= steps);
        let stages = replay_stages(&tas, &s).unwrap();
        let result = replay(&tas, &s).unwrap();
        prop_assert_eq!(stages.len(), s.steps.len() + 1);
        prop_assert_eq!(stages.last().unwrap(), &result);
        let union: BTreeSet<Position> = stages.iter().flat_map(|a| a.positions()).collect();
        prop_assert_eq!(union, result.domain());
        for a in &stages {
            prop_assert!(is_subassembly(a, &result));
        }
        if s.steps.len() < steps {
            prop_assert!(frontier(&tas, &result).unwrap().is_empty());
        }
    }

    #[test]
    fn random_sequences_are_reproducible(seed in any::<u64>(), rng_seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (tas, all) = support::random_small_tas(&mut rng, 200);
        let a = random_sequence(&tas, rng_seed, 30).unwrap();
        prop_assert_eq!(&a, &random_sequence(&tas, rng_seed, 30).unwrap());
        prop_assert!(all.contains(&replay(&tas, &a).unwrap()));
    }

    #[test]
    fn larger_tile_bounds_only_extend_the_graph(seed in any::<u64>(), k in 1usize..=6) {
        let mut rng = support::rng(seed);
        let (tas, _) = support::random_small_tas(&mut rng, 200);
        let small = enumerate(&tas, &Bounds::max_tiles(k)).unwrap();
        let large = enumerate(&tas, &Bounds::max_tiles(k + 2)).unwrap();
        for n in small.nodes() {
            prop_assert!(large.find(&n.assembly).is_some());
        }
    }
}
