mod support;

use atam_core::dynamics::frontier;
use atam_core::io::{parse_tileset, write_tileset};
use atam_core::model::{binding_graph, is_tau_stable, Assembly, Position, Tas, TileId};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn stability_matches_bipartition_oracle(seed in any::<u64>(), temperature in 1u32..=4) {
        let mut rng = support::rng(seed);
        let ts = support::random_tileset(&mut rng, 4, 3, 3, 0.2);
        let a = support::random_assembly(&mut rng, &ts, 8, 3);
        prop_assert_eq!(is_tau_stable(&a, &ts, temperature).unwrap(), support::brute_stable(&a, &ts, temperature));
    }

    #[test]
    fn stable_assemblies_are_connected(seed in any::<u64>(), temperature in 1u32..=3) {
        let mut rng = support::rng(seed);
        let ts = support::random_tileset(&mut rng, 3, 2, 2, 0.1);
        let a = support::random_assembly(&mut rng, &ts, 8, 3);
        if a.len() >= 2 && is_tau_stable(&a, &ts, temperature).unwrap() {
            prop_assert!(binding_graph(&a, &ts).unwrap().is_connected());
        }
    }

    #[test]
    fn frontier_matches_exhaustive_scan(seed in any::<u64>(), temperature in 1u32..=3) {
        let mut rng = support::rng(seed);
        let ts = support::random_tileset(&mut rng, 5, 3, 2, 0.3);
        let mut a = support::random_assembly(&mut rng, &ts, 6, 4);
        if a.is_empty() {
            a.insert(Position::ORIGIN, TileId(0));
        }
        // Attachability does not depend on the seed's stability.
        let tas = Tas::new_unchecked(ts, a.clone(), temperature);
        let got: std::collections::BTreeSet<(Position, TileId)> =
            frontier(&tas, &a).unwrap().into_iter().map(|x| (x.position, x.tile)).collect();
        prop_assert_eq!(got, support::brute_frontier(&tas, &a));
    }

    #[test]
    fn tilesets_round_trip(seed in any::<u64>(), temperature in 1u32..=2) {
        let mut rng = support::rng(seed);
        let ts = support::random_tileset(&mut rng, 6, 4, 3, 0.3);
        let Ok(tas) = Tas::new(ts, Assembly::singleton(Position::new(3, -2), TileId(1)), temperature) else {
            return Ok(());
        };
        let text = write_tileset(&tas);
        let back = parse_tileset(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &tas);
        prop_assert_eq!(write_tileset(&back), text);
    }
}
