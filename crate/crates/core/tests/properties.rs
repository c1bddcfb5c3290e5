mod common;

use chipfire::builder::{
    build_config_poset, build_move_poset, complete_sequences, count_complete_sequences, move_poset_from,
    DEFAULT_SEQ_CAP, DEFAULT_STATE_CAP,
};
use chipfire::firing::{
    available_sites, fire, stabilize, ChipConfig, FiringPolicy, FiringSystem, Site, DEFAULT_STEP_CAP,
};
use chipfire::line::{labeled_fire_run, origin_config, origin_odometer};
use chipfire::order;
use chipfire::sample::{random_sink_game, GameShape};
use common::*;
use proptest::prelude::*;

fn small_line_config() -> impl Strategy<Value = ChipConfig> {
    prop::collection::btree_map(-3i64..=3, 0u64..=4, 0..5)
        .prop_map(|m| m.into_iter().map(|(s, c)| (Site(s), c)).collect())
        .prop_filter("at most 10 chips", |c: &ChipConfig| c.total_chips() <= 10)
}

proptest! {
    #[test]
    fn line_firing_conserves_chips(cfg in small_line_config()) {
        for site in available_sites(&FiringSystem::Line, &cfg) {
            let next = fire(&FiringSystem::Line, &cfg, site).unwrap();
            prop_assert_eq!(next.total_chips(), cfg.total_chips());
        }
    }

    #[test]
    fn line_diamond(cfg in small_line_config()) {
        let sys = FiringSystem::Line;
        let sites: Vec<Site> = available_sites(&sys, &cfg).into_iter().collect();
        for (i, &a) in sites.iter().enumerate() {
            for &b in &sites[i + 1..] {
                let ab = fire(&sys, &fire(&sys, &cfg, a).unwrap(), b).unwrap();
                let ba = fire(&sys, &fire(&sys, &cfg, b).unwrap(), a).unwrap();
                prop_assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn line_confluence(cfg in small_line_config(), seed in any::<u64>()) {
        let sys = FiringSystem::Line;
        let a = stabilize(&sys, &cfg, FiringPolicy::LowestFirst, DEFAULT_STEP_CAP).unwrap();
        let b = stabilize(&sys, &cfg, FiringPolicy::Random(seed), DEFAULT_STEP_CAP).unwrap();
        prop_assert_eq!(a.config, b.config);
        prop_assert_eq!(a.odometer, b.odometer);
    }

    #[test]
    fn graph_confluence(game in 0u64..10_000, seed in any::<u64>()) {
        let (sys, cfg) = random_sink_game(game, GameShape::default());
        let a = stabilize(&sys, &cfg, FiringPolicy::HighestFirst, DEFAULT_STEP_CAP).unwrap();
        let b = stabilize(&sys, &cfg, FiringPolicy::Random(seed), DEFAULT_STEP_CAP).unwrap();
        prop_assert_eq!(a.config, b.config);
        prop_assert_eq!(a.odometer, b.odometer);
    }

    #[test]
    fn graph_firing_sends_degree_many_chips(game in 0u64..10_000) {
        let (sys, cfg) = random_sink_game(game, GameShape::default());
        let g = sys.as_graph().unwrap();
        for site in available_sites(&sys, &cfg) {
            let next = fire(&sys, &cfg, site).unwrap();
            prop_assert_eq!(next.total_chips(), cfg.total_chips());
            prop_assert_eq!(cfg.get(site) - next.get(site), g.degree(site.0 as usize));
        }
    }
}

#[test]
fn move_poset_constructions_agree() {
    for n in 1..=8 {
        let configs = line_poset(n);
        let direct = build_move_poset(&FiringSystem::Line, &origin_config(n).unwrap()).unwrap();
        let via = move_poset_from(&configs).unwrap();
        assert!(same_move_order(&direct, via.poset()), "n = {n}");
    }
    for (seed, sys, cfg) in random_games(50) {
        let configs = build_config_poset(&sys, &cfg, DEFAULT_STATE_CAP).unwrap();
        let direct = build_move_poset(&sys, &cfg).unwrap();
        let via = move_poset_from(&configs).unwrap();
        assert!(same_move_order(&direct, via.poset()), "seed {seed}");
    }
}

#[test]
fn sequence_count_matches_enumeration() {
    for n in 1..=6 {
        let configs = line_poset(n);
        let seqs =
            complete_sequences(&FiringSystem::Line, &origin_config(n).unwrap(), DEFAULT_SEQ_CAP).unwrap();
        assert_eq!(count_complete_sequences(&configs), seqs.len() as u128, "n = {n}");
    }
}

#[test]
fn configuration_posets_are_graded_by_fires() {
    for n in 2..=7 {
        let configs = line_poset(n);
        let depth = configs.poset().depths();
        for (x, d) in depth.into_iter().enumerate() {
            assert_eq!(d as u64, configs.move_vector(x).total());
        }
    }
}

#[test]
fn odd_and_even_share_odometers() {
    for m in 1..=6 {
        assert_eq!(
            origin_odometer(2 * m).unwrap(),
            origin_odometer(2 * m + 1).unwrap(),
            "m = {m}"
        );
    }
}

#[test]
fn labeled_runs_sort() {
    for seed in 0..30 {
        let run = labeled_fire_run(8, seed).unwrap();
        assert!(run.config.is_sorted(), "seed {seed}: {}", run.config);
        let mut labels = run.config.reading_order();
        labels.sort_unstable();
        assert_eq!(labels, (1..=8).collect::<Vec<_>>());
    }
}

#[test]
fn random_game_posets_are_lattices() {
    for (seed, sys, cfg) in random_games(50) {
        let configs = build_config_poset(&sys, &cfg, DEFAULT_STATE_CAP).unwrap();
        assert!(order::is_lattice(configs.poset()).holds, "seed {seed}");
    }
}
