#![allow(dead_code)]

pub mod figures;

use std::collections::BTreeSet;

use chipfire::builder::{build_config_poset, ConfigPoset, MovePoset, DEFAULT_STATE_CAP};
use chipfire::firing::{ChipConfig, FiringMove, FiringSystem};
use chipfire::line::origin_config;
use chipfire::notation::LineNotation;
use chipfire::order::FinitePoset;
use chipfire::sample::{random_sink_game, GameShape};

pub type Edge<T> = (T, T);

pub fn line_poset(n: u64) -> ConfigPoset {
    build_config_poset(&FiringSystem::Line, &origin_config(n).unwrap(), DEFAULT_STATE_CAP).unwrap()
}

pub fn compact(cfg: &ChipConfig) -> String {
    LineNotation(cfg).to_string()
}

pub fn config_nodes(p: &ConfigPoset) -> BTreeSet<String> {
    p.poset().labels().iter().map(compact).collect()
}

pub fn config_covers(p: &ConfigPoset) -> BTreeSet<Edge<String>> {
    let q = p.poset();
    q.covers()
        .into_iter()
        .map(|(u, l)| (compact(q.label(u)), compact(q.label(l))))
        .collect()
}

pub fn expected_nodes(nodes: &[&str]) -> BTreeSet<String> {
    nodes.iter().map(|s| s.to_string()).collect()
}

pub fn expected_covers(covers: &[(&str, &str)]) -> BTreeSet<Edge<String>> {
    covers
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

pub fn move_nodes(p: &FinitePoset<FiringMove>) -> BTreeSet<FiringMove> {
    p.labels().iter().copied().collect()
}

pub fn move_covers(p: &FinitePoset<FiringMove>) -> BTreeSet<Edge<FiringMove>> {
    p.covers()
        .into_iter()
        .map(|(u, l)| (*p.label(u), *p.label(l)))
        .collect()
}

pub fn expected_moves(moves: &[(i64, u64)]) -> BTreeSet<FiringMove> {
    moves.iter().map(|&(s, j)| FiringMove::new(s, j)).collect()
}

pub fn expected_move_covers(covers: &[figures::MoveCover]) -> BTreeSet<Edge<FiringMove>> {
    covers
        .iter()
        .map(|&((a, i), (b, j))| (FiringMove::new(a, i), FiringMove::new(b, j)))
        .collect()
}

/// Same moves and the same covers.
pub fn same_move_order(a: &MovePoset, b: &FinitePoset<FiringMove>) -> bool {
    move_nodes(a.poset()) == move_nodes(b) && move_covers(a.poset()) == move_covers(b)
}

/// The seeded random sink games used by the property suites: `count`
/// instances from seeds `0..count`.
pub fn random_games(count: u64) -> Vec<(u64, FiringSystem, ChipConfig)> {
    (0..count)
        .map(|seed| {
            let (system, cfg) = random_sink_game(seed, GameShape::default());
            (seed, system, cfg)
        })
        .collect()
}
