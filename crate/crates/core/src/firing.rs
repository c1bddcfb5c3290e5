//! Firing systems, chip configurations and the basic dynamics: single
//! firings, sequence replay and stabilization with an odometer.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default number of firings after which a game is declared non-terminating.
pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiringError {
    #[error("site {site} cannot fire")]
    NotFireable { site: Site },
    #[error("firing sequence is illegal at index {index} (site {site})")]
    IllegalAt { index: usize, site: Site },
    #[error("no stable configuration reached after {cap} firings")]
    StepCapExceeded { cap: u64 },
    #[error("site {site} does not belong to this system")]
    InvalidSite { site: Site },
    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },
}

/// A site of a firing system: a vertex index on a multigraph or a signed
/// coordinate on the integer line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Site(pub i64);

impl Site {
    pub fn vertex(v: usize) -> Self {
        Site(v as i64)
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Site {
    fn from(v: i64) -> Self {
        Site(v)
    }
}

/// Finite undirected multigraph with optional sink vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    // Symmetric, row-major, zero diagonal.
    mult: Vec<u64>,
    degree: Vec<u64>,
    sinks: Vec<bool>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            mult: vec![0; vertex_count * vertex_count],
            degree: vec![0; vertex_count],
            sinks: vec![false; vertex_count],
        }
    }

    /// Path on `len` vertices, `0 - 1 - ... - len-1`.
    pub fn path(len: usize) -> Self {
        let mut g = Multigraph::new(len);
        for v in 1..len {
            g.add_edge(v - 1, v, 1).expect("path edges are valid");
        }
        g
    }

    pub fn cycle(len: usize) -> Self {
        let mut g = Multigraph::path(len);
        if len >= 3 {
            g.add_edge(len - 1, 0, 1).expect("cycle edges are valid");
        }
        g
    }

    /// Adds `multiplicity` parallel edges between `u` and `v`. Repeated calls
    /// accumulate.
    pub fn add_edge(&mut self, u: usize, v: usize, multiplicity: u64) -> Result<(), FiringError> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(FiringError::InvalidEdge {
                u,
                v,
                reason: "vertex out of range",
            });
        }
        if u == v {
            return Err(FiringError::InvalidEdge {
                u,
                v,
                reason: "self-loop",
            });
        }
        if multiplicity == 0 {
            return Err(FiringError::InvalidEdge {
                u,
                v,
                reason: "zero multiplicity",
            });
        }
        let n = self.vertex_count;
        self.mult[u * n + v] += multiplicity;
        self.mult[v * n + u] += multiplicity;
        self.degree[u] += multiplicity;
        self.degree[v] += multiplicity;
        Ok(())
    }

    pub fn set_sink(&mut self, v: usize) -> Result<(), FiringError> {
        if v >= self.vertex_count {
            return Err(FiringError::InvalidSite {
                site: Site::vertex(v),
            });
        }
        self.sinks[v] = true;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.mult[u * self.vertex_count + v]
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.degree[v]
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.sinks[v]
    }

    pub fn sinks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(|&v| self.sinks[v])
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        let row = &self.mult[v * self.vertex_count..(v + 1) * self.vertex_count];
        row.iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(u, &m)| (u, m))
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.vertex_count).flat_map(move |u| {
            (u + 1..self.vertex_count)
                .map(move |v| (u, v, self.multiplicity(u, v)))
                .filter(|e| e.2 > 0)
        })
    }
}

/// Where chips live and how they disperse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiringSystem {
    /// The integer line; every site has neighbours `k-1` and `k+1`.
    Line,
    Graph(Multigraph),
}

impl FiringSystem {
    pub fn is_line(&self) -> bool {
        matches!(self, FiringSystem::Line)
    }

    pub fn as_graph(&self) -> Option<&Multigraph> {
        match self {
            FiringSystem::Graph(g) => Some(g),
            FiringSystem::Line => None,
        }
    }

    pub fn contains(&self, site: Site) -> bool {
        match self {
            FiringSystem::Line => true,
            FiringSystem::Graph(g) => site.0 >= 0 && (site.0 as usize) < g.vertex_count(),
        }
    }

    /// Chips needed to fire `site`, or `None` if it never fires (sinks and
    /// isolated vertices).
    pub fn threshold(&self, site: Site) -> Option<u64> {
        match self {
            FiringSystem::Line => Some(2),
            FiringSystem::Graph(g) => {
                let v = site.0 as usize;
                if g.is_sink(v) || g.degree(v) == 0 {
                    None
                } else {
                    Some(g.degree(v))
                }
            }
        }
    }

    pub fn is_sink_free(&self) -> bool {
        match self {
            FiringSystem::Line => true,
            FiringSystem::Graph(g) => g.sinks().next().is_none(),
        }
    }

    /// Chips sent to each neighbour when `site` fires.
    pub fn dispersal(&self, site: Site) -> Vec<(Site, u64)> {
        match self {
            FiringSystem::Line => vec![(Site(site.0 - 1), 1), (Site(site.0 + 1), 1)],
            FiringSystem::Graph(g) => g
                .neighbors(site.0 as usize)
                .map(|(u, m)| (Site::vertex(u), m))
                .collect(),
        }
    }

    /// Sites whose fireability may change when `site` fires.
    fn affected(&self, site: Site) -> Vec<Site> {
        let mut out = vec![site];
        out.extend(self.dispersal(site).into_iter().map(|(s, _)| s));
        out
    }

    pub fn validate(&self, cfg: &ChipConfig) -> Result<(), FiringError> {
        match cfg.iter().find(|(s, _)| !self.contains(*s)) {
            Some((site, _)) => Err(FiringError::InvalidSite { site }),
            None => Ok(()),
        }
    }

    fn can_fire(&self, cfg: &ChipConfig, site: Site) -> bool {
        self.contains(site) && self.threshold(site).is_some_and(|t| cfg.get(site) >= t)
    }
}

/// Finite-support assignment of chip counts to sites. Zero entries are never
/// stored, so derived equality and hashing are structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChipConfig(BTreeMap<Site, u64>);

impl ChipConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, site: Site) -> u64 {
        self.0.get(&site).copied().unwrap_or(0)
    }

    pub fn set(&mut self, site: Site, count: u64) {
        if count == 0 {
            self.0.remove(&site);
        } else {
            self.0.insert(site, count);
        }
    }

    pub fn add(&mut self, site: Site, count: u64) {
        let c = self.get(site) + count;
        self.set(site, c);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Site, u64)> + '_ {
        self.0.iter().map(|(&s, &c)| (s, c))
    }

    pub fn total_chips(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest and largest occupied site.
    pub fn support_bounds(&self) -> Option<(Site, Site)> {
        Some((*self.0.keys().next()?, *self.0.keys().next_back()?))
    }

    /// Keeps only the sites accepted by `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(Site) -> bool) -> ChipConfig {
        ChipConfig(
            self.0
                .iter()
                .filter(|(s, _)| keep(**s))
                .map(|(&s, &c)| (s, c))
                .collect(),
        )
    }

    pub fn map_sites(&self, mut f: impl FnMut(Site) -> Site) -> ChipConfig {
        let mut out = ChipConfig::new();
        for (s, c) in self.iter() {
            out.add(f(s), c);
        }
        out
    }
}

impl FromIterator<(Site, u64)> for ChipConfig {
    fn from_iter<I: IntoIterator<Item = (Site, u64)>>(iter: I) -> Self {
        let mut cfg = ChipConfig::new();
        for (s, c) in iter {
            cfg.add(s, c);
        }
        cfg
    }
}

impl<const N: usize> From<[(i64, u64); N]> for ChipConfig {
    fn from(pairs: [(i64, u64); N]) -> Self {
        pairs.into_iter().map(|(s, c)| (Site(s), c)).collect()
    }
}

impl fmt::Display for ChipConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{s}:{c}")?;
        }
        Ok(())
    }
}

/// The `j`-th firing (1-based) at `site`, written `k^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiringMove {
    pub site: Site,
    pub index: u64,
}

impl FiringMove {
    pub fn new(site: impl Into<Site>, index: u64) -> Self {
        FiringMove {
            site: site.into(),
            index,
        }
    }
}

impl fmt::Display for FiringMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.site, self.index)
    }
}

/// Per-site firing counts. The componentwise order is containment of move
/// sets, since the moves at one site are totally ordered.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MoveVector(BTreeMap<Site, u64>);

impl MoveVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, site: Site) -> u64 {
        self.0.get(&site).copied().unwrap_or(0)
    }

    pub fn set(&mut self, site: Site, count: u64) {
        if count == 0 {
            self.0.remove(&site);
        } else {
            self.0.insert(site, count);
        }
    }

    pub fn increment(&mut self, site: Site) {
        *self.0.entry(site).or_insert(0) += 1;
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Site, u64)> + '_ {
        self.0.iter().map(|(&s, &c)| (s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn le(&self, other: &MoveVector) -> bool {
        self.0.iter().all(|(s, &c)| c <= other.get(*s))
    }

    /// Componentwise minimum (intersection of move sets).
    pub fn min(&self, other: &MoveVector) -> MoveVector {
        MoveVector(
            self.0
                .iter()
                .filter_map(|(&s, &c)| {
                    let m = c.min(other.get(s));
                    (m > 0).then_some((s, m))
                })
                .collect(),
        )
    }

    /// Componentwise maximum (union of move sets).
    pub fn max(&self, other: &MoveVector) -> MoveVector {
        let mut out = self.clone();
        for (s, c) in other.iter() {
            if c > out.get(s) {
                out.set(s, c);
            }
        }
        out
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &MoveVector) -> Option<MoveVector> {
        if !other.le(self) {
            return None;
        }
        let mut out = self.clone();
        for (s, c) in other.iter() {
            out.set(s, out.get(s) - c);
        }
        Some(out)
    }

    /// All moves `k^1..k^{count(k)}`, ordered by site then index.
    pub fn moves(&self) -> impl Iterator<Item = FiringMove> + '_ {
        self.iter()
            .flat_map(|(s, c)| (1..=c).map(move |j| FiringMove { site: s, index: j }))
    }
}

impl PartialOrd for MoveVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.le(other), other.le(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl FromIterator<(Site, u64)> for MoveVector {
    fn from_iter<I: IntoIterator<Item = (Site, u64)>>(iter: I) -> Self {
        let mut mv = MoveVector::new();
        for (s, c) in iter {
            mv.set(s, mv.get(s) + c);
        }
        mv
    }
}

impl<const N: usize> From<[(i64, u64); N]> for MoveVector {
    fn from(pairs: [(i64, u64); N]) -> Self {
        pairs.into_iter().map(|(s, c)| (Site(s), c)).collect()
    }
}

impl fmt::Display for MoveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(s, c)| format!("{s}:{c}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Non-sink sites holding at least their firing threshold.
pub fn available_sites(system: &FiringSystem, cfg: &ChipConfig) -> BTreeSet<Site> {
    cfg.iter()
        .map(|(s, _)| s)
        .filter(|&s| system.can_fire(cfg, s))
        .collect()
}

pub fn is_stable(system: &FiringSystem, cfg: &ChipConfig) -> bool {
    cfg.iter().all(|(s, _)| !system.can_fire(cfg, s))
}

/// Fires `site`, returning the new configuration.
pub fn fire(system: &FiringSystem, cfg: &ChipConfig, site: Site) -> Result<ChipConfig, FiringError> {
    let mut next = cfg.clone();
    fire_in_place(system, &mut next, site)?;
    Ok(next)
}

pub(crate) fn fire_in_place(
    system: &FiringSystem,
    cfg: &mut ChipConfig,
    site: Site,
) -> Result<(), FiringError> {
    if !system.can_fire(cfg, site) {
        return Err(FiringError::NotFireable { site });
    }
    let threshold = system.threshold(site).expect("checked by can_fire");
    cfg.set(site, cfg.get(site) - threshold);
    for (u, m) in system.dispersal(site) {
        cfg.add(u, m);
    }
    Ok(())
}

/// Applies the firings in `seq` in order.
pub fn replay(system: &FiringSystem, cfg: &ChipConfig, seq: &[Site]) -> Result<ChipConfig, FiringError> {
    let mut cur = cfg.clone();
    for (index, &site) in seq.iter().enumerate() {
        fire_in_place(system, &mut cur, site).map_err(|_| FiringError::IllegalAt { index, site })?;
    }
    Ok(cur)
}

/// Per-site counts of a firing sequence.
pub fn count_fires(seq: &[Site]) -> MoveVector {
    seq.iter().map(|&s| (s, 1)).collect()
}

/// Labels each fire of `seq` with its occurrence index at that site.
pub fn label_moves(seq: &[Site]) -> Vec<FiringMove> {
    let mut counts: BTreeMap<Site, u64> = BTreeMap::new();
    seq.iter()
        .map(|&site| {
            let j = counts.entry(site).or_insert(0);
            *j += 1;
            FiringMove { site, index: *j }
        })
        .collect()
}

/// Which available site to fire next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiringPolicy {
    LowestFirst,
    HighestFirst,
    Random(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub config: ChipConfig,
    pub odometer: MoveVector,
    /// Sites in firing order.
    pub sequence: Vec<Site>,
}

/// Fires policy-chosen sites until the configuration is stable.
pub fn stabilize(
    system: &FiringSystem,
    cfg: &ChipConfig,
    policy: FiringPolicy,
    step_cap: u64,
) -> Result<Stabilization, FiringError> {
    system.validate(cfg)?;
    run_until_stable(system, cfg.clone(), policy, step_cap, |_| true)
}

/// Shared driver for `stabilize` and partial exhaustions: only sites accepted
/// by `allowed` are ever fired.
pub(crate) fn run_until_stable(
    system: &FiringSystem,
    mut cur: ChipConfig,
    policy: FiringPolicy,
    step_cap: u64,
    allowed: impl Fn(Site) -> bool,
) -> Result<Stabilization, FiringError> {
    let mut rng = match policy {
        FiringPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut ready: BTreeSet<Site> = available_sites(system, &cur)
        .into_iter()
        .filter(|&s| allowed(s))
        .collect();
    let mut odometer = MoveVector::new();
    let mut sequence = Vec::new();
    let mut steps = 0u64;
    while !ready.is_empty() {
        if steps == step_cap {
            return Err(FiringError::StepCapExceeded { cap: step_cap });
        }
        let site = match policy {
            FiringPolicy::LowestFirst => *ready.first().unwrap(),
            FiringPolicy::HighestFirst => *ready.last().unwrap(),
            FiringPolicy::Random(_) => *ready.iter().choose(rng.as_mut().unwrap()).unwrap(),
        };
        fire_in_place(system, &mut cur, site)?;
        odometer.increment(site);
        sequence.push(site);
        steps += 1;
        for s in system.affected(site) {
            if allowed(s) && system.can_fire(&cur, s) {
                ready.insert(s);
            } else {
                ready.remove(&s);
            }
        }
    }
    Ok(Stabilization {
        config: cur,
        odometer,
        sequence,
    })
}
