//! Configuration posets by reachability search, move posets through
//! only-move configurations, and the graph augmentation that pins those
//! configurations down.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::firing::{
    self, available_sites, ChipConfig, FiringError, FiringMove, FiringPolicy, FiringSystem, MoveVector,
    Multigraph, Site, DEFAULT_STEP_CAP,
};
use crate::order::{self, FinitePoset, OrderError};

pub const DEFAULT_STATE_CAP: usize = 1_000_000;
pub const DEFAULT_SEQ_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Firing(#[from] FiringError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("game does not terminate within {cap} firings")]
    NonTerminating { cap: u64 },
    #[error("more than {cap} reachable configurations")]
    StateCapExceeded { cap: usize },
    #[error("more than {cap} complete firing sequences")]
    SeqCapExceeded { cap: usize },
    #[error("site {site} fires only {odometer} times; no move {site}^{index}")]
    IndexTooLarge { site: Site, index: u64, odometer: u64 },
    #[error("configuration is not reachable")]
    Unreachable,
    #[error("firing counts differ between two paths with the same endpoints")]
    PathDependent,
    #[error("a chip reached the boundary of the embedding path at site {0}")]
    BoundaryTouched(Site),
}

/// Every configuration reachable from a root, ordered by reachability.
#[derive(Debug, Clone)]
pub struct ConfigPoset {
    system: FiringSystem,
    poset: FinitePoset<ChipConfig>,
    move_vectors: Vec<MoveVector>,
    // Outgoing firings: (fired site, resulting element).
    transitions: Vec<Vec<(Site, usize)>>,
    index: HashMap<ChipConfig, usize>,
}

impl ConfigPoset {
    pub fn system(&self) -> &FiringSystem {
        &self.system
    }

    pub fn poset(&self) -> &FinitePoset<ChipConfig> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn root(&self) -> usize {
        0
    }

    /// The stable configuration.
    pub fn bottom(&self) -> usize {
        self.poset.minimal()[0]
    }

    pub fn config(&self, x: usize) -> &ChipConfig {
        self.poset.label(x)
    }

    pub fn index_of(&self, cfg: &ChipConfig) -> Option<usize> {
        self.index.get(cfg).copied()
    }

    /// Firing counts from the root to `x`.
    pub fn move_vector(&self, x: usize) -> &MoveVector {
        &self.move_vectors[x]
    }

    pub fn transitions(&self, x: usize) -> &[(Site, usize)] {
        &self.transitions[x]
    }

    /// Firing counts between two configurations, computed along two
    /// different paths (lowest-site and highest-site greedy descent) which
    /// must agree.
    pub fn mv_vector(&self, from: &ChipConfig, to: &ChipConfig) -> Result<MoveVector, BuildError> {
        let a = self.index_of(from).ok_or(BuildError::Unreachable)?;
        let b = self.index_of(to).ok_or(BuildError::Unreachable)?;
        if !self.poset.leq(b, a) {
            return Err(BuildError::Unreachable);
        }
        let low = self.path_counts(a, b, false);
        let high = self.path_counts(a, b, true);
        if low != high {
            return Err(BuildError::PathDependent);
        }
        Ok(low)
    }

    fn path_counts(&self, from: usize, to: usize, highest: bool) -> MoveVector {
        let mut mv = MoveVector::new();
        let mut cur = from;
        while cur != to {
            let mut steps = self.transitions[cur]
                .iter()
                .filter(|(_, t)| self.poset.leq(to, *t));
            let &(site, next) = if highest { steps.next_back() } else { steps.next() }
                .expect("a reachable target keeps some step on a path");
            mv.increment(site);
            cur = next;
        }
        mv
    }

    /// Largest distance from the origin ever holding a chip.
    pub fn support_radius(&self) -> i64 {
        self.poset
            .labels()
            .iter()
            .filter_map(|c| c.support_bounds())
            .map(|(lo, hi)| lo.0.abs().max(hi.0.abs()))
            .max()
            .unwrap_or(0)
    }
}

/// Breadth-first closure of the firing relation from `root`.
pub fn build_config_poset(
    system: &FiringSystem,
    root: &ChipConfig,
    state_cap: usize,
) -> Result<ConfigPoset, BuildError> {
    ensure_terminates(system, root)?;
    let mut configs = vec![root.clone()];
    let mut move_vectors = vec![MoveVector::new()];
    let mut transitions: Vec<Vec<(Site, usize)>> = vec![Vec::new()];
    let mut index = HashMap::from([(root.clone(), 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for site in available_sites(system, &configs[x]) {
            let next = firing::fire(system, &configs[x], site)?;
            let y = match index.get(&next) {
                Some(&y) => y,
                None => {
                    if configs.len() == state_cap {
                        return Err(BuildError::StateCapExceeded { cap: state_cap });
                    }
                    let y = configs.len();
                    let mut mv = move_vectors[x].clone();
                    mv.increment(site);
                    index.insert(next.clone(), y);
                    configs.push(next);
                    move_vectors.push(mv);
                    transitions.push(Vec::new());
                    queue.push_back(y);
                    y
                }
            };
            transitions[x].push((site, y));
        }
    }
    let relation: Vec<(usize, usize)> = transitions
        .iter()
        .enumerate()
        .flat_map(|(x, ts)| ts.iter().map(move |&(_, y)| (x, y)))
        .collect();
    let poset = FinitePoset::from_relation(configs, relation)?;
    Ok(ConfigPoset {
        system: system.clone(),
        poset,
        move_vectors,
        transitions,
        index,
    })
}

fn ensure_terminates(system: &FiringSystem, cfg: &ChipConfig) -> Result<firing::Stabilization, BuildError> {
    match firing::stabilize(system, cfg, FiringPolicy::LowestFirst, DEFAULT_STEP_CAP) {
        Err(FiringError::StepCapExceeded { cap }) => Err(BuildError::NonTerminating { cap }),
        other => Ok(other?),
    }
}

/// The configuration in which `k^j` is the only available move: follow a
/// complete firing sequence up to (not including) the `j`-th firing at `k`,
/// then fire every other site to exhaustion.
pub fn only_move_config(
    system: &FiringSystem,
    root: &ChipConfig,
    site: Site,
    index: u64,
) -> Result<ChipConfig, BuildError> {
    only_move_config_with(system, root, site, index, FiringPolicy::LowestFirst)
}

/// [`only_move_config`] with the complete firing sequence chosen by `policy`.
pub fn only_move_config_with(
    system: &FiringSystem,
    root: &ChipConfig,
    site: Site,
    index: u64,
    policy: FiringPolicy,
) -> Result<ChipConfig, BuildError> {
    let full = match firing::stabilize(system, root, policy, DEFAULT_STEP_CAP) {
        Err(FiringError::StepCapExceeded { cap }) => return Err(BuildError::NonTerminating { cap }),
        other => other?,
    };
    Ok(only_move_state(system, root, &full, site, index)?.0)
}

/// Only-move configuration of `site^index` cut from the complete sequence
/// `full`, with its odometer.
fn only_move_state(
    system: &FiringSystem,
    root: &ChipConfig,
    full: &firing::Stabilization,
    site: Site,
    index: u64,
) -> Result<(ChipConfig, MoveVector), BuildError> {
    let odometer = full.odometer.get(site);
    if index == 0 || index > odometer {
        return Err(BuildError::IndexTooLarge {
            site,
            index,
            odometer,
        });
    }
    let mut fired_at_site = 0;
    let cut = full
        .sequence
        .iter()
        .position(|&s| {
            if s == site {
                fired_at_site += 1;
            }
            s == site && fired_at_site == index
        })
        .expect("the odometer counts this firing");
    let prefix = firing::replay(system, root, &full.sequence[..cut])?;
    let rest = firing::run_until_stable(system, prefix, FiringPolicy::LowestFirst, DEFAULT_STEP_CAP, |s| {
        s != site
    })?;
    let mut fired = firing::count_fires(&full.sequence[..cut]);
    for (s, c) in rest.odometer.iter() {
        fired.set(s, fired.get(s) + c);
    }
    Ok((rest.config, fired))
}

/// Augmented game whose stable configuration, restricted to the original
/// vertices, is the only-move configuration of `k^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub system: FiringSystem,
    pub config: ChipConfig,
    /// Multiplicity factor, one more than the chips in play.
    pub factor: u64,
    pub v1: usize,
    pub v2: usize,
}

/// Adds `v1`, `v2` with `N` edges `k–v1` and `N·j` edges `v1–v2`, and
/// `N·(j−1)` extra chips at `k`, where `N` is one more than the total chips.
pub fn augmented_system(
    graph: &Multigraph,
    root: &ChipConfig,
    k: usize,
    j: u64,
) -> Result<Augmentation, BuildError> {
    let n = graph.vertex_count();
    if k >= n {
        return Err(FiringError::InvalidSite {
            site: Site::vertex(k),
        }
        .into());
    }
    let factor = root.total_chips() + 1;
    let (v1, v2) = (n, n + 1);
    let mut g = Multigraph::new(n + 2);
    for (u, v, m) in graph.edges() {
        g.add_edge(u, v, m)?;
    }
    for s in graph.sinks() {
        g.set_sink(s)?;
    }
    g.add_edge(k, v1, factor)?;
    g.add_edge(v1, v2, factor * j)?;
    let mut config = root.clone();
    config.add(Site::vertex(k), factor * (j - 1));
    Ok(Augmentation {
        system: FiringSystem::Graph(g),
        config,
        factor,
        v1,
        v2,
    })
}

/// A window `[-radius, radius]` of the line as a path graph. The two end
/// vertices are sinks, so any chip reaching them stays visible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineEmbedding {
    pub radius: i64,
}

impl LineEmbedding {
    /// Window wide enough for every configuration of `poset`, plus a margin
    /// of two sites.
    pub fn for_poset(poset: &ConfigPoset) -> Self {
        LineEmbedding {
            radius: poset.support_radius() + 2,
        }
    }

    pub fn graph(&self) -> Multigraph {
        let len = (2 * self.radius + 1) as usize;
        let mut g = Multigraph::path(len);
        g.set_sink(0).expect("in range");
        g.set_sink(len - 1).expect("in range");
        g
    }

    pub fn vertex(&self, site: Site) -> usize {
        (site.0 + self.radius) as usize
    }

    pub fn embed(&self, cfg: &ChipConfig) -> ChipConfig {
        cfg.map_sites(|s| Site::vertex(self.vertex(s)))
    }

    /// Maps path vertices back to line sites, dropping vertices beyond the
    /// path. Fails if a boundary vertex holds chips.
    pub fn restrict(&self, cfg: &ChipConfig) -> Result<ChipConfig, BuildError> {
        let len = 2 * self.radius + 1;
        for boundary in [0, len - 1] {
            if cfg.get(Site(boundary)) > 0 {
                return Err(BuildError::BoundaryTouched(Site(boundary - self.radius)));
            }
        }
        Ok(cfg.restrict(|s| s.0 < len).map_sites(|s| Site(s.0 - self.radius)))
    }
}

/// Only-move configuration of `k^j` obtained by stabilizing the augmented
/// game. Line games are first embedded in a path wide enough for `context`.
pub fn only_move_via_augmentation(
    context: &ConfigPoset,
    site: Site,
    index: u64,
) -> Result<ChipConfig, BuildError> {
    let root = context.config(context.root());
    match context.system() {
        FiringSystem::Graph(g) => {
            let aug = augmented_system(g, root, site.0 as usize, index)?;
            let stable = stabilize_or_nonterminating(&aug.system, &aug.config)?;
            Ok(stable.restrict(|s| (s.0 as usize) < g.vertex_count()))
        }
        FiringSystem::Line => {
            let emb = LineEmbedding::for_poset(context);
            let path = emb.graph();
            let aug = augmented_system(&path, &emb.embed(root), emb.vertex(site), index)?;
            let stable = stabilize_or_nonterminating(&aug.system, &aug.config)?;
            emb.restrict(&stable)
        }
    }
}

fn stabilize_or_nonterminating(system: &FiringSystem, cfg: &ChipConfig) -> Result<ChipConfig, BuildError> {
    match firing::stabilize(system, cfg, FiringPolicy::LowestFirst, DEFAULT_STEP_CAP) {
        Ok(s) => Ok(s.config),
        Err(FiringError::StepCapExceeded { cap }) => Err(BuildError::NonTerminating { cap }),
        Err(e) => Err(e.into()),
    }
}

/// Firing moves ordered by forced precedence, with their only-move
/// configurations.
#[derive(Debug, Clone)]
pub struct MovePoset {
    poset: FinitePoset<FiringMove>,
    only_move: Vec<ChipConfig>,
}

impl MovePoset {
    pub fn poset(&self) -> &FinitePoset<FiringMove> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn moves(&self) -> &[FiringMove] {
        self.poset.labels()
    }

    pub fn index_of(&self, mv: FiringMove) -> Option<usize> {
        self.poset.labels().binary_search(&mv).ok()
    }

    /// The configuration in which this move is the only one available.
    pub fn only_move_config(&self, x: usize) -> &ChipConfig {
        &self.only_move[x]
    }

    /// Moves that have not happened yet in `cfg`, as an order ideal.
    pub fn unfired_ideal(&self, fired: &MoveVector) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        for (x, m) in self.moves().iter().enumerate() {
            if m.index > fired.get(m.site) {
                set.insert(x);
            }
        }
        set
    }

    /// Maps a firing sequence to move-poset elements.
    pub fn sequence_elements(&self, seq: &[Site]) -> Option<Vec<usize>> {
        firing::label_moves(seq)
            .into_iter()
            .map(|m| self.index_of(m))
            .collect()
    }

    pub fn element_sites(&self, elements: &[usize]) -> Vec<Site> {
        elements.iter().map(|&x| self.moves()[x].site).collect()
    }
}

/// Builds the move poset without enumerating configurations. The only-move
/// configuration of `k^j` is the largest progress possible without `k^j`, so
/// `k'^j'` must wait for `k^j` exactly when that configuration has fired `k'`
/// fewer than `j'` times.
pub fn build_move_poset(system: &FiringSystem, root: &ChipConfig) -> Result<MovePoset, BuildError> {
    let full = ensure_terminates(system, root)?;
    let moves: Vec<FiringMove> = full.odometer.moves().collect();
    let states = moves
        .iter()
        .map(|m| only_move_state(system, root, &full, m.site, m.index))
        .collect::<Result<Vec<_>, _>>()?;
    let mut relation = Vec::new();
    for (a, (_, fired)) in states.iter().enumerate() {
        for (b, m) in moves.iter().enumerate() {
            if a != b && fired.get(m.site) < m.index {
                relation.push((a, b));
            }
        }
    }
    let poset = FinitePoset::from_relation(moves, relation)?;
    Ok(MovePoset {
        poset,
        only_move: states.into_iter().map(|(c, _)| c).collect(),
    })
}

/// `k^j >= k'^j'` iff `c(k'^j')` is reachable from `c(k^j)`.
pub fn move_poset_from(configs: &ConfigPoset) -> Result<MovePoset, BuildError> {
    let system = configs.system();
    let root = configs.config(configs.root());
    let odometer = configs.move_vector(configs.bottom());
    let moves: Vec<FiringMove> = odometer.moves().collect();
    let mut only_move = Vec::with_capacity(moves.len());
    let mut nodes = Vec::with_capacity(moves.len());
    for m in &moves {
        let c = only_move_config(system, root, m.site, m.index)?;
        nodes.push(configs.index_of(&c).ok_or(BuildError::Unreachable)?);
        only_move.push(c);
    }
    let p = configs.poset();
    let mut relation = Vec::new();
    for (a, &na) in nodes.iter().enumerate() {
        for (b, &nb) in nodes.iter().enumerate() {
            if a != b && p.leq(nb, na) {
                relation.push((a, b));
            }
        }
    }
    let poset = FinitePoset::from_relation(moves, relation)?;
    Ok(MovePoset { poset, only_move })
}

/// Move order straight from the definition: `k^j >= k'^j'` iff no complete
/// firing sequence performs `k'^j'` before `k^j`. Every complete sequence is
/// enumerated.
pub fn brute_force_move_order(
    system: &FiringSystem,
    root: &ChipConfig,
    seq_cap: usize,
) -> Result<FinitePoset<FiringMove>, BuildError> {
    let full = ensure_terminates(system, root)?;
    let moves: Vec<FiringMove> = full.odometer.moves().collect();
    let n = moves.len();
    let position_of: HashMap<FiringMove, usize> = moves.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    // seen_before[b * n + a]: some sequence performs b strictly before a.
    let mut seen_before = vec![false; n * n];
    let mut sequences = 0usize;

    struct Search<'a> {
        system: &'a FiringSystem,
        position_of: &'a HashMap<FiringMove, usize>,
        n: usize,
        seen_before: &'a mut [bool],
        sequences: &'a mut usize,
        cap: usize,
        stack: Vec<usize>,
        counts: MoveVector,
    }

    impl Search<'_> {
        fn walk(&mut self, cfg: &ChipConfig) -> Result<(), BuildError> {
            let avail = available_sites(self.system, cfg);
            if avail.is_empty() {
                if *self.sequences == self.cap {
                    return Err(BuildError::SeqCapExceeded { cap: self.cap });
                }
                *self.sequences += 1;
                for (i, &b) in self.stack.iter().enumerate() {
                    for &a in &self.stack[i + 1..] {
                        self.seen_before[b * self.n + a] = true;
                    }
                }
                return Ok(());
            }
            for site in avail {
                let next = firing::fire(self.system, cfg, site)?;
                self.counts.increment(site);
                let m = FiringMove {
                    site,
                    index: self.counts.get(site),
                };
                self.stack.push(self.position_of[&m]);
                self.walk(&next)?;
                self.stack.pop();
                self.counts.set(site, self.counts.get(site) - 1);
            }
            Ok(())
        }
    }

    Search {
        system,
        position_of: &position_of,
        n,
        seen_before: &mut seen_before,
        sequences: &mut sequences,
        cap: seq_cap,
        stack: Vec::with_capacity(n),
        counts: MoveVector::new(),
    }
    .walk(root)?;

    let mut relation = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && !seen_before[b * n + a] {
                relation.push((a, b));
            }
        }
    }
    Ok(FinitePoset::from_relation(moves, relation)?)
}

/// Every complete firing sequence from `root`, as site lists.
pub fn complete_sequences(
    system: &FiringSystem,
    root: &ChipConfig,
    seq_cap: usize,
) -> Result<Vec<Vec<Site>>, BuildError> {
    ensure_terminates(system, root)?;
    fn walk(
        system: &FiringSystem,
        cfg: &ChipConfig,
        stack: &mut Vec<Site>,
        out: &mut Vec<Vec<Site>>,
        cap: usize,
    ) -> Result<(), BuildError> {
        let avail = available_sites(system, cfg);
        if avail.is_empty() {
            if out.len() == cap {
                return Err(BuildError::SeqCapExceeded { cap });
            }
            out.push(stack.clone());
            return Ok(());
        }
        for site in avail {
            let next = firing::fire(system, cfg, site)?;
            stack.push(site);
            walk(system, &next, stack, out, cap)?;
            stack.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(system, root, &mut Vec::new(), &mut out, seq_cap)?;
    Ok(out)
}

/// Number of complete firing sequences, counted as maximal chains of the
/// configuration poset.
pub fn count_complete_sequences(configs: &ConfigPoset) -> u128 {
    let p = configs.poset();
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| p.down_size(x));
    let mut paths = vec![0u128; p.len()];
    for &x in &order {
        paths[x] = if configs.transitions(x).is_empty() {
            1
        } else {
            configs.transitions(x).iter().map(|&(_, y)| paths[y]).sum()
        };
    }
    paths.first().copied().unwrap_or(0)
}

/// Outcome of checking that the join-irreducibles of the configuration
/// poset form the move poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinTheoremReport {
    pub config_count: usize,
    pub join_irreducible_count: usize,
    pub move_count: usize,
    /// The configuration poset is a lattice.
    pub is_lattice: bool,
    /// Each join-irreducible equals the only-move configuration of its move.
    pub only_move_match: bool,
    /// Join-irreducibles and moves are in bijection.
    pub bijective: bool,
    /// The bijection is an order isomorphism onto the move poset.
    pub order_isomorphic: bool,
    pub problems: Vec<String>,
}

impl JoinTheoremReport {
    pub fn passed(&self) -> bool {
        self.is_lattice && self.only_move_match && self.bijective && self.order_isomorphic
    }
}

pub fn verify_join_theorem(
    system: &FiringSystem,
    root: &ChipConfig,
) -> Result<JoinTheoremReport, BuildError> {
    let configs = build_config_poset(system, root, DEFAULT_STATE_CAP)?;
    verify_join_theorem_on(&configs)
}

pub fn verify_join_theorem_on(configs: &ConfigPoset) -> Result<JoinTheoremReport, BuildError> {
    let system = configs.system();
    let root = configs.config(configs.root());
    let p = configs.poset();
    let moves = move_poset_from(configs)?;
    let mut problems = Vec::new();

    let lattice = order::is_lattice(p);
    if let Some((x, y)) = lattice.witness {
        problems.push(format!(
            "configurations {} and {} lack a meet or join",
            p.label(x),
            p.label(y)
        ));
    }
    let irreducibles = order::join_irreducibles_unchecked(p);

    let mut only_move_match = true;
    let mut image = Vec::with_capacity(irreducibles.len());
    for &x in &irreducibles {
        let cfg = p.label(x);
        let avail = available_sites(system, cfg);
        let site = *avail.first().expect("join-irreducibles have one move");
        let index = configs.move_vector(x).get(site) + 1;
        let expected = only_move_config(system, root, site, index)?;
        if &expected != cfg {
            only_move_match = false;
            problems.push(format!(
                "{cfg} is not the only-move configuration of {site}^{index}"
            ));
        }
        image.push(moves.index_of(FiringMove { site, index }));
    }

    let mut hit = vec![false; moves.len()];
    let mut bijective = irreducibles.len() == moves.len();
    let bijection: Vec<usize> = image.iter().map(|i| i.unwrap_or(usize::MAX)).collect();
    for &t in &bijection {
        if t == usize::MAX || hit[t] {
            bijective = false;
        } else {
            hit[t] = true;
        }
    }
    if !bijective {
        problems.push(format!(
            "{} join-irreducibles do not correspond one-to-one with {} moves",
            irreducibles.len(),
            moves.len()
        ));
    }

    let order_isomorphic = bijective && {
        let sub = p.induced(&irreducibles);
        order::embed_check(&sub, moves.poset(), &bijection)?
    };
    if bijective && !order_isomorphic {
        problems.push("join-irreducible order differs from the move order".to_string());
    }

    Ok(JoinTheoremReport {
        config_count: p.len(),
        join_irreducible_count: irreducibles.len(),
        move_count: moves.len(),
        is_lattice: lattice.holds,
        only_move_match,
        bijective,
        order_isomorphic,
        problems,
    })
}
