//! Chip-firing on the integer line: starting configurations, the endgame
//! lattice checks, distributivity counterexamples, linear extensions that are
//! not firing sequences, and labeled chip-firing.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::{IteratorRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::builder::{
    build_config_poset, count_complete_sequences, move_poset_from, BuildError, DEFAULT_STATE_CAP,
};
use crate::firing::{self, ChipConfig, FiringError, FiringPolicy, FiringSystem, MoveVector, Site};
use crate::notation::{format_compact, parse_config, LineNotation};
use crate::order::{self, Lattice, OrderError, DEFAULT_IDEAL_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("{0} chips: an even count is required")]
    OddN(u64),
    #[error("at least one chip is required")]
    NoChips,
    #[error("no reproducer for n = {0}")]
    UnsupportedN(u64),
    #[error("configuration {0} is not in the poset")]
    ConfigNotFound(String),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Firing(#[from] FiringError),
}

/// `n` chips at the origin.
pub fn origin_config(n: u64) -> Result<ChipConfig, LineError> {
    if n == 0 {
        return Err(LineError::NoChips);
    }
    Ok(ChipConfig::from([(0, n)]))
}

/// For `n = 2m`: two chips at the origin and one at each site `1..m` away
/// from it on either side.
pub fn endgame_config(n: u64) -> Result<ChipConfig, LineError> {
    if n == 0 {
        return Err(LineError::NoChips);
    }
    if n % 2 == 1 {
        return Err(LineError::OddN(n));
    }
    let m = (n / 2) as i64;
    let mut cfg = ChipConfig::from([(0, 2)]);
    for s in 1..m {
        cfg.set(Site(s), 1);
        cfg.set(Site(-s), 1);
    }
    Ok(cfg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndgameReport {
    pub m: u64,
    pub config_count: usize,
    pub move_count: usize,
    pub odometer: MoveVector,
    pub is_lattice: bool,
    /// Joins are componentwise minima and meets componentwise maxima of
    /// move vectors, on every pair.
    pub bounds_match_move_vectors: bool,
    pub is_distributive: bool,
    pub ideal_count: usize,
    /// Sending a configuration to its unfired moves is an order isomorphism
    /// onto the order ideals of the move poset.
    pub ideal_isomorphism: bool,
}

impl EndgameReport {
    pub fn passed(&self) -> bool {
        self.is_lattice
            && self.bounds_match_move_vectors
            && self.is_distributive
            && self.ideal_count == self.config_count
            && self.ideal_isomorphism
    }
}

impl fmt::Display for EndgameReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m = {} (n = {})", self.m, 2 * self.m)?;
        writeln!(f, "  configurations: {}", self.config_count)?;
        writeln!(f, "  moves: {}  odometer: {}", self.move_count, self.odometer)?;
        writeln!(f, "  lattice: {}", self.is_lattice)?;
        writeln!(
            f,
            "  join/meet = min/max of move vectors: {}",
            self.bounds_match_move_vectors
        )?;
        writeln!(f, "  distributive: {}", self.is_distributive)?;
        writeln!(f, "  order ideals of move poset: {}", self.ideal_count)?;
        write!(
            f,
            "  ideal map is an order isomorphism: {}",
            self.ideal_isomorphism
        )
    }
}

/// Runs the endgame checks for every `m` in `1..=m_max`.
pub fn verify_endgame_lattice(m_max: u64) -> Result<Vec<EndgameReport>, LineError> {
    (1..=m_max).map(endgame_report).collect()
}

pub fn endgame_report(m: u64) -> Result<EndgameReport, LineError> {
    let configs = build_config_poset(&FiringSystem::Line, &endgame_config(2 * m)?, DEFAULT_STATE_CAP)?;
    let p = configs.poset();
    let moves = move_poset_from(&configs)?;
    let lattice = Lattice::new(p);
    let (is_lattice, bounds_match, is_distributive) = match &lattice {
        Ok(l) => {
            let mut ok = true;
            'pairs: for x in 0..p.len() {
                for y in x..p.len() {
                    let (mx, my) = (configs.move_vector(x), configs.move_vector(y));
                    if configs.move_vector(l.join(x, y)) != &mx.min(my)
                        || configs.move_vector(l.meet(x, y)) != &mx.max(my)
                    {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            (true, ok, order::is_distributive(p)?.holds)
        }
        Err(OrderError::NotALattice { .. }) => (false, false, false),
        Err(e) => return Err(e.clone().into()),
    };

    let ideals = order::order_ideals(moves.poset(), DEFAULT_IDEAL_CAP)?;
    let bijection: Option<Vec<usize>> = (0..p.len())
        .map(|x| ideals.index_of(&moves.unfired_ideal(configs.move_vector(x))))
        .collect();
    let ideal_isomorphism = match bijection {
        Some(b) => match order::embed_check(p, ideals.lattice(), &b) {
            Ok(ok) => ok,
            Err(OrderError::NotBijective) => false,
            Err(e) => return Err(e.into()),
        },
        None => false,
    };

    Ok(EndgameReport {
        m,
        config_count: p.len(),
        move_count: moves.len(),
        odometer: configs.move_vector(configs.bottom()).clone(),
        is_lattice,
        bounds_match_move_vectors: bounds_match,
        is_distributive,
        ideal_count: ideals.len(),
        ideal_isomorphism,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptRow {
    pub name: &'static str,
    pub computed: String,
    pub published: &'static str,
}

/// Recomputed distributivity counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleTranscript {
    pub n: u64,
    pub rows: Vec<TranscriptRow>,
    /// `x ∧ (y ∨ z)`.
    pub lhs: String,
    /// `(x ∧ y) ∨ (x ∧ z)`.
    pub rhs: String,
}

impl CounterexampleTranscript {
    pub fn rows_match(&self) -> bool {
        self.rows.iter().all(|r| r.computed == r.published)
    }

    pub fn is_counterexample(&self) -> bool {
        self.lhs != self.rhs
    }
}

impl fmt::Display for CounterexampleTranscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        for r in &self.rows {
            let mark = if r.computed == r.published {
                "ok"
            } else {
                "MISMATCH"
            };
            writeln!(
                f,
                "  {:<16} = {:<10} (published {}) {}",
                r.name, r.computed, r.published, mark
            )?;
        }
        write!(
            f,
            "  x ∧ (y ∨ z) = {} {} {} = (x ∧ y) ∨ (x ∧ z)",
            self.lhs,
            if self.is_counterexample() { "≠" } else { "=" },
            self.rhs
        )
    }
}

// x, y, z followed by the published values of the five derived rows.
const COUNTEREXAMPLE_5: [&str; 8] = [
    "10_3_01", "11_0_3", "3_0_11", "2_1_2", "10_3_01", "11_1_11", "11_1_11", "11_1_11",
];
const COUNTEREXAMPLE_8: [&str; 8] = [
    "20_3_21", "21_0_5", "13_0_31", "12_1_4", "20_3_21", "21_1_31", "21_1_31", "21_1_31",
];
const ROW_NAMES: [&str; 8] = [
    "x",
    "y",
    "z",
    "y ∨ z",
    "x ∧ (y ∨ z)",
    "x ∧ y",
    "x ∧ z",
    "(x ∧ y) ∨ (x ∧ z)",
];

/// Locates the published triple in the configuration poset of `n` chips at
/// the origin and recomputes every row from meets and joins.
pub fn reproduce_counterexample(n: u64) -> Result<CounterexampleTranscript, LineError> {
    let published = match n {
        5 => COUNTEREXAMPLE_5,
        8 => COUNTEREXAMPLE_8,
        _ => return Err(LineError::UnsupportedN(n)),
    };
    let configs = build_config_poset(&FiringSystem::Line, &origin_config(n)?, DEFAULT_STATE_CAP)?;
    let lattice = Lattice::new(configs.poset())?;
    let find = |text: &str| -> Result<usize, LineError> {
        let cfg = parse_config(text, &FiringSystem::Line).expect("published notation parses");
        configs
            .index_of(&cfg)
            .ok_or_else(|| LineError::ConfigNotFound(text.to_string()))
    };
    let (x, y, z) = (find(published[0])?, find(published[1])?, find(published[2])?);
    let y_join_z = lattice.join(y, z);
    let lhs = lattice.meet(x, y_join_z);
    let xy = lattice.meet(x, y);
    let xz = lattice.meet(x, z);
    let rhs = lattice.join(xy, xz);
    let label = |i: usize| LineNotation(configs.config(i)).to_string();
    let rows = [x, y, z, y_join_z, lhs, xy, xz, rhs]
        .into_iter()
        .zip(ROW_NAMES)
        .zip(published)
        .map(|((i, name), published)| TranscriptRow {
            name,
            computed: label(i),
            published,
        })
        .collect();
    Ok(CounterexampleTranscript {
        n,
        rows,
        lhs: label(lhs),
        rhs: label(rhs),
    })
}

/// Linear extensions of the move poset compared with legal firing sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTranscript {
    pub n: u64,
    pub move_count: usize,
    pub extension_count: u128,
    /// Extensions that replay legally; these are the complete firing
    /// sequences.
    pub valid_count: u128,
    /// Complete firing sequences, counted as maximal chains of the
    /// configuration poset.
    pub sequence_count: u128,
    /// Whether every extension was enumerated and replayed (otherwise the
    /// counts come from ideal and chain counting alone).
    pub enumerated: bool,
    /// A linear extension that is not a legal firing sequence, as sites, with
    /// the index of its first illegal firing.
    pub invalid_example: Option<(Vec<Site>, usize)>,
    /// Every invalid extension with its first illegal index, when enumerated.
    pub invalid_extensions: Vec<(Vec<Site>, usize)>,
}

impl fmt::Display for ExtensionTranscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}: {} moves", self.n, self.move_count)?;
        writeln!(f, "  linear extensions: {}", self.extension_count)?;
        writeln!(
            f,
            "  legal firing sequences: {}{}",
            self.valid_count,
            if self.enumerated {
                " (every extension replayed)"
            } else {
                ""
            }
        )?;
        match &self.invalid_example {
            Some((sites, at)) => {
                let s: Vec<String> = sites.iter().map(|s| s.to_string()).collect();
                write!(
                    f,
                    "  invalid extension: ({}) fails at firing {}",
                    s.join(","),
                    at + 1
                )
            }
            None => write!(f, "  every linear extension is a legal firing sequence"),
        }
    }
}

/// Above this many extensions only the counts are computed.
pub const EXTENSION_ENUMERATION_LIMIT: usize = 200_000;

/// Counts linear extensions and legal sequences, and exhibits an invalid
/// extension. The example is the extension that fires at the origin
/// whenever the poset allows it, ties broken by smallest site.
pub fn invalid_extension_demo(n: u64) -> Result<ExtensionTranscript, LineError> {
    let system = FiringSystem::Line;
    let root = origin_config(n)?;
    let configs = build_config_poset(&system, &root, DEFAULT_STATE_CAP)?;
    let moves = move_poset_from(&configs)?;
    let p = moves.poset();
    let extension_count = order::count_linear_extensions(p, DEFAULT_IDEAL_CAP)?;
    let sequence_count = count_complete_sequences(&configs);

    let mut enumerated = false;
    let mut valid_count = sequence_count;
    let mut invalid_extensions = Vec::new();
    if extension_count <= EXTENSION_ENUMERATION_LIMIT as u128 {
        let mut valid = 0u128;
        for ext in order::linear_extensions(p, EXTENSION_ENUMERATION_LIMIT) {
            let sites = moves.element_sites(&ext?);
            match firing::replay(&system, &root, &sites) {
                Ok(_) => valid += 1,
                Err(FiringError::IllegalAt { index, .. }) => invalid_extensions.push((sites, index)),
                Err(e) => return Err(e.into()),
            }
        }
        valid_count = valid;
        enumerated = true;
    }

    let greedy = origin_greedy_extension(p, moves.moves());
    let sites = moves.element_sites(&greedy);
    let invalid_example = match firing::replay(&system, &root, &sites) {
        Err(FiringError::IllegalAt { index, .. }) => Some((sites, index)),
        Ok(_) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(ExtensionTranscript {
        n,
        move_count: moves.len(),
        extension_count,
        valid_count,
        sequence_count,
        enumerated,
        invalid_example,
        invalid_extensions,
    })
}

fn origin_greedy_extension(
    p: &order::FinitePoset<firing::FiringMove>,
    moves: &[firing::FiringMove],
) -> Vec<usize> {
    let mut pending: Vec<usize> = (0..p.len()).map(|x| p.upper_covers(x).len()).collect();
    let mut placed = vec![false; p.len()];
    let mut out = Vec::with_capacity(p.len());
    while out.len() < p.len() {
        let x = (0..p.len())
            .filter(|&x| !placed[x] && pending[x] == 0)
            .min_by_key(|&x| (moves[x].site.0 != 0, moves[x].site.0.abs(), moves[x].site.0))
            .expect("some element is available");
        placed[x] = true;
        for &y in p.lower_covers(x) {
            pending[y] -= 1;
        }
        out.push(x);
    }
    out
}

/// Site to ordered chip labels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabeledConfig(BTreeMap<Site, Vec<u32>>);

impl LabeledConfig {
    /// Labels `1..=n` at the origin.
    pub fn at_origin(n: u32) -> Self {
        LabeledConfig(BTreeMap::from([(Site(0), (1..=n).collect())]))
    }

    pub fn labels_at(&self, site: Site) -> &[u32] {
        self.0.get(&site).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn unlabeled(&self) -> ChipConfig {
        self.0.iter().map(|(&s, l)| (s, l.len() as u64)).collect()
    }

    /// Labels read left to right, each site's labels in increasing order.
    pub fn reading_order(&self) -> Vec<u32> {
        self.0.values().flat_map(|l| l.iter().copied()).collect()
    }

    /// Labels strictly increase from left to right across sites.
    pub fn is_sorted(&self) -> bool {
        self.reading_order().windows(2).all(|w| w[0] < w[1])
    }

    fn take(&mut self, site: Site, label: u32) {
        let labels = self.0.get_mut(&site).expect("site holds chips");
        labels.retain(|&l| l != label);
        if labels.is_empty() {
            self.0.remove(&site);
        }
    }

    fn put(&mut self, site: Site, label: u32) {
        let labels = self.0.entry(site).or_default();
        let pos = labels.partition_point(|&l| l < label);
        labels.insert(pos, label);
    }
}

impl fmt::Display for LabeledConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(s, l)| {
                let l: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                format!("{s}:[{}]", l.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledRun {
    pub config: LabeledConfig,
    /// Fired sites, in order; the unlabeled projection of the run.
    pub sites: Vec<Site>,
}

/// Labeled chip-firing from `n` labeled chips at the origin. Each step picks
/// a random site with two or more chips and a random pair of labels there;
/// the smaller goes left, the larger right.
pub fn labeled_fire_run(n: u64, seed: u64) -> Result<LabeledRun, LineError> {
    if n == 0 {
        return Err(LineError::NoChips);
    }
    if n % 2 == 1 {
        return Err(LineError::OddN(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cfg = LabeledConfig::at_origin(n as u32);
    let mut sites = Vec::new();
    while let Some(site) = cfg
        .0
        .iter()
        .filter(|(_, l)| l.len() >= 2)
        .map(|(&s, _)| s)
        .choose(&mut rng)
    {
        let pair: Vec<u32> = cfg.0[&site].choose_multiple(&mut rng, 2).copied().collect();
        let (small, large) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
        cfg.take(site, small);
        cfg.take(site, large);
        cfg.put(Site(site.0 - 1), small);
        cfg.put(Site(site.0 + 1), large);
        sites.push(site);
    }
    Ok(LabeledRun { config: cfg, sites })
}

/// Renders a line configuration the way published diagrams do.
pub fn compact(cfg: &ChipConfig) -> String {
    format_compact(cfg).unwrap_or_else(|| cfg.to_string())
}

/// Stabilizes `n` chips at the origin.
pub fn origin_odometer(n: u64) -> Result<MoveVector, LineError> {
    let s = firing::stabilize(
        &FiringSystem::Line,
        &origin_config(n)?,
        FiringPolicy::LowestFirst,
        firing::DEFAULT_STEP_CAP,
    )?;
    Ok(s.odometer)
}
