//! Finite posets and lattices.
//!
//! Elements are addressed by index; labels are carried alongside. The order
//! follows chip-firing chronology: `x >= y` when `y` comes later, so the
//! initial configuration of a game is the maximum of its configuration poset.
//! Cover pairs are stored as `(upper, lower)`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use thiserror::Error;

/// Default bound on the number of order ideals enumerated.
pub const DEFAULT_IDEAL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("relation contains a cycle through element {0}")]
    Cycle(usize),
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("not a lattice: elements {x} and {y} have no meet or join")]
    NotALattice { x: usize, y: usize },
    #[error("map is not a bijection between the two posets")]
    NotBijective,
    #[error("more than {cap} items")]
    CapExceeded { cap: usize },
    #[error("ideal-lattice map disagrees with a distributive verdict")]
    BirkhoffMismatch,
}

/// Why a meet or join does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("no common bound")]
    NoBound,
    #[error("common bounds exist but none is extremal")]
    Absent,
}

/// Outcome of a structural check, with a witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: W) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FinitePoset<L> {
    labels: Vec<L>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    // down[x] = { y : y <= x }, up[x] = { y : y >= x }; both reflexive.
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    down_size: Vec<usize>,
    up_size: Vec<usize>,
}

impl<L> FinitePoset<L> {
    /// Builds the poset generated by `relation`, a set of `(greater, smaller)`
    /// pairs. The stored covers are its transitive reduction.
    pub fn from_relation(
        labels: Vec<L>,
        relation: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, OrderError> {
        let n = labels.len();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in relation {
            if a >= n {
                return Err(OrderError::OutOfRange(a));
            }
            if b >= n {
                return Err(OrderError::OutOfRange(b));
            }
            if a == b {
                return Err(OrderError::Cycle(a));
            }
            children[a].push(b);
        }
        for c in &mut children {
            c.sort_unstable();
            c.dedup();
        }

        // Kahn's algorithm, emitting maximal elements first.
        let mut indegree = vec![0usize; n];
        for c in &children {
            for &b in c {
                indegree[b] += 1;
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &b in &children[v] {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    order.push(b);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).unwrap();
            return Err(OrderError::Cycle(stuck));
        }

        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(v);
            for &b in &children[v] {
                set.union_with(&down[b]);
            }
            down[v] = set;
        }

        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for v in 0..n {
            for &b in &children[v] {
                let implied = children[v].iter().any(|&t| t != b && down[t].contains(b));
                if !implied {
                    lower[v].push(b);
                    upper[b].push(v);
                }
            }
        }
        for u in &mut upper {
            u.sort_unstable();
        }

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, d) in down.iter().enumerate() {
            for y in d.ones() {
                up[y].insert(x);
            }
        }

        let down_size = down.iter().map(|d| d.count_ones(..)).collect();
        let up_size = up.iter().map(|u| u.count_ones(..)).collect();
        Ok(FinitePoset {
            labels,
            lower,
            upper,
            down,
            up,
            down_size,
            up_size,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &L {
        &self.labels[x]
    }

    pub fn position(&self, pred: impl Fn(&L) -> bool) -> Option<usize> {
        self.labels.iter().position(pred)
    }

    /// `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_size(&self, x: usize) -> usize {
        self.down_size[x]
    }

    /// All cover pairs `(upper, lower)` in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.lower[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn cover_count(&self) -> usize {
        self.lower.iter().map(Vec::len).sum()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper[x].is_empty()).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower[x].is_empty()).collect()
    }

    /// Length of the longest chain from a maximal element down to `x`.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.len()];
        // Elements with larger up-sets cannot precede elements above them.
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.up_size[x]);
        for &x in &order {
            for &y in &self.lower[x] {
                depth[y] = depth[y].max(depth[x] + 1);
            }
        }
        depth
    }

    /// Subposet on `elements` (in the given order) with the inherited order.
    pub fn induced(&self, elements: &[usize]) -> FinitePoset<L>
    where
        L: Clone,
    {
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        let mut rel = Vec::new();
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                if i != j && self.leq(b, a) {
                    rel.push((i, j));
                }
            }
        }
        FinitePoset::from_relation(labels, rel).expect("induced order is acyclic")
    }

    pub fn map_labels<M>(&self, f: impl FnMut(&L) -> M) -> FinitePoset<M> {
        FinitePoset {
            labels: self.labels.iter().map(f).collect(),
            lower: self.lower.clone(),
            upper: self.upper.clone(),
            down: self.down.clone(),
            up: self.up.clone(),
            down_size: self.down_size.clone(),
            up_size: self.up_size.clone(),
        }
    }

    /// Greatest lower bound of `x` and `y`.
    pub fn meet(&self, x: usize, y: usize) -> Result<usize, BoundError> {
        extremum(&self.down_size, &self.down[x], &self.down[y])
    }

    /// Least upper bound of `x` and `y`.
    pub fn join(&self, x: usize, y: usize) -> Result<usize, BoundError> {
        extremum(&self.up_size, &self.up[x], &self.up[y])
    }
}

// The element of `a ∩ b` whose closure is all of `a ∩ b`. Closures of members
// are subsets of `a ∩ b`, so comparing sizes is enough.
fn extremum(closure_size: &[usize], a: &FixedBitSet, b: &FixedBitSet) -> Result<usize, BoundError> {
    let common = a.intersection_count(b);
    if common == 0 {
        return Err(BoundError::NoBound);
    }
    a.intersection(b)
        .find(|&g| closure_size[g] == common)
        .ok_or(BoundError::Absent)
}

/// Meets and joins of one element with every element.
type MeetJoinRow = (Vec<u32>, Vec<u32>);

/// Meet and join tables of a poset that is a lattice.
#[derive(Debug, Clone)]
pub struct Lattice<'a, L> {
    poset: &'a FinitePoset<L>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl<'a, L: Sync> Lattice<'a, L> {
    pub fn new(poset: &'a FinitePoset<L>) -> Result<Self, OrderError> {
        let n = poset.len();
        let rows: Vec<Result<MeetJoinRow, OrderError>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let mut meets = Vec::with_capacity(n);
                let mut joins = Vec::with_capacity(n);
                for y in 0..n {
                    let m = poset.meet(x, y).map_err(|_| OrderError::NotALattice { x, y })?;
                    let j = poset.join(x, y).map_err(|_| OrderError::NotALattice { x, y })?;
                    meets.push(m as u32);
                    joins.push(j as u32);
                }
                Ok((meets, joins))
            })
            .collect();
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for row in rows {
            let (m, j) = row?;
            meet.extend(m);
            join.extend(j);
        }
        Ok(Lattice { poset, meet, join })
    }

    pub fn poset(&self) -> &'a FinitePoset<L> {
        self.poset
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.poset.len() + y] as usize
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.poset.len() + y] as usize
    }

    pub fn meet_all(&self, xs: &[usize]) -> Option<usize> {
        xs.iter().copied().reduce(|a, b| self.meet(a, b))
    }

    pub fn join_all(&self, xs: &[usize]) -> Option<usize> {
        xs.iter().copied().reduce(|a, b| self.join(a, b))
    }

    /// First triple, in lexicographic index order, with
    /// `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.poset.len();
        // The identity is symmetric in y and z and trivial for y == z, so the
        // lexicographically first failure has y < z.
        (0..n).into_par_iter().find_map_first(|x| {
            for y in 0..n {
                let xy = self.meet(x, y);
                for z in y + 1..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(xy, self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
            None
        })
    }
}

/// Checks every pair for a meet and a join; reports the first failing pair.
pub fn is_lattice<L: Sync>(p: &FinitePoset<L>) -> Verdict<(usize, usize)> {
    match Lattice::new(p) {
        Ok(_) => Verdict::pass(),
        Err(OrderError::NotALattice { x, y }) => Verdict::fail((x, y)),
        Err(e) => unreachable!("lattice construction only fails on pairs: {e}"),
    }
}

/// Elements covering exactly one other element.
pub fn join_irreducibles<L: Sync>(p: &FinitePoset<L>) -> Result<Vec<usize>, OrderError> {
    Lattice::new(p)?;
    Ok(join_irreducibles_unchecked(p))
}

pub(crate) fn join_irreducibles_unchecked<L>(p: &FinitePoset<L>) -> Vec<usize> {
    (0..p.len()).filter(|&x| p.lower_covers(x).len() == 1).collect()
}

/// Distributivity with the lexicographically first failing triple. A passing
/// verdict is confirmed against the ideal lattice of the join-irreducibles.
pub fn is_distributive<L: Sync + Clone>(
    p: &FinitePoset<L>,
) -> Result<Verdict<(usize, usize, usize)>, OrderError> {
    let lattice = Lattice::new(p)?;
    if let Some(w) = lattice.distributivity_witness() {
        return Ok(Verdict::fail(w));
    }
    if !birkhoff_check(p)? {
        return Err(OrderError::BirkhoffMismatch);
    }
    Ok(Verdict::pass())
}

/// Whether `x ↦ { j join-irreducible : j <= x }` maps `p` isomorphically onto
/// the order ideals of its join-irreducibles.
pub fn birkhoff_check<L: Clone>(p: &FinitePoset<L>) -> Result<bool, OrderError> {
    let irreducibles = join_irreducibles_unchecked(p);
    let sub = p.induced(&irreducibles);
    let ideals = order_ideals(&sub, DEFAULT_IDEAL_CAP)?;
    if ideals.len() != p.len() {
        return Ok(false);
    }
    let mut bijection = Vec::with_capacity(p.len());
    for x in 0..p.len() {
        let mut set = FixedBitSet::with_capacity(irreducibles.len());
        for (i, &j) in irreducibles.iter().enumerate() {
            if p.leq(j, x) {
                set.insert(i);
            }
        }
        match ideals.index_of(&set) {
            Some(i) => bijection.push(i),
            None => return Ok(false),
        }
    }
    match embed_check(p, ideals.lattice(), &bijection) {
        Ok(ok) => Ok(ok),
        Err(OrderError::NotBijective) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Which covers span the local hypercube in [`is_uld`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UldOrientation {
    /// `[meet of lower covers of x, x]`; the hypercube of simultaneous
    /// firings below a configuration.
    #[default]
    LowerCovers,
    /// `[x, join of upper covers of x]`.
    UpperCovers,
}

/// Local distributivity: for every `x` with covers `D` in the chosen
/// direction, the interval spanned by `x` and the meet (join) of `D` is a
/// Boolean lattice with `|D|` atoms. Fails with the first offending element.
pub fn is_uld<L: Sync>(
    p: &FinitePoset<L>,
    orientation: UldOrientation,
) -> Result<Verdict<usize>, OrderError> {
    let lattice = Lattice::new(p)?;
    for x in 0..p.len() {
        let (covers, far) = match orientation {
            UldOrientation::LowerCovers => {
                let d = p.lower_covers(x);
                (d, lattice.meet_all(d))
            }
            UldOrientation::UpperCovers => {
                let u = p.upper_covers(x);
                (u, lattice.join_all(u))
            }
        };
        let Some(far) = far else { continue };
        let (top, bottom) = match orientation {
            UldOrientation::LowerCovers => (x, far),
            UldOrientation::UpperCovers => (far, x),
        };
        if !interval_is_boolean(p, bottom, top, covers, orientation) {
            return Ok(Verdict::fail(x));
        }
    }
    Ok(Verdict::pass())
}

// With covers C adjacent to the fixed end, the interval is Boolean iff it has
// 2^|C| elements and y ↦ { c ∈ C : y on the far side of c } is an
// order-reversing bijection onto the subsets of C.
fn interval_is_boolean<L>(
    p: &FinitePoset<L>,
    bottom: usize,
    top: usize,
    covers: &[usize],
    orientation: UldOrientation,
) -> bool {
    if covers.len() >= 20 {
        return false;
    }
    let mut interval = p.up_set(bottom).clone();
    interval.intersect_with(p.down_set(top));
    let members: Vec<usize> = interval.ones().collect();
    if members.len() != 1 << covers.len() {
        return false;
    }
    let signature = |y: usize| -> u32 {
        covers.iter().enumerate().fold(0, |acc, (i, &c)| {
            let beyond = match orientation {
                UldOrientation::LowerCovers => p.leq(y, c),
                UldOrientation::UpperCovers => p.leq(c, y),
            };
            if beyond {
                acc | (1 << i)
            } else {
                acc
            }
        })
    };
    let sigs: Vec<u32> = members.iter().map(|&y| signature(y)).collect();
    let mut seen = vec![false; members.len()];
    for &s in &sigs {
        if seen[s as usize] {
            return false;
        }
        seen[s as usize] = true;
    }
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            // Moving away from the fixed end enlarges the signature.
            let sig_le = sigs[i] & sigs[j] == sigs[i];
            let order_le = match orientation {
                UldOrientation::LowerCovers => p.leq(b, a),
                UldOrientation::UpperCovers => p.leq(a, b),
            };
            if sig_le != order_le {
                return false;
            }
        }
    }
    true
}

/// The down-closed subsets of a poset, with their containment lattice.
#[derive(Debug, Clone)]
pub struct OrderIdeals {
    lattice: FinitePoset<FixedBitSet>,
    index: HashMap<FixedBitSet, usize>,
}

impl OrderIdeals {
    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn ideals(&self) -> &[FixedBitSet] {
        self.lattice.labels()
    }

    pub fn index_of(&self, ideal: &FixedBitSet) -> Option<usize> {
        self.index.get(ideal).copied()
    }

    /// Ideals ordered by containment; larger ideals are greater.
    pub fn lattice(&self) -> &FinitePoset<FixedBitSet> {
        &self.lattice
    }
}

/// Enumerates all order ideals without duplicates.
pub fn order_ideals<L>(p: &FinitePoset<L>, cap: usize) -> Result<OrderIdeals, OrderError> {
    let n = p.len();
    // Bottom-up linear order: every lower cover precedes its upper covers.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| p.down_size(x));

    let mut ideals: Vec<FixedBitSet> = Vec::new();
    let mut current = FixedBitSet::with_capacity(n);
    // Include/exclude each element in bottom-up order; inclusion is allowed
    // only when all lower covers are already in.
    fn walk<L>(
        p: &FinitePoset<L>,
        order: &[usize],
        pos: usize,
        current: &mut FixedBitSet,
        out: &mut Vec<FixedBitSet>,
        cap: usize,
    ) -> Result<(), OrderError> {
        if pos == order.len() {
            if out.len() == cap {
                return Err(OrderError::CapExceeded { cap });
            }
            out.push(current.clone());
            return Ok(());
        }
        let x = order[pos];
        walk(p, order, pos + 1, current, out, cap)?;
        if p.lower_covers(x).iter().all(|&y| current.contains(y)) {
            current.insert(x);
            walk(p, order, pos + 1, current, out, cap)?;
            current.set(x, false);
        }
        Ok(())
    }
    walk(p, &order, 0, &mut current, &mut ideals, cap)?;

    let index: HashMap<FixedBitSet, usize> =
        ideals.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut rel = Vec::new();
    for (i, ideal) in ideals.iter().enumerate() {
        for x in ideal.ones() {
            // Removing a maximal element of the ideal gives a lower cover.
            if p.upper_covers(x).iter().all(|&u| !ideal.contains(u)) {
                let mut smaller = ideal.clone();
                smaller.set(x, false);
                rel.push((i, index[&smaller]));
            }
        }
    }
    let lattice = FinitePoset::from_relation(ideals, rel)?;
    Ok(OrderIdeals { lattice, index })
}

/// Lazy enumeration of linear extensions, greatest elements first. At each
/// position the available element with the smallest index is tried first.
#[derive(Debug)]
pub struct LinearExtensions<'a, L> {
    poset: &'a FinitePoset<L>,
    cap: usize,
    yielded: usize,
    // Unplaced upper covers of each element.
    pending: Vec<usize>,
    placed: FixedBitSet,
    prefix: Vec<usize>,
    // Candidates for each prefix position and the next one to try.
    frames: Vec<(Vec<usize>, usize)>,
    started: bool,
    done: bool,
}

impl<L> LinearExtensions<'_, L> {
    fn place(&mut self, x: usize) {
        self.prefix.push(x);
        self.placed.insert(x);
        for &y in self.poset.lower_covers(x) {
            self.pending[y] -= 1;
        }
    }

    fn unplace(&mut self) {
        let x = self.prefix.pop().expect("non-empty prefix");
        self.placed.set(x, false);
        for &y in self.poset.lower_covers(x) {
            self.pending[y] += 1;
        }
    }

    // Completes the prefix greedily.
    fn descend(&mut self) {
        while self.prefix.len() < self.poset.len() {
            let avail: Vec<usize> = (0..self.poset.len())
                .filter(|&x| !self.placed.contains(x) && self.pending[x] == 0)
                .collect();
            let first = *avail
                .first()
                .expect("a finite poset always has an available element");
            self.frames.push((avail, 1));
            self.place(first);
        }
    }

    fn emit(&mut self) -> Option<Result<Vec<usize>, OrderError>> {
        if self.yielded == self.cap {
            self.done = true;
            return Some(Err(OrderError::CapExceeded { cap: self.cap }));
        }
        self.yielded += 1;
        Some(Ok(self.prefix.clone()))
    }
}

impl<L> Iterator for LinearExtensions<'_, L> {
    type Item = Result<Vec<usize>, OrderError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return self.emit();
        }
        loop {
            let Some((cands, next)) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            if *next < cands.len() {
                let x = cands[*next];
                *next += 1;
                self.unplace();
                self.place(x);
                self.descend();
                return self.emit();
            }
            self.frames.pop();
            self.unplace();
        }
    }
}

pub fn linear_extensions<L>(p: &FinitePoset<L>, cap: usize) -> LinearExtensions<'_, L> {
    let pending = (0..p.len()).map(|x| p.upper_covers(x).len()).collect();
    LinearExtensions {
        poset: p,
        cap,
        yielded: 0,
        pending,
        placed: FixedBitSet::with_capacity(p.len()),
        prefix: Vec::new(),
        frames: Vec::new(),
        started: false,
        done: false,
    }
}

/// Whether `seq` lists every element once with greater elements first.
pub fn is_linear_extension<L>(p: &FinitePoset<L>, seq: &[usize]) -> bool {
    let n = p.len();
    if seq.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &x) in seq.iter().enumerate() {
        if x >= n || pos[x] != usize::MAX {
            return false;
        }
        pos[x] = i;
    }
    p.covers().into_iter().all(|(u, l)| pos[u] < pos[l])
}

/// Number of linear extensions, by dynamic programming over order ideals.
pub fn count_linear_extensions<L>(p: &FinitePoset<L>, cap: usize) -> Result<u128, OrderError> {
    let ideals = order_ideals(p, cap)?;
    let lattice = ideals.lattice();
    // Extensions of p = maximal chains in the ideal lattice. Ideals with fewer
    // elements are handled first.
    let mut order: Vec<usize> = (0..lattice.len()).collect();
    order.sort_by_key(|&i| lattice.label(i).count_ones(..));
    let mut chains = vec![0u128; lattice.len()];
    for &i in &order {
        chains[i] = if lattice.lower_covers(i).is_empty() {
            1
        } else {
            lattice.lower_covers(i).iter().map(|&j| chains[j]).sum()
        };
    }
    Ok(lattice.maximal().iter().map(|&i| chains[i]).sum())
}

/// Whether `bijection` (indexed by elements of `p`) is an order isomorphism
/// onto `q`.
pub fn embed_check<L, M>(
    p: &FinitePoset<L>,
    q: &FinitePoset<M>,
    bijection: &[usize],
) -> Result<bool, OrderError> {
    if bijection.len() != p.len() || p.len() != q.len() {
        return Err(OrderError::NotBijective);
    }
    let mut hit = vec![false; q.len()];
    for &t in bijection {
        if t >= q.len() || hit[t] {
            return Err(OrderError::NotBijective);
        }
        hit[t] = true;
    }
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.leq(y, x) != q.leq(bijection[y], bijection[x]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A chain `0 > 1 > ... > len-1`.
pub fn chain(len: usize) -> FinitePoset<usize> {
    FinitePoset::from_relation((0..len).collect(), (1..len).map(|i| (i - 1, i))).expect("chains are acyclic")
}

pub fn antichain(len: usize) -> FinitePoset<usize> {
    FinitePoset::from_relation((0..len).collect(), std::iter::empty()).expect("no relations")
}

/// Subsets of `atoms` atoms ordered by containment; labels are bitmasks.
pub fn boolean_lattice(atoms: u32) -> FinitePoset<u32> {
    let n = 1u32 << atoms;
    let rel = (0..n).flat_map(|s| {
        (0..atoms)
            .filter(move |b| s & (1 << b) != 0)
            .map(move |b| (s as usize, (s & !(1 << b)) as usize))
    });
    FinitePoset::from_relation((0..n).collect(), rel).expect("containment is acyclic")
}
