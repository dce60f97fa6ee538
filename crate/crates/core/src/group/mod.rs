//! Permutation groups given by generators.

mod chain;
pub(crate) mod search;

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use chain::{Level, StabilizerChain};

use search::ColourSearch;

/// Default cap on [`PermGroup::elements`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// A permutation group with a lazily built stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Arc<StabilizerChain>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
        }
        Ok(PermGroup { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), chain: OnceLock::new() }
    }

    /// Parses 1-based cycle strings as generators.
    pub fn from_cycles<S: AsRef<str>>(degree: usize, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse_cycles(s.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub(crate) fn with_chain(degree: usize, generators: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let lock = OnceLock::new();
        let _ = lock.set(Arc::new(chain));
        PermGroup { degree, generators, chain: lock }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The memoized stabilizer chain; built on first use.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| Arc::new(StabilizerChain::build(self.degree, &self.generators, &[])))
    }

    /// A fresh chain whose base begins with the moved points of `preferred`.
    pub fn chain_with_base(&self, preferred: &[usize]) -> StabilizerChain {
        StabilizerChain::build(self.degree, &self.generators, preferred)
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.degree() });
        }
        Ok(self.chain().contains(p))
    }

    /// `true` iff every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.chain().contains(g))
    }

    /// Equal orders plus mutual generator containment.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.is_subgroup_of(other)
            && other.is_subgroup_of(self)
    }

    /// `true` iff every conjugate of a generator of `self` by a generator of
    /// `ambient` lies in `self`, i.e. `self` is normal in `ambient`.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient)
            && self.generators.iter().all(|h| {
                ambient.generators.iter().all(|g| self.chain().contains(&h.conjugate_by(g)))
            })
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            head += 1;
            for g in &self.generators {
                let z = g.image(y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit partition, blocks sorted and ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if assigned[x] {
                continue;
            }
            let orbit = self.orbit(x);
            for &y in &orbit {
                assigned[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree).filter(|&x| self.generators.iter().all(|g| g.image(x) == x)).collect()
    }

    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree).filter(|&x| self.generators.iter().any(|g| g.image(x) != x)).collect()
    }

    /// `{g ∈ G : x·g = x for all x ∈ points}`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let chain = self.chain_with_base(&sorted);
        let depth = chain.base().iter().take_while(|b| sorted.binary_search(b).is_ok()).count();
        let gens = chain.stabilizer_generators(depth);
        PermGroup::with_chain(self.degree, gens, chain.tail(depth))
    }

    /// `{g ∈ G : S·g = S}` by backtrack over a chain whose base starts in `S`.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> PermGroup {
        let mut colours = vec![0u32; self.degree];
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &x in &sorted {
            colours[x] = 1;
        }
        let chain = self.chain_with_base(&sorted);
        let gens = ColourSearch::new(&chain, &colours).stabilizer_generators();
        PermGroup::new(self.degree, gens).expect("search output has group degree")
    }

    /// `{g ∈ G : colour(x·g) = colour(x) for all x}`.
    pub fn colour_stabilizer(&self, colours: &[u32]) -> Result<PermGroup> {
        self.check_colours(colours)?;
        let gens = ColourSearch::new(self.chain(), colours).stabilizer_generators();
        PermGroup::new(self.degree, gens)
    }

    /// A non-identity element preserving every colour class, if any.
    pub fn colour_witness(&self, colours: &[u32]) -> Result<Option<Permutation>> {
        self.check_colours(colours)?;
        Ok(ColourSearch::new(self.chain(), colours).witness())
    }

    fn check_colours(&self, colours: &[u32]) -> Result<()> {
        if colours.len() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: colours.len() });
        }
        Ok(())
    }

    /// Every element exactly once, as products of transversal elements.
    pub fn elements(&self, budget: u64) -> Result<Elements<'_>> {
        let order = self.order();
        if order > BigUint::from(budget) {
            return Err(Error::BudgetExceeded { order: order.to_string(), budget });
        }
        Ok(Elements::new(self.chain()))
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit(0).len() == self.degree
    }

    /// Smallest block of imprimitivity containing `a` and `b`.
    pub fn minimal_block(&self, a: usize, b: usize) -> Vec<usize> {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue = vec![(a, b)];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.image(x), g.image(y));
                let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                    queue.push((gx, gy));
                }
            }
        }
        let root = find(&mut parent, a);
        (0..n).filter(|&x| find(&mut parent, x) == root).collect()
    }

    /// Primitivity test; errors on an intransitive group.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok((1..self.degree).all(|x| self.minimal_block(0, x).len() == self.degree))
    }

    /// Normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().mul_unchecked(&b.inverse()).mul_unchecked(a).mul_unchecked(b);
                if !c.is_identity() {
                    gens.push(c);
                }
            }
        }
        normal_closure(self.degree, gens, &self.generators)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Conjugate group `c⁻¹Gc`.
    pub fn conjugate_by(&self, c: &Permutation) -> PermGroup {
        PermGroup {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.conjugate_by(c)).collect(),
            chain: OnceLock::new(),
        }
    }
}

fn normal_closure(degree: usize, seed: Vec<Permutation>, ambient: &[Permutation]) -> PermGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = StabilizerChain::build(degree, &gens, &[]);
    let mut queue = seed;
    while let Some(g) = queue.pop() {
        if chain.contains(&g) {
            continue;
        }
        gens.push(g.clone());
        chain = StabilizerChain::build(degree, &gens, &[]);
        for a in ambient {
            queue.push(g.conjugate_by(a));
        }
    }
    PermGroup::with_chain(degree, gens, chain)
}

/// Iterator over group elements; see [`PermGroup::elements`].
pub struct Elements<'a> {
    chain: &'a StabilizerChain,
    indices: Vec<usize>,
    partial: Vec<Permutation>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(chain: &'a StabilizerChain) -> Self {
        let k = chain.levels().len();
        let mut it = Elements { chain, indices: vec![0; k], partial: Vec::with_capacity(k), done: false };
        it.rebuild_from(0);
        it
    }

    // partial[m] = u_m · partial[m-1]
    fn rebuild_from(&mut self, m: usize) {
        self.partial.truncate(m);
        for (i, level) in self.chain.levels().iter().enumerate().skip(m) {
            let u = level.rep(level.orbit()[self.indices[i]]).unwrap();
            let next = match self.partial.last() {
                Some(prev) => u.mul_unchecked(prev),
                None => u.clone(),
            };
            self.partial.push(next);
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current =
            self.partial.last().cloned().unwrap_or_else(|| Permutation::identity(self.chain.degree()));
        let levels = self.chain.levels();
        let mut m = levels.len();
        loop {
            if m == 0 {
                self.done = true;
                break;
            }
            m -= 1;
            self.indices[m] += 1;
            if self.indices[m] < levels[m].orbit().len() {
                self.rebuild_from(m);
                break;
            }
            self.indices[m] = 0;
        }
        Some(current)
    }
}

/// Alternating group on `n` points from `(1,2,3)` and `(3,…,n)` (n odd) or
/// `(1,2)(3,…,n)` (n even).
pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n);
    }
    let three = Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap();
    let tail: Vec<usize> = (2..n).collect();
    let second = if n % 2 == 1 {
        Permutation::from_cycles(n, &[tail]).unwrap()
    } else {
        Permutation::from_cycles(n, &[vec![0, 1], tail]).unwrap()
    };
    PermGroup::new(n, vec![three, second]).unwrap()
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let swap = Permutation::from_cycles(n, &[vec![0, 1]]).unwrap();
    let cycle = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
    PermGroup::new(n, vec![swap, cycle]).unwrap()
}

pub fn cyclic(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    PermGroup::new(n, vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]).unwrap()
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}
