//! Regular sets, distinguishing labelings and orbitals.
//!
//! A set is regular when its setwise stabilizer is trivial; a labeling is
//! distinguishing when only the identity preserves every label class. A
//! nontrivial group has a distinguishing 2-labeling exactly when it has a
//! regular set.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Labels `1..=k` on points `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u32>,
    k: u32,
}

impl Labeling {
    pub fn new(labels: Vec<u32>, k: u32) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > k) {
            return Err(Error::Spec(format!("label {bad} outside 1..={k}")));
        }
        Ok(Labeling { labels, k })
    }

    /// Label 2 on `set`, label 1 elsewhere.
    pub fn from_set(degree: usize, set: &[usize]) -> Self {
        let mut labels = vec![1; degree];
        for &x in set {
            labels[x] = 2;
        }
        Labeling { labels, k: 2 }
    }

    pub fn uniform(degree: usize) -> Self {
        Labeling { labels: vec![1; degree], k: 1 }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of labels actually used.
    pub fn used(&self) -> usize {
        let mut seen: Vec<u32> = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Label classes, ordered by label; empty labels are skipped.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k as usize];
        for (x, &l) in self.labels.iter().enumerate() {
            classes[l as usize - 1].push(x);
        }
        classes.into_iter().filter(|c| !c.is_empty()).collect()
    }

    /// Moves one point of the largest class (ties: lowest label) to a fresh
    /// label `k+1`. Refining a distinguishing labeling keeps it distinguishing.
    pub fn refine(&self) -> Option<Labeling> {
        let mut classes = vec![Vec::new(); self.k as usize];
        for (x, &l) in self.labels.iter().enumerate() {
            classes[l as usize - 1].push(x);
        }
        let (_, class) = classes.iter().enumerate().filter(|(_, c)| c.len() >= 2).max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i)))?;
        let mut labels = self.labels.clone();
        labels[*class.last().unwrap()] = self.k + 1;
        Some(Labeling { labels, k: self.k + 1 })
    }

    fn colours(&self) -> Vec<u32> {
        self.labels.clone()
    }
}

/// Setwise stabilizer data for a candidate regular set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSetReport {
    pub set: Vec<usize>,
    pub stabilizer_order: BigUint,
    pub witness: Option<Permutation>,
}

impl RegularSetReport {
    pub fn is_regular(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn regular_set_report(g: &PermGroup, set: &[usize]) -> RegularSetReport {
    let stab = g.setwise_stabilizer(set);
    let witness = stab.generators().iter().find(|x| !x.is_identity()).cloned();
    let mut set = set.to_vec();
    set.sort_unstable();
    RegularSetReport { set, stabilizer_order: stab.order(), witness }
}

pub fn is_regular_set(g: &PermGroup, set: &[usize]) -> bool {
    let colours = set_colours(g.degree(), set);
    g.colour_witness(&colours).expect("colours sized to degree").is_none()
}

fn set_colours(degree: usize, set: &[usize]) -> Vec<u32> {
    let mut colours = vec![0u32; degree];
    for &x in set {
        colours[x] = 1;
    }
    colours
}

/// `{g ∈ G : every label class is fixed setwise}`, by successive setwise
/// stabilizers over the classes, largest class last.
pub fn partition_stabilizer(g: &PermGroup, labeling: &Labeling) -> Result<PermGroup> {
    if labeling.degree() != g.degree() {
        return Err(Error::DegreeMismatch { left: g.degree(), right: labeling.degree() });
    }
    let mut classes = labeling.classes();
    classes.sort_by_key(|c| c.len());
    let mut current = g.clone();
    for class in &classes {
        if current.is_trivial() {
            break;
        }
        current = current.setwise_stabilizer(class);
    }
    Ok(current)
}

pub fn is_distinguishing(g: &PermGroup, labeling: &Labeling) -> Result<bool> {
    if labeling.degree() != g.degree() {
        return Err(Error::DegreeMismatch { left: g.degree(), right: labeling.degree() });
    }
    Ok(g.colour_witness(&labeling.colours())?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Sizes ascending, subsets (or labelings) in lexicographic order.
    Exhaustive,
    /// Seeded random sampling; proves existence only.
    Randomized { seed: u64 },
}

/// Result of a search that may run out of budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// Exhaustive search completed without a hit.
    NoneExists,
    /// Budget ran out (or randomized search missed); nothing is proved.
    Exhausted { tested: u64 },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// Searches for a regular set with size in `sizes`.
pub fn find_regular_set(
    g: &PermGroup,
    sizes: RangeInclusive<usize>,
    mode: SearchMode,
    budget: u64,
) -> SearchOutcome<RegularSetReport> {
    let n = g.degree();
    let lo = *sizes.start();
    let hi = (*sizes.end()).min(n);
    if lo > hi {
        return SearchOutcome::NoneExists;
    }
    let mut tested: u64 = 0;
    let report = |set: Vec<usize>| RegularSetReport { set, stabilizer_order: BigUint::from(1u32), witness: None };
    match mode {
        SearchMode::Exhaustive => {
            let mut none_at: Vec<bool> = vec![false; n + 1];
            for s in lo..=hi {
                // complements of regular sets are regular
                if n - s < s && none_at[n - s] {
                    none_at[s] = true;
                    continue;
                }
                let mut combo: Vec<usize> = (0..s).collect();
                loop {
                    if tested >= budget {
                        return SearchOutcome::Exhausted { tested };
                    }
                    tested += 1;
                    if is_regular_set(g, &combo) {
                        return SearchOutcome::Found(report(combo));
                    }
                    if !next_combination(&mut combo, n) {
                        break;
                    }
                }
                none_at[s] = true;
            }
            SearchOutcome::NoneExists
        }
        SearchMode::Randomized { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let count = (hi - lo + 1) as u64;
            let per_size = budget.div_ceil(count).max(1);
            for s in lo..=hi {
                for _ in 0..per_size {
                    if tested >= budget {
                        return SearchOutcome::Exhausted { tested };
                    }
                    tested += 1;
                    let mut set = sample(&mut rng, n, s).into_vec();
                    set.sort_unstable();
                    if is_regular_set(g, &set) {
                        return SearchOutcome::Found(report(set));
                    }
                }
            }
            SearchOutcome::Exhausted { tested }
        }
    }
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches for a distinguishing labeling using exactly `k` labels on the
/// moved points (fixed points get label 1). Exhaustive mode walks canonical
/// labelings: the first moved point has label 1 and labels first appear in
/// increasing order, which removes the `k!` relabelling symmetry.
pub fn find_distinguishing_labeling(
    g: &PermGroup,
    k: u32,
    mode: SearchMode,
    budget: u64,
) -> SearchOutcome<Labeling> {
    let moved = g.moved_points();
    let n = g.degree();
    let m = moved.len();
    if k == 0 || k as usize > m.max(1) {
        return SearchOutcome::NoneExists;
    }
    let mut tested = 0u64;
    let mut colours = vec![0u32; n];
    match mode {
        SearchMode::Exhaustive => {
            let mut lab = vec![0u32; m];
            let mut hit = None;
            let complete = canonical_labelings(&mut lab, 0, 0, k, &mut |lab: &[u32]| {
                if tested >= budget {
                    return Visit::Stop;
                }
                tested += 1;
                for (i, &x) in moved.iter().enumerate() {
                    colours[x] = lab[i];
                }
                if g.colour_witness(&colours).unwrap().is_none() {
                    hit = Some(lab.to_vec());
                    return Visit::Stop;
                }
                Visit::Continue
            });
            match hit {
                Some(lab) => SearchOutcome::Found(labeling_from(n, &moved, &lab, k)),
                None if complete => SearchOutcome::NoneExists,
                None => SearchOutcome::Exhausted { tested },
            }
        }
        SearchMode::Randomized { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while tested < budget {
                tested += 1;
                let mut lab: Vec<u32> = (0..m).map(|_| rng.gen_range(0..k)).collect();
                // make every label appear
                let slots = sample(&mut rng, m, k as usize).into_vec();
                for (label, &slot) in slots.iter().enumerate() {
                    lab[slot] = label as u32;
                }
                for (i, &x) in moved.iter().enumerate() {
                    colours[x] = lab[i];
                }
                if g.colour_witness(&colours).unwrap().is_none() {
                    return SearchOutcome::Found(labeling_from(n, &moved, &lab, k));
                }
            }
            SearchOutcome::Exhausted { tested }
        }
    }
}

fn labeling_from(n: usize, moved: &[usize], lab: &[u32], k: u32) -> Labeling {
    let mut labels = vec![1u32; n];
    for (i, &x) in moved.iter().enumerate() {
        labels[x] = lab[i] + 1;
    }
    Labeling { labels, k }
}

enum Visit {
    Continue,
    Stop,
}

/// Restricted growth strings of length `lab.len()` using exactly `k` values.
/// Returns `false` if the visitor stopped early.
fn canonical_labelings(lab: &mut [u32], pos: usize, used: u32, k: u32, visit: &mut dyn FnMut(&[u32]) -> Visit) -> bool {
    let m = lab.len();
    if pos == m {
        return match visit(lab) {
            Visit::Continue => true,
            Visit::Stop => false,
        };
    }
    let remaining = (m - pos) as u32;
    let top = if used < k { used } else { k - 1 };
    for label in 0..=top {
        let now_used = used.max(label + 1);
        if k - now_used > remaining - 1 {
            continue;
        }
        lab[pos] = label;
        if !canonical_labelings(lab, pos + 1, now_used, k, visit) {
            return false;
        }
    }
    true
}

/// Outcome of a distinguishing-number computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distinguishing {
    /// `D(G) = value`, with a distinguishing labeling using `value` labels.
    Exact { value: u32, witness: Labeling },
    /// No distinguishing labeling with at most `k_max` labels.
    AboveLimit { k_max: u32 },
    /// Budget ran out; `D(G) >= lower_bound` is proved.
    Inconclusive { lower_bound: u32, budget: u64 },
}

impl Distinguishing {
    pub fn value(&self) -> Option<u32> {
        match self {
            Distinguishing::Exact { value, .. } => Some(*value),
            _ => None,
        }
    }
}

/// Least `k <= k_max` admitting a distinguishing `k`-labeling. `k = 2` is
/// decided by an exhaustive regular-set search, larger `k` by the canonical
/// labeling search. `budget` caps the candidates tested per value of `k`.
pub fn distinguishing_number(g: &PermGroup, k_max: u32, budget: u64) -> Distinguishing {
    let n = g.degree();
    if g.is_trivial() {
        return Distinguishing::Exact { value: 1, witness: Labeling::uniform(n) };
    }
    if k_max < 2 {
        return Distinguishing::AboveLimit { k_max };
    }
    match find_regular_set(g, 0..=n, SearchMode::Exhaustive, budget) {
        SearchOutcome::Found(r) => {
            return Distinguishing::Exact { value: 2, witness: Labeling::from_set(n, &r.set) };
        }
        SearchOutcome::Exhausted { .. } => return Distinguishing::Inconclusive { lower_bound: 2, budget },
        SearchOutcome::NoneExists => {}
    }
    for k in 3..=k_max {
        match find_distinguishing_labeling(g, k, SearchMode::Exhaustive, budget) {
            SearchOutcome::Found(l) => return Distinguishing::Exact { value: k, witness: l },
            SearchOutcome::Exhausted { .. } => return Distinguishing::Inconclusive { lower_bound: k, budget },
            SearchOutcome::NoneExists => {}
        }
    }
    Distinguishing::AboveLimit { k_max }
}

/// Smallest `d` with `d^k >= n - 1`.
pub fn an_parallel_formula(n: u64, k: u32) -> u64 {
    assert!(n >= 3 && k >= 1, "needs n >= 3 and k >= 1");
    let target = (n - 1) as u128;
    let mut d: u64 = 1;
    while (d as u128).checked_pow(k).is_some_and(|v| v < target) {
        d += 1;
    }
    d
}

/// Orbits on pairs of distinct points: ordered pairs `(x, y)` when `ordered`,
/// otherwise pairs with `x < y`. Classes are sorted and listed by least pair.
pub fn orbitals(g: &PermGroup, ordered: bool) -> Vec<Vec<(usize, usize)>> {
    let n = g.degree();
    let idx = |x: usize, y: usize| x * n + y;
    let mut parent: Vec<usize> = (0..n * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let norm = |x: usize, y: usize| if ordered || x < y { (x, y) } else { (y, x) };
    for x in 0..n {
        for y in 0..n {
            if x == y || (!ordered && x > y) {
                continue;
            }
            for s in g.generators() {
                let (a, b) = norm(s.image(x), s.image(y));
                let (r1, r2) = (find(&mut parent, idx(x, y)), find(&mut parent, idx(a, b)));
                if r1 != r2 {
                    parent[r1.max(r2)] = r1.min(r2);
                }
            }
        }
    }
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut slot = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            if x == y || (!ordered && x > y) {
                continue;
            }
            let r = find(&mut parent, idx(x, y));
            if slot[r] == usize::MAX {
                slot[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[r]].push((x, y));
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic};
    use crate::sums::parallel_multiple;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn formula_values() {
        assert_eq!(an_parallel_formula(5, 1), 4);
        assert_eq!(an_parallel_formula(6, 2), 3);
        assert_eq!(an_parallel_formula(9, 3), 2);
        assert_eq!(an_parallel_formula(3, 1), 2);
        assert_eq!(an_parallel_formula(7, 2), 3);
        assert_eq!(an_parallel_formula(1_000_001, 40), 2);
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::new(vec![1, 2, 3], 3).is_ok());
        assert!(Labeling::new(vec![1, 4], 3).is_err());
        assert!(Labeling::new(vec![0, 1], 3).is_err());
    }

    #[test]
    fn distinguishing_examples() {
        let a5 = alternating(5);
        assert!(is_distinguishing(&PermGroup::trivial(3), &Labeling::uniform(3)).unwrap());
        assert!(!is_distinguishing(&cyclic(2), &Labeling::uniform(2)).unwrap());
        assert!(is_distinguishing(&a5, &Labeling::new(vec![1, 2, 3, 4, 4], 4).unwrap()).unwrap());
        assert!(!is_distinguishing(&a5, &Labeling::new(vec![1, 2, 3, 3, 3], 3).unwrap()).unwrap());
        assert!(is_distinguishing(&a5, &Labeling::uniform(4)).is_err());
    }

    #[test]
    fn partition_stabilizer_examples() {
        let a5 = alternating(5);
        assert!(partition_stabilizer(&a5, &Labeling::uniform(5)).unwrap().same_group(&a5));
        let distinct = Labeling::new(vec![1, 2, 3, 4, 5], 5).unwrap();
        assert!(partition_stabilizer(&a5, &distinct).unwrap().is_trivial());
    }

    #[test]
    fn regular_set_searches() {
        let l25x2 = parallel_multiple(&group(6, &["(1,2,5)(3,4,6)", "(3,5)(4,6)"]), 2);
        let printed: Vec<usize> = [1, 2, 3, 8, 10, 12].iter().map(|x| x - 1).collect();
        assert!(regular_set_report(&l25x2, &printed).is_regular());
        let found = find_regular_set(&l25x2, 6..=6, SearchMode::Exhaustive, u64::MAX);
        let r = found.found().unwrap();
        assert_eq!(r.set.len(), 6);
        assert!(regular_set_report(&l25x2, &r.set).is_regular());

        let a5 = alternating(5);
        assert_eq!(find_regular_set(&a5, 0..=5, SearchMode::Exhaustive, u64::MAX), SearchOutcome::NoneExists);
        assert!(matches!(
            find_regular_set(&a5, 0..=5, SearchMode::Exhaustive, 3),
            SearchOutcome::Exhausted { tested: 3 }
        ));
        let t = find_regular_set(&PermGroup::trivial(3), 0..=0, SearchMode::Exhaustive, 10);
        assert_eq!(t.found().unwrap().set, Vec::<usize>::new());
    }

    #[test]
    fn regular_set_witness_reported() {
        let r = regular_set_report(&alternating(5), &[0, 1]);
        assert!(!r.is_regular());
        assert_eq!(r.stabilizer_order, BigUint::from(6u32));
    }

    #[test]
    fn distinguishing_numbers() {
        assert_eq!(distinguishing_number(&alternating(5), 10, u64::MAX).value(), Some(4));
        assert_eq!(distinguishing_number(&PermGroup::trivial(4), 10, u64::MAX).value(), Some(1));
        assert_eq!(distinguishing_number(&cyclic(3), 10, u64::MAX).value(), Some(2));
        assert_eq!(distinguishing_number(&alternating(5), 3, u64::MAX), Distinguishing::AboveLimit { k_max: 3 });
        assert!(matches!(
            distinguishing_number(&alternating(5), 10, 5),
            Distinguishing::Inconclusive { lower_bound: 2, .. }
        ));
    }

    #[test]
    fn canonical_labeling_counts() {
        // Stirling numbers of the second kind
        for (m, k, expect) in [(4usize, 2u32, 7usize), (5, 3, 25), (7, 3, 301), (6, 6, 1)] {
            let mut count = 0;
            let mut lab = vec![0; m];
            canonical_labelings(&mut lab, 0, 0, k, &mut |_| {
                count += 1;
                Visit::Continue
            });
            assert_eq!(count, expect, "S({m},{k})");
        }
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn orbital_counts() {
        let a6 = alternating(6);
        assert_eq!(orbitals(&a6, true).len(), 1);
        assert_eq!(orbitals(&parallel_multiple(&a6, 2), false).len(), 4);
        let c4 = cyclic(4);
        // {1,2},{2,3},{3,4},{4,1} and {1,3},{2,4}
        assert_eq!(orbitals(&c4, false).len(), 2);
        assert_eq!(orbitals(&c4, true).len(), 3);
    }

    #[test]
    fn refinement_pads_labels() {
        let l = Labeling::new(vec![1, 2, 3, 4, 4], 4).unwrap();
        let r = l.refine().unwrap();
        assert_eq!(r.k(), 5);
        assert_eq!(r.used(), 5);
        assert!(r.refine().is_none());
    }
}
