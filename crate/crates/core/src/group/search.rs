//! Backtrack search over a stabilizer chain for the subgroup preserving a
//! point colouring. Setwise stabilizers use a two-colouring, partition
//! stabilizers a colouring by label.
//!
//! Elements are enumerated as `u_{k-1}·…·u_1·u_0` with `u_i` a coset
//! representative at level `i`. Once levels `0..=m` are chosen, the images of
//! all points fixed by the level `m+1` stabilizer are known, so colour
//! violations on them prune the branch.

use crate::perm::Permutation;

use super::chain::StabilizerChain;

pub(crate) struct ColourSearch<'a> {
    chain: &'a StabilizerChain,
    colours: &'a [u32],
    /// Points whose image is first determined at each level.
    newly: Vec<Vec<usize>>,
    nodes: u64,
}

impl<'a> ColourSearch<'a> {
    pub(crate) fn new(chain: &'a StabilizerChain, colours: &'a [u32]) -> Self {
        let k = chain.levels().len();
        let mut newly = Vec::with_capacity(k);
        let mut before = chain.fixed_by_level(0);
        for m in 0..k {
            let after = chain.fixed_by_level(m + 1);
            let fresh: Vec<usize> = (0..chain.degree()).filter(|&x| after[x] && !before[x]).collect();
            newly.push(fresh);
            before = after;
        }
        ColourSearch { chain, colours, newly, nodes: 0 }
    }

    #[allow(dead_code)]
    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    fn admissible(&self, m: usize, u: &Permutation, t: Option<&Permutation>) -> bool {
        self.newly[m].iter().all(|&x| {
            let y = u.image(x);
            let y = t.map_or(y, |t| t.image(y));
            self.colours[y] == self.colours[x]
        })
    }

    /// Extends the partial product `t` (levels below `m` chosen) to a full
    /// colour-preserving element.
    fn extend(&mut self, m: usize, t: &Permutation) -> Option<Permutation> {
        let levels = self.chain.levels();
        if m == levels.len() {
            return Some(t.clone());
        }
        let level = &levels[m];
        let want = self.colours[level.base_point()];
        for &gamma in level.orbit() {
            if self.colours[t.image(gamma)] != want {
                continue;
            }
            let u = level.rep(gamma).unwrap();
            self.nodes += 1;
            if !self.admissible(m, u, Some(t)) {
                continue;
            }
            let next = u.mul_unchecked(t);
            if let Some(g) = self.extend(m + 1, &next) {
                return Some(g);
            }
        }
        None
    }

    /// Runs the level-by-level subgroup search. With `first_only`, stops at the
    /// first non-identity element found.
    fn run(&mut self, first_only: bool) -> Vec<Permutation> {
        let levels = self.chain.levels();
        let degree = self.chain.degree();
        let mut found: Vec<Permutation> = Vec::new();
        for l in (0..levels.len()).rev() {
            let level = &levels[l];
            let b = level.base_point();
            let mut known = vec![false; degree];
            let mut frontier = vec![b];
            known[b] = true;
            close_orbit(&mut known, &mut frontier, &found);
            for &beta in level.orbit() {
                if known[beta] || self.colours[beta] != self.colours[b] {
                    continue;
                }
                let u = level.rep(beta).unwrap();
                self.nodes += 1;
                if !self.admissible(l, u, None) {
                    continue;
                }
                if let Some(g) = self.extend(l + 1, u) {
                    if first_only {
                        return vec![g];
                    }
                    found.push(g);
                    let mut frontier: Vec<usize> = (0..degree).filter(|&x| known[x]).collect();
                    close_orbit(&mut known, &mut frontier, &found);
                }
            }
        }
        found
    }

    pub(crate) fn stabilizer_generators(&mut self) -> Vec<Permutation> {
        self.run(false)
    }

    pub(crate) fn witness(&mut self) -> Option<Permutation> {
        self.run(true).pop()
    }
}

fn close_orbit(known: &mut [bool], frontier: &mut Vec<usize>, gens: &[Permutation]) {
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.image(x);
            if !known[y] {
                known[y] = true;
                frontier.push(y);
            }
        }
    }
}
