//! Base and strong generating set built by deterministic Schreier–Sims.

use num_bigint::BigUint;

use crate::perm::Permutation;

/// One level of a stabilizer chain: the orbit of `base_point` under the
/// stabilizer of all earlier base points, with coset representatives.
#[derive(Clone, Debug)]
pub struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    reps: Vec<Option<Permutation>>,
    inv_reps: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base_point: usize, generators: Vec<Permutation>) -> Self {
        let mut level = Level {
            base_point,
            generators,
            orbit: Vec::new(),
            reps: vec![None; degree],
            inv_reps: vec![None; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.reps.len();
        self.reps.iter_mut().for_each(|r| *r = None);
        self.inv_reps.iter_mut().for_each(|r| *r = None);
        self.orbit.clear();
        self.reps[self.base_point] = Some(Permutation::identity(degree));
        self.orbit.push(self.base_point);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for s in &self.generators {
                let y = s.image(x);
                if self.reps[y].is_none() {
                    let rep = self.reps[x].as_ref().unwrap().mul_unchecked(s);
                    self.reps[y] = Some(rep);
                    self.orbit.push(y);
                }
            }
        }
        for &x in &self.orbit {
            self.inv_reps[x] = Some(self.reps[x].as_ref().unwrap().inverse());
        }
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    /// Strong generators fixing every earlier base point.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    /// Coset representative `u` with `base_point·u = point`.
    pub fn rep(&self, point: usize) -> Option<&Permutation> {
        self.reps[point].as_ref()
    }

    pub(crate) fn inv_rep(&self, point: usize) -> Option<&Permutation> {
        self.inv_reps[point].as_ref()
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a chain for `⟨generators⟩`. The base starts with those points of
    /// `preferred_base` (in order) that the group moves; without a preferred
    /// base it starts at the smallest moved point.
    pub fn build(degree: usize, generators: &[Permutation], preferred_base: &[usize]) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let moved = |p: usize| gens.iter().any(|g| g.image(p) != p);
        let mut base: Vec<usize> = Vec::new();
        for &p in preferred_base {
            if moved(p) && !base.contains(&p) {
                base.push(p);
            }
        }
        if base.is_empty() {
            if let Some(p) = (0..degree).find(|&p| moved(p)) {
                base.push(p);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.moved_points()[0]);
            }
        }

        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let fixing: Vec<Permutation> = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.image(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(degree, b, fixing));
        }
        let mut chain = StabilizerChain { degree, levels };
        chain.complete();
        chain
    }

    /// Adds Schreier-generator residues until every level is closed.
    fn complete(&mut self) {
        let mut l = self.levels.len() as isize - 1;
        while l >= 0 {
            let li = l as usize;
            match self.find_residue(li) {
                None => l -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let p = h.moved_points()[0];
                        self.levels.push(Level::new(self.degree, p, Vec::new()));
                    }
                    for m in li + 1..=j {
                        self.levels[m].generators.push(h.clone());
                        self.levels[m].rebuild_orbit();
                    }
                    l = j as isize;
                }
            }
        }
    }

    fn find_residue(&self, li: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[li];
        for &beta in &level.orbit {
            let u = level.rep(beta).unwrap();
            for s in &level.generators {
                let gamma = s.image(beta);
                let sg = u.mul_unchecked(s).mul_unchecked(level.inv_rep(gamma).unwrap());
                if sg.is_identity() {
                    continue;
                }
                let (h, j) = self.sift_from(li + 1, sg);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    fn sift_from(&self, start: usize, mut g: Permutation) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(level.base_point);
            match level.inv_rep(beta) {
                Some(inv) => g = g.mul_unchecked(inv),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    /// Strips `g` through the chain, returning the residue and the level at
    /// which stripping stopped (`levels().len()` if it went all the way).
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(0, g.clone())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, j) = self.sift(g);
        j == self.levels.len() && h.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Generators of the stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels.get(depth).map(|l| l.generators.clone()).unwrap_or_default()
    }

    /// The chain of the stabilizer of the first `depth` base points.
    pub fn tail(&self, depth: usize) -> StabilizerChain {
        StabilizerChain { degree: self.degree, levels: self.levels[depth.min(self.levels.len())..].to_vec() }
    }

    /// Points fixed by the stabilizer of the first `depth` base points.
    pub(crate) fn fixed_by_level(&self, depth: usize) -> Vec<bool> {
        let mut fixed = vec![true; self.degree];
        if let Some(level) = self.levels.get(depth) {
            for g in &level.generators {
                for (x, f) in fixed.iter_mut().enumerate() {
                    if g.image(x) != x {
                        *f = false;
                    }
                }
            }
        }
        fixed
    }
}
