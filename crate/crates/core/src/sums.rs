//! Direct, subdirect and parallel sums of permutation groups, parallel
//! multiples, and the decomposition of intransitive groups into subdirect
//! sums of their constituents.
//!
//! A sum of a group on `n` points and a group on `m` points acts on
//! `n + m` points; the second summand occupies `n..n+m`.

use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// An isomorphism `source → target` given by images of a generating set of
/// `source`. Use [`IsoSpec::validate`] before trusting it; sum constructors
/// refuse unvalidated or invalid specs.
#[derive(Clone, Debug)]
pub struct IsoSpec {
    source: PermGroup,
    target: PermGroup,
    pairs: Vec<(Permutation, Permutation)>,
    valid: OnceLock<bool>,
}

impl IsoSpec {
    pub fn new(source: PermGroup, target: PermGroup, pairs: Vec<(Permutation, Permutation)>) -> Result<Self> {
        for (s, t) in &pairs {
            if s.degree() != source.degree() {
                return Err(Error::DegreeMismatch { left: source.degree(), right: s.degree() });
            }
            if t.degree() != target.degree() {
                return Err(Error::DegreeMismatch { left: target.degree(), right: t.degree() });
            }
        }
        Ok(IsoSpec { source, target, pairs, valid: OnceLock::new() })
    }

    /// Pairs given as 1-based cycle strings.
    pub fn from_cycles(source: PermGroup, target: PermGroup, pairs: &[(&str, &str)]) -> Result<Self> {
        let parsed = pairs
            .iter()
            .map(|(s, t)| {
                Ok((
                    Permutation::parse_cycles(s, source.degree())?,
                    Permutation::parse_cycles(t, target.degree())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, parsed)
    }

    /// The identity automorphism of `group` on its own generators.
    pub fn identity(group: &PermGroup) -> Self {
        let pairs = group.generators().iter().map(|g| (g.clone(), g.clone())).collect();
        IsoSpec { source: group.clone(), target: group.clone(), pairs, valid: OnceLock::new() }
    }

    /// The automorphism `g ↦ c⁻¹gc` of `group`, for `c` normalizing it.
    pub fn conjugation(group: &PermGroup, c: &Permutation) -> Self {
        let pairs = group.generators().iter().map(|g| (g.clone(), g.conjugate_by(c))).collect();
        IsoSpec { source: group.clone(), target: group.clone(), pairs, valid: OnceLock::new() }
    }

    /// Splits a group acting on `0..n1` and `n1..degree` in lockstep into the
    /// two restrictions of its generators.
    pub fn from_blocks(group: &PermGroup, n1: usize) -> Result<Self> {
        let first: Vec<usize> = (0..n1).collect();
        let second: Vec<usize> = (n1..group.degree()).collect();
        let mut pairs = Vec::new();
        for g in group.generators() {
            let a = g.restrict(&first).ok_or_else(|| Error::NotOrbitClosed(format!("{g} does not fix block 1..={n1}")))?;
            let b = g.restrict(&second).ok_or_else(|| Error::NotOrbitClosed(format!("{g} does not fix block 1..={n1}")))?;
            pairs.push((a, b));
        }
        let source = PermGroup::new(n1, pairs.iter().map(|p| p.0.clone()).collect())?;
        let target = PermGroup::new(group.degree() - n1, pairs.iter().map(|p| p.1.clone()).collect())?;
        Self::new(source, target, pairs)
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn pairs(&self) -> &[(Permutation, Permutation)] {
        &self.pairs
    }

    pub fn inverse(&self) -> IsoSpec {
        IsoSpec {
            source: self.target.clone(),
            target: self.source.clone(),
            pairs: self.pairs.iter().map(|(s, t)| (t.clone(), s.clone())).collect(),
            valid: OnceLock::new(),
        }
    }

    /// `(sᵢ, φ(sᵢ))` on the disjoint union.
    pub fn combined_generators(&self) -> Vec<Permutation> {
        self.pairs.iter().map(|(s, t)| s.disjoint_sum(t)).collect()
    }

    /// Decides whether the pairing extends to an isomorphism. Builds
    /// `K = ⟨(sᵢ, tᵢ)⟩` and requires both block kernels of `K` to be trivial
    /// and both projections to be onto.
    pub fn validate(&self) -> bool {
        *self.valid.get_or_init(|| self.check())
    }

    fn check(&self) -> bool {
        let n = self.source.degree();
        let m = self.target.degree();
        let src: Vec<Permutation> = self.pairs.iter().map(|p| p.0.clone()).collect();
        let tgt: Vec<Permutation> = self.pairs.iter().map(|p| p.1.clone()).collect();
        let (Ok(src), Ok(tgt)) = (PermGroup::new(n, src), PermGroup::new(m, tgt)) else {
            return false;
        };
        if !src.same_group(&self.source) || !tgt.same_group(&self.target) {
            return false;
        }
        let k = PermGroup::new(n + m, self.combined_generators()).expect("degrees checked");
        let first: Vec<usize> = (0..n).collect();
        let second: Vec<usize> = (n..n + m).collect();
        k.pointwise_stabilizer(&first).is_trivial() && k.pointwise_stabilizer(&second).is_trivial()
    }
}

pub fn validate_isomorphism(iso: &IsoSpec) -> bool {
    iso.validate()
}

/// `G ⊕ H`: independent action on the disjoint union.
pub fn direct_sum(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let n = g.degree() + h.degree();
    let mut gens: Vec<Permutation> = g.generators().iter().map(|x| x.shifted(0, n)).collect();
    gens.extend(h.generators().iter().map(|y| y.shifted(g.degree(), n)));
    let sum = PermGroup::new(n, gens).expect("shifted generators have sum degree");
    assert_eq!(sum.order(), g.order() * h.order(), "direct sum order");
    sum
}

/// `H ‖_φ K`: both summands act in lockstep through the isomorphism.
pub fn parallel_sum(iso: &IsoSpec) -> Result<PermGroup> {
    if !iso.validate() {
        return Err(Error::InvalidIsomorphism("pairing does not extend to an isomorphism".into()));
    }
    let n = iso.source.degree() + iso.target.degree();
    let sum = PermGroup::new(n, iso.combined_generators())?;
    assert_eq!(sum.order(), iso.source.order(), "parallel sum order");
    Ok(sum)
}

/// `G⁽ʳ⁾`: `G` acting in parallel on `r` copies of its domain.
pub fn parallel_multiple(g: &PermGroup, r: usize) -> PermGroup {
    assert!(r >= 1, "parallel multiple needs r >= 1");
    let n = g.degree();
    let gens = g
        .generators()
        .iter()
        .map(|x| {
            let mut images = Vec::with_capacity(n * r);
            for copy in 0..r {
                images.extend(x.images().map(|y| y + copy * n));
            }
            Permutation::from_images(images).expect("copies of a bijection")
        })
        .collect();
    let multiple = PermGroup::new(n * r, gens).expect("degree n*r");
    assert_eq!(multiple.order(), g.order(), "parallel multiple order");
    multiple
}

/// Data for `G₁[H₁] ⊕_φ G₂[H₂]`. The quotient isomorphism is given by element
/// pairs `(rᵢ, sᵢ)` with `φ(H₁rᵢ) = H₂sᵢ`; together with `H₁` the `rᵢ` must
/// generate `G₁` (a transversal of `H₁` in `G₁` always does).
#[derive(Clone, Debug)]
pub struct SubdirectSpec {
    pub g1: PermGroup,
    pub h1: PermGroup,
    pub g2: PermGroup,
    pub h2: PermGroup,
    pub pairs: Vec<(Permutation, Permutation)>,
}

impl SubdirectSpec {
    /// Checks normality, equal quotient orders, and pair membership.
    pub fn check(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::SubdirectInvariant(s.to_string()));
        if self.h1.degree() != self.g1.degree() || self.h2.degree() != self.g2.degree() {
            return bad("kernel degree differs from its group");
        }
        if !self.h1.is_normal_in(&self.g1) {
            return bad("H1 is not a normal subgroup of G1");
        }
        if !self.h2.is_normal_in(&self.g2) {
            return bad("H2 is not a normal subgroup of G2");
        }
        let q1 = self.g1.order() / self.h1.order();
        let q2 = self.g2.order() / self.h2.order();
        if q1 != q2 {
            return bad("quotients G1/H1 and G2/H2 have different orders");
        }
        for (r, s) in &self.pairs {
            if r.degree() != self.g1.degree() || s.degree() != self.g2.degree() {
                return bad("pair degree mismatch");
            }
            if !self.g1.chain().contains(r) || !self.g2.chain().contains(s) {
                return bad("pair element outside its group");
            }
        }
        Ok(())
    }
}

/// `G₁[H₁] ⊕_φ G₂[H₂]`, of order `|G₁|·|H₂|`.
pub fn subdirect_sum(spec: &SubdirectSpec) -> Result<PermGroup> {
    spec.check()?;
    let n1 = spec.g1.degree();
    let n = n1 + spec.g2.degree();
    let mut gens: Vec<Permutation> = spec.h1.generators().iter().map(|h| h.shifted(0, n)).collect();
    gens.extend(spec.h2.generators().iter().map(|k| k.shifted(n1, n)));
    gens.extend(spec.pairs.iter().map(|(r, s)| r.disjoint_sum(s)));
    let sum = PermGroup::new(n, gens)?;
    let expected: BigUint = spec.g1.order() * spec.h2.order();
    if sum.order() != expected {
        return Err(Error::SubdirectInvariant(format!(
            "pairs are not coset-consistent: order {} instead of {expected}",
            sum.order()
        )));
    }
    let first: Vec<usize> = (0..n1).collect();
    let proj = PermGroup::new(n1, sum.generators().iter().map(|g| g.restrict(&first).unwrap()).collect())?;
    if !proj.same_group(&spec.g1) {
        return Err(Error::SubdirectInvariant("H1 and the pairs do not generate G1".into()));
    }
    Ok(sum)
}

/// A group split along two invariant point sets.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `(X₁, X₂)`, each sorted; constituent points are relabelled in this order.
    pub block_split: (Vec<usize>, Vec<usize>),
    pub constituents: (PermGroup, PermGroup),
    pub kernels: (PermGroup, PermGroup),
    /// `(g|X₁, g|X₂)` for each generator of the original group.
    pub iso_pairs: Vec<(Permutation, Permutation)>,
}

impl Decomposition {
    pub fn subdirect_spec(&self) -> SubdirectSpec {
        SubdirectSpec {
            g1: self.constituents.0.clone(),
            h1: self.kernels.0.clone(),
            g2: self.constituents.1.clone(),
            h2: self.kernels.1.clone(),
            pairs: self.iso_pairs.clone(),
        }
    }

    /// Both kernels trivial, so the group is a parallel sum.
    pub fn is_parallel(&self) -> bool {
        self.kernels.0.is_trivial() && self.kernels.1.is_trivial()
    }

    /// Rebuilds the subdirect sum and maps it back onto the original points.
    pub fn reconstruct(&self) -> Result<PermGroup> {
        let sum = subdirect_sum(&self.subdirect_spec())?;
        let map: Vec<usize> = self.block_split.0.iter().chain(self.block_split.1.iter()).copied().collect();
        let gens = sum.generators().iter().map(|g| g.relabel(&map)).collect();
        PermGroup::new(sum.degree(), gens)
    }
}

/// Splits `g` along `X₁ ∪ X₂`. Both sets must be unions of orbits and
/// partition the domain.
pub fn decompose(g: &PermGroup, x1: &[usize], x2: &[usize]) -> Result<Decomposition> {
    let n = g.degree();
    let mut side = vec![None; n];
    for (s, set) in [x1, x2].iter().enumerate() {
        for &x in set.iter() {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x + 1, degree: n });
            }
            if side[x].is_some() {
                return Err(Error::NotOrbitClosed(format!("point {} listed twice", x + 1)));
            }
            side[x] = Some(s);
        }
    }
    if let Some(x) = side.iter().position(|s| s.is_none()) {
        return Err(Error::NotOrbitClosed(format!("point {} in neither block", x + 1)));
    }
    let mut a = x1.to_vec();
    let mut b = x2.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    let mut pairs = Vec::new();
    for gen in g.generators() {
        match (gen.restrict(&a), gen.restrict(&b)) {
            (Some(p), Some(q)) => pairs.push((p, q)),
            _ => return Err(Error::NotOrbitClosed(format!("{gen} moves points between blocks"))),
        }
    }
    let g1 = PermGroup::new(a.len(), pairs.iter().map(|p| p.0.clone()).collect())?;
    let g2 = PermGroup::new(b.len(), pairs.iter().map(|p| p.1.clone()).collect())?;
    let fix_b = g.pointwise_stabilizer(&b);
    let fix_a = g.pointwise_stabilizer(&a);
    let h1 = PermGroup::new(a.len(), fix_b.generators().iter().map(|h| h.restrict(&a).unwrap()).collect())?;
    let h2 = PermGroup::new(b.len(), fix_a.generators().iter().map(|k| k.restrict(&b).unwrap()).collect())?;
    Ok(Decomposition { block_split: (a, b), constituents: (g1, g2), kernels: (h1, h2), iso_pairs: pairs })
}

/// The restriction of a group to its moved points.
#[derive(Clone, Debug)]
pub struct Stripped {
    pub group: PermGroup,
    /// Original points, in order; new point `i` is `points[i]`.
    pub points: Vec<usize>,
    pub stripped: usize,
}

pub fn strip_fixed_points(g: &PermGroup) -> Stripped {
    let points = g.moved_points();
    let gens = g.generators().iter().map(|x| x.restrict(&points).unwrap()).filter(|x| !x.is_identity()).collect();
    let group = PermGroup::new(points.len(), gens).expect("restricted degree");
    Stripped { stripped: g.degree() - points.len(), group, points }
}

/// A permutation `c` of the common domain with `c⁻¹sc = φ(s)` for every
/// paired generator, if one exists. Backtracks over the image of one point per
/// orbit of the source (largest orbits first); each choice propagates along
/// `(x·s)·c = (x·c)·φ(s)`.
pub fn find_conjugator(iso: &IsoSpec) -> Option<Permutation> {
    let n = iso.source.degree();
    if n != iso.target.degree() {
        return None;
    }
    let src_gens: Vec<&Permutation> = iso.pairs.iter().map(|p| &p.0).collect();
    let tgt_gens: Vec<&Permutation> = iso.pairs.iter().map(|p| &p.1).collect();
    let src_orbits = orbit_sizes(n, &src_gens);
    let tgt_orbits = orbit_sizes(n, &tgt_gens);
    let mut reps: Vec<usize> = Vec::new();
    let mut covered = vec![false; n];
    for x in 0..n {
        if !covered[x] {
            reps.push(x);
            for y in orbit_of(x, &src_gens) {
                covered[y] = true;
            }
        }
    }
    reps.sort_by_key(|&x| (std::cmp::Reverse(src_orbits[x]), x));

    struct State<'a> {
        map: Vec<Option<usize>>,
        used: Vec<bool>,
        trail: Vec<usize>,
        src: &'a [&'a Permutation],
        tgt: &'a [&'a Permutation],
    }
    impl State<'_> {
        fn propagate(&mut self, x: usize, y: usize) -> bool {
            let mut stack = vec![(x, y)];
            while let Some((x, y)) = stack.pop() {
                match self.map[x] {
                    Some(z) if z == y => continue,
                    Some(_) => return false,
                    None => {
                        if self.used[y] {
                            return false;
                        }
                        self.map[x] = Some(y);
                        self.used[y] = true;
                        self.trail.push(x);
                        for (s, t) in self.src.iter().zip(self.tgt) {
                            stack.push((s.image(x), t.image(y)));
                        }
                    }
                }
            }
            true
        }
        fn undo(&mut self, mark: usize) {
            while self.trail.len() > mark {
                let x = self.trail.pop().unwrap();
                let y = self.map[x].take().unwrap();
                self.used[y] = false;
            }
        }
    }
    fn dfs(st: &mut State, reps: &[usize], sizes: (&[usize], &[usize]), idx: usize) -> bool {
        if idx == reps.len() {
            return true;
        }
        let x = reps[idx];
        for y in 0..st.map.len() {
            if st.used[y] || sizes.0[x] != sizes.1[y] {
                continue;
            }
            let mark = st.trail.len();
            if st.propagate(x, y) && dfs(st, reps, sizes, idx + 1) {
                return true;
            }
            st.undo(mark);
        }
        false
    }

    let mut st = State { map: vec![None; n], used: vec![false; n], trail: Vec::new(), src: &src_gens, tgt: &tgt_gens };
    if dfs(&mut st, &reps, (&src_orbits, &tgt_orbits), 0) {
        let images = st.map.into_iter().map(|y| y.unwrap()).collect();
        Some(Permutation::from_images(images).expect("injective map on a finite set"))
    } else {
        None
    }
}

/// Whether the automorphism `iso` of `g` is induced by conjugation with a
/// permutation of the domain.
pub fn is_permutation_automorphism(g: &PermGroup, iso: &IsoSpec) -> Result<bool> {
    if !iso.validate() {
        return Err(Error::InvalidIsomorphism("pairing does not extend to an isomorphism".into()));
    }
    if !iso.source.same_group(g) || !iso.target.same_group(g) {
        return Err(Error::InvalidIsomorphism("source and target must both equal the group".into()));
    }
    Ok(find_conjugator(iso).is_some())
}

fn orbit_of(x: usize, gens: &[&Permutation]) -> Vec<usize> {
    let mut orbit = vec![x];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        head += 1;
        for g in gens {
            let z = g.image(y);
            if !orbit.contains(&z) {
                orbit.push(z);
            }
        }
    }
    orbit
}

fn orbit_sizes(n: usize, gens: &[&Permutation]) -> Vec<usize> {
    let mut sizes = vec![0; n];
    for x in 0..n {
        if sizes[x] == 0 {
            let orbit = orbit_of(x, gens);
            for &y in &orbit {
                sizes[y] = orbit.len();
            }
        }
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, symmetric};

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    fn a6_psi() -> IsoSpec {
        let a6 = group(6, &["(2,3)(4,5)", "(1,2,3,4)(5,6)"]);
        IsoSpec::from_cycles(
            a6.clone(),
            a6,
            &[("(2,3)(4,5)", "(2,5)(3,4)"), ("(1,2,3,4)(5,6)", "(1,2,3,4)(5,6)")],
        )
        .unwrap()
    }

    #[test]
    fn direct_sums() {
        let c2 = cyclic(2);
        assert_eq!(direct_sum(&c2, &c2).order(), BigUint::from(4u32));
        let s6 = symmetric(6);
        assert_eq!(direct_sum(&s6, &s6).order(), BigUint::from(720u32 * 720));
        let with_fixed = direct_sum(&alternating(5), &PermGroup::trivial(3));
        assert_eq!(with_fixed.fixed_points(), vec![5, 6, 7]);
    }

    #[test]
    fn a6_twisted_parallel_sum() {
        let iso = a6_psi();
        assert!(iso.validate());
        let g = parallel_sum(&iso).unwrap();
        assert_eq!(g.order(), BigUint::from(360u32));
        assert_eq!(g.orbits().len(), 2);
        assert!(g.pointwise_stabilizer(&(0..6).collect::<Vec<_>>()).is_trivial());
        assert!(g.pointwise_stabilizer(&(6..12).collect::<Vec<_>>()).is_trivial());
        assert_eq!(is_permutation_automorphism(iso.source(), &iso), Ok(false));
    }

    #[test]
    fn l25_parallel_a5() {
        let g = group(11, &["(1,3,4)(2,5,6)(8,9,11)", "(1,2)(3,4)(7,8)(9,10)"]);
        let iso = IsoSpec::from_blocks(&g, 6).unwrap();
        assert!(iso.validate());
        let sum = parallel_sum(&iso).unwrap();
        assert_eq!(sum.order(), BigUint::from(60u32));
        assert_eq!(sum.degree(), 11);
    }

    #[test]
    fn identity_pairing_is_parallel_multiple() {
        let g = alternating(5);
        let iso = IsoSpec::identity(&g);
        assert!(validate_isomorphism(&iso));
        assert!(parallel_sum(&iso).unwrap().same_group(&parallel_multiple(&g, 2)));
        assert_eq!(is_permutation_automorphism(&g, &iso), Ok(true));
    }

    #[test]
    fn invalid_pairing_rejected() {
        // C6 = <(1..6)>: send the generator to an element of order 2
        let c6 = cyclic(6);
        let iso = IsoSpec::from_cycles(c6.clone(), c6, &[("(1,2,3,4,5,6)", "(1,4)(2,5)(3,6)")]).unwrap();
        assert!(!iso.validate());
        assert!(matches!(parallel_sum(&iso), Err(Error::InvalidIsomorphism(_))));
        assert!(IsoSpec::from_cycles(cyclic(3), cyclic(4), &[("(1,2,3)", "(1,2,3,4,5)")]).is_err());
    }

    #[test]
    fn inner_automorphism_is_permutation() {
        let g = alternating(6);
        let c = Permutation::parse_cycles("(1,2,3)", 6).unwrap();
        let iso = IsoSpec::conjugation(&g, &c);
        assert_eq!(is_permutation_automorphism(&g, &iso), Ok(true));
        let conj = find_conjugator(&iso).unwrap();
        for (s, t) in iso.pairs() {
            assert_eq!(&s.conjugate_by(&conj), t);
        }
    }

    #[test]
    fn multiples() {
        let c3 = cyclic(3);
        let m = parallel_multiple(&c3, 3);
        assert_eq!(m.generators()[0], Permutation::parse_cycles("(1,2,3)(4,5,6)(7,8,9)", 9).unwrap());
        assert!(parallel_multiple(&c3, 1).same_group(&c3));
        assert_eq!(parallel_multiple(&alternating(5), 4).order(), BigUint::from(60u32));
    }

    #[test]
    fn subdirect_cases() {
        let s3 = symmetric(3);
        let a3 = alternating(3);
        // H = G on both sides: the direct sum
        let spec = SubdirectSpec {
            g1: s3.clone(),
            h1: s3.clone(),
            g2: s3.clone(),
            h2: s3.clone(),
            pairs: vec![],
        };
        assert!(subdirect_sum(&spec).unwrap().same_group(&direct_sum(&s3, &s3)));
        // trivial kernels: the parallel sum
        let spec = SubdirectSpec {
            g1: s3.clone(),
            h1: PermGroup::trivial(3),
            g2: s3.clone(),
            h2: PermGroup::trivial(3),
            pairs: s3.generators().iter().map(|g| (g.clone(), g.clone())).collect(),
        };
        assert!(subdirect_sum(&spec).unwrap().same_group(&parallel_multiple(&s3, 2)));
        // S3[A3] ⊕ S3[A3] over C2
        let t = Permutation::parse_cycles("(1,2)", 3).unwrap();
        let spec = SubdirectSpec { g1: s3.clone(), h1: a3.clone(), g2: s3.clone(), h2: a3.clone(), pairs: vec![(t.clone(), t)] };
        assert_eq!(subdirect_sum(&spec).unwrap().order(), BigUint::from(18u32));
        // H1 not normal
        let spec = SubdirectSpec {
            g1: s3.clone(),
            h1: group(3, &["(1,2)"]),
            g2: s3.clone(),
            h2: group(3, &["(1,2)"]),
            pairs: vec![],
        };
        assert!(matches!(subdirect_sum(&spec), Err(Error::SubdirectInvariant(_))));
    }

    #[test]
    fn decompositions() {
        let iso = a6_psi();
        let g = parallel_sum(&iso).unwrap();
        let d = decompose(&g, &(0..6).collect::<Vec<_>>(), &(6..12).collect::<Vec<_>>()).unwrap();
        assert!(d.is_parallel());
        assert_eq!(d.constituents.0.order(), BigUint::from(360u32));
        assert_eq!(d.constituents.1.order(), BigUint::from(360u32));
        assert!(d.reconstruct().unwrap().same_group(&g));

        let s3c2 = direct_sum(&symmetric(3), &cyclic(2));
        let d = decompose(&s3c2, &[0, 1, 2], &[3, 4]).unwrap();
        assert!(d.kernels.0.same_group(&d.constituents.0));
        assert!(d.kernels.1.same_group(&d.constituents.1));
        assert_eq!(d.constituents.0.order(), BigUint::from(6u32));

        let g = group(4, &["(1,2)(3,4)"]);
        let d = decompose(&g, &[0, 1], &[2, 3]).unwrap();
        assert!(d.is_parallel());
        assert_eq!(d.constituents.0.order(), BigUint::from(2u32));

        assert!(matches!(decompose(&g, &[0, 2], &[1, 3]), Err(Error::NotOrbitClosed(_))));
        assert!(matches!(decompose(&g, &[0, 1], &[2]), Err(Error::NotOrbitClosed(_))));
    }

    #[test]
    fn stripping() {
        let g = group(5, &["(1,2)"]);
        let s = strip_fixed_points(&g);
        assert_eq!(s.stripped, 3);
        assert_eq!(s.group.degree(), 2);
        assert_eq!(s.group.order(), BigUint::from(2u32));
        let a5 = alternating(5);
        let s = strip_fixed_points(&a5);
        assert_eq!(s.stripped, 0);
        assert!(s.group.same_group(&a5));
        let s = strip_fixed_points(&PermGroup::trivial(4));
        assert_eq!(s.group.degree(), 0);
        assert_eq!(s.stripped, 4);
    }

    #[test]
    fn commutativity_up_to_relabelling() {
        let iso = a6_psi();
        let a = parallel_sum(&iso).unwrap();
        let b = parallel_sum(&iso.inverse()).unwrap();
        assert_eq!(a.order(), b.order());
        let sizes = |g: &PermGroup| {
            let mut s: Vec<usize> = g.orbits().iter().map(|o| o.len()).collect();
            s.sort();
            s
        };
        assert_eq!(sizes(&a), sizes(&b));
    }
}
