mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbreak::catalog::{catalog, Sweep};
use symbreak::sums::{decompose, direct_sum, find_conjugator, parallel_multiple, parallel_sum, IsoSpec};
use symbreak::symmetry::{distinguishing_number, Distinguishing};
use symbreak::{PermGroup, Permutation};

fn random_blocks<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let parts = rng.gen_range(2..=3);
    let mut cuts: Vec<usize> = (1..n).collect::<Vec<_>>().choose_multiple(rng, parts - 1).copied().collect();
    cuts.sort_unstable();
    cuts.push(n);
    let mut start = 0;
    cuts.into_iter()
        .map(|end| {
            let block = points[start..end].to_vec();
            start = end;
            block
        })
        .collect()
}

fn random_word<R: Rng>(gens: &[Permutation], len: usize, rng: &mut R) -> Permutation {
    let mut p = Permutation::identity(gens[0].degree());
    for _ in 0..len {
        p = &p * gens.choose(rng).unwrap();
    }
    p
}

#[test]
fn decomposition_round_trips_on_random_intransitive_groups() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for trial in 0..50 {
        let blocks = random_blocks(8, &mut rng);
        let gens = (0..rng.gen_range(2..=3)).map(|_| common::random_block_perm(&blocks, 8, &mut rng)).collect();
        let g = PermGroup::new(8, gens).unwrap();
        let orbits = g.orbits();
        assert!(orbits.len() >= 2);
        let x1 = orbits[0].clone();
        let x2: Vec<usize> = orbits[1..].concat();
        let d = decompose(&g, &x1, &x2).unwrap();
        let back = d.reconstruct().unwrap();
        assert_eq!(back.order(), g.order(), "trial {trial}");
        assert!(back.same_group(&g), "trial {trial}");
        assert!(g.generators().iter().all(|s| back.contains(s).unwrap()));
        assert!(back.generators().iter().all(|s| g.contains(s).unwrap()));
    }
}

fn intransitive_arrangements() -> Vec<(String, PermGroup, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut out = Vec::new();
    for e in catalog().entries_in(Sweep::Doubled) {
        let h = e.group().unwrap();
        let n = h.degree();
        out.push((format!("{}^(2)", e.id), parallel_multiple(&h, 2), n));
        let c = common::random_perm(n, &mut rng);
        let iso = IsoSpec::conjugation(&h, &c);
        let twisted = IsoSpec::new(h.clone(), h.conjugate_by(&c), iso.pairs().to_vec()).unwrap();
        out.push((format!("{} with a relabelled copy", e.id), parallel_sum(&twisted).unwrap(), n));
    }
    for sweep in [Sweep::Twisted, Sweep::Mixed, Sweep::AlternatingTwist] {
        for e in catalog().entries_in(sweep) {
            let g = e.group().unwrap();
            let first = e.claims.blocks.as_ref().map(|b| b[0]).unwrap_or(g.degree() / 2);
            out.push((e.id.clone(), g, first));
        }
    }
    out
}

#[test]
fn simple_constituents_have_trivial_kernels() {
    for (name, g, n1) in intransitive_arrangements() {
        assert!(g.fixed_points().is_empty(), "{name}");
        let x1: Vec<usize> = (0..n1).collect();
        let x2: Vec<usize> = (n1..g.degree()).collect();
        let d = decompose(&g, &x1, &x2).unwrap();
        assert!(d.is_parallel(), "{name}");
        assert!(d.constituents.0.is_perfect() && d.constituents.1.is_perfect(), "{name}");
    }
}

#[test]
fn parallel_sum_is_commutative_up_to_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (name, g) in common::groups_up_to(200_000) {
        let n = g.degree();
        let c = common::random_perm(n, &mut rng);
        let w = random_word(g.generators(), 5, &mut rng);
        let k = g.conjugate_by(&c);
        let pairs = g.generators().iter().map(|s| (s.clone(), s.conjugate_by(&w).conjugate_by(&c))).collect();
        let iso = IsoSpec::new(g.clone(), k, pairs).unwrap();
        let hk = parallel_sum(&iso).unwrap();
        let kh = parallel_sum(&iso.inverse()).unwrap();
        assert_eq!(hk.order(), kh.order(), "{name}");
        let sizes = |x: &PermGroup| {
            let mut s: Vec<usize> = x.orbits().iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes(&hk), sizes(&kh), "{name}");
        let first: Vec<usize> = (0..n).collect();
        let second: Vec<usize> = (n..2 * n).collect();
        assert!(hk.pointwise_stabilizer(&first).is_trivial() && hk.pointwise_stabilizer(&second).is_trivial());
        // inner twist composed with relabelling is induced by a permutation
        assert!(find_conjugator(&iso).is_some(), "{name}");
    }
}

#[test]
fn parallel_sums_break_symmetry_no_worse_than_their_summands() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for trial in 0..30 {
        let n = rng.gen_range(3..=8);
        let blocks = random_blocks(n, &mut rng);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=2)).map(|_| common::random_block_perm(&blocks, n, &mut rng)).collect();
        let h = PermGroup::new(n, gens).unwrap();
        let c = common::random_perm(n, &mut rng);
        let w = random_word(h.generators(), 4, &mut rng);
        let pairs = h.generators().iter().map(|s| (s.clone(), s.conjugate_by(&w).conjugate_by(&c))).collect();
        let iso = IsoSpec::new(h.clone(), h.conjugate_by(&c), pairs).unwrap();
        let sum = parallel_sum(&iso).unwrap();
        let exact = |g: &PermGroup, k: u32| match distinguishing_number(g, k, 10_000_000) {
            Distinguishing::Exact { value, .. } => value,
            other => panic!("trial {trial}: {other:?}"),
        };
        let dh = exact(&h, n as u32);
        let dk = exact(iso.target(), n as u32);
        assert_eq!(dh, dk, "trial {trial}: conjugate groups");
        let ds = exact(&sum, dh.min(dk));
        assert!(ds <= dh.min(dk), "trial {trial}");
    }
}

#[test]
fn direct_sum_orders_multiply() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..20 {
        let a = PermGroup::new(5, vec![common::random_perm(5, &mut rng)]).unwrap();
        let b = PermGroup::new(4, vec![common::random_perm(4, &mut rng), common::random_perm(4, &mut rng)]).unwrap();
        let s = direct_sum(&a, &b);
        assert_eq!(s.order(), a.order() * b.order());
        let d = decompose(&s, &(0..5).collect::<Vec<_>>(), &(5..9).collect::<Vec<_>>()).unwrap();
        assert!(d.kernels.0.same_group(&a) && d.kernels.1.same_group(&b));
    }
}
