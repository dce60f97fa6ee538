#![allow(dead_code)]

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use symbreak::catalog::{catalog, Sweep};
use symbreak::group::{alternating, cyclic, symmetric};
use symbreak::{PermGroup, Permutation};

pub fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A random permutation preserving each block of `blocks`.
pub fn random_block_perm<R: Rng>(blocks: &[Vec<usize>], n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for b in blocks {
        let mut shuffled = b.clone();
        shuffled.shuffle(rng);
        for (x, y) in b.iter().zip(shuffled) {
            images[*x] = y;
        }
    }
    Permutation::from_images(images).unwrap()
}

/// Elements of `g` mapping `set` onto itself, by brute force.
pub fn filter_setwise(elements: &[Permutation], set: &[usize]) -> Vec<Permutation> {
    elements.iter().filter(|p| set.iter().all(|&x| set.contains(&p.image(x)))).cloned().collect()
}

pub fn filter_labels(elements: &[Permutation], labels: &[u32]) -> usize {
    elements.iter().filter(|p| (0..labels.len()).all(|x| labels[p.image(x)] == labels[x])).count()
}

/// Catalog groups, sums and standard groups of order at most `limit`.
pub fn groups_up_to(limit: u64) -> Vec<(String, PermGroup)> {
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    for e in catalog().entries() {
        let g = e.group().unwrap();
        if g.order() <= BigUint::from(limit) {
            out.push((e.id.clone(), g.clone()));
            if e.sweep == Sweep::Doubled {
                out.push((format!("{}^(2)", e.id), symbreak::sums::parallel_multiple(&g, 2)));
            }
        }
    }
    for n in 3..=8 {
        out.push((format!("A{n}"), alternating(n)));
        out.push((format!("S{n}"), symmetric(n)));
        out.push((format!("C{n}"), cyclic(n)));
    }
    out.retain(|(_, g)| g.order() <= BigUint::from(limit));
    out
}
