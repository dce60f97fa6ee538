//! Permutations of a finite domain.
//!
//! Points are stored 0-based; cycle notation is read and written 1-based.
//! Composition is the right action: `a.mul(b)` maps `x` to `(x·a)·b`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n || seen[y] {
                return Err(Error::NotBijection);
            }
            seen[y] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|y| y as u32).collect() })
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x + 1, degree });
                }
                if seen[x] {
                    return Err(Error::RepeatedPoint(x + 1));
                }
                seen[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,5)(3,4,6)`.
    ///
    /// Grammar: `perm := "()" | cycle+`, `cycle := "(" int ("," int)+ ")"`.
    /// Whitespace is ignored and the empty string is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let bytes: Vec<(usize, u8)> =
            text.bytes().enumerate().filter(|(_, b)| !b.is_ascii_whitespace()).collect();
        if bytes.is_empty() || (bytes.len() == 2 && bytes[0].1 == b'(' && bytes[1].1 == b')') {
            return Ok(Self::identity(degree));
        }
        let end_pos = text.len();
        let mut cycles = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let (pos, b) = bytes[i];
            if b != b'(' {
                return Err(Error::Malformed { position: pos, reason: "expected `(`" });
            }
            i += 1;
            let mut cycle = Vec::new();
            loop {
                let start = i;
                let mut value: usize = 0;
                while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i].1 - b'0') as usize))
                        .ok_or(Error::Malformed { position: bytes[i].0, reason: "integer overflow" })?;
                    i += 1;
                }
                if i == start {
                    let position = bytes.get(i).map_or(end_pos, |b| b.0);
                    return Err(Error::Malformed { position, reason: "expected integer" });
                }
                if value == 0 || value > degree {
                    return Err(Error::PointOutOfRange { point: value, degree });
                }
                cycle.push(value - 1);
                match bytes.get(i) {
                    Some((_, b',')) => i += 1,
                    Some((_, b')')) => {
                        i += 1;
                        break;
                    }
                    Some(&(position, _)) => {
                        return Err(Error::Malformed { position, reason: "expected `,` or `)`" })
                    }
                    None => return Err(Error::Malformed { position: end_pos, reason: "unclosed cycle" }),
                }
            }
            if cycle.len() < 2 {
                return Err(Error::Malformed { position: pos, reason: "cycle needs at least two points" });
            }
            cycles.push(cycle);
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&y| y as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// `x ↦ (x·self)·other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&y| other.images[y as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().mul_unchecked(self).mul_unchecked(other)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().fold(1u64, |acc, c| {
            let l = c.len() as u64;
            acc / gcd(acc, l) * l
        })
    }

    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.image(x) != x).collect()
    }

    /// Canonical 1-based cycle notation; `()` for the identity.
    pub fn render_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&(x + 1).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Embeds into a larger domain, acting on `offset..offset+degree` and
    /// fixing everything else.
    pub fn shifted(&self, offset: usize, new_degree: usize) -> Permutation {
        assert!(offset + self.degree() <= new_degree, "shift exceeds new degree");
        let mut images: Vec<u32> = (0..new_degree as u32).collect();
        for (i, &y) in self.images.iter().enumerate() {
            images[offset + i] = y + offset as u32;
        }
        Permutation { images }
    }

    /// `(self, other)` acting side by side on `degree(self) + degree(other)` points.
    pub fn disjoint_sum(&self, other: &Permutation) -> Permutation {
        let n = self.degree() as u32;
        let images = self.images.iter().copied().chain(other.images.iter().map(|&y| y + n)).collect();
        Permutation { images }
    }

    /// Restriction to an invariant point list, relabelled so that
    /// `points[i]` becomes `i`. Returns `None` if `points` is not invariant.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let mut index = vec![u32::MAX; self.degree()];
        for (i, &p) in points.iter().enumerate() {
            index[p] = i as u32;
        }
        let mut images = Vec::with_capacity(points.len());
        for &p in points {
            let y = index[self.image(p)];
            if y == u32::MAX {
                return None;
            }
            images.push(y);
        }
        Some(Permutation { images })
    }

    /// Relabels points through `map` (old point `x` becomes `map[x]`).
    pub fn relabel(&self, map: &[usize]) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for x in 0..self.degree() {
            images[map[x]] = map[self.image(x)] as u32;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.render_cycles(), self.degree())
    }
}

/// Converts 1-based point labels to 0-based.
pub fn zero_based(points: &[usize]) -> Vec<usize> {
    points.iter().map(|&p| p - 1).collect()
}

/// Converts 0-based points to 1-based labels.
pub fn one_based(points: &[usize]) -> Vec<usize> {
    points.iter().map(|&p| p + 1).collect()
}
