//! Named groups and the bundled catalog of exceptional groups, twisted and
//! mixed parallel sums, with their claimed orders, regular sets and
//! distinguishing numbers.
//!
//! The catalog ships as `data/catalog.json`. Each entry's `group` uses the
//! [`GroupSpec`] schema; the remaining fields are claims checked by
//! [`verify`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{alternating, cyclic, factorial, symmetric, PermGroup};
use crate::groupspec::{parse_point_set, resolve_primes, GroupSpec};
use crate::perm::Permutation;
use crate::sums::{self, IsoSpec};
use crate::symmetry::{an_parallel_formula, is_regular_set};

pub mod verify;

pub use verify::{verify_entry, Check, Effort, Status, VerificationReport};

const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

/// Which family of claims an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sweep {
    /// A primitive group with no regular set, and a regular set of its double.
    #[serde(rename = "table1")]
    Doubled,
    /// `H ‖ψ H` for a nonpermutation automorphism `ψ`.
    #[serde(rename = "table1b")]
    Twisted,
    /// `H ‖ K` for permutation-inequivalent actions of one group.
    #[serde(rename = "table2")]
    Mixed,
    /// Sums of `A6` twisted by its nonpermutation automorphism.
    #[serde(rename = "lemma3.3")]
    AlternatingTwist,
}

impl Sweep {
    /// The label used by `verify-paper`.
    pub fn label(self) -> &'static str {
        match self {
            Sweep::Doubled => "table1",
            Sweep::Twisted => "table1b",
            Sweep::Mixed => "table2",
            Sweep::AlternatingTwist => "lemma3.3",
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claims {
    pub order: u64,
    #[serde(default)]
    pub primitive: Option<bool>,
    #[serde(default)]
    pub d: Option<u32>,
    /// Regular set of the parallel double, primes offset by the degree.
    #[serde(default)]
    pub doubled_regular_set: Option<String>,
    /// Printed generators of the double, checked against the constructed ones.
    #[serde(default)]
    pub printed_doubled: Option<Vec<String>>,
    /// Degrees of the two summands, in point order; each is a union of orbits.
    #[serde(default)]
    pub blocks: Option<Vec<usize>>,
    /// Names the block constituents must identify as.
    #[serde(default)]
    pub components: Option<Vec<String>>,
    #[serde(default)]
    pub nonpermutation: Option<bool>,
    #[serde(default)]
    pub regular_set: Option<String>,
    #[serde(default)]
    pub prime_offset: Option<usize>,
    /// Inclusive range of sizes with a regular set.
    #[serde(default)]
    pub regular_sizes: Option<(usize, usize)>,
    #[serde(default)]
    pub no_regular_set: Option<bool>,
    #[serde(default)]
    pub unordered_orbitals: Option<usize>,
    /// Images of the first block's generators, as printed separately.
    #[serde(default)]
    pub psi: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Repair {
    pub field: String,
    pub printed: String,
    pub repaired: String,
    pub note: String,
}

/// How to rebuild a two-block sum whose printed generators do not define an
/// isomorphism: keep the block-2 parts and the first `keep` block-1 parts, and
/// search `first_block_group` for the remaining block-1 images.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fallback {
    pub first_block_group: String,
    pub keep: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub id: String,
    pub name: String,
    pub sweep: Sweep,
    pub group: GroupSpec,
    pub claims: Claims,
    #[serde(default)]
    pub repairs: Vec<Repair>,
    #[serde(default)]
    pub fallback: Option<Fallback>,
    #[serde(skip)]
    resolved: OnceLock<std::result::Result<Resolved, String>>,
}

#[derive(Clone, Debug)]
struct Resolved {
    group: PermGroup,
    substitution: Option<String>,
}

impl CatalogEntry {
    /// The entry's group; for entries with a fallback whose printed data is
    /// not a valid sum, the substituted group.
    pub fn group(&self) -> Result<PermGroup> {
        self.resolve().map(|r| r.group.clone())
    }

    /// Description of a fallback substitution, if one was needed.
    pub fn substitution(&self) -> Option<String> {
        self.resolve().ok().and_then(|r| r.substitution.clone())
    }

    /// The group built from the stored generators, without any fallback.
    pub fn printed_group(&self) -> Result<PermGroup> {
        self.group.build()
    }

    fn resolve(&self) -> Result<&Resolved> {
        self.resolved
            .get_or_init(|| {
                let printed = self.group.build().map_err(|e| e.to_string())?;
                match &self.fallback {
                    None => Ok(Resolved { group: printed, substitution: None }),
                    Some(fb) => resolve_fallback(self, printed, fb).map_err(|e| e.to_string()),
                }
            })
            .as_ref()
            .map_err(|e| Error::Spec(format!("{}: {e}", self.id)))
    }

    pub fn degree(&self) -> Result<usize> {
        Ok(self.group()?.degree())
    }

    /// The claimed regular set as sorted 0-based points of the entry's group
    /// (of the double, for [`Sweep::Doubled`] entries).
    pub fn claimed_regular_set(&self) -> Result<Option<Vec<usize>>> {
        self.regular_set_on(self.degree()?)
    }

    fn regular_set_on(&self, n: usize) -> Result<Option<Vec<usize>>> {
        if let Some(text) = &self.claims.doubled_regular_set {
            return parse_point_set(text, Some(n), 2 * n).map(Some);
        }
        match &self.claims.regular_set {
            Some(text) => parse_point_set(text, self.claims.prime_offset, n).map(Some),
            None => Ok(None),
        }
    }
}

fn block_iso(group: &PermGroup, n1: usize) -> Result<IsoSpec> {
    IsoSpec::from_blocks(group, n1)
}

fn resolve_fallback(entry: &CatalogEntry, printed: PermGroup, fb: &Fallback) -> Result<Resolved> {
    let blocks = entry.claims.blocks.as_ref().ok_or_else(|| Error::Spec("fallback needs blocks".into()))?;
    let n1 = blocks[0];
    let first = build_named(&fb.first_block_group)?;
    let claimed_set = entry.regular_set_on(printed.degree())?;
    let iso = block_iso(&printed, n1)?;
    let acceptable = |g: &PermGroup, iso: &IsoSpec| {
        iso.validate()
            && iso.source().same_group(&first)
            && claimed_set.as_ref().is_none_or(|s| is_regular_set(g, s))
    };
    if acceptable(&printed, &iso) {
        return Ok(Resolved { group: printed, substitution: None });
    }
    let pairs = iso.pairs().to_vec();
    if pairs.len() != fb.keep + 1 {
        return Err(Error::Spec("fallback searches exactly one generator image".into()));
    }
    let target = iso.target().clone();
    let wanted = pairs[fb.keep].1.order();
    let degree = printed.degree();
    for z in first.elements(crate::group::DEFAULT_ENUMERATION_BUDGET)? {
        if z.order() != wanted {
            continue;
        }
        let mut trial = pairs.clone();
        trial[fb.keep].0 = z.clone();
        let gens: Vec<Permutation> = trial.iter().map(|(a, b)| a.disjoint_sum(b)).collect();
        let candidate = IsoSpec::new(first.clone(), target.clone(), trial)?;
        let g = PermGroup::new(degree, gens)?;
        if acceptable(&g, &candidate) {
            let note = format!(
                "printed generators do not define an isomorphism (block-1 group has order {}); generator {} block-1 part replaced by {}, the first element of {} in enumeration order giving a valid isomorphism that keeps the printed regular set regular",
                iso.source().order(),
                fb.keep + 1,
                z.render_cycles(),
                fb.first_block_group
            );
            return Ok(Resolved { group: g, substitution: Some(note) });
        }
    }
    Err(Error::InvalidIsomorphism(format!("{}: no substitute isomorphism found", entry.id)))
}

#[derive(Debug, Deserialize)]
pub struct Exception {
    pub group: String,
    pub d: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub version: u32,
    entries: Vec<CatalogEntry>,
    aliases: BTreeMap<String, String>,
    exceptions: Vec<Exception>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Resolves an id or alias, ignoring whitespace and accepting `ψ`/`‖`.
    pub fn lookup(&self, name: &str) -> Option<&CatalogEntry> {
        let key = normalize(name);
        let key = self.aliases.get(&key).cloned().unwrap_or(key);
        self.entry(&key)
    }

    pub fn aliases(&self) -> &BTreeMap<String, String> {
        &self.aliases
    }

    /// Groups with `D = 3` or `D = 4`, by catalog id.
    pub fn exceptions(&self) -> &[Exception] {
        &self.exceptions
    }

    pub fn entries_in(&self, sweep: Sweep) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.sweep == sweep)
    }
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .replace('ψ', "psi")
        .replace('‖', "||")
        .replace('₀', "0")
}

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| serde_json::from_str(CATALOG_JSON).expect("bundled catalog parses"))
}

/// The fourteen primitive groups without a regular set.
pub fn list_l() -> Vec<&'static CatalogEntry> {
    catalog().entries_in(Sweep::Doubled).collect()
}

/// Builds `An`, `Sn`, `Cn` (`n <= 48`), catalog ids and aliases, and
/// `X^(r)` for any buildable `X`.
pub fn build_named(name: &str) -> Result<PermGroup> {
    let key = normalize(name);
    if let Some(base) = key.strip_suffix(')').and_then(|s| s.rsplit_once("^(")) {
        let r: usize = base.1.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        if r == 0 {
            return Err(Error::UnknownName(name.to_string()));
        }
        if catalog().lookup(&key).is_none() {
            return Ok(sums::parallel_multiple(&build_named(base.0)?, r));
        }
    }
    if let Some(entry) = catalog().lookup(&key) {
        return entry.group();
    }
    let mut chars = key.chars();
    let family = chars.next();
    if let (Some(f @ ('A' | 'S' | 'C')), Ok(n)) = (family, chars.as_str().parse::<usize>()) {
        if (1..=48).contains(&n) {
            return Ok(match f {
                'A' => alternating(n),
                'S' => symmetric(n),
                _ => cyclic(n),
            });
        }
    }
    Err(Error::UnknownName(name.to_string()))
}

/// Result of matching a transitive group against the known names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Identification {
    Unique(String),
    Ambiguous(Vec<String>),
    Unknown,
}

impl Identification {
    pub fn name(&self) -> Option<&str> {
        match self {
            Identification::Unique(n) => Some(n),
            _ => None,
        }
    }
}

/// Matches `(degree, order, transitive, primitive, perfect)` against the
/// catalog's primitive groups and the natural `An`, `Sn`. Alternating and
/// symmetric groups are recognised by order alone, which is exact.
pub fn identify(g: &PermGroup) -> Identification {
    if !g.is_transitive() || g.degree() < 2 {
        return Identification::Unknown;
    }
    let n = g.degree();
    let order = g.order();
    let mut matches: Vec<String> = Vec::new();
    if n >= 3 && order == factorial(n) / BigUint::from(2u32) {
        matches.push(format!("A{n}"));
    }
    if order == factorial(n) {
        matches.push(format!("S{n}"));
    }
    let candidates: Vec<&CatalogEntry> = catalog()
        .entries_in(Sweep::Doubled)
        .filter(|e| BigUint::from(e.claims.order) == order && e.degree().is_ok_and(|d| d == n))
        .collect();
    if !candidates.is_empty() {
        let primitive = g.is_primitive().unwrap_or(false);
        let perfect = g.is_perfect();
        for e in candidates {
            if e.claims.primitive.unwrap_or(true) == primitive && perfect {
                matches.push(e.id.clone());
            }
        }
    }
    match matches.len() {
        0 => Identification::Unknown,
        1 => Identification::Unique(matches.pop().unwrap()),
        _ => Identification::Ambiguous(matches),
    }
}

/// Which case of the classification produced a prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    Trivial,
    /// `An^(k)`: least `d` with `d^k >= n-1`.
    AlternatingMultiple { n: usize, k: usize },
    /// A listed exception with `D = 4` or `D = 3`.
    Exception { id: String },
    /// `A6 ‖ψ A6` with `ψ` a nonpermutation automorphism.
    TwistedA6,
    /// Everything else.
    Default,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub value: u32,
    pub rule: Rule,
}

/// The distinguishing number of a simple permutation group, from its
/// transitive constituents. Fixed points are stripped first.
pub fn predict_d(g: &PermGroup) -> Result<Prediction> {
    let stripped = sums::strip_fixed_points(g).group;
    if stripped.is_trivial() {
        return Ok(Prediction { value: 1, rule: Rule::Trivial });
    }
    let orbits = stripped.orbits();
    let order = stripped.order();
    let mut names = Vec::with_capacity(orbits.len());
    let mut constituents = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let gens = stripped.generators().iter().map(|s| s.restrict(orbit).unwrap()).collect();
        let c = PermGroup::new(orbit.len(), gens)?;
        if c.order() != order {
            return Err(Error::Unidentifiable(format!(
                "constituent on {} points has order {} but the group has order {order}; not a parallel sum, so not simple",
                orbit.len(),
                c.order()
            )));
        }
        match identify(&c) {
            Identification::Unique(name) => names.push(name),
            Identification::Ambiguous(list) => {
                return Err(Error::Unidentifiable(format!("constituent matches several names: {}", list.join(", "))))
            }
            Identification::Unknown => {
                return Err(Error::Unidentifiable(format!(
                    "constituent of degree {} and order {} is not in the catalog",
                    c.degree(),
                    c.order()
                )))
            }
        }
        constituents.push(c);
    }
    if names.iter().any(|n| n.starts_with('S')) {
        return Err(Error::Unidentifiable("symmetric constituent: the group is not simple".into()));
    }
    let alternating_degree = |name: &str| name.strip_prefix('A').and_then(|n| n.parse::<usize>().ok());
    if orbits.len() == 1 {
        if let Some(n) = alternating_degree(&names[0]) {
            return Ok(Prediction { value: an_parallel_formula(n as u64, 1) as u32, rule: Rule::AlternatingMultiple { n, k: 1 } });
        }
        if let Some(e) = catalog().exceptions().iter().find(|e| e.group == names[0]) {
            return Ok(Prediction { value: e.d, rule: Rule::Exception { id: e.group.clone() } });
        }
        return Ok(Prediction { value: 2, rule: Rule::Default });
    }
    let first = &names[0];
    if let Some(n) = alternating_degree(first) {
        if names.iter().all(|m| m == first) {
            let k = orbits.len();
            let all_permutation = (1..k).all(|j| {
                let pairs: Vec<(Permutation, Permutation)> = stripped
                    .generators()
                    .iter()
                    .map(|s| (s.restrict(&orbits[0]).unwrap(), s.restrict(&orbits[j]).unwrap()))
                    .collect();
                IsoSpec::new(constituents[0].clone(), constituents[j].clone(), pairs)
                    .is_ok_and(|iso| sums::find_conjugator(&iso).is_some())
            });
            if all_permutation {
                return Ok(Prediction {
                    value: an_parallel_formula(n as u64, k as u32) as u32,
                    rule: Rule::AlternatingMultiple { n, k },
                });
            }
            if k == 2 {
                return Ok(Prediction { value: 3, rule: Rule::TwistedA6 });
            }
        }
    }
    Ok(Prediction { value: 2, rule: Rule::Default })
}

/// Resolves primed points in `text` with the given offset.
pub fn resolve_printed(text: &str, offset: usize) -> Result<String> {
    resolve_primes(text, Some(offset))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_loads() {
        let c = catalog();
        assert_eq!(c.version, 1);
        assert_eq!(list_l().len(), 14);
        let degrees: Vec<usize> = list_l().iter().map(|e| e.degree().unwrap()).collect();
        assert_eq!(degrees, vec![6, 7, 8, 9, 10, 11, 11, 12, 12, 13, 15, 22, 23, 24]);
        assert_eq!(c.entries_in(Sweep::Twisted).count(), 5);
        assert_eq!(c.entries_in(Sweep::Mixed).count(), 5);
        assert_eq!(c.exceptions().len(), 15);
    }

    #[test]
    fn named_groups() {
        let a5 = build_named("A5").unwrap();
        assert_eq!((a5.degree(), a5.order()), (5, BigUint::from(60u32)));
        let g = build_named("L2(11)@11").unwrap();
        assert_eq!((g.degree(), g.order()), (11, BigUint::from(660u32)));
        let m12 = build_named("M12").unwrap();
        assert_eq!((m12.degree(), m12.order()), (12, BigUint::from(95040u32)));
        let a7x2 = build_named("A7^(2)").unwrap();
        assert_eq!((a7x2.degree(), a7x2.order()), (14, BigUint::from(2520u32)));
        assert_eq!(build_named("A6 ‖ψ A6").unwrap().order(), BigUint::from(360u32));
        assert!(matches!(build_named("A49"), Err(Error::UnknownName(_))));
        assert!(matches!(build_named("Foo"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn identification() {
        let l25 = build_named("L2(5)@6").unwrap();
        assert_eq!(identify(&l25), Identification::Unique("L2(5)@6".into()));
        assert_eq!(identify(&alternating(7)), Identification::Unique("A7".into()));
        assert_eq!(identify(&symmetric(4)), Identification::Unique("S4".into()));
        assert_eq!(identify(&cyclic(6)), Identification::Unknown);
        // AΓL(1,8): primitive of degree 8 and order 168 like L2(7), but solvable
        let mul = |a: usize, b: usize| {
            let mut r = 0;
            for i in 0..3 {
                if b >> i & 1 == 1 {
                    r ^= a << i;
                }
            }
            for i in (3..5).rev() {
                if r >> i & 1 == 1 {
                    r ^= 0b1011 << (i - 3);
                }
            }
            r
        };
        let maps = [
            (0..8).map(|x| x ^ 1).collect::<Vec<_>>(),
            (0..8).map(|x| mul(x, 2)).collect(),
            (0..8).map(|x| mul(x, x)).collect(),
        ];
        let gens = maps.into_iter().map(|m| Permutation::from_images(m).unwrap()).collect();
        let agl = PermGroup::new(8, gens).unwrap();
        assert_eq!(agl.order(), BigUint::from(168u32));
        assert!(agl.is_primitive().unwrap());
        assert_eq!(identify(&agl), Identification::Unknown);
    }

    #[test]
    fn predictions() {
        let p = |name: &str| predict_d(&build_named(name).unwrap()).unwrap();
        assert_eq!(p("A7^(2)").value, 3);
        assert_eq!(p("M12").value, 4);
        assert_eq!(p("M22").value, 3);
        assert_eq!(p("L2(5)||A5"), Prediction { value: 2, rule: Rule::Default });
        assert_eq!(p("A6||psiA6"), Prediction { value: 3, rule: Rule::TwistedA6 });
        assert_eq!(p("A6^(2)").value, 3);
        assert_eq!(p("A6^(2)||psiA6").value, 2);
        assert_eq!(p("L3(2)||psiL3(2)").value, 2);
        assert_eq!(p("A5").value, 4);
        let padded = sums::direct_sum(&build_named("M11").unwrap(), &PermGroup::trivial(3));
        assert_eq!(predict_d(&padded).unwrap().value, 4);
        assert!(matches!(predict_d(&cyclic(6)), Err(Error::Unidentifiable(_))));
        assert!(predict_d(&sums::direct_sum(&alternating(5), &alternating(5))).is_err());
    }

    #[test]
    fn fallback_substitutes_generator() {
        let e = catalog().entry("L2(9)||A6").unwrap();
        let g = e.group().unwrap();
        assert_eq!(g.order(), BigUint::from(360u32));
        let note = e.substitution().unwrap();
        assert!(note.contains("replaced"), "{note}");
        let set = e.claimed_regular_set().unwrap().unwrap();
        assert!(is_regular_set(&g, &set));
        assert!(e.printed_group().unwrap().order() != BigUint::from(360u32));
    }
}
