//! Checks every claim attached to a catalog entry and reports each outcome.
//!
//! `Quick` effort runs structural checks and the positive direction of
//! distinguishing-number claims (an explicit labeling). `Full` effort adds the
//! exhaustive lower bounds that fit the budgets below; larger cases are
//! reported inconclusive with the claimed value echoed.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{build_named, catalog, identify, predict_d, CatalogEntry, Sweep};
use crate::error::{Error, Result};
use crate::group::{alternating, symmetric, PermGroup};
use crate::groupspec::resolve_primes;
use crate::perm::{one_based, Permutation};
use crate::sums::{self, find_conjugator, IsoSpec};
use crate::symmetry::{
    an_parallel_formula, distinguishing_number, find_distinguishing_labeling, find_regular_set, orbitals,
    regular_set_report, Distinguishing, Labeling, SearchMode, SearchOutcome,
};

/// Seed for every randomized search run by the harness.
pub const SEED: u64 = 20_240_601;
/// Exhaustive no-regular-set checks: degree and order limits.
pub const NO_REGULAR_SET_MAX_DEGREE: usize = 15;
pub const NO_REGULAR_SET_MAX_ORDER: u64 = 10_000_000;
/// Exhaustive no-3-labeling checks: degree limit and labelings tested.
pub const NO_LABELING_MAX_DEGREE: usize = 12;
pub const NO_LABELING_BUDGET: u64 = 200_000;
/// Random candidates tried when looking for an explicit set or labeling.
pub const RANDOM_BUDGET: u64 = 200_000;
/// Candidates tested by `distinguishing_number` per label count.
pub const DISTINGUISHING_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Effort {
    Quick,
    Full,
}

impl FromStr for Effort {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Effort::Quick),
            "full" => Ok(Effort::Full),
            _ => Err(Error::Spec(format!("unknown effort '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// `Fail` if any check failed, else `Inconclusive` if any was, else `Pass`.
    pub fn overall(&self) -> Status {
        self.checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
    }

    pub fn passed(&self) -> bool {
        self.overall() == Status::Pass
    }
}

struct Recorder {
    id: String,
    checks: Vec<Check>,
    start: Instant,
}

impl Recorder {
    fn new(id: &str) -> Self {
        Recorder { id: id.to_string(), checks: Vec::new(), start: Instant::now() }
    }

    fn push(&mut self, name: &str, status: Status, details: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), status, details: details.into() });
    }

    fn expect(&mut self, name: &str, ok: bool, details: impl Into<String>) -> bool {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, details);
        ok
    }

    fn finish(self) -> VerificationReport {
        VerificationReport { id: self.id, checks: self.checks, elapsed: self.start.elapsed() }
    }
}

fn show_set(points: &[usize]) -> String {
    let pts: Vec<String> = one_based(points).iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", pts.join(","))
}

fn show_labels(l: &Labeling) -> String {
    let labels: Vec<String> = l.labels().iter().map(|x| x.to_string()).collect();
    format!("[{}]", labels.join(","))
}

pub fn verify_entry(id: &str, effort: Effort) -> Result<VerificationReport> {
    let entry = catalog().lookup(id).ok_or_else(|| Error::UnknownName(id.to_string()))?;
    Ok(check_entry(entry, effort))
}

/// Every entry of one sweep, in catalog order.
pub fn verify_sweep(sweep: Sweep, effort: Effort) -> Vec<VerificationReport> {
    catalog().entries_in(sweep).map(|e| check_entry(e, effort)).collect()
}

fn check_entry(entry: &CatalogEntry, effort: Effort) -> VerificationReport {
    let mut rec = Recorder::new(&entry.id);
    for r in &entry.repairs {
        rec.push(&format!("repair {}", r.field), Status::Pass, format!("printed {} read as {} ({})", r.printed, r.repaired, r.note));
    }
    let g = match entry.group() {
        Ok(g) => g,
        Err(e) => {
            rec.push("build", Status::Fail, e.to_string());
            return rec.finish();
        }
    };
    if let Some(note) = entry.substitution() {
        rec.push("fallback", Status::Pass, note);
    }
    let claimed = BigUint::from(entry.claims.order);
    let order = g.order();
    rec.expect("order", order == claimed, format!("{order} (claimed {claimed})"));
    match entry.sweep {
        Sweep::Doubled => check_doubled(entry, &g, effort, &mut rec),
        _ => check_sum(entry, &g, effort, &mut rec),
    }
    rec.finish()
}

fn check_doubled(entry: &CatalogEntry, h: &PermGroup, effort: Effort, rec: &mut Recorder) {
    let n = h.degree();
    if let Some(p) = entry.claims.primitive {
        let got = h.is_primitive().unwrap_or(false);
        rec.expect("primitive", got == p, format!("{got}"));
    }
    let double = sums::parallel_multiple(h, 2);
    rec.expect("double order", double.order() == h.order(), format!("{}", double.order()));
    let orbits = double.orbits();
    let expected: Vec<Vec<usize>> = vec![(0..n).collect(), (n..2 * n).collect()];
    rec.expect("double orbits", orbits == expected, format!("{} orbits", orbits.len()));
    check_kernels(&double, n, rec);
    if let Some(printed) = &entry.claims.printed_doubled {
        let parsed: Result<Vec<Permutation>> =
            printed.iter().map(|t| Permutation::parse_cycles(&resolve_primes(t, Some(n))?, 2 * n)).collect();
        let ok = parsed.as_ref().is_ok_and(|p| p.as_slice() == double.generators());
        rec.expect("printed double generators", ok, "printed g^(2), h^(2) equal the constructed ones");
    }
    match entry.claimed_regular_set() {
        Ok(Some(set)) => {
            let report = regular_set_report(&double, &set);
            rec.expect(
                "regular set",
                report.is_regular(),
                format!("{} in the double: setwise stabilizer order {}", show_set(&set), report.stabilizer_order),
            );
            if effort == Effort::Full {
                let mode = SearchMode::Randomized { seed: SEED };
                let found = find_regular_set(&double, set.len()..=set.len(), mode, RANDOM_BUDGET);
                match found {
                    SearchOutcome::Found(r) => rec.push(
                        "independent regular set",
                        Status::Pass,
                        format!("{} (seed {SEED})", show_set(&r.set)),
                    ),
                    _ => rec.push(
                        "independent regular set",
                        Status::Inconclusive,
                        format!("none in {RANDOM_BUDGET} random sets of size {} (seed {SEED})", set.len()),
                    ),
                }
            }
        }
        Ok(None) => {}
        Err(e) => {
            rec.push("regular set", Status::Fail, e.to_string());
        }
    }
}

fn check_kernels(g: &PermGroup, n1: usize, rec: &mut Recorder) {
    let first: Vec<usize> = (0..n1).collect();
    let second: Vec<usize> = (n1..g.degree()).collect();
    let k1 = g.pointwise_stabilizer(&second).order();
    let k2 = g.pointwise_stabilizer(&first).order();
    let one = BigUint::from(1u32);
    rec.expect("kernels", k1 == one && k2 == one, format!("block kernel orders {k1}, {k2}"));
}

fn check_sum(entry: &CatalogEntry, g: &PermGroup, effort: Effort, rec: &mut Recorder) {
    let claims = &entry.claims;
    let mut n1 = None;
    if let Some(blocks) = &claims.blocks {
        let orbits = g.orbits();
        let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        let total: usize = blocks.iter().sum();
        let inside = orbits.iter().all(|o| (o[0] < blocks[0]) == (o[o.len() - 1] < blocks[0]));
        rec.expect(
            "orbits",
            blocks.len() == 2 && total == g.degree() && inside,
            format!("orbit sizes {sizes:?}, summands {blocks:?}"),
        );
        n1 = Some(blocks[0]);
        check_kernels(g, blocks[0], rec);
        if let Some(names) = &claims.components {
            let split = [(0..blocks[0]).collect::<Vec<_>>(), (blocks[0]..g.degree()).collect()];
            let mut got = Vec::new();
            for block in &split {
                let gens = g.generators().iter().filter_map(|s| s.restrict(block)).collect();
                let c = PermGroup::new(block.len(), gens).expect("restricted degree");
                got.push(identify(&c).name().unwrap_or("?").to_string());
            }
            rec.expect("components", &got == names, got.join(" || "));
        }
    }
    if let (Some(psi), Some(n1)) = (&claims.psi, n1) {
        let n2 = g.degree() - n1;
        let combined: Result<Vec<Permutation>> = psi
            .iter()
            .map(|(a, b)| Ok(Permutation::parse_cycles(a, n1)?.disjoint_sum(&Permutation::parse_cycles(b, n2)?)))
            .collect();
        let same = combined.as_ref().is_ok_and(|c| c.as_slice() == g.generators());
        rec.expect("generators match psi", same, "printed sum generators equal (s, psi(s))");
    }
    if let (Some(claim), Some(n1)) = (claims.nonpermutation, n1) {
        match IsoSpec::from_blocks(g, n1) {
            Ok(iso) if iso.validate() => {
                let conj = find_conjugator(&iso);
                let nonperm = conj.is_none();
                let details = match conj {
                    Some(c) => format!("induced by conjugation with {c}"),
                    None => "no permutation of the points induces it".into(),
                };
                rec.expect("nonpermutation automorphism", nonperm == claim, details);
            }
            _ => {
                rec.push("nonpermutation automorphism", Status::Fail, "block pairing is not an isomorphism");
            }
        }
    }
    let mut has_regular_set = false;
    match entry.claimed_regular_set() {
        Ok(Some(set)) => {
            let report = regular_set_report(g, &set);
            has_regular_set = report.is_regular();
            rec.expect(
                "regular set",
                report.is_regular(),
                format!("{}: setwise stabilizer order {}", show_set(&set), report.stabilizer_order),
            );
        }
        Ok(None) => {}
        Err(e) => rec.push("regular set", Status::Fail, e.to_string()),
    }
    if let Some((lo, hi)) = claims.regular_sizes {
        let mode = if g.degree() <= 14 { SearchMode::Exhaustive } else { SearchMode::Randomized { seed: SEED } };
        let mut missing = Vec::new();
        let mut inconclusive = Vec::new();
        for s in lo..=hi {
            match find_regular_set(g, s..=s, mode, RANDOM_BUDGET) {
                SearchOutcome::Found(_) => has_regular_set = true,
                SearchOutcome::NoneExists => missing.push(s),
                SearchOutcome::Exhausted { .. } => inconclusive.push(s),
            }
        }
        let status = if !missing.is_empty() {
            Status::Fail
        } else if !inconclusive.is_empty() {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        rec.push(
            "regular set sizes",
            status,
            format!("sizes {lo}..={hi} via {mode:?}, budget {RANDOM_BUDGET}; none: {missing:?}, undecided: {inconclusive:?}"),
        );
    }
    let mut no_regular = None;
    if claims.no_regular_set == Some(true) {
        no_regular = no_regular_set_check(g, effort, rec);
    }
    if let Some(u) = claims.unordered_orbitals {
        let count = orbitals(g, false).len();
        rec.expect("unordered orbitals", count == u, format!("{count}"));
    }
    if let Some(d) = claims.d {
        match d {
            2 => {
                rec.expect("distinguishing number", has_regular_set && !g.is_trivial(), "D = 2: nontrivial with a regular set");
            }
            _ => check_d_value(g, d, no_regular, effort, rec),
        }
    }
}

/// Exhaustive search for a regular set when within budget. `Some(true)` when
/// absence is proved.
fn no_regular_set_check(g: &PermGroup, effort: Effort, rec: &mut Recorder) -> Option<bool> {
    let within = g.degree() <= NO_REGULAR_SET_MAX_DEGREE && g.order() <= BigUint::from(NO_REGULAR_SET_MAX_ORDER);
    if !within {
        if effort == Effort::Full {
            rec.push("no regular set", Status::Inconclusive, "claim only: beyond the exhaustive budget");
        }
        return None;
    }
    match find_regular_set(g, 0..=g.degree(), SearchMode::Exhaustive, u64::MAX) {
        SearchOutcome::Found(r) => {
            rec.push("no regular set", Status::Fail, format!("{} is regular", show_set(&r.set)));
            Some(false)
        }
        _ => {
            rec.push("no regular set", Status::Pass, format!("all 2^{} subsets tested", g.degree()));
            Some(true)
        }
    }
}

fn explicit_labeling(g: &PermGroup, k: u32) -> Option<Labeling> {
    let random = find_distinguishing_labeling(g, k, SearchMode::Randomized { seed: SEED }, RANDOM_BUDGET);
    if let SearchOutcome::Found(l) = random {
        return Some(l);
    }
    find_distinguishing_labeling(g, k, SearchMode::Exhaustive, NO_LABELING_BUDGET).found().cloned()
}

/// `D = d` for `d >= 3`: an explicit `d`-labeling, and at `Full` effort the
/// absence of regular sets and, for `d = 4`, of 3-labelings.
fn check_d_value(g: &PermGroup, d: u32, no_regular: Option<bool>, effort: Effort, rec: &mut Recorder) {
    match explicit_labeling(g, d) {
        Some(l) => rec.push("upper bound", Status::Pass, format!("distinguishing {d}-labeling {}", show_labels(&l))),
        None => rec.push("upper bound", Status::Fail, format!("no distinguishing {d}-labeling found")),
    }
    if effort == Effort::Quick {
        return;
    }
    let no_regular = match no_regular {
        Some(v) => Some(v),
        None => no_regular_set_check(g, effort, rec),
    };
    let mut proven = no_regular == Some(true);
    for k in 3..d {
        if g.degree() > NO_LABELING_MAX_DEGREE {
            rec.push(&format!("no {k}-labeling"), Status::Inconclusive, "claim only: beyond the exhaustive budget");
            proven = false;
            continue;
        }
        match find_distinguishing_labeling(g, k, SearchMode::Exhaustive, NO_LABELING_BUDGET) {
            SearchOutcome::NoneExists => rec.push(&format!("no {k}-labeling"), Status::Pass, "all canonical labelings tested"),
            SearchOutcome::Found(l) => {
                rec.push(&format!("no {k}-labeling"), Status::Fail, format!("{} is distinguishing", show_labels(&l)));
                proven = false;
            }
            SearchOutcome::Exhausted { tested } => {
                rec.push(&format!("no {k}-labeling"), Status::Inconclusive, format!("budget of {tested} labelings exhausted"));
                proven = false;
            }
        }
    }
    let status = if proven { Status::Pass } else { Status::Inconclusive };
    rec.push("lower bound", status, if proven { format!("D = {d} exactly") } else { format!("D <= {d}; claimed {d}") });
}

/// Distinguishing numbers of the listed exceptions: the classifier's value,
/// an explicit labeling, and (at `Full` effort) the lower bounds in budget.
pub fn verify_exceptions(effort: Effort) -> Vec<VerificationReport> {
    catalog()
        .exceptions()
        .iter()
        .map(|ex| {
            let mut rec = Recorder::new(&ex.group);
            let g = match build_named(&ex.group) {
                Ok(g) => g,
                Err(e) => {
                    rec.push("build", Status::Fail, e.to_string());
                    return rec.finish();
                }
            };
            match predict_d(&g) {
                Ok(p) => rec.expect("classifier", p.value == ex.d, format!("{} via {:?}", p.value, p.rule)),
                Err(e) => rec.expect("classifier", false, e.to_string()),
            };
            check_d_value(&g, ex.d, None, effort, &mut rec);
            rec.finish()
        })
        .collect()
}

/// `D(An^(k))` computed by search, against the closed formula, for
/// `3 <= n <= 7`, `1 <= k <= 3`.
pub fn verify_alternating_formula() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for n in 3..=7usize {
        for k in 1..=3usize {
            let mut rec = Recorder::new(&format!("A{n}^({k})"));
            let g = sums::parallel_multiple(&alternating(n), k);
            let formula = an_parallel_formula(n as u64, k as u32);
            match distinguishing_number(&g, n as u32, DISTINGUISHING_BUDGET) {
                Distinguishing::Exact { value, witness } => {
                    rec.expect(
                        "distinguishing number",
                        value as u64 == formula,
                        format!("search {value}, formula {formula}, witness {}", show_labels(&witness)),
                    );
                }
                other => rec.push("distinguishing number", Status::Inconclusive, format!("{other:?}")),
            }
            if let Ok(p) = predict_d(&g) {
                rec.expect("classifier", p.value as u64 == formula, format!("{} via {:?}", p.value, p.rule));
            }
            out.push(rec.finish());
        }
    }
    out
}

/// Orbital counts of the twisted and untwisted doubles of `A6`, and equality
/// of the orbitals of `An^(k)` and `Sn^(k)`.
pub fn verify_orbitals() -> VerificationReport {
    let mut rec = Recorder::new("orbitals");
    match build_named("A6||psiA6") {
        Ok(g) => {
            let c = orbitals(&g, false).len();
            rec.expect("A6||psiA6 unordered", c == 3, format!("{c} classes"));
        }
        Err(e) => rec.push("A6||psiA6 unordered", Status::Fail, e.to_string()),
    }
    let double = sums::parallel_multiple(&alternating(6), 2);
    let c = orbitals(&double, false).len();
    rec.expect("A6^(2) unordered", c == 4, format!("{c} classes"));
    for n in 5..=7 {
        for k in 2..=3 {
            let a = orbitals(&sums::parallel_multiple(&alternating(n), k), true);
            let s = orbitals(&sums::parallel_multiple(&symmetric(n), k), true);
            rec.expect(&format!("A{n}^({k}) vs S{n}^({k})"), a == s, format!("{} ordered classes", a.len()));
        }
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_is_worst_check() {
        let mut r = VerificationReport { id: "x".into(), checks: Vec::new(), elapsed: Duration::ZERO };
        assert_eq!(r.overall(), Status::Pass);
        r.checks.push(Check { name: "a".into(), status: Status::Inconclusive, details: String::new() });
        assert_eq!(r.overall(), Status::Inconclusive);
        r.checks.push(Check { name: "b".into(), status: Status::Fail, details: String::new() });
        assert_eq!(r.overall(), Status::Fail);
    }

    #[test]
    fn quick_entries() {
        for id in ["L2(5)@6", "L3(2)||psiL3(2)", "L2(7)||L3(2)", "L2(5)||A5"] {
            let r = verify_entry(id, Effort::Quick).unwrap();
            assert!(r.passed(), "{r:#?}");
        }
        assert!(matches!(verify_entry("nope", Effort::Quick), Err(Error::UnknownName(_))));
    }

    #[test]
    fn report_json_round_trip() {
        let r = verify_entry("L2(5)@6", Effort::Quick).unwrap();
        let back: VerificationReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn twisted_a6_exact() {
        let r = verify_entry("A6||psiA6", Effort::Full).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert!(r.checks.iter().any(|c| c.name == "lower bound" && c.status == Status::Pass));
    }
}
