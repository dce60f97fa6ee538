//! JSON group specifications: a plain generator list, a reference to a named
//! group, or a sum expression over nested specs.
//!
//! ```json
//! {"degree": 3, "generators": ["(1,2,3)"]}
//! {"sum": {"kind": "multiple", "components": ["A6"], "r": 2}}
//! {"sum": {"kind": "parallel", "components": ["A6", "A6"],
//!          "iso": [["(1,2,3)", "(1,2,3)"], ["(1,2)(3,4,5,6)", "(1,2)(3,4,5,6)"]]}}
//! ```
//!
//! With `prime_offset: n`, a point written `i'` in a generator means `n+i`.

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::sums::{self, IsoSpec, SubdirectSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime_offset: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sum: Option<SumSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SumKind {
    Direct,
    Parallel,
    Subdirect,
    Multiple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SumSpec {
    pub kind: SumKind,
    pub components: Vec<Component>,
    /// Generator images `(source, target)` as cycle strings. For `parallel`
    /// without `iso`, component generators are paired by position.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    /// `[H1, H2]` for `subdirect`; `iso` then pairs coset representatives.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernels: Option<Vec<Component>>,
}

/// A nested spec or a group name understood by [`catalog::build_named`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Component {
    Name(String),
    Spec(Box<GroupSpec>),
}

impl Component {
    pub fn build(&self) -> Result<PermGroup> {
        match self {
            Component::Name(name) => catalog::build_named(name),
            Component::Spec(spec) => spec.build(),
        }
    }
}

impl GroupSpec {
    pub fn from_generators(degree: usize, generators: &[&str]) -> Self {
        GroupSpec {
            degree: Some(degree),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            name: None,
            prime_offset: None,
            sum: None,
        }
    }

    pub fn named(name: &str) -> Self {
        GroupSpec { degree: None, generators: Vec::new(), name: Some(name.to_string()), prime_offset: None, sum: None }
    }

    /// Generator strings with primed points resolved.
    pub fn resolved_generators(&self) -> Result<Vec<String>> {
        self.generators.iter().map(|g| resolve_primes(g, self.prime_offset)).collect()
    }

    pub fn build(&self) -> Result<PermGroup> {
        if let Some(sum) = &self.sum {
            if !self.generators.is_empty() {
                return Err(Error::Spec("a spec has either generators or a sum, not both".into()));
            }
            let g = build_sum(sum)?;
            if let Some(d) = self.degree {
                if d != g.degree() {
                    return Err(Error::DegreeMismatch { left: d, right: g.degree() });
                }
            }
            return Ok(g);
        }
        match (self.degree, &self.name) {
            (Some(degree), _) => {
                if degree == 0 {
                    return Err(Error::Spec("degree must be positive".into()));
                }
                PermGroup::from_cycles(degree, &self.resolved_generators()?)
            }
            (None, Some(name)) if self.generators.is_empty() => catalog::build_named(name),
            _ => Err(Error::Spec("missing degree".into())),
        }
    }

    /// Catalog names referenced anywhere in the spec, in order of appearance.
    pub fn references(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_references(&mut out);
        out
    }

    fn collect_references(&self, out: &mut Vec<String>) {
        if self.degree.is_none() && self.sum.is_none() {
            if let Some(n) = &self.name {
                out.push(n.clone());
            }
        }
        if let Some(sum) = &self.sum {
            for c in sum.components.iter().chain(sum.kernels.iter().flatten()) {
                match c {
                    Component::Name(n) => out.push(n.clone()),
                    Component::Spec(s) => s.collect_references(out),
                }
            }
        }
    }
}

fn build_sum(sum: &SumSpec) -> Result<PermGroup> {
    let parts = sum.components.iter().map(Component::build).collect::<Result<Vec<_>>>()?;
    let need = |k: usize| {
        if parts.len() == k {
            Ok(())
        } else {
            Err(Error::Spec(format!("{:?} sum needs {k} components, got {}", sum.kind, parts.len())))
        }
    };
    match sum.kind {
        SumKind::Direct => {
            let mut it = parts.into_iter();
            let first = it.next().ok_or_else(|| Error::Spec("direct sum needs components".into()))?;
            Ok(it.fold(first, |acc, g| sums::direct_sum(&acc, &g)))
        }
        SumKind::Multiple => {
            need(1)?;
            let r = sum.r.ok_or_else(|| Error::Spec("multiple needs r".into()))?;
            if r == 0 {
                return Err(Error::Spec("r must be positive".into()));
            }
            Ok(sums::parallel_multiple(&parts[0], r))
        }
        SumKind::Parallel => {
            if parts.len() < 2 {
                return Err(Error::Spec("parallel sum needs at least 2 components".into()));
            }
            if let Some(pairs) = &sum.iso {
                need(2)?;
                let iso = iso_from_pairs(&parts[0], &parts[1], pairs)?;
                return sums::parallel_sum(&iso);
            }
            let mut it = parts.into_iter();
            let mut acc = it.next().unwrap();
            for next in it {
                let iso = positional_iso(&acc, &next)?;
                acc = sums::parallel_sum(&iso)?;
            }
            Ok(acc)
        }
        SumKind::Subdirect => {
            need(2)?;
            let kernels = sum.kernels.as_ref().ok_or_else(|| Error::Spec("subdirect sum needs kernels".into()))?;
            if kernels.len() != 2 {
                return Err(Error::Spec("subdirect sum needs 2 kernels".into()));
            }
            let h1 = kernels[0].build()?;
            let h2 = kernels[1].build()?;
            let pairs = sum
                .iso
                .as_ref()
                .ok_or_else(|| Error::Spec("subdirect sum needs iso pairs".into()))?
                .iter()
                .map(|(a, b)| {
                    Ok((Permutation::parse_cycles(a, parts[0].degree())?, Permutation::parse_cycles(b, parts[1].degree())?))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut parts = parts.into_iter();
            let spec = SubdirectSpec { g1: parts.next().unwrap(), h1, g2: parts.next().unwrap(), h2, pairs };
            sums::subdirect_sum(&spec)
        }
    }
}

fn iso_from_pairs(source: &PermGroup, target: &PermGroup, pairs: &[(String, String)]) -> Result<IsoSpec> {
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let iso = IsoSpec::from_cycles(source.clone(), target.clone(), &refs)?;
    if !iso.validate() {
        return Err(Error::InvalidIsomorphism("iso pairs do not extend to an isomorphism".into()));
    }
    Ok(iso)
}

fn positional_iso(source: &PermGroup, target: &PermGroup) -> Result<IsoSpec> {
    if source.generators().len() != target.generators().len() {
        return Err(Error::Spec("positional pairing needs equal generator counts; give iso pairs".into()));
    }
    let pairs = source.generators().iter().cloned().zip(target.generators().iter().cloned()).collect();
    let iso = IsoSpec::new(source.clone(), target.clone(), pairs)?;
    if !iso.validate() {
        return Err(Error::InvalidIsomorphism("positional generator pairing is not an isomorphism".into()));
    }
    Ok(iso)
}

/// Rewrites every `i'` as `offset+i`. Without an offset, a prime is an error.
pub fn resolve_primes(text: &str, offset: Option<usize>) -> Result<String> {
    let mut out = String::with_capacity(text.len());
    let mut digits = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_digit() {
            digits.push(c);
            if chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                continue;
            }
            // skip whitespace between a number and its prime
            while chars.peek().is_some_and(|d| d.is_whitespace()) {
                chars.next();
            }
            if chars.peek() == Some(&'\'') {
                chars.next();
                let off = offset.ok_or_else(|| Error::Spec(format!("primed point {digits}' without prime_offset")))?;
                let v: usize = digits.parse().map_err(|_| Error::Spec(format!("bad point {digits}")))?;
                out.push_str(&(v + off).to_string());
            } else {
                out.push_str(&digits);
            }
            digits.clear();
        } else if c == '\'' {
            return Err(Error::Spec("prime without a point".into()));
        } else {
            out.push(c);
        }
    }
    Ok(out)
}

/// Parses a comma-separated point list such as `"1,2,3,2',4',6'"` (braces
/// optional) into sorted 0-based points.
pub fn parse_point_set(text: &str, offset: Option<usize>, degree: usize) -> Result<Vec<usize>> {
    let resolved = resolve_primes(text, offset)?;
    let inner = resolved.trim().trim_start_matches('{').trim_end_matches('}');
    let mut points = Vec::new();
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| Error::Spec(format!("bad point '{tok}'")))?;
        if v == 0 || v > degree {
            return Err(Error::PointOutOfRange { point: v, degree });
        }
        if points.contains(&(v - 1)) {
            return Err(Error::RepeatedPoint(v));
        }
        points.push(v - 1);
    }
    points.sort_unstable();
    Ok(points)
}

pub fn parse_group_spec(document: &str) -> Result<PermGroup> {
    let spec: GroupSpec = serde_json::from_str(document).map_err(|e| Error::Spec(e.to_string()))?;
    spec.build()
}
