//! Per-graph verification of the regularity bounds and the clique, prime
//! and interval identities they rest on.
//!
//! Each check yields one [`TheoremCheck`]. Shared quantities (regularity,
//! `L`, `c`, primes) are computed at most once per graph.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use bei_core::algebra::{hilbert_h_polynomial, regularity};
use bei_core::chordal::is_chordal;
use bei_core::cliques::{clique_count, maximal_cliques, CliqueFamily};
use bei_core::family::{is_caterpillar, is_path};
use bei_core::interval::{attempt_representation, is_strongly_interval};
use bei_core::path::longest_induced_path_length;
use bei_core::primes::{has_cut_point_property, minimal_primes, MinimalPrime};
use bei_core::{Graph, VertexSet};
use serde::{Serialize, Serializer};

use crate::io::write_graph6;

/// Subset checks run over all `2^n` vertex sets up to this size.
pub const MAX_SUBSET_CHECK_VERTICES: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// `L(G) <= reg`.
    PathLower,
    /// `reg <= n - 1`.
    TrivialUpper,
    /// `reg <= n - 2` for connected graphs other than paths.
    NonPathUpper,
    /// `reg <= c(G)` for chordal graphs.
    RegLeCliques,
    /// `reg(G) <= max{reg(G_v), reg(G - v), reg(G_v - v) + 1}` at every
    /// non-free vertex.
    SesBound,
    /// `c(G) <= n - t` for chordal graphs whose largest clique has `t + 1`
    /// vertices.
    CliquesLeNMinusT,
    /// No set containing a free vertex has the cut point property.
    FreeNotCut,
    /// `G - T` and `G_v - T` have the same components for every prime set
    /// `T` and `v` outside it.
    PrimeSaturation,
    /// `G - T` and `(G - v) - (T \ v)` have the same components for every
    /// prime set `T` and `v` in it.
    PrimeDeletion,
    /// `c(G - v) <= c(G)`.
    CliquesUnderDeletion,
    /// `c(G_v) <= c(G) - t + 1` for chordal `G` and `v` in `t` facets.
    CliquesUnderSaturation,
    /// For chordal `G`: `L = c` exactly when the longest-path interval
    /// construction succeeds.
    IntervalIffPath,
    /// For chordal `G`: strongly interval exactly when `reg = L = c`.
    IntervalIffReg,
    /// Non-path caterpillars: `reg = L < c`.
    Caterpillar,
    /// Trees that are not caterpillars: `L < reg < c`.
    TreeStrict,
    /// `reg <= deg h`. Open in general, so only observed.
    RegLeDegH,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::PathLower,
        CheckId::TrivialUpper,
        CheckId::NonPathUpper,
        CheckId::RegLeCliques,
        CheckId::SesBound,
        CheckId::CliquesLeNMinusT,
        CheckId::FreeNotCut,
        CheckId::PrimeSaturation,
        CheckId::PrimeDeletion,
        CheckId::CliquesUnderDeletion,
        CheckId::CliquesUnderSaturation,
        CheckId::IntervalIffPath,
        CheckId::IntervalIffReg,
        CheckId::Caterpillar,
        CheckId::TreeStrict,
        CheckId::RegLeDegH,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::PathLower => "path-lower",
            CheckId::TrivialUpper => "n-1-upper",
            CheckId::NonPathUpper => "non-path-upper",
            CheckId::RegLeCliques => "reg-le-c",
            CheckId::SesBound => "ses-bound",
            CheckId::CliquesLeNMinusT => "c-le-n-t",
            CheckId::FreeNotCut => "free-not-cut",
            CheckId::PrimeSaturation => "prime-saturation",
            CheckId::PrimeDeletion => "prime-deletion",
            CheckId::CliquesUnderDeletion => "c-deletion",
            CheckId::CliquesUnderSaturation => "c-saturation",
            CheckId::IntervalIffPath => "interval-path",
            CheckId::IntervalIffReg => "interval-reg",
            CheckId::Caterpillar => "caterpillar",
            CheckId::TreeStrict => "tree-strict",
            CheckId::RegLeDegH => "reg-le-degh",
        }
    }

    /// Whether a failure fails the run.
    pub fn required(self) -> bool {
        self != CheckId::RegLeDegH
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown check {s:?}; known: {}", known.join(", "))
            })
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
    /// A violation of a statement that is not required to hold.
    #[serde(rename = "observed")]
    Observed,
    #[serde(rename = "error")]
    Error,
}

impl Verdict {
    fn of(holds: bool) -> Self {
        if holds {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "n/a",
            Verdict::Observed => "observed",
            Verdict::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub id: CheckId,
    /// graph6 string of the checked graph.
    pub fingerprint: String,
    pub values: BTreeMap<String, i64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremCheck {
    /// A failed required check, or an engine error on one.
    pub fn is_failure(&self) -> bool {
        self.id.required() && matches!(self.verdict, Verdict::Fail | Verdict::Error)
    }
}

type Values = BTreeMap<String, i64>;
type Outcome = bei_core::Result<(Verdict, Values, Option<String>)>;

fn values<const N: usize>(pairs: [(&str, i64); N]) -> Values {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn cached<T: Clone>(
    cell: &OnceCell<bei_core::Result<T>>,
    f: impl FnOnce() -> bei_core::Result<T>,
) -> bei_core::Result<T> {
    cell.get_or_init(f).clone()
}

/// Lazily computed invariants of one graph.
struct Profile<'g> {
    g: &'g Graph,
    cliques: CliqueFamily,
    chordal: bool,
    reg: OnceCell<bei_core::Result<usize>>,
    lip: OnceCell<bei_core::Result<usize>>,
    strongly: OnceCell<bei_core::Result<bool>>,
    primes: OnceCell<bei_core::Result<Vec<MinimalPrime>>>,
}

impl<'g> Profile<'g> {
    fn new(g: &'g Graph) -> Self {
        Profile {
            g,
            cliques: maximal_cliques(g),
            chordal: is_chordal(g).is_chordal(),
            reg: OnceCell::new(),
            lip: OnceCell::new(),
            strongly: OnceCell::new(),
            primes: OnceCell::new(),
        }
    }

    fn c(&self) -> i64 {
        self.cliques.count() as i64
    }

    fn reg(&self) -> bei_core::Result<i64> {
        cached(&self.reg, || regularity(self.g)).map(|r| r as i64)
    }

    fn lip(&self) -> bei_core::Result<i64> {
        cached(&self.lip, || longest_induced_path_length(self.g)).map(|l| l as i64)
    }

    fn strongly(&self) -> bei_core::Result<bool> {
        cached(&self.strongly, || is_strongly_interval(self.g))
    }

    fn primes(&self) -> bei_core::Result<Vec<MinimalPrime>> {
        cached(&self.primes, || minimal_primes(self.g))
    }
}

fn not_applicable(reason: &str) -> Outcome {
    Ok((
        Verdict::NotApplicable,
        Values::new(),
        Some(reason.to_string()),
    ))
}

/// Runs `checks` (in the given order) on `g`. Engine errors such as size
/// caps become [`Verdict::Error`] entries instead of aborting.
pub fn check_graph(g: &Graph, checks: &[CheckId]) -> Vec<TheoremCheck> {
    let profile = Profile::new(g);
    let fingerprint = write_graph6(g);
    checks
        .iter()
        .map(|&id| {
            let (verdict, values, note) = match run(id, &profile) {
                Ok(outcome) => outcome,
                Err(e) => (Verdict::Error, Values::new(), Some(e.to_string())),
            };
            TheoremCheck {
                id,
                fingerprint: fingerprint.clone(),
                values,
                verdict,
                note,
            }
        })
        .collect()
}

fn run(id: CheckId, p: &Profile) -> Outcome {
    let g = p.g;
    let n = g.n() as i64;
    match id {
        CheckId::PathLower => {
            let (l, reg) = (p.lip()?, p.reg()?);
            Ok((
                Verdict::of(l <= reg),
                values([("L", l), ("reg", reg)]),
                None,
            ))
        }
        CheckId::TrivialUpper => {
            let reg = p.reg()?;
            Ok((Verdict::of(reg < n), values([("reg", reg), ("n", n)]), None))
        }
        CheckId::NonPathUpper => {
            if !g.is_connected() || is_path(g) {
                return not_applicable("disconnected or a path");
            }
            let reg = p.reg()?;
            Ok((
                Verdict::of(reg <= n - 2),
                values([("reg", reg), ("n", n)]),
                None,
            ))
        }
        CheckId::RegLeCliques => {
            if !p.chordal {
                return not_applicable("not chordal");
            }
            let reg = p.reg()?;
            Ok((
                Verdict::of(reg <= p.c()),
                values([("reg", reg), ("c", p.c())]),
                None,
            ))
        }
        CheckId::SesBound => ses_all(p),
        CheckId::CliquesLeNMinusT => {
            if !p.chordal {
                return not_applicable("not chordal");
            }
            let t = p.cliques.largest() as i64 - 1;
            Ok((
                Verdict::of(p.c() <= n - t),
                values([("c", p.c()), ("n", n), ("t", t)]),
                None,
            ))
        }
        CheckId::FreeNotCut => free_not_cut(p),
        CheckId::PrimeSaturation => prime_saturation(p),
        CheckId::PrimeDeletion => prime_deletion(p),
        CheckId::CliquesUnderDeletion => {
            if g.n() == 1 {
                return not_applicable("single vertex");
            }
            let mut worst = i64::MIN;
            let mut bad = Vec::new();
            for v in 0..g.n() {
                let cv = clique_count(&g.delete_vertex(v)?) as i64;
                worst = worst.max(cv);
                if cv > p.c() {
                    bad.push(g.label(v));
                }
            }
            let note = (!bad.is_empty()).then(|| format!("violated at {}", bad.join(",")));
            Ok((
                Verdict::of(bad.is_empty()),
                values([("c", p.c()), ("max_c_deleted", worst)]),
                note,
            ))
        }
        CheckId::CliquesUnderSaturation => {
            if !p.chordal {
                return not_applicable("not chordal");
            }
            let mut bad = Vec::new();
            for v in 0..g.n() {
                let t = p.cliques.membership(v) as i64;
                let cv = clique_count(&g.saturate_neighborhood(v)?) as i64;
                if cv > p.c() - t + 1 {
                    bad.push(g.label(v));
                }
            }
            let note = (!bad.is_empty()).then(|| format!("violated at {}", bad.join(",")));
            Ok((
                Verdict::of(bad.is_empty()),
                values([("c", p.c()), ("vertices", n)]),
                note,
            ))
        }
        CheckId::IntervalIffPath => {
            if !p.chordal {
                return not_applicable("not chordal");
            }
            let mut equal = true;
            let mut represented = true;
            for comp in g.connected_components() {
                let (h, _) = g.induced(comp)?;
                equal &= longest_induced_path_length(&h)? == clique_count(&h);
                represented &= attempt_representation(&h)?.is_some();
            }
            let strongly = p.strongly()?;
            let holds = equal == represented && strongly == equal;
            let vals = values([
                ("L", p.lip()?),
                ("c", p.c()),
                ("represented", represented as i64),
                ("strongly_interval", strongly as i64),
            ]);
            Ok((Verdict::of(holds), vals, None))
        }
        CheckId::IntervalIffReg => {
            if !p.chordal {
                return not_applicable("not chordal");
            }
            let (reg, l, strongly) = (p.reg()?, p.lip()?, p.strongly()?);
            let holds = strongly == (reg == l && l == p.c());
            let vals = values([
                ("reg", reg),
                ("L", l),
                ("c", p.c()),
                ("strongly_interval", strongly as i64),
            ]);
            Ok((Verdict::of(holds), vals, None))
        }
        CheckId::Caterpillar => {
            if !is_caterpillar(g) || is_path(g) {
                return not_applicable("not a non-path caterpillar");
            }
            let (reg, l) = (p.reg()?, p.lip()?);
            Ok((
                Verdict::of(reg == l && l < p.c()),
                values([("reg", reg), ("L", l), ("c", p.c())]),
                None,
            ))
        }
        CheckId::TreeStrict => {
            if !g.is_tree() || is_caterpillar(g) {
                return not_applicable("not a non-caterpillar tree");
            }
            let (reg, l) = (p.reg()?, p.lip()?);
            Ok((
                Verdict::of(l < reg && reg < p.c()),
                values([("reg", reg), ("L", l), ("c", p.c())]),
                None,
            ))
        }
        CheckId::RegLeDegH => {
            let reg = p.reg()?;
            let deg = hilbert_h_polynomial(g)?.degree() as i64;
            let verdict = if reg <= deg {
                Verdict::Pass
            } else {
                Verdict::Observed
            };
            Ok((verdict, values([("reg", reg), ("deg_h", deg)]), None))
        }
    }
}

fn ses_all(p: &Profile) -> Outcome {
    let g = p.g;
    let free = bei_core::cliques::free_vertices_of(g, &p.cliques);
    let targets = g.vertices().difference(free);
    if targets.is_empty() {
        return not_applicable("every vertex is free");
    }
    let reg = p.reg()?;
    let mut bad = Vec::new();
    let mut tightest = i64::MAX;
    for v in targets.iter() {
        let vals = ses_values(g, v, reg)?;
        tightest = tightest.min(vals["bound"] - reg);
        if reg > vals["bound"] {
            bad.push(g.label(v));
        }
    }
    let note = (!bad.is_empty()).then(|| format!("violated at {}", bad.join(",")));
    let vals = values([
        ("reg", reg),
        ("vertices", targets.len() as i64),
        ("min_slack", tightest),
    ]);
    Ok((Verdict::of(bad.is_empty()), vals, note))
}

fn ses_values(g: &Graph, v: usize, reg: i64) -> bei_core::Result<Values> {
    let gv = g.saturate_neighborhood(v)?;
    let r1 = regularity(&gv)? as i64;
    let r2 = regularity(&g.delete_vertex(v)?)? as i64;
    let r3 = regularity(&gv.delete_vertex(v)?)? as i64;
    let bound = r1.max(r2).max(r3 + 1);
    Ok(values([
        ("vertex", v as i64 + 1),
        ("reg", reg),
        ("reg_saturated", r1),
        ("reg_deleted", r2),
        ("reg_saturated_deleted", r3),
        ("bound", bound),
    ]))
}

/// The exact-sequence bound at one vertex. Free vertices are rejected:
/// saturating at them changes nothing.
pub fn check_ses_bound(g: &Graph, v: usize) -> bei_core::Result<TheoremCheck> {
    g.check_vertex(v)?;
    if bei_core::cliques::free_vertices(g).contains(v) {
        return Err(bei_core::Error::FreeVertex(v));
    }
    let reg = regularity(g)? as i64;
    let vals = ses_values(g, v, reg)?;
    let verdict = Verdict::of(reg <= vals["bound"]);
    Ok(TheoremCheck {
        id: CheckId::SesBound,
        fingerprint: write_graph6(g),
        values: vals,
        verdict,
        note: None,
    })
}

fn subset_cap(g: &Graph) -> bei_core::Result<()> {
    if g.n() > MAX_SUBSET_CHECK_VERTICES {
        return Err(bei_core::Error::SizeCap {
            what: "subset check",
            n: g.n(),
            cap: MAX_SUBSET_CHECK_VERTICES,
        });
    }
    Ok(())
}

fn free_not_cut(p: &Profile) -> Outcome {
    let g = p.g;
    subset_cap(g)?;
    let free = bei_core::cliques::free_vertices_of(g, &p.cliques);
    let mut tested = 0i64;
    let mut bad = None;
    for mask in 1u64..1 << g.n() {
        let t = VertexSet(mask);
        if t.intersection(free).is_empty() {
            continue;
        }
        tested += 1;
        if has_cut_point_property(g, t) && bad.is_none() {
            bad = Some(t);
        }
    }
    let note = bad.map(|t| format!("cut point property holds for {{{}}}", labels(g, t)));
    Ok((
        Verdict::of(bad.is_none()),
        values([("sets", tested), ("free", free.len() as i64)]),
        note,
    ))
}

fn labels(g: &Graph, set: VertexSet) -> String {
    set.iter().map(|v| g.label(v)).collect::<Vec<_>>().join(",")
}

fn prime_saturation(p: &Profile) -> Outcome {
    let g = p.g;
    let primes = p.primes()?;
    let mut pairs = 0i64;
    let mut bad = None;
    for prime in &primes {
        let rest = g.vertices().difference(prime.cut_set);
        for v in rest.iter() {
            pairs += 1;
            let saturated = g.saturate_neighborhood(v)?.components_within(rest);
            if saturated != prime.components && bad.is_none() {
                bad = Some(format!(
                    "T={{{}}}, v={}",
                    labels(g, prime.cut_set),
                    g.label(v)
                ));
            }
        }
    }
    Ok((
        Verdict::of(bad.is_none()),
        values([("primes", primes.len() as i64), ("pairs", pairs)]),
        bad,
    ))
}

fn prime_deletion(p: &Profile) -> Outcome {
    let g = p.g;
    let primes = p.primes()?;
    let mut pairs = 0i64;
    let mut bad = None;
    for prime in &primes {
        for v in prime.cut_set.iter() {
            pairs += 1;
            let (h, orig) = g.induced(g.vertices().difference(VertexSet::singleton(v)))?;
            let inner: VertexSet = prime
                .cut_set
                .iter()
                .filter(|&u| u != v)
                .map(|u| orig.iter().position(|&o| o == u).unwrap())
                .collect();
            let mut comps: Vec<VertexSet> = h
                .components_within(h.vertices().difference(inner))
                .into_iter()
                .map(|c| c.iter().map(|u| orig[u]).collect())
                .collect();
            comps.sort_by_key(|c| c.first());
            if comps != prime.components && bad.is_none() {
                bad = Some(format!(
                    "T={{{}}}, v={}",
                    labels(g, prime.cut_set),
                    g.label(v)
                ));
            }
        }
    }
    Ok((
        Verdict::of(bad.is_none()),
        values([("primes", primes.len() as i64), ("pairs", pairs)]),
        bad,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        assert!("Thm".parse::<CheckId>().is_err());
    }
}
