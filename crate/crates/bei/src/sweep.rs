//! Graph-family sweeps: every small graph up to isomorphism, or seeded
//! random chordal graphs and caterpillars, each run through [`check_graph`].

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use bei_core::canon::canonical_form;
use bei_core::chordal::is_chordal;
use bei_core::family::{caterpillar, is_path};
use bei_core::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{check_graph, CheckId, TheoremCheck, Verdict};
use crate::io::write_graph6;
use crate::Result;

/// Exhaustive mode enumerates `2^(n(n-1)/2)` labeled graphs.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 6;
/// Random graphs are handed to the regularity engine.
pub const MAX_RANDOM_VERTICES: usize = bei_core::algebra::MAX_REGULARITY_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    ConnectedChordal,
    Connected,
    Trees,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::ConnectedChordal => g.is_connected() && is_chordal(g).is_chordal(),
            Filter::Connected => g.is_connected(),
            Filter::Trees => g.is_tree(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SweepMode {
    /// All graphs on exactly `n` vertices passing `filter`, one per
    /// isomorphism class.
    Exhaustive { n: usize, filter: Filter },
    /// `count` random connected chordal graphs on `n` vertices.
    Random { n: usize, count: usize, seed: u64 },
    /// `count` random caterpillars that are not paths, at most `max_n`
    /// vertices each.
    Caterpillars {
        max_n: usize,
        count: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub fingerprint: String,
    pub n: usize,
    pub edges: usize,
    pub checks: Vec<TheoremCheck>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub graphs: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub observed: usize,
    pub error: usize,
    /// Failures and errors among required checks.
    pub required_failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub family: SweepMode,
    pub graphs: Vec<GraphReport>,
    pub counts: Counts,
    /// Per check id, `[pass, fail, n/a, observed, error]`.
    pub by_check: BTreeMap<CheckId, [usize; 5]>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn success(&self) -> bool {
        self.counts.required_failures == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.graphs
            .iter()
            .flat_map(|g| &g.checks)
            .filter(|c| c.is_failure())
    }
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("valid by construction")
    })
}

/// One canonical representative per isomorphism class among the graphs on
/// `n` vertices passing `filter`, ordered by graph6 string.
pub fn exhaustive_graphs(n: usize, filter: Filter) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_EXHAUSTIVE_VERTICES {
        return Err(bei_core::Error::SizeCap {
            what: "exhaustive sweep",
            n,
            cap: MAX_EXHAUSTIVE_VERTICES,
        }
        .into());
    }
    let mut classes = BTreeMap::new();
    for g in all_graphs(n).filter(|g| filter.accepts(g)) {
        let canon = canonical_form(&g)?;
        classes.entry(write_graph6(&canon)).or_insert(canon);
    }
    Ok(classes.into_values().collect())
}

fn all_cliques(g: &Graph) -> Vec<VertexSet> {
    (1u64..1 << g.n())
        .map(VertexSet)
        .filter(|&s| g.is_clique(s))
        .collect()
}

/// Starts from one vertex and repeatedly attaches a new vertex to a
/// uniformly chosen nonempty clique, so the result is connected and
/// chordal.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut g = Graph::empty(1)?;
    for v in 1..n {
        let cliques = all_cliques(&g);
        let chosen = cliques[rng.gen_range(0..cliques.len())];
        let mut rows = g.rows().to_vec();
        for u in chosen.iter() {
            rows[u] |= 1 << v;
        }
        rows.push(chosen.0);
        g = Graph::from_rows(rows)?;
    }
    Ok(g)
}

/// A caterpillar with at most `max_n` vertices and some vertex of degree at
/// least 3, with its vertices shuffled.
pub fn random_caterpillar(max_n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if max_n < 4 {
        return Err(bei_core::Error::Params(format!(
            "non-path caterpillars need 4 vertices, max_n={max_n}"
        ))
        .into());
    }
    loop {
        let n = rng.gen_range(4..=max_n);
        let spine = rng.gen_range(1..=n - 2);
        let mut legs = vec![0usize; spine];
        for _ in 0..n - spine {
            legs[rng.gen_range(0..spine)] += 1;
        }
        let g = caterpillar(spine, &legs)?;
        if is_path(&g) {
            continue;
        }
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(rng);
        return Ok(g.permute(&perm)?);
    }
}

/// The graphs a sweep visits, in report order.
pub fn sweep_graphs(mode: SweepMode) -> Result<Vec<Graph>> {
    match mode {
        SweepMode::Exhaustive { n, filter } => exhaustive_graphs(n, filter),
        SweepMode::Random { n, count, seed } => {
            if n == 0 || n > MAX_RANDOM_VERTICES {
                return Err(bei_core::Error::SizeCap {
                    what: "random sweep",
                    n,
                    cap: MAX_RANDOM_VERTICES,
                }
                .into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| random_chordal(n, &mut rng)).collect()
        }
        SweepMode::Caterpillars { max_n, count, seed } => {
            if max_n > MAX_RANDOM_VERTICES {
                return Err(bei_core::Error::SizeCap {
                    what: "caterpillar sweep",
                    n: max_n,
                    cap: MAX_RANDOM_VERTICES,
                }
                .into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| random_caterpillar(max_n, &mut rng))
                .collect()
        }
    }
}

/// Runs `checks` on every graph of `mode` in parallel; the report order is
/// the generation order.
pub fn sweep(mode: SweepMode, checks: &[CheckId]) -> Result<SweepReport> {
    let start = Instant::now();
    let graphs = sweep_graphs(mode)?;
    let reports: Vec<GraphReport> = graphs
        .par_iter()
        .map(|g| GraphReport {
            fingerprint: write_graph6(g),
            n: g.n(),
            edges: g.edge_count(),
            checks: check_graph(g, checks),
        })
        .collect();
    let mut counts = Counts {
        graphs: reports.len(),
        ..Counts::default()
    };
    let mut by_check: BTreeMap<CheckId, [usize; 5]> = BTreeMap::new();
    for c in reports.iter().flat_map(|r| &r.checks) {
        let slot = match c.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::NotApplicable => 2,
            Verdict::Observed => 3,
            Verdict::Error => 4,
        };
        by_check.entry(c.id).or_default()[slot] += 1;
        match c.verdict {
            Verdict::Pass => counts.pass += 1,
            Verdict::Fail => counts.fail += 1,
            Verdict::NotApplicable => counts.not_applicable += 1,
            Verdict::Observed => counts.observed += 1,
            Verdict::Error => counts.error += 1,
        }
        counts.required_failures += c.is_failure() as usize;
    }
    Ok(SweepReport {
        family: mode,
        graphs: reports,
        counts,
        by_check,
        elapsed: start.elapsed(),
    })
}
