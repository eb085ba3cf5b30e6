//! Strongly interval graphs.
//!
//! A connected strongly interval graph has a backbone `J_0 = [0]`,
//! `J_i = [i-1, i]` (`i = 1..=k`) and extra intervals `[a, b]` with integer
//! `a >= 0` and `a <= b < k`. For chordal graphs this class is exactly the
//! graphs with `L(G) = c(G)`; [`attempt_representation`] builds intervals
//! from a longest induced path and is the constructive half of that
//! equivalence.

use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::Zero;

use crate::chordal::is_chordal;
use crate::cliques::clique_count;
use crate::path::longest_induced_path;
use crate::{Error, Graph, Result, VertexSet};

/// Exact rational endpoint.
pub type Endpoint = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Self {
        Interval { lo, hi }
    }

    pub fn point(x: i64) -> Self {
        Interval::new(Ratio::from_integer(x), Ratio::from_integer(x))
    }

    pub fn int(lo: i64, hi: i64) -> Self {
        Interval::new(Ratio::from_integer(lo), Ratio::from_integer(hi))
    }

    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }
}

pub fn is_dyadic(x: &Endpoint) -> bool {
    let d = *x.denom();
    d > 0 && d & (d - 1) == 0
}

/// Backbone plus extras, with the graph vertex each interval stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRepresentation {
    pub k: usize,
    pub extras: Vec<Interval>,
    /// `vertex_map[i]` is the vertex of interval `i`, where intervals
    /// `0..=k` are the backbone and the extras follow.
    pub vertex_map: Vec<usize>,
}

impl IntervalRepresentation {
    pub fn backbone(k: usize) -> Vec<Interval> {
        let mut out = Vec::with_capacity(k + 1);
        out.push(Interval::point(0));
        out.extend((1..=k as i64).map(|i| Interval::int(i - 1, i)));
        out
    }

    /// All intervals, backbone first.
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out = Self::backbone(self.k);
        out.extend(self.extras.iter().copied());
        out
    }

    /// Checks the construction rules on every extra interval.
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Params("backbone length k must be at least 1".into()));
        }
        let count = self.k + 1 + self.extras.len();
        if self.vertex_map.len() != count
            || VertexSet::from_vertices(self.vertex_map.iter().copied()).len() != count
            || self.vertex_map.iter().any(|&v| v >= count)
        {
            return Err(Error::Params("vertex map is not a bijection".into()));
        }
        check_extras(self.k, &self.extras)
    }

    /// The intersection graph, vertices placed by `vertex_map`.
    pub fn realize(&self) -> Result<Graph> {
        let intervals = self.intervals();
        let mut inverse = alloc::vec![0usize; intervals.len()];
        for (i, &v) in self.vertex_map.iter().enumerate() {
            inverse[v] = i;
        }
        let ordered: Vec<Interval> = inverse.iter().map(|&i| intervals[i]).collect();
        realize_intervals(&ordered)
    }
}

fn check_extras(k: usize, extras: &[Interval]) -> Result<()> {
    let k = Ratio::from_integer(k as i64);
    for (index, iv) in extras.iter().enumerate() {
        if !iv.lo.is_integer() {
            return Err(Error::IntervalRule {
                index,
                clause: "left endpoint must be an integer",
            });
        }
        if iv.lo < Ratio::zero() {
            return Err(Error::IntervalRule {
                index,
                clause: "left endpoint must be non-negative",
            });
        }
        if iv.lo > iv.hi {
            return Err(Error::IntervalRule {
                index,
                clause: "left endpoint exceeds right endpoint",
            });
        }
        if iv.hi >= k {
            return Err(Error::IntervalRule {
                index,
                clause: "interval must avoid the point k",
            });
        }
    }
    Ok(())
}

/// Intersection graph of closed intervals; vertex `i` is `intervals[i]`.
pub fn realize_intervals(intervals: &[Interval]) -> Result<Graph> {
    for (index, iv) in intervals.iter().enumerate() {
        if iv.lo > iv.hi {
            return Err(Error::IntervalRule {
                index,
                clause: "left endpoint exceeds right endpoint",
            });
        }
    }
    let n = intervals.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if intervals[i].intersects(&intervals[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// Connected strongly interval graph from backbone length `k` and extra
/// intervals. Vertices `0..=k` are `J_0..J_k`, extras follow in order.
pub fn generate_strongly_interval(k: usize, extras: &[Interval]) -> Result<Graph> {
    let rep = IntervalRepresentation {
        k,
        extras: extras.to_vec(),
        vertex_map: (0..k + 1 + extras.len()).collect(),
    };
    rep.validate()?;
    rep.realize()
}

/// Every component is chordal with `L = c`. Single vertices fail, since the
/// backbone always has an edge.
pub fn is_strongly_interval(g: &Graph) -> Result<bool> {
    for comp in g.connected_components() {
        let (h, _) = g.induced(comp)?;
        if h.n() == 1 || !is_chordal(&h).is_chordal() {
            return Ok(false);
        }
        if longest_induced_path(&h)?.total() != clique_count(&h) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Interval model of a connected strongly interval graph; `None` when the
/// graph is not strongly interval.
pub fn interval_representation(g: &Graph) -> Result<Option<IntervalRepresentation>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_strongly_interval(g)? {
        return Ok(None);
    }
    let rep = attempt_representation(g)?;
    debug_assert!(rep.is_some(), "construction must succeed when L = c");
    Ok(rep)
}

/// Runs the longest-path construction on any connected graph and keeps the
/// result only if it satisfies the construction rules and realizes exactly
/// the edges of `g`.
///
/// With `P: 0..l` the certified longest induced path and each other vertex
/// `u` ordered by `(a_u, u)`, the `i`-th of `r` extras is
/// `[a_u, d_u - 1 + 2^-(r-i+1)]`, where `a_u`/`d_u` are the first/last path
/// positions adjacent to `u`.
pub fn attempt_representation(g: &Graph) -> Result<Option<IntervalRepresentation>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 1 {
        return Ok(None);
    }
    let cert = longest_induced_path(g)?;
    let path = &cert.paths[0];
    let k = path.len() - 1;
    let mut position = alloc::vec![usize::MAX; g.n()];
    for (i, &v) in path.iter().enumerate() {
        position[v] = i;
    }
    let on_path = VertexSet::from_vertices(path.iter().copied());
    let mut rest: Vec<(usize, usize, usize)> = Vec::new();
    for u in g.vertices().difference(on_path).iter() {
        let touched: Vec<usize> = g
            .neighbors(u)
            .intersection(on_path)
            .iter()
            .map(|v| position[v])
            .collect();
        let (Some(&a), Some(&d)) = (touched.iter().min(), touched.iter().max()) else {
            return Ok(None);
        };
        if d == 0 {
            return Ok(None);
        }
        rest.push((a, d, u));
    }
    rest.sort_by_key(|&(a, _, u)| (a, u));
    let r = rest.len();
    if r >= 62 {
        return Ok(None);
    }
    let mut extras = Vec::with_capacity(r);
    let mut vertex_map: Vec<usize> = path.clone();
    for (idx, &(a, d, u)) in rest.iter().enumerate() {
        let i = idx + 1;
        let frac = Ratio::new(1, 1i64 << (r - i + 1));
        let hi = Ratio::from_integer(d as i64 - 1) + frac;
        extras.push(Interval::new(Ratio::from_integer(a as i64), hi));
        vertex_map.push(u);
    }
    let rep = IntervalRepresentation {
        k,
        extras,
        vertex_map,
    };
    if rep.validate().is_err() {
        return Ok(None);
    }
    let realized = rep.realize()?;
    Ok((realized.rows() == g.rows()).then_some(rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Endpoint {
        Ratio::new(n, d)
    }

    #[test]
    fn generation_examples() {
        for r in 0..5 {
            let g = generate_strongly_interval(1, &vec![Interval::point(0); r]).unwrap();
            assert!(g.is_complete() && g.n() == r + 2);
        }
        for k in 1..8 {
            assert_eq!(
                generate_strongly_interval(k, &[]).unwrap(),
                family::path(k + 1).unwrap()
            );
        }
        let g = generate_strongly_interval(
            3,
            &[
                Interval::new(q(0, 1), q(1, 2)),
                Interval::new(q(1, 1), q(3, 2)),
            ],
        )
        .unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.is_connected());
        assert_eq!(clique_count(&g), 3);
    }

    #[test]
    fn generation_rejects_rule_violations() {
        let bad_left = [Interval::new(q(1, 3), q(1, 1))];
        assert!(matches!(
            generate_strongly_interval(2, &bad_left),
            Err(Error::IntervalRule { index: 0, .. })
        ));
        assert!(generate_strongly_interval(2, &[Interval::int(0, 2)]).is_err());
        assert!(generate_strongly_interval(2, &[Interval::int(1, 0)]).is_err());
        assert!(generate_strongly_interval(2, &[Interval::int(-1, 0)]).is_err());
        assert!(generate_strongly_interval(0, &[]).is_err());
    }

    #[test]
    fn realize_examples() {
        let p3 = realize_intervals(&[Interval::point(0), Interval::int(0, 1), Interval::int(1, 2)])
            .unwrap();
        assert_eq!(p3, family::path(3).unwrap());
        let g = realize_intervals(&crate::family::offset_intervals()).unwrap();
        assert_eq!(g.edge_count(), 9);
        let e = realize_intervals(&[Interval::point(0), Interval::point(1), Interval::int(2, 3)])
            .unwrap();
        assert_eq!(e.edge_count(), 0);
    }

    #[test]
    fn recognition_examples() {
        for n in 2..=8 {
            assert!(is_strongly_interval(&family::path(n).unwrap()).unwrap());
            assert!(is_strongly_interval(&Graph::complete(n).unwrap()).unwrap());
        }
        assert!(!is_strongly_interval(&family::friendship4()).unwrap());
        let offset = realize_intervals(&crate::family::offset_intervals()).unwrap();
        assert!(!is_strongly_interval(&offset).unwrap());
        assert!(!is_strongly_interval(&family::cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn representation_examples() {
        let rep = interval_representation(&family::path(3).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(
            rep.intervals(),
            vec![Interval::point(0), Interval::int(0, 1), Interval::int(1, 2)]
        );

        let rep = interval_representation(&Graph::complete(3).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(rep.k, 1);
        assert_eq!(rep.extras, vec![Interval::new(q(0, 1), q(1, 2))]);

        assert_eq!(
            interval_representation(&family::friendship4()).unwrap(),
            None
        );
        let two = Graph::empty(2).unwrap();
        assert_eq!(interval_representation(&two), Err(Error::Disconnected));
    }

    #[test]
    fn representation_round_trips() {
        let graphs = [
            family::path(6)
                .unwrap()
                .join(&Graph::complete(2).unwrap())
                .unwrap(),
            family::friendship(1).unwrap(),
            generate_strongly_interval(
                4,
                &[
                    Interval::int(0, 2),
                    Interval::new(q(1, 1), q(7, 4)),
                    Interval::int(3, 3),
                ],
            )
            .unwrap(),
        ];
        for g in &graphs {
            let rep = interval_representation(g)
                .unwrap()
                .expect("strongly interval");
            rep.validate().unwrap();
            assert_eq!(rep.realize().unwrap().rows(), g.rows());
            assert!(rep
                .extras
                .iter()
                .all(|iv| is_dyadic(&iv.lo) && is_dyadic(&iv.hi)));
        }
    }
}
