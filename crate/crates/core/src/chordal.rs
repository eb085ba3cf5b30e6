//! Chordality by maximum-cardinality search.
//!
//! MCS yields a candidate ordering whose reverse is a perfect elimination
//! ordering exactly when the graph is chordal; the candidate is always
//! verified. On failure a chordless cycle of length at least four is
//! extracted as a witness.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Bits;
use crate::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// `order[0]` is eliminated first; the later neighbours of every vertex
    /// form a clique.
    Chordal { elimination_order: Vec<usize> },
    /// Consecutive vertices are adjacent, as are the last and first; no
    /// other pair is.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }

    pub fn elimination_order(&self) -> Option<&[usize]> {
        match self {
            Chordality::Chordal { elimination_order } => Some(elimination_order),
            Chordality::NotChordal { .. } => None,
        }
    }
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_elimination_order(g);
    if is_perfect_elimination_order(g, &order) {
        Chordality::Chordal {
            elimination_order: order,
        }
    } else {
        let cycle = chordless_cycle(g).expect("non-chordal graph has a chordless cycle");
        Chordality::NotChordal { cycle }
    }
}

/// Reverse of the maximum-cardinality-search visit order. Ties go to the
/// smallest vertex.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices().0;
    let mut visit = Vec::with_capacity(n);
    while unvisited != 0 {
        let v = Bits(unvisited)
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .unwrap();
        visit.push(v);
        unvisited &= !(1 << v);
        for w in Bits(g.rows()[v] & unvisited) {
            weight[w] += 1;
        }
    }
    visit.reverse();
    visit
}

pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        let nb = g.neighbors(v).intersection(later);
        if !g.is_clique(nb) {
            return false;
        }
    }
    true
}

/// A chordless cycle of length >= 4, or `None` when `g` is chordal.
///
/// For a vertex `v` with non-adjacent neighbours `u`, `w`, a shortest
/// `u`-`w` path avoiding the rest of `N[v]` closes a chordless cycle
/// through `v`.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nv = g.neighbors(v);
        for u in nv.iter() {
            for w in nv.iter().filter(|&w| w > u && !g.has_edge(u, w)) {
                let allowed = g
                    .vertices()
                    .difference(g.closed_neighbors(v))
                    .union(VertexSet::from_vertices([u, w]));
                if let Some(p) = shortest_path(g, u, w, allowed) {
                    let mut cycle = Vec::with_capacity(p.len() + 1);
                    cycle.push(v);
                    cycle.extend(p);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 && seen >> to & 1 == 0 {
        let mut next = 0u64;
        for x in Bits(frontier) {
            let fresh = g.rows()[x] & allowed.0 & !seen & !next;
            for y in Bits(fresh) {
                parent[y] = x;
            }
            next |= fresh;
        }
        seen |= next;
        frontier = next;
    }
    if seen >> to & 1 == 0 {
        return None;
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// Checks that `cycle` is a chordless cycle of `g` of length >= 4.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || VertexSet::from_vertices(cycle.iter().copied()).len() != k {
        return false;
    }
    (0..k).all(|i| {
        (0..k).filter(|&j| j != i).all(|j| {
            let consecutive = (i + 1) % k == j || (j + 1) % k == i;
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}
