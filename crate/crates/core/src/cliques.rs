//! Maximal cliques (facets of the clique complex) and free vertices.

use alloc::vec::Vec;

use crate::chordal::{is_chordal, Chordality};
use crate::graph::Bits;
use crate::{Graph, VertexSet};

/// The facets of the clique complex, sorted by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamily {
    pub facets: Vec<VertexSet>,
}

impl CliqueFamily {
    /// `c(G)`.
    pub fn count(&self) -> usize {
        self.facets.len()
    }

    pub fn largest(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Number of facets containing `v`.
    pub fn membership(&self, v: usize) -> usize {
        self.facets.iter().filter(|f| f.contains(v)).count()
    }

    pub fn containing(&self, v: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets.iter().copied().filter(move |f| f.contains(v))
    }
}

/// Chordal inputs take the elimination-order fast path, everything else
/// goes through pivoting Bron–Kerbosch.
pub fn maximal_cliques(g: &Graph) -> CliqueFamily {
    match is_chordal(g) {
        Chordality::Chordal { elimination_order } => chordal_cliques(g, &elimination_order),
        Chordality::NotChordal { .. } => bron_kerbosch(g),
    }
}

/// `c(G)`.
pub fn clique_count(g: &Graph) -> usize {
    maximal_cliques(g).count()
}

/// Facets from a perfect elimination ordering: each vertex with its later
/// neighbours, keeping the maximal ones.
pub fn chordal_cliques(g: &Graph, elimination_order: &[usize]) -> CliqueFamily {
    let mut later = g.vertices();
    let mut candidates = Vec::with_capacity(g.n());
    for &v in elimination_order {
        later.remove(v);
        candidates.push(
            g.neighbors(v)
                .intersection(later)
                .union(VertexSet::singleton(v)),
        );
    }
    CliqueFamily {
        facets: maximal_sets(candidates),
    }
}

/// Bron–Kerbosch with Tomita pivoting on bit rows.
pub fn bron_kerbosch(g: &Graph) -> CliqueFamily {
    let mut facets = Vec::new();
    expand(g.rows(), 0, g.vertices().0, 0, &mut facets);
    facets.sort_unstable();
    CliqueFamily { facets }
}

fn expand(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet(r));
        }
        return;
    }
    let pivot = Bits(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .unwrap();
    for v in Bits(p & !adj[pivot]) {
        expand(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Keeps the inclusion-maximal sets, deduplicated and sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| core::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Vertices lying in exactly one maximal clique.
pub fn free_vertices(g: &Graph) -> VertexSet {
    free_vertices_of(g, &maximal_cliques(g))
}

pub fn free_vertices_of(g: &Graph, family: &CliqueFamily) -> VertexSet {
    (0..g.n()).filter(|&v| family.membership(v) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use alloc::vec;

    #[test]
    fn complete_has_one_facet() {
        for n in 1..=8 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(maximal_cliques(&k).count(), 1);
            assert_eq!(free_vertices(&k), k.vertices());
        }
    }

    #[test]
    fn windmill_triangles() {
        let g = family::friendship4();
        let fam = maximal_cliques(&g);
        assert_eq!(fam.count(), 4);
        assert!(fam.facets.iter().all(|f| f.len() == 3));
        assert_eq!(free_vertices(&g), VertexSet::full(8));
    }

    #[test]
    fn join_of_path_and_complete() {
        for m in 3..=6 {
            for t in 1..=4 {
                let g = family::path(m)
                    .unwrap()
                    .join(&Graph::complete(t).unwrap())
                    .unwrap();
                assert_eq!(clique_count(&g), m - 1, "m={m} t={t}");
            }
        }
    }

    #[test]
    fn path_leaves_are_free() {
        let p4 = family::path(4).unwrap();
        assert_eq!(free_vertices(&p4), VertexSet::from_vertices([0, 3]));
    }

    #[test]
    fn crowned_square_is_four_triangles() {
        let g = family::crowned_square();
        let fam = maximal_cliques(&g);
        assert_eq!(fam.count(), 4);
        for v in 0..8 {
            let gv = g.saturate_neighborhood(v).unwrap();
            assert_eq!(clique_count(&gv), 4, "vertex {v}");
        }
    }

    #[test]
    fn chordal_fast_path_matches_bron_kerbosch() {
        let graphs = vec![
            family::friendship4(),
            family::caterpillar(4, &[2, 0, 1, 3]).unwrap(),
            family::path(6)
                .unwrap()
                .join(&Graph::complete(3).unwrap())
                .unwrap(),
            family::spider(&[2, 2, 1]).unwrap(),
        ];
        for g in graphs {
            let order = is_chordal(&g);
            let order = order.elimination_order().unwrap();
            assert_eq!(chordal_cliques(&g, order), bron_kerbosch(&g));
        }
    }
}
