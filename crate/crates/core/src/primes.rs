//! Minimal primes of binomial edge ideals, held combinatorially.
//!
//! `P_T(G)` is determined by the cut set `T` and the vertex partition of
//! `G - T`, so that is all a [`MinimalPrime`] stores.

use alloc::vec::Vec;

use crate::{Error, Graph, Result, VertexSet};

pub const MAX_PRIME_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrime {
    pub cut_set: VertexSet,
    /// Components of `G - T`, ordered by smallest vertex.
    pub components: Vec<VertexSet>,
    n: usize,
}

impl MinimalPrime {
    /// Builds the prime data for any `T` (cut point property not checked).
    pub fn for_set(g: &Graph, cut_set: VertexSet) -> Self {
        let components = g.components_within(g.vertices().difference(cut_set));
        MinimalPrime {
            cut_set,
            components,
            n: g.n(),
        }
    }

    /// `c(T)`.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// `dim S/P_T = (n - |T|) + c(T)`.
    pub fn dimension(&self) -> usize {
        self.n - self.cut_set.len() + self.components.len()
    }

    /// `2|T| + (n - |T|) - c(T)`.
    pub fn height(&self) -> usize {
        2 * self.cut_set.len() + (self.n - self.cut_set.len()) - self.components.len()
    }
}

/// Every `v` in `T` is a cut vertex of `G - (T \ {v})`.
pub fn has_cut_point_property(g: &Graph, cut_set: VertexSet) -> bool {
    let all = g.vertices();
    let base = g.component_count_within(all.difference(cut_set));
    cut_set.iter().all(|v| {
        let without_v = all.difference(cut_set).union(VertexSet::singleton(v));
        base > g.component_count_within(without_v)
    })
}

/// All `T` with the cut point property, ordered by `|T|` then mask.
///
/// A vertex with at most one neighbour can never separate anything, so only
/// subsets of the degree >= 2 vertices are tried.
pub fn minimal_primes(g: &Graph) -> Result<Vec<MinimalPrime>> {
    if g.n() > MAX_PRIME_VERTICES {
        return Err(Error::SizeCap {
            what: "minimal prime enumeration",
            n: g.n(),
            cap: MAX_PRIME_VERTICES,
        });
    }
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    let mut sets = Vec::new();
    for code in 0u64..1 << candidates.len() {
        let t = VertexSet(spread(code, &candidates));
        if has_cut_point_property(g, t) {
            sets.push(t);
        }
    }
    sets.sort_unstable_by_key(|t| (t.len(), t.0));
    Ok(sets
        .into_iter()
        .map(|t| MinimalPrime::for_set(g, t))
        .collect())
}

fn spread(code: u64, positions: &[usize]) -> u64 {
    positions
        .iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .fold(0, |m, (_, &v)| m | 1 << v)
}

/// Krull dimension of `S/J_G`: the largest dimension over minimal primes.
pub fn krull_dimension(g: &Graph) -> Result<usize> {
    Ok(minimal_primes(g)?
        .iter()
        .map(MinimalPrime::dimension)
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use alloc::vec;

    fn brute_force(g: &Graph) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = (0u64..1 << g.n())
            .map(VertexSet)
            .filter(|&t| has_cut_point_property(g, t))
            .collect();
        out.sort_unstable_by_key(|t| (t.len(), t.0));
        out
    }

    #[test]
    fn cut_point_examples() {
        let p3 = family::path(3).unwrap();
        assert!(has_cut_point_property(&p3, VertexSet::EMPTY));
        assert!(has_cut_point_property(&p3, VertexSet::singleton(1)));
        assert!(!has_cut_point_property(&p3, VertexSet::singleton(0)));
    }

    #[test]
    fn prime_lists() {
        for n in 1..=6 {
            let k = Graph::complete(n).unwrap();
            let ps = minimal_primes(&k).unwrap();
            assert_eq!(ps.len(), 1);
            assert!(ps[0].cut_set.is_empty());
            assert_eq!(krull_dimension(&k).unwrap(), n + 1);
        }
        let p3 = family::path(3).unwrap();
        let ps = minimal_primes(&p3).unwrap();
        let sets: Vec<VertexSet> = ps.iter().map(|p| p.cut_set).collect();
        assert_eq!(sets, brute_force(&p3));
        assert_eq!(sets, vec![VertexSet::EMPTY, VertexSet::singleton(1)]);
        assert_eq!(krull_dimension(&p3).unwrap(), 4);

        let windmill = family::friendship4();
        let sets: Vec<VertexSet> = minimal_primes(&windmill)
            .unwrap()
            .iter()
            .map(|p| p.cut_set)
            .collect();
        assert_eq!(sets, brute_force(&windmill));
        assert_eq!(sets, vec![VertexSet::EMPTY, VertexSet::singleton(8)]);
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        for g in [
            family::crowned_square(),
            family::caterpillar(3, &[1, 2, 1]).unwrap(),
            family::cycle(6).unwrap(),
            family::spider(&[2, 1, 1]).unwrap(),
        ] {
            let sets: Vec<VertexSet> = minimal_primes(&g)
                .unwrap()
                .iter()
                .map(|p| p.cut_set)
                .collect();
            assert_eq!(sets, brute_force(&g));
        }
    }

    #[test]
    fn join_dimension() {
        for m in 3..=5 {
            for t in 1..=3 {
                let g = family::path(m)
                    .unwrap()
                    .join(&Graph::complete(t).unwrap())
                    .unwrap();
                assert_eq!(krull_dimension(&g).unwrap(), m + t + 1);
            }
        }
    }

    #[test]
    fn height_and_dimension_partition_the_variables() {
        let g = family::friendship4();
        for p in minimal_primes(&g).unwrap() {
            assert_eq!(p.height() + p.dimension(), 2 * g.n());
        }
    }
}
