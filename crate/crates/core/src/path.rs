//! Exact longest induced paths.
//!
//! Depth-first extension: a path may only grow into vertices that are not
//! adjacent to any path vertex other than its current end. Branches are cut
//! when even taking every still-available vertex could not beat the best
//! path found. Starts and extensions are tried in increasing vertex order and
//! the best is only replaced on a strict improvement, so the certificate is
//! the lexicographically smallest longest path.

use alloc::vec::Vec;

use crate::graph::Bits;
use crate::{Error, Graph, Result, VertexSet};

pub const MAX_SEARCH_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPathCertificate {
    /// One longest induced path per connected component, in component order.
    pub paths: Vec<Vec<usize>>,
}

impl InducedPathCertificate {
    /// `L(G)`: total number of edges over all component paths.
    pub fn total(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }

    /// Re-checks every path against `g`: consecutive vertices adjacent, no
    /// chords, one path per component lying inside it.
    pub fn validate(&self, g: &Graph) -> bool {
        let comps = g.connected_components();
        comps.len() == self.paths.len()
            && comps.iter().zip(&self.paths).all(|(comp, p)| {
                !p.is_empty() && p.iter().all(|&v| comp.contains(v)) && is_induced_path(g, p)
            })
    }
}

pub fn is_induced_path(g: &Graph, p: &[usize]) -> bool {
    if VertexSet::from_vertices(p.iter().copied()).len() != p.len() {
        return false;
    }
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1)))
}

/// Longest induced path of every connected component. The graph is limited
/// to [`MAX_SEARCH_VERTICES`] vertices.
pub fn longest_induced_path(g: &Graph) -> Result<InducedPathCertificate> {
    if g.n() > MAX_SEARCH_VERTICES {
        return Err(Error::SizeCap {
            what: "longest induced path search",
            n: g.n(),
            cap: MAX_SEARCH_VERTICES,
        });
    }
    let paths = g
        .connected_components()
        .into_iter()
        .map(|comp| longest_in_component(g, comp))
        .collect();
    Ok(InducedPathCertificate { paths })
}

/// `L(G)`.
pub fn longest_induced_path_length(g: &Graph) -> Result<usize> {
    longest_induced_path(g).map(|c| c.total())
}

fn longest_in_component(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let mut search = Search {
        adj: g.rows(),
        best: Vec::new(),
        path: Vec::with_capacity(comp.len()),
        limit: comp.len(),
    };
    for s in comp.iter() {
        search.path.push(s);
        // `blocked` collects closed neighbourhoods of all path vertices but
        // the last one.
        search.extend(s, 0, comp.0 & !(1 << s));
        search.path.pop();
        if search.best.len() == search.limit {
            break;
        }
    }
    search.best
}

struct Search<'a> {
    adj: &'a [u64],
    best: Vec<usize>,
    path: Vec<usize>,
    limit: usize,
}

impl Search<'_> {
    fn extend(&mut self, end: usize, blocked: u64, available: u64) {
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
        }
        // everything still available could at best be appended
        let reachable = available & !blocked;
        if self.path.len() + reachable.count_ones() as usize <= self.best.len() {
            return;
        }
        let closed_end = self.adj[end] | 1 << end;
        let next_blocked = blocked | closed_end;
        for w in Bits(self.adj[end] & reachable) {
            self.path.push(w);
            self.extend(w, next_blocked, available & !next_blocked);
            self.path.pop();
            if self.best.len() == self.limit {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use alloc::vec;

    /// Brute force over all vertex sequences via subsets: a subset induces a
    /// path iff it is connected with |S|-1 edges and max degree <= 2.
    fn oracle(g: &Graph) -> usize {
        g.connected_components()
            .into_iter()
            .map(|comp| {
                let verts = comp.to_vec();
                let mut best = 0;
                for code in 1u32..1 << verts.len() {
                    let s = VertexSet::from_vertices(
                        verts
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| code >> i & 1 == 1)
                            .map(|(_, &v)| v),
                    );
                    let degs: Vec<usize> = s
                        .iter()
                        .map(|v| g.neighbors(v).intersection(s).len())
                        .collect();
                    let edges: usize = degs.iter().sum::<usize>() / 2;
                    if edges + 1 == s.len()
                        && degs.iter().all(|&d| d <= 2)
                        && g.component_count_within(s) == 1
                    {
                        best = best.max(edges);
                    }
                }
                best
            })
            .sum()
    }

    #[test]
    fn paths_and_fixtures() {
        for n in 1..=10 {
            assert_eq!(
                longest_induced_path_length(&family::path(n).unwrap()).unwrap(),
                n - 1
            );
        }
        assert_eq!(
            longest_induced_path_length(&family::friendship4()).unwrap(),
            2
        );
        let crowned = family::crowned_square();
        let cert = longest_induced_path(&crowned).unwrap();
        assert_eq!(cert.total(), 4);
        assert!(cert.validate(&crowned));
        assert_eq!(oracle(&crowned), 4);
    }

    #[test]
    fn certificate_is_lexicographically_first() {
        let c = longest_induced_path(&family::cycle(6).unwrap()).unwrap();
        assert_eq!(c.paths, vec![vec![0, 1, 2, 3, 4]]);
        let k = longest_induced_path(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(k.paths, vec![vec![0, 1]]);
        let e = longest_induced_path(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(e.total(), 0);
        assert_eq!(e.paths.len(), 3);
    }

    #[test]
    fn agrees_with_subset_oracle() {
        let graphs = [
            family::caterpillar(3, &[2, 1, 2]).unwrap(),
            family::spider(&[2, 2, 2]).unwrap(),
            family::cycle(7).unwrap(),
            family::friendship(3).unwrap(),
            family::path(5)
                .unwrap()
                .join(&Graph::complete(2).unwrap())
                .unwrap(),
            family::crowned_square()
                .disjoint_union(&family::path(3).unwrap())
                .unwrap(),
        ];
        for g in &graphs {
            let cert = longest_induced_path(g).unwrap();
            assert!(cert.validate(g));
            assert_eq!(cert.total(), oracle(g), "{g:?}");
        }
    }

    #[test]
    fn size_cap() {
        let g = family::path(21).unwrap();
        assert!(matches!(
            longest_induced_path(&g),
            Err(Error::SizeCap { .. })
        ));
    }
}
