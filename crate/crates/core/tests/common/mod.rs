#![allow(dead_code)]

use bei_core::{Graph, VertexSet};
use proptest::prelude::*;

/// Graph on `lo..=hi` vertices with independently chosen edges.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Connected chordal graph built by attaching each new vertex to a clique.
pub fn chordal_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |choices| {
            let mut rows: Vec<u64> = vec![0];
            for v in 1..n {
                let cliques: Vec<u64> = (1u64..1 << v)
                    .filter(|&s| VertexSet(s).iter().all(|u| s & !(rows[u] | 1 << u) == 0))
                    .collect();
                let s = cliques[(choices[v] % cliques.len() as u64) as usize];
                for u in VertexSet(s).iter() {
                    rows[u] |= 1 << v;
                }
                rows.push(s);
            }
            Graph::from_rows(rows).unwrap()
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

pub fn induced_is_clique(g: &Graph, s: u64) -> bool {
    VertexSet(s)
        .iter()
        .all(|u| s & !(g.rows()[u] | 1 << u) == 0)
}

/// Maximal cliques by scanning all subsets.
pub fn brute_cliques(g: &Graph) -> Vec<u64> {
    let cliques: Vec<u64> = (1u64..1 << g.n())
        .filter(|&s| induced_is_clique(g, s))
        .collect();
    let mut maximal: Vec<u64> = cliques
        .iter()
        .copied()
        .filter(|&s| !cliques.iter().any(|&t| t != s && s & !t == 0))
        .collect();
    maximal.sort_unstable();
    maximal
}

fn induced_degrees(g: &Graph, s: u64) -> Vec<u32> {
    VertexSet(s)
        .iter()
        .map(|u| (g.rows()[u] & s).count_ones())
        .collect()
}

fn induced_connected(g: &Graph, s: u64) -> bool {
    let Some(start) = VertexSet(s).first() else {
        return false;
    };
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for u in VertexSet(frontier).iter() {
            next |= g.rows()[u] & s;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == s
}

/// Chordal iff no vertex subset of size at least 4 induces a cycle.
pub fn brute_chordal(g: &Graph) -> bool {
    (1u64..1 << g.n()).all(|s| {
        s.count_ones() < 4
            || !(induced_connected(g, s) && induced_degrees(g, s).iter().all(|&d| d == 2))
    })
}

/// Sum over components of the most edges of an induced path inside it.
pub fn brute_longest_induced_path(g: &Graph) -> usize {
    g.connected_components()
        .iter()
        .map(|comp| {
            (1u64..1 << g.n())
                .filter(|&s| s & !comp.0 == 0 && induced_connected(g, s))
                .filter(|&s| {
                    let d = induced_degrees(g, s);
                    d.iter().all(|&x| x <= 2)
                        && (s.count_ones() == 1 || d.iter().filter(|&&x| x == 1).count() == 2)
                })
                .map(|s| s.count_ones() as usize - 1)
                .max()
                .unwrap_or(0)
        })
        .sum()
}

/// Cut point property straight from the definition: removing `v` from
/// `G - (T \ v)` raises the component count.
pub fn brute_cut_point(g: &Graph, t: u64) -> bool {
    let count = |keep: u64| -> usize {
        let mut left = keep;
        let mut c = 0;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0;
                for u in VertexSet(frontier).iter() {
                    next |= g.rows()[u] & keep;
                }
                frontier = next & !seen;
                seen |= next;
            }
            left &= !seen;
            c += 1;
        }
        c
    };
    let all = g.vertices().0;
    VertexSet(t).iter().all(|v| {
        let base = all & !(t & !(1 << v));
        count(base & !(1 << v)) > count(base)
    })
}
