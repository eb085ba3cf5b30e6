//! Reduced lex Gröbner basis of `J_G` from admissible paths.
//!
//! A path `i = i_0, ..., i_r = j` with `i < j` is admissible when its
//! vertices are distinct, every interior vertex is `< i` or `> j`, and no
//! proper subset of the interior vertices also connects `i` to `j`. The last
//! condition is the same as the path being induced. Each admissible path
//! contributes `u * f_ij` with `u` the product of `x_v` over interior
//! `v > j` and `y_v` over interior `v < i`.

use alloc::vec::Vec;

use super::Binomial;
use crate::graph::Bits;
use crate::{Error, Graph, Result};

pub const MAX_BASIS_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub vertices: Vec<usize>,
}

impl AdmissiblePath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Slot mask of the cofactor `u`.
    pub fn cofactor(&self, n: usize) -> u64 {
        let (i, j) = (self.start(), self.end());
        self.vertices[1..self.vertices.len() - 1]
            .iter()
            .fold(0, |m, &v| {
                if v > j {
                    m | 1 << v
                } else {
                    debug_assert!(v < i);
                    m | 1 << (n + v)
                }
            })
    }

    pub fn binomial(&self, n: usize) -> Binomial {
        Binomial::edge_with_cofactor(n, self.start(), self.end(), self.cofactor(n))
    }
}

/// All admissible paths, ordered by `(i, j)` and then discovery order.
pub fn admissible_paths(g: &Graph) -> Result<Vec<AdmissiblePath>> {
    if g.n() > MAX_BASIS_VERTICES {
        return Err(Error::SizeCap {
            what: "admissible path basis",
            n: g.n(),
            cap: MAX_BASIS_VERTICES,
        });
    }
    let n = g.n();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    for i in 0..n {
        for j in i + 1..n {
            // interior vertices must lie outside [i, j]
            let outside = g.vertices().0 & !(((1u64 << (j + 1)) - 1) & !((1u64 << i) - 1));
            path.clear();
            path.push(i);
            walk(g, j, outside, 0, &mut path, &mut out);
        }
    }
    Ok(out)
}

/// Extends an induced path ending at `path.last()`. `blocked` is the union of
/// closed neighbourhoods of every path vertex but the last.
fn walk(
    g: &Graph,
    target: usize,
    outside: u64,
    blocked: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<AdmissiblePath>,
) {
    let end = *path.last().unwrap();
    let adj = g.rows();
    let next_blocked = blocked | adj[end] | 1 << end;
    let step = adj[end] & !blocked;
    if step >> target & 1 == 1 {
        path.push(target);
        out.push(AdmissiblePath {
            vertices: path.clone(),
        });
        path.pop();
    }
    for w in Bits(step & outside) {
        path.push(w);
        walk(g, target, outside, next_blocked, path, out);
        path.pop();
    }
}

/// `{u_pi * f_ij}` over all admissible paths: the reduced lex Gröbner basis
/// of `J_G`.
pub fn admissible_path_basis(g: &Graph) -> Result<Vec<Binomial>> {
    Ok(admissible_paths(g)?
        .iter()
        .map(|p| p.binomial(g.n()))
        .collect())
}
