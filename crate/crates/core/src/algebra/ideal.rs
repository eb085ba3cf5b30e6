use alloc::vec;
use alloc::vec::Vec;

use super::{admissible_path_basis, Binomial};
use crate::graph::{low_bits, Bits};
use crate::{Error, Graph, Result};

/// Squarefree monomial ideal held by its minimal generators as slot masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomialIdeal {
    gens: Vec<u64>,
    nvars: usize,
}

impl SquarefreeMonomialIdeal {
    /// Minimalizes `gens` (drops any generator divisible by another).
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = u64>) -> Self {
        let mut all: Vec<u64> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|&g| g & !low_bits(nvars) == 0));
        all.sort_unstable_by_key(|g| (g.count_ones(), *g));
        all.dedup();
        let mut minimal: Vec<u64> = Vec::with_capacity(all.len());
        for g in all {
            if !minimal.iter().any(|&m| m & !g == 0) {
                minimal.push(g);
            }
        }
        minimal.sort_unstable();
        SquarefreeMonomialIdeal {
            gens: minimal,
            nvars,
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the squarefree monomial `face` avoids the ideal, i.e. is a
    /// face of the Stanley–Reisner complex.
    pub fn is_face(&self, face: u64) -> bool {
        self.gens.iter().all(|&g| g & !face != 0)
    }

    /// For every slot `v`, the masks `g \ {v}` over generators `g` containing
    /// `v`: `F + v` is a face iff `F` contains none of them.
    pub(crate) fn blockers(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new(); self.nvars];
        for &g in &self.gens {
            for v in Bits(g) {
                out[v].push(g & !(1 << v));
            }
        }
        out
    }

    /// Walks every face of the Stanley–Reisner complex once.
    pub fn for_each_face(&self, mut visit: impl FnMut(u64, bool)) {
        let blockers = self.blockers();
        let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
        while let Some((face, from)) = stack.pop() {
            let addable = |v: usize| blockers[v].iter().all(|&b| b & !face != 0);
            let mut grows = false;
            for v in from..self.nvars {
                if addable(v) {
                    grows = true;
                    stack.push((face | 1 << v, v + 1));
                }
            }
            let maximal =
                !grows && (0..from.min(self.nvars)).all(|v| face >> v & 1 == 1 || !addable(v));
            visit(face, maximal);
        }
    }

    /// Facets of the Stanley–Reisner complex, sorted.
    pub fn facets(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.for_each_face(|f, maximal| {
            if maximal {
                out.push(f)
            }
        });
        out.sort_unstable();
        out
    }

    /// `f[i]` = number of faces with `i` vertices (`f[0] = 1` for the empty
    /// face).
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.nvars + 1];
        self.for_each_face(|face, _| f[face.count_ones() as usize] += 1);
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        f
    }
}

/// Lead monomials of a Gröbner basis as a squarefree ideal. Fails if any
/// lead is not squarefree.
pub fn lex_initial_ideal(basis: &[Binomial]) -> Result<SquarefreeMonomialIdeal> {
    let nvars = basis.first().map_or(0, |b| b.lead.nvars());
    let mut gens = Vec::with_capacity(basis.len());
    for (i, b) in basis.iter().enumerate() {
        gens.push(b.lead.squarefree_mask().ok_or(Error::NotSquarefree(i))?);
    }
    Ok(SquarefreeMonomialIdeal::new(nvars, gens))
}

/// `in_<(J_G)` from the admissible path basis.
pub fn initial_ideal_of_graph(g: &Graph) -> Result<SquarefreeMonomialIdeal> {
    let basis = admissible_path_basis(g)?;
    if basis.is_empty() {
        return Ok(SquarefreeMonomialIdeal::new(2 * g.n(), []));
    }
    lex_initial_ideal(&basis)
}
