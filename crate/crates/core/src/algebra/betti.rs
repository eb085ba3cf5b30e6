//! Graded Betti numbers of `S/I` for squarefree `I` by Hochster's formula:
//! `β_{i,j} = Σ_{|W| = j} dim H~_{j-i-1}(Δ_W)`.
//!
//! Only subsets `W` that are unions of the generators they contain can
//! contribute; for any other `W` some vertex of `W` lies in no generator
//! inside `W` and `Δ_W` is a cone over it. The subset loop is exposed over
//! mask ranges so callers can split it across threads.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use super::{
    initial_ideal_of_graph, reduced_betti_numbers, Complex, Field, SquarefreeMonomialIdeal,
};
use crate::{Error, Graph, Result};

/// Largest ambient variable count the subset loop accepts.
pub const MAX_HOCHSTER_SLOTS: usize = 20;
/// Largest graph handed to the regularity pipeline (two slots per vertex).
pub const MAX_REGULARITY_VERTICES: usize = 10;

/// Sparse graded Betti table of `S/I`, without the `β_{0,0}` entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: usize, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `((i, j), rank)` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max(j - i)`; `0` for the zero ideal.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (&(i, j), &r) in &other.entries {
            self.add(i, j, r);
        }
    }
}

/// Hochster subset loop for one ideal.
#[derive(Clone, Debug)]
pub struct HochsterEngine {
    nvars: usize,
    field: Field,
    gens: Vec<u64>,
    facets: Vec<u64>,
}

impl HochsterEngine {
    pub fn new(ideal: &SquarefreeMonomialIdeal, field: Field) -> Result<Self> {
        if ideal.nvars() > MAX_HOCHSTER_SLOTS {
            return Err(Error::SizeCap {
                what: "Hochster subset loop",
                n: ideal.nvars(),
                cap: MAX_HOCHSTER_SLOTS,
            });
        }
        Ok(HochsterEngine {
            nvars: ideal.nvars(),
            field,
            gens: ideal.generators().to_vec(),
            facets: ideal.facets(),
        })
    }

    /// Masks run over `0..subset_count()`.
    pub fn subset_count(&self) -> u64 {
        1u64 << self.nvars
    }

    fn is_closed(&self, w: u64) -> bool {
        w != 0
            && self
                .gens
                .iter()
                .filter(|&&g| g & !w == 0)
                .fold(0, |m, g| m | g)
                == w
    }

    /// Contribution of the masks in `range` to the Betti table.
    pub fn betti_range(&self, range: Range<u64>) -> BettiTable {
        let mut table = BettiTable::new();
        for w in range {
            if !self.is_closed(w) {
                continue;
            }
            let size = w.count_ones() as usize;
            let complex = Complex::from_faces(self.facets.iter().map(|f| f & w));
            for (idx, &rank) in reduced_betti_numbers(&complex, self.field)
                .iter()
                .enumerate()
            {
                // idx = k + 1, i = |W| - k - 1
                table.add(size - idx, size, rank);
            }
        }
        table
    }

    /// Largest `k + 1` with `H~_k(Δ_W) ≠ 0` over `W` in `range`, or `floor`
    /// if nothing beats it. Subsets whose restriction is too small to beat
    /// the running maximum are skipped.
    pub fn regularity_range(&self, range: Range<u64>, floor: usize) -> usize {
        let mut best = floor;
        for w in range.rev() {
            let bound = self
                .facets
                .iter()
                .map(|f| (f & w).count_ones())
                .max()
                .unwrap_or(0) as usize;
            if bound <= best || !self.is_closed(w) {
                continue;
            }
            let complex = Complex::from_faces(self.facets.iter().map(|f| f & w));
            let homology = reduced_betti_numbers(&complex, self.field);
            if let Some(top) = homology.iter().rposition(|&r| r > 0) {
                best = best.max(top);
            }
        }
        best
    }
}

pub fn betti_table(ideal: &SquarefreeMonomialIdeal, field: Field) -> Result<BettiTable> {
    let engine = HochsterEngine::new(ideal, field)?;
    Ok(engine.betti_range(0..engine.subset_count()))
}

pub fn regularity_of_ideal(ideal: &SquarefreeMonomialIdeal, field: Field) -> Result<usize> {
    let engine = HochsterEngine::new(ideal, field)?;
    Ok(engine.regularity_range(0..engine.subset_count(), 0))
}

fn check_regularity_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_REGULARITY_VERTICES {
        return Err(Error::SizeCap {
            what: "regularity",
            n: g.n(),
            cap: MAX_REGULARITY_VERTICES,
        });
    }
    Ok(())
}

/// Betti table of the squarefree lex initial ideal of `J_G`.
pub fn graph_betti_table(g: &Graph, field: Field) -> Result<BettiTable> {
    check_regularity_size(g)?;
    betti_table(&initial_ideal_of_graph(g)?, field)
}

/// `reg S/J_G` over the two-element field.
pub fn regularity(g: &Graph) -> Result<usize> {
    regularity_over(g, Field::F2)
}

pub fn regularity_over(g: &Graph, field: Field) -> Result<usize> {
    check_regularity_size(g)?;
    regularity_of_ideal(&initial_ideal_of_graph(g)?, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    #[test]
    fn principal_ideal() {
        let i = SquarefreeMonomialIdeal::new(4, [0b1001]);
        let t = betti_table(&i, Field::F2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), alloc::vec![((1, 2), 1)]);
        assert_eq!(t.regularity(), 1);
    }

    #[test]
    fn zero_ideal() {
        let i = SquarefreeMonomialIdeal::new(4, []);
        assert!(betti_table(&i, Field::F2).unwrap().is_empty());
        assert_eq!(regularity_of_ideal(&i, Field::F2).unwrap(), 0);
    }

    #[test]
    fn complete_intersection() {
        // (x1 y2, x2 y3) in 6 variables: Koszul, β_{1,2}=2, β_{2,4}=1
        let i = SquarefreeMonomialIdeal::new(6, [1 | 1 << 4, 1 << 1 | 1 << 5]);
        let t = betti_table(&i, Field::F2).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.regularity(), 2);
    }

    #[test]
    fn pruned_loop_matches_table() {
        for g in [
            family::path(4).unwrap(),
            family::cycle(4).unwrap(),
            Graph::complete(3).unwrap(),
            family::star(3).unwrap(),
        ] {
            let table = graph_betti_table(&g, Field::F2).unwrap();
            assert_eq!(regularity(&g).unwrap(), table.regularity(), "{g:?}");
        }
    }

    #[test]
    fn small_regularities() {
        assert_eq!(regularity(&Graph::complete(3).unwrap()).unwrap(), 1);
        assert_eq!(regularity(&family::path(4).unwrap()).unwrap(), 3);
        assert_eq!(regularity(&Graph::empty(3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn split_ranges_merge() {
        let ideal = initial_ideal_of_graph(&family::cycle(4).unwrap()).unwrap();
        let engine = HochsterEngine::new(&ideal, Field::F2).unwrap();
        let whole = engine.betti_range(0..engine.subset_count());
        let mid = engine.subset_count() / 3;
        let mut parts = engine.betti_range(0..mid);
        parts.merge(&engine.betti_range(mid..engine.subset_count()));
        assert_eq!(whole, parts);
        let reg = engine.regularity_range(0..mid, 0);
        assert_eq!(
            engine.regularity_range(mid..engine.subset_count(), reg),
            whole.regularity()
        );
    }

    #[test]
    fn size_cap() {
        assert!(regularity(&family::path(11).unwrap()).is_err());
    }
}
