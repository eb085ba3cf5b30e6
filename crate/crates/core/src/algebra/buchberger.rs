//! Plain Buchberger completion restricted to binomials `m1 - m2`.
//!
//! S-pairs and reductions of pure difference binomials stay pure difference
//! binomials, so no coefficient arithmetic is needed. This is the independent
//! cross-check for the admissible path basis and is only meant for small
//! graphs.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Binomial, Monomial};
use crate::{Error, Graph, Result};

pub const MAX_ORACLE_VERTICES: usize = 8;

/// The edge generators `f_ij` of `J_G`.
pub fn edge_binomials(g: &Graph) -> Vec<Binomial> {
    g.edges()
        .into_iter()
        .map(|(i, j)| Binomial::edge(g.n(), i, j))
        .collect()
}

/// Reduced lex Gröbner basis of the ideal generated by `gens`, sorted by
/// lead monomial (largest first).
pub fn buchberger_binomial_oracle(gens: &[Binomial]) -> Result<Vec<Binomial>> {
    let nvars = gens.first().map_or(0, |b| b.lead.nvars());
    if nvars > 2 * MAX_ORACLE_VERTICES {
        return Err(Error::SizeCap {
            what: "Buchberger oracle",
            n: nvars / 2,
            cap: MAX_ORACLE_VERTICES,
        });
    }
    let mut basis: Vec<Binomial> = Vec::new();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for g in gens {
        if let Some(r) = reduce(g.clone(), &basis) {
            add(&mut basis, &mut pairs, r);
        }
    }
    while let Some((a, b)) = pairs.pop_front() {
        let (p, q) = (&basis[a], &basis[b]);
        if p.lead.is_coprime(&q.lead) {
            continue;
        }
        let l = p.lead.lcm(&q.lead);
        let s = Binomial::oriented(l.div(&q.lead).mul(&q.trail), l.div(&p.lead).mul(&p.trail));
        if let Some(s) = s.and_then(|s| reduce(s, &basis)) {
            add(&mut basis, &mut pairs, s);
        }
    }
    Ok(interreduce(basis))
}

fn add(basis: &mut Vec<Binomial>, pairs: &mut VecDeque<(usize, usize)>, b: Binomial) {
    let k = basis.len();
    basis.push(b);
    pairs.extend((0..k).map(|i| (i, k)));
}

/// Full reduction: lead first, then trail, until neither is divisible by a
/// basis lead. `None` when the binomial reduces to zero.
fn reduce(mut b: Binomial, basis: &[Binomial]) -> Option<Binomial> {
    while let Some(g) = basis.iter().find(|g| g.lead.divides(&b.lead)) {
        let replaced = b.lead.div(&g.lead).mul(&g.trail);
        b = Binomial::oriented(replaced, b.trail)?;
    }
    while let Some(g) = basis.iter().find(|g| g.lead.divides(&b.trail)) {
        b.trail = b.trail.div(&g.lead).mul(&g.trail);
    }
    Some(b)
}

fn interreduce(mut basis: Vec<Binomial>) -> Vec<Binomial> {
    basis.sort_by(|a, b| {
        a.lead
            .degree()
            .cmp(&b.lead.degree())
            .then_with(|| b.lead.cmp(&a.lead))
    });
    let mut minimal: Vec<Binomial> = Vec::new();
    for b in basis {
        if !minimal.iter().any(|m| m.lead.divides(&b.lead)) {
            minimal.push(b);
        }
    }
    let reduced: Vec<Binomial> = (0..minimal.len())
        .map(|i| {
            let mut b = minimal[i].clone();
            let others: Vec<Binomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            while let Some(g) = others.iter().find(|g| g.lead.divides(&b.trail)) {
                b.trail = b.trail.div(&g.lead).mul(&g.trail);
            }
            b
        })
        .collect();
    let mut out = reduced;
    out.sort_by(|a, b| b.lead.cmp(&a.lead));
    out
}

/// Lead monomials of a basis, sorted.
pub fn lead_monomials(basis: &[Binomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = basis.iter().map(|b| b.lead.clone()).collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::admissible_path_basis;
    use crate::family;

    #[test]
    fn single_generator() {
        let f = Binomial::edge(2, 0, 1);
        assert_eq!(
            buchberger_binomial_oracle(core::slice::from_ref(&f)).unwrap(),
            alloc::vec![f]
        );
    }

    #[test]
    fn small_completions() {
        let p3 = family::path(3).unwrap();
        let gb = buchberger_binomial_oracle(&edge_binomials(&p3)).unwrap();
        assert_eq!(gb.len(), 2);

        let k3 = Graph::complete(3).unwrap();
        let gb = buchberger_binomial_oracle(&edge_binomials(&k3)).unwrap();
        // complete graphs are closed: the edge binomials already form a basis
        assert_eq!(gb.len(), 3);
        assert!(gb.iter().all(|b| b.lead.degree() == 2));
    }

    #[test]
    fn matches_admissible_paths_on_small_graphs() {
        let graphs = [
            Graph::from_one_based(3, [(1, 3), (2, 3)]).unwrap(),
            family::cycle(4).unwrap(),
            family::friendship4()
                .delete_vertices(crate::VertexSet::from_vertices([4, 5, 6, 7]))
                .unwrap(),
            family::star(3).unwrap(),
        ];
        for g in &graphs {
            let oracle = buchberger_binomial_oracle(&edge_binomials(g)).unwrap();
            let basis = admissible_path_basis(g).unwrap();
            assert_eq!(lead_monomials(&oracle), lead_monomials(&basis), "{g:?}");
            // reduced bases are unique, so the trails agree as well
            let mut a = oracle.clone();
            let mut b = basis.clone();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{g:?}");
        }
    }

    #[test]
    fn size_cap() {
        let g = family::path(9).unwrap();
        assert!(buchberger_binomial_oracle(&edge_binomials(&g)).is_err());
    }
}
