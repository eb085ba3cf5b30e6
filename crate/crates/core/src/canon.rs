//! Canonical relabeling for small graphs by exhaustive search.
//!
//! Vertices are first grouped by degree; only orderings that list the degree
//! classes in ascending degree are tried, and the lexicographically smallest
//! upper-triangle adjacency string wins. Isomorphisms preserve degree classes,
//! so isomorphic graphs get the same form.

use alloc::vec::Vec;

use crate::{Error, Graph, Result};

/// Largest graph the search accepts (`8!` orderings in the worst case).
pub const MAX_CANON_VERTICES: usize = 8;

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_permutation(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::SizeCap {
            what: "canonical labeling",
            n,
            cap: MAX_CANON_VERTICES,
        });
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(alloc::vec![v]),
        }
    }
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    let mut order: Vec<usize> = Vec::with_capacity(n);
    search(g, &classes, 0, &mut Vec::new(), &mut order, &mut best);
    let (_, order) = best.expect("at least one ordering");
    let mut perm = alloc::vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

fn key(g: &Graph, order: &[usize]) -> Vec<bool> {
    let mut bits = Vec::with_capacity(order.len() * order.len() / 2);
    for j in 1..order.len() {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

fn search(
    g: &Graph,
    classes: &[Vec<usize>],
    class: usize,
    used: &mut Vec<usize>,
    order: &mut Vec<usize>,
    best: &mut Option<(Vec<bool>, Vec<usize>)>,
) {
    if class == classes.len() {
        let k = key(g, order);
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            *best = Some((k, order.clone()));
        }
        return;
    }
    let members = &classes[class];
    if used.len() == members.len() {
        let mut fresh = Vec::new();
        search(g, classes, class + 1, &mut fresh, order, best);
        return;
    }
    for &v in members {
        if used.contains(&v) {
            continue;
        }
        used.push(v);
        order.push(v);
        search(g, classes, class, used, order, best);
        order.pop();
        used.pop();
    }
}

/// The canonical representative of the isomorphism class of `g`, without
/// labels.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    g.unlabeled().permute(&canonical_permutation(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    #[test]
    fn relabeled_paths_agree() {
        let a = family::path(5).unwrap();
        let b = a.permute(&[3, 0, 4, 1, 2]).unwrap();
        assert_ne!(a, b);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let star = family::star(3).unwrap();
        let path = family::path(4).unwrap();
        assert_ne!(
            canonical_form(&star).unwrap(),
            canonical_form(&path).unwrap()
        );
    }
}
