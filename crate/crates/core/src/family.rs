//! Named graph families and the fixed example graphs used throughout the
//! test suites.

use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::interval::{realize_intervals, Interval};
use crate::{Error, Graph, Result};

/// Path `P_n` on vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

/// Star `K_{1,leaves}` with centre `0`.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::FamilyParams(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `k` triangles glued at a common centre. Outer vertices `2i, 2i+1` form
/// triangle `i`; the centre is the last vertex.
pub fn friendship(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::FamilyParams(
            "friendship graph needs at least one triangle".into(),
        ));
    }
    let centre = 2 * k;
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        edges.push((2 * i, 2 * i + 1));
        edges.push((2 * i, centre));
        edges.push((2 * i + 1, centre));
    }
    Graph::new(2 * k + 1, edges)
}

/// Caterpillar with spine `0..spine` and `legs[i]` pendant vertices on spine
/// vertex `i`. Pendant vertices are numbered after the spine in order.
pub fn caterpillar(spine: usize, legs: &[usize]) -> Result<Graph> {
    if spine == 0 || legs.len() != spine {
        return Err(Error::FamilyParams(format!(
            "caterpillar needs a nonempty spine and one leg count per spine vertex (spine={spine}, legs={})",
            legs.len()
        )));
    }
    let n = spine + legs.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for (s, &k) in legs.iter().enumerate() {
        for _ in 0..k {
            edges.push((s, next));
            next += 1;
        }
    }
    Graph::new(n, edges)
}

/// Spider: a centre `0` with one pendant path of each given length.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.contains(&0) {
        return Err(Error::FamilyParams(
            "spider legs must have positive length".into(),
        ));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(n, edges)
}

/// A non-chordal eight-vertex graph: the 4-cycle `1-2-3-4` with a
/// triangle hung on each of its edges (vertices 5..8).
pub fn crowned_square() -> Graph {
    Graph::from_one_based(
        8,
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 1),
            (5, 2),
            (6, 2),
            (6, 3),
            (7, 3),
            (7, 4),
            (8, 4),
            (8, 1),
        ],
    )
    .expect("fixture")
}

/// Four triangles sharing the centre vertex 9.
pub fn friendship4() -> Graph {
    friendship(4).expect("fixture")
}

/// Six intervals whose intersection graph is chordal with `L = 3` and
/// `c = 4`: the backbone `[0], [0,1], [1,2], [2,3]` plus `[0,1/2]` and
/// `[1/3,2]`. The second extra has a non-integer left end.
pub fn offset_intervals() -> Vec<Interval> {
    let q = Ratio::new;
    alloc::vec![
        Interval::point(0),
        Interval::int(0, 1),
        Interval::int(1, 2),
        Interval::int(2, 3),
        Interval::new(q(0, 1), q(1, 2)),
        Interval::new(q(1, 3), q(2, 1)),
    ]
}

pub fn offset_interval_graph() -> Graph {
    realize_intervals(&offset_intervals()).expect("fixture")
}

/// Whether `g` is a caterpillar tree: a tree whose non-leaf vertices induce
/// a path (or nothing).
pub fn is_caterpillar(g: &Graph) -> bool {
    if !g.is_tree() {
        return false;
    }
    if g.n() <= 2 {
        return true;
    }
    let inner = crate::VertexSet::from_vertices((0..g.n()).filter(|&v| g.degree(v) >= 2));
    inner
        .iter()
        .all(|v| g.neighbors(v).intersection(inner).len() <= 2)
}

/// Whether `g` is exactly a path graph (connected, max degree 2, acyclic).
pub fn is_path(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;

    #[test]
    fn family_shapes() {
        assert_eq!(path(4).unwrap().edge_count(), 3);
        assert_eq!(star(3).unwrap().degree(0), 3);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert!(friendship(0).is_err());
        let cat = caterpillar(3, &[1, 0, 2]).unwrap();
        assert_eq!(cat.n(), 6);
        assert!(is_caterpillar(&cat) && !is_path(&cat));
        assert!(caterpillar(3, &[1]).is_err());
        let sp = spider(&[2, 2, 2]).unwrap();
        assert_eq!(sp.n(), 7);
        assert!(sp.is_tree() && !is_caterpillar(&sp));
        assert!(spider(&[1, 0]).is_err());
    }

    #[test]
    fn fixtures() {
        let crowned = crowned_square();
        assert_eq!(crowned.edge_count(), 12);
        assert!(!is_chordal(&crowned).is_chordal());
        let windmill = friendship4();
        assert_eq!(windmill.n(), 9);
        assert!(is_chordal(&windmill).is_chordal());
    }

    #[test]
    fn path_recognition() {
        assert!(is_path(&path(1).unwrap()));
        assert!(is_path(&path(5).unwrap()));
        assert!(!is_path(&star(3).unwrap()));
        assert!(!is_path(&cycle(4).unwrap()));
        assert!(is_caterpillar(&star(4).unwrap()));
    }
}
