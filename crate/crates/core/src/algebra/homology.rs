//! Reduced simplicial homology of small complexes given by their facets.
//!
//! Before any matrix work the complex is shrunk by strong collapses: a vertex
//! `v` whose facets all share another vertex `w` can be deleted without
//! changing the homotopy type. Whatever core is left gets its boundary ranks
//! computed exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Field;
use crate::graph::Bits;

/// Simplicial complex on slots `0..64`, stored as its facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    facets: Vec<u64>,
}

impl Complex {
    /// Keeps the maximal sets. An empty input gives the complex `{∅}`.
    pub fn from_faces(faces: impl IntoIterator<Item = u64>) -> Self {
        let mut facets = maximal(faces.into_iter().collect());
        if facets.is_empty() {
            facets.push(0);
        }
        Complex { facets }
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |m, f| m | f)
    }

    /// `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    /// Induced subcomplex on `slots`.
    pub fn restrict(&self, slots: u64) -> Complex {
        Complex::from_faces(self.facets.iter().map(|f| f & slots))
    }

    pub fn is_cone(&self) -> bool {
        self.facets.iter().fold(u64::MAX, |m, f| m & f) != 0
    }

    /// Repeatedly deletes dominated vertices.
    pub fn strong_core(&self) -> Complex {
        let mut facets = self.facets.clone();
        'outer: while facets.len() > 1 {
            let verts = facets.iter().fold(0, |m, f| m | f);
            for v in Bits(verts) {
                let bit = 1u64 << v;
                let common = facets
                    .iter()
                    .filter(|&&f| f & bit != 0)
                    .fold(u64::MAX, |m, f| m & f);
                if common & !bit != 0 {
                    facets = maximal(facets.iter().map(|f| f & !bit).collect());
                    continue 'outer;
                }
            }
            break;
        }
        Complex { facets }
    }

    /// Every face, including the empty one, sorted by size then mask.
    pub fn faces(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                out.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        out.sort_unstable_by_key(|m| (m.count_ones(), *m));
        out.dedup();
        out
    }
}

fn maximal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| core::cmp::Reverse(s.count_ones()));
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// `out[k + 1] = dim H~_k(complex)` for `k = -1..=dim`.
pub fn reduced_betti_numbers(complex: &Complex, field: Field) -> Vec<u64> {
    let dim = complex.dimension();
    let mut out = vec![0u64; (dim + 2) as usize];
    if complex.facets == [0] {
        out[0] = 1;
        return out;
    }
    if complex.is_cone() {
        return out;
    }
    let core = complex.strong_core();
    if core.facets.len() == 1 {
        return out;
    }
    let faces = core.faces();
    let top = core.dimension() as usize + 1;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut rank = vec![0u64; top + 2];
    for s in 1..=top {
        rank[s] = boundary_rank(&by_size[s], &by_size[s - 1], field);
    }
    for s in 0..=top {
        let k = s; // faces of size s are (s-1)-simplices, stored at index s
        out[k] = by_size[s].len() as u64 - rank[s] - rank[s + 1];
    }
    out
}

fn boundary_rank(cells: &[u64], facets_below: &[u64], field: Field) -> u64 {
    if cells.is_empty() || facets_below.is_empty() {
        return 0;
    }
    let columns: Vec<Vec<(u32, bool)>> = cells
        .iter()
        .map(|&c| {
            let mut col: Vec<(u32, bool)> = Bits(c)
                .enumerate()
                .map(|(pos, v)| {
                    let idx = facets_below
                        .binary_search(&(c & !(1 << v)))
                        .expect("face closure");
                    (idx as u32, pos % 2 == 1)
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect();
    match field {
        Field::F2 => rank_f2(
            columns
                .into_iter()
                .map(|c| c.into_iter().map(|e| e.0).collect())
                .collect(),
            facets_below.len(),
        ),
        Field::Rationals => rank_rational(&columns, facets_below.len()),
    }
}

/// Column reduction over the two-element field; columns hold sorted row
/// indices.
fn rank_f2(columns: Vec<Vec<u32>>, rows: usize) -> u64 {
    let mut pivot_col: Vec<Option<usize>> = vec![None; rows];
    let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(columns.len());
    let mut rank = 0;
    for mut col in columns {
        while let Some(&low) = col.last() {
            match pivot_col[low as usize] {
                Some(p) => col = symmetric_difference(&col, &reduced[p]),
                None => {
                    pivot_col[low as usize] = Some(reduced.len());
                    rank += 1;
                    break;
                }
            }
        }
        reduced.push(col);
    }
    rank
}

fn symmetric_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Integer elimination with content removal; exact rank over the rationals.
fn rank_rational(columns: &[Vec<(u32, bool)>], rows: usize) -> u64 {
    let mut matrix: Vec<Vec<BigInt>> = columns
        .iter()
        .map(|col| {
            let mut dense = vec![BigInt::zero(); rows];
            for &(r, negative) in col {
                dense[r as usize] = if negative {
                    BigInt::from(-1)
                } else {
                    BigInt::from(1)
                };
            }
            dense
        })
        .collect();
    let mut rank = 0u64;
    let mut row = 0;
    let cols = matrix.len();
    // treat stored columns as matrix rows; rank is transpose invariant
    while row < rows && (rank as usize) < cols {
        let r = rank as usize;
        let Some(p) = (r..cols).find(|&i| !matrix[i][row].is_zero()) else {
            row += 1;
            continue;
        };
        matrix.swap(r, p);
        let pivot_row = matrix[r].clone();
        let a = pivot_row[row].clone();
        for line in matrix[r + 1..cols].iter_mut() {
            if line[row].is_zero() {
                continue;
            }
            let b = line[row].clone();
            let mut content = BigInt::zero();
            for (v, p) in line[row..rows].iter_mut().zip(&pivot_row[row..rows]) {
                *v = &a * &*v - &b * p;
                content = content.gcd(v);
            }
            if !content.is_zero() && content.abs() != BigInt::from(1) {
                for v in &mut line[row..rows] {
                    *v = &*v / &content;
                }
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere_boundary(vertices: usize) -> Complex {
        // boundary of a simplex on `vertices` slots
        let full = (1u64 << vertices) - 1;
        Complex::from_faces((0..vertices).map(|v| full & !(1 << v)))
    }

    #[test]
    fn spheres() {
        for d in 2..=6 {
            let c = sphere_boundary(d);
            for field in [Field::F2, Field::Rationals] {
                let b = reduced_betti_numbers(&c, field);
                let mut expected = vec![0u64; d];
                expected[d - 1] = 1;
                assert_eq!(b, expected, "simplex boundary on {d} vertices");
            }
        }
    }

    #[test]
    fn empty_face_only() {
        let c = Complex::from_faces([]);
        assert_eq!(reduced_betti_numbers(&c, Field::F2), vec![1]);
    }

    #[test]
    fn points_and_cones() {
        let three_points = Complex::from_faces([1, 2, 4]);
        assert_eq!(reduced_betti_numbers(&three_points, Field::F2), vec![0, 2]);
        let cone = Complex::from_faces([0b011, 0b110]);
        assert!(cone.is_cone());
        assert_eq!(reduced_betti_numbers(&cone, Field::F2), vec![0, 0, 0]);
    }

    #[test]
    fn projective_plane_depends_on_field() {
        // six-vertex triangulation of RP^2
        let tris: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let c = Complex::from_faces(tris.iter().map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v)));
        assert_eq!(reduced_betti_numbers(&c, Field::F2), vec![0, 0, 1, 1]);
        assert_eq!(
            reduced_betti_numbers(&c, Field::Rationals),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn octahedron_survives_collapse() {
        // join of three copies of S^0
        let mut faces = Vec::new();
        for code in 0..8u64 {
            let f = (0..3).fold(0u64, |m, i| m | 1 << (2 * i + (code >> i & 1)));
            faces.push(f);
        }
        let c = Complex::from_faces(faces);
        assert_eq!(c.strong_core(), c);
        assert_eq!(reduced_betti_numbers(&c, Field::F2), vec![0, 0, 0, 1]);
    }
}
