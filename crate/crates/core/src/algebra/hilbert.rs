//! Hilbert series `h(λ) / (1 - λ)^d` of `S/J_G`.
//!
//! `S/J_G` and `S/in(J_G)` share a Hilbert function, and the latter is a
//! Stanley–Reisner ring, so the series comes straight from the f-vector:
//! `Σ_i f_i λ^i / (1 - λ)^i` with `f_i` the number of faces on `i` vertices.

use alloc::vec;
use alloc::vec::Vec;

use super::{initial_ideal_of_graph, Poly, SquarefreeMonomialIdeal};
use crate::{Error, Graph, Result};

use super::betti::MAX_REGULARITY_VERTICES;

/// Numerator `h` and pole order `dim`, with `h(1) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPolynomial {
    pub coeffs: Vec<i128>,
    pub dim: usize,
}

impl HPolynomial {
    /// Reduces `numerator / (1 - λ)^dim` to lowest terms.
    pub fn reduced(mut numerator: Poly, mut dim: usize) -> Self {
        while dim > 0 {
            match numerator.div_one_minus_x() {
                Some(q) if !numerator.is_zero() => {
                    numerator = q;
                    dim -= 1;
                }
                _ => break,
            }
        }
        HPolynomial {
            coeffs: numerator.coeffs().to_vec(),
            dim,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.poly().eval(x)
    }
}

pub fn h_polynomial_of_ideal(ideal: &SquarefreeMonomialIdeal) -> HPolynomial {
    let f = ideal.f_vector();
    let top = f.len() - 1;
    let one_minus = Poly::new(vec![1, -1]);
    let mut h = Poly::default();
    for (i, &count) in f.iter().enumerate() {
        let term = &Poly::monomial(count as i128, i) * &one_minus.pow(top - i);
        h = &h + &term;
    }
    HPolynomial::reduced(h, top)
}

pub fn hilbert_h_polynomial(g: &Graph) -> Result<HPolynomial> {
    if g.n() > MAX_REGULARITY_VERTICES {
        return Err(Error::SizeCap {
            what: "Hilbert series",
            n: g.n(),
            cap: MAX_REGULARITY_VERTICES,
        });
    }
    Ok(h_polynomial_of_ideal(&initial_ideal_of_graph(g)?))
}

/// `(1-λ)^t ((1+λ)^{m-1} - mλ + λ - 1) + (m+t-1)λ + 1` over `(1-λ)^{m+t+1}`,
/// the series of the join of a path on `m` vertices with `K_t`.
pub fn join_h_polynomial_closed_form(m: usize, t: usize) -> Result<HPolynomial> {
    if m < 3 || t < 1 {
        return Err(Error::Params(alloc::format!(
            "closed form needs m >= 3 and t >= 1, got m={m}, t={t}"
        )));
    }
    let (mi, ti) = (m as i128, t as i128);
    let inner = &Poly::new(vec![1, 1]).pow(m - 1) - &Poly::new(vec![1, mi - 1]);
    let h = &(&Poly::new(vec![1, -1]).pow(t) * &inner) + &Poly::new(vec![1, mi + ti - 1]);
    Ok(HPolynomial::reduced(h, m + t + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::primes::krull_dimension;

    #[test]
    fn single_edge() {
        let h = hilbert_h_polynomial(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(
            h,
            HPolynomial {
                coeffs: vec![1, 1],
                dim: 3
            }
        );
    }

    #[test]
    fn closed_form_small_case() {
        let h = join_h_polynomial_closed_form(3, 1).unwrap();
        assert_eq!(
            h,
            HPolynomial {
                coeffs: vec![1, 3, 1, -1],
                dim: 5
            }
        );
        assert!(join_h_polynomial_closed_form(2, 1).is_err());
        assert!(join_h_polynomial_closed_form(3, 0).is_err());
    }

    #[test]
    fn join_matches_closed_form() {
        for (m, t) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
            let g = family::path(m)
                .unwrap()
                .join(&Graph::complete(t).unwrap())
                .unwrap();
            let h = hilbert_h_polynomial(&g).unwrap();
            assert_eq!(
                h,
                join_h_polynomial_closed_form(m, t).unwrap(),
                "m={m} t={t}"
            );
            assert_eq!(h.degree(), t + m - 1);
        }
    }

    #[test]
    fn dimension_matches_primes() {
        for g in [
            family::path(5).unwrap(),
            family::cycle(5).unwrap(),
            family::star(4).unwrap(),
            Graph::empty(2).unwrap(),
        ] {
            assert_eq!(
                hilbert_h_polynomial(&g).unwrap().dim,
                krull_dimension(&g).unwrap(),
                "{g:?}"
            );
        }
    }
}
