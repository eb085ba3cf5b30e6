//! Regularity and Hilbert series of `S/J_G`, `S = K[x_1..x_n, y_1..y_n]`.
//!
//! The pipeline is: reduced lex Gröbner basis from admissible paths, its
//! squarefree initial ideal, then Hochster's formula on the Stanley–Reisner
//! complex of that ideal. Variable `x_i` is slot `i - 1`, `y_i` is slot
//! `n + i - 1`, and the lex order is `x_1 > ... > x_n > y_1 > ... > y_n`.

mod admissible;
mod betti;
mod buchberger;
mod hilbert;
mod homology;
mod ideal;
mod monomial;
mod poly;

pub use admissible::{admissible_path_basis, admissible_paths, AdmissiblePath, MAX_BASIS_VERTICES};
pub use betti::{
    betti_table, graph_betti_table, regularity, regularity_of_ideal, regularity_over, BettiTable,
    HochsterEngine, MAX_HOCHSTER_SLOTS, MAX_REGULARITY_VERTICES,
};
pub use buchberger::{
    buchberger_binomial_oracle, edge_binomials, lead_monomials, MAX_ORACLE_VERTICES,
};
pub use hilbert::{
    h_polynomial_of_ideal, hilbert_h_polynomial, join_h_polynomial_closed_form, HPolynomial,
};
pub use homology::{reduced_betti_numbers, Complex};
pub use ideal::{initial_ideal_of_graph, lex_initial_ideal, SquarefreeMonomialIdeal};
pub use monomial::{Binomial, Monomial};
pub use poly::Poly;

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    /// The two-element field.
    #[default]
    F2,
    /// The rationals, via exact integer elimination.
    Rationals,
}
