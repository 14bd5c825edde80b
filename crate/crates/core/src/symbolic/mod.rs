//! Exact polynomial identities behind the von Staudt construction: the
//! factorization of brackets of simplex vertices into `2x2` brackets, and the
//! vanishing of every `psi_{I,J}` on those vertices.

mod brackets;
mod poly;
mod psi;

pub use brackets::{
    bracket_sign, eval_factorization, factorization, factorization_rhs, sym_bracket_R, sym_determinant, sym_vertex,
    sym_vertices, two_bracket, verify_factorization, BracketFactorization, Side, SubsetSplit,
};
pub use poly::{Monomial, MultiPoly, Var};
pub use psi::{
    factored_monomials, h_sign, h_split, psi_full_expansion, shifted_binomial_parity, sign_case_holds, splits_for,
    step_two_parities, three_in_t1_exponents, transposition_parity, verify_psi_identity, verify_psi_identity_with,
    FactorizationCache, FactoredMonomial, PsiStrategy,
};
