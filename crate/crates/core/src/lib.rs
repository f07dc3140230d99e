//! Exact computer algebra for key polynomials and multi-symmetric Schur
//! functions: sparse integer polynomial arithmetic with divided-difference
//! operators, diagram-filling enumeration, generalized dominance order on
//! multipartitions, Kostka and Schur expansions, and the plethystic
//! part-moving operators, every pipeline cross-checkable against a second
//! independent route.

pub mod classical;
pub mod error;
mod fillings;
pub mod key;
pub mod multisym;
pub mod operators;
pub mod order;
pub mod partition;
pub mod poly;

pub use error::{Error, Result};
pub use key::{enumerate_key_fillings, expand_in_key_basis, key_poly, key_poly_by_fillings, KeyFilling};
pub use multisym::{
    enumerate_multifillings, expand_in_ms_schur_basis, extract_monomial_expansion,
    kostka_coefficient, monomial_expansion, monomial_to_schur_expansion, ms_schur_poly,
    schur_expansion, support_equals_downset, xi_restrict, Basis, BlockShape, MultiFilling,
    MultiSymExpansion,
};
pub use operators::{
    add_single_variable, bernstein, d_finite, d_infinite, d_recurrence_check, straighten,
    SchurSeries,
};
pub use order::{
    apply_move, dominance_multi_less, down_set, lex_less_partitions, prec_less, Move, OrderWitness,
};
pub use partition::{
    enumerate_multipartitions, parse_composition, parse_multipartition, partitions_of, Composition,
    MultiPartition, Partition,
};
pub use poly::{Monomial, SparsePoly, Var};

/// Drop every internal memo (key polynomials and stable expansions). All
/// caches are semantically transparent; this only affects timing.
pub fn clear_caches() {
    key::clear_key_cache();
    multisym::clear_expansion_cache();
}
