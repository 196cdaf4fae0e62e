//! H(B_GU(1)₊) as a free module over the cohomology of a point, on the
//! admissible monomials, with products computed by rewriting.

mod admissible;
mod class;
mod conc;
mod normalize;
pub mod oracle;
mod relations;
pub mod sample;
mod structure;
mod word;

pub use admissible::{
    admissible_basis, enumerate_admissible, is_admissible, monomial_in_coset, word_order, AdmissibleMonomial, Violation,
};
pub use class::BClass;
pub use conc::{conc_include, conc_preimage, conc_restrict};
pub use normalize::Engine;
pub use relations::{pivot_b, rz_matches_quotient, verify_relations, Term};
pub use structure::{check_lewis, delta_word, f_eg_matrix, f_teg_matrix, lewis_classes, teg_rows, CosetMatrix};
pub use word::{b_valid, canonical_b, chic_grading, pair_grading, s, xi1_grading, GeneratorWord};
