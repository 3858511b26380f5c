//! Finitely presented groups: words, presentations, combinators, bounded
//! Tietze simplification, abelianization and finite-quotient counting.

mod homs;
mod presentation;
mod snf;
mod tietze;
mod word;

pub use homs::{count_homs_to_sym, MAX_HOM_GENERATORS};
pub use presentation::{
    direct_product, direct_product_free_abelian, free_product, quotient_by_words, van_kampen_sum, GluingMap,
    Presentation,
};
pub use snf::{abelianization, exponent_matrix, smith_normal_form, AbelianInvariants, Snf};
pub use tietze::{tietze_simplify, DEFAULT_TIETZE_BUDGET};
pub use word::Word;

pub(crate) use presentation::surface_relator;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FpError {
    #[error("generator index {index} out of range ({count} generators)")]
    InvalidGenerator { index: usize, count: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("presentation parse error: {0}")]
    Parse(String),
    #[error("gluing map has {left} push-offs on the left but {right} images on the right")]
    GluingArity { left: usize, right: usize },
    #[error("hom enumeration bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T> = std::result::Result<T, FpError>;
