//! The group of the closure of a flat virtual braid, its Tietze
//! simplification, and its abelianization.

mod presentation;
mod smith;

pub use presentation::{
    abelianization, link_group, link_invariant, tietze_simplify, LinkInvariant, Presentation,
    DEFAULT_TIETZE_PASSES,
};
pub use smith::{smith_normal_form, AbelianInvariants, SmithForm};
