//! Flat virtual braid groups acting on free and partially commutative groups.

pub mod braid;
pub mod endo;
pub mod error;
pub mod fox;
pub mod invariant;
pub mod reps;
pub mod words;

pub use braid::{BraidLetter, BraidMode, BraidWord, Permutation};
pub use endo::Endomorphism;
pub use error::{Error, Result};
pub use fox::{apply_linear, LaurentPoly, LinearKind, LinearRep, RingMatrix};
pub use reps::{apply_rep, BraidAction, RepKind, Representation};
pub use words::{Alphabet, Letter, Word};
