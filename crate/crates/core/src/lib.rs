//! Exact t-analogues of q-characters for quantum loop algebras of type ADE.
//!
//! The pipeline runs in three steps: the t-deformed Frenkel–Mukhin expansion
//! of l-fundamental characters ([`fm`]), twisted products giving standard
//! modules ([`tensor`]), and the Lusztig bar-recursion giving multiplicities
//! of simple modules ([`kl`]). [`restrict`] derives weight multiplicities and
//! branching for the finite-type subalgebra.

pub mod cache;
pub mod cartan;
pub mod engine;
pub mod error;
pub mod fm;
pub mod format;
pub mod kl;
pub mod qchar;
pub mod restrict;
pub mod tensor;
pub mod tlaurent;
pub mod ymonomial;

pub use cartan::{DynkinDiagram, Orientation};
pub use engine::Engine;
pub use error::{Error, Result};
pub use qchar::QCharacter;
pub use tlaurent::TPoly;
pub use ymonomial::{DominantMonomial, Monomial, Spectral};
