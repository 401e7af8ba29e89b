//! Symplectic and orthogonal Hecke insertion on shifted tableaux.
//!
//! The crate is layered bottom-up:
//! - [`coxeter`]: permutations, the Demazure product and the two twisted folds;
//! - [`words`]: Hecke word families, atoms, and congruence closures;
//! - [`tableau`]: shifted and set-valued tableaux and their enumerators;
//! - [`insertion`]: the forward/inverse transition graphs and P/Q tableaux;
//! - [`grothendieck`]: truncated series and the expansion checks.
//!
//! [`json`] holds the JSON forms of tableaux, states and traces.

pub mod coxeter;
pub mod error;
pub mod grothendieck;
pub mod insertion;
pub mod json;
pub mod tableau;
pub mod words;

pub use coxeter::{
    demazure_product, orthogonal_fold, symplectic_fold, FpfInvolution, Involution, LengthStats, Permutation,
    SpFold, Word,
};
pub use error::{Error, Result};
