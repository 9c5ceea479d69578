//! Additive codes over the mixed alphabet `Z_p^α × Z_{p²}^β` for an odd prime `p`.
//!
//! The crate covers the whole pipeline around the generalized Gray map
//! `Φ : Z_p^α × Z_{p²}^β → Z_p^{α+pβ}`:
//!
//! * [`ring`]: residue arithmetic modulo `p` and `p²`.
//! * [`gray`]: the Gray map, homogeneous weight and the carry words that
//!   measure how far `Φ` is from being additive.
//! * [`mixed_code`]: words, generator matrices, code types, standard form,
//!   enumeration, membership and duality.
//! * [`analysis`]: linearity, rank and kernel of the Gray image, each with a
//!   brute-force oracle.
//! * [`constructions`]: witness codes with prescribed rank, kernel dimension
//!   or both, and the achievability table.
//! * [`random`]: seeded generators of random codes for testing.

pub mod analysis;
pub mod constructions;
mod error;
pub mod gray;
mod keyset;
pub mod linalg;
pub mod mixed_code;
pub mod random;
pub mod ring;

pub use error::{Error, Result};
pub use mixed_code::{
    AdditiveCode, CodeType, CodewordIndex, EnumerationCap, GeneratorMatrix, MixedWord, Shape,
    StandardForm,
};
pub use ring::Prime;
