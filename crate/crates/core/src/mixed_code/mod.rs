//! Mixed-alphabet words, generator matrices, code types, standard form,
//! enumeration, membership and duality.

mod code_type;
mod dual;
mod file;
mod matrix;
mod standard;
mod word;

pub use code_type::CodeType;
pub use file::CodeFile;
pub use matrix::{AdditiveCode, CodewordIndex, EnumerationCap, GeneratorMatrix};
pub use standard::StandardForm;
pub use word::{MixedWord, Shape};
