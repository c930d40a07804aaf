//! Independent brute-force model of the same derived category: string
//! modules over the repetitive algebra, with morphisms counted both by
//! admissible decomposition pairs and by explicit linear algebra over a prime
//! field.  A coordinate-to-string dictionary, calibrated at run time, lets
//! the closed-form Hom engine be cross-validated against it.

pub mod dict;
pub mod error;
pub mod fp;
pub mod geiss;
pub mod hooks;
pub mod maps;
pub mod quiver;
pub mod rep;
pub mod word;

pub use error::OracleError;
pub use quiver::RepQuiver;
pub use word::StringWord;
