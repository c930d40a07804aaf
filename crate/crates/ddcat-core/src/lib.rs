//! Combinatorial model of the bounded derived category of a derived-discrete
//! algebra `Lambda(r, n, m)`.
//!
//! Indecomposable objects are lattice points in `3r` Auslander-Reiten
//! components; everything else (Hom dimensions in all degrees, the
//! object-level autoequivalence group, silting objects and their
//! t-structures) is computed from closed-form rules on those coordinates.

pub mod atq;
pub mod autoeq;
pub mod coord;
pub mod error;
pub mod hammock;
pub mod params;
pub mod silting;
pub mod snf;
pub mod zperp;

pub use autoeq::AutoEq;
pub use coord::{Kind, MeshDir, MouthSide, ObjCoord, TriangleKind};
pub use error::Error;
pub use hammock::{GradedDim, ObjectClass};
pub use params::Params;
