//! Omega-complex kernel for higher-dimensional automata.
//!
//! Morphisms are down-closed face sets of a [`FacePoset`]; cubes, simplexes and
//! realized precubical sets all live in that one representation. On top of it
//! sit the corner (germ) categories, the simplicial nerves and integral homology.

pub mod corner;
pub mod error;
pub mod homology;
pub mod nerves;
pub mod omega_complex;
pub mod precubical;

pub use error::{Error, Result};
pub use precubical::PrecubicalSet;
pub use omega_complex::{
    Category, Element, FaceLabel, FacePoset, FaceSet, Letter, OmegaCategory, Sign,
};

