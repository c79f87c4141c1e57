//! Precubical sets: data model, validation, the `pcs v1` text format,
//! fixture complexes, and realization as a face poset.

mod fixtures;
mod format;
mod realize;
mod set;

pub use fixtures::{boundary_cube, fork_complex, standard_cube, subcomplex};
pub use format::{parse, print};
pub use realize::{cell_face, realize};
pub use set::{Admissibility, PrecubicalSet, ValidationReport};
