//! Augmented simplicial sets, functor enumeration, the five nerves and the
//! comparison from the cubical to the semi-globular nerve.

mod build;
pub(crate) use build::degeneracy_maps;
mod compare;
mod functor;
mod kan;
mod model;
mod simplicial;

pub use build::{
    branching_nerve, corner_edges, globular_nerve, merging_nerve, nerve, semi_globular_merging_nerve,
    semi_globular_nerve, NerveOptions,
};
pub use compare::{
    check_faces_and_ev_determine, comparison_to_semiglobular, fill_shell, Comparison,
};
pub use functor::{enumerate_functors, eval, is_functor, Shape, DEFAULT_FUNCTOR_CAP};
pub use kan::{find_filler, kan_check, Horn, KanReport, DEFAULT_HORN_CAP};
pub use model::{GermComponent, Model};
pub use simplicial::{
    AugSimplicialSet, Component, Cut, IdentityReport, NerveDump, NerveKind, Simplex, SimplexDump,
};
