//! Faces, down-closed elements, Steiner boundaries and composition,
//! element enumeration and the omega-category axiom checkers.

mod axioms;
mod builders;
mod category;
mod expr;
mod face;
mod faceset;
mod poset;
mod table;
mod view;

pub use axioms::{
    check_associativity, check_exchange, check_globularity, check_intersection_rule, check_units, is_groupoid,
    AxiomReport,
};
pub use builders::{
    cube, cube_word_faces, globe, globe_source_name, globe_target_name, simplex, simplex_faces,
    GLOBE_TOP,
};
pub use category::{Category, OmegaCategory, Provenance, DEFAULT_ELEMENT_CAP};
pub use expr::Expr;
pub use face::{word_from_str, word_to_string, FaceLabel, Letter, Sign};
pub use faceset::{Element, FaceSet};
pub use poset::{cube_face_letter, FacePoset, FaceSpec};
pub use table::TableCategory;
pub use view::{DualView, PathView};
