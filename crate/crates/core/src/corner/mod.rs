//! The corner correspondence between simplexes and cube corners, and the
//! negative semi-path (germ) categories.

mod category;
mod checks;
mod maps;
mod oracle;
mod phi;

pub use checks::{
    check_boundary_transport, check_phi_diagrams, corner_simplex_iso, cube_corner_decomposition, CornerIso,
    Decomposition,
};
pub use category::{corner_category, corner_components, CornerCategory};
pub use maps::{delta_epsilon, delta_eta, delta_minus, gamma_minus, FaceMap};
pub use oracle::{germ_classes, germ_oracle, germ_quotient, GermClasses, GermOracle};
pub use phi::{perp, perp_set, phi_minus, phi_word, CornerMap};
