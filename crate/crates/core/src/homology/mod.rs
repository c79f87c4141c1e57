//! Integral homology of presented chain complexes: nerve complexes, their
//! thin-reduced quotients, the formal complexes and the folding operators.

mod cfcr;
mod chain;
mod cut;
mod dense;
mod folding;
mod formal;
mod int;
mod sparse;

pub use cfcr::{cf_to_cr_map, check_comparison_square, formal_kind_of, CfCrReport, CfToCr};
pub use chain::{ChainComplex, Coeff, GroupRank, HomologyResult, ZeroTest};
pub use cut::{chain_of_cut, reduced_complex, thin_simplices};
pub use dense::{column_echelon, invariant_factors, solve_echelon, Dense};
pub use folding::{check_folding, folding_templates, FoldReport, Folder, Folding, GlobeSym};
pub use formal::{formal_complex, formal_complex_from, formal_model, FormalComplex, FormalKind};
pub use int::{normalize, Int};
pub use sparse::{sparse_invariants, Lattice, Reduced, SparseVec};
