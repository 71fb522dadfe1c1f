//! Exact combinatorics for topologically minimal surfaces: simplicial
//! complexes, integral reduced homology, the homology index and its join
//! additivity, a catalog of local surface pieces, width orderings, and a
//! brute-force checker for the subcomplex dichotomy.

pub mod additivity;
pub mod catalog;
pub mod corpus;
pub mod cubical;
pub mod dichotomy;
pub mod homology;
pub mod io;
pub mod milnor;
pub mod simplicial;
pub mod smith;
pub mod suite;
pub mod width;

pub use additivity::{SurfaceConfiguration, TetGluing};
pub use catalog::{catalog, LocalPiece, PieceKind};
pub use cubical::{CellComplex, CubicalComplex};
pub use dichotomy::{check_dichotomy, DichotomyWitness, Verdict};
pub use homology::{homology_index, reduced_homology, AbelianGroup, HomologyIndex, HomologyProfile};
pub use milnor::{index_sum_law, join_homology_via_formula, verify_milnor};
pub use simplicial::{Simplex, SimplicialComplex, Vertex};
pub use width::{compare_width, width, SurfaceComponent, SurgeryMove, Width};
