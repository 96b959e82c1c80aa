//! Degree-based topological indices on trees and cacti.
//!
//! The augmented Zagreb index is computed in exact rational arithmetic, the
//! atom-bond connectivity index in `f64`. Trees and cacti with a given number
//! of vertices and cycles are enumerated up to isomorphism, and the
//! [`verify`] module scans those classes to check extremal statements about
//! both indices.
//!
//! ```
//! use aziscan::{azi, construct, rational, FamilySpec};
//!
//! let g = construct(&FamilySpec::G0 { n: 5, k: 2 }).unwrap();
//! assert_eq!(azi(&g).unwrap(), rational(48, 1));
//! ```

pub mod blocks;
pub mod canon;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod transform;
pub mod verify;

pub use blocks::{block_decomposition, cycle_count, is_cactus, Block, BlockDecomposition};
pub use canon::{
    canonical_form, canonical_graph, canonical_labeling, CanonicalCode, CanonicalLabeling,
};
pub use enumerate::{brute_force_cacti, cacti, trees, EnumError, EnumSpec, GraphStream};
pub use families::{
    construct, every_edge_deg2_incident, pendent_and_internal_paths, star_type_pendent_vertices,
    theorem2_report, FamilyError, FamilySpec, PathKind, PathWitness, Theorem2Report,
};
pub use graph::{Graph, GraphError, Vertex};
pub use indices::{
    abc, azi, bid_index, f_bound, integer, kernel_gap, psi, rational, to_f64, BidValue, IndexError,
    IndexKernel, Rational,
};
pub use transform::{hill_climb_max_azi, ClimbSeed, ClimbTrace, RewriteError, RewriteOutcome};
pub use verify::{
    check_conjecture, scan, ConjectureVerdict, Direction, ExtremalReport, ScanConfig, Verdict,
    VerifyError,
};
