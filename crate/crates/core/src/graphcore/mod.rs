//! Simple graphs, named families, joins and unions, canonical forms and
//! graph6 interchange.

pub mod build;
pub mod canon;
pub mod expr;
pub mod graph;
pub mod graph6;
pub mod ops;

pub use build::{build_basic, build_named, build_theta, complete, cycle, path, BasicKind, Named, ThetaSpec};
pub use canon::{canonical_form, canonical_labeling, is_isomorphic, Canonical, CanonicalForm};
pub use expr::parse_graph;
pub use graph::{Graph, MAX_VERTICES};
pub use ops::{connected_components, copies, degree_profile, disjoint_union, is_connected, join, DegreeProfile};
