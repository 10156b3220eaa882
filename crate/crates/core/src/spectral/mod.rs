//! Exact Laplacian characteristic polynomials, numeric spectra, the join
//! spectrum identity and the invariants a spectrum determines.

pub mod invariants;
pub mod join;
pub mod laplacian;
pub mod poly;

pub use invariants::{
    direct_invariants, invariants, invariants_from_charpoly, spanning_trees_matrix_tree, SpectralInvariants,
};
pub use join::{complete_charpoly, join_spectrum};
pub use laplacian::{
    charpoly, charpoly_with_limit, lambda_max, laplacian, spectrum_numeric, SpectrumNumeric, DEFAULT_CHARPOLY_LIMIT,
    DEFAULT_TOLERANCE,
};
pub use poly::CharPoly;

use crate::error::Result;
use crate::graphcore::Graph;

/// Exact cospectrality: equal Laplacian characteristic polynomials.
pub fn is_cospectral(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(charpoly(a)? == charpoly(b)?)
}
