pub mod bounds;
pub mod census;
pub mod enumerate;
pub mod error;
pub mod graphcore;
pub mod parallel;
pub mod spectral;

pub use error::{Error, Result};
pub use graphcore::*;
pub use spectral::*;

/// Exact rational used for degree-based bounds.
pub type Rational = num_rational::Ratio<i64>;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/joins.md")]
    mod joins {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
