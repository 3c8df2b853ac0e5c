//! Guaranteed two-sided bounds for the ground Dirichlet eigenvalue (equivalently,
//! the reciprocal of the Poincaré constant) on planar domains whose boundary is
//! built from self-similar curves.
//!
//! The computation runs in four stages:
//!
//! 1. `geometry` — build inner/outer polygon interpolants of the target region
//!    and verify the nesting conditions that make domain monotonicity usable.
//! 2. `conformal` — solve the Schwarz-Christoffel parameter problem for the
//!    disk-to-polygon maps and evaluate the composite map derivative `|f'|`.
//! 3. `fem` — mesh the base polygon with uniform equilateral triangles and
//!    assemble the three matrices of the projected quadratic pencil.
//! 4. `spectral` — solve the quadratic eigenvalue problem, filter the second
//!    order spectrum and convert points into eigenvalue enclosures.
//!
//! `pipeline` orchestrates the stages end to end and handles caching, reports
//! and rate fits. The CLI binary in the sibling crate is a thin wrapper.

pub mod conformal;
pub mod error;
pub mod fem;
pub mod geometry;
pub mod num;
pub mod pipeline;
pub mod spectral;

pub use error::{Error, Result};
pub use geometry::polygon::Polygon;
pub use geometry::{FractalFamily, GapBound, InterpolationPair};
pub use spectral::{DiskConstants, Enclosure, SecondOrderSpectrum};
