//! Prefractal polygon generation, inner/outer interpolants, nesting
//! verification and the analytic eigenvalue-gap bounds.

pub mod bounds;
pub mod exact;
pub mod hypothesis;
pub mod koch;
pub mod lsystem;
pub mod offsets;
pub mod point;
pub mod polygon;
pub mod predicates;

pub use bounds::{general_gap_bound, koch_gap_bound, pang_constant, GapBound};
pub use hypothesis::{verify_hypothesis_g, HypothesisReport};
pub use koch::{koch_inner, koch_outer, koch_pair, verify_koch_nesting, NestingReport};
pub use lsystem::{lsystem_boundary, FamilyKind, FractalFamily};
pub use offsets::{corner_offset_points, epsilon0, inner_outer_interpolants, quadrilateral_cover};
pub use point::Point;
pub use polygon::Polygon;

use crate::error::{Error, Result};

/// An inner/outer interpolant pair at one level: inner subset of the region,
/// outer superset. `delta` is the side-offset parameter; zero marks the
/// bespoke snowflake construction, whose inner and outer polygons touch at
/// spike apexes.
#[derive(Debug, Clone)]
pub struct InterpolationPair {
    pub inner: Polygon,
    pub outer: Polygon,
    pub level: u32,
    pub delta: f64,
}

impl InterpolationPair {
    pub fn validate(&self) -> Result<()> {
        self.inner.validate()?;
        self.outer.validate()?;
        let mode = if self.delta == 0.0 {
            predicates::Containment::AllowTouch
        } else {
            predicates::Containment::Strict
        };
        if !predicates::polygon_inside(&self.inner, &self.outer, mode) {
            return Err(Error::Degenerate(format!(
                "level {}: inner polygon escapes the outer polygon",
                self.level
            )));
        }
        Ok(())
    }
}
