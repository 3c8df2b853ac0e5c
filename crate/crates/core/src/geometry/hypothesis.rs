//! Verifier for the geometric admissibility conditions of the side-offset
//! interpolant construction: (G1) side quadrilaterals pairwise disjoint,
//! (G2) offset polygons simply connected, (G3) collars nested across
//! consecutive verified levels, (G4) inner polygons share the center.

use serde::Serialize;

use super::lsystem::{lsystem_boundary, FractalFamily};
use super::offsets::{offset_polygons, quadrilateral_cover, reject_unsupported};
use super::polygon::Polygon;
use super::predicates::{self, Containment, Place};
use super::point::Point;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct LevelCheck {
    pub level: u32,
    pub quad_count: usize,
    pub g1_disjoint: bool,
    pub g2_simple: bool,
    pub g4_contains_center: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    pub coarse_level: u32,
    pub fine_level: u32,
    pub g3_collar_nested: bool,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub family: String,
    pub delta: f64,
    pub levels: Vec<LevelCheck>,
    pub pairs: Vec<PairCheck>,
}

impl HypothesisReport {
    pub fn all_pass(&self) -> bool {
        self.levels
            .iter()
            .all(|l| l.g1_disjoint && l.g2_simple && l.g4_contains_center)
            && self.pairs.iter().all(|p| p.g3_collar_nested)
    }
}

struct LevelData {
    level: u32,
    inner: Polygon,
    outer: Polygon,
    quads: Vec<Polygon>,
}

/// Run the (G1)-(G4) checks for `family` at offset parameter `delta` on the
/// given increasing list of levels. (G3) is checked between consecutive
/// entries of the list, which is how subsequence constructions (e.g. even
/// levels only) are verified. Failures are report entries, not errors.
pub fn verify_hypothesis_g(
    family: &FractalFamily,
    delta: f64,
    levels: &[u32],
) -> Result<HypothesisReport> {
    reject_unsupported(family)?;
    if levels.is_empty() || levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parameter(
            "levels must be nonempty and strictly increasing".into(),
        ));
    }
    if !(delta > 0.0) {
        return Err(Error::Parameter(format!("delta {delta} must be positive")));
    }

    let mut data: Vec<LevelData> = Vec::with_capacity(levels.len());
    let mut checks: Vec<LevelCheck> = Vec::with_capacity(levels.len());

    for &j in levels {
        let sigma = lsystem_boundary(family, j)?;
        let side = sigma.side_length.expect("prefractals have equal sides");
        let eps = delta * side;
        let quads = match quadrilateral_cover(&sigma, eps) {
            Ok(q) => q,
            Err(Error::Parameter(msg)) => {
                return Err(Error::Parameter(format!("level {j}: {msg}")));
            }
            Err(e) => return Err(e),
        };
        let (inner, outer) = offset_polygons(&sigma, delta);

        let g1 = quads_pairwise_disjoint(&quads);
        let g2 = inner.signed_area() > 0.0
            && predicates::polygon_is_simple(&inner)
            && predicates::polygon_is_simple(&outer);
        let g4 = contains_center(&inner);

        checks.push(LevelCheck {
            level: j,
            quad_count: quads.len(),
            g1_disjoint: g1,
            g2_simple: g2,
            g4_contains_center: g4,
        });
        data.push(LevelData { level: j, inner, outer, quads });
    }

    let mut pairs = Vec::new();
    for w in data.windows(2) {
        let coarse = &w[0];
        let fine = &w[1];
        let mut violations = 0usize;
        for q in &fine.quads {
            let in_outer = predicates::polygon_inside(q, &coarse.outer, Containment::AllowTouch);
            let hits_inner = predicates::interiors_intersect(q, &coarse.inner);
            if !in_outer || hits_inner {
                violations += 1;
            }
        }
        pairs.push(PairCheck {
            coarse_level: coarse.level,
            fine_level: fine.level,
            g3_collar_nested: violations == 0,
            violations,
        });
    }

    Ok(HypothesisReport {
        family: family.kind.name(),
        delta,
        levels: checks,
        pairs,
    })
}

fn contains_center(inner: &Polygon) -> bool {
    if let Some(e) = &inner.exact {
        return matches!(
            predicates::exact_point_in_polygon(super::exact::ZERO, e.den, inner),
            Some(Place::Inside)
        );
    }
    predicates::point_in_polygon(Point::new(0.0, 0.0), inner) == Place::Inside
}

fn quads_pairwise_disjoint(quads: &[Polygon]) -> bool {
    // Bounding-box prefilter keeps the pair count near-linear.
    let boxes: Vec<(f64, f64, f64, f64)> = quads
        .iter()
        .map(|q| {
            let mut b = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
            for v in &q.vertices {
                b.0 = b.0.min(v.x);
                b.1 = b.1.max(v.x);
                b.2 = b.2.min(v.y);
                b.3 = b.3.max(v.y);
            }
            b
        })
        .collect();
    for i in 0..quads.len() {
        for j in (i + 1)..quads.len() {
            let (a, b) = (&boxes[i], &boxes[j]);
            if a.1 < b.0 || b.1 < a.0 || a.3 < b.2 || b.3 < a.2 {
                continue;
            }
            if predicates::interiors_intersect(&quads[i], &quads[j]) {
                return false;
            }
        }
    }
    true
}
