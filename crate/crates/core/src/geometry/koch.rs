//! The classical snowflake interpolants: inner polygons grown from an
//! equilateral triangle by outward spikes, outer polygons shrunk from the
//! circumscribed hexagon. Both live on the Eisenstein lattice, so all
//! coordinates are exact ring elements over a power-of-three denominator.

use super::exact::Zeta12;
use super::point::{dist_point_segment, Point};
use super::polygon::Polygon;
use super::predicates::{self, Containment, Place};
use super::InterpolationPair;
use crate::error::{Error, Result};

/// Levels above this exhaust memory (3 * 4^13 vertices) long before they are
/// useful at desk scale.
pub const MAX_LEVEL: u32 = 12;

fn check_level(j: u32) -> Result<()> {
    if j > MAX_LEVEL {
        return Err(Error::SizeLimit {
            what: "snowflake level",
            requested: j as usize,
            max: MAX_LEVEL as usize,
        });
    }
    Ok(())
}

/// Spike apex factor: apex = A + (B - A) * (2 - w)/3 with w = zeta^2. The
/// same factor places the outer isosceles apex over a full edge.
const APEX: Zeta12 = Zeta12::new(2, 0, -1, 0);

/// Base triangle inscribed in the unit circle, side sqrt(3), counterclockwise
/// from the top vertex.
fn base_triangle() -> Vec<Zeta12> {
    vec![
        Zeta12::new(0, 0, 0, 1),  // (0, 1)
        Zeta12::new(0, -1, 0, 0), // (-sqrt3/2, -1/2)
        Zeta12::new(0, 1, 0, -1), // (sqrt3/2, -1/2)
    ]
}

/// One snowflake rewrite: every edge gains an outward equilateral spike over
/// its central third. Denominator grows by a factor of three.
fn spike_rewrite(pts: &[Zeta12]) -> Vec<Zeta12> {
    let n = pts.len();
    let mut out = Vec::with_capacity(4 * n);
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        let e = b.sub(a);
        let a3 = a.scale(3);
        out.push(a3);
        out.push(a.scale(2).add(b));
        out.push(a3.add(e.mul(APEX)));
        out.push(a.add(b.scale(2)));
    }
    out
}

fn inner_exact(j: u32) -> (Vec<Zeta12>, i128) {
    let mut pts = base_triangle();
    let mut den = 1i128;
    for _ in 0..j {
        pts = spike_rewrite(&pts);
        den *= 3;
    }
    (pts, den)
}

/// Inner interpolant T_j: 3 * 4^j vertices, side sqrt(3)/3^j.
pub fn koch_inner(j: u32) -> Result<Polygon> {
    check_level(j)?;
    let (pts, den) = inner_exact(j);
    let side = 3f64.sqrt() / 3f64.powi(j as i32);
    let poly = Polygon::from_exact(pts, den, j, Some(side));
    Ok(poly)
}

/// Outer interpolant H_j: one isosceles apex of height side/(2 sqrt(3)) over
/// every edge of T_j, interleaved with the T_j vertices; 6 * 4^j vertices of
/// side 1/3^j. H_0 is the regular hexagon of side 1.
pub fn koch_outer(j: u32) -> Result<Polygon> {
    check_level(j)?;
    let (tpts, tden) = inner_exact(j);
    let n = tpts.len();
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        let a = tpts[i];
        let b = tpts[(i + 1) % n];
        let a3 = a.scale(3);
        pts.push(a3);
        pts.push(a3.add(b.sub(a).mul(APEX)));
    }
    let side = 1.0 / 3f64.powi(j as i32);
    let poly = Polygon::from_exact(pts, 3 * tden, j, Some(side));
    Ok(poly)
}

/// The (T_j, H_j) pair. `delta` is zero: this construction does not use the
/// side-offset machinery.
pub fn koch_pair(j: u32) -> Result<InterpolationPair> {
    let pair = InterpolationPair {
        inner: koch_inner(j)?,
        outer: koch_outer(j)?,
        level: j,
        delta: 0.0,
    };
    pair.validate()?;
    Ok(pair)
}

/// Outcome of the nesting checks between two consecutive snowflake levels.
#[derive(Debug, Clone)]
pub struct NestingReport {
    pub inner_in_inner_next: bool,
    pub inner_next_in_outer_next: bool,
    pub outer_next_in_outer: bool,
    /// Collar condition: sampled points of H_j at distance >= 1/3^(j+1) from
    /// its boundary all lie in T_j.
    pub collar_holds: bool,
    pub collar_points_checked: usize,
    pub collar_failures: usize,
}

impl NestingReport {
    pub fn all_hold(&self) -> bool {
        self.inner_in_inner_next
            && self.inner_next_in_outer_next
            && self.outer_next_in_outer
            && self.collar_holds
    }
}

/// Check T_j in T_{j+1} in H_{j+1} in H_j plus the collar condition on level
/// j. The collar is sampled on a deterministic grid of spacing eps/4 (eps for
/// levels above 3, where the fine grid stops being desk-scale) plus all T_j
/// vertices.
pub fn verify_koch_nesting(
    pair_j: &InterpolationPair,
    pair_j1: &InterpolationPair,
) -> Result<NestingReport> {
    if pair_j1.level != pair_j.level + 1 {
        return Err(Error::Parameter(format!(
            "nesting check expects consecutive levels, got {} and {}",
            pair_j.level, pair_j1.level
        )));
    }
    for poly in [&pair_j.inner, &pair_j.outer, &pair_j1.inner, &pair_j1.outer] {
        poly.validate()
            .map_err(|e| Error::Degenerate(format!("level {}: {e}", poly.level)))?;
    }

    let t0 = &pair_j.inner;
    let h0 = &pair_j.outer;
    let t1 = &pair_j1.inner;
    let h1 = &pair_j1.outer;

    let inner_in_inner_next = predicates::polygon_inside(t0, t1, Containment::AllowTouch);
    let inner_next_in_outer_next = predicates::polygon_inside(t1, h1, Containment::AllowTouch);
    let outer_next_in_outer = predicates::polygon_inside(h1, h0, Containment::AllowTouch);

    let j = pair_j.level;
    let eps = 1.0 / 3f64.powi(j as i32 + 1);
    let spacing = if j <= 3 { 0.25 * eps } else { eps };
    let (checked, failures) = collar_check(h0, t0, eps, spacing);

    Ok(NestingReport {
        inner_in_inner_next,
        inner_next_in_outer_next,
        outer_next_in_outer,
        collar_holds: failures == 0,
        collar_points_checked: checked,
        collar_failures: failures,
    })
}

/// Points of `outer` at boundary distance >= eps must lie in `inner`.
fn collar_check(outer: &Polygon, inner: &Polygon, eps: f64, spacing: f64) -> (usize, usize) {
    let mut checked = 0usize;
    let mut failures = 0usize;
    let mut test = |p: Point| {
        let d = boundary_distance(p, outer);
        if d >= eps && predicates::point_in_polygon(p, outer) == Place::Inside {
            checked += 1;
            if predicates::point_in_polygon(p, inner) == Place::Outside {
                failures += 1;
            }
        }
    };
    // Deterministic grid over the bounding box.
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for v in &outer.vertices {
        lo_x = lo_x.min(v.x);
        hi_x = hi_x.max(v.x);
        lo_y = lo_y.min(v.y);
        hi_y = hi_y.max(v.y);
    }
    let nx = ((hi_x - lo_x) / spacing).ceil() as usize + 1;
    let ny = ((hi_y - lo_y) / spacing).ceil() as usize + 1;
    for iy in 0..ny {
        for ix in 0..nx {
            test(Point::new(lo_x + ix as f64 * spacing, lo_y + iy as f64 * spacing));
        }
    }
    for v in &inner.vertices {
        test(*v);
    }
    (checked, failures)
}

pub fn boundary_distance(p: Point, poly: &Polygon) -> f64 {
    (0..poly.len())
        .map(|k| {
            let (a, b) = poly.edge(k);
            dist_point_segment(p, a, b)
        })
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(poly: &Polygon) -> Vec<(f64, usize)> {
        let mut counts: Vec<(f64, usize)> = Vec::new();
        for &a in &poly.angle_fractions {
            if let Some(e) = counts.iter_mut().find(|(v, _)| (*v - a).abs() < 1e-9) {
                e.1 += 1;
            } else {
                counts.push((a, 1));
            }
        }
        counts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        counts
    }

    #[test]
    fn base_triangle_level_zero() {
        let t0 = koch_inner(0).unwrap();
        assert_eq!(t0.len(), 3);
        assert!(t0.angle_fractions.iter().all(|a| (a - 1.0 / 3.0).abs() < 1e-12));
        assert!((t0.side_length.unwrap() - 3f64.sqrt()).abs() < 1e-15);
        t0.validate().unwrap();
        // Inscribed in the unit circle.
        for v in &t0.vertices {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        assert!((t0.inradius_from_center() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn level_one_census() {
        let t1 = koch_inner(1).unwrap();
        assert_eq!(t1.len(), 12);
        let c = census(&t1);
        assert_eq!(c.len(), 2);
        assert!((c[0].0 - 1.0 / 3.0).abs() < 1e-12 && c[0].1 == 6);
        assert!((c[1].0 - 4.0 / 3.0).abs() < 1e-12 && c[1].1 == 6);
        t1.validate().unwrap();
    }

    #[test]
    fn vertex_counts_and_angle_census_through_level_four() {
        for j in 0..=4u32 {
            let t = koch_inner(j).unwrap();
            let h = koch_outer(j).unwrap();
            let pow = 4usize.pow(j);
            assert_eq!(t.len(), 3 * pow);
            assert_eq!(h.len(), 6 * pow);
            let tc = census(&t);
            if j == 0 {
                assert_eq!(tc.len(), 1);
                assert_eq!(tc[0].1, 3);
            } else {
                assert_eq!(tc[0].1, 3 + (pow - 1), "alpha=1/3 count at level {j}");
                assert_eq!(tc[1].1, 2 * (pow - 1), "alpha=4/3 count at level {j}");
            }
            let hc = census(&h);
            if j == 0 {
                assert_eq!(hc.len(), 1);
                assert_eq!(hc[0].1, 6);
                assert!((hc[0].0 - 2.0 / 3.0).abs() < 1e-12);
            } else {
                assert!((hc[0].0 - 2.0 / 3.0).abs() < 1e-12);
                assert_eq!(hc[0].1, 6 + 4 * (pow - 1));
                assert!((hc[1].0 - 5.0 / 3.0).abs() < 1e-12);
                assert_eq!(hc[1].1, 2 * (pow - 1));
            }
        }
    }

    #[test]
    fn level_two_side_lengths() {
        let t2 = koch_inner(2).unwrap();
        let want = 3f64.sqrt() / 9.0;
        for k in 0..t2.len() {
            let (a, b) = t2.edge(k);
            assert!((a.dist(b) - want).abs() < 1e-14);
        }
    }

    #[test]
    fn hexagon_is_hexagon() {
        let h0 = koch_outer(0).unwrap();
        assert_eq!(h0.len(), 6);
        assert!((h0.side_length.unwrap() - 1.0).abs() < 1e-15);
        for v in &h0.vertices {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        assert!((h0.area() - 1.5 * 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn outer_equals_inner_plus_isosceles() {
        // Every second H_1 vertex is a T_1 vertex; apexes sit at height
        // side/(2 sqrt(3)) over the T_1 edge midpoints.
        let t1 = koch_inner(1).unwrap();
        let h1 = koch_outer(1).unwrap();
        let side = t1.side_length.unwrap();
        for i in 0..t1.len() {
            let tv = t1.vertices[i];
            let hv = h1.vertices[2 * i];
            assert!(tv.dist(hv) < 1e-14);
            let (a, b) = t1.edge(i);
            let apex = h1.vertices[2 * i + 1];
            let mid = a.add(b).scale(0.5);
            assert!((apex.dist(mid) - side / (2.0 * 3f64.sqrt())).abs() < 1e-13);
        }
    }

    #[test]
    fn nesting_low_levels() {
        for j in 0..=1u32 {
            let p0 = koch_pair(j).unwrap();
            let p1 = koch_pair(j + 1).unwrap();
            let report = verify_koch_nesting(&p0, &p1).unwrap();
            assert!(report.all_hold(), "level {j}: {report:?}");
            assert!(report.collar_points_checked > 100);
        }
    }

    #[test]
    fn perturbed_vertex_breaks_inclusion() {
        let mut t1 = koch_inner(1).unwrap();
        let h1 = koch_outer(1).unwrap();
        // Push one vertex outward by 0.2: inclusion in H_1 must fail.
        let k = 1;
        let v = t1.vertices[k];
        t1.vertices[k] = v.add(v.scale(0.2 / v.norm()));
        t1.exact = None;
        assert!(!predicates::polygon_inside(&t1, &h1, Containment::AllowTouch));
    }

    #[test]
    fn level_cap_enforced() {
        assert!(matches!(
            koch_inner(13),
            Err(Error::SizeLimit { .. })
        ));
    }
}
