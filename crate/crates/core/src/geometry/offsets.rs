//! Corner offset points, side quadrilaterals and the inner/outer interpolant
//! polygons they bound.
//!
//! The miter offset of a vertex A with edge vectors e_in, e_out and interior
//! angle beta is `A +- eps (e_out/l - e_in/l) / sin(beta)`; with `eps = delta
//! * l` the side lengths cancel, which keeps the construction on the lattice
//! for rational delta. Vertices where sin(beta) is not one of {±1/2,
//! ±sqrt3/2, ±1} fall back to floating point.

use super::exact::{self, Zeta12};
use super::point::Point;
use super::polygon::Polygon;
use super::predicates::{self, Containment};
use super::lsystem::{FamilyKind, FractalFamily};
use super::InterpolationPair;
use crate::error::{Error, Result};

/// Largest admissible offset parameter: the smallest vertex-to-non-adjacent-
/// edge distance, shrunk by sin(beta_m / 2) so that the longest offset
/// segment stays inside the clear zone. Conservative and cheap.
pub fn epsilon0(poly: &Polygon) -> f64 {
    let n = poly.len();
    let mut min_clear = f64::INFINITY;
    for v in 0..n {
        let p = poly.vertices[v];
        for e in 0..n {
            // Skip the two edges incident to v.
            if e == v || (e + 1) % n == v {
                continue;
            }
            let (a, b) = poly.edge(e);
            min_clear = min_clear.min(super::point::dist_point_segment(p, a, b));
        }
    }
    let beta_m = poly
        .angle_fractions
        .iter()
        .map(|a| {
            let beta = a * std::f64::consts::PI;
            beta.max(2.0 * std::f64::consts::PI - beta)
        })
        .fold(0.0, f64::max);
    min_clear * (0.5 * beta_m).sin()
}

/// Offset displacement at vertex `k`: `eps * (unit_out - unit_in) / sin(beta)`,
/// which points into the polygon and has length `eps / sin(beta/2)`.
fn offset_vector(poly: &Polygon, k: usize, eps: f64) -> Point {
    let n = poly.len();
    let prev = poly.vertices[(k + n - 1) % n];
    let cur = poly.vertices[k];
    let next = poly.vertices[(k + 1) % n];
    let e_in = cur.sub(prev);
    let e_out = next.sub(cur);
    let u_in = e_in.scale(1.0 / e_in.norm());
    let u_out = e_out.scale(1.0 / e_out.norm());
    let sin_beta = u_in.cross(u_out);
    if sin_beta.abs() < 1e-14 {
        // Straight vertex: bisector degenerates to the interior normal.
        return u_in.perp().scale(eps);
    }
    u_out.sub(u_in).scale(eps / sin_beta)
}

/// Inner and outer offset points of vertex `k`, both on the line bisecting
/// the interior angle, at distance `eps / sin(beta/2)` from the vertex.
pub fn corner_offset_points(poly: &Polygon, k: usize, eps: f64) -> Result<(Point, Point)> {
    let e0 = epsilon0(poly);
    if !(eps > 0.0 && eps < e0) {
        return Err(Error::Parameter(format!(
            "offset eps {eps} outside (0, {e0})"
        )));
    }
    let w = offset_vector(poly, k, eps);
    let a = poly.vertices[k];
    Ok((a.add(w), a.sub(w)))
}

/// Exact reciprocal of sin(beta) when it is a lattice-friendly value.
/// Returns (ring numerator, integer denominator).
fn inv_sin_exact(e_in: Zeta12, e_out: Zeta12) -> Option<(Zeta12, i128)> {
    let z = e_in.conj().mul(e_out);
    let (p, q) = (z.c[1] + 2 * z.c[3], z.c[2]); // 2*Im = p + q sqrt3
    let z2 = e_in.conj().mul(e_in);
    let (p2, q2) = (2 * z2.c[0] + z2.c[2], z2.c[1]); // 2*Re = p2 + q2 sqrt3
    let two = |x: i128| 2 * x;
    let sqrt3_twice = Zeta12::new(0, 4, 0, -2); // 2*sqrt(3)
    if (p, q) == (p2, q2) {
        Some((exact::ONE, 1))
    } else if (p, q) == (-p2, -q2) {
        Some((exact::ONE.neg(), 1))
    } else if (two(p), two(q)) == (p2, q2) {
        Some((exact::ONE.scale(2), 1))
    } else if (two(p), two(q)) == (-p2, -q2) {
        Some((exact::ONE.scale(-2), 1))
    } else if (two(p), two(q)) == (3 * q2, p2) {
        Some((sqrt3_twice, 3))
    } else if (two(p), two(q)) == (-3 * q2, -p2) {
        Some((sqrt3_twice.neg(), 3))
    } else {
        None
    }
}

/// Exact inner/outer offset vertex lists over a common denominator, for a
/// lattice polygon and rational `delta = dn/dd`. All sides must have equal
/// length (guaranteed by the generators).
fn exact_offsets(poly: &Polygon, dn: i128, dd: i128) -> Option<(Vec<Zeta12>, Vec<Zeta12>, i128)> {
    let e = poly.exact.as_ref()?;
    let n = e.pts.len();
    let mut inner = Vec::with_capacity(n);
    let mut outer = Vec::with_capacity(n);
    for k in 0..n {
        let prev = e.pts[(k + n - 1) % n];
        let cur = e.pts[k];
        let next = e.pts[(k + 1) % n];
        let e_in = cur.sub(prev);
        let e_out = next.sub(cur);
        let z = e_in.conj().mul(e_out);
        let w = if z.sign_im() == 0 {
            // Straight vertex (collinear continuation): the bisector
            // degenerates to the interior normal i * e_out.
            if z.sign_re() <= 0 {
                return None; // folded-back edge, degenerate
            }
            e_out.mul(exact::I).scale(3 * dn)
        } else {
            // w = delta * (e_out - e_in) / sin(beta), over denominator den*3*dd.
            let (inum, iden) = inv_sin_exact(e_in, e_out)?;
            e_out.sub(e_in).mul(inum).scale(dn * (3 / iden))
        };
        let base = cur.scale(3 * dd);
        inner.push(base.add(w));
        outer.push(base.sub(w));
    }
    Some((inner, outer, e.den * 3 * dd))
}

/// Small-denominator rational reconstruction of a parameter given as f64.
pub(crate) fn rationalize(x: f64, max_den: i128) -> Option<(i128, i128)> {
    for den in 1..=max_den {
        let num = (x * den as f64).round();
        if num.abs() > 1e15 {
            return None;
        }
        if (num / den as f64 - x).abs() < 1e-12 {
            return Some((num as i128, den));
        }
    }
    None
}

/// One open quadrilateral per side: two sides parallel to the polygon side at
/// distance `eps`, capped by the corner offset segments. Counterclockwise
/// vertex order (outer-A, outer-B, inner-B, inner-A).
pub fn quadrilateral_cover(poly: &Polygon, eps: f64) -> Result<Vec<Polygon>> {
    let e0 = epsilon0(poly);
    if !(eps > 0.0 && eps < e0) {
        return Err(Error::Parameter(format!(
            "offset eps {eps} outside (0, {e0})"
        )));
    }
    // Prefer the exact path when eps/side is a clean rational.
    if let (Some(_), Some(side)) = (&poly.exact, poly.side_length) {
        if let Some((dn, dd)) = rationalize(eps / side, 1000) {
            if let Some((inner, outer, den)) = exact_offsets(poly, dn, dd) {
                let n = inner.len();
                let quads = (0..n)
                    .map(|k| {
                        let kn = (k + 1) % n;
                        Polygon::from_exact(
                            vec![outer[k], outer[kn], inner[kn], inner[k]],
                            den,
                            poly.level,
                            None,
                        )
                    })
                    .collect::<Vec<_>>();
                for q in &quads {
                    q.validate().map_err(|e| {
                        Error::Degenerate(format!("degenerate side quadrilateral: {e}"))
                    })?;
                }
                return Ok(quads);
            }
        }
    }
    let n = poly.len();
    let offs: Vec<(Point, Point)> = (0..n)
        .map(|k| {
            let w = offset_vector(poly, k, eps);
            let a = poly.vertices[k];
            (a.add(w), a.sub(w))
        })
        .collect();
    let quads = (0..n)
        .map(|k| {
            let kn = (k + 1) % n;
            Polygon::from_points(
                vec![offs[k].1, offs[kn].1, offs[kn].0, offs[k].0],
                poly.level,
                None,
            )
        })
        .collect::<Vec<_>>();
    for q in &quads {
        q.validate()
            .map_err(|e| Error::Degenerate(format!("degenerate side quadrilateral: {e}")))?;
    }
    Ok(quads)
}

/// Offset polygons without validation; used by the hypothesis verifier where
/// failures are report entries rather than errors.
pub(crate) fn offset_polygons(poly: &Polygon, delta: f64) -> (Polygon, Polygon) {
    if let Some(side) = poly.side_length {
        if poly.exact.is_some() {
            if let Some((dn, dd)) = rationalize(delta, 1000) {
                if let Some((inner, outer, den)) = exact_offsets(poly, dn, dd) {
                    return (
                        Polygon::from_exact(inner, den, poly.level, None),
                        Polygon::from_exact(outer, den, poly.level, None),
                    );
                }
            }
        }
        let eps = delta * side;
        let n = poly.len();
        let mut inner = Vec::with_capacity(n);
        let mut outer = Vec::with_capacity(n);
        for k in 0..n {
            let w = offset_vector(poly, k, eps);
            let a = poly.vertices[k];
            inner.push(a.add(w));
            outer.push(a.sub(w));
        }
        (
            Polygon::from_points(inner, poly.level, None),
            Polygon::from_points(outer, poly.level, None),
        )
    } else {
        panic!("offset interpolants need an equal-sided polygon");
    }
}

/// Build the interpolation pair T_j, H_j from a prefractal boundary by the
/// side-offset construction with parameter `delta`.
pub fn inner_outer_interpolants(sigma: &Polygon, delta: f64) -> Result<InterpolationPair> {
    let side = sigma.side_length.ok_or_else(|| {
        Error::Parameter("interpolants need a polygon with equal side lengths".into())
    })?;
    let eps = delta * side;
    let e0 = epsilon0(sigma);
    if !(eps > 0.0 && eps < e0) {
        return Err(Error::Parameter(format!(
            "delta*side = {eps} outside (0, epsilon0 = {e0})"
        )));
    }
    let (inner, outer) = offset_polygons(sigma, delta);
    for (name, poly) in [("inner", &inner), ("outer", &outer)] {
        if poly.signed_area() <= 0.0 || !predicates::polygon_is_simple(poly) {
            return Err(Error::Hypothesis {
                condition: "G2",
                detail: format!(
                    "{name} offset polygon at level {} pinches or self-intersects (delta = {delta})",
                    sigma.level
                ),
            });
        }
    }
    if !predicates::polygon_inside(&inner, sigma, Containment::Strict)
        || !predicates::polygon_inside(sigma, &outer, Containment::Strict)
    {
        return Err(Error::Hypothesis {
            condition: "G2",
            detail: format!("offset polygons do not sandwich the boundary at delta = {delta}"),
        });
    }
    Ok(InterpolationPair {
        inner,
        outer,
        level: sigma.level,
        delta,
    })
}

/// Guard used by interpolant construction on families where the swap-based
/// construction is not specified.
pub fn reject_unsupported(family: &FractalFamily) -> Result<()> {
    if matches!(family.kind, FamilyKind::Cesaro(_)) {
        return Err(Error::Unsupported("unsupported family: cesaro".into()));
    }
    Ok(())
}
