//! Incidence predicates over polygons.
//!
//! Where both operands carry exact lattice coordinates the tests run in
//! integer arithmetic (see [`super::exact`]); otherwise they fall back to
//! floating point with a tolerance of `1e-12 * diameter`.

use super::exact::{self, Zeta12};
use super::point::Point;
use super::polygon::Polygon;

pub use super::exact::Place;

const REL_TOL: f64 = 1e-12;

/// Point-in-polygon for an arbitrary float point (tolerance-based).
pub fn point_in_polygon(p: Point, poly: &Polygon) -> Place {
    let tol = REL_TOL * poly.diameter().max(1.0);
    let n = poly.len();
    let mut inside = false;
    for k in 0..n {
        let (a, b) = poly.edge(k);
        if super::point::dist_point_segment(p, a, b) <= tol {
            return Place::Boundary;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let t = (p.y - a.y) / (b.y - a.y);
            let x = a.x + t * (b.x - a.x);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    if inside {
        Place::Inside
    } else {
        Place::Outside
    }
}

/// Vertex `idx` of polygon `a` located against polygon `b`, exactly when both
/// polygons carry lattice coordinates.
pub fn vertex_in_polygon(a: &Polygon, idx: usize, b: &Polygon) -> Place {
    if let (Some(ea), Some(eb)) = (&a.exact, &b.exact) {
        let (pa, pb) = exact::common_denominator(&ea.pts, ea.den, &eb.pts, eb.den);
        return exact::point_in_polygon(pa[idx], &pb);
    }
    point_in_polygon(a.vertices[idx], b)
}

/// Exact-or-float test of an arbitrary ring point against a polygon.
pub fn exact_point_in_polygon(p: Zeta12, p_den: i128, b: &Polygon) -> Option<Place> {
    let eb = b.exact.as_ref()?;
    let (pp, pb) = exact::common_denominator(std::slice::from_ref(&p), p_den, &eb.pts, eb.den);
    Some(exact::point_in_polygon(pp[0], &pb))
}


fn orient_f(a: Point, b: Point, c: Point, tol: f64) -> i32 {
    let v = b.sub(a).cross(c.sub(a));
    if v > tol {
        1
    } else if v < -tol {
        -1
    } else {
        0
    }
}

fn segments_cross_properly_f(a: Point, b: Point, c: Point, d: Point, tol: f64) -> bool {
    let o1 = orient_f(a, b, c, tol);
    let o2 = orient_f(a, b, d, tol);
    let o3 = orient_f(c, d, a, tol);
    let o4 = orient_f(c, d, b, tol);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Edge list with a sort-by-x sweep prefilter; calls `hit` on candidate pairs.
fn edge_pairs(
    pa: &[Point],
    pb: &[Point],
    mut hit: impl FnMut(usize, usize) -> bool,
) -> bool {
    let na = pa.len();
    let nb = pb.len();
    // Intervals on x for each edge of b, sorted.
    let mut idx: Vec<usize> = (0..nb).collect();
    let ivb: Vec<(f64, f64)> = (0..nb)
        .map(|j| {
            let p = pb[j];
            let q = pb[(j + 1) % nb];
            (p.x.min(q.x), p.x.max(q.x))
        })
        .collect();
    idx.sort_by(|&i, &j| ivb[i].0.partial_cmp(&ivb[j].0).unwrap());
    let starts: Vec<f64> = idx.iter().map(|&j| ivb[j].0).collect();
    for i in 0..na {
        let p = pa[i];
        let q = pa[(i + 1) % na];
        let (lo, hi) = (p.x.min(q.x), p.x.max(q.x));
        // All b-edges whose interval start is <= hi; skip those ending before lo.
        let cut = starts.partition_point(|&s| s <= hi);
        for &j in &idx[..cut] {
            if ivb[j].1 < lo {
                continue;
            }
            if hit(i, j) {
                return true;
            }
        }
    }
    false
}

/// Any proper crossing between the boundaries of `a` and `b`.
pub fn boundaries_cross(a: &Polygon, b: &Polygon) -> bool {
    if let (Some(ea), Some(eb)) = (&a.exact, &b.exact) {
        let (pa, pb) = exact::common_denominator(&ea.pts, ea.den, &eb.pts, eb.den);
        let fa: Vec<Point> = a.vertices.clone();
        let fb: Vec<Point> = b.vertices.clone();
        return edge_pairs(&fa, &fb, |i, j| {
            exact::segments_cross_properly(
                pa[i],
                pa[(i + 1) % pa.len()],
                pb[j],
                pb[(j + 1) % pb.len()],
            )
        });
    }
    let tol = REL_TOL * a.diameter().max(b.diameter()).max(1.0);
    let fa = a.vertices.clone();
    let fb = b.vertices.clone();
    edge_pairs(&fa, &fb, |i, j| {
        segments_cross_properly_f(
            fa[i],
            fa[(i + 1) % fa.len()],
            fb[j],
            fb[(j + 1) % fb.len()],
            tol,
        )
    })
}

/// Simplicity: no two non-adjacent edges touch, and adjacent edges meet only
/// at their shared vertex.
pub fn polygon_is_simple(poly: &Polygon) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    if let Some(e) = &poly.exact {
        let pts = &e.pts;
        let fa = &poly.vertices;
        return !edge_pairs(fa, fa, |i, j| {
            if i >= j {
                return false; // each unordered pair once
            }
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            if adjacent {
                // Shared vertex allowed; any further contact is degenerate.
                let shared = if j == i + 1 { b } else { a };
                let others_touch = [a, b]
                    .iter()
                    .any(|&p| p != shared && exact::on_segment(c, d, p))
                    || [c, d]
                        .iter()
                        .any(|&p| p != shared && exact::on_segment(a, b, p));
                others_touch
            } else {
                exact::segments_touch(a, b, c, d)
            }
        });
    }
    let tol = REL_TOL * poly.diameter().max(1.0);
    let fa = &poly.vertices;
    !edge_pairs(fa, fa, |i, j| {
        if i >= j {
            return false;
        }
        let adjacent = j == i + 1 || (i == 0 && j == n - 1);
        if adjacent {
            return false; // trust float adjacency; exact path covers lattice cases
        }
        let (a, b) = (fa[i], fa[(i + 1) % n]);
        let (c, d) = (fa[j], fa[(j + 1) % n]);
        segments_cross_properly_f(a, b, c, d, tol)
            || super::point::dist_point_segment(a, c, d) <= tol
            || super::point::dist_point_segment(b, c, d) <= tol
            || super::point::dist_point_segment(c, a, b) <= tol
            || super::point::dist_point_segment(d, a, b) <= tol
    })
}

/// Containment policy for [`polygon_inside`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    /// Inner vertices must be strictly interior.
    Strict,
    /// Inner vertices may lie on the outer boundary (nested prefractals
    /// touch at spike apexes).
    AllowTouch,
}

/// Whether the open region bounded by `inner` is contained in the one bounded
/// by `outer`: vertex placement, edge-midpoint placement and absence of
/// proper boundary crossings.
pub fn polygon_inside(inner: &Polygon, outer: &Polygon, mode: Containment) -> bool {
    for k in 0..inner.len() {
        match vertex_in_polygon(inner, k, outer) {
            Place::Inside => {}
            Place::Boundary if mode == Containment::AllowTouch => {}
            _ => return false,
        }
    }
    if boundaries_cross(inner, outer) {
        return false;
    }
    // Midpoint belt: catches an edge escaping between two admissible vertices.
    if let (Some(ei), Some(eo)) = (&inner.exact, &outer.exact) {
        let mids: Vec<Zeta12> = (0..ei.pts.len())
            .map(|k| ei.pts[k].add(ei.pts[(k + 1) % ei.pts.len()]))
            .collect();
        let (pm, po) = exact::common_denominator(&mids, 2 * ei.den, &eo.pts, eo.den);
        for m in &pm {
            match exact::point_in_polygon(*m, &po) {
                Place::Outside => return false,
                Place::Boundary if mode == Containment::Strict => return false,
                _ => {}
            }
        }
    } else {
        for k in 0..inner.len() {
            let (a, b) = inner.edge(k);
            let mid = a.add(b).scale(0.5);
            match point_in_polygon(mid, outer) {
                Place::Outside => return false,
                Place::Boundary if mode == Containment::Strict => return false,
                _ => {}
            }
        }
    }
    true
}

/// Whether the open interiors of two polygons intersect. Boundary contact is
/// not an intersection. Both polygons are assumed simple.
pub fn interiors_intersect(a: &Polygon, b: &Polygon) -> bool {
    if boundaries_cross(a, b) {
        return true;
    }
    for k in 0..a.len() {
        if vertex_in_polygon(a, k, b) == Place::Inside {
            return true;
        }
    }
    for k in 0..b.len() {
        if vertex_in_polygon(b, k, a) == Place::Inside {
            return true;
        }
    }
    // Edge midpoints guard against exact-overlap configurations where all
    // vertices sit on the other boundary.
    if let (Some(ea), Some(eb)) = (&a.exact, &b.exact) {
        let mids: Vec<Zeta12> = (0..ea.pts.len())
            .map(|k| ea.pts[k].add(ea.pts[(k + 1) % ea.pts.len()]))
            .collect();
        let (pm, pb) = exact::common_denominator(&mids, 2 * ea.den, &eb.pts, eb.den);
        if pm.iter().any(|m| exact::point_in_polygon(*m, &pb) == Place::Inside) {
            return true;
        }
    } else {
        for k in 0..a.len() {
            let (p, q) = a.edge(k);
            if point_in_polygon(p.add(q).scale(0.5), b) == Place::Inside {
                return true;
            }
        }
    }
    false
}
