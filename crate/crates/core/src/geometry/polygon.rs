//! Closed Jordan polygons with interior-angle fractions: the universal
//! geometric currency of the crate.

use serde::{Deserialize, Serialize};

use super::exact::Zeta12;
use super::point::Point;
use crate::error::{Error, Result};

/// Exact ring coordinates shadowing the f64 vertex list, when the polygon was
/// produced by one of the lattice generators. `den` is a common positive
/// denominator: physical vertex k is `pts[k] / den`.
#[derive(Debug, Clone)]
pub struct ExactCoords {
    pub pts: Vec<Zeta12>,
    pub den: i128,
}

/// Closed polygon, vertices in counterclockwise order. `angle_fractions[k]`
/// is the interior angle at vertex k divided by pi, in (0, 2).
#[derive(Debug, Clone)]
pub struct Polygon {
    pub vertices: Vec<Point>,
    pub angle_fractions: Vec<f64>,
    pub level: u32,
    pub side_length: Option<f64>,
    pub exact: Option<ExactCoords>,
}

/// Serialization schema: `{vertices, angle_fractions, level, side_length}`.
#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<[f64; 2]>,
    angle_fractions: Vec<f64>,
    level: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    side_length: Option<f64>,
}

impl Polygon {
    /// Build from exact ring coordinates; f64 vertices and angle fractions
    /// are derived.
    pub fn from_exact(pts: Vec<Zeta12>, den: i128, level: u32, side_length: Option<f64>) -> Polygon {
        let vertices: Vec<Point> = pts
            .iter()
            .map(|z| {
                let c = z.to_complex();
                Point::new(c.re / den as f64, c.im / den as f64)
            })
            .collect();
        let angle_fractions = angle_fractions_of(&vertices);
        Polygon {
            vertices,
            angle_fractions,
            level,
            side_length,
            exact: Some(ExactCoords { pts, den }),
        }
    }

    /// Build from plain float vertices (CCW); angle fractions derived.
    pub fn from_points(vertices: Vec<Point>, level: u32, side_length: Option<f64>) -> Polygon {
        let angle_fractions = angle_fractions_of(&vertices);
        Polygon {
            vertices,
            angle_fractions,
            level,
            side_length,
            exact: None,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, k: usize) -> (Point, Point) {
        let n = self.len();
        (self.vertices[k % n], self.vertices[(k + 1) % n])
    }

    /// Signed area (positive for counterclockwise orientation).
    pub fn signed_area(&self) -> f64 {
        let n = self.len();
        let mut acc = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            acc += a.cross(b);
        }
        0.5 * acc
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.len()).map(|k| { let (a, b) = self.edge(k); a.dist(b) }).sum()
    }

    pub fn diameter(&self) -> f64 {
        let (mut lo_x, mut hi_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo_x = lo_x.min(v.x);
            hi_x = hi_x.max(v.x);
            lo_y = lo_y.min(v.y);
            hi_y = hi_y.max(v.y);
        }
        (hi_x - lo_x).hypot(hi_y - lo_y)
    }

    pub fn centroid(&self) -> Point {
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut a = 0.0;
        let n = self.len();
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = p.cross(q);
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
            a += w;
        }
        Point::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    /// Distance from the centroid to the nearest boundary edge. For the
    /// centered regular shapes used as base polygons this is the inradius.
    pub fn inradius_from_center(&self) -> f64 {
        let c = self.centroid();
        (0..self.len())
            .map(|k| {
                let (a, b) = self.edge(k);
                super::point::dist_point_segment(c, a, b)
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn min_side(&self) -> f64 {
        (0..self.len()).map(|k| { let (a, b) = self.edge(k); a.dist(b) }).fold(f64::INFINITY, f64::min)
    }

    /// Verify the structural invariants: CCW orientation, angle closure
    /// `sum(1 - alpha_k) = 2`, equal sides when `side_length` is set, and
    /// simplicity (the latter for polygons up to a size cap; generator
    /// correctness covers larger instances).
    pub fn validate(&self) -> Result<()> {
        if self.len() < 3 {
            return Err(Error::Degenerate("polygon needs at least 3 vertices".into()));
        }
        if self.angle_fractions.len() != self.len() {
            return Err(Error::Degenerate("angle fraction count mismatch".into()));
        }
        if self.signed_area() <= 0.0 {
            return Err(Error::Degenerate("polygon is not counterclockwise".into()));
        }
        let closure: f64 = self.angle_fractions.iter().map(|a| 1.0 - a).sum();
        if (closure - 2.0).abs() > 1e-9 {
            return Err(Error::Degenerate(format!(
                "angle closure sum is {closure}, expected 2"
            )));
        }
        if let Some(s) = self.side_length {
            for k in 0..self.len() {
                let (a, b) = self.edge(k);
                if (a.dist(b) - s).abs() > 1e-12 * s.max(1.0) {
                    return Err(Error::Degenerate(format!(
                        "edge {k} has length {} but side_length is {s}",
                        a.dist(b)
                    )));
                }
            }
        }
        if self.len() <= 20_000 && !super::predicates::polygon_is_simple(self) {
            return Err(Error::Degenerate("boundary self-intersects".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let doc = PolygonJson {
            vertices: self.vertices.iter().map(|p| [p.x, p.y]).collect(),
            angle_fractions: self.angle_fractions.clone(),
            level: self.level,
            side_length: self.side_length,
        };
        serde_json::to_string_pretty(&doc).expect("polygon serialization")
    }

    pub fn from_json(text: &str) -> Result<Polygon> {
        let doc: PolygonJson = serde_json::from_str(text)?;
        Ok(Polygon {
            vertices: doc.vertices.iter().map(|v| Point::new(v[0], v[1])).collect(),
            angle_fractions: doc.angle_fractions,
            level: doc.level,
            side_length: doc.side_length,
            exact: None,
        })
    }
}

/// Interior angle fractions (angle / pi) from the vertex geometry.
pub fn angle_fractions_of(vertices: &[Point]) -> Vec<f64> {
    let n = vertices.len();
    (0..n)
        .map(|k| {
            let prev = vertices[(k + n - 1) % n];
            let cur = vertices[k];
            let next = vertices[(k + 1) % n];
            let incoming = cur.sub(prev);
            let outgoing = next.sub(cur);
            // Interior angle = pi - signed turn for a CCW polygon, so the
            // fraction is 1 - turn/pi, landing in (0, 2).
            let turn = incoming.cross(outgoing).atan2(incoming.dot(outgoing));
            1.0 - turn / std::f64::consts::PI
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::from_points(
            vec![
                Point::new(0.5, 0.5),
                Point::new(-0.5, 0.5),
                Point::new(-0.5, -0.5),
                Point::new(0.5, -0.5),
            ],
            0,
            Some(1.0),
        )
    }

    #[test]
    fn square_invariants() {
        let sq = square();
        sq.validate().unwrap();
        assert!((sq.area() - 1.0).abs() < 1e-15);
        assert!(sq.angle_fractions.iter().all(|a| (a - 0.5).abs() < 1e-12));
        assert!((sq.inradius_from_center() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn reflex_angle_fraction() {
        // An L-shape has one 3/2 interior angle.
        let l = Polygon::from_points(
            vec![
                Point::new(0.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(2.0, 1.0),
                Point::new(1.0, 1.0),
                Point::new(1.0, 2.0),
                Point::new(0.0, 2.0),
            ],
            0,
            None,
        );
        l.validate().unwrap();
        let reflex: Vec<f64> = l
            .angle_fractions
            .iter()
            .copied()
            .filter(|a| (*a - 1.5).abs() < 1e-12)
            .collect();
        assert_eq!(reflex.len(), 1);
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let sq = square();
        let text = sq.to_json();
        let back = Polygon::from_json(&text).unwrap();
        assert_eq!(back.vertices.len(), sq.vertices.len());
        for (a, b) in back.vertices.iter().zip(&sq.vertices) {
            assert_eq!(a.x, b.x);
            assert_eq!(a.y, b.y);
        }
        assert_eq!(back.side_length, sq.side_length);
    }

    #[test]
    fn self_intersection_rejected() {
        let bow = Polygon::from_points(
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(1.0, 0.0),
                Point::new(0.0, 1.0),
            ],
            0,
            None,
        );
        assert!(bow.validate().is_err());
    }
}
