//! Analytic bounds on the eigenvalue gap between inner and outer
//! interpolants, driven by the inner-approximation estimate constant.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::bessel::disk_constants;

/// An analytic upper bound for `w1^2(T_j) - w1^2(H_j)` at one level.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GapBound {
    /// The inner-approximation constant the bound descends from.
    pub constant_c: f64,
    pub bound: f64,
    pub level: u32,
}

/// The inner-approximation constant
/// `C = 2^9 j01^4 S^(9/4) / (3 pi^(9/4) R^7)`,
/// where `j01` is the first Dirichlet eigenvalue of the unit disk, `S` the
/// area of the outermost polygon and `R` the inradius of the innermost one.
pub fn pang_constant(area_h0: f64, inradius_t0: f64) -> Result<f64> {
    if !(area_h0 > 0.0) || !(inradius_t0 > 0.0) {
        return Err(Error::Parameter(format!(
            "pang constant needs positive area and inradius, got {area_h0}, {inradius_t0}"
        )));
    }
    let j01 = disk_constants().j01_sq;
    let pi = std::f64::consts::PI;
    Ok(2f64.powi(9) * j01.powi(4) * area_h0.powf(2.25) / (3.0 * pi.powf(2.25) * inradius_t0.powi(7)))
}

/// Snowflake gap bound
/// `j01^4 3^(3/4) / (2^(5/4) pi^(9/4)) * (1/sqrt(3))^j`.
pub fn koch_gap_bound(j: u32) -> GapBound {
    let j01 = disk_constants().j01_sq;
    let pi = std::f64::consts::PI;
    let prefactor = j01.powi(4) * 3f64.powf(0.75) / (2f64.powf(1.25) * pi.powf(2.25));
    let bound = prefactor * (1.0 / 3f64.sqrt()).powi(j as i32);
    // The associated general constant, with the hexagon area and the unit
    // scale used when the snowflake collar estimate is instantiated.
    let constant_c = pang_constant(1.5 * 3f64.sqrt(), 1.0).expect("positive inputs");
    GapBound {
        constant_c,
        bound,
        level: j,
    }
}

/// General interpolant gap bound
/// `C sqrt(2 delta) / sin(beta0/2)^(1/2) * sqrt(l_j)`.
pub fn general_gap_bound(c: f64, delta: f64, beta0: f64, ell_j: f64) -> Result<GapBound> {
    if !(beta0 > std::f64::consts::PI && beta0 < 2.0 * std::f64::consts::PI) {
        return Err(Error::Parameter(format!(
            "beta0 = {beta0} outside (pi, 2 pi)"
        )));
    }
    if !(c > 0.0 && delta > 0.0 && ell_j > 0.0) {
        return Err(Error::Parameter(
            "gap bound needs positive constant, delta and side length".into(),
        ));
    }
    let bound = c * (2.0 * delta).sqrt() / (0.5 * beta0).sin().sqrt() * ell_j.sqrt();
    Ok(GapBound {
        constant_c: c,
        bound,
        level: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pang_constant_pi_cancellation() {
        // S = pi, R = 1 leaves 2^9 j01^4 / 3.
        let j01 = disk_constants().j01_sq;
        let want = 512.0 * j01.powi(4) / 3.0;
        let got = pang_constant(std::f64::consts::PI, 1.0).unwrap();
        assert!((got - want).abs() < 1e-9 * want);
    }

    #[test]
    fn pang_constant_inradius_scaling() {
        let c1 = pang_constant(2.0, 1.0).unwrap();
        let c2 = pang_constant(2.0, 2.0).unwrap();
        assert!((c1 / c2 - 128.0).abs() < 1e-9);
        assert!(pang_constant(-1.0, 1.0).is_err());
    }

    #[test]
    fn koch_bound_rate() {
        let b0 = koch_gap_bound(0);
        let b2 = koch_gap_bound(2);
        let b4 = koch_gap_bound(4);
        assert!((b0.bound / b2.bound - 3.0).abs() < 1e-12);
        assert!((b2.bound / b4.bound - 3.0).abs() < 1e-12);
        // Level-0 value against the explicit formula.
        let j01 = disk_constants().j01_sq;
        let want = j01.powi(4) * 3f64.powf(0.75)
            / (2f64.powf(1.25) * std::f64::consts::PI.powf(2.25));
        assert!((b0.bound - want).abs() < 1e-12 * want);
        // Must dominate the observed level-4 gap (about 0.0986).
        assert!(b4.bound > 0.0986);
    }

    #[test]
    fn general_bound_scalings() {
        let c = 10.0;
        let beta0 = 1.5 * std::f64::consts::PI;
        let b1 = general_gap_bound(c, 0.4, beta0, 1.0).unwrap().bound;
        let b2 = general_gap_bound(c, 0.4, beta0, 0.25).unwrap().bound;
        assert!((b1 / b2 - 2.0).abs() < 1e-12, "quartering the side halves the bound");
        assert!(general_gap_bound(c, 0.4, 0.5, 1.0).is_err());
    }

    #[test]
    fn quadric_rate_is_geometric_in_levels() {
        // With l_j = 4^-j the bound decays like 2^-j.
        let c = 7.0;
        let beta0 = 1.5 * std::f64::consts::PI;
        let values: Vec<f64> = (0..4)
            .map(|j| {
                general_gap_bound(c, 0.4, beta0, 0.25f64.powi(j))
                    .unwrap()
                    .bound
            })
            .collect();
        for w in values.windows(2) {
            assert!((w[0] / w[1] - 2.0).abs() < 1e-12);
        }
    }
}
