//! Bessel functions of the first kind from the Maclaurin series, plus the two
//! disk eigenvalue constants the enclosure machinery needs.
//!
//! The alternating series loses up to eleven digits to cancellation near the
//! top of the supported range, so the normalized series is accumulated in
//! double-double arithmetic; the common prefactor `(x/2)^nu / Γ(nu+1)` carries
//! no cancellation and stays in f64.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::gamma::ln_gamma;
use crate::num::Dd;

/// Largest argument the series evaluation accepts.
pub const MAX_ARGUMENT: f64 = 30.0;

/// `J_nu(x)` for `nu >= 0`, `0 <= x <= 30`, accurate to 1e-13 absolute.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0) {
        return Err(Error::Parameter(format!("bessel_j: order {nu} must be >= 0")));
    }
    if !(0.0..=MAX_ARGUMENT).contains(&x) {
        return Err(Error::Parameter(format!(
            "bessel_j: argument {x} outside [0, {MAX_ARGUMENT}]"
        )));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }

    // Normalized series: sum of s_l with s_0 = 1 and
    //   s_{l+1} = -s_l * (x^2/4) / ((l+1)(nu+l+1)).
    let q = Dd::from_prod(x, x).scale(0.25);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut max_abs = 1.0f64;
    for l in 0..400usize {
        let lf = l as f64;
        let denom = Dd::from_prod(lf + 1.0, nu + lf + 1.0);
        term = term.mul(q).div(denom).neg();
        sum = sum.add(term);
        let t = term.to_f64().abs();
        max_abs = max_abs.max(t);
        // Terms decay monotonically once l+1 > x/2; stop when negligible
        // against the double-double accumulation level.
        if lf + 1.0 > 0.5 * x && t < 1e-22 * max_abs.max(1.0) {
            break;
        }
    }

    let ln_pref = nu * (0.5 * x).ln() - ln_gamma(nu + 1.0);
    Ok(ln_pref.exp() * sum.to_f64())
}

/// First Dirichlet eigenvalues of the unit disk: squares of the first positive
/// zeros of `J_0` and `J_1`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DiskConstants {
    pub j01_sq: f64,
    pub j11_sq: f64,
}

/// Bracketed bisection for a sign change of `f` on `[lo, hi]`.
fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    assert!(
        flo * f(hi) < 0.0,
        "bisect: no sign change on [{lo}, {hi}]"
    );
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}

/// Disk constants via bisection on the series, bracketed to 1e-12.
pub fn disk_constants() -> DiskConstants {
    static CACHE: OnceLock<DiskConstants> = OnceLock::new();
    *CACHE.get_or_init(|| {
        let z0 = bisect(|x| bessel_j(0.0, x).unwrap(), 2.0, 3.0, 1e-12);
        let z1 = bisect(|x| bessel_j(1.0, x).unwrap(), 3.0, 4.5, 1e-12);
        DiskConstants {
            j01_sq: z0 * z0,
            j11_sq: z1 * z1,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_leading_terms() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn first_zero_of_j0() {
        let v = bessel_j(0.0, 2.404825557695773).unwrap();
        assert!(v.abs() < 1e-12, "J0 at its first zero: {v:.3e}");
    }

    #[test]
    fn reference_values() {
        // Abramowitz & Stegun style reference points.
        let cases = [
            (0.0, 1.0, 0.765_197_686_557_966_6),
            (0.0, 5.0, -0.177_596_771_314_338_3),
            (1.0, 1.0, 0.440_050_585_744_933_5),
            (1.0, 5.0, -0.327_579_137_591_465_2),
            (0.0, 25.0, 0.096_266_783_275_958_12),
            (2.0, 14.5, -0.060_864_941_997_128_366),
            (2.5, 7.0, -0.283_436_651_201_699_2),
        ];
        for (nu, x, want) in cases {
            let got = bessel_j(nu, x).unwrap();
            assert!(
                (got - want).abs() < 1e-13,
                "J_{nu}({x}) = {got:.16}, want {want:.16}"
            );
        }
    }

    #[test]
    fn high_end_of_range_consistent_with_recurrence() {
        // J_{nu-1}(x) + J_{nu+1}(x) = (2 nu / x) J_nu(x)
        for &x in &[28.0, 30.0] {
            for &nu in &[1.0, 2.5, 7.0] {
                let a = bessel_j(nu - 1.0, x).unwrap();
                let b = bessel_j(nu + 1.0, x).unwrap();
                let c = bessel_j(nu, x).unwrap();
                assert!(
                    (a + b - 2.0 * nu / x * c).abs() < 1e-12,
                    "recurrence at nu={nu}, x={x}"
                );
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(bessel_j(0.0, 30.5).is_err());
        assert!(bessel_j(0.0, -0.1).is_err());
        assert!(bessel_j(-1.0, 1.0).is_err());
    }

    #[test]
    fn disk_constants_match_known_zeros() {
        let c = disk_constants();
        assert!((c.j01_sq - 5.783185962947).abs() < 1e-9);
        assert!((c.j01_sq - 5.7832).abs() < 1e-3);
        assert!(c.j11_sq > 14.68);
        assert!((c.j11_sq - 14.681970642124).abs() < 1e-8);
    }
}
