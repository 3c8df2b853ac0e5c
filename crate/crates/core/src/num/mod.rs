//! Shared numerical kernels: double-double arithmetic, the log-gamma function,
//! Jacobi polynomials and Gauss quadrature rules.

pub mod dd;
pub mod gamma;
pub mod jacobi;

pub use dd::Dd;
pub use gamma::ln_gamma;
pub use jacobi::{gauss_jacobi, gauss_legendre, jacobi_deriv, jacobi_value, GaussRule};

/// Kahan compensated accumulator for plain f64 sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}
