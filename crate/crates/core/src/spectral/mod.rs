//! Quadratic eigenvalue solves, second-order-spectrum filtering, eigenvalue
//! enclosures and the block-operator test oracle.

pub mod bessel;

pub use bessel::{bessel_j, disk_constants, DiskConstants};

// Placeholder re-exports populated as the module fills in.
#[derive(Debug, Clone)]
pub struct Enclosure;
#[derive(Debug, Clone)]
pub struct SecondOrderSpectrum;
