//! Exact virtual counts of maps from a smooth genus `g` curve to Grassmannians
//! `G(r, n)` and to hypersurfaces and complete intersections inside them.
//!
//! The counts are finite sums over `r`-subsets of `n`-th roots of unity,
//! evaluated exactly in `Q[w]/(w^n - 1)` and read back as integers.
//! Independent routes (Grassmann duality, a genus-zero quantum cohomology
//! oracle, closed forms on projective space) cross-check the engine.
//!
//! The arithmetic core is generic over [`Scalar`]; exact results use
//! [`Rational`], and [`CycF64`] gives a fast approximate evaluation.

pub mod count;
pub mod cyclotomic;
pub mod engine;
pub mod error;
pub mod job;
pub mod qh_oracle;
pub mod scalar;
pub mod symfunc;
pub mod twist;

pub use count::{Advisory, Enumerativity, VirtualCount};
pub use cyclotomic::{cyclotomic_polynomial, Cyc, CycRational};
pub use engine::{
    duality_check, vi_integral, vi_integral_orbit_reduced, vi_integral_parallel, vi_sum,
    DualityReport, GrassmannSpec, Strategy, SubsetIndex,
};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use symfunc::{InsertionKind, Monomial};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

pub type CycQ = Cyc<Rational>;
pub type CycF64 = Cyc<f64>;
pub type CycF32 = Cyc<f32>;
