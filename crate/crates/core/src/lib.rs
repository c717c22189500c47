//! Exact Gelfand-pair verdicts for wreath products `Γ^n ⋊ S_n` against the
//! subgroup `Δ_n × S_n`, and the search for the level where they stop being
//! Gelfand pairs (the cracking point).
//!
//! Everything that touches character values is generic over
//! [`scalar::ClassScalar`]; [`Exact`] and [`Approx`] are the two backends used
//! by the command-line tool.

pub mod asymptotics;
pub mod chartable;
pub mod cli;
pub mod crack;
pub mod error;
mod json;
pub mod oracle;
pub mod partitions;
pub mod scalar;
pub mod wreath;

use num_complex::Complex;
use num_rational::BigRational;

pub use error::{Error, Result};

/// Exact rational scalars.
pub type Exact = BigRational;

/// Double-precision complex scalars.
pub type Approx = Complex<f64>;

/// Single-precision complex scalars.
pub type Approx32 = Complex<f32>;

pub type ExactTable = chartable::CharacterTable<Exact>;
pub type ApproxTable = chartable::CharacterTable<Approx>;
