//! Scalar backends for character values.
//!
//! Every table, class function and inner product in the crate is generic over
//! [`ClassScalar`]. Two families implement it:
//!
//! - exact rationals ([`Ratio`] over `i64`, `i128` or [`BigInt`]), used for
//!   integral tables such as the symmetric groups;
//! - complex floats ([`Complex`] over `f32` or `f64`), used when values are
//!   roots of unity or other irrationals. These carry a tolerance on the table.
//!
//! Multiplicities are always integers; [`to_multiplicity`] applies the rounding
//! rule that turns a computed coefficient back into one.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, ToBigInt};
use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default tolerance for accepting a computed multiplicity as an integer.
pub const DEFAULT_MULTIPLICITY_TOL: f64 = 1e-6;

/// Default tolerance for validating approximate character tables.
pub const DEFAULT_TABLE_TOL: f64 = 1e-9;

/// A value a character can take on a conjugacy class.
pub trait ClassScalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Whether arithmetic in this scalar is exact.
    const EXACT: bool;

    fn from_bigint(v: &BigInt) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v))
    }

    /// Builds a scalar from a real and imaginary part. Exact backends accept
    /// only integral reals.
    fn from_parts(re: f64, im: f64) -> Option<Self>;

    fn conj(&self) -> Self;

    /// Division by a nonzero integer.
    fn div_int(&self, d: &BigInt) -> Self;

    fn re(&self) -> f64;

    fn im(&self) -> f64;

    /// Magnitude of `self - other`.
    fn distance(&self, other: &Self) -> f64;

    /// Nearest integer to the real part and the magnitude of the residual, or
    /// `None` if that integer does not fit in an `i64`.
    fn nearest_integer(&self) -> Option<(i64, f64)>;

    /// Renders the value for reports.
    fn display(&self) -> String;
}

macro_rules! impl_exact_ratio {
    ($int:ty, $from:expr) => {
        impl ClassScalar for Ratio<$int> {
            const EXACT: bool = true;

            fn from_bigint(v: &BigInt) -> Self {
                let conv: fn(&BigInt) -> $int = $from;
                Ratio::from_integer(conv(v))
            }

            fn from_parts(re: f64, im: f64) -> Option<Self> {
                if im != 0.0 || re.fract() != 0.0 || !re.is_finite() {
                    return None;
                }
                let v = BigInt::from(re.to_i128()?);
                Some(Self::from_bigint(&v))
            }

            fn conj(&self) -> Self {
                self.clone()
            }

            fn div_int(&self, d: &BigInt) -> Self {
                self / Self::from_bigint(d)
            }

            fn re(&self) -> f64 {
                ratio_to_f64(self)
            }

            fn im(&self) -> f64 {
                0.0
            }

            fn distance(&self, other: &Self) -> f64 {
                ratio_to_f64(&(self - other).abs())
            }

            fn nearest_integer(&self) -> Option<(i64, f64)> {
                let r = self.round();
                let n = r.to_integer().to_i64()?;
                Some((n, ratio_to_f64(&(self - r).abs())))
            }

            fn display(&self) -> String {
                self.to_string()
            }
        }
    };
}

fn ratio_to_f64<T>(r: &Ratio<T>) -> f64
where
    T: Clone + Integer + ToBigInt,
{
    let n = r.numer().to_bigint().unwrap_or_default();
    let d = r.denom().to_bigint().unwrap_or_else(BigInt::one);
    Ratio::new(n, d).to_f64().unwrap_or(f64::NAN)
}

impl_exact_ratio!(i64, |v| v
    .to_i64()
    .expect("integer exceeds the i64 scalar range"));
impl_exact_ratio!(i128, |v| v
    .to_i128()
    .expect("integer exceeds the i128 scalar range"));
impl_exact_ratio!(BigInt, |v| v.clone());

impl<T> ClassScalar for Complex<T>
where
    T: Float + Debug + Send + Sync + 'static,
{
    const EXACT: bool = false;

    fn from_bigint(v: &BigInt) -> Self {
        Complex::new(T::from(v.to_f64().unwrap_or(f64::NAN)).unwrap(), T::zero())
    }

    fn from_parts(re: f64, im: f64) -> Option<Self> {
        Some(Complex::new(T::from(re)?, T::from(im)?))
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn div_int(&self, d: &BigInt) -> Self {
        let d = T::from(d.to_f64().unwrap_or(f64::NAN)).unwrap();
        *self / d
    }

    fn re(&self) -> f64 {
        self.re.to_f64().unwrap_or(f64::NAN)
    }

    fn im(&self) -> f64 {
        self.im.to_f64().unwrap_or(f64::NAN)
    }

    fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm().to_f64().unwrap_or(f64::NAN)
    }

    fn nearest_integer(&self) -> Option<(i64, f64)> {
        let re = self.re();
        if !re.is_finite() || re.abs() >= 9.2e18 {
            return None;
        }
        let n = re.round();
        let residual = (Complex::new(re - n, self.im())).norm();
        Some((n as i64, residual))
    }

    fn display(&self) -> String {
        let (re, im) = (self.re(), self.im());
        if im.abs() < 1e-12 {
            format!("{re:.6}")
        } else {
            format!("{re:.6}{im:+.6}i")
        }
    }
}

/// Rounds a computed coefficient to an integer, failing when it sits farther
/// than `tol` from the nearest integer.
pub fn to_multiplicity<S: ClassScalar>(value: &S, tol: f64, context: &str) -> Result<i64> {
    let non_integral = |residual: f64| Error::NonIntegral {
        value: value.display(),
        residual,
        context: context.to_string(),
    };
    let (n, residual) = value
        .nearest_integer()
        .ok_or_else(|| non_integral(f64::NAN))?;
    if residual < tol || (S::EXACT && residual == 0.0) {
        Ok(n)
    } else {
        Err(non_integral(residual))
    }
}

/// Like [`to_multiplicity`] but additionally rejects negative values.
pub fn to_coefficient<S: ClassScalar>(value: &S, tol: f64, context: &str) -> Result<u64> {
    if value.re() < -tol {
        return Err(Error::NegativeCoefficient {
            value: value.display(),
            context: context.to_string(),
        });
    }
    let n = to_multiplicity(value, tol, context)?;
    Ok(n.max(0) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use num_rational::BigRational;

    #[test]
    fn exact_rounding_requires_integers() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(to_multiplicity(&half, 1e-6, "t").is_err());
        let three = BigRational::from_i64(3);
        assert_eq!(to_multiplicity(&three, 1e-6, "t").unwrap(), 3);
    }

    #[test]
    fn approx_rounding_uses_tolerance() {
        let close = Complex64::new(2.0 + 1e-9, 1e-9);
        assert_eq!(to_multiplicity(&close, 1e-6, "t").unwrap(), 2);
        let far = Complex64::new(2.1, 0.0);
        assert!(matches!(
            to_multiplicity(&far, 1e-6, "t"),
            Err(Error::NonIntegral { .. })
        ));
        let imag = Complex64::new(2.0, 1e-3);
        assert!(to_multiplicity(&imag, 1e-6, "t").is_err());
    }

    #[test]
    fn negative_coefficients_are_rejected() {
        let neg = Complex64::new(-1.0, 0.0);
        assert!(matches!(
            to_coefficient(&neg, 1e-6, "t"),
            Err(Error::NegativeCoefficient { .. })
        ));
        let tiny = Complex64::new(-1e-9, 0.0);
        assert_eq!(to_coefficient(&tiny, 1e-6, "t").unwrap(), 0);
    }

    #[test]
    fn exact_from_parts_rejects_fractions() {
        assert!(Ratio::<i64>::from_parts(1.5, 0.0).is_none());
        assert!(Ratio::<i64>::from_parts(1.0, 1.0).is_none());
        assert_eq!(
            Ratio::<i64>::from_parts(-4.0, 0.0),
            Some(Ratio::from_integer(-4))
        );
    }

    #[test]
    fn f32_backend_works() {
        let v = Complex::<f32>::from_i64(5).div_int(&BigInt::from(2));
        assert!((v.re() - 2.5).abs() < 1e-6);
    }
}
