//! Alternative representations of a dual number: the trigonometric form
//! `r(1 + φε)` and the 2×2 upper-triangular matrix image.

use std::ops::Mul;

use num_traits::Float;

use crate::error::{Error, Result};

use super::Dual;

/// Trigonometric form `z = r(1 + φε)` with module `r = x` and argument
/// `φ = y/x`. Only defined away from the zero-divisor line `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigForm<T> {
    /// The module: the (sign-preserving) real component.
    pub r: T,
    /// The argument `y / x`.
    pub phi: T,
}

/// A 2×2 real matrix, row-major. Dual numbers embed as
/// `x + yε ↦ [[x, y], [0, x]]`, with ε itself the nilpotent
/// `[[0, 1], [0, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<T> {
    pub m11: T,
    pub m12: T,
    pub m21: T,
    pub m22: T,
}

impl<T: Float> Mul for Mat2<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Mat2 {
            m11: self.m11 * rhs.m11 + self.m12 * rhs.m21,
            m12: self.m11 * rhs.m12 + self.m12 * rhs.m22,
            m21: self.m21 * rhs.m11 + self.m22 * rhs.m21,
            m22: self.m21 * rhs.m12 + self.m22 * rhs.m22,
        }
    }
}

impl<T: Float> Dual<T> {
    /// Decomposes `z` into module and argument: `z = r(1 + φε)`.
    pub fn to_trig(self) -> Result<TrigForm<T>> {
        let (x, y) = self.reim();
        if x == T::zero() {
            return Err(Error::domain(
                "to_trig",
                x,
                "the trigonometric form is only defined for real(z) != 0",
            ));
        }
        Ok(TrigForm { r: x, phi: y / x })
    }

    /// Rebuilds `r(1 + φε) = r + rφ·ε`.
    #[inline]
    pub fn from_trig(form: TrigForm<T>) -> Self {
        Dual::new(form.r, form.r * form.phi)
    }

    /// The matrix image `[[x, y], [0, x]]`.
    #[inline]
    pub fn to_matrix(self) -> Mat2<T> {
        Mat2 {
            m11: self.x,
            m12: self.y,
            m21: T::zero(),
            m22: self.x,
        }
    }

    /// Reads a dual back from its matrix image.
    ///
    /// The matrix must be in dual form: `m21 = 0` and `m11 = m22`.
    pub fn from_matrix(m: Mat2<T>) -> Result<Self> {
        if m.m21 != T::zero() || m.m11 != m.m22 {
            return Err(Error::invalid(
                "from_matrix",
                "the matrix is not the image of a dual number (requires m21 = 0 and m11 = m22)",
            ));
        }
        Ok(Dual::new(m.m11, m.m12))
    }
}

impl<T: Float> From<TrigForm<T>> for Dual<T> {
    #[inline]
    fn from(form: TrigForm<T>) -> Self {
        Dual::from_trig(form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(x: f64, y: f64) -> Dual<f64> {
        Dual::new(x, y)
    }

    #[test]
    fn trig_form_splits_module_and_argument() {
        let t = d(3.0, 6.0).to_trig().unwrap();
        assert_eq!(t.r, 3.0);
        assert_eq!(t.phi, 2.0);
    }

    #[test]
    fn trig_form_rejects_zero_divisors() {
        assert!(d(0.0, 1.0).to_trig().is_err());
    }

    #[test]
    fn trig_round_trip_recovers_the_value() {
        for (x, y) in [(3.0, 6.0), (-2.5, 0.75), (49.0, 1.0), (0.125, -8.0)] {
            let z = d(x, y);
            let back = Dual::from_trig(z.to_trig().unwrap());
            assert_eq!(back.real(), z.real());
            // x · (y/x) re-rounds, so the ε-component is exact only to ~1 ulp.
            let err = (back.imag() - z.imag()).abs();
            assert!(err <= z.imag().abs() * 1e-15, "imag off by {err}");
        }
    }

    #[test]
    fn product_multiplies_modules_and_adds_arguments() {
        let z = d(2.0, 3.0);
        let u = d(4.0, -1.0);
        let prod = (z * u).to_trig().unwrap();
        let (tz, tu) = (z.to_trig().unwrap(), u.to_trig().unwrap());
        assert_eq!(prod.r, tz.r * tu.r);
        assert!((prod.phi - (tz.phi + tu.phi)).abs() <= 1e-15);
    }

    #[test]
    fn matrix_image_is_upper_triangular() {
        let m = d(0.0, 1.0).to_matrix();
        assert_eq!((m.m11, m.m12, m.m21, m.m22), (0.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn matrix_multiplication_mirrors_dual_multiplication() {
        let z = d(1.0, 2.0);
        let u = d(3.0, 4.0);
        let prod = z.to_matrix() * u.to_matrix();
        assert_eq!((prod.m11, prod.m12, prod.m21, prod.m22), (3.0, 10.0, 0.0, 3.0));
        assert_eq!(Dual::from_matrix(prod).unwrap(), z * u);
    }

    #[test]
    fn from_matrix_rejects_non_dual_shapes() {
        let lower = Mat2 {
            m11: 1.0,
            m12: 0.0,
            m21: 1.0,
            m22: 1.0,
        };
        assert!(Dual::<f64>::from_matrix(lower).is_err());

        let unequal = Mat2 {
            m11: 1.0,
            m12: 0.0,
            m21: 0.0,
            m22: 2.0,
        };
        assert!(Dual::<f64>::from_matrix(unequal).is_err());
    }
}
