//! Dual numbers `z = x + yε` with `ε² = 0`, `ε ≠ 0`.
//!
//! The nilpotent unit makes first-order Taylor data part of the arithmetic
//! itself: for any smooth `f`, `f(a + bε) = f(a) + f'(a)·b·ε`, so evaluating
//! a function at `a + 1ε` yields the exact derivative in the ε-component.
//! Total operations are plain operators; everything with a restricted domain
//! returns [`crate::Result`] instead of aborting.

mod forms;
mod functions;

use std::fmt::{self, Display, Formatter};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::fmt::significant;
use crate::promote::{IntoScalar, Promote};

pub use forms::{Mat2, TrigForm};

/// A dual number over a floating scalar type.
///
/// The two components are kept private; read them back with [`Dual::real`],
/// [`Dual::imag`] or [`Dual::reim`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual<T> {
    x: T,
    y: T,
}

/// Builds a dual from two scalars of possibly different kinds, promoting
/// both to their common floating type (integer pairs widen to `f64`).
///
/// ```
/// use gcnum::dual::from_parts;
///
/// let z = from_parts(1, 2.2); // Dual<f64>
/// assert_eq!(z.reim(), (1.0, 2.2));
/// ```
#[inline]
pub fn from_parts<A, B>(x: A, y: B) -> Dual<A::Wider>
where
    A: Promote<B>,
    B: Copy,
    A::Wider: Float,
{
    let (x, y) = x.promote(y);
    Dual::new(x, y)
}

impl<T: Float> Dual<T> {
    /// Builds `x + yε` from two scalars of the same type.
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Dual { x, y }
    }

    /// Lifts a real scalar: `from_real(a) = a + 0ε`.
    #[inline]
    pub fn from_real(x: T) -> Self {
        Dual::new(x, T::zero())
    }

    /// The real component.
    #[inline]
    pub fn real(self) -> T {
        self.x
    }

    /// The ε-component.
    #[inline]
    pub fn imag(self) -> T {
        self.y
    }

    /// Both components as a pair `(real, imag)`.
    #[inline]
    pub fn reim(self) -> (T, T) {
        (self.x, self.y)
    }

    /// Conjugate: `conj(x + yε) = x - yε`.
    #[inline]
    pub fn conj(self) -> Self {
        Dual::new(self.x, -self.y)
    }

    /// The module of a dual number: the real component, sign included.
    ///
    /// Unlike the complex modulus this is sign-preserving; it satisfies
    /// `abs(z) = real(z + conj(z)) / 2` exactly.
    #[inline]
    pub fn abs(self) -> T {
        self.x
    }

    /// Quadratic norm `z · conj(z) = x²`.
    #[inline]
    pub fn abs2(self) -> T {
        self.x * self.x
    }

    /// The argument `y / x` of the trigonometric form.
    ///
    /// Only defined away from the zero-divisor line `x = 0`.
    pub fn arg(self) -> Result<T> {
        if self.x == T::zero() {
            return Err(Error::domain(
                "arg",
                self.x,
                "the argument is only defined for real(z) != 0",
            ));
        }
        Ok(self.y / self.x)
    }

    /// Multiplicative inverse `1/z = (1/x) - (y/x²)ε`.
    pub fn inv(self) -> Result<Self> {
        if self.x == T::zero() {
            return Err(Error::domain(
                "inv",
                self.x,
                "a dual number with real(z) = 0 has no inverse",
            ));
        }
        Ok(Dual::new(self.x.recip(), -self.y / (self.x * self.x)))
    }

    /// Checked division; fails when the divisor sits on the zero-divisor
    /// line `real(u) = 0`.
    pub fn try_div(self, rhs: Self) -> Result<Self> {
        if rhs.x == T::zero() {
            return Err(Error::domain(
                "div",
                rhs.x,
                "division is only defined for divisors with real(u) != 0",
            ));
        }
        Ok(Dual::new(
            self.x / rhs.x,
            (self.y * rhs.x - rhs.y * self.x) / (rhs.x * rhs.x),
        ))
    }

    /// True when the ε-component is zero.
    #[inline]
    pub fn is_real(self) -> bool {
        self.y == T::zero()
    }

    /// True when the value is a real integer.
    #[inline]
    pub fn is_integer(self) -> bool {
        self.is_real() && self.x.fract() == T::zero()
    }

    /// True when both components are finite.
    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// True when either component is NaN.
    #[inline]
    pub fn is_nan(self) -> bool {
        self.x.is_nan() || self.y.is_nan()
    }

    /// True when either component is infinite (and none is NaN).
    #[inline]
    pub fn is_infinite(self) -> bool {
        !self.is_nan() && (self.x.is_infinite() || self.y.is_infinite())
    }

    /// Renders `x + yε` with the given number of significant digits.
    pub fn format(self, digits: usize) -> String {
        let re = significant(self.x.to_f64().unwrap_or(f64::NAN), digits);
        let (sign, im) = if self.y < T::zero() {
            ("-", -self.y)
        } else {
            ("+", self.y)
        };
        let im = significant(im.to_f64().unwrap_or(f64::NAN), digits);
        format!("{re} {sign} {im}ε")
    }
}

/// `{}` renders with 12 significant digits; `{:.N}` overrides the count.
impl<T: Float> Display for Dual<T> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(f.precision().unwrap_or(12)))
    }
}

impl<T: Float> Add for Dual<T> {
    type Output = Self;

    #[inline]
    fn add(self, rhs: Self) -> Self {
        Dual::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Float> Sub for Dual<T> {
    type Output = Self;

    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Dual::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Float> Mul for Dual<T> {
    type Output = Self;

    /// `(x₁ + y₁ε)(x₂ + y₂ε) = x₁x₂ + (x₁y₂ + y₁x₂)ε` — the ε² term vanishes.
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Dual::new(self.x * rhs.x, self.x * rhs.y + self.y * rhs.x)
    }
}

impl<T: Float> Div for Dual<T> {
    type Output = Self;

    /// Operator form of [`Dual::try_div`].
    ///
    /// Panics when `real(rhs) = 0`; use `try_div` for a recoverable error.
    #[inline]
    fn div(self, rhs: Self) -> Self {
        match self.try_div(rhs) {
            Ok(q) => q,
            Err(err) => panic!("{err}"),
        }
    }
}

impl<T: Float> Neg for Dual<T> {
    type Output = Self;

    #[inline]
    fn neg(self) -> Self {
        Dual::new(-self.x, -self.y)
    }
}

// Mixed dual ⊕ real arithmetic: the real operand is lifted with `from_real`
// first, so both argument orders agree with the promoted computation. The
// impls are generated per concrete scalar type to stay coherent with the
// dual ⊕ dual operators above.

macro_rules! impl_scalar_rhs_ops {
    ($($scalar:ty),+) => {$(
        impl<T: Float> Add<$scalar> for Dual<T>
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Self;

            #[inline]
            fn add(self, rhs: $scalar) -> Self {
                self + Dual::from_real(rhs.into_scalar())
            }
        }

        impl<T: Float> Sub<$scalar> for Dual<T>
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Self;

            #[inline]
            fn sub(self, rhs: $scalar) -> Self {
                self - Dual::from_real(rhs.into_scalar())
            }
        }

        impl<T: Float> Mul<$scalar> for Dual<T>
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Self;

            #[inline]
            fn mul(self, rhs: $scalar) -> Self {
                self * Dual::from_real(rhs.into_scalar())
            }
        }

        impl<T: Float> Div<$scalar> for Dual<T>
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Self;

            /// Panics when `rhs = 0`; use `try_div` for a recoverable error.
            #[inline]
            fn div(self, rhs: $scalar) -> Self {
                self / Dual::from_real(rhs.into_scalar())
            }
        }

        /// Equality against a bare real scalar: `z == r` iff `z = r + 0ε`.
        impl<T: Float> PartialEq<$scalar> for Dual<T>
        where
            $scalar: IntoScalar<T>,
        {
            #[inline]
            fn eq(&self, other: &$scalar) -> bool {
                self.y == T::zero() && self.x == other.into_scalar()
            }
        }

        /// Lifts a real scalar into a dual with zero ε-component.
        impl<T: Float> From<$scalar> for Dual<T>
        where
            $scalar: IntoScalar<T>,
        {
            #[inline]
            fn from(value: $scalar) -> Self {
                Dual::from_real(value.into_scalar())
            }
        }
    )+};
}

impl_scalar_rhs_ops!(f32, f64, i8, i16, i32, i64, u8, u16, u32);

macro_rules! impl_scalar_lhs_ops {
    ($($scalar:ty),+) => {$(
        impl<T: Float> Add<Dual<T>> for $scalar
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Dual<T>;

            #[inline]
            fn add(self, rhs: Dual<T>) -> Dual<T> {
                Dual::from_real(self.into_scalar()) + rhs
            }
        }

        impl<T: Float> Sub<Dual<T>> for $scalar
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Dual<T>;

            #[inline]
            fn sub(self, rhs: Dual<T>) -> Dual<T> {
                Dual::from_real(self.into_scalar()) - rhs
            }
        }

        impl<T: Float> Mul<Dual<T>> for $scalar
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Dual<T>;

            #[inline]
            fn mul(self, rhs: Dual<T>) -> Dual<T> {
                Dual::from_real(self.into_scalar()) * rhs
            }
        }

        impl<T: Float> Div<Dual<T>> for $scalar
        where
            $scalar: IntoScalar<T>,
        {
            type Output = Dual<T>;

            /// Panics when `real(rhs) = 0`; use `try_div` for a recoverable error.
            #[inline]
            fn div(self, rhs: Dual<T>) -> Dual<T> {
                Dual::from_real(self.into_scalar()) / rhs
            }
        }
    )+};
}

impl_scalar_lhs_ops!(f32, f64, i8, i16, i32, i64, u8, u16, u32);

macro_rules! impl_scalar_lhs_eq {
    ($($scalar:ty),+) => {$(
        impl<T: Float> PartialEq<Dual<T>> for $scalar
        where
            $scalar: IntoScalar<T>,
        {
            #[inline]
            fn eq(&self, other: &Dual<T>) -> bool {
                other == self
            }
        }
    )+};
}

impl_scalar_lhs_eq!(f32, f64, i8, i16, i32, i64, u8, u16, u32);

/// Widening between scalar precisions.
impl From<Dual<f32>> for Dual<f64> {
    #[inline]
    fn from(z: Dual<f32>) -> Self {
        Dual::new(f64::from(z.x), f64::from(z.y))
    }
}

impl<T: Float> Zero for Dual<T> {
    #[inline]
    fn zero() -> Self {
        Dual::from_real(T::zero())
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.x == T::zero() && self.y == T::zero()
    }
}

impl<T: Float> One for Dual<T> {
    #[inline]
    fn one() -> Self {
        Dual::from_real(T::one())
    }

    #[inline]
    fn is_one(&self) -> bool {
        self.x == T::one() && self.y == T::zero()
    }
}
