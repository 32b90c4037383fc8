//! Powers, roots and elementary functions on dual numbers.
//!
//! Every rule below is the first-order Taylor lift `f(x + yε) =
//! f(x) + f'(x)·y·ε`; the restricted-domain cases return a recoverable
//! [`crate::Error`] where `f` or `f'` stops being defined. Singularity
//! guards test for exact zeros: near-singular inputs produce large finite
//! results rather than errors.

use num_integer::Integer;
use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};

use super::Dual;

/// `x^(num/den)` for a rational exponent with an odd (positive) denominator,
/// preserving the sign of a negative base: the real branch of the odd root.
fn rational_pow<T: Float>(x: T, num: i64, den: i64) -> T {
    let q = T::from(num).unwrap() / T::from(den).unwrap();
    if x >= T::zero() {
        x.powf(q)
    } else {
        let magnitude = (-x).powf(q);
        if num % 2 == 0 {
            magnitude
        } else {
            -magnitude
        }
    }
}

impl<T: Float> Dual<T> {
    /// Integer power: `z^n = xⁿ + n·y·xⁿ⁻¹·ε`.
    ///
    /// `n = 0` yields one (including for `z = ε`), `n = 1` yields `z`
    /// unchanged, and negative exponents require `real(z) != 0`.
    pub fn powi(self, n: i32) -> Result<Self> {
        if n == 0 {
            return Ok(Self::one());
        }
        if n == 1 {
            return Ok(self);
        }
        let (x, y) = self.reim();
        if n < 0 && x == T::zero() {
            return Err(Error::domain(
                "powi",
                x,
                "negative exponentiation is only defined for real(z) != 0",
            ));
        }
        let x_n_minus_1 = if n == i32::MIN {
            x.powi(n + 1) / x
        } else {
            x.powi(n - 1)
        };
        Ok(Dual::new(x.powi(n), T::from(n).unwrap() * y * x_n_minus_1))
    }

    /// Rational power `z^(num/den)`.
    ///
    /// The exponent is reduced to lowest terms with a positive denominator
    /// first; the reduced denominator's parity decides which bases are
    /// admissible. Even denominators (true radicals) require `real(z) >= 0`;
    /// odd denominators accept any sign. At `real(z) = 0` the slope factor
    /// `x^(q-1)` is singular for `q < 1` and the power is zero for `q > 1`.
    pub fn powq(self, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain(
                "powq",
                T::zero(),
                "a rational exponent requires a nonzero denominator",
            ));
        }
        let g = num.gcd(&den);
        let (mut n, mut m) = (num / g, den / g);
        if m < 0 {
            n = -n;
            m = -m;
        }
        if n == 0 {
            return Ok(Self::one());
        }
        if m == 1 {
            if let Ok(n) = i32::try_from(n) {
                return self.powi(n);
            }
        }

        let (x, y) = self.reim();
        let q = T::from(n).unwrap() / T::from(m).unwrap();
        if m % 2 != 0 {
            if x == T::zero() && n < m {
                return Err(Error::domain(
                    "powq",
                    x,
                    "an exponent below one is singular at real(z) = 0",
                ));
            }
            return Ok(Dual::new(
                rational_pow(x, n, m),
                q * y * rational_pow(x, n - m, m),
            ));
        }
        if x < T::zero() {
            return Err(Error::domain(
                "powq",
                x,
                "even radical for dual number z is only defined for real(z) >= 0",
            ));
        }
        if x == T::zero() {
            if n < m {
                return Err(Error::domain(
                    "powq",
                    x,
                    "an exponent below one is singular at real(z) = 0",
                ));
            }
            return Ok(Self::zero());
        }
        Ok(Dual::new(x.powf(q), q * y * x.powf(q - T::one())))
    }

    /// Real power `z^p`, dispatching on the shape of the exponent.
    ///
    /// Integral `p` delegates to [`Dual::powi`]; exponents that are exactly
    /// a rational with a small odd denominator (≤ 64) delegate to
    /// [`Dual::powq`], which keeps negative bases differentiable (so
    /// `(-8)^(1/3)` works); all remaining exponents require `real(z) > 0`.
    pub fn powf(self, p: T) -> Result<Self> {
        if p.fract() == T::zero() {
            if let Some(n) = p.to_i32() {
                return self.powi(n);
            }
        }
        let mut m = 3i64;
        while m <= 63 {
            let scaled = (p * T::from(m).unwrap()).round();
            if let Some(n) = scaled.to_i64() {
                if T::from(n).unwrap() / T::from(m).unwrap() == p {
                    return self.powq(n, m);
                }
            }
            m += 2;
        }
        let (x, y) = self.reim();
        if x <= T::zero() {
            return Err(Error::domain(
                "powf",
                x,
                "an irrational exponent is only defined for real(z) > 0",
            ));
        }
        Ok(Dual::new(x.powf(p), p * y * x.powf(p - T::one())))
    }

    /// Principal `n`-th root via the trigonometric form:
    /// `ⁿ√(r(1 + φε)) = ⁿ√r · (1 + (φ/n)ε)`.
    ///
    /// Requires `real(z) != 0`; even indices additionally require a
    /// positive module. Agrees with `powq(z, 1/n)`.
    pub fn nth_root(self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain(
                "nth_root",
                T::zero(),
                "the root index must be a positive integer",
            ));
        }
        let (x, y) = self.reim();
        if x == T::zero() {
            return Err(Error::domain(
                "nth_root",
                x,
                "the nth root is only defined for a nonzero module",
            ));
        }
        if n % 2 == 0 && x < T::zero() {
            return Err(Error::domain(
                "nth_root",
                x,
                "an even root is only defined for a non-negative module",
            ));
        }
        let root = rational_pow(x, 1, i64::from(n));
        Ok(Dual::new(root, y * root / (T::from(n).unwrap() * x)))
    }

    /// Square root: `√z = √x + (y / 2√x)ε` for `x > 0`.
    ///
    /// The slope is singular on the boundary, so `x = 0` is only admitted
    /// for the exact zero dual (which maps to zero).
    pub fn sqrt(self) -> Result<Self> {
        let (x, y) = self.reim();
        if x < T::zero() {
            return Err(Error::domain(
                "sqrt",
                x,
                "sqrt for dual number z is only defined for real(z) >= 0",
            ));
        }
        if x == T::zero() {
            if y == T::zero() {
                return Ok(Self::zero());
            }
            return Err(Error::domain(
                "sqrt",
                x,
                "the slope of sqrt is singular at real(z) = 0",
            ));
        }
        let root = x.sqrt();
        Ok(Dual::new(root, y / ((T::one() + T::one()) * root)))
    }

    /// Cube root: `∛z = ∛x + (y·∛x / 3x)ε` for `x != 0`.
    pub fn cbrt(self) -> Result<Self> {
        let (x, y) = self.reim();
        if x == T::zero() {
            return Err(Error::domain(
                "cbrt",
                x,
                "cbrt is only defined for real(z) != 0",
            ));
        }
        let root = x.cbrt();
        let three = T::from(3).unwrap();
        Ok(Dual::new(root, y * root / (three * x)))
    }

    /// Exponential: `exp(z) = eˣ(1 + yε)`. Total.
    pub fn exp(self) -> Self {
        let e = self.x.exp();
        Dual::new(e, e * self.y)
    }

    /// Natural logarithm: `ln(z) = ln x + (y/x)ε` for `x > 0`.
    pub fn ln(self) -> Result<Self> {
        let (x, y) = self.reim();
        if x <= T::zero() {
            return Err(Error::domain(
                "log",
                x,
                "the logarithm is only defined for real(z) > 0",
            ));
        }
        Ok(Dual::new(x.ln(), y / x))
    }

    /// Base-`c` logarithm: `log_c(z) = ln x / ln c + (y / (x·ln c))ε`.
    ///
    /// Requires `x > 0` and a base that is positive and different from one.
    pub fn log(self, base: T) -> Result<Self> {
        if base <= T::zero() || base == T::one() {
            return Err(Error::domain(
                "log",
                base,
                "the base must be positive and different from one",
            ));
        }
        let (x, y) = self.reim();
        if x <= T::zero() {
            return Err(Error::domain(
                "log",
                x,
                "the logarithm is only defined for real(z) > 0",
            ));
        }
        Ok(Dual::new(x.log(base), y / (x * base.ln())))
    }

    /// Sine: `sin(z) = sin x + y·cos x·ε`. Total.
    pub fn sin(self) -> Self {
        Dual::new(self.x.sin(), self.y * self.x.cos())
    }

    /// Cosine: `cos(z) = cos x - y·sin x·ε`. Total.
    pub fn cos(self) -> Self {
        Dual::new(self.x.cos(), -self.y * self.x.sin())
    }

    /// Tangent: `tan(z) = tan x + (y / cos²x)ε`, undefined where
    /// `cos x = 0` exactly.
    pub fn tan(self) -> Result<Self> {
        let (x, y) = self.reim();
        let c = x.cos();
        if c == T::zero() {
            return Err(Error::domain(
                "tan",
                x,
                "tan is undefined where cos(real(z)) = 0",
            ));
        }
        Ok(Dual::new(x.tan(), y / (c * c)))
    }

    /// Cotangent: `cot(z) = cos x / sin x - (y / sin²x)ε`, undefined where
    /// `sin x = 0` exactly.
    pub fn cot(self) -> Result<Self> {
        let (x, y) = self.reim();
        let s = x.sin();
        if s == T::zero() {
            return Err(Error::domain(
                "cot",
                x,
                "cot is undefined where sin(real(z)) = 0",
            ));
        }
        Ok(Dual::new(x.cos() / s, -y / (s * s)))
    }

    /// Arcsine: `asin(z) = asin x + (y / √(1 - x²))ε` for `|x| < 1`.
    pub fn asin(self) -> Result<Self> {
        let (x, y) = self.reim();
        if x.abs() >= T::one() {
            return Err(Error::domain(
                "asin",
                x,
                "asin for dual number z is only defined for |real(z)| < 1",
            ));
        }
        Ok(Dual::new(x.asin(), y / (T::one() - x * x).sqrt()))
    }

    /// Arccosine: `acos(z) = acos x - (y / √(1 - x²))ε` for `|x| < 1`.
    pub fn acos(self) -> Result<Self> {
        let (x, y) = self.reim();
        if x.abs() >= T::one() {
            return Err(Error::domain(
                "acos",
                x,
                "acos for dual number z is only defined for |real(z)| < 1",
            ));
        }
        Ok(Dual::new(x.acos(), -y / (T::one() - x * x).sqrt()))
    }

    /// Arctangent: `atan(z) = atan x + (y / (1 + x²))ε`. Total.
    pub fn atan(self) -> Self {
        Dual::new(self.x.atan(), self.y / (T::one() + self.x * self.x))
    }

    /// Arccotangent: `acot(z) = atan(1/x) - (y / (1 + x²))ε`. Total
    /// (the real part jumps across `x = 0` but the slope does not).
    pub fn acot(self) -> Self {
        Dual::new(
            self.x.recip().atan(),
            -self.y / (T::one() + self.x * self.x),
        )
    }

    /// Hyperbolic sine: `sinh(z) = sinh x + y·cosh x·ε`. Total.
    pub fn sinh(self) -> Self {
        Dual::new(self.x.sinh(), self.y * self.x.cosh())
    }

    /// Hyperbolic cosine: `cosh(z) = cosh x + y·sinh x·ε`. Total.
    pub fn cosh(self) -> Self {
        Dual::new(self.x.cosh(), self.y * self.x.sinh())
    }

    /// Hyperbolic tangent: `tanh(z) = tanh x + (y / cosh²x)ε`. Total.
    pub fn tanh(self) -> Self {
        let c = self.x.cosh();
        Dual::new(self.x.tanh(), self.y / (c * c))
    }

    /// Hyperbolic cotangent: `coth(z) = cosh x / sinh x - (y / sinh²x)ε`,
    /// undefined at `real(z) = 0`.
    pub fn coth(self) -> Result<Self> {
        let (x, y) = self.reim();
        let s = x.sinh();
        if s == T::zero() {
            return Err(Error::domain(
                "coth",
                x,
                "coth is undefined at real(z) = 0",
            ));
        }
        Ok(Dual::new(x.cosh() / s, -y / (s * s)))
    }
}
