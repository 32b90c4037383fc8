//! Generalized complex numbers and exact forward-mode differentiation on
//! the parabolic (dual-number) plane.
//!
//! A generalized complex number is `a + bu` with `u² = δ ∈ {-1, 0, +1}`;
//! the three choices give the elliptic, parabolic and hyperbolic planes
//! ([`gc`]). The parabolic case — dual numbers, `ε² = 0` — gets a complete
//! implementation ([`Dual`]): ring arithmetic, trigonometric and matrix
//! forms, integer/rational/real powers, roots, and the elementary function
//! catalog, each carrying its exact first-order slope.
//!
//! On top of that sit [`autodiff`] (derivatives by dual lifting, with an
//! independent finite-difference oracle) and [`expr`] (a tokenizer, parser
//! and dual-valued evaluator for one-variable expressions).
//!
//! ```
//! use gcnum::autodiff::value_and_derivative;
//! use gcnum::{Dual, Error};
//!
//! let f = |x: Dual<f64>| Ok::<_, Error>(x * x.sin());
//! let (value, slope) = value_and_derivative(f, 1.0).unwrap();
//! assert_eq!(value, 1.0f64.sin());
//! assert_eq!(slope, 1.0f64.sin() + 1.0f64.cos());
//! ```

pub mod autodiff;
pub mod dual;
mod error;
pub mod expr;
pub mod fmt;
pub mod gc;
pub mod promote;

pub use dual::{from_parts, Dual, Mat2, TrigForm};
pub use error::{Error, Result};
pub use gc::{classify, GcNumber, UnitClass};
pub use num_traits::{One, Zero};
pub use promote::{IntoScalar, Promote};
