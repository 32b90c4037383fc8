//! Generalized complex numbers `a + bu` where the unit obeys `u² = δ` with
//! `δ ∈ {-1, 0, +1}`.
//!
//! The three values of δ give the elliptic (ordinary complex), parabolic
//! (dual) and hyperbolic (split-complex) planes. The class is carried with
//! each value; combining numbers of different classes is an error rather
//! than an implicit promotion — the three planes are distinct rings, not a
//! tower.

use std::fmt;

use num_traits::Float;

use crate::dual::Dual;
use crate::error::{Error, Result};

/// The family a generalized complex number belongs to, fixed by the square
/// of its imaginary unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitClass {
    /// `u² = -1`: ordinary complex numbers.
    Elliptic,
    /// `u² = 0`: dual numbers.
    Parabolic,
    /// `u² = +1`: split-complex numbers.
    Hyperbolic,
}

impl UnitClass {
    /// The defining square `δ` of the unit: -1, 0 or +1.
    #[inline]
    pub fn delta(self) -> i32 {
        match self {
            UnitClass::Elliptic => -1,
            UnitClass::Parabolic => 0,
            UnitClass::Hyperbolic => 1,
        }
    }
}

impl fmt::Display for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitClass::Elliptic => "elliptic",
            UnitClass::Parabolic => "parabolic",
            UnitClass::Hyperbolic => "hyperbolic",
        })
    }
}

/// Maps the sign of a quadratic discriminant to the matching unit class:
/// negative → elliptic, zero → parabolic, positive → hyperbolic.
pub fn classify(discriminant_sign: i32) -> Result<UnitClass> {
    match discriminant_sign {
        -1 => Ok(UnitClass::Elliptic),
        0 => Ok(UnitClass::Parabolic),
        1 => Ok(UnitClass::Hyperbolic),
        other => Err(Error::invalid(
            "classify",
            format!("the discriminant sign must be -1, 0 or +1, got {other}"),
        )),
    }
}

/// A generalized complex number `re + im·u` tagged with its unit class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GcNumber<T> {
    re: T,
    im: T,
    class: UnitClass,
}

impl<T: Float> GcNumber<T> {
    #[inline]
    pub fn new(re: T, im: T, class: UnitClass) -> Self {
        GcNumber { re, im, class }
    }

    #[inline]
    pub fn re(self) -> T {
        self.re
    }

    #[inline]
    pub fn im(self) -> T {
        self.im
    }

    #[inline]
    pub fn class(self) -> UnitClass {
        self.class
    }

    fn require_same_class(self, rhs: Self, op: &'static str) -> Result<()> {
        if self.class == rhs.class {
            Ok(())
        } else {
            Err(Error::ClassMismatch {
                op,
                lhs: self.class,
                rhs: rhs.class,
            })
        }
    }

    /// Componentwise sum of two numbers of the same class.
    pub fn add(self, rhs: Self) -> Result<Self> {
        self.require_same_class(rhs, "gc_add")?;
        Ok(GcNumber::new(self.re + rhs.re, self.im + rhs.im, self.class))
    }

    /// Componentwise difference of two numbers of the same class.
    pub fn sub(self, rhs: Self) -> Result<Self> {
        self.require_same_class(rhs, "gc_sub")?;
        Ok(GcNumber::new(self.re - rhs.re, self.im - rhs.im, self.class))
    }

    /// Product within one plane:
    /// `(a₁ + b₁u)(a₂ + b₂u) = a₁a₂ + δ·b₁b₂ + (a₁b₂ + b₁a₂)u`.
    ///
    /// Each class gets its own arm so the parabolic case performs exactly
    /// the dual-number multiplication, with no `0·b₁b₂` term.
    pub fn mul(self, rhs: Self) -> Result<Self> {
        self.require_same_class(rhs, "gc_mul")?;
        let (a1, b1) = (self.re, self.im);
        let (a2, b2) = (rhs.re, rhs.im);
        let im = a1 * b2 + b1 * a2;
        let re = match self.class {
            UnitClass::Elliptic => a1 * a2 - b1 * b2,
            UnitClass::Parabolic => a1 * a2,
            UnitClass::Hyperbolic => a1 * a2 + b1 * b2,
        };
        Ok(GcNumber::new(re, im, self.class))
    }

    /// Conjugate `a - bu` (an involution in every class).
    #[inline]
    pub fn conj(self) -> Self {
        GcNumber::new(self.re, -self.im, self.class)
    }

    /// Quadratic norm `z·conj(z) = a² - δ·b²`.
    ///
    /// Elliptic: `a² + b²`; parabolic: `a²`; hyperbolic: `a² - b²` (which
    /// may be negative — it is a quadratic form, not a metric).
    pub fn qnorm(self) -> T {
        let (a, b) = (self.re, self.im);
        match self.class {
            UnitClass::Elliptic => a * a + b * b,
            UnitClass::Parabolic => a * a,
            UnitClass::Hyperbolic => a * a - b * b,
        }
    }

    /// Reinterprets a parabolic number as a plain dual; `None` for the
    /// other classes.
    pub fn to_dual(self) -> Option<Dual<T>> {
        match self.class {
            UnitClass::Parabolic => Some(Dual::new(self.re, self.im)),
            _ => None,
        }
    }
}

/// Dual numbers embed as the parabolic plane.
impl<T: Float> From<Dual<T>> for GcNumber<T> {
    #[inline]
    fn from(z: Dual<T>) -> Self {
        GcNumber::new(z.real(), z.imag(), UnitClass::Parabolic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gc(re: f64, im: f64, class: UnitClass) -> GcNumber<f64> {
        GcNumber::new(re, im, class)
    }

    #[test]
    fn classify_maps_signs_to_classes() {
        assert_eq!(classify(-1).unwrap(), UnitClass::Elliptic);
        assert_eq!(classify(0).unwrap(), UnitClass::Parabolic);
        assert_eq!(classify(1).unwrap(), UnitClass::Hyperbolic);
        assert!(matches!(
            classify(2),
            Err(Error::InvalidArgument { op: "classify", .. })
        ));
    }

    #[test]
    fn delta_inverts_classify() {
        for sign in [-1, 0, 1] {
            assert_eq!(classify(sign).unwrap().delta(), sign);
        }
    }

    #[test]
    fn addition_is_componentwise_in_every_class() {
        for class in [UnitClass::Elliptic, UnitClass::Parabolic, UnitClass::Hyperbolic] {
            let sum = gc(1.0, 2.0, class).add(gc(3.0, 4.0, class)).unwrap();
            assert_eq!(sum, gc(4.0, 6.0, class));
            let diff = gc(3.0, 4.0, class).sub(gc(1.0, 2.0, class)).unwrap();
            assert_eq!(diff, gc(2.0, 2.0, class));
        }
    }

    #[test]
    fn class_mismatch_is_an_error() {
        let e = gc(1.0, 2.0, UnitClass::Elliptic);
        let h = gc(1.0, 2.0, UnitClass::Hyperbolic);
        assert!(matches!(e.add(h), Err(Error::ClassMismatch { op: "gc_add", .. })));
        assert!(matches!(e.sub(h), Err(Error::ClassMismatch { op: "gc_sub", .. })));
        assert!(matches!(e.mul(h), Err(Error::ClassMismatch { op: "gc_mul", .. })));
    }

    #[test]
    fn the_unit_squares_to_delta() {
        for class in [UnitClass::Elliptic, UnitClass::Parabolic, UnitClass::Hyperbolic] {
            let unit = gc(0.0, 1.0, class);
            let square = unit.mul(unit).unwrap();
            assert_eq!(square.re(), f64::from(class.delta()));
            assert_eq!(square.im(), 0.0);
        }
    }

    #[test]
    fn parabolic_multiplication_matches_dual_multiplication() {
        // Frozen from the matrix-form oracle: (1+2ε)(3+4ε) = 3 + 10ε.
        let z = gc(1.0, 2.0, UnitClass::Parabolic);
        let u = gc(3.0, 4.0, UnitClass::Parabolic);
        let prod = z.mul(u).unwrap();
        assert_eq!((prod.re(), prod.im()), (3.0, 10.0));

        // Bit-for-bit agreement with Dual on awkward values, signed zeros
        // included.
        for (a1, b1, a2, b2) in [
            (0.1, -7.3, 2.4e-3, 9.9),
            (-0.0, 1.0, -1.0, 3.5),
            (1e300, 2.0, 1e-300, -4.0),
        ] {
            let g = gc(a1, b1, UnitClass::Parabolic)
                .mul(gc(a2, b2, UnitClass::Parabolic))
                .unwrap();
            let d = Dual::new(a1, b1) * Dual::new(a2, b2);
            assert_eq!(g.re().to_bits(), d.real().to_bits());
            assert_eq!(g.im().to_bits(), d.imag().to_bits());
        }
    }

    #[test]
    fn qnorm_by_class() {
        assert_eq!(gc(3.0, 4.0, UnitClass::Elliptic).qnorm(), 25.0);
        assert_eq!(gc(3.0, 4.0, UnitClass::Parabolic).qnorm(), 9.0);
        assert_eq!(gc(5.0, 3.0, UnitClass::Hyperbolic).qnorm(), 16.0);
        // Hyperbolic qnorm is an indefinite form.
        assert_eq!(gc(3.0, 5.0, UnitClass::Hyperbolic).qnorm(), -16.0);
    }

    #[test]
    fn qnorm_agrees_with_z_times_conj() {
        for class in [UnitClass::Elliptic, UnitClass::Parabolic, UnitClass::Hyperbolic] {
            let z = gc(2.5, -1.75, class);
            let w = z.mul(z.conj()).unwrap();
            assert_eq!(w.re(), z.qnorm());
            assert_eq!(w.im(), 0.0); // exactly, by symmetry of a·(-b) + b·a
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        let z = gc(1.5, -2.5, UnitClass::Hyperbolic);
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn parabolic_round_trips_through_dual() {
        let d = Dual::new(1.25, -3.5);
        let g: GcNumber<f64> = d.into();
        assert_eq!(g.class(), UnitClass::Parabolic);
        assert_eq!(g.to_dual().unwrap(), d);
        assert_eq!(gc(1.0, 2.0, UnitClass::Elliptic).to_dual(), None);
    }
}
