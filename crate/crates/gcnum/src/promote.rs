//! Scalar promotion rules for mixed-type construction and arithmetic.
//!
//! Construction from two scalars of different kinds promotes both to the
//! wider floating type; integer pairs promote to `f64` so that exact results
//! stay exact at (at least) IEEE double precision. Mixed dual/real arithmetic
//! lifts the real operand into the dual's own scalar type.

/// Conversion of a plain real scalar into the scalar type of a dual number.
///
/// Implemented for the primitive integers and floats that can be represented
/// in the target type without narrowing a float (`f64 -> f32` is deliberately
/// not provided).
pub trait IntoScalar<T>: Copy {
    fn into_scalar(self) -> T;
}

macro_rules! impl_into_scalar {
    ($target:ty: $($source:ty),+) => {$(
        impl IntoScalar<$target> for $source {
            #[inline]
            fn into_scalar(self) -> $target {
                self as $target
            }
        }
    )+};
}

impl_into_scalar!(f64: f64, f32, i8, i16, i32, i64, u8, u16, u32);
impl_into_scalar!(f32: f32, i8, i16, i32, i64, u8, u16, u32);

/// Pairwise promotion of two real scalars to a common floating type.
///
/// The result type is the wider of the two operands' natural floating
/// representations; two integers promote to `f64`.
pub trait Promote<Rhs: Copy>: Copy {
    /// The common scalar type both operands are widened to.
    type Wider;

    fn promote(self, rhs: Rhs) -> (Self::Wider, Self::Wider);
}

macro_rules! impl_promote {
    ($($lhs:ty, $rhs:ty => $wider:ty;)+) => {$(
        impl Promote<$rhs> for $lhs {
            type Wider = $wider;

            #[inline]
            fn promote(self, rhs: $rhs) -> ($wider, $wider) {
                (self as $wider, rhs as $wider)
            }
        }
    )+};
}

impl_promote! {
    f64, f64 => f64;
    f64, f32 => f64;
    f32, f64 => f64;
    f32, f32 => f32;
}

// Integer/float pairs adopt the float's precision; integer pairs widen to f64.
macro_rules! impl_promote_int {
    ($($int:ty),+) => {$(
        impl_promote! {
            $int, f64 => f64;
            f64, $int => f64;
            $int, f32 => f32;
            f32, $int => f32;
        }

        impl_promote_int_pairs!($int: i8, i16, i32, i64, u8, u16, u32);
    )+};
}

macro_rules! impl_promote_int_pairs {
    ($lhs:ty: $($rhs:ty),+) => {$(
        impl_promote! { $lhs, $rhs => f64; }
    )+};
}

impl_promote_int!(i8, i16, i32, i64, u8, u16, u32);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_pairs_widen_to_double() {
        let (a, b) = 1i32.promote(2i64);
        assert_eq!((a, b), (1.0f64, 2.0f64));
    }

    #[test]
    fn float_wins_over_int() {
        let (a, b) = 1i32.promote(2.5f32);
        assert_eq!((a, b), (1.0f32, 2.5f32));
    }

    #[test]
    fn wider_float_wins() {
        let (a, b) = 1.5f32.promote(2.5f64);
        assert_eq!((a, b), (1.5f64, 2.5f64));
    }
}
