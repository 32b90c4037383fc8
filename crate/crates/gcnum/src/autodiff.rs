//! Forward-mode differentiation by dual lifting, plus an independent
//! finite-difference oracle.
//!
//! Evaluating `f` at `a + 1ε` produces `f(a) + f'(a)ε`, so the derivative
//! is read off the ε-component exactly — no step size, no truncation error.
//! [`fd_central`] exists as a deliberately separate validation path: it
//! never touches dual arithmetic, so agreement between the two routes is
//! meaningful evidence.

use num_traits::Float;

use crate::dual::Dual;

/// The exact first derivative of `f` at `a`, read off the ε-component of
/// `f(a + 1ε)`. Errors raised by `f` propagate unchanged.
///
/// ```
/// use gcnum::autodiff::derivative;
/// use gcnum::{Dual, Error};
///
/// // d/dx (x·sin x) at 1 = sin 1 + cos 1.
/// let d = derivative(|x: Dual<f64>| Ok::<_, Error>(x * x.sin()), 1.0).unwrap();
/// assert_eq!(d, 1.0f64.sin() + 1.0f64.cos());
/// ```
pub fn derivative<T, E, F>(f: F, at: T) -> Result<T, E>
where
    T: Float,
    F: FnOnce(Dual<T>) -> Result<Dual<T>, E>,
{
    Ok(f(Dual::new(at, T::one()))?.imag())
}

/// Value and first derivative of `f` at `a` from a single evaluation at
/// `a + 1ε`: the pair `(real, imag)` of the lifted result.
pub fn value_and_derivative<T, E, F>(f: F, at: T) -> Result<(T, T), E>
where
    T: Float,
    F: FnOnce(Dual<T>) -> Result<Dual<T>, E>,
{
    Ok(f(Dual::new(at, T::one()))?.reim())
}

/// Central finite difference `(f(a+h) - f(a-h)) / 2h`.
///
/// This is the second-order validation oracle: independent of dual
/// arithmetic by construction. Errors from either probe propagate.
///
/// # Panics
///
/// Panics if `h <= 0` — a caller bug, not a data-domain condition.
pub fn fd_central<T, E, F>(mut f: F, at: T, h: T) -> Result<T, E>
where
    T: Float,
    F: FnMut(T) -> Result<T, E>,
{
    assert!(h > T::zero(), "fd_central requires a positive step");
    let two = T::one() + T::one();
    Ok((f(at + h)? - f(at - h)?) / (two * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{Error, Result as GcResult};

    #[test]
    fn worked_example_x_sin_x() {
        // f(x) = x·sin x, f'(a) = sin a + a·cos a; frozen at a = 1 from the
        // finite-difference oracle: 1.3817732906760363.
        let f = |x: Dual<f64>| GcResult::Ok(x * x.sin());
        let d = derivative(f, 1.0).unwrap();
        assert_eq!(d, 1.3817732906760363);

        let fd = fd_central(|x| GcResult::Ok(x * x.sin()), 1.0, 1e-6).unwrap();
        assert!((d - fd).abs() / d.abs().max(1.0) <= 1e-6);

        let (v, dv) = value_and_derivative(f, 1.0).unwrap();
        assert_eq!(v, 1.0f64.sin());
        assert_eq!(dv, d);
    }

    #[test]
    fn value_component_equals_plain_evaluation() {
        let f = |x: Dual<f64>| x.sin().try_div(x.exp());
        let (v, _) = value_and_derivative(f, 0.75).unwrap();
        let plain = 0.75f64.sin() / 0.75f64.exp();
        assert!((v - plain).abs() <= plain.abs() * 1e-14);
    }

    #[test]
    fn simple_slopes() {
        assert_eq!(derivative(|x: Dual<f64>| GcResult::Ok(x.exp()), 0.0).unwrap(), 1.0);
        assert_eq!(derivative(|x: Dual<f64>| x.ln(), 1.0).unwrap(), 1.0);
        assert_eq!(derivative(|x: Dual<f64>| x.powi(2), 3.0).unwrap(), 6.0);
    }

    #[test]
    fn domain_errors_propagate() {
        let err = derivative(|x: Dual<f64>| x.ln(), -1.0).unwrap_err();
        assert!(matches!(err, Error::Domain { op: "log", .. }));
    }

    #[test]
    fn fd_central_is_exact_on_quadratics() {
        // For f(x) = x² the truncation term vanishes; with dyadic h the
        // arithmetic is exact too, at any step size.
        for h in [0.5, 0.0078125, 9.5367431640625e-7] {
            let fd = fd_central(|x| GcResult::Ok(x * x), 3.0, h).unwrap();
            assert_eq!(fd, 6.0);
        }
    }

    #[test]
    fn fd_central_tracks_trig_slopes() {
        let fd = fd_central(|x| GcResult::Ok(x.sin()), 0.0, 1e-6).unwrap();
        assert!((fd - 1.0).abs() <= 1e-9);
        let fd = fd_central(|x| GcResult::Ok(x.sin()), std::f64::consts::FRAC_PI_2, 1e-6).unwrap();
        assert!(fd.abs() <= 1e-9);
    }

    #[test]
    fn fd_central_propagates_probe_errors() {
        // The left probe at 1e-9 - 1e-6 < 0 leaves the sqrt domain.
        let res = fd_central(|x| Dual::from_real(x).sqrt().map(|z| z.real()), 1e-9, 1e-6);
        assert!(matches!(res, Err(Error::Domain { op: "sqrt", .. })));
    }

    #[test]
    #[should_panic(expected = "positive step")]
    fn fd_central_rejects_non_positive_steps() {
        let _ = fd_central(|x| GcResult::Ok(x), 0.0, 0.0);
    }

    #[test]
    fn product_and_chain_rules_emerge() {
        let a = 0.8;
        let product = derivative(|x: Dual<f64>| GcResult::Ok(x.sin() * x.exp()), a).unwrap();
        let by_hand = a.sin() * a.exp() + a.cos() * a.exp();
        assert!((product - by_hand).abs() <= by_hand.abs() * 1e-14);

        let chain = derivative(|x: Dual<f64>| GcResult::Ok(x.sin().exp()), a).unwrap();
        let by_hand = a.sin().exp() * a.cos();
        assert!((chain - by_hand).abs() <= by_hand.abs() * 1e-14);
    }
}
