//! Error type shared by every fallible operation in the crate.
//!
//! Domain violations are recoverable values, never process aborts: each error
//! carries the operation name, the offending scalar and the constraint that
//! was violated, so callers (and the CLI) can report precisely what went
//! wrong.

use std::fmt;

use num_traits::Float;

use crate::gc::UnitClass;

/// Convenience alias used by all fallible operations.
pub type Result<T> = std::result::Result<T, Error>;

/// The ways a numeric operation can fail.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A mathematical domain violation, e.g. `sqrt` of a negative real part.
    Domain {
        /// Operation that rejected the input.
        op: &'static str,
        /// The offending scalar (real part, divisor, base, ...).
        value: f64,
        /// Human-readable statement of the violated constraint.
        constraint: &'static str,
    },
    /// Two generalized complex numbers of different classes were combined.
    ClassMismatch {
        op: &'static str,
        lhs: UnitClass,
        rhs: UnitClass,
    },
    /// A structurally invalid argument, e.g. a matrix that is not in dual
    /// form or a discriminant sign outside {-1, 0, +1}.
    InvalidArgument { op: &'static str, reason: String },
}

impl Error {
    /// Builds a domain error, capturing the offending value as `f64`.
    pub(crate) fn domain<T: Float>(op: &'static str, value: T, constraint: &'static str) -> Self {
        Error::Domain {
            op,
            value: value.to_f64().unwrap_or(f64::NAN),
            constraint,
        }
    }

    pub(crate) fn invalid(op: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            op,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain {
                op,
                value,
                constraint,
            } => write!(f, "{op}: {constraint} (got {value})"),
            Error::ClassMismatch { op, lhs, rhs } => {
                write!(f, "{op}: class mismatch: {lhs} vs {rhs}")
            }
            Error::InvalidArgument { op, reason } => write!(f, "{op}: {reason}"),
        }
    }
}

impl std::error::Error for Error {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_error_reports_op_value_and_constraint() {
        let err = Error::domain("sqrt", -1.0f64, "only defined for real(z) >= 0");
        let text = err.to_string();
        assert!(text.contains("sqrt"));
        assert!(text.contains("-1"));
        assert!(text.contains("real(z) >= 0"));
    }

    #[test]
    fn class_mismatch_names_both_classes() {
        let err = Error::ClassMismatch {
            op: "gc_add",
            lhs: UnitClass::Elliptic,
            rhs: UnitClass::Hyperbolic,
        };
        assert_eq!(err.to_string(), "gc_add: class mismatch: elliptic vs hyperbolic");
    }
}
