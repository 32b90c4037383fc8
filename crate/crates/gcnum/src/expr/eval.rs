//! Dual-number evaluation of parsed expressions.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Float, FloatConst};

use super::{BinaryOp, EvalError, ExprKind, ExprNode, Function};
use crate::Dual;

/// Evaluates an expression over dual numbers.
///
/// Variables resolve through `env` first; `pi` and `e` fall back to
/// built-in real constants when not shadowed. Exponents and logarithm
/// bases must evaluate to values with a dual part of exactly zero.
///
/// Binding the variable of interest to `a + 1ε` makes the result carry
/// the value at `a` in its real part and the derivative in its dual
/// part — that is the whole point.
///
/// # Panics
///
/// Panics on call nodes whose argument count violates the arity the
/// parser enforces; hand-built trees must respect it too.
pub fn eval_dual<T>(
    node: &ExprNode,
    env: &HashMap<String, Dual<T>>,
) -> Result<Dual<T>, EvalError>
where
    T: Float + FloatConst,
{
    match &node.kind {
        ExprKind::Number(value) => Ok(Dual::from_real(
            T::from(*value).expect("floating-point literals convert"),
        )),
        ExprKind::Variable(name) => {
            if let Some(z) = env.get(name) {
                return Ok(*z);
            }
            match name.as_str() {
                "pi" => Ok(Dual::from_real(T::PI())),
                "e" => Ok(Dual::from_real(T::E())),
                _ => Err(EvalError::Unbound {
                    pos: node.pos,
                    name: name.clone(),
                }),
            }
        }
        ExprKind::Neg(inner) => Ok(-eval_dual(inner, env)?),
        ExprKind::Binary(op, lhs, rhs) => match op {
            BinaryOp::Add => Ok(eval_dual(lhs, env)? + eval_dual(rhs, env)?),
            BinaryOp::Sub => Ok(eval_dual(lhs, env)? - eval_dual(rhs, env)?),
            BinaryOp::Mul => Ok(eval_dual(lhs, env)? * eval_dual(rhs, env)?),
            BinaryOp::Div => {
                let numerator = eval_dual(lhs, env)?;
                let denominator = eval_dual(rhs, env)?;
                numerator
                    .try_div(denominator)
                    .map_err(|source| EvalError::Domain {
                        pos: node.pos,
                        source,
                    })
            }
            BinaryOp::Pow => {
                // The exponent must be real before the base is even
                // looked at, mirroring the `z^w` restriction.
                let exponent = eval_dual(rhs, env)?;
                if exponent.imag() != T::zero() {
                    return Err(EvalError::NonReal {
                        pos: rhs.pos,
                        what: "exponent",
                    });
                }
                let base = eval_dual(lhs, env)?;
                base.powf(exponent.real())
                    .map_err(|source| EvalError::Domain {
                        pos: node.pos,
                        source,
                    })
            }
        },
        ExprKind::Call(function, args) => eval_call(node.pos, *function, args, env),
    }
}

fn eval_call<T>(
    pos: usize,
    function: Function,
    args: &[ExprNode],
    env: &HashMap<String, Dual<T>>,
) -> Result<Dual<T>, EvalError>
where
    T: Float + FloatConst,
{
    let domain = |source| EvalError::Domain { pos, source };

    // `log(base, x)` is the one two-argument form.
    if function == Function::Log && args.len() == 2 {
        let base = eval_dual(&args[0], env)?;
        if base.imag() != T::zero() {
            return Err(EvalError::NonReal {
                pos: args[0].pos,
                what: "logarithm base",
            });
        }
        let z = eval_dual(&args[1], env)?;
        return z.log(base.real()).map_err(domain);
    }

    assert!(
        args.len() == 1,
        "{} expects 1 argument, got {}",
        function.name(),
        args.len()
    );
    let z = eval_dual(&args[0], env)?;
    match function {
        Function::Sin => Ok(z.sin()),
        Function::Cos => Ok(z.cos()),
        Function::Tan => z.tan().map_err(domain),
        Function::Cot => z.cot().map_err(domain),
        Function::Asin => z.asin().map_err(domain),
        Function::Acos => z.acos().map_err(domain),
        Function::Atan => Ok(z.atan()),
        Function::Acot => Ok(z.acot()),
        Function::Sinh => Ok(z.sinh()),
        Function::Cosh => Ok(z.cosh()),
        Function::Tanh => Ok(z.tanh()),
        Function::Coth => z.coth().map_err(domain),
        Function::Exp => Ok(z.exp()),
        Function::Log => z.ln().map_err(domain),
        Function::Sqrt => z.sqrt().map_err(domain),
        Function::Cbrt => z.cbrt().map_err(domain),
        // The modulus of a dual number is its real part (sign kept), a
        // real; lifting it back in therefore zeroes the dual part.
        Function::Abs => Ok(Dual::from_real(z.abs())),
        Function::Conj => Ok(z.conj()),
    }
}

/// Collects the unbound variable names in an expression, sorted.
///
/// The built-in constants `pi` and `e` are not reported even though an
/// environment entry may shadow them.
pub fn free_variables(node: &ExprNode) -> BTreeSet<String> {
    let mut names = BTreeSet::new();
    collect_variables(node, &mut names);
    names
}

fn collect_variables(node: &ExprNode, names: &mut BTreeSet<String>) {
    match &node.kind {
        ExprKind::Number(_) => {}
        ExprKind::Variable(name) => {
            if name != "pi" && name != "e" {
                names.insert(name.clone());
            }
        }
        ExprKind::Neg(inner) => collect_variables(inner, names),
        ExprKind::Binary(_, lhs, rhs) => {
            collect_variables(lhs, names);
            collect_variables(rhs, names);
        }
        ExprKind::Call(_, args) => {
            for arg in args {
                collect_variables(arg, names);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_source;
    use super::*;

    fn eval_at(source: &str, x: f64) -> Result<Dual<f64>, EvalError> {
        let node = parse_source(source).unwrap();
        let mut env = HashMap::new();
        env.insert("x".to_string(), Dual::new(x, 1.0));
        eval_dual(&node, &env)
    }

    #[test]
    fn product_rule_emerges_from_the_arithmetic() {
        let z = eval_at("x * sin(x)", 1.0).unwrap();
        assert_eq!(z.real(), 1.0_f64.sin());
        // sin 1 + 1·cos 1, one rounded addition.
        assert_eq!(z.imag(), 1.3817732906760363);
    }

    #[test]
    fn powers_follow_the_parse_shape() {
        let z = eval_at("x^2", 3.0).unwrap();
        assert_eq!(z.real(), 9.0);
        assert_eq!(z.imag(), 6.0);

        // -x^2 is -(x^2), not (-x)^2.
        let z = eval_at("-x^2", 3.0).unwrap();
        assert_eq!(z.real(), -9.0);
        assert_eq!(z.imag(), -6.0);

        // Right associativity: 2^3^2 = 2^9.
        let z = eval_at("2^3^2", 0.0).unwrap();
        assert_eq!(z.real(), 512.0);

        let z = eval_at("x^-2", 2.0).unwrap();
        assert_eq!(z.real(), 0.25);
        assert_eq!(z.imag(), -0.25);
    }

    #[test]
    fn derivative_at_zero_of_square_is_zero() {
        let z = eval_at("x^2", 0.0).unwrap();
        assert_eq!(z.reim(), (0.0, 0.0));
    }

    #[test]
    fn dual_valued_exponents_are_rejected() {
        let err = eval_at("x^x", 2.0).unwrap_err();
        assert_eq!(
            err,
            EvalError::NonReal {
                pos: 2,
                what: "exponent"
            }
        );

        // A dual base with a real exponent stays fine.
        let z = eval_at("x^3", 2.0).unwrap();
        assert_eq!(z.reim(), (8.0, 12.0));
    }

    #[test]
    fn two_argument_log_uses_the_leading_base() {
        let z = eval_at("log(2, x)", 8.0).unwrap();
        assert_eq!(z.real(), 8.0_f64.log(2.0));
        assert_eq!(z.imag(), 1.0 / (8.0 * 2.0_f64.ln()));

        let err = eval_at("log(x, 2)", 3.0).unwrap_err();
        assert_eq!(
            err,
            EvalError::NonReal {
                pos: 4,
                what: "logarithm base"
            }
        );
    }

    #[test]
    fn constants_are_built_in_and_shadowable() {
        let z = eval_at("cos(pi)", 0.0).unwrap();
        assert!((z.real() + 1.0).abs() < 1e-15);
        assert_eq!(z.imag(), 0.0);

        let z = eval_at("log(e)", 0.0).unwrap();
        assert!((z.real() - 1.0).abs() < 1e-15);

        let node = parse_source("pi + 1").unwrap();
        let mut env = HashMap::new();
        env.insert("pi".to_string(), Dual::new(3.0_f64, 0.0));
        let z = eval_dual(&node, &env).unwrap();
        assert_eq!(z.real(), 4.0);
    }

    #[test]
    fn unbound_variables_report_name_and_position() {
        let node = parse_source("2 * y").unwrap();
        let err = eval_dual::<f64>(&node, &HashMap::new()).unwrap_err();
        assert_eq!(
            err,
            EvalError::Unbound {
                pos: 4,
                name: "y".to_string()
            }
        );
    }

    #[test]
    fn domain_errors_carry_the_operator_position() {
        let err = eval_at("1/x", 0.0).unwrap_err();
        assert_eq!(err.pos(), 1);
        assert!(matches!(err, EvalError::Domain { .. }));

        let err = eval_at("log(-x)", 1.0).unwrap_err();
        assert_eq!(err.pos(), 0);
        assert!(err.to_string().contains("real(z) > 0"));
    }

    #[test]
    fn abs_and_conj_lift_as_projections() {
        let z = eval_at("abs(x)", -3.0).unwrap();
        assert_eq!(z.reim(), (-3.0, 0.0));

        let z = eval_at("conj(x)", 2.0).unwrap();
        assert_eq!(z.reim(), (2.0, -1.0));
    }

    #[test]
    fn free_variables_skip_constants() {
        let node = parse_source("pi * r^2 + e * h - sin(theta)").unwrap();
        let names: Vec<String> = free_variables(&node).into_iter().collect();
        assert_eq!(names, ["h", "r", "theta"]);

        let node = parse_source("2 + 2").unwrap();
        assert!(free_variables(&node).is_empty());
    }

    #[test]
    fn division_by_a_dual_with_nonzero_real_part_works() {
        let z = eval_at("1 / x", 2.0).unwrap();
        assert_eq!(z.real(), 0.5);
        assert_eq!(z.imag(), -0.25);
    }
}
