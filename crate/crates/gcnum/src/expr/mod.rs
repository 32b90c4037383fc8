//! A tiny expression language over one real variable, evaluated on duals.
//!
//! The pipeline is [`tokenize`] → [`parse`] → [`eval_dual`], with
//! [`parse_source`] gluing the first two together. Evaluating an
//! expression at `x = a + 1ε` yields the value and the exact derivative
//! in one pass:
//!
//! ```
//! use std::collections::HashMap;
//! use gcnum::expr::{eval_dual, parse_source};
//! use gcnum::Dual;
//!
//! let node = parse_source("x * sin(x)").unwrap();
//! let mut env = HashMap::new();
//! env.insert("x".to_string(), Dual::new(1.0_f64, 1.0));
//! let z = eval_dual(&node, &env).unwrap();
//! assert_eq!(z.real(), 1.0_f64.sin());
//! assert_eq!(z.imag(), 1.0_f64.sin() + 1.0_f64.cos());
//! ```
//!
//! Positions in errors are zero-based character offsets into the source
//! string, so a caller can point a caret at the offending spot.

mod eval;
mod parse;
mod token;

pub use eval::{eval_dual, free_variables};
pub use parse::parse;
pub use token::{tokenize, Token, TokenKind};

use std::fmt;

/// Tokenizes and parses a source string in one step.
pub fn parse_source(source: &str) -> Result<ExprNode, ParseError> {
    parse(&tokenize(source)?)
}

/// A syntax error, with the character offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

/// An evaluation failure, tagged with the position of the node at fault.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    /// A variable had no binding in the environment.
    Unbound { pos: usize, name: String },
    /// A context that demands a real number (an exponent, a logarithm
    /// base) received a value with a nonzero dual part.
    NonReal { pos: usize, what: &'static str },
    /// An arithmetic domain violation, wrapping the underlying error.
    Domain { pos: usize, source: crate::Error },
}

impl EvalError {
    /// The character offset of the node that failed.
    pub fn pos(&self) -> usize {
        match self {
            EvalError::Unbound { pos, .. }
            | EvalError::NonReal { pos, .. }
            | EvalError::Domain { pos, .. } => *pos,
        }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Unbound { pos, name } => {
                write!(f, "eval error at {pos}: unbound variable '{name}'")
            }
            EvalError::NonReal { pos, what } => {
                write!(f, "eval error at {pos}: {what} must be a real number")
            }
            EvalError::Domain { pos, source } => {
                write!(f, "eval error at {pos}: {source}")
            }
        }
    }
}

impl std::error::Error for EvalError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            EvalError::Domain { source, .. } => Some(source),
            _ => None,
        }
    }
}

/// A parsed expression: a kind plus the source position it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprNode {
    pub pos: usize,
    pub kind: ExprKind,
}

impl ExprNode {
    pub fn new(pos: usize, kind: ExprKind) -> Self {
        ExprNode { pos, kind }
    }
}

/// The shape of an expression node.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Number(f64),
    Variable(String),
    Neg(Box<ExprNode>),
    Binary(BinaryOp, Box<ExprNode>, Box<ExprNode>),
    Call(Function, Vec<ExprNode>),
}

/// Infix operators, in no particular precedence order (the parser owns
/// precedence; the tree is already shaped).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Pow => "^",
        }
    }
}

/// The built-in function catalog.
///
/// `log` is special twice over: it accepts an optional leading base
/// argument (`log(2, x)`), and with one argument it is the natural log.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Sin,
    Cos,
    Tan,
    Cot,
    Asin,
    Acos,
    Atan,
    Acot,
    Sinh,
    Cosh,
    Tanh,
    Coth,
    Exp,
    Log,
    Sqrt,
    Cbrt,
    Abs,
    Conj,
}

impl Function {
    /// All functions, for iteration in docs and tests.
    pub const ALL: [Function; 18] = [
        Function::Sin,
        Function::Cos,
        Function::Tan,
        Function::Cot,
        Function::Asin,
        Function::Acos,
        Function::Atan,
        Function::Acot,
        Function::Sinh,
        Function::Cosh,
        Function::Tanh,
        Function::Coth,
        Function::Exp,
        Function::Log,
        Function::Sqrt,
        Function::Cbrt,
        Function::Abs,
        Function::Conj,
    ];

    /// Looks a function up by its source-level name.
    pub fn from_name(name: &str) -> Option<Function> {
        Function::ALL
            .iter()
            .copied()
            .find(|f| f.name() == name)
    }

    /// The source-level name.
    pub fn name(self) -> &'static str {
        match self {
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Tan => "tan",
            Function::Cot => "cot",
            Function::Asin => "asin",
            Function::Acos => "acos",
            Function::Atan => "atan",
            Function::Acot => "acot",
            Function::Sinh => "sinh",
            Function::Cosh => "cosh",
            Function::Tanh => "tanh",
            Function::Coth => "coth",
            Function::Exp => "exp",
            Function::Log => "log",
            Function::Sqrt => "sqrt",
            Function::Cbrt => "cbrt",
            Function::Abs => "abs",
            Function::Conj => "conj",
        }
    }
}
