//! Recursive-descent parser.
//!
//! Grammar, in precedence order (loosest first):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' unary)?
//! atom   := number | ident | ident '(' expr (',' expr)? ')' | '(' expr ')'
//! ```
//!
//! `^` is right-associative (`2^3^2 = 512`) and binds tighter than unary
//! minus, so `-x^2` parses as `-(x^2)`. Unknown identifiers in call
//! position are errors, not implicit variables.

use super::token::{Token, TokenKind};
use super::{BinaryOp, ExprKind, ExprNode, Function, ParseError};

/// Parses a nonempty token list into an expression tree.
pub fn parse(tokens: &[Token]) -> Result<ExprNode, ParseError> {
    let mut parser = Parser { tokens, index: 0 };
    if tokens.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let node = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::new(
            tok.pos,
            format!("unexpected token '{}'", tok.lexeme),
        ));
    }
    Ok(node)
}

struct Parser<'a> {
    tokens: &'a [Token],
    index: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.index)
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let tok = self.tokens.get(self.index);
        self.index += 1;
        tok
    }

    /// Position just past the last token, for end-of-input errors.
    fn end_pos(&self) -> usize {
        self.tokens
            .last()
            .map(|t| t.pos + t.lexeme.chars().count())
            .unwrap_or(0)
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<&'a Token, ParseError> {
        match self.peek() {
            Some(tok) if tok.kind == kind => Ok(self.advance().unwrap()),
            Some(tok) => Err(ParseError::new(
                tok.pos,
                format!("expected {what}, found '{}'", tok.lexeme),
            )),
            None => Err(ParseError::new(
                self.end_pos(),
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn expr(&mut self) -> Result<ExprNode, ParseError> {
        let mut lhs = self.term()?;
        while let Some(tok) = self.peek() {
            let op = match tok.kind {
                TokenKind::Plus => BinaryOp::Add,
                TokenKind::Minus => BinaryOp::Sub,
                _ => break,
            };
            let pos = tok.pos;
            self.advance();
            let rhs = self.term()?;
            lhs = ExprNode::new(pos, ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprNode, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(tok) = self.peek() {
            let op = match tok.kind {
                TokenKind::Star => BinaryOp::Mul,
                TokenKind::Slash => BinaryOp::Div,
                _ => break,
            };
            let pos = tok.pos;
            self.advance();
            let rhs = self.unary()?;
            lhs = ExprNode::new(pos, ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ExprNode, ParseError> {
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Minus {
                let pos = tok.pos;
                self.advance();
                let inner = self.unary()?;
                return Ok(ExprNode::new(pos, ExprKind::Neg(Box::new(inner))));
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprNode, ParseError> {
        let base = self.atom()?;
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Caret {
                let pos = tok.pos;
                self.advance();
                // The exponent re-enters at `unary`, making `^` right-
                // associative and letting `x^-2` parse.
                let exponent = self.unary()?;
                return Ok(ExprNode::new(
                    pos,
                    ExprKind::Binary(BinaryOp::Pow, Box::new(base), Box::new(exponent)),
                ));
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprNode, ParseError> {
        let tok = match self.advance() {
            Some(tok) => tok,
            None => {
                return Err(ParseError::new(
                    self.end_pos(),
                    "expected an operand, found end of input",
                ))
            }
        };
        match tok.kind {
            TokenKind::Number => {
                let value: f64 = tok.lexeme.parse().map_err(|_| {
                    ParseError::new(tok.pos, format!("malformed number '{}'", tok.lexeme))
                })?;
                Ok(ExprNode::new(tok.pos, ExprKind::Number(value)))
            }
            TokenKind::Identifier => {
                if self.peek().map(|t| t.kind) == Some(TokenKind::LParen) {
                    self.call(tok)
                } else {
                    Ok(ExprNode::new(
                        tok.pos,
                        ExprKind::Variable(tok.lexeme.clone()),
                    ))
                }
            }
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(ParseError::new(
                tok.pos,
                format!("unexpected token '{}'", tok.lexeme),
            )),
        }
    }

    fn call(&mut self, name: &Token) -> Result<ExprNode, ParseError> {
        let function = Function::from_name(&name.lexeme).ok_or_else(|| {
            ParseError::new(name.pos, format!("unknown function '{}'", name.lexeme))
        })?;
        self.expect(TokenKind::LParen, "'('")?;
        let mut args = vec![self.expr()?];
        while self.peek().map(|t| t.kind) == Some(TokenKind::Comma) {
            self.advance();
            args.push(self.expr()?);
        }
        self.expect(TokenKind::RParen, "')'")?;

        let arity_ok = if function == Function::Log {
            (1..=2).contains(&args.len())
        } else {
            args.len() == 1
        };
        if !arity_ok {
            let expected = if function == Function::Log {
                "1 or 2 arguments".to_string()
            } else {
                "exactly 1 argument".to_string()
            };
            return Err(ParseError::new(
                name.pos,
                format!("{} takes {expected}, found {}", function.name(), args.len()),
            ));
        }
        Ok(ExprNode::new(name.pos, ExprKind::Call(function, args)))
    }
}
