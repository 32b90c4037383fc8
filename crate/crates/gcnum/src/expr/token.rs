//! Tokenizer for one-variable math expressions.
//!
//! Positions are character offsets into the source (0-based), kept on every
//! token so later stages can point at the exact spot that went wrong.

use super::ParseError;

/// What a token is, independent of its spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Identifier,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

/// One lexical unit: kind, original spelling and character offset.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub pos: usize,
}

impl Token {
    fn new(kind: TokenKind, lexeme: impl Into<String>, pos: usize) -> Self {
        Token {
            kind,
            lexeme: lexeme.into(),
            pos,
        }
    }
}

/// Splits `source` into tokens, skipping whitespace.
///
/// Numbers accept digits, one decimal point and an optional exponent part
/// (`e`/`E`, optional sign) — `1.5e-3` is a single token. Identifiers are
/// `[A-Za-z_][A-Za-z0-9_]*`. Anything else that is not an operator or
/// parenthesis is an error carrying its character offset.
pub fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }

        let simple = match c {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            _ => None,
        };
        if let Some(kind) = simple {
            tokens.push(Token::new(kind, c, i));
            i += 1;
            continue;
        }

        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
        {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            // An exponent is consumed only when a digit actually follows,
            // so `2e` stays a number followed by the identifier `e`.
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let lexeme: String = chars[start..i].iter().collect();
            tokens.push(Token::new(TokenKind::Number, lexeme, start));
            continue;
        }

        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let lexeme: String = chars[start..i].iter().collect();
            tokens.push(Token::new(TokenKind::Identifier, lexeme, start));
            continue;
        }

        return Err(ParseError::new(i, format!("unrecognized character '{c}'")));
    }

    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(source: &str) -> Vec<TokenKind> {
        tokenize(source).unwrap().iter().map(|t| t.kind).collect()
    }

    #[test]
    fn splits_an_expression_into_kinds() {
        use TokenKind::*;
        assert_eq!(
            kinds("x*sin(x)"),
            vec![Identifier, Star, Identifier, LParen, Identifier, RParen]
        );
        assert_eq!(kinds("1 + 2"), vec![Number, Plus, Number]);
        assert_eq!(kinds("log(2, x)"), vec![Identifier, LParen, Number, Comma, Identifier, RParen]);
    }

    #[test]
    fn numbers_take_one_decimal_point_and_an_exponent() {
        let toks = tokenize("1.5e-3").unwrap();
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].lexeme, "1.5e-3");
        assert_eq!(toks[0].lexeme.parse::<f64>().unwrap(), 0.0015);

        for (src, lexeme) in [("2.5", "2.5"), (".5", ".5"), ("1.", "1."), ("3E4", "3E4")] {
            let toks = tokenize(src).unwrap();
            assert_eq!(toks.len(), 1, "{src}");
            assert_eq!(toks[0].lexeme, lexeme);
        }
    }

    #[test]
    fn a_bare_e_after_digits_is_an_identifier() {
        use TokenKind::*;
        // `2e` ends the number at `2`; `e` is Euler's constant.
        assert_eq!(kinds("2e"), vec![Number, Identifier]);
        assert_eq!(kinds("2e+"), vec![Number, Identifier, Plus]);
        assert_eq!(kinds("2e3"), vec![Number]);
    }

    #[test]
    fn identifiers_allow_digits_after_the_first_character() {
        let toks = tokenize("x1 + _y").unwrap();
        assert_eq!(toks[0].lexeme, "x1");
        assert_eq!(toks[2].lexeme, "_y");
    }

    #[test]
    fn positions_are_character_offsets() {
        let toks = tokenize("x * y").unwrap();
        assert_eq!(toks.iter().map(|t| t.pos).collect::<Vec<_>>(), vec![0, 2, 4]);
    }

    #[test]
    fn unrecognized_characters_report_their_offset() {
        let err = tokenize("x $ y").unwrap_err();
        assert_eq!(err.pos, 2);
        assert!(err.to_string().contains('$'));
    }

    #[test]
    fn whitespace_only_input_yields_no_tokens() {
        assert!(tokenize("   ").unwrap().is_empty());
        assert!(tokenize("").unwrap().is_empty());
    }
}
