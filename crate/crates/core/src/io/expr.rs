//! Rational arithmetic expressions over named parameters:
//! integers, names, `+ - * /`, unary minus and parentheses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bad = |reason: String| Error::Expression {
        expr: src.to_string(),
        reason,
    };
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(digits.parse().map_err(|_| bad(format!("bad integer `{digits}`")))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect()));
        } else if "+-*/()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(bad(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    env: &'a BTreeMap<String, Scalar>,
}

impl Parser<'_> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::Expression {
            expr: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn sum(&mut self) -> Result<Scalar> {
        let mut acc = self.product()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if c == '*' {
                acc *= rhs;
            } else {
                if rhs.is_zero() {
                    return Err(self.fail("division by zero"));
                }
                acc /= rhs;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Scalar> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Int(n)) => Ok(Scalar::from_integer(n)),
            Some(Token::Name(name)) => match self.env.get(&name) {
                Some(v) => Ok(v.clone()),
                None => Err(self.fail(format!("unknown parameter `{name}`"))),
            },
            Some(Token::Op('(')) => {
                let v = self.sum()?;
                if self.peek_op() != Some(')') {
                    return Err(self.fail("missing `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(t) => Err(self.fail(format!("unexpected {t:?}"))),
            None => Err(self.fail("unexpected end")),
        }
    }
}

/// Evaluates `src` with the given parameter values.
pub fn evaluate(src: &str, env: &BTreeMap<String, Scalar>) -> Result<Scalar> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        src,
        tokens,
        pos: 0,
        env,
    };
    let v = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(p.fail("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn env() -> BTreeMap<String, Scalar> {
        [("a".to_string(), int(3)), ("r".to_string(), ratio(1, 2))].into_iter().collect()
    }

    #[test]
    fn precedence_and_signs() {
        assert_eq!(evaluate("2*a/(2-a)", &env()).unwrap(), int(-6));
        assert_eq!(evaluate("-a*a", &env()).unwrap(), int(-9));
        assert_eq!(evaluate("r - -1", &env()).unwrap(), ratio(3, 2));
        assert_eq!(evaluate("1 + 2 * 3", &env()).unwrap(), int(7));
    }

    #[test]
    fn errors() {
        assert!(evaluate("a/(a-3)", &env()).is_err());
        assert!(evaluate("b", &env()).is_err());
        assert!(evaluate("(a", &env()).is_err());
        assert!(evaluate("a a", &env()).is_err());
        assert!(evaluate("", &env()).is_err());
    }
}
