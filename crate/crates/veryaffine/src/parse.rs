//! Parser for polynomials over the rationals.
//!
//! The grammar is the one the formatter emits and the fixture files use:
//! a signed sum of terms, each term an optional rational coefficient, an
//! optional `*`, and a product of `name^exp` factors. Examples:
//! `t2^2*t4^2 - 2*t1*t3 + 4`, `-1/2*x + y`, `3x`, `w*w`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::field::Rationals;
use crate::monomial::Monomial;
use crate::poly::{MultiPoly, PolynomialRing};
use crate::rational::Rat;

/// Parse failure with a byte position into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

impl core::fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParsePolyError> {
    Err(ParsePolyError { pos, msg: msg.into() })
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParsePolyError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits parse as integer");
                out.push((start, Token::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(input[start..i].to_string())));
            }
            other => return err(i, alloc::format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolynomialRing<Rationals>,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_uint(&mut self, what: &str) -> Result<BigInt, ParsePolyError> {
        let at = self.here();
        match self.advance() {
            Some(Token::Int(n)) => Ok(n),
            _ => err(at, alloc::format!("expected {what}")),
        }
    }

    /// Parses one factor `name` or `name^exp` into the exponent vector.
    fn factor(&mut self, exps: &mut [u16]) -> Result<(), ParsePolyError> {
        let at = self.here();
        let name = match self.advance() {
            Some(Token::Ident(name)) => name,
            _ => return err(at, "expected variable"),
        };
        let idx = match self.ring.var_index(&name) {
            Some(idx) => idx,
            None => return err(at, alloc::format!("unknown variable `{name}`")),
        };
        let mut exp = 1u16;
        if self.peek() == Some(&Token::Caret) {
            self.advance();
            let at = self.here();
            let n = self.expect_uint("exponent")?;
            exp = match n.to_u16() {
                Some(e) => e,
                None => return err(at, "exponent too large"),
            };
        }
        exps[idx] = match exps[idx].checked_add(exp) {
            Some(e) => e,
            None => return err(at, "exponent too large"),
        };
        Ok(())
    }

    /// Parses one term after its sign has been consumed.
    fn term(&mut self) -> Result<(Monomial, Rat), ParsePolyError> {
        let mut coeff = Rat::from_integer(BigInt::from(1));
        let mut exps = alloc::vec![0u16; self.ring.arity()];
        let mut saw_coeff = false;
        if let Some(Token::Int(_)) = self.peek() {
            let num = self.expect_uint("integer")?;
            let mut den = BigInt::from(1);
            if self.peek() == Some(&Token::Slash) {
                self.advance();
                let at = self.here();
                den = self.expect_uint("denominator")?;
                if den == BigInt::from(0) {
                    return err(at, "zero denominator");
                }
            }
            coeff = Rat::new(num, den);
            saw_coeff = true;
        }
        let explicit_star = saw_coeff && self.peek() == Some(&Token::Star);
        if explicit_star {
            self.advance();
        }
        let monomial_follows = matches!(self.peek(), Some(Token::Ident(_)));
        if explicit_star && !monomial_follows {
            return err(self.here(), "expected variable after `*`");
        }
        if !saw_coeff && !monomial_follows {
            return err(self.here(), "expected term");
        }
        if monomial_follows {
            self.factor(&mut exps)?;
            while self.peek() == Some(&Token::Star) {
                self.advance();
                self.factor(&mut exps)?;
            }
        }
        Ok((Monomial::new(&exps), coeff))
    }
}

/// Parses a polynomial in the ring's variables with rational coefficients.
pub fn parse_poly(
    ring: &PolynomialRing<Rationals>,
    input: &str,
) -> Result<MultiPoly<Rationals>, ParsePolyError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { ring, tokens, pos: 0, end: input.len() };
    let mut terms: Vec<(Monomial, Rat)> = Vec::new();
    let mut first = true;
    loop {
        let negative = match p.peek() {
            Some(Token::Plus) => {
                p.advance();
                false
            }
            Some(Token::Minus) => {
                p.advance();
                true
            }
            None if first => return err(p.end, "empty polynomial"),
            None => break,
            Some(_) if first => false,
            Some(_) => return err(p.here(), "expected `+` or `-` between terms"),
        };
        let (m, c) = p.term()?;
        terms.push((m, if negative { -c } else { c }));
        first = false;
    }
    Ok(ring.from_terms(terms))
}
