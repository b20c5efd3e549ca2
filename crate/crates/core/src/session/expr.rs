//! Polynomial expressions: integers, variables, `+ - * / ^` and parentheses.
//!
//! `/` is accepted only with a nonzero constant divisor, so rational
//! coefficients such as `x/2` or `3/4*y` can be written.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, ParseError, Result};
use crate::groebner::Ideal;
use crate::ring::{Polynomial, Ring};

const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

/// Location context for error messages.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Span<'a> {
    pub line: usize,
    /// 0-based char column of the expression's first char within `source`.
    pub offset: usize,
    pub source: &'a str,
}

impl Span<'_> {
    fn error(&self, col: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.offset + col + 1,
            message: message.into(),
            source_line: self.source.to_string(),
        }
    }
}

fn lex(text: &str, span: Span<'_>) -> std::result::Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, col });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Int(digits.parse().unwrap()), col });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), col });
        } else {
            return Err(span.error(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    end_col: usize,
    ring: &'a Ring,
    span: Span<'a>,
    /// Integer parameters usable as constants and in exponents.
    params: &'a [(String, i64)],
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.col).unwrap_or(self.end_col)
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Int(n)) => format!("'{n}'"),
            Some(Tok::Ident(s)) => format!("'{s}'"),
            Some(t) => format!(
                "'{}'",
                match t {
                    Tok::Plus => "+",
                    Tok::Minus => "-",
                    Tok::Star => "*",
                    Tok::Slash => "/",
                    Tok::Caret => "^",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    _ => ",",
                }
            ),
        }
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.span.error(col, "division is only allowed by a nonzero constant"));
                    }
                    let inv = d.constant_term().inverse().map_err(|_| self.span.error(col, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn param(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|(p, _)| p == name).map(|&(_, v)| v)
    }

    fn power(&mut self) -> PResult<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        let value = self.exponent()?;
        let e: u32 = u32::try_from(&value)
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| self.span.error(col, format!("exponent {value} is not in 0..={MAX_EXPONENT}")))?;
        Ok(base.pow(e))
    }

    /// An integer, a parameter, or a parenthesized integer expression.
    fn exponent(&mut self) -> PResult<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            Some(Tok::Ident(name)) if self.param(&name).is_some() => {
                self.pos += 1;
                Ok(self.param(&name).unwrap().into())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.int_sum()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.span.error(self.col(), format!("expected ')', found {}", self.describe())));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.span.error(
                self.col(),
                format!("expected a nonnegative integer exponent, found {}", self.describe()),
            )),
        }
    }

    fn int_sum(&mut self) -> PResult<BigInt> {
        let mut acc = self.int_product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc += self.int_product()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc -= self.int_product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn int_product(&mut self) -> PResult<BigInt> {
        let mut acc = self.exponent()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc *= self.exponent()?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> PResult<Polynomial> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let c = self
                    .ring
                    .field()
                    .from_rational(&BigRational::from_integer(n))
                    .map_err(|e| self.span.error(col, e.to_string()))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.var_index(&name) {
                    return Ok(Polynomial::variable(self.ring, i));
                }
                match self.param(&name) {
                    Some(v) => Ok(Polynomial::constant(self.ring, self.ring.field().from_i64(v))),
                    None => Err(self.span.error(col, format!("unknown variable '{name}'"))),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.span.error(self.col(), format!("expected ')', found {}", self.describe())));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.span.error(col, format!("expected an expression, found {}", self.describe()))),
        }
    }
}

/// Parses a comma-separated list of expressions located at `span`.
pub(crate) fn parse_list(ring: &Ring, text: &str, span: Span<'_>) -> PResult<Vec<Polynomial>> {
    parse_list_with(ring, text, span, &[])
}

/// As [`parse_list`], with integer parameters bound to values.
pub(crate) fn parse_list_with(
    ring: &Ring,
    text: &str,
    span: Span<'_>,
    params: &[(String, i64)],
) -> PResult<Vec<Polynomial>> {
    let toks = lex(text, span)?;
    let mut p = Parser { toks, pos: 0, end_col: text.chars().count(), ring, span, params };
    let mut out = vec![p.expr()?];
    while p.peek() == Some(&Tok::Comma) {
        p.pos += 1;
        out.push(p.expr()?);
    }
    if p.peek().is_some() {
        return Err(p.span.error(p.col(), format!("unexpected {}", p.describe())));
    }
    Ok(out)
}

/// Parses a single expression located at `span`.
pub(crate) fn parse_one(ring: &Ring, text: &str, span: Span<'_>) -> PResult<Polynomial> {
    let list = parse_list(ring, text, span)?;
    if list.len() != 1 {
        let col = text.find(',').map(|b| text[..b].chars().count()).unwrap_or(0);
        return Err(span.error(col, "expected a single expression"));
    }
    Ok(list.into_iter().next().unwrap())
}

/// Parses a polynomial over `ring`, e.g. `x^2*y - 3/2*z + 1`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    parse_one(ring, text, Span { line: 1, offset: 0, source: text }).map_err(Error::Parse)
}

/// Parses a comma-separated generator list over `ring`.
pub fn parse_polynomials(ring: &Ring, text: &str) -> Result<Vec<Polynomial>> {
    parse_list(ring, text, Span { line: 1, offset: 0, source: text }).map_err(Error::Parse)
}

/// Parses a comma-separated generator list into an ideal; `0` gives the zero ideal.
pub fn parse_ideal(ring: &Ring, text: &str) -> Result<Ideal> {
    Ideal::new(ring, parse_polynomials(ring, text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    #[test]
    fn precedence_and_unary_minus() {
        let r = RingDescriptor::rationals(&["x", "y"]).unwrap();
        let f = parse_polynomial(&r, "-x^2 + 2*(x - y)*y").unwrap();
        let g = parse_polynomial(&r, "2*x*y - 2*y^2 - x^2").unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_polynomial(&r, "x/2 + x/2").unwrap(), parse_polynomial(&r, "x").unwrap());
    }

    #[test]
    fn error_locations() {
        let r = RingDescriptor::rationals(&["x", "y"]).unwrap();
        let Error::Parse(e) = parse_polynomial(&r, "x + ").unwrap_err() else { panic!() };
        assert_eq!((e.line, e.column), (1, 5));
        let Error::Parse(e) = parse_polynomial(&r, "x*q").unwrap_err() else { panic!() };
        assert_eq!(e.column, 3);
        assert!(e.message.contains("unknown variable"));
        assert!(parse_polynomial(&r, "x/y").is_err());
        assert!(parse_polynomial(&r, "x^-1").is_err());
        assert!(parse_polynomial(&r, "(x").is_err());
    }

    #[test]
    fn parameters_in_exponents() {
        let r = RingDescriptor::rationals(&["x", "y"]).unwrap();
        let span = Span { line: 1, offset: 0, source: "" };
        let params = [("m".to_string(), 3)];
        let got = parse_list_with(&r, "x^(m+1), x^m*y, m*x", span, &params).unwrap();
        let want = parse_polynomials(&r, "x^4, x^3*y, 3*x").unwrap();
        assert_eq!(got, want);
        assert!(parse_list_with(&r, "x^(m-4)", span, &params).is_err());
        assert!(parse_polynomial(&r, "x^m").is_err());
    }

    #[test]
    fn prime_field_constants() {
        let r = RingDescriptor::new(["x"], crate::ring::CoefficientField::prime_field(5).unwrap()).unwrap();
        assert_eq!(parse_polynomial(&r, "7*x").unwrap(), parse_polynomial(&r, "2*x").unwrap());
        assert_eq!(parse_polynomial(&r, "x/2").unwrap(), parse_polynomial(&r, "3*x").unwrap());
        assert!(parse_polynomial(&r, "x/5").is_err());
    }
}
