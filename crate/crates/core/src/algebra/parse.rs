//! Text grammar for ideals:
//!
//! ```text
//! vars x0..x4; x0^2 - x4^2, x1^2 - x4^2, x0*x3^3 - x2^3*x4
//! ```
//!
//! Variables are declared either as a range `x0..xN` or as a comma list that
//! must cover `x0..xN` exactly. Generators are separated by commas and use
//! `+ - * ^`, parentheses, and integer or `p/q` coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ideal::Ideal;
use super::monomial::ExponentVector;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

pub fn parse_ideal(text: &str) -> Result<Ideal> {
    let mut p = Parser::new(text);
    p.skip_ws();
    p.expect_keyword("vars")?;
    let nvars = p.var_declaration()?;
    p.expect_char(';')?;
    let mut gens = Vec::new();
    loop {
        let g = p.expr(nvars)?;
        if g.is_zero() {
            return Err(Error::ZeroGenerator { index: gens.len() });
        }
        gens.push(g);
        p.skip_ws();
        match p.peek() {
            Some(',') => {
                p.bump();
            }
            Some(';') => {
                p.bump();
                p.skip_ws();
                if p.peek().is_some() {
                    return Err(p.error("unexpected input after `;`"));
                }
                break;
            }
            None => break,
            Some(c) => return Err(p.error(&format!("expected `,` or end of input, found `{c}`"))),
        }
    }
    Ideal::new(nvars, gens)
}

/// Parses a single polynomial in `nvars` variables (`x0..x(nvars-1)`).
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    let mut p = Parser::new(text);
    let f = p.expr(nvars)?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
    }

    fn position_of(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn position(&self) -> (usize, usize) {
        self.position_of(self.pos)
    }

    fn error(&self, message: &str) -> Error {
        let (line, column) = self.position();
        Error::Syntax {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect_char(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(&format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(&format!("expected `{want}`, found end of input"))),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        self.skip_ws();
        let end = self.pos + kw.len();
        if end <= self.chars.len() && self.chars[self.pos..end].iter().copied().eq(kw.chars()) {
            self.pos = end;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{kw}`")))
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    /// `x<digits>`; returns the index and the position where it started.
    fn var_name(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() != Some('x') {
            return Err(self.error("expected a variable `x<index>`"));
        }
        self.pos += 1;
        let d = self
            .digits()
            .ok_or_else(|| self.error("expected a variable index after `x`"))?;
        let idx = d
            .parse::<usize>()
            .map_err(|_| self.error("variable index too large"))?;
        Ok((idx, start))
    }

    fn var_declaration(&mut self) -> Result<usize> {
        let (first, _) = self.var_name()?;
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'.') && self.chars.get(self.pos + 1) == Some(&'.') {
            self.pos += 2;
            let (last, _) = self.var_name()?;
            if first != 0 || last < first {
                return Err(self.error("variable range must be x0..xN"));
            }
            return Ok(last + 1);
        }
        let mut seen = vec![first];
        loop {
            self.skip_ws();
            if self.peek() != Some(',') {
                break;
            }
            self.pos += 1;
            seen.push(self.var_name()?.0);
        }
        seen.sort_unstable();
        let n = seen.len();
        if seen.iter().copied().ne(0..n) {
            return Err(self.error("declared variables must be exactly x0..xN"));
        }
        Ok(n)
    }

    fn expr(&mut self, nvars: usize) -> Result<Polynomial> {
        self.skip_ws();
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term(nvars)?.scale(&-Rational::one())
            }
            Some('+') => {
                self.pos += 1;
                self.term(nvars)?
            }
            _ => self.term(nvars)?,
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term(nvars)?;
                    acc = acc.try_add(&t)?;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term(nvars)?;
                    acc = acc.try_sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, nvars: usize) -> Result<Polynomial> {
        let mut acc = self.power(nvars)?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                let f = self.power(nvars)?;
                acc = acc.try_mul(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self, nvars: usize) -> Result<Polynomial> {
        let base = self.atom(nvars)?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let d = self
                .digits()
                .ok_or_else(|| self.error("expected an exponent"))?;
            let k = d
                .parse::<u32>()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self, nvars: usize) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr(nvars)?;
                self.expect_char(')')?;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(self.power(nvars)?.scale(&-Rational::one()))
            }
            Some('x') => {
                let (idx, start) = self.var_name()?;
                if idx >= nvars {
                    let (line, column) = self.position_of(start);
                    return Err(Error::UndeclaredVariable {
                        name: format!("x{idx}"),
                        line,
                        column,
                    });
                }
                Ok(Polynomial::variable(nvars, idx))
            }
            Some(c) if c.is_ascii_digit() => {
                let p: BigInt = self.digits().unwrap().parse().expect("digits");
                let mut q = BigInt::one();
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self
                        .digits()
                        .ok_or_else(|| self.error("expected a denominator"))?;
                    q = d.parse().expect("digits");
                    if q.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                } else {
                    self.pos = save;
                }
                Ok(Polynomial::constant(nvars, Rational::new(p, q)))
            }
            Some(c) => Err(self.error(&format!("unexpected character `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Builds a monomial ideal from raw exponent vectors.
pub fn monomial_ideal_from_exponents(nvars: usize, exps: &[Vec<u32>]) -> Result<Ideal> {
    let gens = exps
        .iter()
        .map(|e| {
            if e.len() != nvars {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            Ok(Polynomial::monomial(ExponentVector::new(e.clone())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(nvars, gens)
}
