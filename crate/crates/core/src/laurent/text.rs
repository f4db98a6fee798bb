//! Text form: `q^3 + q + q^(-1) + q^(-3)`, `-q*p + q + p`, `2*q^(3/2)*p^(-1/2)`.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{Exps, LaurentError, LaurentPoly, QuarterExp, Result, VarContext, EXP_DENOMINATOR};

fn write_exp(out: &mut String, e: QuarterExp) {
    let q = e.quarters();
    if q == EXP_DENOMINATOR {
        return;
    }
    let g = q.gcd(&EXP_DENOMINATOR);
    let (num, den) = (q / g, EXP_DENOMINATOR / g);
    if den == 1 {
        if num < 0 {
            let _ = write!(out, "^({num})");
        } else {
            let _ = write!(out, "^{num}");
        }
    } else {
        let _ = write!(out, "^({num}/{den})");
    }
}

fn write_monomial_body(out: &mut String, ctx: &VarContext, exps: &Exps) -> bool {
    let mut wrote = false;
    for (name, e) in ctx.names().iter().zip(exps.iter()) {
        if e.quarters() == 0 {
            continue;
        }
        if wrote {
            out.push('*');
        }
        out.push_str(name);
        write_exp(out, *e);
        wrote = true;
    }
    wrote
}

impl LaurentPoly {
    /// Canonical text rendering; terms in canonical order.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, c)) in self.raw_terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mut body = String::new();
            let has_vars = write_monomial_body(&mut body, self.context(), exps);
            if !has_vars {
                let _ = write!(out, "{abs}");
            } else if abs.is_one() {
                out.push_str(&body);
            } else {
                let _ = write!(out, "{abs}*{body}");
            }
        }
        out
    }

    /// Parses the text grammar emitted by [`LaurentPoly::canonical_string`].
    ///
    /// Terms may appear in any order, repeated variables multiply, and
    /// exponents are integers or parenthesized fractions with denominator
    /// 1, 2 or 4.
    pub fn parse(text: &str, ctx: &Arc<VarContext>) -> Result<LaurentPoly> {
        Parser { src: text.as_bytes(), pos: 0, ctx }.parse_poly()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Arc<VarContext>,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(LaurentError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_poly(&mut self) -> Result<LaurentPoly> {
        let mut poly = LaurentPoly::zero(self.ctx);
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                return self.err("expected `+` or `-` between terms");
            };
            self.skip_ws();
            let (exps, coeff) = self.parse_term()?;
            poly.add_term(exps, if negative { -coeff } else { coeff });
            first = false;
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(poly);
            }
        }
    }

    fn parse_term(&mut self) -> Result<(Exps, BigInt)> {
        let mut exps = [QuarterExp::ZERO; 2];
        let mut coeff = BigInt::one();
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coeff = self.parse_unsigned()?;
                self.skip_ws();
                if !self.eat(b'*') {
                    return Ok((exps, coeff));
                }
                self.skip_ws();
                self.parse_varpow(&mut exps)?;
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => self.parse_varpow(&mut exps)?,
            _ => return self.err("expected a coefficient or variable"),
        }
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                self.parse_varpow(&mut exps)?;
            } else {
                self.pos = save;
                break;
            }
        }
        Ok((exps, coeff))
    }

    fn parse_unsigned(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn parse_small_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let v = self.parse_unsigned()?;
        let v: i64 = match i64::try_from(&v) {
            Ok(v) if v <= i64::MAX / 16 => v,
            _ => {
                self.pos = start;
                return self.err("exponent out of range");
            }
        };
        Ok(if neg { -v } else { v })
    }

    fn parse_varpow(&mut self, exps: &mut Exps) -> Result<()> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
        if name.is_empty() {
            return self.err("expected a variable name");
        }
        let idx = self.ctx.index_of(name).ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))?;
        let exp = if self.eat(b'^') {
            if self.eat(b'(') {
                self.skip_ws();
                let num = self.parse_small_int()?;
                self.skip_ws();
                let den = if self.eat(b'/') {
                    self.skip_ws();
                    let den_pos = self.pos;
                    let den = self.parse_small_int()?;
                    if !matches!(den, 1 | 2 | 4) {
                        self.pos = den_pos;
                        return self.err("exponent denominator must be 1, 2 or 4");
                    }
                    self.skip_ws();
                    den
                } else {
                    1
                };
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                QuarterExp(num * (EXP_DENOMINATOR / den))
            } else {
                QuarterExp::from_int(self.parse_small_int()?)
            }
        } else {
            QuarterExp::from_int(1)
        };
        exps[idx] = exps[idx] + exp;
        Ok(())
    }
}
