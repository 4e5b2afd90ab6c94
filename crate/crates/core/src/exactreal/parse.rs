//! Small expression language for exact scalars.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'|'/'] factor)*      juxtaposition multiplies
//! factor := integer | 'sqrt' '(' integer ')' | 'cos' '(' [integer] 'pi' ['/' integer] ')'
//!         | '(' expr ')'
//! ```
//!
//! This is the format [`TrigScalar`]'s `Display` produces, so rendering
//! round-trips.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{ExactError, TrigScalar};
use crate::scalar::Field;

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

pub(crate) fn parse_scalar(text: &str) -> Result<TrigScalar, ExactError> {
    let mut p = Parser {
        src: text,
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if p.chars.is_empty() {
        return Err(p.error("empty input"));
    }
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error(&format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(v)
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> ExactError {
        ExactError::Parse {
            input: self.src.to_string(),
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExactError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.pos..].starts_with(&w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("bad integer"))
    }

    fn small(&mut self) -> Result<u32, ExactError> {
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| self.error("integer too large"))
    }

    fn expr(&mut self) -> Result<TrigScalar, ExactError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '(' || c == 's' || c == 'c')
    }

    fn term(&mut self) -> Result<TrigScalar, ExactError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc * self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                let inv = d.inverse().ok_or_else(|| self.error("division by zero"))?;
                acc = acc * inv;
            } else if self.starts_factor() {
                acc = acc * self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<TrigScalar, ExactError> {
        if self.eat('(') {
            let v = self.expr()?;
            self.expect(')')?;
            return Ok(v);
        }
        if self.keyword("sqrt") {
            self.expect('(')?;
            let d = self.small()?;
            self.expect(')')?;
            return TrigScalar::sqrt_small(d)
                .ok_or_else(|| self.error(&format!("sqrt({d}) is not supported")));
        }
        if self.keyword("cos") {
            self.expect('(')?;
            let k = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.small()?
            } else {
                1
            };
            if !self.keyword("pi") {
                return Err(self.error("expected 'pi'"));
            }
            let n = if self.eat('/') { self.small()? } else { 1 };
            self.expect(')')?;
            return TrigScalar::cos_pi_frac(k, n);
        }
        let n = self.integer()?;
        Ok(TrigScalar::rational(
            &BigRational::new(n, BigInt::one()),
            1,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CoxeterScalar;

    #[test]
    fn arithmetic() {
        let x = parse_scalar("-1/2 - sqrt(2)/2").unwrap();
        let r2 = TrigScalar::sqrt_small(2).unwrap();
        let half = TrigScalar::rational(&BigRational::new(1.into(), 2.into()), 1);
        assert_eq!(x, -(half.clone()) - &r2 * &half);
        assert_eq!(parse_scalar("2cos(pi/4)").unwrap(), r2);
        assert_eq!(parse_scalar("cos(2pi/3)").unwrap(), -half);
        assert_eq!(parse_scalar("(1+sqrt(5))/2").unwrap(), parse_scalar("2cos(pi/5)").unwrap());
    }

    #[test]
    fn render_round_trip() {
        for text in ["3/2*cos(pi/7)-cos(2pi/7)", "-cos(pi/5)-2*cos(pi/5)*cos(pi/5)", "7/3"] {
            let x = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&x.render()).unwrap(), x, "{text}");
        }
    }

    #[test]
    fn errors() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("sqrt(7)").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("cos(pi").is_err());
        assert!(parse_scalar("2 x").is_err());
    }
}
