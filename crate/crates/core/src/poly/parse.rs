//! Text format for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | name | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. Names are resolved against the
//! ring's variable list (`x1..xN`, `y1..yN`, `X`, `T`, ...).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;

use super::mpoly::MPoly;
use super::upoly::UPoly;

/// Parse in the ring `K[x1, ..., x_nvars]`.
pub fn parse_poly<K: Field>(text: &str, nvars: usize, ctx: &K::Ctx) -> Result<MPoly<K>> {
    parse_poly_named(text, &super::var_names("x", nvars), ctx)
}

/// Parse in the ring whose variables carry the given names.
pub fn parse_poly_named<K: Field>(text: &str, names: &[String], ctx: &K::Ctx) -> Result<MPoly<K>> {
    if names.len() > super::MAX_VARS {
        return Err(Error::TooManyVariables(names.len()));
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, names, ctx };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Parse a univariate polynomial in `X`.
pub fn parse_upoly<K: Field>(text: &str, ctx: &K::Ctx) -> Result<UPoly<K>> {
    let p = parse_poly_named::<K>(text, &["X".to_string()], ctx)?;
    Ok(UPoly::from_mpoly(&p))
}

/// Split a comma-separated list of polynomials.
pub fn parse_poly_list<K: Field>(text: &str, names: &[String], ctx: &K::Ctx) -> Result<Vec<MPoly<K>>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_poly_named(s, names, ctx))
        .collect()
}

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    ctx: &'a K::Ctx,
}

impl<K: Field> Parser<'_, K> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<MPoly<K>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<K>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly<K>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly<K>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a non-negative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Parse { pos: start, msg: "exponent too large".into() })?;
            if e > u16::MAX as u32 {
                return Err(Error::Parse { pos: start, msg: "exponent too large".into() });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<MPoly<K>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num: BigInt = self.digits().parse().expect("digits");
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected denominator"));
                    }
                    d.parse::<BigInt>().expect("digits")
                } else {
                    BigInt::from(1)
                };
                if den == BigInt::from(0) {
                    return Err(Error::Parse { pos: start, msg: "zero denominator".into() });
                }
                let c = K::from_ratio(self.ctx, &num, &den)
                    .ok_or_else(|| Error::Unrepresentable(format!("{num}/{den}")))?;
                Ok(MPoly::constant(self.nvars(), self.ctx, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(MPoly::var(self.nvars(), self.ctx, i)),
                    None => Err(Error::UnknownVariable { name, pos: start }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, Rational};
    use crate::poly::Monomial;

    fn q(text: &str, n: usize) -> MPoly<Rational> {
        parse_poly(text, n, &()).unwrap()
    }

    #[test]
    fn reads_terms() {
        let p = q("x1*x2 - 2*x2^2", 2);
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&Monomial::from_exponents(&[1, 1])), Rational::from_integer(1.into()));
        assert_eq!(p.coeff(&Monomial::from_exponents(&[0, 2])), Rational::from_integer((-2).into()));
    }

    #[test]
    fn zero_is_empty() {
        assert!(q("0", 3).is_zero());
        assert!(q("x1 - x1", 3).is_zero());
    }

    #[test]
    fn merges_like_terms() {
        let p = q("x1^2*x2 + x1^2*x2", 2);
        assert_eq!(p.terms(), &[(Monomial::from_exponents(&[2, 1]), Rational::from_integer(2.into()))]);
    }

    #[test]
    fn fractions_parentheses_whitespace() {
        let p = q(" ( x1 + 1/2 ) ^ 2 ", 1);
        assert_eq!(p.to_string(), "x1^2 + x1 + 1/4");
        assert_eq!(q("-x1^2", 1).to_string(), "-x1^2");
        assert_eq!(q("3/2*x1 - 4", 1).to_string(), "3/2*x1 - 4");
    }

    #[test]
    fn errors_report_position() {
        match parse_poly::<Rational>("x1 + * x2", 2, &()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly::<Rational>("x1 + x3", 2, &()) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "x3");
                assert_eq!(pos, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly::<Rational>("x1 x2", 2, &()), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly::<Rational>("(x1", 2, &()), Err(Error::Parse { .. })));
    }

    #[test]
    fn unrepresentable_in_prime_field() {
        let f5 = PrimeField::new(5).unwrap();
        assert!(matches!(parse_poly::<Fp>("1/5*x1", 1, &f5), Err(Error::Unrepresentable(_))));
        let p = parse_poly::<Fp>("1/2*x1", 1, &f5).unwrap();
        assert_eq!(p.to_string(), "-2*x1");
    }

    #[test]
    fn named_variables() {
        let names: Vec<String> = ["x1", "x2", "T"].iter().map(|s| s.to_string()).collect();
        let p = parse_poly_named::<Rational>("(1-2*T)*x1", &names, &()).unwrap();
        assert_eq!(p.to_string_with(&names), "-2*x1*T + x1");
        let u = parse_upoly::<Rational>("X^3 + 2*X", &()).unwrap();
        assert_eq!(u.degree(), Some(3));
    }
}
