use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::SymPoly;
use crate::{Error, Result};

pub(super) fn parse_poly(src: &str) -> Result<SymPoly> {
    let trimmed = src.trim();
    if trimmed.starts_with('[') {
        let offset = src.len() - src.trim_start().len();
        return parse_list(trimmed, offset);
    }
    Parser { src, pos: 0, var: None }.expr()
}

fn err(pos: usize, msg: impl Into<alloc::string::String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn parse_list(s: &str, offset: usize) -> Result<SymPoly> {
    if !s.ends_with(']') {
        return Err(err(offset + s.len(), "missing closing ']'"));
    }
    let inner = &s[1..s.len() - 1];
    if inner.trim().is_empty() {
        return Ok(SymPoly::zero());
    }
    let mut coeffs = Vec::new();
    let mut pos = offset + 1;
    for item in inner.split(',') {
        let t = item.trim();
        let v: BigInt = t.parse().map_err(|_| {
            err(pos + (item.len() - item.trim_start().len()), format!("expected an integer, found {t:?}"))
        })?;
        coeffs.push(v);
        pos += item.len() + 1;
    }
    Ok(SymPoly::new(coeffs))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    var: Option<char>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].parse().unwrap())
    }

    fn expr(mut self) -> Result<SymPoly> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                None if !first => break,
                None => return Err(err(self.pos, "empty polynomial")),
                Some(c) if first => {
                    let _ = c;
                    1
                }
                Some(c) => return Err(err(self.pos, format!("expected '+' or '-', found {c:?}"))),
            };
            first = false;
            self.skip_ws();
            let (coef, power) = self.term()?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += coef * sign;
        }
        Ok(SymPoly::new(coeffs))
    }

    fn term(&mut self) -> Result<(BigInt, usize)> {
        let start = self.pos;
        let coef = self.number();
        self.skip_ws();
        if self.peek() == Some('*') {
            if coef.is_none() {
                return Err(err(self.pos, "'*' without a coefficient"));
            }
            self.pos += 1;
            self.skip_ws();
        }
        match self.peek() {
            Some(v @ ('x' | 'z')) => {
                if let Some(prev) = self.var {
                    if prev != v {
                        return Err(err(self.pos, "cannot mix variables x and z"));
                    }
                }
                self.var = Some(v);
                let var_pos = self.pos;
                self.pos += 1;
                self.skip_ws();
                let mut exp = 1u32;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.number().ok_or_else(|| err(self.pos, "expected exponent after '^'"))?;
                    exp = e.to_string().parse().map_err(|_| err(var_pos, "exponent too large"))?;
                }
                let power = if v == 'z' {
                    if exp % 2 == 1 {
                        return Err(Error::OddZPower(exp));
                    }
                    exp / 2
                } else {
                    exp
                };
                Ok((coef.unwrap_or_else(|| BigInt::from(1)), power as usize))
            }
            _ => match coef {
                Some(c) => Ok((c, 0)),
                None => Err(err(
                    start,
                    match self.peek() {
                        Some(c) => format!("unexpected character {c:?}"),
                        None => "unexpected end of input".to_string(),
                    },
                )),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> SymPoly {
        SymPoly::from_i64s(v)
    }

    #[test]
    fn text_forms() {
        assert_eq!(parse_poly("1 + 5*x + 2*x^2").unwrap(), p(&[1, 5, 2]));
        assert_eq!(parse_poly("[1,5,2]").unwrap(), p(&[1, 5, 2]));
        assert_eq!(parse_poly(" [ 0, 22, 65, 46, 9 ] ").unwrap(), p(&[0, 22, 65, 46, 9]));
        assert_eq!(parse_poly("1 + 5 z^2 + 2 z^4").unwrap(), p(&[1, 5, 2]));
        assert_eq!(parse_poly("2z^2+z^4").unwrap(), p(&[0, 2, 1]));
        assert_eq!(parse_poly("1 - z^2").unwrap(), p(&[1, -1]));
        assert_eq!(parse_poly("-x + x").unwrap(), SymPoly::zero());
        assert_eq!(parse_poly("0").unwrap(), SymPoly::zero());
        assert_eq!(parse_poly("[]").unwrap(), SymPoly::zero());
        assert_eq!(parse_poly("x^2 + 3x + 1").unwrap(), p(&[1, 3, 1]));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_poly("1 + z^3"), Err(Error::OddZPower(3)));
        assert_eq!(parse_poly("z"), Err(Error::OddZPower(1)));
        assert!(matches!(parse_poly("1 + x + z^2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1 + y"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("[1, a]"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("[1, 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1 2"), Err(Error::Parse { .. })));
    }
}
