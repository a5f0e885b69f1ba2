use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Monomial, Polynomial, RingContext, RingValue};
use crate::error::{Error, Result};

pub(super) fn parse(ctx: &RingContext, literal: &str) -> Result<RingValue> {
    let text = literal.trim();
    let fail = |reason: &str| Error::InvalidLiteral {
        literal: literal.to_string(),
        ring: ctx.to_string(),
        reason: reason.to_string(),
    };
    match ctx {
        RingContext::Integer => parse_int(text)
            .map(RingValue::Integer)
            .ok_or_else(|| fail("expected a decimal integer")),
        RingContext::Modular(_) => parse_int(text)
            .map(|v| ctx.from_integer(v))
            .ok_or_else(|| fail("expected a decimal integer")),
        RingContext::Rational => {
            let (p, q) = match text.split_once('/') {
                Some((p, q)) => (p.trim(), q.trim()),
                None => (text, "1"),
            };
            let p = parse_int(p).ok_or_else(|| fail("bad numerator"))?;
            let q = parse_int(q).ok_or_else(|| fail("bad denominator"))?;
            if q.is_zero() {
                return Err(fail("zero denominator"));
            }
            Ok(RingValue::Rational(BigRational::new(p, q)))
        }
        RingContext::Polynomial(vars) => {
            let tokens = tokenize(text).map_err(|r| fail(&r))?;
            let mut parser = PolyParser {
                tokens: &tokens,
                pos: 0,
            };
            let mut acc = Polynomial::zero(vars);
            let mut first = true;
            while parser.pos < tokens.len() || first {
                let negative = match parser.peek() {
                    Some(Token::Plus) => {
                        parser.pos += 1;
                        false
                    }
                    Some(Token::Minus) => {
                        parser.pos += 1;
                        true
                    }
                    _ if first => false,
                    _ => return Err(fail("expected `+` or `-` between terms")),
                };
                first = false;
                let (coeff, exps) = parser.term(vars).map_err(|r| fail(&r))?;
                let coeff = if negative { -coeff } else { coeff };
                acc = acc.add(&Polynomial::term(
                    vars,
                    Monomial::from_exponents(exps),
                    coeff,
                ));
            }
            Ok(RingValue::Polynomial(acc))
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let (digits, body) = match s.strip_prefix('+') {
        Some(rest) => (rest, rest),
        None => (s, s.strip_prefix('-').unwrap_or(s)),
    };
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> std::result::Result<Vec<Token>, String> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' => i += 1,
            b'+' => {
                out.push(Token::Plus);
                i += 1;
            }
            b'-' => {
                out.push(Token::Minus);
                i += 1;
            }
            b'*' => {
                out.push(Token::Star);
                i += 1;
            }
            b'^' => {
                out.push(Token::Caret);
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err("missing `*` between coefficient and indeterminate".into());
                }
                out.push(Token::Int(s[start..i].parse().expect("ascii digits")));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token::Name(s[start..i].to_string()));
            }
            _ => return Err(format!("unexpected character `{}`", c as char)),
        }
    }
    Ok(out)
}

struct PolyParser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    /// `factor ('*' factor)*` where a factor is an integer or `name('^' int)?`.
    fn term(
        &mut self,
        vars: &super::Indeterminates,
    ) -> std::result::Result<(BigInt, Vec<u32>), String> {
        let mut coeff = BigInt::from(1);
        let mut exps = vec![0u32; vars.len()];
        loop {
            match self.next().cloned() {
                Some(Token::Int(v)) => coeff *= v,
                Some(Token::Name(name)) => {
                    let idx = vars
                        .index_of(&name)
                        .ok_or_else(|| format!("unknown indeterminate `{name}`"))?;
                    let e = if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token::Int(e)) => {
                                u32::try_from(e).map_err(|_| "exponent too large".to_string())?
                            }
                            _ => return Err("expected exponent after `^`".into()),
                        }
                    } else {
                        1
                    };
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| "exponent too large".to_string())?;
                }
                Some(t) => return Err(format!("unexpected `{t:?}`")),
                None => return Err("unexpected end of input".into()),
            }
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                return Ok((coeff, exps));
            }
        }
    }
}
