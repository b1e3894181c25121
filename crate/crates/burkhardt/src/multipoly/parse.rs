//! Text format for polynomials: terms joined by `+`, each term
//! `coef*v1^e1*...*vk^ek`. Whitespace is insignificant; parser and printer
//! round-trip bit-exactly. Coefficients with internal signs (for example
//! cyclotomic `1+2*z`) are parenthesized.

use std::str::FromStr;

use num_traits::One;

use super::{Monomial, Polynomial, VarSet};
use crate::error::{Error, Result};
use crate::exactnum::Ring;

pub(super) fn render<R: Ring>(p: &Polynomial<R>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms_desc() {
        let mut factors = Vec::new();
        let coef = c.to_string();
        let coef = if coef[1..].contains('+') || coef[1..].contains('-') {
            format!("({coef})")
        } else {
            coef
        };
        if m.is_unit() {
            parts.push(coef);
            continue;
        }
        if !c.is_one() {
            factors.push(coef);
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(p.vars().name(i).to_string()),
                _ => factors.push(format!("{}^{}", p.vars().name(i), e)),
            }
        }
        parts.push(factors.join("*"));
    }
    parts.join(" + ")
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Ident(String),
    Literal(String),
    Group(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let at = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, at));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                let start = self.pos + 1;
                let mut depth = 1usize;
                let mut i = start;
                while i < self.src.len() {
                    match self.src[i] {
                        b'(' => depth += 1,
                        b')' => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    i += 1;
                }
                if depth != 0 {
                    return Err(Error::Parse("unbalanced parenthesis".into(), at));
                }
                let inner = std::str::from_utf8(&self.src[start..i]).unwrap().to_string();
                self.pos = i + 1;
                Tok::Group(inner)
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'/')
                {
                    self.pos += 1;
                }
                Tok::Literal(
                    std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .to_string(),
                )
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .to_string(),
                )
            }
            other => {
                return Err(Error::Parse(
                    format!("unexpected character `{}`", other as char),
                    at,
                ))
            }
        };
        Ok((tok, at))
    }

    fn peek(&mut self) -> Result<(Tok, usize)> {
        let save = self.pos;
        let t = self.next()?;
        self.pos = save;
        Ok(t)
    }
}

/// Parse a polynomial in the given ambient ring. The coefficient ring must
/// supply a FromStr. Special coefficient names (`z` for the cyclotomic
/// generator) are treated as variables if present in the ambient set, else
/// routed to the coefficient parser.
pub fn parse_polynomial<R>(vars: &VarSet, src: &str) -> Result<Polynomial<R>>
where
    R: Ring + FromStr<Err = Error>,
{
    let mut lx = Lexer::new(src);
    if lx.peek()?.0 == Tok::End {
        return Err(Error::Parse("empty polynomial".into(), 0));
    }
    let mut acc = Polynomial::zero(vars);
    loop {
        match lx.peek()?.0 {
            Tok::End => break,
            Tok::Plus => {
                lx.next()?;
            }
            _ => {}
        }
        if lx.peek()?.0 == Tok::End {
            break;
        }
        let term = parse_term(vars, &mut lx)?;
        acc = acc + term;
    }
    Ok(acc)
}

fn parse_term<R>(vars: &VarSet, lx: &mut Lexer) -> Result<Polynomial<R>>
where
    R: Ring + FromStr<Err = Error>,
{
    let mut negate = false;
    loop {
        let (tok, _) = lx.peek()?;
        match tok {
            Tok::Minus => {
                lx.next()?;
                negate = !negate;
            }
            Tok::Plus => {
                lx.next()?;
            }
            _ => break,
        }
    }
    let mut coef = if negate { -R::one() } else { R::one() };
    let mut exps = vec![0u16; vars.len()];
    let mut saw_factor = false;
    loop {
        let (tok, at) = lx.peek()?;
        match tok {
            Tok::Literal(s) => {
                lx.next()?;
                let c: R = s.parse()?;
                coef = coef * c;
                saw_factor = true;
            }
            Tok::Group(s) => {
                lx.next()?;
                let c: R = s.parse()?;
                coef = coef * c;
                saw_factor = true;
            }
            Tok::Ident(name) => {
                lx.next()?;
                let idx = vars.index_of(&name);
                let mut exp = 1u32;
                let (peeked, _) = lx.peek()?;
                if peeked == Tok::Caret {
                    lx.next()?;
                    let (etok, eat) = lx.next()?;
                    match etok {
                        Tok::Literal(e) => {
                            exp = e
                                .parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent `{e}`"), eat))?;
                        }
                        _ => return Err(Error::Parse("expected exponent".into(), eat)),
                    }
                }
                match idx {
                    Some(i) => {
                        exps[i] = exps[i]
                            .checked_add(exp as u16)
                            .ok_or_else(|| Error::Parse("exponent overflow".into(), at))?;
                    }
                    None => {
                        // a coefficient symbol such as `z`
                        if exp != 1 {
                            return Err(Error::UnknownVariable(format!("{name}^{exp}")));
                        }
                        let c: R = name.parse().map_err(|_| Error::UnknownVariable(name.clone()))?;
                        coef = coef * c;
                    }
                }
                saw_factor = true;
            }
            Tok::Star => {
                lx.next()?;
            }
            Tok::Plus | Tok::Minus | Tok::End => break,
            Tok::Caret => return Err(Error::Parse("unexpected `^`".into(), at)),
        }
    }
    if !saw_factor {
        let (_, at) = lx.peek()?;
        return Err(Error::Parse("expected term".into(), at));
    }
    Ok(Polynomial::monomial(
        vars,
        Monomial::from_exponents(exps),
        coef,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Cyclo3, Rational};

    fn qvars() -> VarSet {
        VarSet::new(["x", "y"])
    }

    #[test]
    fn roundtrip_rational() {
        let v = qvars();
        let p: Polynomial<Rational> = parse_polynomial(&v, "3*x^2*y + -1/2*y + 7").unwrap();
        let s = p.to_string();
        let q: Polynomial<Rational> = parse_polynomial(&v, &s).unwrap();
        assert_eq!(p, q);
        assert_eq!(s, "3*x^2*y + -1/2*y + 7");
    }

    #[test]
    fn human_minus() {
        let v = qvars();
        let p: Polynomial<Rational> = parse_polynomial(&v, "x^2 - 2*x*y + y^2").unwrap();
        let q: Polynomial<Rational> = parse_polynomial(&v, "x^2 + -2*x*y + y^2").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn cyclotomic_coefficients() {
        let v = qvars();
        let p: Polynomial<Cyclo3> = parse_polynomial(&v, "(1+2*z)*x + z*y + 3").unwrap();
        let s = p.to_string();
        let q: Polynomial<Cyclo3> = parse_polynomial(&v, &s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn error_position() {
        let v = qvars();
        let r: Result<Polynomial<Rational>> = parse_polynomial(&v, "x + $");
        match r {
            Err(Error::Parse(_, pos)) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        let v = qvars();
        let r: Result<Polynomial<Rational>> = parse_polynomial(&v, "x + w");
        assert!(matches!(r, Err(Error::UnknownVariable(_))));
    }
}
