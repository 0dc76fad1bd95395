//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!   expr   := '-'? term (('+'|'-') term)*
//!   term   := factor ('*' factor)*
//!   factor := base ('^' nat)?
//!   base   := rational | variable | '(' expr ')'
//! Whitespace is insignificant; `#` starts a comment running to end of line.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Poly, VarSet};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Int(BigInt),
    Slash,
    Ident(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        loop {
            while let Some(c) = self.peek() {
                if c == b'#' {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                } else if c.is_ascii_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let (line, col) = (self.line, self.col);
            let Some(c) = self.peek() else { break };
            let tok = match c {
                b'+' => {
                    self.bump();
                    Tok::Plus
                }
                b'-' => {
                    self.bump();
                    Tok::Minus
                }
                b'*' => {
                    self.bump();
                    Tok::Star
                }
                b'^' => {
                    self.bump();
                    Tok::Caret
                }
                b'/' => {
                    self.bump();
                    Tok::Slash
                }
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b'0'..=b'9' => {
                    let mut digits = String::new();
                    while let Some(d) = self.peek() {
                        if d.is_ascii_digit() {
                            digits.push(d as char);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Int(digits.parse().expect("digits"))
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut name = String::new();
                    while let Some(d) = self.peek() {
                        if d.is_ascii_alphanumeric() || d == b'_' {
                            name.push(d as char);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(name)
                }
                other => {
                    return Err(Error::Syntax {
                        line,
                        col,
                        msg: format!("unexpected character `{}`", other as char),
                    })
                }
            };
            out.push((tok, line, col));
        }
        Ok(out)
    }
}

struct Parser<'a, F: Field> {
    toks: Vec<Spanned>,
    pos: usize,
    field: F,
    vars: &'a VarSet,
    end: (usize, usize),
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |(_, l, c)| (*l, *c))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Syntax { line, col, msg: msg.into() }
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let negate = matches!(self.peek(), Some((Tok::Minus, _, _)));
        if negate {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some((tok, _, _)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((Tok::Star, _, _))) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<F>> {
        let base = self.base()?;
        if matches!(self.peek(), Some((Tok::Caret, _, _))) {
            self.next();
            match self.next() {
                Some((Tok::Int(n), line, col)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Syntax {
                        line,
                        col,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a natural number exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Poly<F>> {
        match self.next() {
            Some((Tok::Int(n), _, _)) => {
                // optional denominator
                let num = n;
                if matches!(self.peek(), Some((Tok::Slash, _, _))) {
                    self.next();
                    match self.next() {
                        Some((Tok::Int(d), line, col)) => {
                            let c = self
                                .field
                                .from_ratio(&num, &d)
                                .ok_or(Error::Syntax {
                                    line,
                                    col,
                                    msg: "zero or invalid denominator".into(),
                                })?;
                            Ok(Poly::constant(self.field.clone(), self.vars.len(), c))
                        }
                        _ => Err(self.err("expected denominator after `/`")),
                    }
                } else {
                    let one = BigInt::from(1);
                    let c = self.field.from_ratio(&num, &one).expect("unit denominator");
                    Ok(Poly::constant(self.field.clone(), self.vars.len(), c))
                }
            }
            Some((Tok::Ident(name), line, col)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Poly::variable(self.field.clone(), self.vars.len(), i)),
                None => Err(Error::UnknownVariable { name, line, col }),
            },
            Some((Tok::LParen, _, _)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _, _)) => Ok(inner),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some((tok, line, col)) => Err(Error::Syntax {
                line,
                col,
                msg: format!("unexpected token {tok:?}"),
            }),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse `text` into the canonical expanded polynomial over `field`.
pub fn parse_polynomial<F: Field>(field: F, vars: &VarSet, text: &str) -> Result<Poly<F>> {
    let lexer = Lexer::new(text);
    let end = {
        let lines: Vec<&str> = text.lines().collect();
        match lines.last() {
            Some(l) => (lines.len().max(1), l.len() + 1),
            None => (1, 1),
        }
    };
    let toks = lexer.tokens()?;
    let mut p = Parser { toks, pos: 0, field, vars, end };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::QPoly;

    fn parse(s: &str) -> QPoly {
        parse_polynomial(Rationals, &VarSet::xyz(), s).unwrap()
    }

    #[test]
    fn commutator_vanishes() {
        assert!(parse("x*y - y*x").is_zero());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(parse("(x-y)*(x+y)"), parse("x^2 - y^2"));
    }

    #[test]
    fn braid_product_expansion() {
        // independently verified by evaluating both sides on an integer grid
        let p = parse("x*y*z*(x-y)*(x-z)*(y-z)");
        assert_eq!(p.num_terms(), 6);
        let expected = parse("x^3*y^2*z - x^3*y*z^2 - x^2*y^3*z + x^2*y*z^3 + x*y^3*z^2 - x*y^2*z^3");
        assert_eq!(p, expected);
        assert_eq!(p.grading(), (true, crate::poly::Degree::Of(6)));
    }

    #[test]
    fn rationals_and_comments() {
        let p = parse("1/2*x + 3/4*y # a comment\n - 1/4*y");
        assert_eq!(p, parse("1/2*x + 1/2*y"));
    }

    #[test]
    fn error_positions() {
        let e = parse_polynomial(Rationals, &VarSet::xyz(), "x + $").unwrap_err();
        match e {
            Error::Syntax { line: 1, col: 5, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
        let e = parse_polynomial(Rationals, &VarSet::xyz(), "x + w").unwrap_err();
        match e {
            Error::UnknownVariable { ref name, line: 1, col: 5 } if name == "w" => {}
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_polynomial(Rationals, &VarSet::xyz(), "x +").is_err());
        assert!(parse_polynomial(Rationals, &VarSet::xyz(), "(x").is_err());
        assert!(parse_polynomial(Rationals, &VarSet::xyz(), "x y").is_err());
    }

    #[test]
    fn unary_minus_and_powers() {
        assert_eq!(parse("-x"), parse("0 - x"));
        assert_eq!(parse("-x^2 + x^2"), parse("0"));
        assert_eq!(parse("2^3"), parse("8"));
    }
}
