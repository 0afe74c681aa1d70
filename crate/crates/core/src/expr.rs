//! Polynomial expressions in `x` and `y`.
//!
//! ```text
//! expr  = term { ("+" | "-") term }
//! term  = unary { ("*" | "/") unary }
//! unary = ("+" | "-") unary | power
//! power = atom [ "^" integer ]
//! atom  = integer | "x" | "y" | "(" expr ")"
//! ```
//!
//! Division is allowed only by nonzero constants. Whitespace is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{BiPoly, Error, IntPoly, RatPoly, Result};

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedPoly {
    Univariate(IntPoly),
    Bivariate(BiPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Op(char),
    End,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    saw_y: bool,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
            }
            toks.push((pos, Tok::Int(digits.parse().expect("digits"))));
        } else if c == 'x' || c == 'y' {
            toks.push((pos, Tok::Var(c)));
            chars.next();
        } else if "+-*/^()".contains(c) {
            toks.push((pos, Tok::Op(c)));
            chars.next();
        } else if c.is_alphabetic() {
            return err(pos, format!("unknown variable '{c}'"));
        } else {
            return err(pos, format!("unexpected character '{c}'"));
        }
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

fn constant(c: BigRational) -> BiPoly {
    BiPoly::new(vec![RatPoly::constant(c)])
}

fn as_constant(p: &BiPoly) -> Option<BigRational> {
    match p.coeffs() {
        [] => Some(BigRational::zero()),
        [a] if a.degree().unwrap_or(0) == 0 => Some(a.coeff(0)),
        _ => None,
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == &Tok::Op(op) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == &Tok::Op('/') {
                let pos = self.pos();
                self.at += 1;
                let rhs = self.unary()?;
                match as_constant(&rhs) {
                    Some(c) if !c.is_zero() => acc = &acc * &constant(c.recip()),
                    Some(_) => return err(pos, "division by zero"),
                    None => return err(pos, "division only by nonzero constants"),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly> {
        if self.eat('-') {
            Ok(&BiPoly::zero() - &self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(e) => {
                self.at += 1;
                match u32::try_from(&e) {
                    Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
                    _ => err(pos, format!("exponent {e} exceeds {MAX_EXPONENT}")),
                }
            }
            _ => err(pos, "exponent must be a nonnegative integer literal"),
        }
    }

    fn atom(&mut self) -> Result<BiPoly> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.at += 1;
                Ok(constant(BigRational::from_integer(n)))
            }
            Tok::Var('x') => {
                self.at += 1;
                Ok(BiPoly::new(vec![RatPoly::from_i64s(&[0, 1])]))
            }
            Tok::Var(_) => {
                self.at += 1;
                self.saw_y = true;
                Ok(BiPoly::new(vec![RatPoly::zero(), RatPoly::one()]))
            }
            Tok::Op('(') => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return err(self.pos(), "expected ')'");
                }
                Ok(inner)
            }
            Tok::End => err(pos, "unexpected end of input"),
            Tok::Op(c) => err(pos, format!("unexpected '{c}'")),
        }
    }
}

/// Parses to a bivariate polynomial over `Q`; also reports whether `y` occurs.
fn parse_raw(text: &str) -> Result<(BiPoly, bool)> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        saw_y: false,
    };
    let value = p.expr()?;
    if p.peek() != &Tok::End {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok((value, p.saw_y))
}

fn integral(p: &RatPoly, pos: usize) -> Result<IntPoly> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                err(pos, format!("coefficient {c} is not an integer"))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(IntPoly::new)
}

/// Univariate when only `x` occurs (integer coefficients required), bivariate
/// when `y` occurs.
pub fn parse_poly(text: &str) -> Result<ParsedPoly> {
    let (value, saw_y) = parse_raw(text)?;
    if saw_y {
        return Ok(ParsedPoly::Bivariate(value));
    }
    Ok(ParsedPoly::Univariate(integral(&value.coeff(0), 0)?))
}

pub fn parse_int_poly(text: &str) -> Result<IntPoly> {
    integral(&parse_rat_poly(text)?, 0)
}

pub fn parse_rat_poly(text: &str) -> Result<RatPoly> {
    let (value, saw_y) = parse_raw(text)?;
    if saw_y {
        let pos = text.find('y').unwrap_or(0);
        return err(pos, "expected a polynomial in x only");
    }
    Ok(value.coeff(0))
}

pub fn parse_bipoly(text: &str) -> Result<BiPoly> {
    Ok(parse_raw(text)?.0)
}

/// A constant expression such as `2` or `3/2`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let (value, _) = parse_raw(text)?;
    as_constant(&value).map_or_else(|| err(0, "expected a constant"), Ok)
}
