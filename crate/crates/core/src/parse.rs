//! Family description files:
//!
//! ```text
//! param: d
//! u = (t^2 - 1)/(t^2 + 1)
//! v = d*t
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::family::{build_family_named, ParametrizedFamily};
use crate::poly::{Polynomial, RationalFunction, Var};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

struct Lexer;

impl Lexer {
    /// Tokens with their 1-based columns, offset by `col0`.
    fn run(src: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
        let chars: Vec<char> = src.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = col0 + i;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), col));
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            } else if "+-*/^()".contains(c) {
                out.push((Tok::Op(c), col));
                i += 1;
            } else {
                return Err(err(line, col, format!("unexpected character '{c}'")));
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    param: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(err(self.line, col, "zero denominator"));
                }
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        match self.toks.get(self.pos) {
            Some((Tok::Int(k), _)) => {
                let e: u32 = k.try_into().map_err(|_| err(self.line, col, "exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(err(self.line, col, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let col = self.col();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(err(self.line, col, "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(k) => Ok(RationalFunction::constant(BigRational::from_integer(k))),
            Tok::Ident(name) if name == "t" => Ok(RationalFunction::var(Var::T)),
            Tok::Ident(name) if name == self.param => Ok(RationalFunction::var(Var::Z)),
            Tok::Ident(name) => Err(err(self.line, col, format!("unknown variable '{name}'"))),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.line, self.col(), "expected ')'"));
                }
                Ok(e)
            }
            Tok::Op(c) => Err(err(self.line, col, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses one expression in `t` and `param`. `line` and `col0` locate it in the file.
pub fn parse_expr(src: &str, param: &str, line: usize, col0: usize) -> Result<RationalFunction> {
    let toks = Lexer::run(src, line, col0)?;
    let end_col = col0 + src.chars().count();
    let mut p = Parser { toks, pos: 0, line, end_col, param };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(line, p.col(), "unexpected trailing input"));
    }
    Ok(e)
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_') && cs.all(|c| c.is_alphanumeric() || c == '_')
}

/// Parses the text of a family file and validates the family.
pub fn parse_family_str(text: &str) -> Result<ParametrizedFamily> {
    let mut param: Option<(String, usize)> = None;
    let mut u: Option<(String, usize, usize)> = None;
    let mut v: Option<(String, usize, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("param:") {
            let name = rest.trim();
            let col = indent + 7 + (rest.len() - rest.trim_start().len());
            if !is_ident(name) || name == "t" {
                return Err(err(line, col, format!("invalid parameter name '{name}'")));
            }
            if param.is_some() {
                return Err(err(line, indent + 1, "duplicate param line"));
            }
            param = Some((name.to_string(), line));
            continue;
        }
        let Some(eq) = trimmed.find('=') else {
            return Err(err(line, indent + 1, "expected 'param:', 'u =' or 'v ='"));
        };
        let lhs = trimmed[..eq].trim();
        let slot = match lhs {
            "u" => &mut u,
            "v" => &mut v,
            _ => return Err(err(line, indent + 1, format!("unknown definition '{lhs}'"))),
        };
        if slot.is_some() {
            return Err(err(line, indent + 1, format!("duplicate definition of {lhs}")));
        }
        *slot = Some((trimmed[eq + 1..].to_string(), line, indent + eq + 2));
    }
    let (param, _) = param.ok_or_else(|| err(1, 1, "missing 'param:' line"))?;
    let (us, ul, uc) = u.ok_or_else(|| err(1, 1, "missing 'u =' line"))?;
    let (vs, vl, vc) = v.ok_or_else(|| err(1, 1, "missing 'v =' line"))?;
    let ue = parse_expr(&us, &param, ul, uc)?;
    let ve = parse_expr(&vs, &param, vl, vc)?;
    build_family_named(&param, ue, ve)
}

pub fn parse_family(path: &std::path::Path) -> Result<ParametrizedFamily> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidFamily(format!("cannot read {}: {e}", path.display())))?;
    parse_family_str(&text)
}

/// A polynomial in `t` and the parameter, for tests and bindings.
pub fn parse_polynomial(src: &str, param: &str) -> Result<Polynomial> {
    let e = parse_expr(src, param, 1, 1)?;
    if !e.is_polynomial() {
        return Err(err(1, 1, "expected a polynomial"));
    }
    Ok(e.num().clone())
}
