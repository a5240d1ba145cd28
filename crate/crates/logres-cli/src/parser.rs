//! Recursive-descent parser for polynomial expressions over the integers.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base
//! base   := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! `^` binds tighter than `*`, which binds tighter than `+`/`-`, and unary
//! minus applies to a whole factor, so `-z0^2` reads as `-(z0^2)`. There is
//! no implicit multiplication: `2*z0` parses, `2z0` is an error. The
//! variable table is supplied by the caller — `z0 z1 z2` for homogeneous
//! plane fields, or any other alphabet such as `x y`.
//!
//! The printer in [`MultiPoly::display_with`] emits exactly this grammar, so
//! `parse(print(p)) == p` for every integer-coefficient polynomial.

use logres::poly::MultiPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Variable names for homogeneous coordinates on the projective plane.
pub const PLANE_VARS: [&str; 3] = ["z0", "z1", "z2"];

/// Exponents above this are rejected before any arithmetic happens; a larger
/// power in a three-variable field is an input mistake, not a computation.
pub const MAX_EXPONENT: u32 = 10_000;

/// A syntax error, carrying the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer `{v}`"),
            Tok::Var(_) => "variable".to_string(),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Caret => "`^`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
        }
    }
}

fn lex(src: &str, variables: &[&str]) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let value = BigInt::parse_bytes(text.as_bytes(), 10)
                    .expect("digit run is a valid decimal integer");
                toks.push((start, Tok::Int(value)));
            }
            _ if b.is_ascii_alphabetic() || b == b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = &src[start..i];
                match variables.iter().position(|v| *v == name) {
                    Some(idx) => toks.push((start, Tok::Var(idx))),
                    None => {
                        return err(
                            start,
                            format!(
                                "unknown variable `{name}` (expected one of {})",
                                variables.join(", ")
                            ),
                        )
                    }
                }
            }
            _ => {
                let ch = src[i..].chars().next().expect("in-bounds char boundary");
                return err(i, format!("unexpected character `{ch}`"));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<&'a (usize, Tok)> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                Some(t @ (Tok::Int(_) | Tok::Var(_) | Tok::LParen)) => {
                    return err(
                        self.here(),
                        format!(
                            "missing operator before {} (implicit multiplication \
                             is not supported)",
                            t.describe()
                        ),
                    );
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let inner = self.factor()?;
            return Ok(-&inner);
        }
        self.base()
    }

    fn base(&mut self) -> Result<MultiPoly, ParseError> {
        let atom = self.atom()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(atom);
        }
        self.bump();
        let at = self.here();
        match self.bump() {
            Some((_, Tok::Int(e))) => {
                let e: u32 = e
                    .try_into()
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or_else(|| ParseError {
                        position: at,
                        message: format!("exponent exceeds the limit {MAX_EXPONENT}"),
                    })?;
                if matches!(self.peek(), Some(Tok::Caret)) {
                    return err(
                        self.here(),
                        "repeated `^` is not allowed; parenthesize the base",
                    );
                }
                Ok(atom.pow(e))
            }
            Some((p, t)) => err(
                *p,
                format!(
                    "exponent must be a nonnegative integer literal, found {}",
                    t.describe()
                ),
            ),
            None => err(at, "expected an exponent after `^`"),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let at = self.here();
        match self.bump() {
            Some((_, Tok::Int(v))) => Ok(MultiPoly::constant(
                self.nvars,
                BigRational::from(v.clone()),
            )),
            Some((_, Tok::Var(i))) => Ok(MultiPoly::variable(self.nvars, *i)),
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    Some((p, t)) => {
                        err(*p, format!("expected `)`, found {}", t.describe()))
                    }
                    None => err(self.end, "unclosed parenthesis"),
                }
            }
            Some((p, t)) => err(
                *p,
                format!("expected an integer, variable, or `(`, found {}", t.describe()),
            ),
            None => err(at, "expected an integer, variable, or `(`"),
        }
    }
}

/// Parses `src` into a polynomial over the variable alphabet `variables`.
/// The result has `variables.len()` variables, indexed by table position.
pub fn parse_polynomial(src: &str, variables: &[&str]) -> Result<MultiPoly, ParseError> {
    let toks = lex(src, variables)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        end: src.len(),
        nvars: variables.len(),
    };
    if parser.peek().is_none() {
        return err(0, "empty input");
    }
    let poly = parser.expr()?;
    match parser.bump() {
        None => Ok(poly),
        Some((p, t)) => err(*p, format!("unexpected trailing {}", t.describe())),
    }
}

/// Reads a vector-field file: `#` starts a comment running to end of line,
/// blank lines are ignored, and the surviving lines are the homogeneous
/// components in coordinate order (three lines for a plane field).
pub fn parse_field_file(
    text: &str,
    variables: &[&str],
) -> Result<Vec<MultiPoly>, String> {
    let mut components = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match parse_polynomial(line, variables) {
            Ok(p) => components.push(p),
            Err(e) => return Err(format!("line {}: {e}", lineno + 1)),
        }
    }
    if components.len() != variables.len() {
        return Err(format!(
            "expected {} component polynomials (one per coordinate), found {}",
            variables.len(),
            components.len()
        ));
    }
    Ok(components)
}
