//! The input expression language.
//!
//! ```text
//! curve  := expr ("," expr)*
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" nat)?
//! atom   := integer | "t" | param | "(" expr ")"
//! ```
//!
//! Whitespace is ignored and multiplication is always explicit. `−` (U+2212)
//! is accepted as a minus sign.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Field, PrimeField, RatFunc, Rationals};
use crate::artin_schreier::AdditiveCurve;
use crate::kummer::TorusCurve;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var,
    Param,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn mentions_param(&self) -> bool {
        match self {
            Expr::Param => true,
            Expr::Int(_) | Expr::Var => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.mentions_param(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.mentions_param() || b.mentions_param()
            }
        }
    }

    /// Evaluates bottom-up to a rational function in `t` over `field`,
    /// substituting `param` for the parameter symbol.
    pub fn eval<F: Field>(&self, field: &F, param: Option<&F::Elem>) -> Result<RatFunc<F>> {
        Ok(match self {
            Expr::Int(n) => {
                let c = field
                    .from_rational(&BigRational::from_integer(n.clone()))
                    .expect("integers embed in every field");
                RatFunc::constant(field.clone(), c)
            }
            Expr::Var => RatFunc::var(field.clone()),
            Expr::Param => {
                let c = param.ok_or_else(|| {
                    Error::domain("the parameter symbol is only allowed in family mode")
                })?;
                RatFunc::constant(field.clone(), c.clone())
            }
            Expr::Neg(a) => a.eval(field, param)?.neg(),
            Expr::Add(a, b) => a.eval(field, param)?.add(&b.eval(field, param)?),
            Expr::Sub(a, b) => a.eval(field, param)?.sub(&b.eval(field, param)?),
            Expr::Mul(a, b) => a.eval(field, param)?.mul(&b.eval(field, param)?),
            Expr::Div(a, b) => {
                let d = b.eval(field, param)?;
                if d.is_zero() {
                    return Err(Error::domain("division by the zero polynomial"));
                }
                a.eval(field, param)?.div(&d)?
            }
            Expr::Pow(a, e) => a.eval(field, param)?.pow(i64::from(*e))?,
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var | Expr::Param => 5,
        }
    }

    pub fn display_with<'a>(&'a self, param: &'a str) -> ExprDisplay<'a> {
        ExprDisplay { expr: self, param }
    }
}

pub struct ExprDisplay<'a> {
    expr: &'a Expr,
    param: &'a str,
}

impl ExprDisplay<'_> {
    fn write(&self, e: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = e.precedence() < min;
        if wrap {
            write!(f, "(")?;
        }
        match e {
            Expr::Int(n) => write!(f, "{n}")?,
            Expr::Var => write!(f, "t")?,
            Expr::Param => write!(f, "{}", self.param)?,
            Expr::Neg(a) => {
                write!(f, "-")?;
                self.write(a, 3, f)?;
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                self.write(a, 1, f)?;
                write!(f, "{}", if matches!(e, Expr::Add(..)) { " + " } else { " - " })?;
                self.write(b, 2, f)?;
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                self.write(a, 2, f)?;
                write!(f, "{}", if matches!(e, Expr::Mul(..)) { "*" } else { "/" })?;
                self.write(b, 3, f)?;
            }
            Expr::Pow(a, n) => {
                self.write(a, 5, f)?;
                write!(f, "^{n}")?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.expr, 0, f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("c"))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Int(s.parse().unwrap()), pos));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else if "+-*/^(),\u{2212}".contains(c) {
            chars.next();
            column += 1;
            out.push((Tok::Sym(if c == '\u{2212}' { '-' } else { c }), pos));
        } else {
            return Err(err(pos, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    param: Option<&'a str>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == &Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.peek() != &Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let e = u32::try_from(&n)
                    .map_err(|_| err(pos, format!("exponent {n} is too large")))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(err(
                pos,
                "exponent must be a nonnegative integer literal",
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Ident(s) if s == "t" => Ok(Expr::Var),
            Tok::Ident(s) if Some(s.as_str()) == self.param => Ok(Expr::Param),
            Tok::Ident(s) => Err(err(pos, format!("unknown symbol '{s}'"))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Tok::Sym(')') => Ok(e),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Tok::End => Err(err(pos, "unexpected end of input")),
            Tok::Sym(c) => Err(err(pos, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses a comma-separated list of expressions, returning each with the
/// position where it starts. `param` names the family parameter, if any.
pub fn parse_list(text: &str, param: Option<&str>) -> Result<Vec<(Expr, Pos)>> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        param,
    };
    let mut out = Vec::new();
    loop {
        let start = p.pos();
        out.push((p.expr()?, start));
        let pos = p.pos();
        match p.bump() {
            Tok::Sym(',') => continue,
            Tok::End => return Ok(out),
            t => return Err(err(pos, format!("expected ',' or end of input, found {t:?}"))),
        }
    }
}

pub fn parse_expr(text: &str, param: Option<&str>) -> Result<Expr> {
    let mut list = parse_list(text, param)?;
    if list.len() != 1 {
        return Err(err(Pos { line: 1, column: 1 }, "expected a single expression"));
    }
    Ok(list.pop().unwrap().0)
}

/// Parses `"b_1, …, b_k"` into a curve in G_m^k.
pub fn parse_torus_curve(text: &str) -> Result<TorusCurve> {
    let coords = parse_list(text, None)?
        .into_iter()
        .enumerate()
        .map(|(i, (e, pos))| {
            let f = e.eval(&Rationals, None).map_err(|e| at(pos, e))?;
            if f.is_zero() {
                return Err(err(pos, format!("coordinate {} is identically zero", i + 1)));
            }
            Ok(f)
        })
        .collect::<Result<Vec<_>>>()?;
    TorusCurve::new(coords)
}

/// Parses `"b_1, …, b_k"` over F_p into a curve in G_a^k. Zero coordinates are allowed.
pub fn parse_additive_curve(text: &str, p: u64) -> Result<AdditiveCurve> {
    let field = PrimeField::new(p)?;
    let coords = parse_list(text, None)?
        .into_iter()
        .map(|(e, pos)| e.eval(&field, None).map_err(|e| at(pos, e)))
        .collect::<Result<Vec<_>>>()?;
    AdditiveCurve::new(field, coords)
}

/// Re-anchors an evaluation failure at the coordinate it came from.
fn at(pos: Pos, e: Error) -> Error {
    match e {
        Error::Domain(m) => err(pos, m),
        other => other,
    }
}
