//! Text syntax for polynomials, rational functions and differential forms.
//!
//! ```text
//! sum     := wedge (('+' | '-') wedge)*
//! wedge   := unary ('/\' unary)*
//! unary   := '-' unary | product
//! product := power (('*' | '/') power)*
//! power   := atom ('^' ['-'] integer)?
//! atom    := integer | 'I' | variable | differential
//!          | ('Re' | 'Im' | 'd' | 'conj' | 'mirror') '(' sum ')' | '(' sum ')'
//! ```
//!
//! Variables are `z<k>`, `zb<k>` (real-paired), `w<k>` (complexified),
//! `x<k> = (z+zb)/2`, `y<k> = (z−zb)/2i` and `u<k>` as an alias of `z<k>`;
//! differentials prefix any of these with `d`. The [`DForm`] printer emits
//! this syntax, and printing is a fixed point of parse-then-print.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::forms::DForm;
use crate::gauss::GaussRat;
use crate::mirror::mirror_form;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::space::{Flavor, VarSpace};

/// A syntax or evaluation error at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String, Option<String>),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("integer {}", n),
        Tok::Ident(a, Some(k)) => format!("'{}{}'", a, k),
        Tok::Ident(a, None) => format!("'{}'", a),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Wedge => "'/\\'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> PResult<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '/' if chars.get(i + 1) == Some(&'\\') => {
                i += 1;
                Tok::Wedge
            }
            '/' => Tok::Slash,
            _ if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                Tok::Int(s.parse().expect("digits"))
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_alphabetic() {
                    i += 1;
                }
                let name: String = chars[start..=i].iter().collect();
                let mut idx = None;
                if i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    let s = i + 1;
                    while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                        i += 1;
                    }
                    idx = Some(chars[s..=i].iter().collect());
                }
                Tok::Ident(name, idx)
            }
            _ => {
                return Err(ParseError {
                    column: col,
                    message: format!("unexpected character '{}'", c),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    space: &'a VarSpace,
}

fn err<T>(column: usize, message: impl Into<String>) -> PResult<T> {
    Err(ParseError {
        column,
        message: message.into(),
    })
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            err(
                self.col(),
                format!("expected {}, found {}", describe(&t), describe(self.peek())),
            )
        }
    }

    fn sum(&mut self) -> PResult<DForm> {
        let mut acc = self.wedge()?;
        loop {
            let neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            let col = self.bump().1;
            let rhs = self.wedge()?;
            let r = if neg { acc.try_sub(&rhs) } else { acc.try_add(&rhs) };
            acc = r.or_else(|e| err(col, e.to_string()))?;
        }
    }

    fn wedge(&mut self) -> PResult<DForm> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Wedge {
            let col = self.bump().1;
            let rhs = self.unary()?;
            acc = acc.wedge(&rhs).or_else(|e| err(col, e.to_string()))?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<DForm> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.product()
    }

    fn product(&mut self) -> PResult<DForm> {
        let mut acc = self.power()?;
        loop {
            let div = match self.peek() {
                Tok::Star => false,
                Tok::Slash => true,
                _ => return Ok(acc),
            };
            let col = self.bump().1;
            let rhs_col = self.col();
            let rhs = self.power()?;
            acc = if div {
                let f = rhs
                    .as_function()
                    .map_or_else(|| err(rhs_col, "divisor must be a function"), Ok)?;
                let inv = f.inv().or_else(|_| err(rhs_col, "division by zero"))?;
                acc.scale_fun(&inv)
            } else if let Some(f) = acc.as_function() {
                rhs.scale_fun(&f)
            } else if let Some(f) = rhs.as_function() {
                acc.scale_fun(&f)
            } else {
                return err(col, "'*' needs a function on one side; use /\\ for forms");
            };
        }
    }

    fn power(&mut self) -> PResult<DForm> {
        let base_col = self.col();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (t, col) = self.bump();
        let Tok::Int(n) = t else {
            return err(col, format!("expected integer exponent, found {}", describe(&t)));
        };
        let e = n
            .to_i32()
            .map(|e| if neg { -e } else { e })
            .map_or_else(|| err(col, "exponent too large"), Ok)?;
        let f = base
            .as_function()
            .map_or_else(|| err(base_col, "only functions can be raised to a power"), Ok)?;
        let p = f.powi(e).or_else(|_| err(base_col, "zero raised to a negative power"))?;
        Ok(DForm::function(p))
    }

    fn atom(&mut self) -> PResult<DForm> {
        let (t, col) = self.bump();
        let space = *self.space;
        match t {
            Tok::Int(n) => {
                let c = GaussRat::new(BigRational::from_integer(n), BigRational::zero());
                Ok(DForm::function(RatFun::constant(space, c)))
            }
            Tok::LParen => {
                let v = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Tok::Ident(name, None) if name == "I" => {
                Ok(DForm::function(RatFun::constant(space, GaussRat::i())))
            }
            Tok::Ident(name, None) => {
                if *self.peek() != Tok::LParen {
                    return err(col, format!("'{}' must be followed by '('", name));
                }
                self.bump();
                let arg = self.sum()?;
                self.expect(Tok::RParen)?;
                let wrap = |r: crate::Result<DForm>| r.or_else(|e| err(col, e.to_string()));
                match name.as_str() {
                    "Re" => wrap(arg.re()),
                    "Im" => wrap(arg.im()),
                    "conj" => wrap(arg.conj()),
                    "d" => Ok(arg.ext_d()),
                    "mirror" => Ok(mirror_form(&arg)),
                    _ => err(col, format!("unknown function '{}'", name)),
                }
            }
            Tok::Ident(name, Some(idx)) => self.symbol(&name, &idx, col),
            other => err(col, format!("unexpected {}", describe(&other))),
        }
    }

    fn symbol(&self, name: &str, idx: &str, col: usize) -> PResult<DForm> {
        let space = *self.space;
        let (diff, stem) = match name.strip_prefix('d') {
            Some(rest) if !rest.is_empty() => (true, rest),
            _ => (false, name),
        };
        let k: usize = idx
            .parse()
            .map_or_else(|_| err(col, "index too large"), Ok)?;
        if k < space.base || k >= space.base + space.n {
            return err(
                col,
                format!(
                    "undeclared variable '{}{}': indices run from {} to {}",
                    name,
                    idx,
                    space.base,
                    space.base + space.n - 1
                ),
            );
        }
        let j = k - space.base;
        let second = j + space.n;
        let undeclared = || {
            err(
                col,
                format!("undeclared variable '{}{}' in {:?} coordinates", name, idx, space.flavor),
            )
        };
        let atom = |v: usize| {
            if diff {
                DForm::basis(space, v)
            } else {
                DForm::from_poly(Poly::var(space, v))
            }
        };
        let half = GaussRat::from_ratio(1, 2);
        match (stem, space.flavor) {
            ("z" | "u", _) => Ok(atom(j)),
            ("zb", Flavor::RealPaired) | ("w", Flavor::Complexified) => Ok(atom(second)),
            ("x", _) => Ok((&atom(j) + &atom(second)).scale(&half)),
            ("y", _) => {
                let s = GaussRat::new(BigRational::zero(), BigRational::new((-1).into(), 2.into()));
                Ok((&atom(j) - &atom(second)).scale(&s))
            }
            ("zb" | "w" | "wb", _) => undeclared(),
            _ => err(col, format!("unknown symbol '{}{}'", name, idx)),
        }
    }
}

/// Parse a form or function (a 0-form).
pub fn parse_form(text: &str, space: &VarSpace) -> PResult<DForm> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        space,
    };
    let v = p.sum()?;
    if *p.peek() != Tok::End {
        return err(p.col(), format!("unexpected {}", describe(p.peek())));
    }
    Ok(v)
}

pub fn parse_ratfun(text: &str, space: &VarSpace) -> PResult<RatFun> {
    parse_form(text, space)?.as_function().map_or_else(
        || err(1, "expected a function, found a form of positive degree"),
        Ok,
    )
}

pub fn parse_poly(text: &str, space: &VarSpace) -> PResult<Poly> {
    parse_ratfun(text, space)?
        .into_poly()
        .or_else(|_| err(1, "expected a polynomial, found a rational function"))
}
