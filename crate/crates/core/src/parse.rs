//! Text grammar for polynomials, the CLI's input boundary.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | var | '(' expr ')'
//! var    := 'x' digits
//! ```
//!
//! Rational literals `n/d` bind tighter than `*`, so `1/2*x0^2` means
//! `(1/2) * x0^2`. Implicit multiplication is not allowed. Whitespace is
//! insignificant. Errors carry line and column.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Q, Rat};
use crate::poly::MultiPoly;

/// Abstract syntax tree for a polynomial expression.
#[derive(Clone, Debug, PartialEq)]
pub enum PolyExpr {
    Int(BigInt),
    Rational(BigInt, BigInt),
    Var(usize),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

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

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, message: message.into() }
    }

    fn next_token(&mut self) -> Result<Spanned> {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let Some(c) = self.peek() else {
            return Ok(Spanned { tok: Tok::End, line, col });
        };
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
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    digits.push(self.bump().unwrap() as char);
                }
                Tok::Int(digits.parse().unwrap())
            }
            b'x' => {
                self.bump();
                let mut digits = String::new();
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    digits.push(self.bump().unwrap() as char);
                }
                if digits.is_empty() {
                    return Err(Error::Parse {
                        line,
                        col,
                        message: "variable needs an index, e.g. x0".into(),
                    });
                }
                let idx: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse { line, col, message: "variable index too large".into() })?;
                Tok::Var(idx)
            }
            other => {
                return Err(self.err(format!("unexpected character {:?}", other as char)));
            }
        };
        Ok(Spanned { tok, line, col })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: Spanned,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, nvars: usize) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let current = lexer.next_token()?;
        Ok(Parser { lexer, current, nvars })
    }

    fn advance(&mut self) -> Result<()> {
        self.current = self.lexer.next_token()?;
        Ok(())
    }

    fn err_here(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.current.line, col: self.current.col, message: message.into() }
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut acc = match self.current.tok {
            Tok::Minus => {
                self.advance()?;
                PolyExpr::Neg(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.advance()?;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.current.tok {
                Tok::Plus => {
                    self.advance()?;
                    acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut acc = self.factor()?;
        while self.current.tok == Tok::Star {
            self.advance()?;
            acc = PolyExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PolyExpr> {
        let base = self.base()?;
        if self.current.tok == Tok::Caret {
            self.advance()?;
            match std::mem::replace(&mut self.current.tok, Tok::End) {
                Tok::Int(n) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err_here("exponent too large"))?;
                    self.advance()?;
                    Ok(PolyExpr::Pow(Box::new(base), e))
                }
                tok => {
                    self.current.tok = tok;
                    Err(self.err_here("exponent must be a non-negative integer"))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<PolyExpr> {
        match std::mem::replace(&mut self.current.tok, Tok::End) {
            Tok::Int(n) => {
                self.advance()?;
                if self.current.tok == Tok::Slash {
                    self.advance()?;
                    match std::mem::replace(&mut self.current.tok, Tok::End) {
                        Tok::Int(d) => {
                            if d.is_zero() {
                                return Err(self.err_here("zero denominator"));
                            }
                            self.advance()?;
                            Ok(PolyExpr::Rational(n, d))
                        }
                        tok => {
                            self.current.tok = tok;
                            Err(self.err_here("expected denominator after '/'"))
                        }
                    }
                } else {
                    Ok(PolyExpr::Int(n))
                }
            }
            Tok::Var(idx) => {
                if idx >= self.nvars {
                    let e = self.err_var(idx);
                    return Err(e);
                }
                self.advance()?;
                Ok(PolyExpr::Var(idx))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.current.tok != Tok::RParen {
                    return Err(self.err_here("expected ')'"));
                }
                self.advance()?;
                Ok(inner)
            }
            tok => {
                self.current.tok = tok;
                Err(self.err_here("expected a number, variable, or '('"))
            }
        }
    }

    fn err_var(&self, idx: usize) -> Error {
        Error::Parse {
            line: self.current.line,
            col: self.current.col,
            message: format!("variable x{idx} out of range (nvars = {})", self.nvars),
        }
    }
}

/// Parses a polynomial over the rationals in `nvars` variables.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly<Q>> {
    let expr = parse_expr(text, nvars)?;
    Ok(eval_expr(&expr, nvars))
}

/// Parses to the abstract syntax tree without evaluating.
pub fn parse_expr(text: &str, nvars: usize) -> Result<PolyExpr> {
    if nvars == 0 {
        return Err(Error::InvalidInput("nvars must be positive".into()));
    }
    let mut p = Parser::new(text, nvars)?;
    let e = p.expr()?;
    if p.current.tok != Tok::End {
        return Err(p.err_here("unexpected trailing input"));
    }
    Ok(e)
}

fn eval_expr(e: &PolyExpr, nvars: usize) -> MultiPoly<Q> {
    match e {
        PolyExpr::Int(n) => MultiPoly::constant(Q, nvars, Rat::from_integer(n.clone())),
        PolyExpr::Rational(n, d) => {
            MultiPoly::constant(Q, nvars, Rat::new(n.clone(), d.clone()))
        }
        PolyExpr::Var(i) => MultiPoly::var(Q, nvars, *i).expect("index checked by parser"),
        PolyExpr::Neg(a) => eval_expr(a, nvars).neg(),
        PolyExpr::Add(a, b) => eval_expr(a, nvars).add(&eval_expr(b, nvars)).unwrap(),
        PolyExpr::Sub(a, b) => eval_expr(a, nvars).sub(&eval_expr(b, nvars)).unwrap(),
        PolyExpr::Mul(a, b) => eval_expr(a, nvars).mul(&eval_expr(b, nvars)).unwrap(),
        PolyExpr::Pow(a, k) => eval_expr(a, nvars).pow(*k),
    }
}

/// Canonical text form; inverse of [`parse_poly`] up to term ordering.
pub fn print_poly<F: crate::field::Field>(f: &MultiPoly<F>) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::monomial::Monomial;
    use proptest::prelude::*;

    #[test]
    fn parses_paper_examples() {
        let f = parse_poly("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", 3).unwrap();
        assert_eq!(f.num_terms(), 4);
        assert_eq!(f.homogeneous_degree(), Some(3));

        let perazzo = parse_poly("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5).unwrap();
        assert_eq!(perazzo.homogeneous_degree(), Some(3));

        let err = parse_poly("x0^", 2).unwrap_err();
        match err {
            Error::Parse { col, .. } => assert_eq!(col, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(parse_poly("x5", 2).is_err());
        assert!(parse_poly("x0^-2", 2).is_err());
        assert!(parse_poly("2x0", 2).is_err()); // no implicit multiplication
        assert!(parse_poly("1/0", 2).is_err());
        assert!(parse_poly("x0 + ", 2).is_err());
        assert!(parse_poly("(x0", 2).is_err());
        assert!(parse_poly("x", 2).is_err());
    }

    #[test]
    fn rational_binds_tighter_than_star() {
        let f = parse_poly("1/2*x0^2", 1).unwrap();
        let expect =
            MultiPoly::monomial_term(Q, 1, Monomial::from_slice(&[2]), rat(1, 2));
        assert_eq!(f, expect);
    }

    #[test]
    fn parentheses_and_signs() {
        let f = parse_poly("-(x0 - x1)^2", 2).unwrap();
        let g = parse_poly("-x0^2 + 2*x0*x1 - x1^2", 2).unwrap();
        assert_eq!(f, g);
        let h = parse_poly("+x0", 2).unwrap();
        assert_eq!(h, parse_poly("x0", 2).unwrap());
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let nvars = rng.gen_range(1..=6usize);
            let nterms = rng.gen_range(0..8usize);
            let mut f = MultiPoly::zero(Q, nvars);
            for _ in 0..nterms {
                let exps: Vec<u16> = (0..nvars).map(|_| rng.gen_range(0..=8u16)).collect();
                let num = rng.gen_range(-20i64..=20);
                let den = rng.gen_range(1i64..=9);
                f = f.add(&MultiPoly::monomial_term(
                    Q,
                    nvars,
                    Monomial::new(exps),
                    rat(num, den),
                )).unwrap();
            }
            let printed = print_poly(&f);
            let parsed = parse_poly(&printed, nvars).unwrap();
            prop_assert_eq!(&parsed, &f);
            // printing is idempotent through a parse cycle
            prop_assert_eq!(print_poly(&parsed), printed);
        }
    }
}
