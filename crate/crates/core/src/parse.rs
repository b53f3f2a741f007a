//! Text grammars for polynomials, field elements, and sequences.
//!
//! One lexer and expression parser serve four input languages that differ
//! only in which symbols they admit:
//!
//! * rationals — no symbols: `3/2`, `-0.25`, `(1 + 1/2)/3`
//! * rational functions — `w` for the infinite element: `1/w`, `(3*w + 1)/(w + 2)`
//! * polynomials — `x`, with rational or `w`-valued coefficients:
//!   `x^3 + 2*x + 5`, `x^2 - (2 + 1/w)`
//! * sequences — `n` and the periodic selector: `alt{0; 1/n}`, `1/(n - 5)`
//!
//! Operators are `+ - * /` plus `^` with a literal natural exponent (at
//! most 4096). Multiplication is always explicit: `2*x`, not `2x`. Parsed
//! values print back in the same grammar, so displayed output re-parses.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hyperpoly::HyperPolynomial;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rfunc::RFunc;
use crate::ultrapower::{HyperSeq, SeqExpr};

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    N,
    W,
    X,
    Alt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Semi,
}

fn lex(input: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '{' => {
                toks.push(Tok::LBrace);
                i += 1;
            }
            '}' => {
                toks.push(Tok::RBrace);
                i += 1;
            }
            ';' => {
                toks.push(Tok::Semi);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                let text = &input[start..i];
                let value = text
                    .parse::<Rational>()
                    .map_err(|_| Error::Parse(format!("bad number literal `{text}`")))?;
                toks.push(Tok::Num(value));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                    i += 1;
                }
                match &input[start..i] {
                    "n" => toks.push(Tok::N),
                    "w" => toks.push(Tok::W),
                    "x" => toks.push(Tok::X),
                    "alt" => toks.push(Tok::Alt),
                    other => {
                        return Err(Error::Parse(format!("unknown symbol `{other}`")));
                    }
                }
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(toks)
}

#[derive(Debug, Clone, PartialEq)]
enum Ast {
    Num(Rational),
    Var(Var),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Alt(Vec<Ast>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    N,
    W,
    X,
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::Parse(format!("expected {what}, found `{t:?}`"))),
            None => Err(Error::Parse(format!("expected {what}, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Ast::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Ast> {
        let mut base = self.atom()?;
        while matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let exponent = match self.bump() {
                Some(Tok::Num(q)) if q.is_integer() && !q.is_negative() => {
                    u32::try_from(q.floor()).ok().filter(|&e| e <= MAX_EXPONENT)
                }
                _ => None,
            };
            match exponent {
                Some(e) => base = Ast::Pow(Box::new(base), e),
                None => {
                    return Err(Error::Parse(format!(
                        "exponent must be a natural number at most {MAX_EXPONENT}"
                    )));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump().cloned() {
            Some(Tok::Num(q)) => Ok(Ast::Num(q)),
            Some(Tok::N) => Ok(Ast::Var(Var::N)),
            Some(Tok::W) => Ok(Ast::Var(Var::W)),
            Some(Tok::X) => Ok(Ast::Var(Var::X)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Alt) => {
                self.expect(&Tok::LBrace, "`{` after `alt`")?;
                let mut branches = vec![self.expr()?];
                while matches!(self.peek(), Some(Tok::Semi)) {
                    self.bump();
                    branches.push(self.expr()?);
                }
                self.expect(&Tok::RBrace, "`}` closing `alt`")?;
                if branches.len() < 2 {
                    return Err(Error::Parse("alt needs at least two branches".to_string()));
                }
                Ok(Ast::Alt(branches))
            }
            Some(t) => Err(Error::Parse(format!("unexpected token `{t:?}`"))),
            None => Err(Error::Parse("unexpected end of input".to_string())),
        }
    }
}

fn parse_ast(input: &str) -> Result<Ast> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
    };
    let ast = p.expr()?;
    match p.peek() {
        None => Ok(ast),
        Some(t) => Err(Error::Parse(format!("trailing input at `{t:?}`"))),
    }
}

/// Lowers into a polynomial in `x` with rational-function coefficients.
/// Division is only by (coefficient) constants; `n` and `alt` are refused.
fn lower_hyper(ast: &Ast) -> Result<HyperPolynomial> {
    match ast {
        Ast::Num(q) => Ok(HyperPolynomial::constant(RFunc::from(q.clone()))),
        Ast::Var(Var::X) => Ok(HyperPolynomial::x()),
        Ast::Var(Var::W) => Ok(HyperPolynomial::constant(RFunc::omega())),
        Ast::Var(Var::N) => Err(Error::Parse(
            "the sequence symbol `n` is not allowed here".to_string(),
        )),
        Ast::Neg(a) => Ok(-&lower_hyper(a)?),
        Ast::Add(a, b) => Ok(&lower_hyper(a)? + &lower_hyper(b)?),
        Ast::Sub(a, b) => Ok(&lower_hyper(a)? - &lower_hyper(b)?),
        Ast::Mul(a, b) => Ok(&lower_hyper(a)? * &lower_hyper(b)?),
        Ast::Div(a, b) => {
            let num = lower_hyper(a)?;
            let den = lower_hyper(b)?;
            if den.degree().is_some_and(|d| d >= 1) {
                return Err(Error::Parse(
                    "division by a polynomial in x is not supported".to_string(),
                ));
            }
            let inv = den.coeff(0).recip()?;
            Ok(num.scale(&inv))
        }
        Ast::Pow(a, e) => Ok(lower_hyper(a)?.pow(*e)),
        Ast::Alt(_) => Err(Error::Parse(
            "`alt` is sequence syntax and not allowed here".to_string(),
        )),
    }
}

fn lower_seq(ast: &Ast) -> Result<SeqExpr> {
    match ast {
        Ast::Num(q) => Ok(SeqExpr::Const(q.clone())),
        Ast::Var(Var::N) => Ok(SeqExpr::Index),
        Ast::Var(Var::W) | Ast::Var(Var::X) => Err(Error::Parse(
            "sequences use the symbol `n` only".to_string(),
        )),
        Ast::Neg(a) => Ok(match lower_seq(a)? {
            // Fold negation into literals so `-1/2` stays one constant.
            SeqExpr::Const(q) => SeqExpr::Const(-q),
            other => SeqExpr::Sub(Box::new(SeqExpr::Const(Rational::zero())), Box::new(other)),
        }),
        Ast::Add(a, b) => Ok(SeqExpr::Add(
            Box::new(lower_seq(a)?),
            Box::new(lower_seq(b)?),
        )),
        Ast::Sub(a, b) => Ok(SeqExpr::Sub(
            Box::new(lower_seq(a)?),
            Box::new(lower_seq(b)?),
        )),
        Ast::Mul(a, b) => Ok(SeqExpr::Mul(
            Box::new(lower_seq(a)?),
            Box::new(lower_seq(b)?),
        )),
        Ast::Div(a, b) => Ok(SeqExpr::Div(
            Box::new(lower_seq(a)?),
            Box::new(lower_seq(b)?),
        )),
        Ast::Pow(a, e) => {
            let base = lower_seq(a)?;
            let mut acc = SeqExpr::Const(Rational::one());
            for _ in 0..*e {
                acc = SeqExpr::Mul(Box::new(acc), Box::new(base.clone()));
            }
            Ok(acc)
        }
        Ast::Alt(branches) => {
            let lowered: Result<Vec<SeqExpr>> = branches.iter().map(lower_seq).collect();
            Ok(SeqExpr::Alt(lowered?))
        }
    }
}

fn has_symbol(ast: &Ast, var: Var) -> bool {
    match ast {
        Ast::Num(_) => false,
        Ast::Var(v) => *v == var,
        Ast::Neg(a) | Ast::Pow(a, _) => has_symbol(a, var),
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) | Ast::Div(a, b) => {
            has_symbol(a, var) || has_symbol(b, var)
        }
        Ast::Alt(branches) => branches.iter().any(|a| has_symbol(a, var)),
    }
}

fn has_alt(ast: &Ast) -> bool {
    match ast {
        Ast::Num(_) | Ast::Var(_) => false,
        Ast::Neg(a) | Ast::Pow(a, _) => has_alt(a),
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) | Ast::Div(a, b) => {
            has_alt(a) || has_alt(b)
        }
        Ast::Alt(_) => true,
    }
}

fn as_rational(rf: &RFunc) -> Option<Rational> {
    if rf.denominator() == &Polynomial::one() && rf.numerator().degree().is_none_or(|d| d == 0) {
        Some(rf.numerator().coeff(0))
    } else {
        None
    }
}

/// Parses a rational constant; any use of a symbol — and any division by
/// zero, which in constant text is a malformed literal — is a parse error.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let poly = lower_hyper(&parse_ast(input)?).map_err(|e| match e {
        Error::DivisionByZero => Error::Parse("division by zero in a constant".to_string()),
        other => other,
    })?;
    if poly.degree().is_some_and(|d| d >= 1) {
        return Err(Error::Parse("`x` is not allowed in a rational".to_string()));
    }
    as_rational(&poly.coeff(0))
        .ok_or_else(|| Error::Parse("`w` is not allowed in a rational".to_string()))
}

/// Parses an element of the rational-function field (symbol `w`).
pub fn parse_rfunc(input: &str) -> Result<RFunc> {
    let poly = lower_hyper(&parse_ast(input)?)?;
    if poly.degree().is_some_and(|d| d >= 1) {
        return Err(Error::Parse(
            "`x` is polynomial syntax; field elements use `w`".to_string(),
        ));
    }
    Ok(poly.coeff(0))
}

/// Parses a polynomial in `x` over the rationals.
pub fn parse_poly(input: &str) -> Result<Polynomial<Rational>> {
    let poly = lower_hyper(&parse_ast(input)?).map_err(|e| match e {
        Error::DivisionByZero => Error::Parse("division by zero in a coefficient".to_string()),
        other => other,
    })?;
    let mut coeffs = Vec::with_capacity(poly.coeffs().len());
    for c in poly.coeffs() {
        match as_rational(c) {
            Some(q) => coeffs.push(q),
            None => {
                return Err(Error::Parse(
                    "`w` is not allowed in a rational polynomial".to_string(),
                ));
            }
        }
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Parses a polynomial in `x` whose coefficients may involve `w`.
pub fn parse_hyper_poly(input: &str) -> Result<HyperPolynomial> {
    lower_hyper(&parse_ast(input)?)
}

/// Parses a sequence expression (symbol `n`, selector `alt{...}`) and
/// analyzes it; divisor-vanishing errors surface here.
pub fn parse_seq(input: &str) -> Result<HyperSeq> {
    HyperSeq::new(lower_seq(&parse_ast(input)?)?)
}

/// A parsed field element, in whichever model its symbols call for.
#[derive(Debug, Clone)]
pub enum Element {
    Rational(Rational),
    RFunc(RFunc),
    Seq(HyperSeq),
}

/// Parses an element, picking the model from the symbols used: `n` or
/// `alt` means a sequence, `w` a rational function, neither a rational.
pub fn parse_element(input: &str) -> Result<Element> {
    let ast = parse_ast(input)?;
    if has_alt(&ast) || has_symbol(&ast, Var::N) {
        return Ok(Element::Seq(HyperSeq::new(lower_seq(&ast)?)?));
    }
    if has_symbol(&ast, Var::X) {
        return Err(Error::Parse(
            "`x` is polynomial syntax; elements use `w`, `n`, or plain rationals".to_string(),
        ));
    }
    let poly = if has_symbol(&ast, Var::W) {
        lower_hyper(&ast)?
    } else {
        lower_hyper(&ast).map_err(|e| match e {
            Error::DivisionByZero => Error::Parse("division by zero in a constant".to_string()),
            other => other,
        })?
    };
    let rf = poly.coeff(0);
    match as_rational(&rf) {
        Some(q) => Ok(Element::Rational(q)),
        None => Ok(Element::RFunc(rf)),
    }
}
