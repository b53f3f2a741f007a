//! Sequences of rationals modulo eventual behavior.
//!
//! A `HyperSeq` is a closed-form sequence expression — rational constants,
//! the index `n`, field operations, and periodic selectors `alt{...}` —
//! together with an analysis of its eventual behavior. Splitting the
//! naturals by residue class modulo the least common period turns every
//! expression into one rational function of `n` per class, so comparisons,
//! classification, and standard parts reduce to exact [`RFunc`] questions.
//!
//! When the residue classes disagree, the verdict would depend on which
//! infinite index set a nonprincipal ultrafilter keeps, and the honest
//! answer is [`Error::UltrafilterDependent`]. Classes never disagree for
//! selector-free expressions, so those are always decided.
//!
//! Sequences are indexed from `n = 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Classification;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rfunc::RFunc;
use crate::roots::cauchy_bound;

/// Scan limit for exact divisor-zero searches; beyond this the Cauchy
/// bound itself is used as a (safe) threshold.
const EXACT_SCAN_LIMIT: u64 = 4096;

/// A closed sequence expression. Building one never fails; analysis and
/// validation happen in [`HyperSeq::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqExpr {
    Const(Rational),
    /// The index `n` itself.
    Index,
    Add(Box<SeqExpr>, Box<SeqExpr>),
    Sub(Box<SeqExpr>, Box<SeqExpr>),
    Mul(Box<SeqExpr>, Box<SeqExpr>),
    Div(Box<SeqExpr>, Box<SeqExpr>),
    /// Periodic selector: term `n` uses branch `n mod m` (at least two).
    Alt(Vec<SeqExpr>),
}

impl SeqExpr {
    pub fn constant(q: Rational) -> Self {
        SeqExpr::Const(q)
    }

    pub fn index() -> Self {
        SeqExpr::Index
    }

    /// Periodic selector over `branches`; panics unless there are at
    /// least two, since one branch is no selector at all.
    pub fn alt(branches: Vec<SeqExpr>) -> Self {
        assert!(branches.len() >= 2, "selector needs at least two branches");
        SeqExpr::Alt(branches)
    }

    /// The least common period of all selectors in the expression.
    fn period(&self) -> u64 {
        match self {
            SeqExpr::Const(_) | SeqExpr::Index => 1,
            SeqExpr::Add(a, b) | SeqExpr::Sub(a, b) | SeqExpr::Mul(a, b) | SeqExpr::Div(a, b) => {
                a.period().lcm(&b.period())
            }
            SeqExpr::Alt(branches) => branches
                .iter()
                .map(SeqExpr::period)
                .fold(branches.len() as u64, |acc, p| acc.lcm(&p)),
        }
    }

    /// Direct interpretation at index `n >= 1`; `None` where a divisor
    /// vanishes or a subterm is undefined.
    fn eval(&self, n: u64) -> Option<Rational> {
        match self {
            SeqExpr::Const(q) => Some(q.clone()),
            SeqExpr::Index => Some(Rational::from(n)),
            SeqExpr::Add(a, b) => Some(a.eval(n)? + b.eval(n)?),
            SeqExpr::Sub(a, b) => Some(a.eval(n)? - b.eval(n)?),
            SeqExpr::Mul(a, b) => Some(a.eval(n)? * b.eval(n)?),
            SeqExpr::Div(a, b) => {
                let num = a.eval(n)?;
                let den = b.eval(n)?;
                num.checked_div(&den).ok()
            }
            SeqExpr::Alt(branches) => branches[(n % branches.len() as u64) as usize].eval(n),
        }
    }

    /// Reduces the expression on the residue class `n ≡ r (mod m)` to a
    /// rational function of `n`, recording for every division the first
    /// index from which its divisor provably stays nonzero.
    fn reduce_on_class(&self, r: u64, m: u64, thresholds: &mut Vec<u64>) -> Result<RFunc> {
        match self {
            SeqExpr::Const(q) => Ok(RFunc::from(q.clone())),
            SeqExpr::Index => Ok(RFunc::omega()),
            SeqExpr::Add(a, b) => {
                Ok(&a.reduce_on_class(r, m, thresholds)? + &b.reduce_on_class(r, m, thresholds)?)
            }
            SeqExpr::Sub(a, b) => {
                Ok(&a.reduce_on_class(r, m, thresholds)? - &b.reduce_on_class(r, m, thresholds)?)
            }
            SeqExpr::Mul(a, b) => {
                Ok(&a.reduce_on_class(r, m, thresholds)? * &b.reduce_on_class(r, m, thresholds)?)
            }
            SeqExpr::Div(a, b) => {
                let num = a.reduce_on_class(r, m, thresholds)?;
                let den = b.reduce_on_class(r, m, thresholds)?;
                if den.is_zero() {
                    // The divisor vanishes on this whole residue class, so
                    // no tail of the sequence escapes the zero.
                    return Err(Error::EventuallyZeroDivisor);
                }
                thresholds.push(nonvanishing_from(den.numerator(), r, m));
                thresholds.push(nonvanishing_from(den.denominator(), r, m));
                num.checked_div(&den)
            }
            SeqExpr::Alt(branches) => {
                let pick = (r % branches.len() as u64) as usize;
                branches[pick].reduce_on_class(r, m, thresholds)
            }
        }
    }
}

/// First index `N >= 1` with `p(n) != 0` for every `n >= N` in the class
/// `n ≡ r (mod m)`. Small Cauchy bounds are scanned exactly; past the
/// scan limit the bound itself is returned, which can only overshoot.
fn nonvanishing_from(p: &Polynomial<Rational>, r: u64, m: u64) -> u64 {
    debug_assert!(!p.is_zero());
    if p.degree() == Some(0) {
        return 1;
    }
    let bound = match ceil_u64(&cauchy_bound(p)) {
        Some(b) => b,
        None => return u64::MAX,
    };
    if bound > EXACT_SCAN_LIMIT {
        return bound.saturating_add(1);
    }
    let first = if r == 0 { m } else { r };
    let mut last_zero = 0u64;
    let mut n = first;
    while n <= bound {
        if p.eval(&Rational::from(n)).is_zero() {
            last_zero = n;
        }
        n += m;
    }
    last_zero + 1
}

fn ceil_u64(q: &Rational) -> Option<u64> {
    let floor = q.floor();
    let c = if q.is_integer() { floor } else { floor + 1 };
    u64::try_from(c).ok()
}

/// An element of the sequence model: a closed expression plus its
/// per-residue-class reduction to rational functions of the index.
#[derive(Debug, Clone)]
pub struct HyperSeq {
    expr: SeqExpr,
    period: u64,
    /// `classes[r]` describes terms at indices `n ≡ r (mod period)`.
    classes: Vec<RFunc>,
    valid_from: u64,
}

impl HyperSeq {
    /// Analyzes `expr`: splits by residue class, reduces each class to a
    /// rational function, and finds the first index from which every
    /// division is defined. Fails with [`Error::EventuallyZeroDivisor`]
    /// when some divisor vanishes on an entire class.
    pub fn new(expr: SeqExpr) -> Result<Self> {
        let period = expr.period();
        let mut thresholds = vec![1u64];
        let mut classes = Vec::with_capacity(period as usize);
        for r in 0..period {
            classes.push(expr.reduce_on_class(r, period, &mut thresholds)?);
        }
        let valid_from = thresholds.into_iter().max().unwrap_or(1);
        Ok(HyperSeq {
            expr,
            period,
            classes,
            valid_from,
        })
    }

    pub fn constant(q: Rational) -> Self {
        HyperSeq::new(SeqExpr::constant(q)).expect("constants have no divisors")
    }

    /// The sequence `1, 2, 3, ...` — the canonical infinite element.
    pub fn index() -> Self {
        HyperSeq::new(SeqExpr::index()).expect("the index has no divisors")
    }

    pub fn expr(&self) -> &SeqExpr {
        &self.expr
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn class_rfunc(&self, r: u64) -> &RFunc {
        &self.classes[(r % self.period) as usize]
    }

    /// First index at which this term — and every later one — is defined.
    pub fn valid_from(&self) -> u64 {
        self.valid_from
    }

    /// The term at index `n >= 1`, or `None` where the expression is
    /// undefined (always defined from [`Self::valid_from`] on).
    pub fn term(&self, n: u64) -> Option<Rational> {
        if n == 0 {
            return None;
        }
        self.expr.eval(n)
    }

    /// Eventual order against `other`, decided per residue class.
    pub fn compare(&self, other: &HyperSeq) -> Result<Ordering> {
        self.combine_verdicts(other, |a, b| a.compare(b))
    }

    /// Magnitude class of the element, when all residue classes agree.
    pub fn classify(&self) -> Result<Classification> {
        self.unary_verdict(RFunc::classify)
    }

    /// Whether the element is infinitesimal (possibly zero). This can be
    /// decided even when [`Self::classify`] cannot: a sequence may mix
    /// zero and nonzero-infinitesimal classes.
    pub fn is_infinitesimal(&self) -> Result<bool> {
        self.unary_verdict(|rf| rf.classify().is_infinitesimal())
    }

    /// Whether the element has finite magnitude.
    pub fn is_limited(&self) -> Result<bool> {
        self.unary_verdict(|rf| rf.classify().is_limited())
    }

    /// The standard part: the unique rational infinitely close to the
    /// element. `NotLimited` when every class diverges,
    /// `UltrafilterDependent` when classes disagree.
    pub fn shadow(&self) -> Result<Rational> {
        let mut value: Option<Rational> = None;
        let mut any_infinite = false;
        for rf in &self.classes {
            if !rf.is_limited() {
                any_infinite = true;
                continue;
            }
            let s = rf.shadow().expect("limited elements have shadows");
            match &value {
                None => value = Some(s),
                Some(v) if *v != s => return Err(Error::UltrafilterDependent),
                _ => {}
            }
        }
        match (value, any_infinite) {
            (None, _) => Err(Error::NotLimited),
            (Some(_), true) => Err(Error::UltrafilterDependent),
            (Some(v), false) => Ok(v),
        }
    }

    /// Whether `self - other` is infinitesimal.
    pub fn infinitely_close(&self, other: &HyperSeq) -> Result<bool> {
        (self - other).is_infinitesimal()
    }

    /// The single rational function equal to this sequence on every
    /// residue class, if there is one.
    pub fn to_rfunc(&self) -> Result<RFunc> {
        let first = &self.classes[0];
        if self.classes.iter().any(|rf| rf != first) {
            return Err(Error::NotRationalFunction);
        }
        Ok(first.clone())
    }

    pub fn checked_div(&self, other: &HyperSeq) -> Result<HyperSeq> {
        HyperSeq::new(SeqExpr::Div(
            Box::new(self.expr.clone()),
            Box::new(other.expr.clone()),
        ))
    }

    fn unary_verdict<T: PartialEq>(&self, f: impl Fn(&RFunc) -> T) -> Result<T> {
        let mut verdict: Option<T> = None;
        for rf in &self.classes {
            let v = f(rf);
            match &verdict {
                None => verdict = Some(v),
                Some(seen) if *seen != v => return Err(Error::UltrafilterDependent),
                _ => {}
            }
        }
        Ok(verdict.expect("at least one residue class"))
    }

    fn combine_verdicts<T: PartialEq>(
        &self,
        other: &HyperSeq,
        f: impl Fn(&RFunc, &RFunc) -> T,
    ) -> Result<T> {
        let m = self.period.lcm(&other.period);
        let mut verdict: Option<T> = None;
        for r in 0..m {
            let v = f(self.class_rfunc(r), other.class_rfunc(r));
            match &verdict {
                None => verdict = Some(v),
                Some(seen) if *seen != v => return Err(Error::UltrafilterDependent),
                _ => {}
            }
        }
        Ok(verdict.expect("at least one residue class"))
    }
}

macro_rules! seq_binop {
    ($trait:ident, $method:ident, $node:ident, $msg:expr) => {
        impl $trait for &HyperSeq {
            type Output = HyperSeq;
            fn $method(self, rhs: &HyperSeq) -> HyperSeq {
                HyperSeq::new(SeqExpr::$node(
                    Box::new(self.expr.clone()),
                    Box::new(rhs.expr.clone()),
                ))
                .expect($msg)
            }
        }

        impl $trait for HyperSeq {
            type Output = HyperSeq;
            fn $method(self, rhs: HyperSeq) -> HyperSeq {
                $trait::$method(&self, &rhs)
            }
        }

        impl $trait for SeqExpr {
            type Output = SeqExpr;
            fn $method(self, rhs: SeqExpr) -> SeqExpr {
                SeqExpr::$node(Box::new(self), Box::new(rhs))
            }
        }
    };
}

seq_binop!(Add, add, Add, "sums of valid sequences stay valid");
seq_binop!(Sub, sub, Sub, "differences of valid sequences stay valid");
seq_binop!(Mul, mul, Mul, "products of valid sequences stay valid");

/// Division panics when the divisor vanishes on a residue class; use
/// [`HyperSeq::checked_div`] to handle that case.
impl Div for &HyperSeq {
    type Output = HyperSeq;
    fn div(self, rhs: &HyperSeq) -> HyperSeq {
        self.checked_div(rhs)
            .expect("divisor vanishes on a residue class")
    }
}

impl Div for HyperSeq {
    type Output = HyperSeq;
    fn div(self, rhs: HyperSeq) -> HyperSeq {
        Div::div(&self, &rhs)
    }
}

impl Div for SeqExpr {
    type Output = SeqExpr;
    fn div(self, rhs: SeqExpr) -> SeqExpr {
        SeqExpr::Div(Box::new(self), Box::new(rhs))
    }
}

impl Neg for &HyperSeq {
    type Output = HyperSeq;
    fn neg(self) -> HyperSeq {
        &HyperSeq::constant(Rational::zero()) - self
    }
}

impl Neg for HyperSeq {
    type Output = HyperSeq;
    fn neg(self) -> HyperSeq {
        -&self
    }
}

impl From<Rational> for HyperSeq {
    fn from(q: Rational) -> Self {
        HyperSeq::constant(q)
    }
}

impl From<Rational> for SeqExpr {
    fn from(q: Rational) -> Self {
        SeqExpr::Const(q)
    }
}

// Rendering follows the input grammar, so printed expressions parse back.
impl fmt::Display for SeqExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl SeqExpr {
    fn prec(&self) -> u8 {
        match self {
            SeqExpr::Add(..) | SeqExpr::Sub(..) => 1,
            SeqExpr::Mul(..) | SeqExpr::Div(..) => 2,
            SeqExpr::Const(q) if q.is_negative() => 1,
            SeqExpr::Const(_) | SeqExpr::Index | SeqExpr::Alt(_) => 3,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        let me = self.prec();
        if me < parent {
            write!(f, "(")?;
        }
        match self {
            SeqExpr::Const(q) => write!(f, "{q}")?,
            SeqExpr::Index => write!(f, "n")?,
            SeqExpr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            SeqExpr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            SeqExpr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            SeqExpr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
            SeqExpr::Alt(branches) => {
                write!(f, "alt{{")?;
                for (i, e) in branches.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    e.fmt_prec(f, 0)?;
                }
                write!(f, "}}")?;
            }
        }
        if me < parent {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for HyperSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({})]", self.expr)
    }
}
