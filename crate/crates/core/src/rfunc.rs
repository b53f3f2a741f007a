//! The ordered field of rational functions in a symbol `w` that sits above
//! every rational number.
//!
//! An element is a ratio of polynomials in `w` over the rationals, kept
//! canonical: numerator and denominator coprime, denominator monic. Order is
//! decided by behavior at large arguments, which here is purely symbolic:
//! `a > b` exactly when the numerator of the canonical difference has a
//! positive leading coefficient. That single rule makes `w` infinite,
//! `1/w` a positive infinitesimal, and every comparison terminating.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Classification, Field};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ultrapower::HyperSeq;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RFunc {
    num: Polynomial<Rational>,
    den: Polynomial<Rational>,
}

impl RFunc {
    /// Builds `num/den` in canonical form.
    pub fn new(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Self {
        if num.is_zero() {
            return RFunc {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, r) = num.div_rem(&g);
        debug_assert!(r.is_zero());
        let (den, r) = den.div_rem(&g);
        debug_assert!(r.is_zero());
        // Make the denominator monic so each value has one representation.
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = Rational::one()
            .checked_div(&lead)
            .expect("leading coefficient is nonzero");
        RFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(num: Polynomial<Rational>) -> Self {
        RFunc {
            num,
            den: Polynomial::one(),
        }
    }

    /// The distinguished infinite element `w`.
    pub fn omega() -> Self {
        RFunc::from_poly(Polynomial::x())
    }

    pub fn numerator(&self) -> &Polynomial<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<Rational> {
        &self.den
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::reduced(self.num.pow(exp), self.den.pow(exp))
    }

    /// Sign of `self - other` read from leading behavior; a total order.
    pub fn compare(&self, other: &Self) -> Ordering {
        // Denominators are monic, hence positive at large arguments, so the
        // cross product carries the sign of the difference.
        let cross = &(&self.num * &other.den) - &(&other.num * &self.den);
        match cross.leading() {
            None => Ordering::Equal,
            Some(l) if l.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    /// Magnitude class from the degree gap between numerator and denominator.
    pub fn classify(&self) -> Classification {
        let Some(n) = self.num.degree() else {
            return Classification::Zero;
        };
        let d = self.den.degree().expect("denominator is nonzero");
        match n.cmp(&d) {
            Ordering::Greater => Classification::Infinite,
            Ordering::Equal => Classification::Appreciable,
            Ordering::Less => Classification::InfinitesimalNonzero,
        }
    }

    pub fn is_limited(&self) -> bool {
        self.classify().is_limited()
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.classify().is_infinitesimal()
    }

    /// The unique rational infinitely close to a limited element: the ratio
    /// of leading coefficients when degrees tie, zero when the element is
    /// infinitesimal.
    ///
    /// Limited elements here always have rational standard parts because the
    /// value at large arguments is a rational function; richer extensions
    /// (square roots of `w`, say) would need algebraic ones.
    pub fn shadow(&self) -> Result<Rational> {
        match self.classify() {
            Classification::Infinite => Err(Error::NotLimited),
            Classification::Zero | Classification::InfinitesimalNonzero => Ok(Rational::zero()),
            Classification::Appreciable => {
                let n = self.num.leading().expect("appreciable is nonzero");
                let d = self.den.leading().expect("denominator is nonzero");
                n.checked_div(d)
            }
        }
    }

    pub fn infinitely_close(&self, other: &Self) -> bool {
        (self - other).is_infinitesimal()
    }

    /// Value at a concrete rational argument; `None` on a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(
            self.num
                .eval(x)
                .checked_div(&d)
                .expect("nonzero denominator value"),
        )
    }

    /// Value at a natural-number argument; `None` on a pole.
    pub fn eval_at(&self, n: u64) -> Option<Rational> {
        self.eval(&Rational::from(n))
    }

    /// Reads a selector-free sequence as a rational function of its index.
    pub fn from_seq(seq: &HyperSeq) -> Result<Self> {
        seq.to_rfunc()
    }
}

impl Add for &RFunc {
    type Output = RFunc;
    fn add(self, rhs: &RFunc) -> RFunc {
        RFunc::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RFunc {
    type Output = RFunc;
    fn sub(self, rhs: &RFunc) -> RFunc {
        RFunc::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RFunc {
    type Output = RFunc;
    fn mul(self, rhs: &RFunc) -> RFunc {
        RFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RFunc {
    type Output = RFunc;
    fn div(self, rhs: &RFunc) -> RFunc {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

impl Neg for &RFunc {
    type Output = RFunc;
    fn neg(self) -> RFunc {
        RFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RFunc {
            type Output = RFunc;
            fn $method(self, rhs: RFunc) -> RFunc {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RFunc {
    type Output = RFunc;
    fn neg(self) -> RFunc {
        -&self
    }
}

impl PartialOrd for RFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl Zero for RFunc {
    fn zero() -> Self {
        RFunc::from_poly(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RFunc {
    fn one() -> Self {
        RFunc::from_poly(Polynomial::one())
    }
}

impl From<Rational> for RFunc {
    fn from(q: Rational) -> Self {
        RFunc::from_poly(Polynomial::constant(q))
    }
}

impl Field for RFunc {
    fn from_rational(q: &Rational) -> Self {
        RFunc::from(q.clone())
    }
}

impl fmt::Display for RFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &Polynomial<Rational>| {
            let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            let s = p.to_string_with_var("w");
            if terms > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_zero() || self.den == Polynomial::one() {
            write!(f, "{}", self.num.to_string_with_var("w"))
        } else {
            write!(f, "{}/{}", side(&self.num), side(&self.den))
        }
    }
}

impl fmt::Debug for RFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
