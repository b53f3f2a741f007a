//! Dense univariate polynomials over an exact ordered field.
//!
//! Coefficients are stored ascending by degree with no trailing zeros, so
//! structural equality is semantic equality. Division is exact Euclidean
//! division over the coefficient field; gcd and square-free reduction work
//! over the rationals through an integer pseudo-remainder sequence.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::Field;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Polynomial<K> {
    /// Builds a polynomial from coefficients ascending by degree.
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![K::zero(), K::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: K, k: usize) -> Self {
        let mut coeffs = vec![K::zero(); k];
        coeffs.push(c);
        Polynomial::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| K::from_rational(&Rational::from(i as u64)) * c.clone())
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &K) -> Self {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Polynomial<L> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().unwrap().clone() / dlead.clone();
            let shift = rdeg - ddeg;
            quot[shift] = factor.clone();
            rem = &rem - &divisor.scale(&factor).shift_up(shift);
        }
        (Polynomial::from_coeffs(quot), rem)
    }

    fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![K::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial::from_coeffs(coeffs)
    }

    /// Leading coefficient scaled to one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&(K::one() / l.clone())),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Polynomial<Rational> {
    /// Monic greatest common divisor.
    ///
    /// Euclid over the rationals compounds fractions badly enough to
    /// dominate every caller, so this runs a primitive pseudo-remainder
    /// sequence over the integers: contents are stripped after each step,
    /// which keeps coefficients near the subresultant bound.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = primitive_int_coeffs(self);
        let mut b = primitive_int_coeffs(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = make_primitive(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        Polynomial::from_coeffs(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// `f / gcd(f, f')`, monic: same distinct roots, all simple.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }
}

/// Coefficients of `p` cleared to integers (lcm of denominators) with the
/// content divided out. `p` must be nonzero.
fn primitive_int_coeffs(p: &Polynomial<Rational>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    make_primitive(ints)
}

/// Divides out the integer content; the zero polynomial stays empty.
fn make_primitive(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    let mut content = BigInt::zero();
    for c in &coeffs {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut coeffs {
            *c = &*c / &content;
        }
    }
    coeffs
}

/// Pseudo-remainder of `a` by `b` (nonempty, ascending coefficients):
/// the remainder of `lead(b)^k * a` divided by `b`, which needs no
/// fractions. The scale factor is irrelevant to gcd computation.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("divisor is nonzero");
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let lr = r.last().expect("trimmed").clone();
        let shift = r.len() - b.len();
        for c in &mut r {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        debug_assert!(r.last().expect("nonempty").is_zero());
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

impl<K: Field> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<K: Field> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<K: Field> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Polynomial<Rational> {
    /// Renders with the given variable name: `x^2 - 1/2*x + 3`.
    pub fn to_string_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            if i == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with_var("x"))
    }
}

impl<K: Field + fmt::Debug> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({:?})", self.coeffs)
    }
}
