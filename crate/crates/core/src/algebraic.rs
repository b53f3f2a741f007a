//! Real algebraic numbers and the cuts they induce on the rationals.
//!
//! A `RealAlgebraic` is a square-free defining polynomial plus an interval
//! isolating exactly one of its real roots. Comparisons refine intervals
//! until they separate, with a gcd test catching genuine equality after
//! finitely many steps, so the order is total and exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::roots::{
    cauchy_bound, default_width, ivt_grid_root, sturm_count, IntervalKind, IsolatingInterval,
};

#[derive(Debug, Clone)]
pub struct RealAlgebraic {
    defining: Polynomial<Rational>,
    interval: IsolatingInterval,
}

impl RealAlgebraic {
    /// Wraps one root of `f`: the square-free part of `f` must have exactly
    /// one root in `(lo, hi)` (or `lo == hi` must be a root outright).
    pub fn new(f: &Polynomial<Rational>, lo: Rational, hi: Rational) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = f.square_free_part();
        if lo == hi {
            if !g.eval(&lo).is_zero() {
                return Err(Error::NotIsolating);
            }
            return Ok(RealAlgebraic {
                defining: g,
                interval: IsolatingInterval::exact(lo),
            });
        }
        if lo > hi {
            return Err(Error::DegenerateInterval);
        }
        if g.eval(&lo).is_zero() || g.eval(&hi).is_zero() || sturm_count(&g, &lo, &hi)? != 1 {
            return Err(Error::NotIsolating);
        }
        debug_assert!((g.eval(&lo) * g.eval(&hi)).is_negative());
        Ok(RealAlgebraic {
            defining: g,
            interval: IsolatingInterval::sign_change(lo, hi),
        })
    }

    pub fn from_rational(q: Rational) -> Self {
        let defining = &Polynomial::x() - &Polynomial::constant(q.clone());
        RealAlgebraic {
            defining,
            interval: IsolatingInterval::exact(q),
        }
    }

    /// Invariant-preserving assembly for callers that established the
    /// isolation themselves.
    fn assemble(defining: Polynomial<Rational>, interval: IsolatingInterval) -> Self {
        debug_assert!(match interval.kind() {
            IntervalKind::ExactRoot => defining.eval(interval.lo()).is_zero(),
            IntervalKind::SignChange => {
                (defining.eval(interval.lo()) * defining.eval(interval.hi())).is_negative()
                    && sturm_count(&defining, interval.lo(), interval.hi()) == Ok(1)
            }
        });
        RealAlgebraic { defining, interval }
    }

    /// The square-free, monic polynomial this number is a root of.
    pub fn defining(&self) -> &Polynomial<Rational> {
        &self.defining
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    /// `Some` when the number is known exactly (hence rational).
    pub fn exact_value(&self) -> Option<&Rational> {
        self.interval.exact_root()
    }

    /// The exact value when the number is rational, even if the interval
    /// has not collapsed onto it, by searching the defining polynomial's
    /// rational root candidates inside the interval.
    pub fn rational_value(&self) -> Option<Rational> {
        match self.exact_value() {
            Some(v) => Some(v.clone()),
            None => rational_root_between(&self.defining, self.interval.lo(), self.interval.hi()),
        }
    }

    /// One bisection step; exact hits collapse the interval.
    pub fn refine_step(&mut self) {
        if self.interval.kind() == IntervalKind::ExactRoot {
            return;
        }
        let m = self.interval.midpoint();
        let fm = self.defining.eval(&m);
        if fm.is_zero() {
            self.interval = IsolatingInterval::exact(m);
            return;
        }
        let flo = self.defining.eval(self.interval.lo());
        self.interval = if (flo * fm).is_negative() {
            IsolatingInterval::sign_change(self.interval.lo().clone(), m)
        } else {
            IsolatingInterval::sign_change(m, self.interval.hi().clone())
        };
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while self.interval.kind() == IntervalKind::SignChange && self.interval.width() > *width {
            self.refine_step();
        }
    }

    /// Total order on the represented real numbers.
    ///
    /// Intervals are refined until they separate; before each refinement a
    /// common-factor test decides equality, so equal numbers terminate too.
    pub fn compare(&self, other: &Self) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        // The defining polynomials never change below, so one gcd suffices.
        let common = a.defining.gcd(&b.defining);
        let common_deg = common.degree().unwrap_or(0);
        loop {
            match (a.exact_value().cloned(), b.exact_value().cloned()) {
                (Some(x), Some(y)) => return x.cmp(&y),
                (Some(x), None) => match locate_rational(&x, &b) {
                    Location::Inside => {
                        b.refine_step();
                    }
                    Location::Equal => return Ordering::Equal,
                    Location::Below => return Ordering::Less,
                    Location::Above => return Ordering::Greater,
                },
                (None, Some(y)) => match locate_rational(&y, &a) {
                    Location::Inside => {
                        a.refine_step();
                    }
                    Location::Equal => return Ordering::Equal,
                    Location::Below => return Ordering::Greater,
                    Location::Above => return Ordering::Less,
                },
                (None, None) => {
                    if a.interval.hi() <= b.interval.lo() {
                        return Ordering::Less;
                    }
                    if b.interval.hi() <= a.interval.lo() {
                        return Ordering::Greater;
                    }
                    if common_deg >= 1 {
                        let olo = a.interval.lo().max(b.interval.lo()).clone();
                        let ohi = a.interval.hi().min(b.interval.hi()).clone();
                        // Overlap is nondegenerate here; a shared root in it
                        // is the isolated root of both sides.
                        if sturm_count(&common, &olo, &ohi).expect("nondegenerate overlap") >= 1 {
                            return Ordering::Equal;
                        }
                    }
                    a.refine_step();
                    b.refine_step();
                }
            }
        }
    }
}

enum Location {
    Below,
    Inside,
    Above,
    Equal,
}

/// Where the rational `x` sits relative to the isolated root of `b`.
fn locate_rational(x: &Rational, b: &RealAlgebraic) -> Location {
    let iv = b.interval();
    if b.defining().eval(x).is_zero() && iv.lo() < x && x < iv.hi() {
        return Location::Equal;
    }
    if x <= iv.lo() {
        Location::Below
    } else if x >= iv.hi() {
        Location::Above
    } else {
        Location::Inside
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

/// How a cut of the rationals behaves at its boundary.
///
/// For the cut induced by a real number `r` (lower class `{q : q <= r}`),
/// only two shapes occur: a rational `r` is the maximum of its lower class,
/// and an irrational `r` leaves a gap. A jump (both a maximum below and a
/// minimum above) cannot happen in the densely ordered rationals, and a
/// minimum in the upper class would make `r` the least rational above
/// itself; the two remaining tags exist to make the taxonomy explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutKind {
    Jump,
    Gap,
    MaxInLower,
    MinInUpper,
}

/// Classifies the cut induced by an algebraic number: `MaxInLower` exactly
/// when the number is rational, `Gap` otherwise.
///
/// Rationality is decided by the rational root theorem: candidates `p/q`
/// with `p` dividing the cleared constant term and `q` the cleared leading
/// coefficient are tested inside the isolating interval.
pub fn cut_classify(alpha: &RealAlgebraic) -> CutKind {
    if alpha.exact_value().is_some() {
        return CutKind::MaxInLower;
    }
    let iv = alpha.interval();
    match rational_root_between(alpha.defining(), iv.lo(), iv.hi()) {
        Some(_) => CutKind::MaxInLower,
        None => CutKind::Gap,
    }
}

/// The rational root of `f` strictly between `lo` and `hi`, if one exists.
fn rational_root_between(
    f: &Polynomial<Rational>,
    lo: &Rational,
    hi: &Rational,
) -> Option<Rational> {
    // Clear denominators to integer coefficients.
    let mut scale = BigInt::one();
    for c in f.coeffs() {
        scale = scale.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    // Factor out x^k; zero becomes a candidate root.
    let k = ints.iter().position(|c| !c.is_zero())?;
    let zero = Rational::zero();
    if k > 0 && lo < &zero && &zero < hi {
        return Some(zero);
    }
    let a0 = ints[k].abs();
    let am = ints.last().expect("nonzero polynomial").abs();
    for p in positive_divisors(&a0) {
        for q in positive_divisors(&am) {
            for sign in [1i64, -1] {
                let c =
                    Rational::new(&p * BigInt::from(sign), q.clone()).expect("divisor is nonzero");
                if lo < &c && &c < hi && f.eval(&c).is_zero() {
                    return Some(c);
                }
            }
        }
    }
    None
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.is_positive());
    let mut divisors = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            divisors.push(i.clone());
            let j = n / &i;
            if j != i {
                divisors.push(j);
            }
        }
        i += 1;
    }
    divisors
}

/// All distinct real roots of `f`, ascending, each isolated by Sturm
/// subdivision of `(-B, B]` below the Cauchy bound `B`.
pub fn isolate_all_roots(f: &Polynomial<Rational>) -> Result<Vec<RealAlgebraic>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f.square_free_part();
    if g.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(&g);
    let lo = -bound.clone();
    let total = sturm_count(&g, &lo, &bound)?;
    let mut out = Vec::with_capacity(total);
    if total > 0 {
        subdivide(&g, lo, bound, total, &mut out);
    }
    Ok(out)
}

fn subdivide(
    g: &Polynomial<Rational>,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<RealAlgebraic>,
) {
    if count == 1 {
        out.push(pin_single_root(g, lo, hi));
        return;
    }
    let m = Field::midpoint(&lo, &hi);
    let left = sturm_count(g, &lo, &m).expect("nondegenerate half");
    if left > 0 {
        subdivide(g, lo, m.clone(), left, out);
    }
    if count - left > 0 {
        subdivide(g, m, hi, count - left, out);
    }
}

/// Turns `(lo, hi]` holding exactly one root of square-free `g` into a
/// `RealAlgebraic`, shrinking until the endpoints are off-root.
fn pin_single_root(g: &Polynomial<Rational>, mut lo: Rational, mut hi: Rational) -> RealAlgebraic {
    loop {
        if g.eval(&hi).is_zero() {
            return RealAlgebraic::assemble(g.clone(), IsolatingInterval::exact(hi));
        }
        if !g.eval(&lo).is_zero() {
            return RealAlgebraic::assemble(g.clone(), IsolatingInterval::sign_change(lo, hi));
        }
        // The left endpoint is a root *outside* the half-open interval;
        // bisect until it falls away.
        let m = Field::midpoint(&lo, &hi);
        if g.eval(&m).is_zero() {
            return RealAlgebraic::assemble(g.clone(), IsolatingInterval::exact(m));
        }
        if sturm_count(g, &m, &hi).expect("nondegenerate half") == 1 {
            lo = m;
        } else {
            hi = m;
        }
    }
}

/// The guaranteed real root of an odd-degree polynomial, isolated to the
/// default width over the square-free part.
pub fn odd_degree_root(f: &Polynomial<Rational>) -> Result<RealAlgebraic> {
    odd_degree_root_with(f, &default_width())
}

pub fn odd_degree_root_with(f: &Polynomial<Rational>, width: &Rational) -> Result<RealAlgebraic> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg % 2 == 0 {
        return Err(Error::NotOddDegree);
    }
    let bound = cauchy_bound(f);
    let lo = -bound.clone();
    // Odd degree forces opposite signs at the Cauchy bound.
    let iv = ivt_grid_root(f, &lo, &bound, width)?;
    let g = f.square_free_part();
    narrow_to_algebraic(f, &g, iv)
}

/// Shrinks an `f`-sign-change interval until it isolates one root of the
/// square-free part `g`, then wraps it.
fn narrow_to_algebraic(
    f: &Polynomial<Rational>,
    g: &Polynomial<Rational>,
    iv: IsolatingInterval,
) -> Result<RealAlgebraic> {
    if let Some(root) = iv.exact_root() {
        debug_assert!(g.eval(root).is_zero());
        return Ok(RealAlgebraic::assemble(g.clone(), iv));
    }
    let mut lo = iv.lo().clone();
    let mut hi = iv.hi().clone();
    loop {
        if !g.eval(&lo).is_zero() && !g.eval(&hi).is_zero() && sturm_count(g, &lo, &hi)? == 1 {
            return Ok(RealAlgebraic::assemble(
                g.clone(),
                IsolatingInterval::sign_change(lo, hi),
            ));
        }
        let m = Field::midpoint(&lo, &hi);
        let fm = f.eval(&m);
        if fm.is_zero() {
            debug_assert!(g.eval(&m).is_zero());
            return Ok(RealAlgebraic::assemble(
                g.clone(),
                IsolatingInterval::exact(m),
            ));
        }
        if (f.eval(&lo) * fm).is_negative() {
            hi = m;
        } else {
            lo = m;
        }
    }
}

/// Exact square root of a nonnegative rational as an algebraic number over
/// `x^2 - q`: an `ExactRoot` when `q` is a perfect square, otherwise an
/// isolating interval of the default width.
pub fn real_sqrt(q: &Rational) -> Result<RealAlgebraic> {
    real_sqrt_with(q, &default_width())
}

pub fn real_sqrt_with(q: &Rational, width: &Rational) -> Result<RealAlgebraic> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    let defining = &Polynomial::x().pow(2) - &Polynomial::constant(q.clone());
    if q.is_zero() {
        return RealAlgebraic::new(&defining, Rational::zero(), Rational::zero());
    }
    let sn = q.numer().sqrt();
    let sd = q.denom().sqrt();
    if &(&sn * &sn) == q.numer() && &(&sd * &sd) == q.denom() {
        let root = Rational::new(sn, sd).expect("denominator sqrt is positive");
        return RealAlgebraic::new(&defining, root.clone(), root);
    }
    let hi = q.max(&Rational::one()).clone() + Rational::one();
    let iv = ivt_grid_root(&defining, &Rational::zero(), &hi, width)?;
    RealAlgebraic::new(&defining, iv.lo().clone(), iv.hi().clone())
}
