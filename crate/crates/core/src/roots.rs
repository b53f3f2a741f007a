//! Root location for polynomials over the exact rationals.
//!
//! Three cooperating tools:
//!
//! * `cauchy_bound` gives a rational `B` with every real root strictly
//!   inside `(-B, B)`.
//! * `sturm_count` counts distinct real roots on a half-open interval
//!   `(lo, hi]` from sign variations of the Sturm chain.
//! * `ivt_grid_root` realizes the intermediate value theorem effectively: a
//!   sign change across an interval is refined by scanning ever finer grids,
//!   taking the first cell whose endpoints straddle zero (or stopping cold on
//!   an exact grid-point root), until the cell is narrower than the target.
//!
//! Everything is exact; no floating point is involved anywhere.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// How a root is pinned down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    /// The root itself was hit: `lo == hi` is the root.
    ExactRoot,
    /// The polynomial changes sign strictly: `f(lo) * f(hi) < 0`.
    SignChange,
}

/// An interval containing exactly one root of a contextual polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
    kind: IntervalKind,
}

impl IsolatingInterval {
    pub fn exact(root: Rational) -> Self {
        IsolatingInterval {
            lo: root.clone(),
            hi: root,
            kind: IntervalKind::ExactRoot,
        }
    }

    pub fn sign_change(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi);
        IsolatingInterval {
            lo,
            hi,
            kind: IntervalKind::SignChange,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        let half = Rational::new(1, 2).expect("2 != 0");
        (&self.lo + &self.hi) * half
    }

    /// The exact root when the interval is degenerate.
    pub fn exact_root(&self) -> Option<&Rational> {
        match self.kind {
            IntervalKind::ExactRoot => Some(&self.lo),
            IntervalKind::SignChange => None,
        }
    }
}

/// Default isolation width `2^-32` shared by the root-finding entry points.
pub fn default_width() -> Rational {
    Rational::new(1u64, 1u64 << 32).expect("nonzero denominator")
}

/// `1 + max |a_i / a_m|`: every real root of `f` lies strictly inside
/// `(-B, B)`. Requires a nonconstant polynomial.
pub fn cauchy_bound(f: &Polynomial<Rational>) -> Rational {
    let m = f.degree().expect("cauchy_bound of the zero polynomial");
    assert!(m > 0, "cauchy_bound of a constant polynomial");
    let lead = f.leading().unwrap().abs();
    let mut max = Rational::zero();
    for i in 0..m {
        let r = f
            .coeff(i)
            .abs()
            .checked_div(&lead)
            .expect("leading coefficient is nonzero");
        if r > max {
            max = r;
        }
    }
    Rational::one() + max
}

/// Sturm chain `(f, f', -rem, ...)`, each entry scaled by a positive
/// constant to keep coefficients small (signs are all that matter).
pub fn sturm_chain(f: &Polynomial<Rational>) -> Vec<Polynomial<Rational>> {
    let normalize = |p: Polynomial<Rational>| match p.leading() {
        None => p,
        Some(l) => {
            let inv = Rational::one()
                .checked_div(&l.abs())
                .expect("nonzero leading");
            p.scale(&inv)
        }
    };
    let mut chain = vec![normalize(f.clone())];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(normalize(d));
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(normalize(-&r));
    }
}

/// Sign variations of the chain at `x`, zeros skipped.
fn sign_variations(chain: &[Polynomial<Rational>], x: &Rational) -> usize {
    let mut variations = 0;
    let mut last: i8 = 0;
    for p in chain {
        let s = p.eval(x).signum();
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
///
/// The count is over distinct roots: the square-free part is taken first,
/// so multiplicities never inflate the answer.
pub fn sturm_count(f: &Polynomial<Rational>, lo: &Rational, hi: &Rational) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::DegenerateInterval);
    }
    let g = f.square_free_part();
    if g.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&g);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

/// Isolates one root of `f` in `(lo, hi)` given a strict sign change, by
/// bisection (the default two-cell grid).
pub fn ivt_grid_root(
    f: &Polynomial<Rational>,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<IsolatingInterval> {
    ivt_grid_root_with(f, lo, hi, width, 2)
}

/// Grid-refinement root isolation with `cells >= 2` grid cells per level.
///
/// Each level scans the grid points of the current interval in ascending
/// order. An exact zero ends the search; otherwise the first cell whose left
/// value is negative and right value is positive (after orienting `f` to be
/// ascending) is refined further, until the cell width is at most `width`.
/// With multiple roots present this deterministically follows the leftmost
/// negative-to-positive crossing at every level.
pub fn ivt_grid_root_with(
    f: &Polynomial<Rational>,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
    cells: u32,
) -> Result<IsolatingInterval> {
    assert!(cells >= 2, "grid needs at least two cells per level");
    if lo >= hi || !width.is_positive() {
        return Err(Error::DegenerateInterval);
    }
    let flo = f.eval(lo);
    let fhi = f.eval(hi);
    if (&flo * &fhi).signum() >= 0 {
        return Err(Error::NoSignChange);
    }
    // Orient ascending: negative on the left, positive on the right.
    let g = if flo.is_negative() { f.clone() } else { -f };

    let cells_q = Rational::from(cells as u64);
    let mut a = lo.clone();
    let mut b = hi.clone();
    loop {
        if &b - &a <= *width {
            return Ok(IsolatingInterval::sign_change(a, b));
        }
        let step = (&b - &a).checked_div(&cells_q).expect("cells >= 2");
        // Grid values at a + k*step for k = 0..=cells; endpoints have known
        // signs but interior points may hit the root exactly.
        let mut prev_x = a.clone();
        let mut prev_sign = -1i8;
        let mut chosen = None;
        for k in 1..=cells {
            let x = if k == cells {
                b.clone()
            } else {
                &a + &(&step * &Rational::from(k as u64))
            };
            let s = if k == cells { 1 } else { g.eval(&x).signum() };
            if s == 0 {
                return Ok(IsolatingInterval::exact(x));
            }
            if prev_sign < 0 && s > 0 {
                chosen = Some((prev_x, x));
                break;
            }
            prev_x = x;
            prev_sign = s;
        }
        let (na, nb) = chosen.expect("a negative-to-positive cell always exists");
        a = na;
        b = nb;
    }
}
