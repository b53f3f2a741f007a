//! Polynomials with extension-field coefficients and the grid-level
//! intermediate value theorem.
//!
//! Rational polynomials lift coefficientwise to any [`Field`] ([`star_eval`]),
//! which makes microcontinuity a checkable statement: at limited points,
//! infinitely close inputs give infinitely close outputs. The lifted IVT
//! ([`hyper_ivt_root`]) instantiates a polynomial with rational-function
//! coefficients at each level `n` of a grid schedule, isolates a root of the
//! resulting rational polynomial to width `1/n`, and classifies the defect
//! of the level midpoints exactly.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Classification, Field};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rfunc::RFunc;
use crate::roots::{ivt_grid_root, IsolatingInterval};

/// A polynomial whose coefficients live in the rational-function field.
pub type HyperPolynomial = Polynomial<RFunc>;

/// Evaluates a rational polynomial at a point of any extension field by
/// lifting the coefficients and running Horner's rule there.
pub fn star_eval<K: Field>(f: &Polynomial<Rational>, x: &K) -> K {
    f.map(K::from_rational).eval(x)
}

/// Whether `f` sends `a` and `b` to infinitely close values.
pub fn star_values_close(f: &Polynomial<Rational>, a: &RFunc, b: &RFunc) -> bool {
    (&star_eval(f, a) - &star_eval(f, b)).is_infinitesimal()
}

/// Microcontinuity of `f` at the pair `(a, b)`: infinitely close limited
/// inputs must give infinitely close outputs.
///
/// Fails with [`Error::NotLimited`] when either input is infinite — the
/// guarantee genuinely breaks there, e.g. squaring separates `w` from
/// `w + 1/w` by more than 2. Pairs that are not infinitely close satisfy
/// the implication vacuously.
pub fn microcontinuity_check(f: &Polynomial<Rational>, a: &RFunc, b: &RFunc) -> Result<bool> {
    if !a.is_limited() || !b.is_limited() {
        return Err(Error::NotLimited);
    }
    Ok(!a.infinitely_close(b) || star_values_close(f, a, b))
}

/// Strictly increasing instantiation levels, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSchedule {
    levels: Vec<u64>,
}

impl GridSchedule {
    /// Panics unless `levels` is nonempty, strictly increasing, and starts
    /// at 2 or above.
    pub fn new(levels: Vec<u64>) -> Self {
        assert!(!levels.is_empty(), "a schedule needs at least one level");
        assert!(levels[0] >= 2, "levels start at 2");
        assert!(
            levels.windows(2).all(|w| w[0] < w[1]),
            "levels must increase strictly"
        );
        GridSchedule { levels }
    }

    /// Levels `2, 4, 8, ..., 2^count`.
    pub fn powers_of_two(count: u32) -> Self {
        assert!(count >= 1);
        GridSchedule::new((1..=count).map(|j| 1u64 << j).collect())
    }

    pub fn levels(&self) -> &[u64] {
        &self.levels
    }
}

impl Default for GridSchedule {
    fn default() -> Self {
        GridSchedule::powers_of_two(32)
    }
}

/// What happened at one instantiation level.
// A schedule holds at most a few dozen of these, so the variant size gap is fine.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelOutcome {
    /// A root was isolated to the level's width.
    Isolated {
        interval: IsolatingInterval,
        midpoint: Rational,
        /// The midpoint is an exact root of the instantiated polynomial.
        exact_hit: bool,
    },
    /// Some coefficient has a pole at this level.
    UndefinedAt,
    /// The instantiated polynomial does not change sign on the interval.
    NoBracket,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelResult {
    pub level: u64,
    /// Target width `1/level` for this level's isolation.
    pub width: Rational,
    pub outcome: LevelOutcome,
}

/// Result of the leveled IVT: the per-level isolations plus an exact
/// classification of the midpoint defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperIvtOutcome {
    pub levels: Vec<LevelResult>,
    /// Class of the defect `f(midpoint)` along the levels: `Zero` when
    /// every isolated level hit a root exactly, otherwise the class of a
    /// derivative-based bound that dominates the defect.
    pub residual_class: Classification,
    /// The dominating bound itself, when the defect was not exactly zero.
    pub residual_bound: Option<RFunc>,
}

/// Root isolation for a polynomial with rational-function coefficients.
///
/// At each scheduled level `n` the coefficients are evaluated at `n`;
/// levels where a coefficient has a pole or the instantiated polynomial
/// does not straddle zero on `[lo, hi]` are recorded and skipped. Each
/// remaining level isolates a root to width `1/n`. If no level survives,
/// the instantiation is undefined everywhere and an error is returned.
pub fn hyper_ivt_root(
    f: &HyperPolynomial,
    lo: &Rational,
    hi: &Rational,
    schedule: &GridSchedule,
) -> Result<HyperIvtOutcome> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::DegenerateInterval);
    }
    let mut levels = Vec::with_capacity(schedule.levels().len());
    let mut isolated = 0usize;
    let mut all_exact = true;
    for &level in schedule.levels() {
        let width = Rational::new(1u64, level).expect("levels are nonzero");
        let outcome = match instantiate(f, level) {
            None => LevelOutcome::UndefinedAt,
            Some(g) => {
                let bracketed =
                    g.degree().is_some_and(|d| d >= 1) && (g.eval(lo) * g.eval(hi)).is_negative();
                if !bracketed {
                    LevelOutcome::NoBracket
                } else {
                    let interval =
                        ivt_grid_root(&g, lo, hi, &width).expect("sign change was checked");
                    let midpoint = interval.midpoint();
                    let exact_hit = g.eval(&midpoint).is_zero();
                    isolated += 1;
                    all_exact &= exact_hit;
                    LevelOutcome::Isolated {
                        interval,
                        midpoint,
                        exact_hit,
                    }
                }
            }
        };
        levels.push(LevelResult {
            level,
            width,
            outcome,
        });
    }
    if isolated == 0 {
        return Err(Error::UndefinedInstantiation);
    }
    let (residual_class, residual_bound) = if all_exact {
        (Classification::Zero, None)
    } else {
        let bound = defect_bound(f, lo, hi);
        (bound.classify(), Some(bound))
    };
    Ok(HyperIvtOutcome {
        levels,
        residual_class,
        residual_bound,
    })
}

/// Coefficientwise evaluation at the level; `None` on any pole.
fn instantiate(f: &HyperPolynomial, level: u64) -> Option<Polynomial<Rational>> {
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        coeffs.push(c.eval_at(level)?);
    }
    Some(Polynomial::from_coeffs(coeffs))
}

/// A rational function dominating the defect `|f(midpoint)|` along the
/// levels: the midpoint sits within `1/n` of a true root, so the mean
/// value bound `max |f'| / n` applies with `|x| <= |lo| + |hi| + 1`.
fn defect_bound(f: &HyperPolynomial, lo: &Rational, hi: &Rational) -> RFunc {
    let radius = lo.abs() + hi.abs() + Rational::from(1u64);
    let mut derivative_bound = RFunc::zero();
    let mut power = Rational::from(1u64);
    for (i, c) in f.coeffs().iter().enumerate().skip(1) {
        let scale = Rational::from(i as u64) * power.clone();
        derivative_bound = &derivative_bound + &(c.abs() * RFunc::from(scale));
        power = power * radius.clone();
    }
    derivative_bound
        .checked_div(&RFunc::omega())
        .expect("omega is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn poly(coeffs: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RFunc {
        RFunc::new(
            Polynomial::from_coeffs(num.iter().map(|&c| Rational::from(c)).collect()),
            Polynomial::from_coeffs(den.iter().map(|&c| Rational::from(c)).collect()),
        )
        .unwrap()
    }

    fn lift(coeffs: &[i64]) -> HyperPolynomial {
        poly(coeffs).map(RFunc::from_rational)
    }

    #[test]
    fn star_eval_expands_near_one() {
        // (1 + 1/w)^2 - 2 = -1 + 2/w + 1/w^2 = (-w^2 + 2w + 1)/w^2
        let f = poly(&[-2, 0, 1]);
        let x = &RFunc::one() + &rf(&[1], &[0, 1]);
        assert_eq!(star_eval(&f, &x), rf(&[1, 2, -1], &[0, 0, 1]));
    }

    #[test]
    fn star_eval_at_an_infinitesimal() {
        // (1/w)^2 - 2 = (1 - 2w^2)/w^2, infinitely close to -2.
        let f = poly(&[-2, 0, 1]);
        let value = star_eval(&f, &rf(&[1], &[0, 1]));
        assert_eq!(value, rf(&[1, 0, -2], &[0, 0, 1]));
        assert!(value.infinitely_close(&RFunc::from_rational(&r(-2))));
    }

    #[test]
    fn star_eval_restricts_to_plain_evaluation() {
        let f = poly(&[5, -3, 0, 2]);
        let x = q(7, 3);
        assert_eq!(star_eval(&f, &x), f.eval(&x));
    }

    #[test]
    fn microcontinuity_holds_at_limited_points() {
        let f = poly(&[0, -2, 0, 1]);
        let a = RFunc::from_rational(&q(3, 2));
        let b = &a + &rf(&[1], &[0, 1]);
        assert!(star_values_close(&f, &a, &b));
        assert!(microcontinuity_check(&f, &a, &b).unwrap());
    }

    #[test]
    fn microcontinuity_fails_at_infinite_points() {
        // At a = w, b = w + 1/w, squaring stretches the gap to 2 + 1/w^2.
        let f = poly(&[0, 0, 1]);
        let a = RFunc::omega();
        let b = &a + &rf(&[1], &[0, 1]);
        let gap = &star_eval(&f, &b) - &star_eval(&f, &a);
        assert_eq!(gap, rf(&[1, 0, 2], &[0, 0, 1]));
        assert_eq!(gap.classify(), Classification::Appreciable);
        assert!(!star_values_close(&f, &a, &b));
        assert!(matches!(
            microcontinuity_check(&f, &a, &b),
            Err(Error::NotLimited)
        ));
    }

    #[test]
    fn microcontinuity_is_vacuous_for_separated_inputs() {
        let f = poly(&[0, 1]);
        let a = RFunc::zero();
        let b = RFunc::one();
        assert!(!star_values_close(&f, &a, &b));
        assert!(microcontinuity_check(&f, &a, &b).unwrap());
    }

    #[test]
    fn schedules_validate_and_default_to_dyadic() {
        let s = GridSchedule::powers_of_two(5);
        assert_eq!(s.levels(), &[2, 4, 8, 16, 32]);
        let d = GridSchedule::default();
        assert_eq!(d.levels().len(), 32);
        assert_eq!(d.levels()[0], 2);
        assert_eq!(d.levels()[31], 1u64 << 32);
        assert!(d.levels().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    #[should_panic(expected = "increase strictly")]
    fn schedules_reject_disorder() {
        GridSchedule::new(vec![2, 8, 8]);
    }

    #[test]
    fn leveled_ivt_hits_a_moving_rational_root_exactly() {
        // x - 1/w instantiates to x - 1/n; dyadic bisection lands on the
        // root exactly at every level.
        let f = HyperPolynomial::from_coeffs(vec![-rf(&[1], &[0, 1]), RFunc::one()]);
        let out = hyper_ivt_root(&f, &r(0), &r(1), &GridSchedule::powers_of_two(8)).unwrap();
        assert_eq!(out.residual_class, Classification::Zero);
        assert_eq!(out.residual_bound, None);
        for lr in &out.levels {
            match &lr.outcome {
                LevelOutcome::Isolated {
                    midpoint,
                    exact_hit,
                    ..
                } => {
                    assert!(exact_hit);
                    assert_eq!(*midpoint, Rational::new(1u64, lr.level).unwrap());
                }
                other => panic!("expected isolation, got {other:?}"),
            }
        }
    }

    #[test]
    fn leveled_ivt_tracks_a_perturbed_square_root() {
        // x^2 - (2 + 1/w): level n isolates sqrt(2 + 1/n) to width 1/n.
        let f = HyperPolynomial::from_coeffs(vec![
            -(&RFunc::from_rational(&r(2)) + &rf(&[1], &[0, 1])),
            RFunc::zero(),
            RFunc::one(),
        ]);
        let out = hyper_ivt_root(&f, &r(1), &r(2), &GridSchedule::powers_of_two(6)).unwrap();
        assert_eq!(out.residual_class, Classification::InfinitesimalNonzero);
        assert!(out.residual_bound.as_ref().unwrap().is_infinitesimal());
        for lr in &out.levels {
            let LevelOutcome::Isolated {
                interval,
                midpoint,
                exact_hit,
            } = &lr.outcome
            else {
                panic!("every level brackets");
            };
            assert!(interval.width() <= lr.width);
            let target = r(2) + Rational::new(1u64, lr.level).unwrap();
            // The isolated interval straddles sqrt(2 + 1/n).
            assert!(interval.lo().pow(2) <= target && target <= interval.hi().pow(2));
            // Level 4 instantiates to x^2 - 9/4, whose root 3/2 is hit.
            if lr.level == 4 {
                assert!(exact_hit);
                assert_eq!(*midpoint, q(3, 2));
            }
        }
    }

    #[test]
    fn leveled_ivt_skips_pole_levels() {
        // Constant coefficient 1/(w - 4) is undefined at level 4.
        let f = HyperPolynomial::from_coeffs(vec![-rf(&[1], &[-4, 1]), RFunc::one()]);
        let out = hyper_ivt_root(&f, &r(-1), &r(1), &GridSchedule::powers_of_two(5)).unwrap();
        assert_eq!(out.levels[1].level, 4);
        assert_eq!(out.levels[1].outcome, LevelOutcome::UndefinedAt);
        let isolated = out
            .levels
            .iter()
            .filter(|lr| matches!(lr.outcome, LevelOutcome::Isolated { .. }))
            .count();
        assert_eq!(isolated, 4);
        assert_eq!(out.residual_class, Classification::InfinitesimalNonzero);
    }

    #[test]
    fn leveled_ivt_reports_total_failure() {
        // Pole at the only scheduled level.
        let f = HyperPolynomial::from_coeffs(vec![rf(&[1], &[-2, 1]), RFunc::one()]);
        let only_two = GridSchedule::new(vec![2]);
        assert!(matches!(
            hyper_ivt_root(&f, &r(-1), &r(1), &only_two),
            Err(Error::UndefinedInstantiation)
        ));
        // Never brackets: x^2 + 1 + 1/w is positive on any interval.
        let g = HyperPolynomial::from_coeffs(vec![
            &RFunc::one() + &rf(&[1], &[0, 1]),
            RFunc::zero(),
            RFunc::one(),
        ]);
        assert!(matches!(
            hyper_ivt_root(&g, &r(-1), &r(1), &GridSchedule::powers_of_two(4)),
            Err(Error::UndefinedInstantiation)
        ));
    }

    #[test]
    fn leveled_ivt_validates_inputs() {
        let f = lift(&[-2, 0, 1]);
        let s = GridSchedule::powers_of_two(3);
        assert!(matches!(
            hyper_ivt_root(&f, &r(2), &r(1), &s),
            Err(Error::DegenerateInterval)
        ));
        assert!(matches!(
            hyper_ivt_root(&HyperPolynomial::zero(), &r(0), &r(1), &s),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn defect_bound_is_the_scaled_derivative_bound() {
        // x^2 - (2 + 1/w) on [1, 2]: radius 4, derivative bound 2*4 = 8,
        // so the defect bound is 8/w.
        let f = HyperPolynomial::from_coeffs(vec![
            -(&RFunc::from_rational(&r(2)) + &rf(&[1], &[0, 1])),
            RFunc::zero(),
            RFunc::one(),
        ]);
        assert_eq!(defect_bound(&f, &r(1), &r(2)), rf(&[8], &[0, 1]));
    }
}
