//! Shared contract for the exact ordered fields in this crate.

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;

/// An exactly computable ordered field.
///
/// `Ord` must be the field order: translation-invariant and compatible with
/// multiplication by positive elements. Division by zero panics; fallible
/// call sites check first.
pub trait Field:
    Clone + Ord + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Div<Output = Self>
{
    /// Exact embedding of a rational constant.
    fn from_rational(q: &Rational) -> Self;

    /// `(a + b) / 2`; strictly between `a` and `b` whenever they differ.
    fn midpoint(a: &Self, b: &Self) -> Self {
        let two = Self::one() + Self::one();
        (a.clone() + b.clone()) / two
    }

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Field for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Magnitude class of a field element relative to the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Exactly zero.
    Zero,
    /// Nonzero, yet smaller in absolute value than every positive rational.
    InfinitesimalNonzero,
    /// Squeezed between two positive rationals in absolute value.
    Appreciable,
    /// Larger in absolute value than every rational.
    Infinite,
}

impl Classification {
    /// Zero and the nonzero infinitesimals together form the ideal of
    /// elements with standard part 0.
    pub fn is_infinitesimal(self) -> bool {
        matches!(
            self,
            Classification::Zero | Classification::InfinitesimalNonzero
        )
    }

    /// Everything except the infinite elements has a standard part.
    pub fn is_limited(self) -> bool {
        self != Classification::Infinite
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Zero => "zero",
            Classification::InfinitesimalNonzero => "infinitesimal (nonzero)",
            Classification::Appreciable => "appreciable",
            Classification::Infinite => "infinite",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_sits_strictly_between_rationals() {
        let a = Rational::new(1, 3).unwrap();
        let b = Rational::new(1, 2).unwrap();
        let m = Field::midpoint(&a, &b);
        assert!(a < m && m < b);
        assert_eq!(m, Rational::new(5, 12).unwrap());
    }

    #[test]
    fn classification_predicates() {
        assert!(Classification::Zero.is_infinitesimal());
        assert!(Classification::InfinitesimalNonzero.is_infinitesimal());
        assert!(!Classification::Appreciable.is_infinitesimal());
        assert!(Classification::Appreciable.is_limited());
        assert!(!Classification::Infinite.is_limited());
    }
}
