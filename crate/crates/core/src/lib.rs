//! Exact arithmetic in a computable non-Archimedean extension of the
//! rationals, plus the polynomial root machinery it supports.
//!
//! The crate provides two concrete models of the extension — sequences of
//! rationals modulo eventual behavior ([`HyperSeq`]) and the rational
//! function field ordered at infinity ([`RFunc`]) — together with exact
//! infinitesimal classification and standard parts. On the polynomial
//! side it offers Sturm-chain root counting, grid-refinement root
//! isolation, real algebraic numbers with a decidable order, square roots
//! and odd-degree roots, cut classification, and an intermediate value
//! theorem for polynomials whose coefficients themselves carry
//! infinitesimal perturbations.
//!
//! Everything is exact: no floating point is used anywhere, and every
//! operation either returns a correct answer or a descriptive [`Error`].

pub mod algebraic;
pub mod error;
pub mod field;
pub mod hyperpoly;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod rfunc;
pub mod roots;
pub mod ultrapower;

pub use algebraic::{
    cut_classify, isolate_all_roots, odd_degree_root, odd_degree_root_with, real_sqrt,
    real_sqrt_with, CutKind, RealAlgebraic,
};
pub use error::{Error, Result};
pub use field::{Classification, Field};
pub use hyperpoly::{
    hyper_ivt_root, microcontinuity_check, star_eval, star_values_close, GridSchedule,
    HyperIvtOutcome, HyperPolynomial, LevelOutcome, LevelResult,
};
pub use parse::{
    parse_element, parse_hyper_poly, parse_poly, parse_rational, parse_rfunc, parse_seq, Element,
};
pub use poly::Polynomial;
pub use rational::Rational;
pub use rfunc::RFunc;
pub use roots::{
    cauchy_bound, default_width, ivt_grid_root, ivt_grid_root_with, sturm_chain, sturm_count,
    IntervalKind, IsolatingInterval,
};
pub use ultrapower::{HyperSeq, SeqExpr};
