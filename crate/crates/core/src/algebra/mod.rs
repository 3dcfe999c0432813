//! Exact polynomial algebra: rationals, polynomials, the Hibi binomials of a
//! state lattice, the monomial parameterization and Gröbner verification.

pub mod groebner;
pub mod hibi;
pub mod poly;
pub mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

pub use groebner::{buchberger_check, reduce, s_polynomial, MonomialOrder, OrderKind};
pub use hibi::{
    evaluate_at_distribution, hibi_generators, monomial_map, pullback_to_p, substitute,
    verify_vanishing, BinomialGenerator, MonomialMap,
};
pub use poly::{parse_polynomial, Monomial, Polynomial, VariableId};
pub use rational::{format_rational, parse_rational, rat, Rational};

/// Coefficient types the probability models can be evaluated over: exact
/// rationals for numbers, [`Polynomial`] for symbolic parameters.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}
