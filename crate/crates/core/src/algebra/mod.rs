//! Exact arithmetic: big rationals, sparse multivariate polynomials in the
//! spectral parameters `x_i, y_i, a_j, b_j`, and rational functions.

pub mod linalg;
mod monomial;
mod parse;
mod point;
mod polynomial;
mod rational_function;
mod ring;
mod var;

pub use monomial::Monomial;
pub use num_rational::BigRational;
pub use point::{format_rational, parse_rational, Point, PointSampler};
pub use polynomial::Polynomial;
pub use rational_function::RationalFunction;
pub use ring::{rat, Field, Ring};
pub use var::{Family, VarId};

/// Shorthand constructors used throughout tests and examples.
pub fn x(i: u32) -> Polynomial {
    Polynomial::var(VarId::x(i))
}

pub fn y(i: u32) -> Polynomial {
    Polynomial::var(VarId::y(i))
}

pub fn a(j: u32) -> Polynomial {
    Polynomial::var(VarId::a(j))
}

pub fn b(j: u32) -> Polynomial {
    Polynomial::var(VarId::b(j))
}
