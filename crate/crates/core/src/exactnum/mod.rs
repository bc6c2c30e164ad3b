//! Exact arithmetic: rationals, sparse polynomials in `u, v`, polynomials in
//! `t = uv`, and the structured rational expressions that carry `E_str`.

mod expr;
mod rational;
mod tpoly;
mod uvpoly;

pub use expr::{StringyExpression, StringyTerm};
pub use rational::{checked_div, int, rat, rat_arith, reduced_denominator, ArithOp, Rational};
pub use tpoly::TPolynomial;
pub use uvpoly::UVPolynomial;
