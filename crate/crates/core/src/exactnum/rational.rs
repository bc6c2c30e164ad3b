use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

pub fn rat_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => return checked_div(a, b),
    })
}

/// Smallest `l >= 1` with `x` in `(1/l) Z`.
pub fn reduced_denominator(x: &Rational) -> BigInt {
    x.denom().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rat_arith(&rat(1, 2), &rat(1, 3), ArithOp::Add).unwrap(), rat(5, 6));
        assert_eq!(rat_arith(&rat(7, 5), &rat(0, 1), ArithOp::Mul).unwrap(), rat(0, 1));
        assert_eq!(rat_arith(&int(-200), &int(144), ArithOp::Add).unwrap(), int(-56));
        assert_eq!(rat_arith(&rat(3, 4), &rat(3, 8), ArithOp::Div).unwrap(), int(2));
        assert_eq!(rat_arith(&rat(3, 4), &rat(3, 4), ArithOp::Sub).unwrap(), int(0));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rat_arith(&int(1), &int(0), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn lowest_terms() {
        let x = rat(-14, -10);
        assert_eq!(x.numer(), &BigInt::from(7));
        assert_eq!(x.denom(), &BigInt::from(5));
        let y = rat(6, -4);
        assert_eq!(y.numer(), &BigInt::from(-3));
        assert_eq!(y.denom(), &BigInt::from(2));
        assert_eq!(reduced_denominator(&rat(14, 10)), BigInt::from(5));
        assert!(reduced_denominator(&int(9)).is_one());
    }
}
