use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::uvpoly::UVPolynomial;
use crate::{Error, Result};

/// Polynomial in one variable `t` over the rationals. Inside `E_str`
/// computations `t` stands for the product `uv`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPolynomial {
    terms: BTreeMap<u32, Rational>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, k: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// `t^k`
    pub fn t_pow(k: u32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// Builds `sum c_i t^i` from a dense coefficient list.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Rational>,
    {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as u32, c.into());
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of `t^k`; zero for negative or absent `k`.
    pub fn coeff(&self, k: i64) -> Rational {
        if k < 0 || k > u32::MAX as i64 {
            return Rational::zero();
        }
        self.terms.get(&(k as u32)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        // Horner over the sparse support, highest exponent first.
        let mut acc = Rational::zero();
        let mut prev: Option<u32> = None;
        for (&k, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= pow(t, p - k);
            }
            acc += c;
            prev = Some(k);
        }
        if let Some(p) = prev {
            acc *= pow(t, p);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiplies by `t^k - 1` without a general product.
    pub fn mul_t_binomial(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e + k, c.clone());
            out.add_term(e, -c.clone());
        }
        out
    }

    /// Long division; returns `(quotient, remainder)` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let (dlead_exp, dlead) = match divisor.terms.iter().next_back() {
            Some((k, c)) => (*k, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&k, c)) = rem.terms.iter().next_back() {
            if k < dlead_exp {
                break;
            }
            let q = c / &dlead;
            let shift = k - dlead_exp;
            for (&e, dc) in &divisor.terms {
                rem.add_term(e + shift, -(&q * dc));
            }
            quot.add_term(shift, q);
        }
        Ok((quot, rem))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Substitutes `t = uv`.
    pub fn to_uv(&self) -> UVPolynomial {
        let mut out = UVPolynomial::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, k, c.clone());
        }
        out
    }
}

pub(crate) fn pow(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

impl Add for &TPolynomial {
    type Output = TPolynomial;
    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;
    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;
    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = TPolynomial::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &TPolynomial {
    type Output = TPolynomial;
    fn neg(self) -> TPolynomial {
        TPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TPolynomial {
            type Output = TPolynomial;
            fn $m(self, rhs: TPolynomial) -> TPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Highest power first, e.g. `t^4 + 4*t^3 + 6*t^2 + 4*t + 1`.
impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&k, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let var = match k {
                0 => None,
                1 => Some(alloc::string::String::from("t")),
                _ => Some(alloc::format!("t^{k}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}
