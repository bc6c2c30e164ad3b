use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::tpoly::pow;
use super::uvpoly::UVPolynomial;
use crate::{Error, Result};

/// One summand `numerator(u, v) / prod_k ((uv)^k - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringyTerm {
    numerator: UVPolynomial,
    /// Sorted multiset of exponents `k >= 1`.
    factors: Vec<u32>,
}

impl StringyTerm {
    pub fn new(numerator: UVPolynomial, factors: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut factors: Vec<u32> = factors.into_iter().collect();
        if factors.contains(&0) {
            return Err(Error::ZeroFactor);
        }
        factors.sort_unstable();
        Ok(Self { numerator, factors })
    }

    /// The common `E_str` building block
    /// `residual * prod_k (uv - 1) / ((uv)^k - 1)`.
    pub fn weighted(residual: &UVPolynomial, factors: &[u32]) -> Result<Self> {
        let mut numerator = residual.clone();
        for _ in factors {
            numerator = numerator.mul_t_binomial(1);
        }
        Self::new(numerator, factors.iter().copied())
    }

    pub fn polynomial(p: UVPolynomial) -> Self {
        Self {
            numerator: p,
            factors: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &UVPolynomial {
        &self.numerator
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Result<Rational> {
        let t = u * v;
        let mut den = Rational::one();
        for &k in &self.factors {
            let f = pow(&t, k) - Rational::one();
            if f.is_zero() {
                return Err(Error::Pole { k });
            }
            den *= f;
        }
        Ok(self.numerator.eval(u, v) / den)
    }

    /// `R` with `numerator = R * (uv - 1)^#factors`, if it exists.
    pub fn residual(&self) -> Option<UVPolynomial> {
        let mut r = self.numerator.clone();
        for _ in &self.factors {
            r = r.div_t_binomial(1)?;
        }
        Some(r)
    }
}

/// Finite sum of [`StringyTerm`]s. Addition concatenates; equality of the
/// underlying rational functions is [`StringyExpression::equals`], not `==`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StringyExpression {
    terms: Vec<StringyTerm>,
}

impl StringyExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_polynomial(p: UVPolynomial) -> Self {
        Self {
            terms: alloc::vec![StringyTerm::polynomial(p)],
        }
    }

    pub fn from_terms(terms: Vec<StringyTerm>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[StringyTerm] {
        &self.terms
    }

    pub fn push(&mut self, term: StringyTerm) {
        self.terms.push(term);
    }

    /// Adds `residual * prod_k (uv - 1) / ((uv)^k - 1)` unless the residual
    /// is zero.
    pub fn push_weighted(&mut self, residual: &UVPolynomial, factors: &[u32]) -> Result<()> {
        if !residual.is_zero() {
            self.terms.push(StringyTerm::weighted(residual, factors)?);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| StringyTerm {
                    numerator: t.numerator.scale(c),
                    factors: t.factors.clone(),
                })
                .collect(),
        }
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for t in &self.terms {
            acc += t.eval(u, v)?;
        }
        Ok(acc)
    }

    /// Least common multiset of all term denominators.
    pub fn common_factors(&self) -> Vec<u32> {
        merge_factors(core::iter::once(self))
    }

    /// Numerator over the denominator `prod_{k in factors} ((uv)^k - 1)`;
    /// `factors` must contain every term's factors as a sub-multiset.
    fn numerator_over(&self, factors: &[u32]) -> UVPolynomial {
        let mut total = UVPolynomial::zero();
        for t in &self.terms {
            let mut n = t.numerator.clone();
            for k in multiset_difference(factors, &t.factors) {
                n = n.mul_t_binomial(k);
            }
            total += &n;
        }
        total
    }

    /// Whether `self - other` is identically zero as a rational function,
    /// decided by clearing to a common denominator and comparing numerators.
    pub fn equals(&self, other: &Self) -> bool {
        let factors = merge_factors([self, other]);
        self.numerator_over(&factors) == other.numerator_over(&factors)
    }

    /// Whether the expression is identically equal to `p`.
    pub fn equals_polynomial(&self, p: &UVPolynomial) -> bool {
        self.equals(&Self::from_polynomial(p.clone()))
    }

    /// Limit as `u, v -> 1`, term by term: a term
    /// `R * (uv - 1)^j / prod_{i<=j} ((uv)^{k_i} - 1)` tends to `R(1,1) / prod k_i`.
    /// Terms whose numerator does not carry one `(uv - 1)` per factor are
    /// rejected.
    pub fn limit_at_one(&self) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (index, t) in self.terms.iter().enumerate() {
            let r = t.residual().ok_or(Error::NotStructured { index })?;
            let weight: u64 = t.factors.iter().map(|&k| k as u64).product();
            acc += r.eval_at_one() / Rational::from_integer(weight.into());
        }
        Ok(acc)
    }

    /// Single fraction `N / prod ((uv)^k - 1)` with every factor that divides
    /// `N` cancelled.
    pub fn simplify(&self) -> StringyTerm {
        let factors = self.common_factors();
        let mut numerator = self.numerator_over(&factors);
        let mut kept = Vec::new();
        // Largest first, so a factor is cancelled whole before its divisors.
        for &k in factors.iter().rev() {
            match numerator.div_t_binomial(k) {
                Some(q) => numerator = q,
                None => kept.push(k),
            }
        }
        kept.sort_unstable();
        StringyTerm {
            numerator,
            factors: kept,
        }
    }

    /// The polynomial this expression equals, if every denominator cancels.
    pub fn to_polynomial(&self) -> Option<UVPolynomial> {
        let s = self.simplify();
        if s.factors.is_empty() || s.numerator.is_zero() {
            Some(s.numerator)
        } else {
            None
        }
    }
}

fn merge_factors<'a>(exprs: impl IntoIterator<Item = &'a StringyExpression>) -> Vec<u32> {
    let mut need: BTreeMap<u32, usize> = BTreeMap::new();
    for e in exprs {
        for t in &e.terms {
            let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
            for &k in &t.factors {
                *counts.entry(k).or_default() += 1;
            }
            for (k, c) in counts {
                let slot = need.entry(k).or_default();
                *slot = (*slot).max(c);
            }
        }
    }
    need.into_iter()
        .flat_map(|(k, c)| core::iter::repeat_n(k, c))
        .collect()
}

/// `whole \ part` for sorted multisets with `part` contained in `whole`.
fn multiset_difference(whole: &[u32], part: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(whole.len() - part.len());
    let mut j = 0;
    for &k in whole {
        if j < part.len() && part[j] == k {
            j += 1;
        } else {
            out.push(k);
        }
    }
    debug_assert_eq!(j, part.len());
    out
}

impl Add for StringyExpression {
    type Output = StringyExpression;
    fn add(mut self, rhs: StringyExpression) -> StringyExpression {
        self.terms.extend(rhs.terms);
        self
    }
}

impl Add<&StringyExpression> for &StringyExpression {
    type Output = StringyExpression;
    fn add(self, rhs: &StringyExpression) -> StringyExpression {
        self.clone() + rhs.clone()
    }
}

impl From<UVPolynomial> for StringyExpression {
    fn from(p: UVPolynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl fmt::Display for StringyTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / (", self.numerator)?;
        for (i, k) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *k == 1 {
                f.write_str("(u*v - 1)")?;
            } else {
                write!(f, "(u^{k}*v^{k} - 1)")?;
            }
        }
        f.write_str(")")
    }
}

/// Term-by-term rendering joined by ` + `.
impl fmt::Display for StringyExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
