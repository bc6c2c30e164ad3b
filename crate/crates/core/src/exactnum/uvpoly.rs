use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::tpoly::{pow, TPolynomial};

/// Sparse polynomial in `u, v` with rational coefficients. Zero coefficients
/// are never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UVPolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl UVPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * u^p * v^q`
    pub fn monomial(c: Rational, p: u32, q: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c);
        out
    }

    /// `(uv)^k`
    pub fn t_pow(k: u32) -> Self {
        Self::monomial(Rational::one(), k, k)
    }

    /// `(uv)^k - 1`
    pub fn t_binomial(k: u32) -> Self {
        let mut out = Self::t_pow(k);
        out.add_term(0, 0, -Rational::one());
        out
    }

    /// `sum_{p=0}^{n-1} (uv)^p`, the E-polynomial of projective `(n-1)`-space.
    pub fn t_geometric(n: u32) -> Self {
        let mut out = Self::zero();
        for p in 0..n {
            out.add_term(p, p, Rational::one());
        }
        out
    }

    pub fn add_term(&mut self, p: u32, q: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: u32, q: u32) -> Rational {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending `(p, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Terms in canonical rendering order: `(p + q, p)` descending.
    pub fn canonical_terms(&self) -> Vec<((u32, u32), &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|((p1, q1), _), ((p2, q2), _)| (p2 + q2, p2).cmp(&(p1 + q1, p1)));
        v
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|((p, q), c)| c * pow(u, *p) * pow(v, *q))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Value at `u = v = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, b| a + b)
    }

    /// Multiplies by `(uv)^k - 1`.
    pub fn mul_t_binomial(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (&(p, q), c) in &self.terms {
            out.add_term(p + k, q + k, c.clone());
            out.add_term(p, q, -c.clone());
        }
        out
    }

    /// Exact quotient by `(uv)^k - 1`, or `None` if it does not divide.
    ///
    /// Multiplication by a polynomial in `uv` preserves `p - q`, so the
    /// division splits into independent univariate divisions, one per
    /// diagonal `p - q = const`.
    pub fn div_t_binomial(&self, k: u32) -> Option<Self> {
        let divisor = TPolynomial::t_pow(k) - TPolynomial::one();
        let mut out = Self::zero();
        for (shift, series) in self.diagonals() {
            let q = series.div_exact(&divisor)?;
            out += &from_diagonal(shift, &q);
        }
        Some(out)
    }

    /// Splits into `sum_delta u^max(delta,0) v^max(-delta,0) * P_delta(uv)`.
    pub fn diagonals(&self) -> BTreeMap<i64, TPolynomial> {
        let mut out: BTreeMap<i64, TPolynomial> = BTreeMap::new();
        for (&(p, q), c) in &self.terms {
            let shift = p as i64 - q as i64;
            out.entry(shift).or_default().add_term(p.min(q), c.clone());
        }
        out
    }
}

fn from_diagonal(shift: i64, series: &TPolynomial) -> UVPolynomial {
    let (du, dv) = if shift >= 0 {
        (shift as u32, 0)
    } else {
        (0, (-shift) as u32)
    };
    let mut out = UVPolynomial::zero();
    for (k, c) in series.terms() {
        out.add_term(k + du, k + dv, c.clone());
    }
    out
}

impl From<Rational> for UVPolynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&UVPolynomial> for UVPolynomial {
    fn add_assign(&mut self, rhs: &UVPolynomial) {
        for (&(p, q), c) in &rhs.terms {
            self.add_term(p, q, c.clone());
        }
    }
}

impl SubAssign<&UVPolynomial> for UVPolynomial {
    fn sub_assign(&mut self, rhs: &UVPolynomial) {
        for (&(p, q), c) in &rhs.terms {
            self.add_term(p, q, -c.clone());
        }
    }
}

impl Add for &UVPolynomial {
    type Output = UVPolynomial;
    fn add(self, rhs: &UVPolynomial) -> UVPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &UVPolynomial {
    type Output = UVPolynomial;
    fn sub(self, rhs: &UVPolynomial) -> UVPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &UVPolynomial {
    type Output = UVPolynomial;
    fn mul(self, rhs: &UVPolynomial) -> UVPolynomial {
        let mut out = UVPolynomial::zero();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &rhs.terms {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &UVPolynomial {
    type Output = UVPolynomial;
    fn neg(self) -> UVPolynomial {
        UVPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Neg for UVPolynomial {
    type Output = UVPolynomial;
    fn neg(self) -> UVPolynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UVPolynomial {
            type Output = UVPolynomial;
            fn $m(self, rhs: UVPolynomial) -> UVPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UVPolynomial> for UVPolynomial {
            type Output = UVPolynomial;
            fn $m(self, rhs: &UVPolynomial) -> UVPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn monomial_text(p: u32, q: u32) -> Option<String> {
    let part = |var: &str, e: u32| match e {
        0 => None,
        1 => Some(String::from(var)),
        _ => Some(alloc::format!("{var}^{e}")),
    };
    match (part("u", p), part("v", q)) {
        (None, None) => None,
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (Some(a), Some(b)) => Some(alloc::format!("{a}*{b}")),
    }
}

/// Canonical rendering: terms sorted by `(p + q, p)` descending, each as
/// `c*u^p*v^q` with unit coefficients and zero exponents elided, e.g.
/// `u^3*v^3 + 7*u^2*v^2 + u*v`.
impl fmt::Display for UVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.canonical_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((p, q), c)) in terms.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mag = c.abs();
            match monomial_text(p, q) {
                None => write!(f, "{mag}")?,
                Some(m) if mag.is_one() => f.write_str(&m)?,
                Some(m) => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}
