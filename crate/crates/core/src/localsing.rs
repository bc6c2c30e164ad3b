//! Local invariants of `A(n, l, r)`: Milnor algebra, link Hodge numbers, the
//! E-polynomial of the punctured germ, and Hodge data of Fermat hypersurfaces.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::combinat::{eulerian_closed, kronecker, AbcContext};
use crate::error::Error;
use crate::exactnum::{Rational, TPolynomial, UVPolynomial};
use crate::Result;

/// `x_1^(n+1) + x_2^l + ... + x_(r+1)^l`, an isolated singularity of an
/// `r`-dimensional hypersurface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityType {
    r: u32,
    n: u32,
    ell: u32,
}

impl SingularityType {
    pub fn new(r: u32, n: u32, ell: u32) -> Result<Self> {
        if r >= ell && ell >= 2 && n + 1 >= ell {
            Ok(Self { r, n, ell })
        } else {
            Err(Error::InvalidSingularity { r, n, ell })
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn ctx(&self) -> AbcContext {
        AbcContext::new(self.r, self.n, self.ell).expect("validated on construction")
    }

    pub fn weights(&self) -> WeightSystem {
        WeightSystem::of(self)
    }

    pub fn d(&self) -> u32 {
        self.weights().degree()
    }
}

impl core::fmt::Display for SingularityType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "A_{{{},{}}}^({})", self.n, self.ell, self.r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    degree: u32,
    weights: Vec<u32>,
}

impl WeightSystem {
    pub fn new(degree: u32, weights: Vec<u32>) -> Result<Self> {
        if degree == 0 || weights.is_empty() || weights.iter().any(|&w| w == 0 || w >= degree) {
            return Err(Error::NotQuasihomogeneous);
        }
        Ok(Self { degree, weights })
    }

    /// `d = lcm(n+1, l)`, weights `(d/(n+1), d/l, ..., d/l)`.
    pub fn of(s: &SingularityType) -> Self {
        let d = num_integer::lcm(s.n + 1, s.ell);
        let mut weights = Vec::with_capacity(s.r as usize + 1);
        weights.push(d / (s.n + 1));
        weights.extend(core::iter::repeat_n(d / s.ell, s.r as usize));
        Self { degree: d, weights }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_sum(&self) -> u32 {
        self.weights.iter().sum()
    }
}

fn one_minus_t_pow(k: u32) -> TPolynomial {
    &TPolynomial::one() - &TPolynomial::t_pow(k)
}

/// `prod (1 - t^(d - w_i)) / prod (1 - t^(w_i))`, by exact long division.
pub fn poincare_series(ws: &WeightSystem) -> Result<TPolynomial> {
    let mut num = TPolynomial::one();
    let mut den = TPolynomial::one();
    for &w in &ws.weights {
        num = &num * &one_minus_t_pow(ws.degree - w);
        den = &den * &one_minus_t_pow(w);
    }
    let (q, rem) = num.div_rem(&den)?;
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotQuasihomogeneous)
    }
}

/// `(1 + sum_{j=1}^{n-1} t^(j d/(n+1))) * (1 + sum_{k=1}^{l-2} t^(k d/l))^r`
pub fn poincare_series_a(s: &SingularityType) -> TPolynomial {
    let d = s.d();
    let first = (0..s.n).fold(TPolynomial::zero(), |acc, j| &acc + &TPolynomial::t_pow(j * d / (s.n + 1)));
    let second = (0..s.ell - 1).fold(TPolynomial::zero(), |acc, k| &acc + &TPolynomial::t_pow(k * d / s.ell));
    &first * &second.pow(s.r)
}

/// `n (l - 1)^r`
pub fn milnor_number(s: &SingularityType) -> BigInt {
    BigInt::from(s.n) * Pow::pow(BigInt::from(s.ell - 1), s.r)
}

/// `dim M(f)_k`, the coefficient of `t^k`.
pub fn graded_dim(series: &TPolynomial, k: i64) -> BigInt {
    series.coeff(k).to_integer()
}

fn check_p(s: &SingularityType, p: i64) -> Result<()> {
    if (0..i64::from(s.r)).contains(&p) {
        Ok(())
    } else {
        Err(Error::out_of_range("p", p, format!("0..={}", s.r - 1)))
    }
}

/// `h^{p, r-1-p}` of the middle cohomology of the link, as
/// `c(d (p + 1 - 1/(n+1) - r/l))`.
pub fn link_hodge(s: &SingularityType, p: i64) -> Result<BigInt> {
    check_p(s, p)?;
    let d = BigInt::from(s.d());
    let k = Rational::from_integer(&d * (p + 1))
        - Rational::new(d.clone(), BigInt::from(s.n + 1))
        - Rational::new(d * s.r, BigInt::from(s.ell));
    Ok(s.ctx().c(&k))
}

/// The same number read off the Milnor algebra: `dim M(f)_{(p+1) d - sum w}`.
pub fn link_hodge_from_series(s: &SingularityType, p: i64) -> Result<BigInt> {
    check_p(s, p)?;
    let ws = s.weights();
    let k = (p + 1) * i64::from(ws.degree()) - i64::from(ws.weight_sum());
    Ok(graded_dim(&poincare_series_a(s), k))
}

/// `E(X - {0}; u, v) = (uv - 1) sum_{p=0}^{r-1} ((uv)^p + (-1)^(r-1) h^{p,r-1-p} u^p v^(r-1-p))`
pub fn e_punctured(s: &SingularityType) -> UVPolynomial {
    let sign: i64 = if s.r % 2 == 1 { 1 } else { -1 };
    let mut inner = UVPolynomial::zero();
    for p in 0..s.r {
        inner.add_term(p, p, Rational::one());
        let h = link_hodge(s, i64::from(p)).expect("p in range");
        inner.add_term(p, s.r - 1 - p, Rational::from_integer(h * sign));
    }
    inner.mul_t_binomial(1)
}

/// The Fermat hypersurface `z_0^l + ... + z_(dim+1)^l = 0` in `P^(dim+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FermatSpec {
    ell: u32,
    dim: u32,
}

impl FermatSpec {
    pub fn new(ell: u32, dim: u32) -> Result<Self> {
        if ell < 2 {
            return Err(Error::out_of_range("ell", i64::from(ell), ">= 2"));
        }
        Ok(Self { ell, dim })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Primitive middle Hodge number `S(dim+1, p+1 | l-1, p)`.
    fn primitive(&self, p: u32) -> BigInt {
        eulerian_closed(self.dim + 1, i64::from(p) + 1, self.ell - 1, p)
    }
}

pub fn fermat_hodge(f: &FermatSpec, p: i64, q: i64) -> Result<BigInt> {
    let range = format!("0..={}", f.dim);
    for (what, x) in [("p", p), ("q", q)] {
        if !(0..=i64::from(f.dim)).contains(&x) {
            return Err(Error::out_of_range(what, x, range));
        }
    }
    Ok(if p + q == i64::from(f.dim) {
        f.primitive(p as u32) + kronecker(2 * p, i64::from(f.dim))
    } else {
        BigInt::from(kronecker(p, q))
    })
}

/// `sum_p u^p (v^p + (-1)^dim S(dim+1, p+1 | l-1, p) v^(dim-p))`
pub fn fermat_e(f: &FermatSpec) -> UVPolynomial {
    let sign: i64 = if f.dim.is_multiple_of(2) { 1 } else { -1 };
    let mut e = UVPolynomial::zero();
    for p in 0..=f.dim {
        e.add_term(p, p, Rational::one());
        e.add_term(p, f.dim - p, Rational::from_integer(f.primitive(p) * sign));
    }
    e
}

/// `((1 - l)^(r+1) - 1)/l + r + 1` with `r = dim + 1`.
pub fn fermat_euler(f: &FermatSpec) -> BigInt {
    let r = f.dim + 1;
    let ell = BigInt::from(f.ell);
    let top: BigInt = Pow::pow(BigInt::one() - &ell, r + 1) - 1;
    debug_assert!((&top % &ell).is_zero());
    top / ell + r + 1
}
