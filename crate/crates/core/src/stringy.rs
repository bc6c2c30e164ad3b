//! The exceptional divisor chain of the canonical resolution of `A(n, l, r)`,
//! the string-theoretic E-function built from it, its closed form, `e_str`
//! and the string-theoretic index.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::exactnum::{reduced_denominator, Rational, StringyExpression, UVPolynomial};
use crate::localsing::{e_punctured, fermat_e, fermat_euler, FermatSpec, SingularityType};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivisorKind {
    FermatHypersurface { ell: u32, dim: u32 },
    ProjectiveSpace { dim: u32 },
    /// `P(O + O(1))` over the Fermat hypersurface of dimension `base_dim`.
    P1BundleOverFermat { ell: u32, base_dim: u32 },
}

impl DivisorKind {
    pub fn dim(&self) -> u32 {
        match *self {
            DivisorKind::FermatHypersurface { dim, .. } | DivisorKind::ProjectiveSpace { dim } => dim,
            DivisorKind::P1BundleOverFermat { base_dim, .. } => base_dim + 1,
        }
    }

    pub fn e_polynomial(&self) -> UVPolynomial {
        match *self {
            DivisorKind::FermatHypersurface { ell, dim } => fermat(ell, dim),
            DivisorKind::ProjectiveSpace { dim } => UVPolynomial::t_geometric(dim + 1),
            DivisorKind::P1BundleOverFermat { ell, base_dim } => {
                fermat(ell, base_dim) * UVPolynomial::t_geometric(2)
            }
        }
    }
}

fn fermat(ell: u32, dim: u32) -> UVPolynomial {
    fermat_e(&FermatSpec::new(ell, dim).expect("ell >= 2"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExceptionalDivisor {
    pub kind: DivisorKind,
    /// Coefficient of the divisor in `K_resolution - pullback(K_X)`.
    pub discrepancy: u32,
}

/// A chain `D_1, ..., D_m`: consecutive divisors meet along the Fermat
/// hypersurface `junction`, all other pairs are disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionModel {
    divisors: Vec<ExceptionalDivisor>,
    junction: FermatSpec,
}

impl ResolutionModel {
    pub fn m(&self) -> usize {
        self.divisors.len()
    }

    pub fn divisors(&self) -> &[ExceptionalDivisor] {
        &self.divisors
    }

    pub fn junction(&self) -> FermatSpec {
        self.junction
    }

    /// Nonempty strata in the chain: the singletons and the adjacent pairs,
    /// as 1-based index sets.
    pub fn strata(&self) -> Vec<Vec<usize>> {
        let m = self.m();
        let mut out: Vec<Vec<usize>> = (1..=m).map(|i| vec![i]).collect();
        out.extend((1..m).map(|i| vec![i, i + 1]));
        out
    }
}

pub fn m_of(s: &SingularityType) -> Result<u32> {
    let (n, ell) = (s.n(), s.ell());
    if (n + 1) % ell == 0 {
        Ok((n + 1) / ell)
    } else if n % ell == 0 {
        Ok(n / ell + 1)
    } else {
        Err(Error::OutOfFamily { n, ell })
    }
}

pub fn resolution_model(s: &SingularityType) -> Result<ResolutionModel> {
    let m = m_of(s)?;
    let (r, ell) = (s.r(), s.ell());
    let gap = r - ell;
    let mut divisors: Vec<ExceptionalDivisor> = (1..m)
        .map(|i| ExceptionalDivisor {
            kind: DivisorKind::P1BundleOverFermat { ell, base_dim: r - 2 },
            discrepancy: i * gap,
        })
        .collect();
    divisors.push(if (s.n() + 1).is_multiple_of(ell) {
        ExceptionalDivisor {
            kind: DivisorKind::FermatHypersurface { ell, dim: r - 1 },
            discrepancy: m * gap,
        }
    } else {
        ExceptionalDivisor {
            kind: DivisorKind::ProjectiveSpace { dim: r - 1 },
            discrepancy: (m - 1) * ell * gap + r - 1,
        }
    });
    Ok(ResolutionModel {
        divisors,
        junction: FermatSpec::new(ell, r - 2)?,
    })
}

/// E-polynomial of the open stratum `D_J^o` for a 1-based index set `J`.
/// Only singletons and adjacent pairs are nonempty.
pub fn stratum_e(model: &ResolutionModel, j: &[usize]) -> UVPolynomial {
    let m = model.m();
    let mut j = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.is_empty() || j[0] == 0 || j[j.len() - 1] > m {
        return UVPolynomial::zero();
    }
    let junction = fermat_e(&model.junction);
    match j[..] {
        [i] => {
            let neighbours = usize::from(i > 1) + usize::from(i < m);
            let mut e = model.divisors[i - 1].kind.e_polynomial();
            for _ in 0..neighbours {
                e -= &junction;
            }
            e
        }
        [i, k] if k == i + 1 => junction,
        _ => UVPolynomial::zero(),
    }
}

/// `E(X - {0}) + sum_J E(D_J^o) prod_{j in J} (uv - 1)/((uv)^(a_j + 1) - 1)`
pub fn assemble_estr(s: &SingularityType) -> Result<StringyExpression> {
    let model = resolution_model(s)?;
    let mut e = StringyExpression::from_polynomial(e_punctured(s));
    for j in model.strata() {
        let factors: Vec<u32> = j.iter().map(|&i| model.divisors[i - 1].discrepancy + 1).collect();
        e.push_weighted(&stratum_e(&model, &j), &factors)?;
    }
    Ok(e)
}

/// The closed formula, one row per divisibility case. The last divisor's
/// junction correction enters as `-(uv - 1) E(Y) / ((uv)^K - 1)`.
pub fn closed_estr(s: &SingularityType) -> Result<StringyExpression> {
    let m = m_of(s)?;
    let (r, ell) = (s.r(), s.ell());
    let g = r - ell;
    let y_low = fermat(ell, r - 2);
    let y_high = fermat(ell, r - 1);
    let tm1 = UVPolynomial::t_binomial(1);
    let uv = UVPolynomial::t_pow(1);
    let y_low_tm1 = &y_low * &tm1;
    let k = |i: u32| i * g + 1;

    let mut e = StringyExpression::from_polynomial(e_punctured(s));
    if (s.n() + 1).is_multiple_of(ell) {
        if m > 1 {
            e.push_weighted(&(&y_low * &uv), &[k(1)])?;
            for i in 2..m {
                e.push_weighted(&y_low_tm1, &[k(i)])?;
            }
            e.push_weighted(&-&y_low, &[k(m)])?;
            for i in 1..m {
                e.push_weighted(&y_low, &[k(i), k(i + 1)])?;
            }
        }
        e.push_weighted(&y_high, &[k(m)])?;
    } else {
        let top = (m - 1) * ell * g + r;
        e.push_weighted(&UVPolynomial::t_geometric(r), &[top])?;
        e.push_weighted(&(&y_low * &uv), &[k(1)])?;
        for i in 2..m {
            e.push_weighted(&y_low_tm1, &[k(i)])?;
        }
        e.push_weighted(&-&y_low, &[top])?;
        for i in 1..m - 1 {
            e.push_weighted(&y_low, &[k(i), k(i + 1)])?;
        }
        e.push_weighted(&y_low, &[k(m - 1), top])?;
    }
    Ok(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EulerMethod {
    /// The closed per-case formulas.
    Closed,
    /// `sum_J e(D_J^o) prod 1/(a_j + 1)` over the resolution strata.
    Structural,
}

pub fn estr_euler(s: &SingularityType, method: EulerMethod) -> Result<Rational> {
    match method {
        EulerMethod::Closed => closed_euler(s),
        EulerMethod::Structural => structural_euler(s),
    }
}

fn closed_euler(s: &SingularityType) -> Result<Rational> {
    let m = BigInt::from(m_of(s)?);
    let (r, ell) = (s.r(), s.ell());
    let g = BigInt::from(r - ell);
    let e_low = fermat_euler(&FermatSpec::new(ell, r - 2)?);
    let frac = |a: BigInt, b: BigInt| Rational::new(a, b);
    Ok(if (s.n() + 1).is_multiple_of(ell) {
        let e_high = fermat_euler(&FermatSpec::new(ell, r - 1)?);
        let den: BigInt = &m * &g + 1;
        frac((&m - 1) * e_low, den.clone()) + frac(e_high, den)
    } else {
        let den: BigInt = (&m - 1) * ell * &g + r;
        frac(BigInt::from(r), den.clone()) + frac((&m - 1) * ell * e_low, den)
    })
}

fn structural_euler(s: &SingularityType) -> Result<Rational> {
    let model = resolution_model(s)?;
    let mut acc = Rational::zero();
    for j in model.strata() {
        let weight: BigInt = j
            .iter()
            .map(|&i| BigInt::from(model.divisors[i - 1].discrepancy + 1))
            .product();
        acc += stratum_e(&model, &j).eval_at_one() / Rational::from_integer(weight);
    }
    Ok(acc)
}

/// `e_str` of `A(n, 2, r)` by the parity of `n` and `r`.
pub fn conjrem_estr(r: u32, n: u32) -> Result<Rational> {
    if r < 2 || n < 1 {
        return Err(Error::InvalidParameters(alloc::format!(
            "need r >= 2 and n >= 1, got r={r}, n={n}"
        )));
    }
    let (r, n) = (i64::from(r), i64::from(n));
    let (num, den) = match (n % 2 == 1, r % 2 == 1) {
        (true, true) => (n * (r - 1) + r + 3, n * (r - 2) + r),
        (true, false) => (r * (n + 1), (r - 2) * (n + 1) + 2),
        (false, true) => ((r - 1) * n + r, (r - 2) * n + r),
        (false, false) => (r * (n + 1), (r - 2) * n + r),
    };
    Ok(Rational::new(num.into(), den.into()))
}

pub fn ind_str(e: &Rational) -> BigInt {
    reduced_denominator(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringyResult {
    pub e_str: StringyExpression,
    pub euler_str: Rational,
    pub index_str: BigInt,
}

impl StringyResult {
    pub fn of(s: &SingularityType) -> Result<Self> {
        let e_str = assemble_estr(s)?;
        let euler_str = e_str.limit_at_one()?;
        let index_str = ind_str(&euler_str);
        Ok(Self {
            e_str,
            euler_str,
            index_str,
        })
    }
}

/// Singularities of the implemented family with `r <= r_max`, `n <= n_max`.
pub fn family_grid(r_min: u32, r_max: u32, n_max: u32) -> impl Iterator<Item = SingularityType> {
    (r_min..=r_max).flat_map(move |r| {
        (2..=r).flat_map(move |ell| {
            (1..=n_max).filter_map(move |n| {
                let s = SingularityType::new(r, n, ell).ok()?;
                m_of(&s).ok().map(|_| s)
            })
        })
    })
}
