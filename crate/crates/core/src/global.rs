//! Global invariants: complete intersections with prescribed `A(n, l, r)`
//! singularities, Goryunov's quartics, the Segre–Knörrer two-quadric family
//! and branched coverings of point arrangements.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::combinat::{binomial, binomial_i};
use crate::error::Error;
use crate::exactnum::{Rational, StringyExpression, UVPolynomial};
use crate::localsing::{milnor_number, SingularityType};
use crate::stringy::{estr_euler, EulerMethod};
use crate::Result;

/// `h_nu(d_1, ..., d_k)`: sum of all degree-`nu` monomials in the `d_j`.
pub fn complete_homogeneous(nu: u32, degrees: &[u32]) -> BigInt {
    let nu = nu as usize;
    let mut h = vec![BigInt::zero(); nu + 1];
    h[0] = BigInt::one();
    for &d in degrees {
        // multiply the series by 1/(1 - d x)
        for i in 1..=nu {
            let prev = h[i - 1].clone();
            h[i] += prev * d;
        }
    }
    h.swap_remove(nu)
}

/// Euler number of a smooth complete intersection of the given degrees in
/// `P^N`, from the top Chern class.
pub fn euler_smooth_ci(n_ambient: u32, degrees: &[u32]) -> Result<BigInt> {
    let r = ci_dim(n_ambient, degrees)?;
    let n1 = u64::from(n_ambient) + 1;
    let mut bracket = binomial(n1, u64::from(r));
    for nu in 1..=r {
        let term = binomial(n1, u64::from(r - nu)) * complete_homogeneous(nu, degrees);
        if nu % 2 == 0 {
            bracket += term;
        } else {
            bracket -= term;
        }
    }
    let prod: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    Ok(bracket * prod)
}

fn ci_dim(n_ambient: u32, degrees: &[u32]) -> Result<u32> {
    let codim = degrees.len() as i64;
    let r = i64::from(n_ambient) - codim;
    if r < 1 {
        return Err(Error::InvalidParameters(format!(
            "{} equations in P^{n_ambient} leave dimension {r} < 1",
            degrees.len()
        )));
    }
    if let Some(&d) = degrees.iter().find(|&&d| d == 0) {
        return Err(Error::out_of_range("degree", i64::from(d), ">= 1"));
    }
    Ok(r as u32)
}

/// A complete intersection of multidegree `degrees` in `P^N` whose only
/// singularities are the listed ones, each with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteIntersectionSpec {
    n_ambient: u32,
    degrees: Vec<u32>,
    singularities: Vec<(SingularityType, u64)>,
}

impl CompleteIntersectionSpec {
    pub fn new(
        n_ambient: u32,
        degrees: Vec<u32>,
        singularities: Vec<(SingularityType, u64)>,
    ) -> Result<Self> {
        let r = ci_dim(n_ambient, &degrees)?;
        if let Some((s, _)) = singularities.iter().find(|(s, _)| s.r() != r) {
            return Err(Error::InvalidParameters(format!(
                "singularity {s} has dimension {} but the complete intersection has dimension {r}",
                s.r()
            )));
        }
        Ok(Self {
            n_ambient,
            degrees,
            singularities,
        })
    }

    pub fn n_ambient(&self) -> u32 {
        self.n_ambient
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn singularities(&self) -> &[(SingularityType, u64)] {
        &self.singularities
    }

    pub fn dim(&self) -> u32 {
        self.n_ambient - self.degrees.len() as u32
    }
}

/// `e(V') + sum count * (e_str(V, Q) + (-1)^(r+1) mu(Q) - 1)` where `V'` is a
/// smoothing of `V`.
pub fn estr_ci(spec: &CompleteIntersectionSpec) -> Result<Rational> {
    let r = spec.dim();
    let mut acc = Rational::from_integer(euler_smooth_ci(spec.n_ambient, &spec.degrees)?);
    for (s, count) in &spec.singularities {
        let mu = Rational::from_integer(milnor_number(s));
        let signed_mu = if r % 2 == 1 { mu } else { -mu };
        let local = estr_euler(s, EulerMethod::Closed)? + signed_mu - Rational::one();
        acc += local * Rational::from_integer(BigInt::from(*count));
    }
    Ok(acc)
}

/// `E(V) + sum_i (E_str(V, Q_i) - 1)`
pub fn estr_global(e_v: &UVPolynomial, locals: &[StringyExpression]) -> StringyExpression {
    let mut out = StringyExpression::from_polynomial(e_v.clone());
    let minus_one = StringyExpression::from_polynomial(UVPolynomial::constant(-Rational::one()));
    for local in locals {
        out = out + local.clone() + minus_one.clone();
    }
    out
}

fn goryunov_check(n_ambient: u32, kappa: u32) -> Result<()> {
    if n_ambient < 3 || kappa > n_ambient {
        return Err(Error::InvalidParameters(format!(
            "need N >= 3 and 0 <= kappa <= N, got N={n_ambient}, kappa={kappa}"
        )));
    }
    Ok(())
}

/// Number of nodes of the Goryunov quartic `V_kappa` in `P^N`.
pub fn goryunov_nodes(n_ambient: u32, kappa: u32) -> BigInt {
    Pow::pow(BigInt::from(2), kappa) * binomial(u64::from(n_ambient) + 1, u64::from(kappa) + 1)
}

/// The quartic hypersurface in `P^N` with `2^kappa C(N+1, kappa+1)` nodes.
pub fn goryunov_spec(n_ambient: u32, kappa: u32) -> Result<CompleteIntersectionSpec> {
    goryunov_check(n_ambient, kappa)?;
    let nodes = goryunov_nodes(n_ambient, kappa);
    let count = u64::try_from(nodes).map_err(|_| Error::InvalidParameters("too many nodes".into()))?;
    let node = SingularityType::new(n_ambient - 1, 1, 2)?;
    CompleteIntersectionSpec::new(n_ambient, vec![4], vec![(node, count)])
}

/// `((-3)^(N+1) - 1)/4 + N + 1 + 2^k C(N+1, k+1) ((((-1)^N - 1)/2 + N)/(N - 2) + (-1)^N - 1)`
pub fn goryunov_estr(n_ambient: u32, kappa: u32) -> Result<Rational> {
    goryunov_check(n_ambient, kappa)?;
    let n = i64::from(n_ambient);
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    let smooth = Rational::new(Pow::pow(BigInt::from(-3), n_ambient + 1) - 1, BigInt::from(4))
        + Rational::from_integer(BigInt::from(n + 1));
    let local = (Rational::new(BigInt::from(sign - 1), BigInt::from(2)) + Rational::from_integer(n.into()))
        / Rational::from_integer((n - 2).into())
        + Rational::from_integer((sign - 1).into());
    Ok(smooth + Rational::from_integer(goryunov_nodes(n_ambient, kappa)) * local)
}

fn segre_knorrer_check(n: u32) -> Result<()> {
    if n < 4 {
        return Err(Error::out_of_range("n", i64::from(n), ">= 4"));
    }
    Ok(())
}

/// Two quadrics in `P^n` meeting in an `(n-2)`-fold with one `A_n` point.
pub fn segre_knorrer_spec(n: u32) -> Result<CompleteIntersectionSpec> {
    segre_knorrer_check(n)?;
    let q = SingularityType::new(n - 2, n, 2)?;
    CompleteIntersectionSpec::new(n, vec![2, 2], vec![(q, 1)])
}

/// `n - 1 + e_str(V, Q)` with the local value split by the parity of `n`.
pub fn segre_knorrer_estr(n: u32) -> Result<Rational> {
    segre_knorrer_check(n)?;
    let n = i64::from(n);
    let local = if n % 2 == 1 {
        Rational::new(((n - 1) * (n - 1)).into(), (n * n - 3 * n - 2).into())
    } else {
        Rational::new(((n - 2) * (n + 1)).into(), (n * (n - 4) + (n - 2)).into())
    };
    Ok(Rational::from_integer((n - 1).into()) + local)
}

/// A `d^N`-sheeted covering of `P^r` branched along `N + 1` hyperplanes in
/// point arrangement position, with `t_top` points on exactly `r + 1` of them
/// and none on more.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrangementSpec {
    pub n_ambient: u32,
    pub r: u32,
    pub d: u32,
    pub t_top: u64,
}

impl ArrangementSpec {
    pub fn new(n_ambient: u32, r: u32, d: u32, t_top: u64) -> Result<Self> {
        if !(2..=r).contains(&d) {
            return Err(Error::out_of_range("d", i64::from(d), format!("2..={r}")));
        }
        if n_ambient <= r {
            return Err(Error::InvalidParameters(format!(
                "need N > r, got N={n_ambient}, r={r}"
            )));
        }
        Ok(Self {
            n_ambient,
            r,
            d,
            t_top,
        })
    }

    /// The same variety as a complete intersection of `N - r` Fermat
    /// hypersurfaces of degree `d`, with `t_top d^(N-r-1)` points of type
    /// `A(d-1, d, r)`.
    pub fn as_complete_intersection(&self) -> Result<CompleteIntersectionSpec> {
        let codim = self.n_ambient - self.r;
        let count = self.t_top * u64::from(self.d).pow(codim - 1);
        let sing = SingularityType::new(self.r, self.d - 1, self.d)?;
        CompleteIntersectionSpec::new(self.n_ambient, vec![self.d; codim as usize], vec![(sing, count)])
    }
}

pub fn arrangement_estr(spec: &ArrangementSpec) -> Result<Rational> {
    let ArrangementSpec {
        n_ambient,
        r,
        d,
        t_top,
    } = *spec;
    ArrangementSpec::new(n_ambient, r, d, t_top)?;
    let (n, ri) = (i64::from(n_ambient), i64::from(r));
    let dd = BigInt::from(d);
    let mut bracket = BigInt::zero();
    for nu in 0..=ri {
        let term = binomial_i(n + 1, ri - nu)
            * binomial_i(n - ri + nu - 1, nu)
            * Pow::pow(&dd, (nu + n - ri) as u32);
        if nu % 2 == 0 {
            bracket += term;
        } else {
            bracket -= term;
        }
    }
    let fermat = (Pow::pow(BigInt::one() - &dd, r + 1) - 1) / &dd + (r + 1);
    let mu: BigInt = Pow::pow(&dd - 1, r + 1);
    let signed_mu = if r % 2 == 1 { mu } else { -mu };
    let local = Rational::new(fermat, BigInt::from(r - d + 1)) + Rational::from_integer(signed_mu - 1);
    let weight = BigInt::from(t_top) * Pow::pow(&dd, n_ambient - r - 1);
    Ok(Rational::from_integer(bracket) + Rational::from_integer(weight) * local)
}

/// A point arrangement in `P^3` cut out by the facet planes of a solid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solid {
    pub label: &'static str,
    pub n_ambient: u32,
    pub t3: u64,
}

impl Solid {
    /// `(C(N+1, 3) - t_3) / 4`
    pub fn t4(&self) -> Result<u64> {
        let triples = binomial(u64::from(self.n_ambient) + 1, 3);
        let rest = triples - BigInt::from(self.t3);
        let four = BigInt::from(4);
        if rest < BigInt::zero() || !(&rest % &four).is_zero() {
            return Err(Error::InvalidParameters(format!(
                "t3={} is incompatible with N={}",
                self.t3, self.n_ambient
            )));
        }
        u64::try_from(rest / four).map_err(|_| Error::InvalidParameters("t4 overflow".into()))
    }

    pub fn estr(&self, d: u32) -> Result<Rational> {
        arrangement_estr(&ArrangementSpec::new(self.n_ambient, 3, d, self.t4()?)?)
    }
}

pub const SOLIDS: [Solid; 5] = [
    Solid { label: "A", n_ambient: 5, t3: 8 },
    Solid { label: "B", n_ambient: 7, t3: 8 },
    Solid { label: "C", n_ambient: 7, t3: 32 },
    Solid { label: "D,E", n_ambient: 13, t3: 256 },
    Solid { label: "F", n_ambient: 13, t3: 208 },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolidRow {
    pub solid: Solid,
    pub t4: u64,
    pub estr_d2: Rational,
    pub estr_d3: Rational,
}

pub fn solids_table() -> Result<Vec<SolidRow>> {
    SOLIDS
        .iter()
        .map(|&solid| {
            Ok(SolidRow {
                solid,
                t4: solid.t4()?,
                estr_d2: solid.estr(2)?,
                estr_d3: solid.estr(3)?,
            })
        })
        .collect()
}
