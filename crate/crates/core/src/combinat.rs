//! Binomials, the counting functions `a`, `b`, `c` attached to a triple
//! `(r, n, l)`, and non-central Eulerian numbers `S(kappa, lambda | nu, xi)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::Rational;
use crate::{Error, Result};

pub fn kronecker(i: i64, j: i64) -> u32 {
    u32::from(i == j)
}

/// `m choose k`, zero when `k > m`.
pub fn binomial(m: u64, k: u64) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a signed top, zero for negative arguments.
pub(crate) fn binomial_i(m: i64, k: i64) -> BigInt {
    if m < 0 || k < 0 {
        BigInt::zero()
    } else {
        binomial(m as u64, k as u64)
    }
}

pub fn multinomial(r: u64, parts: &[u64]) -> Result<BigInt> {
    let sum: u64 = parts.iter().sum();
    if sum != r {
        return Err(Error::PartsMismatch { sum, expected: r });
    }
    let mut acc = BigInt::one();
    let mut left = r;
    for &p in parts {
        acc *= binomial(left, p);
        left -= p;
    }
    Ok(acc)
}

/// The data `(r, n, l, d = lcm(n+1, l))` behind the functions `a`, `b`, `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcContext {
    r: u32,
    n: u32,
    ell: u32,
    d: u32,
    /// `b(j)` for `0 <= j <= r (l - 2) d / l`.
    b_table: Vec<BigInt>,
}

impl AbcContext {
    pub fn new(r: u32, n: u32, ell: u32) -> Result<Self> {
        if !(r >= ell && ell >= 2 && n + 1 >= ell) {
            return Err(Error::InvalidSingularity { r, n, ell });
        }
        let d = (n + 1).lcm(&ell);
        let b_table = b_table(r, ell, d);
        Ok(Self {
            r,
            n,
            ell,
            d,
            b_table,
        })
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

    pub fn d(&self) -> u32 {
        self.d
    }

    /// 1 on `{0, d/(n+1), ..., (n-1) d/(n+1)}`, else 0.
    pub fn a(&self, i: i64) -> u32 {
        let step = i64::from(self.d / (self.n + 1));
        u32::from(i >= 0 && i % step == 0 && i / step < i64::from(self.n))
    }

    /// Sum of `multinomial(r; nu)` over compositions `nu_1 + ... + nu_(l-1) = r`
    /// with `d * sum (i - 1) nu_i = j * l`.
    pub fn b(&self, j: i64) -> BigInt {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.b_table.get(j).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    /// `sum_{i + j = k} a(i) b(j)`, zero unless `k` is a nonnegative integer.
    pub fn c(&self, k: &Rational) -> BigInt {
        if !k.is_integer() || k.is_negative() {
            return BigInt::zero();
        }
        let Some(k) = k.to_integer().to_i64() else {
            return BigInt::zero();
        };
        let step = i64::from(self.d / (self.n + 1));
        (0..i64::from(self.n))
            .map(|s| self.b(k - s * step))
            .sum()
    }
}

fn b_table(r: u32, ell: u32, d: u32) -> Vec<BigInt> {
    let stride = d / ell;
    let len = (r * (ell - 2) * stride + 1) as usize;
    let mut table = vec![BigInt::zero(); len];
    let mut nu = vec![0u64; (ell - 1) as usize];
    compositions(u64::from(r), 0, &mut nu, &mut |nu| {
        let weight: u64 = nu.iter().enumerate().map(|(i, &x)| i as u64 * x).sum();
        // d * weight = j * l
        let j = (weight * u64::from(stride)) as usize;
        table[j] += multinomial(u64::from(r), nu).expect("parts sum to r");
    });
    table
}

fn compositions(left: u64, at: usize, nu: &mut [u64], visit: &mut impl FnMut(&[u64])) {
    if at + 1 == nu.len() {
        nu[at] = left;
        visit(nu);
        return;
    }
    for x in 0..=left {
        nu[at] = x;
        compositions(left - x, at + 1, nu, visit);
    }
}

/// `S(kappa, lambda | nu, xi)` from the recurrence
///
/// ```text
/// (k+1) S(k+1, l) = (nu l - k + xi) S(k, l) + (nu (k - l + 2) + k - xi) S(k, l-1),
/// S(0, 0) = 1,   S(k, 0) = C(xi, k).
/// ```
///
/// Values are carried as rationals and must come out integral.
pub fn eulerian_recurrence(kappa: u32, lambda: i64, nu: u32, xi: u32) -> Rational {
    if lambda < 0 || lambda > i64::from(kappa) {
        return Rational::zero();
    }
    let (nu, xi) = (i64::from(nu), i64::from(xi));
    let mut row = vec![Rational::one()];
    for k in 0..i64::from(kappa) {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(Rational::from_integer(binomial_i(xi, k + 1)));
        for l in 1..=k + 1 {
            let same = row.get(l as usize).cloned().unwrap_or_else(Rational::zero);
            let prev = &row[l as usize - 1];
            let v = same * BigInt::from(nu * l - k + xi)
                + prev * BigInt::from(nu * (k - l + 2) + k - xi);
            next.push(v / BigInt::from(k + 1));
        }
        row = next;
    }
    let s = row[lambda as usize].clone();
    assert!(s.is_integer(), "non-integral Eulerian number S({kappa},{lambda}|{nu},{xi}) = {s}");
    s
}

/// `S(kappa, lambda | nu, xi) = sum_{j=0}^{lambda} (-1)^j C(kappa+1, j) C(nu (lambda - j) + xi, kappa)`.
pub fn eulerian_closed(kappa: u32, lambda: i64, nu: u32, xi: u32) -> BigInt {
    if lambda < 0 || lambda > i64::from(kappa) {
        return BigInt::zero();
    }
    let (k, nu, xi) = (i64::from(kappa), i64::from(nu), i64::from(xi));
    (0..=lambda)
        .map(|j| {
            let term = binomial_i(k + 1, j) * binomial_i(nu * (lambda - j) + xi, k);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}
