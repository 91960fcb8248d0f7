//! Leading Dirichlet data of φ. For Re s large every family factors as
//!
//! φ(s) = π^{c/2} (Γ(s-½)/Γ(s))^c · d(1) g₁^{-2s} · (1 + Σ a(n) u_n^{-2s}),
//!
//! and the bracket is an ordinary Dirichlet series Σ h(m) m^{-s} with integer
//! coefficients, built here exactly from the Euler-product pieces.

use super::ScatteringFamily;
use crate::error::{Error, Result};
use crate::specfun::log_gamma;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Σ c(m) m^{-s} truncated to m ≤ bound, exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletSeries {
    bound: u64,
    terms: BTreeMap<u64, BigInt>,
}

impl DirichletSeries {
    pub fn one(bound: u64) -> Self {
        Self::from_terms(bound, [(1, BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (u64, BigInt)>>(bound: u64, terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if m >= 1 && m <= bound && !c.is_zero() {
                *map.entry(m).or_insert_with(BigInt::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Self { bound, terms: map }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn coeff(&self, m: u64) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Dirichlet convolution, truncated at the smaller bound.
    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut out: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                match i.checked_mul(j) {
                    Some(m) if m <= bound => *out.entry(m).or_insert_with(BigInt::zero) += a * b,
                    _ => break,
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { bound, terms: out }
    }

    /// Convolution inverse; requires c(1) = ±1 so the result stays integral.
    pub fn inverse(&self) -> Result<Self> {
        let head = self.coeff(1);
        if head.abs() != BigInt::one() {
            return Err(Error::Domain("series inverse needs leading coefficient ±1".into()));
        }
        let mut out: BTreeMap<u64, BigInt> = BTreeMap::new();
        out.insert(1, head.clone());
        for m in 2..=self.bound {
            let mut acc = BigInt::zero();
            for (&d, c) in self.terms.range(2..=m) {
                if m % d == 0 {
                    if let Some(v) = out.get(&(m / d)) {
                        acc += c * v;
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(m, -acc * &head);
            }
        }
        Ok(Self { bound: self.bound, terms: out })
    }

    pub fn powi(&self, exponent: i32) -> Result<Self> {
        let base = if exponent < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.bound);
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Σ c(m) m^{-s} over the stored terms.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        self.terms.iter().map(|(&m, c)| c.to_f64().unwrap_or(f64::NAN) * (-s * (m as f64).ln()).exp()).sum()
    }
}

/// The data (c, g₁, d(1), c₁, c₂) and the normalized coefficients (u_n, a(n)).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirichletHead {
    pub cusps: u32,
    pub c1: f64,
    pub c2: f64,
    pub g1: f64,
    pub d1: f64,
    /// (u_n, a(n)) with 1 < u_n ≤ nMax, strictly increasing, a(n) ≠ 0
    pub coefficients: Vec<(f64, f64)>,
}

impl DirichletHead {
    /// g_n = g₁ u_n paired with d(n) = d(1) a(n), n ≥ 1.
    pub fn unnormalized(&self) -> Vec<(f64, f64)> {
        std::iter::once((self.g1, self.d1))
            .chain(self.coefficients.iter().map(|&(u, a)| (self.g1 * u, self.d1 * a)))
            .collect()
    }

    /// Reassemble φ(s) from the head; meaningful for Re s large.
    pub fn reconstruct(&self, s: Complex64) -> Result<Complex64> {
        let c = self.cusps as i32;
        let gamma_ratio = (log_gamma(s - 0.5)? - log_gamma(s)?).exp();
        let bracket: Complex64 =
            1.0 + self.coefficients.iter().map(|&(u, a)| a * (-2.0 * s * u.ln()).exp()).sum::<Complex64>();
        Ok(PI.powf(0.5 * c as f64)
            * gamma_ratio.powi(c)
            * self.d1
            * (-2.0 * s * self.g1.ln()).exp()
            * bracket)
    }
}

fn id_over_n_squared(bound: u64) -> DirichletSeries {
    // Σ n (n²)^{-s} = ζ(2s-1)
    DirichletSeries::from_terms(
        bound,
        (1u64..).map(|n| (n * n, BigInt::from(n))).take_while(|(m, _)| *m <= bound),
    )
}

fn ones_over_n_squared(bound: u64) -> DirichletSeries {
    // Σ (n²)^{-s} = ζ(2s)
    DirichletSeries::from_terms(
        bound,
        (1u64..).map(|n| (n * n, BigInt::one())).take_while(|(m, _)| *m <= bound),
    )
}

/// ζ(2s-1)/ζ(2s) as a series in m^{-s}.
fn modular_bracket(bound: u64) -> Result<DirichletSeries> {
    Ok(id_over_n_squared(bound).mul(&ones_over_n_squared(bound).inverse()?))
}

fn binomial(bound: u64, index: u64, c: i64) -> DirichletSeries {
    DirichletSeries::from_terms(bound, [(1, BigInt::one()), (index, BigInt::from(c))])
}

/// Normalized bracket series, together with (c, g₁, d(1)).
pub fn normalized_series(family: &ScatteringFamily, bound: u64) -> Result<(u32, f64, f64, DirichletSeries)> {
    match family {
        ScatteringFamily::Modular => Ok((1, 1.0, 1.0, modular_bracket(bound)?)),
        ScatteringFamily::Gamma0Squarefree(primes) => {
            let r = primes.len() as u32;
            let local_exp = 1i32 << (r - 1);
            let mut series = modular_bracket(bound)?.powi(1 << r)?;
            let mut g1 = 1.0;
            for &p in primes {
                // (1 - p^{2-2s})/(1 - p^{2s}) = -p^{-2s} (1 - p² p^{-2s})/(1 - p^{-2s})
                let q = p * p;
                let local = binomial(bound, q, -(q as i64)).mul(&binomial(bound, q, -1).inverse()?);
                series = series.mul(&local.powi(local_exp)?);
                g1 *= (p as f64).powi(local_exp);
            }
            let d1 = if (r as i64 * local_exp as i64) % 2 == 0 { 1.0 } else { -1.0 };
            Ok((1 << r, g1, d1, series))
        }
        ScatteringFamily::Gamma0Plus(primes) => {
            // (s/(s-1)) ξ(2s-1)/ξ(2s) equals the modular expression identically
            let mut series = modular_bracket(bound)?;
            for &p in primes {
                // (p^s + p)/(p^s + 1) = (1 + p·p^{-s})/(1 + p^{-s})
                let local = binomial(bound, p, p as i64).mul(&binomial(bound, p, 1).inverse()?);
                series = series.mul(&local);
            }
            Ok((1, (family.level() as f64).sqrt(), 1.0, series))
        }
    }
}

/// Head data with every nonzero coefficient of index u_n ≤ `n_max`.
pub fn dirichlet_head(family: &ScatteringFamily, n_max: u64) -> Result<DirichletHead> {
    if n_max < 1 {
        return Err(Error::Domain("nMax must be at least 1".into()));
    }
    let bound = n_max.checked_mul(n_max).ok_or_else(|| Error::Domain(format!("nMax {n_max} too large")))?;
    let (cusps, g1, d1, series) = normalized_series(family, bound)?;
    let coefficients = series
        .iter()
        .filter(|(m, _)| *m > 1)
        .map(|(m, c)| ((m as f64).sqrt(), c.to_f64().unwrap_or(f64::NAN)))
        .collect();
    Ok(DirichletHead { cusps, c1: -2.0 * g1.ln(), c2: d1.abs().ln(), g1, d1, coefficients })
}
