use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::ops::Mul;

/// Truncated Laurent expansion (s-a)^m (c₀ + c₁(s-a) + … + c_{K-1}(s-a)^{K-1})
/// of a real-analytic meromorphic function at a real point `a`.
///
/// `c₀ ≠ 0` always holds, so `order` is the exact divisor order at `a`.
/// Products and inverses keep the shorter of the operands' lengths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaurentGerm {
    pub point: f64,
    pub order: i32,
    pub coeffs: Vec<f64>,
}

/// Nodes on the Cauchy circle used by [`laurent_coefficients`].
const CAUCHY_NODES: usize = 64;

impl LaurentGerm {
    pub fn new(point: f64, order: i32, coeffs: Vec<f64>) -> Result<Self> {
        match coeffs.first() {
            Some(c) if *c != 0.0 && c.is_finite() => Ok(Self { point, order, coeffs }),
            _ => Err(Error::Domain(format!("germ at {point} needs a finite nonzero leading coefficient"))),
        }
    }

    pub fn constant(point: f64, value: f64, depth: usize) -> Self {
        let mut coeffs = vec![0.0; depth];
        coeffs[0] = value;
        Self { point, order: 0, coeffs }
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[0]
    }

    /// Value at the expansion point when the germ is regular and nonzero there.
    pub fn value(&self) -> Option<f64> {
        (self.order == 0).then(|| self.coeffs[0])
    }

    pub fn inverse(&self) -> Self {
        let c0 = self.coeffs[0];
        let mut out = Vec::with_capacity(self.depth());
        out.push(1.0 / c0);
        for n in 1..self.depth() {
            let acc: f64 = (1..=n).map(|k| self.coeffs[k] * out[n - k]).sum();
            out.push(-acc / c0);
        }
        Self { point: self.point, order: -self.order, coeffs: out }
    }

    pub fn powi(&self, exponent: i32) -> Self {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::constant(self.point, 1.0, self.depth());
        for _ in 0..exponent.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            point: self.point,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Re-expresses a germ in t = α(s - a) as a germ in s at `point`.
    pub fn substitute_linear(&self, point: f64, alpha: f64) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().map(|(k, c)| c * alpha.powi(self.order + k as i32)).collect();
        Self { point, order: self.order, coeffs }
    }

    /// Evaluates the truncated expansion at complex `s`.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        let t = s - self.point;
        let series = self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c);
        series * t.powi(self.order)
    }

    /// d/ds log of the truncated expansion at complex `s`.
    pub fn log_derivative(&self, s: Complex64) -> Complex64 {
        let t = s - self.point;
        let mut series = Complex64::new(0.0, 0.0);
        let mut deriv = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            series = series * t + c;
            if k > 0 {
                deriv = deriv * t + *c * k as f64;
            }
        }
        deriv / series + self.order as f64 / t
    }
}

impl Mul for &LaurentGerm {
    type Output = LaurentGerm;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentGerm) -> LaurentGerm {
        let depth = self.depth().min(rhs.depth());
        let coeffs = (0..depth).map(|n| (0..=n).map(|k| self.coeffs[k] * rhs.coeffs[n - k]).sum()).collect();
        LaurentGerm { point: self.point, order: self.order + rhs.order, coeffs }
    }
}

/// Laurent coefficients c_order … c_{order+depth-1} of `f` at `center` from
/// the discrete Cauchy integral on |s - center| = radius.
///
/// `f` must be meromorphic in the disc of radius 2·radius with no singularity
/// other than at the center. The trapezoid rule on the circle is exact up to
/// aliasing from coefficients CAUCHY_NODES positions away.
pub fn laurent_coefficients<F>(f: F, center: f64, radius: f64, order: i32, depth: usize) -> Result<Vec<f64>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let samples: Vec<(Complex64, Complex64)> = (0..CAUCHY_NODES)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / CAUCHY_NODES as f64;
            let e = Complex64::from_polar(1.0, theta);
            f(center + radius * e).map(|v| (v, e))
        })
        .collect::<Result<_>>()?;
    let coeffs = (0..depth as i32)
        .map(|i| {
            let k = order + i;
            let acc: Complex64 = samples.iter().map(|(v, e)| v * e.powi(-k)).sum();
            (acc / CAUCHY_NODES as f64).re / radius.powi(k)
        })
        .collect();
    Ok(coeffs)
}
