use super::{
    bernoulli_table, check_finite, digamma, log_gamma, ComplexValue, HALF_LOG_TWO_PI, ZETA_PRIME_AT_MINUS_ONE,
};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Re(s) at which the asymptotic expansion takes over from recursion.
const ASYMPTOTIC_THRESHOLD: f64 = 15.0;
/// Correction terms B_4 … B_14 in the asymptotic expansion.
const CORRECTION_TERMS: usize = 6;
const ZERO_TOL: f64 = 1e-12;

/// Asymptotic expansion of log G(s+1):
///
/// s²/2 (log s - 3/2) - log(s)/12 - s ζ'(0) + ζ'(-1)
///   + Σ_{k=1}^{6} B_{2k+2} / (4k(k+1) s^{2k}).
pub fn log_barnes_g_asymptotic(s: Complex64) -> Complex64 {
    let table = bernoulli_table();
    let log_s = s.ln();
    let mut acc = 0.5 * s * s * (log_s - 1.5) - log_s / 12.0 + s * HALF_LOG_TWO_PI + ZETA_PRIME_AT_MINUS_ONE;
    let inv2 = (s * s).inv();
    let mut pow = inv2;
    for k in 1..=CORRECTION_TERMS {
        let kf = k as f64;
        acc += table.b2k(k + 1) / (4.0 * kf * (kf + 1.0)) * pow;
        pow *= inv2;
    }
    acc
}

fn zero_check(s: Complex64, what: &str) -> Result<()> {
    check_finite(s, what)?;
    let n = s.re.round();
    if n <= -1.0 && Complex64::new(s.re - n, s.im).norm() < ZERO_TOL {
        return Err(Error::Zero(format!("{what}({s}): G(s+1) vanishes")));
    }
    Ok(())
}

/// log G(s+1) for the Barnes G-function.
///
/// Uses the asymptotic expansion once Re(s) ≥ 15, otherwise climbs there via
/// G(s+1) = Γ(s) G(s).
pub fn log_barnes_g(s: ComplexValue) -> Result<ComplexValue> {
    zero_check(s, "log_barnes_g")?;
    if s.re >= ASYMPTOTIC_THRESHOLD {
        return Ok(log_barnes_g_asymptotic(s));
    }
    let steps = (ASYMPTOTIC_THRESHOLD - s.re).ceil() as usize;
    let mut gammas = Complex64::new(0.0, 0.0);
    for j in 1..=steps {
        gammas += log_gamma(s + j as f64)?;
    }
    Ok(log_barnes_g_asymptotic(s + steps as f64) - gammas)
}

/// d/ds log G(s+1) = ½ log 2π - ½ - s + s ψ(s+1).
pub fn barnes_log_derivative(s: ComplexValue) -> Result<ComplexValue> {
    zero_check(s, "barnes_log_derivative")?;
    Ok(HALF_LOG_TWO_PI - 0.5 - s + s * digamma(s + 1.0)?)
}
