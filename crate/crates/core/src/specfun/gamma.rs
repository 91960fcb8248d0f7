use super::{bernoulli_table, check_finite, distance_to_nonpositive_integer, ComplexValue, HALF_LOG_TWO_PI};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Number of Stirling terms used by [`log_gamma`] (B_2 … B_18).
const STIRLING_TERMS: usize = 10;
/// Recursion threshold on Re(s) before the Stirling sum is applied.
const STIRLING_SHIFT: f64 = 10.0;
const POLE_TOL: f64 = 1e-14;

/// Truncated Stirling sum
/// ½ log 2π + (s-½) log s - s + Σ_{j=1}^{m-1} B_{2j}/((2j-1)2j s^{2j-1}).
pub fn log_gamma_stirling(s: Complex64, m: usize) -> Complex64 {
    let table = bernoulli_table();
    let log_s = s.ln();
    let mut acc = HALF_LOG_TWO_PI + (s - 0.5) * log_s - s;
    let inv = s.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    for j in 1..m {
        let jf = j as f64;
        acc += table.b2k(j) / ((2.0 * jf - 1.0) * 2.0 * jf) * pow;
        pow *= inv2;
    }
    acc
}

fn pole_check(s: Complex64, what: &str) -> Result<()> {
    check_finite(s, what)?;
    match distance_to_nonpositive_integer(s) {
        Some(d) if d < POLE_TOL => Err(Error::Pole(format!("{what}({s})"))),
        _ => Ok(()),
    }
}

/// log Γ(s), continued analytically from the positive real axis.
///
/// The imaginary part is not reduced modulo 2π, so this is the smooth
/// branch (the one Stirling's series gives) rather than `ln(Γ(s))`; both have
/// the same exponential.
pub fn log_gamma(s: ComplexValue) -> Result<ComplexValue> {
    pole_check(s, "log_gamma")?;
    let mut z = s;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < STIRLING_SHIFT {
        shift += z.ln();
        z += 1.0;
    }
    Ok(log_gamma_stirling(z, STIRLING_TERMS) - shift)
}

/// ψ(s) = d/ds log Γ(s).
pub fn digamma(s: ComplexValue) -> Result<ComplexValue> {
    pole_check(s, "digamma")?;
    let table = bernoulli_table();
    let mut z = s;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < STIRLING_SHIFT {
        shift += z.inv();
        z += 1.0;
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut acc = z.ln() - 0.5 * inv;
    let mut pow = inv2;
    for k in 1..STIRLING_TERMS {
        acc -= table.b2k(k) / (2.0 * k as f64) * pow;
        pow *= inv2;
    }
    Ok(acc - shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::EULER_GAMMA;
    use std::f64::consts::{LN_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn log_gamma_classical_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-14);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half - 0.5 * PI.ln()).norm() < 1e-14);
        // ln 10! = ln 3628800
        let v = log_gamma(c(11.0, 0.0)).unwrap();
        assert!((v.re - 3_628_800f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_frozen_complex_value() {
        // mpmath loggamma(6.3+2.1j), 40 digits
        let v = log_gamma(c(6.3, 2.1)).unwrap();
        let expect = c(4.935_895_099_300_048_8, 3.737_975_471_037_231_1);
        assert!((v - expect).norm() / expect.norm() < 1e-13);
    }

    #[test]
    fn log_gamma_shift_consistency() {
        // log Γ(s+8) = log Γ(s) + Σ_{k<8} log(s+k) on a path that does not
        // cross the negative axis.
        let s = c(6.3, 2.1);
        let shifted = log_gamma(s + 8.0).unwrap();
        let sum: Complex64 = (0..8).map(|k| (s + k as f64).ln()).sum();
        let direct = log_gamma(s).unwrap();
        assert!((shifted - sum - direct).norm() / direct.norm() < 1e-12);
    }

    #[test]
    fn log_gamma_poles() {
        for n in 0..5 {
            let r = log_gamma(c(-(n as f64), 0.0));
            assert!(matches!(r, Err(Error::Pole(_))));
        }
        assert!(log_gamma(c(-3.0, 1e-12)).is_ok());
        assert!(matches!(log_gamma(c(f64::NAN, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn log_gamma_reflection_on_negative_axis() {
        // Γ(s)Γ(1-s) = π / sin(πs)
        for &x in &[-0.3, -1.7, -4.5, -12.25, -19.9] {
            let s = c(x, 0.0);
            let lhs = (log_gamma(s).unwrap() + log_gamma(1.0 - s).unwrap()).exp();
            let rhs = PI / (PI * x).sin();
            assert!((lhs.re - rhs).abs() / rhs.abs() < 1e-11, "x = {x}");
            assert!(lhs.im.abs() < 1e-10 * rhs.abs());
        }
    }

    #[test]
    fn stirling_seam_at_ten() {
        // just below and above the recursion threshold
        let a = log_gamma(c(9.999_999, 0.5)).unwrap();
        let b = log_gamma_stirling(c(9.999_999, 0.5), 10);
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn digamma_classical_values() {
        assert!((digamma(c(1.0, 0.0)).unwrap().re + EULER_GAMMA).abs() < 1e-14);
        assert!((digamma(c(2.0, 0.0)).unwrap().re - (1.0 - EULER_GAMMA)).abs() < 1e-14);
        let half = digamma(c(0.5, 0.0)).unwrap().re;
        assert!((half - (-EULER_GAMMA - 2.0 * LN_2)).abs() < 1e-14);
        assert!(matches!(digamma(c(-2.0, 0.0)), Err(Error::Pole(_))));
    }

    #[test]
    fn digamma_matches_difference_of_log_gamma() {
        let h = 1e-4;
        for &s in &[c(0.3, 0.2), c(3.5, -4.0), c(-2.5, 1.0), c(25.0, 10.0)] {
            let f = |z: Complex64| log_gamma(z).unwrap();
            let fd = (8.0 * (f(s + h) - f(s - h)) - (f(s + 2.0 * h) - f(s - 2.0 * h))) / (12.0 * h);
            let d = digamma(s).unwrap();
            assert!((fd - d).norm() / d.norm().max(1.0) < 1e-9, "s = {s}");
        }
    }

    #[test]
    fn stirling_remainder_bounded_by_first_omitted_term() {
        // ln Γ(30) = ln 29!
        let exact: f64 = (1..30).map(|k| (k as f64).ln()).sum();
        let s = c(30.0, 0.0);
        let table = bernoulli_table();
        for m in 3..=9 {
            let err = (log_gamma_stirling(s, m).re - exact).abs();
            let mf = m as f64;
            let omitted = table.b2k(m).abs() / ((2.0 * mf - 1.0) * 2.0 * mf * 30f64.powf(2.0 * mf - 1.0));
            // the remainder of a truncated Stirling series is below the first omitted term
            assert!(err <= omitted + 4e-14, "m = {m}: {err} vs {omitted}");
        }
    }
}
