use super::{bernoulli_table, check_finite, ensure_finite, log_gamma, ComplexValue, STIELTJES};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

const POLE_TOL: f64 = 1e-14;
/// Bernoulli correction terms in the Euler–Maclaurin tail.
const EM_TERMS: usize = 16;
/// Below this distance from 1, ζ'/ζ is taken from the stored Laurent germ.
const GERM_RADIUS: f64 = 0.1;

/// B_{2j}/(2j)! for j = 1..=EM_TERMS.
fn em_coefficients() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let table = bernoulli_table();
        let mut fact = 1.0;
        (1..=EM_TERMS)
            .map(|j| {
                fact *= (2 * j - 1) as f64 * (2 * j) as f64;
                table.b2k(j) / fact
            })
            .collect()
    })
}

/// Euler–Maclaurin summation of Σ_{k≥0} (k+a)^{-s}, valid for every s ≠ 1
/// as long as no k + a vanishes.
fn euler_maclaurin(s: Complex64, a: Complex64) -> Complex64 {
    let cutoff = 16 + s.norm().ceil() as usize;
    let mut head = Complex64::new(0.0, 0.0);
    for k in 0..cutoff {
        head += (-s * (a + k as f64).ln()).exp();
    }
    let w = a + cutoff as f64;
    let log_w = w.ln();
    let w_pow = (-s * log_w).exp();
    let mut acc = head + w_pow * w / (s - 1.0) + 0.5 * w_pow;
    let inv_w2 = (w * w).inv();
    let mut rising = s;
    let mut pow = w_pow / w;
    for (j, coeff) in em_coefficients().iter().enumerate() {
        acc += *coeff * rising * pow;
        let m = (2 * j + 1) as f64;
        rising *= (s + m) * (s + m + 1.0);
        pow *= inv_w2;
    }
    acc
}

/// Riemann ζ(s).
///
/// Euler–Maclaurin for Re(s) ≥ ½ and the reflection formula
/// ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s) for Re(s) < ½, except inside
/// |s| < 0.1 where sin(πs/2)·ζ(1-s) is 0·∞ and the direct sum is used.
pub fn riemann_zeta(s: ComplexValue) -> Result<ComplexValue> {
    check_finite(s, "riemann_zeta")?;
    if (s - 1.0).norm() < POLE_TOL {
        return Err(Error::Pole(format!("riemann_zeta({s})")));
    }
    let one = Complex64::new(1.0, 0.0);
    if s.re >= 0.5 || s.norm() < 0.1 {
        return ensure_finite(euler_maclaurin(s, one), "riemann_zeta");
    }
    let t = 1.0 - s;
    let prefactor = (s * 2f64.ln() + (s - 1.0) * PI.ln() + log_gamma(t)?).exp();
    let value = prefactor * (0.5 * PI * s).sin() * euler_maclaurin(t, one);
    ensure_finite(value, "riemann_zeta")
}

/// Hurwitz ζ(s, a) = Σ_{k≥0} (k+a)^{-s}, a > 0.
pub fn hurwitz_zeta(s: ComplexValue, a: f64) -> Result<ComplexValue> {
    if a.is_nan() || a <= 0.0 || !a.is_finite() {
        return Err(Error::Domain(format!("hurwitz_zeta: a = {a} must be positive")));
    }
    hurwitz_zeta_complex(s, Complex64::new(a, 0.0))
}

/// Hurwitz ζ(s, a) for complex shift `a`, principal-branch powers.
///
/// Requires k + a ∉ (-∞, 0] for all k ≥ 0.
pub fn hurwitz_zeta_complex(s: ComplexValue, a: ComplexValue) -> Result<ComplexValue> {
    check_finite(s, "hurwitz_zeta")?;
    check_finite(a, "hurwitz_zeta")?;
    if (s - 1.0).norm() < POLE_TOL {
        return Err(Error::Pole(format!("hurwitz_zeta({s}, {a})")));
    }
    if a.im.abs() < 1e-300 && a.re <= 0.0 {
        return Err(Error::Domain(format!("hurwitz_zeta: k + a hits the cut (-∞, 0] for a = {a}")));
    }
    ensure_finite(euler_maclaurin(s, a), "hurwitz_zeta")
}

/// ∂/∂s ζ(s, a) at s = 0 by central differences (step 1e-5) with one
/// Richardson step. Equals log(Γ(a)/√(2π)) by Lerch's formula.
pub fn hurwitz_zeta_ds0(a: f64) -> Result<f64> {
    let h = 1e-5;
    let diff = |h: f64| -> Result<f64> {
        let plus = hurwitz_zeta(Complex64::new(h, 0.0), a)?;
        let minus = hurwitz_zeta(Complex64::new(-h, 0.0), a)?;
        Ok((plus.re - minus.re) / (2.0 * h))
    };
    let coarse = diff(h)?;
    let fine = diff(0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Laurent coefficients of ζ(w) at w = 1, starting with the (w-1)^{-1}
/// term: [1, γ_0, -γ_1, γ_2/2!, …]. At most `1 + STIELTJES.len()` entries.
pub fn zeta_laurent_at_one(len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(len);
    out.push(1.0);
    let mut fact = 1.0;
    for (n, g) in STIELTJES.iter().enumerate().take(len.saturating_sub(1)) {
        if n > 0 {
            fact *= n as f64;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        out.push(sign * g / fact);
    }
    out.truncate(len);
    out
}

/// ζ'(w)/ζ(w): fourth-order central differences (step 1e-3) of the entire
/// part ζ(w) - 1/(w-1) away from the pole, the stored Laurent germ within 0.1
/// of w = 1.
pub fn zeta_log_derivative(w: ComplexValue) -> Result<ComplexValue> {
    check_finite(w, "zeta_log_derivative")?;
    let t = w - 1.0;
    if t.norm() < POLE_TOL {
        return Err(Error::Pole(format!("zeta_log_derivative({w})")));
    }
    if t.norm() < GERM_RADIUS {
        // ζ(w) = t^{-1} Σ c_k t^k
        let coeffs = zeta_laurent_at_one(STIELTJES.len() + 1);
        let mut series = Complex64::new(0.0, 0.0);
        let mut deriv = Complex64::new(0.0, 0.0);
        for (k, c) in coeffs.iter().enumerate().rev() {
            series = series * t + c;
            if k > 0 {
                deriv = deriv * t + *c * k as f64;
            }
        }
        return Ok(deriv / series - t.inv());
    }
    // difference the entire part ζ(w) - 1/(w-1), add the pole back analytically
    let h = 1e-3;
    let f = |z: Complex64| -> Result<Complex64> { Ok(riemann_zeta(z)? - (z - 1.0).inv()) };
    let d =
        (8.0 * (f(w + h)? - f(w - h)?) - (f(w + 2.0 * h)? - f(w - 2.0 * h)?)) / (12.0 * h) - (t * t).inv();
    let v = riemann_zeta(w)?;
    if v.norm() == 0.0 {
        return Err(Error::Zero(format!("zeta_log_derivative({w})")));
    }
    Ok(d / v)
}
