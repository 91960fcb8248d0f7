//! Zeros and poles of φ on the real half-line (½, ∞): a symbolic ledger read
//! off the factorization, a numerical argument-principle cross-check, and the
//! resulting sign law for φ(½).

use crate::error::{Error, Result};
use crate::scattering::{central_value, dirichlet_head, phi_eval, phi_log_derivative, ScatteringFamily};
use crate::specfun::riemann_zeta;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Right end of the window searched for real zeros and poles. Past it every
/// factor is finite and nonzero on the real axis (Γ and ξ have no real
/// singularities there, ζ(w) > 1 for w > 1, and the prime-power factors
/// vanish only at s = 0 or s = 1).
const SEARCH_HI: f64 = 64.0;
const NODES_PER_SIDE: usize = 2048;
const BOUNDARY_MIN_MODULUS: f64 = 1e-6;
const WINDING_TOL: f64 = 1e-3;

/// One factor's contribution to the divisor at a real point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivisorEntry {
    pub location: f64,
    pub order: i32,
    pub source: String,
}

/// Zeros N and poles P of φ on (½, ∞), counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivisorCount {
    pub zeros: u32,
    pub poles: u32,
    pub breakdown: Vec<DivisorEntry>,
    /// Facts the ledger relies on, each checked when the ledger is built.
    pub justifications: Vec<String>,
}

impl DivisorCount {
    pub fn net(&self) -> i64 {
        self.zeros as i64 - self.poles as i64
    }
}

/// Sign of ζ(x) on a grid: true iff ζ < 0 on the grid points in (0, 1) and
/// ζ > 0 on those in (1, ∞).
pub fn zeta_real_sign_check(points: usize, hi: f64) -> Result<bool> {
    for j in 1..points {
        let x = hi * j as f64 / points as f64;
        if (x - 1.0).abs() < 1e-9 {
            continue;
        }
        let z = riemann_zeta(Complex64::new(x, 0.0))?.re;
        if (x < 1.0 && z >= 0.0) || (x > 1.0 && z <= 0.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ledger of real zeros and poles of φ right of ½, factor by factor.
///
/// Entries are kept per factor and not netted, so a point where a zero of
/// one factor meets a pole of another shows up in both counts.
pub fn count_divisor(family: &ScatteringFamily) -> Result<DivisorCount> {
    let product = family.factors();
    let mut breakdown = Vec::new();
    for term in &product.terms {
        let mut points = term.factor.real_singular_candidates(0.5, SEARCH_HI);
        points.sort_by(f64::total_cmp);
        points.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        for x in points {
            let order = term.exponent * term.factor.order_at(x);
            if order != 0 {
                breakdown.push(DivisorEntry { location: x, order, source: term.label.clone() });
            }
        }
    }
    let zeros = breakdown.iter().map(|e| e.order.max(0) as u32).sum();
    let poles = breakdown.iter().map(|e| (-e.order).max(0) as u32).sum();

    if !zeta_real_sign_check(2000, 20.0)? {
        return Err(Error::Domain("zeta changes sign off its pole on (0, 20)".into()));
    }
    let mut justifications = vec![
        "counted on (1/2, inf); |phi(1/2)| = 1 so 1/2 itself carries no divisor".to_string(),
        "Gamma(w) has poles only at w = 0, -1, -2, ... and no zeros".to_string(),
        "zeta(x) < 0 on (0, 1) and zeta(x) > 0 on (1, inf) (checked on a 2000-point grid of (0, 20)); \
         so zeta(2s) and zeta(2s-1) have no real zeros for s > 1/2"
            .to_string(),
    ];
    match family {
        ScatteringFamily::Modular => {}
        ScatteringFamily::Gamma0Squarefree(_) => justifications
            .push("1 - p^(2-2s) vanishes on the real axis only at s = 1; 1 - p^(2s) only at s = 0".into()),
        ScatteringFamily::Gamma0Plus(_) => justifications.push(
            "xi(w) is entire and has no real zeros; p^s + p and p^s + 1 are positive for real s".into(),
        ),
    }
    Ok(DivisorCount { zeros, poles, breakdown, justifications })
}

/// Axis-parallel rectangle, traversed counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Rectangle {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        if !(re_min < re_max && im_min < im_max)
            || ![re_min, re_max, im_min, im_max].iter().all(|v| v.is_finite())
        {
            return Err(Error::Domain(format!(
                "degenerate rectangle [{re_min}, {re_max}] x [{im_min}, {im_max}]"
            )));
        }
        Ok(Self { re_min, re_max, im_min, im_max })
    }

    /// [0.4, 3.1] × [-0.5, 0.5]: encloses (½, 3] with its edges clear of the
    /// real divisor at s = 1 and of the removable point s = ½.
    pub fn standard() -> Self {
        Self { re_min: 0.4, re_max: 3.1, im_min: -0.5, im_max: 0.5 }
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_min, self.im_min),
            Complex64::new(self.re_max, self.im_min),
            Complex64::new(self.re_max, self.im_max),
            Complex64::new(self.re_min, self.im_max),
        ]
    }

    /// Trapezoid nodes and weights (ds) along the boundary.
    fn nodes(&self, per_side: usize) -> Vec<(Complex64, Complex64)> {
        let c = self.corners();
        let mut out = Vec::with_capacity(4 * (per_side + 1));
        for k in 0..4 {
            let (a, b) = (c[k], c[(k + 1) % 4]);
            let h = (b - a) / per_side as f64;
            for j in 0..=per_side {
                let w = if j == 0 || j == per_side { 0.5 } else { 1.0 };
                out.push((a + h * j as f64, h * w));
            }
        }
        out
    }
}

/// Outcome of a contour count: the rounded value and its distance from the
/// raw integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Winding {
    pub net: i64,
    pub raw: f64,
    pub residual: f64,
}

/// (1/2πi) ∮ f'/f ds over the rectangle, given f'/f and the pieces f is a
/// product of. The pieces are used only to check that the contour keeps
/// clear of zeros and poles: each must stay between 1e-6 and 1e6 in modulus.
/// Checking pieces rather than f keeps the test meaningful when f is a high
/// power whose modulus runs far outside that band with no singularity near.
pub fn winding_number<F, G>(pieces: F, log_derivative: G, rect: &Rectangle) -> Result<Winding>
where
    F: Fn(Complex64) -> Result<Vec<Complex64>>,
    G: Fn(Complex64) -> Result<Complex64>,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for (s, ds) in rect.nodes(NODES_PER_SIDE) {
        let near = |why: String| Error::ContourTooClose(format!("at {s}: {why}"));
        for v in pieces(s).map_err(|e| near(e.to_string()))? {
            let m = v.norm();
            if !(m > BOUNDARY_MIN_MODULUS && m < 1.0 / BOUNDARY_MIN_MODULUS) {
                return Err(near(format!("factor modulus {m:e}")));
            }
        }
        acc += log_derivative(s).map_err(|e| near(e.to_string()))? * ds;
    }
    let value = acc / (2.0 * PI * Complex64::i());
    let net = value.re.round();
    let residual = (value - net).norm();
    if residual >= WINDING_TOL {
        return Err(Error::NonIntegerWinding(format!("integral {value}, residual {residual:e}")));
    }
    Ok(Winding { net: net as i64, raw: value.re, residual })
}

/// Zeros minus poles of φ inside the rectangle.
pub fn argument_principle_net(family: &ScatteringFamily, rect: &Rectangle) -> Result<Winding> {
    let product = family.factors();
    let pieces =
        |s: Complex64| -> Result<Vec<Complex64>> { product.terms.iter().map(|t| t.factor.eval(s)).collect() };
    // the direct evaluation also rejects points within 1e-10 of a factor singularity
    let guard = |s: Complex64| {
        phi_eval(family, s)?;
        pieces(s)
    };
    winding_number(guard, |s| phi_log_derivative(family, s), rect)
}

/// Theorem check: predicted (−1)^{N+P} sgn d(1) against the computed φ(½).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub zeros: u32,
    pub poles: u32,
    pub sgn_d1: i32,
    pub predicted: i32,
    pub computed: i32,
    pub ok: bool,
}

pub fn verify_theorem(family: &ScatteringFamily) -> Result<TheoremCheck> {
    let divisor = count_divisor(family)?;
    let head = dirichlet_head(family, 1)?;
    let central = central_value(family)?;
    let sgn_d1 = if head.d1 < 0.0 { -1 } else { 1 };
    let parity = if (divisor.zeros + divisor.poles) % 2 == 0 { 1 } else { -1 };
    let predicted = parity * sgn_d1;
    let computed = if central.germ_value < 0.0 { -1 } else { 1 };
    Ok(TheoremCheck {
        zeros: divisor.zeros,
        poles: divisor.poles,
        sgn_d1,
        predicted,
        computed,
        ok: predicted == computed,
    })
}

/// e^α = g₁ / (π^{c/2} |d(1)|).
pub fn corollary_alpha(family: &ScatteringFamily) -> Result<f64> {
    let head = dirichlet_head(family, 1)?;
    Ok(head.g1 / (PI.powf(0.5 * head.cusps as f64) * head.d1.abs()))
}

/// (−1)^{N+P} π^{c/2} (d(1)/g₁) e^α, which must be ±1.
pub fn reassemble_central_value(family: &ScatteringFamily) -> Result<f64> {
    let divisor = count_divisor(family)?;
    let head = dirichlet_head(family, 1)?;
    let parity = if (divisor.zeros + divisor.poles) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(parity * PI.powf(0.5 * head.cusps as f64) * (head.d1 / head.g1) * corollary_alpha(family)?)
}
