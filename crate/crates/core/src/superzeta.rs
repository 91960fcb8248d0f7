//! Superzeta functions Σ (z − y_k)^{-s} over the zeros y_k of an entire
//! function, the regularized product D(z) = exp(−∂_s 𝒵(s, z)|_{s=0}), and the
//! sign bookkeeping that turns the divisor ledger into the value of φ(½).

use crate::divisor::{corollary_alpha, count_divisor};
use crate::error::{Error, Result};
use crate::scattering::{dirichlet_head, ScatteringFamily};
use crate::specfun::hurwitz_zeta_complex;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const DS_STEP: f64 = 1e-3;

/// Zeros of an entire function: an explicit list with multiplicities, or the
/// progression y_k = start + (k − 1)·step, k ≥ 1, with step < 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawZeroSet", into = "RawZeroSet")]
pub enum ZeroSet {
    Finite(Vec<(Complex64, u32)>),
    Progression { start: f64, step: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawZeroSet {
    Finite { zeros: Vec<(f64, f64, u32)> },
    Progression { start: f64, step: f64 },
}

impl TryFrom<RawZeroSet> for ZeroSet {
    type Error = Error;

    fn try_from(raw: RawZeroSet) -> Result<Self> {
        match raw {
            RawZeroSet::Finite { zeros } => {
                ZeroSet::finite(zeros.into_iter().map(|(re, im, m)| (Complex64::new(re, im), m)).collect())
            }
            RawZeroSet::Progression { start, step } => ZeroSet::progression(start, step),
        }
    }
}

impl From<ZeroSet> for RawZeroSet {
    fn from(z: ZeroSet) -> Self {
        match z {
            ZeroSet::Finite(zeros) => {
                RawZeroSet::Finite { zeros: zeros.into_iter().map(|(y, m)| (y.re, y.im, m)).collect() }
            }
            ZeroSet::Progression { start, step } => RawZeroSet::Progression { start, step },
        }
    }
}

fn on_cut(w: Complex64) -> bool {
    w.im == 0.0 && w.re <= 0.0
}

impl ZeroSet {
    pub fn finite(zeros: Vec<(Complex64, u32)>) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::Domain("finite zero set is empty".into()));
        }
        if let Some((y, _)) = zeros.iter().find(|(y, m)| *m == 0 || !(y.re.is_finite() && y.im.is_finite())) {
            return Err(Error::Domain(format!("bad zero {y} (multiplicity must be positive)")));
        }
        Ok(Self::Finite(zeros))
    }

    pub fn progression(start: f64, step: f64) -> Result<Self> {
        if !start.is_finite() || !step.is_finite() || step >= 0.0 || step.is_nan() {
            return Err(Error::Domain(format!(
                "progression needs finite start and negative step, got start {start}, step {step}"
            )));
        }
        Ok(Self::Progression { start, step })
    }

    /// y_k = -k, k ≥ 1.
    pub fn negative_integers() -> Self {
        Self::Progression { start: -1.0, step: -1.0 }
    }

    /// The k-th zero (1-based) with its multiplicity.
    pub fn zero(&self, k: usize) -> Option<(Complex64, u32)> {
        match self {
            Self::Finite(z) => k.checked_sub(1).and_then(|i| z.get(i).copied()),
            Self::Progression { start, step } if k >= 1 => {
                Some((Complex64::new(start + (k - 1) as f64 * step, 0.0), 1))
            }
            Self::Progression { .. } => None,
        }
    }

    /// Checks z − y_k ∉ (−∞, 0] for every zero.
    pub fn check_domain(&self, z: Complex64) -> Result<()> {
        let bad = match self {
            Self::Finite(zeros) => zeros.iter().map(|(y, _)| *y).find(|y| on_cut(z - y)),
            // z − y_k increases with k, so the first zero decides
            Self::Progression { start, .. } => Some(Complex64::new(*start, 0.0)).filter(|y| on_cut(z - y)),
        };
        match bad {
            Some(y) => Err(Error::Domain(format!("z - y = {} lies on the cut (-inf, 0] for y = {y}", z - y))),
            None => Ok(()),
        }
    }
}

/// A truncated superzeta sum and, for progressions, the integral tail added
/// to it with an estimate of what remains.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuperzetaSum {
    pub value: Complex64,
    pub terms: usize,
    pub tail: Complex64,
    pub error_estimate: f64,
}

/// Σ_{k ≤ cutoff} m_k (z − y_k)^{-s}, plus an Euler–Maclaurin tail for
/// progressions.
pub fn superzeta_sum(zs: &ZeroSet, s: Complex64, z: Complex64, cutoff: usize) -> Result<SuperzetaSum> {
    zs.check_domain(z)?;
    let terms = match zs {
        ZeroSet::Finite(zeros) => cutoff.min(zeros.len()),
        ZeroSet::Progression { .. } => {
            if s.re <= 2.0 {
                return Err(Error::Convergence(format!(
                    "Re s = {} must exceed 2 for an infinite zero set",
                    s.re
                )));
            }
            if cutoff == 0 {
                return Err(Error::Domain("cutoff must be positive".into()));
            }
            cutoff
        }
    };
    let mut value = Complex64::new(0.0, 0.0);
    for k in 1..=terms {
        let (y, m) = zs.zero(k).expect("index within range");
        value += m as f64 * (-s * (z - y).ln()).exp();
    }
    let (tail, error_estimate) = match zs {
        ZeroSet::Finite(_) => (Complex64::new(0.0, 0.0), 0.0),
        ZeroSet::Progression { start, step } => {
            // f(x) = (w + (x−1)d)^{-s}; Σ_{k>K} f(k) = ∫_{K+½}^∞ f + f'(K+½)/24 − 7 f'''(K+½)/5760 + …
            let d = -step;
            let u = z - start + (terms as f64 - 0.5) * d;
            let integral = (-(s - 1.0) * u.ln()).exp() / (d * (s - 1.0));
            let f1 = -s * d * (-(s + 1.0) * u.ln()).exp();
            let f3 = -s * (s + 1.0) * (s + 2.0) * d.powi(3) * (-(s + 3.0) * u.ln()).exp();
            (integral + f1 / 24.0, 2.0 * 7.0 / 5760.0 * f3.norm())
        }
    };
    Ok(SuperzetaSum { value: value + tail, terms, tail, error_estimate })
}

/// −∂_s 𝒵(s, z) at s = 0 from values of 𝒵 near 0, by fourth-order central
/// differences with step 1e-3.
pub fn minus_ds_at_zero<F>(zeta: F) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let h = DS_STEP;
    let at = |t: f64| zeta(Complex64::new(t, 0.0));
    let d = (8.0 * (at(h)? - at(-h)?) - (at(2.0 * h)? - at(-2.0 * h)?)) / (12.0 * h);
    Ok(-d)
}

/// log D(z) = −∂_s 𝒵(s, z)|_{s=0}.
pub fn log_regularized_det(zs: &ZeroSet, z: Complex64) -> Result<Complex64> {
    zs.check_domain(z)?;
    match zs {
        // −∂_s (z − y)^{-s} at 0 is log(z − y)
        ZeroSet::Finite(zeros) => Ok(zeros.iter().map(|(y, m)| *m as f64 * (z - y).ln()).sum()),
        ZeroSet::Progression { start, step } => {
            // Σ (z − y_k)^{-s} = d^{-s} ζ(s, (z − start)/d)
            let d = -step;
            let a = (z - start) / d;
            minus_ds_at_zero(|s| Ok((-s * d.ln()).exp() * hurwitz_zeta_complex(s, a)?))
        }
    }
}

/// D(z) = exp(−∂_s 𝒵(s, z)|_{s=0}).
pub fn regularized_det(zs: &ZeroSet, z: Complex64) -> Result<Complex64> {
    Ok(log_regularized_det(zs, z)?.exp())
}

/// Coefficients of the large-z expansion of −log D_f(z) + log Δ_f(z):
/// the polynomial part b₂z² + b₁z + b₀ and the log-term weights ã.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpansionData {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
    pub a_tilde0: f64,
    pub a_tilde1: f64,
    pub a_tilde2: f64,
}

impl ExpansionData {
    pub fn zero() -> Self {
        Self { b0: 0.0, b1: 0.0, b2: 0.0, a_tilde0: 0.0, a_tilde1: 0.0, a_tilde2: 0.0 }
    }

    /// Data for f(z) = G(z + 1), read off the asymptotic expansion of
    /// log G(z + 1): log-term weights ½, 0, −1/12 and b = (ζ'(−1), −ζ'(0), 0).
    pub fn barnes() -> Self {
        use crate::specfun::{HALF_LOG_TWO_PI, ZETA_PRIME_AT_MINUS_ONE};
        Self {
            b0: ZETA_PRIME_AT_MINUS_ONE,
            b1: HALF_LOG_TWO_PI,
            b2: 0.0,
            a_tilde0: -1.0 / 12.0,
            a_tilde1: 0.0,
            a_tilde2: 0.5,
        }
    }
}

/// exp(−(b₂z² + b₁z + b₀)) Δ_f(z), with log Δ_f supplied by the caller.
pub fn voros_assemble<F>(expansion: &ExpansionData, hadamard_log: F, z: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let poly = expansion.b2 * z * z + expansion.b1 * z + expansion.b0;
    Ok((hadamard_log(z)? - poly).exp())
}

/// The closing assembly of the sign argument for one family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignPipeline {
    /// (−1)^{N+P} sgn d(1)
    pub sign: i32,
    /// log of g₁ / (π^{c/2} |d(1)|)
    pub alpha: f64,
    /// Π over the real divisor of ((½ − x)/(x − ½))^{|order|}, principal logs
    pub ledger_factor: f64,
    /// ledger_factor · π^{c/2} (d(1)/g₁) e^α
    pub reassembled: f64,
    pub consistent: bool,
}

pub fn sign_pipeline(family: &ScatteringFamily) -> Result<SignPipeline> {
    let divisor = count_divisor(family)?;
    let head = dirichlet_head(family, 1)?;
    let alpha = corollary_alpha(family)?.ln();
    // each point x > ½ of the ledger contributes exp(±(log(½ − x) − log(x − ½))),
    // i.e. a factor e^{iπ} per unit of order, whichever way the order points
    let mut log_ledger = Complex64::new(0.0, 0.0);
    for e in &divisor.breakdown {
        let x = Complex64::new(e.location, 0.0);
        log_ledger += e.order.unsigned_abs() as f64 * ((0.5 - x).ln() - (x - 0.5).ln());
    }
    let ledger = log_ledger.exp();
    let ledger_factor = ledger.re;
    let parity = if (divisor.zeros + divisor.poles) % 2 == 0 { 1 } else { -1 };
    let sign = parity * if head.d1 < 0.0 { -1 } else { 1 };
    let reassembled = ledger_factor * PI.powf(0.5 * head.cusps as f64) * (head.d1 / head.g1) * alpha.exp();
    let consistent = ledger.im.abs() < 1e-12
        && (ledger_factor - parity as f64).abs() < 1e-12
        && (reassembled - sign as f64).abs() < 1e-12;
    Ok(SignPipeline { sign, alpha, ledger_factor, reassembled, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{hurwitz_zeta, log_barnes_g, log_gamma, riemann_zeta, HALF_LOG_TWO_PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pm_one() -> ZeroSet {
        ZeroSet::finite(vec![(c(1.0, 0.0), 1), (c(-1.0, 0.0), 1)]).unwrap()
    }

    #[test]
    fn finite_sum_and_det() {
        let v = superzeta_sum(&pm_one(), c(2.0, 0.0), c(3.0, 0.0), 10).unwrap();
        assert!((v.value - 0.3125).norm() < 1e-15);
        assert_eq!(v.terms, 2);
        assert!((regularized_det(&pm_one(), c(3.0, 0.0)).unwrap() - 8.0).norm() < 1e-13);
    }

    #[test]
    fn progression_sums() {
        let zs = ZeroSet::negative_integers();
        let v = superzeta_sum(&zs, c(3.0, 0.0), c(0.0, 0.0), 50).unwrap();
        let z3 = riemann_zeta(c(3.0, 0.0)).unwrap();
        assert!((v.value - z3).norm() <= v.error_estimate, "{} vs {z3}", v.value);
        let v = superzeta_sum(&zs, c(3.0, 0.0), c(0.5, 0.0), 50).unwrap();
        let h = hurwitz_zeta(c(3.0, 0.0), 1.5).unwrap();
        assert!((v.value - h).norm() <= v.error_estimate);
        assert!(matches!(superzeta_sum(&zs, c(2.0, 0.0), c(0.5, 0.0), 50), Err(Error::Convergence(_))));
    }

    #[test]
    fn lerch_oracle() {
        for z in [0.5, 1.0, 2.5, 4.0] {
            let d = regularized_det(&ZeroSet::negative_integers(), c(z, 0.0)).unwrap();
            let expect = (HALF_LOG_TWO_PI - log_gamma(c(z + 1.0, 0.0)).unwrap().re).exp();
            assert!((d.re - expect).abs() < 1e-8 && d.im.abs() < 1e-12, "z = {z}");
        }
        let d = regularized_det(&ZeroSet::negative_integers(), c(1.0, 0.0)).unwrap();
        assert!((d.re - (2.0 * PI).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn cut_plane() {
        let one = ZeroSet::finite(vec![(c(1.0, 0.0), 1)]).unwrap();
        assert!(regularized_det(&one, c(0.0, 0.0)).is_err());
        assert!(regularized_det(&ZeroSet::negative_integers(), c(-1.0, 0.0)).is_err());
        assert!(regularized_det(&ZeroSet::negative_integers(), c(-1.5, 0.2)).is_ok());
        assert!(ZeroSet::progression(0.0, 1.0).is_err());
        assert!(ZeroSet::finite(vec![]).is_err());
    }

    #[test]
    fn mirrored_pair_gives_minus_one() {
        // exp(−∂_s[(z − σ)^{-s} − (z − (1 − σ))^{-s}]) at z = ½
        for sigma in [0.7, 1.0, 2.3] {
            let z = c(0.5, 0.0);
            let v = (-(-(z - sigma).ln()) + (-(z - (1.0 - sigma)).ln())).exp();
            let v = 1.0 / v;
            assert!((v - (-1.0)).norm() < 1e-12, "{v}");
        }
    }

    #[test]
    fn json_forms() {
        let f: ZeroSet = serde_json::from_str(r#"{"kind":"finite","zeros":[[1,0,1],[-1,0,2]]}"#).unwrap();
        assert_eq!(f, ZeroSet::Finite(vec![(c(1.0, 0.0), 1), (c(-1.0, 0.0), 2)]));
        let p: ZeroSet = serde_json::from_str(r#"{"kind":"progression","start":-1,"step":-1}"#).unwrap();
        assert_eq!(p, ZeroSet::negative_integers());
        assert!(serde_json::from_str::<ZeroSet>(r#"{"kind":"progression","start":0,"step":2}"#).is_err());
        let back: ZeroSet = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn voros_identity_and_barnes() {
        let z = c(1.3, 0.4);
        let v = voros_assemble(&ExpansionData::zero(), |z| Ok(z.ln()), z).unwrap();
        assert!((v - z).norm() < 1e-15);
        // zeros of G(z + 1): y = −k with multiplicity k,
        // 𝒵(s, z) = ζ(s − 1, z + 1) − z ζ(s, z + 1)
        let z = c(10.0, 0.0);
        let zeta_g = |s: Complex64| -> Result<Complex64> {
            Ok(hurwitz_zeta_complex(s - 1.0, z + 1.0)? - z * hurwitz_zeta_complex(s, z + 1.0)?)
        };
        let oracle = minus_ds_at_zero(zeta_g).unwrap().exp();
        let assembled = voros_assemble(&ExpansionData::barnes(), log_barnes_g, z).unwrap();
        assert!(((assembled - oracle) / oracle).norm() < 1e-4, "{assembled} vs {oracle}");
    }

    #[test]
    fn sign_pipelines() {
        let m = sign_pipeline(&ScatteringFamily::Modular).unwrap();
        assert_eq!(m.sign, -1);
        assert!((m.alpha + 0.5 * PI.ln()).abs() < 1e-15);
        assert!(m.consistent);
        assert_eq!(sign_pipeline(&ScatteringFamily::Gamma0Squarefree(vec![2])).unwrap().sign, 1);
        assert_eq!(sign_pipeline(&ScatteringFamily::Gamma0Plus(vec![])).unwrap().sign, -1);
    }
}
