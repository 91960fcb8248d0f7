//! Explicit scattering determinants φ(s) for PSL(2,ℤ), Γ₀(N) and Γ₀(N)⁺ with
//! N squarefree: pointwise evaluation, Laurent germs at real points, the
//! leading Dirichlet data, and the central value φ(½).

mod factor;
mod germ;
mod head;
mod selberg;

pub use factor::{Factor, MAX_GERM_DEPTH};
pub use germ::{laurent_coefficients, LaurentGerm};
pub use head::{dirichlet_head, DirichletHead, DirichletSeries};
pub use selberg::{selberg_log_z, HyperbolicClass};

use crate::divisor::count_divisor;
use crate::error::{Error, Result};
use crate::specfun::ComplexValue;
use factor::SINGULAR_TOL;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Default number of Laurent coefficients kept in a germ.
pub const DEFAULT_GERM_DEPTH: usize = 6;

/// Which explicit scattering determinant is meant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyJson", into = "FamilyJson")]
pub enum ScatteringFamily {
    /// PSL(2,ℤ)
    Modular,
    /// Γ₀(N), N = product of the (nonempty) prime list
    Gamma0Squarefree(Vec<u64>),
    /// Γ₀(N)⁺; the empty list means N = 1
    Gamma0Plus(Vec<u64>),
}

/// JSON wire form: `{"family": "modular" | "gamma0" | "gamma0plus", "primes": [int]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyJson {
    pub family: String,
    #[serde(default)]
    pub primes: Vec<u64>,
}

impl TryFrom<FamilyJson> for ScatteringFamily {
    type Error = Error;

    fn try_from(raw: FamilyJson) -> Result<Self> {
        ScatteringFamily::from_parts(&raw.family, raw.primes)
    }
}

impl From<ScatteringFamily> for FamilyJson {
    fn from(f: ScatteringFamily) -> Self {
        FamilyJson { family: f.kind().to_string(), primes: f.primes().to_vec() }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn normalize_primes(mut primes: Vec<u64>) -> Result<Vec<u64>> {
    if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    primes.sort_unstable();
    if primes.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Domain("primes must be distinct (N squarefree)".into()));
    }
    // beyond eight primes the 2^r exponents get out of hand for f64
    if primes.len() > 8 {
        return Err(Error::Domain("at most eight primes are supported".into()));
    }
    Ok(primes)
}

/// One factor of φ raised to an integer power, with a label for ledgers.
#[derive(Debug, Clone)]
pub struct Term {
    pub label: String,
    pub exponent: i32,
    pub factor: Factor,
}

/// φ(s) = constant · Π factor^exponent.
#[derive(Debug, Clone)]
pub struct FactorProduct {
    pub constant: f64,
    pub terms: Vec<Term>,
}

impl ScatteringFamily {
    pub fn from_parts(kind: &str, primes: Vec<u64>) -> Result<Self> {
        let primes = normalize_primes(primes)?;
        match kind {
            "modular" if primes.is_empty() => Ok(Self::Modular),
            "modular" => Err(Error::Domain("the modular family takes no primes".into())),
            "gamma0" if primes.is_empty() => Err(Error::Domain("gamma0 needs at least one prime".into())),
            "gamma0" => Ok(Self::Gamma0Squarefree(primes)),
            "gamma0plus" => Ok(Self::Gamma0Plus(primes)),
            other => Err(Error::Domain(format!("unknown family {other:?}"))),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Modular => "modular",
            Self::Gamma0Squarefree(_) => "gamma0",
            Self::Gamma0Plus(_) => "gamma0plus",
        }
    }

    pub fn primes(&self) -> &[u64] {
        match self {
            Self::Modular => &[],
            Self::Gamma0Squarefree(p) | Self::Gamma0Plus(p) => p,
        }
    }

    /// N = p₁ ⋯ p_r (1 for the modular group).
    pub fn level(&self) -> u64 {
        self.primes().iter().product()
    }

    /// Number of inequivalent cusps: 2^r for Γ₀(N), one otherwise.
    pub fn cusps(&self) -> u32 {
        match self {
            Self::Gamma0Squarefree(p) => 1 << p.len(),
            _ => 1,
        }
    }

    /// The acceptance set of families the sign law is checked on.
    pub fn standard_set() -> Vec<Self> {
        vec![
            Self::Modular,
            Self::Gamma0Squarefree(vec![2]),
            Self::Gamma0Squarefree(vec![3]),
            Self::Gamma0Squarefree(vec![5]),
            Self::Gamma0Squarefree(vec![2, 3]),
            Self::Gamma0Squarefree(vec![2, 3, 5]),
            Self::Gamma0Plus(vec![]),
            Self::Gamma0Plus(vec![2]),
            Self::Gamma0Plus(vec![2, 3]),
            Self::Gamma0Plus(vec![2, 3, 5]),
        ]
    }

    /// Factorization of φ used for evaluation, germs, divisors and φ'/φ.
    pub fn factors(&self) -> FactorProduct {
        let gamma_block = |e: i32| {
            vec![
                Term { label: "Gamma(s-1/2)".into(), exponent: e, factor: Factor::Gamma { a: 1.0, b: -0.5 } },
                Term { label: "Gamma(s)".into(), exponent: -e, factor: Factor::Gamma { a: 1.0, b: 0.0 } },
                Term { label: "zeta(2s-1)".into(), exponent: e, factor: Factor::Zeta { a: 2.0, b: -1.0 } },
                Term { label: "zeta(2s)".into(), exponent: -e, factor: Factor::Zeta { a: 2.0, b: 0.0 } },
            ]
        };
        match self {
            Self::Modular => FactorProduct { constant: PI.sqrt(), terms: gamma_block(1) },
            Self::Gamma0Squarefree(primes) => {
                let r = primes.len() as i32;
                let bracket = 1i32 << r;
                let local = 1i32 << (r - 1);
                let mut terms = gamma_block(bracket);
                for &p in primes {
                    let pf = p as f64;
                    terms.push(Term {
                        label: format!("1-{p}^(2-2s)"),
                        exponent: local,
                        factor: Factor::PowSum { scale: -1.0, base: pf, a: -2.0, b: 2.0, shift: 1.0 },
                    });
                    terms.push(Term {
                        label: format!("1-{p}^(2s)"),
                        exponent: -local,
                        factor: Factor::PowSum { scale: -1.0, base: pf, a: 2.0, b: 0.0, shift: 1.0 },
                    });
                }
                FactorProduct { constant: PI.powi(bracket / 2), terms }
            }
            Self::Gamma0Plus(primes) => {
                let mut terms = vec![
                    Term { label: "s".into(), exponent: 1, factor: Factor::Linear { a: 1.0, b: 0.0 } },
                    Term { label: "s-1".into(), exponent: -1, factor: Factor::Linear { a: 1.0, b: -1.0 } },
                    Term { label: "xi(2s-1)".into(), exponent: 1, factor: Factor::Xi { a: 2.0, b: -1.0 } },
                    Term { label: "xi(2s)".into(), exponent: -1, factor: Factor::Xi { a: 2.0, b: 0.0 } },
                ];
                let n = self.level();
                if n > 1 {
                    terms.push(Term {
                        label: format!("{n}^(-s)"),
                        exponent: 1,
                        factor: Factor::Exp { base: n as f64, a: -1.0, b: 0.0 },
                    });
                }
                for &p in primes {
                    let pf = p as f64;
                    terms.push(Term {
                        label: format!("{p}^s+{p}"),
                        exponent: 1,
                        factor: Factor::PowSum { scale: 1.0, base: pf, a: 1.0, b: 0.0, shift: pf },
                    });
                    terms.push(Term {
                        label: format!("{p}^s+1"),
                        exponent: -1,
                        factor: Factor::PowSum { scale: 1.0, base: pf, a: 1.0, b: 0.0, shift: 1.0 },
                    });
                }
                FactorProduct { constant: 1.0, terms }
            }
        }
    }
}

impl std::fmt::Display for ScatteringFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Modular => write!(f, "PSL(2,Z)"),
            Self::Gamma0Squarefree(_) => write!(f, "Gamma0({})", self.level()),
            Self::Gamma0Plus(_) => write!(f, "Gamma0({})+", self.level()),
        }
    }
}

fn singular_term(product: &FactorProduct, s: Complex64) -> Option<&Term> {
    product.terms.iter().find(|t| t.factor.is_singular_at(s, SINGULAR_TOL))
}

/// φ(s) away from the zeros and poles of its factors.
pub fn phi_eval(family: &ScatteringFamily, s: ComplexValue) -> Result<ComplexValue> {
    let product = family.factors();
    if let Some(t) = singular_term(&product, s) {
        return Err(Error::Singularity(format!(
            "{family}: factor {} is singular at {s}; use the germ path",
            t.label
        )));
    }
    let mut acc = Complex64::new(product.constant, 0.0);
    for t in &product.terms {
        acc *= t.factor.eval(s)?.powi(t.exponent);
    }
    Ok(acc)
}

/// φ'(s)/φ(s) assembled from the factors' logarithmic derivatives.
pub fn phi_log_derivative(family: &ScatteringFamily, s: ComplexValue) -> Result<ComplexValue> {
    let product = family.factors();
    if let Some(t) = singular_term(&product, s) {
        return Err(Error::Singularity(format!("{family}: factor {} is singular at {s}", t.label)));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for t in &product.terms {
        acc += t.exponent as f64 * t.factor.log_derivative(s)?;
    }
    Ok(acc)
}

/// Laurent germ of φ at the real point `a`, by germ arithmetic over the
/// factors.
pub fn germ_at(family: &ScatteringFamily, a: f64, depth: usize) -> Result<LaurentGerm> {
    if depth < 3 {
        return Err(Error::Domain(format!("germ depth {depth} < 3")));
    }
    let product = family.factors();
    let mut acc = LaurentGerm::constant(a, product.constant, depth);
    for t in &product.terms {
        acc = &acc * &t.factor.germ(a, depth)?.powi(t.exponent);
    }
    Ok(acc)
}

/// φ(½) two ways, and the sign predicted from the divisor and Dirichlet data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CentralValueReport {
    pub germ_value: f64,
    pub extrapolated_value: f64,
    pub predicted_sign: i32,
    pub matches: bool,
}

const GERM_MATCH_TOL: f64 = 1e-6;
const EXTRAPOLATION_MATCH_TOL: f64 = 1e-4;

/// Richardson extrapolation of φ(½ + ε) to ε = 0 over ε = 1e-2 · 2^{-k}, k = 0…6.
pub fn extrapolate_central(family: &ScatteringFamily) -> Result<f64> {
    let mut table: Vec<f64> = (0..7)
        .map(|k| phi_eval(family, Complex64::new(0.5 + 1e-2 * 0.5f64.powi(k), 0.0)).map(|v| v.re))
        .collect::<Result<_>>()?;
    for level in 1..table.len() {
        let w = 2f64.powi(level as i32);
        table = table.windows(2).map(|p| (w * p[1] - p[0]) / (w - 1.0)).collect();
    }
    Ok(table[0])
}

/// Sign of a nonzero real as ±1.
pub(crate) fn sign_of(x: f64) -> i32 {
    if x < 0.0 {
        -1
    } else {
        1
    }
}

pub fn central_value(family: &ScatteringFamily) -> Result<CentralValueReport> {
    let germ = germ_at(family, 0.5, DEFAULT_GERM_DEPTH)?;
    let germ_value = germ.value().ok_or_else(|| {
        Error::Singularity(format!("{family}: φ has order {} at 1/2, contradicting |φ(1/2)| = 1", germ.order))
    })?;
    let extrapolated_value = extrapolate_central(family)?;
    let divisor = count_divisor(family)?;
    let head = dirichlet_head(family, 1)?;
    let parity = if (divisor.zeros + divisor.poles) % 2 == 0 { 1 } else { -1 };
    let predicted_sign = parity * sign_of(head.d1);
    let target = predicted_sign as f64;
    Ok(CentralValueReport {
        germ_value,
        extrapolated_value,
        predicted_sign,
        matches: (germ_value - target).abs() < GERM_MATCH_TOL
            && (extrapolated_value - target).abs() < EXTRAPOLATION_MATCH_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::riemann_zeta;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn family_validation() {
        assert!(ScatteringFamily::from_parts("gamma0", vec![]).is_err());
        assert!(ScatteringFamily::from_parts("gamma0", vec![4]).is_err());
        assert!(ScatteringFamily::from_parts("gamma0", vec![3, 3]).is_err());
        assert!(ScatteringFamily::from_parts("modular", vec![2]).is_err());
        assert!(ScatteringFamily::from_parts("nope", vec![]).is_err());
        assert_eq!(
            ScatteringFamily::from_parts("gamma0plus", vec![5, 2]).unwrap(),
            ScatteringFamily::Gamma0Plus(vec![2, 5])
        );
        let f: ScatteringFamily = serde_json::from_str(r#"{"family":"gamma0","primes":[3,2]}"#).unwrap();
        assert_eq!(f, ScatteringFamily::Gamma0Squarefree(vec![2, 3]));
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"family":"gamma0","primes":[2,3]}"#);
        let m: ScatteringFamily = serde_json::from_str(r#"{"family":"modular"}"#).unwrap();
        assert_eq!(m, ScatteringFamily::Modular);
    }

    #[test]
    fn modular_at_two() {
        let v = phi_eval(&ScatteringFamily::Modular, c(2.0, 0.0)).unwrap();
        let z3 = 1.202_056_903_159_594_3;
        let z4 = PI.powi(4) / 90.0;
        assert!((v.re - PI / 2.0 * z3 / z4).abs() < 1e-13);
        assert!((v.re - 1.744_568_082_131_256).abs() < 1e-12);
    }

    #[test]
    fn gamma0plus_at_two_by_factors() {
        let xi = |w: f64| {
            0.5 * w
                * (w - 1.0)
                * PI.powf(-w / 2.0)
                * crate::specfun::log_gamma(c(w / 2.0, 0.0)).unwrap().exp().re
                * riemann_zeta(c(w, 0.0)).unwrap().re
        };
        let expect = 2.0 * xi(3.0) / xi(4.0) / 36.0 * (6.0 / 5.0) * (12.0 / 10.0);
        let v = phi_eval(&ScatteringFamily::Gamma0Plus(vec![2, 3]), c(2.0, 0.0)).unwrap();
        assert!((v.re - expect).abs() / expect < 1e-12);
    }

    #[test]
    fn functional_equation_spot() {
        for f in ScatteringFamily::standard_set() {
            let s = c(0.7, 0.3);
            let p = phi_eval(&f, s).unwrap() * phi_eval(&f, 1.0 - s).unwrap();
            assert!((p - 1.0).norm() < 1e-9, "{f}: {p}");
        }
    }

    #[test]
    fn singular_points_error() {
        let m = ScatteringFamily::Modular;
        assert!(matches!(phi_eval(&m, c(0.5, 0.0)), Err(Error::Singularity(_))));
        assert!(matches!(phi_eval(&m, c(1.0, 0.0)), Err(Error::Singularity(_))));
        let g = ScatteringFamily::Gamma0Squarefree(vec![2]);
        assert!(matches!(phi_eval(&g, c(1.0, PI / 2f64.ln())), Err(Error::Singularity(_))));
    }

    #[test]
    fn germs_at_half_and_one() {
        let m = germ_at(&ScatteringFamily::Modular, 0.5, 6).unwrap();
        assert_eq!(m.order, 0);
        assert!((m.leading() + 1.0).abs() < 1e-10);
        assert_eq!(germ_at(&ScatteringFamily::Modular, 1.0, 6).unwrap().order, -1);
        for p in [2, 3, 7] {
            let g = germ_at(&ScatteringFamily::Gamma0Squarefree(vec![p]), 1.0, 6).unwrap();
            assert_eq!(g.order, -1, "p = {p}");
        }
        assert!(germ_at(&ScatteringFamily::Modular, 0.5, 2).is_err());
    }

    #[test]
    fn germ_agrees_with_direct_evaluation() {
        for f in ScatteringFamily::standard_set() {
            for a in [0.8, 1.3, 2.0] {
                let g = germ_at(&f, a, 6).unwrap();
                let v = phi_eval(&f, c(a, 0.0)).unwrap().re;
                assert_eq!(g.order, 0);
                assert!((g.leading() - v).abs() < 1e-7 * v.abs().max(1.0), "{f} at {a}");
            }
        }
    }

    #[test]
    fn germ_against_cauchy_on_phi_itself() {
        // φ is regular at ½; its Taylor coefficients from a circle of φ values
        // are an independent route to the germ.
        for f in ScatteringFamily::standard_set() {
            let g = germ_at(&f, 0.5, 6).unwrap();
            let direct = laurent_coefficients(|s| phi_eval(&f, s), 0.5, 0.2, 0, 6).unwrap();
            for (k, (a, b)) in g.coeffs.iter().zip(&direct).enumerate() {
                assert!((a - b).abs() < 1e-7 * (1.0 + b.abs()), "{f} k={k}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn plus_family_at_level_one_equals_modular() {
        let plus = ScatteringFamily::Gamma0Plus(vec![]);
        for s in [c(2.0, 0.0), c(0.7, 3.1), c(-1.3, 0.4), c(1.6, -7.0)] {
            let a = phi_eval(&plus, s).unwrap();
            let b = phi_eval(&ScatteringFamily::Modular, s).unwrap();
            assert!((a - b).norm() / b.norm() < 1e-11, "{s}");
        }
    }

    #[test]
    fn central_values() {
        let m = central_value(&ScatteringFamily::Modular).unwrap();
        assert!((m.germ_value + 1.0).abs() < 1e-8);
        assert_eq!(m.predicted_sign, -1);
        assert!(m.matches);
        let g = central_value(&ScatteringFamily::Gamma0Squarefree(vec![2, 3])).unwrap();
        assert!((g.germ_value - 1.0).abs() < 1e-8 && g.matches);
        let p = central_value(&ScatteringFamily::Gamma0Plus(vec![2, 3, 5])).unwrap();
        assert!((p.germ_value + 1.0).abs() < 1e-8 && p.matches);
    }
}
