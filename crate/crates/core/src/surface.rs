//! Orbifold bookkeeping for a cofinite Fuchsian group: signature, hyperbolic
//! volume, multiplicities of the trivial zeros of the Selberg zeta function,
//! and the entire function G₁ built from Barnes G that carries those zeros.

use crate::error::{Error, Result};
use crate::specfun::{barnes_log_derivative, digamma, log_barnes_g, log_gamma, ComplexValue};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Signature of a cofinite Fuchsian group with at least one cusp.
///
/// Construction rejects signatures whose Gauss–Bonnet volume is not
/// positive, so every value of this type describes a hyperbolic orbifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor")]
pub struct GroupDescriptor {
    genus: u32,
    cusps: u32,
    elliptic_orders: Vec<u32>,
}

#[derive(Deserialize)]
struct RawDescriptor {
    genus: u32,
    cusps: u32,
    #[serde(default)]
    elliptic_orders: Vec<u32>,
}

impl TryFrom<RawDescriptor> for GroupDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        GroupDescriptor::new(raw.genus, raw.cusps, raw.elliptic_orders)
    }
}

/// Both forms of the trivial-zero multiplicity at s = -n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub n: u32,
    pub floor_formula: i64,
    pub sine_formula: f64,
    pub agree: bool,
}

const AGREE_TOL: f64 = 1e-8;

impl GroupDescriptor {
    pub fn new(genus: u32, cusps: u32, mut elliptic_orders: Vec<u32>) -> Result<Self> {
        if cusps == 0 {
            return Err(Error::Domain("at least one cusp is required".into()));
        }
        if let Some(bad) = elliptic_orders.iter().find(|&&d| d < 2) {
            return Err(Error::Domain(format!("elliptic order {bad} is below 2")));
        }
        elliptic_orders.sort_unstable();
        let desc = Self { genus, cusps, elliptic_orders };
        let vol = desc.volume_unchecked();
        if vol.is_nan() || vol <= 0.0 {
            return Err(Error::Domain(format!(
                "signature (g={genus}, c={cusps}, orders={:?}) has volume {vol} ≤ 0",
                desc.elliptic_orders
            )));
        }
        Ok(desc)
    }

    /// PSL(2,ℤ): genus 0, one cusp, elliptic points of order 2 and 3.
    pub fn modular() -> Self {
        Self::new(0, 1, vec![2, 3]).expect("modular signature is hyperbolic")
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn cusps(&self) -> u32 {
        self.cusps
    }

    pub fn elliptic_orders(&self) -> &[u32] {
        &self.elliptic_orders
    }

    /// Number of elliptic classes, 𝐞.
    pub fn elliptic_count(&self) -> u32 {
        self.elliptic_orders.len() as u32
    }

    /// 2g - 2 + 𝐜.
    pub fn euler_term(&self) -> i64 {
        2 * self.genus as i64 - 2 + self.cusps as i64
    }

    fn volume_unchecked(&self) -> f64 {
        let cone: f64 = self.elliptic_orders.iter().map(|&d| 1.0 - 1.0 / d as f64).sum();
        2.0 * PI * (self.euler_term() as f64 + cone)
    }

    /// Gauss–Bonnet volume 2π(2g - 2 + 𝐜 + Σ (1 - 1/d_R)).
    pub fn volume(&self) -> f64 {
        self.volume_unchecked()
    }

    /// m_n = (vol/2π)(2n+1) - Σ_R (1/d_R) Σ_{k=1}^{d_R-1} sin(kπ(2n+1)/d_R) / sin(kπ/d_R),
    /// in floating point.
    pub fn trivial_multiplicity_sine(&self, n: u32) -> f64 {
        let odd = (2 * n + 1) as f64;
        let elliptic: f64 = self.elliptic_orders.iter().map(|&d| sine_sum(d, n) / d as f64).sum();
        self.volume() / (2.0 * PI) * odd - elliptic
    }

    /// m_n = (2n+1)(2g-2+𝐜) + 2n𝐞 - 2 Σ_R ⌊n/d_R⌋, exactly.
    ///
    /// This is a net divisor order: for PSL(2,ℤ), m_0 = -1.
    pub fn trivial_multiplicity_floor(&self, n: u32) -> i64 {
        let n = n as i64;
        let floors: i64 = self.elliptic_orders.iter().map(|&d| n / d as i64).sum();
        (2 * n + 1) * self.euler_term() + 2 * n * self.elliptic_count() as i64 - 2 * floors
    }

    pub fn multiplicity_report(&self, n: u32) -> MultiplicityReport {
        let floor_formula = self.trivial_multiplicity_floor(n);
        let sine_formula = self.trivial_multiplicity_sine(n);
        MultiplicityReport {
            n,
            floor_formula,
            sine_formula,
            agree: (floor_formula as f64 - sine_formula).abs() < AGREE_TOL,
        }
    }

    /// Checks Σ_R (1/d_R)(2n+1 + Σ_k sin(kπ(2n+1)/d_R)/sin(kπ/d_R)) = Σ_R (2⌊n/d_R⌋ + 1)
    /// for every 0 ≤ n ≤ `n_max`.
    pub fn verify_sine_floor_identity(&self, n_max: u32) -> bool {
        (0..=n_max).all(|n| {
            let odd = (2 * n + 1) as f64;
            let lhs: f64 = self.elliptic_orders.iter().map(|&d| (odd + sine_sum(d, n)) / d as f64).sum();
            let rhs: u32 = self.elliptic_orders.iter().map(|&d| 2 * (n / d) + 1).sum();
            (lhs - rhs as f64).abs() < AGREE_TOL
        })
    }

    fn g1_singularity_check(&self, s: Complex64) -> Result<()> {
        let n = s.re.round();
        if n <= 0.0 && Complex64::new(s.re - n, s.im).norm() < 1e-12 {
            let m = self.trivial_multiplicity_floor((-n) as u32);
            return Err(match m.signum() {
                1 => Error::Zero(format!("G1 has a zero of order {m} at {n}")),
                -1 => Error::Pole(format!("G1 has a pole of order {} at {n}", -m)),
                _ => Error::Domain(format!(
                    "G1 is regular at {n} but its Barnes factors are not; evaluate off the lattice"
                )),
            });
        }
        Ok(())
    }

    /// log G₁(s) with
    /// G₁(s) = ((2π)^{-s} G(s+1)² / Γ(s))^{2g-2+𝐜} ((2π)^{-s} G(s+1)²)^{𝐞} G_E(s)^{-2},
    /// G_E(s) = Π_R Π_{m=0}^{d_R-1} G((s+m)/d_R + 1).
    pub fn log_g1(&self, s: ComplexValue) -> Result<ComplexValue> {
        self.g1_singularity_check(s)?;
        let log_two_pi = (2.0 * PI).ln();
        let barnes = log_barnes_g(s)?;
        let core = -s * log_two_pi + 2.0 * barnes;
        let mut acc = self.euler_term() as f64 * (core - log_gamma(s)?) + self.elliptic_count() as f64 * core;
        for &d in &self.elliptic_orders {
            let df = d as f64;
            for m in 0..d {
                acc -= 2.0 * log_barnes_g((s + m as f64) / df)?;
            }
        }
        Ok(acc)
    }

    /// d/ds log G₁(s), assembled from ψ and the Barnes log-derivative.
    pub fn log_g1_derivative(&self, s: ComplexValue) -> Result<ComplexValue> {
        self.g1_singularity_check(s)?;
        let log_two_pi = (2.0 * PI).ln();
        let core = -log_two_pi + 2.0 * barnes_log_derivative(s)?;
        let mut acc = self.euler_term() as f64 * (core - digamma(s)?) + self.elliptic_count() as f64 * core;
        for &d in &self.elliptic_orders {
            let df = d as f64;
            for m in 0..d {
                acc -= 2.0 / df * barnes_log_derivative((s + m as f64) / df)?;
            }
        }
        Ok(acc)
    }

    /// (1/2πi) ∮ (log G₁)' ds over the circle |s - center| = radius,
    /// trapezoid rule with `nodes` points. Not rounded.
    pub fn g1_winding(&self, center: ComplexValue, radius: f64, nodes: usize) -> Result<f64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..nodes {
            let theta = 2.0 * PI * j as f64 / nodes as f64;
            let e = Complex64::from_polar(1.0, theta);
            let s = center + radius * e;
            // ds = i r e^{iθ} dθ
            acc += self.log_g1_derivative(s)? * Complex64::i() * radius * e;
        }
        let integral = acc * (2.0 * PI / nodes as f64);
        Ok((integral / (2.0 * PI * Complex64::i())).re)
    }
}

/// Σ_{k=1}^{d-1} sin(kπ(2n+1)/d) / sin(kπ/d).
fn sine_sum(d: u32, n: u32) -> f64 {
    let df = d as f64;
    let odd = (2 * n + 1) as f64;
    (1..d)
        .map(|k| {
            let k = k as f64;
            (k * PI * odd / df).sin() / (k * PI / df).sin()
        })
        .sum()
}
