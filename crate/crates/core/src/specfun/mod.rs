//! Complex special functions: log-Gamma, digamma, Riemann and Hurwitz zeta,
//! and the Barnes G-function.
//!
//! Everything works in IEEE double precision on `Complex64`. Logarithms and
//! complex powers use the principal branch, `z^{-s} = exp(-s log z)` with
//! `arg z ∈ (-π, π]`.

mod barnes;
mod bernoulli;
mod gamma;
mod zeta;

pub use barnes::{barnes_log_derivative, log_barnes_g, log_barnes_g_asymptotic};
pub use bernoulli::{bernoulli_table, BernoulliTable};
pub use gamma::{digamma, log_gamma, log_gamma_stirling};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_complex, hurwitz_zeta_ds0, riemann_zeta, zeta_laurent_at_one,
    zeta_log_derivative,
};

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Complex argument/value type used throughout the crate.
pub type ComplexValue = Complex64;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ζ'(0) = -½ log 2π.
pub const ZETA_PRIME_AT_ZERO: f64 = -0.918_938_533_204_672_8;

/// ζ'(-1), stored rather than computed (Glaisher: ζ'(-1) = 1/12 - log A).
pub const ZETA_PRIME_AT_MINUS_ONE: f64 = -0.165_421_143_700_450_929_2;

/// ½ log 2π.
pub const HALF_LOG_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Stieltjes constants γ_0 … γ_12, so that
/// ζ(w) = 1/(w-1) + Σ (-1)^n γ_n/n! (w-1)^n.
pub const STIELTJES: [f64; 13] = [
    0.577_215_664_901_532_86,
    -0.072_815_845_483_676_725,
    -0.009_690_363_192_872_318_5,
    0.002_053_834_420_303_345_9,
    0.002_325_370_065_467_300_1,
    0.000_793_323_817_301_062_70,
    -0.000_238_769_345_430_199_61,
    -0.000_527_289_567_057_751_05,
    -0.000_352_123_353_803_039_51,
    -0.000_034_394_774_418_088_048,
    0.000_205_332_814_909_064_79,
    0.000_270_184_439_543_903_53,
    0.000_167_272_912_105_140_19,
];

/// Taylor coefficients of 1/Γ(z) at z = 0: 1/Γ(z) = Σ_{k≥1} a_k z^k,
/// stored from a_1.
pub const RECIPROCAL_GAMMA_TAYLOR: [f64; 14] = [
    1.0,
    0.577_215_664_901_532_86,
    -0.655_878_071_520_253_88,
    -0.042_002_635_034_095_236,
    0.166_538_611_382_291_49,
    -0.042_197_734_555_544_337,
    -0.009_621_971_527_876_973_6,
    0.007_218_943_246_663_099_5,
    -0.001_165_167_591_859_065_1,
    -0.000_215_241_674_114_950_97,
    0.000_128_050_282_388_116_19,
    -0.000_020_134_854_780_788_239,
    -1.250_493_482_142_670_7e-6,
    1.133_027_231_981_695_9e-6,
];

pub(crate) fn check_finite(s: Complex64, what: &str) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what}: non-finite argument {s}")))
    }
}

/// Distance from `s` to the nearest non-positive integer, or `None` if the
/// nearest integer is positive.
pub(crate) fn distance_to_nonpositive_integer(s: Complex64) -> Option<f64> {
    let n = s.re.round();
    if n > 0.0 {
        return None;
    }
    Some(Complex64::new(s.re - n, s.im).norm())
}

pub(crate) fn ensure_finite(v: Complex64, what: &str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{what}: result overflowed")))
    }
}
