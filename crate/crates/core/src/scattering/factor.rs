//! Primitive meromorphic factors φ is assembled from. Every factor is a
//! function of an affine argument w = a·s + b with a ≠ 0 and is real on the
//! real axis.

use super::germ::{laurent_coefficients, LaurentGerm};
use crate::error::{Error, Result};
use crate::specfun::{
    digamma, log_gamma, riemann_zeta, zeta_laurent_at_one, zeta_log_derivative, RECIPROCAL_GAMMA_TAYLOR,
};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Points closer than this to a factor's zero or pole count as on it.
pub(crate) const SINGULAR_TOL: f64 = 1e-10;
/// Deepest germ the stored expansions (Γ at poles, ζ at 1) support.
pub const MAX_GERM_DEPTH: usize = 12;
const MAX_CAUCHY_RADIUS: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factor {
    /// Γ(a s + b)
    Gamma { a: f64, b: f64 },
    /// ζ(a s + b)
    Zeta { a: f64, b: f64 },
    /// a s + b
    Linear { a: f64, b: f64 },
    /// base^{a s + b}
    Exp { base: f64, a: f64, b: f64 },
    /// scale · base^{a s + b} + shift
    PowSum { scale: f64, base: f64, a: f64, b: f64, shift: f64 },
    /// ξ(a s + b) with ξ(w) = ½ w (w-1) π^{-w/2} Γ(w/2) ζ(w)
    Xi { a: f64, b: f64 },
}

impl Factor {
    fn arg(&self, s: Complex64) -> Complex64 {
        match *self {
            Factor::Gamma { a, b }
            | Factor::Zeta { a, b }
            | Factor::Linear { a, b }
            | Factor::Exp { a, b, .. }
            | Factor::PowSum { a, b, .. }
            | Factor::Xi { a, b } => a * s + b,
        }
    }

    fn slope(&self) -> f64 {
        match *self {
            Factor::Gamma { a, .. }
            | Factor::Zeta { a, .. }
            | Factor::Linear { a, .. }
            | Factor::Exp { a, .. }
            | Factor::PowSum { a, .. }
            | Factor::Xi { a, .. } => a,
        }
    }

    /// ξ(a s + b) as ½ · Π primitive^{exponent}.
    fn xi_primitives(a: f64, b: f64) -> [(Factor, i32); 5] {
        [
            (Factor::Linear { a, b }, 1),
            (Factor::Linear { a, b: b - 1.0 }, 1),
            (Factor::Exp { base: PI, a: -0.5 * a, b: -0.5 * b }, 1),
            (Factor::Gamma { a: 0.5 * a, b: 0.5 * b }, 1),
            (Factor::Zeta { a, b }, 1),
        ]
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        let w = self.arg(s);
        Ok(match *self {
            Factor::Gamma { .. } => log_gamma(w)?.exp(),
            Factor::Zeta { .. } => riemann_zeta(w)?,
            Factor::Linear { .. } => w,
            Factor::Exp { base, .. } => (w * base.ln()).exp(),
            Factor::PowSum { scale, base, shift, .. } => scale * (w * base.ln()).exp() + shift,
            Factor::Xi { a, b } => {
                let mut acc = Complex64::new(0.5, 0.0);
                for (f, e) in Self::xi_primitives(a, b) {
                    acc *= f.eval(s)?.powi(e);
                }
                acc
            }
        })
    }

    /// d/ds log of the factor.
    pub fn log_derivative(&self, s: Complex64) -> Result<Complex64> {
        let w = self.arg(s);
        let a = self.slope();
        Ok(match *self {
            Factor::Gamma { .. } => a * digamma(w)?,
            Factor::Zeta { .. } => a * zeta_log_derivative(w)?,
            Factor::Linear { .. } => a / w,
            Factor::Exp { base, .. } => Complex64::new(a * base.ln(), 0.0),
            Factor::PowSum { scale, base, shift, .. } => {
                let p = scale * (w * base.ln()).exp();
                p * a * base.ln() / (p + shift)
            }
            Factor::Xi { a, b } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (f, e) in Self::xi_primitives(a, b) {
                    acc += e as f64 * f.log_derivative(s)?;
                }
                acc
            }
        })
    }

    /// Poles of the factor (complex), as s-values, within `window` of `s`.
    fn poles_near(&self, s: Complex64, window: f64) -> Vec<Complex64> {
        let a = self.slope();
        let w = self.arg(s);
        match *self {
            Factor::Gamma { b, .. } => {
                // w = -n, n ≥ 0
                let reach = (window * a.abs()).ceil() as i64 + 1;
                let base = (-w.re).round() as i64;
                (base - reach..=base + reach)
                    .filter(|n| *n >= 0)
                    .map(|n| Complex64::new((-(n as f64) - b) / a, 0.0))
                    .filter(|p| (p - s).norm() <= window)
                    .collect()
            }
            Factor::Zeta { b, .. } => {
                let p = Complex64::new((1.0 - b) / a, 0.0);
                if (p - s).norm() <= window {
                    vec![p]
                } else {
                    vec![]
                }
            }
            Factor::Xi { .. } | Factor::Linear { .. } | Factor::Exp { .. } | Factor::PowSum { .. } => {
                vec![]
            }
        }
    }

    /// Zeros of the factor within `window` of `s`. Nontrivial zeros of ζ are
    /// not tracked.
    fn zeros_near(&self, s: Complex64, window: f64) -> Vec<Complex64> {
        let a = self.slope();
        let w = self.arg(s);
        match *self {
            Factor::Gamma { .. } | Factor::Exp { .. } | Factor::Xi { .. } => vec![],
            Factor::Linear { b, .. } => {
                let z = Complex64::new(-b / a, 0.0);
                if (z - s).norm() <= window {
                    vec![z]
                } else {
                    vec![]
                }
            }
            Factor::Zeta { b, .. } => {
                // trivial zeros w = -2k, k ≥ 1
                let reach = (window * a.abs() / 2.0).ceil() as i64 + 1;
                let base = (-w.re / 2.0).round() as i64;
                (base - reach..=base + reach)
                    .filter(|k| *k >= 1)
                    .map(|k| Complex64::new((-2.0 * k as f64 - b) / a, 0.0))
                    .filter(|z| (z - s).norm() <= window)
                    .collect()
            }
            Factor::PowSum { scale, base, b, shift, .. } => {
                // base^w = -shift/scale  ⇒  w = log(-shift/scale)/log(base) + 2πik/log(base)
                if shift == 0.0 {
                    return vec![];
                }
                let lb = base.ln();
                let target = Complex64::new(-shift / scale, 0.0).ln() / lb;
                let step = 2.0 * PI / lb;
                let k0 = ((w.im - target.im) / step).round() as i64;
                let reach = (window * a.abs() / step.abs()).ceil() as i64 + 1;
                (k0 - reach..=k0 + reach)
                    .map(|k| (target + Complex64::new(0.0, step * k as f64) - b) / a)
                    .filter(|z| (z - s).norm() <= window)
                    .collect()
            }
        }
    }

    /// True when `s` lies within `tol` of a zero or pole of this factor, or of
    /// one of the primitive pieces a composite factor is evaluated through.
    pub fn is_singular_at(&self, s: Complex64, tol: f64) -> bool {
        if let Factor::Xi { a, b } = *self {
            return Self::xi_primitives(a, b).iter().any(|(f, _)| f.is_singular_at(s, tol));
        }
        !self.poles_near(s, tol).is_empty() || !self.zeros_near(s, tol).is_empty()
    }

    /// Net divisor order at the real point `x` (0 if regular and nonzero).
    pub fn order_at(&self, x: f64) -> i32 {
        let s = Complex64::new(x, 0.0);
        if let Factor::Xi { a, b } = *self {
            return Self::xi_primitives(a, b).iter().map(|(f, e)| e * f.order_at(x)).sum();
        }
        self.zeros_near(s, SINGULAR_TOL).len() as i32 - self.poles_near(s, SINGULAR_TOL).len() as i32
    }

    /// Real points in (lo, hi) where a primitive piece of the factor has a
    /// zero or pole. Candidates only; `order_at` decides the net order.
    pub fn real_singular_candidates(&self, lo: f64, hi: f64) -> Vec<f64> {
        if let Factor::Xi { a, b } = *self {
            return Self::xi_primitives(a, b)
                .iter()
                .flat_map(|(f, _)| f.real_singular_candidates(lo, hi))
                .collect();
        }
        let mid = Complex64::new(0.5 * (lo + hi), 0.0);
        let half = 0.5 * (hi - lo);
        self.poles_near(mid, half)
            .into_iter()
            .chain(self.zeros_near(mid, half))
            .filter(|z| z.im.abs() < SINGULAR_TOL && z.re > lo && z.re < hi)
            .map(|z| z.re)
            .collect()
    }

    fn cauchy_radius(&self, x: f64) -> f64 {
        let s = Complex64::new(x, 0.0);
        let nearest = self
            .poles_near(s, 2.0 * MAX_CAUCHY_RADIUS + 1.0)
            .into_iter()
            .map(|p| (p - s).norm())
            .filter(|d| *d > SINGULAR_TOL)
            .fold(f64::INFINITY, f64::min);
        MAX_CAUCHY_RADIUS.min(0.5 * nearest)
    }

    /// Laurent germ of the factor at the real point `x`.
    pub fn germ(&self, x: f64, depth: usize) -> Result<LaurentGerm> {
        if !(1..=MAX_GERM_DEPTH).contains(&depth) {
            return Err(Error::Domain(format!("germ depth {depth} outside 1..={MAX_GERM_DEPTH}")));
        }
        let w0 = self.arg(Complex64::new(x, 0.0)).re;
        let a = self.slope();
        match *self {
            Factor::Linear { .. } => {
                let mut coeffs = vec![0.0; depth];
                if w0.abs() < SINGULAR_TOL {
                    coeffs[0] = a;
                    LaurentGerm::new(x, 1, coeffs)
                } else {
                    coeffs[0] = w0;
                    if depth > 1 {
                        coeffs[1] = a;
                    }
                    LaurentGerm::new(x, 0, coeffs)
                }
            }
            Factor::Exp { base, .. } => {
                let rate = a * base.ln();
                let mut c = base.powf(w0);
                let coeffs = (0..depth)
                    .map(|k| {
                        if k > 0 {
                            c *= rate / k as f64;
                        }
                        c
                    })
                    .collect();
                LaurentGerm::new(x, 0, coeffs)
            }
            Factor::PowSum { scale, base, shift, .. } => {
                let rate = a * base.ln();
                let mut c = scale * base.powf(w0);
                let mut raw = Vec::with_capacity(depth + 1);
                raw.push(c + shift);
                for k in 1..=depth {
                    c *= rate / k as f64;
                    raw.push(c);
                }
                if self.order_at(x) > 0 {
                    LaurentGerm::new(x, 1, raw[1..].to_vec())
                } else {
                    raw.truncate(depth);
                    LaurentGerm::new(x, 0, raw)
                }
            }
            Factor::Gamma { .. } => {
                let n = (-w0).round();
                if n >= 0.0 && (w0 + n).abs() < SINGULAR_TOL {
                    Ok(gamma_germ_at_pole(n as usize, depth).substitute_linear(x, a))
                } else {
                    self.cauchy_germ(x, 0, depth)
                }
            }
            Factor::Zeta { .. } => {
                if (w0 - 1.0).abs() < SINGULAR_TOL {
                    let g = LaurentGerm::new(0.0, -1, zeta_laurent_at_one(depth))?;
                    Ok(g.substitute_linear(x, a))
                } else {
                    self.cauchy_germ(x, self.order_at(x), depth)
                }
            }
            Factor::Xi { a, b } => {
                let mut acc = LaurentGerm::constant(x, 0.5, depth);
                for (f, e) in Self::xi_primitives(a, b) {
                    acc = &acc * &f.germ(x, depth)?.powi(e);
                }
                Ok(acc)
            }
        }
    }

    fn cauchy_germ(&self, x: f64, order: i32, depth: usize) -> Result<LaurentGerm> {
        let radius = self.cauchy_radius(x);
        let coeffs = laurent_coefficients(|s| self.eval(s), x, radius, order, depth)?;
        LaurentGerm::new(x, order, coeffs)
    }
}

/// Germ of Γ(w) at w = -n in t = w + n, from the stored Taylor series of 1/Γ:
/// Γ(w) = Γ(1+t) / Π_{j=0}^{n} (t - j).
fn gamma_germ_at_pole(n: usize, depth: usize) -> LaurentGerm {
    // 1/Γ(1+t) = Σ a_{k+1} t^k
    let recip = LaurentGerm { point: 0.0, order: 0, coeffs: RECIPROCAL_GAMMA_TAYLOR[..depth].to_vec() };
    let mut acc = recip.inverse();
    for j in 0..=n {
        let mut coeffs = vec![0.0; depth];
        let lin = if j == 0 {
            coeffs[0] = 1.0;
            LaurentGerm { point: 0.0, order: 1, coeffs }
        } else {
            coeffs[0] = -(j as f64);
            if depth > 1 {
                coeffs[1] = 1.0;
            }
            LaurentGerm { point: 0.0, order: 0, coeffs }
        };
        acc = &acc * &lin.inverse();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::EULER_GAMMA;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn stored_gamma_germs_match_cauchy() {
        for n in 0..4usize {
            let stored = gamma_germ_at_pole(n, 8);
            assert_eq!(stored.order, -1);
            let f = |s: Complex64| Ok(log_gamma(s)?.exp());
            let numeric = laurent_coefficients(f, -(n as f64), 0.3, -1, 8).unwrap();
            for (k, (a, b)) in stored.coeffs.iter().zip(&numeric).enumerate() {
                assert!((a - b).abs() < 1e-10 * (1.0 + b.abs()), "n={n} k={k}: {a} vs {b}");
            }
        }
        let g0 = gamma_germ_at_pole(0, 3);
        assert!((g0.coeffs[0] - 1.0).abs() < 1e-15);
        assert!((g0.coeffs[1] + EULER_GAMMA).abs() < 1e-15);
    }

    #[test]
    fn stored_zeta_germ_matches_cauchy() {
        let stored = Factor::Zeta { a: 1.0, b: 0.0 }.germ(1.0, 10).unwrap();
        let numeric = laurent_coefficients(riemann_zeta, 1.0, 0.4, -1, 10).unwrap();
        for (a, b) in stored.coeffs.iter().zip(&numeric) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn trivial_zero_order() {
        let z = Factor::Zeta { a: 2.0, b: -1.0 };
        // ζ(2s-1) vanishes at s = -1/2
        assert_eq!(z.order_at(-0.5), 1);
        assert_eq!(z.order_at(1.0), -1);
        assert_eq!(z.order_at(0.7), 0);
        let g = z.germ(-0.5, 5).unwrap();
        assert_eq!(g.order, 1);
        // slope = 2 ζ'(-2) = 2 · (-ζ(3)/(4π²))
        let expect = -2.0 * 1.202_056_903_159_594_3 / (4.0 * PI * PI);
        assert!((g.leading() - expect).abs() < 1e-11);
    }

    #[test]
    fn xi_is_regular_at_zero_and_one() {
        let xi = Factor::Xi { a: 1.0, b: 0.0 };
        assert_eq!(xi.order_at(0.0), 0);
        assert_eq!(xi.order_at(1.0), 0);
        assert_eq!(xi.order_at(-2.0), 0);
        for x in [0.0, 1.0] {
            let g = xi.germ(x, 6).unwrap();
            assert_eq!(g.order, 0);
            assert!((g.leading() - 0.5).abs() < 1e-11, "ξ({x}) = {}", g.leading());
        }
        // ξ(2) = π/6
        assert!((xi.eval(c(2.0)).unwrap().re - PI / 6.0).abs() < 1e-14);
        assert!(xi.is_singular_at(c(1.0), 1e-10));
    }

    #[test]
    fn powsum_zero_lattice() {
        // 1 - 2^{2-2s}: zeros at s = 1 + πik/ln 2
        let f = Factor::PowSum { scale: -1.0, base: 2.0, a: -2.0, b: 2.0, shift: 1.0 };
        assert_eq!(f.order_at(1.0), 1);
        assert!(f.is_singular_at(Complex64::new(1.0, PI / 2f64.ln()), 1e-9));
        assert!(!f.is_singular_at(Complex64::new(1.0, 1.0), 1e-9));
        let g = f.germ(1.0, 4).unwrap();
        assert_eq!(g.order, 1);
        assert!((g.leading() - 2.0 * 2f64.ln()).abs() < 1e-14);
        // p^s + 1 has no real zeros
        let h = Factor::PowSum { scale: 1.0, base: 3.0, a: 1.0, b: 0.0, shift: 1.0 };
        assert!(h.real_singular_candidates(-10.0, 10.0).is_empty());
    }

    #[test]
    fn germ_matches_eval_at_regular_point() {
        let factors = [
            Factor::Gamma { a: 1.0, b: -0.5 },
            Factor::Zeta { a: 2.0, b: 0.0 },
            Factor::Xi { a: 2.0, b: -1.0 },
            Factor::Exp { base: 6.0, a: -1.0, b: 0.0 },
        ];
        for f in factors {
            let g = f.germ(1.3, 8).unwrap();
            let s = c(1.32);
            let rel = (g.eval(s) - f.eval(s).unwrap()).norm() / f.eval(s).unwrap().norm();
            assert!(rel < 1e-11, "{f:?}: {rel}");
        }
    }
}
