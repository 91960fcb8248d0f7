//! Truncated logarithm of the Selberg zeta function from a list of
//! hyperbolic classes.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A hyperbolic class P with norm N(P) and the norm N(P₀) of its primitive root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperbolicClass {
    pub norm: f64,
    pub primitive_norm: f64,
}

/// −Σ Λ(P) / (N(P)^s log N(P)) with Λ(P) = log N(P₀) / (1 − N(P)^{-1}),
/// summed over the supplied classes only.
pub fn selberg_log_z(classes: &[HyperbolicClass], s: Complex64) -> Result<Complex64> {
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("Re s = {} must exceed 1", s.re)));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for c in classes {
        if !(c.norm > 1.0 && c.primitive_norm > 1.0) {
            return Err(Error::Domain(format!("norms must exceed 1, got {c:?}")));
        }
        let log_n = c.norm.ln();
        let lambda = c.primitive_norm.ln() / (1.0 - 1.0 / c.norm);
        acc -= lambda * (-s * log_n).exp() / log_n;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_single() {
        let s = Complex64::new(2.5, 1.0);
        assert_eq!(selberg_log_z(&[], s).unwrap(), Complex64::new(0.0, 0.0));
        let nu: f64 = 7.3;
        let one = [HyperbolicClass { norm: nu, primitive_norm: nu }];
        let v = selberg_log_z(&one, Complex64::new(2.0, 0.0)).unwrap();
        let lambda = nu.ln() / (1.0 - 1.0 / nu);
        assert!((v.re + lambda / (nu * nu * nu.ln())).abs() < 1e-15);
        assert!(selberg_log_z(&one, Complex64::new(1.0, 3.0)).is_err());
    }

    #[test]
    fn two_powers_of_one_primitive() {
        // Σ_k log(1 − x_k), x_k = ν^{-s-k}, expanded to second order in x
        let nu: f64 = 5.8;
        let s = 1.7;
        let classes = [
            HyperbolicClass { norm: nu, primitive_norm: nu },
            HyperbolicClass { norm: nu * nu, primitive_norm: nu },
        ];
        let v = selberg_log_z(&classes, Complex64::new(s, 0.0)).unwrap();
        let oracle: f64 = (0..200)
            .map(|k| {
                let x = nu.powf(-s - k as f64);
                -x - x * x / 2.0
            })
            .sum();
        assert!((v.re - oracle).abs() < 1e-12, "{} vs {oracle}", v.re);
    }
}
