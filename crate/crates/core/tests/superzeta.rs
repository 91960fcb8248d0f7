use num_complex::Complex64;
use proptest::prelude::*;
use scatdet::scattering::{central_value, ScatteringFamily};
use scatdet::specfun::{log_gamma, HALF_LOG_TWO_PI};
use scatdet::superzeta::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn zero_strategy() -> impl Strategy<Value = Vec<(Complex64, u32)>> {
    prop::collection::vec(((-5.0f64..5.0), (-5.0f64..5.0), 1u32..4), 1..=8)
        .prop_map(|v| v.into_iter().map(|(re, im, m)| (c(re, im), m)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn finite_det_is_the_direct_product(zeros in zero_strategy(), zr in 6.0f64..9.0, zi in -2.0f64..2.0) {
        let z = c(zr, zi);
        let zs = ZeroSet::finite(zeros.clone()).unwrap();
        let d = regularized_det(&zs, z).unwrap();
        let direct = zeros.iter().fold(c(1.0, 0.0), |acc, (y, m)| acc * (z - y).powi(*m as i32));
        prop_assert!((d - direct).norm() < 1e-12 * direct.norm().max(1.0));
    }

    #[test]
    fn differenced_finite_sum_is_log_det(zeros in zero_strategy(), zr in 6.0f64..9.0) {
        let z = c(zr, 0.3);
        let zs = ZeroSet::finite(zeros).unwrap();
        let n = 100;
        let fd = minus_ds_at_zero(|s| Ok(superzeta_sum(&zs, s, z, n)?.value)).unwrap();
        let log_d = log_regularized_det(&zs, z).unwrap();
        prop_assert!((fd - log_d).norm() < 1e-8, "{fd} vs {log_d}");
    }
}

#[test]
fn conjugate_closed_sets_give_real_values() {
    let zs =
        ZeroSet::finite(vec![(c(1.0, 2.0), 1), (c(1.0, -2.0), 1), (c(-3.0, 0.5), 2), (c(-3.0, -0.5), 2)])
            .unwrap();
    for z in [2.0, 4.5, 11.0] {
        let v = minus_ds_at_zero(|s| Ok(superzeta_sum(&zs, s, c(z, 0.0), 10)?.value)).unwrap();
        assert!(v.im.abs() < 1e-12, "{v}");
    }
}

#[test]
fn progression_matches_lerch() {
    for z in [0.5, 1.0, 2.5, 4.0] {
        let d = regularized_det(&ZeroSet::negative_integers(), c(z, 0.0)).unwrap();
        let expect = (HALF_LOG_TWO_PI - log_gamma(c(z + 1.0, 0.0)).unwrap()).exp();
        assert!((d - expect).norm() < 1e-8, "z = {z}");
    }
}

#[test]
fn general_progression_matches_lerch() {
    // y_k = 0.5 - 2(k - 1): D(z) = d^{½ - a} √(2π)/Γ(a), a = (z - 0.5)/2
    let zs = ZeroSet::progression(0.5, -2.0).unwrap();
    let z = c(1.7, 0.4);
    let a = (z - 0.5) / 2.0;
    let expect = ((0.5 - a) * 2f64.ln() + HALF_LOG_TWO_PI - log_gamma(a).unwrap()).exp();
    let d = regularized_det(&zs, z).unwrap();
    assert!((d - expect).norm() < 1e-8 * expect.norm());
}

#[test]
fn sign_pipeline_agrees_with_germ() {
    for f in ScatteringFamily::standard_set() {
        let p = sign_pipeline(&f).unwrap();
        assert!(p.consistent, "{f}: {p:?}");
        let g = central_value(&f).unwrap();
        assert_eq!(p.sign as f64, g.germ_value.round(), "{f}");
    }
}
