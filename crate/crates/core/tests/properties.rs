use std::f64::consts::PI;

use num_bigint::BigUint;
use num_complex::Complex64;
use proptest::prelude::*;

use gr_verify::contour::{nested_radical, principal_sqrt};
use gr_verify::quadrature::{integrate, Interval, QuadratureConfig};
use gr_verify::series_forms::{hankel_term, u_function, SeriesConfig};
use gr_verify::special_fn::{central_binomial_ratio, gamma, log_gamma};
use gr_verify::verifier::{parse, render_json, CheckRecord, Kind, Report};

// Decimal rendering then std parse rounds correctly, so these are exact
// to the last bit.
fn big_to_f64(b: &BigUint) -> f64 {
    b.to_string().parse().unwrap()
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, j| acc * j)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

proptest! {
    #[test]
    fn gamma_matches_factorial(n in 0u32..=170) {
        let exact = big_to_f64(&factorial(n));
        prop_assert!(rel(gamma(f64::from(n) + 1.0).unwrap(), exact) < 1e-13);
    }

    #[test]
    fn gamma_recurrence(x in 0.01f64..150.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-13);
    }

    #[test]
    fn log_gamma_matches_log_factorial(n in 1u32..2000) {
        let exact: f64 = (2..=n).map(|j| f64::from(j).ln()).sum();
        let got = log_gamma(f64::from(n) + 1.0).unwrap();
        prop_assert!((got - exact).abs() <= 1e-13 * exact.max(1.0));
    }

    #[test]
    fn central_binomial_matches_exact(n in 0u32..=500) {
        let c = factorial(2 * n) / (factorial(n) * factorial(n));
        let exact = big_to_f64(&c) / big_to_f64(&(BigUint::from(1u32) << (2 * n as usize)));
        prop_assert!(rel(central_binomial_ratio(n), exact) < 1e-13);
    }

    #[test]
    fn sqrt_squares_back(re in -1e3f64..1e3, im in -1e3f64..1e3) {
        prop_assume!(im != 0.0 || re > 0.0);
        let z = Complex64::new(re, im);
        let w = principal_sqrt(z).unwrap();
        prop_assert!(w.re > 0.0 || (w.re == 0.0 && im != 0.0));
        prop_assert!((w * w - z).norm() <= 1e-14 * z.norm().max(1e-300));
    }

    #[test]
    fn sqrt_conjugate_symmetric(re in -1e3f64..1e3, im in 1e-6f64..1e3) {
        let z = Complex64::new(re, im);
        prop_assert_eq!(principal_sqrt(z.conj()).unwrap(), principal_sqrt(z).unwrap().conj());
        prop_assert_eq!(nested_radical(z.conj()).unwrap(), nested_radical(z).unwrap().conj());
    }

    #[test]
    fn quadrature_is_linear(a in -3f64..3.0, b in -3f64..3.0, lo in -2f64..0.0, hi in 0.1f64..3.0) {
        let cfg = QuadratureConfig::default();
        let iv = Interval::finite(lo, hi).unwrap();
        let f = |x: f64| (3.0 * x).sin();
        let g = |x: f64| (-x * x).exp();
        let combined = integrate(|x| a * f(x) + b * g(x), &iv, &cfg).unwrap().value;
        let split = a * integrate(f, &iv, &cfg).unwrap().value + b * integrate(g, &iv, &cfg).unwrap().value;
        prop_assert!((combined - split).abs() < 1e-11);
    }

    #[test]
    fn quadrature_is_additive(lo in -2f64..0.0, mid in 0.0f64..1.0, hi in 1.0f64..4.0) {
        let cfg = QuadratureConfig::default();
        let f = |x: f64| 1.0 / (1.0 + x * x);
        let whole = integrate(f, &Interval::finite(lo, hi).unwrap(), &cfg).unwrap().value;
        let left = integrate(f, &Interval::finite(lo, mid).unwrap(), &cfg).unwrap().value;
        let right = integrate(f, &Interval::finite(mid, hi).unwrap(), &cfg).unwrap().value;
        prop_assert!((whole - (left + right)).abs() < 1e-12);
        prop_assert!((whole - (hi.atan() - lo.atan())).abs() < 1e-12);
    }

    #[test]
    fn report_json_round_trips(lhs in any::<f64>().prop_filter("finite", |x| x.is_finite()), rhs in -1e300f64..1e300, tol in 1e-300f64..1.0) {
        let record = CheckRecord::new("p", Kind::Agreement, "probe", "none").with_values(lhs, rhs, tol);
        let report = Report::new(vec![record], "cfg".into());
        let back = parse(&render_json(&report)).unwrap();
        prop_assert_eq!(back, report);
    }

    #[test]
    fn non_finite_values_read_back_as_nan(lhs in prop::sample::select(vec![f64::NAN, f64::INFINITY, f64::NEG_INFINITY])) {
        let record = CheckRecord::new("p", Kind::Agreement, "probe", "none").with_values(lhs, 0.0, 1.0);
        let back = parse(&render_json(&Report::new(vec![record], String::new()))).unwrap();
        prop_assert!(back.records[0].lhs.is_nan());
    }

    // the gaussian majorant of the doubled half-range integral
    #[test]
    fn u_below_corrected_bound(t in 1e-3f64..1e4) {
        let u = u_function(t, &QuadratureConfig::default(), &SeriesConfig::default()).unwrap();
        prop_assert!(u > 0.0 && u <= 1.0);
        prop_assert!(u <= (3.0 * PI).sqrt() / (2.0 * t.sqrt()));
    }
}

// a_{n+1}/a_n ~ sqrt(2t/n): unimodal with the peak at n = 2t - 1 for integer t
#[test]
fn hankel_terms_unimodal() {
    for t in [4.0f64, 6.0, 10.0, 20.0] {
        let terms: Vec<f64> = (0..200).map(|n| hankel_term(n, t).unwrap()).collect();
        let peak = (2.0 * t) as usize - 1;
        assert!(terms[..=peak].windows(2).all(|w| w[0] < w[1]), "rising up to n = {peak} at t = {t}");
        assert!(terms[peak..].windows(2).all(|w| w[0] >= w[1]), "falling after n = {peak} at t = {t}");
        let scale = t.exp() / (2.0 * PI * t);
        assert!(terms[peak] > scale / 3.0 && terms[peak] < 3.0 * scale, "peak {} vs {scale}", terms[peak]);
    }
}
