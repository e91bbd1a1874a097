//! Acceptance criteria, one line of output each.
//!
//! Runs without the libtest harness. The process fails if any criterion fails
//! other than those in `EXPECTED_FAILURES`, and also if one of those passes.

use std::f64::consts::{PI, SQRT_2};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gr_verify::contour::{hankel_exp_integral, hankel_resolvent_integral, resolvent_residue, HankelPath};
use gr_verify::elliptic::{
    complete_k, complete_pi, incomplete_f, landen_residual, Amplitude, Characteristic, Modulus,
};
use gr_verify::quadrature::{integrate_nodes, Interval, Node, QuadratureConfig, Singularity};
use gr_verify::representations::{
    byrd_friedman_checks, eval_representation, PaperConstants, RepresentationId, SQRT_3,
};
use gr_verify::series_forms::{
    double_series_i, double_series_partial_sums, hankel_series, u_integral, u_series, SeriesConfig,
    DOUBLE_SERIES_MAX_OUTER,
};
use gr_verify::verifier::{run_checks, CheckRecord, Kind, Status, DISCREPANCY_TOL};

/// Criteria that cannot hold as stated, with the reason.
const EXPECTED_FAILURES: &[(u32, &str)] = &[(
    8,
    "U(t) <= sqrt(3 pi)/(4 sqrt t) is false for every t > 0: U = 2 int_0^{1/2}, \
     so the gaussian majorant gives sqrt(3 pi)/(2 sqrt t), and U(t) sqrt(t) \
     decreases to sqrt(3 pi)/4 from above",
)];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn scfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn rep(id: RepresentationId) -> f64 {
    eval_representation(id, &cfg(), &scfg())
        .unwrap_or_else(|e| panic!("{id}: {e}"))
        .value
}

fn headline() -> Outcome {
    let start = Instant::now();
    let r0 = eval_representation(RepresentationId::R0, &cfg(), &scfg()).expect("R0");
    let elapsed = start.elapsed();
    let diff = (r0.value - 0.666_377).abs();
    outcome(
        r0.converged && diff <= 5e-7 && elapsed < Duration::from_secs(5),
        format!("R0 = {:.12}, |R0 - 0.666377| = {diff:.2e}, {elapsed:.2?}", r0.value),
    )
}

fn erratum() -> Outcome {
    let r0 = rep(RepresentationId::R0);
    let wrong = PI / (2.0 * 6f64.sqrt());
    let gap = (r0 - wrong).abs();
    let in_band = (0.0249..=0.0253).contains(&gap);
    // the discrepancy rule must reject values that agree within 1e-3
    let judge = |lhs: f64| {
        CheckRecord::new("probe", Kind::Discrepancy, "", "")
            .with_values(lhs, wrong, DISCREPANCY_TOL)
            .status
    };
    let rejects_agreement = [wrong + 9e-4, wrong - 9e-4, wrong].iter().all(|&v| judge(v) == Status::Fail);
    let accepts_real = judge(r0) == Status::Pass;
    outcome(
        in_band && rejects_agreement && accepts_real,
        format!("|R0 - pi/(2 sqrt6)| = {gap:.6}, rejects agreement within 1e-3: {rejects_agreement}"),
    )
}

fn chain() -> Outcome {
    let start = Instant::now();
    let report = run_checks(None, &cfg(), &scfg()).expect("suite runs");
    let elapsed = start.elapsed();

    let values: Vec<(RepresentationId, f64)> = RepresentationId::ALL
        .into_iter()
        .map(|r| (r, report.record(r.as_str()).map_or(f64::NAN, |rec| rec.lhs)))
        .collect();
    let r0 = values[0].1;
    let mut worst_pair: f64 = 0.0;
    for &(a, va) in values.iter().filter(|(r, _)| !r.is_series_based()) {
        for &(b, vb) in values.iter().filter(|(r, _)| !r.is_series_based()) {
            if a < b {
                worst_pair = worst_pair.max((va - vb).abs());
            }
        }
    }
    let r2 = (values[2].1 - r0).abs();
    let r3 = (values[3].1 - r0).abs();
    let failing: Vec<&str> = report
        .records
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.id.as_str())
        .collect();
    outcome(
        worst_pair <= 1e-9 && r2 <= 1e-5 && r3 <= 1e-5 && failing.is_empty() && elapsed < Duration::from_secs(60),
        format!(
            "max pair gap {worst_pair:.2e}, |R2 - R0| = {r2:.2e}, |R3 - R0| = {r3:.2e}, \
             suite {elapsed:.2?}, failing records {failing:?}"
        ),
    )
}

fn closed_form() -> Outcome {
    let k1 = Modulus::new(1.0 / SQRT_3).unwrap();
    let k = 2.0 - SQRT_3;
    let alpha = Amplitude::new(k.sqrt().asin()).unwrap();
    let pi = complete_pi(Characteristic::new(k).unwrap(), k1.get()).unwrap();
    let f = incomplete_f(alpha, k1);
    let closed = ((SQRT_3 - 1.0) * pi - f) / SQRT_2;
    let diff = (closed - rep(RepresentationId::R0)).abs();
    outcome(diff <= 1e-9, format!("closed form {closed:.15}, |closed - R0| = {diff:.2e}"))
}

/// ∫₀^{upper} g(x) dx / √((1−x²)(1−k²x²)), singular upper endpoint when
/// `upper` is 1.
fn x_form(upper: f64, k: f64, g: impl Fn(f64) -> f64) -> f64 {
    let iv = Interval::new(0.0, upper, Singularity::Upper).unwrap();
    integrate_nodes(
        |n: Node| {
            let one_minus_x = if upper == 1.0 { n.to_upper } else { 1.0 - n.x };
            g(n.x) / (one_minus_x * (1.0 + n.x) * (1.0 - k * k * n.x * n.x)).sqrt()
        },
        &iv,
        &cfg(),
    )
    .unwrap()
    .value
}

fn elliptic_suite() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..10 {
        let i = f64::from(i);
        let k = 0.04 + 0.1 * i;
        let phi = 0.1 + 0.145 * i;
        let n = -0.7 + 0.17 * i;
        let m = Modulus::new(k).unwrap();
        let f = incomplete_f(Amplitude::new(phi).unwrap(), m);
        worst = worst.max((f - x_form(phi.sin(), k, |_| 1.0)).abs());
        worst = worst.max((complete_k(m) - x_form(1.0, k, |_| 1.0)).abs());
        let p = complete_pi(Characteristic::new(n).unwrap(), k).unwrap();
        worst = worst.max((p - x_form(1.0, k, |x| 1.0 / (1.0 - n * x * x))).abs());
    }
    let landen = [2.0 - SQRT_3, 0.5, 0.9]
        .iter()
        .map(|&k| landen_residual(Modulus::new(k).unwrap()).abs())
        .fold(0.0, f64::max);
    outcome(
        worst <= 1e-11 && landen < 1e-12,
        format!("max |Carlson - quadrature| = {worst:.2e}, max Landen residual = {landen:.2e}"),
    )
}

fn byrd_friedman() -> Outcome {
    let records = byrd_friedman_checks(&cfg()).unwrap();
    let worst = records.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    let ok = records.len() == 3 && records.iter().all(|r| r.passed() && r.abs_diff <= 1e-10);
    let ids: Vec<&str> = records.iter().map(|r| r.id.as_str()).collect();
    outcome(ok, format!("{ids:?}, max residual {worst:.2e}"))
}

fn contour() -> Outcome {
    let c = cfg();
    let mut series_gap: f64 = 0.0;
    let mut drift: f64 = 0.0;
    for t in [0.5, 1.0, 2.0, 5.0] {
        let base = hankel_exp_integral(t, &HankelPath::default(), &c).unwrap();
        let s = hankel_series(t, &scfg()).unwrap();
        series_gap = series_gap.max((base.value - s.value).abs());
        for delta in [0.25, 1.0] {
            let other = hankel_exp_integral(t, &HankelPath::new(delta).unwrap(), &c).unwrap();
            drift = drift.max((other.value - base.value).abs());
        }
    }
    let mut residue: f64 = 0.0;
    for i in 0..20 {
        let u = f64::from(i) / 19.0;
        let cu = 16.0 / 3.0 * (u * (1.0 - u)).powi(2);
        let r = hankel_resolvent_integral(cu, &HankelPath::default(), &c).unwrap();
        residue = residue.max((r.value - resolvent_residue(cu).unwrap()).abs());
    }
    outcome(
        series_gap <= 1e-8 && residue <= 1e-9 && drift <= 1e-10,
        format!("contour vs series {series_gap:.2e}, residue {residue:.2e}, delta drift {drift:.2e}"),
    )
}

fn u_properties() -> Outcome {
    let mut gap: f64 = 0.0;
    for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let s = u_series(t, &scfg()).unwrap().value;
        let q = u_integral(t, &cfg()).unwrap().value;
        gap = gap.max((s - q).abs());
    }
    let in_unit = [0.0, 1e-6, 0.3, 1.0, 7.0, 50.0, 1e3, 1e6]
        .iter()
        .all(|&t| {
            let u = u_integral(t, &cfg()).unwrap().value;
            u > 0.0 && u <= 1.0
        });
    let ratios: Vec<f64> = [2.0, 10.0, 100.0]
        .iter()
        .map(|&t: &f64| u_integral(t, &cfg()).unwrap().value / ((3.0 * PI).sqrt() / (4.0 * t.sqrt())))
        .collect();
    let bound_holds = ratios.iter().all(|&r| r <= 1.0);
    outcome(
        gap <= 1e-11 && in_unit && bound_holds,
        format!(
            "series vs integral {gap:.2e}, 0 < U <= 1: {in_unit}, \
             U(t)/(sqrt(3 pi)/(4 sqrt t)) at t = 2, 10, 100: {ratios:.4?}"
        ),
    )
}

fn constants() -> Outcome {
    let c = PaperConstants::get();
    let residuals = c.residuals();
    let worst = residuals.iter().map(|(_, r)| r.abs()).fold(0.0, f64::max);
    outcome(
        worst <= 1e-14,
        format!("{} relations, max residual {worst:.2e}", residuals.len()),
    )
}

fn double_series() -> Outcome {
    let r0 = rep(RepresentationId::R0);
    let s = double_series_i(&scfg());
    let gap = (s.value - r0).abs();
    let sums = double_series_partial_sums(DOUBLE_SERIES_MAX_OUTER, &scfg());
    let bracketed = sums
        .iter()
        .enumerate()
        .all(|(n, &p)| if n % 2 == 0 { p >= r0 } else { p <= r0 });
    outcome(
        gap <= 1e-5 && bracketed,
        format!(
            "accelerated sum {:.12}, |sum - R0| = {gap:.2e}, {} partial sums bracket R0: {bracketed}",
            s.value,
            sums.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "headline value", headline),
        (2, "erratum reproduction", erratum),
        (3, "chain consistency", chain),
        (4, "closed form", closed_form),
        (5, "elliptic oracle suite", elliptic_suite),
        (6, "Byrd-Friedman identities", byrd_friedman),
        (7, "contour properties", contour),
        (8, "U(t) properties", u_properties),
        (9, "exact constants", constants),
        (10, "double series", double_series),
    ];

    let mut unexpected = 0;
    for (n, name, run) in criteria {
        let o = run();
        let expected = EXPECTED_FAILURES.iter().find(|(id, _)| *id == n);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{name}]: {verdict}  {}", o.detail);
        match (o.pass, expected) {
            (false, Some((_, why))) => println!("             expected failure: {why}"),
            (true, Some(_)) => {
                println!("             listed as an expected failure but passed");
                unexpected += 1;
            }
            (false, None) => unexpected += 1,
            (true, None) => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
