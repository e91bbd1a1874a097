//! Series forms of I and of its auxiliary functions.
//!
//! * `U(t) = Σ_k (−16t/3)^k/k! · (2k)!²/(4k+1)! = ∫₀¹ exp(−(16/3)u²(1−u)²t) du`
//! * `S(t) = Σ_n (−1)^n C(2n,n)/4ⁿ · t^{(n−1)/2}/Γ((n+1)/2)`, the Hankel-contour
//!   integral of e^{tz}/√(z+√z) written as a series
//! * the double series `I = Σ_n (−1)^n C(2n,n)/4ⁿ · a_n`, with the inner sums
//!   `a_n = Σ_k (−1)^k/k! · Γ((n+1)/2+k)/Γ((n+1)/2) · (16/3)^k (2k)!²/(4k+1)!`
//!
//! The outer sum of the double series converges only conditionally, so the
//! n-sum must be taken outside the k-sum. Its terms form a positive,
//! decreasing moment sequence, which is the setting where the
//! Cohen–Rodriguez Villegas–Zagier alternating-sum acceleration applies.

use crate::error::{domain, Error, Result};
use crate::quadrature::{integrate, Interval, QuadratureConfig, QuadratureResult};
use crate::special_fn::{central_binomial_ratio, gamma, log_gamma, pochhammer_half};

/// U(t) switches from the series to the integral above this t.
pub const U_SERIES_SWITCH: f64 = 2.0;
/// Largest accepted t for the Hankel series; its terms peak near e^t/(2πt).
pub const HANKEL_SERIES_MAX_T: f64 = 700.0;
/// Outer terms used by the accelerated double series.
pub const DOUBLE_SERIES_MAX_OUTER: u32 = 60;
/// Direct inner-term evaluation moves to log space above this n + 2k.
const LOG_SPACE_THRESHOLD: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    max_terms: u32,
    tail_tol: f64,
    accelerate: bool,
}

impl SeriesConfig {
    pub fn new(max_terms: u32, tail_tol: f64, accelerate: bool) -> Result<Self> {
        if max_terms < 4 {
            return Err(Error::InvalidConfig(format!(
                "max_terms must be at least 4, got {max_terms}"
            )));
        }
        if !(tail_tol.is_finite() && tail_tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tail_tol must be finite and > 0, got {tail_tol}"
            )));
        }
        Ok(Self {
            max_terms,
            tail_tol,
            accelerate,
        })
    }

    pub fn max_terms(&self) -> u32 {
        self.max_terms
    }

    pub fn tail_tol(&self) -> f64 {
        self.tail_tol
    }

    pub fn accelerate(&self) -> bool {
        self.accelerate
    }
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            max_terms: 400,
            tail_tol: 1e-15,
            accelerate: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: u32,
    pub tail_estimate: f64,
    pub converged: bool,
}

/// Sum `term_0 + term_1 + …` where `term_{k+1} = term_k · ratio(k)` and the
/// terms eventually alternate with decreasing magnitude. Stops once past the
/// peak with the next term below `tail_tol`.
fn sum_by_ratio<R>(first: f64, ratio: R, cfg: &SeriesConfig) -> SeriesResult
where
    R: Fn(u32) -> f64,
{
    let mut sum = 0.0;
    let mut term = first;
    for k in 0..cfg.max_terms {
        sum += term;
        let next = term * ratio(k);
        if next.abs() <= term.abs() && next.abs() <= cfg.tail_tol {
            return SeriesResult {
                value: sum,
                terms_used: k + 1,
                tail_estimate: next.abs(),
                converged: true,
            };
        }
        term = next;
    }
    SeriesResult {
        value: sum,
        terms_used: cfg.max_terms,
        tail_estimate: term.abs(),
        converged: false,
    }
}

fn check_nonnegative(function: &'static str, t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(domain(function, t, "t must be finite and >= 0"))
    }
}

/// U(t) from its power series. Intended for t ≤ [`U_SERIES_SWITCH`].
pub fn u_series(t: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    check_nonnegative("u_series", t)?;
    let ratio = |k: u32| {
        let k = f64::from(k);
        -(8.0 * t / 3.0) * (2.0 * k + 1.0) / ((4.0 * k + 3.0) * (4.0 * k + 5.0))
    };
    Ok(sum_by_ratio(1.0, ratio, cfg))
}

/// U(t) = ∫₀¹ exp(−(16/3)u²(1−u)²t) du, folded onto [0, 1/2] by symmetry.
pub fn u_integral(t: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    check_nonnegative("u_integral", t)?;
    let iv = Interval::finite(0.0, 0.5)?;
    let half_cfg = cfg.with_abs_tol(0.5 * cfg.abs_tol())?;
    let r = integrate(
        |u| {
            let w = u * (1.0 - u);
            (-(16.0 / 3.0) * w * w * t).exp()
        },
        &iv,
        &half_cfg,
    )?;
    Ok(QuadratureResult {
        value: 2.0 * r.value,
        error_estimate: 2.0 * r.error_estimate,
        ..r
    })
}

/// U(t), series for small t and quadrature above the switch.
pub fn u_function(t: f64, qcfg: &QuadratureConfig, scfg: &SeriesConfig) -> Result<f64> {
    if t <= U_SERIES_SWITCH {
        let s = u_series(t, scfg)?;
        if s.converged {
            return Ok(s.value);
        }
    }
    Ok(u_integral(t, qcfg)?.value)
}

/// Unsigned n-th term of the Hankel series, evaluated directly in log space.
pub fn hankel_term(n: u32, t: f64) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) {
        return Err(domain("hankel_term", t, "t must be > 0"));
    }
    let nf = f64::from(n);
    let log = central_binomial_ratio(n).ln() + 0.5 * (nf - 1.0) * t.ln()
        - log_gamma(0.5 * (nf + 1.0))?;
    Ok(log.exp())
}

/// S(t) as the alternating series in n.
///
/// Terms rise until n ≈ 2t and decrease from there on, so the tail bound
/// `|next term|` is only used once n ≥ 2t.
pub fn hankel_series(t: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    if !(t.is_finite() && t > 0.0) {
        return Err(domain("hankel_series", t, "t must be > 0"));
    }
    if t > HANKEL_SERIES_MAX_T {
        return Err(Error::Overflow {
            function: "hankel_series",
            value: t,
        });
    }
    // f(n+2) = f(n) · (2n+1)(2n+3)/((2n+2)(2n+4)) · 2t/(n+1)
    let mut terms = [1.0 / (std::f64::consts::PI * t).sqrt(), 0.5];
    let mut sum = 0.0;
    for n in 0..cfg.max_terms {
        let slot = (n % 2) as usize;
        let current = terms[slot];
        sum += if n % 2 == 0 { current } else { -current };
        let nf = f64::from(n);
        let next = terms[1 - slot];
        if nf + 1.0 >= 2.0 * t && next <= cfg.tail_tol {
            return Ok(SeriesResult {
                value: sum,
                terms_used: n + 1,
                tail_estimate: next,
                converged: true,
            });
        }
        terms[slot] = current * (2.0 * nf + 1.0) * (2.0 * nf + 3.0)
            / ((2.0 * nf + 2.0) * (2.0 * nf + 4.0))
            * (2.0 * t / (nf + 1.0));
    }
    Ok(SeriesResult {
        value: sum,
        terms_used: cfg.max_terms,
        tail_estimate: terms[(cfg.max_terms % 2) as usize],
        converged: false,
    })
}

/// k-th term of the inner sum a_n, sign included, from its closed form.
pub fn inner_k_term(n: u32, k: u32) -> f64 {
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let kf = f64::from(k);
    if n + 2 * k > LOG_SPACE_THRESHOLD {
        let base = 0.5 * (f64::from(n) + 1.0);
        let lg = |x: f64| log_gamma(x).expect("positive argument");
        let log = lg(base + kf) - lg(base) - lg(kf + 1.0) + kf * (16.0f64 / 3.0).ln()
            + 2.0 * lg(2.0 * kf + 1.0)
            - lg(4.0 * kf + 2.0);
        sign * log.exp()
    } else {
        let g = |x: f64| gamma(x).expect("argument within range");
        let factorials = g(2.0 * kf + 1.0) * g(2.0 * kf + 1.0) / g(4.0 * kf + 2.0);
        sign * pochhammer_half(n, k) / g(kf + 1.0) * (16.0f64 / 3.0).powi(k as i32) * factorials
    }
}

/// The absolutely convergent inner sum a_n (term ratio → −1/3).
pub fn inner_k_sum(n: u32, cfg: &SeriesConfig) -> SeriesResult {
    let base = 0.5 * (f64::from(n) + 1.0);
    let ratio = |k: u32| {
        let k = f64::from(k);
        -(8.0 / 3.0) * (base + k) * (2.0 * k + 1.0) / ((4.0 * k + 3.0) * (4.0 * k + 5.0))
    };
    sum_by_ratio(1.0, ratio, cfg)
}

/// Σ_{k<N} (−1)^k a_k accelerated with the Chebyshev weights of Cohen,
/// Rodriguez Villegas and Zagier (their Algorithm 1), N = `terms.len()`.
pub fn crvz_alternating_sum(terms: &[f64]) -> f64 {
    let n = terms.len() as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(n);
    d = 0.5 * (d + d.recip());
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for (k, &a) in terms.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s += c * a;
        b *= (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Unsigned outer terms C(2n,n)/4ⁿ · a_n for n < `count`, with a flag for
/// whether every inner sum converged.
pub fn outer_terms(count: u32, cfg: &SeriesConfig) -> (Vec<f64>, bool) {
    let mut converged = true;
    let terms = (0..count)
        .map(|n| {
            let inner = inner_k_sum(n, cfg);
            converged &= inner.converged;
            central_binomial_ratio(n) * inner.value
        })
        .collect();
    (terms, converged)
}

/// Plain partial sums P_0 … P_{count−1} of the outer alternating series.
pub fn double_series_partial_sums(count: u32, cfg: &SeriesConfig) -> Vec<f64> {
    let (terms, _) = outer_terms(count, cfg);
    terms
        .iter()
        .enumerate()
        .scan(0.0, |acc, (n, &a)| {
            *acc += if n % 2 == 0 { a } else { -a };
            Some(*acc)
        })
        .collect()
}

/// I from the double series, outer sum taken last.
///
/// With `accelerate` and strictly alternating outer terms the CRVZ sum over
/// N = min(max_terms, 60) terms is returned, its tail estimate being the
/// change against N − 10 terms. Otherwise the mean of the last two partial
/// sums is returned with half the last term as tail estimate.
pub fn double_series_i(cfg: &SeriesConfig) -> SeriesResult {
    let count = cfg.max_terms.min(DOUBLE_SERIES_MAX_OUTER);
    let (terms, inner_ok) = outer_terms(count, cfg);
    let alternating = terms.iter().all(|&a| a > 0.0);

    if cfg.accelerate && alternating && count > 10 {
        let full = crvz_alternating_sum(&terms);
        let shorter = crvz_alternating_sum(&terms[..terms.len() - 10]);
        let tail_estimate = (full - shorter).abs();
        return SeriesResult {
            value: full,
            terms_used: count,
            tail_estimate,
            converged: inner_ok && tail_estimate <= cfg.tail_tol.max(ACCELERATED_FLOOR),
        };
    }

    let mut partial = 0.0;
    let mut previous = 0.0;
    for (n, &a) in terms.iter().enumerate() {
        previous = partial;
        partial += if n % 2 == 0 { a } else { -a };
    }
    let tail_estimate = 0.5 * terms.last().copied().unwrap_or(0.0).abs();
    SeriesResult {
        value: 0.5 * (partial + previous),
        terms_used: count,
        tail_estimate,
        converged: inner_ok && tail_estimate <= cfg.tail_tol,
    }
}

/// Rounding floor for the accelerated double series: inner sums with large n
/// cancel through terms of size ~1e4, so agreement between the N and N − 10
/// estimates is not expected below this level.
pub const ACCELERATED_FLOOR: f64 = 1e-12;
