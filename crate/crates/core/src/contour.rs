//! Principal branches on the plane cut along (−∞, 0] and integration along a
//! Hankel contour that wraps the cut.
//!
//! The contour at distance δ is parametrized by ξ ∈ ℝ:
//!
//! ```text
//!   z(ξ) = δ(ξ + 1 − i)        ξ ≤ −1   (lower ray, running right)
//!   z(ξ) = δ e^{iπξ/2}         |ξ| < 1  (semicircle about 0)
//!   z(ξ) = δ(1 − ξ + i)        ξ ≥ 1    (upper ray, running left)
//! ```
//!
//! Increasing ξ goes counterclockwise around the cut. For δ = 1/2 this is the
//! standard fixed parametrization; other δ give the scaled analogue.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::quadrature::{integrate_complex, ComplexQuadrature, QuadratureConfig};

/// A point of the cut plane.
pub type ComplexValue = Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelPath {
    delta: f64,
    xi_max: Option<f64>,
}

impl HankelPath {
    /// Path at distance `delta` from the cut, rays integrated to infinity
    /// (or to an automatically chosen truncation, per operation).
    pub fn new(delta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(domain("HankelPath", delta, "delta must be > 0"));
        }
        Ok(Self {
            delta,
            xi_max: None,
        })
    }

    /// Force truncation of both rays at |ξ| = `xi_max`.
    pub fn truncated(self, xi_max: f64) -> Result<Self> {
        if !(xi_max.is_finite() && xi_max > 1.0) {
            return Err(domain("HankelPath", xi_max, "xi_max must be > 1"));
        }
        Ok(Self {
            xi_max: Some(xi_max),
            ..self
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn xi_max(&self) -> Option<f64> {
        self.xi_max
    }
}

impl Default for HankelPath {
    fn default() -> Self {
        Self {
            delta: 0.5,
            xi_max: None,
        }
    }
}

/// Real value of a contour integral divided by 2πi, with the imaginary
/// part kept as a diagnostic (it vanishes by conjugate symmetry).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourIntegral {
    pub value: f64,
    pub imag_residual: f64,
    pub error_estimate: f64,
    pub evals: usize,
    pub converged: bool,
}

fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

/// Principal square root, |arg z| < π. Points of (−∞, 0] are rejected.
pub fn principal_sqrt(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain("principal_sqrt", z.re, "argument must be finite"));
    }
    if on_cut(z) {
        return Err(domain("principal_sqrt", z.re, "argument lies on the cut"));
    }
    Ok(sqrt_off_cut(z))
}

fn sqrt_off_cut(z: Complex64) -> Complex64 {
    let r = z.re.hypot(z.im);
    if z.re >= 0.0 {
        let s = (0.5 * (r + z.re)).sqrt();
        Complex64::new(s, z.im / (2.0 * s))
    } else {
        let s = (0.5 * (r - z.re)).sqrt();
        Complex64::new(z.im.abs() / (2.0 * s), s.copysign(z.im))
    }
}

/// √(z + √z) on the cut plane.
///
/// For z off the cut, Im(√z) has the sign of Im z and Re(√z) > 0, so
/// z + √z never lands on the cut and the outer root is always defined.
pub fn nested_radical(z: ComplexValue) -> Result<ComplexValue> {
    let inner = principal_sqrt(z)?;
    principal_sqrt(z + inner)
}

fn nested_radical_off_cut(z: Complex64) -> Complex64 {
    sqrt_off_cut(z + sqrt_off_cut(z))
}

/// Point z(ξ) on the path and its derivative dz/dξ.
pub fn hankel_point(xi: f64, path: &HankelPath) -> (ComplexValue, ComplexValue) {
    let d = path.delta;
    if xi <= -1.0 {
        (Complex64::new(d * (xi + 1.0), -d), Complex64::new(d, 0.0))
    } else if xi < 1.0 {
        let e = Complex64::from_polar(d, FRAC_PI_2 * xi);
        (e, e * Complex64::new(0.0, FRAC_PI_2))
    } else {
        (Complex64::new(d * (1.0 - xi), d), Complex64::new(-d, 0.0))
    }
}

/// Integrate `g(z) dz` over the three pieces of the path. Rays run to
/// `xi_max` when given, otherwise to infinity.
///
/// `cfg.abs_tol()` applies to the result divided by 2π, split evenly over
/// the pieces.
fn integrate_path<G>(
    g: G,
    path: &HankelPath,
    xi_max: Option<f64>,
    cfg: &QuadratureConfig,
) -> Result<ComplexQuadrature>
where
    G: Fn(Complex64) -> Complex64,
{
    let cfg = &cfg.with_abs_tol(2.0 * PI * cfg.abs_tol() / 3.0)?;
    let along = |xi: f64| {
        let (z, dz) = hankel_point(xi, path);
        g(z) * dz
    };
    let arc = integrate_complex(along, -1.0, 1.0, cfg)?;
    let end = xi_max.unwrap_or(f64::INFINITY);
    let upper = integrate_complex(along, 1.0, end, cfg)?;
    // lower ray reflected onto [1, end]
    let lower = integrate_complex(|s| along(-s), 1.0, end, cfg)?;
    Ok(ComplexQuadrature {
        value: arc.value + upper.value + lower.value,
        error_estimate: arc.error_estimate + upper.error_estimate + lower.error_estimate,
        evals: arc.evals + upper.evals + lower.evals,
        converged: arc.converged && upper.converged && lower.converged,
    })
}

fn divide_by_two_pi_i(q: ComplexQuadrature, tail: f64, abs_tol: f64) -> ContourIntegral {
    let scaled = q.value / Complex64::new(0.0, 2.0 * PI);
    let error_estimate = q.error_estimate / (2.0 * PI) + tail;
    ContourIntegral {
        value: scaled.re,
        imag_residual: scaled.im,
        error_estimate,
        evals: q.evals,
        converged: q.converged && error_estimate <= abs_tol,
    }
}

/// (1/2πi) ∫_H e^{tz} / √(z + √z) dz for t > 0.
///
/// Unless the path fixes `xi_max`, the rays are cut where
/// e^{tδ(1−ξ)} ≤ ε·e^{−10tδ}, ε = `cfg.abs_tol()`, and no earlier than
/// |z| = 4, where the tail bound takes hold. That bound on the discarded
/// tails is added to the error estimate.
pub fn hankel_exp_integral(
    t: f64,
    path: &HankelPath,
    cfg: &QuadratureConfig,
) -> Result<ContourIntegral> {
    if !(t.is_finite() && t > 0.0) {
        return Err(domain("hankel_exp_integral", t, "t must be > 0"));
    }
    let d = path.delta;
    let xi_max = path
        .xi_max
        .unwrap_or_else(|| 1.0 + (cfg.abs_tol().recip().ln() / (t * d) + 10.0).max(4.0 / d + 1.0));

    let q = integrate_path(
        |z| (z * t).exp() / nested_radical_off_cut(z),
        path,
        Some(xi_max),
        cfg,
    )?;

    // |1/√(z+√z)| ≤ √2/|z|^{1/2} once |z| ≥ 4; |z| ≥ δ(ξ − 1) on the rays
    let reach = d * (xi_max - 1.0);
    let tail = if reach >= 4.0 {
        2.0 * 2f64.sqrt() * (t * d * (1.0 - xi_max)).exp() / (t * reach.sqrt()) / (2.0 * PI)
    } else {
        f64::INFINITY
    };
    Ok(divide_by_two_pi_i(q, tail, cfg.abs_tol()))
}

/// (1/2πi) ∫_H dz / (√(z + √z) (1 − z + c)) for c ≥ 0.
///
/// The pole at z = 1 + c lies to the right of the path, and the value equals
/// the residue term 1/√(w + √w) at w = 1 + c (see [`resolvent_residue`]).
pub fn hankel_resolvent_integral(
    c: f64,
    path: &HankelPath,
    cfg: &QuadratureConfig,
) -> Result<ContourIntegral> {
    if !(c.is_finite() && c >= 0.0) {
        return Err(domain("hankel_resolvent_integral", c, "c must be >= 0"));
    }
    if path.delta >= 1.0 + c {
        return Err(domain(
            "hankel_resolvent_integral",
            path.delta,
            "pole at 1 + c must lie right of the path",
        ));
    }
    let q = integrate_path(
        |z| (nested_radical_off_cut(z) * (1.0 + c - z)).inv(),
        path,
        path.xi_max,
        cfg,
    )?;
    // |integrand| ≤ 2√2 |z|^{-3/2} once |z| ≥ max(4, 2(1 + c)); two rays
    let tail = match path.xi_max {
        None => 0.0,
        Some(xi_max) => {
            let reach = path.delta * (xi_max - 1.0);
            if reach >= 4f64.max(2.0 * (1.0 + c)) {
                8.0 * 2f64.sqrt() / reach.sqrt() / (2.0 * PI)
            } else {
                f64::INFINITY
            }
        }
    };
    Ok(divide_by_two_pi_i(q, tail, cfg.abs_tol()))
}

/// 1/√(w + √w) at w = 1 + c.
pub fn resolvent_residue(c: f64) -> Result<f64> {
    if !(c.is_finite() && c >= 0.0) {
        return Err(domain("resolvent_residue", c, "c must be >= 0"));
    }
    let w = 1.0 + c;
    Ok((w + w.sqrt()).sqrt().recip())
}
