//! Elliptic integrals of the first and third kind through Carlson's symmetric
//! forms, in the convention where the characteristic multiplies x² directly:
//!
//! ```text
//!   F(φ, k) = ∫₀^{sin φ} dx / √((1−x²)(1−k²x²))
//!   K(k)    = F(π/2, k)
//!   Π(n, k) = ∫₀¹ dx / ((1 − n x²) √((1−x²)(1−k²x²)))
//! ```
//!
//! The `defining_*` functions evaluate the same integrals by singular-endpoint
//! quadrature and serve as an independent reference.

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Result};
use crate::quadrature::{integrate_nodes, Interval, Node, QuadratureConfig, QuadratureResult, Singularity};

/// Duplication stops once every argument is within this relative distance of
/// the mean; the truncated Taylor remainder is then O(ERRTOL⁶).
const ERRTOL: f64 = 0.0008;
/// No in-domain argument set needs more duplication steps than this.
pub const MAX_DUPLICATIONS: u32 = 40;

/// Elliptic modulus, 0 < k < 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Modulus(f64);

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        if k > 0.0 && k < 1.0 {
            Ok(Self(k))
        } else {
            Err(domain("Modulus", k, "k must lie in (0, 1)"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// k′² = 1 − k², formed without cancellation.
    pub fn complement_squared(self) -> f64 {
        (1.0 - self.0) * (1.0 + self.0)
    }

    /// k′ = √(1 − k²).
    pub fn complement(self) -> Modulus {
        Modulus(self.complement_squared().sqrt())
    }
}

/// Amplitude φ ∈ [0, π/2].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Amplitude(f64);

impl Amplitude {
    pub fn new(phi: f64) -> Result<Self> {
        if (0.0..=FRAC_PI_2).contains(&phi) {
            Ok(Self(phi))
        } else {
            Err(domain("Amplitude", phi, "phi must lie in [0, pi/2]"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Characteristic n < 1, multiplying x² in the Π integrand.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Characteristic(f64);

impl Characteristic {
    pub fn new(n: f64) -> Result<Self> {
        if n.is_finite() && n < 1.0 {
            Ok(Self(n))
        } else {
            Err(domain("Characteristic", n, "n must be < 1"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Value of a symmetric integral with the number of duplication steps taken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Carlson {
    pub value: f64,
    pub iterations: u32,
}

fn check_carlson(function: &'static str, args: &[f64], positive_last: bool) -> Result<()> {
    for &a in args {
        if !(a.is_finite() && a >= 0.0) {
            return Err(domain(function, a, "arguments must be finite and >= 0"));
        }
    }
    let zeros = args.iter().filter(|&&a| a == 0.0).count();
    if zeros > 1 {
        return Err(domain(function, 0.0, "at most one argument may vanish"));
    }
    if positive_last && args[args.len() - 1] == 0.0 {
        return Err(domain(function, 0.0, "last argument must be > 0"));
    }
    Ok(())
}

/// R_F(x, y, z) = ½ ∫₀^∞ dt / √((t+x)(t+y)(t+z)).
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<Carlson> {
    check_carlson("carlson_rf", &[x, y, z], false)?;
    let (mut x, mut y, mut z) = (x, y, z);
    let mut iterations = 0;
    loop {
        let mean = (x + y + z) / 3.0;
        let dx = (mean - x) / mean;
        let dy = (mean - y) / mean;
        let dz = (mean - z) / mean;
        if dx.abs().max(dy.abs()).max(dz.abs()) < ERRTOL || iterations == MAX_DUPLICATIONS {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            let series = 1.0 + (e2 / 24.0 - 0.1 - 3.0 / 44.0 * e3) * e2 + e3 / 14.0;
            return Ok(Carlson {
                value: series / mean.sqrt(),
                iterations,
            });
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        iterations += 1;
    }
}

/// R_C(x, y) = R_F(x, y, y) for y > 0.
pub fn carlson_rc(x: f64, y: f64) -> Result<Carlson> {
    check_carlson("carlson_rc", &[x, y], true)?;
    let (mut x, mut y) = (x, y);
    let mut iterations = 0;
    loop {
        let mean = (x + y + y) / 3.0;
        let s = (y - mean) / mean;
        if s.abs() < ERRTOL || iterations == MAX_DUPLICATIONS {
            let series = 1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)));
            return Ok(Carlson {
                value: series / mean.sqrt(),
                iterations,
            });
        }
        let lambda = 2.0 * x.sqrt() * y.sqrt() + y;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        iterations += 1;
    }
}

/// R_J(x, y, z, p) = (3/2) ∫₀^∞ dt / ((t+p)√((t+x)(t+y)(t+z))) for p > 0.
pub fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> Result<Carlson> {
    check_carlson("carlson_rj", &[x, y, z, p], true)?;
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let mut sum = 0.0;
    let mut scale = 1.0;
    let mut iterations = 0;
    loop {
        let mean = 0.2 * (x + y + z + p + p);
        let dx = (mean - x) / mean;
        let dy = (mean - y) / mean;
        let dz = (mean - z) / mean;
        let dp = (mean - p) / mean;
        let spread = dx.abs().max(dy.abs()).max(dz.abs()).max(dp.abs());
        if spread < ERRTOL || iterations == MAX_DUPLICATIONS {
            const C1: f64 = 3.0 / 14.0;
            const C2: f64 = 1.0 / 3.0;
            const C3: f64 = 3.0 / 22.0;
            const C4: f64 = 3.0 / 26.0;
            const C5: f64 = 0.75 * C3;
            const C6: f64 = 1.5 * C4;
            const C7: f64 = 0.5 * C2;
            const C8: f64 = C3 + C3;
            let ea = dx * (dy + dz) + dy * dz;
            let eb = dx * dy * dz;
            let ec = dp * dp;
            let ed = ea - 3.0 * ec;
            let ee = eb + 2.0 * dp * (ea - ec);
            let series = 1.0 + ed * (-C1 + C5 * ed - C6 * ee)
                + eb * (C7 + dp * (-C8 + dp * C4))
                + dp * ea * (C2 - dp * C3)
                - C2 * dp * ec;
            return Ok(Carlson {
                value: 3.0 * sum + scale * series / (mean * mean.sqrt()),
                iterations,
            });
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        let alpha = p * (sx + sy + sz) + sx * sy * sz;
        let beta = p * (p + lambda) * (p + lambda);
        sum += scale * carlson_rc(alpha * alpha, beta)?.value;
        scale *= 0.25;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        p = 0.25 * (p + lambda);
        iterations += 1;
    }
}

/// F(φ, k) = sin φ · R_F(cos²φ, 1 − k² sin²φ, 1).
pub fn incomplete_f(phi: Amplitude, k: Modulus) -> f64 {
    let (s, c) = phi.get().sin_cos();
    let ks = k.get() * s;
    carlson_rf(c * c, (1.0 - ks) * (1.0 + ks), 1.0)
        .expect("arguments in domain")
        .value
        * s
}

/// K(k) = R_F(0, k′², 1).
pub fn complete_k(k: Modulus) -> f64 {
    carlson_rf(0.0, k.complement_squared(), 1.0)
        .expect("arguments in domain")
        .value
}

/// Π(n, k) = K(k) + (n/3) R_J(0, k′², 1, 1 − n), accepting k ∈ [0, 1).
pub fn complete_pi(n: Characteristic, k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(domain("complete_pi", k, "k must lie in [0, 1)"));
    }
    let n = n.get();
    let kc2 = (1.0 - k) * (1.0 + k);
    let first = carlson_rf(0.0, kc2, 1.0)?.value;
    if n == 0.0 {
        return Ok(first);
    }
    Ok(first + n / 3.0 * carlson_rj(0.0, kc2, 1.0, 1.0 - n)?.value)
}

/// K(√(1−k²)) − (2/(1+k)) K((1−k)/(1+k)), zero by the descending Landen
/// transformation.
pub fn landen_residual(k: Modulus) -> f64 {
    let k = k.get();
    let descended = Modulus((1.0 - k) / (1.0 + k));
    complete_k(Modulus(k).complement()) - 2.0 / (1.0 + k) * complete_k(descended)
}

/// `1/√((1−x²)(1−k²x²))` with 1 − x formed from the node when `upper` is 1.
fn first_kind_weight(node: Node, upper: f64, k: f64) -> f64 {
    let one_minus_x = if upper == 1.0 {
        node.to_upper
    } else {
        1.0 - node.x
    };
    let kx = k * node.x;
    (one_minus_x * (1.0 + node.x) * (1.0 - kx) * (1.0 + kx)).sqrt().recip()
}

fn defining_integral<G>(upper: f64, k: f64, g: G, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    G: Fn(f64) -> f64,
{
    if upper == 0.0 {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evals: 0,
            converged: true,
        });
    }
    let iv = Interval::new(0.0, upper, Singularity::Upper)?;
    integrate_nodes(|node| g(node.x) * first_kind_weight(node, upper, k), &iv, cfg)
}

/// F(φ, k) by quadrature of its x-form.
pub fn defining_f(phi: Amplitude, k: Modulus, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    let upper = if phi.get() == FRAC_PI_2 { 1.0 } else { phi.get().sin() };
    defining_integral(upper, k.get(), |_| 1.0, cfg)
}

/// K(k) by quadrature of its x-form.
pub fn defining_k(k: Modulus, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    defining_integral(1.0, k.get(), |_| 1.0, cfg)
}

/// Π(n, k) by quadrature of its x-form.
pub fn defining_pi(n: Characteristic, k: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    if !(0.0..1.0).contains(&k) {
        return Err(domain("defining_pi", k, "k must lie in [0, 1)"));
    }
    let n = n.get();
    defining_integral(1.0, k, |x| (1.0 - n * x * x).recip(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn m(k: f64) -> Modulus {
        Modulus::new(k).unwrap()
    }

    #[test]
    fn type_invariants() {
        assert!(Modulus::new(0.0).is_err());
        assert!(Modulus::new(1.0).is_err());
        assert!(Modulus::new(f64::NAN).is_err());
        assert!(Amplitude::new(-0.1).is_err());
        assert!(Amplitude::new(FRAC_PI_2).is_ok());
        assert!(Characteristic::new(1.0).is_err());
        assert!(Characteristic::new(-3.0).is_ok());
        assert!(complete_pi(Characteristic::new(0.5).unwrap(), 1.0).is_err());
    }

    #[test]
    fn carlson_closed_forms() {
        // R_F(0, 1, 1) = π/2, R_C(0, 1/4) = π, R_J(x, x, x, x) = x^{-3/2}
        assert!((carlson_rf(0.0, 1.0, 1.0).unwrap().value - FRAC_PI_2).abs() < 1e-15);
        assert!((carlson_rc(0.0, 0.25).unwrap().value - PI).abs() < 1e-15);
        assert!((carlson_rj(2.0, 2.0, 2.0, 2.0).unwrap().value - 2f64.powf(-1.5)).abs() < 1e-16);
        assert!(carlson_rf(0.0, 0.0, 1.0).is_err());
        assert!(carlson_rj(1.0, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn trivial_limits() {
        let k = m(0.3);
        let f = incomplete_f(Amplitude::new(FRAC_PI_2).unwrap(), k);
        assert!((f - complete_k(k)).abs() < 1e-15);
        assert!((incomplete_f(Amplitude::new(0.7).unwrap(), m(1e-9)) - 0.7).abs() < 1e-15);
        assert!((complete_k(m(1e-8)) - FRAC_PI_2).abs() < 1e-12);
        let pi0 = complete_pi(Characteristic::new(0.0).unwrap(), 0.5).unwrap();
        assert_eq!(pi0, complete_k(m(0.5)));
        let pik0 = complete_pi(Characteristic::new(0.5).unwrap(), 0.0).unwrap();
        assert!((pik0 - PI / (2.0 * 0.5f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn duplication_converges_quickly() {
        for i in 1..20 {
            let k = f64::from(i) / 20.0;
            let kc2 = (1.0 - k) * (1.0 + k);
            assert!(carlson_rf(0.0, kc2, 1.0).unwrap().iterations <= 12);
            for n in [-0.9, 0.1, 0.5, 0.9] {
                assert!(carlson_rj(0.0, kc2, 1.0, 1.0 - n).unwrap().iterations <= 12);
            }
        }
    }

    #[test]
    fn monotonicity() {
        let mut previous = 0.0;
        for i in 1..50 {
            let v = complete_k(m(f64::from(i) / 50.0));
            assert!(v > previous && v > FRAC_PI_2);
            previous = v;
        }
        let mut previous = 0.0;
        for i in -10..10 {
            let v = complete_pi(Characteristic::new(f64::from(i) / 10.5).unwrap(), 0.6).unwrap();
            assert!(v > previous);
            previous = v;
        }
    }

    #[test]
    fn landen_identity() {
        for k in [2.0 - 3f64.sqrt(), 0.5, 0.9] {
            assert!(landen_residual(m(k)).abs() < 1e-12, "k = {k}");
        }
        assert!(landen_residual(m(0.999)).abs() < 1e-10);
    }

    #[test]
    fn carlson_against_defining_integrals() {
        let cfg = QuadratureConfig::default();
        for i in 0..10 {
            let k = 0.05 + 0.09 * f64::from(i);
            let phi = Amplitude::new(0.15 * f64::from(i + 1)).unwrap();
            let n = Characteristic::new(-0.5 + 0.14 * f64::from(i)).unwrap();
            let f = defining_f(phi, m(k), &cfg).unwrap().value;
            assert!((incomplete_f(phi, m(k)) - f).abs() < 1e-11, "F at {i}");
            let kk = defining_k(m(k), &cfg).unwrap().value;
            assert!((complete_k(m(k)) - kk).abs() < 1e-11, "K at {i}");
            let p = defining_pi(n, k, &cfg).unwrap().value;
            assert!((complete_pi(n, k).unwrap() - p).abs() < 1e-11, "Pi at {i}");
        }
    }
}
