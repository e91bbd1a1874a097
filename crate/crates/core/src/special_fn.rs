//! Gamma-family scalar functions used by the series representations.
//!
//! Integer and half-integer arguments go through an exact recurrence from
//! Γ(1) and Γ(1/2) carried in compensated (double-double) arithmetic, so the
//! series hot path is free of approximation error. Other arguments are
//! reduced to [1/2, 3/2) and evaluated from the Taylor series of 1/Γ(1+z).

// coefficient tables are quoted at their published precision
#![allow(clippy::excessive_precision)]

use crate::error::{domain, Error, Result};

/// Largest argument for which Γ(x) is a finite `f64`.
pub const GAMMA_OVERFLOW_THRESHOLD: f64 = 171.624_376_956_302_7;

const SQRT_PI_HI: f64 = 1.772_453_850_905_516;
const SQRT_PI_LO: f64 = -7.666_586_499_825_799e-17;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Taylor coefficients of 1/Γ(1+z) about z = 0.
const RGAMMA_TAYLOR: [f64; 23] = [
    1.0,
    5.772_156_649_015_328_606_07e-1,
    -6.558_780_715_202_538_810_77e-1,
    -4.200_263_503_409_523_552_9e-2,
    1.665_386_113_822_914_895_02e-1,
    -4.219_773_455_554_433_674_82e-2,
    -9.621_971_527_876_973_562_11e-3,
    7.218_943_246_663_099_542_4e-3,
    -1.165_167_591_859_065_112_11e-3,
    -2.152_416_741_149_509_728_16e-4,
    1.280_502_823_881_161_861_53e-4,
    -2.013_485_478_078_823_865_57e-5,
    -1.250_493_482_142_670_657_35e-6,
    1.133_027_231_981_695_882_37e-6,
    -2.056_338_416_977_607_103_45e-7,
    6.116_095_104_481_415_817_86e-9,
    5.002_007_644_469_222_930_06e-9,
    -1.181_274_570_487_020_144_59e-9,
    1.043_426_711_691_100_510_49e-10,
    7.782_263_439_905_071_254_05e-12,
    -3.696_805_618_642_205_708_19e-12,
    5.100_370_287_454_475_979_02e-13,
    -2.058_326_053_566_506_783_22e-14,
];

/// Stirling-series corrections B₂ₖ / (2k(2k−1)), k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// A finite, strictly positive real argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PositiveReal(f64);

impl PositiveReal {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self(value))
        } else {
            Err(domain("PositiveReal", value, "must be finite and > 0"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for PositiveReal {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// Running product kept as an unevaluated sum `hi + lo`.
#[derive(Debug, Clone, Copy)]
struct Compensated {
    hi: f64,
    lo: f64,
}

impl Compensated {
    fn one() -> Self {
        Self { hi: 1.0, lo: 0.0 }
    }

    fn mul(self, m: f64) -> Self {
        let p = self.hi * m;
        let e = self.hi.mul_add(m, -p) + self.lo * m;
        let s = p + e;
        Self {
            hi: s,
            lo: e - (s - p),
        }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// Γ(x) for x > 0.
///
/// Returns [`Error::Overflow`] above [`GAMMA_OVERFLOW_THRESHOLD`]; use
/// [`log_gamma`] for large arguments.
pub fn gamma(x: f64) -> Result<f64> {
    let x = PositiveReal::new(x).map_err(|_| domain("gamma", x, "x must be > 0"))?.get();
    if x > GAMMA_OVERFLOW_THRESHOLD {
        return Err(Error::Overflow {
            function: "gamma",
            value: x,
        });
    }

    let twice = 2.0 * x;
    let value = if twice == twice.trunc() {
        if x == x.trunc() {
            integer_gamma(x)
        } else {
            half_integer_gamma(x)
        }
    } else {
        general_gamma(x)
    };

    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow {
            function: "gamma",
            value: x,
        })
    }
}

/// (n−1)! for integer n ≥ 1.
fn integer_gamma(n: f64) -> f64 {
    let mut acc = Compensated::one();
    let mut j = 2.0;
    while j < n {
        acc = acc.mul(j);
        j += 1.0;
    }
    acc.value()
}

/// Γ(m + 1/2) = √π · ∏_{j<m} (j + 1/2).
fn half_integer_gamma(x: f64) -> f64 {
    let mut acc = Compensated {
        hi: SQRT_PI_HI,
        lo: SQRT_PI_LO,
    };
    let mut j = 0.5;
    while j < x {
        acc = acc.mul(j);
        j += 1.0;
    }
    acc.value()
}

fn general_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) = Γ(1+x)/x with 1+x in [1, 1.5)
        return reciprocal_series(x).recip() / x;
    }
    let shift = (x - 0.5).floor();
    let base = x - shift;
    let mut acc = Compensated {
        hi: reciprocal_series(base - 1.0).recip(),
        lo: 0.0,
    };
    let mut j = 0.0;
    while j < shift {
        acc = acc.mul(base + j);
        j += 1.0;
    }
    acc.value()
}

/// 1/Γ(1+z) for |z| ≤ 1/2.
fn reciprocal_series(z: f64) -> f64 {
    RGAMMA_TAYLOR.iter().rev().fold(0.0, |acc, &c| acc.mul_add(z, c))
}

/// ln Γ(x) for x > 0, finite for all finite x.
pub fn log_gamma(x: f64) -> Result<f64> {
    let x = PositiveReal::new(x)
        .map_err(|_| domain("log_gamma", x, "x must be > 0"))?
        .get();
    if x < 10.0 {
        return Ok(gamma(x)?.ln());
    }
    let inv = x.recip();
    let inv2 = inv * inv;
    let correction = STIRLING.iter().rev().fold(0.0, |acc, &c| acc * inv2 + c) * inv;
    Ok((x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + correction)
}

/// Γ((n+1)/2 + k) / Γ((n+1)/2) as a running product.
pub fn pochhammer_half(n: u32, k: u32) -> f64 {
    let base = 0.5 * (f64::from(n) + 1.0);
    (0..k).fold(1.0, |acc, j| acc * (base + f64::from(j)))
}

/// C(2n, n) / 4ⁿ computed as ∏_{j=1..n} (1 − 1/(2j)).
pub fn central_binomial_ratio(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, j| acc * (1.0 - 0.5 / f64::from(j)))
}
