//! Special functions, verified quadrature and an identity-replay harness for
//! the integral
//!
//! ```text
//!   I = ∫₀^∞ dx / ((1+x²)^{3/2} √(φ(x) + √φ(x))),   φ(x) = 1 + 4x²/(3(1+x²)²)
//! ```
//!
//! listed as π/(2√6) in entry 3.248.5 of Gradshteyn–Ryzhik (6th ed.). Every
//! intermediate form of I (integrals, series, a Hankel-contour product and an
//! elliptic closed form) is evaluated independently and cross-checked.

pub mod contour;
pub mod elliptic;
pub mod error;
pub mod quadrature;
pub mod representations;
pub mod series_forms;
pub mod special_fn;
pub mod verifier;

pub use error::{Error, Result};
