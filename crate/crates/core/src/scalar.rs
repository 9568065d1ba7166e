//! Complex scalars and the tolerance policy.
//!
//! Every coordinate and every cross ratio is a [`Scalar`], a double precision
//! complex number. Geometric equality is tolerance mediated: `x` and `y` are
//! equal when `|x - y| <= tol * max(1, |x|, |y|)`.

use std::sync::OnceLock;

pub use num_complex::Complex64;

/// The scalar field of the kernel.
pub type Scalar = Complex64;

/// Default relative tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Environment variable that overrides [`DEFAULT_TOL`].
pub const TOL_ENV: &str = "GEOM_TOL";

static TOL: OnceLock<f64> = OnceLock::new();

/// The ambient tolerance: `GEOM_TOL` if set to a positive number, else [`DEFAULT_TOL`].
pub fn tol() -> f64 {
    *TOL.get_or_init(|| {
        std::env::var(TOL_ENV).ok().and_then(|s| s.trim().parse::<f64>().ok()).filter(|t| t.is_finite() && *t > 0.0).unwrap_or(DEFAULT_TOL)
    })
}

#[inline]
pub fn re(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

#[inline]
pub fn cx(re: f64, im: f64) -> Scalar {
    Scalar::new(re, im)
}

pub const ZERO: Scalar = Scalar::new(0.0, 0.0);
pub const ONE: Scalar = Scalar::new(1.0, 0.0);
pub const I: Scalar = Scalar::new(0.0, 1.0);

/// Relative difference `|x - y| / max(1, |x|, |y|)`.
pub fn rel_diff(x: Scalar, y: Scalar) -> f64 {
    (x - y).norm() / 1f64.max(x.norm()).max(y.norm())
}

/// Tolerance-mediated equality.
pub fn approx_eq(x: Scalar, y: Scalar, tol: f64) -> bool {
    rel_diff(x, y) <= tol
}

/// True when the imaginary part is negligible against the modulus.
pub fn is_real(x: Scalar, tol: f64) -> bool {
    x.im.abs() <= tol * 1f64.max(x.norm())
}

/// True when the real part is negligible against the modulus.
pub fn is_pure_imaginary(x: Scalar, tol: f64) -> bool {
    x.re.abs() <= tol * 1f64.max(x.norm())
}

pub fn is_finite(x: Scalar) -> bool {
    x.re.is_finite() && x.im.is_finite()
}

/// A scalar extended by a point at infinity, used where cross ratios may be ∞.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtScalar {
    Finite(Scalar),
    Infinity,
}

impl ExtScalar {
    pub fn finite(self) -> Option<Scalar> {
        match self {
            ExtScalar::Finite(x) => Some(x),
            ExtScalar::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtScalar::Infinity)
    }

    /// Quotient `n / d` with ∞ for a vanishing denominator.
    pub fn ratio(n: Scalar, d: Scalar) -> ExtScalar {
        if d == ZERO {
            ExtScalar::Infinity
        } else {
            ExtScalar::Finite(n / d)
        }
    }
}

impl std::fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtScalar::Finite(x) => write!(f, "{x}"),
            ExtScalar::Infinity => write!(f, "inf"),
        }
    }
}
