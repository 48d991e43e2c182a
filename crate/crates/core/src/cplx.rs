//! Complex scalar type and principal-branch helpers.
//!
//! All evaluators work on `Complex64`. Powers are principal-branch only:
//! `z^w := exp(w log z)` with `log` the branch on `C \ (-inf, 0]` that is
//! real on the positive axis, and `arg z` in `[-pi, pi)`.

use crate::error::{Error, Result};
pub use num_complex::Complex64;

pub type C = Complex64;

pub const I: C = C::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn r(re: f64) -> C {
    C::new(re, 0.0)
}

/// True when `z` lies on the cut (-inf, 0] up to an absolute slack.
pub fn on_cut(z: C) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

/// Argument in [-pi, pi): the negative real axis maps to -pi.
pub fn arg_principal(z: C) -> f64 {
    if z.im == 0.0 && z.re < 0.0 {
        -std::f64::consts::PI
    } else {
        z.im.atan2(z.re)
    }
}

/// Principal logarithm; errors on the cut where no branch is defined.
pub fn plog(z: C) -> Result<C> {
    if on_cut(z) {
        return Err(Error::DomainCut(format!("{z}")));
    }
    Ok(z.ln())
}

/// Principal power z^w = exp(w log z).
pub fn ppow(z: C, w: C) -> Result<C> {
    if w == C::new(0.0, 0.0) {
        return Ok(r(1.0));
    }
    Ok((w * plog(z)?).exp())
}

/// Power of a positive real base, exp(w ln x); single-valued for x > 0.
pub fn pos_pow(x: f64, w: C) -> Result<C> {
    if x <= 0.0 {
        return Err(Error::DomainError(format!("base {x} not positive")));
    }
    Ok((w * x.ln()).exp())
}

/// Distance from `z` to the nearest integer <= `max`.
pub fn near_integer(z: C, max: i64) -> Option<i64> {
    let n = z.re.round();
    if n <= max as f64 && z.im.abs() < 1e-9 && (z.re - n).abs() < 1e-9 {
        Some(n as i64)
    } else {
        None
    }
}

/// Nonpositive-integer test used for pole detection.
pub fn nonpositive_integer(z: C) -> Option<i64> {
    near_integer(z, 0)
}

pub fn ensure_finite(z: C, what: &str) -> Result<C> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

/// Stable (1 - exp(-2 pi i d)) / d, the factor produced by integrating
/// e^{i 2 pi d t} over one period; series form near d = 0.
pub fn one_minus_e2pii_over(d: C) -> C {
    let two_pi_i = C::new(0.0, 2.0 * std::f64::consts::PI);
    if d.norm() < 1e-3 {
        // (1 - e^{-x})/d with x = 2 pi i d: expand to x^4
        let x = two_pi_i * d;
        two_pi_i * (r(1.0) - x / 2.0 + x * x / 6.0 - x * x * x / 24.0 + x * x * x * x / 120.0)
    } else {
        (r(1.0) - (-two_pi_i * d).exp()) / d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_arg_convention() {
        assert_eq!(arg_principal(c(-1.0, 0.0)), -std::f64::consts::PI);
        assert!(arg_principal(c(1.0, 1.0)) > 0.0);
    }

    #[test]
    fn cut_detection() {
        assert!(on_cut(c(-2.0, 0.0)));
        assert!(on_cut(c(0.0, 0.0)));
        assert!(!on_cut(c(-2.0, 1e-12)));
        assert!(!on_cut(c(0.5, 0.0)));
    }

    #[test]
    fn pow_identity() {
        let z = c(0.3, 1.7);
        let w1 = c(0.5, -0.2);
        let w2 = c(1.1, 0.9);
        let lhs = ppow(z, w1 + w2).unwrap();
        let rhs = ppow(z, w1).unwrap() * ppow(z, w2).unwrap();
        assert!((lhs - rhs).norm() < 1e-12 * lhs.norm());
    }

    #[test]
    fn period_factor_matches_direct() {
        let d = c(0.37, -0.21);
        let direct = (r(1.0) - (-C::new(0.0, 2.0 * std::f64::consts::PI) * d).exp()) / d;
        assert!((one_minus_e2pii_over(d) - direct).norm() < 1e-12 * direct.norm());
        // series branch
        let d = c(1e-5, 2e-5);
        let direct = (r(1.0) - (-C::new(0.0, 2.0 * std::f64::consts::PI) * d).exp()) / d;
        assert!((one_minus_e2pii_over(d) - direct).norm() < 1e-10 * direct.norm());
    }
}
