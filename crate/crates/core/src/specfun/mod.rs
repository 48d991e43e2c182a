//! Complex special functions: the analytic logarithm of Gamma on the cut
//! plane, Gamma powers, digamma, the Barnes G-function and its analytic
//! logarithm, and the Gauss hypergeometric function.
//!
//! Everything is double precision. Arguments are shifted rightward by the
//! functional equations until the Stirling-type expansions apply.

mod barnes;
mod hyp2f1;

pub use barnes::{barnes_g, log_barnes_g};
pub use hyp2f1::hyp2f1;

use crate::cplx::{c, nonpositive_integer, on_cut, plog, r, C};
use crate::error::{Error, Result};

/// Real part threshold beyond which the asymptotic expansions are used.
const SHIFT_RE: f64 = 18.0;

/// B_{2k} / ((2k)(2k-1)), the Stirling series coefficients for log Gamma.
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

/// B_{2k} / (2k), the asymptotic series coefficients for digamma.
const DIGAMMA_COEF: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

pub(crate) const LN_2PI: f64 = 1.837877066409345483560659472811;

/// Analytic logarithm of Gamma on `C \ (-inf, 0]`, real on the positive
/// axis, so that `exp(log_gamma(z)) = Gamma(z)`.
///
/// Shifts by `log_gamma(z) = log_gamma(z+1) - log z` until the Stirling
/// expansion converges to machine precision.
pub fn log_gamma(z: C) -> Result<C> {
    if on_cut(z) {
        return Err(Error::DomainCut(format!("log_gamma({z})")));
    }
    let shift = (SHIFT_RE - z.re).ceil().max(0.0) as usize;
    let mut log_sum = r(0.0);
    for j in 0..shift {
        // z + j stays off the cut: its imaginary part equals that of z,
        // and for im == 0 the whole ray z + [0, shift] is positive.
        log_sum += plog(z + r(j as f64))?;
    }
    Ok(stirling(z + r(shift as f64)) - log_sum)
}

/// Stirling expansion of log Gamma, valid for Re(z) >= SHIFT_RE.
fn stirling(z: C) -> C {
    let lz = z.ln();
    let mut series = r(0.0);
    let z2 = z * z;
    let mut p = z;
    for coef in STIRLING {
        series += r(coef) / p;
        p *= z2;
    }
    (z - r(0.5)) * lz - z + r(0.5 * LN_2PI) + series
}

/// `Gamma(z)^w := exp(w log_gamma(z))`; single-valued off the cut.
pub fn gamma_power(z: C, w: C) -> Result<C> {
    if w == r(0.0) {
        return Ok(r(1.0));
    }
    Ok((w * log_gamma(z)?).exp())
}

/// Gamma on the whole plane (reflection on the left), poles rejected.
pub fn gamma(z: C) -> Result<C> {
    if z.re >= 0.5 {
        return Ok(log_gamma(z)?.exp());
    }
    if let Some(n) = nonpositive_integer(z) {
        return Err(Error::PoleAt(format!("Gamma at {n}")));
    }
    // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    let s = sin_pi(z);
    Ok(r(std::f64::consts::PI) / (s * log_gamma(r(1.0) - z)?.exp()))
}

/// 1/Gamma as an entire function; exact zeros at the nonpositive integers.
pub fn recip_gamma(z: C) -> Result<C> {
    if z.re >= 0.5 {
        return Ok((-log_gamma(z)?).exp());
    }
    if nonpositive_integer(z).is_some() {
        return Ok(r(0.0));
    }
    Ok(sin_pi(z) * log_gamma(r(1.0) - z)?.exp() / std::f64::consts::PI)
}

/// Some branch of log Gamma(z), valid on the whole plane minus the poles.
/// Only `exp` of the result is meaningful to callers; do not use it where
/// an analytic branch is required.
pub fn ln_gamma_any(z: C) -> Result<C> {
    if !on_cut(z) && z.re > 0.0 {
        return log_gamma(z);
    }
    if nonpositive_integer(z).is_some() {
        return Err(Error::PoleAt(format!("Gamma at {z}")));
    }
    if !on_cut(z) {
        return log_gamma(z);
    }
    // On the cut: reflection with a value-branch log of sin.
    Ok(r(std::f64::consts::PI.ln()) - ln_sin_pi(z) - log_gamma(r(1.0) - z)?)
}

/// sin(pi z) without overflow management (|Im z| <= ~200 in this crate).
fn sin_pi(z: C) -> C {
    (z * std::f64::consts::PI).sin()
}

/// Value-branch log of sin(pi z), stable for large |Im z|.
fn ln_sin_pi(z: C) -> C {
    let w = z * std::f64::consts::PI;
    if w.im.abs() <= 20.0 {
        return w.sin().ln();
    }
    let i = c(0.0, 1.0);
    let ln_2i = c(std::f64::consts::LN_2, std::f64::consts::FRAC_PI_2);
    if w.im < 0.0 {
        // sin w = e^{iw}(1 - e^{-2iw}) / (2i)
        i * w - ln_2i + (r(1.0) - (-i * w * 2.0).exp()).ln()
    } else {
        // sin w = -e^{-iw}(1 - e^{2iw}) / (2i)
        -i * w - ln_2i + c(0.0, std::f64::consts::PI) + (r(1.0) - (i * w * 2.0).exp()).ln()
    }
}

/// Digamma psi = Gamma'/Gamma, meromorphic with poles at 0, -1, -2, ...
pub fn digamma(z: C) -> Result<C> {
    if let Some(n) = nonpositive_integer(z) {
        return Err(Error::PoleAt(format!("digamma at {n}")));
    }
    let shift = (SHIFT_RE - z.re).ceil().max(0.0) as usize;
    let mut tail = r(0.0);
    for j in 0..shift {
        tail += r(1.0) / (z + r(j as f64));
    }
    let zz = z + r(shift as f64);
    // psi(z) = log z - 1/(2z) - sum B_{2k}/(2k z^{2k})
    let lz = zz.ln();
    let mut series = r(0.0);
    let inv2 = r(1.0) / (zz * zz);
    let mut p = inv2;
    for coef in DIGAMMA_COEF {
        series += r(coef) * p;
        p *= inv2;
    }
    Ok(lz - r(0.5) / zz - series - tail)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::c;

    const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

    #[test]
    fn log_gamma_integers() {
        assert!(log_gamma(r(1.0)).unwrap().norm() < 1e-14);
        let expected = 362880.0f64.ln(); // 9!
        assert!((log_gamma(r(10.0)).unwrap().re - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn log_gamma_recurrence_complex() {
        let z = c(2.7, 2.1);
        let lhs = log_gamma(z + r(1.0)).unwrap() - log_gamma(z).unwrap();
        assert!((lhs - z.ln()).norm() < 1e-13);
    }

    #[test]
    fn log_gamma_half() {
        let v = log_gamma(r(0.5)).unwrap();
        assert!((v.re - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-14);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn log_gamma_rejects_cut() {
        assert!(log_gamma(r(-1.5)).is_err());
        assert!(log_gamma(r(0.0)).is_err());
    }

    #[test]
    fn gamma_power_basics() {
        assert!((gamma_power(r(3.0), r(2.0)).unwrap() - r(4.0)).norm() < 1e-13);
        assert!((gamma_power(r(0.5), r(2.0)).unwrap().re - std::f64::consts::PI).abs() < 1e-13);
        assert_eq!(gamma_power(c(0.3, 9.0), r(0.0)).unwrap(), r(1.0));
    }

    #[test]
    fn gamma_reflection_left_halfplane() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let v = gamma(r(-0.5)).unwrap();
        assert!((v.re + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
        assert!(gamma(r(-3.0)).is_err());
    }

    #[test]
    fn recip_gamma_zeros_and_values() {
        assert_eq!(recip_gamma(r(-7.0)).unwrap(), r(0.0));
        let v = recip_gamma(r(4.0)).unwrap();
        assert!((v.re - 1.0 / 6.0).abs() < 1e-14);
        // entire-function consistency across the reflection seam
        let z = c(0.4999, 3.0);
        let a = recip_gamma(z).unwrap();
        let b = (-log_gamma(z).unwrap()).exp();
        assert!((a - b).norm() < 1e-12 * b.norm());
    }

    #[test]
    fn ln_gamma_any_on_cut() {
        // |Gamma(-1.5)| known: Gamma(-1.5) = 4 sqrt(pi) / 3
        let v = ln_gamma_any(r(-1.5)).unwrap().exp();
        let expected = 4.0 * std::f64::consts::PI.sqrt() / 3.0;
        assert!((v.norm() - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(r(1.0)).unwrap().re + EULER_GAMMA).abs() < 1e-13);
        assert!((digamma(r(2.0)).unwrap().re - (1.0 - EULER_GAMMA)).abs() < 1e-13);
        let z = c(1.3, -0.7);
        let lhs = digamma(z + r(1.0)).unwrap();
        let rhs = digamma(z).unwrap() + r(1.0) / z;
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn digamma_series_oracle() {
        // psi(z) = -gamma + sum_{k>=0} (1/(k+1) - 1/(k+z)) summed directly
        let z = r(20.0);
        let mut acc = -EULER_GAMMA;
        for k in 0..20_000_000u64 {
            let kf = k as f64;
            acc += 1.0 / (kf + 1.0) - 1.0 / (kf + 20.0);
        }
        let v = digamma(z).unwrap().re;
        assert!((v - acc).abs() < 1e-6, "series {acc} vs asymptotic {v}");
    }

    #[test]
    fn ln_sin_large_imag() {
        for &im in &[25.0f64, -31.0] {
            let z = c(0.3, im);
            let v = ln_sin_pi(z).exp();
            // compare against the dominant-exponential closed form
            let w = z * std::f64::consts::PI;
            let direct = if im.abs() < 30.0 {
                w.sin()
            } else {
                let i = c(0.0, 1.0);
                if im < 0.0 {
                    (i * w).exp() / (2.0 * i)
                } else {
                    -(-i * w).exp() / (2.0 * i)
                }
            };
            assert!((v - direct).norm() < 1e-10 * direct.norm());
        }
    }
}
