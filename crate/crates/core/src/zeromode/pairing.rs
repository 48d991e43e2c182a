//! Distributional pairings: the regularized Heaviside kernel against
//! one-dimensional bumps, and the two-point correlator at conformal
//! charges against two-dimensional bumps, where the momentum-conservation
//! delta emerges.

use super::{half_line_gaussian, ContourPrescription, TestFunction};
use crate::coulomb::{ln_coeff_split, CorrelatorCase, SQRT2};
use crate::cplx::{c, one_minus_e2pii_over, r, C, I};
use crate::error::{Error, Result};
use crate::quad::{integrate_panels, tree_sum, uniform_edges};
use rayon::prelude::*;

const PI: f64 = std::f64::consts::PI;

/// Dawson integral D(y) = e^{-y^2} int_0^y e^{s^2} ds.
fn dawson(y: f64) -> f64 {
    let a = y.abs();
    if a > 6.0 {
        // asymptotic: (1/2y)(1 + 1/(2y^2) + 3/(2y^2)^2 ...)
        let inv2 = 1.0 / (2.0 * y * y);
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..40 {
            term *= (2 * k - 1) as f64 * inv2;
            sum += term;
            if term < 1e-17 * sum {
                break;
            }
        }
        return sum / (2.0 * y);
    }
    // quadrature of the defining integral; the integrand spans e^{y^2}
    let f = |s: f64| Ok(r((s * s).exp()));
    let edges = uniform_edges(0.0, a, 0.05_f64.max(a / 200.0));
    let v = integrate_panels(&f, &edges, 12).unwrap().re;
    y.signum() * (-a * a).exp() * v
}

/// Regularized Heaviside pairing
///   int int phi(x) e^{i t x - eps^2 t^2} dt dx
/// evaluated through the closed kernel
///   K_eps(x) = (1/eps) [ sqrt(pi)/2 e^{-x^2/(4 eps^2)} + i D(x/(2 eps)) ].
pub fn heaviside_pairing(phi: &TestFunction, eps: f64) -> Result<C> {
    if phi.center.len() != 1 {
        return Err(Error::DomainError("heaviside pairing needs a 1-d bump".into()));
    }
    if eps <= 0.0 {
        return Err(Error::DomainError(format!("eps = {eps} must be positive")));
    }
    let lo = phi.center[0] - phi.radius;
    let hi = phi.center[0] + phi.radius;
    let f = |x: f64| {
        let k = c(
            PI.sqrt() / 2.0 * (-x * x / (4.0 * eps * eps)).exp(),
            dawson(x / (2.0 * eps)),
        ) / eps;
        Ok(k * phi.eval(&[x]))
    };
    // resolve the kernel scale eps around the origin if it is in support
    let h = if lo < 0.0 && hi > 0.0 {
        (eps / 2.0).min(phi.radius / 32.0)
    } else {
        phi.radius / 32.0
    };
    integrate_panels(&f, &uniform_edges(lo, hi, h), 12, )
}

/// The eps -> 0 limit of the Heaviside pairing:
/// pi phi(0) + i int_0^inf (phi(x) - phi(-x))/x dx.
pub fn heaviside_limit(phi: &TestFunction) -> Result<C> {
    if phi.center.len() != 1 {
        return Err(Error::DomainError("heaviside limit needs a 1-d bump".into()));
    }
    let x_max = phi.center[0].abs() + phi.radius;
    let odd_over_x = |x: f64| Ok(r((phi.eval(&[x]) - phi.eval(&[-x])) / x));
    // [0, delta]: the integrand is 2 phi'(0) + O(x^2)
    let delta = 1e-3;
    let h = 1e-5;
    let dphi0 = (phi.eval(&[h]) - phi.eval(&[-h])) / (2.0 * h);
    let near = 2.0 * dphi0 * delta;
    let far = integrate_panels(
        &odd_over_x,
        &uniform_edges(delta, x_max, phi.radius / 64.0),
        12,
    )?;
    Ok(r(PI * phi.eval(&[0.0])) + I * (far + r(near)))
}

/// Fourier modulus bound int_0^inf |phi_hat(t)| dt with
/// phi_hat(t) = int phi(x) e^{i t x} dx, by direct oscillatory quadrature.
pub fn fourier_modulus_bound(phi: &TestFunction, t_max: f64) -> Result<f64> {
    let lo = phi.center[0] - phi.radius;
    let hi = phi.center[0] + phi.radius;
    let hat = |t: f64| -> Result<C> {
        let f = |x: f64| Ok((I * t * x).exp() * phi.eval(&[x]));
        let h = (PI / (t.abs() + 1.0) * 0.5).min(phi.radius / 16.0);
        integrate_panels(&f, &uniform_edges(lo, hi, h), 12)
    };
    let mut total = 0.0;
    let mut t = 0.0;
    let step = 0.25;
    while t < t_max {
        // midpoint rule on |phi_hat|; modest accuracy is enough for a bound
        total += hat(t + 0.5 * step)?.norm() * step;
        t += step;
    }
    Ok(total)
}

/// Pairing of the regularized two-point correlator at conformal charges
/// alpha_j = -1/(2 sqrt2) + i P_j against a two-dimensional bump, with
/// either zero-mode prescription. The grid step must resolve the
/// Gaussian kernel of width ~eps.
pub fn two_point_pairing(
    phi: &TestFunction,
    mu: f64,
    eps: f64,
    prescription: ContourPrescription,
    step: Option<f64>,
) -> Result<C> {
    if phi.center.len() != 2 {
        return Err(Error::DomainError("two-point pairing needs a 2-d bump".into()));
    }
    let h = step.unwrap_or(eps / 3.0);
    if h > eps / 3.0 * (1.0 + 1e-9) {
        return Err(Error::GridTooCoarse {
            kernel: eps,
            step: h,
        });
    }
    let n = (2.0 * phi.radius / h).ceil() as usize + 1;
    let rows: Vec<C> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let p1 = phi.center[0] - phi.radius + h * i as f64;
            let mut acc = r(0.0);
            for j in 0..=n {
                let p2 = phi.center[1] - phi.radius + h * j as f64;
                let weight = phi.eval(&[p1, p2]);
                if weight == 0.0 {
                    continue;
                }
                let case = CorrelatorCase::TwoPointAntipodal {
                    alpha1: c(-1.0 / (2.0 * SQRT2), p1),
                    alpha2: c(-1.0 / (2.0 * SQRT2), p2),
                };
                let v = match prescription {
                    ContourPrescription::RealLine => {
                        super::imaginary_w_value(&case, mu, eps, 1.0, 7.0, None)?
                    }
                    ContourPrescription::Hankel => hankel_imaginary_w(&case, mu, eps)?,
                };
                acc += v * weight;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<C>>>()?;
    Ok(tree_sum(&rows) * h * h)
}

/// Hankel-contour regularized two-point value at purely imaginary w,
/// including the exact-diagonal point w = 0 where the period factor
/// vanishes but the vertical segment survives.
fn hankel_imaginary_w(case: &CorrelatorCase, mu: f64, eps: f64) -> Result<C> {
    let w = case.screening();
    let c_eps = super::imaginary_w_value(case, mu, eps, 1.0, 7.0, None)?;
    let period = r(1.0) - (-I * 2.0 * PI * w).exp();
    let pref = case.prefactor();
    // negative-axis part and vertical segment, term by term in the series
    let mut neg = r(0.0);
    let mut vert = r(0.0);
    let mut ln_fact = 0.0;
    for nn in 0..60u32 {
        if nn > 0 {
            ln_fact += (nn as f64).ln();
        }
        let (ln_part, factor) = if nn == 0 {
            (r(0.0), r(1.0))
        } else {
            ln_coeff_split(case, nn)?
        };
        let scale = (r(mu.ln() * nn as f64) + ln_part - r(ln_fact)).exp()
            * factor
            * if nn % 2 == 0 { 1.0 } else { -1.0 };
        let d = r(nn as f64) - w;
        neg += scale * half_line_gaussian(d * SQRT2, eps)?;
        vert += scale * (-one_minus_e2pii_over(-d) / SQRT2);
        if nn > 5 && scale.norm() < 1e-13 {
            break;
        }
    }
    Ok(period * (c_eps - pref * neg) + pref * vert)
}

/// Right side of the momentum-conservation limit:
/// pi int e^{1/4 + 2 P1^2} phi(P1, -P1) dP1.
pub fn delta_target(phi: &TestFunction) -> Result<C> {
    if phi.center.len() != 2 {
        return Err(Error::DomainError("delta target needs a 2-d bump".into()));
    }
    let span = phi.radius * 2.0;
    let lo = phi.center[0] - span;
    let hi = phi.center[0] + span;
    let f = |p: f64| Ok(r((0.25 + 2.0 * p * p).exp() * phi.eval(&[p, -p])));
    let v = integrate_panels(&f, &uniform_edges(lo, hi, span / 64.0), 12)?;
    Ok(v * PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dawson_known_values() {
        // D(y) ~ y for small y; D has max ~0.541 at y ~ 0.924
        assert!((dawson(0.01) - 0.01).abs() < 1e-5);
        assert!((dawson(0.924) - 0.541).abs() < 5e-4);
        // large argument: 1/(2y) leading
        assert!((dawson(50.0) - 1.0 / 100.0).abs() < 1e-5);
        assert!((dawson(-0.5) + dawson(0.5)).abs() < 1e-14);
    }

    #[test]
    fn heaviside_symmetric_bump_gives_pi_phi0() {
        let phi = TestFunction::bump(vec![0.0], 1.0, 1.0);
        let v = heaviside_pairing(&phi, 0.01).unwrap();
        let target = PI * phi.eval(&[0.0]);
        assert!(
            (v.re - target).abs() < 0.01 * target && v.im.abs() < 1e-6,
            "{v} vs {target}"
        );
    }

    #[test]
    fn heaviside_antisymmetric_bump_purely_imaginary() {
        // phi(x) = bump(x - 0.7) - bump(x + 0.7), phi(0) = 0
        let b1 = TestFunction::bump(vec![0.7], 0.5, 1.0);
        let b2 = TestFunction::bump(vec![-0.7], 0.5, 1.0);
        let combined = TestFunction {
            center: vec![0.0],
            radius: 1.3,
            scale: 1.0,
        };
        // pair each piece separately (linearity) to reuse the bump kernel
        let v = (heaviside_pairing(&b1, 0.02).unwrap()
            - heaviside_pairing(&b2, 0.02).unwrap())
            .re;
        assert!(v.abs() < 1e-4, "real part {v}");
        let lim1 = heaviside_limit(&b1).unwrap();
        let lim2 = heaviside_limit(&b2).unwrap();
        let limit = lim1 - lim2;
        let paired = heaviside_pairing(&b1, 0.02).unwrap() - heaviside_pairing(&b2, 0.02).unwrap();
        assert!(
            (paired - limit).norm() < 0.01 * limit.norm().max(0.1),
            "{paired} vs {limit}"
        );
        let _ = combined;
    }

    #[test]
    fn heaviside_bounded_by_fourier_modulus() {
        let phi = TestFunction::bump(vec![0.3], 0.6, 1.0);
        let bound = fourier_modulus_bound(&phi, 250.0).unwrap();
        for &eps in &[0.4, 0.1, 0.02] {
            let v = heaviside_pairing(&phi, eps).unwrap();
            assert!(v.norm() <= bound * 1.001, "eps {eps}: {} > {bound}", v.norm());
        }
    }

    #[test]
    fn delta_target_positive_for_diagonal_bump() {
        let phi = TestFunction::bump(vec![0.3, -0.3], 0.2, 1.0);
        let v = delta_target(&phi).unwrap();
        assert!(v.re > 0.0 && v.im == 0.0);
        // off-diagonal support: slice phi(P, -P) empty
        let off = TestFunction::bump(vec![0.4, 0.1], 0.15, 1.0);
        assert_eq!(delta_target(&off).unwrap(), r(0.0));
    }
}
