//! Zero-mode integration: Gaussian-regularized correlators, their
//! renormalized limits, the Hankel-contour prescription, distributional
//! pairings, and the analytic-continuation comparison value.
//!
//! The regularized integral over the zero mode c collapses, after a
//! Fubini step, to a single Gaussian-weighted line integral in the
//! Mellin-Barnes variable; no nested (c, y) quadrature appears anywhere.

mod pairing;

pub use pairing::{
    delta_target, fourier_modulus_bound, heaviside_limit, heaviside_pairing, two_point_pairing,
};

use crate::coulomb::{ln_coeff_split, CorrelatorCase, SQRT2};
use crate::cplx::{c, near_integer, nonpositive_integer, one_minus_e2pii_over, ppow, r, C, I};
use crate::correlator::{f_eval_offset, QuadratureSpec};
use crate::error::{Error, Result};
use crate::quad::{graded_edges, integrate_certified, uniform_edges};
#[cfg(test)]
use crate::quad::integrate_panels;
use crate::specfun::{barnes_g, gamma, ln_gamma_any, recip_gamma};

/// Descending Gaussian-cutoff widths with the extrapolation rule.
#[derive(Debug, Clone)]
pub struct RegularizationSchedule {
    pub epsilons: Vec<f64>,
    pub extrapolation: Extrapolation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extrapolation {
    None,
    /// Eliminate eps, eps^2, ... up to the given order from the tail of
    /// the schedule.
    Richardson(usize),
}

impl Default for RegularizationSchedule {
    fn default() -> Self {
        RegularizationSchedule {
            epsilons: (0..8).map(|k| 0.4 * 0.5f64.powi(k)).collect(),
            extrapolation: Extrapolation::Richardson(3),
        }
    }
}

impl RegularizationSchedule {
    pub fn validate(&self) -> Result<()> {
        if self.epsilons.len() < 2 {
            return Err(Error::DomainError("schedule needs at least 2 widths".into()));
        }
        for pair in self.epsilons.windows(2) {
            if pair[1] >= pair[0] {
                return Err(Error::DomainError("schedule must strictly decrease".into()));
            }
        }
        let last = *self.epsilons.last().unwrap();
        if last < 1e-4 {
            return Err(Error::DomainError(format!(
                "smallest width {last} below the quadrature resolvability floor 1e-4"
            )));
        }
        Ok(())
    }
}

/// Zero-mode integration contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContourPrescription {
    RealLine,
    Hankel,
}

/// Smooth compactly supported bump, exp(-1/(1 - rho^2)) inside the ball.
#[derive(Debug, Clone)]
pub struct TestFunction {
    pub center: Vec<f64>,
    pub radius: f64,
    pub scale: f64,
}

impl TestFunction {
    pub fn bump(center: Vec<f64>, radius: f64, scale: f64) -> Self {
        TestFunction {
            center,
            radius,
            scale,
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let rho2: f64 = x
            .iter()
            .zip(&self.center)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            / (self.radius * self.radius);
        if rho2 >= 1.0 {
            0.0
        } else {
            self.scale * (-1.0 / (1.0 - rho2)).exp()
        }
    }
}

/// Gaussian-regularized zero-mode integral
/// C_eps = int e^{-sqrt2 w c - eps^2 c^2} C(..., c) dc
/// evaluated through the single u-quadrature that the Fubini exchange
/// produces. For purely imaginary nonzero w (the conformal two-point
/// choice) the line is shifted to Re(z) = eps, which steps over the pole
/// at z = 0 and contributes the explicit Gaussian term.
pub fn regularized_correlator(
    case: &CorrelatorCase,
    mu: f64,
    eps: f64,
    spec: &QuadratureSpec,
) -> Result<C> {
    case.validate()?;
    if mu <= 0.0 || eps <= 0.0 {
        return Err(Error::DomainError(format!(
            "need mu > 0 and eps > 0, got mu = {mu}, eps = {eps}"
        )));
    }
    let w = case.screening();
    if w.re == 0.0 {
        // the shifted-line representation also covers w = 0 exactly (the
        // grid of a diagonal pairing lands there): the n = 0 residue and
        // the q = eps line make sense for any purely imaginary w
        return regularized_imaginary_w(case, mu, eps, spec);
    }
    if w.re >= 0.0 {
        return Err(Error::HypothesisViolation(format!(
            "regularized correlator needs Re(w) < 0, or purely imaginary w; got {w}"
        )));
    }
    // C_eps = pref / (2 sqrt(pi)) int Gamma(-w - i eps u) f(w + i eps u)
    //         mu^{w + i eps u} e^{-u^2/2} du
    // The offset z - w = i eps u is passed exactly: near u = 0 it drops
    // under the rounding granularity of w itself.
    let ln_mu = r(mu.ln());
    let integrand = |u: f64| -> Result<C> {
        let zmw = c(0.0, eps * u);
        let z = w + zmw;
        let v = (ln_gamma_any(-z)? + ln_mu * z).exp() * f_eval_offset(case, zmw)?;
        Ok(v * (-0.5 * u * u).exp())
    };
    // |f(w + i eps u)| ~ |u|^{Re w} near u = 0 with Re w as low as -1:
    // the leftover of the innermost panel scales like h0^{1 + Re w}, so
    // the grading has to run very deep
    let u_max = 9.5;
    let mut edges: Vec<f64> = graded_edges(0.0, 1.0, 360).iter().rev().map(|t| -t).collect();
    edges.extend(graded_edges(0.0, 1.0, 360).iter().skip(1));
    let mut full = uniform_edges(-u_max, -1.0, 0.5);
    full.extend(edges.iter().skip(1));
    full.extend(uniform_edges(1.0, u_max, 0.5).iter().skip(1));
    let v = integrate_certified(&integrand, &full, 12, spec.rel_tol.max(1e-11))?;
    Ok(case.prefactor() * v / (2.0 * std::f64::consts::PI.sqrt()))
}

/// The Re(w) = 0 two-point branch: line at Re(z) = q with q = min(eps, 1/2)
/// (inside the pole-free strip), substituted as y = Im(w) + eps u so the
/// c-Gaussian becomes exp((q + i eps u)^2 / (2 eps^2)), plus the crossed
/// n = 0 pole term (sqrt(pi)/eps) e^{-a^2/(2 eps^2)} with w = i a.
fn regularized_imaginary_w(
    case: &CorrelatorCase,
    mu: f64,
    eps: f64,
    spec: &QuadratureSpec,
) -> Result<C> {
    imaginary_w_value(case, mu, eps, 0.4, 9.5, Some(spec.rel_tol.max(1e-11)))
}

/// Work-horse for the purely-imaginary-w branch; the pairing grids call
/// it uncertified with coarser panels (the integrand is analytic in u, a
/// 10-point panel of width 1 already clears 1e-8).
pub(crate) fn imaginary_w_value(
    case: &CorrelatorCase,
    mu: f64,
    eps: f64,
    h: f64,
    u_max: f64,
    certify: Option<f64>,
) -> Result<C> {
    let w = case.screening();
    let a = w.im;
    let q = eps.min(0.5);
    let ln_mu = r(mu.ln());
    let integrand = |u: f64| -> Result<C> {
        let zmw = c(q, eps * u);
        let z = c(q, a + eps * u);
        let gauss = (zmw * zmw / (2.0 * eps * eps)).exp();
        Ok((ln_gamma_any(-z)? + ln_mu * z).exp() * f_eval_offset(case, zmw)? * gauss)
    };
    let edges = uniform_edges(-u_max, u_max, h.min(eps / q));
    let line = match certify {
        Some(tol) => integrate_certified(&integrand, &edges, 12, tol)?,
        None => crate::quad::integrate_panels(&integrand, &edges, 10)?,
    };
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let pole = r(sqrt_pi / eps * (-a * a / (2.0 * eps * eps)).exp());
    Ok(case.prefactor() * (line / (2.0 * sqrt_pi) + pole))
}

/// Closed forms of the renormalized zero-mode limits, assembled from the
/// special-function layer.
pub fn closed_form_limit(case: &CorrelatorCase, mu: f64) -> Result<C> {
    case.validate()?;
    if mu <= 0.0 {
        return Err(Error::DomainError(format!("mu = {mu} must be positive")));
    }
    let w = case.screening();
    match *case {
        CorrelatorCase::ZeroPoint => {
            Ok(r(std::f64::consts::E / (4.0 * std::f64::consts::PI * SQRT2 * mu)))
        }
        CorrelatorCase::OnePoint { alpha } => {
            if alpha.re > 1e-12 || alpha.re <= -1.0 / SQRT2 {
                return Err(Error::HypothesisViolation(format!(
                    "one-point limit needs Re(alpha) in (-1/sqrt2, 0], got {alpha}"
                )));
            }
            // (4 sqrt2 pi mu)^w e^{-w(w+3)/2} G(w+2) cos(pi(w+1)/2)
            //   Gamma(-w) Gamma(w/2+1) / (sqrt(pi) G(-w))
            let base = 4.0 * SQRT2 * std::f64::consts::PI * mu;
            let v = ppow(r(base), w)?
                * (-w * (w + r(3.0)) * 0.5).exp()
                * barnes_g(w + r(2.0))?
                * ((w + r(1.0)) * (std::f64::consts::PI / 2.0)).cos()
                * gamma(-w)?
                * gamma(w / 2.0 + r(1.0))?
                / (std::f64::consts::PI.sqrt() * barnes_g(-w)?);
            Ok(v)
        }
        CorrelatorCase::TwoPointAntipodal { alpha1, alpha2 } => {
            require_strip(w)?;
            let beta1 = r(1.0) + alpha1 * SQRT2;
            let beta2 = r(1.0) + alpha2 * SQRT2;
            let base = 4.0 * SQRT2 * std::f64::consts::PI * mu;
            let v = ppow(r(base), w)?
                * (alpha1 * alpha2 * 2.0 - w * w * 0.5 - w * 1.5).exp()
                * gamma(-w)?
                * gamma(w + r(1.0))?
                * barnes_g(w + beta1)?
                * barnes_g(w + beta2)?
                * (w * (std::f64::consts::PI / 2.0)).cos()
                * gamma((w + r(1.0)) / 2.0)?
                / ((2.0 * std::f64::consts::PI).sqrt() * barnes_g(beta1)? * barnes_g(beta2)?);
            Ok(v)
        }
        CorrelatorCase::ThreePointResonant { alpha1, alpha3 } => {
            require_strip(w)?;
            let sa1 = alpha1 * SQRT2;
            let sa3 = alpha3 * SQRT2;
            let s13 = (alpha1 + alpha3) * SQRT2;
            let pref = (s13 + alpha1 * alpha3 * 2.0 - w * (w + r(3.0)) * 0.5).exp()
                * ((-s13 + (w + r(1.0)) * 0.5) * std::f64::consts::LN_2).exp();
            let sin_part = ((r(1.0) + sa1 * 2.0) * (alpha1 * SQRT2 * std::f64::consts::PI).sin()
                + (r(1.0) + sa3 * 2.0) * (alpha3 * SQRT2 * std::f64::consts::PI).sin())
                / (4.0 * std::f64::consts::PI);
            let v = pref
                * ppow(r(2.0 * std::f64::consts::PI * mu), w)?
                * gamma(-w)?
                * gamma(w + r(1.0))?
                * barnes_g(-sa1)?
                * barnes_g(-sa3)?
                * (w * (std::f64::consts::PI / 2.0)).cos()
                * gamma((w + r(1.0)) / 2.0)?
                / (2.0 * std::f64::consts::PI.sqrt() * barnes_g(r(1.0) + sa1)? * barnes_g(r(1.0) + sa3)?);
            Ok(v * sin_part)
        }
    }
}

fn require_strip(w: C) -> Result<()> {
    if w.re <= -0.5 || w.re >= 0.0 {
        return Err(Error::HypothesisViolation(format!(
            "limit formula needs Re(w) in (-1/2, 0), got {w}"
        )));
    }
    Ok(())
}

/// Renormalized limit lim eps^rho C_eps by Richardson extrapolation over
/// the schedule; rho is the case exponent (0, sqrt2 alpha, -w, -w) and
/// eps^rho := exp(rho ln eps).
pub fn renormalized_limit(
    case: &CorrelatorCase,
    mu: f64,
    sched: &RegularizationSchedule,
) -> Result<C> {
    sched.validate()?;
    let rho = case.renorm_exponent();
    let spec = QuadratureSpec::default();
    let vals: Vec<C> = sched
        .epsilons
        .iter()
        .map(|&eps| Ok(regularized_correlator(case, mu, eps, &spec)? * (rho * eps.ln()).exp()))
        .collect::<Result<Vec<C>>>()?;
    match sched.extrapolation {
        Extrapolation::None => Ok(*vals.last().unwrap()),
        Extrapolation::Richardson(order) => richardson(&vals, order),
    }
}

/// Richardson table for a halving schedule. The error model carries
/// eps ln(eps) alongside the plain powers (the Gaussian width enters
/// through eps^{i eps u} factors), and one extra elimination at the same
/// power absorbs the logarithm: the ladder runs powers 1, 1, 2, 2, ...
fn richardson(vals: &[C], order: usize) -> Result<C> {
    let mut col: Vec<C> = vals.to_vec();
    for j in 0..order.min(col.len() - 1) {
        let f = 2f64.powi((j / 2 + 1) as i32);
        col = col
            .windows(2)
            .map(|p| (p[1] * f - p[0]) / (f - 1.0))
            .collect();
    }
    if col.len() >= 3 {
        let scale = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let d1 = (col[col.len() - 1] - col[col.len() - 2]).norm();
        let d2 = (col[col.len() - 2] - col[col.len() - 3]).norm();
        // sub-dominant wiggles near a vanishing limit are not divergence;
        // flag only growth that matters against the data scale
        if d1 > 4.0 * d2 && d1 > 1e-3 * scale {
            return Err(Error::ExtrapolationUnstable(format!(
                "last Richardson differences grow: {d2:.3e} -> {d1:.3e}"
            )));
        }
    }
    Ok(*col.last().unwrap())
}

/// Gaussian-regularized Hankel-contour correlator: the period factor
/// (1 - e^{-2 pi i w}) times the half-line integral of
/// e^{-sqrt2 w c - eps^2 c^2} C, minus i times the vertical segment
/// integral of e^{-sqrt2 i w t} C(it) over t in (0, sqrt2 pi).
/// The half-line piece is the full regularized integral minus the
/// (-inf, 0] part, which is summed term by term; the vertical segment has
/// the closed series form. For integer w every piece carries an exactly
/// vanishing period factor and the value is identically zero.
pub fn hankel_correlator(case: &CorrelatorCase, mu: f64, eps: f64) -> Result<C> {
    case.validate()?;
    let w = case.screening();
    if let Some(k) = near_integer(w, i64::MAX) {
        if k <= -1 {
            // 1 - e^{-2 pi i w} = 0 and the segment vanishes term by term
            return Ok(r(0.0));
        }
        return Err(Error::PoleAt(format!("Hankel factor at integer w = {k}")));
    }
    let spec = QuadratureSpec::default();
    let c_eps = regularized_correlator(case, mu, eps, &spec)?;
    // sum_n (-mu)^n a_n / n! (1/(sqrt2 (n-w)) - I_n(eps)),
    // I_n = int_0^inf e^{-sqrt2 (n - w) s - eps^2 s^2} ds
    let mut correction = r(0.0);
    let mut ln_fact = 0.0;
    let mut prev = f64::INFINITY;
    let mut converged = false;
    for n in 0..200u32 {
        if n > 0 {
            ln_fact += (n as f64).ln();
        }
        let (ln_part, factor) = if n == 0 {
            (r(0.0), r(1.0))
        } else {
            ln_coeff_split(case, n)?
        };
        let nw = r(n as f64) - w;
        let exact = r(1.0) / (nw * SQRT2);
        let i_n = half_line_gaussian(nw * SQRT2, eps)?;
        let term =
            (r(mu.ln() * n as f64) + ln_part - r(ln_fact)).exp() * factor * (exact - i_n)
                * if n % 2 == 0 { 1.0 } else { -1.0 };
        correction += term;
        let tn = term.norm();
        if n > 3 && tn < 1e-14 * correction.norm().max(1e-30) && prev < 1e-13 {
            converged = true;
            break;
        }
        prev = tn;
    }
    if !converged {
        return Err(Error::TruncationFailure {
            terms: 200,
            tail: prev,
        });
    }
    let period = r(1.0) - (-I * (2.0 * std::f64::consts::PI) * w).exp();
    Ok(period * (c_eps + case.prefactor() * correction))
}

/// int_0^inf e^{-b s - eps^2 s^2} ds for Re(b) >= 0 (oscillation allowed).
fn half_line_gaussian(b: C, eps: f64) -> Result<C> {
    let decay = b.re.max(0.0);
    let s_exp = if decay > 1e-9 { 45.0 / decay } else { f64::INFINITY };
    let s_gauss = 7.5 / eps;
    let s_max = s_exp.min(s_gauss);
    let h = (std::f64::consts::PI / (b.im.abs() + 1.0)).min(s_max / 24.0);
    let f = |s: f64| Ok((-b * s - r(eps * eps * s * s)).exp());
    integrate_certified(&f, &uniform_edges(0.0, s_max, h), 12, 1e-11)
}

/// Closed series form of the vertical Hankel segment
///   -i int_0^{sqrt2 pi} e^{-sqrt2 i w t} C(..., mu, i t) dt
///   = pref sum_n (-mu)^n a_n / n! (1 - e^{2 pi i (n-w)}) / (sqrt2 (n-w)).
pub fn vertical_segment(case: &CorrelatorCase, mu: f64) -> Result<C> {
    case.validate()?;
    let w = case.screening();
    if let Some(k) = near_integer(w, i64::MAX) {
        if k >= 0 {
            return Err(Error::PoleAt(format!("vertical segment at w = {k}")));
        }
        // negative integer w: every term vanishes identically
        return Ok(r(0.0));
    }
    let mut sum = r(0.0);
    let mut ln_fact = 0.0;
    let mut prev = f64::INFINITY;
    for n in 0..200u32 {
        if n > 0 {
            ln_fact += (n as f64).ln();
        }
        let (ln_part, factor) = if n == 0 {
            (r(0.0), r(1.0))
        } else {
            ln_coeff_split(case, n)?
        };
        // (1 - e^{2 pi i d}) / d at d = n - w, stable near d = 0
        let d = r(n as f64) - w;
        let q = -one_minus_e2pii_over(-d) / SQRT2;
        let term = (r(mu.ln() * n as f64) + ln_part - r(ln_fact)).exp() * factor * q
            * if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += term;
        let tn = term.norm();
        if n > 3 && tn < 1e-14 * sum.norm().max(1e-30) && prev < 1e-12 {
            return Ok(case.prefactor() * sum);
        }
        prev = tn;
    }
    Err(Error::TruncationFailure {
        terms: 200,
        tail: prev,
    })
}

/// Half-plane Gaussian moment int_R (iu)^w e^{-u^2/2} du
/// = 2^{(w+1)/2} cos(pi w / 2) Gamma((w+1)/2), Re(w) > -1.
pub fn half_gaussian_moment(w: C) -> Result<C> {
    if w.re <= -1.0 {
        return Err(Error::DomainError(format!(
            "half-Gaussian moment needs Re(w) > -1, got {w}"
        )));
    }
    let v = ppow(r(2.0), (w + r(1.0)) / 2.0)?
        * (w * (std::f64::consts::PI / 2.0)).cos()
        * gamma((w + r(1.0)) / 2.0)?;
    Ok(v)
}

/// Analytic-continuation comparison value for the partition function at
/// general coupling; vanishes identically where gamma(-1/b^2) has a pole
/// (in particular at b = 1/sqrt2). Branch choice: +i, with the negative
/// real base read as arg = +pi.
pub fn ac_zero_point(b: f64, mu: f64) -> Result<C> {
    if !(0.0..1.0).contains(&b) || b <= 0.0 {
        return Err(Error::DomainError(format!("need b in (0, 1), got {b}")));
    }
    if mu <= 0.0 {
        return Err(Error::DomainError(format!("mu = {mu} must be positive")));
    }
    let inv_b2 = 1.0 / (b * b);
    if nonpositive_integer(r(-inv_b2)).is_some() {
        return Ok(r(0.0));
    }
    let q = 1.0 / b - b;
    let little_gamma = |z: C| -> Result<C> { Ok(gamma(z)? * recip_gamma(r(1.0) - z)?) };
    let g_b2 = little_gamma(r(-b * b))?; // negative real
    let g_inv = little_gamma(r(-inv_b2))?;
    let base = std::f64::consts::PI * mu * g_b2.re;
    let expo = r(1.0 - inv_b2);
    // principal-style power with arg(base) = +pi for the negative base
    let powed = (expo * c(base.abs().ln(), std::f64::consts::PI)).exp();
    let rest = (1.0 + b * b) / (std::f64::consts::PI.powi(3) * q)
        * (q * q - q * q * 4.0f64.ln()).exp();
    Ok(I * powed * r(rest) / (g_b2 * g_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::tree_sum;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn half_gaussian_moment_trivial_values() {
        let v = half_gaussian_moment(r(0.0)).unwrap();
        assert!((v.re - (2.0 * PI).sqrt()).abs() < 1e-13);
        assert!(half_gaussian_moment(r(1.0)).unwrap().norm() < 1e-15);
        let v = half_gaussian_moment(r(2.0)).unwrap();
        assert!((v.re + (2.0 * PI).sqrt()).abs() < 1e-13);
        assert!(half_gaussian_moment(r(-1.0)).is_err());
    }

    #[test]
    fn half_gaussian_moment_matches_quadrature() {
        // direct u-quadrature of (iu)^w e^{-u^2/2} with the |u|^{Re w}
        // singularity graded out
        for &w in &[c(-0.6, 0.3), c(0.4, -0.2), c(1.7, 0.0), c(-0.85, 0.1)] {
            let f = |u: f64| {
                let lniu = c(u.abs().ln(), 0.5 * PI * u.signum());
                Ok((w * lniu).exp() * (-0.5 * u * u).exp())
            };
            let mut edges: Vec<f64> =
                graded_edges(0.0, 1.0, 360).iter().rev().map(|t| -t).collect();
            edges.extend(graded_edges(0.0, 1.0, 360).iter().skip(1));
            let mut full = uniform_edges(-9.5, -1.0, 0.5);
            full.extend(edges.iter().skip(1));
            full.extend(uniform_edges(1.0, 9.5, 0.5).iter().skip(1));
            let quad = integrate_panels(&f, &full, 16).unwrap();
            let closed = half_gaussian_moment(w).unwrap();
            assert!(
                (quad - closed).norm() < 1e-9 * closed.norm().max(1e-6),
                "w = {w}: {quad} vs {closed}"
            );
        }
    }

    #[test]
    fn gaussian_transform_identity() {
        // int e^{sqrt2 i c y - eps^2 c^2} dc = (sqrt pi / eps) e^{-y^2/(2 eps^2)}
        let (eps, y) = (0.3, 0.35);
        let f = |cc: f64| Ok((c(0.0, SQRT2 * cc * y) - r(eps * eps * cc * cc)).exp());
        let edges = uniform_edges(-60.0, 60.0, 0.25);
        let quad = integrate_panels(&f, &edges, 12).unwrap();
        let closed = PI.sqrt() / eps * (-y * y / (2.0 * eps * eps)).exp();
        assert!(
            (quad - r(closed)).norm() < 1e-10 * closed,
            "{quad} vs {closed}"
        );
    }

    #[test]
    fn zero_point_limit_and_cauchy_sequence() {
        let case = CorrelatorCase::ZeroPoint;
        let spec = QuadratureSpec::default();
        let target = std::f64::consts::E / (4.0 * PI * SQRT2);
        // the approach carries an eps ln(eps) term; at eps = 0.05 the
        // value still sits ~6% out (cross-checked against an independent
        // high-precision evaluation of the same representation)
        let v = regularized_correlator(&case, 1.0, 0.05, &spec).unwrap();
        assert!((v.re - target).abs() < 0.1 * target, "{} vs {target}", v.re);
        assert!((v.re - 0.143668716951).abs() < 1e-9, "u-quadrature drifted: {}", v.re);
        // Cauchy: |C_{eps/2} - C_eps| decreasing
        let mut diffs = Vec::new();
        let mut prev = regularized_correlator(&case, 1.0, 0.2, &spec).unwrap();
        for &eps in &[0.1, 0.05, 0.025] {
            let next = regularized_correlator(&case, 1.0, eps, &spec).unwrap();
            diffs.push((next - prev).norm());
            prev = next;
        }
        assert!(diffs[1] < diffs[0] && diffs[2] < diffs[1], "{diffs:?}");
    }

    #[test]
    fn regularized_one_point_reduces_to_zero_point_at_zero_charge() {
        let spec = QuadratureSpec::default();
        let one = CorrelatorCase::OnePoint { alpha: r(0.0) };
        let zero = CorrelatorCase::ZeroPoint;
        let a = regularized_correlator(&one, 0.8, 0.1, &spec).unwrap();
        let b = regularized_correlator(&zero, 0.8, 0.1, &spec).unwrap();
        assert!((a - b).norm() < 1e-10 * b.norm(), "{a} vs {b}");
    }

    #[test]
    fn renormalized_zero_point_all_mu() {
        let case = CorrelatorCase::ZeroPoint;
        let sched = RegularizationSchedule::default();
        for &mu in &[0.5, 1.0, 2.0] {
            let v = renormalized_limit(&case, mu, &sched).unwrap();
            let target = closed_form_limit(&case, mu).unwrap();
            assert!(
                (v - target).norm() < 1e-4 * target.norm(),
                "mu = {mu}: {v} vs {target}"
            );
        }
    }

    #[test]
    fn one_point_limit_reduces_to_zero_point() {
        let one = CorrelatorCase::OnePoint { alpha: r(0.0) };
        let a = closed_form_limit(&one, 0.7).unwrap();
        let b = closed_form_limit(&CorrelatorCase::ZeroPoint, 0.7).unwrap();
        assert!((a - b).norm() < 1e-12 * b.norm(), "{a} vs {b}");
    }

    #[test]
    fn hankel_zero_point_vanishes() {
        for &mu in &[0.5, 1.0, 2.0] {
            let v = hankel_correlator(&CorrelatorCase::ZeroPoint, mu, 0.05).unwrap();
            assert!(v.norm() < 1e-9, "mu = {mu}: {v}");
        }
    }

    #[test]
    fn vertical_segment_zero_point_is_zero() {
        let v = vertical_segment(&CorrelatorCase::ZeroPoint, 1.0).unwrap();
        assert_eq!(v, r(0.0));
    }

    #[test]
    fn vertical_segment_matches_t_quadrature() {
        use crate::correlator::{series_correlator, SeriesSpec};
        let case = CorrelatorCase::OnePoint { alpha: r(-0.3) };
        let mu = 0.2;
        let w = case.screening();
        let closed = vertical_segment(&case, mu).unwrap();
        let sspec = SeriesSpec::default();
        let f = |t: f64| {
            let phase = (-I * SQRT2 * w * t).exp();
            Ok(phase * series_correlator(&case, mu, c(0.0, t), &sspec)?)
        };
        let edges = uniform_edges(0.0, SQRT2 * PI, 0.2);
        let direct = integrate_panels(&f, &edges, 12).unwrap() * (-I);
        assert!(
            (closed - direct).norm() < 1e-8 * closed.norm(),
            "{closed} vs {direct}"
        );
    }

    #[test]
    fn segment_factor_extraction_continuous() {
        // segment / (1 - e^{-2 pi i w}) finite and w-continuous near
        // w = -0.5 + 0.2i (vary alpha so w moves through the point)
        let mk = |da: f64| CorrelatorCase::OnePoint {
            alpha: (c(-0.5, 0.2) - r(1.0) - r(da)) / -SQRT2,
        };
        let mut prev: Option<C> = None;
        for &da in &[0.01, 0.005, 0.0025] {
            let case = mk(da);
            let w = case.screening();
            let seg = vertical_segment(&case, 0.5).unwrap();
            let ratio = seg / (r(1.0) - (-I * 2.0 * PI * w).exp());
            assert!(ratio.norm().is_finite());
            if let Some(p) = prev {
                assert!((ratio - p).norm() < 0.1 * ratio.norm());
            }
            prev = Some(ratio);
        }
    }

    #[test]
    fn ac_value_vanishes_at_the_solvable_point_and_scales() {
        assert_eq!(ac_zero_point(1.0 / SQRT2, 1.0).unwrap(), r(0.0));
        let b = 0.6;
        let v1 = ac_zero_point(b, 1.0).unwrap();
        let v2 = ac_zero_point(b, 2.0).unwrap();
        assert!(v1.norm() > 0.0);
        let measured = (v2.norm() / v1.norm()).ln() / 2f64.ln();
        let expected = 1.0 - 1.0 / (b * b);
        assert!((measured - expected).abs() < 1e-10, "{measured} vs {expected}");
    }

    #[test]
    fn bump_is_supported_and_smooth_at_edge() {
        let phi = TestFunction::bump(vec![0.2], 0.5, 1.3);
        assert_eq!(phi.eval(&[0.71]), 0.0);
        assert_eq!(phi.eval(&[-0.31]), 0.0);
        assert!(phi.eval(&[0.2]) > 0.4);
        assert!(phi.eval(&[0.699]) < 1e-100);
    }

    #[test]
    fn tree_sum_reexport_sanity() {
        assert_eq!(tree_sum(&[r(1.0), r(2.0)]), r(3.0));
    }
}
