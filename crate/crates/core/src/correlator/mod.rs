//! Fixed-zero-mode correlators: the analytic interpolants f(z) with
//! f(n) = a_n, the Coulomb-gas power series in mu e^{sqrt(2) c}, and the
//! Mellin-Barnes line-integral representation. Series and contour are two
//! independent routes to the same number; their agreement is the central
//! cross-check of the crate.

mod bigseries;

use crate::coulomb::{ln_coeff_split, three_point_bracket, CorrelatorCase, FOUR_PI, SQRT2};
use crate::cplx::{on_cut, plog, r, C};
use crate::error::{Error, Result};
use crate::quad::{graded_edges, integrate_certified, uniform_edges};
use crate::specfun::{ln_gamma_any, log_barnes_g, log_gamma};

#[derive(Debug, Clone, Copy)]
pub struct SeriesSpec {
    pub max_terms: usize,
    pub tail_tol: f64,
}

impl Default for SeriesSpec {
    fn default() -> Self {
        SeriesSpec {
            max_terms: 400,
            tail_tol: 1e-9,
        }
    }
}

impl SeriesSpec {
    fn validate(&self) -> Result<()> {
        if self.max_terms < 8 || self.tail_tol <= 0.0 {
            return Err(Error::DomainError(format!(
                "series spec needs max_terms >= 8 and tail_tol > 0, got {self:?}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    /// Half-length of the vertical integration line.
    pub truncation_y: f64,
    pub rel_tol: f64,
    pub max_evals: usize,
    /// Optional override of the line abscissa (defaults to Re w, or to
    /// q = 1/2 in the purely-imaginary-w two-point case).
    pub line_re: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            truncation_y: 60.0,
            rel_tol: 1e-9,
            max_evals: 2_000_000,
            line_re: None,
        }
    }
}

impl QuadratureSpec {
    fn validate(&self) -> Result<()> {
        if self.truncation_y <= 0.0 || self.rel_tol <= 0.0 || self.rel_tol >= 1e-2 {
            return Err(Error::DomainError(format!(
                "quadrature spec needs truncation_y > 0 and rel_tol in (0, 1e-2), got {self:?}"
            )));
        }
        Ok(())
    }
}

/// The analytic interpolant f(z) of the expansion coefficients,
/// f(n) = a_n for nonnegative integers n. Assembled in log space from
/// the case's Gamma/Barnes closed form; all Gamma powers go through the
/// analytic logarithm, never through log of Gamma values.
pub fn f_eval(case: &CorrelatorCase, z: C) -> Result<C> {
    case.validate()?;
    f_eval_offset(case, z - case.screening())
}

/// Same interpolant, parameterized by the offset z - w, which the
/// quadratures know exactly. Near the contour's singular point z - w is
/// as small as 1e-100 while |w| ~ 1; forming it by subtraction would
/// round to zero at the working precision.
pub(crate) fn f_eval_offset(case: &CorrelatorCase, zmw: C) -> Result<C> {
    let w = case.screening();
    let z = w + zmw;
    match *case {
        CorrelatorCase::ZeroPoint => {
            // here w = -1 and the offset is z + 1
            if zmw == r(0.0) {
                // removable point of the rewritten form
                return Ok(r(std::f64::consts::E / FOUR_PI));
            }
            if on_cut(zmw) {
                return Err(Error::DomainCut(format!("f(zero) at {z}")));
            }
            let common = plog(r(FOUR_PI))? * z + z * (z - r(1.0)) * 0.5;
            let ln = if zmw.norm() < 0.25 {
                // G(z+1)^2 / Gamma(z+1)^{z-1} rewritten through G(z+2) to
                // keep the z -> -1 cancellation explicit
                common + log_barnes_g(zmw + r(1.0))? * 2.0 - zmw * log_gamma(zmw)?
            } else {
                common + log_barnes_g(zmw)? * 2.0 - (zmw - r(2.0)) * log_gamma(zmw)?
            };
            Ok(ln.exp())
        }
        CorrelatorCase::OnePoint { .. } => {
            if on_cut(zmw) {
                return Err(Error::DomainCut(format!("f(one): z - w = {zmw} on cut")));
            }
            // Gamma(z+1) G(z+1) combined into G(z+2): regular at z = -1
            let ln = plog(r(FOUR_PI))? * z + z * (z - r(3.0) - w * 2.0) * 0.5
                + ln_barnes_any(z + r(2.0))?
                + ln_barnes_any(zmw)?
                - z * log_gamma(zmw)?
                - ln_barnes_any(-w)?;
            Ok(ln.exp())
        }
        CorrelatorCase::TwoPointAntipodal { alpha1, alpha2 } => {
            if on_cut(zmw) {
                return Err(Error::DomainCut(format!("f(two): z - w = {zmw} on cut")));
            }
            let beta1 = r(1.0) + alpha1 * SQRT2;
            let beta2 = r(1.0) + alpha2 * SQRT2;
            let ln = plog(r(FOUR_PI))? * z + z * (z - r(3.0) - w * 2.0) * 0.5
                + ln_gamma_any(z + r(1.0))?
                + ln_barnes_any(z + beta1)?
                + ln_barnes_any(z + beta2)?
                - z * log_gamma(zmw)?
                - ln_barnes_any(beta1)?
                - ln_barnes_any(beta2)?;
            Ok(ln.exp())
        }
        CorrelatorCase::ThreePointResonant { alpha1, alpha3 } => {
            if on_cut(zmw) {
                return Err(Error::DomainCut(format!("f(three): z - w = {zmw} on cut")));
            }
            let sa1 = alpha1 * SQRT2;
            let sa3 = alpha3 * SQRT2;
            let ln = plog(r(2.0 * std::f64::consts::PI))? * z
                + z * (z - r(3.0) - w * 2.0) * 0.5
                + ln_gamma_any(z + r(1.0))?
                + ln_barnes_any(z + r(2.0) + sa1)?
                + ln_barnes_any(z + r(2.0) + sa3)?
                - z * log_gamma(zmw)?
                - ln_barnes_any(r(1.0) + sa1)?
                - ln_barnes_any(r(1.0) + sa3)?
                - log_gamma(z + r(1.0) + sa3)?;
            let bracket = three_point_bracket(z, zmw, sa1, sa3)?;
            Ok(ln.exp() * bracket)
        }
    }
}

/// Value-branch log of Barnes G: the analytic Theta everywhere off the
/// cut (arbitrarily small imaginary parts included), a plain log of the
/// entire function on it (only exp of the result is used).
fn ln_barnes_any(z: C) -> Result<C> {
    if !on_cut(z) {
        return log_barnes_g(z);
    }
    Ok(crate::specfun::barnes_g(z)?.ln())
}

/// ln(mu e^{sqrt2 c}) = ln mu + sqrt2 c, single-valued by construction.
pub fn ln_expansion_parameter(mu: f64, c_zm: C) -> C {
    r(mu.ln()) + c_zm * SQRT2
}

/// Power-series value of the fixed-zero-mode correlator, prefactor
/// included. Complex zero modes are allowed (the Hankel vertical segment
/// needs them). Terms are assembled in log space; when the alternating
/// sum cancels catastrophically the evaluation drops to the big-float
/// path (real parameters) or reports the loss.
pub fn series_correlator(case: &CorrelatorCase, mu: f64, c_zm: C, spec: &SeriesSpec) -> Result<C> {
    case.validate()?;
    spec.validate()?;
    if mu <= 0.0 {
        return Err(Error::DomainError(format!("mu = {mu} must be positive")));
    }
    let ln_x = ln_expansion_parameter(mu, c_zm);
    let attempt = series_f64(case, ln_x, spec);
    if let Ok((sum, max_term)) = attempt {
        // log-space coefficients are good to ~1e-12 absolute in the log,
        // so the summed error scales with the peak term, not with epsilon
        if max_term * 1e-12 <= spec.tail_tol * sum.norm().max(1e-300) {
            return Ok(case.prefactor() * sum);
        }
    }
    // too deep a cancellation (or too slow a decay) for doubles; the
    // real-parameter cases have a big-float route
    if let Some(v) = bigseries::series_real(case, ln_x, spec)? {
        return Ok(case.prefactor() * v);
    }
    match attempt {
        Ok((sum, max_term)) => Err(Error::CancellationLoss {
            lost: (max_term / sum.norm().max(1e-300)).log10(),
        }),
        Err(e) => Err(e),
    }
}

/// Double-precision series sum with the peak term magnitude.
fn series_f64(case: &CorrelatorCase, ln_x: C, spec: &SeriesSpec) -> Result<(C, f64)> {
    let mut sum = r(1.0); // n = 0 term
    let mut max_term = 1.0f64;
    let mut ln_fact = 0.0;
    let mut prev_norm = 1.0f64;
    let mut small = 0;
    for n in 1..=spec.max_terms {
        ln_fact += (n as f64).ln();
        let (ln_part, factor) = ln_coeff_split(case, n as u32)?;
        let ln_term = ln_x * n as f64 + ln_part - r(ln_fact);
        if ln_term.re > 700.0 {
            return Err(Error::CancellationLoss { lost: f64::INFINITY });
        }
        let term = ln_term.exp() * factor * if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += term;
        let tn = term.norm();
        max_term = max_term.max(tn);
        let ratio = tn / prev_norm.max(1e-300);
        prev_norm = tn;
        // past the peak the ratio decays like x e^C / sqrt(n); certify the
        // remainder by the geometric envelope once it is steadily below 1
        if ratio < 0.9 {
            small += 1;
            let tail = tn * ratio / (1.0 - ratio);
            if small >= 2 && tail <= 0.5 * spec.tail_tol * sum.norm().max(1e-300) {
                return Ok((sum, max_term));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::TruncationFailure {
        terms: spec.max_terms,
        tail: prev_norm,
    })
}

/// Mellin-Barnes evaluation of the same correlator: the line integral
/// (1/2pi) int Gamma(-z) f(z) (mu e^{sqrt2 c})^z dy on Re(z) = x0, plus
/// the residues of the Gamma poles left of the line, times the case
/// prefactor. The default line is the theorem one: x0 = Re(w), or the
/// q = 1/2 line plus the n = 0 residue when w is purely imaginary.
pub fn contour_correlator(
    case: &CorrelatorCase,
    mu: f64,
    c_zm: f64,
    spec: &QuadratureSpec,
) -> Result<C> {
    case.validate()?;
    spec.validate()?;
    if mu <= 0.0 {
        return Err(Error::DomainError(format!("mu = {mu} must be positive")));
    }
    if c_zm.abs() > 5.0 {
        return Err(Error::HypothesisViolation(format!(
            "|c| = {} > 5: the oscillation defeats the line quadrature; use the series",
            c_zm.abs()
        )));
    }
    let w = case.screening();
    check_strip(case, w)?;
    let x0 = match spec.line_re {
        Some(x) => {
            if x <= w.re || (x - x.round()).abs() < 1e-9 {
                return Err(Error::HypothesisViolation(format!(
                    "line Re(z) = {x} must lie right of Re(w) = {} and off the integer poles",
                    w.re
                )));
            }
            x
        }
        None => {
            if w.re == 0.0 {
                0.5
            } else {
                w.re
            }
        }
    };
    let ln_x = ln_expansion_parameter(mu, r(c_zm));
    let line = line_integral(case, w, x0, ln_x, spec)?;
    // residues of Gamma(-z) at the integers n in [0, x0)
    let mut residues = r(0.0);
    let mut ln_fact = 0.0;
    let mut n = 0;
    while (n as f64) < x0 {
        if n > 0 {
            ln_fact += (n as f64).ln();
        }
        let fe = f_eval(case, r(n as f64))?;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        residues += fe * (ln_x * n as f64 - r(ln_fact)).exp() * sign;
        n += 1;
    }
    Ok(case.prefactor() * (line + residues))
}

fn check_strip(case: &CorrelatorCase, w: C) -> Result<()> {
    match case {
        CorrelatorCase::ZeroPoint => Ok(()),
        CorrelatorCase::OnePoint { alpha } => {
            if alpha.re > 1e-12 || alpha.re <= -1.0 / SQRT2 {
                Err(Error::HypothesisViolation(format!(
                    "one-point needs Re(alpha) in (-1/sqrt2, 0], got {alpha}"
                )))
            } else {
                Ok(())
            }
        }
        CorrelatorCase::TwoPointAntipodal { .. } => {
            let ok_strip = w.re > -0.5 && w.re < 0.0;
            let ok_imag = w.re == 0.0 && w.im != 0.0;
            if ok_strip || ok_imag {
                Ok(())
            } else {
                Err(Error::HypothesisViolation(format!(
                    "two-point needs Re(w) in (-1/2, 0), or Re(w) = 0 with Im(w) != 0; w = {w}"
                )))
            }
        }
        CorrelatorCase::ThreePointResonant { .. } => {
            if w.re > -0.5 && w.re < 0.0 {
                Ok(())
            } else {
                Err(Error::HypothesisViolation(format!(
                    "three-point needs Re(w) in (-1/2, 0); w = {w}"
                )))
            }
        }
    }
}

/// (1/2pi) int Gamma(-z) f(z) e^{z ln_x} dy on the line Re(z) = x0,
/// parameterized by t = y - Im(w) so the offset z - w is exact. On the
/// theorem line x0 = Re(w) the integrand carries the integrable
/// |t|^{Re w} singularity at t = 0 and the panels grade into it.
fn line_integral(
    case: &CorrelatorCase,
    w: C,
    x0: f64,
    ln_x: C,
    spec: &QuadratureSpec,
) -> Result<C> {
    let y_end = choose_truncation_y(case, x0, w, spec);
    let osc = ln_x.norm() + 1.0;
    let h = (std::f64::consts::PI / osc).min(0.5);
    let singular = x0 == w.re;
    let t_lo = -y_end - w.im;
    let t_hi = y_end - w.im;
    let mut edges: Vec<f64> = Vec::new();
    if singular {
        let g = 1.0f64.min((t_hi.min(-t_lo)).max(0.25));
        edges.extend(uniform_edges(t_lo, -g, h));
        // panels shrinking geometrically into the singular point
        let mut left: Vec<f64> = graded_edges(0.0, g, 360).iter().rev().map(|t| -t).collect();
        edges.append(&mut left);
        let mut right: Vec<f64> = graded_edges(0.0, g, 360).to_vec();
        edges.append(&mut right);
        edges.extend(uniform_edges(g, t_hi, h));
    } else {
        edges.extend(uniform_edges(t_lo, t_hi, h));
    }
    edges.dedup_by(|a, b| a == b);
    if edges.len() * 24 > spec.max_evals {
        return Err(Error::QuadratureFailure(format!(
            "{} panels exceed the evaluation budget",
            edges.len()
        )));
    }
    let f = |t: f64| -> Result<C> {
        let zmw = C::new(x0 - w.re, t);
        let z = w + zmw;
        let gamma_ln = ln_gamma_any(-z)?;
        let fe = f_eval_offset(case, zmw)?;
        Ok((gamma_ln + ln_x * z).exp() * fe)
    };
    let v = integrate_certified(&f, &edges, 12, spec.rel_tol)?;
    Ok(v / (2.0 * std::f64::consts::PI))
}

/// Certified-shape envelope for |Gamma(-z) f(z)| on the line Re(z) = x0:
/// C1 (2 + |y|)^{C2} exp(-|y| arg(1 + i|y|) - 0.5 |y - Im w| arg(1 + i|y - Im w|)).
/// The constants are frozen per case kind with a wide margin; the tests
/// re-fit them against the actual integrand.
pub fn integrand_bound(case: &CorrelatorCase, x0: f64, y: f64) -> f64 {
    let (c1, c2) = bound_constants(case);
    let w = case.screening();
    let yr = (y - w.im).abs();
    let ya = y.abs();
    let decay = -ya * arg1i(ya) - 0.5 * yr * arg1i(yr);
    c1 * (2.0 + ya).powf(c2) * decay.exp() * (1.0 + x0.abs())
}

fn arg1i(y: f64) -> f64 {
    y.atan2(1.0)
}

fn bound_constants(case: &CorrelatorCase) -> (f64, f64) {
    match case {
        CorrelatorCase::ZeroPoint => (40.0, 4.0),
        CorrelatorCase::OnePoint { .. } => (60.0, 4.0),
        CorrelatorCase::TwoPointAntipodal { .. } => (500.0, 5.0),
        CorrelatorCase::ThreePointResonant { .. } => (500.0, 5.0),
    }
}

/// Truncation point: the envelope tail integral must sit below
/// rel_tol / 10 of the peak envelope.
fn choose_truncation_y(case: &CorrelatorCase, x0: f64, w: C, spec: &QuadratureSpec) -> f64 {
    let peak = integrand_bound(case, x0, w.im).max(integrand_bound(case, x0, 0.0));
    let mut y = 8.0f64.max(2.0 * w.im.abs());
    while y < spec.truncation_y {
        // lambda ~ 3/2 arg(1+i y) is the local decay rate
        let lam = 1.5 * arg1i(y);
        let tail = integrand_bound(case, x0, y) / lam;
        if tail < 0.1 * spec.rel_tol * peak.max(1e-300) {
            return y;
        }
        y += 2.0;
    }
    spec.truncation_y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coulomb::coeff;
    use crate::cplx::c;

    fn zero() -> CorrelatorCase {
        CorrelatorCase::ZeroPoint
    }

    #[test]
    fn f_matches_first_coefficients() {
        let case = zero();
        assert!((f_eval(&case, r(1.0)).unwrap().re - FOUR_PI).abs() < 1e-11 * FOUR_PI);
        let v = f_eval(&case, r(-1.0)).unwrap();
        assert!((v.re - std::f64::consts::E / FOUR_PI).abs() < 1e-12);
    }

    #[test]
    fn f_interpolates_all_cases() {
        let cases = [
            zero(),
            CorrelatorCase::OnePoint { alpha: c(-0.3, 0.0) },
            CorrelatorCase::OnePoint { alpha: c(-0.1, 0.2) },
            CorrelatorCase::TwoPointAntipodal {
                alpha1: c(-0.3, 0.2) / SQRT2,
                alpha2: c(-0.4, -0.2) / SQRT2,
            },
            CorrelatorCase::ThreePointResonant {
                alpha1: c(-0.8, 0.1) / SQRT2,
                alpha3: c(-0.8, 0.1) / SQRT2,
            },
        ];
        for case in &cases {
            for n in 0..=8u32 {
                let a = coeff(case, n).unwrap();
                let f = f_eval(case, r(n as f64)).unwrap();
                assert!(
                    (a - f).norm() <= 1e-9 * a.norm().max(1e-12),
                    "{} n = {n}: coeff {a} vs f {f}",
                    case.label()
                );
            }
        }
    }

    #[test]
    fn two_and_three_point_interpolants_are_one_at_zero() {
        let two = CorrelatorCase::TwoPointAntipodal {
            alpha1: c(-0.3, 0.2) / SQRT2,
            alpha2: c(-0.4, -0.2) / SQRT2,
        };
        let three = CorrelatorCase::ThreePointResonant {
            alpha1: c(-0.8, 0.1) / SQRT2,
            alpha3: c(-0.8, 0.1) / SQRT2,
        };
        assert!((f_eval(&two, r(0.0)).unwrap() - r(1.0)).norm() < 1e-11);
        assert!((f_eval(&three, r(0.0)).unwrap() - r(1.0)).norm() < 1e-11);
    }

    #[test]
    fn series_small_mu_leading_terms() {
        let spec = SeriesSpec::default();
        let mu = 1e-6;
        let v = series_correlator(&zero(), mu, r(0.0), &spec).unwrap();
        let expected = 1.0 - FOUR_PI * mu;
        assert!((v.re - expected).abs() < 1e-9, "{} vs {expected}", v.re);
    }

    #[test]
    fn series_periodic_in_imaginary_direction() {
        let spec = SeriesSpec::default();
        let case = zero();
        let c0 = c(0.3, 0.4);
        let a = series_correlator(&case, 0.1, c0, &spec).unwrap();
        let b = series_correlator(&case, 0.1, c0 + c(0.0, SQRT2 * std::f64::consts::PI), &spec)
            .unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm());
    }

    #[test]
    fn series_reduction_two_to_one() {
        let spec = SeriesSpec::default();
        let two = CorrelatorCase::TwoPointAntipodal {
            alpha1: r(0.0),
            alpha2: r(0.0),
        };
        let one = CorrelatorCase::OnePoint { alpha: r(0.0) };
        let a = series_correlator(&two, 0.2, r(0.0), &spec).unwrap();
        let b = series_correlator(&one, 0.2, r(0.0), &spec).unwrap();
        assert!((a - b).norm() < 1e-10 * b.norm());
    }

    #[test]
    fn series_contour_zero_point_moderate_x() {
        let qspec = QuadratureSpec::default();
        let sspec = SeriesSpec::default();
        let series = series_correlator(&zero(), 0.4, r(0.0), &sspec).unwrap();
        let contour = contour_correlator(&zero(), 0.4, 0.0, &qspec).unwrap();
        assert!(
            (series - contour).norm() < 1e-8 * series.norm(),
            "series {series} vs contour {contour}"
        );
    }

    #[test]
    fn contour_shift_independence_zero_point() {
        let mut spec = QuadratureSpec::default();
        let base = contour_correlator(&zero(), 1.0, 0.0, &spec).unwrap();
        spec.line_re = Some(-0.5);
        let shifted = contour_correlator(&zero(), 1.0, 0.0, &spec).unwrap();
        spec.line_re = Some(-0.9);
        let shifted2 = contour_correlator(&zero(), 1.0, 0.0, &spec).unwrap();
        assert!((base - shifted).norm() < 1e-8 * base.norm(), "{base} vs {shifted}");
        assert!((base - shifted2).norm() < 1e-8 * base.norm(), "{base} vs {shifted2}");
    }

    #[test]
    fn contour_refuses_fast_oscillation() {
        let spec = QuadratureSpec::default();
        assert!(matches!(
            contour_correlator(&zero(), 1.0, 6.0, &spec),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn series_big_route_matches_f64_when_both_apply() {
        // x small enough for a clean f64 sum, big-float route forced;
        // tight tail so truncation does not mask the comparison
        let case = zero();
        let spec = SeriesSpec {
            max_terms: 400,
            tail_tol: 1e-13,
        };
        let ln_x = ln_expansion_parameter(0.1, r(0.0));
        let (f64_sum, _) = series_f64(&case, ln_x, &spec).unwrap();
        let big = bigseries::series_real(&case, ln_x, &spec).unwrap().unwrap();
        assert!(
            (f64_sum - big).norm() < 1e-11 * big.norm(),
            "{f64_sum} vs {big}"
        );
    }

    #[test]
    fn bound_dominates_integrand_and_decays() {
        let cases = [
            zero(),
            CorrelatorCase::OnePoint { alpha: c(-0.1, 0.2) },
            CorrelatorCase::TwoPointAntipodal {
                alpha1: c(-0.3, 0.2) / SQRT2,
                alpha2: c(-0.4, -0.2) / SQRT2,
            },
            CorrelatorCase::ThreePointResonant {
                alpha1: c(-0.8, 0.1) / SQRT2,
                alpha3: c(-0.8, 0.1) / SQRT2,
            },
        ];
        for case in &cases {
            let w = case.screening();
            let x0 = if w.re == 0.0 { -0.25 } else { w.re };
            let mut prev = f64::INFINITY;
            for k in 0..200 {
                let y = -20.0 + 0.2005 * k as f64;
                let z = C::new(x0, y);
                let val = (ln_gamma_any(-z).unwrap() + f_eval(case, z).unwrap().ln())
                    .exp()
                    .norm();
                let b = integrand_bound(case, x0, y);
                assert!(val <= b, "{}: |g({y})| = {val:.3e} > bound {b:.3e}", case.label());
                if y > 10.0 {
                    assert!(b <= prev * 1.0000001, "bound not decreasing at {y}");
                    prev = b;
                }
            }
        }
    }
}
