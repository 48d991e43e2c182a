//! Coulomb-gas expansion coefficients at b = 1/sqrt(2) and their
//! brute-force integration oracles.
//!
//! Each correlator case carries its insertion charges; the screening
//! parameter w and the per-case closed forms (Barnes G ratios, and for the
//! resonant three-point case a pair of 2F1 values) are derived here. The
//! closed forms are assembled in log space so that coefficients of large
//! index do not overflow before the final exponential.

mod oracle;

pub use oracle::{oracle_coeff, oracle_coeff_with_b, OracleMethod, SphereOracleSpec};

use crate::cplx::{nonpositive_integer, r, C};
use crate::error::{Error, Result};
use crate::specfun::{gamma, hyp2f1, log_barnes_g, log_gamma, recip_gamma};

pub const SQRT2: f64 = std::f64::consts::SQRT_2;
pub const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

/// Correlator selection at the solvable coupling. Insertions sit at the
/// fixed configurations: one-point at e3, two-point at (-e3, e3),
/// three-point at (-e3, e1, e3) with the resonant middle charge
/// alpha2 = b = 1/sqrt(2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CorrelatorCase {
    ZeroPoint,
    OnePoint { alpha: C },
    TwoPointAntipodal { alpha1: C, alpha2: C },
    ThreePointResonant { alpha1: C, alpha3: C },
}

impl CorrelatorCase {
    /// Screening parameter w = -1 - sqrt(2) * sum(alpha); the resonant
    /// three-point case includes the fixed alpha2 = 1/sqrt(2) in the sum.
    pub fn screening(&self) -> C {
        match *self {
            CorrelatorCase::ZeroPoint => r(-1.0),
            CorrelatorCase::OnePoint { alpha } => r(-1.0) - alpha * SQRT2,
            CorrelatorCase::TwoPointAntipodal { alpha1, alpha2 } => {
                r(-1.0) - (alpha1 + alpha2) * SQRT2
            }
            CorrelatorCase::ThreePointResonant { alpha1, alpha3 } => {
                r(-2.0) - (alpha1 + alpha3) * SQRT2
            }
        }
    }

    /// Insertion charges together with their sphere positions.
    pub fn insertions(&self) -> Vec<(C, [f64; 3])> {
        const E1: [f64; 3] = [1.0, 0.0, 0.0];
        const E3: [f64; 3] = [0.0, 0.0, 1.0];
        const ME3: [f64; 3] = [0.0, 0.0, -1.0];
        match *self {
            CorrelatorCase::ZeroPoint => vec![],
            CorrelatorCase::OnePoint { alpha } => vec![(alpha, E3)],
            CorrelatorCase::TwoPointAntipodal { alpha1, alpha2 } => {
                vec![(alpha1, ME3), (alpha2, E3)]
            }
            CorrelatorCase::ThreePointResonant { alpha1, alpha3 } => {
                vec![(alpha1, ME3), (r(1.0 / SQRT2), E1), (alpha3, E3)]
            }
        }
    }

    /// Multiplicative prefactor of the fixed-zero-mode correlator coming
    /// from the pairwise insertion interactions.
    pub fn prefactor(&self) -> C {
        match *self {
            CorrelatorCase::ZeroPoint | CorrelatorCase::OnePoint { .. } => r(1.0),
            CorrelatorCase::TwoPointAntipodal { alpha1, alpha2 } => (alpha1 * alpha2 * 2.0).exp(),
            CorrelatorCase::ThreePointResonant { alpha1, alpha3 } => {
                let s = (alpha1 + alpha3) * SQRT2;
                ((s + alpha1 * alpha3 * 2.0) - s * std::f64::consts::LN_2).exp()
            }
        }
    }

    /// Exponent rho of the renormalizing power eps^rho in the zero-mode
    /// limit: 0, sqrt(2) alpha, -w, -w for the four cases.
    pub fn renorm_exponent(&self) -> C {
        match *self {
            CorrelatorCase::ZeroPoint => r(0.0),
            CorrelatorCase::OnePoint { alpha } => alpha * SQRT2,
            _ => -self.screening(),
        }
    }

    /// Every insertion must satisfy Re(alpha) > -1/sqrt(2).
    pub fn validate(&self) -> Result<()> {
        for (alpha, _) in self.insertions() {
            if alpha.re <= -1.0 / SQRT2 + 1e-12 {
                return Err(Error::HypothesisViolation(format!(
                    "insertion charge {alpha} has Re <= -1/sqrt(2)"
                )));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &'static str {
        match self {
            CorrelatorCase::ZeroPoint => "zero",
            CorrelatorCase::OnePoint { .. } => "one",
            CorrelatorCase::TwoPointAntipodal { .. } => "two",
            CorrelatorCase::ThreePointResonant { .. } => "three",
        }
    }
}

/// Green's function of the sphere Laplacian (mean-zero normalization):
/// -ln ||x - y|| - 1/2 + ln 2.
pub fn green_sphere(x: [f64; 3], y: [f64; 3]) -> Result<f64> {
    for p in [x, y] {
        let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::DomainError(format!("point norm {n} not 1")));
        }
    }
    let d2 = (x[0] - y[0]).powi(2) + (x[1] - y[1]).powi(2) + (x[2] - y[2]).powi(2);
    let d = d2.sqrt();
    if d < 1e-10 {
        return Err(Error::CoincidentPoints(d));
    }
    Ok(-d.ln() - 0.5 + std::f64::consts::LN_2)
}

/// Radial moment of the plane: int |z|^a (1+|z|^2)^{-b} d^2 z
/// = pi Gamma(b - a/2 - 1) Gamma(a/2 + 1) / Gamma(b).
pub fn disk_moment(a: C, b: C) -> Result<C> {
    if a.re <= -2.0 || (b * 2.0 - a).re <= 2.0 {
        return Err(Error::DivergentIntegral(format!(
            "need Re(a) > -2 and Re(2b - a) > 2, got a = {a}, b = {b}"
        )));
    }
    let v = gamma(b - a / 2.0 - r(1.0))? * gamma(a / 2.0 + r(1.0))? * recip_gamma(b)?;
    Ok(v * std::f64::consts::PI)
}

/// Both sides of the finite reciprocal-Gamma sum identity
/// sum_{j=0}^n 1/(Gamma(j+a) Gamma(n-j+b)), closed by two 2F1 values at 1/2.
pub fn gamma_sum_identity(n: u32, a: C, b: C) -> Result<(C, C)> {
    for (name, v) in [("a", a), ("b", b)] {
        if let Some(k) = nonpositive_integer(v) {
            return Err(Error::PoleAt(format!("parameter {name} = {k}")));
        }
    }
    let nf = r(n as f64);
    let mut lhs = r(0.0);
    for j in 0..=n {
        lhs += recip_gamma(r(j as f64) + a)? * recip_gamma(nf - r(j as f64) + b)?;
    }
    let half = r(0.5);
    let s = nf + a + b - r(1.0);
    let t1 = hyp2f1(r(1.0), s, a, half)? * recip_gamma(a)? * recip_gamma(nf + b)? * 0.5;
    let t2 = hyp2f1(r(1.0), s, nf + a + r(1.0), half)?
        * (b - r(1.0))
        * recip_gamma(nf + a + r(1.0))?
        * recip_gamma(b)?
        * 0.5;
    Ok((lhs, t1 - t2))
}

/// Coefficient a_n of the Coulomb-gas expansion, a_0 = 1 in every case.
pub fn coeff(case: &CorrelatorCase, n: u32) -> Result<C> {
    case.validate()?;
    if n == 0 {
        return Ok(r(1.0));
    }
    let (ln_part, factor) = ln_coeff_split(case, n)?;
    Ok(ln_part.exp() * factor)
}

/// Log-space split of a_n: `a_n = exp(ln_part) * factor` with `factor`
/// of moderate modulus (1 except for the three-point bracket).
pub(crate) fn ln_coeff_split(case: &CorrelatorCase, n: u32) -> Result<(C, C)> {
    let nf = n as f64;
    let w = case.screening();
    let quad = |ln_base: f64| r(nf * ln_base + 0.5 * nf * (nf - 3.0)) - w * nf;
    match *case {
        CorrelatorCase::ZeroPoint => {
            let np1 = r(nf + 1.0);
            let ln = r(nf * FOUR_PI.ln() + 0.5 * nf * (nf - 1.0)) + log_barnes_g(np1)? * 2.0
                - log_gamma(np1)? * (nf - 1.0);
            Ok((ln, r(1.0)))
        }
        CorrelatorCase::OnePoint { .. } => {
            let mw = -w;
            check_barnes_pole(mw, "G(-w)")?;
            let np1 = r(nf + 1.0);
            let ln = quad(FOUR_PI.ln()) + log_gamma(np1)? + log_barnes_g(np1)?
                + log_barnes_g(r(nf) - w)?
                - log_gamma(r(nf) - w)? * nf
                - log_barnes_g(mw)?;
            Ok((ln, r(1.0)))
        }
        CorrelatorCase::TwoPointAntipodal { alpha1, alpha2 } => {
            let beta1 = r(1.0) + alpha1 * SQRT2;
            let beta2 = r(1.0) + alpha2 * SQRT2;
            check_barnes_pole(beta1, "G(beta1)")?;
            check_barnes_pole(beta2, "G(beta2)")?;
            let nn = r(nf);
            let ln = quad(FOUR_PI.ln())
                + log_gamma(nn + r(1.0))?
                + log_barnes_g(nn + beta1)?
                + log_barnes_g(nn + beta2)?
                - log_gamma(nn - w)? * nn
                - log_barnes_g(beta1)?
                - log_barnes_g(beta2)?;
            Ok((ln, r(1.0)))
        }
        CorrelatorCase::ThreePointResonant { alpha1, alpha3 } => {
            let sa1 = alpha1 * SQRT2;
            let sa3 = alpha3 * SQRT2;
            check_barnes_pole(r(1.0) + sa1, "G(1 + sqrt2 alpha1)")?;
            check_barnes_pole(r(1.0) + sa3, "G(1 + sqrt2 alpha3)")?;
            let nn = r(nf);
            let ln = quad((2.0 * std::f64::consts::PI).ln())
                + log_gamma(nn + r(1.0))?
                + log_barnes_g(nn + r(2.0) + sa1)?
                + log_barnes_g(nn + r(2.0) + sa3)?
                - log_gamma(nn - w)? * nn
                - log_barnes_g(r(1.0) + sa1)?
                - log_barnes_g(r(1.0) + sa3)?
                - log_gamma(nn + r(1.0) + sa3)?;
            Ok((ln, three_point_bracket(nn, nn - w, sa1, sa3)?))
        }
    }
}

/// The hypergeometric bracket of the three-point coefficient with the
/// large reciprocal Gamma factored out:
/// F1/(2 Gamma(1+sa1)) - sa3 F2 Gamma(z+1+sa3)/(2 Gamma(z+2+sa1) Gamma(1+sa3)).
/// Takes the offset z - w explicitly (callers on the contour know it
/// exactly where a subtraction would round away).
pub(crate) fn three_point_bracket(z: C, zmw: C, sa1: C, sa3: C) -> Result<C> {
    let half = r(0.5);
    let bb = zmw - r(1.0);
    let f1 = hyp2f1(r(1.0), bb, r(1.0) + sa1, half)?;
    let f2 = hyp2f1(r(1.0), bb, z + r(2.0) + sa1, half)?;
    // Gamma(z+1+sa3)/Gamma(z+2+sa1) as exp of a log difference
    let ratio = (log_gamma(z + r(1.0) + sa3)? - log_gamma(z + r(2.0) + sa1)?).exp();
    Ok(f1 * recip_gamma(r(1.0) + sa1)? * 0.5 - sa3 * f2 * ratio * recip_gamma(r(1.0) + sa3)? * 0.5)
}

fn check_barnes_pole(z: C, what: &str) -> Result<()> {
    if let Some(k) = nonpositive_integer(z) {
        return Err(Error::PoleAt(format!("{what}: argument {k}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::c;

    const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

    #[test]
    fn screening_values() {
        assert_eq!(CorrelatorCase::ZeroPoint.screening(), r(-1.0));
        let one = CorrelatorCase::OnePoint { alpha: r(0.0) };
        assert_eq!(one.screening(), r(-1.0));
        let three = CorrelatorCase::ThreePointResonant {
            alpha1: c(-0.8, 0.1) / SQRT2,
            alpha3: c(-0.8, 0.1) / SQRT2,
        };
        let w = three.screening();
        assert!((w - c(-0.4, -0.2)).norm() < 1e-14);
    }

    #[test]
    fn green_basic_values() {
        let e3 = [0.0, 0.0, 1.0];
        let me3 = [0.0, 0.0, -1.0];
        let e1 = [1.0, 0.0, 0.0];
        // antipodal: distance 2, G = -ln 2 - 1/2 + ln 2 = -1/2
        assert!((green_sphere(e3, me3).unwrap() + 0.5).abs() < 1e-14);
        // orthogonal: distance sqrt(2), G = ln 2 / 2 - 1/2
        let g = green_sphere(e3, e1).unwrap();
        assert!((g - (0.5 * std::f64::consts::LN_2 - 0.5)).abs() < 1e-14);
        assert!(green_sphere(e3, e3).is_err());
        assert!(green_sphere([0.0, 0.0, 0.9], e1).is_err());
    }

    #[test]
    fn green_mean_zero() {
        // (1/4pi) int G(e3, y) da(y) = 1/2 int_0^pi g(theta) sin(theta) dtheta
        let f = |t: f64| {
            let d = 2.0 * (t / 2.0).sin();
            Ok(r((-d.ln() - 0.5 + std::f64::consts::LN_2) * t.sin() * 0.5))
        };
        let edges = crate::quad::graded_edges(0.0, std::f64::consts::PI, 60);
        let v = crate::quad::integrate_panels(&f, &edges, 20).unwrap();
        assert!(v.re.abs() < 1e-12, "mean = {}", v.re);
    }

    #[test]
    fn zero_point_coefficients() {
        let case = CorrelatorCase::ZeroPoint;
        assert_eq!(coeff(&case, 0).unwrap(), r(1.0));
        assert!((coeff(&case, 1).unwrap().re - FOUR_PI).abs() < 1e-12 * FOUR_PI);
        // a_2 = 8 pi^2 e, forced by G(3) = 1, Gamma(3) = 2
        let expected = 8.0 * std::f64::consts::PI.powi(2) * std::f64::consts::E;
        assert!((coeff(&case, 2).unwrap().re - expected).abs() < 1e-11 * expected);
    }

    #[test]
    fn one_point_reduces_to_zero_point() {
        let one = CorrelatorCase::OnePoint { alpha: r(0.0) };
        let zero = CorrelatorCase::ZeroPoint;
        for n in 0..=6 {
            let a = coeff(&one, n).unwrap();
            let b = coeff(&zero, n).unwrap();
            assert!((a - b).norm() < 1e-11 * b.norm().max(1.0), "n = {n}: {a} vs {b}");
        }
    }

    #[test]
    fn two_point_reduces_to_one_point() {
        let a2 = c(-0.21, 0.13);
        let two = CorrelatorCase::TwoPointAntipodal {
            alpha1: r(0.0),
            alpha2: a2,
        };
        let one = CorrelatorCase::OnePoint { alpha: a2 };
        for n in 0..=6 {
            let a = coeff(&two, n).unwrap();
            let b = coeff(&one, n).unwrap();
            assert!(
                (a - b).norm() < 1e-10 * b.norm().max(1.0),
                "n = {n}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn growth_bound_with_fitted_constant() {
        // fit C on n <= 6, check n = 7..12 against n^{n/2} e^{Cn}
        let case = CorrelatorCase::ZeroPoint;
        let cn = |n: u32| {
            let a = coeff(&case, n).unwrap().norm();
            (a.ln() - 0.5 * n as f64 * (n as f64).ln()) / n as f64
        };
        let fitted = (1..=6).map(cn).fold(f64::MIN, f64::max);
        for n in 7..=12 {
            let bound = (0.5 * n as f64 * (n as f64).ln() + fitted * n as f64).exp();
            let a = coeff(&case, n).unwrap().norm();
            assert!(a <= bound * (1.0 + 1e-9), "n = {n}: {a} > {bound}");
        }
    }

    #[test]
    fn disk_moment_values() {
        assert!((disk_moment(r(0.0), r(2.0)).unwrap().re - std::f64::consts::PI).abs() < 1e-13);
        // (2, 3): pi Gamma(1) Gamma(2) / Gamma(3) = pi / 2
        assert!(
            (disk_moment(r(2.0), r(3.0)).unwrap().re - std::f64::consts::PI / 2.0).abs() < 1e-13
        );
        assert!(disk_moment(r(0.0), r(1.0)).is_err());
    }

    #[test]
    fn disk_moment_radial_quadrature_oracle() {
        // 2 pi int r^{a+1} (1+r^2)^{-b} dr in log-radial coordinates:
        // int e^{(a+2) t} (1 + e^{2t})^{-b} dt over the real line
        let a = c(0.6, 0.3);
        let b = c(2.4, -0.2);
        let f = |t: f64| {
            let e2t = (2.0 * t).exp();
            Ok(((a + r(2.0)) * t).exp() * crate::cplx::ppow(r(1.0 + e2t), -b)?)
        };
        let t_min = -45.0 / (a.re + 2.0);
        let t_max = 45.0 / (2.0 * b.re - a.re - 2.0);
        let edges = crate::quad::uniform_edges(t_min, t_max, 0.5);
        let quad = crate::quad::integrate_panels(&f, &edges, 12).unwrap() * TWO_PI;
        let closed = disk_moment(a, b).unwrap();
        assert!((quad - closed).norm() < 1e-10 * closed.norm(), "{quad} vs {closed}");
    }

    #[test]
    fn gamma_sum_small_cases() {
        let (lhs, rhs) = gamma_sum_identity(2, r(1.0), r(1.0)).unwrap();
        assert!((lhs.re - 2.0).abs() < 1e-13); // 1/2 + 1 + 1/2
        assert!((lhs - rhs).norm() < 1e-12);
        let (lhs, rhs) = gamma_sum_identity(1, r(1.0), r(1.0)).unwrap();
        assert!((lhs.re - 2.0).abs() < 1e-13 && (rhs.re - 2.0).abs() < 1e-12);
        let (lhs, rhs) = gamma_sum_identity(3, c(1.3, 0.4), r(0.7)).unwrap();
        assert!((lhs - rhs).norm() < 1e-10, "{lhs} vs {rhs}");
        assert!(gamma_sum_identity(2, r(0.0), r(1.0)).is_err());
    }

    #[test]
    fn invalid_charge_rejected() {
        let bad = CorrelatorCase::ThreePointResonant {
            alpha1: r(-1.0 / SQRT2 + 1e-13),
            alpha3: r(-0.5),
        };
        assert!(coeff(&bad, 1).is_err());
        // a genuine Barnes pole, reachable only below the validity strip
        assert!(matches!(
            ln_coeff_split(
                &CorrelatorCase::TwoPointAntipodal {
                    alpha1: r(-1.0 / SQRT2),
                    alpha2: r(0.1),
                },
                1
            ),
            Err(Error::PoleAt(_))
        ));
    }
}
