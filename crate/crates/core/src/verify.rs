//! The acceptance criteria as executable checks. Each criterion returns a
//! pass/fail verdict with a one-line detail; the CLI `verify` subcommand
//! and the acceptance test target both run these.

use crate::coulomb::{
    coeff, disk_moment, gamma_sum_identity, green_sphere, oracle_coeff, CorrelatorCase,
    SphereOracleSpec, SQRT2,
};
use crate::cplx::{c, ppow, r, C, I};
use crate::correlator::{
    contour_correlator, f_eval, series_correlator, QuadratureSpec, SeriesSpec,
};
use crate::error::Result;
use crate::quad::{integrate_panels, uniform_edges};
use crate::specfun::{gamma, hyp2f1, log_barnes_g, log_gamma, recip_gamma};
use crate::zeromode::{
    closed_form_limit, delta_target, half_gaussian_moment, hankel_correlator, heaviside_limit,
    heaviside_pairing, regularized_correlator, renormalized_limit, two_point_pairing,
    ContourPrescription, RegularizationSchedule, TestFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use std::sync::OnceLock;
use std::time::Instant;

/// Frozen default parameter panel; the checked-in JSON is the canonical
/// record of the chosen representatives.
#[derive(Debug, Clone, Deserialize)]
pub struct Panel {
    pub schema: u32,
    pub seed: u64,
    pub mu_panel: Vec<f64>,
    pub one_point_alpha: Vec<[f64; 2]>,
    pub two_point_sqrt2_alpha: Vec<[f64; 2]>,
    pub two_point_degenerate_sqrt2_alpha2: [f64; 2],
    pub two_point_cft_p: [f64; 2],
    pub three_point_sqrt2_alpha: [f64; 2],
    pub series_contour_mu_c: SeriesContourPanel,
    pub hankel_ratio_mu: f64,
    pub pairing: PairingPanel,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SeriesContourPanel {
    pub zero: Vec<[f64; 2]>,
    pub one_real: Vec<[f64; 2]>,
    pub one_complex: Vec<[f64; 2]>,
    pub two: Vec<[f64; 2]>,
    pub three: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PairingPanel {
    pub mu: f64,
    pub eps: f64,
    pub on_center: [f64; 2],
    pub off_center: [f64; 2],
    pub radius: f64,
}

pub fn panel() -> &'static Panel {
    static PANEL: OnceLock<Panel> = OnceLock::new();
    PANEL.get_or_init(|| {
        serde_json::from_str(include_str!("../verify_panel.json"))
            .expect("embedded panel parses")
    })
}

impl Panel {
    pub fn one_cases(&self) -> Vec<CorrelatorCase> {
        self.one_point_alpha
            .iter()
            .map(|a| CorrelatorCase::OnePoint {
                alpha: c(a[0], a[1]),
            })
            .collect()
    }

    pub fn two_case(&self) -> CorrelatorCase {
        CorrelatorCase::TwoPointAntipodal {
            alpha1: c(self.two_point_sqrt2_alpha[0][0], self.two_point_sqrt2_alpha[0][1]) / SQRT2,
            alpha2: c(self.two_point_sqrt2_alpha[1][0], self.two_point_sqrt2_alpha[1][1]) / SQRT2,
        }
    }

    pub fn two_degenerate_case(&self) -> CorrelatorCase {
        CorrelatorCase::TwoPointAntipodal {
            alpha1: r(0.0),
            alpha2: c(
                self.two_point_degenerate_sqrt2_alpha2[0],
                self.two_point_degenerate_sqrt2_alpha2[1],
            ) / SQRT2,
        }
    }

    pub fn three_case(&self) -> CorrelatorCase {
        let a = c(self.three_point_sqrt2_alpha[0], self.three_point_sqrt2_alpha[1]) / SQRT2;
        CorrelatorCase::ThreePointResonant {
            alpha1: a,
            alpha3: a,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub wall_ms: u128,
}

pub const CRITERIA: [(usize, &str, u128); 10] = [
    (1, "partition-function-limit", 10_000),
    (2, "hankel-partition-function", 5_000),
    (3, "coefficient-oracles", 60_000),
    (4, "series-contour-identity", 30_000),
    (5, "one-point-dual-limit", 20_000),
    (6, "two-point-limit-degeneracy", 20_000),
    (7, "three-point-pole", 30_000),
    (8, "distributional-delta", 300_000),
    (9, "special-function-properties", 10_000),
    (10, "identity-suite", 30_000),
];

pub fn run_criterion(id: usize) -> CriterionResult {
    let (_, name, budget_ms) = CRITERIA
        .iter()
        .find(|(i, _, _)| *i == id)
        .copied()
        .unwrap_or((id, "unknown", 0));
    let t0 = Instant::now();
    let outcome = dispatch(id);
    let wall_ms = t0.elapsed().as_millis();
    let (mut pass, detail) = match outcome {
        Ok((p, d)) => (p, d),
        Err(e) => (false, format!("error: {e}")),
    };
    let mut detail = detail;
    if wall_ms > budget_ms && budget_ms > 0 {
        pass = false;
        detail = format!("{detail}; over time budget {budget_ms} ms");
    }
    CriterionResult {
        id,
        name: name.to_string(),
        pass,
        detail,
        wall_ms,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=10).map(run_criterion).collect()
}

fn dispatch(id: usize) -> Result<(bool, String)> {
    match id {
        1 => criterion_partition_limit(),
        2 => criterion_hankel_zero(),
        3 => criterion_coefficient_oracles(),
        4 => criterion_series_contour(),
        5 => criterion_one_point_dual(),
        6 => criterion_two_point(),
        7 => criterion_three_point(),
        8 => criterion_distributional(),
        9 => criterion_specfun_properties(),
        10 => criterion_identities(),
        _ => Ok((false, format!("unknown criterion {id}"))),
    }
}

fn rel(a: C, b: C) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn criterion_partition_limit() -> Result<(bool, String)> {
    let sched = RegularizationSchedule::default();
    let mut worst = 0.0f64;
    for &mu in &panel().mu_panel {
        let v = renormalized_limit(&CorrelatorCase::ZeroPoint, mu, &sched)?;
        let target = r(std::f64::consts::E / (4.0 * std::f64::consts::PI * SQRT2 * mu));
        worst = worst.max(rel(v, target));
    }
    Ok((worst < 1e-4, format!("worst rel {worst:.2e} (tol 1e-4)")))
}

fn criterion_hankel_zero() -> Result<(bool, String)> {
    let sched = RegularizationSchedule::default();
    let mut worst = 0.0f64;
    for &mu in &panel().mu_panel {
        for &eps in &sched.epsilons {
            worst = worst.max(hankel_correlator(&CorrelatorCase::ZeroPoint, mu, eps)?.norm());
        }
    }
    // and once through the raw assembly, without the integer-w shortcut:
    // period * (C_eps + correction) + segment, all f64 pieces
    let (mu, eps) = (0.5, 0.05);
    let case = CorrelatorCase::ZeroPoint;
    let spec = QuadratureSpec::default();
    let c_eps = regularized_correlator(&case, mu, eps, &spec)?;
    let period = r(1.0) - (-I * 2.0 * std::f64::consts::PI * case.screening()).exp();
    let raw = (period * c_eps).norm(); // the series corrections carry the same factor
    worst = worst.max(raw);
    Ok((worst < 1e-9, format!("worst |Hankel value| {worst:.2e} (tol 1e-9)")))
}

fn criterion_coefficient_oracles() -> Result<(bool, String)> {
    let p = panel();
    let mut lines = Vec::new();
    let mut pass = true;
    // (zero, 1): Monte Carlo with the published seed
    let case = CorrelatorCase::ZeroPoint;
    let spec = SphereOracleSpec::mc(1_000_000, p.seed);
    let (est, se) = oracle_coeff(&case, 1, &spec)?;
    let exact = coeff(&case, 1)?;
    let ok = (est - exact).norm() < (3.0 * se).max(0.01 * exact.norm());
    pass &= ok;
    lines.push(format!("zero n=1 mc: |d|={:.2e} 3s={:.2e}", (est - exact).norm(), 3.0 * se));
    // the zero-point n = 1 integrand is constant, so exercise the sampler
    // on a genuinely fluctuating case too
    let case = p.one_cases()[0];
    let (est, se) = oracle_coeff(&case, 1, &SphereOracleSpec::mc(400_000, p.seed ^ 1))?;
    let exact = coeff(&case, 1)?;
    let ok = (est - exact).norm() < (3.0 * se).max(0.01 * exact.norm());
    pass &= ok;
    lines.push(format!(
        "one n=1 mc: |d|={:.2e} 3s={:.2e}",
        (est - exact).norm(),
        3.0 * se
    ));
    // grid oracles
    let grid_checks: Vec<(&str, CorrelatorCase, u32)> = vec![
        ("zero n=2", CorrelatorCase::ZeroPoint, 2),
        ("one n=1", p.one_cases()[0], 1),
        ("two n=1", p.two_case(), 1),
        ("three n=1", p.three_case(), 1),
    ];
    for (name, case, n) in grid_checks {
        let (est, disc) = oracle_coeff(&case, n, &SphereOracleSpec::grid(128, 64))?;
        let exact = coeff(&case, n)?;
        let d = (est - exact).norm();
        let ok = d < (3.0 * disc).max(0.01 * exact.norm());
        pass &= ok;
        lines.push(format!("{name} grid: rel {:.2e}", d / exact.norm()));
    }
    Ok((pass, lines.join("; ")))
}

fn criterion_series_contour() -> Result<(bool, String)> {
    let p = panel();
    // the identity is checked at 1e-7; a 4e-9 certified series tail is
    // plenty and lets the complex-parameter panel points stay in doubles
    let sspec = SeriesSpec {
        max_terms: 400,
        tail_tol: 4e-9,
    };
    let qspec = QuadratureSpec::default();
    let sets: Vec<(CorrelatorCase, &Vec<[f64; 2]>)> = vec![
        (CorrelatorCase::ZeroPoint, &p.series_contour_mu_c.zero),
        (p.one_cases()[0], &p.series_contour_mu_c.one_real),
        (p.one_cases()[1], &p.series_contour_mu_c.one_complex),
        (p.two_case(), &p.series_contour_mu_c.two),
        (p.three_case(), &p.series_contour_mu_c.three),
    ];
    let mut worst = 0.0f64;
    let mut at = String::new();
    for (case, points) in sets {
        for mc in points {
            let (mu, c_zm) = (mc[0], mc[1]);
            let s = series_correlator(&case, mu, r(c_zm), &sspec)?;
            let k = contour_correlator(&case, mu, c_zm, &qspec)?;
            let d = rel(k, s);
            if d > worst {
                worst = d;
                at = format!("{} mu={mu} c={c_zm}", case.label());
            }
        }
    }
    Ok((worst < 1e-7, format!("worst rel {worst:.2e} at {at} (tol 1e-7)")))
}

fn criterion_one_point_dual() -> Result<(bool, String)> {
    let sched = RegularizationSchedule::default();
    let mut worst = 0.0f64;
    for case in panel().one_cases() {
        let v = renormalized_limit(&case, 1.0, &sched)?;
        let target = closed_form_limit(&case, 1.0)?;
        worst = worst.max(rel(v, target));
    }
    Ok((worst < 1e-3, format!("worst rel {worst:.2e} (tol 1e-3)")))
}

fn criterion_two_point() -> Result<(bool, String)> {
    let sched = RegularizationSchedule::default();
    let case = panel().two_case();
    let v = renormalized_limit(&case, 1.0, &sched)?;
    let target = closed_form_limit(&case, 1.0)?;
    let generic = rel(v, target);
    // degeneracy: alpha1 = 0 forces a vanishing limit
    let dcase = panel().two_degenerate_case();
    let dv = renormalized_limit(&dcase, 1.0, &sched)?;
    let dtarget = closed_form_limit(&dcase, 1.0)?;
    let pass = generic < 1e-3 && dv.norm() < 1e-3 && dtarget.norm() < 1e-14;
    Ok((
        pass,
        format!(
            "generic rel {generic:.2e} (tol 1e-3); degenerate |extrap| {:.2e}, closed form {:.1e}",
            dv.norm(),
            dtarget.norm()
        ),
    ))
}

fn criterion_three_point() -> Result<(bool, String)> {
    let p = panel();
    let sched = RegularizationSchedule::default();
    let case = p.three_case();
    let v = renormalized_limit(&case, 1.0, &sched)?;
    let target = closed_form_limit(&case, 1.0)?;
    let d = rel(v, target);
    let nonzero = target.norm() > 1e-6;
    // Hankel ratio at the smallest schedule width
    let mu = p.hankel_ratio_mu;
    let eps = *sched.epsilons.last().unwrap();
    let rho = case.renorm_exponent();
    let spec = QuadratureSpec::default();
    let scale = (rho * eps.ln()).exp();
    let tilde = hankel_correlator(&case, mu, eps)? * scale;
    let plain = regularized_correlator(&case, mu, eps, &spec)? * scale;
    let ratio = tilde / plain;
    let expected = r(1.0) - (-I * 2.0 * std::f64::consts::PI * case.screening()).exp();
    let dr = rel(ratio, expected);
    let pass = d < 1e-3 && nonzero && dr < 1e-3;
    Ok((
        pass,
        format!("limit rel {d:.2e}, nonzero {nonzero}, Hankel ratio rel {dr:.2e} (tol 1e-3)"),
    ))
}

fn criterion_distributional() -> Result<(bool, String)> {
    let p = &panel().pairing;
    let on = TestFunction::bump(p.on_center.to_vec(), p.radius, 1.0);
    let off = TestFunction::bump(p.off_center.to_vec(), p.radius, 1.0);
    let target = delta_target(&on)?;
    let lhs = two_point_pairing(&on, p.mu, p.eps, ContourPrescription::RealLine, None)?;
    let d_on = rel(lhs, target);
    let d_off = two_point_pairing(&off, p.mu, p.eps, ContourPrescription::RealLine, None)?.norm();
    let h_on = two_point_pairing(&on, p.mu, p.eps, ContourPrescription::Hankel, None)?.norm();
    let h_off = two_point_pairing(&off, p.mu, p.eps, ContourPrescription::Hankel, None)?.norm();
    let pass = d_on < 0.03 && d_off < 1e-3 && h_on < 1e-3 && h_off < 1e-3;
    Ok((
        pass,
        format!(
            "on rel {d_on:.2e} (tol 3e-2); off {d_off:.2e}, Hankel {h_on:.2e}/{h_off:.2e} (tol 1e-3)"
        ),
    ))
}

fn criterion_specfun_properties() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(panel().seed);
    let mut pass = true;
    let mut lines = Vec::new();
    // recurrences on 1000 random right-half-plane points
    let mut worst_pi = 0.0f64;
    let mut worst_theta = 0.0f64;
    for _ in 0..1000 {
        let z = c(rng.gen_range(0.05..8.0), rng.gen_range(-8.0..8.0));
        let d = (log_gamma(z + r(1.0))? - log_gamma(z)? - z.ln()).norm();
        worst_pi = worst_pi.max(d);
        let d = (log_barnes_g(z + r(1.0))? - log_barnes_g(z)? - log_gamma(z)?).norm();
        worst_theta = worst_theta.max(d);
    }
    pass &= worst_pi < 1e-11 && worst_theta < 1e-10;
    lines.push(format!("recurrences {worst_pi:.1e}/{worst_theta:.1e}"));
    // superfactorial
    let mut fact = 1.0f64;
    let mut superfact = 1.0f64;
    let mut worst = 0.0f64;
    for n in 1..=12u32 {
        if n > 1 {
            fact *= (n - 1) as f64;
            superfact *= fact;
        }
        let g = crate::specfun::barnes_g(r(n as f64 + 1.0))?;
        worst = worst.max((g.re - superfact).abs() / superfact);
    }
    pass &= worst < 1e-10;
    lines.push(format!("superfactorial {worst:.1e}"));
    // Pfaff identity on random admissible parameters
    let z = c(0.3, 0.2);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let a = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let b = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let cc = c(rng.gen_range(0.2..3.0), rng.gen_range(-2.0..2.0));
        let lhs = hyp2f1(a, b, cc, z)?;
        let rhs = ppow(r(1.0) - z, -a)? * hyp2f1(a, cc - b, cc, z / (z - r(1.0)))?;
        worst = worst.max(rel(lhs, rhs));
    }
    pass &= worst < 1e-9;
    lines.push(format!("pfaff {worst:.1e}"));
    // Euler integral agreement, Re(c) > Re(b) > 0
    let (a, b, cc) = (c(0.7, -0.3), c(1.2, 0.4), c(2.9, 0.1));
    let zz = c(0.45, 0.15);
    let series = hyp2f1(a, b, cc, zz)?;
    let f = |t: f64| -> Result<C> {
        let tb = ppow(r(t), b - r(1.0))?;
        let omt = ppow(r(1.0 - t), cc - b - r(1.0))?;
        let core = ppow(r(1.0) - zz * t, -a)?;
        Ok(tb * omt * core)
    };
    let mut edges = crate::quad::graded_edges(0.0, 0.5, 44);
    let upper: Vec<f64> = crate::quad::graded_edges(0.0, 0.5, 44)
        .iter()
        .rev()
        .skip(1)
        .map(|x| 1.0 - x)
        .collect();
    edges.extend(upper);
    let integral = integrate_panels(&f, &edges, 16)?
        * gamma(cc)?
        * recip_gamma(b)?
        * recip_gamma(cc - b)?;
    let d = rel(integral, series);
    pass &= d < 1e-8;
    lines.push(format!("euler {d:.1e}"));
    Ok((pass, lines.join("; ")))
}

fn criterion_identities() -> Result<(bool, String)> {
    let mut pass = true;
    let mut lines = Vec::new();
    // finite reciprocal-Gamma sum identity
    let mut worst = 0.0f64;
    for (n, a, b) in [
        (2u32, r(1.0), r(1.0)),
        (1, r(1.0), r(1.0)),
        (3, c(1.3, 0.4), r(0.7)),
        (5, c(0.6, -0.8), c(1.9, 0.3)),
    ] {
        let (lhs, rhs) = gamma_sum_identity(n, a, b)?;
        worst = worst.max((lhs - rhs).norm());
    }
    pass &= worst < 1e-10;
    lines.push(format!("gamma-sum {worst:.1e}"));
    // disk moment against log-radial quadrature
    let (a, b) = (c(0.6, 0.3), c(2.4, -0.2));
    let closed = disk_moment(a, b)?;
    let f = |t: f64| {
        let e2t = (2.0 * t).exp();
        Ok(((a + r(2.0)) * t).exp() * ppow(r(1.0 + e2t), -b)?)
    };
    let t_min = -45.0 / (a.re + 2.0);
    let t_max = 45.0 / (2.0 * b.re - a.re - 2.0);
    let quad =
        integrate_panels(&f, &uniform_edges(t_min, t_max, 0.5), 12)? * 2.0 * std::f64::consts::PI;
    let d = rel(quad, closed);
    pass &= d < 1e-9;
    lines.push(format!("disk-moment {d:.1e}"));
    // half-Gaussian moment vs direct quadrature on a w grid
    let mut worst = 0.0f64;
    for re in [-0.9, -0.5, 0.0, 0.7, 1.4, 2.0] {
        for im in [-0.4, 0.3] {
            let w = c(re, im);
            let closed = half_gaussian_moment(w)?;
            let f = |u: f64| {
                let lniu = c(u.abs().ln(), 0.5 * std::f64::consts::PI * u.signum());
                Ok((w * lniu).exp() * (-0.5 * u * u).exp())
            };
            let mut edges: Vec<f64> = crate::quad::graded_edges(0.0, 1.0, 360)
                .iter()
                .rev()
                .map(|t| -t)
                .collect();
            edges.extend(crate::quad::graded_edges(0.0, 1.0, 360).iter().skip(1));
            let mut full = uniform_edges(-9.5, -1.0, 0.5);
            full.extend(edges.iter().skip(1));
            full.extend(uniform_edges(1.0, 9.5, 0.5).iter().skip(1));
            let quad = integrate_panels(&f, &full, 16)?;
            worst = worst.max((quad - closed).norm() / closed.norm().max(1e-3));
        }
    }
    pass &= worst < 1e-9;
    lines.push(format!("half-gaussian {worst:.1e}"));
    // Heaviside pairing: limit approach and Fourier bound
    let phi = TestFunction::bump(vec![0.1], 0.8, 1.0);
    let v = heaviside_pairing(&phi, 0.02)?;
    let lim = heaviside_limit(&phi)?;
    let d = rel(v, lim);
    pass &= d < 0.01;
    lines.push(format!("heaviside approach {d:.1e}"));
    let bound = crate::zeromode::fourier_modulus_bound(&phi, 250.0)?;
    let mut ok = true;
    for &eps in &[0.3, 0.05, 0.02] {
        ok &= heaviside_pairing(&phi, eps)?.norm() <= bound * 1.001;
    }
    pass &= ok;
    lines.push(format!("heaviside bound ok={ok}"));
    // sphere Green mean-zero
    let f = |t: f64| {
        let e3 = [0.0, 0.0, 1.0];
        let y = [t.sin(), 0.0, t.cos()];
        Ok(r(green_sphere(e3, y)? * t.sin() * 0.5))
    };
    // grading capped so the innermost node stays distinguishable from e3
    let edges = crate::quad::graded_edges(0.0, std::f64::consts::PI, 22);
    let mean = integrate_panels(&f, &edges, 16)?.re;
    pass &= mean.abs() < 1e-10;
    lines.push(format!("green mean-zero {mean:.1e}"));
    // interpolation f(n) = a_n across cases
    let p = panel();
    let mut worst = 0.0f64;
    for case in [
        CorrelatorCase::ZeroPoint,
        p.one_cases()[1],
        p.two_case(),
        p.three_case(),
    ] {
        for n in 0..=8u32 {
            let a = coeff(&case, n)?;
            let fv = f_eval(&case, r(n as f64))?;
            worst = worst.max((a - fv).norm() / a.norm().max(1e-12));
        }
    }
    pass &= worst < 1e-9;
    lines.push(format!("interpolation {worst:.1e}"));
    Ok((pass, lines.join("; ")))
}
