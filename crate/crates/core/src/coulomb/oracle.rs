//! Brute-force evaluation of the Coulomb-gas coefficients: uniform Monte
//! Carlo on the sphere and a deterministic stereographic-plane grid.
//! These are the independent cross-checks for the closed forms in the
//! parent module; they never call `coeff`.

use super::{green_sphere, CorrelatorCase, SQRT2};
use crate::cplx::{ppow, r, C};
use crate::error::{Error, Result};
use crate::quad::{gauss_legendre, tree_sum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone)]
pub enum OracleMethod {
    MonteCarlo {
        samples: u64,
        seed: u64,
        /// Optional accuracy demand; BudgetExceeded when not met.
        target_stderr: Option<f64>,
    },
    StereographicGrid {
        radial: usize,
        angular: usize,
    },
}

#[derive(Debug, Clone)]
pub struct SphereOracleSpec {
    pub method: OracleMethod,
}

impl SphereOracleSpec {
    pub fn mc(samples: u64, seed: u64) -> Self {
        SphereOracleSpec {
            method: OracleMethod::MonteCarlo {
                samples,
                seed,
                target_stderr: None,
            },
        }
    }

    pub fn grid(radial: usize, angular: usize) -> Self {
        SphereOracleSpec {
            method: OracleMethod::StereographicGrid { radial, angular },
        }
    }

    fn validate(&self) -> Result<()> {
        match self.method {
            OracleMethod::MonteCarlo { samples, .. } if samples < 1_000 => Err(
                Error::DomainError(format!("need at least 1e3 samples, got {samples}")),
            ),
            OracleMethod::StereographicGrid { radial, angular } if radial < 64 || angular < 64 => {
                Err(Error::DomainError(format!(
                    "grid must be at least 64x64, got {radial}x{angular}"
                )))
            }
            _ => Ok(()),
        }
    }
}

/// Brute-force estimate of a_n at b = 1/sqrt(2), with a standard error
/// (Monte Carlo) or a doubling-based discretization estimate (grid).
pub fn oracle_coeff(case: &CorrelatorCase, n: u32, spec: &SphereOracleSpec) -> Result<(C, f64)> {
    oracle_coeff_with_b(case, n, spec, 1.0 / SQRT2)
}

/// Exploratory variant with a free coupling; no closed form is claimed
/// away from b = 1/sqrt(2) and only the Monte Carlo route supports it.
pub fn oracle_coeff_with_b(
    case: &CorrelatorCase,
    n: u32,
    spec: &SphereOracleSpec,
    b: f64,
) -> Result<(C, f64)> {
    case.validate()?;
    spec.validate()?;
    if n > 4 {
        return Err(Error::BudgetExceeded(format!(
            "oracle dimension 2n = {} too large",
            2 * n
        )));
    }
    if n == 0 {
        return Ok((r(1.0), 0.0));
    }
    match spec.method {
        OracleMethod::MonteCarlo {
            samples,
            seed,
            target_stderr,
        } => {
            let (est, se) = mc_sphere(case, n, samples, seed, b)?;
            if let Some(t) = target_stderr {
                if se > t {
                    return Err(Error::BudgetExceeded(format!(
                        "stderr {se:.3e} above target {t:.3e} after {samples} samples"
                    )));
                }
            }
            Ok((est, se))
        }
        OracleMethod::StereographicGrid { radial, angular } => {
            if (b - 1.0 / SQRT2).abs() > 1e-13 {
                return Err(Error::DomainError(
                    "grid oracle is specialized to b = 1/sqrt(2)".into(),
                ));
            }
            let coarse = plane_grid(case, n, radial / 2, angular / 2)?;
            let fine = plane_grid(case, n, radial, angular)?;
            Ok((fine, (fine - coarse).norm()))
        }
    }
}

/// Uniform sphere sampling of the 2n-dimensional defining integral,
/// batched with per-batch seeds so the result is reproducible under any
/// scheduling. The estimator weight is (4 pi)^n per sample tuple.
fn mc_sphere(case: &CorrelatorCase, n: u32, samples: u64, seed: u64, b: f64) -> Result<(C, f64)> {
    let insertions = case.insertions();
    let batch_size = 8_192u64;
    let batches = samples.div_ceil(batch_size);
    let weight = (4.0 * std::f64::consts::PI).powi(n as i32);

    let partials: Vec<(C, f64, u64)> = (0..batches)
        .into_par_iter()
        .map(|batch| {
            let mut rng = ChaCha8Rng::seed_from_u64(splitmix(seed, batch));
            let count = batch_size.min(samples - batch * batch_size);
            let mut sum = r(0.0);
            let mut sum_sq = 0.0;
            let mut pts = vec![[0.0f64; 3]; n as usize];
            for _ in 0..count {
                for p in pts.iter_mut() {
                    *p = random_unit(&mut rng);
                }
                let mut expo = r(0.0);
                let mut singular = false;
                for p in &pts {
                    for (alpha, x) in &insertions {
                        match green_sphere(*x, *p) {
                            Ok(g) => expo -= *alpha * (4.0 * b * g),
                            Err(_) => singular = true,
                        }
                    }
                }
                for i in 0..pts.len() {
                    for j in (i + 1)..pts.len() {
                        match green_sphere(pts[i], pts[j]) {
                            Ok(g) => expo -= r(4.0 * b * b * g),
                            Err(_) => singular = true,
                        }
                    }
                }
                // coincident tuples have measure zero; drop the sample
                let v = if singular { r(0.0) } else { expo.exp() };
                sum += v;
                sum_sq += v.norm_sqr();
            }
            (sum, sum_sq, count)
        })
        .collect();

    let total: C = tree_sum(&partials.iter().map(|p| p.0).collect::<Vec<_>>());
    let total_sq: f64 = partials.iter().map(|p| p.1).sum();
    let count: u64 = partials.iter().map(|p| p.2).sum();
    let nf = count as f64;
    let mean = total / nf;
    let var = (total_sq / nf - mean.norm_sqr()).max(0.0);
    Ok((mean * weight, weight * (var / nf).sqrt()))
}

fn splitmix(seed: u64, stream: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn random_unit(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let g: [f64; 3] = [
            normal_sample(rng),
            normal_sample(rng),
            normal_sample(rng),
        ];
        let n = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
        if n > 1e-6 {
            return [g[0] / n, g[1] / n, g[2] / n];
        }
    }
}

fn normal_sample(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; one value per call keeps the stream layout simple
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Radial nodes in log coordinates r = e^t: the measure r dr becomes
/// e^{2t} dt, the insertion singularity at the origin and the power decay
/// at infinity both turn into smooth exponential tails, and uniform
/// Gauss panels converge at full order. Returns (r, weight) pairs with
/// the e^{2t} measure folded into the weight.
fn radial_nodes(radial: usize, rate_left: f64, rate_right: f64) -> Vec<(f64, f64)> {
    let t_min = -45.0 / rate_left.max(0.05);
    let t_max = 45.0 / rate_right.max(0.05);
    let panels = radial.max(16);
    let m = 12usize;
    let (xs, ws) = gauss_legendre(m);
    let h = (t_max - t_min) / panels as f64;
    let mut nodes = Vec::with_capacity(panels * m);
    for p in 0..panels {
        let mid = t_min + h * (p as f64 + 0.5);
        for (x, w) in xs.iter().zip(ws) {
            let t = mid + 0.5 * h * x;
            nodes.push((t.exp(), w * 0.5 * h * (2.0 * t).exp()));
        }
    }
    nodes
}

/// Deterministic quadrature of the stereographic-plane form of the
/// defining integral. Weight per plane point z:
///   zero:  (1+|z|^2)^{-(n+1)}                      x 4^n e^{n(n-1)/2}
///   one:   (1+|z|^2)^{-(n-w)}                      x 4^n e^{n(n-3-2w)/2}
///   two:   |z|^{2 s a1} (1+|z|^2)^{-(n-w)}         x 4^n e^{n(n-3-2w)/2}
///   three: |z|^{2 s a1} |z-1|^2 (1+|z|^2)^{-(n-w)} x 2^n e^{n(n-3-2w)/2}
/// all times the squared Vandermonde of the tuple. The pair term
/// |z1 - z2|^2 = r1^2 + r2^2 - 2 Re(z1 conj z2) lets the double angular
/// sum factorize through the first trigonometric moments, so the n = 2
/// cost is quadratic in radial nodes only.
fn plane_grid(case: &CorrelatorCase, n: u32, radial: usize, angular: usize) -> Result<C> {
    let w = case.screening();
    let nf = n as f64;
    let (ln_base, s_alpha1, three_point) = match *case {
        CorrelatorCase::ZeroPoint => (4.0f64.ln(), r(0.0), false),
        CorrelatorCase::OnePoint { .. } => (4.0f64.ln(), r(0.0), false),
        CorrelatorCase::TwoPointAntipodal { alpha1, .. } => (4.0f64.ln(), alpha1 * SQRT2, false),
        CorrelatorCase::ThreePointResonant { alpha1, .. } => (2.0f64.ln(), alpha1 * SQRT2, true),
    };
    let plane_power: C = match *case {
        CorrelatorCase::ZeroPoint => r(nf + 1.0),
        _ => r(nf) - w,
    };
    let prefactor: C = match *case {
        CorrelatorCase::ZeroPoint => r(nf * ln_base + 0.5 * nf * (nf - 1.0)).exp(),
        _ => (r(nf * ln_base + 0.5 * nf * (nf - 3.0)) - w * nf).exp(),
    };

    // exponential decay rates of the log-radial integrand at both ends
    let kappa = 2.0 * s_alpha1.re;
    let rate_left = kappa + 2.0;
    let rate_right = 2.0 * plane_power.re - kappa - 2.0 - if three_point { 2.0 } else { 0.0 };
    let rad = radial_nodes(radial, rate_left, rate_right);

    // radial part of the point weight (measure already in the node weight)
    let radial_weight = |rr: f64| -> Result<C> {
        let mut v = ppow(r(1.0 + rr * rr), -plane_power)?;
        if s_alpha1 != r(0.0) {
            v *= ppow(r(rr * rr), s_alpha1)?;
        }
        Ok(v)
    };

    let dtheta = 2.0 * std::f64::consts::PI / angular as f64;
    // zeroth and first trigonometric moments of the angular factor
    let moments = |rr: f64| -> (f64, C) {
        if !three_point {
            return (2.0 * std::f64::consts::PI, r(0.0));
        }
        let mut s0 = 0.0;
        let mut s1 = r(0.0);
        for k in 0..angular {
            let t = dtheta * k as f64;
            let f = 1.0 + rr * rr - 2.0 * rr * t.cos();
            s0 += f * dtheta;
            s1 += C::new(t.cos(), t.sin()) * (f * dtheta);
        }
        (s0, s1)
    };

    match n {
        1 => {
            let vals: Vec<C> = rad
                .par_iter()
                .map(|&(rr, wt)| Ok(radial_weight(rr)? * wt * moments(rr).0))
                .collect::<Result<Vec<C>>>()?;
            Ok(prefactor * tree_sum(&vals))
        }
        2 => {
            // per-node composite weight and trig moments
            let pre: Vec<(f64, C, f64, C)> = rad
                .par_iter()
                .map(|&(rr, wt)| {
                    let (m0, m1) = moments(rr);
                    Ok((rr, radial_weight(rr)? * wt, m0, m1))
                })
                .collect::<Result<Vec<_>>>()?;
            let vals: Vec<C> = pre
                .par_iter()
                .map(|&(r1, w1, m0a, m1a)| {
                    let mut acc = r(0.0);
                    for &(r2, w2, m0b, m1b) in &pre {
                        let pair = r((r1 * r1 + r2 * r2) * m0a * m0b)
                            - (m1a * m1b.conj()) * (2.0 * r1 * r2);
                        acc += w2 * pair;
                    }
                    acc * w1
                })
                .collect();
            Ok(prefactor * tree_sum(&vals))
        }
        _ => Err(Error::BudgetExceeded(format!(
            "grid oracle implemented for n <= 2, asked n = {n}"
        ))),
    }
}
