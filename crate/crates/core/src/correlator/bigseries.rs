//! Big-float evaluation of the Coulomb-gas series for real parameters.
//!
//! Applicable to the zero-point case and to the one-point case with a
//! real charge, whose coefficients
//!   a_n = (4 pi)^n e^{n(n-3-2w)/2} n! G(n+1) G(n-w) / (Gamma(n-w)^n G(-w))
//! are positive reals (w = -1 reproduces the zero-point form). The n-th
//! log-term only needs one base log-Gamma value; everything else updates
//! through the recurrences
//!   ln G(n+1)  += ln Gamma(n+1),   ln Gamma(n+1)  += ln n,
//!   ln G(n-w)  += ln Gamma(n-w),   ln Gamma(n-w)  += ln(n-w).

use super::SeriesSpec;
use crate::coulomb::CorrelatorCase;
use crate::cplx::{r, C};
use crate::error::{Error, Result};
use crate::mpf::{ln_gamma, pi, Mpf};

/// Returns None when the case has no real-parameter big-float form.
pub(super) fn series_real(
    case: &CorrelatorCase,
    ln_x: C,
    spec: &SeriesSpec,
) -> Result<Option<C>> {
    if ln_x.im != 0.0 {
        return Ok(None);
    }
    let w = match *case {
        CorrelatorCase::ZeroPoint => -1.0,
        CorrelatorCase::OnePoint { alpha } if alpha.im == 0.0 => {
            -1.0 - std::f64::consts::SQRT_2 * alpha.re
        }
        _ => return Ok(None),
    };

    let w_m = neg_one_minus_sqrt2_alpha(w);
    let ln_4pi = (&Mpf::from_i64(4) * pi()).ln();
    let ln_x_m = Mpf::from_f64(ln_x.re);
    // per-term exponent pieces
    let mut ln_fact = Mpf::zero(); // ln Gamma(n+1)
    let mut ln_fact_sum = Mpf::zero(); // ln G(n+1) = sum_{k<n} ln k!
    let mut ln_gamma_nw = ln_gamma(&(&Mpf::zero() - &w_m)); // ln Gamma(n - w) at n = 0
    let mut ln_gamma_jw_sum = Mpf::zero(); // ln G(n-w) - ln G(-w)
    let mut sum = Mpf::from_i64(1); // n = 0 term
    let mut peak = 0.0f64;
    let mut peak_n = 0usize;
    for n in 1..=spec.max_terms.max(2_000) {
        let nf = Mpf::from_i64(n as i64);
        let nm1 = Mpf::from_i64(n as i64 - 1);
        // advance from n-1 to n: G(z+1) = Gamma(z) G(z) at z = (n-1) - w,
        // Gamma(z+1) = z Gamma(z) likewise
        ln_fact_sum = &ln_fact_sum + &ln_fact;
        ln_fact = &ln_fact + &nf.ln();
        ln_gamma_jw_sum = &ln_gamma_jw_sum + &ln_gamma_nw;
        ln_gamma_nw = &ln_gamma_nw + &(&nm1 - &w_m).ln();

        // ln t_n = n (ln x + ln 4pi) + n(n - 3 - 2w)/2
        //        + ln G(n+1) + [ln G(n-w) - ln G(-w)] - n ln Gamma(n-w)
        // (the quadratic exponent must stay in big floats: in doubles it
        // rounds at ulp(n^2/2), which poisons the cancellation)
        let quad = &(&(&nf * &(&nf - &Mpf::from_i64(3))) / &Mpf::from_i64(2)) - &(&nf * &w_m);
        let ln_t = &(&(&nf * &(&ln_x_m + &ln_4pi)) + &quad)
            + &(&(&ln_fact_sum + &ln_gamma_jw_sum) - &(&nf * &ln_gamma_nw));
        let ln_t_f = ln_t.to_f64();
        if ln_t_f > peak {
            peak = ln_t_f;
            peak_n = n;
        }
        if ln_t_f > 6_000.0 {
            return Err(Error::TruncationFailure {
                terms: n,
                tail: f64::INFINITY,
            });
        }
        let term = ln_t.exp();
        sum = if n % 2 == 0 { &sum + &term } else { &sum - &term };
        // superexponential decay past the peak; stop once terms sit far
        // below every digit the 320-bit mantissa can carry
        if n > peak_n + 4 && ln_t_f < peak - 250.0 && ln_t_f < sum.log2_abs() * 0.693 - 80.0 {
            let v = sum.to_f64();
            if !v.is_finite() {
                return Err(Error::NonFinite("big-float series".into()));
            }
            // certified leftover precision
            let digits_left = 96.0 - (peak - sum.log2_abs() * 0.693) / std::f64::consts::LN_10;
            if digits_left < 14.0 {
                return Err(Error::CancellationLoss {
                    lost: 96.0 - digits_left,
                });
            }
            return Ok(Some(r(v)));
        }
    }
    Err(Error::TruncationFailure {
        terms: spec.max_terms.max(2_000),
        tail: peak,
    })
}

fn neg_one_minus_sqrt2_alpha(w: f64) -> Mpf {
    // w arrives as a double; treat it as exact (it is the product the
    // caller formed, and both routes use the same value)
    Mpf::from_f64(w)
}
