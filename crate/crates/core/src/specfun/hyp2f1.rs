//! Gauss hypergeometric function inside the unit disk.
//!
//! The direct power series is used whenever it is well conditioned. When a
//! parameter carries a large imaginary part that the denominator parameter
//! does not share, intermediate terms grow before the 1/n! decay sets in
//! and the alternating sum cancels; in that regime the evaluation is
//! rerouted through the connection formula at 1 - z (or Pfaff's map),
//! which rebalances the parameters.

use super::{gamma, recip_gamma};
use crate::cplx::{nonpositive_integer, ppow, r, C};
use crate::error::{Error, Result};

const TOL: f64 = 1e-16;
/// Largest tolerated ratio max|term| / |sum| before switching routes.
const COND_LIMIT: f64 = 1e4;

pub fn hyp2f1(a: C, b: C, cc: C, z: C) -> Result<C> {
    if z.norm() >= 1.0 {
        return Err(Error::DomainRadius(z.norm()));
    }
    if let Some(n) = nonpositive_integer(cc) {
        return Err(Error::PoleAt(format!("2F1 denominator parameter c = {n}")));
    }
    // Terminating cases are exact regardless of conditioning.
    if nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some() {
        return Ok(series(a, b, cc, z)?.0);
    }
    let (direct, cond) = series(a, b, cc, z)?;
    if cond <= COND_LIMIT {
        return Ok(direct);
    }
    if let Some(v) = linear_1mz(a, b, cc, z)? {
        return Ok(v);
    }
    let zp = z / (z - r(1.0));
    if zp.norm() < z.norm() {
        let (pf, cond2) = series(a, cc - b, cc, zp)?;
        if cond2 < cond {
            return Ok(ppow(r(1.0) - z, -a)? * pf);
        }
    }
    if cond > 1e12 {
        return Err(Error::CancellationLoss {
            lost: cond.log10(),
        });
    }
    Ok(direct)
}

/// Direct series with its conditioning ratio max|term| / |sum|.
fn series(a: C, b: C, cc: C, z: C) -> Result<(C, f64)> {
    let mut term = r(1.0);
    let mut sum = term;
    let mut max_term = 1.0f64;
    let mut small_streak = 0;
    for n in 0..20_000u32 {
        let nf = n as f64;
        term = term * (a + r(nf)) * (b + r(nf)) / (cc + r(nf)) * z / (nf + 1.0);
        sum += term;
        max_term = max_term.max(term.norm());
        if term.norm() <= TOL * sum.norm().max(1e-300) {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok((sum, max_term / sum.norm().max(1e-300)));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::TruncationFailure {
        terms: 20_000,
        tail: term.norm(),
    })
}

/// Connection formula at 1 - z; applicable when none of the Gamma factors
/// degenerate and c - a - b is not an integer. Both transformed series
/// carry the large imaginary parts in numerator and denominator alike.
fn linear_1mz(a: C, b: C, cc: C, z: C) -> Result<Option<C>> {
    let cab = cc - a - b;
    let omz = r(1.0) - z;
    if omz.norm() >= 1.0 {
        return Ok(None);
    }
    let near_int = |w: C| (w.re - w.re.round()).abs() < 1e-8 && w.im.abs() < 1e-8;
    if near_int(cab) {
        return Ok(None);
    }
    for w in [a, b, cc - a, cc - b] {
        if nonpositive_integer(w).is_some() {
            return Ok(None);
        }
    }
    let (s1, c1) = series(a, b, a + b + r(1.0) - cc, omz)?;
    let (s2, c2) = series(cc - a, cc - b, r(1.0) + cab, omz)?;
    if c1 > COND_LIMIT || c2 > COND_LIMIT {
        return Ok(None);
    }
    let g_c = gamma(cc)?;
    let t1 = g_c * gamma(cab)? * recip_gamma(cc - a)? * recip_gamma(cc - b)? * s1;
    let t2 = g_c * gamma(-cab)? * recip_gamma(a)? * recip_gamma(b)? * ppow(omz, cab)? * s2;
    Ok(Some(t1 + t2))
}
