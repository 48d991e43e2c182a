//! The series/contour identity at the hard reference points (expansion
//! parameter near 1, where the alternating sum runs through the big-float
//! path), plus contour-shift independence and residue bookkeeping.

use tlcorr::coulomb::{CorrelatorCase, SQRT2};
use tlcorr::cplx::{c, r};
use tlcorr::correlator::{contour_correlator, series_correlator, QuadratureSpec, SeriesSpec};

#[test]
fn zero_point_at_unit_expansion_parameter() {
    // mu = 1, c = 0: the terms peak near e^67 before the factorial wins
    let case = CorrelatorCase::ZeroPoint;
    let s = series_correlator(&case, 1.0, r(0.0), &SeriesSpec::default()).unwrap();
    let k = contour_correlator(&case, 1.0, 0.0, &QuadratureSpec::default()).unwrap();
    let rel = (s - k).norm() / s.norm();
    println!("zero mu=1 c=0: series {s:.12e}, contour {k:.12e}, rel {rel:.3e}");
    assert!(rel < 1e-8, "rel {rel:.3e}");
}

#[test]
fn one_point_at_large_expansion_parameter() {
    // alpha = -0.3, mu = 1, c = 0.2: peak term ~ e^117
    let case = CorrelatorCase::OnePoint { alpha: r(-0.3) };
    let s = series_correlator(&case, 1.0, r(0.2), &SeriesSpec::default()).unwrap();
    let k = contour_correlator(&case, 1.0, 0.2, &QuadratureSpec::default()).unwrap();
    let rel = (s - k).norm() / s.norm();
    assert!(rel < 1e-8, "rel {rel:.3e}");
}

#[test]
fn three_point_panel_identity() {
    let a = c(-0.8, 0.1) / SQRT2;
    let case = CorrelatorCase::ThreePointResonant {
        alpha1: a,
        alpha3: a,
    };
    let s = series_correlator(&case, 0.2, r(0.0), &SeriesSpec::default()).unwrap();
    let k = contour_correlator(&case, 0.2, 0.0, &QuadratureSpec::default()).unwrap();
    let rel = (s - k).norm() / s.norm();
    assert!(rel < 1e-8, "rel {rel:.3e}");
}

#[test]
fn contour_line_shift_crosses_no_poles() {
    let case = CorrelatorCase::ZeroPoint;
    let mut spec = QuadratureSpec::default();
    let base = contour_correlator(&case, 1.0, 0.0, &spec).unwrap();
    for x0 in [-0.5, -0.9] {
        spec.line_re = Some(x0);
        let shifted = contour_correlator(&case, 1.0, 0.0, &spec).unwrap();
        assert!(
            (base - shifted).norm() < 1e-8 * base.norm(),
            "x0 = {x0}: {base} vs {shifted}"
        );
    }
}

#[test]
fn residue_bookkeeping_is_q_independent() {
    // conformal two-point charges (purely imaginary screening): the line
    // at q in (0, 1) plus the crossed n = 0 residue must not depend on q
    let (p1, p2) = (0.3, -0.1);
    let case = CorrelatorCase::TwoPointAntipodal {
        alpha1: c(-1.0 / (2.0 * SQRT2), p1),
        alpha2: c(-1.0 / (2.0 * SQRT2), p2),
    };
    let mut spec = QuadratureSpec::default();
    let mut values = Vec::new();
    for q in [0.25, 0.5, 0.75] {
        spec.line_re = Some(q);
        values.push(contour_correlator(&case, 0.25, 0.1, &spec).unwrap());
    }
    for v in &values[1..] {
        assert!(
            (*v - values[0]).norm() < 1e-8 * values[0].norm(),
            "{v} vs {}",
            values[0]
        );
    }
    // and the series agrees with the q-line value
    let s = series_correlator(&case, 0.25, r(0.1), &SeriesSpec::default()).unwrap();
    assert!((s - values[0]).norm() < 1e-7 * s.norm());
}

#[test]
fn residues_enter_when_the_line_moves_right_of_poles() {
    // zero point: a line at x0 in (1, 2) must pick up the n = 0, 1 residues
    let case = CorrelatorCase::ZeroPoint;
    let base = contour_correlator(&case, 0.4, 0.0, &QuadratureSpec::default()).unwrap();
    let spec = QuadratureSpec {
        line_re: Some(1.5),
        ..QuadratureSpec::default()
    };
    let shifted = contour_correlator(&case, 0.4, 0.0, &spec).unwrap();
    assert!(
        (base - shifted).norm() < 1e-8 * base.norm(),
        "{base} vs {shifted}"
    );
}
