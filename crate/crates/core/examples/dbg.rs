use tlcorr::coulomb::CorrelatorCase;
use tlcorr::cplx::{c, r};
fn main() {
    let one = CorrelatorCase::OnePoint { alpha: r(0.0) };
    let zero = CorrelatorCase::ZeroPoint;
    for &u in &[1e-3f64, 1e-6, 1e-9, 1e-12, 1e-30, 1e-80, 0.3, 2.0] {
        let zmw = c(0.0, 0.1 * u);
        let a = tlcorr::correlator::f_eval(&one, zmw + one.screening()).unwrap();
        let b = tlcorr::correlator::f_eval(&zero, zmw + zero.screening()).unwrap();
        // call through the public API at identical z to compare forms
        println!("u={u:8.0e}: one {a:+.15e}  zero {b:+.15e}  rel {:.2e}", (a - b).norm() / b.norm());
    }
}
