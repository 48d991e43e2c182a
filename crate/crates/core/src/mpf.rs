//! Fixed-precision big floats (320-bit mantissa) for the alternating
//! Coulomb-gas sums whose intermediate terms dwarf the result.
//!
//! At expansion parameter x near 1 the series terms peak around
//! exp(n*/2) with n* = e^{2(C + ln x)}; tens of decimal digits cancel and
//! no fixed double-precision summation survives. This module provides
//! just enough real arithmetic (exp, ln, sqrt, log-Gamma) to evaluate
//! those sums for real parameters. Constants are computed from series,
//! never pasted from tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Mantissa precision in bits (~96 decimal digits).
const PREC: u64 = 320;

/// value = mant * 2^exp
#[derive(Clone, Debug)]
pub struct Mpf {
    mant: BigInt,
    exp: i64,
}

impl Mpf {
    pub fn zero() -> Self {
        Mpf {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Mpf {
            mant: BigInt::from(v),
            exp: 0,
        }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Mpf { mant: v, exp: 0 }.normalized()
    }

    /// Exact conversion: every finite f64 is a dyadic rational.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite());
        if v == 0.0 {
            return Self::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exponent = ((bits >> 52) & 0x7ff) as i64;
        let fraction = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if exponent == 0 {
            (fraction, -1074)
        } else {
            (fraction | (1u64 << 52), exponent - 1075)
        };
        Mpf {
            mant: BigInt::from(sign) * BigInt::from(mant),
            exp,
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        // keep 64 significant bits for the conversion
        let drop = (bits - 64).max(0);
        let head = (&self.mant >> drop).to_f64().unwrap();
        head * 2f64.powi((self.exp + drop) as i32)
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let bits = self.mant.bits() as i64;
        let excess = bits - PREC as i64;
        if excess > 0 {
            self.mant >>= excess;
            self.exp += excess;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Mpf {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Base-2 logarithm estimate, for loop-termination heuristics.
    pub fn log2_abs(&self) -> f64 {
        if self.mant.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.mant.bits() as f64 + self.exp as f64
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        (self.abs() - other.abs()).mant.sign().cmp(&num_bigint::Sign::NoSign)
    }
}

impl Add for &Mpf {
    type Output = Mpf;
    fn add(self, rhs: &Mpf) -> Mpf {
        if self.mant.is_zero() {
            return rhs.clone();
        }
        if rhs.mant.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.exp <= rhs.exp {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = hi.exp - lo.exp;
        // values more than PREC + 64 bits below the other are dropped
        if shift > PREC as i64 + 64 + lo.mant.bits() as i64 {
            return hi.clone();
        }
        Mpf {
            mant: (&hi.mant << shift) + &lo.mant,
            exp: lo.exp,
        }
        .normalized()
    }
}

impl Sub for &Mpf {
    type Output = Mpf;
    fn sub(self, rhs: &Mpf) -> Mpf {
        self + &(-rhs.clone())
    }
}

impl Neg for Mpf {
    type Output = Mpf;
    fn neg(self) -> Mpf {
        Mpf {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

impl Mul for &Mpf {
    type Output = Mpf;
    fn mul(self, rhs: &Mpf) -> Mpf {
        Mpf {
            mant: &self.mant * &rhs.mant,
            exp: self.exp + rhs.exp,
        }
        .normalized()
    }
}

impl Div for &Mpf {
    type Output = Mpf;
    fn div(self, rhs: &Mpf) -> Mpf {
        assert!(!rhs.mant.is_zero(), "mpf division by zero");
        if self.mant.is_zero() {
            return Mpf::zero();
        }
        let scale = PREC as i64 + 32 + rhs.mant.bits() as i64 - self.mant.bits() as i64;
        let scale = scale.max(0);
        Mpf {
            mant: (&self.mant << scale) / &rhs.mant,
            exp: self.exp - rhs.exp - scale,
        }
        .normalized()
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Mpf {
            type Output = Mpf;
            fn $f(self, rhs: Mpf) -> Mpf { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Mpf {
    pub fn powi(&self, n: u64) -> Mpf {
        let mut base = self.clone();
        let mut acc = Mpf::from_i64(1);
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn sqrt(&self) -> Mpf {
        assert!(!self.is_negative());
        if self.is_zero() {
            return Mpf::zero();
        }
        let mut y = Mpf::from_f64(self.to_f64().sqrt());
        let half = Mpf::from_f64(0.5);
        for _ in 0..8 {
            y = &half * &(&y + &(self / &y));
        }
        y
    }

    /// e^x by argument reduction against ln 2 and a Taylor tail.
    pub fn exp(&self) -> Mpf {
        let ln2 = ln2();
        let k = (self.to_f64() / std::f64::consts::LN_2).round();
        assert!(k.abs() < 1.5e18, "exp argument out of range");
        let k_i = k as i64;
        let r = self - &(&Mpf::from_f64(k) * ln2);
        let mut term = Mpf::from_i64(1);
        let mut sum = term.clone();
        for m in 1..200u64 {
            term = &(&term * &r) / &Mpf::from_i64(m as i64);
            sum = &sum + &term;
            if term.log2_abs() < sum.log2_abs() - PREC as f64 - 16.0 {
                break;
            }
        }
        sum.exp += k_i;
        sum
    }

    /// Natural log by Newton refinement of the f64 seed: y += x e^{-y} - 1.
    pub fn ln(&self) -> Mpf {
        assert!(!self.is_negative() && !self.is_zero());
        // split off the power of two so the f64 seed never overflows
        let bits = self.mant.bits() as i64 + self.exp; // value ~ 2^bits
        let mut scaled = self.clone();
        scaled.exp -= bits;
        let mut y = Mpf::from_f64(scaled.to_f64().ln());
        let one = Mpf::from_i64(1);
        for _ in 0..4 {
            let e = (-y.clone()).exp();
            y = &y + &(&(&scaled * &e) - &one);
        }
        &y + &(&Mpf::from_i64(bits) * ln2())
    }
}

fn cached(cell: &'static OnceLock<Mpf>, f: impl FnOnce() -> Mpf) -> &'static Mpf {
    cell.get_or_init(f)
}

/// ln 2 = sum_{k>=1} 1/(k 2^k), exact rational partial sums.
pub fn ln2() -> &'static Mpf {
    static LN2: OnceLock<Mpf> = OnceLock::new();
    cached(&LN2, || {
        let mut sum = Mpf::zero();
        for k in 1..((PREC + 64) as i64) {
            let term = Mpf {
                mant: BigInt::one(),
                exp: 0,
            };
            let denom = Mpf {
                mant: BigInt::from(k),
                exp: k,
            };
            sum = &sum + &(&term / &denom);
        }
        sum
    })
}

/// pi from Machin's formula; atan series in exact rationals.
pub fn pi() -> &'static Mpf {
    static PI: OnceLock<Mpf> = OnceLock::new();
    cached(&PI, || {
        let atan_inv = |q: i64| {
            let mut sum = Mpf::zero();
            let q2 = BigInt::from(q * q);
            let mut qpow = BigInt::from(q);
            let mut m = 0i64;
            loop {
                let denom = Mpf::from_bigint(&qpow * BigInt::from(2 * m + 1));
                let term = &Mpf::from_i64(1) / &denom;
                if term.log2_abs() < -(PREC as f64) - 16.0 {
                    break;
                }
                sum = if m % 2 == 0 { &sum + &term } else { &sum - &term };
                qpow *= &q2;
                m += 1;
            }
            sum
        };
        let a = atan_inv(5);
        let b = atan_inv(239);
        &(&Mpf::from_i64(16) * &a) - &(&Mpf::from_i64(4) * &b)
    })
}

/// Stirling coefficients B_{2k}/((2k)(2k-1)) as exact rationals, from the
/// defining recurrence for the Bernoulli numbers.
fn stirling_rationals(count: usize) -> Vec<BigRational> {
    let m = 2 * count + 2;
    let mut b: Vec<BigRational> = Vec::with_capacity(m);
    b.push(BigRational::one());
    for n in 1..m {
        // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(n+1, 0)
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            binom = &binom * BigInt::from((n + 1 - j) as i64) / BigInt::from((j + 1) as i64);
        }
        let bn = -acc / BigRational::from_integer(BigInt::from((n + 1) as i64));
        b.push(bn);
    }
    (1..=count)
        .map(|k| {
            b[2 * k].clone()
                / BigRational::from_integer(BigInt::from((2 * k * (2 * k - 1)) as i64))
        })
        .collect()
}

fn rational_to_mpf(r: &BigRational) -> Mpf {
    &Mpf::from_bigint(r.numer().clone()) / &Mpf::from_bigint(r.denom().clone())
}

fn stirling_coeffs() -> &'static Vec<Mpf> {
    static COEFFS: OnceLock<Vec<Mpf>> = OnceLock::new();
    COEFFS.get_or_init(|| stirling_rationals(40).iter().map(rational_to_mpf).collect())
}

/// log Gamma for real x > 0: shift to x >= 100, then Stirling.
pub fn ln_gamma(x: &Mpf) -> Mpf {
    assert!(!x.is_negative() && !x.is_zero());
    let shift = (100.0 - x.to_f64()).ceil().max(0.0) as i64;
    let mut log_sum = Mpf::zero();
    for j in 0..shift {
        log_sum = &log_sum + &(x + &Mpf::from_i64(j)).ln();
    }
    let z = x + &Mpf::from_i64(shift);
    let lz = z.ln();
    let half = Mpf::from_f64(0.5);
    let ln_2pi = &(&Mpf::from_i64(2) * pi()).ln();
    let mut series = Mpf::zero();
    let z2 = &z * &z;
    let mut p = z.clone();
    for coef in stirling_coeffs() {
        let term = coef / &p;
        series = &series + &term;
        if term.log2_abs() < -(PREC as f64) - 8.0 {
            break;
        }
        p = &p * &z2;
    }
    &(&(&(&(&z - &half) * &lz) - &z) + &(&half * ln_2pi)) + &(&series - &log_sum)
}
