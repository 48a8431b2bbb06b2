//! Double-double arithmetic: an unevaluated sum of two f64 giving ~31
//! significant decimal digits. Checks in this crate multiply up to a few
//! dozen moderate factors, so the stated tolerances (1e-6, 1e-9) leave
//! twenty digits of headroom over the working precision.
//!
//! No transcendental functions are implemented. Roots of unity and n-th
//! roots are seeded in f64 and Newton-refined here, which keeps every
//! value an exact algebraic identity away from its f64 seed.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// s + e = a + b exactly, with s the rounded sum.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Like `two_sum` but requires |a| >= |b|.
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// p + e = a * b exactly (single-rounded fused multiply-add).
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn from_int(n: i64) -> Dd {
        // i64 may carry more bits than one f64 mantissa; split exactly.
        let hi = n as f64;
        let lo = (n - hi as i64) as f64;
        Dd { hi, lo }
    }

    /// Exact quotient of two machine integers.
    pub fn ratio(n: i64, d: i64) -> Dd {
        assert!(d != 0, "zero denominator");
        Dd::from_int(n) / Dd::from_int(d)
    }

    /// Nearest double-double to an exact rational: leading f64 plus the
    /// f64 of the exactly computed remainder.
    pub fn of_rational(r: &BigRational) -> Dd {
        let hi = r.to_f64().expect("rational out of f64 range");
        if !hi.is_finite() {
            panic!("rational out of f64 range");
        }
        let rest = r - BigRational::from_float(hi).expect("finite");
        let (hi, lo) = quick_two_sum(hi, rest.to_f64().unwrap_or(0.0));
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    /// Newton-refined square root; the argument must be nonnegative.
    pub fn sqrt(self) -> Dd {
        assert!(self.hi >= 0.0, "sqrt of negative value {self:?}");
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let y = Dd::new(self.hi.sqrt());
        let y = (y + self / y) * Dd::new(0.5);
        (y + self / y) * Dd::new(0.5)
    }

    pub fn powi(self, e: i64) -> Dd {
        if e < 0 {
            return self.powi(-e).recip();
        }
        let mut acc = Dd::ONE;
        let mut base = self;
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = Dd::new(self.hi / rhs.hi);
        let r = self - rhs * q1;
        let q2 = Dd::new(r.hi / rhs.hi);
        let r = r - rhs * q2;
        let q3 = Dd::new(r.hi / rhs.hi);
        q1 + q2 + q3
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<std::cmp::Ordering> {
        (self.hi, self.lo).partial_cmp(&(other.hi, other.lo))
    }
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: Cdd = Cdd {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn new(re: f64, im: f64) -> Cdd {
        Cdd {
            re: Dd::new(re),
            im: Dd::new(im),
        }
    }

    pub fn real(re: Dd) -> Cdd {
        Cdd { re, im: Dd::ZERO }
    }

    pub fn conj(self) -> Cdd {
        Cdd {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.norm_sqr().to_f64().sqrt()
    }

    pub fn scale(self, k: Dd) -> Cdd {
        Cdd {
            re: self.re * k,
            im: self.im * k,
        }
    }

    pub fn recip(self) -> Cdd {
        self.conj().scale(self.norm_sqr().recip())
    }

    pub fn powi(self, e: i64) -> Cdd {
        if e < 0 {
            return self.powi(-e).recip();
        }
        let mut acc = Cdd::ONE;
        let mut base = self;
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn to_complex64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Principal n-th root: f64 seed, then Newton on y^n = self. The seed
    /// is within f64 rounding of the principal branch, so Newton cannot
    /// wander to a different root.
    pub fn nth_root(self, n: u64) -> Cdd {
        assert!(n >= 1);
        assert!(self.abs() > 0.0, "n-th root of zero");
        let seed = self.to_complex64().powf(1.0 / n as f64);
        let mut y = Cdd::new(seed.re, seed.im);
        for _ in 0..3 {
            let yp = y.powi(n as i64 - 1);
            let f = yp * y - self;
            y = y - f / (yp.scale(Dd::from_int(n as i64)));
        }
        y
    }
}

impl Add for Cdd {
    type Output = Cdd;
    fn add(self, rhs: Cdd) -> Cdd {
        Cdd {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for Cdd {
    type Output = Cdd;
    fn sub(self, rhs: Cdd) -> Cdd {
        Cdd {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for Cdd {
    type Output = Cdd;
    fn neg(self) -> Cdd {
        Cdd {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    fn mul(self, rhs: Cdd) -> Cdd {
        Cdd {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for Cdd {
    type Output = Cdd;
    fn div(self, rhs: Cdd) -> Cdd {
        (self * rhs.conj()).scale(rhs.norm_sqr().recip())
    }
}

/// e^{2πik/n}, Newton-refined on z^n = 1 from the f64 seed. Exact for the
/// fourth roots, which land on the axes.
pub fn root_of_unity(n: u64, k: i64) -> Cdd {
    assert!(n >= 1);
    let k = k.rem_euclid(n as i64) as u64;
    if k == 0 {
        return Cdd::ONE;
    }
    if 4 * k % n == 0 {
        // Axis roots come out exact rather than within refinement error.
        return match 4 * k / n {
            1 => Cdd::new(0.0, 1.0),
            2 => Cdd::new(-1.0, 0.0),
            3 => Cdd::new(0.0, -1.0),
            _ => unreachable!("k < n"),
        };
    }
    let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
    let mut z = Cdd::new(theta.cos(), theta.sin());
    for _ in 0..2 {
        let zp = z.powi(n as i64 - 1);
        let f = zp * z - Cdd::ONE;
        z = z - f / zp.scale(Dd::from_int(n as i64));
    }
    z
}

/// Nearest rational with denominator at most `max_den`, by continued
/// fractions, together with the relative gap |x - p/q| / max(1, |x|).
/// Returns None for non-finite input.
pub fn round_to_rational(x: f64, max_den: u64) -> Option<(BigRational, f64)> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, x.floor() as i128, 1i128);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        if frac.abs() < 1e-18 {
            break;
        }
        let a = (1.0 / frac).floor();
        if !a.is_finite() || q1.saturating_mul(a as i128) + q0 > max_den as i128 {
            break;
        }
        frac = 1.0 / frac - a;
        let (np, nq) = (a as i128 * p1 + p0, a as i128 * q1 + q0);
        (p0, q0, p1, q1) = (p1, q1, np, nq);
    }
    let approx = BigRational::new(BigInt::from(p1), BigInt::from(q1));
    let gap = (x - approx.to_f64().unwrap_or(f64::NAN)).abs() / x.abs().max(1.0);
    Some((approx, gap))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirds_resum_to_one() {
        let third = Dd::ratio(1, 3);
        let one = third + third + third;
        assert!((one - Dd::ONE).abs().to_f64() < 1e-31);
    }

    #[test]
    fn sqrt_squares_back() {
        let two = Dd::from_int(2);
        let r = two.sqrt();
        assert!((r * r - two).abs().to_f64() < 1e-31);
    }

    #[test]
    fn of_rational_carries_two_limbs() {
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        let d = Dd::of_rational(&r);
        assert!((d * Dd::from_int(3) - Dd::ONE).abs().to_f64() < 1e-31);
    }

    #[test]
    fn unit_roots_close_the_cycle() {
        for n in [2u64, 3, 5, 7, 12, 16, 24] {
            for k in 1..n {
                let z = root_of_unity(n, k as i64);
                let err = (z.powi(n as i64) - Cdd::ONE).abs();
                assert!(err < 1e-30, "n={n} k={k} err={err}");
            }
        }
    }

    #[test]
    fn principal_roots_stay_on_branch() {
        let z = Cdd::new(0.75, 0.0).nth_root(8);
        assert!(z.re.to_f64() > 0.0 && z.im.to_f64().abs() < 1e-30);
        assert!((z.powi(8) - Cdd::new(0.75, 0.0)).abs() < 1e-30);
    }

    #[test]
    fn rounding_recovers_small_rationals() {
        let (r, gap) = round_to_rational(-16.0, 1_000_000).unwrap();
        assert_eq!(r, BigRational::from_integer((-16).into()));
        assert!(gap < 1e-15);
        let (r, gap) = round_to_rational(0.6, 1_000_000).unwrap();
        assert_eq!(r, BigRational::new(3.into(), 5.into()));
        assert!(gap < 1e-15);
    }
}
