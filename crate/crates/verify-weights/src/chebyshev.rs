//! Chebyshev polynomials T_m with exact integer coefficients, their
//! interior critical points γ_l, and the value and curvature identities
//! at those points that the deformation patterns rely on.

use crate::dd::{root_of_unity, Cdd, Dd};
use crate::report::{batch, Check, Report};

/// T_m as an exact coefficient vector, lowest degree first, together
/// with its critical points γ_l = (ζ_{2m}^l + ζ_{2m}^{−l})/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevData {
    m: u32,
    coeffs: Vec<i64>,
}

impl ChebyshevData {
    /// Build T_m from the recurrence T_m = 2x·T_{m−1} − T_{m−2}.
    /// Coefficients stay under i64 through m = 45.
    pub fn new(m: u32) -> ChebyshevData {
        assert!(m <= 45, "coefficients overflow i64 beyond m = 45");
        let mut prev = vec![1i64]; // T_0
        if m == 0 {
            return ChebyshevData { m, coeffs: prev };
        }
        let mut cur = vec![0i64, 1]; // T_1
        for _ in 2..=m {
            let mut next = vec![0i64; cur.len() + 1];
            for (k, &c) in cur.iter().enumerate() {
                next[k + 1] += 2 * c;
            }
            for (k, &c) in prev.iter().enumerate() {
                next[k] -= c;
            }
            prev = cur;
            cur = next;
        }
        ChebyshevData { m, coeffs: cur }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Critical points inside (−1, 1), in the order l = 1..m−1.
    pub fn critical_points(&self) -> Vec<Dd> {
        (1..self.m as u64)
            .map(|l| {
                let z = root_of_unity(2 * self.m as u64, l as i64);
                // (ζ + 1/ζ)/2 for a unit ζ is its real part.
                z.re
            })
            .collect()
    }

    /// (value, first, second derivative) at x by Horner runs.
    pub fn eval2(&self, x: Dd) -> (Dd, Dd, Dd) {
        let (mut v, mut d1, mut d2) = (Dd::ZERO, Dd::ZERO, Dd::ZERO);
        for &c in self.coeffs.iter().rev() {
            d2 = d2 * x + d1;
            d1 = d1 * x + v;
            v = v * x + Dd::from_int(c);
        }
        (v, d1, d2 * Dd::from_int(2))
    }

    /// Same evaluation over complex arguments.
    pub fn eval2_c(&self, x: Cdd) -> (Cdd, Cdd, Cdd) {
        let (mut v, mut d1, mut d2) = (Cdd::ZERO, Cdd::ZERO, Cdd::ZERO);
        for &c in self.coeffs.iter().rev() {
            d2 = d2 * x + d1;
            d1 = d1 * x + v;
            v = v * x + Cdd::real(Dd::from_int(c));
        }
        (v, d1, d2.scale(Dd::from_int(2)))
    }
}

/// Verify, for l = 1..m−1: T_m'(γ_l) = 0, T_m(γ_l) = (−1)^l, and
/// T_m''(γ_l) = (−1)^l·4m²/(ζ_{2m}^l − ζ_{2m}^{−l})². Also checks the
/// parity gaps in the coefficient vector and revalidates the integer
/// coefficients against the closed form
/// ((x+√(x²−1))^m + (x−√(x²−1))^m)/2 away from [−1, 1].
pub fn chebyshev_check(m: u32, tol: f64) -> Check {
    assert!(m >= 2);
    let data = ChebyshevData::new(m);
    let mut residual = 0.0f64;

    for (k, &c) in data.coeffs().iter().enumerate() {
        if (k as u32) % 2 != m % 2 && c != 0 {
            // Parity violation is a hard failure, not a numeric one.
            return Check::new("chebyshev", format!("m={m}"), false, f64::INFINITY);
        }
    }

    let m2 = Dd::from_int(4 * (m as i64) * (m as i64));
    for (l, gamma) in data.critical_points().into_iter().enumerate() {
        let l = l as u64 + 1;
        let (v, d1, d2) = data.eval2(gamma);
        let sign = if l % 2 == 0 { Dd::ONE } else { -Dd::ONE };
        let z = root_of_unity(2 * m as u64, l as i64);
        // (ζ − 1/ζ)² for unit ζ is −4 Im(ζ)².
        let diff_sq = -(z.im * z.im * Dd::from_int(4));
        let curv_target = sign * m2 / diff_sq;
        residual = residual
            .max(d1.abs().to_f64())
            .max((v - sign).abs().to_f64())
            .max((d2 - curv_target).abs().to_f64() / curv_target.abs().to_f64().max(1.0));
    }

    // x = 5/4 keeps √(x²−1) real and the binomial pair well conditioned.
    let x = Dd::ratio(5, 4);
    let r = (x * x - Dd::ONE).sqrt();
    let closed = ((x + r).powi(m as i64) + (x - r).powi(m as i64)) * Dd::ratio(1, 2);
    let (horner, _, _) = data.eval2(x);
    residual = residual.max((closed - horner).abs().to_f64() / closed.abs().to_f64());

    Check::new("chebyshev", format!("m={m}"), residual <= tol, residual)
}

pub fn chebyshev_suite(m_max: u32, tol: f64) -> Report {
    Report::new(batch((2..=m_max).collect(), |m| chebyshev_check(m, tol)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_coefficient_vectors() {
        assert_eq!(ChebyshevData::new(0).coeffs(), &[1]);
        assert_eq!(ChebyshevData::new(1).coeffs(), &[0, 1]);
        assert_eq!(ChebyshevData::new(2).coeffs(), &[-1, 0, 2]);
        assert_eq!(ChebyshevData::new(3).coeffs(), &[0, -3, 0, 4]);
        assert_eq!(ChebyshevData::new(4).coeffs(), &[1, 0, -8, 0, 8]);
    }

    #[test]
    fn frozen_critical_values() {
        let t2 = ChebyshevData::new(2);
        let g = t2.critical_points();
        assert_eq!(g.len(), 1);
        assert!(g[0].abs().to_f64() < 1e-30);
        assert!((t2.eval2(g[0]).0 + Dd::ONE).abs().to_f64() < 1e-30);

        let t3 = ChebyshevData::new(3);
        let g = t3.critical_points();
        assert_eq!(g.len(), 2);
        assert!((g[0] - Dd::ratio(1, 2)).abs().to_f64() < 1e-30);
        assert!((t3.eval2(g[0]).0 + Dd::ONE).abs().to_f64() < 1e-30);
    }

    #[test]
    fn derivative_horner_matches_finite_shift() {
        let t5 = ChebyshevData::new(5);
        let x = Dd::ratio(3, 7);
        let h = Dd::ratio(1, 1 << 20);
        let (v, d1, d2) = t5.eval2(x);
        let (vp, _, _) = t5.eval2(x + h);
        let (vm, _, _) = t5.eval2(x - h);
        let fd1 = (vp - vm) / (h * Dd::from_int(2));
        let fd2 = (vp + vm - v - v) / (h * h);
        assert!((fd1 - d1).abs().to_f64() < 1e-10);
        assert!((fd2 - d2).abs().to_f64() < 1e-8);
    }
}
