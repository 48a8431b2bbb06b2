//! Product of (1 - ζ) over the nontrivial n-th roots of unity. The product
//! telescopes to n exactly; the check measures how far the refined roots
//! land from that, and cross-checks the f64 edge-weight identity from the
//! lattice crate against the same target.

use crate::dd::{root_of_unity, Cdd, Dd};
use crate::report::{batch, Check, Report};

/// ∏_{j=1}^{n-1} (1 - ζ_n^j) in double-double.
pub fn cyclotomic_product(n: u64) -> Cdd {
    assert!(n >= 1);
    let mut acc = Cdd::ONE;
    for j in 1..n {
        acc = acc * (Cdd::ONE - root_of_unity(n, j as i64));
    }
    acc
}

/// Compare the cyclotomic product with n, and the f64 sine-product route
/// with the same value. The residual is the worse of the two gaps.
pub fn sine_check(n: u32, tol: f64) -> Check {
    let prod = cyclotomic_product(n as u64);
    let dd_gap = (prod - Cdd::real(Dd::from_int(n as i64))).abs();
    let f64_route = lattice::sine_identity_check(n);
    let f64_gap = (f64_route - n as f64).abs();
    let residual = dd_gap.max(f64_gap);
    Check::new("sine", format!("n={n}"), residual <= tol, residual)
}

pub fn sine_suite(n_max: u32, tol: f64) -> Report {
    Report::new(batch((2..=n_max).collect(), |n| sine_check(n, tol)))
}
