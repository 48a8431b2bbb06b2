/// Numerically evaluate ∏_{j=1}^{m−1} (1 − ζ_m^j) over the complex
/// numbers and return its real part; the product is exactly m. The
/// imaginary part of the product is folded into the result only through
/// rounding, so the return value doubles as a residual check against m.
pub fn sine_identity_check(m: u32) -> f64 {
    assert!(m >= 2, "needs m >= 2, got {m}");
    let (mut re, mut im) = (1.0f64, 0.0f64);
    for j in 1..m {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
        let (fr, fi) = (1.0 - theta.cos(), -theta.sin());
        (re, im) = (re * fr - im * fi, re * fi + im * fr);
    }
    debug_assert!(im.abs() < 1e-9 * m as f64);
    re
}

#[cfg(test)]
mod tests {
    use super::sine_identity_check;

    #[test]
    fn cyclotomic_product_equals_m() {
        assert!((sine_identity_check(3) - 3.0).abs() < 1e-12);
        for m in 2..=12 {
            assert!((sine_identity_check(m) - m as f64).abs() < 1e-9);
        }
    }
}
