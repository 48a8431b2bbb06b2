use lattice::Point;
use proptest::prelude::*;
use tropical::{curve_multiplicities, curve_of, dual_subdivision, TropicalPolynomial};

fn support_points(kind: u8) -> Vec<Point> {
    let mut pts = Vec::new();
    match kind {
        // Degree-2 and degree-3 triangles.
        0 | 1 => {
            let d = kind as i64 + 2;
            for i in 0..=d {
                for j in 0..=(d - i) {
                    pts.push(Point(i, j));
                }
            }
        }
        // 2×2 rectangle: parallelogram-rich subdivisions.
        _ => {
            for i in 0..=2 {
                for j in 0..=2 {
                    pts.push(Point(i, j));
                }
            }
        }
    }
    pts
}

fn poly(pts: &[Point], heights: &[i64]) -> TropicalPolynomial {
    let text = pts
        .iter()
        .zip(heights)
        .map(|(p, h)| format!("{} {} {h}", p.0, p.1))
        .collect::<Vec<_>>()
        .join("\n");
    TropicalPolynomial::parse(&text).unwrap()
}

proptest! {
    /// Heights enter only through second differences: adding a global
    /// affine function λi + μj + c tilts every lifted facet equally.
    #[test]
    fn subdivision_ignores_affine_height_shifts(
        kind in 0u8..3,
        heights in proptest::collection::vec(-8i64..=8, 10),
        lambda in -5i64..=5,
        mu in -5i64..=5,
        c in -5i64..=5,
    ) {
        let pts = support_points(kind);
        let base = poly(&pts, &heights);
        let shifted_heights: Vec<i64> = pts
            .iter()
            .zip(&heights)
            .map(|(p, h)| h + lambda * p.0 + mu * p.1 + c)
            .collect();
        let shifted = poly(&pts, &shifted_heights);
        let s0 = dual_subdivision(&base);
        let s1 = dual_subdivision(&shifted);
        prop_assert_eq!(s0.cells(), s1.cells());
    }

    /// Every embedded curve balances (asserted inside curve_of), and on
    /// nodal subdivisions the enriched count has rank equal to the
    /// complex count and signature equal to the real one. The product of
    /// vertex forms is checked against its closed form inside
    /// curve_multiplicities whenever the subdivision is simple.
    #[test]
    fn curves_balance_and_counts_are_consistent(
        kind in 0u8..3,
        heights in proptest::collection::vec(-8i64..=8, 10),
    ) {
        let pts = support_points(kind);
        let f = poly(&pts, &heights);
        let curve = curve_of(&f);
        let s = curve.subdivision();
        if s.is_nodal() {
            let m = curve_multiplicities(s).unwrap();
            prop_assert_eq!(m.quadratic.rank(), m.complex);
            prop_assert_eq!(m.quadratic.signature().unwrap(), m.real);
        }
    }
}
