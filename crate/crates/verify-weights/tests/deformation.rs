use gw_core::SquareClass;
use num_rational::BigRational;
use num_traits::One;
use verify_weights::{
    classify_real_node, deformation_pattern_check, deformation_suite, RealNodeType,
    DEFORMATION_TOL,
};

fn unit() -> BigRational {
    BigRational::one()
}

#[test]
fn single_node_even_pattern() {
    // m = 2, unit coefficients, identity scaling: g = 4x² − 2, one
    // node at (0, 1) with −det H = −16, a solitary real node, class
    // ⟨−u⟩ = ⟨−1⟩.
    let ck = deformation_pattern_check(2, &unit(), &unit(), &unit(), 0, DEFORMATION_TOL).unwrap();
    assert!(ck.is_match, "residual {}", ck.residual);
    assert_eq!(ck.nodes, 1);
    assert!((ck.product.0 + 16.0).abs() < 1e-12);
    assert!(ck.judged);
    assert_eq!(ck.class, Some(SquareClass::minus_one()));
    // det H = −(−16) = 16 > 0: the deformation leaves an isolated
    // real point.
    assert_eq!(
        classify_real_node(-ck.product.0).unwrap(),
        RealNodeType::Solitary
    );
}

#[test]
fn second_even_pattern_flips_the_sign() {
    // The other real m = 2 pattern has u = −1: g = 4x² + 2, product
    // +16, class ⟨−u⟩ = ⟨1⟩, and the node is split.
    let ck = deformation_pattern_check(2, &unit(), &unit(), &unit(), 1, DEFORMATION_TOL).unwrap();
    assert!(ck.is_match, "residual {}", ck.residual);
    assert_eq!(ck.nodes, 1);
    assert!((ck.product.0 - 16.0).abs() < 1e-12);
    assert!(ck.judged);
    assert_eq!(ck.class, Some(SquareClass::one()));
    assert_eq!(
        classify_real_node(-ck.product.0).unwrap(),
        RealNodeType::Split
    );
}

#[test]
fn odd_pattern_product_is_a_square() {
    // m = 3, unit coefficients: g = 8x³ − 6x, nodes (±1/2, ±1), each
    // with −det H = −48; the product 2304 = 48² has class ⟨1⟩.
    let ck = deformation_pattern_check(3, &unit(), &unit(), &unit(), 0, DEFORMATION_TOL).unwrap();
    assert!(ck.is_match, "residual {}", ck.residual);
    assert_eq!(ck.nodes, 2);
    assert!((ck.product.0 - 2304.0).abs() < 1e-9);
    assert!(ck.judged);
    assert_eq!(ck.class, Some(SquareClass::one()));
}

#[test]
fn all_quartic_choices_pass() {
    for choice in 0..4 {
        let ck =
            deformation_pattern_check(4, &unit(), &unit(), &unit(), choice, DEFORMATION_TOL)
                .unwrap();
        assert!(ck.is_match, "choice {choice}: residual {}", ck.residual);
        assert_eq!(ck.nodes, 3);
    }
}

#[test]
fn irrational_scaling_keeps_symbolic_class() {
    // ac = 6 under m = 2: u = √6 is irrational, so the class is the
    // symbolic ⟨−u⟩ while the sign and product identities still bind.
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    let ck = deformation_pattern_check(2, &two, &unit(), &three, 0, DEFORMATION_TOL).unwrap();
    assert!(ck.is_match, "residual {}", ck.residual);
    assert!(ck.judged);
    assert_eq!(ck.class, Some(SquareClass::atom("u").neg()));
}

#[test]
fn suite_passes_to_eight() {
    let report = deformation_suite(8, DEFORMATION_TOL);
    assert_eq!(report.checks.len(), 105);
    assert!(report.all_pass(), "{report}");
}
