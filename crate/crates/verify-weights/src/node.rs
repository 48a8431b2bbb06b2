//! Real node types by the sign of the Hessian determinant.

use crate::VerifyError;

/// A real node is split (two real branches, local model x² − y²) or
/// solitary (an isolated real point, local model x² + y²).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealNodeType {
    Split,
    Solitary,
}

/// det H < 0 means split, det H > 0 means solitary; a vanishing or
/// non-finite determinant is not a node at all.
pub fn classify_real_node(hessian_det: f64) -> Result<RealNodeType, VerifyError> {
    if hessian_det == 0.0 || !hessian_det.is_finite() {
        return Err(VerifyError::NotANode);
    }
    Ok(if hessian_det < 0.0 {
        RealNodeType::Split
    } else {
        RealNodeType::Solitary
    })
}

/// (−1) to the number of solitary nodes, i.e. the product over the
/// nodes of sign(−det H).
pub fn welschinger_sign(hessian_dets: &[f64]) -> Result<i32, VerifyError> {
    let mut sign = 1;
    for &det in hessian_dets {
        if classify_real_node(det)? == RealNodeType::Solitary {
            sign = -sign;
        }
    }
    Ok(sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_equations() {
        // x² − y²: diag(2, −2), det −4. x² + y²: diag(2, 2), det 4.
        assert_eq!(classify_real_node(-4.0).unwrap(), RealNodeType::Split);
        assert_eq!(classify_real_node(4.0).unwrap(), RealNodeType::Solitary);
        assert!(classify_real_node(0.0).is_err());
    }

    #[test]
    fn two_solitary_nodes_sign_positive() {
        assert_eq!(welschinger_sign(&[4.0, 9.0]).unwrap(), 1);
        assert_eq!(welschinger_sign(&[4.0, -1.0]).unwrap(), -1);
        assert_eq!(welschinger_sign(&[]).unwrap(), 1);
    }
}
