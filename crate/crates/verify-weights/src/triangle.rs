//! Nodes and quadratic weight of the one-branch curve attached to a
//! normal triangle (m, p, q): the parametrization x(t) = α t^m,
//! y(t) = β t^p (t−1)^{q−p} identifies parameter pairs (t, s) at nodes,
//! and every such pair is cut out by a pair of roots of unity. The
//! whole check runs on closed forms; no polynomial system is solved.
//!
//! Indices (i, j) range over 1..m and 1..=q−p. Writing w = q−p and
//! N = mw, set μ = ζ_m^i, ν = ζ_w^j, ζ = ζ_N^{ip+jm}; then
//! t = (1−ζ)/(1−ζμ) and s = tμ. A pair is degenerate when ζ = 1
//! (d_p − 1 cases) or ζμ = 1 (d_q − 1 cases). The involution
//! (i, j) ↦ (m−i, −(j+p) mod w) swaps t and s, has no fixed points
//! among valid pairs, and so halves the count to the interior point
//! count of the triangle.

use crate::dd::{root_of_unity, Cdd, Dd};
use crate::report::{batch, Check, Report};
use crate::VerifyError;
use gw_core::SquareClass;
use lattice::NormalTriangle;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Parametrized curve instance. Coefficients default to 1; they scale
/// x and y but never move the node parameters.
#[derive(Clone, Debug)]
pub struct TriangleCurveInstance {
    triangle: NormalTriangle,
    alpha: Cdd,
    beta: Cdd,
}

impl TriangleCurveInstance {
    pub fn new(m: u64, p: u64, q: u64) -> Result<Self, VerifyError> {
        Self::with_coefficients(m, p, q, Cdd::ONE, Cdd::ONE)
    }

    pub fn with_coefficients(
        m: u64,
        p: u64,
        q: u64,
        alpha: Cdd,
        beta: Cdd,
    ) -> Result<Self, VerifyError> {
        if alpha.abs() == 0.0 || beta.abs() == 0.0 {
            return Err(VerifyError::Precondition(
                "curve coefficients must be nonzero".into(),
            ));
        }
        Ok(TriangleCurveInstance {
            triangle: NormalTriangle::new(m, p, q)?,
            alpha,
            beta,
        })
    }

    pub fn triangle(&self) -> &NormalTriangle {
        &self.triangle
    }

    pub fn x_at(&self, t: Cdd) -> Cdd {
        self.alpha * t.powi(self.triangle.m() as i64)
    }

    pub fn y_at(&self, t: Cdd) -> Cdd {
        let w = (self.triangle.q() - self.triangle.p()) as i64;
        self.beta * t.powi(self.triangle.p() as i64) * (t - Cdd::ONE).powi(w)
    }
}

/// One node of the parametrized curve: the two parameter values t, s
/// and the roots of unity that produce them.
#[derive(Clone, Copy, Debug)]
pub struct NodeSolution {
    pub i: u64,
    pub j: u64,
    pub mu: Cdd,
    pub nu: Cdd,
    pub zeta: Cdd,
    pub t: Cdd,
    pub s: Cdd,
}

fn valid_pairs(tri: &NormalTriangle) -> Vec<(u64, u64)> {
    let (m, p, q) = (tri.m(), tri.p(), tri.q());
    let w = q - p;
    let n = m * w;
    let mut out = Vec::new();
    for i in 1..m {
        for j in 1..=w {
            let degenerate = (i * p + j * m) % n == 0 || (i * q + j * m) % n == 0;
            if !degenerate {
                out.push((i, j));
            }
        }
    }
    out
}

/// The pair producing the same node with t and s exchanged.
fn partner(tri: &NormalTriangle, i: u64, j: u64) -> (u64, u64) {
    let w = tri.q() - tri.p();
    let r = (w - (j + tri.p()) % w) % w;
    (tri.m() - i, if r == 0 { w } else { r })
}

fn solution_for(tri: &NormalTriangle, i: u64, j: u64) -> NodeSolution {
    let (m, p, q) = (tri.m(), tri.p(), tri.q());
    let w = q - p;
    let n = m * w;
    let mu = root_of_unity(m, i as i64);
    let nu = root_of_unity(w, j as i64);
    let zeta = root_of_unity(n, ((i * p + j * m) % n) as i64);
    let zeta_mu = root_of_unity(n, ((i * q + j * m) % n) as i64);
    let t = (Cdd::ONE - zeta) / (Cdd::ONE - zeta_mu);
    NodeSolution {
        i,
        j,
        mu,
        nu,
        zeta,
        t,
        s: t * mu,
    }
}

/// Distinct nodes of the (m, p, q) curve, one representative per
/// involution orbit. The count always equals the interior point count
/// of the normal triangle.
pub fn triangle_nodes(m: u64, p: u64, q: u64) -> Result<Vec<NodeSolution>, VerifyError> {
    let tri = NormalTriangle::new(m, p, q)?;
    let pairs = valid_pairs(&tri);
    assert_eq!(
        pairs.len() as u64,
        2 * tri.interior_count(),
        "valid pairs must double-cover the nodes of ({m},{p},{q})"
    );
    let nodes: Vec<NodeSolution> = pairs
        .iter()
        .filter(|&&(i, j)| (i, j) < partner(&tri, i, j))
        .map(|&(i, j)| solution_for(&tri, i, j))
        .collect();
    assert_eq!(
        nodes.len() as u64,
        tri.interior_count(),
        "node count must equal the interior count of ({m},{p},{q})"
    );
    Ok(nodes)
}

/// Verify, for every node of the (m, p, q) curve, that the closed-form
/// parameters really collide: x(t) = x(s), y(t) = y(s), the branch
/// relation ζ^w = μ^p, and that the partner pair returns (s, t).
pub fn triangle_node_check(m: u64, p: u64, q: u64, tol: f64) -> Result<Check, VerifyError> {
    let curve = TriangleCurveInstance::new(m, p, q)?;
    let tri = curve.triangle().clone();
    let nodes = triangle_nodes(m, p, q)?;
    let w = (q - p) as i64;
    let mut residual = 0.0f64;
    for node in &nodes {
        let (t, s) = (node.t, node.s);
        for v in [t, s] {
            // t ∈ {0, 1} would put the node at a parametrization end.
            assert!(v.abs() > 1e-9 && (v - Cdd::ONE).abs() > 1e-9);
        }
        let x_gap = (curve.x_at(t) - curve.x_at(s)).abs();
        let y_gap = (curve.y_at(t) - curve.y_at(s)).abs();
        let branch_gap = (node.zeta.powi(w) - node.mu.powi(p as i64)).abs();
        let (pi, pj) = partner(&tri, node.i, node.j);
        let back = solution_for(&tri, pi, pj);
        let swap_gap = (back.t - s).abs().max((back.s - t).abs());
        let scale = curve.x_at(t).abs().max(curve.y_at(t).abs()).max(1.0);
        residual = residual
            .max(x_gap / scale)
            .max(y_gap / scale)
            .max(branch_gap)
            .max(swap_gap);
    }
    Ok(Check::new(
        "triangle-nodes",
        format!("m={m} p={p} q={q} nodes={}", nodes.len()),
        residual <= tol,
        residual,
    ))
}

/// All (m, p, q) with 0 ≤ p < q ≤ m and m(q−p) ≤ max_double_area.
fn triple_range(max_double_area: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for m in 1..=max_double_area {
        for w in 1..=(max_double_area / m).min(m) {
            for p in 0..=(m - w) {
                out.push((m, p, p + w));
            }
        }
    }
    out
}

pub fn triangle_node_suite(max_double_area: u64, tol: f64) -> Report {
    Report::new(batch(triple_range(max_double_area), |(m, p, q)| {
        triangle_node_check(m, p, q, tol).expect("triple range is valid")
    }))
}

/// Numeric weight product against the closed form and its square class.
#[derive(Clone, Debug)]
pub struct TriangleWeightCheck {
    pub m: u64,
    pub p: u64,
    pub q: u64,
    pub nodes: usize,
    /// (−1)^Int times the product over all parameter pairs of
    /// (t−s)/(t(t−1)s(s−1)), evaluated in double-double.
    pub numeric: (f64, f64),
    /// The same value assembled exactly from the factor products.
    pub formula: BigRational,
    pub class: SquareClass,
    pub is_match: bool,
    pub residual: f64,
}

impl TriangleWeightCheck {
    pub fn as_check(&self) -> Check {
        Check::new(
            "triangle-weight",
            format!(
                "m={} p={} q={} nodes={} class={}",
                self.m, self.p, self.q, self.nodes, self.class
            ),
            self.is_match,
            self.residual,
        )
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// Exact value of the full product, before the interior-parity sign:
/// ∏(1−ζμ)³ / (∏ζμ · ∏(1−ζ) · ∏(1−μ)) with each factor replaced by
/// its closed form. Every piece is an integer power of small numbers,
/// so the quotient is an exact rational.
fn weight_formula(tri: &NormalTriangle) -> BigRational {
    let (m, w) = (tri.m(), tri.q() - tri.p());
    let (dp, dq) = (tri.d_p(), tri.d_q());
    let (mp, mq) = (m / dp, m / dq);
    let numer = big(mq * w).pow(3 * dq as u32) * big(dq * w) * big(dp * dq);
    let denom = big(dp * w).pow(3) * big(mp * w).pow(dp as u32) * big(m).pow(w as u32);
    BigRational::new(numer, denom)
}

/// The lemma's monomial for the same square class.
fn weight_class_monomial(tri: &NormalTriangle) -> BigRational {
    let (m, w) = (tri.m(), tri.q() - tri.p());
    let (dp, dq) = (tri.d_p(), tri.d_q());
    let value = big(m).pow((dp + dq + w) as u32)
        * big(w).pow((dp + dq) as u32)
        * big(dp).pow(dp as u32)
        * big(dq).pow(dq as u32);
    BigRational::from_integer(value)
}

/// Area and edge lengths, each raised to itself: the geometric form of
/// the class, no gcd bookkeeping.
fn weight_class_geometric(tri: &NormalTriangle) -> BigRational {
    let area = tri.double_area();
    let (e0, e1, e2) = tri.edge_lengths();
    let numer = big(area).pow(area as u32);
    let denom = big(e0).pow(e0 as u32) * big(e1).pow(e1 as u32) * big(e2).pow(e2 as u32);
    BigRational::new(numer, denom)
}

pub fn triangle_weight_check(
    m: u64,
    p: u64,
    q: u64,
    tol: f64,
) -> Result<TriangleWeightCheck, VerifyError> {
    let tri = NormalTriangle::new(m, p, q)?;
    let interior = tri.interior_count();
    let nodes = triangle_nodes(m, p, q)?;

    let mut product = Cdd::ONE;
    for &(i, j) in &valid_pairs(&tri) {
        let n = solution_for(&tri, i, j);
        let (t, s) = (n.t, n.s);
        let denom = t * (t - Cdd::ONE) * s * (s - Cdd::ONE);
        product = product * ((t - s) / denom);
    }
    if interior % 2 == 1 {
        product = -product;
    }

    let sign = if interior % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    let formula = sign * weight_formula(&tri);
    let class = SquareClass::of_rational(&formula)?;

    let target = Cdd::real(Dd::of_rational(&formula));
    let scale = target.abs().max(1.0);
    let residual = (product - target).abs() / scale;

    let variants = [weight_class_monomial(&tri), weight_class_geometric(&tri)];
    let classes_agree = variants.iter().all(|v| {
        let signed = if interior % 2 == 1 { -v.clone() } else { v.clone() };
        SquareClass::of_rational(&signed).ok().as_ref() == Some(&class)
    });

    Ok(TriangleWeightCheck {
        m,
        p,
        q,
        nodes: nodes.len(),
        numeric: (product.re.to_f64(), product.im.to_f64()),
        formula,
        class,
        is_match: residual <= tol && classes_agree,
        residual,
    })
}

pub fn triangle_weight_suite(max_double_area: u64, tol: f64) -> Report {
    Report::new(batch(triple_range(max_double_area), |(m, p, q)| {
        triangle_weight_check(m, p, q, tol)
            .expect("triple range is valid")
            .as_check()
    }))
}

/// Degree and defining relation of the coefficient algebra: β ranges
/// over the roots of β^{m/d_p} = radicand, one curve per root.
#[derive(Clone, Debug)]
pub struct FAlgebra {
    pub degree: u64,
    pub radicand: BigRational,
    pub class: SquareClass,
}

/// Coefficient algebra for the (m, p, q) curve through fixed data
/// (a, b, ε₁, ε₂), where ε₁^{q−p} = ε₂^{d_p} = 1. Over the rationals
/// the ε's are signs subject to those parity constraints.
pub fn falgebra_of(
    m: u64,
    p: u64,
    q: u64,
    a: &BigRational,
    b: &BigRational,
    eps1: i64,
    eps2: i64,
) -> Result<FAlgebra, VerifyError> {
    let tri = NormalTriangle::new(m, p, q)?;
    if a.is_zero() || b.is_zero() {
        return Err(VerifyError::Precondition(
            "coefficients a, b must be nonzero".into(),
        ));
    }
    let w = q - p;
    if !matches!(eps1, 1 | -1) || !matches!(eps2, 1 | -1) {
        return Err(VerifyError::Precondition("ε₁, ε₂ must be units".into()));
    }
    if eps1 == -1 && w % 2 == 1 {
        return Err(VerifyError::Precondition(format!(
            "ε₁ = −1 is not a (q−p)-th root of unity for q−p = {w}"
        )));
    }
    let dp = tri.d_p();
    if eps2 == -1 && dp % 2 == 1 {
        return Err(VerifyError::Precondition(format!(
            "ε₂ = −1 is not a d_p-th root of unity for d_p = {dp}"
        )));
    }

    let degree = m / dp;
    assert_eq!(degree, tri.double_area() / (w * dp));

    let base = -BigRational::from_integer(BigInt::from(eps1)) / a;
    let parity_sign = if (m * w / dp) % 2 == 1 { -1 } else { 1 };
    let radicand = BigRational::from_integer(BigInt::from(-eps2 * parity_sign))
        * base.pow((p / dp) as i32)
        / b;
    let class = SquareClass::of_rational(&radicand)?;
    Ok(FAlgebra {
        degree,
        radicand,
        class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_is_an_involution_without_fixed_points() {
        for (m, p, q) in triple_range(16) {
            let tri = NormalTriangle::new(m, p, q).unwrap();
            for (i, j) in valid_pairs(&tri) {
                let (pi, pj) = partner(&tri, i, j);
                assert_ne!((pi, pj), (i, j), "fixed point at ({m},{p},{q})");
                assert_eq!(partner(&tri, pi, pj), (i, j));
            }
        }
    }

    #[test]
    fn partners_stay_valid() {
        for (m, p, q) in triple_range(16) {
            let tri = NormalTriangle::new(m, p, q).unwrap();
            let pairs = valid_pairs(&tri);
            for &(i, j) in &pairs {
                assert!(pairs.contains(&partner(&tri, i, j)));
            }
        }
    }
}
