//! Nodes of a product of two binomial curves. For primitive exponent
//! pairs (a, b) and (c, d) with ad ≠ bc, the curves αx^a + βy^b and
//! γx^c + δy^d meet the torus in |ad − bc| points, every one a node of
//! the product curve, and at each the negated Hessian determinant is
//! the square of A − B with A = (αa x^{a−1})(δd y^{d−1}) and
//! B = (βb y^{b−1})(γc x^{c−1}).
//!
//! The intersection is solved on the logarithmic torus: the offsets of
//! the solutions form a full set of residues for the exponent matrix,
//! so each seed is exact up to f64 rounding and Newton only polishes.

use crate::dd::{Cdd, Dd};
use crate::report::{batch, Check, Report};
use crate::VerifyError;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeSet;

/// coef · e · x^{e−1}, with the e = 0 case short-circuited so the
/// negative power is never formed.
fn dmono(coef: Dd, x: Cdd, e: u32) -> Cdd {
    if e == 0 {
        return Cdd::ZERO;
    }
    x.powi(e as i64 - 1).scale(coef * Dd::from_int(e as i64))
}

/// coef · e(e−1) · x^{e−2}.
fn d2mono(coef: Dd, x: Cdd, e: u32) -> Cdd {
    if e < 2 {
        return Cdd::ZERO;
    }
    x.powi(e as i64 - 2)
        .scale(coef * Dd::from_int((e * (e - 1)) as i64))
}

/// One torus intersection point and the Hessian data measured there.
#[derive(Clone, Copy, Debug)]
pub struct GridNode {
    pub x: (f64, f64),
    pub y: (f64, f64),
    pub neg_det: (f64, f64),
    /// |(−det H) − (A−B)²| / |A−B)²|.
    pub identity_gap: f64,
    pub real_node: bool,
}

#[derive(Clone, Debug)]
pub struct ParallelogramCheck {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub expected: u64,
    pub nodes: Vec<GridNode>,
    /// Seeds that failed to converge or landed on a degenerate point.
    pub failures: usize,
    pub all_square: bool,
    pub residual: f64,
}

impl ParallelogramCheck {
    pub fn as_check(&self) -> Check {
        Check::new(
            "parallelogram",
            format!(
                "a={} b={} c={} d={} nodes={}/{}",
                self.a,
                self.b,
                self.c,
                self.d,
                self.nodes.len(),
                self.expected
            ),
            self.nodes.len() as u64 == self.expected && self.failures == 0 && self.all_square,
            self.residual,
        )
    }
}

struct Binomial {
    coef_x: Dd,
    coef_y: Dd,
    ex: u32,
    ey: u32,
}

impl Binomial {
    fn at(&self, x: Cdd, y: Cdd) -> Cdd {
        x.powi(self.ex as i64).scale(self.coef_x) + y.powi(self.ey as i64).scale(self.coef_y)
    }
    fn dx(&self, x: Cdd) -> Cdd {
        dmono(self.coef_x, x, self.ex)
    }
    fn dy(&self, y: Cdd) -> Cdd {
        dmono(self.coef_y, y, self.ey)
    }
    fn dxx(&self, x: Cdd) -> Cdd {
        d2mono(self.coef_x, x, self.ex)
    }
    fn dyy(&self, y: Cdd) -> Cdd {
        d2mono(self.coef_y, y, self.ey)
    }
}

pub fn parallelogram_check(
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    alpha: &BigRational,
    beta: &BigRational,
    gamma: &BigRational,
    delta: &BigRational,
    tol: f64,
) -> Result<ParallelogramCheck, VerifyError> {
    if a.gcd(&b) != 1 || c.gcd(&d) != 1 {
        return Err(VerifyError::Precondition(format!(
            "exponent pairs must be primitive: ({a},{b}), ({c},{d})"
        )));
    }
    let det = a as i64 * d as i64 - b as i64 * c as i64;
    if det == 0 {
        return Err(VerifyError::Precondition(
            "parallel exponent pairs carry no isolated nodes".into(),
        ));
    }
    if [alpha, beta, gamma, delta].iter().any(|r| r.is_zero()) {
        return Err(VerifyError::Precondition(
            "coefficients must be nonzero".into(),
        ));
    }
    let n = det.unsigned_abs() as i64;

    // Offsets of the log-torus solutions: the adjugate of the exponent
    // matrix folds Z² onto exactly n residue pairs.
    let delta_det = -det; // det of [[a, -b], [c, -d]]
    let sgn = delta_det.signum();
    let mut residues = BTreeSet::new();
    for k1 in 0..n {
        for k2 in 0..n {
            let r1 = (sgn * (-(d as i64) * k1 + b as i64 * k2)).rem_euclid(n);
            let r2 = (sgn * (-(c as i64) * k1 + a as i64 * k2)).rem_euclid(n);
            residues.insert((r1, r2));
        }
    }
    assert_eq!(residues.len() as i64, n, "residue classes must number |ad−bc|");

    let to_dd = |r: &BigRational| Dd::of_rational(r);
    let g1 = Binomial {
        coef_x: to_dd(alpha),
        coef_y: to_dd(beta),
        ex: a,
        ey: b,
    };
    let g2 = Binomial {
        coef_x: to_dd(gamma),
        coef_y: to_dd(delta),
        ex: c,
        ey: d,
    };

    let ratio = |num: &BigRational, den: &BigRational| {
        Complex64::new((-(num / den)).to_f64().expect("moderate coefficients"), 0.0)
    };
    let w1 = ratio(beta, alpha).ln();
    let w2 = ratio(delta, gamma).ln();
    let dd = delta_det as f64;
    let u0 = (-(d as f64) * w1 + b as f64 * w2) / dd;
    let v0 = (-(c as f64) * w1 + a as f64 * w2) / dd;

    let mut nodes = Vec::new();
    let mut failures = 0usize;
    let mut residual = 0.0f64;
    let tau = std::f64::consts::TAU;

    for &(r1, r2) in &residues {
        let seed_u = u0 + Complex64::new(0.0, tau * r1 as f64 / n as f64);
        let seed_v = v0 + Complex64::new(0.0, tau * r2 as f64 / n as f64);
        let (su, sv) = (seed_u.exp(), seed_v.exp());
        let mut x = Cdd::new(su.re, su.im);
        let mut y = Cdd::new(sv.re, sv.im);

        let mut converged = false;
        for _ in 0..12 {
            let (f1, f2) = (g1.at(x, y), g2.at(x, y));
            let (j00, j01, j10, j11) = (g1.dx(x), g1.dy(y), g2.dx(x), g2.dy(y));
            let jdet = j00 * j11 - j01 * j10;
            if jdet.abs() < 1e-18 {
                break;
            }
            let step_x = (f1 * j11 - f2 * j01) / jdet;
            let step_y = (f2 * j00 - f1 * j10) / jdet;
            x = x - step_x;
            y = y - step_y;
            if step_x.abs() + step_y.abs() <= 1e-26 * (x.abs() + y.abs()) {
                converged = true;
                break;
            }
        }
        let scale1 = x.powi(a as i64).scale(g1.coef_x).abs().max(1e-30);
        let scale2 = x.powi(c as i64).scale(g2.coef_x).abs().max(1e-30);
        if !converged
            || g1.at(x, y).abs() > 1e-18 * scale1
            || g2.at(x, y).abs() > 1e-18 * scale2
        {
            failures += 1;
            continue;
        }

        let big_a = g1.dx(x) * g2.dy(y);
        let big_b = g1.dy(y) * g2.dx(x);
        let ab_gap_sq = (big_a - big_b).norm_sqr().to_f64();
        if ab_gap_sq < 1e-18 {
            // A = B forces a vanishing Hessian: not a node.
            failures += 1;
            continue;
        }

        // Full second derivatives of the product, residual terms kept.
        let (f1, f2) = (g1.at(x, y), g2.at(x, y));
        let fxx = g1.dxx(x) * f2 + (g1.dx(x) * g2.dx(x)).scale(Dd::from_int(2)) + f1 * g2.dxx(x);
        let fyy = g1.dyy(y) * f2 + (g1.dy(y) * g2.dy(y)).scale(Dd::from_int(2)) + f1 * g2.dyy(y);
        let fxy = big_a + big_b; // mixed partials of each binomial vanish
        let neg_det = fxy * fxy - fxx * fyy;
        let target = (big_a - big_b) * (big_a - big_b);
        let gap = (neg_det - target).abs() / target.abs();

        let real_node = x.im.abs().to_f64() <= 1e-9 * x.abs().max(1.0)
            && y.im.abs().to_f64() <= 1e-9 * y.abs().max(1.0);
        let mut node_residual = gap;
        if real_node {
            // Real nodes of this shape are split: −det H = (A−B)² ≥ 0.
            node_residual = node_residual.max((-neg_det.re.to_f64()).max(0.0) / target.abs());
            node_residual = node_residual.max(neg_det.im.abs().to_f64() / target.abs());
        }
        residual = residual.max(node_residual);
        nodes.push(GridNode {
            x: (x.re.to_f64(), x.im.to_f64()),
            y: (y.re.to_f64(), y.im.to_f64()),
            neg_det: (neg_det.re.to_f64(), neg_det.im.to_f64()),
            identity_gap: gap,
            real_node,
        });
    }

    // Distinct residues must mean distinct points.
    'outer: for i in 0..nodes.len() {
        for j in 0..i {
            let dx = (nodes[i].x.0 - nodes[j].x.0, nodes[i].x.1 - nodes[j].x.1);
            let dy = (nodes[i].y.0 - nodes[j].y.0, nodes[i].y.1 - nodes[j].y.1);
            if dx.0.hypot(dx.1) + dy.0.hypot(dy.1) < 1e-9 {
                failures += 1;
                break 'outer;
            }
        }
    }

    let all_square = nodes.iter().all(|nd| nd.identity_gap <= tol)
        && nodes
            .iter()
            .filter(|nd| nd.real_node)
            .all(|nd| nd.neg_det.0 >= -tol * nd.neg_det.0.abs().max(1.0));

    Ok(ParallelogramCheck {
        a,
        b,
        c,
        d,
        expected: n as u64,
        nodes,
        failures,
        all_square,
        residual,
    })
}

/// Primitive exponent pairs with entries up to 3, crossed against two
/// coefficient draws, filtered to at most `max_nodes` nodes.
pub fn parallelogram_suite(max_nodes: u64, tol: f64) -> Report {
    let pairs = [
        (0u32, 1u32),
        (1, 0),
        (1, 1),
        (1, 2),
        (2, 1),
        (1, 3),
        (3, 1),
        (2, 3),
        (3, 2),
    ];
    let rat = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let draws = [
        [rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)],
        [rat(2, 1), rat(-3, 1), rat(3, 2), rat(-1, 1)],
    ];
    let mut jobs = Vec::new();
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            let det = a as i64 * d as i64 - b as i64 * c as i64;
            if det == 0 || det.unsigned_abs() > max_nodes {
                continue;
            }
            for draw in &draws {
                jobs.push((a, b, c, d, draw.clone()));
            }
        }
    }
    Report::new(batch(jobs, |(a, b, c, d, draw)| {
        parallelogram_check(a, b, c, d, &draw[0], &draw[1], &draw[2], &draw[3], tol)
            .expect("suite pairs satisfy the preconditions")
            .as_check()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_enumeration_matches_node_count() {
        let one = BigRational::from_integer(1.into());
        for (a, b, c, d, n) in [(2u32, 1u32, 1u32, 3u32, 5u64), (1, 1, 1, 2, 1), (1, 0, 0, 1, 1)]
        {
            let ck = parallelogram_check(a, b, c, d, &one, &one, &one, &one, 1e-6).unwrap();
            assert_eq!(ck.expected, n);
            assert_eq!(ck.nodes.len() as u64, n);
            assert_eq!(ck.failures, 0);
        }
    }
}
