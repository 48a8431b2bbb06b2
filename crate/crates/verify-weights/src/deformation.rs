//! Deformation patterns for a length-m vertical edge: the curve
//! G = a y² + b y g(x) + c acquires m−1 nodes exactly when g is a
//! scaled Chebyshev polynomial, one pattern per admissible scaling.
//! For odd m the scalings are g = (2√(ac)/b)·T_m(μ√(ac)·x) with
//! μ^m = 1; for even m they are g = ±(2√(ac)/b)·T_m(μ±·(ac)^{1/(2m)}·x)
//! with μ₊^m = 1 paired to the plus sign and μ₋^m = −1 to the minus,
//! identified under μ ↦ −μ. Either way there are m choices.
//!
//! Nodes sit over the Chebyshev critical points: x_l = γ_l/λ,
//! y_l = −b·g(x_l)/(2a). Writing u = λ², the product of −det H over
//! the nodes is exactly (16 m² u·ac)^{m−1}/(ζ·m²) with ζ = 1 for odd
//! m and −1 for even m, which reduces to the square class ⟨1⟩ for odd
//! m and ⟨−u⟩ for even m.

use crate::chebyshev::ChebyshevData;
use crate::dd::{root_of_unity, round_to_rational, Cdd, Dd};
use crate::report::{batch, Check, Report};
use crate::VerifyError;
use gw_core::SquareClass;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Principal square root of a real value, as a complex number.
fn principal_sqrt(v: Dd) -> Cdd {
    if v.hi() >= 0.0 {
        Cdd::real(v.sqrt())
    } else {
        Cdd {
            re: Dd::ZERO,
            im: (-v).sqrt(),
        }
    }
}

/// Value, first, and second derivative of a coefficient vector.
fn horner2(coeffs: &[Cdd], x: Cdd) -> (Cdd, Cdd, Cdd) {
    let (mut v, mut d1, mut d2) = (Cdd::ZERO, Cdd::ZERO, Cdd::ZERO);
    for &c in coeffs.iter().rev() {
        d2 = d2 * x + d1;
        d1 = d1 * x + v;
        v = v * x + c;
    }
    (v, d1, d2.scale(Dd::from_int(2)))
}

#[derive(Clone, Debug)]
pub struct DeformationCheck {
    pub m: u32,
    pub choice: u32,
    pub nodes: usize,
    /// Product of −det H over the located nodes.
    pub product: (f64, f64),
    /// Whether the run admits a square-class judgment (real λ² and,
    /// for odd m, the identity scaling).
    pub judged: bool,
    pub class: Option<SquareClass>,
    pub is_match: bool,
    pub residual: f64,
}

impl DeformationCheck {
    pub fn as_check(&self) -> Check {
        let class = match &self.class {
            Some(c) => format!(" class={c}"),
            None => String::new(),
        };
        Check::new(
            "deformation",
            format!(
                "m={} choice={} nodes={}{}",
                self.m, self.choice, self.nodes, class
            ),
            self.is_match,
            self.residual,
        )
    }
}

pub fn deformation_pattern_check(
    m: u32,
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    choice: u32,
    tol: f64,
) -> Result<DeformationCheck, VerifyError> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(VerifyError::Precondition(
            "coefficients a, b, c must be nonzero".into(),
        ));
    }
    if m >= 1 && choice >= m {
        return Err(VerifyError::Precondition(format!(
            "choice {choice} out of the {m} patterns"
        )));
    }
    if m <= 1 {
        // A unit edge smooths nothing: no pattern, vacuously correct.
        return Ok(DeformationCheck {
            m,
            choice,
            nodes: 0,
            product: (1.0, 0.0),
            judged: false,
            class: None,
            is_match: true,
            residual: 0.0,
        });
    }

    let ac = a * c;
    let ac_dd = Dd::of_rational(&ac);
    let a_dd = Dd::of_rational(a);
    let b_dd = Dd::of_rational(b);
    let c_dd = Dd::of_rational(c);

    // λ scales the Chebyshev argument; κ scales its value. The sign of
    // κ and the root-of-unity family both hang on the choice index.
    let (lambda, kappa) = if m % 2 == 1 {
        let mu = root_of_unity(m as u64, choice as i64);
        let sqrt_ac = principal_sqrt(ac_dd);
        (mu * sqrt_ac, sqrt_ac.scale(Dd::from_int(2) / b_dd))
    } else {
        let s = Cdd::real(ac_dd).nth_root(2 * m as u64);
        let sqrt_ac = s.powi(m as i64);
        if choice < m / 2 {
            let mu = root_of_unity(m as u64, choice as i64);
            (mu * s, sqrt_ac.scale(Dd::from_int(2) / b_dd))
        } else {
            let mu = root_of_unity(2 * m as u64, 2 * (choice - m / 2) as i64 + 1);
            (mu * s, -sqrt_ac.scale(Dd::from_int(2) / b_dd))
        }
    };

    let cheb = ChebyshevData::new(m);
    // The pattern leaves the subleading coefficient alone: T_m has no
    // x^{m−1} term, exactly.
    assert_eq!(cheb.coeffs()[m as usize - 1], 0);
    let gcoef: Vec<Cdd> = cheb
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &tk)| kappa * lambda.powi(k as i64).scale(Dd::from_int(tk)))
        .collect();

    let two_a = Cdd::real(a_dd + a_dd);
    let node_scale = (ac_dd.abs().to_f64())
        * 16.0
        * (m * m) as f64
        * lambda.norm_sqr().to_f64();

    let mut residual = 0.0f64;
    let mut nodes = 0usize;
    let mut product = Cdd::ONE;

    for l in 1..m as u64 {
        let gamma = root_of_unity(2 * m as u64, l as i64).re;
        let x = Cdd::real(gamma) / lambda;
        let (gv, g1, g2) = horner2(&gcoef, x);
        let y = -(gv.scale(b_dd)) / two_a;

        // The point must lie on the curve with a vanishing gradient.
        let on_curve = (y * y).scale(a_dd) + y * gv.scale(b_dd) + Cdd::real(c_dd);
        let grad_x = y * g1.scale(b_dd);
        let grad_y = y * two_a + gv.scale(b_dd);
        let scale = (y * y).scale(a_dd).abs().max(c_dd.abs().to_f64()).max(1.0);
        residual = residual
            .max(on_curve.abs() / scale)
            .max(grad_x.abs() / scale.max(node_scale.sqrt()))
            .max(grad_y.abs() / scale);

        let gxy = g1.scale(b_dd);
        let gxx = y * g2.scale(b_dd);
        let neg_det = gxy * gxy - gxx * two_a;
        if neg_det.abs() <= tol * node_scale {
            // Degenerate Hessian: the critical point is not a node.
            continue;
        }
        nodes += 1;
        product = product * neg_det;
    }

    // Sharp closed form of the product, same branch of λ.
    let base = (lambda * lambda).scale(ac_dd * Dd::from_int(16 * (m as i64) * (m as i64)));
    let mut target = base.powi(m as i64 - 1) / Cdd::real(Dd::from_int((m * m) as i64));
    if m % 2 == 0 {
        target = -target;
    }
    residual = residual.max((product - target).abs() / target.abs().max(1.0));

    let u = lambda * lambda;
    let real_u = u.im.abs().to_f64() <= 1e-20 * u.abs().max(1e-300);
    let mut judged = false;
    let mut judge_ok = true;
    let mut class = None;

    let m2 = BigRational::from_integer((16 * (m as i64) * (m as i64)).into());
    let msq = BigRational::from_integer(((m * m) as i64).into());
    if m % 2 == 1 && choice == 0 {
        // Real pattern for any nonzero rational ac: the product is the
        // exact positive rational (16 m² (ac)²)^{m−1}/m².
        judged = true;
        let e_rat = (m2 * (&ac * &ac)).pow(m as i32 - 1) / msq;
        debug_assert_eq!(SquareClass::of_rational(&e_rat).unwrap(), SquareClass::one());
        let ratio = product.re / Dd::of_rational(&e_rat);
        let (rounded, gap) = round_to_rational(ratio.to_f64(), 1_000_000).expect("finite ratio");
        judge_ok &= rounded.is_one() && gap < 1e-9;
        judge_ok &= product.im.abs().to_f64() <= tol * product.abs().max(1.0);
        class = Some(SquareClass::one());
    } else if m % 2 == 0 && real_u {
        // u = λ² is real: multiplying the product by u lands on the
        // exact rational −(16 m² ac)^{m−1}·ac/m², of class ⟨−1⟩, so
        // the product itself has class ⟨−u⟩.
        judged = true;
        let q_rat = -(m2 * &ac).pow(m as i32 - 1) * &ac / msq;
        debug_assert_eq!(
            SquareClass::of_rational(&q_rat).unwrap(),
            SquareClass::minus_one()
        );
        let q_num = product * Cdd::real(u.re);
        let ratio = q_num.re / Dd::of_rational(&q_rat);
        let (rounded, gap) = round_to_rational(ratio.to_f64(), 1_000_000).expect("finite ratio");
        judge_ok &= rounded.is_one() && gap < 1e-9;
        judge_ok &= product.re.to_f64().signum() == -u.re.to_f64().signum();
        judge_ok &= product.im.abs().to_f64() <= tol * product.abs().max(1.0);

        // ⟨−u⟩ concretely when u is rational, symbolically otherwise.
        class = match round_to_rational(u.re.to_f64(), 1_000_000) {
            Some((ru, gap_u)) if gap_u < 1e-9 && ru.pow(m as i32) == ac => {
                Some(SquareClass::of_rational(&(-ru))?)
            }
            _ => Some(SquareClass::atom("u").neg()),
        };
    }

    let is_match = nodes == (m as usize - 1) && residual <= tol && judge_ok;
    Ok(DeformationCheck {
        m,
        choice,
        nodes,
        product: (product.re.to_f64(), product.im.to_f64()),
        judged,
        class,
        is_match,
        residual,
    })
}

/// Every pattern for 2 ≤ m ≤ m_max over three coefficient draws with
/// positive ac.
pub fn deformation_suite(m_max: u32, tol: f64) -> Report {
    let rat = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let draws = [
        [rat(1, 1), rat(1, 1), rat(1, 1)],
        [rat(2, 1), rat(1, 1), rat(3, 1)],
        [rat(1, 2), rat(-2, 1), rat(3, 2)],
    ];
    let mut jobs = Vec::new();
    for m in 2..=m_max {
        for draw in &draws {
            for choice in 0..m {
                jobs.push((m, draw.clone(), choice));
            }
        }
    }
    Report::new(batch(jobs, |(m, draw, choice)| {
        deformation_pattern_check(m, &draw[0], &draw[1], &draw[2], choice, tol)
            .expect("suite draws satisfy the preconditions")
            .as_check()
    }))
}
