use crate::sequence::{build_graph_sequence, MarkedGraphSequence};
use crate::TowerError;
use gw_core::{ExtensionStep, SquareClass};
use std::fmt;
use tropical::{CellKind, MarkedSubdivision};

/// Which stage of the tower a step belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Band {
    /// Vertex coefficients: one step per triangle, in completion order.
    F,
    /// Deformation patterns: one step per class of length at least 2.
    L,
    /// Point conditions: one step per mark.
    M,
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Band::F => "F",
            Band::L => "L",
            Band::M => "M",
        })
    }
}

/// One extension step together with its place in the tower.
#[derive(Clone, Debug)]
pub struct TowerStep {
    pub band: Band,
    /// Cell index (F), class index (L), or mark position (M) it comes from.
    pub source: usize,
    pub step: ExtensionStep,
}

/// The algebra whose points are the curves tropicalizing to a given
/// marked curve, presented as a chain of monogenic extensions of the
/// ground field in three bands.
///
/// The F-band adjoins, per vertex in completion order, the choices of
/// vertex coefficients: a root count of |Δ'| divided by the lengths of
/// the two sides known first. The L-band adjoins one deformation pattern
/// per class of length at least 2: an odd length allows a rational
/// normal form (radicand 1), an even length leaves a quadratic class of
/// the leading coefficients behind, kept here as an opaque atom. The
/// M-band adjoins one root per mark, cutting the curves down to those
/// through the marked points. Radicands beyond these degrees are opaque
/// atoms: they name coefficients of curves that are never solved for,
/// and the final trace must eliminate them.
#[derive(Clone, Debug)]
pub struct ExtensionTower {
    pub sequence: MarkedGraphSequence,
    /// Adjoin order: F-band, then L-band, then M-band.
    pub steps: Vec<TowerStep>,
    /// Degree of the F-band over the ground field.
    pub dim_f: u128,
    /// Degree of the L-band over F.
    pub dim_l: u128,
    /// Degree of the M-band over L.
    pub dim_m: u128,
    /// Total degree; equals the product of the triangle double areas.
    pub dim: u128,
}

impl ExtensionTower {
    /// The steps as `band degree radicand` lines, in adjoin order.
    pub fn report_lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| format!("{} {} {}", s.band, s.step.degree, s.step.radicand))
            .collect()
    }
}

/// Builds the extension tower over a marked curve.
///
/// Every dimension must come out integral: the double area of each
/// triangle is divisible by the product of its two prior side lengths,
/// and the closed product formula for the F-band degree must match the
/// step-by-step product. A failure means the marking does not determine
/// the curve the way a generic configuration would.
pub fn build_tower(curve: &MarkedSubdivision) -> Result<ExtensionTower, TowerError> {
    let sequence = build_graph_sequence(curve)?;
    let s = curve.subdivision();
    let classes = s.extended_classes();
    let mut steps = Vec::new();

    let mut dim_f: u128 = 1;
    for (k, completion) in sequence.completions.iter().enumerate() {
        let area = s.cells()[completion.cell].double_area() as u64;
        let known = classes[completion.priors[0]].length * classes[completion.priors[1]].length;
        if area % known != 0 {
            return Err(TowerError::InconsistentMarking(format!(
                "cell {} has double area {area}, not a multiple of its two known side \
                 lengths ({known})",
                completion.cell
            )));
        }
        let degree = (area / known) as u32;
        dim_f *= u128::from(degree);
        steps.push(TowerStep {
            band: Band::F,
            source: completion.cell,
            step: ExtensionStep::new(
                degree,
                SquareClass::atom(format!("c{}", k + 1)),
                format!("b{}", k + 1),
            ),
        });
    }

    // Closed form of the same degree: the product of all double areas,
    // divided once by every class length and once more by every marked
    // class length. A marked class is prior at both of its ends and an
    // unmarked one at exactly one, so the step degrees telescope to this.
    let numerator: u128 = s
        .cells()
        .iter()
        .enumerate()
        .filter(|(idx, _)| s.cell_kind(*idx) == CellKind::Triangle)
        .map(|(_, cell)| cell.double_area() as u128)
        .product();
    let denominator: u128 = classes.iter().map(|c| u128::from(c.length)).product::<u128>()
        * sequence.marked.iter().map(|&c| u128::from(classes[c].length)).product::<u128>();
    if numerator % denominator != 0 {
        return Err(TowerError::InconsistentMarking(format!(
            "vertex coefficient count {numerator}/{denominator} is not integral"
        )));
    }
    assert_eq!(
        dim_f,
        numerator / denominator,
        "step degrees must telescope to the closed product formula"
    );

    let mut dim_l: u128 = 1;
    let mut l_count = 0;
    for (idx, class) in classes.iter().enumerate() {
        dim_l *= u128::from(class.length);
        if class.length < 2 {
            continue;
        }
        l_count += 1;
        let radicand = if class.length % 2 == 1 {
            SquareClass::one()
        } else {
            SquareClass::atom(format!("ac{l_count}"))
        };
        steps.push(TowerStep {
            band: Band::L,
            source: idx,
            step: ExtensionStep::new(class.length as u32, radicand, format!("u{l_count}")),
        });
    }

    let mut dim_m: u128 = 1;
    for (i, &class) in sequence.marked.iter().enumerate() {
        let length = classes[class].length;
        dim_m *= u128::from(length);
        steps.push(TowerStep {
            band: Band::M,
            source: i,
            step: ExtensionStep::new(
                length as u32,
                SquareClass::atom(format!("d{}", i + 1)),
                format!("w{}", i + 1),
            ),
        });
    }

    let dim = dim_f * dim_l * dim_m;
    assert_eq!(dim, numerator, "the tower degree telescopes to the product of double areas");
    Ok(ExtensionTower { sequence, steps, dim_f, dim_l, dim_m, dim })
}
