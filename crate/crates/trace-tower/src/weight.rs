use crate::tower::{build_tower, Band, ExtensionTower};
use crate::TowerError;
use gw_core::{trace_form, GWForm, SquareClass};
use tropical::{curve_multiplicities, CellKind, MarkedSubdivision};

/// The quadratic weight of the curve over the top of the tower, as a
/// single rank-1 class: per triangle a sign for each interior lattice
/// point and a factor |Δ'| when the double area is odd (an even double
/// area enters to an even power, a square), and per even-length class
/// the negated deformation-pattern generator.
pub fn global_weight(curve: &MarkedSubdivision, tower: &ExtensionTower) -> GWForm {
    let s = curve.subdivision();
    let mut class = SquareClass::one();
    for (idx, cell) in s.cells().iter().enumerate() {
        if s.cell_kind(idx) != CellKind::Triangle {
            continue;
        }
        if cell.interior_points().len() % 2 == 1 {
            class = class.neg();
        }
        let area = cell.double_area();
        if area % 2 == 1 {
            class = class.mul_int(area).expect("double area is positive");
        }
    }
    for step in &tower.steps {
        if step.band == Band::L && step.step.degree % 2 == 0 {
            class = class.mul(&SquareClass::atom(step.step.generator.clone())).neg();
        }
    }
    GWForm::from_class(class)
}

/// Traces a form over the top of the tower down to the ground field,
/// peeling the bands in reverse adjoin order. Opaque radicand atoms may
/// surface along the way (an even step traced without its generator
/// keeps its radicand), but every one of them is created alongside an
/// even-class generator that a later step collapses into hyperbolics, so
/// a symbolic atom in the result is a hard error.
pub fn trace_to_base(weight: &GWForm, tower: &ExtensionTower) -> Result<GWForm, TowerError> {
    let mut form = weight.clone();
    for tower_step in tower.steps.iter().rev() {
        form = trace_form(&tower_step.step, &form);
    }
    for (class, _) in form.classes() {
        if !class.is_rational() {
            return Err(TowerError::TraceResidue(format!(
                "class {class} survives the full trace"
            )));
        }
    }
    debug_assert_eq!(
        u128::from(form.rank()),
        tower.dim * u128::from(weight.rank()),
        "each step multiplies the rank by its degree"
    );
    // Rank and Witt image determine the form: splitting the hyperbolic
    // part off and rebuilding from the rank deficit must be the identity.
    let witt = form.witt_image();
    debug_assert_eq!(
        witt.clone() + GWForm::hyperbolic((form.rank() - witt.rank()) / 2),
        form,
        "the form is its Witt image plus hyperbolics"
    );
    Ok(form)
}

/// A full pass over one curve: tower, weight, trace, and the comparison
/// against the product of the quadratic vertex multiplicities.
#[derive(Clone, Debug)]
pub struct TraceReport {
    pub tower: ExtensionTower,
    pub weight: GWForm,
    pub traced: GWForm,
    /// Product of the quadratic vertex multiplicities.
    pub expected: GWForm,
    pub matches: bool,
}

/// Builds the tower over a marked curve, traces its weight to the ground
/// field, and compares against the vertex-multiplicity product.
pub fn trace_report(curve: &MarkedSubdivision) -> Result<TraceReport, TowerError> {
    let tower = build_tower(curve)?;
    let weight = global_weight(curve, &tower);
    let traced = trace_to_base(&weight, &tower)?;
    let expected = curve_multiplicities(curve.subdivision())
        .expect("simple subdivisions are nodal")
        .quadratic;
    let matches = traced == expected;
    Ok(TraceReport { tower, weight, traced, expected, matches })
}
