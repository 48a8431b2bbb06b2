use serde::{Deserialize, Serialize};

use crate::{GWForm, SquareClass};

/// One extension step `M = L[x]/(x^degree - radicand)` with a named generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionStep {
    pub degree: u32,
    pub radicand: SquareClass,
    pub generator: String,
}

impl ExtensionStep {
    pub fn new(degree: u32, radicand: SquareClass, generator: impl Into<String>) -> Self {
        assert!(degree >= 1, "extension degree must be positive");
        ExtensionStep { degree, radicand, generator: generator.into() }
    }
}

/// Trace of a rank-one form along `M = L[x]/(x^m - D)`.
///
/// The input class is `<c>` over M, with `c` in L when `uses_generator` is
/// false and `c·x` meant when it is true. Writing `c = m·a`, the trace form is
///
/// * `<a> + (m-1)/2 h`            for m odd, no generator,
/// * `<a> + <aD> + (m-2)/2 h`     for m even, no generator,
/// * `<aD> + (m-1)/2 h`           for m odd, with generator,
/// * `(m/2) h`                    for m even, with generator,
///
/// and `<a> = <c/m> = <c·m>` modulo squares, so everything stays exact in
/// square-class arithmetic.
pub fn trace_step(step: &ExtensionStep, c: &SquareClass, uses_generator: bool) -> GWForm {
    let m = step.degree as u64;
    let cm = c.mul_int(m as i64).expect("positive degree");
    match (uses_generator, m % 2) {
        (false, 1) => GWForm::from_class(cm) + GWForm::hyperbolic((m - 1) / 2),
        (false, 0) => {
            GWForm::from_classes([cm.clone(), cm.mul(&step.radicand)])
                + GWForm::hyperbolic((m - 2) / 2)
        }
        (true, 1) => GWForm::from_class(cm.mul(&step.radicand)) + GWForm::hyperbolic((m - 1) / 2),
        (true, 0) => GWForm::hyperbolic(m / 2),
        _ => unreachable!(),
    }
}

/// Trace of the hyperbolic form: `Tr(h) = m·h`.
pub fn trace_h(step: &ExtensionStep) -> GWForm {
    GWForm::hyperbolic(step.degree as u64)
}

/// Linear extension of `trace_step` to a full form. A class containing the
/// step's generator atom is traced as `<c·x>` with the atom stripped.
pub fn trace_form(step: &ExtensionStep, form: &GWForm) -> GWForm {
    let mut out = trace_h(step).times(form.hyper());
    for (class, mult) in form.classes() {
        let traced = match class.without_atom(&step.generator) {
            Some(stripped) => trace_step(step, &stripped, true),
            None => trace_step(step, class, false),
        };
        out = out + traced.times(mult);
    }
    out
}
