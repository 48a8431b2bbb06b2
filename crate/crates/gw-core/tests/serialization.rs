use gw_core::{GWForm, SquareClass};

#[test]
fn json_shape_matches_schema() {
    let f = GWForm::one().times(2) + GWForm::hyperbolic(2);
    let v: serde_json::Value = serde_json::to_value(&f).unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "classes": [
                {"sign": 1, "mag": 1, "atoms": []},
                {"sign": 1, "mag": 1, "atoms": []}
            ],
            "hyper": 2,
            "rank": 6,
            "signature": 2
        })
    );
}

#[test]
fn atom_forms_omit_signature() {
    let f = GWForm::from_class(SquareClass::atom("u").neg());
    let v: serde_json::Value = serde_json::to_value(&f).unwrap();
    assert!(v.get("signature").is_none());
    assert_eq!(v["classes"][0]["atoms"], serde_json::json!(["u"]));
}

#[test]
fn roundtrip_preserves_forms() {
    let samples = vec![
        GWForm::zero(),
        GWForm::hyperbolic(3),
        GWForm::one().times(240) + GWForm::hyperbolic(190),
        GWForm::from_class(SquareClass::of_int(-3).unwrap())
            + GWForm::from_class(SquareClass::atom("u")),
    ];
    for f in samples {
        let json = serde_json::to_string(&f).unwrap();
        let back: GWForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}

#[test]
fn display_examples() {
    assert_eq!(format!("{}", GWForm::zero()), "0");
    assert_eq!(format!("{}", GWForm::hyperbolic(1)), "h");
    assert_eq!(
        format!("{}", GWForm::one().times(240) + GWForm::hyperbolic(190)),
        "240<1> + 190h"
    );
    let mixed = GWForm::from_class(SquareClass::of_int(-3).unwrap()) + GWForm::hyperbolic(1);
    assert_eq!(format!("{mixed}"), "<-3> + h");
}
