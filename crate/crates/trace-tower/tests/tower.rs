use gw_core::GWForm;
use lattice::{LatticePolygon, Point};
use trace_tower::{build_tower, global_weight, trace_report, trace_to_base, Band};
use tropical::{DualSubdivision, Edge, MarkedSubdivision};

fn cell(vertices: &[(i64, i64)]) -> LatticePolygon {
    LatticePolygon::new(vertices.iter().map(|&(x, y)| Point(x, y)).collect()).unwrap()
}

fn curve(cells: &[&[(i64, i64)]], marks: &[((i64, i64), (i64, i64))]) -> MarkedSubdivision {
    let s = DualSubdivision::from_cells(cells.iter().map(|c| cell(c)).collect()).unwrap();
    let marks = marks
        .iter()
        .map(|&(a, b)| Edge::new(Point(a.0, a.1), Point(b.0, b.1)).unwrap())
        .collect();
    MarkedSubdivision::new(s, marks).unwrap()
}

fn degrees(tower: &trace_tower::ExtensionTower, band: Band) -> Vec<u32> {
    tower
        .steps
        .iter()
        .filter(|s| s.band == band)
        .map(|s| s.step.degree)
        .collect()
}

#[test]
fn an_all_unimodular_curve_has_a_trivial_tower() {
    let m = curve(
        &[
            &[(0, 0), (1, 0), (0, 1)],
            &[(1, 0), (2, 0), (0, 1)],
            &[(2, 0), (3, 0), (0, 1)],
        ],
        &[
            ((0, 0), (0, 1)),
            ((0, 0), (1, 0)),
            ((1, 0), (2, 0)),
            ((2, 0), (3, 0)),
        ],
    );
    let tower = build_tower(&m).unwrap();
    assert_eq!(degrees(&tower, Band::F), vec![1, 1, 1]);
    assert_eq!(degrees(&tower, Band::L), Vec::<u32>::new());
    assert_eq!(degrees(&tower, Band::M), vec![1, 1, 1, 1]);
    assert_eq!((tower.dim_f, tower.dim_l, tower.dim_m, tower.dim), (1, 1, 1, 1));
    let weight = global_weight(&m, &tower);
    assert_eq!(weight, GWForm::one());
    assert_eq!(trace_to_base(&weight, &tower).unwrap(), GWForm::one());
}

#[test]
fn an_even_interior_edge_splits_off_a_quadratic_pattern() {
    // Two vertices joined by a marked edge of lattice length 2; both
    // triangles have double area 2.
    let m = curve(
        &[&[(0, 0), (1, 0), (2, 2)], &[(0, 0), (2, 2), (0, 1)]],
        &[((0, 0), (2, 2)), ((0, 0), (1, 0)), ((0, 0), (0, 1))],
    );
    let tower = build_tower(&m).unwrap();
    assert_eq!(
        tower.report_lines(),
        vec!["F 1 <c1>", "F 1 <c2>", "L 2 <ac1>", "M 2 <d1>", "M 1 <d2>", "M 1 <d3>"],
    );
    assert_eq!((tower.dim_f, tower.dim_l, tower.dim_m, tower.dim), (1, 2, 2, 4));
    assert_eq!(tower.sequence.steps(), 1);

    let weight = global_weight(&m, &tower);
    assert_eq!(weight.to_string(), "<-u1>");
    // The trace through the mark's step splits the class in two, and the
    // pattern's step collapses both into hyperbolic planes.
    let traced = trace_to_base(&weight, &tower).unwrap();
    assert_eq!(traced, GWForm::hyperbolic(2));
    assert_eq!(traced.rank(), 4);

    let report = trace_report(&m).unwrap();
    assert!(report.matches);
    assert_eq!(report.expected, GWForm::hyperbolic(2));
}

#[test]
fn an_unmarked_long_edge_is_adjoined_once_and_divided_once() {
    // The interior edge has length 3 and no mark: the first vertex pays
    // for it in full, the second divides it back out.
    let m = curve(
        &[&[(0, 0), (3, 0), (1, 1)], &[(0, 0), (1, -1), (3, 0)]],
        &[((3, 0), (1, 1)), ((1, 1), (0, 0)), ((0, 0), (1, -1))],
    );
    let tower = build_tower(&m).unwrap();
    assert_eq!(degrees(&tower, Band::F), vec![3, 1]);
    assert_eq!(degrees(&tower, Band::L), vec![3]);
    assert_eq!(degrees(&tower, Band::M), vec![1, 1, 1]);
    assert_eq!((tower.dim_f, tower.dim_l, tower.dim_m, tower.dim), (3, 3, 1, 9));
    let l_step = tower.steps.iter().find(|s| s.band == Band::L).unwrap();
    assert_eq!(l_step.step.radicand.to_string(), "<1>");

    let report = trace_report(&m).unwrap();
    assert_eq!(report.weight, GWForm::one());
    assert_eq!(report.traced, GWForm::one() + GWForm::hyperbolic(4));
    assert!(report.matches);
}

#[test]
fn two_fat_vertices_trace_to_the_frozen_class() {
    // Two all-odd triangles of double area 3, one interior point each:
    // the traced form must be <1> + 4h of rank 9.
    let m = curve(
        &[&[(0, 0), (2, 1), (1, 2)], &[(0, 0), (1, -1), (2, 1)]],
        &[((2, 1), (1, 2)), ((1, 2), (0, 0)), ((0, 0), (1, -1))],
    );
    let tower = build_tower(&m).unwrap();
    assert_eq!(degrees(&tower, Band::F), vec![3, 3]);
    assert_eq!(degrees(&tower, Band::L), Vec::<u32>::new());
    assert_eq!((tower.dim_f, tower.dim_l, tower.dim_m, tower.dim), (9, 1, 1, 9));

    let report = trace_report(&m).unwrap();
    assert_eq!(report.weight, GWForm::one());
    assert_eq!(report.traced, GWForm::one() + GWForm::hyperbolic(4));
    assert_eq!(report.traced.rank(), 9);
    assert!(report.matches);
}
