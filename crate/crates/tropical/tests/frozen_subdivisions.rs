use gw_core::{GWForm, SquareClass};
use lattice::{LatticePolygon, Point};
use tropical::{
    curve_multiplicities, curve_of, dual_subdivision, CellKind, DualSubdivision,
    TropicalPolynomial,
};

fn poly(entries: &[(i64, i64, i64)]) -> TropicalPolynomial {
    let text = entries
        .iter()
        .map(|(i, j, a)| format!("{i} {j} {a}"))
        .collect::<Vec<_>>()
        .join("\n");
    TropicalPolynomial::parse(&text).unwrap()
}

fn triangle(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> LatticePolygon {
    LatticePolygon::new(vec![Point(a.0, a.1), Point(b.0, b.1), Point(c.0, c.1)]).unwrap()
}

/// Degree-d support with heights -(i² + ij + j²), a strictly convex lift.
fn convex_heights(d: i64) -> TropicalPolynomial {
    let mut entries = Vec::new();
    for i in 0..=d {
        for j in 0..=(d - i) {
            entries.push((i, j, -(i * i + i * j + j * j)));
        }
    }
    poly(&entries)
}

#[test]
fn strictly_convex_conic_heights_triangulate_finely() {
    let s = dual_subdivision(&convex_heights(2));
    assert_eq!(s.cells().len(), 4);
    assert!(s
        .cells()
        .iter()
        .all(|c| c.vertices().len() == 3 && c.double_area() == 1));
    let expected: Vec<LatticePolygon> = vec![
        triangle((0, 0), (1, 0), (0, 1)),
        triangle((1, 0), (2, 0), (1, 1)),
        triangle((0, 1), (1, 0), (1, 1)),
        triangle((0, 1), (1, 1), (0, 2)),
    ];
    for cell in &expected {
        assert!(s.cells().contains(cell), "missing cell {cell:?}");
    }
    assert!(s.is_nodal() && s.is_simple());
    assert_eq!(s.genus().unwrap(), 0);

    let m = curve_multiplicities(&s).unwrap();
    assert_eq!(m.complex, 1);
    assert_eq!(m.real, 1);
    assert_eq!(m.quadratic, GWForm::one());
}

#[test]
fn strictly_convex_cubic_heights_give_the_honeycomb() {
    let s = dual_subdivision(&convex_heights(3));
    assert_eq!(s.cells().len(), 9);
    assert!(s
        .cells()
        .iter()
        .all(|c| c.vertices().len() == 3 && c.double_area() == 1));
    assert!(s.is_simple());
    assert_eq!(s.genus().unwrap(), 1);

    let curve = curve_of(&convex_heights(3));
    assert_eq!(curve.genus().unwrap(), 1);
    assert_eq!(curve.positions().len(), 9);
    // 9 boundary dual edges, 9 interior ones.
    assert_eq!(curve.rays().len(), 9);
    assert_eq!(curve.edges().len(), 9);
    assert!(curve.edges().iter().all(|e| e.weight == 1));
}

#[test]
fn merging_one_square_kills_the_honeycomb_cycle() {
    // Unimodular triangulation of the degree-3 polygon, with the two
    // triangles of the square at (1,0) merged into a parallelogram:
    // b₁ = 1 still, minus one 4-valent vertex.
    let cells = vec![
        LatticePolygon::new(vec![Point(1, 0), Point(2, 0), Point(2, 1), Point(1, 1)]).unwrap(),
        triangle((0, 0), (1, 0), (0, 1)),
        triangle((1, 0), (1, 1), (0, 1)),
        triangle((2, 0), (3, 0), (2, 1)),
        triangle((0, 1), (1, 1), (0, 2)),
        triangle((1, 1), (2, 1), (1, 2)),
        triangle((1, 1), (1, 2), (0, 2)),
        triangle((0, 2), (1, 2), (0, 3)),
    ];
    let s = DualSubdivision::from_cells(cells).unwrap();
    assert_eq!(s.parallelogram_count(), 1);
    assert!(s.is_nodal() && s.is_simple());
    assert_eq!(s.genus().unwrap(), 0);

    let m = curve_multiplicities(&s).unwrap();
    assert_eq!(m.complex, 1);
    assert_eq!(m.real, 1);
    assert_eq!(m.quadratic, GWForm::one());
}

#[test]
fn odd_cubic_subdivision_with_one_fat_triangle() {
    // Seven cells: six unimodular triangles around the area-3 triangle
    // Conv{(1,0),(2,0),(0,3)}, which carries the single interior point.
    let cells = vec![
        triangle((1, 0), (2, 0), (0, 3)),
        triangle((0, 0), (1, 0), (0, 1)),
        triangle((1, 0), (0, 2), (0, 1)),
        triangle((1, 0), (0, 3), (0, 2)),
        triangle((2, 0), (3, 0), (2, 1)),
        triangle((2, 0), (2, 1), (1, 2)),
        triangle((2, 0), (1, 2), (0, 3)),
    ];
    let s = DualSubdivision::from_cells(cells).unwrap();
    assert!(s.is_nodal() && s.is_simple());
    assert_eq!(s.genus().unwrap(), 0);

    let m = curve_multiplicities(&s).unwrap();
    assert_eq!(m.complex, 3);
    assert_eq!(m.real, -1);
    let minus_one = GWForm::from_class(SquareClass::minus_one());
    assert_eq!(m.quadratic, minus_one + GWForm::hyperbolic(1));
}

#[test]
fn even_interior_edge_hyperbolizes_the_count() {
    // Two area-2 triangles sharing the length-2 edge (0,0)-(2,2).
    let cells = vec![
        triangle((0, 0), (1, 0), (2, 2)),
        triangle((0, 0), (2, 2), (0, 1)),
    ];
    let s = DualSubdivision::from_cells(cells).unwrap();
    assert!(s.is_nodal() && s.is_simple());
    assert_eq!(s.genus().unwrap(), 0);
    assert_eq!(s.cell_kind(0), CellKind::Triangle);

    let m = curve_multiplicities(&s).unwrap();
    assert_eq!(m.complex, 4);
    assert_eq!(m.real, 0);
    assert_eq!(m.quadratic, GWForm::hyperbolic(2));
}

#[test]
fn coarse_conic_cell_is_nodal_but_not_simple() {
    // Flat heights leave one area-4 triangle cell; its length-2 boundary
    // edges hide lattice points, so the subdivision is not simple.
    let f = poly(&[(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0), (0, 2, 0)]);
    let s = dual_subdivision(&f);
    assert!(s.is_nodal() && !s.is_simple());
    let m = curve_multiplicities(&s).unwrap();
    assert_eq!((m.complex, m.real), (4, 0));
    assert_eq!(m.quadratic, GWForm::hyperbolic(2));
}
