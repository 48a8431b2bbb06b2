use crate::subdivision::{CellKind, DualSubdivision};
use crate::TropicalError;
use gw_core::{GWForm, SquareClass};
use lattice::{lattice_length, LatticeError, LatticePolygon};

/// The complex, real (Welschinger), and quadratically enriched
/// multiplicities of a vertex or curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicities {
    pub complex: u64,
    pub real: i64,
    pub quadratic: GWForm,
}

fn triangle_edge_lengths(tri: &LatticePolygon) -> [u64; 3] {
    let mut out = [0u64; 3];
    for (i, slot) in out.iter_mut().enumerate() {
        let (p, q) = tri.edge(i);
        *slot = lattice_length(p, q).expect("validated polygon");
    }
    out
}

/// Multiplicities of the trivalent curve vertex dual to a lattice
/// triangle: complex = double area; real = (−1)^interior when all three
/// edges have odd lattice length, 0 otherwise; quadratic =
/// ⟨(−1)^interior · |σ||σ'||σ''|⟩ + (area−1)/2·h in the all-odd case and
/// (area/2)·h otherwise.
pub fn vertex_multiplicities(tri: &LatticePolygon) -> Result<Multiplicities, TropicalError> {
    if tri.vertices().len() != 3 {
        return Err(LatticeError::NotATriangle(tri.vertices().len()).into());
    }
    let area = tri.double_area() as u64;
    let lengths = triangle_edge_lengths(tri);
    let interior = tri.interior_points().len() as u64;
    let all_odd = lengths.iter().all(|l| l % 2 == 1);
    Ok(if all_odd {
        // Pick: area = 2·interior + Σlengths − 2, so odd edges force 2∤area.
        assert_eq!(area % 2, 1, "odd edges force odd double area");
        let sign = if interior % 2 == 1 { -1i64 } else { 1 };
        let product: u64 = lengths.iter().product();
        let class = SquareClass::of_int(sign * product as i64).expect("nonzero");
        Multiplicities {
            complex: area,
            real: sign,
            quadratic: GWForm::from_class(class) + GWForm::hyperbolic((area - 1) / 2),
        }
    } else {
        assert_eq!(area % 2, 0, "an even edge forces even double area");
        Multiplicities {
            complex: area,
            real: 0,
            quadratic: GWForm::hyperbolic(area / 2),
        }
    })
}

/// Product of the vertex multiplicities over all triangles of a nodal
/// subdivision (parallelograms contribute trivially). On simple
/// subdivisions the quadratic product provably collapses to a closed
/// form — (Π area / 2)·h when some triangle has an even edge, and
/// ⟨(−1)^{total interior}⟩ + (Π area − 1)/2·h otherwise — which is
/// recomputed and asserted here.
pub fn curve_multiplicities(s: &DualSubdivision) -> Result<Multiplicities, TropicalError> {
    if let Some(bad) = (0..s.cells().len()).find(|i| s.cell_kind(*i) == CellKind::Other) {
        return Err(TropicalError::NotNodal(bad));
    }
    let mut complex: u64 = 1;
    let mut real: i64 = 1;
    let mut product = GWForm::one();
    let mut any_even_edge = false;
    let mut interior_total: u64 = 0;
    for (_, tri) in s.triangles() {
        let m = vertex_multiplicities(tri)?;
        complex *= m.complex;
        real *= m.real;
        product = &product * &m.quadratic;
        interior_total += tri.interior_points().len() as u64;
        any_even_edge |= triangle_edge_lengths(tri).iter().any(|l| l % 2 == 0);
    }
    if s.is_simple() {
        let closed_form = if any_even_edge {
            GWForm::hyperbolic(complex / 2)
        } else {
            let sign = if interior_total % 2 == 1 {
                SquareClass::minus_one()
            } else {
                SquareClass::one()
            };
            GWForm::from_class(sign) + GWForm::hyperbolic((complex - 1) / 2)
        };
        assert_eq!(
            product, closed_form,
            "vertex product reduces to the closed form on simple subdivisions"
        );
    }
    Ok(Multiplicities {
        complex,
        real,
        quadratic: product,
    })
}
