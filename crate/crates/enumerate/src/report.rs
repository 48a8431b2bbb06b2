use crate::complete::complete_path;
use crate::path::{enumerate_paths_ordered, LatticePath, SweepOrder};
use gw_core::{GWForm, SquareClass};
use lattice::{LatticePolygon, Point};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use tropical::{curve_multiplicities, MarkedSubdivision};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("genus {genus} not in 0..={max} for this polygon")]
    GenusOutOfRange { genus: i64, max: i64 },
}

/// One counted curve: its marked dual subdivision and the three
/// multiplicities contributed to the totals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    #[serde(flatten)]
    pub curve: MarkedSubdivision,
    pub mult_c: u64,
    pub mult_r: i64,
    pub mult_a1: GWForm,
}

/// Full enumeration result for one (polygon, genus) pair. Completions
/// whose curve genus misses the request, whose curve is disconnected
/// (splits into components through its crossings), or whose subdivision
/// is not simple (a boundary edge hides a lattice point) are excluded
/// from the totals and tallied in the three counters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub polygon: LatticePolygon,
    pub genus: i64,
    pub n: usize,
    pub curves: Vec<CurveRecord>,
    #[serde(rename = "N")]
    pub complex_total: u64,
    #[serde(rename = "W")]
    pub real_total: i64,
    #[serde(rename = "NA1")]
    pub quadratic_total: GWForm,
    pub genus_mismatch: usize,
    pub reducible: usize,
    pub non_simple: usize,
}

fn point_count(polygon: &LatticePolygon, genus: i64) -> Result<usize, EnumerateError> {
    let max = polygon.interior_points().len() as i64;
    if genus < 0 || genus > max {
        return Err(EnumerateError::GenusOutOfRange { genus, max });
    }
    Ok((polygon.boundary_count() as i64 - 1 + genus) as usize)
}

#[derive(Default)]
struct Tally {
    records: Vec<CurveRecord>,
    genus_mismatch: usize,
    reducible: usize,
    non_simple: usize,
}

fn survey_path(polygon: &LatticePolygon, genus: i64, path: &LatticePath) -> Tally {
    let mut tally = Tally::default();
    for marked in complete_path(path, polygon) {
        let s = marked.subdivision();
        let found = s.genus().expect("completions are nodal");
        if found != genus {
            tally.genus_mismatch += 1;
            continue;
        }
        if s.curve_components() != 1 {
            tally.reducible += 1;
            continue;
        }
        if !s.is_simple() {
            tally.non_simple += 1;
            continue;
        }
        let m = curve_multiplicities(s).expect("completions are nodal");
        tally.records.push(CurveRecord {
            curve: marked,
            mult_c: m.complex,
            mult_r: m.real,
            mult_a1: m.quadratic,
        });
    }
    tally
}

type RecordKey = (Vec<Vec<Point>>, Vec<(Point, Point)>);

fn record_key(r: &CurveRecord) -> RecordKey {
    (
        r.curve
            .subdivision()
            .cells()
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect(),
        r.curve.marks().iter().map(|e| e.endpoints()).collect(),
    )
}

fn assemble(polygon: &LatticePolygon, genus: i64, n: usize, parts: Vec<Tally>) -> InvariantReport {
    let mut curves = Vec::new();
    let (mut genus_mismatch, mut reducible, mut non_simple) = (0, 0, 0);
    for part in parts {
        curves.extend(part.records);
        genus_mismatch += part.genus_mismatch;
        reducible += part.reducible;
        non_simple += part.non_simple;
    }
    curves.sort_by_key(record_key);
    debug_assert!(
        curves.windows(2).all(|w| record_key(&w[0]) != record_key(&w[1])),
        "each marked subdivision arises from exactly one move sequence"
    );

    let complex_total: u64 = curves.iter().map(|r| r.mult_c).sum();
    let real_total: i64 = curves.iter().map(|r| r.mult_r).sum();
    let quadratic_total = curves
        .iter()
        .fold(GWForm::zero(), |acc, r| acc + r.mult_a1.clone());

    assert_eq!(quadratic_total.rank(), complex_total);
    assert_eq!(
        quadratic_total.signature().expect("rational classes only"),
        real_total
    );
    // The quadratic count collapses to W·<1> plus (N−W)/2 hyperbolic
    // summands; N − W is even because each curve's complex and real
    // multiplicities share a parity.
    let w = u64::try_from(real_total).expect("nonnegative real count");
    assert!(w <= complex_total && (complex_total - w) % 2 == 0);
    let collapsed = GWForm::from_class(SquareClass::one()).times(w)
        + GWForm::hyperbolic((complex_total - w) / 2);
    assert_eq!(quadratic_total, collapsed);

    InvariantReport {
        polygon: polygon.clone(),
        genus,
        n,
        curves,
        complex_total,
        real_total,
        quadratic_total,
        genus_mismatch,
        reducible,
        non_simple,
    }
}

/// Enumerates, completes, filters, and aggregates. Uses the default
/// sweep order; with the `parallel` feature the paths are surveyed
/// concurrently (the merge is a sum, so order cannot matter).
pub fn invariants(polygon: &LatticePolygon, genus: i64) -> Result<InvariantReport, EnumerateError> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let n = point_count(polygon, genus)?;
        let paths = enumerate_paths_ordered(polygon, n, SweepOrder::ColumnMajor);
        let parts: Vec<_> = paths
            .par_iter()
            .map(|p| survey_path(polygon, genus, p))
            .collect();
        Ok(assemble(polygon, genus, n, parts))
    }
    #[cfg(not(feature = "parallel"))]
    {
        invariants_seq(polygon, genus)
    }
}

/// Single-threaded enumeration, independent of the `parallel` feature.
pub fn invariants_seq(
    polygon: &LatticePolygon,
    genus: i64,
) -> Result<InvariantReport, EnumerateError> {
    invariants_ordered(polygon, genus, SweepOrder::ColumnMajor)
}

/// Single-threaded enumeration under an explicit sweep order; the totals
/// must agree across orders.
pub fn invariants_ordered(
    polygon: &LatticePolygon,
    genus: i64,
    order: SweepOrder,
) -> Result<InvariantReport, EnumerateError> {
    let n = point_count(polygon, genus)?;
    let paths = enumerate_paths_ordered(polygon, n, order);
    let parts: Vec<_> = paths
        .iter()
        .map(|p| survey_path(polygon, genus, p))
        .collect();
    Ok(assemble(polygon, genus, n, parts))
}
