use itertools::Itertools;
use lattice::{LatticePolygon, Point};

/// Total orders on lattice points realizing a generic sweep functional:
/// x − εy for an infinitesimal ε (column major), or its transpose y − εx
/// (row major). Counts must not depend on the choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepOrder {
    ColumnMajor,
    RowMajor,
}

impl SweepOrder {
    pub(crate) fn key(self, p: Point) -> (i64, i64) {
        match self {
            SweepOrder::ColumnMajor => (p.0, -p.1),
            SweepOrder::RowMajor => (p.1, -p.0),
        }
    }
}

/// A strictly sweep-increasing chain of lattice points of the polygon,
/// joining its two sweep-extremal vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    points: Vec<Point>,
}

impl LatticePath {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn step_count(&self) -> usize {
        self.points.len() - 1
    }
}

pub fn enumerate_paths(polygon: &LatticePolygon, n: usize) -> Vec<LatticePath> {
    enumerate_paths_ordered(polygon, n, SweepOrder::ColumnMajor)
}

/// All paths with exactly n steps. The sweep order is total on lattice
/// points, so the paths are exactly the (n−1)-subsets of the
/// non-extremal points, traversed in sweep order.
pub fn enumerate_paths_ordered(
    polygon: &LatticePolygon,
    n: usize,
    order: SweepOrder,
) -> Vec<LatticePath> {
    assert!(n >= 1, "a path needs at least one step");
    let mut pts = polygon.lattice_points();
    pts.sort_by_key(|p| order.key(*p));
    let first = pts[0];
    let last = *pts.last().unwrap();
    debug_assert!(
        polygon.vertices().contains(&first) && polygon.vertices().contains(&last),
        "sweep extremes of a convex polygon are vertices"
    );
    pts[1..pts.len() - 1]
        .iter()
        .copied()
        .combinations(n - 1)
        .map(|middle| {
            let mut points = Vec::with_capacity(n + 1);
            points.push(first);
            points.extend(middle);
            points.push(last);
            LatticePath { points }
        })
        .collect()
}
