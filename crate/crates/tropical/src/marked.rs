use crate::subdivision::{DualSubdivision, Edge, UnionFind};
use crate::TropicalError;
use lattice::{LatticePolygon, Point};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A dual subdivision together with a choice of marked edges, one per
/// point condition. Marks must be edges of the subdivision and must lie
/// in pairwise-distinct extended classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MarkedWire", into = "MarkedWire")]
pub struct MarkedSubdivision {
    subdivision: DualSubdivision,
    marks: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct MarkedWire {
    cells: Vec<LatticePolygon>,
    marks: Vec<Edge>,
}

impl From<MarkedSubdivision> for MarkedWire {
    fn from(m: MarkedSubdivision) -> Self {
        MarkedWire {
            cells: m.subdivision.cells().to_vec(),
            marks: m.marks,
        }
    }
}

impl TryFrom<MarkedWire> for MarkedSubdivision {
    type Error = TropicalError;

    fn try_from(w: MarkedWire) -> Result<Self, Self::Error> {
        let subdivision = DualSubdivision::from_cells(w.cells)?;
        MarkedSubdivision::new(subdivision, w.marks)
    }
}

impl MarkedSubdivision {
    pub fn new(subdivision: DualSubdivision, marks: Vec<Edge>) -> Result<Self, TropicalError> {
        let mut seen_classes = Vec::new();
        for mark in &marks {
            let class = subdivision.class_index(*mark).ok_or_else(|| {
                let (a, b) = mark.endpoints();
                TropicalError::UnknownEdge(a, b)
            })?;
            if seen_classes.contains(&class) {
                let (a, b) = mark.endpoints();
                return Err(TropicalError::SharedClass(a, b));
            }
            seen_classes.push(class);
        }
        Ok(MarkedSubdivision { subdivision, marks })
    }

    pub fn subdivision(&self) -> &DualSubdivision {
        &self.subdivision
    }

    pub fn marks(&self) -> &[Edge] {
        &self.marks
    }

    pub fn n(&self) -> usize {
        self.marks.len()
    }

    /// The union of the marked extended classes, viewed as a subgraph of
    /// the subdivision's 1-skeleton with each class acting as a single
    /// connected unit: true when that subgraph is connected and every cell
    /// vertex of the subdivision is an endpoint of some member segment.
    pub fn marks_span(&self) -> bool {
        let s = &self.subdivision;
        let classes = s.extended_classes();
        let marked: Vec<usize> = self
            .marks
            .iter()
            .map(|m| s.class_index(*m).expect("marks are validated edges"))
            .collect();
        let mut verts: BTreeMap<Point, usize> = BTreeMap::new();
        for cell in s.cells() {
            for &v in cell.vertices() {
                let next = verts.len();
                verts.entry(v).or_insert(next);
            }
        }
        let mut covered = vec![false; verts.len()];
        let mut uf = UnionFind::new(verts.len() + marked.len());
        for (k, &ci) in marked.iter().enumerate() {
            for e in &classes[ci].edges {
                let (a, b) = e.endpoints();
                for p in [a, b] {
                    let vi = verts[&p];
                    covered[vi] = true;
                    uf.union(vi, verts.len() + k);
                }
            }
        }
        if covered.iter().any(|c| !c) {
            return false;
        }
        let roots: BTreeSet<usize> = (0..marked.len()).map(|k| uf.find(verts.len() + k)).collect();
        roots.len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice::Point;

    fn two_triangles() -> DualSubdivision {
        let cells = vec![
            LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(0, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(1, 0), Point(1, 1), Point(0, 1)]).unwrap(),
        ];
        DualSubdivision::from_cells(cells).unwrap()
    }

    #[test]
    fn accepts_distinct_classes() {
        let s = two_triangles();
        let marks = vec![
            Edge::new(Point(0, 0), Point(1, 0)).unwrap(),
            Edge::new(Point(1, 0), Point(0, 1)).unwrap(),
        ];
        let m = MarkedSubdivision::new(s, marks).unwrap();
        assert_eq!(m.n(), 2);
    }

    #[test]
    fn rejects_unknown_edge() {
        let s = two_triangles();
        let marks = vec![Edge::new(Point(0, 0), Point(1, 1)).unwrap()];
        assert!(matches!(
            MarkedSubdivision::new(s, marks),
            Err(TropicalError::UnknownEdge(..))
        ));
    }

    #[test]
    fn spanning_needs_every_vertex_and_one_piece() {
        let s = two_triangles();
        let e = |a: Point, b: Point| Edge::new(a, b).unwrap();
        // Shared edge alone misses (0,0) and (1,1).
        let m = MarkedSubdivision::new(s.clone(), vec![e(Point(1, 0), Point(0, 1))]).unwrap();
        assert!(!m.marks_span());
        // Two opposite outer edges cover all four vertices but fall in
        // two pieces.
        let m = MarkedSubdivision::new(
            s.clone(),
            vec![e(Point(0, 0), Point(1, 0)), e(Point(0, 1), Point(1, 1))],
        )
        .unwrap();
        assert!(!m.marks_span());
        // The shared edge joins them.
        let m = MarkedSubdivision::new(
            s,
            vec![
                e(Point(0, 0), Point(1, 0)),
                e(Point(0, 1), Point(1, 1)),
                e(Point(1, 0), Point(0, 1)),
            ],
        )
        .unwrap();
        assert!(m.marks_span());
    }

    #[test]
    fn one_mark_spans_through_a_parallelogram_chain() {
        // Two side-by-side unit squares: one marked end edge extends
        // through both, reaching all six vertices in one unit.
        let cells = vec![
            LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(1, 0), Point(2, 0), Point(2, 1), Point(1, 1)]).unwrap(),
        ];
        let s = DualSubdivision::from_cells(cells).unwrap();
        let marks = vec![Edge::new(Point(0, 0), Point(0, 1)).unwrap()];
        let m = MarkedSubdivision::new(s, marks).unwrap();
        assert!(m.marks_span());
    }

    #[test]
    fn rejects_two_marks_in_one_class() {
        // In a single parallelogram cell, opposite edges share a class.
        let cells = vec![LatticePolygon::new(vec![
            Point(0, 0),
            Point(1, 0),
            Point(1, 1),
            Point(0, 1),
        ])
        .unwrap()];
        let s = DualSubdivision::from_cells(cells).unwrap();
        let marks = vec![
            Edge::new(Point(0, 0), Point(1, 0)).unwrap(),
            Edge::new(Point(0, 1), Point(1, 1)).unwrap(),
        ];
        assert!(matches!(
            MarkedSubdivision::new(s, marks),
            Err(TropicalError::SharedClass(..))
        ));
    }
}
