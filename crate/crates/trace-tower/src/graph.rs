use tropical::{CellKind, DualSubdivision, Edge};

/// The curve as an abstract graph: vertices are the triangle cells of a
/// nodal subdivision, edges are the extended classes. Parallelogram
/// cells are crossings of two edges, invisible to the graph.
pub(crate) struct CurveGraph {
    /// Triangle cell indices, ascending.
    pub triangles: Vec<usize>,
    /// Per triangle, the classes of its three sides. Sides of a triangle
    /// are pairwise non-parallel, so the three classes are distinct.
    pub sides: Vec<[usize; 3]>,
    /// Per extended class, the vertices it ends at, as positions into
    /// [`Self::triangles`]. A class is a chain of parallel edges through
    /// crossings with exactly two ends; ends on the polygon boundary are
    /// dropped, so a ray of the curve has one entry and a class crossing
    /// the whole polygon has none.
    pub ends: Vec<Vec<usize>>,
}

impl CurveGraph {
    /// Builds the graph of a nodal subdivision.
    pub fn new(s: &DualSubdivision) -> Self {
        let triangles: Vec<usize> = s.triangles().map(|(idx, _)| idx).collect();
        let vertex_of = |cell: usize| {
            triangles.binary_search(&cell).expect("triangle cells index the graph")
        };
        let sides: Vec<[usize; 3]> = triangles
            .iter()
            .map(|&idx| {
                let cell = &s.cells()[idx];
                let mut out = [0usize; 3];
                for (i, slot) in out.iter_mut().enumerate() {
                    let (p, q) = cell.edge(i);
                    let edge = Edge::new(p, q).expect("cell edges are proper segments");
                    *slot = s.class_index(edge).expect("cell edges are subdivision edges");
                }
                debug_assert!(out[0] != out[1] && out[1] != out[2] && out[0] != out[2]);
                out
            })
            .collect();
        let ends: Vec<Vec<usize>> = s
            .extended_classes()
            .iter()
            .map(|class| {
                let mut at = Vec::new();
                let mut boundary_ends = 0;
                for edge in &class.edges {
                    let cells = s.cells_of(*edge);
                    if cells.len() == 1 {
                        boundary_ends += 1;
                    }
                    for &cell in cells {
                        if s.cell_kind(cell) == CellKind::Triangle {
                            at.push(vertex_of(cell));
                        }
                    }
                }
                debug_assert_eq!(
                    at.len() + boundary_ends,
                    2,
                    "a class chain has two ends, each a triangle or a boundary edge"
                );
                at
            })
            .collect();
        CurveGraph { triangles, sides, ends }
    }
}
