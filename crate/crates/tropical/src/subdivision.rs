use crate::hull::convex_hull;
use crate::polynomial::TropicalPolynomial;
use crate::TropicalError;
use lattice::{lattice_length, LatticePolygon, Point};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Undirected lattice segment with canonically ordered endpoints.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(into = "(Point, Point)", try_from = "(Point, Point)")]
pub struct Edge {
    a: Point,
    b: Point,
}

impl Edge {
    pub fn new(p: Point, q: Point) -> Result<Self, TropicalError> {
        lattice_length(p, q)?;
        Ok(if p <= q {
            Edge { a: p, b: q }
        } else {
            Edge { a: q, b: p }
        })
    }

    pub fn endpoints(&self) -> (Point, Point) {
        (self.a, self.b)
    }

    pub fn length(&self) -> u64 {
        lattice_length(self.a, self.b).expect("endpoints are distinct")
    }

    /// Primitive step from the smaller endpoint to the larger.
    pub fn direction(&self) -> Point {
        let d = self.b - self.a;
        let g = self.length() as i64;
        Point(d.0 / g, d.1 / g)
    }
}

impl From<Edge> for (Point, Point) {
    fn from(e: Edge) -> (Point, Point) {
        (e.a, e.b)
    }
}

impl TryFrom<(Point, Point)> for Edge {
    type Error = TropicalError;

    fn try_from(pair: (Point, Point)) -> Result<Self, Self::Error> {
        Edge::new(pair.0, pair.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Triangle,
    Parallelogram,
    Other,
}

/// Edges identified across parallelograms: opposite sides of every
/// parallelogram cell belong to one class, so a class is a chain of
/// parallel translates of equal lattice length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedClass {
    pub edges: Vec<Edge>,
    pub length: u64,
    /// Some edge of the class lies on the boundary of the polygon.
    pub touches_boundary: bool,
}

/// A polyhedral subdivision of a convex lattice polygon into convex
/// lattice cells meeting edge to edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<LatticePolygon>", try_from = "Vec<LatticePolygon>")]
pub struct DualSubdivision {
    polygon: LatticePolygon,
    cells: Vec<LatticePolygon>,
    kinds: Vec<CellKind>,
    edges: Vec<Edge>,
    edge_cells: BTreeMap<Edge, Vec<usize>>,
    classes: Vec<ExtendedClass>,
    class_of: BTreeMap<Edge, usize>,
}

impl From<DualSubdivision> for Vec<LatticePolygon> {
    fn from(s: DualSubdivision) -> Vec<LatticePolygon> {
        s.cells
    }
}

impl TryFrom<Vec<LatticePolygon>> for DualSubdivision {
    type Error = TropicalError;

    fn try_from(cells: Vec<LatticePolygon>) -> Result<Self, Self::Error> {
        DualSubdivision::from_cells(cells)
    }
}

/// Rotate the vertex cycle so the smallest vertex comes first; cells then
/// compare and deduplicate independently of construction order.
fn canonical_cell(cell: &LatticePolygon) -> LatticePolygon {
    let verts = cell.vertices();
    let start = verts
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
        .unwrap();
    let rotated: Vec<Point> = (0..verts.len())
        .map(|i| verts[(start + i) % verts.len()])
        .collect();
    LatticePolygon::new(rotated).expect("rotation preserves validity")
}

fn classify(cell: &LatticePolygon) -> CellKind {
    let v = cell.vertices();
    match v.len() {
        3 => CellKind::Triangle,
        4 if v[1] - v[0] == v[2] - v[3] => CellKind::Parallelogram,
        _ => CellKind::Other,
    }
}

pub(crate) fn on_segment(p: Point, a: Point, b: Point) -> bool {
    let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
    cross == 0
        && (a.0.min(b.0)..=a.0.max(b.0)).contains(&p.0)
        && (a.1.min(b.1)..=a.1.max(b.1)).contains(&p.1)
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let root = self.find(self.0[i]);
            self.0[i] = root;
        }
        self.0[i]
    }

    pub(crate) fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        self.0[ri] = rj;
    }
}

impl DualSubdivision {
    /// Assemble and validate a subdivision from its cells. The ambient
    /// polygon is the convex hull of all cell vertices; the cells must
    /// tile it, meeting full edge to full edge.
    pub fn from_cells(cells: Vec<LatticePolygon>) -> Result<Self, TropicalError> {
        if cells.is_empty() {
            return Err(TropicalError::BadCover("no cells".into()));
        }
        let mut cells: Vec<LatticePolygon> = cells.iter().map(canonical_cell).collect();
        cells.sort_by(|a, b| a.vertices().cmp(b.vertices()));

        let all_vertices: Vec<Point> = cells
            .iter()
            .flat_map(|c| c.vertices().iter().copied())
            .collect();
        let polygon = convex_hull(&all_vertices)?;

        let area_sum: i64 = cells.iter().map(|c| c.double_area()).sum();
        if area_sum != polygon.double_area() {
            return Err(TropicalError::BadCover(format!(
                "cell areas sum to {area_sum}, hull area is {}",
                polygon.double_area()
            )));
        }

        let mut edge_cells: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (idx, cell) in cells.iter().enumerate() {
            for i in 0..cell.edge_count() {
                let (p, q) = cell.edge(i);
                edge_cells.entry(Edge::new(p, q)?).or_default().push(idx);
            }
        }
        for (edge, adjacent) in &edge_cells {
            match adjacent.len() {
                1 => {
                    let on_one_side = (0..polygon.edge_count()).any(|i| {
                        let (p, q) = polygon.edge(i);
                        on_segment(edge.a, p, q) && on_segment(edge.b, p, q)
                    });
                    if !on_one_side {
                        return Err(TropicalError::BadCover(format!(
                            "interior edge {:?}-{:?} bounds only one cell",
                            edge.a, edge.b
                        )));
                    }
                }
                2 => {
                    let on_hull = (0..polygon.edge_count()).any(|i| {
                        let (p, q) = polygon.edge(i);
                        on_segment(edge.a, p, q) && on_segment(edge.b, p, q)
                    });
                    if on_hull {
                        return Err(TropicalError::BadCover(format!(
                            "boundary edge {:?}-{:?} bounds two cells",
                            edge.a, edge.b
                        )));
                    }
                }
                n => {
                    return Err(TropicalError::BadCover(format!(
                        "edge {:?}-{:?} bounds {n} cells",
                        edge.a, edge.b
                    )));
                }
            }
        }

        let edges: Vec<Edge> = edge_cells.keys().copied().collect();
        let index: BTreeMap<Edge, usize> =
            edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let kinds: Vec<CellKind> = cells.iter().map(classify).collect();

        let mut uf = UnionFind::new(edges.len());
        for (cell, kind) in cells.iter().zip(&kinds) {
            if *kind == CellKind::Parallelogram {
                for (i, j) in [(0usize, 2usize), (1, 3)] {
                    let (p0, q0) = cell.edge(i);
                    let (p1, q1) = cell.edge(j);
                    uf.union(index[&Edge::new(p0, q0)?], index[&Edge::new(p1, q1)?]);
                }
            }
        }
        let mut grouped: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            grouped.entry(uf.find(i)).or_default().push(*e);
        }
        let mut classes = Vec::new();
        let mut class_of = BTreeMap::new();
        for (_, members) in grouped {
            let length = members[0].length();
            debug_assert!(
                members.iter().all(|e| e.length() == length),
                "parallelogram sides are translates, lengths match"
            );
            let touches_boundary = members.iter().any(|e| edge_cells[e].len() == 1);
            for e in &members {
                class_of.insert(*e, classes.len());
            }
            classes.push(ExtendedClass {
                edges: members,
                length,
                touches_boundary,
            });
        }

        Ok(DualSubdivision {
            polygon,
            cells,
            kinds,
            edges,
            edge_cells,
            classes,
            class_of,
        })
    }

    pub fn polygon(&self) -> &LatticePolygon {
        &self.polygon
    }

    pub fn cells(&self) -> &[LatticePolygon] {
        &self.cells
    }

    pub fn cell_kind(&self, idx: usize) -> CellKind {
        self.kinds[idx]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn cells_of(&self, edge: Edge) -> &[usize] {
        self.edge_cells.get(&edge).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_interior(&self, edge: Edge) -> bool {
        self.cells_of(edge).len() == 2
    }

    pub fn interior_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(|e| self.is_interior(*e))
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(|e| !self.is_interior(*e))
    }

    pub fn extended_classes(&self) -> &[ExtendedClass] {
        &self.classes
    }

    pub fn class_index(&self, edge: Edge) -> Option<usize> {
        self.class_of.get(&edge).copied()
    }

    pub fn triangles(&self) -> impl Iterator<Item = (usize, &LatticePolygon)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(i, _)| self.kinds[*i] == CellKind::Triangle)
    }

    pub fn parallelogram_count(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| **k == CellKind::Parallelogram)
            .count()
    }

    pub fn is_nodal(&self) -> bool {
        self.kinds.iter().all(|k| *k != CellKind::Other)
    }

    /// Nodal and every boundary lattice point of the polygon is a cell
    /// vertex, i.e. all dual rays have weight 1.
    pub fn is_simple(&self) -> bool {
        if !self.is_nodal() {
            return false;
        }
        let vertex_set: BTreeSet<Point> = self
            .cells
            .iter()
            .flat_map(|c| c.vertices().iter().copied())
            .collect();
        self.polygon
            .boundary_points()
            .iter()
            .all(|p| vertex_set.contains(p))
    }

    /// First Betti number of the dual graph (cells joined across interior
    /// edges) minus the number of parallelogram cells: the genus of the
    /// dual tropical curve. For a disconnected curve (see
    /// [`curve_components`](Self::curve_components)) this is the sum of the
    /// component genera minus (components − 1).
    pub fn genus(&self) -> Result<i64, TropicalError> {
        if let Some(bad) = self.kinds.iter().position(|k| *k == CellKind::Other) {
            return Err(TropicalError::NotNodal(bad));
        }
        let mut uf = UnionFind::new(self.cells.len());
        let mut interior = 0i64;
        for e in self.edges.iter() {
            let adj = &self.edge_cells[e];
            if adj.len() == 2 {
                interior += 1;
                uf.union(adj[0], adj[1]);
            }
        }
        let components = {
            let mut roots = BTreeSet::new();
            for i in 0..self.cells.len() {
                roots.insert(uf.find(i));
            }
            roots.len() as i64
        };
        let b1 = interior - self.cells.len() as i64 + components;
        Ok(b1 - self.parallelogram_count() as i64)
    }

    /// Connected components of the dual tropical curve. A parallelogram
    /// cell is a crossing of two curve edges, not a meeting point, so two
    /// edges of one extended class chain together while the transverse
    /// pair passes through unattached: components are counted on the graph
    /// whose vertices are the non-parallelogram cells and whose edges are
    /// the extended classes. An extended class touching no such cell (a
    /// line crossing everything it meets) forms a component of its own.
    pub fn curve_components(&self) -> usize {
        let n_cells = self.cells.len();
        let mut uf = UnionFind::new(n_cells + self.classes.len());
        let mut seen = vec![false; n_cells];
        for (idx, kind) in self.kinds.iter().enumerate() {
            if *kind == CellKind::Parallelogram {
                continue;
            }
            seen[idx] = true;
            let cell = &self.cells[idx];
            for i in 0..cell.edge_count() {
                let (p, q) = cell.edge(i);
                let e = Edge::new(p, q).expect("cell edges are proper segments");
                uf.union(idx, n_cells + self.class_of[&e]);
            }
        }
        let mut roots = BTreeSet::new();
        for (idx, used) in seen.iter().enumerate() {
            if *used {
                roots.insert(uf.find(idx));
            }
        }
        for c in 0..self.classes.len() {
            roots.insert(uf.find(n_cells + c));
        }
        roots.len()
    }
}

struct Lifted {
    x: i64,
    y: i64,
    z: BigInt,
}

/// Regular subdivision of the Newton polygon induced by the heights: the
/// projections of the lower facets of the lifted points (i, j, −a_ij).
pub fn dual_subdivision(f: &TropicalPolynomial) -> DualSubdivision {
    let scale: BigInt = f
        .support()
        .values()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let lifted: Vec<Lifted> = f
        .support()
        .iter()
        .map(|(p, a)| Lifted {
            x: p.0,
            y: p.1,
            z: -(a.numer() * (&scale / a.denom())),
        })
        .collect();

    let mut cells: BTreeSet<Vec<Point>> = BTreeSet::new();
    let n = lifted.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if let Some(cell) = lower_facet(&lifted, i, j, k) {
                    cells.insert(cell);
                }
            }
        }
    }

    let cells: Vec<LatticePolygon> = cells
        .into_iter()
        .map(|verts| LatticePolygon::new(verts).expect("facet hulls are convex"))
        .collect();
    let subdivision =
        DualSubdivision::from_cells(cells).expect("lower facets tile the Newton polygon");
    assert_eq!(
        subdivision.polygon(),
        f.newton_polygon(),
        "facets cover the Newton polygon"
    );
    subdivision
}

/// The lower facet spanned by lifted points i, j, k, if their plane
/// supports the lifted set from below: the convex hull of every lifted
/// point on the plane, None otherwise.
fn lower_facet(lifted: &[Lifted], i: usize, j: usize, k: usize) -> Option<Vec<Point>> {
    let (pi, pj, pk) = (&lifted[i], &lifted[j], &lifted[k]);
    let (ux, uy) = (pj.x - pi.x, pj.y - pi.y);
    let (vx, vy) = (pk.x - pi.x, pk.y - pi.y);
    let nz_small = ux as i128 * vy as i128 - uy as i128 * vx as i128;
    if nz_small == 0 {
        return None;
    }
    let uz = &pj.z - &pi.z;
    let vz = &pk.z - &pi.z;
    let mut nx = BigInt::from(uy) * &vz - &uz * BigInt::from(vy);
    let mut ny = &uz * BigInt::from(vx) - BigInt::from(ux) * &vz;
    let mut nz = BigInt::from(nz_small);
    if nz.is_negative() {
        nx = -nx;
        ny = -ny;
        nz = -nz;
    }
    let offset = &nx * BigInt::from(pi.x) + &ny * BigInt::from(pi.y) + &nz * &pi.z;

    let mut coplanar = Vec::new();
    for p in lifted {
        let s = &nx * BigInt::from(p.x) + &ny * BigInt::from(p.y) + &nz * &p.z - &offset;
        if s.is_negative() {
            return None;
        }
        if s.is_zero() {
            coplanar.push(Point(p.x, p.y));
        }
    }
    let hull = convex_hull(&coplanar).expect("contains a non-collinear triple");
    Some(canonical_cell(&hull).vertices().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn heights(entries: &[(i64, i64, i64)]) -> TropicalPolynomial {
        let support = entries
            .iter()
            .map(|&(i, j, a)| (Point(i, j), BigRational::from(BigInt::from(a))))
            .collect();
        TropicalPolynomial::new(support).unwrap()
    }

    #[test]
    fn three_monomials_give_one_triangle() {
        let f = heights(&[(0, 0, 1), (1, 0, 2), (0, 1, -1)]);
        let s = dual_subdivision(&f);
        assert_eq!(s.cells().len(), 1);
        assert_eq!(s.cell_kind(0), CellKind::Triangle);
        assert!(s.is_nodal() && s.is_simple());
        assert_eq!(s.genus().unwrap(), 0);
    }

    #[test]
    fn flat_heights_give_one_cell() {
        let f = heights(&[(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0), (0, 2, 0)]);
        let s = dual_subdivision(&f);
        assert_eq!(s.cells().len(), 1);
        // The cell is the whole triangle; midpoints are not cell vertices.
        assert_eq!(s.cell_kind(0), CellKind::Triangle);
        assert!(s.is_nodal() && !s.is_simple());
        assert_eq!(s.genus().unwrap(), 0);
    }

    #[test]
    fn non_parallelogram_quad_is_not_nodal() {
        let f = heights(&[(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0)]);
        let s = dual_subdivision(&f);
        assert_eq!(s.cells().len(), 1);
        assert_eq!(s.cell_kind(0), CellKind::Other);
        assert!(!s.is_nodal() && !s.is_simple());
        assert_eq!(s.genus(), Err(TropicalError::NotNodal(0)));
    }

    #[test]
    fn edge_classes_chain_through_parallelograms() {
        // Two unit squares side by side: the three vertical unit edges
        // form one extended class.
        let cells = vec![
            LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])
                .unwrap(),
            LatticePolygon::new(vec![Point(1, 0), Point(2, 0), Point(2, 1), Point(1, 1)])
                .unwrap(),
        ];
        let s = DualSubdivision::from_cells(cells).unwrap();
        assert_eq!(s.parallelogram_count(), 2);
        let vertical = Edge::new(Point(1, 0), Point(1, 1)).unwrap();
        let class = &s.extended_classes()[s.class_index(vertical).unwrap()];
        assert_eq!(class.edges.len(), 3);
        assert_eq!(class.length, 1);
        assert!(class.touches_boundary);
        assert_eq!(s.genus().unwrap(), -2);
        // Two horizontal lines crossing one vertical: no two meet.
        assert_eq!(s.curve_components(), 3);
    }

    #[test]
    fn crossings_do_not_join_curve_components() {
        // One square: two lines crossing once.
        let square =
            vec![
                LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])
                    .unwrap(),
            ];
        let s = DualSubdivision::from_cells(square).unwrap();
        assert_eq!(s.curve_components(), 2);

        // Split the square along a diagonal instead: a single conic-like
        // curve with two vertices.
        let split = vec![
            LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(1, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(0, 0), Point(1, 1), Point(0, 1)]).unwrap(),
        ];
        let s = DualSubdivision::from_cells(split).unwrap();
        assert_eq!(s.curve_components(), 1);

        // Triangles on both sides of a parallelogram: the vertical class
        // chains through it and joins them, while the transverse class
        // (both ends on the hull) is a line meeting nothing.
        let chain = vec![
            LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(0, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(0, 1), Point(1, 0), Point(1, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(1, 0), Point(2, 0), Point(2, 1), Point(1, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(2, 0), Point(3, 0), Point(2, 1)]).unwrap(),
        ];
        let s = DualSubdivision::from_cells(chain).unwrap();
        assert_eq!(s.parallelogram_count(), 1);
        assert_eq!(s.curve_components(), 2);
    }

    #[test]
    fn bad_covers_are_rejected() {
        // Gap between two triangles: the uncovered sliver shows up as an
        // area shortfall against the hull.
        let gap = vec![
            LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(0, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(1, 0), Point(2, 0), Point(1, 1)]).unwrap(),
        ];
        assert!(matches!(
            DualSubdivision::from_cells(gap),
            Err(TropicalError::BadCover(_))
        ));

        // Three cells share the edge (0,0)-(1,1).
        let triple = vec![
            LatticePolygon::new(vec![Point(0, 0), Point(1, 0), Point(1, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(0, 0), Point(1, 1), Point(0, 1)]).unwrap(),
            LatticePolygon::new(vec![Point(0, 0), Point(1, 1), Point(1, 2)]).unwrap(),
        ];
        assert!(matches!(
            DualSubdivision::from_cells(triple),
            Err(TropicalError::BadCover(_))
        ));
    }

    #[test]
    fn serde_roundtrip_rebuilds_derived_data() {
        let f = heights(&[(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 0)]);
        let s = dual_subdivision(&f);
        let json = serde_json::to_string(&s).unwrap();
        let back: DualSubdivision = serde_json::from_str(&json).unwrap();
        assert_eq!(s, back);
    }
}
