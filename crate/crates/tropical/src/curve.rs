use crate::polynomial::TropicalPolynomial;
use crate::subdivision::{dual_subdivision, on_segment, DualSubdivision, Edge};
use crate::TropicalError;
use lattice::{Location, Point};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Bounded curve edge dual to an interior edge of the subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveEdge {
    /// Indices of the two cells whose tie vertices it joins.
    pub cells: (usize, usize),
    pub weight: u64,
    /// Primitive direction from the first cell's vertex to the second's.
    pub direction: Point,
    pub dual: Edge,
}

/// Unbounded curve edge dual to a boundary edge of the subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRay {
    pub cell: usize,
    pub weight: u64,
    /// Primitive direction, pointing out of the Newton polygon's dual.
    pub direction: Point,
    pub dual: Edge,
}

/// The locus where the tropical maximum is attained at least twice,
/// embedded with exact rational vertex coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCurve {
    subdivision: DualSubdivision,
    positions: Vec<(BigRational, BigRational)>,
    edges: Vec<CurveEdge>,
    rays: Vec<CurveRay>,
}

fn rational(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl TropicalCurve {
    pub fn subdivision(&self) -> &DualSubdivision {
        &self.subdivision
    }

    /// Tie vertex of each cell, indexed like the subdivision's cells.
    pub fn positions(&self) -> &[(BigRational, BigRational)] {
        &self.positions
    }

    pub fn edges(&self) -> &[CurveEdge] {
        &self.edges
    }

    pub fn rays(&self) -> &[CurveRay] {
        &self.rays
    }

    pub fn genus(&self) -> Result<i64, TropicalError> {
        self.subdivision.genus()
    }
}

/// Embed the tropical vanishing locus of `f`: one vertex per cell of the
/// dual subdivision (where that cell's monomials tie), bounded edges
/// across interior dual edges, rays across boundary dual edges. Exact
/// balancing Σ weight·direction = 0 is asserted at every vertex.
pub fn curve_of(f: &TropicalPolynomial) -> TropicalCurve {
    let subdivision = dual_subdivision(f);
    let positions: Vec<(BigRational, BigRational)> = subdivision
        .cells()
        .iter()
        .map(|cell| tie_vertex(f, cell))
        .collect();

    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for edge in subdivision.edges() {
        let adjacent = subdivision.cells_of(*edge);
        let dual_dir = edge.direction();
        if adjacent.len() == 2 {
            let (l, r) = (adjacent[0], adjacent[1]);
            let delta = (
                &positions[r].0 - &positions[l].0,
                &positions[r].1 - &positions[l].1,
            );
            let along = &delta.0 * rational(dual_dir.0) + &delta.1 * rational(dual_dir.1);
            assert!(along.is_zero(), "curve edges are orthogonal to dual edges");
            let normal = Point(-dual_dir.1, dual_dir.0);
            let toward = &delta.0 * rational(normal.0) + &delta.1 * rational(normal.1);
            assert!(!toward.is_zero(), "adjacent tie vertices are distinct");
            let direction = if toward > BigRational::zero() {
                normal
            } else {
                Point(-normal.0, -normal.1)
            };
            edges.push(CurveEdge {
                cells: (l, r),
                weight: edge.length(),
                direction,
                dual: *edge,
            });
        } else {
            let polygon = subdivision.polygon();
            let (a, b) = edge.endpoints();
            let host = (0..polygon.edge_count())
                .find(|&i| {
                    let (p, q) = polygon.edge(i);
                    on_segment(a, p, q) && on_segment(b, p, q)
                })
                .expect("boundary dual edges lie on a polygon edge");
            let (p, q) = polygon.edge(host);
            let d = q - p;
            let g = lattice::lattice_length(p, q).unwrap() as i64;
            let outward = Point(d.1 / g, -d.0 / g);
            rays.push(CurveRay {
                cell: adjacent[0],
                weight: edge.length(),
                direction: outward,
                dual: *edge,
            });
        }
    }

    let curve = TropicalCurve {
        subdivision,
        positions,
        edges,
        rays,
    };
    assert_balanced(&curve);
    curve
}

/// Where all monomials of `cell` tie: solved from the first three cell
/// vertices, then checked against the full support — cell monomials tie
/// exactly, all others stay strictly below.
fn tie_vertex(f: &TropicalPolynomial, cell: &lattice::LatticePolygon) -> (BigRational, BigRational) {
    let v = cell.vertices();
    let a0 = f.height(v[0]).expect("cell vertices are support points");
    let a1 = f.height(v[1]).expect("cell vertices are support points");
    let a2 = f.height(v[2]).expect("cell vertices are support points");
    let (b11, b12) = (rational(v[1].0 - v[0].0), rational(v[1].1 - v[0].1));
    let (b21, b22) = (rational(v[2].0 - v[0].0), rational(v[2].1 - v[0].1));
    let (r1, r2) = (a0 - a1, a0 - a2);
    let det = &b11 * &b22 - &b12 * &b21;
    let x = (&r1 * &b22 - &b12 * &r2) / &det;
    let y = (&b11 * &r2 - &r1 * &b21) / &det;

    let value = |m: Point| rational(m.0) * &x + rational(m.1) * &y + f.height(m).unwrap().clone();
    let tied = value(v[0]);
    for (&m, _) in f.support() {
        let val = value(m);
        if v.contains(&m) {
            assert_eq!(val, tied, "cell vertices tie at the cell's curve vertex");
        } else if cell.locate(m) == Location::Outside {
            assert!(val < tied, "outside monomials stay strictly below");
        } else {
            // In-cell non-vertex support: its lift sits on or above the
            // facet plane, so it may tie but never exceed.
            assert!(val <= tied, "in-cell monomials never exceed the tie");
        }
    }
    (x, y)
}

fn assert_balanced(curve: &TropicalCurve) {
    for cell in 0..curve.positions.len() {
        let mut sum = Point(0, 0);
        for e in &curve.edges {
            if e.cells.0 == cell {
                sum = sum + Point(e.weight as i64 * e.direction.0, e.weight as i64 * e.direction.1);
            } else if e.cells.1 == cell {
                sum = sum - Point(e.weight as i64 * e.direction.0, e.weight as i64 * e.direction.1);
            }
        }
        for r in &curve.rays {
            if r.cell == cell {
                sum = sum + Point(r.weight as i64 * r.direction.0, r.weight as i64 * r.direction.1);
            }
        }
        assert_eq!(sum, Point(0, 0), "balancing fails at cell {cell}");
    }
}
