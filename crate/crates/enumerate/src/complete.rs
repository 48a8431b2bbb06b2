use crate::path::LatticePath;
use lattice::{LatticePolygon, Location, Point};
use std::collections::HashMap;
use std::rc::Rc;
use tropical::{DualSubdivision, Edge, MarkedSubdivision};

fn cross(a: Point, b: Point, c: Point) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    let det = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
    det == 0
        && (a.0.min(b.0)..=a.0.max(b.0)).contains(&p.0)
        && (a.1.min(b.1)..=a.1.max(b.1)).contains(&p.1)
}

/// Boundary edges of the two arcs joining `from` to `to`, as
/// (counterclockwise arc, clockwise arc).
fn boundary_arcs(
    polygon: &LatticePolygon,
    from: Point,
    to: Point,
) -> (Vec<(Point, Point)>, Vec<(Point, Point)>) {
    let verts = polygon.vertices();
    let find = |p: Point| {
        verts
            .iter()
            .position(|v| *v == p)
            .expect("path endpoints are polygon vertices")
    };
    let (i, j) = (find(from), find(to));
    let m = verts.len();
    let mut ccw = Vec::new();
    let mut k = i;
    while k != j {
        ccw.push(polygon.edge(k));
        k = (k + 1) % m;
    }
    let mut cw = Vec::new();
    let mut k = j;
    while k != i {
        cw.push(polygon.edge(k));
        k = (k + 1) % m;
    }
    (ccw, cw)
}

fn oriented(vertices: Vec<Point>, ccw: bool) -> LatticePolygon {
    let v = if ccw {
        vertices
    } else {
        vertices.into_iter().rev().collect()
    };
    LatticePolygon::new(v).expect("completion cells are convex")
}

/// Fills the region between an evolving chain and one boundary arc.
/// Every move rewrites the first corner that bends toward the arc:
/// either cut it with the triangle it spans, or mirror it across the
/// chord into a parallelogram (when the mirrored point stays inside).
/// Chains stay strictly sweep-monotone, so moves never collide and each
/// tiling is produced exactly once.
struct Completer<'a> {
    polygon: &'a LatticePolygon,
    // arcs[0] faces left of the chain (clockwise arc), arcs[1] right.
    arcs: [Vec<(Point, Point)>; 2],
    memo: HashMap<(bool, Vec<Point>), Rc<Vec<Vec<LatticePolygon>>>>,
}

impl Completer<'_> {
    fn chain_done(&self, chain: &[Point], left: bool) -> bool {
        let arc = &self.arcs[usize::from(!left)];
        chain.windows(2).all(|w| {
            arc.iter()
                .any(|&(p, q)| on_segment(w[0], p, q) && on_segment(w[1], p, q))
        })
    }

    fn complete(&mut self, chain: &[Point], left: bool) -> Rc<Vec<Vec<LatticePolygon>>> {
        if let Some(hit) = self.memo.get(&(left, chain.to_vec())) {
            return hit.clone();
        }
        let want = if left { 1 } else { -1 };
        let corner =
            (1..chain.len() - 1).find(|&j| cross(chain[j - 1], chain[j], chain[j + 1]).signum() == want);
        let mut out = Vec::new();
        match corner {
            None => {
                if self.chain_done(chain, left) {
                    out.push(Vec::new());
                }
                // Otherwise a dead end: area remains but no corner bends
                // toward it, so this chain admits no tiling.
            }
            Some(j) => {
                let (a, b, c) = (chain[j - 1], chain[j], chain[j + 1]);
                let triangle = oriented(vec![a, b, c], want > 0);
                let mut cut = chain.to_vec();
                cut.remove(j);
                for tail in self.complete(&cut, left).iter() {
                    let mut cells = Vec::with_capacity(tail.len() + 1);
                    cells.push(triangle.clone());
                    cells.extend_from_slice(tail);
                    out.push(cells);
                }

                let d = a + c - b;
                if self.polygon.locate(d) != Location::Outside {
                    let para = oriented(vec![a, b, c, d], want > 0);
                    let mut mirrored = chain.to_vec();
                    mirrored[j] = d;
                    for tail in self.complete(&mirrored, left).iter() {
                        let mut cells = Vec::with_capacity(tail.len() + 1);
                        cells.push(para.clone());
                        cells.extend_from_slice(tail);
                        out.push(cells);
                    }
                }
            }
        }
        let rc = Rc::new(out);
        self.memo.insert((left, chain.to_vec()), rc.clone());
        rc
    }
}

/// Tiles both sides of the path independently and pairs the tilings;
/// each pair is one marked subdivision whose marks are the path steps.
/// Dead-end chains contribute no subdivisions (they are not errors).
pub fn complete_path(path: &LatticePath, polygon: &LatticePolygon) -> Vec<MarkedSubdivision> {
    let pts = path.points();
    let (ccw, cw) = boundary_arcs(polygon, pts[0], *pts.last().unwrap());
    let mut completer = Completer {
        polygon,
        arcs: [cw, ccw],
        memo: HashMap::new(),
    };
    let above = completer.complete(pts, true);
    let below = completer.complete(pts, false);
    let marks: Vec<Edge> = pts
        .windows(2)
        .map(|w| Edge::new(w[0], w[1]).expect("path steps are nondegenerate"))
        .collect();

    let mut out = Vec::new();
    for up in above.iter() {
        for down in below.iter() {
            let mut cells = up.clone();
            cells.extend_from_slice(down);
            let subdivision =
                DualSubdivision::from_cells(cells).expect("completions tile the polygon");
            let marked = MarkedSubdivision::new(subdivision, marks.clone())
                .expect("path steps mark pairwise-distinct edge classes");
            out.push(marked);
        }
    }
    out
}
