use crate::LatticeError;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// Lattice point in the plane.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Point(pub i64, pub i64);

impl Point {
    pub fn x(&self) -> i64 {
        self.0
    }

    pub fn y(&self) -> i64 {
        self.1
    }
}

impl std::ops::Sub for Point {
    type Output = Point;

    fn sub(self, rhs: Point) -> Point {
        Point(self.0 - rhs.0, self.1 - rhs.1)
    }
}

impl std::ops::Add for Point {
    type Output = Point;

    fn add(self, rhs: Point) -> Point {
        Point(self.0 + rhs.0, self.1 + rhs.1)
    }
}

/// z-component of the cross product (b - a) x (c - a).
pub(crate) fn cross(a: Point, b: Point, c: Point) -> i64 {
    let u = b - a;
    let v = c - a;
    u.0 * v.1 - u.1 * v.0
}

/// Number of lattice points strictly between `a` and `b` plus one; equals
/// gcd of the coordinate differences. Errors when the endpoints coincide.
pub fn lattice_length(a: Point, b: Point) -> Result<u64, LatticeError> {
    if a == b {
        return Err(LatticeError::DegenerateEdge(a));
    }
    let d = b - a;
    Ok(d.0.unsigned_abs().gcd(&d.1.unsigned_abs()))
}

/// Convex lattice polygon with counterclockwise vertices and no three
/// consecutive vertices collinear. Construction validates convexity and
/// checks Pick's identity against a direct lattice point scan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct LatticePolygon {
    vertices: Vec<Point>,
}

impl TryFrom<Vec<Point>> for LatticePolygon {
    type Error = LatticeError;

    fn try_from(vertices: Vec<Point>) -> Result<Self, Self::Error> {
        LatticePolygon::new(vertices)
    }
}

impl From<LatticePolygon> for Vec<Point> {
    fn from(p: LatticePolygon) -> Vec<Point> {
        p.vertices
    }
}

impl LatticePolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, LatticeError> {
        if vertices.len() < 3 {
            return Err(LatticeError::TooFewVertices(vertices.len()));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if a == b {
                return Err(LatticeError::DegenerateEdge(a));
            }
            let turn = cross(a, b, c);
            if turn == 0 {
                return Err(LatticeError::NotConvex(b));
            }
            if turn < 0 {
                return Err(LatticeError::NotCounterClockwise);
            }
        }
        let poly = LatticePolygon { vertices };
        // Pick: 2A = 2i + b - 2 for any simple lattice polygon.
        debug_assert_eq!(
            poly.double_area(),
            2 * poly.interior_points().len() as i64 + poly.boundary_count() as i64 - 2
        );
        Ok(poly)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1` (cyclically).
    pub fn edge(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len()
    }

    /// Twice the enclosed area (shoelace); positive for counterclockwise
    /// winding.
    pub fn double_area(&self) -> i64 {
        let n = self.vertices.len();
        let mut s = 0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            s += a.0 * b.1 - a.1 * b.0;
        }
        s
    }

    /// Count of lattice points on the boundary.
    pub fn boundary_count(&self) -> u64 {
        (0..self.vertices.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                lattice_length(a, b).expect("validated edges are nondegenerate")
            })
            .sum()
    }

    /// Lattice points strictly inside, by bounding-box scan.
    pub fn interior_points(&self) -> Vec<Point> {
        self.lattice_points_where(|loc| loc == Location::Interior)
    }

    /// All lattice points of the closed polygon.
    pub fn lattice_points(&self) -> Vec<Point> {
        self.lattice_points_where(|loc| loc != Location::Outside)
    }

    /// Lattice points on the boundary, bounding-box scan order.
    pub fn boundary_points(&self) -> Vec<Point> {
        self.lattice_points_where(|loc| loc == Location::Boundary)
    }

    fn lattice_points_where(&self, keep: impl Fn(Location) -> bool) -> Vec<Point> {
        let xs = self.vertices.iter().map(|p| p.0);
        let ys = self.vertices.iter().map(|p| p.1);
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                let p = Point(x, y);
                if keep(self.locate(p)) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Classify a point against the closed polygon.
    pub fn locate(&self, p: Point) -> Location {
        let n = self.vertices.len();
        for i in 0..n {
            let (a, b) = self.edge(i);
            let turn = cross(a, b, p);
            if turn < 0 {
                return Location::Outside;
            }
            if turn == 0 {
                let on_segment = (a.0.min(b.0)..=a.0.max(b.0)).contains(&p.0)
                    && (a.1.min(b.1)..=a.1.max(b.1)).contains(&p.1);
                return if on_segment {
                    Location::Boundary
                } else {
                    Location::Outside
                };
            }
        }
        Location::Interior
    }

    pub fn contains(&self, p: Point) -> bool {
        self.locate(p) != Location::Outside
    }

    /// True if `p` lies on the closed boundary arc from `a` to `b` walking
    /// the polygon counterclockwise. Both endpoints must be boundary
    /// points.
    pub fn on_boundary_arc(&self, a: Point, b: Point, p: Point) -> bool {
        if self.locate(p) != Location::Boundary {
            return false;
        }
        let walk = self.boundary_walk();
        let ia = walk.iter().position(|&q| q == a);
        let ib = walk.iter().position(|&q| q == b);
        let ip = walk.iter().position(|&q| q == p);
        let (ia, ib, ip) = match (ia, ib, ip) {
            (Some(x), Some(y), Some(z)) => (x, y, z),
            _ => return false,
        };
        if ia <= ib {
            (ia..=ib).contains(&ip)
        } else {
            ip >= ia || ip <= ib
        }
    }

    /// Boundary lattice points in counterclockwise order, starting at
    /// vertex 0.
    pub fn boundary_walk(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            let (a, b) = self.edge(i);
            let len = lattice_length(a, b).unwrap() as i64;
            let step = Point((b.0 - a.0) / len, (b.1 - a.1) / len);
            for k in 0..len {
                out.push(Point(a.0 + k * step.0, a.1 + k * step.1));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

/// Parse `"x,y; x,y; ..."` or whitespace-separated `"x,y"` pairs into a
/// polygon.
pub fn parse_polygon_text(text: &str) -> Result<LatticePolygon, LatticeError> {
    let mut vertices = Vec::new();
    for chunk in text.split([';', '\n']).flat_map(str::split_whitespace) {
        let (x, y) = chunk
            .split_once(',')
            .ok_or_else(|| LatticeError::Parse(format!("expected x,y pair, got {chunk:?}")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| LatticeError::Parse(format!("bad coordinate {s:?}: {e}")))
        };
        vertices.push(Point(parse(x)?, parse(y)?));
    }
    LatticePolygon::new(vertices)
}

/// Named polygon families: `degree:d` is the triangle with legs `d` on the
/// axes, `rect:a,b` the axis-aligned box.
pub fn parse_preset(spec: &str) -> Result<LatticePolygon, LatticeError> {
    let (kind, args) = spec
        .split_once(':')
        .ok_or_else(|| LatticeError::Parse(format!("expected name:args, got {spec:?}")))?;
    let bad = |msg: String| LatticeError::Parse(msg);
    match kind {
        "degree" => {
            let d: i64 = args
                .trim()
                .parse()
                .map_err(|e| bad(format!("bad degree {args:?}: {e}")))?;
            if d < 1 {
                return Err(bad(format!("degree must be positive, got {d}")));
            }
            LatticePolygon::new(vec![Point(0, 0), Point(d, 0), Point(0, d)])
        }
        "rect" => {
            let (a, b) = args
                .split_once(',')
                .ok_or_else(|| bad(format!("rect wants a,b, got {args:?}")))?;
            let a: i64 = a
                .trim()
                .parse()
                .map_err(|e| bad(format!("bad width {a:?}: {e}")))?;
            let b: i64 = b
                .trim()
                .parse()
                .map_err(|e| bad(format!("bad height {b:?}: {e}")))?;
            if a < 1 || b < 1 {
                return Err(bad(format!("rect sides must be positive, got {a},{b}")));
            }
            LatticePolygon::new(vec![Point(0, 0), Point(a, 0), Point(a, b), Point(0, b)])
        }
        other => Err(bad(format!("unknown preset {other:?}"))),
    }
}
