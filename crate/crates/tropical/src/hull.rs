use crate::TropicalError;
use lattice::{LatticePolygon, Point};

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull by monotone chain, counterclockwise with collinear points
/// dropped. Errors when the hull is not two-dimensional.
pub fn convex_hull(points: &[Point]) -> Result<LatticePolygon, TropicalError> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(TropicalError::FlatSupport);
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    LatticePolygon::new(lower).map_err(|_| TropicalError::FlatSupport)
}

#[cfg(test)]
mod tests {
    use super::convex_hull;
    use lattice::Point;

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let pts = [
            Point(0, 0),
            Point(2, 0),
            Point(0, 2),
            Point(1, 0),
            Point(1, 1),
        ];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.vertices(), &[Point(0, 0), Point(2, 0), Point(0, 2)]);
    }

    #[test]
    fn flat_input_is_rejected() {
        assert!(convex_hull(&[Point(0, 0), Point(1, 1), Point(2, 2)]).is_err());
        assert!(convex_hull(&[Point(0, 0), Point(1, 1)]).is_err());
    }
}
