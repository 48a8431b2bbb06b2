use crate::polygon::{lattice_length, LatticePolygon, Point};
use crate::LatticeError;
use num_integer::Integer;

/// Affine map `p -> A·p + t` with `det A = ±1`, so it preserves the
/// lattice, lattice lengths, and areas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    a: [[i64; 2]; 2],
    t: [i64; 2],
}

impl UnimodularMap {
    pub fn new(a: [[i64; 2]; 2], t: [i64; 2]) -> Result<Self, LatticeError> {
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if det.abs() != 1 {
            return Err(LatticeError::NotUnimodular(det));
        }
        Ok(UnimodularMap { a, t })
    }

    pub fn identity() -> Self {
        UnimodularMap {
            a: [[1, 0], [0, 1]],
            t: [0, 0],
        }
    }

    pub fn translation(dx: i64, dy: i64) -> Self {
        UnimodularMap {
            a: [[1, 0], [0, 1]],
            t: [dx, dy],
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.a
    }

    pub fn translation_part(&self) -> (i64, i64) {
        (self.t[0], self.t[1])
    }

    pub fn det(&self) -> i64 {
        self.a[0][0] * self.a[1][1] - self.a[0][1] * self.a[1][0]
    }

    pub fn apply(&self, p: Point) -> Point {
        Point(
            self.a[0][0] * p.0 + self.a[0][1] * p.1 + self.t[0],
            self.a[1][0] * p.0 + self.a[1][1] * p.1 + self.t[1],
        )
    }

    /// The map `next ∘ self`: apply `self` first, then `next`.
    pub fn then(&self, next: &UnimodularMap) -> UnimodularMap {
        let m = |r: usize, c: usize| next.a[r][0] * self.a[0][c] + next.a[r][1] * self.a[1][c];
        let t = |r: usize| next.a[r][0] * self.t[0] + next.a[r][1] * self.t[1] + next.t[r];
        UnimodularMap {
            a: [[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]],
            t: [t(0), t(1)],
        }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let d = self.det();
        // det = ±1, so the adjugate over det stays integral: A⁻¹ = d·adj(A).
        let inv = [
            [d * self.a[1][1], -d * self.a[0][1]],
            [-d * self.a[1][0], d * self.a[0][0]],
        ];
        let t = [
            -(inv[0][0] * self.t[0] + inv[0][1] * self.t[1]),
            -(inv[1][0] * self.t[0] + inv[1][1] * self.t[1]),
        ];
        UnimodularMap { a: inv, t }
    }
}

/// Triangle in normal position Conv{(p,0), (q,0), (0,m)} with
/// 0 ≤ p < q ≤ m. Its edge lattice lengths are q−p, d_p = gcd(p,m) and
/// d_q = gcd(q,m), with gcd(0,m) = m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NormalTriangle {
    m: u64,
    p: u64,
    q: u64,
}

impl NormalTriangle {
    pub fn new(m: u64, p: u64, q: u64) -> Result<Self, LatticeError> {
        if !(p < q && q <= m) {
            return Err(LatticeError::Parse(format!(
                "normal triangle needs 0 <= p < q <= m, got m={m} p={p} q={q}"
            )));
        }
        Ok(NormalTriangle { m, p, q })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn d_p(&self) -> u64 {
        self.p.gcd(&self.m)
    }

    pub fn d_q(&self) -> u64 {
        self.q.gcd(&self.m)
    }

    pub fn double_area(&self) -> u64 {
        self.m * (self.q - self.p)
    }

    /// Lattice lengths of the bottom edge, the edge through (p,0) and
    /// (0,m), and the edge through (q,0) and (0,m).
    pub fn edge_lengths(&self) -> (u64, u64, u64) {
        (self.q - self.p, self.d_p(), self.d_q())
    }

    pub fn boundary_count(&self) -> u64 {
        let (a, b, c) = self.edge_lengths();
        a + b + c
    }

    pub fn interior_count(&self) -> u64 {
        ((self.q - self.p) * (self.m - 1) + 2 - self.d_p() - self.d_q()) / 2
    }

    pub fn polygon(&self) -> LatticePolygon {
        LatticePolygon::new(vec![
            Point(self.p as i64, 0),
            Point(self.q as i64, 0),
            Point(0, self.m as i64),
        ])
        .expect("normal position is counterclockwise and nondegenerate")
    }
}

/// Move a lattice triangle into normal position Conv{(p,0),(q,0),(0,m)},
/// sending the distinguished edge (index `distinguished`, running from
/// vertex `distinguished` to the next) onto [(q,0),(0,m)].
///
/// Construction: let C be the vertex off the distinguished edge and σ, σ'
/// the edges at C with |σ| ≤ |σ'| (tie broken by lexicographically smaller
/// far endpoint). Translate C to the origin, send σ's primitive direction
/// to (1,0) by a Bézout matrix, flip the upper half-plane down if σ' ended
/// below the axis, shear x ↦ x − l·y by the least l putting σ' weakly left
/// of the y-axis, then translate right until σ' ends exactly on it.
pub fn normal_form(
    triangle: &LatticePolygon,
    distinguished: usize,
) -> Result<(UnimodularMap, NormalTriangle), LatticeError> {
    let verts = triangle.vertices();
    if verts.len() != 3 {
        return Err(LatticeError::NotATriangle(verts.len()));
    }
    if distinguished >= 3 {
        return Err(LatticeError::BadEdgeIndex(distinguished));
    }
    let (a_end, b_end) = triangle.edge(distinguished);
    let common = verts[(distinguished + 2) % 3];

    let len_a = lattice_length(common, a_end)?;
    let len_b = lattice_length(common, b_end)?;
    let (sigma_end, sigma_len, prime_end, prime_len) =
        if len_a < len_b || (len_a == len_b && a_end < b_end) {
            (a_end, len_a, b_end, len_b)
        } else {
            (b_end, len_b, a_end, len_a)
        };

    let mut map = UnimodularMap::translation(-common.0, -common.1);

    let d = sigma_end - common;
    let g = sigma_len as i64;
    let (pa, pb) = (d.0 / g, d.1 / g);
    let egcd = pa.extended_gcd(&pb);
    debug_assert_eq!(egcd.gcd, 1);
    map = map.then(
        &UnimodularMap::new([[egcd.x, egcd.y], [pb, -pa]], [0, 0])
            .expect("Bézout matrix has determinant -1"),
    );

    if map.apply(prime_end).1 < 0 {
        map = map.then(&UnimodularMap::new([[1, 0], [0, -1]], [0, 0]).unwrap());
    }

    let w_end = map.apply(prime_end);
    debug_assert!(w_end.1 > 0, "strict convexity keeps σ' off the x-axis");
    let (w1, w2) = (w_end.0 / prime_len as i64, w_end.1 / prime_len as i64);
    let l = Integer::div_ceil(&w1, &w2);
    map = map.then(&UnimodularMap::new([[1, -l], [0, 1]], [0, 0]).unwrap());

    let p = prime_len as i64 * (l * w2 - w1);
    map = map.then(&UnimodularMap::translation(p, 0));

    let m = prime_len * w2 as u64;
    let normal = NormalTriangle::new(m, p as u64, p as u64 + sigma_len)?;

    debug_assert_eq!(map.apply(common), Point(normal.p as i64, 0));
    debug_assert_eq!(map.apply(sigma_end), Point(normal.q as i64, 0));
    debug_assert_eq!(map.apply(prime_end), Point(0, normal.m as i64));
    Ok((map, normal))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_composition_and_inverse() {
        let f = UnimodularMap::new([[2, 1], [1, 1]], [3, -1]).unwrap();
        let g = UnimodularMap::new([[0, -1], [1, 0]], [0, 2]).unwrap();
        let p = Point(5, -7);
        assert_eq!(f.then(&g).apply(p), g.apply(f.apply(p)));
        assert_eq!(f.then(&f.inverse()).apply(p), p);
        assert_eq!(f.inverse().apply(f.apply(p)), p);
        assert_eq!(
            UnimodularMap::new([[2, 0], [0, 1]], [0, 0]),
            Err(LatticeError::NotUnimodular(2))
        );
    }

    #[test]
    fn normal_triangle_counts() {
        let t = NormalTriangle::new(5, 3, 4).unwrap();
        assert_eq!(t.double_area(), 5);
        assert_eq!(t.edge_lengths(), (1, 1, 1));
        assert_eq!(t.interior_count(), 2);
        assert_eq!(
            t.interior_count(),
            t.polygon().interior_points().len() as u64
        );
        assert_eq!(t.boundary_count(), t.polygon().boundary_count());
        let zero_p = NormalTriangle::new(4, 0, 1).unwrap();
        assert_eq!(zero_p.d_p(), 4);
        assert_eq!(zero_p.edge_lengths(), (1, 4, 1));
        assert!(NormalTriangle::new(3, 2, 2).is_err());
        assert!(NormalTriangle::new(3, 1, 4).is_err());
    }
}
