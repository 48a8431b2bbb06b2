use crate::hull::convex_hull;
use crate::TropicalError;
use lattice::{LatticePolygon, Point};
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::str::FromStr;

/// max(i·x + j·y + a_ij) over a finite support of monomials (i,j) with
/// rational coefficients a_ij.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalPolynomial {
    support: BTreeMap<Point, BigRational>,
    newton: LatticePolygon,
}

impl TropicalPolynomial {
    pub fn new(support: BTreeMap<Point, BigRational>) -> Result<Self, TropicalError> {
        if support.is_empty() {
            return Err(TropicalError::EmptySupport);
        }
        let points: Vec<Point> = support.keys().copied().collect();
        let newton = convex_hull(&points)?;
        Ok(TropicalPolynomial { support, newton })
    }

    /// One monomial per line: `i j height`, heights as integers or `p/q`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, TropicalError> {
        let mut support = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(TropicalError::Parse(format!(
                    "line {}: expected `i j height`, got {raw:?}",
                    idx + 1
                )));
            }
            let coord = |s: &str| {
                s.parse::<i64>()
                    .map_err(|e| TropicalError::Parse(format!("line {}: {e}", idx + 1)))
            };
            let height = BigRational::from_str(fields[2])
                .map_err(|e| TropicalError::Parse(format!("line {}: {e}", idx + 1)))?;
            let monomial = Point(coord(fields[0])?, coord(fields[1])?);
            if support.insert(monomial, height).is_some() {
                return Err(TropicalError::Parse(format!(
                    "line {}: repeated monomial {monomial:?}",
                    idx + 1
                )));
            }
        }
        TropicalPolynomial::new(support)
    }

    pub fn support(&self) -> &BTreeMap<Point, BigRational> {
        &self.support
    }

    pub fn newton_polygon(&self) -> &LatticePolygon {
        &self.newton
    }

    pub fn height(&self, monomial: Point) -> Option<&BigRational> {
        self.support.get(&monomial)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines_with_rational_heights() {
        let f = TropicalPolynomial::parse("0 0 1\n1 0 2\n0 1 -1/2 # comment\n").unwrap();
        assert_eq!(f.support().len(), 3);
        assert_eq!(
            f.height(Point(0, 1)),
            Some(&BigRational::new((-1).into(), 2.into()))
        );
        assert_eq!(f.newton_polygon().vertices().len(), 3);
    }

    #[test]
    fn rejects_flat_and_malformed_input() {
        assert_eq!(
            TropicalPolynomial::parse(""),
            Err(TropicalError::EmptySupport)
        );
        assert_eq!(
            TropicalPolynomial::parse("0 0 1\n1 1 0\n"),
            Err(TropicalError::FlatSupport)
        );
        assert!(matches!(
            TropicalPolynomial::parse("0 0\n"),
            Err(TropicalError::Parse(_))
        ));
        assert!(matches!(
            TropicalPolynomial::parse("0 0 1\n0 0 2\n1 0 0\n0 1 0\n"),
            Err(TropicalError::Parse(_))
        ));
    }
}
