use crate::curve::TropicalCurve;
use crate::marked::MarkedSubdivision;
use crate::subdivision::DualSubdivision;
use lattice::Point;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Renderer-agnostic drawing data: closed cells, grid points, weighted
/// segments and rays, and highlighted (marked) segments.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub cells: Vec<Vec<(f64, f64)>>,
    pub grid: Vec<(f64, f64)>,
    pub segments: Vec<SceneSegment>,
    pub rays: Vec<SceneRay>,
    pub marked: Vec<SceneSegment>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SceneSegment {
    pub from: (f64, f64),
    pub to: (f64, f64),
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SceneRay {
    pub from: (f64, f64),
    pub direction: (f64, f64),
    pub weight: u64,
}

fn pt(p: Point) -> (f64, f64) {
    (p.0 as f64, p.1 as f64)
}

impl DualSubdivision {
    pub fn scene(&self) -> Scene {
        let mut scene = Scene::default();
        scene.cells = self
            .cells()
            .iter()
            .map(|c| c.vertices().iter().copied().map(pt).collect())
            .collect();
        scene.grid = self.polygon().lattice_points().into_iter().map(pt).collect();
        scene.segments = self
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                SceneSegment {
                    from: pt(a),
                    to: pt(b),
                    weight: e.length(),
                }
            })
            .collect();
        scene
    }
}

impl MarkedSubdivision {
    pub fn scene(&self) -> Scene {
        let mut scene = self.subdivision().scene();
        scene.marked = self
            .marks()
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                SceneSegment {
                    from: pt(a),
                    to: pt(b),
                    weight: e.length(),
                }
            })
            .collect();
        scene
    }
}

impl TropicalCurve {
    pub fn scene(&self) -> Scene {
        let approx = |r: &num_rational::BigRational| r.to_f64().expect("position fits in f64");
        let at = |cell: usize| {
            let (x, y) = &self.positions()[cell];
            (approx(x), approx(y))
        };
        let mut scene = Scene::default();
        scene.segments = self
            .edges()
            .iter()
            .map(|e| SceneSegment {
                from: at(e.cells.0),
                to: at(e.cells.1),
                weight: e.weight,
            })
            .collect();
        scene.rays = self
            .rays()
            .iter()
            .map(|r| SceneRay {
                from: at(r.cell),
                direction: pt(r.direction),
                weight: r.weight,
            })
            .collect();
        scene
    }
}
