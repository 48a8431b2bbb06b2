use crate::graph::CurveGraph;
use crate::TowerError;
use tropical::MarkedSubdivision;

/// One triangle's completion: the step at which its dual vertex reached
/// valency 3, and the two side classes that were already present. The
/// area of the triangle divided by the lengths of those two sides is the
/// number of ways to extend a curve across the vertex, which is why the
/// pair is recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    /// Cell index in the subdivision.
    pub cell: usize,
    /// 1-based step of the sequence; marks alone never complete a vertex.
    pub step: usize,
    /// Classes of the two sides known before the step, ascending.
    pub priors: [usize; 2],
}

/// The increasing chain of subgraphs G₀ ⊆ G₁ ⊆ … ⊆ G_m = A of the curve:
/// G₀ is the union of the marked extended classes, and each step adjoins
/// every class hanging off a bivalent vertex of the previous subgraph.
/// Such a class is determined by balancing at that vertex, so the chain
/// records the order in which a curve through a generic point set can be
/// rebuilt from its marks.
#[derive(Clone, Debug)]
pub struct MarkedGraphSequence {
    /// Class indices of G₀, in mark order.
    pub marked: Vec<usize>,
    /// Classes adjoined at each step, ascending within a step.
    pub added: Vec<Vec<usize>>,
    /// Triangles in completion order: by step, then by cell index.
    pub completions: Vec<Completion>,
    /// Whether the marked classes span the subdivision's 1-skeleton; see
    /// [`MarkedSubdivision::marks_span`]. Generic configurations make
    /// this true, but a rigid curve can be determined by marks that leave
    /// a cell vertex untouched, so it is a diagnosis, not a requirement.
    pub spanning: bool,
}

impl MarkedGraphSequence {
    /// Number of steps m with G_m = A.
    pub fn steps(&self) -> usize {
        self.added.len()
    }
}

/// Rebuilds the reconstruction order of a marked curve.
///
/// The marking must determine the curve one vertex at a time: no vertex
/// may start with all three edges marked, every adjoined class must be
/// determined at exactly one of its ends, each vertex must have two known
/// edges by the time its third arrives, and the chain must exhaust the
/// curve. Any violation means the marks do not come from a generic point
/// configuration and is reported as such.
pub fn build_graph_sequence(curve: &MarkedSubdivision) -> Result<MarkedGraphSequence, TowerError> {
    let s = curve.subdivision();
    if !s.is_simple() {
        return Err(TowerError::NotSimple);
    }
    let components = s.curve_components();
    if components != 1 {
        return Err(TowerError::Reducible(components));
    }
    let graph = CurveGraph::new(s);
    let n_classes = s.extended_classes().len();

    let mut in_g = vec![false; n_classes];
    let mut marked = Vec::with_capacity(curve.n());
    for mark in curve.marks() {
        let class = s.class_index(*mark).expect("marks are validated edges");
        in_g[class] = true;
        marked.push(class);
    }

    let mut valency: Vec<usize> = graph
        .sides
        .iter()
        .map(|sides| sides.iter().filter(|&&c| in_g[c]).count())
        .collect();
    for (v, &cell) in valency.iter().zip(&graph.triangles) {
        if *v == 3 {
            return Err(TowerError::NonGenericMarking(format!(
                "all three edges at the vertex dual to cell {cell} are marked, \
                 so one mark is redundant"
            )));
        }
    }

    let mut added: Vec<Vec<usize>> = Vec::new();
    let mut completions = Vec::new();
    let mut remaining = n_classes - marked.len();
    while remaining > 0 {
        let step = added.len() + 1;
        let batch: Vec<usize> = (0..n_classes)
            .filter(|&c| !in_g[c])
            .filter(|&c| graph.ends[c].iter().any(|&t| valency[t] == 2))
            .collect();
        if batch.is_empty() {
            return Err(TowerError::NonGenericMarking(format!(
                "no bivalent vertex determines a new edge after step {}, with {} of {} \
                 classes reached",
                step - 1,
                n_classes - remaining,
                n_classes
            )));
        }
        for &c in &batch {
            let bivalent =
                graph.ends[c].iter().filter(|&&t| valency[t] == 2).count();
            if bivalent != 1 {
                return Err(TowerError::NonGenericMarking(format!(
                    "class {c} is determined at both of its ends at step {step}, \
                     so one mark is redundant"
                )));
            }
        }
        let before = valency.clone();
        for &c in &batch {
            in_g[c] = true;
            remaining -= 1;
            for &t in &graph.ends[c] {
                valency[t] += 1;
            }
        }
        for (t, &cell) in graph.triangles.iter().enumerate() {
            if valency[t] == 3 && before[t] != 3 {
                if before[t] != 2 {
                    return Err(TowerError::NonGenericMarking(format!(
                        "the vertex dual to cell {cell} gains {} edges in step {step}",
                        3 - before[t]
                    )));
                }
                // `before` tracks counts, not membership; a side was
                // known before the step iff it is not in this batch.
                let mut known: Vec<usize> = graph.sides[t]
                    .iter()
                    .copied()
                    .filter(|&c| in_g[c] && !batch.contains(&c))
                    .collect();
                known.sort_unstable();
                let [a, b] = known[..] else {
                    unreachable!("a bivalent vertex has two known sides")
                };
                let priors = [a, b];
                completions.push(Completion { cell, step, priors });
            }
        }
        added.push(batch);
    }

    debug_assert_eq!(
        completions.len(),
        graph.triangles.len(),
        "every vertex completes once the chain exhausts the curve"
    );
    Ok(MarkedGraphSequence {
        marked,
        added,
        completions,
        spanning: curve.marks_span(),
    })
}
