//! Reduction of minimal Ramsey graphs for cyclicity down to the two base
//! graphs by triangle-aware edge contraction, with full traces and validated
//! minor models replayed into the original graph.

use crate::graph::{Edge, Graph, GraphError};
use crate::iso::are_isomorphic;
use crate::sparsity::{self, SparsityError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReducerError {
    #[error("input graph is not Ramsey for cyclicity at r = {0}")]
    NotRamsey(usize),
    #[error("input graph is not minimal Ramsey for cyclicity")]
    NotMinimal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal assertion failed (theorem-falsifying): {0}")]
    Internal(String),
    #[error(transparent)]
    Sparsity(#[from] SparsityError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The two reduction targets.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseTag {
    K5MinusE,
    K4VeeK4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ReductionStepKind {
    ContractEdge { edge: Edge },
    DeleteEdge { edge: Edge },
    DropIsolatedVertex { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    #[serde(flatten)]
    pub kind: ReductionStepKind,
    #[serde(with = "crate::graph6::serde_graph6")]
    pub graph_after: Graph,
}

/// Step list from a minimal Ramsey graph down to a recognized base graph.
/// Edges and vertices in each step refer to the labels of the graph the step
/// was applied to (the previous `graph_after`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    #[serde(with = "crate::graph6::serde_graph6")]
    pub start: Graph,
    pub steps: Vec<ReductionStep>,
    pub base: BaseTag,
}

impl ReductionTrace {
    pub fn contraction_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s.kind, ReductionStepKind::ContractEdge { .. }))
            .count()
    }

    pub fn final_graph(&self) -> &Graph {
        self.steps.last().map(|s| &s.graph_after).unwrap_or(&self.start)
    }
}

/// Branch-set model of a base-graph minor inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub base: BaseTag,
    /// The base graph exactly as labeled at the end of the reduction.
    #[serde(with = "crate::graph6::serde_graph6")]
    pub base_graph: Graph,
    /// base vertex -> original vertices (disjoint, connected in the host).
    pub branch_sets: Vec<Vec<usize>>,
    /// base edge -> host edge joining the two branch sets.
    pub edge_map: Vec<(Edge, Edge)>,
}

/// Edges lying in at most one triangle, sorted.
pub fn contractible_edges(g: &Graph) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|&e| g.triangle_count(e).expect("own edge") <= 1)
        .collect()
}

pub fn recognize_base(g: &Graph) -> Option<BaseTag> {
    if are_isomorphic(g, &crate::graph::k5_minus_e()) {
        Some(BaseTag::K5MinusE)
    } else if are_isomorphic(g, &crate::graph::k4_vee_k4()) {
        Some(BaseTag::K4VeeK4)
    } else {
        None
    }
}

fn is_ramsey(g: &Graph, r: usize) -> Result<bool, SparsityError> {
    Ok(sparsity::is_ramsey_cyclicity(g, r)?.is_ramsey())
}

/// Deletes sorted-first edges whose removal keeps the graph Ramsey until
/// none remains, then drops isolated vertices. Records every step.
fn extract_minimal_steps(
    g: &Graph,
    r: usize,
) -> Result<(Graph, Vec<ReductionStep>), ReducerError> {
    if !is_ramsey(g, r)? {
        return Err(ReducerError::NotRamsey(r));
    }
    let mut current = g.clone();
    let mut steps = Vec::new();
    'deletions: loop {
        for &f in current.edges() {
            let candidate = current.remove_edge(f)?;
            if is_ramsey(&candidate, r)? {
                current = candidate;
                steps.push(ReductionStep {
                    kind: ReductionStepKind::DeleteEdge { edge: f },
                    graph_after: current.clone(),
                });
                continue 'deletions;
            }
        }
        break;
    }
    // Drop isolated vertices smallest-first; labels shift after each drop.
    loop {
        match (0..current.n()).find(|&v| current.degree(v) == 0) {
            None => break,
            Some(v) => {
                let keep: Vec<usize> = (0..current.n()).filter(|&x| x != v).collect();
                let (next, _) = current.induced(&keep);
                current = next;
                steps.push(ReductionStep {
                    kind: ReductionStepKind::DropIsolatedVertex { vertex: v },
                    graph_after: current.clone(),
                });
            }
        }
    }
    Ok((current, steps))
}

/// Some minimal Ramsey subgraph of a Ramsey graph.
pub fn minimal_ramsey_subgraph(g: &Graph, r: usize) -> Result<Graph, ReducerError> {
    let (minimal, _) = extract_minimal_steps(g, r)?;
    let report = sparsity::is_minimal_ramsey(&minimal, r)?;
    if !report.verdict {
        return Err(ReducerError::Internal(format!(
            "extraction ended in a non-minimal graph ({:?})",
            report.reason
        )));
    }
    Ok(minimal)
}

/// Alternates triangle-aware contraction with re-extraction of a minimal
/// Ramsey subgraph until no contractible edge remains, then recognizes the
/// base graph. r = 2 throughout; the input must be in M(C).
pub fn reduce_to_base(g: &Graph) -> Result<ReductionTrace, ReducerError> {
    let report = sparsity::is_minimal_ramsey(g, 2)?;
    if !report.verdict {
        return Err(ReducerError::NotMinimal);
    }
    let mut current = g.clone();
    let mut steps: Vec<ReductionStep> = Vec::new();
    let max_contractions = g.n().saturating_sub(5);
    let mut contractions = 0usize;
    loop {
        let candidates = contractible_edges(&current);
        let e = match candidates.first() {
            None => break,
            Some(&e) => e,
        };
        current = current.contract_edge(e)?;
        contractions += 1;
        if contractions > max_contractions {
            return Err(ReducerError::Internal(format!(
                "more than v - 5 = {max_contractions} contractions"
            )));
        }
        steps.push(ReductionStep {
            kind: ReductionStepKind::ContractEdge { edge: e },
            graph_after: current.clone(),
        });
        if !is_ramsey(&current, 2)? {
            // Contracting an edge in <= 1 triangle preserves Ramseyness.
            return Err(ReducerError::Internal(format!(
                "contraction of {e:?} destroyed the Ramsey property"
            )));
        }
        // Skip re-extraction when the contracted graph is already minimal.
        if !sparsity::is_minimal_ramsey(&current, 2)?.verdict {
            let (minimal, extra) = extract_minimal_steps(&current, 2)?;
            current = minimal;
            steps.extend(extra);
        }
    }
    if current.n() > 6 {
        return Err(ReducerError::Internal(format!(
            "reduction stalled at {} > 6 vertices with no contractible edge",
            current.n()
        )));
    }
    let base = recognize_base(&current).ok_or_else(|| {
        ReducerError::Internal("irreducible graph is not one of the two bases".into())
    })?;
    Ok(ReductionTrace {
        start: g.clone(),
        steps,
        base,
    })
}

/// Branch-set bookkeeping for replaying a trace inside the original graph.
struct Replay {
    /// current vertex -> original vertices
    branch_sets: Vec<Vec<usize>>,
    /// current edge -> original edge
    edge_origin: std::collections::BTreeMap<Edge, Edge>,
}

impl Replay {
    fn identity(g: &Graph) -> Replay {
        Replay {
            branch_sets: (0..g.n()).map(|v| vec![v]).collect(),
            edge_origin: g.edges().iter().map(|&e| (e, e)).collect(),
        }
    }

    fn apply(&mut self, kind: &ReductionStepKind) {
        match *kind {
            ReductionStepKind::DeleteEdge { edge } => {
                self.edge_origin.remove(&edge);
            }
            ReductionStepKind::DropIsolatedVertex { vertex } => {
                self.branch_sets.remove(vertex);
                let shift = |x: usize| if x > vertex { x - 1 } else { x };
                self.edge_origin = self
                    .edge_origin
                    .iter()
                    .map(|(&Edge(u, v), &orig)| (Edge::new(shift(u), shift(v)), orig))
                    .collect();
            }
            ReductionStepKind::ContractEdge { edge: Edge(a, b) } => {
                let moved = std::mem::take(&mut self.branch_sets[b]);
                self.branch_sets[a].extend(moved);
                self.branch_sets[a].sort_unstable();
                self.branch_sets.remove(b);
                let relabel = |x: usize| {
                    if x == b {
                        a
                    } else if x > b {
                        x - 1
                    } else {
                        x
                    }
                };
                let mut next: std::collections::BTreeMap<Edge, Edge> = Default::default();
                // Sorted iteration makes the survivor of coalesced parallel
                // edges the lexicographically first pre-image.
                for (&Edge(u, v), &orig) in self.edge_origin.iter() {
                    let (ru, rv) = (relabel(u), relabel(v));
                    if ru == rv {
                        continue;
                    }
                    next.entry(Edge::new(ru, rv)).or_insert(orig);
                }
                self.edge_origin = next;
            }
        }
    }
}

/// Finds a K5-e or K4vK4 minor model in any graph with `e >= 2v - 1`:
/// extracts a minimal Ramsey subgraph, reduces it to a base, and replays the
/// trace maintaining branch sets in the original graph.
pub fn find_base_minor(g: &Graph) -> Result<MinorModel, ReducerError> {
    if g.m() + 1 < 2 * g.n() {
        return Err(ReducerError::Precondition(format!(
            "need e >= 2v - 1, got e = {}, v = {}",
            g.m(),
            g.n()
        )));
    }
    let mut replay = Replay::identity(g);
    let (minimal, pre_steps) = extract_minimal_steps(g, 2)?;
    for step in &pre_steps {
        replay.apply(&step.kind);
    }
    let trace = reduce_to_base(&minimal)?;
    for step in &trace.steps {
        replay.apply(&step.kind);
    }
    let base_graph = trace.final_graph().clone();
    let edge_map: Vec<(Edge, Edge)> = replay
        .edge_origin
        .iter()
        .map(|(&e, &orig)| (e, orig))
        .collect();
    let model = MinorModel {
        base: trace.base,
        base_graph,
        branch_sets: replay.branch_sets,
        edge_map,
    };
    if !validate_minor_model(g, &model) {
        return Err(ReducerError::Internal(
            "replayed minor model failed validation".into(),
        ));
    }
    Ok(model)
}

/// Checks all minor-model invariants against `g`: disjoint nonempty branch
/// sets inducing connected subgraphs, and base edges mapped to host edges
/// joining the right branch sets.
pub fn validate_minor_model(g: &Graph, m: &MinorModel) -> bool {
    let base = &m.base_graph;
    if m.branch_sets.len() != base.n() {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= g.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        // Connectivity of the induced subgraph.
        let inset: std::collections::HashSet<usize> = set.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![set[0]];
        seen.insert(set[0]);
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if inset.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        if seen.len() != set.len() {
            return false;
        }
    }
    // Every base edge mapped exactly once to a host edge between its sets.
    let mut covered: std::collections::HashSet<Edge> = Default::default();
    for &(be, he) in &m.edge_map {
        if !base.contains(be) || !g.contains(he) || !covered.insert(be) {
            return false;
        }
        let (s, t) = (owner[he.0], owner[he.1]);
        if s == usize::MAX || t == usize::MAX {
            return false;
        }
        if !((s == be.0 && t == be.1) || (s == be.1 && t == be.0)) {
            return false;
        }
    }
    covered.len() == base.m()
}

/// Exhaustive labeled scan: all 2-connected graphs on `n` vertices with at
/// most `max_edges` edges in which every edge lies in at least two
/// triangles. Desk scale (n <= 7 means 2^21 masks).
pub fn triangle_saturated_scan(n: usize, max_edges: usize) -> Vec<Graph> {
    assert!(n <= 8, "labeled scan is desk-scale only");
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let k = slots.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << k) {
        if (mask.count_ones() as usize) > max_edges {
            continue;
        }
        let mut rows = [0u16; 8];
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = slots[i];
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        let mut saturated = true;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = slots[i];
            if (rows[u] & rows[v]).count_ones() < 2 {
                saturated = false;
                break;
            }
        }
        if !saturated {
            continue;
        }
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges).expect("scan edges valid");
        if g.is_two_connected() {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, k4_vee_k4, k5_minus_e, Graph};

    #[test]
    fn contractible_edge_examples() {
        assert!(contractible_edges(&k5_minus_e()).is_empty());
        assert!(contractible_edges(&complete(4)).is_empty());
        assert_eq!(contractible_edges(&cycle(6)).len(), 6);
        assert!(contractible_edges(&k4_vee_k4()).is_empty());
    }

    #[test]
    fn minimal_subgraph_of_k5() {
        let m = minimal_ramsey_subgraph(&complete(5), 2).unwrap();
        assert!(are_isomorphic(&m, &k5_minus_e()));
    }

    #[test]
    fn minimal_subgraph_fixed_point() {
        let m = minimal_ramsey_subgraph(&k5_minus_e(), 2).unwrap();
        assert_eq!(m, k5_minus_e());
    }

    #[test]
    fn minimal_subgraph_strips_pendant() {
        let g = k5_minus_e().add_vertices(1).add_edge(0, 5).unwrap();
        let m = minimal_ramsey_subgraph(&g, 2).unwrap();
        assert_eq!(m, k5_minus_e());
    }

    #[test]
    fn minimal_subgraph_rejects_non_ramsey() {
        assert!(matches!(
            minimal_ramsey_subgraph(&cycle(6), 2),
            Err(ReducerError::NotRamsey(2))
        ));
    }

    #[test]
    fn reduce_bases_zero_steps() {
        let t = reduce_to_base(&k5_minus_e()).unwrap();
        assert_eq!(t.base, BaseTag::K5MinusE);
        assert!(t.steps.is_empty());
        let t = reduce_to_base(&k4_vee_k4()).unwrap();
        assert_eq!(t.base, BaseTag::K4VeeK4);
        assert!(t.steps.is_empty());
    }

    #[test]
    fn reduce_rejects_non_minimal() {
        assert!(matches!(
            reduce_to_base(&complete(5)),
            Err(ReducerError::NotMinimal)
        ));
    }

    #[test]
    fn minor_model_identity_on_base() {
        let g = k5_minus_e();
        let m = find_base_minor(&g).unwrap();
        assert_eq!(m.base, BaseTag::K5MinusE);
        assert!(validate_minor_model(&g, &m));
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn minor_model_in_k6() {
        let g = complete(6);
        let m = find_base_minor(&g).unwrap();
        assert!(validate_minor_model(&g, &m));
    }

    #[test]
    fn minor_model_rejects_sparse_input() {
        assert!(matches!(
            find_base_minor(&cycle(8)),
            Err(ReducerError::Precondition(_))
        ));
    }

    #[test]
    fn validator_rejects_overlapping_sets() {
        let g = complete(6);
        let mut m = find_base_minor(&g).unwrap();
        // Force an overlap.
        let v = m.branch_sets[0][0];
        m.branch_sets[1].push(v);
        assert!(!validate_minor_model(&g, &m));
    }

    #[test]
    fn validator_rejects_wrong_edge_map() {
        let g = complete(6);
        let mut m = find_base_minor(&g).unwrap();
        m.edge_map.pop();
        assert!(!validate_minor_model(&g, &m));
    }

    #[test]
    fn scan_small_triangle_saturated() {
        // On 5 vertices with delta >= 3, tight size, the only 2-connected
        // triangle-saturated graph is K5-e (plus K5 itself at e = 10, above
        // the tight bound).
        let found = triangle_saturated_scan(5, 9);
        let tight: Vec<&Graph> = found
            .iter()
            .filter(|g| g.m() == 9 && g.min_degree() == 3)
            .collect();
        assert!(!tight.is_empty());
        assert!(tight.iter().all(|g| are_isomorphic(g, &k5_minus_e())));
    }
}
