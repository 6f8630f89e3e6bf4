//! Forests of cycles, their embedding into minimal Ramsey graphs for
//! cyclicity, and the colouring-extension machinery: every
//! cycle-monochromatic 2-edge-colouring of the forest extends to a
//! colouring of the host with no other monochromatic cycle.
//!
//! The host is grown by a replayable build script. Each step is one of the
//! growth constructions applied at a planned site, and each step carries a
//! local colour rule; the extension replays the script, validating after
//! every step that no stray monochromatic cycle appeared, and backtracks
//! over the small set of local alternatives when the primary rule is
//! blocked by the surrounding colouring.

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{k4_vee_k4, k5_minus_e, Edge, Graph, GraphError};
use crate::oracle::OracleError;
use crate::sparsity::{self, SparsityError};
use crate::util::{with_jobs, UnionFind};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("cycle {index} is shorter than 3")]
    CycleTooShort { index: usize },
    #[error("cycle {index} repeats a vertex")]
    RepeatedVertex { index: usize },
    #[error("cycle {index} shares more than one vertex with the earlier cycles")]
    SharesTooMany { index: usize },
    #[error("forest spec: {0}")]
    BadSpec(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("colouring extension failed (theorem-falsifying): {0}")]
    ExtensionFailed(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Sparsity(#[from] SparsityError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A forest of cycles: an ordered list of simple cycles, each sharing at
/// most one vertex with the union of its predecessors; consequently every
/// edge lies in exactly one cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestOfCycles {
    /// Cycles with the caller's vertex labels.
    cycles: Vec<Vec<usize>>,
    /// Cycles over normalized ids 0..vertex_count (first-appearance order).
    #[serde(skip)]
    norm: Vec<Vec<usize>>,
    /// normalized id -> caller label
    #[serde(skip)]
    labels: Vec<usize>,
    /// Shared vertex (normalized) of each cycle with the earlier union.
    #[serde(skip)]
    attach: Vec<Option<usize>>,
}

impl ForestOfCycles {
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<ForestOfCycles, CycloError> {
        if cycles.is_empty() {
            return Err(CycloError::BadSpec("need at least one cycle".into()));
        }
        let mut labels: Vec<usize> = Vec::new();
        let mut id_of: HashMap<usize, usize> = HashMap::new();
        let mut norm: Vec<Vec<usize>> = Vec::new();
        let mut attach: Vec<Option<usize>> = Vec::new();
        let mut seen_vertices: BTreeSet<usize> = BTreeSet::new();
        for (index, cyc) in cycles.iter().enumerate() {
            if cyc.len() < 3 {
                return Err(CycloError::CycleTooShort { index });
            }
            let distinct: BTreeSet<usize> = cyc.iter().copied().collect();
            if distinct.len() != cyc.len() {
                return Err(CycloError::RepeatedVertex { index });
            }
            let mut ncyc = Vec::with_capacity(cyc.len());
            for &label in cyc {
                let id = *id_of.entry(label).or_insert_with(|| {
                    labels.push(label);
                    labels.len() - 1
                });
                ncyc.push(id);
            }
            let shared: Vec<usize> = ncyc
                .iter()
                .copied()
                .filter(|v| seen_vertices.contains(v))
                .collect();
            if shared.len() > 1 {
                return Err(CycloError::SharesTooMany { index });
            }
            attach.push(shared.first().copied());
            seen_vertices.extend(ncyc.iter().copied());
            norm.push(ncyc);
        }
        let f = ForestOfCycles {
            cycles,
            norm,
            labels,
            attach,
        };
        // Size bound sanity: n <= e <= 3(n-1)/2 for every valid forest.
        let (n, e) = (f.vertex_count(), f.edge_count());
        if !(n <= e && 2 * e <= 3 * (n - 1)) {
            return Err(CycloError::Internal(format!(
                "edge-count bound violated: n = {n}, e = {e}"
            )));
        }
        Ok(f)
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.cycles.iter().map(|c| c.len()).sum()
    }

    /// The forest as a graph over normalized ids.
    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for cyc in &self.norm {
            for i in 0..cyc.len() {
                edges.push((cyc[i], cyc[(i + 1) % cyc.len()]));
            }
        }
        Graph::new(self.vertex_count(), edges).expect("validated forest")
    }
}

/// Deserialization target for the {"cycles": [[...]]} spec format.
#[derive(Deserialize)]
struct ForestSpec {
    cycles: Vec<Vec<usize>>,
}

pub fn parse_forest_json(text: &str) -> Result<ForestOfCycles, CycloError> {
    let spec: ForestSpec =
        serde_json::from_str(text).map_err(|e| CycloError::BadSpec(e.to_string()))?;
    ForestOfCycles::new(spec.cycles)
}

/// Colour per forest cycle, indexed like `ForestOfCycles::cycles`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleColoring(pub Vec<Color>);

/// One step of the host build script. Vertex ids refer to the host as it
/// exists when the step is applied; new vertices are always appended at the
/// end. `cycle` fields are forest cycle indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step")]
pub enum BuildStep {
    /// Fixed initial host: 1 = triangle, 2 = C4, 3 = C5 (all in K5-e),
    /// 4 = bowtie in K5-e, 6 = two disjoint triangles in K4vK4. `init` lists
    /// (forest cycle index, host vertex sequence). The two bowtie colouring
    /// rules share the structural case 4.
    BaseCase {
        case: u8,
        init: Vec<(usize, Vec<usize>)>,
    },
    /// Join new vertex x to the 2-path u-v-w and delete vw (vw not in the
    /// forest). Rule: xv, xw take vw's old colour, xu the opposite.
    CreateSpace { u: usize, v: usize, w: usize, x: usize },
    /// Replace edge (v, w) by a diamond on {v, w, p, q}; the new triangle
    /// (w, p, q) joins the forest as `cycle` (w was not in the forest).
    /// Rule: triangle edges take the cycle colour t; if t equals vw's old
    /// colour the two edges at v get distinct colours, else both get vw's
    /// old colour.
    GrowTree {
        v: usize,
        w: usize,
        p: usize,
        q: usize,
        cycle: usize,
    },
    /// Insert x into `cycle` between v and w via the 2-path u-v-w (u, v, w
    /// consecutive on the cycle). Rule: vx, xw inherit the cycle colour,
    /// the chord xu gets the opposite.
    EnlargeCycle {
        cycle: usize,
        u: usize,
        v: usize,
        w: usize,
        x: usize,
    },
    /// Replace the non-forest edge (v, w) by a diamond; the new triangle
    /// (v, p, q) joins the forest as `cycle` (v lies on exactly one cycle).
    /// Rule: mirror of GrowTree with the conditioned edges at w.
    ExtendBranch {
        cycle: usize,
        v: usize,
        w: usize,
        p: usize,
        q: usize,
    },
    /// Create a further cycle at u (already on two or more cycles) by
    /// splitting the bare triangle (u, v, w) = `old_cycle` into (u, w, x) =
    /// `old_cycle` and (u, v, x2) = `new_cycle` plus the chord xx2. Rule:
    /// the chord gets the colour opposite to the two triangles when they
    /// agree, red otherwise.
    NewBranch {
        u: usize,
        v: usize,
        w: usize,
        x: usize,
        x2: usize,
        old_cycle: usize,
        new_cycle: usize,
    },
}

/// An embedding of a forest of cycles into a host in M(C).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    #[serde(with = "crate::graph6::serde_graph6")]
    pub host: Graph,
    pub requested_n: usize,
    /// forest label -> host vertex
    pub vertex_map: BTreeMap<usize, usize>,
    pub build_script: Vec<BuildStep>,
    pub forest: ForestOfCycles,
    /// Final forest cycles in host coordinates, aligned with forest.cycles.
    pub host_cycles: Vec<Vec<usize>>,
}

/// Host graph plus forest cycles in host coordinates, evolved step by step.
/// Both the planner and the colouring replay drive the same transition
/// function, so the script has one structural meaning.
#[derive(Clone)]
struct ScriptState {
    host: Graph,
    cycles: Vec<Option<Vec<usize>>>,
}

impl ScriptState {
    fn new(cycle_count: usize) -> ScriptState {
        ScriptState {
            host: Graph::empty(0),
            cycles: vec![None; cycle_count],
        }
    }

    fn with_new_vertex(g: &Graph, nbrs: &[usize]) -> Graph {
        let x = g.n();
        let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
        edges.extend(nbrs.iter().map(|&u| (x, u)));
        Graph::new(g.n() + 1, edges).expect("fresh vertex edges valid")
    }

    fn apply(&mut self, step: &BuildStep) -> Result<(), CycloError> {
        match step {
            BuildStep::BaseCase { case, init } => {
                self.host = match case {
                    1 | 2 | 3 | 4 => k5_minus_e(),
                    6 => k4_vee_k4(),
                    _ => {
                        return Err(CycloError::Internal(format!(
                            "unknown base case {case}"
                        )))
                    }
                };
                for (ci, seq) in init {
                    self.cycles[*ci] = Some(seq.clone());
                }
            }
            BuildStep::CreateSpace { u, v, w, x } => {
                self.expect_fresh(*x)?;
                let g = self.host.remove_edge(Edge::new(*v, *w))?;
                self.host = Self::with_new_vertex(&g, &[*u, *v, *w]);
            }
            BuildStep::GrowTree { v, w, p, q, cycle } => {
                self.expect_fresh(*p)?;
                let g = self.host.remove_edge(Edge::new(*v, *w))?;
                let g = Self::with_new_vertex(&g, &[*v, *w]);
                self.host = Self::with_new_vertex(&g, &[*v, *w, *p]);
                debug_assert_eq!(*q, self.host.n() - 1);
                self.cycles[*cycle] = Some(vec![*w, *p, *q]);
            }
            BuildStep::EnlargeCycle { cycle, u, v, w, x } => {
                self.expect_fresh(*x)?;
                let g = self.host.remove_edge(Edge::new(*v, *w))?;
                self.host = Self::with_new_vertex(&g, &[*u, *v, *w]);
                let seq = self.cycles[*cycle]
                    .as_mut()
                    .ok_or_else(|| CycloError::Internal("enlarging unbuilt cycle".into()))?;
                let len = seq.len();
                let pos = (0..len)
                    .find(|&i| {
                        (seq[i] == *v && seq[(i + 1) % len] == *w)
                            || (seq[i] == *w && seq[(i + 1) % len] == *v)
                    })
                    .ok_or_else(|| CycloError::Internal("split edge not on cycle".into()))?;
                seq.insert(pos + 1, *x);
            }
            BuildStep::ExtendBranch { cycle, v, w, p, q } => {
                self.expect_fresh(*p)?;
                let g = self.host.remove_edge(Edge::new(*v, *w))?;
                let g = Self::with_new_vertex(&g, &[*v, *w]);
                self.host = Self::with_new_vertex(&g, &[*v, *w, *p]);
                debug_assert_eq!(*q, self.host.n() - 1);
                self.cycles[*cycle] = Some(vec![*v, *p, *q]);
            }
            BuildStep::NewBranch {
                u,
                v,
                w,
                x,
                x2,
                old_cycle,
                new_cycle,
            } => {
                self.expect_fresh(*x)?;
                let g = self.host.remove_edge(Edge::new(*v, *w))?;
                let g = Self::with_new_vertex(&g, &[*u, *v, *w]);
                let g = g.remove_edge(Edge::new(*v, *x))?;
                self.host = Self::with_new_vertex(&g, &[*u, *v, *x]);
                debug_assert_eq!(*x2, self.host.n() - 1);
                self.cycles[*old_cycle] = Some(vec![*u, *w, *x]);
                self.cycles[*new_cycle] = Some(vec![*u, *v, *x2]);
            }
        }
        Ok(())
    }

    fn expect_fresh(&self, x: usize) -> Result<(), CycloError> {
        if x != self.host.n() {
            return Err(CycloError::Internal(format!(
                "step expects fresh vertex {x}, host has {}",
                self.host.n()
            )));
        }
        Ok(())
    }

    fn forest_edges(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for seq in self.cycles.iter().flatten() {
            for i in 0..seq.len() {
                out.insert(Edge::new(seq[i], seq[(i + 1) % seq.len()]));
            }
        }
        out
    }

    fn cycles_through(&self, v: usize) -> usize {
        self.cycles
            .iter()
            .flatten()
            .filter(|seq| seq.contains(&v))
            .count()
    }
}

// ---------------------------------------------------------------------------
// Planner
// ---------------------------------------------------------------------------

struct Planner<'f> {
    forest: &'f ForestOfCycles,
    state: ScriptState,
    script: Vec<BuildStep>,
    /// normalized forest vertex -> host vertex
    fmap: BTreeMap<usize, usize>,
    /// site host vertex -> stack of bare (unprocessed triangle) cycles
    bare_at: HashMap<usize, Vec<usize>>,
    /// (owner cycle, site vertex) -> attached cycle indices
    groups: BTreeMap<(usize, usize), Vec<usize>>,
    roots: Vec<usize>,
}

impl<'f> Planner<'f> {
    fn new(forest: &'f ForestOfCycles) -> Planner<'f> {
        // Owner of a shared vertex: the first cycle containing it.
        let mut owner: HashMap<usize, usize> = HashMap::new();
        for (i, cyc) in forest.norm.iter().enumerate() {
            for &v in cyc {
                owner.entry(v).or_insert(i);
            }
        }
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let mut roots = Vec::new();
        for (i, att) in forest.attach.iter().enumerate() {
            match att {
                None => roots.push(i),
                Some(s) => groups.entry((owner[s], *s)).or_default().push(i),
            }
        }
        Planner {
            forest,
            state: ScriptState::new(forest.cycle_count()),
            script: Vec::new(),
            fmap: BTreeMap::new(),
            bare_at: HashMap::new(),
            groups,
            roots,
        }
    }

    fn push(&mut self, step: BuildStep) -> Result<(), CycloError> {
        self.state.apply(&step)?;
        self.script.push(step);
        Ok(())
    }

    fn plan(mut self, n: usize) -> Result<(ScriptState, Vec<BuildStep>, BTreeMap<usize, usize>), CycloError> {
        let roots = self.roots.clone();
        if roots.len() == 1 && self.forest.cycle_count() == 1 {
            let len = self.forest.norm[0].len();
            let (case, seq) = match len {
                3 => (1u8, vec![0, 1, 2]),
                4 => (2, vec![0, 1, 2, 3]),
                _ => (3, vec![0, 3, 1, 4, 2]),
            };
            self.push(BuildStep::BaseCase {
                case,
                init: vec![(0, seq)],
            })?;
            self.process(0)?;
        } else if roots.len() == 1 {
            // Single component, several cycles: bowtie base covering the
            // root and its first attached cycle (index 1).
            self.push(BuildStep::BaseCase {
                case: 4,
                init: vec![(0, vec![0, 1, 3]), (1, vec![0, 2, 4])],
            })?;
            let s = self.forest.attach[1].expect("cycle 1 attaches to cycle 0");
            self.fmap.insert(s, 0);
            self.bare_at.entry(0).or_default().push(1);
            self.process(0)?;
        } else {
            // Multiple components: two disjoint triangles in K4vK4 cover
            // the first two component roots.
            let (r0, r1) = (roots[0], roots[1]);
            self.push(BuildStep::BaseCase {
                case: 6,
                init: vec![(r0, vec![0, 2, 3]), (r1, vec![1, 4, 5])],
            })?;
            self.process(r0)?;
            self.process(r1)?;
            for &r in &roots[2..] {
                self.grow_tree(r)?;
                self.process(r)?;
            }
        }
        // Padding to the requested order.
        while self.state.host.n() < n {
            self.create_space()?;
        }
        // Final vertex map keyed by caller labels.
        let mut vmap = BTreeMap::new();
        for (norm, host) in &self.fmap {
            vmap.insert(self.forest.labels[*norm], *host);
        }
        Ok((self.state, self.script, vmap))
    }

    /// Enlarges cycle `i` to its final length, aligns the abstract cycle to
    /// the host sequence, then materializes and recurses into its children.
    fn process(&mut self, i: usize) -> Result<(), CycloError> {
        let target = self.forest.norm[i].len();
        loop {
            let seq = self.state.cycles[i]
                .as_ref()
                .ok_or_else(|| CycloError::Internal("processing unbuilt cycle".into()))?;
            if seq.len() >= target {
                break;
            }
            let (u, v, w) = (seq[0], seq[1], seq[2]);
            let x = self.state.host.n();
            self.push(BuildStep::EnlargeCycle { cycle: i, u, v, w, x })?;
        }
        self.align(i)?;
        // Children grouped by site, in order of first-attaching cycle.
        let mut sites: Vec<((usize, usize), Vec<usize>)> = self
            .groups
            .iter()
            .filter(|((owner, _), _)| *owner == i)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        sites.sort_by_key(|(_, kids)| kids[0]);
        for ((_, s), kids) in &sites {
            let site_host = *self
                .fmap
                .get(s)
                .ok_or_else(|| CycloError::Internal("site not yet mapped".into()))?;
            for &kid in kids {
                if self.state.cycles[kid].is_some() {
                    continue; // pre-materialized by the base case
                }
                self.materialize_at(site_host, kid)?;
            }
        }
        for ((_, _), kids) in &sites {
            for &kid in kids {
                self.process(kid)?;
            }
        }
        Ok(())
    }

    /// Maps the abstract cycle onto its host sequence, rotating the abstract
    /// order so that every already-mapped vertex (the attach vertex, or a
    /// pre-seeded base vertex of the root) lands on its host position. At
    /// most one vertex of a cycle is pre-mapped, so a rotation always
    /// suffices.
    fn align(&mut self, i: usize) -> Result<(), CycloError> {
        let seq = self.state.cycles[i].as_ref().unwrap().clone();
        let abs = self.forest.norm[i].clone();
        if abs.len() != seq.len() {
            return Err(CycloError::Internal("cycle length mismatch".into()));
        }
        let len = abs.len();
        let consistent = |shift: usize| -> bool {
            (0..len).all(|p| match self.fmap.get(&abs[(p + shift) % len]) {
                Some(&h) => h == seq[p],
                None => true,
            })
        };
        let shift = (0..len)
            .find(|&s| consistent(s))
            .ok_or_else(|| CycloError::Internal("no consistent cycle rotation".into()))?;
        for p in 0..len {
            self.fmap.insert(abs[(p + shift) % len], seq[p]);
        }
        Ok(())
    }

    /// Creates the bare triangle for `kid` at `site_host`, dispatching on
    /// how many built cycles already pass through the site.
    fn materialize_at(&mut self, site_host: usize, kid: usize) -> Result<(), CycloError> {
        let through = self.state.cycles_through(site_host);
        if through == 1 {
            let f_edges = self.state.forest_edges();
            let w = self
                .state
                .host
                .neighbors(site_host)
                .iter()
                .copied()
                .find(|&w| !f_edges.contains(&Edge::new(site_host, w)))
                .ok_or_else(|| CycloError::Internal("no spare edge at branch site".into()))?;
            let p = self.state.host.n();
            self.push(BuildStep::ExtendBranch {
                cycle: kid,
                v: site_host,
                w,
                p,
                q: p + 1,
            })?;
            self.bare_at.entry(site_host).or_default().push(kid);
        } else {
            let old = self
                .bare_at
                .get_mut(&site_host)
                .and_then(|stack| stack.pop())
                .ok_or_else(|| CycloError::Internal("no bare triangle to split".into()))?;
            let seq = self.state.cycles[old].as_ref().unwrap().clone();
            debug_assert_eq!(seq[0], site_host);
            let (v, w) = (seq[1].min(seq[2]), seq[1].max(seq[2]));
            let x = self.state.host.n();
            self.push(BuildStep::NewBranch {
                u: site_host,
                v,
                w,
                x,
                x2: x + 1,
                old_cycle: old,
                new_cycle: kid,
            })?;
            let stack = self.bare_at.entry(site_host).or_default();
            stack.push(old);
            stack.push(kid);
        }
        Ok(())
    }

    /// New disjoint triangle for a later component root: create space, then
    /// hang a diamond off the fresh vertex.
    fn grow_tree(&mut self, root: usize) -> Result<(), CycloError> {
        let v = self.space_step()?;
        let x = self.state.host.n() - 1;
        let p = self.state.host.n();
        self.push(BuildStep::GrowTree {
            v,
            w: x,
            p,
            q: p + 1,
            cycle: root,
        })?;
        Ok(())
    }

    fn create_space(&mut self) -> Result<(), CycloError> {
        self.space_step()?;
        Ok(())
    }

    /// Picks the space vertex, applies the construction, and returns the
    /// chosen centre v.
    fn space_step(&mut self) -> Result<usize, CycloError> {
        let host = &self.state.host;
        let f_edges = self.state.forest_edges();
        let deg3: Vec<usize> = (0..host.n()).filter(|&v| host.degree(v) == 3).collect();
        let v = deg3
            .iter()
            .copied()
            .find(|&v| self.state.cycles_through(v) == 1)
            .or_else(|| {
                deg3.iter()
                    .copied()
                    .find(|&v| self.state.cycles_through(v) == 0)
            })
            .ok_or_else(|| CycloError::Internal("no degree-3 space vertex".into()))?;
        let w = host
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| !f_edges.contains(&Edge::new(v, w)))
            .ok_or_else(|| CycloError::Internal("no non-forest edge at space vertex".into()))?;
        let u = host
            .neighbors(v)
            .iter()
            .copied()
            .find(|&u| u != w)
            .ok_or_else(|| CycloError::Internal("space vertex needs two neighbours".into()))?;
        let x = host.n();
        self.push(BuildStep::CreateSpace { u, v, w, x })?;
        Ok(v)
    }
}

/// Embeds the forest into a graph in M(C) on exactly `n` vertices with the
/// colouring-extension property.
pub fn embed(f: &ForestOfCycles, n: usize) -> Result<Embedding, CycloError> {
    if n < 5 || n < f.vertex_count() {
        return Err(CycloError::Precondition(format!(
            "need n >= max(5, |F|) = {}, got {n}",
            f.vertex_count().max(5)
        )));
    }
    let (state, script, vertex_map) = Planner::new(f).plan(n)?;
    let host = state.host;
    if host.n() != n {
        return Err(CycloError::Internal(format!(
            "planner produced {} vertices, wanted {n}",
            host.n()
        )));
    }
    if !sparsity::is_minimal_ramsey(&host, 2)?.verdict {
        return Err(CycloError::ExtensionFailed(
            "grown host is not minimal Ramsey".into(),
        ));
    }
    // Subgraph property through the vertex map.
    let fg = f.graph();
    for e in fg.edges() {
        let (a, b) = (
            vertex_map[&f.labels[e.0]],
            vertex_map[&f.labels[e.1]],
        );
        if !host.has_edge(a, b) {
            return Err(CycloError::Internal("vertex map not edge-preserving".into()));
        }
    }
    // Spanning case: the host adds k edges with (v+1)/2 <= k <= v-1.
    if n == f.vertex_count() {
        let k = host.m() - f.edge_count();
        if !(2 * k >= n + 1 && k <= n - 1) {
            return Err(CycloError::Internal(format!(
                "spanning edge bound violated: k = {k}, n = {n}"
            )));
        }
    }
    let host_cycles: Vec<Vec<usize>> = state
        .cycles
        .iter()
        .map(|c| c.clone().ok_or_else(|| CycloError::Internal("unbuilt cycle".into())))
        .collect::<Result<_, _>>()?;
    Ok(Embedding {
        host,
        requested_n: n,
        vertex_map,
        build_script: script,
        forest: f.clone(),
        host_cycles,
    })
}

// ---------------------------------------------------------------------------
// Colouring extension
// ---------------------------------------------------------------------------

type ColorMap = BTreeMap<Edge, Color>;

/// True iff, for each colour, the monochromatic cycles of the current
/// colouring are exactly the built forest cycles of that colour: each such
/// cycle is fully coloured with its colour, and the cycle rank of each
/// colour class equals the number of such cycles. (Forest cycles are
/// edge-disjoint, so rank equality rules out any other monochromatic cycle.)
fn extension_sound(state: &ScriptState, colors: &ColorMap, cc: &CycleColoring) -> bool {
    let n = state.host.n();
    for colour in [Color::Red, Color::Blue] {
        let mut expected = 0usize;
        for (i, seq) in state.cycles.iter().enumerate() {
            let seq = match seq {
                Some(s) => s,
                None => continue,
            };
            if cc.0[i] != colour {
                continue;
            }
            expected += 1;
            for k in 0..seq.len() {
                let e = Edge::new(seq[k], seq[(k + 1) % seq.len()]);
                if colors.get(&e) != Some(&colour) {
                    return false;
                }
            }
        }
        let mut uf = UnionFind::new(n);
        let mut rank = 0usize;
        for (e, c) in colors {
            if *c == colour && !uf.union(e.0, e.1) {
                rank += 1;
            }
        }
        if rank != expected {
            return false;
        }
    }
    true
}

/// Colour assignments a step may use: the derived primary rule first, then
/// every other assignment of the step's free edges.
fn step_candidates(
    step: &BuildStep,
    colors: &ColorMap,
    cc: &CycleColoring,
) -> Result<(Vec<(Edge, Color)>, Vec<Edge>, Vec<Color>), CycloError> {
    // Returns (forced assignments, free edges, primary colours for them).
    let get = |e: Edge| -> Result<Color, CycloError> {
        colors
            .get(&e)
            .copied()
            .ok_or_else(|| CycloError::Internal(format!("uncoloured edge {e:?}")))
    };
    match step {
        BuildStep::BaseCase { case, init } => {
            let mut forced = Vec::new();
            for (ci, seq) in init {
                let col = cc.0[*ci];
                for k in 0..seq.len() {
                    forced.push((Edge::new(seq[k], seq[(k + 1) % seq.len()]), col));
                }
            }
            let (free, primary) = match case {
                1 => {
                    let a = cc.0[init[0].0];
                    (
                        vec![Edge(0, 4), Edge(2, 3), Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(2, 4)],
                        vec![a, a, a.opposite(), a.opposite(), a.opposite(), a.opposite()],
                    )
                }
                2 => {
                    let a = cc.0[init[0].0];
                    (
                        vec![Edge(2, 4), Edge(1, 3), Edge(1, 4), Edge(0, 4), Edge(0, 2)],
                        vec![a, a.opposite(), a.opposite(), a.opposite(), a.opposite()],
                    )
                }
                3 => {
                    let a = cc.0[init[0].0];
                    (
                        vec![Edge(0, 1), Edge(1, 2), Edge(0, 4), Edge(2, 3)],
                        vec![a.opposite(); 4],
                    )
                }
                4 => {
                    let t1 = cc.0[init[0].0];
                    let t2 = cc.0[init[1].0];
                    let free = vec![Edge(1, 2), Edge(1, 4), Edge(2, 3)];
                    let primary = if t1 == t2 {
                        vec![t1.opposite(); 3]
                    } else {
                        vec![t2, t1, t2]
                    };
                    (free, primary)
                }
                6 => {
                    let a = cc.0[init[0].0];
                    let b = cc.0[init[1].0];
                    (
                        vec![Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(0, 4), Edge(0, 5)],
                        vec![
                            a.opposite(),
                            a.opposite(),
                            a.opposite(),
                            b.opposite(),
                            b.opposite(),
                        ],
                    )
                }
                _ => return Err(CycloError::Internal(format!("unknown base case {case}"))),
            };
            Ok((forced, free, primary))
        }
        BuildStep::CreateSpace { u, v, w, x } => {
            let beta = get(Edge::new(*v, *w))?;
            Ok((
                Vec::new(),
                vec![Edge::new(*x, *v), Edge::new(*x, *w), Edge::new(*x, *u)],
                vec![beta, beta, beta.opposite()],
            ))
        }
        BuildStep::GrowTree { v, w, p, q, cycle } => {
            let t = cc.0[*cycle];
            let beta = get(Edge::new(*v, *w))?;
            let forced = vec![
                (Edge::new(*w, *p), t),
                (Edge::new(*w, *q), t),
                (Edge::new(*p, *q), t),
            ];
            let free = vec![Edge::new(*v, *p), Edge::new(*v, *q)];
            let primary = if t == beta {
                vec![t, t.opposite()]
            } else {
                vec![beta, beta]
            };
            Ok((forced, free, primary))
        }
        BuildStep::EnlargeCycle { cycle, u, v, w, x } => {
            let col = cc.0[*cycle];
            Ok((
                vec![(Edge::new(*v, *x), col), (Edge::new(*w, *x), col)],
                vec![Edge::new(*u, *x)],
                vec![col.opposite()],
            ))
        }
        BuildStep::ExtendBranch { cycle, v, w, p, q } => {
            let t = cc.0[*cycle];
            let beta = get(Edge::new(*v, *w))?;
            let forced = vec![
                (Edge::new(*v, *p), t),
                (Edge::new(*v, *q), t),
                (Edge::new(*p, *q), t),
            ];
            let free = vec![Edge::new(*w, *p), Edge::new(*w, *q)];
            let primary = if t == beta {
                vec![t, t.opposite()]
            } else {
                vec![beta, beta]
            };
            Ok((forced, free, primary))
        }
        BuildStep::NewBranch {
            u,
            v,
            w,
            x,
            x2,
            old_cycle,
            new_cycle,
        } => {
            let t1 = cc.0[*old_cycle];
            let t2 = cc.0[*new_cycle];
            let forced = vec![
                (Edge::new(*u, *w), t1),
                (Edge::new(*w, *x), t1),
                (Edge::new(*u, *x), t1),
                (Edge::new(*u, *v), t2),
                (Edge::new(*v, *x2), t2),
                (Edge::new(*u, *x2), t2),
            ];
            let free = vec![Edge::new(*x, *x2)];
            let primary = if t1 == t2 {
                vec![t1.opposite()]
            } else {
                vec![Color::Red]
            };
            Ok((forced, free, primary))
        }
    }
}

/// Edges a step removes from the host (their colours are dropped).
fn step_removals(step: &BuildStep) -> Vec<Edge> {
    match step {
        BuildStep::BaseCase { .. } => Vec::new(),
        BuildStep::CreateSpace { v, w, .. }
        | BuildStep::GrowTree { v, w, .. }
        | BuildStep::ExtendBranch { v, w, .. }
        | BuildStep::EnlargeCycle { v, w, .. } => vec![Edge::new(*v, *w)],
        BuildStep::NewBranch { v, w, x, .. } => vec![Edge::new(*v, *w), Edge::new(*v, *x)],
    }
}

fn assignments_after_primary(free: &[Edge], primary: &[Color]) -> Vec<Vec<Color>> {
    let k = free.len();
    let mut out = vec![primary.to_vec()];
    for bits in 0u32..(1 << k) {
        let cand: Vec<Color> = (0..k)
            .map(|i| {
                if bits >> i & 1 == 0 {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect();
        if cand != primary {
            out.push(cand);
        }
    }
    out
}

fn extend_dfs(
    script: &[BuildStep],
    idx: usize,
    state: &mut ScriptState,
    colors: &mut ColorMap,
    cc: &CycleColoring,
) -> Result<bool, CycloError> {
    if idx == script.len() {
        return Ok(true);
    }
    let step = &script[idx];
    let (forced, free, primary) = step_candidates(step, colors, cc)?;
    let removals = step_removals(step);
    let saved_state = state.clone();
    let saved_colors = colors.clone();
    for cand in assignments_after_primary(&free, &primary) {
        state.apply(step)?;
        for e in &removals {
            colors.remove(e);
        }
        for (e, c) in &forced {
            colors.insert(*e, *c);
        }
        for (e, c) in free.iter().zip(cand.iter()) {
            colors.insert(*e, *c);
        }
        debug_assert_eq!(colors.len(), state.host.m());
        if extension_sound(state, colors, cc) && extend_dfs(script, idx + 1, state, colors, cc)? {
            return Ok(true);
        }
        *state = saved_state.clone();
        *colors = saved_colors.clone();
    }
    Ok(false)
}

/// Extends a cycle-monochromatic colouring of the forest to the whole host
/// with no monochromatic cycle outside the forest. Replays the build script
/// with each step's colour rule, backtracking deterministically over local
/// alternatives; the result is total on the host's edges.
pub fn extend_coloring(emb: &Embedding, cc: &CycleColoring) -> Result<EdgeColoring, CycloError> {
    if cc.0.len() != emb.forest.cycle_count() {
        return Err(CycloError::Precondition(format!(
            "cycle colouring has {} entries for {} cycles",
            cc.0.len(),
            emb.forest.cycle_count()
        )));
    }
    let mut state = ScriptState::new(emb.forest.cycle_count());
    let mut colors: ColorMap = BTreeMap::new();
    if !extend_dfs(&emb.build_script, 0, &mut state, &mut colors, cc)? {
        return Err(CycloError::ExtensionFailed(
            "no extension found along the build script".into(),
        ));
    }
    if state.host != emb.host {
        return Err(CycloError::Internal("replay diverged from embedding host".into()));
    }
    EdgeColoring::from_map(&emb.host, &colors).map_err(|e| CycloError::Internal(e.to_string()))
}

/// Report of the full embedding verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub host_order_ok: bool,
    pub subgraph_ok: bool,
    pub minimal_ok: bool,
    pub colorings_checked: u64,
    pub failures: Vec<String>,
}

impl EmbeddingReport {
    pub fn all_ok(&self) -> bool {
        self.host_order_ok && self.subgraph_ok && self.minimal_ok && self.failures.is_empty()
    }
}

/// Checks the three embedding properties: host order, subgraph containment,
/// and for all 2^cycles cycle-monochromatic colourings that the extension
/// has no monochromatic cycle outside the forest; plus host minimality.
pub fn verify_embedding(emb: &Embedding, jobs: usize) -> Result<EmbeddingReport, CycloError> {
    let k = emb.forest.cycle_count();
    if k > 20 {
        return Err(CycloError::Budget(format!(
            "2^{k} cycle colourings exceed the verification budget"
        )));
    }
    let host_order_ok = emb.host.n() == emb.requested_n;
    let fg = emb.forest.graph();
    let mut seen_hosts = BTreeSet::new();
    let mut subgraph_ok = emb
        .vertex_map
        .values()
        .all(|&h| h < emb.host.n() && seen_hosts.insert(h));
    for e in fg.edges() {
        let (a, b) = (
            emb.vertex_map.get(&emb.forest.labels[e.0]),
            emb.vertex_map.get(&emb.forest.labels[e.1]),
        );
        match (a, b) {
            (Some(&a), Some(&b)) if emb.host.has_edge(a, b) => {}
            _ => {
                subgraph_ok = false;
                break;
            }
        }
    }
    let minimal_ok = sparsity::is_minimal_ramsey(&emb.host, 2)?.verdict;

    let check_one = |code: u64| -> Option<String> {
        let cc = CycleColoring(
            (0..k)
                .map(|i| {
                    if code >> i & 1 == 0 {
                        Color::Red
                    } else {
                        Color::Blue
                    }
                })
                .collect(),
        );
        let ext = match extend_coloring(emb, &cc) {
            Ok(ext) => ext,
            Err(e) => return Some(format!("colouring {code:b}: {e}")),
        };
        // Independent re-check on the final colouring: per colour, the
        // monochromatic cycles must be exactly the matching forest cycles.
        for colour in [Color::Red, Color::Blue] {
            let mut expected = 0usize;
            for (i, seq) in emb.host_cycles.iter().enumerate() {
                if cc.0[i] != colour {
                    continue;
                }
                expected += 1;
                for t in 0..seq.len() {
                    let e = Edge::new(seq[t], seq[(t + 1) % seq.len()]);
                    if ext.color_of(&emb.host, e) != Some(colour.index()) {
                        return Some(format!(
                            "colouring {code:b}: forest cycle {i} not monochromatic"
                        ));
                    }
                }
            }
            let mut uf = UnionFind::new(emb.host.n());
            let mut rank = 0usize;
            for (i, e) in emb.host.edges().iter().enumerate() {
                if ext.color_of_index(i) == colour.index() && !uf.union(e.0, e.1) {
                    rank += 1;
                }
            }
            if rank != expected {
                return Some(format!(
                    "colouring {code:b}: stray monochromatic cycle in colour {colour:?}"
                ));
            }
        }
        None
    };

    let codes: Vec<u64> = (0..(1u64 << k)).collect();
    let failures: Vec<String> = with_jobs(jobs, || {
        if jobs > 1 {
            codes.par_iter().filter_map(|&c| check_one(c)).collect()
        } else {
            codes.iter().filter_map(|&c| check_one(c)).collect()
        }
    });
    Ok(EmbeddingReport {
        host_order_ok,
        subgraph_ok,
        minimal_ok,
        colorings_checked: 1 << k,
        failures,
    })
}

/// A separating pair: a graph Ramsey for the cycle family {C3..Cl} whose
/// witness colouring has monochromatic cycles of length `m` only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    #[serde(with = "crate::graph6::serde_graph6")]
    pub host: Graph,
    pub witness: EdgeColoring,
    pub cycle_length: usize,
    /// Whether the Ramsey side was additionally confirmed by the
    /// brute-force oracle (depends on the edge budget).
    pub bruteforce_confirmed: bool,
}

/// Separates {C3..Cl} from any subfamily missing C_m: the host is Ramsey for
/// the full family (every cycle of the host has length <= l), while the
/// witness colouring's only monochromatic cycle has length exactly m.
pub fn separate_cycle_families(l: usize, m: usize) -> Result<Separation, CycloError> {
    if l < 5 {
        return Err(CycloError::Precondition(
            "separation requires l >= 5 (the l = 4 case is unresolved here)".into(),
        ));
    }
    if !(3..=l).contains(&m) {
        return Err(CycloError::Precondition(format!(
            "need 3 <= m <= l, got m = {m}, l = {l}"
        )));
    }
    let forest = ForestOfCycles::new(vec![(0..m).collect()])?;
    let n = m.max(5);
    let emb = embed(&forest, n)?;
    debug_assert!(emb.host.n() <= l);
    let witness = extend_coloring(&emb, &CycleColoring(vec![Color::Red]))?;
    // Oracle confirmation at desk scale.
    let budget = crate::oracle::OracleBudget::default();
    let bruteforce_confirmed = if emb.host.m() <= 20 {
        let res = crate::oracle::is_ramsey_bruteforce(&emb.host, 2, &budget)?;
        if !res.is_ramsey {
            return Err(CycloError::ExtensionFailed(
                "separation host is not Ramsey by brute force".into(),
            ));
        }
        let cyc = crate::oracle::find_monochromatic_cycle(&emb.host, &witness)?
            .ok_or_else(|| CycloError::Internal("witness lost its forest cycle".into()))?;
        if cyc.len() != m {
            return Err(CycloError::Internal(format!(
                "witness monochromatic cycle has length {}, wanted {m}",
                cyc.len()
            )));
        }
        true
    } else {
        false
    };
    Ok(Separation {
        host: emb.host,
        witness,
        cycle_length: m,
        bruteforce_confirmed,
    })
}

/// Exhaustively generates all forests of cycles on at most `max_n` vertices
/// up to isomorphism (as cycle-list specs over ids 0..n). A forest of
/// cycles is exactly a graph whose blocks are cycles, so graph canonical
/// forms deduplicate correctly.
pub fn all_forests_up_to(max_n: usize) -> Vec<ForestOfCycles> {
    let mut out: BTreeMap<crate::iso::CanonicalForm, ForestOfCycles> = BTreeMap::new();
    let mut stack: Vec<ForestOfCycles> = Vec::new();
    for len in 3..=max_n {
        let f = ForestOfCycles::new(vec![(0..len).collect()]).expect("single cycle");
        stack.push(f);
    }
    while let Some(f) = stack.pop() {
        let key = crate::iso::canonical_form(&f.graph());
        if out.contains_key(&key) {
            continue;
        }
        out.insert(key, f.clone());
        let n = f.vertex_count();
        for len in 3..=max_n {
            // Disjoint new cycle.
            if n + len <= max_n {
                let mut cycles = f.cycles.clone();
                cycles.push((n..n + len).collect());
                stack.push(ForestOfCycles::new(cycles).expect("disjoint extension"));
            }
            // Shared at each existing vertex.
            if n + len - 1 <= max_n {
                for s in 0..n {
                    let mut cyc = vec![f.labels[s]];
                    cyc.extend(n..n + len - 1);
                    let mut cycles = f.cycles.clone();
                    cycles.push(cyc);
                    stack.push(ForestOfCycles::new(cycles).expect("shared extension"));
                }
            }
        }
    }
    out.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn triangle() -> ForestOfCycles {
        ForestOfCycles::new(vec![vec![0, 1, 2]]).unwrap()
    }

    fn bowtie() -> ForestOfCycles {
        ForestOfCycles::new(vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap()
    }

    #[test]
    fn parse_and_validate() {
        assert!(ForestOfCycles::new(vec![vec![0, 1]]).is_err());
        assert!(matches!(
            ForestOfCycles::new(vec![vec![0, 1, 2], vec![0, 2, 3]]),
            Err(CycloError::SharesTooMany { index: 1 })
        ));
        let b = bowtie();
        assert_eq!(b.vertex_count(), 5);
        assert_eq!(b.edge_count(), 6);
        let f = parse_forest_json(r#"{"cycles": [[0,1,2],[2,3,4]]}"#).unwrap();
        assert_eq!(f, bowtie());
        assert!(parse_forest_json("{").is_err());
    }

    #[test]
    fn embed_triangle_in_k5e() {
        let emb = embed(&triangle(), 5).unwrap();
        assert_eq!(emb.host, k5_minus_e());
        assert_eq!(emb.build_script.len(), 1);
        assert!(matches!(
            emb.build_script[0],
            BuildStep::BaseCase { case: 1, .. }
        ));
    }

    #[test]
    fn embed_c5_in_k5e() {
        let f = ForestOfCycles::new(vec![vec![0, 1, 2, 3, 4]]).unwrap();
        let emb = embed(&f, 5).unwrap();
        assert_eq!(emb.host, k5_minus_e());
    }

    #[test]
    fn paper_base_coloring_for_triangle() {
        // Red triangle abc: ay, cx red; path a-x-b-y-c blue.
        let emb = embed(&triangle(), 5).unwrap();
        let ext = extend_coloring(&emb, &CycleColoring(vec![Color::Red])).unwrap();
        let host = &emb.host;
        let red = |e: Edge| ext.color_of(host, e) == Some(Color::Red.index());
        for e in [Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 4), Edge(2, 3)] {
            assert!(red(e), "{e:?} should be red");
        }
        for e in [Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(2, 4)] {
            assert!(!red(e), "{e:?} should be blue");
        }
    }

    #[test]
    fn paper_base_coloring_for_c5() {
        let f = ForestOfCycles::new(vec![vec![0, 1, 2, 3, 4]]).unwrap();
        let emb = embed(&f, 5).unwrap();
        let ext = extend_coloring(&emb, &CycleColoring(vec![Color::Red])).unwrap();
        let cyc = oracle::find_monochromatic_cycle(&emb.host, &ext)
            .unwrap()
            .unwrap();
        assert_eq!(cyc.len(), 5);
    }

    #[test]
    fn embed_bowtie_orders() {
        for n in [5, 6, 7] {
            let emb = embed(&bowtie(), n).unwrap();
            assert_eq!(emb.host.n(), n);
            let rep = verify_embedding(&emb, 1).unwrap();
            assert!(rep.all_ok(), "bowtie at n={n}: {:?}", rep.failures);
        }
    }

    #[test]
    fn embed_two_disjoint_triangles_tight() {
        let f = ForestOfCycles::new(vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let emb = embed(&f, 6).unwrap();
        assert_eq!(emb.host.n(), 6);
        let rep = verify_embedding(&emb, 1).unwrap();
        assert!(rep.all_ok(), "{:?}", rep.failures);
    }

    #[test]
    fn embed_rejects_small_n() {
        assert!(matches!(
            embed(&triangle(), 4),
            Err(CycloError::Precondition(_))
        ));
        assert!(matches!(
            embed(&bowtie(), 4),
            Err(CycloError::Precondition(_))
        ));
    }

    #[test]
    fn step_local_soundness() {
        // Each step kind appears in one of these embeddings; the per-step
        // validation inside extend_coloring plus the final rank check make
        // any unsound local rule fail loudly here.
        let cases: Vec<(ForestOfCycles, usize)> = vec![
            (triangle(), 6),                                               // CreateSpace
            (ForestOfCycles::new(vec![vec![0, 1, 2, 3, 4, 5]]).unwrap(), 6), // EnlargeCycle
            (bowtie(), 5),                                                 // base 4
            (
                ForestOfCycles::new(vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap(),
                7,
            ), // ExtendBranch + NewBranch
            (
                ForestOfCycles::new(vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap(),
                9,
            ), // base 6 + GrowTree
        ];
        for (f, n) in cases {
            let emb = embed(&f, n).unwrap();
            let rep = verify_embedding(&emb, 1).unwrap();
            assert!(rep.all_ok(), "forest {:?} at n={n}: {:?}", f.cycles(), rep.failures);
        }
    }

    #[test]
    fn separation_examples() {
        let sep = separate_cycle_families(5, 5).unwrap();
        assert_eq!(sep.host, k5_minus_e());
        assert!(sep.bruteforce_confirmed);
        let sep = separate_cycle_families(5, 3).unwrap();
        assert_eq!(sep.host, k5_minus_e());
        let cyc = oracle::find_monochromatic_cycle(&sep.host, &sep.witness)
            .unwrap()
            .unwrap();
        assert_eq!(cyc.len(), 3);
        let sep = separate_cycle_families(6, 6).unwrap();
        assert_eq!(sep.host.n(), 6);
        assert!(matches!(
            separate_cycle_families(4, 3),
            Err(CycloError::Precondition(_))
        ));
        assert!(matches!(
            separate_cycle_families(6, 7),
            Err(CycloError::Precondition(_))
        ));
    }

    #[test]
    fn forest_generation_counts() {
        let forests = all_forests_up_to(6);
        // 3,4,5,6-cycles; bowtie; triangle+C4 shared; two disjoint triangles.
        let mut by_n: BTreeMap<usize, usize> = BTreeMap::new();
        for f in &forests {
            *by_n.entry(f.vertex_count()).or_default() += 1;
        }
        assert_eq!(by_n[&3], 1);
        assert_eq!(by_n[&4], 1);
        assert_eq!(by_n[&5], 2); // C5, bowtie
        assert_eq!(by_n[&6], 3); // C6, triangle+C4, 2 disjoint triangles
    }

    #[test]
    fn max_degree_star_embedding() {
        let cycles: Vec<Vec<usize>> = (0..4).map(|i| vec![0, 2 * i + 1, 2 * i + 2]).collect();
        let f = ForestOfCycles::new(cycles).unwrap();
        let emb = embed(&f, 9).unwrap();
        assert!(emb.host.max_degree() >= 8);
        let rep = verify_embedding(&emb, 1).unwrap();
        assert!(rep.all_ok(), "{:?}", rep.failures);
    }
}
