//! Simple undirected graphs with stable vertex ids, the named base graphs,
//! contraction, and the edge-list text format.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// An undirected edge, stored with `u < v`. Serializes as `[u, v]`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop; loops are rejected
    /// earlier by every construction path.
    pub fn new(u: usize, v: usize) -> Edge {
        assert!(u != v, "loop edge ({u},{u})");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    /// The endpoint other than `x`; panics if `x` is not an endpoint.
    pub fn other(self, x: usize) -> usize {
        if x == self.0 {
            self.1
        } else {
            assert_eq!(x, self.1);
            self.0
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {id} out of range for graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Edge),
    #[error("edge {0:?} not present")]
    EdgeNotPresent(Edge),
}

/// Errors from the text formats, reported with 1-based line numbers
/// (edge list) or byte offsets (graph6).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header \"n m\"")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge \"{text}\"")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: vertex {id} out of range (n = {n})")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: loop edge at vertex {id}")]
    LoopEdge { line: usize, id: usize },
    #[error("line {line}: duplicate edge {edge:?}")]
    DuplicateEdge { line: usize, edge: Edge },
    #[error("expected {expected} edges, found {got}")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error("graph6 offset {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

/// Input text format for graphs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// Immutable simple undirected graph. Vertices are `0..n`; the edge list is
/// kept sorted so every algorithm in the crate iterates deterministically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
        let mut es: Vec<Edge> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { id: v, n });
            }
            es.push(Edge::new(u, v));
        }
        es.sort_unstable();
        for w in es.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0]));
            }
        }
        Ok(Graph::from_sorted(n, es))
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &Edge(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    /// Index of `e` in the sorted edge list.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of common neighbours of the endpoints of `e`, i.e. the number
    /// of triangles of the graph containing `e`.
    pub fn triangle_count(&self, e: Edge) -> Result<usize, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::EdgeNotPresent(e));
        }
        Ok(self.common_neighbors(e.0, e.1))
    }

    fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Contracts `e`, coalescing parallel edges and dropping loops. The merged
    /// vertex takes `min(u, v)`; ids above `max(u, v)` shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::EdgeNotPresent(e));
        }
        let (a, b) = e.endpoints();
        let relabel = |w: usize| -> usize {
            if w == b {
                a
            } else if w > b {
                w - 1
            } else {
                w
            }
        };
        let mut es: Vec<Edge> = Vec::with_capacity(self.edges.len());
        for &Edge(u, v) in &self.edges {
            let (ru, rv) = (relabel(u), relabel(v));
            if ru == rv {
                continue; // the contracted edge, or a parallel copy turned loop
            }
            es.push(Edge::new(ru, rv));
        }
        es.sort_unstable();
        es.dedup();
        Ok(Graph::from_sorted(self.n - 1, es))
    }

    /// The graph with edge `e` removed (vertex set unchanged).
    pub fn remove_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let idx = self.edge_index(e).ok_or(GraphError::EdgeNotPresent(e))?;
        let mut es = self.edges.clone();
        es.remove(idx);
        Ok(Graph::from_sorted(self.n, es))
    }

    /// The graph plus edge `e`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { id: u.max(v), n: self.n });
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let e = Edge::new(u, v);
        if self.contains(e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        let mut es = self.edges.clone();
        es.push(e);
        es.sort_unstable();
        Ok(Graph::from_sorted(self.n, es))
    }

    /// The graph with `extra` fresh isolated vertices appended.
    pub fn add_vertices(&self, extra: usize) -> Graph {
        Graph::from_sorted(self.n + extra, self.edges.clone())
    }

    /// Subgraph induced on `verts` (deduplicated, sorted). Returns the
    /// subgraph plus the map new id -> old id.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = verts.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let es: Vec<Edge> = self
            .edges
            .iter()
            .filter(|Edge(u, v)| pos[*u] != usize::MAX && pos[*v] != usize::MAX)
            .map(|&Edge(u, v)| Edge::new(pos[u], pos[v]))
            .collect();
        (Graph::from_sorted(keep.len(), es), keep)
    }

    /// Drops vertices of degree zero. Returns the graph plus new id -> old id.
    pub fn drop_isolated(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// True iff the graph is connected, has at least 3 vertices, and has no
    /// cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        // Iterative Tarjan articulation-point search rooted at 0.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut timer = 0usize;
        let mut root_children = 0usize;
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut().as_deref_mut() {
            if *idx < self.adj[v].len() {
                let w = self.adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, 0));
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        return false; // p is a cut vertex
                    }
                }
            }
        }
        root_children < 2
    }

    /// Proper 2-colourability check; returns the partition side per vertex
    /// when bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn structural_report(&self) -> StructuralReport {
        StructuralReport {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            is_two_connected: self.is_two_connected(),
            is_bipartite: self.is_bipartite(),
            component_count: self.component_count(),
        }
    }

    /// Edge-list text: header `n m`, then one `u v` line per edge.
    pub fn to_edgelist(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for Edge(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Exact structural facts used by the membership invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_two_connected: bool,
    pub is_bipartite: bool,
    pub component_count: usize,
}

/// Parses the edge-list format. `#` starts a comment; blank lines are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        if header.is_none() {
            let n = it
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or(ParseError::BadHeader { line: line_no })?;
            let m = it
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or(ParseError::BadHeader { line: line_no })?;
            if it.next().is_some() {
                return Err(ParseError::BadHeader { line: line_no });
            }
            header = Some((n, m, line_no));
            continue;
        }
        let (n, _, _) = header.unwrap();
        let parse_vertex = |tok: Option<&str>| -> Result<usize, ParseError> {
            tok.and_then(|t| t.parse::<usize>().ok())
                .ok_or(ParseError::BadEdge {
                    line: line_no,
                    text: line.to_string(),
                })
        };
        let u = parse_vertex(it.next())?;
        let v = parse_vertex(it.next())?;
        if it.next().is_some() {
            return Err(ParseError::BadEdge {
                line: line_no,
                text: line.to_string(),
            });
        }
        if u == v {
            return Err(ParseError::LoopEdge { line: line_no, id: u });
        }
        for id in [u, v] {
            if id >= n {
                return Err(ParseError::VertexOutOfRange { line: line_no, id, n });
            }
        }
        let e = Edge::new(u, v);
        if !seen.insert(e) {
            return Err(ParseError::DuplicateEdge { line: line_no, edge: e });
        }
        edges.push(e);
    }
    let (n, m, line) = header.ok_or(ParseError::BadHeader { line: 1 })?;
    let _ = line;
    if edges.len() != m {
        return Err(ParseError::WrongEdgeCount {
            expected: m,
            got: edges.len(),
        });
    }
    edges.sort_unstable();
    Ok(Graph::new(n, edges.into_iter().map(|Edge(u, v)| (u, v))).expect("validated above"))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Graph6 => crate::graph6::parse_graph6(text.trim()),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => g.to_edgelist(),
        GraphFormat::Graph6 => crate::graph6::to_graph6(g),
    }
}

/// Tags for the distinguished graphs of the theory.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphTag {
    K5MinusE,
    K4VeeK4,
    K35,
    Kn(usize),
    Cn(usize),
    Custom,
}

/// A graph together with the name it was built from; tagged graphs always
/// match their definition because only these constructors produce them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGraph {
    pub tag: GraphTag,
    #[serde(with = "crate::graph6::serde_graph6")]
    pub graph: Graph,
}

impl NamedGraph {
    pub fn from_tag(tag: GraphTag) -> NamedGraph {
        let graph = match tag {
            GraphTag::K5MinusE => k5_minus_e(),
            GraphTag::K4VeeK4 => k4_vee_k4(),
            GraphTag::K35 => k35(),
            GraphTag::Kn(n) => complete(n),
            GraphTag::Cn(n) => cycle(n),
            GraphTag::Custom => panic!("custom tag needs an explicit graph"),
        };
        NamedGraph { tag, graph }
    }

    pub fn custom(graph: Graph) -> NamedGraph {
        NamedGraph {
            tag: GraphTag::Custom,
            graph,
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle graph")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (0..n.saturating_sub(1)).map(|v| (v, v + 1))).expect("path graph")
}

/// K5 minus one edge. Vertices 0,1,2 have full degree; 3 and 4 are the
/// non-adjacent pair.
pub fn k5_minus_e() -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            if (u, v) != (3, 4) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(5, edges).expect("k5 minus e")
}

/// Two copies of K4 identified at an edge. Vertices 0,1 span the shared edge;
/// {0,1,2,3} and {0,1,4,5} induce the two K4s.
pub fn k4_vee_k4() -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for quad in [[0usize, 1, 2, 3], [0, 1, 4, 5]] {
        for i in 0..4 {
            for j in i + 1..4 {
                let (u, v) = (quad[i], quad[j]);
                if !edges.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::new(6, edges).expect("k4 vee k4")
}

/// Complete bipartite K_{3,5} with parts {0,1,2} and {3..8}.
pub fn k35() -> Graph {
    let edges = (0..3).flat_map(|u| (3..8).map(move |v| (u, v)));
    Graph::new(8, edges).expect("k35")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_k4_edgelist() {
        let g = parse_edgelist("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g, complete(4));
    }

    #[test]
    fn parse_empty_graph() {
        let g = parse_edgelist("3 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn parse_comments_and_blanks() {
        let g = parse_edgelist("# triangle\n3 3\n0 1 # first\n\n1 2\n0 2\n").unwrap();
        assert_eq!(g, cycle(3));
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert_eq!(
            parse_edgelist("2 1\n0 0"),
            Err(ParseError::LoopEdge { line: 2, id: 0 })
        );
        assert_eq!(
            parse_edgelist("2 2\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                edge: Edge(0, 1)
            })
        );
        assert_eq!(
            parse_edgelist("2 1\n0 5"),
            Err(ParseError::VertexOutOfRange { line: 2, id: 5, n: 2 })
        );
        assert!(matches!(
            parse_edgelist("x y"),
            Err(ParseError::BadHeader { line: 1 })
        ));
        assert_eq!(
            parse_edgelist("3 2\n0 1"),
            Err(ParseError::WrongEdgeCount { expected: 2, got: 1 })
        );
    }

    #[test]
    fn contract_triangle_gives_k2() {
        let g = cycle(3);
        let h = g.contract_edge(Edge(0, 1)).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 1); // parallel edges coalesce
    }

    #[test]
    fn contract_c4_gives_c3() {
        let h = cycle(4).contract_edge(Edge(0, 1)).unwrap();
        assert_eq!(h, cycle(3));
    }

    #[test]
    fn contract_k5e_three_triangle_edge() {
        // Edge {0,1} has common neighbours {2,3,4}, so e' = 9 - 1 - 3 = 5 and
        // the result is K4 minus the edge between the old non-adjacent pair.
        let g = k5_minus_e();
        assert_eq!(g.triangle_count(Edge(0, 1)).unwrap(), 3);
        let h = g.contract_edge(Edge(0, 1)).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.m(), 5);
        assert!(!h.has_edge(2, 3)); // old vertices 3,4 stay non-adjacent
    }

    #[test]
    fn contraction_relabels_deterministically() {
        // Contracting {1,3} in the path 0-1-2-3-4: vertex 3 merges into 1,
        // vertex 4 becomes 3.
        let g = path(5);
        let h = g.contract_edge(Edge(2, 3)).unwrap();
        assert_eq!(h.edges(), &[Edge(0, 1), Edge(1, 2), Edge(2, 3)]);
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(cycle(5).triangle_count(Edge(0, 1)).unwrap(), 0);
        assert_eq!(complete(4).triangle_count(Edge(0, 1)).unwrap(), 2);
        assert_eq!(
            cycle(5).triangle_count(Edge(0, 2)),
            Err(GraphError::EdgeNotPresent(Edge(0, 2)))
        );
    }

    #[test]
    fn structural_reports() {
        let r = k5_minus_e().structural_report();
        assert_eq!(
            r,
            StructuralReport {
                min_degree: 3,
                max_degree: 4,
                is_two_connected: true,
                is_bipartite: false,
                component_count: 1
            }
        );
        let r = path(3).structural_report();
        assert_eq!(
            r,
            StructuralReport {
                min_degree: 1,
                max_degree: 2,
                is_two_connected: false,
                is_bipartite: true,
                component_count: 1
            }
        );
        let r = k35().structural_report();
        assert_eq!(
            r,
            StructuralReport {
                min_degree: 3,
                max_degree: 5,
                is_two_connected: true,
                is_bipartite: true,
                component_count: 1
            }
        );
    }

    #[test]
    fn base_graph_sizes() {
        assert_eq!((k5_minus_e().n(), k5_minus_e().m()), (5, 9));
        assert_eq!((k4_vee_k4().n(), k4_vee_k4().m()), (6, 11));
        assert_eq!((k35().n(), k35().m()), (8, 15));
    }

    #[test]
    fn two_connectivity_cases() {
        assert!(cycle(4).is_two_connected());
        assert!(!path(4).is_two_connected());
        assert!(k4_vee_k4().is_two_connected());
        let mut bowtie: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)];
        let g = Graph::new(5, bowtie.drain(..)).unwrap();
        assert!(!g.is_two_connected()); // 2 is a cut vertex
    }
}
