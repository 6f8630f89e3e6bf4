//! Exact (k,l)-sparsity engine: pebble-game sparsity verdicts with violating
//! witnesses, Ramsey/minimality decisions for cyclicity, forest
//! decompositions by matroid-union augmentation, and exact fractional
//! arboricity.
//!
//! The bridge used throughout: a graph is Ramsey for cyclicity at level `r`
//! iff some subgraph `H` has `(e(H)-1)/(v(H)-1) >= r`, which for integer
//! counts is exactly the failure of (r,r)-sparsity. All comparisons are on
//! integers or exact rationals; no floating point anywhere.

use crate::graph::{Edge, Graph};
use crate::util::UnionFind;
use num::rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SparsityError {
    #[error("parameters out of range: need k >= 1 and 0 <= l < 2k, got k={k}, l={l}")]
    ParamRange { k: u32, l: u32 },
    #[error("need r >= {min}, got {got}")]
    BadLevel { min: usize, got: usize },
    #[error("fractional arboricity needs at least 2 vertices")]
    TooFewVertices,
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// Verdict of the (k,l)-sparsity test. When `sparse` is false, `witness` is
/// a vertex set whose induced subgraph `H` satisfies `e(H) > k*v(H) - l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityVerdict {
    pub sparse: bool,
    pub witness: Option<Vec<usize>>,
}

/// The (k,l)-pebble game over an explicit edge list (parallel edges allowed,
/// which the fractional-arboricity reduction relies on). Each vertex starts
/// with `k` pebbles; inserting an edge requires `l+1` pebbles on its
/// endpoints, gathered by reversing directed paths to free pebbles.
struct PebbleGame {
    k: u32,
    l: u32,
    peb: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    fn new(n: usize, k: u32, l: u32) -> PebbleGame {
        PebbleGame {
            k,
            l,
            peb: vec![k; n],
            out: vec![Vec::new(); n],
        }
    }

    /// Finds a directed path from {u, v} to a vertex with a free pebble and
    /// reverses it, or returns the reachable set on failure.
    fn gather_one(&mut self, u: usize, v: usize) -> Result<(), Vec<usize>> {
        let n = self.peb.len();
        let mut parent = vec![usize::MAX; n];
        let mut visited = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        visited[u] = true;
        visited[v] = true;
        queue.push_back(u);
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            for &y in &self.out[x] {
                if visited[y] {
                    continue;
                }
                visited[y] = true;
                parent[y] = x;
                if self.peb[y] > 0 {
                    // Reverse the path y -> ... -> start, moving one pebble.
                    self.peb[y] -= 1;
                    let mut cur = y;
                    while parent[cur] != usize::MAX {
                        let p = parent[cur];
                        let pos = self.out[p]
                            .iter()
                            .position(|&t| t == cur)
                            .expect("arc on search path");
                        self.out[p].swap_remove(pos);
                        self.out[cur].push(p);
                        cur = p;
                    }
                    self.peb[cur] += 1;
                    return Ok(());
                }
                queue.push_back(y);
            }
        }
        Err((0..n).filter(|&x| visited[x]).collect())
    }

    /// Attempts to insert edge (u, v); on rejection returns the violating
    /// vertex set (closed under out-arcs, pebble-free outside {u, v}).
    fn insert(&mut self, u: usize, v: usize) -> Result<(), Vec<usize>> {
        while self.peb[u] + self.peb[v] < self.l + 1 {
            self.gather_one(u, v)?;
        }
        if self.peb[u] > 0 {
            self.peb[u] -= 1;
            self.out[u].push(v);
        } else {
            self.peb[v] -= 1;
            self.out[v].push(u);
        }
        let _ = self.k;
        Ok(())
    }
}

/// Runs the pebble game over `edges` in the given order. `Ok(())` means the
/// whole list is (k,l)-sparse; `Err(w)` carries the violating vertex set
/// discovered at the first rejected edge.
fn pebble_sparse(
    n: usize,
    edges: impl IntoIterator<Item = (usize, usize)>,
    k: u32,
    l: u32,
) -> Result<(), Vec<usize>> {
    let mut game = PebbleGame::new(n, k, l);
    for (u, v) in edges {
        game.insert(u, v)?;
    }
    Ok(())
}

/// Runs the pebble game over every edge, continuing past rejections, and
/// returns per-edge acceptance. The accepted set is a maximal (k,l)-sparse
/// subset, so the number of rejections is the corank of the edge set.
pub fn pebble_accept_flags(n: usize, edges: &[(usize, usize)], k: u32, l: u32) -> Vec<bool> {
    let mut game = PebbleGame::new(n, k, l);
    edges
        .iter()
        .map(|&(u, v)| game.insert(u, v).is_ok())
        .collect()
}

/// Exact (k,l)-sparsity: every subgraph `H` satisfies `e(H) <= k*v(H) - l`.
pub fn is_kl_sparse(g: &Graph, k: u32, l: u32) -> Result<SparsityVerdict, SparsityError> {
    if k == 0 || l >= 2 * k {
        return Err(SparsityError::ParamRange { k, l });
    }
    match pebble_sparse(g.n(), g.edges().iter().map(|e| e.endpoints()), k, l) {
        Ok(()) => Ok(SparsityVerdict {
            sparse: true,
            witness: None,
        }),
        Err(w) => {
            debug_assert!({
                let (h, _) = g.induced(&w);
                h.m() as i64 > k as i64 * h.n() as i64 - l as i64
            });
            Ok(SparsityVerdict {
                sparse: false,
                witness: Some(w),
            })
        }
    }
}

fn rr_sparse_edge_list(n: usize, edges: &[Edge], r: usize) -> Result<(), Vec<usize>> {
    pebble_sparse(n, edges.iter().map(|e| e.endpoints()), r as u32, r as u32)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyVerdict {
    Ramsey,
    NotRamsey,
}

/// Certificate for the Ramsey-for-cyclicity decision: a dense subgraph
/// witness in the positive case, a partition of the edges into `r` forests
/// (a good colouring) in the negative case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyCertificate {
    pub verdict: RamseyVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dense_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Vec<Edge>>>,
}

impl RamseyCertificate {
    pub fn is_ramsey(&self) -> bool {
        self.verdict == RamseyVerdict::Ramsey
    }
}

/// Decides membership in R_r(C): Ramsey iff some subgraph has
/// `(e(H)-1)/(v(H)-1) >= r`, i.e. iff the graph is not (r,r)-sparse.
pub fn is_ramsey_cyclicity(g: &Graph, r: usize) -> Result<RamseyCertificate, SparsityError> {
    if r < 2 {
        return Err(SparsityError::BadLevel { min: 2, got: r });
    }
    match rr_sparse_edge_list(g.n(), g.edges(), r) {
        Err(w) => Ok(RamseyCertificate {
            verdict: RamseyVerdict::Ramsey,
            dense_witness: Some(w),
            decomposition: None,
        }),
        Ok(()) => {
            let forests = match matroid_union_forests(g, r) {
                Some(f) => f,
                None => {
                    return Err(SparsityError::Internal(format!(
                        "(r,r)-sparse graph failed to decompose into {r} forests"
                    )))
                }
            };
            Ok(RamseyCertificate {
                verdict: RamseyVerdict::NotRamsey,
                dense_witness: None,
                decomposition: Some(forests),
            })
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalityReason {
    NotRamsey,
    RamseyNotMinimal,
    Minimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub verdict: bool,
    pub reason: MinimalityReason,
}

/// Decides membership in M_r(C). Minimality reduces to: the global density
/// is tight (`e = r*v - (r-1)`), there are no isolated vertices, and every
/// single-edge-deleted graph is (r,r)-sparse. The bridge to the
/// proper-subgraph condition: minimal Ramsey graphs have minimum degree
/// `>= r+1`, and every proper subgraph missing an edge lies inside some
/// `G - f`.
pub fn is_minimal_ramsey(g: &Graph, r: usize) -> Result<MinimalityReport, SparsityError> {
    if r < 2 {
        return Err(SparsityError::BadLevel { min: 2, got: r });
    }
    if rr_sparse_edge_list(g.n(), g.edges(), r).is_ok() {
        return Ok(MinimalityReport {
            verdict: false,
            reason: MinimalityReason::NotRamsey,
        });
    }
    let tight = g.m() == r * g.n() - (r - 1);
    let no_isolated = (0..g.n()).all(|v| g.degree(v) > 0);
    if !tight || !no_isolated {
        return Ok(MinimalityReport {
            verdict: false,
            reason: MinimalityReason::RamseyNotMinimal,
        });
    }
    let mut rest: Vec<Edge> = Vec::with_capacity(g.m() - 1);
    for skip in 0..g.m() {
        rest.clear();
        rest.extend(
            g.edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &e)| e),
        );
        if rr_sparse_edge_list(g.n(), &rest, r).is_err() {
            return Ok(MinimalityReport {
                verdict: false,
                reason: MinimalityReason::RamseyNotMinimal,
            });
        }
    }
    Ok(MinimalityReport {
        verdict: true,
        reason: MinimalityReason::Minimal,
    })
}

/// Result of `decompose_into_forests`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForestDecomposition {
    /// Partition of the edge set into exactly `r` acyclic classes.
    Forests(Vec<Vec<Edge>>),
    /// Vertex set inducing `H` with `e(H) > r*(v(H)-1)`, proving `ar(G) > r`.
    DenseWitness(Vec<usize>),
}

/// Edge-decomposes `g` into `r` forests when `ar(g) <= r`, otherwise
/// returns the densest-subgraph witness proving impossibility.
pub fn decompose_into_forests(g: &Graph, r: usize) -> Result<ForestDecomposition, SparsityError> {
    if r == 0 {
        return Err(SparsityError::BadLevel { min: 1, got: 0 });
    }
    match rr_sparse_edge_list(g.n(), g.edges(), r) {
        Err(w) => Ok(ForestDecomposition::DenseWitness(w)),
        Ok(()) => match matroid_union_forests(g, r) {
            Some(f) => Ok(ForestDecomposition::Forests(f)),
            None => Err(SparsityError::Internal(format!(
                "(r,r)-sparse graph failed to decompose into {r} forests"
            ))),
        },
    }
}

/// Incremental matroid-union augmentation: each edge is placed into some
/// forest, displacing edges along exchange paths when necessary. Returns
/// `None` only if the union has no room, which callers rule out by the
/// sparsity test.
fn matroid_union_forests(g: &Graph, r: usize) -> Option<Vec<Vec<Edge>>> {
    let m = g.m();
    let mut assignment: Vec<Option<usize>> = vec![None; m];
    // adjacency per forest: vertex -> (neighbour, edge index)
    let mut adjf: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new(); g.n()]; r];

    let path_in_forest =
        |adjf: &Vec<Vec<Vec<(usize, usize)>>>, forest: usize, from: usize, to: usize| -> Option<Vec<usize>> {
            // BFS path, returned as edge indices.
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.n()];
            let mut seen = vec![false; g.n()];
            let mut queue = std::collections::VecDeque::new();
            seen[from] = true;
            queue.push_back(from);
            while let Some(x) = queue.pop_front() {
                if x == to {
                    let mut path = Vec::new();
                    let mut cur = x;
                    while let Some((p, ei)) = prev[cur] {
                        path.push(ei);
                        cur = p;
                    }
                    return Some(path);
                }
                for &(y, ei) in &adjf[forest][x] {
                    if !seen[y] {
                        seen[y] = true;
                        prev[y] = Some((x, ei));
                        queue.push_back(y);
                    }
                }
            }
            None
        };

    for e0 in 0..m {
        // BFS over edges needing placement.
        let mut visited = vec![false; m];
        let mut parent: Vec<Option<usize>> = vec![None; m];
        let mut queue = std::collections::VecDeque::new();
        visited[e0] = true;
        queue.push_back(e0);
        let mut placement: Option<(usize, usize)> = None; // (edge, forest)
        'bfs: while let Some(f) = queue.pop_front() {
            let Edge(u, v) = g.edges()[f];
            for forest in 0..r {
                match path_in_forest(&adjf, forest, u, v) {
                    None => {
                        placement = Some((f, forest));
                        break 'bfs;
                    }
                    Some(cycle_edges) => {
                        for ce in cycle_edges {
                            if !visited[ce] {
                                visited[ce] = true;
                                parent[ce] = Some(f);
                                queue.push_back(ce);
                            }
                        }
                    }
                }
            }
        }
        let (mut cur, mut dest) = placement?;
        // Apply the exchange chain back to e0.
        loop {
            let old = assignment[cur];
            assignment[cur] = Some(dest);
            let Edge(u, v) = g.edges()[cur];
            if let Some(of) = old {
                adjf[of][u].retain(|&(_, ei)| ei != cur);
                adjf[of][v].retain(|&(_, ei)| ei != cur);
            }
            adjf[dest][u].push((v, cur));
            adjf[dest][v].push((u, cur));
            match parent[cur] {
                None => break,
                Some(p) => {
                    // The parent edge enters the forest `cur` just vacated.
                    dest = old.expect("non-root chain edges were assigned");
                    cur = p;
                }
            }
        }
    }

    let mut forests = vec![Vec::new(); r];
    for (i, a) in assignment.iter().enumerate() {
        forests[(*a)?].push(g.edges()[i]);
    }
    for f in &mut forests {
        f.sort_unstable();
    }
    Some(forests)
}

/// Checks that `classes` partition the edges of `g` and that each class is
/// acyclic (union-find).
pub fn validate_forest_partition(g: &Graph, classes: &[Vec<Edge>]) -> bool {
    let mut seen = std::collections::HashSet::new();
    for class in classes {
        let mut uf = UnionFind::new(g.n());
        for &e in class {
            if !g.contains(e) || !seen.insert(e) {
                return false;
            }
            if !uf.union(e.0, e.1) {
                return false;
            }
        }
    }
    seen.len() == g.m()
}

/// Exact fractional arboricity with an attaining vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalArboricity {
    pub numer: i64,
    pub denom: i64,
    pub argmax_witness: Vec<usize>,
}

impl FractionalArboricity {
    pub fn value(&self) -> Ratio<i64> {
        Ratio::new(self.numer, self.denom)
    }

    /// Number of forests needed by the decomposition theorem.
    pub fn ceil(&self) -> usize {
        (self.numer.div_euclid(self.denom)
            + if self.numer.rem_euclid(self.denom) != 0 { 1 } else { 0 }) as usize
    }
}

/// Computes `ar(G) = max e(J)/(v(J)-1)` exactly by iterated refinement: test
/// `ar <= p/q` with a (p,p)-pebble game on the q-fold multigraph; a failure
/// witness strictly improves the candidate ratio, and the ratios form a
/// finite grid, so the loop terminates at the maximum.
pub fn fractional_arboricity(g: &Graph) -> Result<FractionalArboricity, SparsityError> {
    if g.n() < 2 {
        return Err(SparsityError::TooFewVertices);
    }
    if g.m() == 0 {
        return Ok(FractionalArboricity {
            numer: 0,
            denom: 1,
            argmax_witness: vec![0, 1],
        });
    }
    let ratio_of = |w: &[usize]| -> (i64, i64, Ratio<i64>) {
        let (h, _) = g.induced(w);
        let r = Ratio::new(h.m() as i64, h.n() as i64 - 1);
        (*r.numer(), *r.denom(), r)
    };
    let mut witness: Vec<usize> = (0..g.n()).collect();
    let (mut p, mut q, mut rho) = ratio_of(&witness);
    loop {
        // Multigraph: every edge q times; (p,p)-sparse iff ar <= p/q.
        let multi = g
            .edges()
            .iter()
            .flat_map(|e| std::iter::repeat(e.endpoints()).take(q as usize));
        match pebble_sparse(g.n(), multi, p as u32, p as u32) {
            Ok(()) => {
                return Ok(FractionalArboricity {
                    numer: p,
                    denom: q,
                    argmax_witness: witness,
                })
            }
            Err(w) => {
                let (np, nq, nrho) = ratio_of(&w);
                if nrho <= rho {
                    return Err(SparsityError::Internal(
                        "arboricity refinement failed to improve".into(),
                    ));
                }
                witness = w;
                p = np;
                q = nq;
                rho = nrho;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, k35, k4_vee_k4, k5_minus_e, path, Graph};

    #[test]
    fn kl_sparse_examples() {
        // K4 is (2,2)-sparse: 6 <= 2*4-2.
        let v = is_kl_sparse(&complete(4), 2, 2).unwrap();
        assert!(v.sparse);
        // K5-e is not: the whole graph has 9 > 2*5-2.
        let v = is_kl_sparse(&k5_minus_e(), 2, 2).unwrap();
        assert!(!v.sparse);
        assert_eq!(v.witness.as_deref(), Some(&[0, 1, 2, 3, 4][..]));
        // C7 is not (1,1)-sparse: a cycle is not a forest.
        let v = is_kl_sparse(&cycle(7), 1, 1).unwrap();
        assert!(!v.sparse);
        let w = v.witness.unwrap();
        let (h, _) = cycle(7).induced(&w);
        assert!(h.m() > h.n() - 1);
    }

    #[test]
    fn kl_sparse_rejects_bad_params() {
        assert!(matches!(
            is_kl_sparse(&cycle(3), 0, 0),
            Err(SparsityError::ParamRange { .. })
        ));
        assert!(matches!(
            is_kl_sparse(&cycle(3), 2, 4),
            Err(SparsityError::ParamRange { .. })
        ));
    }

    #[test]
    fn ramsey_verdicts() {
        let cert = is_ramsey_cyclicity(&k5_minus_e(), 2).unwrap();
        assert!(cert.is_ramsey());
        assert_eq!(cert.dense_witness.as_deref(), Some(&[0, 1, 2, 3, 4][..]));

        let cert = is_ramsey_cyclicity(&path(6), 2).unwrap();
        assert!(!cert.is_ramsey());
        let forests = cert.decomposition.unwrap();
        assert_eq!(forests.len(), 2);
        // A forest goes entirely into the first class.
        assert_eq!(forests[0].len(), 5);
        assert!(forests[1].is_empty());

        let cert = is_ramsey_cyclicity(&k4_vee_k4(), 2).unwrap();
        assert!(cert.is_ramsey());
        assert_eq!(cert.dense_witness.as_deref(), Some(&[0, 1, 2, 3, 4, 5][..]));
    }

    #[test]
    fn minimality_verdicts() {
        let rep = is_minimal_ramsey(&k5_minus_e(), 2).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.reason, MinimalityReason::Minimal);

        let rep = is_minimal_ramsey(&complete(5), 2).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.reason, MinimalityReason::RamseyNotMinimal);

        let rep = is_minimal_ramsey(&k35(), 2).unwrap();
        assert!(rep.verdict);

        let rep = is_minimal_ramsey(&cycle(9), 2).unwrap();
        assert_eq!(rep.reason, MinimalityReason::NotRamsey);

        let rep = is_minimal_ramsey(&k4_vee_k4(), 2).unwrap();
        assert!(rep.verdict);
    }

    #[test]
    fn decompose_examples() {
        match decompose_into_forests(&complete(4), 2).unwrap() {
            ForestDecomposition::Forests(f) => {
                assert!(validate_forest_partition(&complete(4), &f));
                assert_eq!(f.len(), 2);
            }
            _ => panic!("K4 decomposes into two forests"),
        }
        match decompose_into_forests(&cycle(5), 1).unwrap() {
            ForestDecomposition::DenseWitness(w) => {
                let (h, _) = cycle(5).induced(&w);
                assert!(h.m() > h.n() - 1);
                assert_eq!(w, vec![0, 1, 2, 3, 4]);
            }
            _ => panic!("a cycle is not one forest"),
        }
        // K5-e minus an edge of the dense core decomposes into 2 forests.
        let g = k5_minus_e().remove_edge(Edge(0, 1)).unwrap();
        match decompose_into_forests(&g, 2).unwrap() {
            ForestDecomposition::Forests(f) => assert!(validate_forest_partition(&g, &f)),
            _ => panic!("minimality forces a 2-forest partition"),
        }
    }

    #[test]
    fn fractional_arboricity_examples() {
        let fa = fractional_arboricity(&complete(4)).unwrap();
        assert_eq!((fa.numer, fa.denom), (2, 1));
        let fa = fractional_arboricity(&path(7)).unwrap();
        assert_eq!((fa.numer, fa.denom), (1, 1));
        let fa = fractional_arboricity(&k5_minus_e()).unwrap();
        assert_eq!((fa.numer, fa.denom), (9, 4));
        assert_eq!(fa.ceil(), 3);
        // The witness attains the value.
        let (h, _) = k5_minus_e().induced(&fa.argmax_witness);
        assert_eq!(
            Ratio::new(h.m() as i64, h.n() as i64 - 1),
            Ratio::new(9, 4)
        );
    }

    #[test]
    fn fractional_arboricity_brute_force_k5e() {
        // Independent oracle: maximize e(J)/(v(J)-1) over all vertex subsets.
        let g = k5_minus_e();
        let mut best = Ratio::new(0i64, 1i64);
        for mask in 1u32..(1 << 5) {
            if mask.count_ones() < 2 {
                continue;
            }
            let verts: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            let (h, _) = g.induced(&verts);
            best = best.max(Ratio::new(h.m() as i64, h.n() as i64 - 1));
        }
        assert_eq!(best, Ratio::new(9, 4));
    }

    #[test]
    fn edgeless_arboricity() {
        let fa = fractional_arboricity(&Graph::empty(3)).unwrap();
        assert_eq!((fa.numer, fa.denom), (0, 1));
        assert!(matches!(
            fractional_arboricity(&Graph::empty(1)),
            Err(SparsityError::TooFewVertices)
        ));
    }

    #[test]
    fn witness_density_is_exact() {
        // Spot-check the witness contract on a batch of structured graphs.
        for g in [k5_minus_e(), k4_vee_k4(), complete(6), complete(7)] {
            let v = is_kl_sparse(&g, 2, 2).unwrap();
            if let Some(w) = v.witness {
                let (h, _) = g.induced(&w);
                assert!(h.m() > 2 * h.n() - 2, "witness not violating for {g:?}");
            }
        }
    }

    #[test]
    fn decompose_matches_exhaustive_small() {
        // Oracle: exhaustive partition search on graphs with <= 6 edges.
        fn exhaustive_two_forest(g: &Graph) -> bool {
            let m = g.m();
            'outer: for mask in 0u32..(1 << m) {
                for class in 0..2 {
                    let mut uf = UnionFind::new(g.n());
                    for (i, e) in g.edges().iter().enumerate() {
                        if (mask >> i & 1) as usize == class && !uf.union(e.0, e.1) {
                            continue 'outer;
                        }
                    }
                }
                return true;
            }
            false
        }
        for g in [
            complete(4),
            cycle(5),
            k5_minus_e().remove_edge(Edge(0, 1)).unwrap(),
            cycle(6),
        ] {
            let ours = matches!(
                decompose_into_forests(&g, 2).unwrap(),
                ForestDecomposition::Forests(_)
            );
            assert_eq!(ours, exhaustive_two_forest(&g), "mismatch on {g:?}");
        }
        // K5-e itself needs 3 forests.
        assert!(!exhaustive_two_forest(&k5_minus_e()));
        assert!(matches!(
            decompose_into_forests(&k5_minus_e(), 2).unwrap(),
            ForestDecomposition::DenseWitness(_)
        ));
        assert!(matches!(
            decompose_into_forests(&k5_minus_e(), 3).unwrap(),
            ForestDecomposition::Forests(_)
        ));
    }
}
