//! Ground-truth brute force: exhaustive colouring scans, monochromatic-cycle
//! detection, exact chromatic number. Everything here is independent of the
//! sparsity engine so the two can check each other.

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{Edge, Graph};
use crate::util::UnionFind;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("need r >= {min}, got {got}")]
    BadLevel { min: usize, got: usize },
}

/// Budgets for the exponential scans. Exceeding a budget is an error, never
/// a silent approximation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    /// Cap on the number of colourings scanned per call.
    pub max_colorings: u64,
    /// Cap on the vertex count for chromatic-number search.
    pub max_chromatic_vertices: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_colorings: 1 << 24,
            max_chromatic_vertices: 16,
        }
    }
}

impl OracleBudget {
    /// Budget phrased as "at most this many coloured edges" for r = 2.
    pub fn from_edge_budget(edges: u32) -> OracleBudget {
        OracleBudget {
            max_colorings: 1u64 << edges.min(62),
            ..OracleBudget::default()
        }
    }
}

/// Outcome of the exhaustive colouring scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringSearchResult {
    pub is_ramsey: bool,
    /// A colouring with no monochromatic cycle in any class, present iff the
    /// graph is not Ramsey. With a sequential scan it is the
    /// lexicographically least such colouring (first edge fixed to colour 0).
    pub good_coloring: Option<EdgeColoring>,
    pub colorings_examined: u64,
}

/// Finds some simple monochromatic cycle (length >= 3) of `c`, or `None`.
/// Colour classes are scanned in index order; within a class, edges are
/// inserted in sorted order into a union-find and the first closing edge
/// triggers path recovery.
pub fn find_monochromatic_cycle(
    g: &Graph,
    c: &EdgeColoring,
) -> Result<Option<Vec<usize>>, OracleError> {
    c.check_domain(g)?;
    for colour in 0..c.classes() as u8 {
        let mut uf = UnionFind::new(g.n());
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, &Edge(u, v)) in g.edges().iter().enumerate() {
            if c.color_of_index(i) != colour {
                continue;
            }
            if uf.union(u, v) {
                adj[u].push(v);
                adj[v].push(u);
                continue;
            }
            // u and v already connected in this class: recover the path.
            let mut prev = vec![usize::MAX; g.n()];
            let mut seen = vec![false; g.n()];
            let mut queue = std::collections::VecDeque::new();
            seen[u] = true;
            queue.push_back(u);
            while let Some(x) = queue.pop_front() {
                if x == v {
                    break;
                }
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            let mut cycle = vec![v];
            let mut cur = v;
            while cur != u {
                cur = prev[cur];
                cycle.push(cur);
            }
            cycle.reverse();
            debug_assert!(cycle.len() >= 3);
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

/// True iff every colour class of `c` is a forest.
pub fn is_good_coloring(g: &Graph, c: &EdgeColoring) -> Result<bool, OracleError> {
    Ok(find_monochromatic_cycle(g, c)?.is_none())
}

fn class_is_forest(g: &Graph, colors: &[u8], colour: u8) -> bool {
    let mut uf = UnionFind::new(g.n());
    for (i, &Edge(u, v)) in g.edges().iter().enumerate() {
        if colors[i] == colour && !uf.union(u, v) {
            return false;
        }
    }
    true
}

/// Exhaustive scan of all r-edge-colourings up to global colour permutation
/// (the first edge's colour is fixed to 0). Ramsey iff every colouring has a
/// monochromatic cycle.
pub fn is_ramsey_bruteforce(
    g: &Graph,
    r: usize,
    budget: &OracleBudget,
) -> Result<ColoringSearchResult, OracleError> {
    if r < 2 {
        return Err(OracleError::BadLevel { min: 2, got: r });
    }
    let m = g.m();
    if m == 0 {
        return Ok(ColoringSearchResult {
            is_ramsey: false,
            good_coloring: Some(EdgeColoring::new(g, r, vec![]).expect("empty colouring")),
            colorings_examined: 0,
        });
    }
    let space = (r as u64).checked_pow(m as u32 - 1);
    let space = match space {
        Some(s) if s <= budget.max_colorings => s,
        _ => {
            return Err(OracleError::BudgetExceeded(format!(
                "{r}^{} colourings exceed the budget of {}; use the sparsity engine instead",
                m - 1,
                budget.max_colorings
            )))
        }
    };
    let mut colors = vec![0u8; m];
    let mut examined = 0u64;
    for code in 0..space {
        // Base-r digits onto edges 1..m; edge 0 stays colour 0.
        let mut x = code;
        for slot in colors.iter_mut().skip(1) {
            *slot = (x % r as u64) as u8;
            x /= r as u64;
        }
        examined += 1;
        if (0..r as u8).all(|col| class_is_forest(g, &colors, col)) {
            let good = EdgeColoring::new(g, r, colors).expect("validated");
            return Ok(ColoringSearchResult {
                is_ramsey: false,
                good_coloring: Some(good),
                colorings_examined: examined,
            });
        }
    }
    Ok(ColoringSearchResult {
        is_ramsey: true,
        good_coloring: None,
        colorings_examined: examined,
    })
}

/// Exact chromatic number by iterative k-colourability with a
/// most-constrained-vertex branch order.
pub fn chromatic_number(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    if g.n() > budget.max_chromatic_vertices {
        return Err(OracleError::BudgetExceeded(format!(
            "{} vertices exceed the chromatic budget of {}",
            g.n(),
            budget.max_chromatic_vertices
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    if g.is_bipartite() {
        return Ok(2);
    }
    // Greedy clique gives a lower bound; 3 is already forced by the odd cycle.
    let mut lb = 3usize.max(greedy_clique(g));
    let ub = greedy_coloring_bound(g);
    if lb > ub {
        lb = ub;
    }
    for k in lb..=ub {
        if k_colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(ub)
}

fn greedy_clique(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len()
}

fn greedy_coloring_bound(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in &order {
        let taken: std::collections::HashSet<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| color[w] != usize::MAX)
            .map(|&w| color[w])
            .collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    // forbidden[v] counts, per colour, how many coloured neighbours use it.
    let mut forbidden = vec![vec![0u32; k]; n];
    fn pick(g: &Graph, color: &[usize], forbidden: &[Vec<u32>]) -> Option<usize> {
        // Most saturated vertex first, ties by degree then id.
        let mut best: Option<(usize, usize, std::cmp::Reverse<usize>)> = None;
        let mut best_v = None;
        for v in 0..g.n() {
            if color[v] != usize::MAX {
                continue;
            }
            let sat = forbidden[v].iter().filter(|&&c| c > 0).count();
            let key = (sat, g.degree(v), std::cmp::Reverse(v));
            if best.map_or(true, |b| key > b) {
                best = Some(key);
                best_v = Some(v);
            }
        }
        best_v
    }
    fn go(
        g: &Graph,
        k: usize,
        color: &mut Vec<usize>,
        forbidden: &mut Vec<Vec<u32>>,
        colored: usize,
        max_used: usize,
    ) -> bool {
        if colored == g.n() {
            return true;
        }
        let v = match pick(g, color, forbidden) {
            Some(v) => v,
            None => return true,
        };
        // Symmetry: allow at most one brand-new colour.
        let cap = k.min(max_used + 1);
        for c in 0..cap {
            if forbidden[v][c] > 0 {
                continue;
            }
            color[v] = c;
            for &w in g.neighbors(v) {
                forbidden[w][c] += 1;
            }
            if go(g, k, color, forbidden, colored + 1, max_used.max(c + 1)) {
                return true;
            }
            for &w in g.neighbors(v) {
                forbidden[w][c] -= 1;
            }
            color[v] = usize::MAX;
        }
        false
    }
    go(g, k, &mut color, &mut forbidden, 0, 0)
}

/// Membership in R_r(C_odd) via the chromatic characterization
/// `chi(G) >= 2^r + 1`.
pub fn is_ramsey_odd_cyclicity(
    g: &Graph,
    r: u32,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    if r < 1 {
        return Err(OracleError::BadLevel { min: 1, got: 0 });
    }
    let chi = chromatic_number(g, budget)?;
    Ok(chi as u64 >= (1u64 << r) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Color;
    use crate::graph::{complete, cycle, k35, k4_vee_k4, k5_minus_e, path};
    use std::collections::BTreeMap;

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn monochromatic_triangle_found() {
        let g = cycle(3);
        let c = EdgeColoring::monochromatic(&g, 2, 0);
        let cyc = find_monochromatic_cycle(&g, &c).unwrap().unwrap();
        assert_eq!(cyc.len(), 3);
    }

    #[test]
    fn alternating_c4_has_none() {
        let g = cycle(4);
        // Edges sorted: {0,1},{0,3},{1,2},{2,3}: alternate around the cycle.
        let c = EdgeColoring::new(&g, 2, vec![0, 1, 1, 0]).unwrap();
        assert!(find_monochromatic_cycle(&g, &c).unwrap().is_none());
    }

    #[test]
    fn red_hamilton_cycle_in_k5e() {
        // Red C5 0-3-1-4-2-0, remaining 4-path blue.
        let g = k5_minus_e();
        let mut map = BTreeMap::new();
        for e in [
            Edge(0, 3),
            Edge(1, 3),
            Edge(1, 4),
            Edge(2, 4),
            Edge(0, 2),
        ] {
            map.insert(e, Color::Red);
        }
        for e in [Edge(0, 1), Edge(1, 2), Edge(0, 4), Edge(2, 3)] {
            map.insert(e, Color::Blue);
        }
        let c = EdgeColoring::from_map(&g, &map).unwrap();
        let cyc = find_monochromatic_cycle(&g, &c).unwrap().unwrap();
        assert_eq!(cyc.len(), 5, "only the red C5 is monochromatic");
    }

    #[test]
    fn domain_mismatch_reported() {
        let g = cycle(4);
        let c = EdgeColoring::monochromatic(&cycle(5), 2, 0);
        assert!(matches!(
            find_monochromatic_cycle(&g, &c),
            Err(OracleError::Coloring(_))
        ));
    }

    #[test]
    fn brute_force_k5e_is_ramsey() {
        let res = is_ramsey_bruteforce(&k5_minus_e(), 2, &budget()).unwrap();
        assert!(res.is_ramsey);
        assert_eq!(res.colorings_examined, 256); // 2^(9-1)
    }

    #[test]
    fn brute_force_c5_not_ramsey() {
        let res = is_ramsey_bruteforce(&cycle(5), 2, &budget()).unwrap();
        assert!(!res.is_ramsey);
        let good = res.good_coloring.unwrap();
        assert!(is_good_coloring(&cycle(5), &good).unwrap());
    }

    #[test]
    fn k4veek4_minus_any_edge_not_ramsey() {
        let g = k4_vee_k4();
        for &e in g.edges() {
            let h = g.remove_edge(e).unwrap();
            let res = is_ramsey_bruteforce(&h, 2, &budget()).unwrap();
            assert!(!res.is_ramsey, "deleting {e:?} must break Ramseyness");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = complete(8); // 28 edges
        assert!(matches!(
            is_ramsey_bruteforce(&g, 2, &budget()),
            Err(OracleError::BudgetExceeded(_))
        ));
        let tight = OracleBudget {
            max_chromatic_vertices: 3,
            ..budget()
        };
        assert!(matches!(
            chromatic_number(&complete(4), &tight),
            Err(OracleError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&k5_minus_e(), &budget()).unwrap(), 4);
        assert_eq!(chromatic_number(&k35(), &budget()).unwrap(), 2);
        assert_eq!(chromatic_number(&cycle(5), &budget()).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(6), &budget()).unwrap(), 6);
        assert_eq!(chromatic_number(&path(4), &budget()).unwrap(), 2);
        assert_eq!(chromatic_number(&k4_vee_k4(), &budget()).unwrap(), 4);
    }

    #[test]
    fn odd_cyclicity_examples() {
        assert!(is_ramsey_odd_cyclicity(&complete(5), 2, &budget()).unwrap());
        assert!(!is_ramsey_odd_cyclicity(&complete(4), 2, &budget()).unwrap());
        assert!(is_ramsey_odd_cyclicity(&cycle(5), 1, &budget()).unwrap());
        assert!(!is_ramsey_odd_cyclicity(&cycle(4), 1, &budget()).unwrap());
    }

    #[test]
    fn forest_iff_all_colorings_cycle_free() {
        // On every graph with <= 4 vertices: no colouring has a mono cycle
        // iff the graph is a forest.
        for n in 1..=4usize {
            let slots: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << slots.len()) {
                let edges: Vec<(usize, usize)> = slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, edges).unwrap();
                let mut uf = UnionFind::new(n);
                let is_forest = g.edges().iter().all(|e| uf.union(e.0, e.1));
                let mut all_free = true;
                for code in 0u32..(1 << g.m()) {
                    let colors: Vec<u8> = (0..g.m()).map(|i| (code >> i & 1) as u8).collect();
                    let c = EdgeColoring::new(&g, 2, colors).unwrap();
                    if find_monochromatic_cycle(&g, &c).unwrap().is_some() {
                        all_free = false;
                        break;
                    }
                }
                assert_eq!(all_free, is_forest, "n={n} mask={mask:b}");
            }
        }
    }

    #[test]
    fn verdict_matches_full_colour_scan_n5() {
        // The first-edge-fixed scan agrees with the unquotiented scan on all
        // labeled 5-vertex graphs (colour-permutation symmetry).
        let slots: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << 10) {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(5, edges).unwrap();
            let quotiented = is_ramsey_bruteforce(&g, 2, &budget()).unwrap().is_ramsey;
            let mut full_ramsey = true;
            for code in 0u32..(1 << g.m()) {
                let colors: Vec<u8> = (0..g.m()).map(|i| (code >> i & 1) as u8).collect();
                if (0..2).all(|col| class_is_forest(&g, &colors, col)) {
                    full_ramsey = false;
                    break;
                }
            }
            assert_eq!(quotiented, full_ramsey, "mask {mask:b}");
        }
    }

    use crate::graph::Graph;
    use crate::util::UnionFind;
}
