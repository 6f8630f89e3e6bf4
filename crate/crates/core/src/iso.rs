//! Canonical forms and isomorphism testing for small graphs: iterated
//! degree refinement, then a permutation search over the refined cells with
//! prefix pruning. Adequate up to a dozen or so vertices, which covers every
//! recognition and dedup task in this crate.

use crate::graph::Graph;
use std::collections::BTreeMap;

/// Label-invariant canonical key: the lexicographically least adjacency
/// bit-rows over all orderings consistent with the refined partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub rows: Vec<u64>,
}

/// Equitable-partition colours: start from degrees, refine by sorted
/// neighbour-colour multisets until stable. The colour ids are derived from
/// sorted signatures, so they are independent of the input labeling.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    normalize(&mut color);
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut keys: Vec<&(usize, Vec<usize>)> = sig.iter().collect();
        keys.sort();
        keys.dedup();
        let index: BTreeMap<&(usize, Vec<usize>), usize> =
            keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let next: Vec<usize> = sig.iter().map(|s| index[s]).collect();
        // Refinement only splits classes; same class count means stable.
        if keys.len() == count_distinct(&color) {
            return next;
        }
        color = next;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut s: Vec<usize> = xs.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

fn normalize(color: &mut [usize]) {
    let mut keys: Vec<usize> = color.to_vec();
    keys.sort_unstable();
    keys.dedup();
    let index: BTreeMap<usize, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    for c in color.iter_mut() {
        *c = index[c];
    }
}

/// Smallest adjacency-row encoding over all cell-respecting orderings.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= 64, "canonical forms are for desk-scale graphs");
    if n == 0 {
        return CanonicalForm { n, rows: vec![] };
    }
    let color = refine_colors(g);

    // Search state: choose, position by position, an unused vertex of the
    // smallest admissible colour cell, pruning by comparing rows so far.
    struct Search<'a> {
        g: &'a Graph,
        color: &'a [usize],
        perm: Vec<usize>,  // position -> original vertex
        place: Vec<usize>, // original vertex -> position (MAX if unplaced)
        rows: Vec<u64>,
        best: Option<Vec<u64>>,
    }

    impl Search<'_> {
        fn run(&mut self, pos: usize) {
            let n = self.g.n();
            if pos == n {
                if self.best.as_ref().map_or(true, |b| self.rows < *b) {
                    self.best = Some(self.rows.clone());
                }
                return;
            }
            // Candidates: unplaced vertices of the minimal colour among
            // unplaced vertices (cells are ordered by refined colour id).
            let min_color = (0..n)
                .filter(|&v| self.place[v] == usize::MAX)
                .map(|v| self.color[v])
                .min()
                .unwrap();
            for v in 0..n {
                if self.place[v] != usize::MAX || self.color[v] != min_color {
                    continue;
                }
                let mut row = 0u64;
                for p in 0..pos {
                    if self.g.has_edge(v, self.perm[p]) {
                        row |= 1 << p;
                    }
                }
                // Prefix prune: the partial encoding must not exceed best.
                if let Some(best) = &self.best {
                    use std::cmp::Ordering::*;
                    let mut cmp = Equal;
                    for p in 0..pos {
                        match self.rows[p].cmp(&best[p]) {
                            Equal => continue,
                            o => {
                                cmp = o;
                                break;
                            }
                        }
                    }
                    if cmp == Equal && row > best[pos] {
                        continue;
                    }
                    if cmp == Greater {
                        return;
                    }
                }
                self.perm.push(v);
                self.place[v] = pos;
                self.rows.push(row);
                self.run(pos + 1);
                self.rows.pop();
                self.place[v] = usize::MAX;
                self.perm.pop();
            }
        }
    }

    let mut search = Search {
        g,
        color: &color,
        perm: Vec::with_capacity(n),
        place: vec![usize::MAX; n],
        rows: Vec::with_capacity(n),
        best: None,
    };
    search.run(0);
    CanonicalForm {
        n,
        rows: search.best.expect("nonempty search"),
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Deduplicates by canonical form, preserving the first representative of
/// each class; output sorted by canonical key.
pub fn dedup_isomorphic(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut byform: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in graphs {
        byform.entry(canonical_form(&g)).or_insert(g);
    }
    byform.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, k4_vee_k4, k5_minus_e, path, Graph};

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::new(
            g.n(),
            g.edges().iter().map(|e| (perm[e.0], perm[e.1])),
        )
        .unwrap()
    }

    #[test]
    fn canonical_invariance_under_relabeling() {
        let g = k5_minus_e();
        let base = canonical_form(&g);
        let perms = [
            vec![4, 3, 2, 1, 0],
            vec![2, 0, 4, 1, 3],
            vec![1, 2, 0, 4, 3],
        ];
        for p in perms {
            assert_eq!(canonical_form(&relabel(&g, &p)), base);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!are_isomorphic(&cycle(6), &path(6)));
        assert!(!are_isomorphic(&k5_minus_e(), &complete(5)));
        // Same degree sequence, different graphs: C6 vs two triangles.
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_triangles));
    }

    #[test]
    fn recognizes_k4_vee_k4_relabelled() {
        let g = k4_vee_k4();
        let h = relabel(&g, &[5, 2, 0, 4, 1, 3]);
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn dedup_collapses_classes() {
        let gs = vec![
            cycle(5),
            relabel(&cycle(5), &[2, 0, 3, 1, 4]),
            path(5),
            k5_minus_e(),
        ];
        assert_eq!(dedup_isomorphic(gs).len(), 3);
    }
}
