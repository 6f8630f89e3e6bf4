//! Small shared machinery: union-find, bitmask combination scans, worker pools.

/// Disjoint-set forest with union by size and path compression.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; returns false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Iterator over all `C(n, k)` bitmasks with exactly `k` of the low `n` bits set,
/// in increasing numeric order (Gosper's hack).
pub struct Combinations {
    cur: u64,
    limit: u64,
    done: bool,
}

impl Combinations {
    pub fn new(n: u32, k: u32) -> Self {
        assert!(n <= 63 && k <= n);
        if k == 0 {
            return Combinations {
                cur: 0,
                limit: 1u64 << n,
                done: false,
            };
        }
        Combinations {
            cur: (1u64 << k) - 1,
            limit: 1u64 << n,
            done: false,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done || self.cur >= self.limit {
            return None;
        }
        let out = self.cur;
        if out == 0 {
            self.done = true;
            return Some(0);
        }
        // Gosper: next mask with the same popcount.
        let c = self.cur;
        let lowest = c & c.wrapping_neg();
        let ripple = c + lowest;
        self.cur = (((c ^ ripple) >> 2) / lowest) | ripple;
        if ripple >= self.limit && self.cur < c {
            self.done = true;
        }
        Some(out)
    }
}

/// Runs `f` inside a rayon pool with `jobs` workers; `jobs <= 1` runs inline.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
            .install(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_detects_cycle_edge() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        assert!(uf.union(1, 2));
        assert!(uf.union(2, 3));
        assert!(!uf.union(3, 0));
        assert_eq!(uf.components(), 1);
    }

    #[test]
    fn combinations_count_and_order() {
        let all: Vec<u64> = Combinations::new(6, 3).collect();
        assert_eq!(all.len(), 20);
        let mut sorted = all.clone();
        sorted.sort_unstable();
        assert_eq!(all, sorted);
        assert!(all.iter().all(|m| m.count_ones() == 3));
    }

    #[test]
    fn combinations_edge_cases() {
        assert_eq!(Combinations::new(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(Combinations::new(3, 3).collect::<Vec<_>>(), vec![0b111]);
    }
}
