//! Desk-scale planarity testing via Demoucron's face-fragment embedding:
//! embed a cycle, then repeatedly place a path of some fragment into an
//! admissible face, splitting it. A fragment with no admissible face proves
//! nonplanarity. Quadratic-ish and entirely adequate for the graph sizes in
//! this crate.

use crate::graph::{Edge, Graph};
use std::collections::{BTreeSet, HashSet, VecDeque};

pub fn is_planar(g: &Graph) -> bool {
    if g.n() <= 4 {
        return true;
    }
    // Each biconnected block embeds independently.
    blocks(g).iter().all(|b| block_is_planar(g, b))
}

/// Edge sets of the biconnected blocks (bridges come out as single edges).
fn blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut out: Vec<Vec<Edge>> = Vec::new();

    // Iterative DFS carrying (vertex, parent, neighbor cursor).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut().as_deref_mut() {
            if *idx < g.neighbors(v).len() {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut().as_deref_mut() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p closes a block; pop its edges.
                        let mut block = Vec::new();
                        let marker = Edge::new(p, v);
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == marker {
                                break;
                            }
                        }
                        if !block.is_empty() {
                            out.push(block);
                        }
                    }
                }
            }
        }
    }
    out
}

fn block_is_planar(_g: &Graph, block_edges: &[Edge]) -> bool {
    if block_edges.len() <= 2 {
        return true;
    }
    let verts: BTreeSet<usize> = block_edges.iter().flat_map(|e| [e.0, e.1]).collect();
    let verts: Vec<usize> = verts.into_iter().collect();
    let n = verts.len();
    let pos: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = block_edges.iter().map(|e| (pos[&e.0], pos[&e.1])).collect();
    let h = Graph::new(n, edges).expect("block graph");
    if h.m() > 3 * n.saturating_sub(2) {
        return false; // Euler bound e <= 3n - 6 (n >= 3 here)
    }
    demoucron(&h)
}

/// Demoucron-Malgrange-Pertuiset on a 2-connected graph.
fn demoucron(g: &Graph) -> bool {
    let n = g.n();
    // Start from any cycle: walk from 0 until a repeat.
    let start_cycle = find_cycle(g).expect("2-connected blocks contain a cycle");
    let mut embedded_edges: HashSet<Edge> = HashSet::new();
    let mut embedded_verts: Vec<bool> = vec![false; n];
    for w in start_cycle.windows(2) {
        embedded_edges.insert(Edge::new(w[0], w[1]));
    }
    embedded_edges.insert(Edge::new(start_cycle[0], *start_cycle.last().unwrap()));
    for &v in &start_cycle {
        embedded_verts[v] = true;
    }
    // Faces as boundary cycles (vertex sequences).
    let mut faces: Vec<Vec<usize>> = vec![start_cycle.clone(), start_cycle];

    while embedded_edges.len() < g.m() {
        // Fragments: chords plus components of G - embedded vertices.
        let mut fragments: Vec<(Vec<usize>, HashSet<usize>)> = Vec::new(); // (contacts, interior)
        for &e in g.edges() {
            if !embedded_edges.contains(&e) && embedded_verts[e.0] && embedded_verts[e.1] {
                fragments.push((vec![e.0, e.1], HashSet::new()));
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if embedded_verts[s] || seen[s] {
                continue;
            }
            let mut interior = HashSet::new();
            let mut contacts = BTreeSet::new();
            let mut queue = VecDeque::new();
            seen[s] = true;
            interior.insert(s);
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if embedded_verts[y] {
                        contacts.insert(y);
                    } else if !seen[y] {
                        seen[y] = true;
                        interior.insert(y);
                        queue.push_back(y);
                    }
                }
            }
            fragments.push((contacts.into_iter().collect(), interior));
        }
        debug_assert!(!fragments.is_empty());

        // Admissible faces per fragment.
        let admissible = |contacts: &[usize]| -> Vec<usize> {
            faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fv: HashSet<usize> = f.iter().copied().collect();
                    contacts.iter().all(|c| fv.contains(c))
                })
                .map(|(i, _)| i)
                .collect()
        };
        let mut choice: Option<(usize, usize)> = None; // (fragment, face)
        let mut adm: Vec<Vec<usize>> = Vec::with_capacity(fragments.len());
        for (i, (contacts, _)) in fragments.iter().enumerate() {
            let a = admissible(contacts);
            if a.is_empty() {
                return false;
            }
            if a.len() == 1 && choice.is_none() {
                choice = Some((i, a[0]));
            }
            adm.push(a);
        }
        let (fi, face_idx) = choice.unwrap_or((0, adm[0][0]));
        let (contacts, interior) = &fragments[fi];

        // An alpha-path between two distinct contacts through the fragment.
        let path = fragment_path(g, contacts, interior);
        // Split the face along the path.
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let pa = face.iter().position(|&x| x == a).expect("contact on face");
        let pb = face.iter().position(|&x| x == b).expect("contact on face");
        let (pa, pb, path) = if pa <= pb {
            (pa, pb, path)
        } else {
            let mut p = path;
            p.reverse();
            (pb, pa, p)
        };
        // Boundary arcs a..b and b..a (inclusive of endpoints).
        let arc1: Vec<usize> = face[pa..=pb].to_vec();
        let mut arc2: Vec<usize> = face[pb..].to_vec();
        arc2.extend_from_slice(&face[..=pa]);
        let inner: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut f1 = arc1;
        f1.extend(inner.iter().rev());
        let mut f2 = arc2;
        f2.extend(inner.iter());
        if f1.len() >= 3 {
            faces.push(f1);
        }
        if f2.len() >= 3 {
            faces.push(f2);
        }
        for w in path.windows(2) {
            embedded_edges.insert(Edge::new(w[0], w[1]));
        }
        for &v in &path {
            embedded_verts[v] = true;
        }
    }
    true
}

fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unseen, 1 active, 2 done
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, usize::MAX, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, par, ref mut idx)) = stack.last_mut().as_deref_mut() {
            if *idx < g.neighbors(v).len() {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == par {
                    continue;
                }
                if state[w] == 1 {
                    // Back edge: recover v -> ... -> w.
                    let mut cyc = vec![v];
                    let mut cur = v;
                    while cur != w {
                        cur = parent[cur];
                        cyc.push(cur);
                    }
                    return Some(cyc);
                }
                if state[w] == 0 {
                    state[w] = 1;
                    parent[w] = v;
                    stack.push((w, v, 0));
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Path through the fragment between two distinct contact vertices. For a
/// chord fragment the interior is empty and the path is the chord itself.
fn fragment_path(g: &Graph, contacts: &[usize], interior: &HashSet<usize>) -> Vec<usize> {
    if interior.is_empty() {
        return vec![contacts[0], contacts[1]];
    }
    let from = contacts[0];
    // BFS from `from` through interior vertices to any other contact.
    let targets: HashSet<usize> = contacts[1..].iter().copied().collect();
    let mut prev: std::collections::HashMap<usize, usize> = Default::default();
    let mut queue = VecDeque::new();
    queue.push_back(from);
    let mut seen: HashSet<usize> = [from].into();
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if seen.contains(&y) {
                continue;
            }
            let y_interior = interior.contains(&y);
            if !y_interior && !targets.contains(&y) {
                continue;
            }
            // Contacts may only terminate the path; interior edges need an
            // interior endpoint.
            if !y_interior && x == from {
                continue; // chord handled separately; path must pass inside
            }
            seen.insert(y);
            prev.insert(y, x);
            if targets.contains(&y) {
                let mut path = vec![y];
                let mut cur = y;
                while cur != from {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            if y_interior {
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment with >= 2 contacts has a connecting path");
}
