//! Brute-force reference implementations used by tests.
//!
//! Everything here is recomputed from scratch on demand. None of it is fast;
//! all of it is simple enough to trust.

use std::collections::VecDeque;

/// A plain multigraph snapshot: `edges[k]` is the endpoint pair of edge `k`.
/// Deleted edges are represented by removing them from the vector before
/// snapshotting, so edge indices here are positional, not stable handles.
#[derive(Clone, Debug, Default)]
pub struct SnapshotGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SnapshotGraph {
    pub fn new(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self { n, edges: edges.to_vec() }
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, k));
            adj[v].push((u, k));
        }
        adj
    }
}

/// Connected-component labels, one per vertex.
pub fn components(g: &SnapshotGraph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut comp = vec![usize::MAX; g.n];
    let mut next = 0;
    for s in 0..g.n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    comp
}

pub fn connected(g: &SnapshotGraph, v: usize, w: usize) -> bool {
    let comp = components(g);
    comp[v] == comp[w]
}

/// Exact bridge set as a boolean per edge index, via iterative DFS low-points.
/// Parallel edges are handled by skipping only the one edge used to enter a
/// vertex, so a doubled edge is never a bridge.
pub fn bridges(g: &SnapshotGraph) -> Vec<bool> {
    let adj = g.adjacency();
    let mut is_bridge = vec![false; g.edges.len()];
    let mut disc = vec![usize::MAX; g.n];
    let mut low = vec![usize::MAX; g.n];
    let mut timer = 0;

    // Stack frames: (vertex, incoming edge id, next adjacency index).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..g.n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, pe, ref mut idx)) = stack.last_mut() {
            if *idx < adj[u].len() {
                let (v, e) = adj[u][*idx];
                *idx += 1;
                if e == pe {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, e, 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        is_bridge[pe] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

/// 2-edge-connected component labels: same label iff connected and not
/// separated by any bridge.
pub fn two_ecc(g: &SnapshotGraph) -> Vec<usize> {
    let is_bridge = bridges(g);
    let kept: Vec<(usize, usize)> = g
        .edges
        .iter()
        .enumerate()
        .filter(|&(k, _)| !is_bridge[k])
        .map(|(_, &e)| e)
        .collect();
    components(&SnapshotGraph { n: g.n, edges: kept })
}

pub fn is_two_edge_connected(g: &SnapshotGraph, v: usize, w: usize) -> bool {
    let ecc = two_ecc(g);
    let comp = components(g);
    comp[v] == comp[w] && ecc[v] == ecc[w]
}

/// Bridges by the literal delete-and-test definition; used to cross-check
/// `bridges` on tiny graphs.
pub fn bridges_by_deletion(g: &SnapshotGraph) -> Vec<bool> {
    let mut out = vec![false; g.edges.len()];
    for k in 0..g.edges.len() {
        let (u, v) = g.edges[k];
        let mut reduced = g.clone();
        reduced.edges.remove(k);
        out[k] = !connected(&reduced, u, v);
    }
    out
}

/// A spanning tree as an explicit edge list over `n` vertices.
#[derive(Clone, Debug)]
pub struct TreeSnapshot {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TreeSnapshot {
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, k));
            adj[v].push((u, k));
        }
        adj
    }

    /// Edge indices along the unique v..w path; empty when v == w or when the
    /// vertices are in different trees.
    pub fn path_edges(&self, v: usize, w: usize) -> Vec<usize> {
        if v == w {
            return Vec::new();
        }
        let adj = self.adjacency();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            if u == w {
                break;
            }
            for &(x, e) in &adj[u] {
                if !seen[x] {
                    seen[x] = true;
                    prev[x] = Some((u, e));
                    queue.push_back(x);
                }
            }
        }
        if !seen[w] {
            return Vec::new();
        }
        let mut path = Vec::new();
        let mut cur = w;
        while let Some((p, e)) = prev[cur] {
            path.push(e);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Vertices along the v..w path, inclusive of both ends.
    pub fn path_vertices(&self, v: usize, w: usize) -> Vec<usize> {
        if v == w {
            return vec![v];
        }
        let edges = self.path_edges(v, w);
        if edges.is_empty() {
            return Vec::new();
        }
        let mut out = vec![v];
        let mut cur = v;
        for e in edges {
            let (a, b) = self.edges[e];
            cur = if a == cur { b } else { a };
            out.push(cur);
        }
        out
    }

    /// BFS hop distances from `v` within its tree (usize::MAX elsewhere).
    pub fn distances(&self, v: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &(x, _) in &adj[u] {
                if dist[x] == usize::MAX {
                    dist[x] = dist[u] + 1;
                    queue.push_back(x);
                }
            }
        }
        dist
    }

    /// The unique vertex on all three pairwise paths among u, v, w (all three
    /// must be in one tree).
    pub fn meet(&self, u: usize, v: usize, w: usize) -> usize {
        let pv = self.path_vertices(u, v);
        let pw = self.path_vertices(u, w);
        debug_assert!(!pv.is_empty() && !pw.is_empty());
        let mut last = u;
        for i in 0..pv.len().min(pw.len()) {
            if pv[i] == pw[i] {
                last = pv[i];
            } else {
                break;
            }
        }
        last
    }
}

/// One entry of the Cover/Uncover call log replayed by the simulator.
#[derive(Clone, Copy, Debug)]
pub enum CoverOp {
    Cover { v: usize, w: usize, level: i32 },
    Uncover { v: usize, w: usize, level: i32 },
}

/// Literal per-edge replay of Cover/Uncover semantics over a fixed tree.
/// Returns the cover level c(e) per tree edge index (-1 when uncovered).
pub fn simulate_cover_levels(tree: &TreeSnapshot, log: &[CoverOp]) -> Vec<i32> {
    let mut c = vec![-1i32; tree.edges.len()];
    for op in log {
        match *op {
            CoverOp::Cover { v, w, level } => {
                for e in tree.path_edges(v, w) {
                    c[e] = c[e].max(level);
                }
            }
            CoverOp::Uncover { v, w, level } => {
                for e in tree.path_edges(v, w) {
                    if c[e] <= level {
                        c[e] = -1;
                    }
                }
            }
        }
    }
    c
}

/// Minimum cover level on the v..w path, with one witness edge; `l_max` and no
/// witness when v == w.
pub fn cover_level_on_path(
    tree: &TreeSnapshot,
    c: &[i32],
    v: usize,
    w: usize,
    l_max: i32,
) -> (i32, Option<usize>) {
    if v == w {
        return (l_max, None);
    }
    let mut best = (l_max, None);
    for e in tree.path_edges(v, w) {
        if best.1.is_none() || c[e] < best.0 {
            best = (c[e], Some(e));
        }
    }
    best
}

/// Minimum cover level over every tree edge in v's tree, with a witness;
/// `(l_max, None)` for an isolated vertex.
pub fn cover_level_in_tree(
    tree: &TreeSnapshot,
    c: &[i32],
    v: usize,
    l_max: i32,
) -> (i32, Option<usize>) {
    let comp = components(&SnapshotGraph { n: tree.n, edges: tree.edges.clone() });
    let mut best = (l_max, None);
    for (e, &(a, _)) in tree.edges.iter().enumerate() {
        if comp[a] == comp[v] && (best.1.is_none() || c[e] < best.0) {
            best = (c[e], Some(e));
        }
    }
    best
}

/// |{u : CoverLevel(u, meet(u,v,w)) >= i}| by direct enumeration; for i = -1
/// this is the size of the tree containing v.
pub fn brute_find_size(tree: &TreeSnapshot, c: &[i32], v: usize, w: usize, i: i32, l_max: i32) -> usize {
    let comp = components(&SnapshotGraph { n: tree.n, edges: tree.edges.clone() });
    let mut count = 0;
    for u in 0..tree.n {
        if comp[u] != comp[v] {
            continue;
        }
        if i < 0 {
            count += 1;
            continue;
        }
        let m = tree.meet(u, v, w);
        let (lvl, _) = cover_level_on_path(tree, c, u, m, l_max);
        if lvl >= i {
            count += 1;
        }
    }
    count
}

/// All labels (given as `(vertex, level)` pairs) admissible for
/// FindFirstLabel(v, w, i), returned as `(label index, meet distance)` with
/// only the minimum-distance ones kept.
pub fn brute_find_first_label(
    tree: &TreeSnapshot,
    c: &[i32],
    labels: &[(usize, i32)],
    v: usize,
    w: usize,
    i: i32,
    l_max: i32,
) -> Vec<(usize, usize)> {
    let dist_v = tree.distances(v);
    let mut best: Vec<(usize, usize)> = Vec::new();
    for (k, &(u, lvl)) in labels.iter().enumerate() {
        if lvl != i || dist_v[u] == usize::MAX {
            continue;
        }
        let m = tree.meet(u, v, w);
        let (cl, _) = cover_level_on_path(tree, c, u, m, l_max);
        if cl < i {
            continue;
        }
        let d = dist_v[m];
        match best.first() {
            Some(&(_, bd)) if d > bd => {}
            Some(&(_, bd)) if d < bd => best = vec![(k, d)],
            _ => best.push((k, d)),
        }
    }
    best
}

/// Checks that for every level i, each 2-edge-connected component of the
/// subgraph of edges with level >= i has at most floor(n / 2^i) vertices.
pub fn check_size_invariant(n: usize, edges: &[(usize, usize)], levels: &[i32], l_max: i32) -> bool {
    for i in 0..=l_max {
        let kept: Vec<(usize, usize)> = edges
            .iter()
            .zip(levels)
            .filter(|&(_, &l)| l >= i)
            .map(|(&e, _)| e)
            .collect();
        let g = SnapshotGraph { n, edges: kept.clone() };
        let ecc = two_ecc(&g);
        let mut sizes = vec![0usize; n];
        // Count only vertices that touch a kept edge; singletons are trivially fine.
        let mut touched = vec![false; n];
        for &(u, v) in &kept {
            touched[u] = true;
            touched[v] = true;
        }
        for u in 0..n {
            if touched[u] {
                sizes[ecc[u]] += 1;
            }
        }
        let bound = n >> i.max(0) as usize;
        if sizes.iter().any(|&s| s > bound) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> SnapshotGraph {
        SnapshotGraph::with_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn cycle_graph(n: usize) -> SnapshotGraph {
        let mut g = path_graph(n);
        g.edges.push((n - 1, 0));
        g
    }

    #[test]
    fn tree_edges_are_all_bridges() {
        let g = path_graph(5);
        assert!(bridges(&g).iter().all(|&b| b));
    }

    #[test]
    fn cycle_has_no_bridges() {
        let g = cycle_graph(5);
        assert!(bridges(&g).iter().all(|&b| !b));
    }

    #[test]
    fn barbell_bridge_is_the_connector() {
        // Two triangles {0,1,2} and {3,4,5} joined by edge (2,3).
        let g = SnapshotGraph::with_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        );
        let b = bridges(&g);
        assert_eq!(b, vec![false, false, false, false, false, false, true]);
        assert!(is_two_edge_connected(&g, 0, 2));
        assert!(!is_two_edge_connected(&g, 0, 3));
    }

    #[test]
    fn parallel_edges_are_never_bridges() {
        let g = SnapshotGraph::with_edges(2, &[(0, 1), (0, 1)]);
        assert_eq!(bridges(&g), vec![false, false]);
    }

    #[test]
    fn deletion_definition_agrees_on_random_graphs() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let n = 2 + (next() % 7) as usize;
            let m = (next() % 12) as usize;
            let edges: Vec<(usize, usize)> = (0..m)
                .map(|_| ((next() % n as u64) as usize, (next() % n as u64) as usize))
                .filter(|&(u, v)| u != v)
                .collect();
            let g = SnapshotGraph::with_edges(n, &edges);
            assert_eq!(bridges(&g), bridges_by_deletion(&g));
        }
    }

    #[test]
    fn cover_simulation_applies_per_edge_rules() {
        // Path 0-1-2-3 with per-edge cover levels {0,2,1}, then uncover at 1
        // between the endpoints: {-1,2,-1}.
        let tree = TreeSnapshot { n: 4, edges: vec![(0, 1), (1, 2), (2, 3)] };
        let log = [
            CoverOp::Cover { v: 0, w: 1, level: 0 },
            CoverOp::Cover { v: 1, w: 2, level: 2 },
            CoverOp::Cover { v: 2, w: 3, level: 1 },
            CoverOp::Uncover { v: 0, w: 3, level: 1 },
        ];
        assert_eq!(simulate_cover_levels(&tree, &log), vec![-1, 2, -1]);
    }

    #[test]
    fn meet_lies_on_all_pairwise_paths() {
        // Star with center 0 and legs 1,2,3, one leg extended by vertex 4.
        let tree = TreeSnapshot { n: 5, edges: vec![(0, 1), (0, 2), (0, 3), (3, 4)] };
        assert_eq!(tree.meet(1, 2, 4), 0);
        assert_eq!(tree.meet(4, 3, 2), 3);
        assert_eq!(tree.meet(1, 1, 4), 1);
    }

    #[test]
    fn find_size_matches_hand_computation() {
        // Tree edges a-b, b-c (a=0, b=1, c=2); every path vertex u has
        // meet(u,a,c) = u and CoverLevel(u,u) = l_max, so all three count at
        // level 0 with or without covers.
        let tree = TreeSnapshot { n: 3, edges: vec![(0, 1), (1, 2)] };
        let covered = simulate_cover_levels(&tree, &[CoverOp::Cover { v: 0, w: 2, level: 0 }]);
        assert_eq!(brute_find_size(&tree, &covered, 0, 2, 0, 1), 3);
        let uncovered = vec![-1, -1];
        assert_eq!(brute_find_size(&tree, &uncovered, 0, 2, 0, 1), 3);
        assert_eq!(brute_find_size(&tree, &uncovered, 0, 2, 1, 1), 3);
        assert_eq!(brute_find_size(&tree, &uncovered, 0, 1, 0, 1), 2);
        assert_eq!(brute_find_size(&tree, &uncovered, 0, 0, -1, 1), 3);
    }

    #[test]
    fn size_invariant_checker_flags_oversized_components() {
        // n = 4, l_max = 2: a 4-cycle entirely at level 1 exceeds floor(4/2) = 2.
        let edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        assert!(check_size_invariant(4, &edges, &[0, 0, 0, 0], 2));
        assert!(!check_size_invariant(4, &edges, &[1, 1, 1, 1], 2));
    }
}
