//! Structural vertex classes (simplicial, true twins, cut vertices,
//! leaves) and graph-level predicates used as theorem hypotheses.

use crate::error::{GraphError, Result};
use crate::graph::{Dist, Graph, VertexId, VertexSet};

/// Exhaustive Hamiltonicity check is desk-scale only.
pub const HAMILTONIAN_ORDER_LIMIT: usize = 12;
/// Augmenting-path matching stays exact up to this order.
pub const MATCHING_ORDER_LIMIT: usize = 200;
/// Five-cycle coverage is checked by subset scan.
pub const C5_ORDER_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    /// Vertices whose neighborhood induces a clique.
    pub simplicial: VertexSet,
    /// Partition of the vertex set by closed-neighborhood equality;
    /// classes ordered by minimum member, singletons included.
    pub true_twin_classes: Vec<Vec<VertexId>>,
    pub cut_vertices: VertexSet,
    /// Degree-one vertices.
    pub leaves: VertexSet,
}

pub fn classify_vertices(g: &Graph) -> VertexClasses {
    VertexClasses {
        simplicial: simplicial_vertices(g),
        true_twin_classes: true_twin_classes(g),
        cut_vertices: cut_vertices(g),
        leaves: g.vertices().filter(|&v| g.degree(v) == 1).collect(),
    }
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices()
        .filter(|&v| {
            let nb: Vec<VertexId> = g.neighbors(v).collect();
            nb.iter()
                .enumerate()
                .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect()
}

fn closed_row(g: &Graph, v: VertexId) -> Vec<u64> {
    let mut row = g.row(v).to_vec();
    row[v / 64] |= 1 << (v % 64);
    row
}

pub fn are_true_twins(g: &Graph, u: VertexId, v: VertexId) -> bool {
    u != v && closed_row(g, u) == closed_row(g, v)
}

pub fn true_twin_classes(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut classes: Vec<(Vec<u64>, Vec<VertexId>)> = Vec::new();
    for v in g.vertices() {
        let key = closed_row(g, v);
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(v),
            None => classes.push((key, vec![v])),
        }
    }
    classes.into_iter().map(|(_, m)| m).collect()
}

pub fn is_true_twin_free(g: &Graph) -> bool {
    true_twin_classes(g).iter().all(|c| c.len() == 1)
}

pub fn is_false_twin_free(g: &Graph) -> bool {
    let mut rows: Vec<&[u64]> = g.vertices().map(|v| g.row(v)).collect();
    rows.sort();
    rows.windows(2).all(|w| w[0] != w[1])
}

/// Articulation points by lowlink DFS.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        cut: Vec<bool>,
        timer: usize,
    }
    fn dfs(s: &mut State, v: VertexId, parent: usize, root: VertexId) -> usize {
        s.disc[v] = s.timer;
        s.low[v] = s.timer;
        s.timer += 1;
        let mut children = 0;
        for u in s.g.neighbors(v).collect::<Vec<_>>() {
            if s.disc[u] == usize::MAX {
                children += 1;
                dfs(s, u, v, root);
                s.low[v] = s.low[v].min(s.low[u]);
                if v != root && s.low[u] >= s.disc[v] {
                    s.cut[v] = true;
                }
            } else if u != parent {
                s.low[v] = s.low[v].min(s.disc[u]);
            }
        }
        children
    }
    let n = g.order();
    let mut s = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        cut: vec![false; n],
        timer: 0,
    };
    for root in 0..n {
        if s.disc[root] == usize::MAX && dfs(&mut s, root, usize::MAX, root) >= 2 {
            s.cut[root] = true;
        }
    }
    (0..n).filter(|&v| s.cut[v]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructurePredicates {
    pub connected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub two_antipodal: bool,
    /// `None` when the order exceeds the five-cycle scan limit.
    pub c5_connected: Option<bool>,
    /// `None` when not bipartite or above the matching limit.
    pub bipartite_perfect_matching: Option<bool>,
    /// `None` above the exhaustive-search limit.
    pub hamiltonian: Option<bool>,
}

pub fn structure_predicates(g: &Graph) -> StructurePredicates {
    StructurePredicates {
        connected: g.is_connected(),
        bipartite: bipartition(g).is_some(),
        triangle_free: is_triangle_free(g),
        two_antipodal: is_two_antipodal(g),
        c5_connected: is_c5_connected(g).ok(),
        bipartite_perfect_matching: has_bipartite_perfect_matching(g).ok(),
        hamiltonian: is_hamiltonian(g).ok(),
    }
}

/// Two-coloring by BFS; `Some(colors)` iff bipartite.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        for i in 0..g.row(u).len() {
            if g.row(u)[i] & g.row(v)[i] != 0 {
                return false;
            }
        }
    }
    true
}

/// Every vertex has exactly one diametral partner.
pub fn is_two_antipodal(g: &Graph) -> bool {
    if !g.is_connected() || g.order() < 2 {
        return false;
    }
    let d = g.distances();
    let diam = d.diameter();
    g.vertices()
        .all(|x| g.vertices().filter(|&y| d.get(x, y) == diam).count() == 1)
}

/// The diametral-partner map of a 2-antipodal graph, as index pairs.
pub fn antipodal_pairs(g: &Graph) -> Option<Vec<(VertexId, VertexId)>> {
    if !is_two_antipodal(g) {
        return None;
    }
    let d = g.distances();
    let diam = d.diameter();
    let mut pairs = Vec::new();
    for x in g.vertices() {
        let y = g.vertices().find(|&y| d.get(x, y) == diam).unwrap();
        if x < y {
            pairs.push((x, y));
        }
    }
    Some(pairs)
}

/// Every pair of vertices lies on a common five-cycle. Decided by a
/// subset scan, so capped at order 64.
pub fn is_c5_connected(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > C5_ORDER_LIMIT {
        return Err(GraphError::OrderTooLarge {
            order: n,
            limit: C5_ORDER_LIMIT,
        });
    }
    if n < 5 {
        return Ok(false);
    }
    let mut covered = vec![false; n * n];
    // Walk all 5-subsets; within one, try the 12 distinct cyclic orders.
    let mut subset = [0usize; 5];
    fn scan(
        g: &Graph,
        subset: &mut [usize; 5],
        depth: usize,
        start: usize,
        covered: &mut [bool],
    ) {
        let n = g.order();
        if depth == 5 {
            mark_five_cycles(g, subset, covered);
            return;
        }
        for v in start..n {
            subset[depth] = v;
            scan(g, subset, depth + 1, v + 1, covered);
        }
    }
    fn mark_five_cycles(g: &Graph, s: &[usize; 5], covered: &mut [bool]) {
        let n = g.order();
        // Fix s[0] first; orderings of the remaining four give each
        // cycle twice, so skip reversed copies via perm[1] < perm[3].
        let idx = [1usize, 2, 3, 4];
        let mut perms = Vec::with_capacity(24);
        permute(&idx, &mut vec![], &mut perms);
        for p in perms {
            if p[0] > p[3] {
                continue;
            }
            let cyc = [s[0], s[p[0]], s[p[1]], s[p[2]], s[p[3]]];
            if (0..5).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % 5])) {
                for &a in &cyc {
                    for &b in &cyc {
                        covered[a * n + b] = true;
                    }
                }
            }
        }
    }
    fn permute(rest: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for (i, &x) in rest.iter().enumerate() {
            let mut r = rest.to_vec();
            r.remove(i);
            acc.push(x);
            permute(&r, acc, out);
            acc.pop();
        }
    }
    scan(g, &mut subset, 0, 0, &mut covered);
    Ok((0..n).all(|a| (0..n).all(|b| covered[a * n + b])))
}

/// Exhaustive backtracking; refuses orders above 12.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > HAMILTONIAN_ORDER_LIMIT {
        return Err(GraphError::OrderTooLarge {
            order: n,
            limit: HAMILTONIAN_ORDER_LIMIT,
        });
    }
    if n < 3 {
        return Ok(false);
    }
    if !g.is_connected() || g.vertices().any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    let adj = g.compact_rows();
    fn extend(adj: &[u64], n: usize, path: &mut Vec<usize>, used: u64) -> bool {
        if path.len() == n {
            return adj[*path.last().unwrap()] >> path[0] & 1 == 1;
        }
        let last = *path.last().unwrap();
        let mut cand = adj[last] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(v);
            if extend(adj, n, path, used | 1 << v) {
                return true;
            }
            path.pop();
        }
        false
    }
    Ok(extend(&adj, n, &mut vec![0], 1))
}

/// Exact maximum matching on a bipartite graph by augmenting paths;
/// errors on non-bipartite input.
pub fn bipartite_maximum_matching(g: &Graph) -> Result<Vec<(VertexId, VertexId)>> {
    let n = g.order();
    if n > MATCHING_ORDER_LIMIT {
        return Err(GraphError::OrderTooLarge {
            order: n,
            limit: MATCHING_ORDER_LIMIT,
        });
    }
    let color = bipartition(g).ok_or(GraphError::NotBipartite)?;
    let left: Vec<VertexId> = (0..n).filter(|&v| color[v] == 0).collect();
    let mut matched = vec![usize::MAX; n];
    fn try_augment(
        g: &Graph,
        v: VertexId,
        matched: &mut [usize],
        seen: &mut [bool],
    ) -> bool {
        for u in g.neighbors(v) {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            if matched[u] == usize::MAX || try_augment(g, matched[u], matched, seen) {
                matched[u] = v;
                matched[v] = u;
                return true;
            }
        }
        false
    }
    for &v in &left {
        if matched[v] == usize::MAX {
            let mut seen = vec![false; n];
            try_augment(g, v, &mut matched, &mut seen);
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        if matched[v] != usize::MAX && v < matched[v] {
            out.push((v, matched[v]));
        }
    }
    Ok(out)
}

pub fn has_bipartite_perfect_matching(g: &Graph) -> Result<bool> {
    let m = bipartite_maximum_matching(g)?;
    Ok(2 * m.len() == g.order())
}
