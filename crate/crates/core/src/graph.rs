//! Finite simple undirected labeled graphs with bit-packed adjacency,
//! BFS distances, and the basic graph-level operations (complement,
//! label-identified overlay, induced subgraphs, disjoint union).

use crate::error::{GraphError, Result};
use std::fmt;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A shortest-path length: finite or unreachable. `Infinity` compares
/// greater than every finite value, so `min`/`max` follow the usual
/// conventions of distance formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Infinity,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    /// Finite value, panicking on `Infinity`.
    pub fn unwrap(self) -> u32 {
        match self {
            Dist::Finite(d) => d,
            Dist::Infinity => panic!("unwrap on infinite distance"),
        }
    }

    pub fn checked_add(self, other: Dist) -> Dist {
        match (self, other) {
            (Dist::Finite(a), Dist::Finite(b)) => Dist::Finite(a + b),
            _ => Dist::Infinity,
        }
    }
}

impl std::ops::Add for Dist {
    type Output = Dist;
    fn add(self, other: Dist) -> Dist {
        self.checked_add(other)
    }
}

impl std::ops::Add<u32> for Dist {
    type Output = Dist;
    fn add(self, other: u32) -> Dist {
        self.checked_add(Dist::Finite(other))
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinity => write!(f, "inf"),
        }
    }
}

/// A subset of the vertices of some graph, kept sorted by index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All-pairs shortest-path lengths over the naturals plus an
/// unreachable sentinel. Immutable once computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Dist {
        self.entries[u * self.n + v]
    }

    /// Largest entry; `Infinity` when the graph is disconnected,
    /// `Finite(0)` for the one-vertex graph.
    pub fn diameter(&self) -> Dist {
        if self.n == 0 {
            return Dist::Finite(0);
        }
        self.entries.iter().copied().max().unwrap()
    }

    pub fn eccentricity(&self, v: VertexId) -> Dist {
        (0..self.n).map(|u| self.get(v, u)).max().unwrap()
    }
}

/// Finite simple undirected graph. Adjacency is stored as `n` rows of
/// packed 64-bit words; labels are optional and do not participate in
/// equality (two graphs are equal iff they have the same order and the
/// same edge set under the identity mapping).
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut g = Graph {
            n,
            rows: vec![vec![0u64; words_for(n)]; n],
            labels: None,
        };
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange { index: u, order: n });
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange { index: v, order: n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn build_labeled(
        n: usize,
        edges: &[(VertexId, VertexId)],
        labels: Vec<String>,
    ) -> Result<Graph> {
        Graph::build(n, edges)?.with_labels(labels)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(GraphError::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let mut seen = labels.clone();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(GraphError::InvalidParameter(
                "duplicate vertex labels".into(),
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub(crate) fn set_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v);
        self.rows[u][v / WORD] |= 1 << (v % WORD);
        self.rows[v][u / WORD] |= 1 << (u % WORD);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        BitIter::new(&self.rows[v])
    }

    pub(crate) fn row(&self, v: VertexId) -> &[u64] {
        &self.rows[v]
    }

    /// Adjacency rows as single words; only valid for order <= 64.
    pub(crate) fn compact_rows(&self) -> Vec<u64> {
        debug_assert!(self.n <= WORD);
        self.rows
            .iter()
            .map(|r| r.first().copied().unwrap_or(0))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as (min, max) pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Label if present, else the index rendered as text.
    pub fn display_label(&self, v: VertexId) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    pub fn is_empty_graph(&self) -> bool {
        self.edge_count() == 0
    }

    /// Same vertex set, edge iff non-edge.
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            rows: vec![vec![0u64; words_for(self.n)]; self.n],
            labels: self.labels.clone(),
        };
        for u in 0..self.n {
            for v in 0..u {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Union of two labeled graphs with vertices identified by equal
    /// label. The result's vertex set is the label union, ordered by
    /// first appearance (self's labels first).
    pub fn overlay(&self, other: &Graph) -> Result<Graph> {
        let la = self.labels().ok_or(GraphError::MissingLabels)?;
        let lb = other.labels().ok_or(GraphError::MissingLabels)?;
        let mut labels: Vec<String> = la.to_vec();
        let mut index: std::collections::HashMap<&str, usize> = la
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        for l in lb {
            if !index.contains_key(l.as_str()) {
                index.insert(l.as_str(), labels.len());
                labels.push(l.clone());
            }
        }
        let n = labels.len();
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            edges.push((u, v));
        }
        for (u, v) in other.edges() {
            edges.push((index[lb[u].as_str()], index[lb[v].as_str()]));
        }
        Graph::build(n, &edges)?.with_labels(labels)
    }

    /// BFS-exact all-pairs distances; `Infinity` across components.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut entries = vec![Dist::Infinity; n * n];
        let w = words_for(n);
        let mut visited = vec![0u64; w];
        let mut frontier = vec![0u64; w];
        let mut next = vec![0u64; w];
        for src in 0..n {
            visited.iter_mut().for_each(|x| *x = 0);
            frontier.iter_mut().for_each(|x| *x = 0);
            visited[src / WORD] |= 1 << (src % WORD);
            frontier[src / WORD] |= 1 << (src % WORD);
            entries[src * n + src] = Dist::Finite(0);
            let mut depth = 0u32;
            loop {
                depth += 1;
                next.iter_mut().for_each(|x| *x = 0);
                for v in BitIter::new(&frontier) {
                    for (nw, rw) in next.iter_mut().zip(self.rows[v].iter()) {
                        *nw |= rw;
                    }
                }
                let mut any = false;
                for i in 0..w {
                    next[i] &= !visited[i];
                    visited[i] |= next[i];
                    any |= next[i] != 0;
                }
                if !any {
                    break;
                }
                for v in BitIter::new(&next) {
                    entries[src * n + v] = Dist::Finite(depth);
                }
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        DistanceMatrix { n, entries }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, src: VertexId) -> Vec<VertexId> {
        let w = words_for(self.n);
        let mut visited = vec![0u64; w];
        let mut stack = vec![src];
        visited[src / WORD] |= 1 << (src % WORD);
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for u in self.neighbors(v) {
                if visited[u / WORD] >> (u % WORD) & 1 == 0 {
                    visited[u / WORD] |= 1 << (u % WORD);
                    stack.push(u);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components as sorted vertex lists, ordered by minimum
    /// vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for v in 0..self.n {
            if !seen[v] {
                let comp = self.component_of(v);
                for &u in &comp {
                    seen[u] = true;
                }
                comps.push(comp);
            }
        }
        comps
    }

    /// Subgraph induced by `verts` (deduplicated, sorted), with labels
    /// carried over.
    pub fn induced(&self, verts: &[VertexId]) -> Result<Graph> {
        let keep = VertexSet::new(verts.to_vec());
        for v in keep.iter() {
            if v >= self.n {
                return Err(GraphError::IndexOutOfRange {
                    index: v,
                    order: self.n,
                });
            }
        }
        let map: std::collections::HashMap<VertexId, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, old)| (old, new))
            .collect();
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if let (Some(&a), Some(&b)) = (map.get(&u), map.get(&v)) {
                edges.push((a, b));
            }
        }
        let g = Graph::build(keep.len(), &edges)?;
        match &self.labels {
            Some(l) => g.with_labels(keep.iter().map(|v| l[v].clone()).collect()),
            None => Ok(g),
        }
    }

    /// Graph minus its isolated vertices.
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<VertexId> = self.vertices().filter(|&v| self.degree(v) > 0).collect();
        self.induced(&keep).expect("induced on own vertices")
    }

    /// Disjoint union; labels are dropped (the pieces may collide).
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        for (u, v) in other.edges() {
            edges.push((u + self.n, v + self.n));
        }
        Graph::build(n, &edges).expect("valid shifted edges")
    }

    /// `count` disjoint copies of `self`.
    pub fn disjoint_copies(&self, count: usize) -> Graph {
        let mut out = Graph::build(0, &[]).unwrap();
        for _ in 0..count {
            out = out.disjoint_union(self);
        }
        out
    }

    /// Image of the graph under a permutation: vertex `v` of `self`
    /// becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        let g = Graph::build(self.n, &edges).expect("permutation preserves validity");
        match &self.labels {
            Some(l) => {
                let mut nl = vec![String::new(); self.n];
                for v in 0..self.n {
                    nl[perm[v]] = l[v].clone();
                }
                g.with_labels(nl).expect("labels stay unique")
            }
            None => g,
        }
    }
}

/// Iterator over set bits of a packed word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            word_idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs;

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(GraphError::IndexOutOfRange { index: 2, order: 2 })
        );
        assert_eq!(Graph::build(2, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
    }

    #[test]
    fn build_k2_and_p4() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.is_complete());

        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.degree(1), 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn pendant_pentagon_fixture_builds() {
        // 5-cycle a,b,e,f,g with pendant h at g and pendants c,d at b.
        let g = testgraphs::pendant_pentagon();
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(1), 4); // b
    }

    #[test]
    fn complement_involution_and_basic_cases() {
        let k4 = testgraphs::complete(4);
        assert!(k4.complement().is_empty_graph());
        let c5 = testgraphs::cycle(5);
        // Self-complementary up to isomorphism; as labeled graphs the
        // complement is the pentagram.
        assert_eq!(c5.complement().edge_count(), 5);
        for n in 0..6 {
            for mask in 0..1u64 << (n * (n - 1).max(1) / 2) {
                let g = crate::families::graph_from_mask(n, mask);
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn distances_on_paths_and_chains() {
        let p4 = testgraphs::path(4);
        let d = p4.distances();
        assert_eq!(d.get(0, 3), Dist::Finite(3));
        assert_eq!(d.diameter(), Dist::Finite(3));

        // Three-diamond chain: hand BFS gives d(a,g)=5 via
        // a-j-c-i-e then the e-g chord (a=0, g=6).
        let chain = testgraphs::diamond_chain();
        let d = chain.distances();
        assert_eq!(d.get(0, 6), Dist::Finite(5));
        assert_eq!(d.get(0, 4), Dist::Finite(4));
    }

    #[test]
    fn distances_across_components_are_infinite() {
        let two_k2 = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let d = two_k2.distances();
        assert_eq!(d.get(0, 2), Dist::Infinity);
        assert_eq!(d.get(0, 1), Dist::Finite(1));
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.components().len(), 2);
    }

    #[test]
    fn overlay_builds_wheel_from_cycle_and_star() {
        // C_6 on labels 1..6 plus a star centered at 7 gives the
        // 6-spoke wheel.
        let c6 = Graph::build_labeled(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
            (1..=6).map(|i| i.to_string()).collect(),
        )
        .unwrap();
        let star = Graph::build_labeled(
            7,
            &[(6, 0), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)],
            (1..=7).map(|i| i.to_string()).collect(),
        )
        .unwrap();
        let wheel = c6.overlay(&star).unwrap();
        assert_eq!(wheel.order(), 7);
        assert_eq!(wheel.edge_count(), 12);
        let hub = wheel.vertices().find(|&v| wheel.label(v) == Some("7")).unwrap();
        assert_eq!(wheel.degree(hub), 6);
    }

    #[test]
    fn overlay_is_idempotent() {
        let g = testgraphs::cycle(5)
            .with_labels((0..5).map(|i| i.to_string()).collect())
            .unwrap();
        assert_eq!(g.overlay(&g).unwrap(), g);
    }

    #[test]
    fn overlay_requires_labels() {
        let g = testgraphs::cycle(4);
        assert_eq!(g.overlay(&g), Err(GraphError::MissingLabels));
    }

    #[test]
    fn distance_matrix_axioms_small_orders() {
        for n in 1..=5usize {
            let bits = n * (n - 1) / 2;
            for mask in 0..1u64 << bits {
                let g = crate::families::graph_from_mask(n, mask);
                let d = g.distances();
                for u in 0..n {
                    assert_eq!(d.get(u, u), Dist::Finite(0));
                    for v in 0..n {
                        assert_eq!(d.get(u, v), d.get(v, u));
                        for w in 0..n {
                            if let (Dist::Finite(a), Dist::Finite(b)) =
                                (d.get(u, w), d.get(w, v))
                            {
                                assert!(d.get(u, v) <= Dist::Finite(a + b));
                            }
                        }
                    }
                }
            }
        }
    }
}
