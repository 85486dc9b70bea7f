//! Exact isomorphism on small graphs via canonical forms: iterated
//! neighborhood color refinement plus backtracking over color-class
//! orderings, selecting the lexicographically least adjacency
//! encoding. Components are canonicalized independently and sorted,
//! which keeps unions of identical pieces from exploding the search.

use crate::error::{GraphError, Result};
use crate::graph::{Graph, VertexId};

pub const ISO_ORDER_LIMIT: usize = 64;

/// Order-invariant fingerprint: equal forms iff isomorphic graphs.
/// Degree multiset and triangle count ride along as a cheap
/// necessary-condition fast path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
    degrees: Vec<u32>,
    triangles: u64,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn degree_multiset(&self) -> &[u32] {
        &self.degrees
    }

    pub fn triangle_count(&self) -> u64 {
        self.triangles
    }

    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > ISO_ORDER_LIMIT {
        return Err(GraphError::OrderTooLarge {
            order: g.order(),
            limit: ISO_ORDER_LIMIT,
        });
    }
    Ok(())
}

fn triangle_count(g: &Graph) -> u64 {
    let mut t = 0u64;
    for (u, v) in g.edges() {
        for i in 0..g.row(u).len() {
            t += (g.row(u)[i] & g.row(v)[i]).count_ones() as u64;
        }
    }
    t / 3
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_form_with_perm(g)?.0)
}

/// Canonical form together with the vertex order that realizes it:
/// `perm[i]` is the original vertex placed at canonical position `i`.
pub fn canonical_form_with_perm(g: &Graph) -> Result<(CanonicalForm, Vec<VertexId>)> {
    check_order(g)?;
    let n = g.order();
    let comps = g.components();
    // Canonicalize each component, then sort blocks by (size, bits).
    let mut blocks: Vec<(Vec<u8>, Vec<VertexId>)> = comps
        .into_iter()
        .map(|comp| {
            let local = component_canonical(g, &comp);
            let verts: Vec<VertexId> = local.iter().map(|&i| comp[i]).collect();
            (encode_component(g, &verts), verts)
        })
        .collect();
    blocks.sort_by(|a, b| (a.1.len(), &a.0).cmp(&(b.1.len(), &b.0)));

    let mut perm = Vec::with_capacity(n);
    let mut bytes = Vec::new();
    bytes.push(n as u8);
    bytes.push(blocks.len() as u8);
    for (bits, verts) in &blocks {
        bytes.push(verts.len() as u8);
        bytes.extend_from_slice(bits);
        perm.extend_from_slice(verts);
    }
    let mut degrees: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
    degrees.sort_unstable();
    Ok((
        CanonicalForm {
            bytes,
            degrees,
            triangles: triangle_count(g),
        },
        perm,
    ))
}

/// Upper-triangle row-major bits of the subgraph on `verts` in the
/// given order, packed MSB-first.
fn encode_component(g: &Graph, verts: &[VertexId]) -> Vec<u8> {
    let k = verts.len();
    let mut bytes = Vec::with_capacity((k * (k - 1) / 2).div_ceil(8));
    let mut acc = 0u8;
    let mut fill = 0u8;
    for i in 0..k {
        for j in i + 1..k {
            acc = (acc << 1) | u8::from(g.has_edge(verts[i], verts[j]));
            fill += 1;
            if fill == 8 {
                bytes.push(acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        bytes.push(acc << (8 - fill));
    }
    bytes
}

/// Canonical order of one connected component, as positions into
/// `comp` (which is sorted ascending).
fn component_canonical(g: &Graph, comp: &[VertexId]) -> Vec<usize> {
    let k = comp.len();
    if k <= 1 {
        return (0..k).collect();
    }
    // Local adjacency as single words.
    let pos: std::collections::HashMap<VertexId, usize> =
        comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![0u64; k];
    for (i, &v) in comp.iter().enumerate() {
        for u in g.neighbors(v) {
            if let Some(&j) = pos.get(&u) {
                adj[i] |= 1 << j;
            }
        }
    }
    // Complete or edgeless components admit any order.
    let m: u32 = adj.iter().map(|r| r.count_ones()).sum();
    if m == 0 || m as usize == k * (k - 1) {
        return (0..k).collect();
    }

    let cells = refine(&adj, vec![(0..k).collect()]);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    descend(&adj, cells, &mut best);
    best.expect("search visits at least one leaf").1
}

/// Equitable refinement: split cells by per-cell neighbor counts until
/// stable. Cell order is derived from (parent index, count signature),
/// so it is invariant under relabeling.
fn refine(adj: &[u64], cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut cells = cells;
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    if i - start != cell.len() {
                        split = true;
                    }
                    start = i;
                }
            }
        }
        if !split {
            return next;
        }
        cells = next;
    }
}

/// Backtracking over orderings: individualize each vertex of the first
/// smallest non-singleton cell, refine, recurse; keep the least
/// adjacency encoding.
fn descend(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    // Locate the first cell of minimum size among non-singletons.
    let mut target: Option<usize> = None;
    for (i, c) in cells.iter().enumerate() {
        if c.len() > 1 && target.is_none_or(|t: usize| c.len() < cells[t].len()) {
            target = Some(i);
        }
    }
    let Some(t) = target else {
        let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let enc = encode_local(adj, &perm);
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            *best = Some((enc, perm));
        }
        return;
    };
    for &v in &cells[t] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        for (i, c) in cells.iter().enumerate() {
            if i == t {
                next.push(vec![v]);
                next.push(c.iter().copied().filter(|&u| u != v).collect());
            } else {
                next.push(c.clone());
            }
        }
        descend(adj, refine(adj, next), best);
    }
}

fn encode_local(adj: &[u64], perm: &[usize]) -> Vec<u8> {
    let k = perm.len();
    let mut bytes = Vec::with_capacity((k * (k - 1) / 2).div_ceil(8));
    let mut acc = 0u8;
    let mut fill = 0u8;
    for i in 0..k {
        for j in i + 1..k {
            acc = (acc << 1) | (adj[perm[i]] >> perm[j] & 1) as u8;
            fill += 1;
            if fill == 8 {
                bytes.push(acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        bytes.push(acc << (8 - fill));
    }
    bytes
}

/// Isomorphism decision; on success returns a witness mapping
/// (`map[u]` in H for each vertex u of G), verified edge-by-edge
/// before being returned.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<VertexId>>> {
    check_order(g)?;
    check_order(h)?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (fg, pg) = canonical_form_with_perm(g)?;
    let (fh, ph) = canonical_form_with_perm(h)?;
    if fg != fh {
        return Ok(None);
    }
    let n = g.order();
    let mut map = vec![0usize; n];
    for i in 0..n {
        map[pg[i]] = ph[i];
    }
    for u in 0..n {
        for v in u + 1..n {
            assert_eq!(
                g.has_edge(u, v),
                h.has_edge(map[u], map[v]),
                "canonical forms matched but the mapping is not an isomorphism"
            );
        }
    }
    Ok(Some(map))
}

/// Edge containment under label identification; both graphs must carry
/// the same label set.
pub fn is_spanning_subgraph(g: &Graph, h: &Graph) -> Result<bool> {
    let lg = g.labels().ok_or(GraphError::MissingLabels)?;
    let lh = h.labels().ok_or(GraphError::MissingLabels)?;
    if g.order() != h.order() {
        return Err(GraphError::LabelMismatch);
    }
    let mut to_h = std::collections::HashMap::new();
    for (i, l) in lh.iter().enumerate() {
        to_h.insert(l.as_str(), i);
    }
    let mut map = Vec::with_capacity(g.order());
    for l in lg {
        match to_h.get(l.as_str()) {
            Some(&i) => map.push(i),
            None => return Err(GraphError::LabelMismatch),
        }
    }
    Ok(g
        .edges()
        .into_iter()
        .all(|(u, v)| h.has_edge(map[u], map[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs;

    #[test]
    fn basic_decisions() {
        let c5 = testgraphs::cycle(5);
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&c5.complement()).unwrap()
        );
        assert_ne!(
            canonical_form(&testgraphs::star(3)).unwrap(),
            canonical_form(&testgraphs::path(4)).unwrap()
        );
        let two_k3 = testgraphs::complete(3).disjoint_copies(2);
        assert!(are_isomorphic(&testgraphs::cycle(6), &two_k3).unwrap().is_none());
    }

    #[test]
    fn witness_is_verified_mapping() {
        let g = testgraphs::petersen_like();
        let perm: Vec<usize> = (0..g.order()).map(|v| (v * 3 + 1) % g.order()).collect();
        let h = g.permuted(&perm);
        let w = are_isomorphic(&g, &h).unwrap().expect("relabeled copy");
        for u in g.vertices() {
            for v in g.vertices() {
                if u != v {
                    assert_eq!(g.has_edge(u, v), h.has_edge(w[u], w[v]));
                }
            }
        }
    }

    #[test]
    fn stable_under_relabeling_small_orders() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=6usize {
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                // Thin out the order-6 masks to keep this quick.
                if n == 6 && mask % 97 != 0 {
                    continue;
                }
                let g = crate::families::graph_from_mask(n, mask);
                let f = canonical_form(&g).unwrap();
                for _ in 0..3 {
                    let mut p: Vec<usize> = (0..n).collect();
                    p.shuffle(&mut rng);
                    assert_eq!(canonical_form(&g.permuted(&p)).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn forms_differ_across_classes_order_up_to_5() {
        // Cross-check canonical dedup against brute-force permutation
        // isomorphism.
        for n in 1..=5usize {
            let mut reps: Vec<Graph> = Vec::new();
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                let g = crate::families::graph_from_mask(n, mask);
                if !reps.iter().any(|r| brute_iso(r, &g)) {
                    reps.push(g);
                }
            }
            let mut forms: Vec<CanonicalForm> = reps
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            let total = forms.len();
            forms.sort_by(|a, b| a.bytes().cmp(b.bytes()));
            forms.dedup();
            assert_eq!(forms.len(), total, "n={n}");
        }
    }

    fn brute_iso(g: &Graph, h: &Graph) -> bool {
        if g.order() != h.order() || g.edge_count() != h.edge_count() {
            return false;
        }
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if g.edges().into_iter().all(|(u, v)| h.has_edge(perm[u], perm[v])) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn equivalence_relation_spot_suite() {
        let graphs = [
            testgraphs::cycle(6),
            testgraphs::cycle(6).permuted(&[3, 1, 4, 0, 5, 2]),
            testgraphs::complete(3).disjoint_copies(2),
            testgraphs::path(6),
        ];
        for (i, a) in graphs.iter().enumerate() {
            assert!(are_isomorphic(a, a).unwrap().is_some());
            for (j, b) in graphs.iter().enumerate() {
                let ab = are_isomorphic(a, b).unwrap().is_some();
                let ba = are_isomorphic(b, a).unwrap().is_some();
                assert_eq!(ab, ba);
                for c in graphs.iter() {
                    let bc = are_isomorphic(b, c).unwrap().is_some();
                    let ac = are_isomorphic(a, c).unwrap().is_some();
                    if ab && bc {
                        assert!(ac, "transitivity {i},{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn unions_of_identical_cliques_stay_fast() {
        let a = testgraphs::complete(4).disjoint_copies(10);
        let perm: Vec<usize> = (0..40).map(|v| (v * 7 + 3) % 40).collect();
        let b = a.permuted(&perm);
        assert!(are_isomorphic(&a, &b).unwrap().is_some());
        assert!(are_isomorphic(&a, &testgraphs::complete(5).disjoint_copies(8))
            .unwrap()
            .is_none());
    }

    #[test]
    fn spanning_subgraph_on_labels() {
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let p4 = testgraphs::path(4).with_labels(labels.clone()).unwrap();
        let c4 = crate::graph::Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .unwrap()
            .with_labels(labels)
            .unwrap();
        assert!(is_spanning_subgraph(&p4, &c4).unwrap());
        assert!(!is_spanning_subgraph(&c4, &p4).unwrap());
        assert!(is_spanning_subgraph(&c4, &c4).unwrap());
        let other = testgraphs::path(4)
            .with_labels((10..14).map(|i| i.to_string()).collect())
            .unwrap();
        assert_eq!(
            is_spanning_subgraph(&p4, &other),
            Err(GraphError::LabelMismatch)
        );
    }

    #[test]
    fn rejects_orders_above_limit() {
        let g = crate::graph::Graph::build(65, &[]).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(GraphError::OrderTooLarge { .. })
        ));
    }
}
