//! Strong metric generators and dimension. Two arms-length routes are
//! provided: a definitional subset-search oracle, and the reduction to
//! minimum vertex cover of the strong resolving graph. The cover and
//! independence solvers are exact branch-and-bound kernels over 64-bit
//! vertex masks.

use crate::error::{GraphError, Result};
use crate::graph::{Dist, DistanceMatrix, Graph, VertexId, VertexSet};
use crate::srg;

/// Subset-enumeration oracle refuses orders above this.
pub const ORACLE_ORDER_LIMIT: usize = 14;
/// Branch-and-bound cover/independence searches use single-word masks.
pub const COVER_ORDER_LIMIT: usize = 64;
/// Brute-force cover route stays below this.
pub const BRUTE_COVER_ORDER_LIMIT: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMethod {
    BruteForce,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub size: usize,
    pub witness: VertexSet,
    pub method: CoverMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimsRoute {
    Oracle,
    ViaSrg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimsResult {
    pub dimension: usize,
    pub basis: VertexSet,
    pub route: DimsRoute,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected)
    }
}

fn resolves(d: &DistanceMatrix, w: VertexId, u: VertexId, v: VertexId) -> bool {
    d.get(w, u) == d.get(w, v) + d.get(v, u) || d.get(w, v) == d.get(w, u) + d.get(u, v)
}

/// Some shortest w-u path contains v, or some shortest w-v path
/// contains u.
pub fn strongly_resolves(g: &Graph, w: VertexId, u: VertexId, v: VertexId) -> Result<bool> {
    require_connected(g)?;
    Ok(resolves(&g.distances(), w, u, v))
}

/// Every vertex pair is strongly resolved by some member of `s`.
pub fn is_strong_generator(g: &Graph, s: &VertexSet) -> Result<bool> {
    require_connected(g)?;
    let d = g.distances();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if !s.iter().any(|w| resolves(&d, w, u, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Per-pair bitmask of resolving vertices; the oracle reduces the
/// generator test to mask coverage.
fn pair_resolver_masks(g: &Graph, d: &DistanceMatrix) -> Vec<u64> {
    let n = g.order();
    let mut masks = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let mut m = 0u64;
            for w in 0..n {
                if resolves(d, w, u, v) {
                    m |= 1 << w;
                }
            }
            masks.push(m);
        }
    }
    masks
}

/// Definitional oracle: subsets by increasing size, lexicographic
/// within each size, so the reported basis is the lexicographically
/// least minimum one.
pub fn dims_oracle(g: &Graph) -> Result<DimsResult> {
    require_connected(g)?;
    let n = g.order();
    if n > ORACLE_ORDER_LIMIT {
        return Err(GraphError::OrderTooLarge {
            order: n,
            limit: ORACLE_ORDER_LIMIT,
        });
    }
    if n <= 1 {
        return Ok(DimsResult {
            dimension: 0,
            basis: VertexSet::empty(),
            route: DimsRoute::Oracle,
        });
    }
    let d = g.distances();
    let masks = pair_resolver_masks(g, &d);
    for size in 1..=n {
        if let Some(subset) = first_covering_subset(n, size, &masks) {
            return Ok(DimsResult {
                dimension: size,
                basis: subset.iter().copied().collect(),
                route: DimsRoute::Oracle,
            });
        }
    }
    unreachable!("the full vertex set is always a strong generator");
}

/// First k-subset in lexicographic order whose mask hits every pair
/// mask.
fn first_covering_subset(n: usize, k: usize, masks: &[u64]) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let m: u64 = idx.iter().fold(0u64, |acc, &i| acc | 1 << i);
        if masks.iter().all(|&pm| pm & m != 0) {
            return Some(idx);
        }
        // Advance to the next combination of {0..n} choose k.
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Graph as single-word adjacency rows for the mask-based solvers.
fn mask_rows(g: &Graph, limit: usize) -> Result<Vec<u64>> {
    let n = g.order();
    if n > limit {
        return Err(GraphError::OrderTooLarge { order: n, limit });
    }
    Ok(g.compact_rows())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Smallest vertex count whose removal leaves no edge, by kernelized
/// branch-and-bound (pendant/isolated kernel, then branch on a
/// maximum-degree vertex: take it, or take its whole neighborhood).
pub fn vertex_cover_number(g: &Graph) -> Result<CoverResult> {
    let adj = mask_rows(g, COVER_ORDER_LIMIT)?;
    let n = g.order();
    let k = vc_size(&adj, full_mask(n), usize::MAX);
    let witness = lex_min_cover(&adj, n, k);
    debug_assert!(is_vertex_cover(g, &witness));
    Ok(CoverResult {
        size: k,
        witness,
        method: CoverMethod::BranchAndBound,
    })
}

/// Minimum cover size of the subgraph induced by `active`, or
/// `usize::MAX` if it exceeds `budget`.
fn vc_size(adj: &[u64], active: u64, budget: usize) -> usize {
    // Kernel: drop isolated vertices; a pendant's neighbor goes in.
    let mut act = active;
    let mut taken = 0usize;
    loop {
        let mut changed = false;
        let mut m = act;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let nb = adj[v] & act;
            if nb == 0 {
                act &= !(1 << v);
                changed = true;
            } else if nb.count_ones() == 1 {
                act &= !(1 << v) & !nb;
                taken += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if taken > budget {
        return usize::MAX;
    }
    if act == 0 {
        return taken;
    }
    let rem = budget - taken;
    if rem == 0 {
        return usize::MAX;
    }
    // Branch on a maximum-degree vertex, lowest index on ties.
    let mut branch = usize::MAX;
    let mut best_deg = 0;
    let mut m = act;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let deg = (adj[v] & act).count_ones() as usize;
        if deg > best_deg {
            best_deg = deg;
            branch = v;
        }
    }
    let v = branch;
    // Take v.
    let take_v = vc_size(adj, act & !(1 << v), rem - 1).saturating_add(1);
    // Take all of N(v).
    let nb = adj[v] & act;
    let cnt = nb.count_ones() as usize;
    let take_nb = if cnt <= rem {
        vc_size(adj, act & !nb & !(1 << v), (rem - cnt).min(take_v.saturating_sub(cnt + 1)))
            .saturating_add(cnt)
    } else {
        usize::MAX
    };
    let best = take_v.min(take_nb);
    if best == usize::MAX {
        usize::MAX
    } else {
        best + taken
    }
}

/// True iff a cover of size exactly `k` exists using only `allowed`
/// vertices (forced vertices already removed from the graph mask).
fn vc_decision(adj: &[u64], active: u64, allowed: u64, budget: usize) -> bool {
    // Edges between disallowed vertices are uncoverable.
    let mut m = active & !allowed;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if adj[v] & active & !allowed != 0 {
            return false;
        }
    }
    // Disallowed vertices force their remaining neighbors in.
    let mut act = active;
    let mut need = 0u64;
    let mut mm = act & !allowed;
    while mm != 0 {
        let v = mm.trailing_zeros() as usize;
        mm &= mm - 1;
        need |= adj[v] & act & allowed;
        act &= !(1 << v);
    }
    let forced = need.count_ones() as usize;
    if forced > budget {
        return false;
    }
    act &= !need;
    let rest = vc_size(adj, act, budget - forced);
    rest != usize::MAX && rest + forced <= budget
}

/// Lexicographically least minimum cover, by prefix extension: take
/// each index in turn iff some size-k cover extends the prefix using
/// only larger indices.
fn lex_min_cover(adj: &[u64], n: usize, k: usize) -> VertexSet {
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut act = full_mask(n);
    for v in 0..n {
        if chosen.len() == k {
            break;
        }
        let allowed = if v + 1 >= 64 {
            0
        } else {
            full_mask(n) & !((1u64 << (v + 1)) - 1)
        };
        if vc_decision(adj, act & !(1 << v), allowed, k - chosen.len() - 1) {
            chosen.push(v);
            act &= !(1 << v);
        }
    }
    debug_assert_eq!(chosen.len(), k);
    chosen.into_iter().collect()
}

pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    g.edges()
        .into_iter()
        .all(|(u, v)| s.contains(u) || s.contains(v))
}

/// Exhaustive cover search over all subsets, for cross-checking the
/// branch-and-bound route.
pub fn vertex_cover_bruteforce(g: &Graph) -> Result<CoverResult> {
    mask_rows(g, BRUTE_COVER_ORDER_LIMIT)?;
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges();
    let mut best_size = n + 1;
    let mut best: Option<u64> = None;
    for m in 0..1u64 << n {
        let size = m.count_ones() as usize;
        if size >= best_size {
            continue;
        }
        if edges
            .iter()
            .all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1)
        {
            best_size = size;
            best = Some(m);
        }
    }
    let mask = best.expect("full set covers");
    Ok(CoverResult {
        size: best_size,
        witness: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
        method: CoverMethod::BruteForce,
    })
}

/// Largest pairwise non-adjacent set, by include/exclude branching on
/// a maximum-degree vertex. Deliberately not computed as n - beta.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let adj = mask_rows(g, COVER_ORDER_LIMIT)?;
    fn mis(adj: &[u64], active: u64) -> usize {
        if active == 0 {
            return 0;
        }
        // Vertices with no active neighbor always join.
        let mut act = active;
        let mut base = 0usize;
        loop {
            let mut changed = false;
            let mut m = act;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let nb = adj[v] & act;
                if nb == 0 {
                    act &= !(1 << v);
                    base += 1;
                    changed = true;
                } else if nb.count_ones() == 1 {
                    // Pendant: take v, drop its neighbor.
                    act &= !(1 << v) & !nb;
                    base += 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if act == 0 {
            return base;
        }
        let mut best_v = usize::MAX;
        let mut best_deg = 0;
        let mut m = act;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let deg = (adj[v] & act).count_ones() as usize;
            if deg > best_deg {
                best_deg = deg;
                best_v = v;
            }
        }
        let v = best_v;
        let include = 1 + mis(adj, act & !adj[v] & !(1 << v));
        let exclude = mis(adj, act & !(1 << v));
        base + include.max(exclude)
    }
    Ok(mis(&adj, full_mask(g.order())))
}

/// The reduction route: minimum vertex cover of the strong resolving
/// graph, lifted back to vertices of `g` and re-verified as a strong
/// generator.
pub fn dims_via_srg(g: &Graph) -> Result<DimsResult> {
    require_connected(g)?;
    if g.order() <= 1 {
        return Ok(DimsResult {
            dimension: 0,
            basis: VertexSet::empty(),
            route: DimsRoute::ViaSrg,
        });
    }
    let (sr, verts) = srg::srg_with_vertices(g)?;
    let cover = vertex_cover_number(&sr)?;
    let basis: VertexSet = cover.witness.iter().map(|i| verts[i]).collect();
    assert!(
        is_strong_generator(g, &basis)?,
        "cover of the strong resolving graph must lift to a strong generator"
    );
    Ok(DimsResult {
        dimension: cover.size,
        basis,
        route: DimsRoute::ViaSrg,
    })
}
