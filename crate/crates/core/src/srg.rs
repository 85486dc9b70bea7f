//! The strong resolving graph transformation and its relatives: the
//! mutually-maximally-distant relation, the boundary, the variant that
//! keeps isolated vertices, the distance-or-twin graph G*, and the
//! twin-filtered variant.

use crate::classify::are_true_twins;
use crate::error::{GraphError, Result};
use crate::graph::{Dist, DistanceMatrix, Graph, VertexId, VertexSet};

/// Symmetric irreflexive relation "u and v are mutually maximally
/// distant", plus per-vertex maximally-distant sets.
#[derive(Debug, Clone)]
pub struct MmdRelation {
    n: usize,
    mmd: Vec<bool>,
    max_from: Vec<VertexSet>,
}

impl MmdRelation {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn are_mmd(&self, u: VertexId, v: VertexId) -> bool {
        self.mmd[u * self.n + v]
    }

    /// Vertices maximally distant from `v`.
    pub fn maximally_distant_from(&self, v: VertexId) -> &VertexSet {
        &self.max_from[v]
    }

    /// MMD pairs as (min, max), lexicographic.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.are_mmd(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Boundary and its twin-filtered restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryView {
    /// Vertices belonging to at least one MMD pair.
    pub boundary: VertexSet,
    /// Vertices in an MMD pair whose members are not true twins.
    pub tf_boundary: VertexSet,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected)
    }
}

fn maximally_distant_with(g: &Graph, d: &DistanceMatrix, v: VertexId, u: VertexId) -> bool {
    // u is maximally distant from v: no neighbor of u is farther from v.
    u != v && g.neighbors(u).all(|w| d.get(v, w) <= d.get(v, u))
}

/// `{u : every neighbor w of u has d(v,w) <= d(v,u)}`, excluding v.
pub fn maximally_distant_from(g: &Graph, v: VertexId) -> Result<VertexSet> {
    require_connected(g)?;
    let d = g.distances();
    Ok(g.vertices()
        .filter(|&u| maximally_distant_with(g, &d, v, u))
        .collect())
}

pub fn mmd_relation(g: &Graph) -> Result<MmdRelation> {
    require_connected(g)?;
    let n = g.order();
    let d = g.distances();
    let mut max_of = vec![false; n * n]; // max_of[v*n+u]: u maximally distant from v
    for v in 0..n {
        for u in 0..n {
            max_of[v * n + u] = maximally_distant_with(g, &d, v, u);
        }
    }
    let mut mmd = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            mmd[u * n + v] = max_of[v * n + u] && max_of[u * n + v];
        }
    }
    let max_from = (0..n)
        .map(|v| (0..n).filter(|&u| max_of[v * n + u]).collect())
        .collect();
    Ok(MmdRelation { n, mmd, max_from })
}

pub fn boundary(g: &Graph) -> Result<BoundaryView> {
    let rel = mmd_relation(g)?;
    let n = g.order();
    let boundary: VertexSet = (0..n)
        .filter(|&u| (0..n).any(|v| rel.are_mmd(u, v)))
        .collect();
    let tf_boundary: VertexSet = (0..n)
        .filter(|&u| (0..n).any(|v| rel.are_mmd(u, v) && !are_true_twins(g, u, v)))
        .collect();
    Ok(BoundaryView {
        boundary,
        tf_boundary,
    })
}

/// Strong resolving graph: vertex set is the boundary (labels carried
/// over), edges are the MMD pairs. Also returns the map from new
/// indices back to vertices of `g`.
pub fn srg_with_vertices(g: &Graph) -> Result<(Graph, Vec<VertexId>)> {
    let rel = mmd_relation(g)?;
    let n = g.order();
    let verts: Vec<VertexId> = (0..n)
        .filter(|&u| (0..n).any(|v| rel.are_mmd(u, v)))
        .collect();
    let pos: std::collections::HashMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    for (u, v) in rel.pairs() {
        edges.push((pos[&u], pos[&v]));
    }
    let mut out = Graph::build(verts.len(), &edges)?;
    if let Some(labels) = g.labels() {
        out = out.with_labels(verts.iter().map(|&v| labels[v].clone()).collect())?;
    }
    Ok((out, verts))
}

pub fn srg(g: &Graph) -> Result<Graph> {
    Ok(srg_with_vertices(g)?.0)
}

/// Strong resolving graph on the full vertex set; non-boundary
/// vertices stay isolated.
pub fn srg_plus_i(g: &Graph) -> Result<Graph> {
    let rel = mmd_relation(g)?;
    let mut out = Graph::build(g.order(), &rel.pairs())?;
    if let Some(labels) = g.labels() {
        out = out.with_labels(labels.to_vec())?;
    }
    Ok(out)
}

/// Same vertices as `g`; edge iff distance >= 2 (infinite counts) or
/// the endpoints are true twins.
pub fn g_star(g: &Graph) -> Graph {
    let d = g.distances();
    let mut edges = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if d.get(u, v) >= Dist::Finite(2) || are_true_twins(g, u, v) {
                edges.push((u, v));
            }
        }
    }
    let out = Graph::build(g.order(), &edges).expect("indices in range");
    match g.labels() {
        Some(l) => out.with_labels(l.to_vec()).expect("labels unchanged"),
        None => out,
    }
}

/// `g_star` with isolated vertices removed.
pub fn g_star_minus(g: &Graph) -> Graph {
    g_star(g).without_isolated()
}

/// Strong resolving TF-graph: vertices are the TF-boundary, edges the
/// MMD pairs that are not true twins. Undefined for complete graphs.
pub fn srs(g: &Graph) -> Result<Graph> {
    require_connected(g)?;
    if g.is_complete() {
        return Err(GraphError::CompleteInput);
    }
    let rel = mmd_relation(g)?;
    let n = g.order();
    let verts: Vec<VertexId> = (0..n)
        .filter(|&u| (0..n).any(|v| rel.are_mmd(u, v) && !are_true_twins(g, u, v)))
        .collect();
    let pos: std::collections::HashMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    for (u, v) in rel.pairs() {
        if !are_true_twins(g, u, v) {
            edges.push((pos[&u], pos[&v]));
        }
    }
    let mut out = Graph::build(verts.len(), &edges)?;
    if let Some(labels) = g.labels() {
        out = out.with_labels(verts.iter().map(|&v| labels[v].clone()).collect())?;
    }
    Ok(out)
}

/// No MMD pair sits at distance exactly two.
pub fn is_2mmf(g: &Graph) -> Result<bool> {
    let rel = mmd_relation(g)?;
    let d = g.distances();
    Ok(rel
        .pairs()
        .into_iter()
        .all(|(u, v)| d.get(u, v) != Dist::Finite(2)))
}
