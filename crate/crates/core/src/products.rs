//! The six product constructions and their closed-form distance
//! oracles, plus parity-split distances for the direct product and the
//! Weichsel connectivity criterion.

use crate::error::{GraphError, Result};
use crate::graph::{Dist, DistanceMatrix, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    CartesianSum,
    Corona,
}

impl ProductKind {
    pub const ALL: [ProductKind; 6] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::CartesianSum,
        ProductKind::Corona,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::CartesianSum => "cartesian-sum",
            ProductKind::Corona => "corona",
        }
    }
}

impl std::str::FromStr for ProductKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<ProductKind> {
        match s.to_ascii_lowercase().as_str() {
            "cartesian" | "box" => Ok(ProductKind::Cartesian),
            "direct" | "tensor" | "kronecker" => Ok(ProductKind::Direct),
            "strong" => Ok(ProductKind::Strong),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "cartesian-sum" | "sum" | "disjunctive" => Ok(ProductKind::CartesianSum),
            "corona" => Ok(ProductKind::Corona),
            other => Err(GraphError::InvalidParameter(format!(
                "unknown product kind '{other}'"
            ))),
        }
    }
}

/// Vertex index of the pair (a, b) in a pair product.
pub fn pair_index(h_order: usize, a: VertexId, b: VertexId) -> VertexId {
    a * h_order + b
}

fn pair_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let mut labels = Vec::with_capacity(g.order() * h.order());
    for a in g.vertices() {
        for b in h.vertices() {
            labels.push(format!("({},{})", g.display_label(a), h.display_label(b)));
        }
    }
    labels
}

/// Builds the chosen product; pair vertices are labeled "(g,h)"; the
/// corona keeps the base labels and tags copy vertices "(i,h)".
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(GraphError::EmptyOperand);
    }
    if kind == ProductKind::Corona {
        return corona(g, h);
    }
    let (ng, nh) = (g.order(), h.order());
    let mut edges = Vec::new();
    for a in 0..ng {
        for b in 0..nh {
            for c in a..ng {
                for d in 0..nh {
                    if c == a && d <= b {
                        continue;
                    }
                    let adjacent = match kind {
                        ProductKind::Cartesian => {
                            (a == c && h.has_edge(b, d)) || (g.has_edge(a, c) && b == d)
                        }
                        ProductKind::Direct => g.has_edge(a, c) && h.has_edge(b, d),
                        ProductKind::Strong => {
                            (a == c && h.has_edge(b, d))
                                || (g.has_edge(a, c) && b == d)
                                || (g.has_edge(a, c) && h.has_edge(b, d))
                        }
                        ProductKind::Lexicographic => {
                            g.has_edge(a, c) || (a == c && h.has_edge(b, d))
                        }
                        ProductKind::CartesianSum => g.has_edge(a, c) || h.has_edge(b, d),
                        ProductKind::Corona => unreachable!(),
                    };
                    if adjacent {
                        edges.push((pair_index(nh, a, b), pair_index(nh, c, d)));
                    }
                }
            }
        }
    }
    Graph::build(ng * nh, &edges)?.with_labels(pair_labels(g, h))
}

/// One copy of H per base vertex, each copy joined to its base vertex.
fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let copy = |i: usize, x: usize| ng + i * nh + x;
    let mut edges = g.edges();
    for i in 0..ng {
        for (x, y) in h.edges() {
            edges.push((copy(i, x), copy(i, y)));
        }
        for x in 0..nh {
            edges.push((i, copy(i, x)));
        }
    }
    let mut labels: Vec<String> = g
        .vertices()
        .map(|v| g.display_label(v))
        .collect();
    for i in 0..ng {
        for x in 0..nh {
            labels.push(format!("({},{})", i, h.display_label(x)));
        }
    }
    Graph::build(ng * (1 + nh), &edges)?.with_labels(labels)
}

/// Shortest even-length and odd-length walk lengths between all pairs,
/// via breadth-first search on the two-layer parity cover.
#[derive(Debug, Clone)]
pub struct EvenOddDistances {
    n: usize,
    even: Vec<Dist>,
    odd: Vec<Dist>,
}

impl EvenOddDistances {
    pub fn even(&self, u: VertexId, v: VertexId) -> Dist {
        self.even[u * self.n + v]
    }

    pub fn odd(&self, u: VertexId, v: VertexId) -> Dist {
        self.odd[u * self.n + v]
    }
}

pub fn even_odd_distances(g: &Graph) -> EvenOddDistances {
    let n = g.order();
    let mut cover_edges = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        cover_edges.push((u, n + v));
        cover_edges.push((v, n + u));
    }
    let cover = Graph::build(2 * n, &cover_edges).expect("indices doubled");
    let d = cover.distances();
    let mut even = vec![Dist::Infinity; n * n];
    let mut odd = vec![Dist::Infinity; n * n];
    for u in 0..n {
        for v in 0..n {
            even[u * n + v] = d.get(u, v);
            odd[u * n + v] = d.get(u, n + v);
        }
    }
    EvenOddDistances { n, even, odd }
}

/// Precomputed closed-form distance oracle for one product instance.
/// The Cartesian sum carries no closed form here, so its oracle is
/// breadth-first search on the constructed product.
pub struct ProductDistanceOracle {
    kind: ProductKind,
    g_order: usize,
    h_order: usize,
    dg: DistanceMatrix,
    dh: DistanceMatrix,
    parity_g: Option<EvenOddDistances>,
    parity_h: Option<EvenOddDistances>,
    sum_bfs: Option<DistanceMatrix>,
}

impl ProductDistanceOracle {
    pub fn new(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductDistanceOracle> {
        if g.order() == 0 || h.order() == 0 {
            return Err(GraphError::EmptyOperand);
        }
        let needs_parity = kind == ProductKind::Direct;
        let sum_bfs = if kind == ProductKind::CartesianSum {
            Some(product(kind, g, h)?.distances())
        } else {
            None
        };
        Ok(ProductDistanceOracle {
            kind,
            g_order: g.order(),
            h_order: h.order(),
            dg: g.distances(),
            dh: h.distances(),
            parity_g: needs_parity.then(|| even_odd_distances(g)),
            parity_h: needs_parity.then(|| even_odd_distances(h)),
            sum_bfs,
        })
    }

    /// Distance between (a,b) and (c,d) in the product. For the corona
    /// the coordinates address base vertices as (i, None) and copy
    /// vertices as (i, Some(x)).
    pub fn distance(&self, (a, b): (VertexId, VertexId), (c, d): (VertexId, VertexId)) -> Result<Dist> {
        if a >= self.g_order || c >= self.g_order {
            return Err(GraphError::UnknownVertex {
                index: a.max(c),
                order: self.g_order,
            });
        }
        if b >= self.h_order || d >= self.h_order {
            return Err(GraphError::UnknownVertex {
                index: b.max(d),
                order: self.h_order,
            });
        }
        Ok(match self.kind {
            ProductKind::Cartesian => self.dg.get(a, c) + self.dh.get(b, d),
            ProductKind::Strong => self.dg.get(a, c).max(self.dh.get(b, d)),
            ProductKind::Direct => {
                let pg = self.parity_g.as_ref().unwrap();
                let ph = self.parity_h.as_ref().unwrap();
                let even = pg.even(a, c).max(ph.even(b, d));
                let odd = pg.odd(a, c).max(ph.odd(b, d));
                even.min(odd)
            }
            ProductKind::Lexicographic => {
                if a != c {
                    self.dg.get(a, c)
                } else if b == d {
                    Dist::Finite(0)
                } else {
                    self.dh.get(b, d).min(Dist::Finite(2))
                }
            }
            ProductKind::CartesianSum => self
                .sum_bfs
                .as_ref()
                .unwrap()
                .get(pair_index(self.h_order, a, b), pair_index(self.h_order, c, d)),
            ProductKind::Corona => unreachable!("use corona_distance"),
        })
    }
}

/// Closed-form distances in a corona product. `None` coordinates
/// address base vertices, `Some(x)` the copy vertex x above the base.
pub fn corona_distance(
    g: &Graph,
    h: &Graph,
    dg: &DistanceMatrix,
    dh: &DistanceMatrix,
    (i, x): (VertexId, Option<VertexId>),
    (j, y): (VertexId, Option<VertexId>),
) -> Result<Dist> {
    for v in [i, j] {
        if v >= g.order() {
            return Err(GraphError::UnknownVertex {
                index: v,
                order: g.order(),
            });
        }
    }
    for w in [x, y].into_iter().flatten() {
        if w >= h.order() {
            return Err(GraphError::UnknownVertex {
                index: w,
                order: h.order(),
            });
        }
    }
    Ok(match (x, y) {
        (None, None) => dg.get(i, j),
        (None, Some(_)) => dg.get(i, j) + 1,
        (Some(_), None) => dg.get(j, i) + 1,
        (Some(x), Some(y)) => {
            if i == j {
                if x == y {
                    Dist::Finite(0)
                } else {
                    dh.get(x, y).min(Dist::Finite(2))
                }
            } else {
                dg.get(i, j) + 2
            }
        }
    })
}

/// Corona vertex index for the oracle coordinates above.
pub fn corona_index(g: &Graph, h: &Graph, (i, x): (VertexId, Option<VertexId>)) -> VertexId {
    match x {
        None => i,
        Some(x) => g.order() + i * h.order() + x,
    }
}

/// Connectivity of a direct product of nontrivial graphs: both factors
/// connected and at least one nonbipartite.
pub fn direct_is_connected(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() < 2 || h.order() < 2 {
        return Err(GraphError::TrivialOperand);
    }
    Ok(g.is_connected()
        && h.is_connected()
        && (!crate::classify::is_bipartite(g) || !crate::classify::is_bipartite(h)))
}
