//! Graph library built around the strong resolving graph: the
//! mutually-maximally-distant relation, boundary machinery, strong
//! metric dimension by two independent routes (definitional subset
//! search, and reduction to minimum vertex cover), the six standard
//! product constructions with closed-form distance oracles, named
//! graph families, exact isomorphism on small graphs, and a harness
//! that machine-checks a catalog of structural identities on
//! enumerated instances.

pub mod classify;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod iso;
pub mod products;
pub mod search;
pub mod srg;
pub mod strongdim;
pub mod verify;

pub use error::{GraphError, Result};
pub use graph::{Dist, DistanceMatrix, Graph, VertexId, VertexSet};

/// Small fixture graphs shared across the unit tests.
#[cfg(test)]
pub(crate) mod testgraphs {
    use crate::families::{make, FamilySpec};
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        make(&FamilySpec::Path(n)).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        make(&FamilySpec::Cycle(n)).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        make(&FamilySpec::Complete(n)).unwrap()
    }

    pub fn empty(n: usize) -> Graph {
        make(&FamilySpec::Empty(n)).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        make(&FamilySpec::Star(leaves)).unwrap()
    }

    pub fn complete_bipartite(r: usize, t: usize) -> Graph {
        make(&FamilySpec::CompleteBipartite(r, t)).unwrap()
    }

    pub fn petersen_like() -> Graph {
        make(&FamilySpec::Petersen).unwrap()
    }

    /// Three diamonds in a row (a,j,c,b / c,i,e,d / e,h,g,f) with
    /// chords j-b, h-f and e-g. Vertices a..j map to 0..9.
    pub fn diamond_chain() -> Graph {
        Graph::build(
            10,
            &[
                (0, 9),
                (9, 2),
                (2, 1),
                (1, 0),
                (9, 1),
                (2, 8),
                (8, 4),
                (4, 3),
                (3, 2),
                (4, 7),
                (7, 6),
                (6, 5),
                (5, 4),
                (7, 5),
                (4, 6),
            ],
        )
        .unwrap()
    }

    pub fn diamond_chain_labeled() -> Graph {
        diamond_chain()
            .with_labels("abcdefghij".chars().map(String::from).collect())
            .unwrap()
    }

    /// Two chorded diamonds sharing a hub: {d,e,f} are pairwise true
    /// twins, b and g are non-simplicial true twins. Vertices a..g map
    /// to 0..6.
    pub fn braced_diamonds() -> Graph {
        Graph::build(
            7,
            &[
                (0, 6),
                (6, 2),
                (2, 1),
                (1, 0),
                (2, 5),
                (5, 4),
                (4, 3),
                (3, 2),
                (6, 1),
                (5, 3),
                (2, 4),
            ],
        )
        .unwrap()
    }

    /// Pentagon a,b,e,f,g with a pendant h at g and pendants c,d at b.
    /// Vertices a..h map to 0..7.
    pub fn pendant_pentagon() -> Graph {
        Graph::build(
            8,
            &[
                (0, 1),
                (1, 4),
                (4, 5),
                (5, 6),
                (6, 0),
                (6, 7),
                (1, 2),
                (1, 3),
            ],
        )
        .unwrap()
    }

    pub fn pendant_pentagon_labeled() -> Graph {
        pendant_pentagon()
            .with_labels("abcdefgh".chars().map(String::from).collect())
            .unwrap()
    }

    /// One vertex joined to an edge plus an isolated vertex.
    pub fn paw() -> Graph {
        Graph::build(4, &[(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap()
    }

    /// P_7 with one chord forming a triangle in the middle.
    pub fn chorded_path7() -> Graph {
        Graph::build(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 4)]).unwrap()
    }

    /// Triangle-free diameter-2 graph containing a vertex pair that
    /// lies on no common five-cycle.
    pub fn no_common_c5() -> Graph {
        Graph::build(6, &[(0, 1), (1, 2), (1, 3), (2, 4), (4, 5), (5, 0), (5, 3)]).unwrap()
    }

    /// Triangle-free C5-connected companion on eight vertices.
    pub fn c5_connected_8() -> Graph {
        Graph::build(
            8,
            &[
                (0, 1),
                (6, 7),
                (2, 1),
                (2, 5),
                (1, 6),
                (0, 7),
                (0, 3),
                (2, 3),
                (3, 4),
                (5, 4),
                (6, 4),
                (5, 7),
            ],
        )
        .unwrap()
    }
}
