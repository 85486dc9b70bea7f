//! Named graph generators, including the bespoke realization families,
//! plus exhaustive labeled enumeration with canonical deduplication.

use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::iso;

pub const ENUMERATION_ORDER_LIMIT: usize = 7;

/// A constructible named graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// Star with `n` leaves (order n+1).
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Hypercube(u32),
    /// Cartesian power: `k` folded copies of the complete graph K_n.
    Hamming(u32, usize),
    Petersen,
    TreeFromPruefer(Vec<usize>),
    /// r+1 paths a_i b_i c_i, hubs a_0/b_0/c_0 wired to their
    /// counterparts, plus an apex x joined to a_0 and c_0.
    FamilyF(usize),
    /// Path v_1..v_{n-1} with alternating two-step riders a_i / b_i;
    /// its strong resolving graph is the path P_n.
    FamilyFP(usize),
    /// Odd cycle revisited in steps of floor(n/2).
    CycleStar(usize),
    /// Join of a single vertex to every vertex of the operand.
    JoinK1(Box<Graph>),
}

fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub fn make(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            if *n == 0 {
                return Err(GraphError::InvalidParameter("path needs order >= 1".into()));
            }
            let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::build_labeled(*n, &edges, index_labels(*n))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(GraphError::InvalidParameter("cycle needs order >= 3".into()));
            }
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::build_labeled(*n, &edges, index_labels(*n))
        }
        FamilySpec::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::build_labeled(*n, &edges, index_labels(*n))
        }
        FamilySpec::Empty(n) => Graph::build_labeled(*n, &[], index_labels(*n)),
        FamilySpec::Star(leaves) => {
            if *leaves == 0 {
                return Err(GraphError::InvalidParameter("star needs >= 1 leaf".into()));
            }
            let edges: Vec<_> = (1..=*leaves).map(|i| (0, i)).collect();
            Graph::build_labeled(leaves + 1, &edges, index_labels(leaves + 1))
        }
        FamilySpec::CompleteBipartite(r, t) => {
            make(&FamilySpec::CompleteMultipartite(vec![*r, *t]))
        }
        FamilySpec::CompleteMultipartite(parts) => {
            if parts.iter().any(|&p| p == 0) || parts.is_empty() {
                return Err(GraphError::InvalidParameter(
                    "multipartite parts must be positive".into(),
                ));
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (pi, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(pi, p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build_labeled(n, &edges, index_labels(n))
        }
        FamilySpec::Hypercube(k) => make(&FamilySpec::Hamming(*k, 2)),
        FamilySpec::Hamming(k, q) => {
            if *k == 0 || *q < 2 {
                return Err(GraphError::InvalidParameter(
                    "hamming needs k >= 1 and alphabet >= 2".into(),
                ));
            }
            let n = q.checked_pow(*k).filter(|&n| n <= 1 << 16).ok_or_else(|| {
                GraphError::InvalidParameter("hamming graph too large".into())
            })?;
            // Folded Cartesian powers of K_q; positions differing in
            // exactly one digit are adjacent.
            let mut g = make(&FamilySpec::Complete(*q))?;
            for _ in 1..*k {
                g = crate::products::product(
                    crate::products::ProductKind::Cartesian,
                    &g,
                    &make(&FamilySpec::Complete(*q))?,
                )?;
            }
            debug_assert_eq!(g.order(), n);
            // Flatten the nested pair labels into digit strings.
            let labels: Vec<String> = (0..n)
                .map(|mut i| {
                    let mut digits = vec![0usize; *k as usize];
                    for d in (0..*k as usize).rev() {
                        digits[d] = i % q;
                        i /= q;
                    }
                    digits.iter().map(|d| d.to_string()).collect::<String>()
                })
                .collect();
            // The folded product enumerates (((d1),d2),d3): leftmost
            // factor varies slowest, matching base-q digits.
            g.without_labels().with_labels(labels)
        }
        FamilySpec::Petersen => {
            // Kneser construction: 2-subsets of a 5-set, disjoint pairs
            // adjacent.
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
                .collect();
            let mut edges = Vec::new();
            for (i, &(a, b)) in pairs.iter().enumerate() {
                for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                    if a != c && a != d && b != c && b != d {
                        edges.push((i, j));
                    }
                }
            }
            let labels = pairs.iter().map(|(a, b)| format!("{a}{b}")).collect();
            Graph::build_labeled(10, &edges, labels)
        }
        FamilySpec::TreeFromPruefer(seq) => {
            let n = seq.len() + 2;
            if seq.iter().any(|&s| s >= n) {
                return Err(GraphError::InvalidParameter(
                    "pruefer entries must be < n".into(),
                ));
            }
            let mut degree = vec![1usize; n];
            for &s in seq {
                degree[s] += 1;
            }
            let mut edges = Vec::new();
            for &s in seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::build_labeled(n, &edges, index_labels(n))
        }
        FamilySpec::FamilyF(r) => {
            if *r < 2 {
                return Err(GraphError::InvalidParameter("family F needs r >= 2".into()));
            }
            let r = *r;
            // Indices: a_i = i, b_i = r+1+i, c_i = 2(r+1)+i, x = 3(r+1).
            let a = |i: usize| i;
            let b = |i: usize| r + 1 + i;
            let c = |i: usize| 2 * (r + 1) + i;
            let x = 3 * (r + 1);
            let mut edges = Vec::new();
            for i in 0..=r {
                edges.push((a(i), b(i)));
                edges.push((b(i), c(i)));
            }
            for i in 1..=r {
                edges.push((a(i), a(0)));
                edges.push((b(i), b(0)));
                edges.push((c(i), c(0)));
            }
            edges.push((x, a(0)));
            edges.push((x, c(0)));
            let mut labels = Vec::new();
            labels.extend((0..=r).map(|i| format!("a{i}")));
            labels.extend((0..=r).map(|i| format!("b{i}")));
            labels.extend((0..=r).map(|i| format!("c{i}")));
            labels.push("x".into());
            Graph::build_labeled(3 * (r + 1) + 1, &edges, labels)
        }
        FamilySpec::FamilyFP(n) => make_family_fp(*n),
        FamilySpec::CycleStar(n) => {
            if *n < 5 || *n % 2 == 0 {
                return Err(GraphError::InvalidParameter(
                    "cycle star needs odd order >= 5".into(),
                ));
            }
            let n = *n;
            let step = n / 2;
            let mut edges = Vec::new();
            for i in 0..n {
                edges.push(((i * step) % n, ((i + 1) * step) % n));
            }
            Graph::build_labeled(n, &edges, index_labels(n))
        }
        FamilySpec::JoinK1(g) => {
            let g = g.as_ref();
            let n = g.order();
            let mut edges = g.edges();
            for v in 0..n {
                edges.push((v, n));
            }
            let mut labels: Vec<String> = match g.labels() {
                Some(l) => l.to_vec(),
                None => index_labels(n),
            };
            let mut apex = "z".to_string();
            while labels.contains(&apex) {
                apex.push('\'');
            }
            labels.push(apex);
            Graph::build_labeled(n + 1, &edges, labels)
        }
    }
}

/// Path on n-1 vertices plus riders: a_i spans v_{2i-1}..v_{2i+1},
/// b_i spans v_{2i}..v_{2i+2}, with the last rider folded onto the
/// path's tail. Two explicit builders keep the even/odd index
/// arithmetic literal.
fn make_family_fp(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(GraphError::InvalidParameter("family FP needs n >= 5".into()));
    }
    let path_len = n - 1;
    let v = |i: usize| i - 1; // v_1..v_{n-1} are indices 0..n-2
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|i| (v(i), v(i + 1))).collect();
    let mut labels: Vec<String> = (1..=path_len).map(|i| format!("v{i}")).collect();
    if n % 2 == 0 {
        let half = (n - 2) / 2;
        let a = |i: usize| path_len + (i - 1);
        let b = |i: usize| path_len + half + (i - 1);
        for i in 1..=half {
            edges.push((a(i), v(2 * i - 1)));
            edges.push((a(i), v(2 * i + 1)));
        }
        for i in 1..=(n - 4) / 2 {
            edges.push((b(i), v(2 * i)));
            edges.push((b(i), v(2 * i + 2)));
        }
        edges.push((b(half), v(n - 2)));
        edges.push((b(half), v(n - 1)));
        labels.extend((1..=half).map(|i| format!("a{i}")));
        labels.extend((1..=half).map(|i| format!("b{i}")));
    } else {
        let na = (n - 1) / 2;
        let nb = (n - 3) / 2;
        let a = |i: usize| path_len + (i - 1);
        let b = |i: usize| path_len + na + (i - 1);
        for i in 1..=(n - 3) / 2 {
            edges.push((a(i), v(2 * i - 1)));
            edges.push((a(i), v(2 * i + 1)));
        }
        edges.push((a(na), v(n - 2)));
        edges.push((a(na), v(n - 1)));
        for i in 1..=nb {
            edges.push((b(i), v(2 * i)));
            edges.push((b(i), v(2 * i + 2)));
        }
        labels.extend((1..=na).map(|i| format!("a{i}")));
        labels.extend((1..=nb).map(|i| format!("b{i}")));
    }
    Graph::build_labeled(2 * n - 3, &edges, labels)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph on n vertices whose upper-triangle edge bits
/// (lexicographic pair order (0,1),(0,2),..) are `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::build(n, &edges).expect("mask edges are in range")
}

/// Streams all labeled graphs on n vertices, optionally only connected
/// ones.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>> {
    if n > ENUMERATION_ORDER_LIMIT {
        return Err(GraphError::OrderTooLarge {
            order: n,
            limit: ENUMERATION_ORDER_LIMIT,
        });
    }
    let total: u64 = 1u64 << pair_count(n);
    Ok((0..total)
        .map(move |mask| graph_from_mask(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

/// One representative per isomorphism class, by canonical-form
/// deduplication of the labeled stream.
pub fn enumerate_classes(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for g in enumerate_graphs(n, connected_only)? {
        if seen.insert(iso::canonical_form(&g)?) {
            reps.push(g);
        }
    }
    Ok(reps)
}

/// Parses the textual graph spec grammar used by the CLI and the
/// verification grids: family constructors (`path:4`, `kbip:2:3`,
/// `joink1:(path:4)`, ...), inline edge lists
/// (`edges:7:0-1,1-2,...`), and graph6 payloads (`g6:Dhc`).
pub fn graph_from_spec(spec: &str) -> Result<Graph> {
    let bad = |m: &str| GraphError::InvalidParameter(format!("spec '{spec}': {m}"));
    let parse_n = |s: &str| -> Result<usize> {
        s.parse::<usize>().map_err(|_| bad("expected a number"))
    };
    if let Some(rest) = spec.strip_prefix("g6:") {
        return crate::formats::parse_graph6(rest);
    }
    if let Some(rest) = spec.strip_prefix("edges:") {
        let (ns, es) = rest.split_once(':').ok_or_else(|| bad("edges:<n>:<u-v,..>"))?;
        let n = parse_n(ns)?;
        let mut edges = Vec::new();
        if !es.is_empty() {
            for pair in es.split(',') {
                let (u, v) = pair.split_once('-').ok_or_else(|| bad("edge as u-v"))?;
                edges.push((parse_n(u)?, parse_n(v)?));
            }
        }
        return Graph::build(n, &edges);
    }
    if let Some(rest) = spec.strip_prefix("joink1:") {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("joink1:(<spec>)"))?;
        return make(&FamilySpec::JoinK1(Box::new(graph_from_spec(inner)?)));
    }
    let mut parts = spec.split(':');
    let head = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    let one = |args: &[&str]| -> Result<usize> {
        if args.len() != 1 {
            return Err(bad("expected one parameter"));
        }
        parse_n(args[0])
    };
    match head {
        "path" => make(&FamilySpec::Path(one(&args)?)),
        "cycle" => make(&FamilySpec::Cycle(one(&args)?)),
        "complete" => make(&FamilySpec::Complete(one(&args)?)),
        "empty" => make(&FamilySpec::Empty(one(&args)?)),
        "star" => make(&FamilySpec::Star(one(&args)?)),
        "kbip" => {
            if args.len() != 2 {
                return Err(bad("kbip:<r>:<t>"));
            }
            make(&FamilySpec::CompleteBipartite(
                parse_n(args[0])?,
                parse_n(args[1])?,
            ))
        }
        "kpartite" => {
            if args.len() != 1 {
                return Err(bad("kpartite:<p1,p2,..>"));
            }
            let parts: Result<Vec<usize>> = args[0].split(',').map(parse_n).collect();
            make(&FamilySpec::CompleteMultipartite(parts?))
        }
        "hypercube" => make(&FamilySpec::Hypercube(one(&args)? as u32)),
        "hamming" => {
            if args.len() != 2 {
                return Err(bad("hamming:<k>:<q>"));
            }
            make(&FamilySpec::Hamming(parse_n(args[0])? as u32, parse_n(args[1])?))
        }
        "petersen" => {
            if !args.is_empty() {
                return Err(bad("petersen takes no parameters"));
            }
            make(&FamilySpec::Petersen)
        }
        "tree" => {
            if args.len() != 1 {
                return Err(bad("tree:<s1,s2,..>"));
            }
            let seq: Result<Vec<usize>> = args[0].split(',').map(parse_n).collect();
            make(&FamilySpec::TreeFromPruefer(seq?))
        }
        "f" => make(&FamilySpec::FamilyF(one(&args)?)),
        "fp" => make(&FamilySpec::FamilyFP(one(&args)?)),
        "cyclestar" => make(&FamilySpec::CycleStar(one(&args)?)),
        _ => Err(bad("unknown family")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg;
    use crate::testgraphs;

    #[test]
    fn family_f_structure() {
        let g = make(&FamilySpec::FamilyF(4)).unwrap();
        assert_eq!(g.order(), 16);
        let sr = srg::srg(&g).unwrap();
        // Components: a star with r leaves (x meets every b_i) and
        // K_{r,r} minus a perfect matching on the a's and c's.
        let find = |l: &str| g.vertices().find(|&v| g.label(v) == Some(l)).unwrap();
        let rel = srg::mmd_relation(&g).unwrap();
        let x = find("x");
        for i in 1..=4usize {
            assert!(rel.are_mmd(x, find(&format!("b{i}"))));
            for j in 1..=4usize {
                assert_eq!(
                    rel.are_mmd(find(&format!("a{i}")), find(&format!("c{j}"))),
                    i != j,
                    "a{i} vs c{j}"
                );
            }
        }
        for hub in ["a0", "b0", "c0"] {
            assert!(!srg::boundary(&g).unwrap().boundary.contains(find(hub)));
        }
        assert_eq!(sr.order(), 13);
        let comps = sr.components();
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn family_fp_realizes_paths() {
        for n in 5..=10usize {
            let g = make(&FamilySpec::FamilyFP(n)).unwrap();
            assert_eq!(g.order(), 2 * n - 3);
            let sr = srg::srg(&g).unwrap();
            let pn = testgraphs::path(n);
            assert!(
                crate::iso::are_isomorphic(&sr, &pn).unwrap().is_some(),
                "n={n}"
            );
        }
    }

    #[test]
    fn family_fp_even_path_order() {
        // Even case: the SR path runs a_1 b_1 a_2 b_2 .. v_1 v_{n-1}.
        let n = 10usize;
        let g = make(&FamilySpec::FamilyFP(n)).unwrap();
        let (sr, verts) = srg::srg_with_vertices(&g).unwrap();
        let label = |i: usize| g.display_label(verts[i]);
        let mut order: Vec<String> = Vec::new();
        for i in 1..=(n - 2) / 2 {
            order.push(format!("a{i}"));
            order.push(format!("b{i}"));
        }
        order.push("v1".into());
        order.push(format!("v{}", n - 1));
        // Walk the path from a_1 and compare.
        let start = (0..sr.order()).find(|&v| label(v) == "a1").unwrap();
        assert_eq!(sr.degree(start), 1);
        let mut walk = vec![start];
        while walk.len() < sr.order() {
            let last = *walk.last().unwrap();
            let next = sr
                .neighbors(last)
                .find(|v| !walk.contains(v))
                .expect("path continues");
            walk.push(next);
        }
        let got: Vec<String> = walk.into_iter().map(label).collect();
        assert_eq!(got, order);
    }

    #[test]
    fn join_k1_realizes_p4() {
        let g = make(&FamilySpec::JoinK1(Box::new(testgraphs::path(4)))).unwrap();
        let sr = srg::srg(&g).unwrap();
        assert!(crate::iso::are_isomorphic(&sr, &testgraphs::path(4))
            .unwrap()
            .is_some());
    }

    #[test]
    fn cycle_complements_realize_cycles() {
        for n in 5..=9usize {
            let sr = srg::srg(&testgraphs::cycle(n).complement()).unwrap();
            assert!(
                crate::iso::are_isomorphic(&sr, &testgraphs::cycle(n))
                    .unwrap()
                    .is_some(),
                "n={n}"
            );
        }
    }

    #[test]
    fn hypercube_and_cycle_star() {
        let q3 = make(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!(q3.order(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!(crate::classify::is_two_antipodal(&q3));

        // Steps of 2 around C_5: 0 2 4 1 3.
        let cs = make(&FamilySpec::CycleStar(5)).unwrap();
        let expected = [(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)];
        let mut got = cs.edges();
        got.sort();
        let mut want: Vec<(usize, usize)> = expected
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert!(matches!(
            make(&FamilySpec::CycleStar(6)),
            Err(GraphError::InvalidParameter(_))
        ));
    }

    #[test]
    fn pruefer_trees() {
        let t = make(&FamilySpec::TreeFromPruefer(vec![3, 3, 3])).unwrap();
        assert_eq!(t.order(), 5);
        assert_eq!(t.degree(3), 4); // star center
        let t = make(&FamilySpec::TreeFromPruefer(vec![])).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.edge_count(), 1);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_classes(4, true).unwrap().len(), 6);
        assert!(matches!(
            enumerate_graphs(8, true),
            Err(GraphError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn labeled_connected_counts_match_recurrence() {
        // c_n = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c_k 2^C(n-k,2).
        fn choose(n: usize, k: usize) -> u64 {
            if k > n {
                return 0;
            }
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) as u64 / (i + 1) as u64;
            }
            r
        }
        let mut c = vec![0u64; 6];
        for n in 1..=5usize {
            let mut total = 1u64 << (n * (n - 1) / 2);
            for k in 1..n {
                total -=
                    choose(n - 1, k - 1) * c[k] * (1u64 << ((n - k) * (n - k - 1) / 2));
            }
            c[n] = total;
            let counted = enumerate_graphs(n, true).unwrap().count() as u64;
            assert_eq!(counted, c[n], "n={n}");
        }
        assert_eq!(c[5], 728);
    }

    #[test]
    fn spec_grammar_round_trips() {
        assert_eq!(graph_from_spec("path:4").unwrap(), testgraphs::path(4));
        assert_eq!(graph_from_spec("cycle:5").unwrap(), testgraphs::cycle(5));
        let h7 = graph_from_spec("edges:7:0-1,1-2,2-3,3-4,4-5,5-6,2-4").unwrap();
        assert_eq!(h7, testgraphs::chorded_path7());
        assert!(graph_from_spec("joink1:(path:4)").unwrap().order() == 5);
        assert!(graph_from_spec("nosuch:3").is_err());
    }
}
