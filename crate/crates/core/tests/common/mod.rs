#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seqmix::gen;
use seqmix::metrics;
use seqmix::{Digraph, MixedGraph, WalkLabel};

pub const INF: u32 = u32::MAX;

pub struct Named<G> {
    pub name: String,
    pub graph: G,
}

fn named<G>(name: impl Into<String>, graph: G) -> Named<G> {
    Named {
        name: name.into(),
        graph,
    }
}

fn strongly_connected(g: &MixedGraph) -> bool {
    let n = g.order();
    let d = floyd_mixed(g);
    (0..n).all(|u| (0..n).all(|v| d[u][v] != INF))
}

/// Random strongly connected `(r, z)`-regular mixed graphs, reproducible from `seed`.
pub fn random_corpus(seed: u64) -> Vec<Named<MixedGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = [
        (8, 2, 1),
        (10, 2, 1),
        (12, 2, 2),
        (9, 2, 2),
        (10, 3, 1),
        (14, 3, 1),
        (12, 3, 2),
        (16, 2, 3),
        (10, 1, 2),
        (12, 1, 3),
        (7, 0, 2),
        (11, 0, 3),
        (20, 4, 1),
        (18, 2, 2),
    ];
    let mut out = Vec::new();
    for (n, r, z) in params {
        let g = loop {
            let g = gen::random_regular_mixed(n, r, z, &mut rng).expect("sampler parameters are feasible");
            if strongly_connected(&g) {
                break g;
            }
        };
        out.push(named(format!("random({n},{r},{z})"), g));
    }
    out
}

/// Strongly connected mixed graphs from the generators plus random ones.
pub fn corpus() -> Vec<Named<MixedGraph>> {
    let mut out = vec![
        named("kautz(2,2)", gen::kautz(2, 2).unwrap()),
        named("kautz(3,2)", gen::kautz(3, 2).unwrap()),
        named("kautz(4,2)", gen::kautz(4, 2).unwrap()),
        named("kautz(2,3)", gen::kautz(2, 3).unwrap()),
        named("K3", gen::complete_graph(3).unwrap()),
        named("K4", gen::complete_graph(4).unwrap()),
        named("K5", gen::complete_graph(5).unwrap()),
        named("K2,2", gen::complete_bipartite(2, 2).unwrap()),
        named("K2,3", gen::complete_bipartite(2, 3).unwrap()),
        named("K3,3", gen::complete_bipartite(3, 3).unwrap()),
        named("C4", gen::cycle(4, false).unwrap()),
        named("C5", gen::cycle(5, false).unwrap()),
        named("C3 directed", gen::cycle(3, true).unwrap()),
        named("C5 directed", gen::cycle(5, true).unwrap()),
        named("bosak", gen::bosak().unwrap()),
        // not totally regular: a directed triangle with a pendant edge
        named(
            "triangle+edge",
            MixedGraph::build(4, &[(2, 3)], &[(0, 1), (1, 2), (2, 0), (3, 0), (0, 3)]).unwrap(),
        ),
    ];
    out.extend(random_corpus(2024));
    out
}

/// Strongly connected regular digraphs that are not directed cycles.
pub fn digraph_corpus(seed: u64) -> Vec<Named<Digraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![
        named("K3*", gen::complete_symmetric_digraph(3).unwrap()),
        named("K4*", gen::complete_symmetric_digraph(4).unwrap()),
        named("K5*", gen::complete_symmetric_digraph(5).unwrap()),
        named("kautz digraph(2,2)", gen::kautz_digraph(2, 2).unwrap()),
        named("kautz digraph(3,2)", gen::kautz_digraph(3, 2).unwrap()),
    ];
    for (n, z) in [(6, 2), (8, 2), (10, 2), (12, 2), (15, 2), (7, 3), (9, 3), (13, 3)] {
        let d = loop {
            let d = gen::random_regular_digraph(n, z, &mut rng).unwrap();
            if floyd_digraph(&d).iter().flatten().all(|&x| x != INF) {
                break d;
            }
        };
        out.push(named(format!("random digraph({n},{z})"), d));
    }
    out
}

fn floyd(n: usize, steps: impl Iterator<Item = (usize, usize)>) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in steps {
        d[u][v] = d[u][v].min(1);
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// All-pairs distances by Floyd–Warshall, reading edges both ways.
pub fn floyd_mixed(g: &MixedGraph) -> Vec<Vec<u32>> {
    let steps = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (v, u)])
        .chain(g.arcs().iter().copied());
    floyd(g.order(), steps)
}

pub fn floyd_digraph(d: &Digraph) -> Vec<Vec<u32>> {
    floyd(d.order(), d.arcs().iter().copied())
}

/// Diameter and distance total of a distance matrix, `None` if some pair is
/// unreachable.
pub fn diameter_and_total(d: &[Vec<u32>]) -> Option<(u32, u64)> {
    let mut diameter = 0;
    let mut total = 0u64;
    for &x in d.iter().flatten() {
        if x == INF {
            return None;
        }
        diameter = diameter.max(x);
        total += u64::from(x);
    }
    Some((diameter, total))
}

/// `(diameter, avg numerator, n²)` of a graph, via the bit-parallel summary
/// for large graphs.
pub fn distance_figures(g: &MixedGraph) -> Option<(u32, u64, u64)> {
    let n = g.order() as u64;
    if g.order() <= 300 {
        let (diam, total) = diameter_and_total(&floyd_mixed(g))?;
        Some((diam, total, n * n))
    } else {
        let s = metrics::summary(g);
        Some((s.diameter?, s.total_distance, n * n))
    }
}

/// Edges and arcs of `g` with vertices renamed by `key`, sorted.
pub fn relabeled<K: Ord + Clone>(g: &MixedGraph, key: impl Fn(usize) -> K) -> (Vec<(K, K)>, Vec<(K, K)>) {
    let mut edges: Vec<(K, K)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (key(u), key(v));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let mut arcs: Vec<(K, K)> = g.arcs().iter().map(|&(u, v)| (key(u), key(v))).collect();
    edges.sort();
    arcs.sort();
    (edges, arcs)
}

/// Independent check that `steps` is a walk in `s`, an arc only forward.
pub fn is_route(s: &MixedGraph, steps: &[WalkLabel]) -> bool {
    let labels = s.labels().expect("sequence graphs are labeled");
    let id = |l: &WalkLabel| labels.iter().position(|x| x == l);
    steps.windows(2).all(|w| match (id(&w[0]), id(&w[1])) {
        (Some(a), Some(b)) => {
            s.arcs().binary_search(&(a, b)).is_ok()
                || s.edges().binary_search(&(a.min(b), a.max(b))).is_ok()
        }
        _ => false,
    })
}
