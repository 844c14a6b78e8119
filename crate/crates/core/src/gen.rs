//! Generators for the graph families used throughout the toolkit.

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::factor::perfect_matching;
use crate::graph::{Digraph, MixedGraph, WalkLabel};
use crate::io;
use crate::moore::{classify_moore, MooreVerdict};

/// Environment variable naming a directory that overrides the bundled fixtures.
pub const FIXTURES_ENV: &str = "SEQMIX_FIXTURES";

const BOSAK_FIXTURE: &str = include_str!("../fixtures/bosak.txt");

/// A word over `{0..=d}` with no two equal consecutive letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KautzWord(pub Vec<usize>);

impl KautzWord {
    pub fn is_valid(&self, d: usize) -> bool {
        self.0.iter().all(|&c| c <= d) && self.0.windows(2).all(|w| w[0] != w[1])
    }
}

fn kautz_words(d: usize, n: usize) -> Vec<KautzWord> {
    let mut words: Vec<Vec<usize>> = (0..=d).map(|c| vec![c]).collect();
    for _ in 1..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = *w.last().unwrap();
                (0..=d).filter(move |&c| c != last).map(move |c| {
                    let mut next = w.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    words.into_iter().map(KautzWord).collect()
}

/// The Kautz digraph `K(d, n)`: words of length `n`, and `w → w₂ … wₙ x` for
/// every letter `x ≠ wₙ`. Order `dⁿ + dⁿ⁻¹`, `d`-regular, diameter `n`.
/// Vertices are labeled by their words.
pub fn kautz_digraph(d: usize, n: usize) -> Result<Digraph> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidParameters(format!(
            "Kautz parameters must be positive, got d={d}, n={n}"
        )));
    }
    let words = kautz_words(d, n);
    let index: HashMap<&[usize], usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.0.as_slice(), i))
        .collect();
    let mut arcs = Vec::with_capacity(words.len() * d);
    for (i, w) in words.iter().enumerate() {
        let last = w.0[n - 1];
        let mut next = w.0[1..].to_vec();
        next.push(0);
        for x in (0..=d).filter(|&x| x != last) {
            next[n - 1] = x;
            arcs.push((i, index[next.as_slice()]));
        }
    }
    let order = index.len();
    drop(index);
    let labels = words.into_iter().map(|w| WalkLabel::directed(w.0)).collect();
    Digraph::new(order, &arcs)?.with_labels(labels)
}

/// `K(d, n)` as a mixed graph: digons `ab…ab ↔ ba…ba` become edges.
pub fn kautz(d: usize, n: usize) -> Result<MixedGraph> {
    Ok(MixedGraph::from_digraph(&kautz_digraph(d, n)?))
}

/// The complete symmetric digraph `K*_n`: all `n(n-1)` ordered pairs.
pub fn complete_symmetric_digraph(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "complete symmetric digraph needs n >= 2, got {n}"
        )));
    }
    let arcs: Vec<_> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    Digraph::new(n, &arcs)
}

/// The complete graph `K_n`, i.e. `K*_n` with its digons read as edges.
pub fn complete_graph(n: usize) -> Result<MixedGraph> {
    Ok(MixedGraph::from_digraph(&complete_symmetric_digraph(n)?))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<MixedGraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters(format!(
            "part sizes must be positive, got {m} and {n}"
        )));
    }
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    MixedGraph::build(m + n, &edges, &[])
}

pub fn cycle(n: usize, directed: bool) -> Result<MixedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    if directed {
        MixedGraph::build(n, &[], &pairs)
    } else {
        MixedGraph::build(n, &pairs, &[])
    }
}

fn fixture_path(name: &str) -> Option<PathBuf> {
    std::env::var_os(FIXTURES_ENV).map(|dir| PathBuf::from(dir).join(name))
}

/// The Bosák graph: the `(3, 1)`-regular mixed Moore graph of diameter 2 on
/// 18 vertices. Read from `$SEQMIX_FIXTURES/bosak.txt` when the variable is
/// set, otherwise from the bundled fixture. The loaded graph must classify as
/// a `(3, 1)` Moore graph; by uniqueness that makes it the Bosák graph.
pub fn bosak() -> Result<MixedGraph> {
    match fixture_path("bosak.txt") {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
            bosak_from_text(&text, &path.display().to_string())
        }
        None => bosak_from_text(BOSAK_FIXTURE, "bosak.txt"),
    }
}

pub fn bosak_from_text(text: &str, source: &str) -> Result<MixedGraph> {
    let g = io::parse_mixed(text, source)?;
    let class = classify_moore(&g)
        .map_err(|e| Error::Fixture(format!("{source}: not a mixed Moore graph: {e}")))?;
    if class.verdict != MooreVerdict::Moore || (class.r, class.z) != (3, 1) {
        return Err(Error::Fixture(format!(
            "{source}: expected a (3,1) mixed Moore graph, found (r,z)=({},{}) with deficit {}",
            class.r, class.z, class.deficit
        )));
    }
    Ok(g)
}

const MAX_ATTEMPTS: usize = 10_000;

fn random_permutation_arcs<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
    accept: impl Fn(usize, usize) -> bool,
) -> Option<Vec<(usize, usize)>> {
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let mut allowed: Vec<usize> = (0..n).filter(|&v| accept(u, v)).collect();
            allowed.shuffle(rng);
            allowed
        })
        .collect();
    let partner = perfect_matching(&adj, &[])?;
    Some(partner.into_iter().enumerate().collect())
}

fn random_regular_edges<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(rng);
        let mut edges = BTreeSet::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !edges.insert((u, v)) {
                continue 'attempt;
            }
        }
        return Some(edges.into_iter().collect());
    }
    None
}

/// A uniformly shuffled attempt at an `(r, z)`-regular mixed graph on `n`
/// vertices: a random `r`-regular simple graph from the pairing model plus
/// `z` random permutations as arcs, rejecting loops and parallel adjacencies.
pub fn random_regular_mixed<R: Rng + ?Sized>(n: usize, r: usize, z: usize, rng: &mut R) -> Result<MixedGraph> {
    if !(n * r).is_multiple_of(2) || r + 2 * z >= n {
        return Err(Error::InvalidParameters(format!(
            "no simple ({r},{z})-regular mixed graph sampler for n={n}"
        )));
    }
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let edges = random_regular_edges(n, r, rng).ok_or_else(|| {
            Error::InvalidParameters(format!("could not sample a {r}-regular graph on {n} vertices"))
        })?;
        let mut taken: BTreeSet<(usize, usize)> =
            edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        let mut arcs = Vec::new();
        for _ in 0..z {
            let Some(layer) = random_permutation_arcs(n, rng, |u, v| {
                u != v && !taken.contains(&(u, v)) && !taken.contains(&(v, u))
            }) else {
                continue 'attempt;
            };
            if layer.iter().any(|&(u, v)| layer[v].1 == u) {
                continue 'attempt;
            }
            taken.extend(layer.iter().copied());
            arcs.extend(layer);
        }
        return MixedGraph::build(n, &edges, &arcs);
    }
    Err(Error::InvalidParameters(format!(
        "could not sample a ({r},{z})-regular mixed graph on {n} vertices"
    )))
}

/// A random `z`-regular digraph on `n` vertices (digons allowed) as a union of
/// `z` permutations.
pub fn random_regular_digraph<R: Rng + ?Sized>(n: usize, z: usize, rng: &mut R) -> Result<Digraph> {
    if z >= n {
        return Err(Error::InvalidParameters(format!(
            "no {z}-regular digraph on {n} vertices"
        )));
    }
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut taken = BTreeSet::new();
        for _ in 0..z {
            let Some(layer) =
                random_permutation_arcs(n, rng, |u, v| u != v && !taken.contains(&(u, v)))
            else {
                continue 'attempt;
            };
            taken.extend(layer);
        }
        let arcs: Vec<_> = taken.into_iter().collect();
        return Digraph::new(n, &arcs);
    }
    Err(Error::InvalidParameters(format!(
        "could not sample a {z}-regular digraph on {n} vertices"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lineage::line_digraph;
    use crate::metrics;
    use crate::WalkBase;
    use rand::SeedableRng;

    #[test]
    fn kautz_two_two() {
        let k = kautz(2, 2).unwrap();
        assert_eq!(k.order(), 6);
        assert_eq!(k.total_regularity(), Some((1, 1)));
        assert_eq!(metrics::diameter(&k), Some(2));
    }

    #[test]
    fn kautz_orders_and_degrees() {
        for d in 1..=4 {
            for n in 1..=3 {
                let k = kautz_digraph(d, n).unwrap();
                assert_eq!(k.order(), d.pow(n as u32) + d.pow(n as u32 - 1));
                assert_eq!(k.regularity(), Some(d));
                if d >= 2 {
                    assert_eq!(metrics::diameter(&k), Some(n as u32));
                }
                assert!(k
                    .labels()
                    .unwrap()
                    .iter()
                    .all(|l| KautzWord(l.seq.clone()).is_valid(d)));
            }
        }
        assert!(kautz(0, 2).is_err());
        assert!(kautz(2, 0).is_err());
    }

    #[test]
    fn kautz_word_length_one_is_complete() {
        assert_eq!(kautz(2, 1).unwrap().without_labels(), complete_graph(3).unwrap());
    }

    #[test]
    fn kautz_is_line_digraph_of_shorter_kautz() {
        for (d, n) in [(2, 1), (2, 2), (3, 2), (2, 3)] {
            let shorter = kautz_digraph(d, n).unwrap();
            let line = line_digraph(&shorter);
            let longer = kautz_digraph(d, n + 1).unwrap();
            assert_eq!(line.order(), longer.order());
            let word = |v: usize| {
                let pair = &line.label(v).unwrap().seq;
                let mut w = shorter.label(pair[0]).unwrap().seq.clone();
                w.push(*shorter.label(pair[1]).unwrap().seq.last().unwrap());
                w
            };
            let ids: HashMap<Vec<usize>, usize> = longer
                .labels()
                .unwrap()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.seq.clone(), i))
                .collect();
            let mut mapped: Vec<_> = line
                .arcs()
                .iter()
                .map(|&(a, b)| (ids[&word(a)], ids[&word(b)]))
                .collect();
            mapped.sort_unstable();
            assert_eq!(mapped, longer.arcs());
        }
    }

    #[test]
    fn complete_symmetric_shapes() {
        let d = complete_symmetric_digraph(3).unwrap();
        assert_eq!(d.arcs().len(), 6);
        assert_eq!(d.regularity(), Some(2));
        let k3 = complete_graph(3).unwrap();
        assert_eq!(k3.total_regularity(), Some((2, 0)));
        assert!(complete_symmetric_digraph(1).is_err());
    }

    #[test]
    fn small_families() {
        let k22 = complete_bipartite(2, 2).unwrap();
        assert_eq!((k22.order(), k22.edges().len()), (4, 4));
        assert_eq!(metrics::diameter(&k22), Some(2));
        assert_eq!(metrics::diameter(&cycle(5, true).unwrap()), Some(4));
        let c6 = cycle(6, false).unwrap();
        assert_eq!(metrics::diameter(&c6), Some(3));
        assert_eq!(c6.total_regularity(), Some((2, 0)));
        assert_eq!(cycle(4, true).unwrap().total_regularity(), Some((0, 1)));
        assert!(cycle(2, false).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn bosak_fixture_loads() {
        let g = bosak_from_text(BOSAK_FIXTURE, "bundled").unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.total_regularity(), Some((3, 1)));
        assert_eq!(metrics::diameter(&g), Some(2));
    }

    #[test]
    fn bosak_loader_rejects_impostors() {
        // drop one arc: no longer totally regular
        let broken: String = BOSAK_FIXTURE
            .lines()
            .filter(|l| *l != "A 0 8")
            .map(|l| format!("{l}\n"))
            .collect();
        assert_ne!(broken.len(), BOSAK_FIXTURE.len());
        assert!(matches!(
            bosak_from_text(&broken, "broken"),
            Err(Error::Fixture(_))
        ));
        let k = io::write_mixed(&kautz(2, 2).unwrap());
        assert!(matches!(bosak_from_text(&k, "kautz"), Err(Error::Fixture(_))));
    }

    #[test]
    fn random_generators_are_regular() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (n, r, z) in [(8, 2, 1), (10, 3, 2), (12, 1, 3), (9, 0, 2)] {
            let g = random_regular_mixed(n, r, z, &mut rng).unwrap();
            assert_eq!(g.total_regularity(), Some((r, z)));
        }
        for (n, z) in [(12, 3), (20, 4), (5, 4)] {
            let d = random_regular_digraph(n, z, &mut rng).unwrap();
            assert_eq!(d.regularity(), Some(z));
            assert!(d.arcs().iter().all(|&(u, v)| u != v && d.has_step(u, v)));
        }
    }
}
