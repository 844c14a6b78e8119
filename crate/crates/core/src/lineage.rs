//! Walk-indexed constructions: iterated line digraphs, sequence graphs and
//! sequence mixed graphs.
//!
//! Every vertex of a constructed graph is an `ℓ`-walk of the base graph and
//! carries its [`WalkLabel`]. Vertices are numbered in ascending label order,
//! so two constructions of the same graph agree on ids as well as on labels.
//!
//! Adjacency is the overlap shift: `u0 u1 … uℓ` is joined to `u1 … uℓ x`
//! whenever `uℓ → x` is a step of the base graph. A walk made only of edges
//! is identified with its reversal (its conjugate); the adjacency produced by
//! a shift is an edge when the combined `(ℓ+1)`-walk `u0 … uℓ x` is
//! undirected and an arc otherwise. Shifts that land on the same vertex are
//! dropped.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Digraph, MixedGraph, WalkBase, WalkLabel};

fn is_walk<G: WalkBase + ?Sized>(base: &G, seq: &[usize]) -> bool {
    seq.iter().all(|&v| v < base.order()) && seq.windows(2).all(|w| base.has_step(w[0], w[1]))
}

fn all_edges<G: WalkBase + ?Sized>(base: &G, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| base.is_edge(w[0], w[1]))
}

/// Canonical label of a walk assumed valid in `base`.
fn canonical_unchecked<G: WalkBase + ?Sized>(base: &G, seq: Vec<usize>) -> WalkLabel {
    let undirected = all_edges(base, &seq);
    if undirected {
        let reversed: Vec<usize> = seq.iter().rev().copied().collect();
        WalkLabel {
            seq: seq.min(reversed),
            undirected,
        }
    } else {
        WalkLabel { seq, undirected }
    }
}

/// Validates `seq` as a walk of `base` and returns its canonical label:
/// undirected walks are replaced by the smaller of themselves and their
/// reversal; walks using an arc are kept as given.
pub fn canonical_walk<G: WalkBase + ?Sized>(seq: &[usize], base: &G) -> Result<WalkLabel> {
    if seq.is_empty() || !is_walk(base, seq) {
        return Err(Error::NotAWalk(seq.to_vec()));
    }
    Ok(canonical_unchecked(base, seq.to_vec()))
}

/// All `length`-walks of `base` in lexicographic order.
pub fn walks<G: WalkBase + ?Sized>(base: &G, length: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(length + 1);
    for root in 0..base.order() {
        current.push(root);
        extend_walks(base, length, &mut current, &mut out);
        current.pop();
    }
    out
}

fn extend_walks<G: WalkBase + ?Sized>(
    base: &G,
    length: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == length + 1 {
        out.push(current.clone());
        return;
    }
    let last = *current.last().expect("walk is never empty");
    for &next in base.successors(last) {
        current.push(next);
        extend_walks(base, length, current, out);
        current.pop();
    }
}

fn require_positive(length: usize) -> Result<()> {
    if length == 0 {
        Err(Error::InvalidParameters("walk length must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// The line digraph: one vertex per arc `(a, b)`, and `(a, b) → (b, c)`.
/// Vertex `i` is the `i`-th arc of `d` in sorted order and is labeled `[a, b]`.
pub fn line_digraph(d: &Digraph) -> Digraph {
    let arcs = d.arcs();
    // arcs are sorted, so those leaving `b` form a contiguous block
    let mut first_out = vec![arcs.len(); d.order() + 1];
    for (i, &(a, _)) in arcs.iter().enumerate().rev() {
        first_out[a] = i;
    }
    for v in (0..d.order()).rev() {
        first_out[v] = first_out[v].min(first_out[v + 1]);
    }
    let mut line_arcs = Vec::new();
    for (i, &(_, b)) in arcs.iter().enumerate() {
        for j in first_out[b]..first_out[b + 1] {
            line_arcs.push((i, j));
        }
    }
    let labels = arcs
        .iter()
        .map(|&(a, b)| WalkLabel::directed(vec![a, b]))
        .collect();
    Digraph::from_relation(arcs.len(), line_arcs, Some(labels))
}

/// The `length`-iterated line digraph, built directly on `length`-walks:
/// `u0 … uℓ → u1 … uℓ x` for every arc `(uℓ, x)`. Length zero returns `d`.
pub fn iterated_line_digraph(d: &Digraph, length: usize) -> Digraph {
    if length == 0 {
        return d.clone();
    }
    let all = walks(d, length);
    let index: HashMap<&[usize], usize> = all
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let mut arcs = Vec::with_capacity(all.len() * 2);
    let mut shifted = vec![0; length + 1];
    for (i, w) in all.iter().enumerate() {
        shifted[..length].copy_from_slice(&w[1..]);
        for &x in d.successors(w[length]) {
            shifted[length] = x;
            arcs.push((i, index[shifted.as_slice()]));
        }
    }
    let labels = all.iter().cloned().map(WalkLabel::directed).collect();
    Digraph::from_relation(all.len(), arcs, Some(labels))
}

struct WalkIndex {
    labels: Vec<WalkLabel>,
    ids: HashMap<Vec<usize>, usize>,
}

impl WalkIndex {
    fn new(mut labels: Vec<WalkLabel>) -> Self {
        labels.sort_unstable();
        labels.dedup();
        let ids = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.seq.clone(), i))
            .collect();
        WalkIndex { labels, ids }
    }

    fn id(&self, canonical: &[usize]) -> usize {
        self.ids[canonical]
    }
}

/// The sequence graph of an undirected graph: vertices are `length`-walks up
/// to reversal, and `u0 … uℓ` is adjacent to `u1 … uℓ w` and to `w u0 … uℓ₋₁`
/// for every neighbor `w` of the end vertex being extended.
pub fn sequence_graph(g: &MixedGraph, length: usize) -> Result<MixedGraph> {
    if !g.arcs().is_empty() {
        return Err(Error::HasArcs);
    }
    require_positive(length)?;
    let index = WalkIndex::new(
        walks(g, length)
            .into_iter()
            .map(|w| canonical_unchecked(g, w))
            .collect(),
    );
    let mut relation = Vec::new();
    let mut candidate = vec![0; length + 1];
    for (id, label) in index.labels.iter().enumerate() {
        let seq = &label.seq;
        let mut join = |candidate: &[usize]| {
            let other = index.id(&canonical_unchecked(g, candidate.to_vec()).seq);
            if other != id {
                relation.push((id, other));
                relation.push((other, id));
            }
        };
        candidate[..length].copy_from_slice(&seq[1..]);
        for &w in g.neighbors(seq[length]) {
            candidate[length] = w;
            join(&candidate);
        }
        candidate[1..].copy_from_slice(&seq[..length]);
        for &w in g.neighbors(seq[0]) {
            candidate[0] = w;
            join(&candidate);
        }
    }
    Ok(MixedGraph::from_relation(
        index.labels.len(),
        relation,
        Some(index.labels),
    ))
}

/// The sequence mixed graph built from its definition on walks of `g`.
///
/// Each vertex is shifted forward from every representative (both
/// orientations for an undirected walk). A digraph base has no edges, so
/// nothing is identified and the result is its iterated line digraph with
/// digons read as edges.
pub fn sequence_mixed_direct<G: WalkBase + ?Sized>(g: &G, length: usize) -> Result<MixedGraph> {
    require_positive(length)?;
    let index = WalkIndex::new(
        walks(g, length)
            .into_iter()
            .map(|w| canonical_unchecked(g, w))
            .collect(),
    );
    let mut relation = Vec::new();
    let mut shifted = vec![0; length + 1];
    for (id, label) in index.labels.iter().enumerate() {
        let forward = label.seq.clone();
        let mut representatives = vec![forward];
        if label.undirected && !label.is_palindrome() {
            representatives.push(label.seq.iter().rev().copied().collect());
        }
        for rep in &representatives {
            let last = rep[length];
            shifted[..length].copy_from_slice(&rep[1..]);
            for &x in g.successors(last) {
                shifted[length] = x;
                let target = index.id(&canonical_unchecked(g, shifted.clone()).seq);
                if target == id {
                    continue;
                }
                relation.push((id, target));
                if label.undirected && g.is_edge(last, x) {
                    relation.push((target, id));
                }
            }
        }
    }
    Ok(MixedGraph::from_relation(
        index.labels.len(),
        relation,
        Some(index.labels),
    ))
}

/// The sequence mixed graph obtained as a quotient of `L^ℓ(G*)`: every
/// undirected walk is identified with its conjugate, parallel arcs are merged,
/// loops dropped and digons turned into edges.
pub fn sequence_mixed_quotient<G: WalkBase + ?Sized>(g: &G, length: usize) -> Result<MixedGraph> {
    require_positive(length)?;
    let line = iterated_line_digraph(&g.associated_digraph(), length);
    let line_labels = line.labels().expect("iterated line digraphs are labeled");
    let classes: Vec<WalkLabel> = line_labels
        .iter()
        .map(|l| {
            let undirected = all_edges(g, &l.seq);
            let mut seq = l.seq.clone();
            if undirected {
                let reversed: Vec<usize> = seq.iter().rev().copied().collect();
                if reversed < seq {
                    seq = reversed;
                }
            }
            WalkLabel { seq, undirected }
        })
        .collect();
    let index = WalkIndex::new(classes.clone());
    let class_of: Vec<usize> = classes.iter().map(|c| index.id(&c.seq)).collect();
    let relation = line
        .arcs()
        .iter()
        .map(|&(a, b)| (class_of[a], class_of[b]))
        .filter(|(a, b)| a != b)
        .collect();
    Ok(MixedGraph::from_relation(
        index.labels.len(),
        relation,
        Some(index.labels),
    ))
}

/// For a mixed graph whose undirected degree is at most one everywhere and
/// at least one somewhere, and an even `length ≥ 2`: checks that `S^ℓ(G)`
/// equals `L^ℓ(G*)` with each digon read as an edge, vertex by vertex under
/// the walk labels.
pub fn check_delta1_isomorphism(g: &MixedGraph, length: usize) -> Result<bool> {
    if g.max_degrees().undirected != 1 {
        return Err(Error::Precondition(
            "maximum undirected degree must be 1".into(),
        ));
    }
    if length < 2 || !length.is_multiple_of(2) {
        return Err(Error::Precondition(
            "walk length must be even and at least 2".into(),
        ));
    }
    let sequence = sequence_mixed_direct(g, length)?;
    let line = MixedGraph::from_digraph(&iterated_line_digraph(&g.associated_digraph(), length));
    if sequence.order() != line.order() {
        return Ok(false);
    }
    let ids: HashMap<&[usize], usize> = sequence
        .labels()
        .expect("constructions are labeled")
        .iter()
        .enumerate()
        .map(|(i, l)| (l.seq.as_slice(), i))
        .collect();
    let mut map = Vec::with_capacity(line.order());
    for label in line.labels().expect("constructions are labeled") {
        match ids.get(label.seq.as_slice()) {
            Some(&id) => map.push(id),
            None => return Ok(false),
        }
    }
    let mut edges: Vec<(usize, usize)> = line
        .edges()
        .iter()
        .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .collect();
    let mut arcs: Vec<(usize, usize)> = line.arcs().iter().map(|&(u, v)| (map[u], map[v])).collect();
    edges.sort_unstable();
    arcs.sort_unstable();
    Ok(edges == sequence.edges() && arcs == sequence.arcs())
}
