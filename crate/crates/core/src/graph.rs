//! Mixed graphs, their associated digraphs, and the walk labels carried by
//! constructed graphs.
//!
//! A [`MixedGraph`] stores undirected edges and directed arcs on dense vertex
//! ids `0..n`. Opposite arc pairs (digons) are never stored as arcs: they are
//! normalized into edges, so every mixed graph is simple in the sense that
//! each unordered vertex pair carries at most one adjacency. A [`Digraph`]
//! keeps arc-level identity and allows digons; it is the representation of
//! the associated digraph `G*` and of iterated line digraphs.

use crate::error::{Error, Result};

/// A sequence of base-graph vertices naming a vertex of a line digraph or a
/// sequence graph.
///
/// `undirected` is true iff every consecutive step of `seq` is an edge of the
/// base graph. For undirected walks, `seq` is stored in canonical form: the
/// lexicographically smaller of the walk and its reversal (its conjugate).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalkLabel {
    pub seq: Vec<usize>,
    pub undirected: bool,
}

impl WalkLabel {
    pub fn directed(seq: Vec<usize>) -> Self {
        WalkLabel {
            seq,
            undirected: false,
        }
    }

    /// Length of the walk (number of steps).
    pub fn len(&self) -> usize {
        self.seq.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// True when the walk reads the same in both directions.
    pub fn is_palindrome(&self) -> bool {
        self.seq.iter().eq(self.seq.iter().rev())
    }
}

impl std::fmt::Display for WalkLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Undirected degree, out-degree and in-degree of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DegreeTriple {
    pub undirected: usize,
    pub out: usize,
    pub inn: usize,
}

/// Read access shared by mixed graphs and digraphs: the step structure of the
/// associated digraph together with which steps are undirected edges.
pub trait WalkBase {
    fn order(&self) -> usize;

    /// Out-neighbors in the associated digraph, ascending.
    fn successors(&self, v: usize) -> &[usize];

    /// In-neighbors in the associated digraph, ascending.
    fn predecessors(&self, v: usize) -> &[usize];

    /// True iff `{u, v}` is an undirected edge.
    fn is_edge(&self, u: usize, v: usize) -> bool;

    fn has_step(&self, u: usize, v: usize) -> bool {
        self.successors(u).binary_search(&v).is_ok()
    }

    fn associated_digraph(&self) -> Digraph;

    fn labels(&self) -> Option<&[WalkLabel]>;

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                order: n,
            });
        }
    }
    if u == v {
        return Err(Error::Loop(u));
    }
    Ok(())
}

fn adjacency_lists(n: usize, pairs: &[(usize, usize)]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut out = vec![Vec::new(); n];
    let mut inn = vec![Vec::new(); n];
    for &(u, v) in pairs {
        out[u].push(v);
        inn[v].push(u);
    }
    for list in out.iter_mut().chain(inn.iter_mut()) {
        list.sort_unstable();
    }
    (out, inn)
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    merged.extend_from_slice(a);
    merged.extend_from_slice(b);
    merged.sort_unstable();
    merged
}

fn check_labels(n: usize, labels: &Option<Vec<WalkLabel>>) -> Result<()> {
    match labels {
        Some(l) if l.len() != n => Err(Error::InvalidParameters(format!(
            "{} labels supplied for {n} vertices",
            l.len()
        ))),
        _ => Ok(()),
    }
}

/// A simple mixed graph: vertices `0..n`, undirected edges and directed arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
    labels: Option<Vec<WalkLabel>>,
    neighbors: Vec<Vec<usize>>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

impl MixedGraph {
    /// Builds a mixed graph, rejecting loops, out-of-range endpoints and
    /// parallel adjacencies. An arc supplied together with its opposite is
    /// stored as one edge.
    pub fn build(n: usize, edges: &[(usize, usize)], arcs: &[(usize, usize)]) -> Result<Self> {
        for &(u, v) in edges.iter().chain(arcs) {
            check_pair(n, u, v)?;
        }
        let mut arc_list = arcs.to_vec();
        arc_list.sort_unstable();
        if let Some(w) = arc_list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelAdjacency(w[0].0, w[0].1));
        }
        let mut all_edges: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut kept_arcs = Vec::with_capacity(arc_list.len());
        for &(u, v) in &arc_list {
            if arc_list.binary_search(&(v, u)).is_ok() {
                if u < v {
                    all_edges.push((u, v));
                }
            } else {
                kept_arcs.push((u, v));
            }
        }
        all_edges.sort_unstable();
        if let Some(w) = all_edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelAdjacency(w[0].0, w[0].1));
        }
        for &(u, v) in &kept_arcs {
            if all_edges.binary_search(&(u.min(v), u.max(v))).is_ok() {
                return Err(Error::ParallelAdjacency(u, v));
            }
        }
        Ok(Self::assemble(n, all_edges, kept_arcs, None))
    }

    /// Builds a mixed graph from an adjacency relation (ordered pairs of the
    /// associated digraph): duplicates are merged and digons become edges.
    pub(crate) fn from_relation(
        n: usize,
        mut relation: Vec<(usize, usize)>,
        labels: Option<Vec<WalkLabel>>,
    ) -> Self {
        relation.sort_unstable();
        relation.dedup();
        debug_assert!(relation.iter().all(|&(u, v)| u != v && u < n && v < n));
        let mut edges = Vec::new();
        let mut arcs = Vec::new();
        for &(u, v) in &relation {
            if relation.binary_search(&(v, u)).is_ok() {
                if u < v {
                    edges.push((u, v));
                }
            } else {
                arcs.push((u, v));
            }
        }
        Self::assemble(n, edges, arcs, labels)
    }

    fn assemble(
        n: usize,
        edges: Vec<(usize, usize)>,
        arcs: Vec<(usize, usize)>,
        labels: Option<Vec<WalkLabel>>,
    ) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let (out_arcs, in_arcs) = adjacency_lists(n, &arcs);
        let succ = (0..n)
            .map(|v| merge_sorted(&neighbors[v], &out_arcs[v]))
            .collect();
        let pred = (0..n)
            .map(|v| merge_sorted(&neighbors[v], &in_arcs[v]))
            .collect();
        MixedGraph {
            n,
            edges,
            arcs,
            labels,
            neighbors,
            out_arcs,
            in_arcs,
            succ,
            pred,
        }
    }

    /// Replaces every digon of `d` by an edge; remaining arcs are kept.
    pub fn from_digraph(d: &Digraph) -> Self {
        Self::from_relation(d.order(), d.arcs.clone(), d.labels.clone())
    }

    /// Attaches per-vertex labels.
    pub fn with_labels(mut self, labels: Vec<WalkLabel>) -> Result<Self> {
        let labels = Some(labels);
        check_labels(self.n, &labels)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Arcs, sorted.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn labels(&self) -> Option<&[WalkLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&WalkLabel> {
        self.labels.as_ref().and_then(|l| l.get(v))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.in_arcs[v]
    }

    pub fn is_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_arcs[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self, v: usize) -> Result<DegreeTriple> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    fn degree_unchecked(&self, v: usize) -> DegreeTriple {
        DegreeTriple {
            undirected: self.neighbors[v].len(),
            out: self.out_arcs[v].len(),
            inn: self.in_arcs[v].len(),
        }
    }

    pub fn degree_sequence(&self) -> impl Iterator<Item = DegreeTriple> + '_ {
        (0..self.n).map(|v| self.degree_unchecked(v))
    }

    /// `(r, z)` when every vertex has undirected degree `r` and in- and
    /// out-degree `z`.
    pub fn total_regularity(&self) -> Option<(usize, usize)> {
        let mut degrees = self.degree_sequence();
        let first = degrees.next()?;
        if first.out != first.inn {
            return None;
        }
        degrees
            .all(|d| d == first)
            .then_some((first.undirected, first.out))
    }

    /// Maximum undirected degree, maximum out-degree and maximum in-degree.
    pub fn max_degrees(&self) -> DegreeTriple {
        self.degree_sequence()
            .fold(DegreeTriple::default(), |acc, d| DegreeTriple {
                undirected: acc.undirected.max(d.undirected),
                out: acc.out.max(d.out),
                inn: acc.inn.max(d.inn),
            })
    }

    /// 0/1 adjacency matrix; it coincides with that of the associated digraph.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for (u, row) in a.iter_mut().enumerate() {
            for &v in &self.succ[u] {
                row[v] = 1;
            }
        }
        a
    }
}

impl WalkBase for MixedGraph {
    fn order(&self) -> usize {
        self.n
    }

    fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    fn is_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Every edge becomes a digon.
    fn associated_digraph(&self) -> Digraph {
        let mut arcs = self.arcs.clone();
        for &(u, v) in &self.edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Digraph::from_relation(self.n, arcs, self.labels.clone())
    }

    fn labels(&self) -> Option<&[WalkLabel]> {
        self.labels.as_deref()
    }
}

/// A loopless digraph without parallel arcs; digons are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    labels: Option<Vec<WalkLabel>>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        for &(u, v) in arcs {
            check_pair(n, u, v)?;
        }
        let mut arcs = arcs.to_vec();
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelAdjacency(w[0].0, w[0].1));
        }
        Ok(Self::from_relation(n, arcs, None))
    }

    pub(crate) fn from_relation(
        n: usize,
        mut arcs: Vec<(usize, usize)>,
        labels: Option<Vec<WalkLabel>>,
    ) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        debug_assert!(arcs.iter().all(|&(u, v)| u != v && u < n && v < n));
        let (out, inn) = adjacency_lists(n, &arcs);
        Digraph {
            n,
            arcs,
            labels,
            out,
            inn,
        }
    }

    pub fn with_labels(mut self, labels: Vec<WalkLabel>) -> Result<Self> {
        let labels = Some(labels);
        check_labels(self.n, &labels)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn labels(&self) -> Option<&[WalkLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&WalkLabel> {
        self.labels.as_ref().and_then(|l| l.get(v))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// `z` when every vertex has in- and out-degree `z`.
    pub fn regularity(&self) -> Option<usize> {
        let z = self.out.first()?.len();
        (0..self.n)
            .all(|v| self.out[v].len() == z && self.inn[v].len() == z)
            .then_some(z)
    }
}

impl WalkBase for Digraph {
    fn order(&self) -> usize {
        self.n
    }

    fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    fn predecessors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// A digraph has no edges; its digons are pairs of arcs.
    fn is_edge(&self, _u: usize, _v: usize) -> bool {
        false
    }

    fn associated_digraph(&self) -> Digraph {
        self.clone()
    }

    fn labels(&self) -> Option<&[WalkLabel]> {
        self.labels.as_deref()
    }
}
