//! Degree reduction of sequence mixed graphs.
//!
//! The vertices of `V₂` (walks containing an arc) all have in- and
//! out-degree `r + z` in `S^ℓ(G)`. Picking an `r′`-factor among the shift
//! arcs inside `V₂` and turning its arcs into edges lowers the directed degree
//! to `d - r′` while the undirected degree of `V₂` rises to at most `2r′`.
//!
//! For `ℓ = 1` the shift digraph induced on `V₂` is already `z`-regular. For
//! `ℓ > 1` it is not, and a `z`-regular spanning subdigraph of it is taken
//! with a max-flow degree-factor computation before the `r′`-factor is peeled.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::factor::{degree_factor, extract_factor_preferring, FactorAssignment};
use crate::graph::{Digraph, MixedGraph, WalkBase, WalkLabel};
use crate::lineage::sequence_mixed_direct;
use crate::metrics;
use crate::moore::moore_bound;

/// `(r, z)` when every vertex of `g` has `r` edges, `z` out-arcs and `z`
/// in-arcs.
pub fn base_regularity<G: WalkBase + ?Sized>(g: &G) -> Option<(usize, usize)> {
    let mut degrees = (0..g.order()).map(|v| {
        let r = g.successors(v).iter().filter(|&&w| g.is_edge(v, w)).count();
        let out = g.successors(v).len() - r;
        let inn = g.predecessors(v).len() - r;
        (r, out, inn)
    });
    let (r, z, inn) = degrees.next()?;
    (z == inn && degrees.all(|d| d == (r, z, z))).then_some((r, z))
}

/// The `z`-regular digraph on `V₂` used by the reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct V2Subdigraph {
    /// Vertex `i` of `digraph` is vertex `members[i]` of the sequence graph.
    pub members: Vec<usize>,
    pub digraph: Digraph,
    pub z: usize,
}

/// Builds the `z`-regular subdigraph on `V₂` of `s = S^ℓ(g)`.
pub fn v2_subdigraph<G: WalkBase + ?Sized>(s: &MixedGraph, g: &G, length: usize) -> Result<V2Subdigraph> {
    let labels = s.labels().ok_or(Error::MissingLabels)?;
    let (_, z) = base_regularity(g).ok_or(Error::NotTotallyRegular)?;
    let members: Vec<usize> = (0..s.order()).filter(|&v| !labels[v].undirected).collect();
    if members.is_empty() || z == 0 {
        return Err(Error::Precondition("the sequence graph has no V2 vertices".into()));
    }
    let local: HashMap<&[usize], usize> = members
        .iter()
        .enumerate()
        .map(|(i, &v)| (labels[v].seq.as_slice(), i))
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); members.len()];
    let mut shifted = vec![0; length + 1];
    for (i, &v) in members.iter().enumerate() {
        let seq = &labels[v].seq;
        if seq.len() != length + 1 {
            return Err(Error::Precondition(format!(
                "vertex label {} is not a {length}-walk",
                labels[v]
            )));
        }
        shifted[..length].copy_from_slice(&seq[1..]);
        for &x in g.successors(seq[length]) {
            shifted[length] = x;
            // directed walks are their own labels; V1 targets are absent
            if let Some(&j) = local.get(shifted.as_slice()) {
                if j != i {
                    adj[i].push(j);
                }
            }
        }
        adj[i].sort_unstable();
        adj[i].dedup();
    }
    let regular = adj.iter().all(|a| a.len() == z)
        && in_degrees(&adj).into_iter().all(|d| d == z);
    let arcs: Vec<(usize, usize)> = if regular {
        adj.iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().map(move |&v| (u, v)))
            .collect()
    } else {
        degree_factor(&adj, z).ok_or_else(|| {
            Error::Precondition(format!("the V2 shift digraph has no {z}-regular subdigraph"))
        })?
    };
    let sub_labels: Vec<WalkLabel> = members.iter().map(|&v| labels[v].clone()).collect();
    let digraph = Digraph::from_relation(members.len(), arcs, Some(sub_labels));
    Ok(V2Subdigraph { members, digraph, z })
}

fn in_degrees(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut inn = vec![0; adj.len()];
    for v in adj.iter().flatten() {
        inn[*v] += 1;
    }
    inn
}

/// How the factor arcs entered the reduced graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Reconciliation {
    /// Arcs in the factor.
    pub selected: usize,
    /// Selected arcs whose endpoints were already joined by an edge (a digon
    /// of shifts, read as an edge when the sequence graph was built).
    pub already_edges: usize,
    /// Selected arcs that were arcs of the sequence graph.
    pub converted: usize,
    /// Unordered pairs selected in both directions, collapsed to one edge.
    pub collapsed_pairs: usize,
    pub edges_added: usize,
    pub arcs_removed: usize,
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub sequence: MixedGraph,
    pub reduced: MixedGraph,
    pub factor: FactorAssignment,
    pub reconciliation: Reconciliation,
}

fn check_reducible<G: WalkBase + ?Sized>(g: &G, length: usize, r_prime: usize) -> Result<(usize, usize)> {
    let (r, z) = base_regularity(g).ok_or(Error::NotTotallyRegular)?;
    if length == 0 {
        return Err(Error::InvalidParameters("walk length must be at least 1".into()));
    }
    if !(r > 1 || (r == 0 && length > 1)) {
        return Err(Error::Precondition(format!(
            "reduction needs r > 1, or a digraph with length > 1 (got r={r}, length={length})"
        )));
    }
    if r_prime == 0 || r_prime > z {
        return Err(Error::InvalidParameters(format!(
            "r' = {r_prime} outside 1..={z}"
        )));
    }
    Ok((r, z))
}

/// Builds `S^ℓ_m(g)` together with the intermediate objects.
pub fn reduce<G: WalkBase + ?Sized>(g: &G, length: usize, r_prime: usize) -> Result<Reduction> {
    check_reducible(g, length, r_prime)?;
    let sequence = sequence_mixed_direct(g, length)?;
    let sub = v2_subdigraph(&sequence, g, length)?;
    let preferred: Vec<(usize, usize)> = sub
        .digraph
        .arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| u < v && sub.digraph.has_arc(v, u))
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .collect();
    let preferred = one_per_vertex(&preferred);
    let local = extract_factor_preferring(&sub.digraph, r_prime, &preferred)?;
    let selected: Vec<(usize, usize)> = local
        .arcs
        .iter()
        .map(|&(u, v)| (sub.members[u], sub.members[v]))
        .collect();

    let chosen: BTreeSet<(usize, usize)> = selected.iter().copied().collect();
    let mut rec = Reconciliation {
        selected: selected.len(),
        ..Reconciliation::default()
    };
    for &(u, v) in &selected {
        if sequence.is_arc(u, v) {
            rec.converted += 1;
        } else {
            rec.already_edges += 1;
        }
        if u < v && chosen.contains(&(v, u)) {
            rec.collapsed_pairs += 1;
        }
    }

    let mut relation: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in sequence.edges() {
        relation.push((u, v));
        relation.push((v, u));
    }
    relation.extend(sequence.arcs().iter().copied());
    relation.extend(selected.iter().map(|&(u, v)| (v, u)));
    let labels = sequence.labels().map(<[WalkLabel]>::to_vec);
    let reduced = MixedGraph::from_relation(sequence.order(), relation, labels);
    rec.edges_added = reduced.edges().len() - sequence.edges().len();
    rec.arcs_removed = sequence.arcs().len() - reduced.arcs().len();
    Ok(Reduction {
        sequence,
        reduced,
        factor: FactorAssignment {
            arcs: selected,
            r_prime,
        },
        reconciliation: rec,
    })
}

/// Keeps a subset of `pairs` using each vertex at most once as a tail and
/// once as a head, in order.
fn one_per_vertex(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut tails = BTreeSet::new();
    let mut heads = BTreeSet::new();
    pairs
        .iter()
        .copied()
        .filter(|&(u, v)| {
            if tails.contains(&u) || heads.contains(&v) {
                return false;
            }
            tails.insert(u);
            heads.insert(v);
            true
        })
        .collect()
}

/// The reduced sequence mixed graph `S^ℓ_m(g)`.
pub fn seq_mixed_reduced<G: WalkBase + ?Sized>(g: &G, length: usize, r_prime: usize) -> Result<MixedGraph> {
    Ok(reduce(g, length, r_prime)?.reduced)
}

/// Order, diameter, maximum degrees and Moore reference of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFigures {
    pub order: usize,
    pub diameter: Option<u32>,
    /// Maximum undirected degree.
    pub delta: usize,
    /// Maximum directed out- or in-degree.
    pub delta_star: usize,
    /// `M(delta, delta_star, diameter)`, when the graph is strongly connected.
    pub moore_ref: Option<BigUint>,
    /// `moore_ref / order`.
    pub ratio: Option<f64>,
}

pub fn figures(g: &MixedGraph) -> Result<GraphFigures> {
    let diameter = metrics::summary(g).diameter;
    let max = g.max_degrees();
    let delta_star = max.out.max(max.inn);
    let moore_ref = match diameter {
        Some(k) if max.undirected + delta_star > 0 => Some(moore_bound(
            max.undirected as u32,
            delta_star as u32,
            k,
        )?),
        _ => None,
    };
    let ratio = moore_ref
        .as_ref()
        .and_then(|m| m.to_f64())
        .map(|m| m / g.order() as f64);
    Ok(GraphFigures {
        order: g.order(),
        diameter,
        delta: max.undirected,
        delta_star,
        moore_ref,
        ratio,
    })
}

/// Figures of `S^ℓ(g)` and of `S^ℓ_m(g)`.
#[derive(Debug, Clone)]
pub struct ReductionReport {
    pub length: usize,
    pub r_prime: usize,
    pub sequence: GraphFigures,
    pub reduced: GraphFigures,
    pub reconciliation: Reconciliation,
}

pub fn reduction_report<G: WalkBase + ?Sized>(g: &G, length: usize, r_prime: usize) -> Result<ReductionReport> {
    let reduction = reduce(g, length, r_prime)?;
    report_for(&reduction, length, r_prime)
}

/// Figures of an already computed reduction.
pub fn report_for(reduction: &Reduction, length: usize, r_prime: usize) -> Result<ReductionReport> {
    Ok(ReductionReport {
        length,
        r_prime,
        sequence: figures(&reduction.sequence)?,
        reduced: figures(&reduction.reduced)?,
        reconciliation: reduction.reconciliation,
    })
}
