//! Explicit paths in sequence mixed graphs.
//!
//! To go from the walk `u = u0 … uℓ` to `v = v0 … vℓ`, follow a shortest path
//! `uℓ = w0, w1, …, wp = v0` of the base graph and read the concatenation
//! `u0 … uℓ w1 … w(p-1) v0 … vℓ` through a sliding window of `ℓ + 1`
//! vertices. Every window is a walk and consecutive windows are a shift, so
//! the windows form a path of length `p + ℓ` in `S^ℓ(G)`. When an endpoint is
//! an undirected walk, both of its orientations are tried and the smallest
//! `p` is kept.
//!
//! For odd `ℓ` two consecutive windows can be conjugates of each other (the
//! concatenation backtracks over an edge), so they name the same vertex.
//! Among the shortest base paths of all orientation choices with minimum `p`
//! a route without such stays is preferred; if none exists, the stays are
//! kept and counted.

use crate::error::{Error, Result};
use crate::graph::{WalkBase, WalkLabel};
use crate::lineage::canonical_walk;
use crate::metrics::distances_from;

/// Shortest base paths examined per orientation choice.
const PATH_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutePath {
    /// Consecutive vertices of the sequence graph, as canonical labels.
    pub steps: Vec<WalkLabel>,
    /// `steps.len() - 1`, always `p + ℓ`.
    pub length: usize,
    /// Base distance from the end of the source walk to the start of the
    /// target walk, minimized over orientations.
    pub p: usize,
    /// Consecutive repeated steps.
    pub stays: usize,
}

fn representatives(label: &WalkLabel) -> Vec<Vec<usize>> {
    let mut reps = vec![label.seq.clone()];
    if label.undirected && !label.is_palindrome() {
        reps.push(label.seq.iter().rev().copied().collect());
    }
    reps
}

fn validate<G: WalkBase + ?Sized>(g: &G, length: usize, label: &WalkLabel) -> Result<WalkLabel> {
    if label.seq.len() != length + 1 {
        return Err(Error::NotAWalk(label.seq.clone()));
    }
    canonical_walk(&label.seq, g)
}

/// Routes from `u` to `v` in `S^ℓ(g)`. The labels may be given in either
/// orientation; they are canonicalized first.
pub fn route<G: WalkBase + ?Sized>(g: &G, length: usize, u: &WalkLabel, v: &WalkLabel) -> Result<RoutePath> {
    let u = validate(g, length, u)?;
    let v = validate(g, length, v)?;
    let mut combos = Vec::new();
    for ru in representatives(&u) {
        let dist = distances_from(g, ru[length])?;
        for rv in representatives(&v) {
            if let Some(p) = dist[rv[0]] {
                combos.push((p as usize, ru.clone(), rv, dist.clone()));
            }
        }
    }
    let p = combos
        .iter()
        .map(|c| c.0)
        .min()
        .ok_or(Error::NotStronglyConnected)?;

    let mut best: Option<RoutePath> = None;
    for (_, ru, rv, dist) in combos.iter().filter(|c| c.0 == p) {
        for path in shortest_paths(g, &dist_u32(dist), ru[length], rv[0]) {
            let mut seq = ru.clone();
            seq.extend_from_slice(&path[1..]);
            seq.extend_from_slice(&rv[1..]);
            let steps = seq
                .windows(length + 1)
                .map(|w| canonical_walk(w, g))
                .collect::<Result<Vec<_>>>()?;
            let stays = steps.windows(2).filter(|w| w[0] == w[1]).count();
            let candidate = RoutePath {
                length: steps.len() - 1,
                steps,
                p,
                stays,
            };
            if stays == 0 {
                return Ok(candidate);
            }
            if best.as_ref().is_none_or(|b| stays < b.stays) {
                best = Some(candidate);
            }
        }
    }
    Ok(best.expect("a reachable pair has a shortest path"))
}

fn dist_u32(dist: &[Option<u32>]) -> Vec<u32> {
    dist.iter().map(|d| d.unwrap_or(u32::MAX)).collect()
}

/// Up to [`PATH_CAP`] shortest paths from `a` to `b`, as vertex lists, given
/// distances from `a`.
fn shortest_paths<G: WalkBase + ?Sized>(g: &G, dist: &[u32], a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    let mut reversed = vec![b];
    collect_paths(g, dist, a, &mut reversed, &mut found);
    found
}

fn collect_paths<G: WalkBase + ?Sized>(
    g: &G,
    dist: &[u32],
    a: usize,
    reversed: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if found.len() >= PATH_CAP {
        return;
    }
    let cur = *reversed.last().expect("path is never empty");
    if cur == a {
        found.push(reversed.iter().rev().copied().collect());
        return;
    }
    for &w in g.predecessors(cur) {
        if dist[w] != u32::MAX && dist[w] + 1 == dist[cur] {
            reversed.push(w);
            collect_paths(g, dist, a, reversed, found);
            reversed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::MixedGraph;
    use crate::lineage::sequence_mixed_direct;

    fn label(seq: &[usize]) -> WalkLabel {
        WalkLabel::directed(seq.to_vec())
    }

    fn is_step(s: &MixedGraph, a: &WalkLabel, b: &WalkLabel) -> bool {
        let labels = s.labels().unwrap();
        let id = |l: &WalkLabel| labels.iter().position(|x| x == l).unwrap();
        let (x, y) = (id(a), id(b));
        s.is_arc(x, y) || s.neighbors(x).contains(&y)
    }

    #[test]
    fn pure_shift_when_walks_overlap() {
        let g = gen::kautz(2, 2).unwrap();
        let s = sequence_mixed_direct(&g, 2).unwrap();
        let labels = s.labels().unwrap();
        let u = &labels[0];
        let last = *u.seq.last().unwrap();
        let next = labels
            .iter()
            .find(|l| {
                l.seq[0] == last && canonical_walk(&[u.seq.clone(), l.seq[1..].to_vec()].concat(), &g).is_ok()
            })
            .unwrap();
        let path = route(&g, 2, u, next).unwrap();
        assert_eq!(path.p, 0);
        assert_eq!(path.length, 2);
    }

    #[test]
    fn k22_routes_are_short_and_valid() {
        let g = MixedGraph::build(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], &[]).unwrap();
        let s = sequence_mixed_direct(&g, 2).unwrap();
        let labels = s.labels().unwrap();
        for a in labels {
            for b in labels {
                let path = route(&g, 2, a, b).unwrap();
                assert_eq!(path.length, path.p + 2);
                assert!(path.length <= 4);
                for w in path.steps.windows(2) {
                    assert!(w[0] == w[1] || is_step(&s, &w[0], &w[1]));
                }
                assert_eq!(&path.steps[0], a);
                assert_eq!(path.steps.last().unwrap(), b);
            }
        }
    }

    #[test]
    fn invalid_labels() {
        let g = gen::cycle(4, true).unwrap();
        assert!(route(&g, 1, &label(&[0, 2]), &label(&[1, 2])).is_err());
        assert!(route(&g, 1, &label(&[0, 1, 2]), &label(&[1, 2])).is_err());
        let split = MixedGraph::build(4, &[(0, 1), (2, 3)], &[]).unwrap();
        assert_eq!(
            route(&split, 1, &label(&[0, 1]), &label(&[2, 3])),
            Err(Error::NotStronglyConnected)
        );
    }
}
