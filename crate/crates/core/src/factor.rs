//! Regular spanning subdigraphs (`r′`-factors) of regular digraphs.
//!
//! A `z`-regular digraph on `V` is a `z`-regular bipartite graph between an
//! out-copy and an in-copy of `V`, so it has a perfect matching, and removing
//! one leaves a `(z-1)`-regular bipartite graph. Peeling `r′` perfect
//! matchings therefore yields a spanning subdigraph in which every vertex has
//! exactly `r′` selected out-arcs and `r′` selected in-arcs.
//!
//! Matchings are found with augmenting paths (Kuhn's algorithm) after a
//! greedy pass. Vertices are processed in ascending id and neighbors tried in
//! ascending id, so the factor is a deterministic function of the input.

use crate::error::{Error, Result};
use crate::graph::{Digraph, WalkBase};

/// Arcs selected into an `r′`-factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorAssignment {
    /// Selected arcs, sorted.
    pub arcs: Vec<(usize, usize)>,
    pub r_prime: usize,
}

impl FactorAssignment {
    /// True when every vertex of `d` has exactly `r_prime` selected out-arcs
    /// and in-arcs and every selected arc belongs to `d`.
    pub fn is_factor_of(&self, d: &Digraph) -> bool {
        let mut out = vec![0usize; d.order()];
        let mut inn = vec![0usize; d.order()];
        for &(u, v) in &self.arcs {
            if !d.has_arc(u, v) {
                return false;
            }
            out[u] += 1;
            inn[v] += 1;
        }
        let mut sorted = self.arcs.clone();
        sorted.dedup();
        sorted.len() == self.arcs.len()
            && out.iter().chain(&inn).all(|&c| c == self.r_prime)
    }
}

const NONE: usize = usize::MAX;

/// Perfect matching between left vertices `0..n` and right vertices `0..n`,
/// where `adj[u]` lists the right neighbors of `u` in the order they should be
/// tried. Pairs in `fixed` are matched up front and never revised. Returns the
/// right partner of each left vertex, or `None` if no perfect matching
/// extends `fixed`.
pub(crate) fn perfect_matching(adj: &[Vec<usize>], fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut match_left = vec![NONE; n];
    let mut match_right = vec![NONE; n];
    let mut frozen_right = vec![false; n];
    for &(u, v) in fixed {
        if match_left[u] != NONE || match_right[v] != NONE {
            return None;
        }
        match_left[u] = v;
        match_right[v] = u;
        frozen_right[v] = true;
    }
    for u in 0..n {
        if match_left[u] != NONE {
            continue;
        }
        if let Some(&v) = adj[u].iter().find(|&&v| match_right[v] == NONE) {
            match_left[u] = v;
            match_right[v] = u;
        }
    }
    let mut stamp = vec![0usize; n];
    let mut round = 0;
    // (left vertex, next neighbor index, right vertex used to descend)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if match_left[root] != NONE {
            continue;
        }
        round += 1;
        stack.clear();
        stack.push((root, 0, NONE));
        let mut free_right = NONE;
        while let Some(top) = stack.last_mut() {
            let (u, next) = (top.0, top.1);
            if next == adj[u].len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let v = adj[u][next];
            if stamp[v] == round || frozen_right[v] {
                continue;
            }
            stamp[v] = round;
            top.2 = v;
            match match_right[v] {
                NONE => {
                    free_right = v;
                    break;
                }
                w => stack.push((w, 0, NONE)),
            }
        }
        if free_right == NONE {
            return None;
        }
        for &(u, _, v) in stack.iter().rev() {
            match_left[u] = v;
            match_right[v] = u;
        }
    }
    Some(match_left)
}

struct FlowEdge {
    to: usize,
    cap: u32,
}

/// Max-flow network (Dinic) for bipartite degree-constrained subgraphs.
struct Network {
    edges: Vec<FlowEdge>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            edges: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) -> usize {
        let id = self.edges.len();
        self.edges.push(FlowEdge { to, cap });
        self.edges.push(FlowEdge { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    fn levels(&self, source: usize) -> Vec<u32> {
        let mut level = vec![u32::MAX; self.out.len()];
        level[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let FlowEdge { to, cap } = self.edges[e];
                if cap > 0 && level[to] == u32::MAX {
                    level[to] = level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        level
    }

    /// Pushes one unit along a shortest augmenting path of the level graph.
    fn push_unit(&mut self, source: usize, sink: usize, level: &[u32], cursor: &mut [usize]) -> bool {
        let mut path: Vec<usize> = Vec::new();
        let mut u = source;
        loop {
            if u == sink {
                for &e in &path {
                    self.edges[e].cap -= 1;
                    self.edges[e ^ 1].cap += 1;
                }
                return true;
            }
            let mut advanced = false;
            while cursor[u] < self.out[u].len() {
                let e = self.out[u][cursor[u]];
                let FlowEdge { to, cap } = self.edges[e];
                if cap > 0 && level[to] == level[u] + 1 {
                    path.push(e);
                    u = to;
                    advanced = true;
                    break;
                }
                cursor[u] += 1;
            }
            if !advanced {
                match path.pop() {
                    Some(e) => {
                        u = self.edges[e ^ 1].to;
                        cursor[u] += 1;
                    }
                    None => return false,
                }
            }
        }
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let mut flow = 0;
        loop {
            let level = self.levels(source);
            if level[sink] == u32::MAX {
                return flow;
            }
            let mut cursor = vec![0; self.out.len()];
            while self.push_unit(source, sink, &level, &mut cursor) {
                flow += 1;
            }
        }
    }
}

/// A spanning subdigraph with exactly `k` out- and in-arcs at every vertex,
/// chosen among the arcs `u → adj[u]`, or `None` if there is none.
pub(crate) fn degree_factor(adj: &[Vec<usize>], k: usize) -> Option<Vec<(usize, usize)>> {
    let n = adj.len();
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut net = Network::new(2 * n + 2);
    for u in 0..n {
        net.add(source, u, k as u32);
        net.add(n + u, sink, k as u32);
    }
    let mut candidates = Vec::new();
    for (u, targets) in adj.iter().enumerate() {
        for &v in targets {
            candidates.push((net.add(u, n + v, 1), u, v));
        }
    }
    if net.max_flow(source, sink) != (n * k) as u64 {
        return None;
    }
    let mut arcs: Vec<(usize, usize)> = candidates
        .into_iter()
        .filter(|&(e, _, _)| net.edges[e].cap == 0)
        .map(|(_, u, v)| (u, v))
        .collect();
    arcs.sort_unstable();
    Some(arcs)
}

/// Extracts an `r′`-factor of a `z`-regular digraph, `1 ≤ r′ ≤ z`.
pub fn extract_factor(d: &Digraph, r_prime: usize) -> Result<FactorAssignment> {
    extract_factor_preferring(d, r_prime, &[])
}

/// Like [`extract_factor`], but first tries to place the arcs of `preferred`
/// (at most one out- and one in-arc per vertex) into the first matching. If
/// no perfect matching extends them, the preference is dropped.
pub fn extract_factor_preferring(
    d: &Digraph,
    r_prime: usize,
    preferred: &[(usize, usize)],
) -> Result<FactorAssignment> {
    let z = d
        .regularity()
        .ok_or_else(|| Error::Precondition("factor extraction needs a regular digraph".into()))?;
    if r_prime == 0 || r_prime > z {
        return Err(Error::InvalidParameters(format!(
            "factor degree {r_prime} outside 1..={z}"
        )));
    }
    let mut remaining: Vec<Vec<usize>> = (0..d.order()).map(|u| d.successors(u).to_vec()).collect();
    let mut arcs = Vec::with_capacity(d.order() * r_prime);
    for round in 0..r_prime {
        let matching = if round == 0 && !preferred.is_empty() {
            perfect_matching(&remaining, preferred).or_else(|| perfect_matching(&remaining, &[]))
        } else {
            perfect_matching(&remaining, &[])
        };
        let matching = matching.ok_or(Error::MatchingFailure {
            round: round as u32 + 1,
            target: r_prime as u32,
        })?;
        for (u, &v) in matching.iter().enumerate() {
            arcs.push((u, v));
            remaining[u].retain(|&w| w != v);
        }
    }
    arcs.sort_unstable();
    Ok(FactorAssignment { arcs, r_prime })
}
