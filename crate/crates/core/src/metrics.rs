//! Distances in mixed graphs: edges are traversed both ways, arcs forward only.
//!
//! Average distance follows the convention that includes the `n` zero terms
//! `dist(u, u)` and divides by `n²`. It is kept as an exact rational so strict
//! inequalities between averages can be checked without tolerance.

use std::collections::VecDeque;

use num_rational::Ratio;

use crate::error::Result;
use crate::graph::WalkBase;

/// Exact average distance.
pub type Average = Ratio<u64>;

/// Shortest-path lengths from one source; `None` marks unreachable vertices.
pub fn distances_from<G: WalkBase + ?Sized>(g: &G, source: usize) -> Result<Vec<Option<u32>>> {
    g.check_vertex(source)?;
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &v in g.successors(u) {
            if dist[v].is_none() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// Number of vertices at each distance from `source`.
pub fn layer_counts<G: WalkBase + ?Sized>(g: &G, source: usize) -> Result<Vec<u64>> {
    Ok(layers_of(&distances_from(g, source)?))
}

fn layers_of(dist: &[Option<u32>]) -> Vec<u64> {
    let mut layers = Vec::new();
    for d in dist.iter().flatten() {
        let d = *d as usize;
        if layers.len() <= d {
            layers.resize(d + 1, 0);
        }
        layers[d] += 1;
    }
    layers
}

/// All-pairs distance data of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    /// `dist[u][v]`, `None` when `v` is unreachable from `u`.
    pub dist: Vec<Vec<Option<u32>>>,
    /// Maximum distance; `None` unless the graph is strongly connected.
    pub diameter: Option<u32>,
    /// Average distance over all ordered pairs; `None` unless strongly connected.
    pub avg: Option<Average>,
    /// `layers[u][i]` is the number of vertices at distance `i` from `u`.
    pub layers: Vec<Vec<u64>>,
}

pub fn all_pairs<G: WalkBase + ?Sized>(g: &G) -> DistanceReport {
    let n = g.order();
    let dist: Vec<Vec<Option<u32>>> = (0..n)
        .map(|s| distances_from(g, s).expect("source in range"))
        .collect();
    let layers = dist.iter().map(|row| layers_of(row)).collect();
    let connected = dist.iter().all(|row| row.iter().all(Option::is_some));
    let (diameter, avg) = if connected && n > 0 {
        let diameter = dist.iter().flatten().flatten().copied().max();
        let total: u64 = dist.iter().flatten().flatten().map(|&d| u64::from(d)).sum();
        (diameter, Some(Ratio::new(total, (n * n) as u64)))
    } else {
        (None, None)
    };
    DistanceReport {
        dist,
        diameter,
        avg,
        layers,
    }
}

/// Diameter, average distance and the pooled distance distribution, without
/// materializing the distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSummary {
    pub order: usize,
    pub diameter: Option<u32>,
    pub avg: Option<Average>,
    /// Sum of `dist(u, v)` over reachable ordered pairs.
    pub total_distance: u64,
    /// Number of ordered pairs at each distance.
    pub pair_layers: Vec<u64>,
    pub strongly_connected: bool,
}

/// Computes a [`DistanceSummary`] with a word-parallel breadth-first search:
/// 64 sources advance together, one bit per source in each vertex's mask.
pub fn summary<G: WalkBase + ?Sized>(g: &G) -> DistanceSummary {
    let n = g.order();
    let mut pair_layers: Vec<u64> = Vec::new();
    let mut total_distance = 0u64;
    let mut reached_pairs = 0u64;
    let mut seen = vec![0u64; n];
    let mut frontier = vec![0u64; n];
    let mut next = vec![0u64; n];

    for batch_start in (0..n).step_by(64) {
        let batch = (n - batch_start).min(64);
        seen.fill(0);
        frontier.fill(0);
        for j in 0..batch {
            seen[batch_start + j] |= 1 << j;
            frontier[batch_start + j] |= 1 << j;
        }
        add_layer(&mut pair_layers, 0, batch as u64);
        reached_pairs += batch as u64;
        let mut level = 0u64;
        loop {
            level += 1;
            let mut found = 0u64;
            for v in 0..n {
                let mut incoming = 0u64;
                for &p in g.predecessors(v) {
                    incoming |= frontier[p];
                }
                let fresh = incoming & !seen[v];
                next[v] = fresh;
                seen[v] |= fresh;
                found += u64::from(fresh.count_ones());
            }
            if found == 0 {
                break;
            }
            add_layer(&mut pair_layers, level as usize, found);
            total_distance += level * found;
            reached_pairs += found;
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    let strongly_connected = n > 0 && reached_pairs == (n as u64) * (n as u64);
    let (diameter, avg) = if strongly_connected {
        (
            Some((pair_layers.len() - 1) as u32),
            Some(Ratio::new(total_distance, (n as u64) * (n as u64))),
        )
    } else {
        (None, None)
    };
    DistanceSummary {
        order: n,
        diameter,
        avg,
        total_distance,
        pair_layers,
        strongly_connected,
    }
}

fn add_layer(layers: &mut Vec<u64>, level: usize, count: u64) {
    if layers.len() <= level {
        layers.resize(level + 1, 0);
    }
    layers[level] += count;
}

/// Diameter of a graph, `None` when it is not strongly connected.
pub fn diameter<G: WalkBase + ?Sized>(g: &G) -> Option<u32> {
    summary(g).diameter
}
