//! Order and degree profile of sequence mixed graphs of totally regular graphs.
//!
//! For an `(r, z)`-regular mixed graph on `n` vertices, the `ℓ`-walks split
//! into `V₁` (only edges) and `V₂` (at least one arc):
//!
//! * `|V₁| = n r^ℓ / 2` for odd `ℓ` and `n (r^ℓ + r^{ℓ/2}) / 2` for even `ℓ`,
//!   the extra term counting the palindromic walks, which are their own
//!   conjugates;
//! * `|V₂| = n ((r + z)^ℓ - r^ℓ)`, and every `V₂` vertex has undirected
//!   degree 0 and in- and out-degree `r + z`;
//! * the order of `S^ℓ(G)` is `|V₁| + |V₂|`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::graph::{DegreeTriple, MixedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusPrediction {
    pub v1: BigUint,
    pub v2: BigUint,
    pub n_total: BigUint,
    /// Maximum undirected degree.
    pub delta: u64,
    /// Maximum directed in- and out-degree.
    pub delta_star: u64,
}

pub fn predict_census(n: u64, r: u64, z: u64, length: u32) -> Result<CensusPrediction> {
    if n == 0 || length == 0 {
        return Err(Error::InvalidParameters(
            "order and walk length must be positive".into(),
        ));
    }
    if r == 0 && z == 0 {
        return Err(Error::InvalidParameters(
            "degrees r and z cannot both be zero".into(),
        ));
    }
    let nb = BigUint::from(n);
    let rb = BigUint::from(r);
    let undirected_walks = &nb * Pow::pow(&rb, length);
    let v1 = if length % 2 == 1 {
        undirected_walks.clone() / 2u32
    } else {
        (&undirected_walks + &nb * Pow::pow(&rb, length / 2)) / 2u32
    };
    let v2 = &nb * Pow::pow(BigUint::from(r + z), length) - undirected_walks;
    let n_total = &v1 + &v2;

    let (delta, v1_star) = if r == 1 && length.is_multiple_of(2) {
        (1, z)
    } else if length == 1 {
        ((2 * r).saturating_sub(2), 2 * z)
    } else {
        (2 * r, 2 * z)
    };
    let v2_star = if v2 > BigUint::from(0u32) { r + z } else { 0 };
    Ok(CensusPrediction {
        v1,
        v2,
        n_total,
        delta,
        delta_star: v1_star.max(v2_star),
    })
}

/// Measured partition and degrees of a labeled sequence mixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusMeasurement {
    pub v1: u64,
    pub v2: u64,
    pub total: u64,
    /// Self-conjugate (palindromic) `V₁` vertices.
    pub palindromes: u64,
    pub max_undirected: usize,
    pub max_out: usize,
    pub max_in: usize,
    /// Degree histograms of `V₁` and `V₂`.
    pub v1_degrees: BTreeMap<DegreeTriple, u64>,
    pub v2_degrees: BTreeMap<DegreeTriple, u64>,
}

pub fn measure_census(s: &MixedGraph) -> Result<CensusMeasurement> {
    let labels = s.labels().ok_or(Error::MissingLabels)?;
    let mut m = CensusMeasurement {
        v1: 0,
        v2: 0,
        total: s.order() as u64,
        palindromes: 0,
        max_undirected: 0,
        max_out: 0,
        max_in: 0,
        v1_degrees: BTreeMap::new(),
        v2_degrees: BTreeMap::new(),
    };
    for (label, deg) in labels.iter().zip(s.degree_sequence()) {
        if label.undirected {
            m.v1 += 1;
            m.palindromes += u64::from(label.is_palindrome());
            *m.v1_degrees.entry(deg).or_default() += 1;
        } else {
            m.v2 += 1;
            *m.v2_degrees.entry(deg).or_default() += 1;
        }
        m.max_undirected = m.max_undirected.max(deg.undirected);
        m.max_out = m.max_out.max(deg.out);
        m.max_in = m.max_in.max(deg.inn);
    }
    Ok(m)
}
