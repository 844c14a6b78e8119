//! Moore bounds for mixed graphs.
//!
//! In a spanning tree rooted at a vertex of a mixed graph with maximum
//! undirected degree `r` and maximum out-degree `z`, let `R_i` count the
//! vertices at depth `i` reached from their parent through an edge and `Z_i`
//! those reached through an arc. Then
//!
//! ```text
//! R_i = (r - 1) R_{i-1} + r Z_{i-1}
//! Z_i =      z  R_{i-1} + z Z_{i-1}        (R_0, Z_0) = (0, 1)
//! ```
//!
//! and the Moore bound `M(r, z, k)` is `Σ_{i=0..k} (R_i + Z_i)`.
//! [`moore_layers`] iterates this recurrence in big integers and is the
//! reference; [`moore_bound_closed`] evaluates the eigenvalue closed form in
//! floating point as an independent check.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::metrics;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreLayer {
    /// Vertices reached through an edge.
    pub via_edge: BigUint,
    /// Vertices reached through an arc.
    pub via_arc: BigUint,
    /// `via_edge + via_arc`.
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MooreTable {
    pub r: u32,
    pub z: u32,
    pub k: u32,
    pub layers: Vec<MooreLayer>,
    pub total: BigUint,
    /// The closed form, when it is defined for `(r, z)`.
    pub closed_form: Option<f64>,
}

pub fn moore_layers(r: u32, z: u32, k: u32) -> Result<MooreTable> {
    if r == 0 && z == 0 {
        return Err(Error::InvalidParameters(
            "degrees r and z cannot both be zero".into(),
        ));
    }
    let r_minus_one = BigUint::from(r.saturating_sub(1));
    let r_big = BigUint::from(r);
    let z_big = BigUint::from(z);
    let mut via_edge = BigUint::zero();
    let mut via_arc = BigUint::from(1u32);
    let mut layers = Vec::with_capacity(k as usize + 1);
    let mut total = BigUint::zero();
    for i in 0..=k {
        if i > 0 {
            // with r = 0 the edge layer stays empty, so `r - 1` never matters
            let next_edge = &r_minus_one * &via_edge + &r_big * &via_arc;
            let next_arc = &z_big * (&via_edge + &via_arc);
            via_edge = next_edge;
            via_arc = next_arc;
        }
        let count = &via_edge + &via_arc;
        total += &count;
        layers.push(MooreLayer {
            via_edge: via_edge.clone(),
            via_arc: via_arc.clone(),
            count,
        });
    }
    Ok(MooreTable {
        r,
        z,
        k,
        layers,
        total,
        closed_form: moore_bound_closed(r, z, k).ok(),
    })
}

/// Exact Moore bound `M(r, z, k)`.
pub fn moore_bound(r: u32, z: u32, k: u32) -> Result<BigUint> {
    Ok(moore_layers(r, z, k)?.total)
}

/// Parameters of the closed form: `√v`, the eigenvalues `u1 < u2` of the
/// layer matrix and the weights `A`, `B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormTerms {
    pub sqrt_v: f64,
    pub u1: f64,
    pub u2: f64,
    pub a: f64,
    pub b: f64,
}

pub fn closed_form_terms(r: u32, z: u32) -> Result<ClosedFormTerms> {
    if r == 0 && z == 0 {
        return Err(Error::InvalidParameters(
            "degrees r and z cannot both be zero".into(),
        ));
    }
    if r + 2 * z == 2 {
        let reason = if r == 0 {
            "directed cycle (r = 0, z = 1)"
        } else {
            "undirected cycle (r = 2, z = 0)"
        };
        return Err(Error::ClosedFormUndefined { r, z, reason });
    }
    let (rf, zf) = (f64::from(r), f64::from(z));
    let v = (zf + rf).powi(2) + 2.0 * (zf - rf) + 1.0;
    if v <= 0.0 {
        return Err(Error::ClosedFormUndefined {
            r,
            z,
            reason: "repeated eigenvalue",
        });
    }
    let sqrt_v = v.sqrt();
    let s = zf + rf;
    Ok(ClosedFormTerms {
        sqrt_v,
        u1: 0.5 * (s - 1.0 - sqrt_v),
        u2: 0.5 * (s - 1.0 + sqrt_v),
        a: (sqrt_v - (s + 1.0)) / (2.0 * sqrt_v),
        b: (sqrt_v + (s + 1.0)) / (2.0 * sqrt_v),
    })
}

/// `A (u1^{k+1} - 1)/(u1 - 1) + B (u2^{k+1} - 1)/(u2 - 1)`.
///
/// Undefined when `r + 2z = 2` (a cycle, where 1 is an eigenvalue) and when
/// the two eigenvalues coincide (`r = 1, z = 0`).
pub fn moore_bound_closed(r: u32, z: u32, k: u32) -> Result<f64> {
    let t = closed_form_terms(r, z)?;
    let geometric = |u: f64| (u.powi(k as i32 + 1) - 1.0) / (u - 1.0);
    Ok(t.a * geometric(t.u1) + t.b * geometric(t.u2))
}

/// Outcome of comparing a graph's order with its Moore bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreClassification {
    pub r: u32,
    pub z: u32,
    pub diameter: u32,
    pub order: usize,
    pub bound: BigUint,
    /// `bound - order`.
    pub deficit: BigInt,
    pub verdict: MooreVerdict,
    /// The graph is a cycle (`r + 2z = 2`), which attains its bound trivially
    /// and for which the closed form is undefined.
    pub degenerate_cycle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MooreVerdict {
    Moore,
    AlmostMoore,
    Other,
}

/// Classifies a totally regular, strongly connected mixed graph as Moore
/// (deficit 0), almost Moore (deficit 1) or neither.
pub fn classify_moore(g: &MixedGraph) -> Result<MooreClassification> {
    let (r, z) = g.total_regularity().ok_or(Error::NotTotallyRegular)?;
    if r == 0 && z == 0 {
        return Err(Error::NotStronglyConnected);
    }
    let diameter = metrics::diameter(g).ok_or(Error::NotStronglyConnected)?;
    let (r, z) = (r as u32, z as u32);
    let bound = moore_bound(r, z, diameter)?;
    let deficit = BigInt::from(bound.clone()) - BigInt::from(g.order());
    let verdict = match deficit.to_i64() {
        Some(0) => MooreVerdict::Moore,
        Some(1) => MooreVerdict::AlmostMoore,
        _ => MooreVerdict::Other,
    };
    Ok(MooreClassification {
        r,
        z,
        diameter,
        order: g.order(),
        bound,
        deficit,
        verdict,
        degenerate_cycle: r + 2 * z == 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn reported_values() {
        assert_eq!(moore_bound(4, 4, 3).unwrap(), big(521));
        assert_eq!(moore_bound(4, 3, 3).unwrap(), big(344));
        assert_eq!(moore_bound(4, 3, 2).unwrap(), big(53));
        assert_eq!(moore_bound(3, 1, 2).unwrap(), big(18));
    }

    #[test]
    fn kautz_polynomial() {
        for d in 1u64..=10 {
            let poly = d.pow(4) + 5 * d.pow(3) + 7 * d * d + 4 * d + 2;
            assert_eq!(moore_bound(1, d as u32, 4).unwrap(), big(poly));
        }
    }

    #[test]
    fn table_invariants() {
        let t = moore_layers(3, 2, 4).unwrap();
        assert_eq!(t.layers[0].via_edge, big(0));
        assert_eq!(t.layers[0].via_arc, big(1));
        for w in t.layers.windows(2) {
            let (prev, cur) = (&w[0], &w[1]);
            assert_eq!(cur.via_edge, big(2) * &prev.via_edge + big(3) * &prev.via_arc);
            assert_eq!(cur.via_arc, big(2) * (&prev.via_edge + &prev.via_arc));
        }
        let sum: BigUint = t.layers.iter().map(|l| &l.count).sum();
        assert_eq!(sum, t.total);
    }

    #[test]
    fn directed_and_undirected_specializations() {
        for z in 2u32..=6 {
            for k in 1u32..=6 {
                let expected = (z.pow(k + 1) - 1) / (z - 1);
                assert_eq!(moore_bound(0, z, k).unwrap(), big(u64::from(expected)));
                let closed = moore_bound_closed(0, z, k).unwrap();
                assert!((closed - f64::from(expected)).abs() < 1e-6 * f64::from(expected));
            }
        }
        for r in 3u64..=7 {
            for k in 1u32..=6 {
                let expected = 1 + r * ((r - 1).pow(k) - 1) / (r - 2);
                assert_eq!(moore_bound(r as u32, 0, k).unwrap(), big(expected));
            }
        }
    }

    #[test]
    fn closed_form_domain() {
        assert!(matches!(
            moore_bound_closed(0, 1, 3),
            Err(Error::ClosedFormUndefined { .. })
        ));
        assert!(matches!(
            moore_bound_closed(2, 0, 3),
            Err(Error::ClosedFormUndefined { .. })
        ));
        assert!(moore_bound_closed(1, 0, 3).is_err());
        assert!((moore_bound_closed(4, 4, 3).unwrap() - 521.0).abs() < 1e-6);
        assert!(moore_layers(0, 0, 2).is_err());
        // cycles still have a recurrence value
        assert_eq!(moore_bound(0, 1, 2).unwrap(), big(3));
        assert_eq!(moore_bound(2, 0, 3).unwrap(), big(7));
    }

    #[test]
    fn eigenvalues_are_roots_of_characteristic_polynomial() {
        for r in 0u32..=8 {
            for z in 0u32..=8 {
                let Ok(t) = closed_form_terms(r, z) else { continue };
                let (a, b, c, d) = (f64::from(r) - 1.0, f64::from(r), f64::from(z), f64::from(z));
                for u in [t.u1, t.u2] {
                    let p = u * u - (a + d) * u + (a * d - b * c);
                    assert!(p.abs() < 1e-9, "r={r} z={z} u={u} p={p}");
                }
            }
        }
    }

    #[test]
    fn inverse_of_m_minus_identity() {
        for r in 0i64..=8 {
            for z in 0i64..=8 {
                let det = r + 2 * z - 2;
                if det == 0 {
                    continue;
                }
                let m = [[r - 2, r], [z, z - 1]];
                let inv = [[1 - z, r], [z, 2 - r]];
                for i in 0..2 {
                    for j in 0..2 {
                        let entry: Ratio<i64> = (0..2)
                            .map(|l| Ratio::new(m[i][l] * inv[l][j], det))
                            .sum();
                        let expected = Ratio::from_integer(i64::from(i == j));
                        assert_eq!(entry, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn bound_is_monotone() {
        for r in 0u32..=5 {
            for z in 0u32..=5 {
                if r + z < 2 {
                    continue;
                }
                for k in 1u32..=5 {
                    let m = moore_bound(r, z, k).unwrap();
                    assert!(moore_bound(r + 1, z, k).unwrap() > m);
                    assert!(moore_bound(r, z + 1, k).unwrap() > m);
                    assert!(moore_bound(r, z, k + 1).unwrap() > m);
                }
            }
        }
    }

    #[test]
    fn classify_directed_cycle() {
        let c = MixedGraph::build(3, &[], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let class = classify_moore(&c).unwrap();
        assert_eq!(class.verdict, MooreVerdict::Moore);
        assert!(class.degenerate_cycle);
        let k23 = MixedGraph::build(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], &[])
            .unwrap();
        assert_eq!(classify_moore(&k23), Err(Error::NotTotallyRegular));
    }
}
