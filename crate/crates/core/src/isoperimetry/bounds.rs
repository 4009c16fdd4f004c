//! Checking the sharp lower bounds by enumeration and the upper bounds by
//! quasi-ball witnesses.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::enumerate::{enumerate_connected, Roots, SetStats};
use super::{subgraph_ratios, IsoRatios, PhiValue, Ratio};
use crate::error::{Error, Result};
use crate::generators::degree_audit;
use crate::graph::ops::face_closure;
use crate::graph::{PlaneGraph, Subgraph, VertexId};
use crate::scalar::ExactScalar;

const CHECKED: [Ratio; 4] = [Ratio::EdgeVertex, Ratio::FaceBoundary, Ratio::EdgeSigma, Ratio::FaceSigma];

#[derive(Clone, Debug, Serialize)]
pub struct LowerCheck {
    pub ratio: Ratio,
    pub bound: Option<PhiValue>,
    pub minimum: Option<ExactScalar>,
    pub checked: u64,
    pub violations: u64,
    /// Sorted vertices of the first violating set found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<VertexId>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UpperWitness {
    pub height: usize,
    pub vertices: usize,
    pub ratios: IsoRatios,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub p1: u32,
    pub q1: u32,
    pub p2: u32,
    pub q2: u32,
    pub budget: usize,
    pub roots: Roots,
    pub lower: Vec<LowerCheck>,
    pub upper: Vec<UpperWitness>,
    /// Bounds for the four constants at (p₂,q₂), where defined.
    pub upper_targets: Vec<(Ratio, Option<PhiValue>)>,
    /// Last witness ratio minus the (p₂,q₂) bound, as floats.
    pub upper_gaps: Vec<(Ratio, Option<f64>)>,
    pub pass: bool,
}

#[derive(Clone, Default)]
struct Acc {
    checked: [u64; 4],
    violations: [u64; 4],
    min: [Option<(u64, u64)>; 4],
    witness: [Option<Vec<VertexId>>; 4],
}

/// Theorem-style sandwich for a host whose complete region has vertex degrees
/// in [p1,p2] and face degrees in [q1,q2].
///
/// Lower half: every connected induced set up to `budget` vertices against the
/// (p1,q1) constants, compared exactly. Upper half: quasi-balls around vertex 0
/// for every height that stays inside the complete region.
pub fn verify_bounds(g: &PlaneGraph, p1: u32, q1: u32, p2: u32, q2: u32, budget: usize) -> Result<BoundsReport> {
    let audit = degree_audit(g, (p1, p2), (q1, q2));
    if !audit.is_empty() {
        return Err(Error::DegreeAuditFailed(audit.join("; ")));
    }
    let bounds: Vec<Option<PhiValue>> = CHECKED.iter().map(|r| r.lower_bound(p1, q1)).collect();
    // √(a/b) as (a, b) so each set costs two 128-bit products.
    let squares: Vec<Option<(u128, u128)>> = bounds
        .iter()
        .map(|b| {
            b.as_ref().map(|x| {
                let a = x.square.numer().to_u128().expect("small bound");
                let b = x.square.denom().to_u128().expect("small bound");
                (a, b)
            })
        })
        .collect();
    let roots = if matches!(g.meta().kind.as_deref(), Some("regular")) { Roots::Single(0) } else { Roots::All };
    let acc = enumerate_connected(
        g,
        roots,
        budget,
        Acc::default,
        |acc: &mut Acc, s: &SetStats| {
            for (i, r) in CHECKED.iter().enumerate() {
                let Some((num, den)) = s.ratio_parts(*r) else { continue };
                acc.checked[i] += 1;
                let smaller = acc.min[i].map_or(true, |(n, d)| (num as u128) * (d as u128) < (n as u128) * (den as u128));
                if smaller {
                    acc.min[i] = Some((num, den));
                }
                if let Some((a, b)) = squares[i] {
                    // num/den ≥ √(a/b)  ⇔  b·num² ≥ a·den²
                    let (num, den) = (num as u128, den as u128);
                    if b * num * num < a * den * den {
                        acc.violations[i] += 1;
                        if acc.witness[i].is_none() {
                            acc.witness[i] = Some(s.sorted_vertices());
                        }
                    }
                }
            }
        },
        |mut a: Acc, mut b: Acc| {
            for i in 0..4 {
                a.checked[i] += b.checked[i];
                a.violations[i] += b.violations[i];
                a.min[i] = match (a.min[i], b.min[i]) {
                    (Some(x), Some(y)) => Some(if (y.0 as u128) * (x.1 as u128) < (x.0 as u128) * (y.1 as u128) { y } else { x }),
                    (x, None) => x,
                    (None, y) => y,
                };
                if a.witness[i].is_none() {
                    a.witness[i] = b.witness[i].take();
                }
            }
            a
        },
    )?;
    let lower: Vec<LowerCheck> = CHECKED
        .iter()
        .enumerate()
        .map(|(i, &r)| LowerCheck {
            ratio: r,
            bound: bounds[i].clone(),
            minimum: acc.min[i].map(|(n, d)| ExactScalar::ratio(n as i64, d as i64)),
            checked: acc.checked[i],
            violations: acc.violations[i],
            witness: acc.witness[i].clone(),
        })
        .collect();

    let upper = quasi_ball_witnesses(g, 0)?;
    let upper_targets: Vec<(Ratio, Option<PhiValue>)> = CHECKED.iter().map(|&r| (r, r.lower_bound(p2, q2))).collect();
    let upper_gaps = upper_targets
        .iter()
        .map(|(r, b)| {
            let gap = match (upper.last().and_then(|w| w.ratios.get(*r)), b) {
                (Some(x), Some(b)) => Some(x.to_f64() - b.approx),
                (Some(x), None) => Some(x.to_f64()),
                _ => None,
            };
            (*r, gap)
        })
        .collect();
    let pass = lower.iter().all(|l| l.violations == 0);
    Ok(BoundsReport { p1, q1, p2, q2, budget, roots, lower, upper, upper_targets, upper_gaps, pass })
}

/// Ratios of the quasi-balls 𝓑_N(v) for N = 1, 2, … while 𝓑_N lies in the
/// complete region.
pub fn quasi_ball_witnesses(g: &PlaneGraph, v: VertexId) -> Result<Vec<UpperWitness>> {
    let mut out = Vec::new();
    if !g.is_complete(v) {
        return Ok(out);
    }
    let mut cur = Subgraph::vertex(g, v);
    for height in 1.. {
        cur = match face_closure(g, &cur) {
            Ok(next) => next,
            Err(Error::UnsafeSubgraph(_)) => break,
            Err(e) => return Err(e),
        };
        if cur.require_safe(g).is_err() {
            break;
        }
        out.push(UpperWitness { height, vertices: cur.vertices.len(), ratios: subgraph_ratios(g, &cur)? });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{regular_patch_with_core, Core};

    #[test]
    fn heptagonal_lower_and_upper() {
        let g = regular_patch_with_core(7, 3, 7, Core::Vertex).unwrap();
        let r = verify_bounds(&g, 7, 3, 7, 3, 6).unwrap();
        assert!(r.pass);
        let seq: Vec<f64> = r.upper.iter().map(|w| w.ratios.i_face_sigma.as_ref().unwrap().to_f64()).collect();
        assert!(seq.windows(2).all(|w| w[1] < w[0]), "{seq:?}");
        assert!(seq.last().unwrap() > &(1.0 / (3.0 * 5f64.sqrt())));
    }

    #[test]
    fn audit_rejects_wrong_degrees() {
        let g = regular_patch_with_core(7, 3, 3, Core::Vertex).unwrap();
        assert!(matches!(verify_bounds(&g, 8, 3, 8, 3, 3), Err(Error::DegreeAuditFailed(_))));
    }
}
