//! The layer equality for face closures and the layer inequality behind the
//! lower bounds.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::curvature::kappa;
use crate::error::{Error, Result};
use crate::graph::ops::{face_closure, interior};
use crate::graph::walk::{boundary_walk, inner_boundary_walk};
use crate::graph::{PlaneGraph, Subgraph};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, Serialize)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropositionReport {
    pub hypotheses: Vec<Hypothesis>,
    pub applicable: bool,
    /// Degree shared by the new faces of S⁺, when it is shared.
    pub q: Option<u32>,
    /// |V(bS⁺)|
    pub lhs: i64,
    /// |bS| − 2q·κ(S) + 2q
    pub rhs: Option<ExactScalar>,
    pub equality: Option<bool>,
}

/// |V(bS⁺)| = |bS| − 2q·Σκ(v) + 2q under the four hypotheses, each reported.
pub fn proposition_check(g: &PlaneGraph, s: &Subgraph) -> Result<PropositionReport> {
    s.require_safe(g)?;
    let plus = face_closure(g, s)?;
    let mut hyps = Vec::new();

    let back = interior(g, &plus)?;
    let a = back.vertices == s.vertices && back.edges == s.edges && back.faces == s.faces;
    hyps.push(Hypothesis { name: "closure-interior", holds: a, detail: None });

    let walk = boundary_walk(g, s)?;
    let is_edge = s.vertices.len() == 2 && s.edges.len() == 1 && s.faces.is_empty();
    let b = is_edge || walk.is_simple_cycle();
    hyps.push(Hypothesis { name: "simple-boundary", holds: b, detail: None });

    let outer = boundary_walk(g, &plus)?;
    let inner = inner_boundary_walk(g, &plus)?;
    let same = |w: &crate::graph::BoundaryWalk| w.cycles.iter().flat_map(|c| c.darts.iter().copied()).collect::<BTreeSet<_>>();
    let c = outer.is_simple_cycle() && inner.is_simple_cycle() && same(&outer) == same(&inner);
    hyps.push(Hypothesis { name: "closure-boundary-simple", holds: c, detail: None });

    let new_degrees: BTreeSet<usize> = plus.faces.difference(&s.faces).map(|&f| g.face_degree(f)).collect();
    let q = (new_degrees.len() == 1).then(|| *new_degrees.iter().next().unwrap() as u32);
    let detail = (new_degrees.len() > 1).then(|| format!("new face degrees {new_degrees:?}"));
    hyps.push(Hypothesis { name: "uniform-new-faces", holds: q.is_some(), detail });

    let lhs = outer.vertex_set.len() as i64;
    let rhs = match q {
        Some(q) => {
            let two_q = ExactScalar::from_int(2 * q as i64);
            let k = kappa(g, s.vertices.iter().copied())?;
            Some(&(&ExactScalar::from_int(walk.length as i64) - &(&two_q * &k)) + &two_q)
        }
        None => None,
    };
    let applicable = hyps.iter().all(|h| h.holds);
    let equality = match (&rhs, applicable) {
        (Some(r), true) => Some(*r == ExactScalar::from_int(lhs)),
        _ => None,
    };
    Ok(PropositionReport { hypotheses: hyps, applicable, q, lhs, rhs, equality })
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub p: u32,
    pub q: u32,
    /// |V(b_iS)|
    pub lhs: i64,
    /// (pq − 2p − 2q)|V(S⁻)| + |V(bS⁻)| + 2q, or 2q − 1 in place of 2q when
    /// S⁻ is one vertex.
    pub rhs: i64,
    pub single_vertex_variant: bool,
    pub holds: bool,
}

/// |V(b_iS)| ≥ (pq−2p−2q)|V(S⁻)| + |V(bS⁻)| + 2q for connected S whose
/// complement is connected.
pub fn lemma_check(g: &PlaneGraph, s: &Subgraph, p: u32, q: u32) -> Result<LemmaReport> {
    s.require_safe(g)?;
    let comps = s.components(g);
    if comps.len() != 1 {
        return Err(Error::HypothesisViolation(format!("S has {} components", comps.len())));
    }
    let walk = boundary_walk(g, s)?;
    if walk.cycles.len() != 1 {
        return Err(Error::HypothesisViolation(format!(
            "complement of D(S) has {} components",
            walk.cycles.len()
        )));
    }
    let minus = interior(g, s)?;
    if minus.is_empty() {
        return Err(Error::HypothesisViolation("S⁻ is empty".into()));
    }
    let single = minus.vertices.len() == 1;
    let inner = inner_boundary_walk(g, s)?;
    let lhs = inner.vertex_set.len() as i64;
    let (p, q) = (p as i64, q as i64);
    let minus_boundary = boundary_walk(g, &minus)?.vertex_set.len() as i64;
    let rhs = (p * q - 2 * p - 2 * q) * minus.vertices.len() as i64 + minus_boundary + 2 * q - i64::from(single);
    Ok(LemmaReport { p: p as u32, q: q as u32, lhs, rhs, single_vertex_variant: single, holds: lhs >= rhs })
}
