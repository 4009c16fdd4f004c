use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use tessera::curvature::{exhaustive_gauss_bonnet, sampled_gauss_bonnet};
use tessera::extremal::{
    delta_sequence, equality_admissible, equality_subgraph, lemma_check, proposition_check, puffed_ball,
    random_triangulation, transfer_triangulation, triangulation_j1_bounds, weil_bound, weil_scan, weil_verify,
    EqualityOutcome, TransferMode,
};
use tessera::generators::{build_patch, regular_patch_with_core, Core};
use tessera::graph::io::{graph_from_json, graph_to_json, SubgraphFile};
use tessera::graph::ops::{euler_characteristics, interior_and_depth, quasi_ball};
use tessera::isoperimetry::{brute_force_min_ratio, verify_bounds};
use tessera::{
    boundary_walk, gauss_bonnet_check, inner_boundary_walk, kappa, subgraph_ratios, BoundaryWalk, GbVariant,
    PatchSpec, PlaneGraph, Ratio, Subgraph,
};

use crate::args::*;
use crate::render;

#[derive(Debug)]
pub enum CliError {
    Core(tessera::Error),
    Io(String),
    Json(String),
    Usage(String),
}

impl CliError {
    pub fn record(&self) -> Value {
        let (kind, message) = match self {
            CliError::Core(e) => {
                let name = format!("{e:?}");
                let kind = name.split(['(', ' ']).next().unwrap_or("Core").to_string();
                (kind, e.to_string())
            }
            CliError::Io(m) => ("Io".into(), m.clone()),
            CliError::Json(m) => ("Json".into(), m.clone()),
            CliError::Usage(m) => ("Usage".into(), m.clone()),
        };
        json!({ "error": kind, "message": message })
    }
}

impl From<tessera::Error> for CliError {
    fn from(e: tessera::Error) -> Self {
        CliError::Core(e)
    }
}

type Res<T> = Result<T, CliError>;

/// What a command produced: a JSON report, or raw text for `generate` and
/// `export`.
pub enum Output {
    Report { report: Value, pass: bool, witness: Option<Value> },
    Raw(String),
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Res<PlaneGraph> {
    Ok(graph_from_json(&read(path)?)?)
}

fn core_at_zero(g: &PlaneGraph, core: CoreArg) -> Subgraph {
    let d = g.rotation(0)[0];
    match core {
        CoreArg::Vertex => Subgraph::vertex(g, 0),
        CoreArg::Edge => Subgraph::edge(g, g.edge_of(d)),
        CoreArg::Face => Subgraph::face_graph(g, [g.face_of(d)]),
    }
}

fn load_subgraph(g: &PlaneGraph, a: &SubgraphArg) -> Res<Option<Subgraph>> {
    if let Some(path) = &a.subgraph {
        let file: SubgraphFile = serde_json::from_str(&read(path)?).map_err(|e| CliError::Json(e.to_string()))?;
        return Ok(Some(file.resolve(g)?));
    }
    if let Some(vs) = &a.vertices {
        return Ok(Some(Subgraph::induced(g, vs.iter().copied())?));
    }
    if let Some(n) = a.ball {
        if g.n_vertices() == 0 {
            return Err(CliError::Usage("empty graph".into()));
        }
        return Ok(Some(quasi_ball(g, &core_at_zero(g, a.core), n)?));
    }
    Ok(None)
}

fn require_subgraph(g: &PlaneGraph, a: &SubgraphArg) -> Res<Subgraph> {
    load_subgraph(g, a)?.ok_or_else(|| CliError::Usage("give one of --subgraph, --vertices or --ball".into()))
}

fn subgraph_value(g: &PlaneGraph, s: &Subgraph) -> Value {
    to_value(&SubgraphFile::from_subgraph(g, s))
}

fn walk_summary(w: &BoundaryWalk) -> Value {
    json!({
        "length": w.length,
        "cycles": w.cycles.iter().map(|c| c.len()).collect::<Vec<_>>(),
        "vertices": w.vertex_set.len(),
        "simple_cycle": w.is_simple_cycle(),
    })
}

fn report(report: Value, pass: bool, witness: Option<Value>) -> Output {
    Output::Report { report, pass, witness }
}

pub fn run(cli: &Cli) -> Res<Output> {
    match &cli.command {
        Command::Generate(a) => generate(a, cli.seed),
        Command::Analyze(t) => analyze(t),
        Command::Verify(v) => verify(v, cli.seed),
        Command::Search(Search::MinRatio(a)) => {
            let g = load_graph(&a.graph.graph)?;
            let ratio = match a.ratio {
                RatioArg::Edge => Ratio::EdgeVertex,
                RatioArg::Face => Ratio::FaceBoundary,
                RatioArg::EdgeSigma => Ratio::EdgeSigma,
                RatioArg::FaceSigma => Ratio::FaceSigma,
                RatioArg::J0 => Ratio::J0,
                RatioArg::J1 => Ratio::J1,
            };
            let m = brute_force_min_ratio(&g, a.max_vertices, ratio)?;
            Ok(report(to_value(&m), true, None))
        }
        Command::Extremal(e) => extremal(e, cli.seed),
        Command::Export(a) => {
            let g = load_graph(&a.graph.graph)?;
            let text = match a.format {
                Format::Json => graph_to_json(&g),
                Format::Dot => render::dot(&g),
                Format::Svg => render::svg(&g, load_subgraph(&g, &a.sub)?.as_ref()),
            };
            Ok(Output::Raw(text))
        }
    }
}

fn generate(a: &GenerateArgs, seed: u64) -> Res<Output> {
    let core = match a.core {
        CoreArg::Vertex => Core::Vertex,
        CoreArg::Face => Core::Face,
        CoreArg::Edge => return Err(CliError::Usage("patches grow from a vertex or a face".into())),
    };
    let (p_max, q_max) = (a.p_max.unwrap_or(a.p), a.q_max.unwrap_or(a.q));
    let g = if (p_max, q_max) == (a.p, a.q) {
        regular_patch_with_core(a.p, a.q, a.height, core)?
    } else {
        let mut spec = PatchSpec::perturbed((a.p, p_max), (a.q, q_max), a.height, seed);
        spec.core = core;
        build_patch(&spec)?
    };
    Ok(Output::Raw(graph_to_json(&g)))
}

fn analyze(t: &SubgraphTarget) -> Res<Output> {
    let g = load_graph(&t.graph.graph)?;
    let s = require_subgraph(&g, &t.sub)?;
    s.require_safe(&g)?;
    let gb: Vec<Value> = [GbVariant::I, GbVariant::II]
        .iter()
        .map(|&v| gauss_bonnet_check(&g, &s, v).map(|r| to_value(&r)))
        .collect::<Result<_, _>>()?;
    let (chi, chi_interior) = euler_characteristics(&g, &s)?;
    let (minus, depth) = interior_and_depth(&g, &s)?;
    let pass = gb.iter().all(|r| r["pass"] == json!(true));
    let out = json!({
        "vertices": s.vertices.len(),
        "edges": s.edges.len(),
        "faces": s.faces.len(),
        "kappa": kappa(&g, s.vertices.iter().copied())?.to_string(),
        "boundary": walk_summary(&boundary_walk(&g, &s)?),
        "inner_boundary": walk_summary(&inner_boundary_walk(&g, &s)?),
        "euler": { "subgraph": chi, "interior": chi_interior },
        "interior_vertices": minus.vertices.len(),
        "depth": depth,
        "ratios": if s.vertices.is_empty() { Value::Null } else { to_value(&subgraph_ratios(&g, &s)?) },
        "gauss_bonnet": gb,
    });
    let witness = (!pass).then(|| subgraph_value(&g, &s));
    Ok(report(out, pass, witness))
}

fn verify(v: &Verify, seed: u64) -> Res<Output> {
    match v {
        Verify::GaussBonnet(a) => {
            let g = load_graph(&a.graph.graph)?;
            let sampled = sampled_gauss_bonnet(&g, a.samples, seed, a.max_vertices)?;
            let exhaustive = a.exhaustive.map(|k| exhaustive_gauss_bonnet(&g, a.root, k)).transpose()?;
            let pass = sampled.failures == 0 && exhaustive.as_ref().map_or(true, |e| e.pass());
            let witness = sampled
                .witness
                .clone()
                .or_else(|| exhaustive.as_ref().and_then(|e| e.witness.clone()))
                .map(|vs| json!({ "vertices": vs }));
            Ok(report(json!({ "sampled": sampled, "exhaustive": exhaustive }), pass, witness))
        }
        Verify::Lemma(a) => {
            let g = load_graph(&a.target.graph.graph)?;
            let s = require_subgraph(&g, &a.target.sub)?;
            let r = lemma_check(&g, &s, a.p, a.q)?;
            let witness = (!r.holds).then(|| subgraph_value(&g, &s));
            Ok(report(to_value(&r), r.holds, witness))
        }
        Verify::Weil(a) => verify_weil(a),
        Verify::Proposition(t) => {
            let g = load_graph(&t.graph.graph)?;
            let s = require_subgraph(&g, &t.sub)?;
            let r = proposition_check(&g, &s)?;
            let pass = r.equality != Some(false);
            let witness = (!pass).then(|| subgraph_value(&g, &s));
            Ok(report(to_value(&r), pass, witness))
        }
        Verify::Bounds(a) => {
            let g = load_graph(&a.graph.graph)?;
            let (p2, q2) = (a.p2.unwrap_or(a.p1), a.q2.unwrap_or(a.q1));
            let r = verify_bounds(&g, a.p1, a.q1, p2, q2, a.budget)?;
            let witness = r.lower.iter().find_map(|l| l.witness.clone()).map(|vs| json!({ "vertices": vs }));
            Ok(report(to_value(&r), r.pass, witness))
        }
    }
}

fn verify_weil(a: &WeilArgs) -> Res<Output> {
    if let (Some(q), Some(n_max)) = (a.q, a.n_max) {
        let mut rows = Vec::new();
        let mut pass = true;
        for n in 1..=n_max {
            let admissible = equality_admissible(q, n)?.is_ok();
            let row = match equality_subgraph(q, n)? {
                EqualityOutcome::Witness { core, height, report, .. } => {
                    pass &= admissible && report.equality;
                    json!({ "n": n, "bound": report.bound, "outcome": "witness", "core": core, "height": height, "vertices": report.observed })
                }
                EqualityOutcome::Impossible { reason } => {
                    pass &= !admissible;
                    json!({ "n": n, "bound": weil_bound(q, n)?, "outcome": "impossible", "reason": reason })
                }
            };
            rows.push(row);
        }
        return Ok(report(json!({ "q": q, "table": rows }), pass, None));
    }
    let Some(path) = &a.graph else {
        return Err(CliError::Usage("give --q with --n-max, or --graph".into()));
    };
    let g = load_graph(path)?;
    if let Some(budget) = a.scan {
        let s = weil_scan(&g, budget, u64::MAX)?;
        let witness = s.witness.clone().map(|vs| json!({ "vertices": vs }));
        return Ok(report(to_value(&s), s.violations == 0, witness));
    }
    let s = require_subgraph(&g, &a.sub)?;
    let r = weil_verify(&g, &s)?;
    let witness = (!r.holds).then(|| subgraph_value(&g, &s));
    Ok(report(to_value(&r), r.holds, witness))
}

fn extremal(e: &Extremal, seed: u64) -> Res<Output> {
    match *e {
        Extremal::QuasiBall { p, q, n, core } => {
            let mut height = n + 2;
            loop {
                let g = regular_patch_with_core(p, q, height, Core::Vertex)?;
                match quasi_ball(&g, &core_at_zero(&g, core), n).and_then(|b| {
                    b.require_safe(&g)?;
                    Ok(b)
                }) {
                    Ok(b) => {
                        let walk = boundary_walk(&g, &b)?;
                        let out = json!({
                            "vertices": b.vertices.len(),
                            "edges": b.edges.len(),
                            "faces": b.faces.len(),
                            "boundary": walk_summary(&walk),
                            "ratios": subgraph_ratios(&g, &b)?,
                            "patch_height": height,
                        });
                        return Ok(report(out, true, None));
                    }
                    Err(tessera::Error::UnsafeSubgraph(_)) if height < n + 6 => height += 1,
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Extremal::PuffedBall { p, n, deltas } => {
            let b = puffed_ball(p, n)?;
            let d = deltas.map(|m| delta_sequence(p, m)).transpose()?;
            let pass = d.as_ref().map_or(true, |d| d.pass);
            // First window of p+1 consecutive δ_n, n ≥ 2, without a 1.
            let witness = d.as_ref().filter(|d| !d.pass).map(|d| {
                let w = p as usize + 1;
                let start = d.deltas.get(1..).and_then(|t| t.windows(w).position(|win| !win.contains(&1)));
                json!({ "p": p, "first_delta": start.map(|i| i + 2), "window": w })
            });
            let out = json!({ "ball": b, "deltas": d });
            Ok(report(out, pass, witness))
        }
        Extremal::Weil { q, n } => Ok(report(to_value(&equality_subgraph(q, n)?), true, None)),
        Extremal::Transfer { ref graph, p, mode } => {
            let t = match graph {
                Some(path) => load_graph(path)?,
                None => random_triangulation(p, seed)?,
            };
            let mode = match mode {
                ModeArg::T3 => TransferMode::T3,
                ModeArg::T4 => TransferMode::T4,
            };
            let r = transfer_triangulation(&t, p, mode)?;
            let witness = (!r.holds).then(|| json!({ "triangulation": serde_json::from_str::<Value>(&graph_to_json(&t)).ok() }));
            Ok(report(to_value(&r), r.holds, witness))
        }
        Extremal::J1 { p, height } => {
            // Small hosts suffice: heights past the safe region follow the layer equality.
            let h = match p {
                0..=7 => 8,
                8 => 7,
                _ => 6,
            }
            .min(height + 1);
            let g = regular_patch_with_core(p, 3, h, Core::Vertex)?;
            let r = triangulation_j1_bounds(&g, p, height)?;
            Ok(report(to_value(&r), r.pass, None))
        }
    }
}
