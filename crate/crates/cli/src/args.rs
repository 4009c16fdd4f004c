use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Exact curvature, boundary walks and isoperimetry on planar tessellations.
///
/// The parsed command line doubles as the run configuration and is echoed in
/// every JSON report.
#[derive(Debug, Parser, Serialize)]
#[command(name = "tessera", version)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    /// Where a violating subgraph is written when a check fails.
    #[arg(long, global = true, default_value = "witness.json")]
    pub witness: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Build a patch and write it as a tessera-graph-v1 file.
    Generate(GenerateArgs),
    /// Ratios, curvature, walks and Gauss-Bonnet for one subgraph.
    Analyze(SubgraphTarget),
    /// Identities and bounds; a violation exits 1 and writes a witness.
    #[command(subcommand)]
    Verify(Verify),
    /// Exhaustive minima over connected sets.
    #[command(subcommand)]
    Search(Search),
    /// Quasi-balls, puffed balls, Weil equality graphs and transfers.
    #[command(subcommand)]
    Extremal(Extremal),
    /// Write a graph as DOT, SVG or JSON.
    Export(ExportArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct GenerateArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub height: usize,
    /// Upper vertex degree; a perturbed patch when above --p.
    #[arg(long)]
    pub p_max: Option<u32>,
    /// Upper face degree; a perturbed patch when above --q.
    #[arg(long)]
    pub q_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = CoreArg::Vertex)]
    pub core: CoreArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoreArg {
    Vertex,
    Edge,
    Face,
}

#[derive(Debug, Args, Serialize)]
pub struct GraphArg {
    /// tessera-graph-v1 file.
    #[arg(long)]
    pub graph: PathBuf,
}

/// How the subgraph is given: a file, an induced vertex list, or a quasi-ball
/// around vertex 0.
#[derive(Debug, Args, Serialize)]
pub struct SubgraphArg {
    #[arg(long, group = "sub")]
    pub subgraph: Option<PathBuf>,
    /// Comma-separated vertices of an induced subgraph.
    #[arg(long, group = "sub", value_delimiter = ',')]
    pub vertices: Option<Vec<usize>>,
    /// Quasi-ball of this height around a core at vertex 0.
    #[arg(long, group = "sub")]
    pub ball: Option<usize>,
    #[arg(long, value_enum, default_value_t = CoreArg::Vertex)]
    pub core: CoreArg,
}

#[derive(Debug, Args, Serialize)]
pub struct SubgraphTarget {
    #[command(flatten)]
    pub graph: GraphArg,
    #[command(flatten)]
    pub sub: SubgraphArg,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verify {
    /// Both Gauss-Bonnet identities on seeded random subgraphs, and
    /// optionally on every connected set through a root.
    GaussBonnet(GaussBonnetArgs),
    /// The inner vertex boundary inequality for one subgraph.
    Lemma(LemmaArgs),
    /// Weil bounds: one subgraph, a scan of connected sets, or the equality table.
    Weil(WeilArgs),
    /// The layer equality for the face closure of one subgraph.
    Proposition(SubgraphTarget),
    /// Lower bounds by enumeration and upper quasi-ball witnesses.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct GaussBonnetArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    /// Largest random subgraph, in vertices.
    #[arg(long, default_value_t = 40)]
    pub max_vertices: usize,
    /// Also check every connected set of at most this many vertices through --root.
    #[arg(long)]
    pub exhaustive: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub root: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct LemmaArgs {
    #[command(flatten)]
    pub target: SubgraphTarget,
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct WeilArgs {
    #[arg(long, requires = "n_max", conflicts_with = "graph")]
    pub q: Option<u32>,
    /// Equality table for 1 ≤ n ≤ n-max.
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[command(flatten)]
    pub sub: SubgraphArg,
    /// Scan connected induced sets up to this many vertices instead of one subgraph.
    #[arg(long, requires = "graph")]
    pub scan: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    #[arg(long)]
    pub p1: u32,
    #[arg(long)]
    pub q1: u32,
    #[arg(long)]
    pub p2: Option<u32>,
    #[arg(long)]
    pub q2: Option<u32>,
    #[arg(long, default_value_t = 8)]
    pub budget: usize,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Search {
    /// Smallest ratio over connected induced sets.
    MinRatio(MinRatioArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RatioArg {
    Edge,
    Face,
    EdgeSigma,
    FaceSigma,
    J0,
    J1,
}

#[derive(Debug, Args, Serialize)]
pub struct MinRatioArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    #[arg(long, value_enum, default_value_t = RatioArg::Edge)]
    pub ratio: RatioArg,
    #[arg(long, default_value_t = 7)]
    pub max_vertices: usize,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Extremal {
    /// 𝓑_n of a vertex, edge or face core in the (p,q) tiling.
    QuasiBall {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CoreArg::Vertex)]
        core: CoreArg,
    },
    /// 𝓟_n in the p-regular triangulation, with δ up to --deltas.
    PuffedBall {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deltas: Option<usize>,
    },
    /// A subgraph attaining the Weil bound, or why none exists.
    Weil {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u64,
    },
    /// Compare a triangulated disk with the puffed ball of the same size.
    Transfer {
        /// Triangulated disk; a random one from --seed when absent.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::T4)]
        mode: ModeArg,
    },
    /// j₁ ratios of quasi-balls in the p-regular triangulation.
    J1 {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 12)]
        height: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    T3,
    T4,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Dot,
    Svg,
    Json,
}

#[derive(Debug, Args, Serialize)]
pub struct ExportArgs {
    #[arg(value_enum)]
    pub format: Format,
    #[command(flatten)]
    pub graph: GraphArg,
    /// Highlight this subgraph in SVG output.
    #[command(flatten)]
    pub sub: SubgraphArg,
}
