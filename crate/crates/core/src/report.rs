//! Command dispatch and report documents.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::config::{ConfigError, JobConfig};
use crate::error::Error;
use crate::gkm::{self, Assumption3Report, ExtensionCheck};
use crate::kirwan::{kernel_spaces, QuotientPresentation};
use crate::lie::RootDatum;
use crate::poly::monomial_count;
use crate::rational::{format_q, Q};
use crate::schubert::{is_palindromic, Assumption1Report, MomentGraph, SchubertDatum};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Graph,
    Cohomology,
    Quotient,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Self::Validate => "validate",
            Self::Graph => "graph",
            Self::Cohomology => "cohomology",
            Self::Quotient => "quotient",
            Self::Report => "report",
        }
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "validate" => Ok(Self::Validate),
            "graph" => Ok(Self::Graph),
            "cohomology" => Ok(Self::Cohomology),
            "quotient" => Ok(Self::Quotient),
            "report" => Ok(Self::Report),
            other => Err(format!("unknown command {other:?}")),
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Library(#[from] Error),
}

impl RunError {
    /// 2 for bad input, 3 for a failed assumption, 4 for an internal
    /// inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => 2,
            Self::Library(Error::AssumptionFailed { .. }) => 3,
            Self::Library(Error::Inconsistency(_)) => 4,
            Self::Library(_) => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub document: serde_json::Value,
    pub text: String,
    pub dot: Option<String>,
    /// Names of assumptions that failed without aborting the command.
    pub failed_assumptions: Vec<String>,
}

impl CommandOutput {
    /// The machine-readable report, pretty-printed with a trailing newline.
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.document).expect("JSON values serialise");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed_assumptions.is_empty() {
            0
        } else {
            3
        }
    }
}

#[derive(Serialize)]
struct InputSection {
    #[serde(rename = "type")]
    root_type: String,
    rank: usize,
    lambda: Vec<i64>,
    lambda_root_coords: Vec<String>,
    w: Vec<usize>,
    a: Vec<i64>,
    r0: String,
    degree_bound: u32,
}

#[derive(Serialize)]
struct VertexDoc {
    id: String,
    weight_root_coords: Vec<String>,
    phi: String,
    valency: usize,
}

#[derive(Serialize)]
struct EdgeDoc {
    source: String,
    target: String,
    label: String,
    label_coords: Vec<i64>,
}

#[derive(Serialize)]
struct GraphSection {
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
    polytope_vertices: Vec<String>,
}

#[derive(Serialize)]
struct Assumption1Doc {
    passed: bool,
    regular: bool,
    injective: bool,
    monotone: bool,
    #[serde(flatten)]
    details: Assumption1Report,
    min_vertex: Option<String>,
    max_vertex: Option<String>,
}

#[derive(Serialize)]
struct ValencyDoc {
    vertex: String,
    valency: usize,
}

#[derive(Serialize)]
struct Assumption2Doc {
    heuristic_only: bool,
    complex_dim: usize,
    flagged_vertices: Vec<ValencyDoc>,
    poincare: Vec<usize>,
    palindromic: bool,
    note: &'static str,
}

#[derive(Serialize)]
struct LevelDoc {
    passed: bool,
    r0: String,
    min_phi: Option<String>,
    max_phi: Option<String>,
    failure: Option<String>,
}

#[derive(Serialize)]
struct ExtensionDoc {
    passed: bool,
    degree_bound: u32,
    cohomological_degree_bound: u32,
    per_degree: Vec<ExtensionCheck>,
    note: String,
}

#[derive(Serialize)]
struct ValidationSection {
    assumption1: Assumption1Doc,
    assumption2: Assumption2Doc,
    assumption3_level: LevelDoc,
    assumption3_extension: ExtensionDoc,
}

#[derive(Serialize)]
struct DimDoc {
    degree: u32,
    dim: usize,
    formality_expected: usize,
}

#[derive(Serialize)]
struct CohomologySection {
    degree_bound: u32,
    poincare: Vec<usize>,
    equivariant_t: Vec<DimDoc>,
    equivariant_s: Vec<DimDoc>,
}

#[derive(Serialize)]
struct BettiDoc {
    degree: u32,
    dim: usize,
}

#[derive(Serialize)]
struct KernelDoc {
    degree: u32,
    hs_dim: usize,
    k_minus_dim: usize,
    k_plus_dim: usize,
    intersection_dim: usize,
    kernel_dim: usize,
}

#[derive(Serialize)]
struct CosetDoc {
    degree: u32,
    index: usize,
    representative: Vec<String>,
}

#[derive(Serialize)]
struct ProductDoc {
    left: [usize; 2],
    right: [usize; 2],
    product: Option<Vec<String>>,
}

#[derive(Serialize)]
struct QuotientSection {
    degree_bound: u32,
    betti: Vec<BettiDoc>,
    kernels: Vec<KernelDoc>,
    basis_cosets: Vec<CosetDoc>,
    structure_constants: Vec<ProductDoc>,
    ring: Option<String>,
    assumption1_passed: bool,
    assumption3_level_passed: bool,
    assumption2_flagged_vertices: Vec<String>,
    assumption3_extension: String,
}

#[derive(Serialize, Default)]
struct Document {
    schema_version: u32,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<InputSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    validation: Option<ValidationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<GraphSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cohomology: Option<CohomologySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<QuotientSection>,
}

fn strings(v: &[Q]) -> Vec<String> {
    v.iter().map(format_q).collect()
}

/// Everything a command needs, built once from a configuration.
struct Job<'a> {
    config: &'a JobConfig,
    x: SchubertDatum,
    graph: MomentGraph,
    dmax: u32,
}

impl<'a> Job<'a> {
    fn new(config: &'a JobConfig, degree_override: Option<u32>) -> Result<Self, Error> {
        let datum = RootDatum::new(config.root_type, config.rank)?;
        let x = SchubertDatum::from_coordinates(datum, &config.lambda, &config.w)?;
        let graph = x.moment_graph(&config.a_vals)?;
        let dmax = degree_override.unwrap_or_else(|| config.effective_degree_bound());
        Ok(Self { config, x, graph, dmax })
    }

    fn id(&self, i: usize) -> String {
        self.graph.vertices()[i].rep.label()
    }

    fn input(&self) -> InputSection {
        InputSection {
            root_type: self.config.root_type.to_string(),
            rank: self.config.rank,
            lambda: self.config.lambda.clone(),
            lambda_root_coords: strings(self.x.lambda().root_coords()),
            w: self.x.w().word_one_based(),
            a: self.config.a_vals.clone(),
            r0: format_q(&self.config.r0),
            degree_bound: self.dmax,
        }
    }

    fn graph_section(&self) -> GraphSection {
        let g = &self.graph;
        GraphSection {
            vertices: (0..g.vertices().len())
                .map(|i| VertexDoc {
                    id: self.id(i),
                    weight_root_coords: strings(g.vertices()[i].weight.root_coords()),
                    phi: format_q(&g.vertices()[i].phi),
                    valency: g.valency(i),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    source: self.id(e.u),
                    target: self.id(e.v),
                    label: e.label.to_string(),
                    label_coords: e.label.coeffs().to_vec(),
                })
                .collect(),
            polytope_vertices: g.polytope_vertices().into_iter().map(|i| self.id(i)).collect(),
        }
    }

    fn extreme_vertices(&self) -> (Option<String>, Option<String>) {
        let phi = self.graph.phi_values();
        let argmin = (0..phi.len()).min_by(|&a, &b| phi[a].cmp(&phi[b]));
        let argmax = (0..phi.len()).max_by(|&a, &b| phi[a].cmp(&phi[b]));
        (argmin.map(|i| self.id(i)), argmax.map(|i| self.id(i)))
    }

    fn validation(&self) -> Result<(ValidationSection, Vec<String>), Error> {
        let a1 = self.x.validate_assumption1(&self.config.a_vals)?;
        let (min_vertex, max_vertex) = self.extreme_vertices();
        let poincare = self.x.poincare_polynomial()?;
        let level = self.graph.validate_r0(&self.config.r0);
        let extension = gkm::check_assumption3(&self.graph, &self.config.r0, self.dmax);

        let mut failed = Vec::new();
        if !a1.passed() {
            failed.push("1".to_string());
        }
        if !level.passed() {
            failed.push("3(i)".to_string());
        }
        if !extension.passed() {
            failed.push("3(ii)".to_string());
        }
        let section = ValidationSection {
            assumption1: Assumption1Doc {
                passed: a1.passed(),
                regular: a1.regular(),
                injective: a1.injective(),
                monotone: a1.monotone(),
                details: a1,
                min_vertex,
                max_vertex,
            },
            assumption2: Assumption2Doc {
                heuristic_only: true,
                complex_dim: self.x.complex_dim(),
                flagged_vertices: self
                    .graph
                    .valency_report(self.x.complex_dim())
                    .into_iter()
                    .map(|f| ValencyDoc { vertex: self.id(f.vertex), valency: f.valency })
                    .collect(),
                palindromic: is_palindromic(&poincare),
                poincare,
                note: "valency differing from the dimension marks candidate singular points; \
                       matching valencies do not prove smoothness",
            },
            assumption3_level: LevelDoc {
                passed: level.passed(),
                r0: format_q(&level.r0),
                min_phi: level.min.as_ref().map(format_q),
                max_phi: level.max.as_ref().map(format_q),
                failure: level.failure.clone(),
            },
            assumption3_extension: extension_doc(&extension),
        };
        Ok((section, failed))
    }

    fn cohomology(&self) -> Result<CohomologySection, Error> {
        let poincare = self.x.poincare_polynomial()?;
        let ht = gkm::ht_basis(&self.graph, self.dmax);
        gkm::hs_basis(&self.graph, &self.config.a_vals, 0)?;
        let hs = gkm::project_to_hs(&ht, &self.config.a_vals);
        let rank = self.x.datum().rank();
        let b = |e: usize| poincare.get(e).copied().unwrap_or(0);
        let mut t_dims = Vec::new();
        let mut s_dims = Vec::new();
        for (d, (t, s)) in ht.dims().into_iter().zip(hs.dims()).enumerate() {
            let t_expected: usize = (0..=d).map(|e| b(e) * monomial_count(rank, (d - e) as u32)).sum();
            let s_expected: usize = (0..=d).map(b).sum();
            if t != t_expected || s != s_expected {
                return Err(Error::Inconsistency(format!(
                    "degree {}: equivariant dimensions ({t}, {s}) disagree with the cell count ({t_expected}, {s_expected})",
                    2 * d
                )));
            }
            t_dims.push(DimDoc { degree: 2 * d as u32, dim: t, formality_expected: t_expected });
            s_dims.push(DimDoc { degree: 2 * d as u32, dim: s, formality_expected: s_expected });
        }
        Ok(CohomologySection { degree_bound: self.dmax, poincare, equivariant_t: t_dims, equivariant_s: s_dims })
    }

    fn quotient(&self) -> Result<(QuotientSection, Vec<String>), Error> {
        let r0 = &self.config.r0;
        let a_vals = &self.config.a_vals;
        let g = crate::kirwan::validated_graph(&self.x, a_vals, r0)?;
        let hs = gkm::hs_basis(&g, a_vals, self.dmax)?;
        let kernels = kernel_spaces(&hs, &g.phi_values(), r0);
        let presentation = QuotientPresentation::new(&hs, &kernels)?;
        let extension = gkm::check_assumption3(&g, r0, self.dmax);
        let mut failed = Vec::new();
        if !extension.passed() {
            failed.push("3(ii)".to_string());
        }
        let section = QuotientSection {
            degree_bound: self.dmax,
            betti: presentation
                .betti
                .iter()
                .enumerate()
                .map(|(d, &dim)| BettiDoc { degree: 2 * d as u32, dim })
                .collect(),
            kernels: kernels
                .pieces
                .iter()
                .zip(hs.pieces())
                .map(|(k, s)| KernelDoc {
                    degree: 2 * k.degree,
                    hs_dim: s.dim(),
                    k_minus_dim: k.minus.dim(),
                    k_plus_dim: k.plus.dim(),
                    intersection_dim: k.intersection_dim,
                    kernel_dim: k.sum.dim(),
                })
                .collect(),
            basis_cosets: presentation
                .basis_cosets
                .iter()
                .enumerate()
                .flat_map(|(d, reps)| {
                    reps.iter().enumerate().map(move |(i, r)| CosetDoc {
                        degree: 2 * d as u32,
                        index: i,
                        representative: strings(r),
                    })
                })
                .collect(),
            structure_constants: presentation
                .structure_constants
                .iter()
                .map(|s| ProductDoc {
                    left: [2 * s.left.degree as usize, s.left.index],
                    right: [2 * s.right.degree as usize, s.right.index],
                    product: s.product.as_deref().map(strings),
                })
                .collect(),
            ring: presentation.truncated_polynomial_height().map(|n| match n {
                1 => "Q".to_string(),
                n => format!("Q[u]/(u^{n}), deg u = 2"),
            }),
            assumption1_passed: true,
            assumption3_level_passed: true,
            assumption2_flagged_vertices: g
                .valency_report(self.x.complex_dim())
                .into_iter()
                .map(|f| self.id(f.vertex))
                .collect(),
            assumption3_extension: extension.summary(),
        };
        Ok((section, failed))
    }
}

fn extension_doc(report: &Assumption3Report) -> ExtensionDoc {
    ExtensionDoc {
        passed: report.passed(),
        degree_bound: report.degree_bound,
        cohomological_degree_bound: 2 * report.degree_bound,
        per_degree: report.per_degree.clone(),
        note: report.summary(),
    }
}

fn render_text(doc: &Document) -> String {
    let mut out = String::new();
    if let Some(input) = &doc.input {
        let _ = writeln!(
            out,
            "X(w) in {}{}: lambda = {:?} (fundamental), w = {:?}, a = {:?}, r0 = {}, degree bound {}",
            input.root_type, input.rank, input.lambda, input.w, input.a, input.r0, input.degree_bound
        );
    }
    if let Some(v) = &doc.validation {
        let verdict = |b: bool| if b { "pass" } else { "FAIL" };
        let a1 = &v.assumption1;
        let _ = writeln!(
            out,
            "assumption 1: {} (regular: {}, injective: {}, monotone: {})",
            verdict(a1.passed),
            a1.regular,
            a1.injective,
            a1.monotone
        );
        if let (Some(lo), Some(hi)) = (&a1.min_vertex, &a1.max_vertex) {
            let _ = writeln!(out, "  Phi_a minimal at {lo}, maximal at {hi}");
        }
        for f in a1.details.failures() {
            let _ = writeln!(out, "  {f}");
        }
        let a2 = &v.assumption2;
        let flagged: Vec<String> = a2
            .flagged_vertices
            .iter()
            .map(|f| format!("{} (valency {})", f.vertex, f.valency))
            .collect();
        let _ = writeln!(
            out,
            "assumption 2 (heuristic): dim {}, flagged [{}], Poincare {:?} {}",
            a2.complex_dim,
            flagged.join(", "),
            a2.poincare,
            if a2.palindromic { "palindromic" } else { "non-palindromic" }
        );
        let lvl = &v.assumption3_level;
        let _ = writeln!(out, "assumption 3(i): {}", verdict(lvl.passed));
        if let Some(f) = &lvl.failure {
            let _ = writeln!(out, "  {f}");
        }
        let ext = &v.assumption3_extension;
        let _ = writeln!(out, "assumption 3(ii): {} ({})", verdict(ext.passed), ext.note);
    }
    if let Some(g) = &doc.graph {
        let _ = writeln!(out, "moment graph: {} vertices, {} edges", g.vertices.len(), g.edges.len());
        for v in &g.vertices {
            let _ = writeln!(out, "  {} phi={} valency={}", v.id, v.phi, v.valency);
        }
        for e in &g.edges {
            let _ = writeln!(out, "  {} -- {} [{}]", e.source, e.target, e.label);
        }
        let _ = writeln!(out, "polytope vertices: {}", g.polytope_vertices.join(", "));
    }
    if let Some(c) = &doc.cohomology {
        let _ = writeln!(out, "Poincare polynomial of X: {:?}", c.poincare);
        let _ = writeln!(out, "degree  dim H_T  dim H_S");
        for (t, s) in c.equivariant_t.iter().zip(&c.equivariant_s) {
            let _ = writeln!(out, "{:>6}  {:>7}  {:>7}", t.degree, t.dim, s.dim);
        }
    }
    if let Some(qs) = &doc.quotient {
        let betti: Vec<usize> = qs.betti.iter().map(|b| b.dim).collect();
        let _ = writeln!(out, "quotient Betti numbers (degrees 0..{}): {:?}", 2 * qs.degree_bound, betti);
        for c in &qs.basis_cosets {
            let _ = writeln!(out, "  basis coset x[{},{}] = ({}) nu^{}", c.degree, c.index, c.representative.join(", "), c.degree / 2);
        }
        for s in &qs.structure_constants {
            if s.left > s.right || s.left[0] == 0 {
                continue;
            }
            let rhs = match &s.product {
                None => "unavailable (beyond degree bound)".to_string(),
                Some(p) if p.iter().all(|x| x.starts_with("0/")) => "0".to_string(),
                Some(p) => {
                    let d = s.left[0] + s.right[0];
                    p.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.starts_with("0/"))
                        .map(|(i, x)| format!("{x}*x[{d},{i}]"))
                        .collect::<Vec<_>>()
                        .join(" + ")
                }
            };
            let _ = writeln!(out, "  x[{},{}] * x[{},{}] = {rhs}", s.left[0], s.left[1], s.right[0], s.right[1]);
        }
        if let Some(ring) = &qs.ring {
            let _ = writeln!(out, "ring: {ring}");
        }
        let _ = writeln!(out, "assumption 3(ii): {}", qs.assumption3_extension);
    }
    out
}

/// Runs one command on a parsed configuration. `degree_override` replaces
/// the configured degree bound.
pub fn run_command(
    command: Command,
    config: &JobConfig,
    degree_override: Option<u32>,
) -> Result<CommandOutput, RunError> {
    let job = Job::new(config, degree_override)?;
    let mut doc = Document { schema_version: REPORT_SCHEMA_VERSION, command: command.name(), ..Default::default() };
    doc.input = Some(job.input());
    let mut failed = Vec::new();
    let mut dot = None;
    match command {
        Command::Validate => {
            let (v, f) = job.validation()?;
            doc.validation = Some(v);
            failed = f;
        }
        Command::Graph => {
            doc.graph = Some(job.graph_section());
            dot = Some(job.graph.to_dot());
        }
        Command::Cohomology => {
            doc.cohomology = Some(job.cohomology()?);
        }
        Command::Quotient => {
            let (q, f) = job.quotient()?;
            doc.quotient = Some(q);
            failed = f;
        }
        Command::Report => {
            let (v, f) = job.validation()?;
            doc.validation = Some(v);
            failed = f;
            doc.graph = Some(job.graph_section());
            dot = Some(job.graph.to_dot());
            doc.cohomology = Some(job.cohomology()?);
            if !failed.iter().any(|a| a == "1" || a == "3(i)") {
                doc.quotient = Some(job.quotient()?.0);
            }
        }
    }
    let text = render_text(&doc);
    let document = serde_json::to_value(&doc).map_err(|e| Error::Inconsistency(e.to_string()))?;
    Ok(CommandOutput { document, text, dot, failed_assumptions: failed })
}
