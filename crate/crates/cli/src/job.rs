//! Command definitions and the manifest each command produces.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glmix::models::{self, ModelForm, ModelKind, NReading};
use glmix::reps::{build_gl_np1, check_canonical, gl2_irrep, GeneratorSet, GlMatrixRep, RepSpec};
use glmix::repspace::{calogero_grade, gl3_space, hexagon_audit, total_grade};
use glmix::verify::{self, IdentitySummary};
use glmix::{Bindings, Coeff, MatrixDiffOp, Param, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dto::{OperatorDto, SpinorDto};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug, Clone)]
#[command(name = "glmix", version, about = "Exact mixed representations of gl(n+1) and matrix Calogero/Sutherland operators")]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,
    /// Write the result here instead of stdout.
    #[arg(long = "out", global = true)]
    pub out_path: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print the generators of a representation.
    Gens(RepArgs),
    /// Check every commutator against the gl(n+1) structure constants.
    Check(RepArgs),
    /// Casimir operators and their closed forms.
    Casimir(RepArgs),
    /// Quadratic relations Art.1..Art.9 and the Art.5+6+7 dependency.
    Relations(RelationArgs),
    /// Finite-dimensional representation space of [k, d-1].
    Space(SpaceArgs),
    /// Build a model operator, optionally checking it against another form.
    Model(ModelArgs),
    /// Exact spectrum of a model on its invariant space.
    Spectrum(SpectrumArgs),
}

#[derive(Args, Debug, Clone)]
pub struct RepArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Size of the gl_n matrix block.
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// Integer value of k; symbolic when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct RelationArgs {
    /// Block sizes, comma separated; the dependency is solved jointly.
    #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2, 3])]
    pub d: Vec<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradingArg {
    Total,
    Calogero,
}

#[derive(Args, Debug, Clone)]
pub struct SpaceArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long, value_enum, default_value_t = GradingArg::Total)]
    pub grading: GradingArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelArg {
    Calogero,
    Sutherland,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormArg {
    Differential,
    #[value(alias = "liealgebraic")]
    Lie,
    Matrix,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingArg {
    /// n = d - 1
    Young,
    /// n = d
    Size,
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long, value_enum, default_value_t = FormArg::Lie)]
    pub form: FormArg,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// Reading of n in the expanded matrix form.
    #[arg(long, value_enum, default_value_t = ReadingArg::Young)]
    pub reading: ReadingArg,
    /// Compare with the differential form (d = 1) or the lie-algebraic form (matrix).
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long)]
    pub k: u32,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Compare with the scalar spectrum
    #[arg(long)]
    pub compare: bool,
    /// Degree cap of the scalar space used by --compare (default k + d)
    #[arg(long)]
    pub scalar_k: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Human-readable pieces of a manifest, used by the text and LaTeX emitters.
#[derive(Clone, Debug)]
pub enum Item {
    Operator { name: String, op: MatrixDiffOp },
    Identity(IdentitySummary),
    Value { name: String, value: Coeff },
    Line(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Vec<Value>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub rendered: Vec<Item>,
}

impl Manifest {
    fn new(command: &str, inputs: Value) -> Self {
        Manifest { schema_version: SCHEMA_VERSION, command: command.into(), inputs, results: Vec::new(), verdict: Verdict::Pass, rendered: Vec::new() }
    }

    fn push(&mut self, result: Value, item: Item) {
        self.results.push(result);
        self.rendered.push(item);
    }

    fn identity(&mut self, s: IdentitySummary) {
        if !s.pass {
            self.verdict = Verdict::Fail;
        }
        self.push(json!({ "identity": s }), Item::Identity(s));
    }

    fn fail(&mut self, err: &glmix::Error) {
        self.verdict = Verdict::Fail;
        self.push(json!({ "error": err.to_string() }), Item::Line(format!("error: {err}")));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes") + "\n"
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Failures of invariance are mathematical verdicts; everything else is a
/// usage problem.
fn is_math_failure(e: &glmix::Error) -> bool {
    matches!(e, glmix::Error::NotInvariant { .. } | glmix::Error::DegreeCapExceeded { .. })
}

fn generators(a: &RepArgs) -> Result<GeneratorSet, CliError> {
    if a.n == 0 {
        return Err(usage("n must be at least 1"));
    }
    let rep = match (a.n, a.d) {
        (2, d) => gl2_irrep(d).map_err(usage)?,
        (n, 1) => GlMatrixRep::trivial(n),
        (n, d) => return Err(usage(format!("matrix blocks of size {d} are available for n = 2 only (got n = {n})"))),
    };
    let k = a.k.map(Coeff::int).unwrap_or_else(Coeff::k);
    Ok(build_gl_np1(&RepSpec::new(a.n, k, rep).map_err(usage)?))
}

fn rep_inputs(a: &RepArgs) -> Value {
    json!({ "n": a.n, "d": a.d, "k": a.k.map_or("symbolic".to_string(), |k| k.to_string()) })
}

fn kind(m: ModelArg) -> ModelKind {
    match m {
        ModelArg::Calogero => ModelKind::Calogero,
        ModelArg::Sutherland => ModelKind::Sutherland,
    }
}

fn parse_rational(name: &str, s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>().map_err(|_| usage(format!("--{name}: '{s}' is not a rational number")))
}

pub fn run(cfg: &JobConfig) -> Result<Manifest, CliError> {
    match &cfg.command {
        Command::Gens(a) => {
            let g = generators(a)?;
            let mut m = Manifest::new("gens", rep_inputs(a));
            for (name, op) in g.iter() {
                m.push(
                    json!({ "name": name.to_string(), "operator": OperatorDto::from(op) }),
                    Item::Operator { name: name.to_string(), op: op.clone() },
                );
            }
            Ok(m)
        }
        Command::Check(a) => {
            let g = generators(a)?;
            let mut m = Manifest::new("check", rep_inputs(a));
            let canon = check_canonical(&g.spec().rep);
            if !canon.pass() {
                m.verdict = Verdict::Fail;
            }
            m.push(
                json!({ "gl_n_block": { "checked": canon.checked, "failure": canon.failure.as_ref().map(|f| f.to_string()) } }),
                Item::Line(format!("gl_n block relations: {} checked, {}", canon.checked, if canon.pass() { "all hold" } else { "failure" })),
            );
            for r in verify::commutation_table(&g) {
                m.identity(r.summary());
            }
            Ok(m)
        }
        Command::Casimir(a) => {
            let g = generators(a)?;
            let mut m = Manifest::new("casimir", rep_inputs(a));
            let (cs, reports) = if g.n() == 2 {
                verify::casimirs_gl3(&g).map_err(usage)?
            } else {
                (verify::casimirs(&g), Vec::new())
            };
            for (name, c) in [("C1", &cs.c1), ("C2", &cs.c2), ("C3", &cs.c3)] {
                match c.as_scalar_multiple_of_identity() {
                    Some(v) => m.push(json!({ "name": name, "scalar": v.clone() }), Item::Value { name: name.into(), value: v }),
                    None => m.push(json!({ "name": name, "operator": OperatorDto::from(c) }), Item::Operator { name: name.into(), op: c.clone() }),
                }
            }
            for r in reports {
                m.identity(r.summary());
            }
            for (name, c) in [("C1", &cs.c1), ("C2", &cs.c2)] {
                for r in verify::casimir_centrality(name, c, &g) {
                    m.identity(r.summary());
                }
            }
            Ok(m)
        }
        Command::Relations(a) => {
            if a.d.is_empty() {
                return Err(usage("at least one block size is needed"));
            }
            let mut m = Manifest::new("relations", json!({ "d": a.d }));
            let mut sets = Vec::new();
            for &d in &a.d {
                let g = build_gl_np1(&RepSpec::gl3(d).map_err(usage)?);
                let rel = verify::art_relations(&g).map_err(usage)?;
                for r in &rel {
                    let mut s = r.report.summary();
                    s.name = format!("d={d} {}: {}", r.label, s.name);
                    m.identity(s);
                }
                if d == 1 {
                    let audit = verify::grading_audit(&g, &rel).map_err(usage)?;
                    for line in &audit.lines {
                        m.push(
                            json!({ "grading": { "relation": line.label, "reference": line.reference, "computed": line.computed, "pass": line.pass() } }),
                            Item::Line(format!("grading {}: {}", line.label, if line.pass() { "matches reference" } else { "differs from reference" })),
                        );
                    }
                }
                sets.push(g);
            }
            let dep = verify::art_dependency(&sets).map_err(usage)?;
            let text = match &dep.solution {
                Some(s) => format!(
                    "C2 = {}; nullity {}",
                    verify::ART_DEPENDENCY_UNKNOWNS
                        .iter()
                        .zip(s)
                        .map(|(u, v)| format!("{u}={v}"))
                        .collect::<Vec<_>>()
                        .join(", "),
                    dep.nullity
                ),
                None => "no dependency of the assumed form".into(),
            };
            m.push(json!({ "dependency": dep }), Item::Line(text));
            Ok(m)
        }
        Command::Space(a) => {
            let mut m = Manifest::new("space", json!({ "k": a.k, "d": a.d, "grading": format!("{:?}", a.grading).to_lowercase() }));
            let basis = match a.grading {
                GradingArg::Total => gl3_space(a.k, a.d, total_grade),
                GradingArg::Calogero => gl3_space(a.k, a.d, calogero_grade),
            };
            let basis = match basis {
                Ok(b) => b,
                Err(e) if is_math_failure(&e) => {
                    m.fail(&e);
                    return Ok(m);
                }
                Err(e) => return Err(usage(e)),
            };
            let vectors: Vec<SpinorDto> = basis.vectors().iter().map(SpinorDto::from).collect();
            m.push(
                json!({ "label": basis.label(), "dim": basis.len(), "grades": basis.grades(), "weights": basis.weights(), "vectors": vectors }),
                Item::Line(format!("dim = {}", basis.len())),
            );
            for (v, g) in basis.vectors().iter().zip(basis.grades()) {
                m.rendered.push(Item::Line(format!("  [{g}] {v}")));
            }
            if a.d == 2 && a.k >= 1 {
                let h = hexagon_audit(&basis, a.k).map_err(usage)?;
                if !h.pass() {
                    m.verdict = Verdict::Fail;
                }
                let line = format!("hexagon audit: {}", if h.pass() { "pass" } else { "fail" });
                m.push(json!({ "hexagon": h }), Item::Line(line));
            }
            Ok(m)
        }
        Command::Model(a) => {
            let (form, reading) = (
                match a.form {
                    FormArg::Differential => ModelForm::Differential,
                    FormArg::Lie => ModelForm::LieAlgebraic,
                    FormArg::Matrix => ModelForm::Matrix,
                },
                match a.reading {
                    ReadingArg::Young => NReading::YoungLabel,
                    ReadingArg::Size => NReading::MatrixSize,
                },
            );
            let kd = kind(a.model);
            let mut m = Manifest::new(
                "model",
                json!({ "model": kd, "form": form, "d": a.d, "reading": reading, "check": a.check }),
            );
            let op = models::build(kd, form, a.d, reading).map_err(usage)?;
            let name = format!("h_{kd}");
            m.push(json!({ "name": name, "operator": OperatorDto::from(&op.op) }), Item::Operator { name, op: op.op.clone() });
            if a.check {
                let report = match form {
                    ModelForm::Matrix => models::consistency_check(kd, a.d, reading),
                    _ if a.d == 1 => models::algebraic_check(kd),
                    _ => return Err(usage("--check needs d = 1 or --form matrix")),
                }
                .map_err(usage)?;
                m.identity(report.summary());
            }
            Ok(m)
        }
        Command::Spectrum(a) => {
            let kd = kind(a.model);
            let mut bindings = Bindings::new();
            for (p, v) in [(Param::Omega, &a.omega), (Param::Nu, &a.nu), (Param::Alpha, &a.alpha)] {
                if let Some(s) = v {
                    bindings.insert(p, parse_rational(p.name(), s)?);
                }
            }
            let mut m = Manifest::new(
                "spectrum",
                json!({
                    "model": kd, "k": a.k, "d": a.d,
                    "bindings": bindings.iter().map(|(p, v)| (p.name(), v.to_string())).collect::<std::collections::BTreeMap<_, _>>(),
                    "compare": a.compare,
                }),
            );
            let op = models::build(kd, ModelForm::LieAlgebraic, a.d, NReading::YoungLabel).map_err(usage)?;
            let s = match models::spectrum(&op, a.k, &bindings) {
                Ok(s) => s,
                Err(e) if is_math_failure(&e) => {
                    m.fail(&e);
                    return Ok(m);
                }
                Err(e) => return Err(usage(e)),
            };
            let values: Vec<String> = s
                .eigenvalues
                .iter()
                .map(|r| match r.as_exact() {
                    Some(v) => v.to_string(),
                    None => format!("{:?}", r.approx()),
                })
                .collect();
            m.push(
                json!({ "spectrum": s, "values": values }),
                Item::Line(format!("dim = {}, blocks {:?}\neigenvalues: {}", s.dimension, s.block_sizes, values.join(", "))),
            );
            if a.compare {
                let scalar_k = a.scalar_k.unwrap_or(a.k + a.d as u32);
                let c = models::compare_with_scalar(&s, &bindings, scalar_k).map_err(usage)?;
                let line = format!("versus scalar spectrum up to degree {scalar_k}: {}", c.verdict());
                m.push(json!({ "comparison": c, "scalar_k": scalar_k, "verdict": c.verdict() }), Item::Line(line));
            }
            Ok(m)
        }
    }
}
