//! Command-line front end.
//!
//! Exit codes: 0 yes or pass, 1 no or fail, 2 unknown, 3 input or usage
//! error, 4 cap reached, 5 internal consistency failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::caps::Caps;
use crate::completion::{build_completion, index_report, OmegaIndex};
use crate::conditions::{check, Condition, ConditionReport};
use crate::decision::{
    decide_finite_index_raag, decide_raag_system, deletion_condition_test, lambda_kernel_search, Answer,
    KernelWitness, Verdict,
};
use crate::error::Error;
use crate::families::{emit_family, FamilySpec};
use crate::format::parse_theta;
use crate::kernel::KernelSearch;
use crate::lambda::commuting_graph;
use crate::reflections::{parse_reflections, reflection_raag_presentation, ReflectionSet};
use crate::theta::ThetaGraph;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

/// Environment variable holding `key=value` cap overrides.
pub const CAPS_ENV: &str = "VISUAL_RAAG_CAPS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "visual-raag", version, about = "RAAG systems of Λ-edges in right-angled Coxeter groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Kernel search depth in Δ-letters.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Longest 2-component cycle explored, in vertices.
    #[arg(long, global = true)]
    pub cycle_max_len: Option<usize>,
    /// Most 2-component cycles enumerated per component pair.
    #[arg(long, global = true)]
    pub cycle_max_count: Option<usize>,
    /// Most live cells in a completion.
    #[arg(long, global = true)]
    pub cell_cap: Option<usize>,
    /// Most A_Δ elements held by one kernel-search ball.
    #[arg(long, global = true)]
    pub kernel_ball_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate conditions R1–R5, F1, F2 and the triangle configuration.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated subset, e.g. `R1,R4`.
        #[arg(long, value_delimiter = ',')]
        conditions: Option<Vec<String>>,
    },
    /// Decide whether the Λ-edges form a RAAG system.
    Decide {
        #[arg(long)]
        input: PathBuf,
    },
    /// Decide finite index and report it (triangle-free Γ).
    Index {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the commuting graph Δ of the Λ-edges.
    CommutingGraph {
        #[arg(long)]
        input: PathBuf,
    },
    /// Search ker(A_Δ → W_Γ) up to `--depth`.
    KernelSearch {
        #[arg(long)]
        input: PathBuf,
    },
    /// Trim a reflection set and extract its RAAG presentation.
    Reflections {
        #[arg(long)]
        input: PathBuf,
        /// Also run the deletion-condition harness with this many samples.
        #[arg(long, default_value_t = 0)]
        deletion_samples: usize,
    },
    /// Named fixture families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Export the completion Ω as a text listing.
    OmegaExport {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamiliesAction {
    /// Write a family instance in the theta format.
    Emit { name: String, params: Vec<usize> },
}

/// A failed run: exit code plus diagnostic.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSaturated => EXIT_CAP,
            Error::IndexMismatch { .. } | Error::TrimDiverged(_) | Error::ReflectionKernelWitness(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

fn json<T: Serialize>(command: &str, body: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope { schema: 1, command, body }).expect("reports serialize");
    s.push('\n');
    s
}

fn read_theta(path: &Path) -> std::result::Result<ThetaGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) })?;
    Ok(parse_theta(&text)?)
}

fn caps_from(cli: &Cli, env: Option<&str>) -> std::result::Result<Caps, Failure> {
    let mut caps = Caps::default();
    if let Some(spec) = env {
        caps.apply_overrides(spec)
            .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{CAPS_ENV}: {e}") })?;
    }
    let flags = [
        ("kernel_depth", cli.depth),
        ("cycle_max_len", cli.cycle_max_len),
        ("cycle_max_count", cli.cycle_max_count),
        ("cell_cap", cli.cell_cap),
        ("kernel_ball_cap", cli.kernel_ball_cap),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            caps.set(key, v)?;
        }
    }
    Ok(caps)
}

fn witness_text(w: &Option<impl Serialize>) -> String {
    w.as_ref().map(|w| serde_json::to_string(w).expect("witness serializes")).unwrap_or_default()
}

fn render_conditions(out: &mut String, conditions: &[ConditionReport]) {
    for r in conditions {
        let status = if !r.passed {
            "FAIL"
        } else if r.truncated {
            "pass (truncated)"
        } else {
            "pass"
        };
        let line = format!("{}: {status} {}", r.condition, witness_text(&r.witness));
        let _ = writeln!(out, "{}", line.trim_end());
    }
}

fn render_verdict(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "answer: {}", answer_name(v.answer));
    render_conditions(&mut out, &v.conditions);
    if let Some(cert) = &v.certificate {
        if let Some(f) = &cert.failed_condition {
            let _ = writeln!(out, "certificate: {} fails", f.condition);
        }
        if let Some(k) = &cert.kernel_witness {
            let _ = writeln!(out, "kernel witness (length {}): {}", k.length, k.pairs);
        }
        if let Some(reason) = &cert.reason {
            let _ = writeln!(out, "reason: {reason}");
        }
    }
    if let Some(r) = &v.index_report {
        let _ = writeln!(out, "index: {} (omega vertices {}, virtually free {})", r.omega_index, r.omega_vertices, r.virtually_free);
    }
    for n in &v.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

fn answer_name(a: Answer) -> &'static str {
    match a {
        Answer::Yes => "yes",
        Answer::No => "no",
        Answer::Unknown => "unknown",
    }
}

fn verdict_code(v: &Verdict) -> i32 {
    match v.answer {
        Answer::Yes => EXIT_YES,
        Answer::No => EXIT_NO,
        Answer::Unknown if v.conditions.iter().any(|r| r.truncated) => EXIT_CAP,
        Answer::Unknown => EXIT_UNKNOWN,
    }
}

#[derive(Serialize)]
struct CheckReport {
    conditions: Vec<ConditionReport>,
    /// Conditions not evaluated because Λ is not a forest.
    skipped: Vec<Condition>,
}

fn run_check(theta: &ThetaGraph, names: &Option<Vec<String>>, caps: &Caps, format: OutputFormat) -> Outcome {
    let wanted: Vec<Condition> = match names {
        Some(list) => list.iter().map(|s| s.parse()).collect::<crate::Result<_>>()?,
        None => Condition::ALL.to_vec(),
    };
    let mut report = CheckReport { conditions: Vec::new(), skipped: Vec::new() };
    for c in wanted {
        match check(theta, c, caps) {
            Ok(r) => report.conditions.push(r),
            Err(Error::PreconditionR1) => report.skipped.push(c),
            Err(e) => return Err(e.into()),
        }
    }
    let code = if report.conditions.iter().any(|r| !r.passed) || !report.skipped.is_empty() {
        EXIT_NO
    } else if report.conditions.iter().any(|r| r.truncated) {
        EXIT_CAP
    } else {
        EXIT_YES
    };
    let text = match format {
        OutputFormat::Json => json("check", &report),
        OutputFormat::Text => {
            let mut out = String::new();
            render_conditions(&mut out, &report.conditions);
            for c in &report.skipped {
                let _ = writeln!(out, "{c}: skipped (requires R1)");
            }
            out
        }
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct DeltaReport {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    is_cycle: bool,
}

#[derive(Serialize)]
struct KernelReport {
    search: KernelSearch,
    witness: Option<KernelWitness>,
}

#[derive(Serialize)]
struct ReflectionReport {
    members: Vec<String>,
    elements: Vec<String>,
    provenance: Vec<String>,
    delta_edges: Vec<(String, String)>,
    verified_to_depth: usize,
    exhausted: bool,
    deletion: Option<crate::decision::DeletionReport>,
}

#[derive(Serialize)]
struct OmegaReport {
    saturated: bool,
    vertex_count: usize,
    edge_count: usize,
    square_count: usize,
    index: Option<OmegaIndex>,
    listing: String,
}

fn word_over(prefix: &str, w: &[crate::word::Letter]) -> String {
    let parts: Vec<String> =
        w.iter().map(|x| format!("{prefix}{}{}", x.generator, if x.inverse { "^-1" } else { "" })).collect();
    parts.join(" ")
}

fn dispatch(cli: &Cli, caps: &Caps) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Check { input, conditions } => run_check(&read_theta(input)?, conditions, caps, format),
        Command::Decide { input } => {
            let v = decide_raag_system(&read_theta(input)?, caps);
            let text = if format == OutputFormat::Json { json("decide", &v) } else { render_verdict(&v) };
            Ok((text, verdict_code(&v)))
        }
        Command::Index { input } => {
            let v = decide_finite_index_raag(&read_theta(input)?, caps)?;
            let text = if format == OutputFormat::Json { json("index", &v) } else { render_verdict(&v) };
            Ok((text, verdict_code(&v)))
        }
        Command::CommutingGraph { input } => {
            let delta = commuting_graph(&read_theta(input)?);
            let report = DeltaReport { vertices: delta.labels.clone(), edges: delta.edge_labels(), is_cycle: delta.is_cycle() };
            let text = match format {
                OutputFormat::Json => json("commuting-graph", &report),
                OutputFormat::Text => {
                    let edges: Vec<String> = report.edges.iter().map(|(a, b)| format!("{a}|{b}")).collect();
                    format!("vertices: {}\nedges: {}\n", report.vertices.join(" "), edges.join(" "))
                }
            };
            Ok((text, EXIT_YES))
        }
        Command::KernelSearch { input } => {
            let theta = read_theta(input)?;
            let (search, witness) = lambda_kernel_search(&theta, caps.kernel_depth, caps.kernel_ball_cap);
            let code = if witness.is_some() {
                EXIT_NO
            } else if search.exhausted {
                EXIT_YES
            } else {
                EXIT_CAP
            };
            let report = KernelReport { search, witness };
            let text = match format {
                OutputFormat::Json => json("kernel-search", &report),
                OutputFormat::Text => match &report.witness {
                    Some(w) => format!("witness (length {}): {}\n", w.length, w.pairs),
                    None => format!("no witness up to length {}\n", report.search.searched_depth),
                },
            };
            Ok((text, code))
        }
        Command::Reflections { input, deletion_samples } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{}: {e}", input.display()) })?;
            let parsed = parse_reflections(&text)?;
            let set = ReflectionSet::new(parsed.group.clone(), &parsed.reflections);
            let p = reflection_raag_presentation(&set, caps.kernel_depth, caps.kernel_ball_cap)?;
            let g = &parsed.group;
            let members = p.trimmed.members();
            let deletion = (*deletion_samples > 0).then(|| {
                let gens: Vec<_> = members.iter().map(|m| m.element.clone()).collect();
                deletion_condition_test(g, &gens, *deletion_samples, 6, 0)
            });
            let report = ReflectionReport {
                members: members.iter().map(|m| m.format(g)).collect(),
                elements: members.iter().map(|m| g.format(&m.element)).collect(),
                provenance: p.trimmed.provenance().iter().map(|w| word_over("t", w)).collect(),
                delta_edges: p.delta.edge_labels(),
                verified_to_depth: p.verified_to_depth,
                exhausted: p.exhausted,
                deletion,
            };
            let code = match &report.deletion {
                Some(d) if !d.counterexamples.is_empty() => EXIT_NO,
                _ if !report.exhausted => EXIT_CAP,
                _ => EXIT_YES,
            };
            let text = match format {
                OutputFormat::Json => json("reflections", &report),
                OutputFormat::Text => {
                    let mut out = String::new();
                    for (i, e) in report.elements.iter().enumerate() {
                        let _ = writeln!(out, "r{i} = {e}");
                    }
                    let edges: Vec<String> = report.delta_edges.iter().map(|(a, b)| format!("{a}|{b}")).collect();
                    let edges = if edges.is_empty() { "none".to_owned() } else { edges.join(" ") };
                    let _ = writeln!(out, "delta edges: {edges}");
                    let _ = writeln!(out, "kernel search clean to depth {}", report.verified_to_depth);
                    out
                }
            };
            Ok((text, code))
        }
        Command::Families { action: FamiliesAction::Emit { name, params } } => {
            Ok((emit_family(&FamilySpec::from_name(name, params)?)?, EXIT_YES))
        }
        Command::OmegaExport { input } => {
            let theta = read_theta(input)?;
            let complex = build_completion(&theta, caps.cell_cap)?;
            let index = if complex.saturated() { Some(index_report(&complex, theta.gamma())?) } else { None };
            let code = if complex.saturated() { EXIT_YES } else { EXIT_CAP };
            let listing = complex.export();
            let text = match format {
                OutputFormat::Json => json(
                    "omega-export",
                    &OmegaReport {
                        saturated: complex.saturated(),
                        vertex_count: complex.vertex_count(),
                        edge_count: complex.edge_count(),
                        square_count: complex.square_count(),
                        index,
                        listing,
                    },
                ),
                OutputFormat::Text => listing,
            };
            Ok((text, code))
        }
    }
}

/// Run with explicit arguments, cap overrides and output streams.
pub fn run_with(
    args: impl IntoIterator<Item = impl Into<OsString> + Clone>,
    env_caps: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let outcome = caps_from(&cli, env_caps).and_then(|caps| dispatch(&cli, &caps));
    match outcome {
        Ok((text, code)) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &text),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write report: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run() -> i32 {
    let env = std::env::var(CAPS_ENV).ok();
    run_with(std::env::args_os(), env.as_deref(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
