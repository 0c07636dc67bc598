//! Request handling behind the `rankarg` binary: read a framework, run a
//! task, render the result as text or JSON.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use indexmap::IndexMap;
use rankarg::classical::Semantics;
use rankarg::generic::{self, GenericSpace, RankingInstantiationModel, ShallowInstantiation};
use rankarg::io::{parse_apx, parse_measure, parse_tgf};
use rankarg::principles::{evaluate_all, evaluate_corpus, Principle};
use rankarg::{corpus, jz, ArgumentSet, ArgumentationFramework};
use serde::Serialize;

/// Frameworks drawn per `--seed` corpus run and their size cap.
pub const SEED_CORPUS_SIZE: usize = 100;
pub const SEED_CORPUS_MAX_ARGUMENTS: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Apx,
    Tgf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    /// All JZ extensions.
    EnumerateJz,
    /// One JZ extension.
    SomeJz,
    /// Weights of all candidate extensions.
    Weights,
    /// All extensions of a classical semantics.
    Enumerate(Semantics),
    /// Is a supplied measure a ranking instantiation model of the input?
    CheckModel,
    /// Run every principle checker against JZ.
    Principles,
    /// JZ next to every classical semantics.
    Compare,
}

impl Task {
    pub const CLASSICAL: [Semantics; 5] = [
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::Stage,
        Semantics::SemiStable,
    ];

    pub fn tag(self) -> String {
        match self {
            Task::EnumerateJz => "EE-JZ".into(),
            Task::SomeJz => "SE-JZ".into(),
            Task::Weights => "WEIGHTS".into(),
            Task::Enumerate(sem) => format!("EE-{}", sem.short_name()),
            Task::CheckModel => "CHECK-MODEL".into(),
            Task::Principles => "PRINCIPLES".into(),
            Task::Compare => "COMPARE".into(),
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let upper = s.to_ascii_uppercase();
        let task = match upper.as_str() {
            "EE-JZ" => Task::EnumerateJz,
            "SE-JZ" => Task::SomeJz,
            "WEIGHTS" => Task::Weights,
            "CHECK-MODEL" => Task::CheckModel,
            "PRINCIPLES" => Task::Principles,
            "COMPARE" => Task::Compare,
            other => {
                let sem = other
                    .strip_prefix("EE-")
                    .and_then(|s| s.parse::<Semantics>().ok())
                    .filter(|sem| Task::CLASSICAL.contains(sem));
                match sem {
                    Some(sem) => Task::Enumerate(sem),
                    None => return Err(format!("unsupported task `{s}`")),
                }
            }
        };
        Ok(task)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Path(PathBuf),
    Stdin,
    /// Inline document, mostly for tests and embedding.
    Text(String),
}

#[derive(Debug, Clone)]
pub struct SolveRequest {
    pub source: Source,
    pub format: InputFormat,
    pub task: Task,
    pub output: OutputMode,
    /// Seed of the random corpus evaluated by PRINCIPLES.
    pub seed: Option<u64>,
    /// Measure file for CHECK-MODEL.
    pub measure: Option<PathBuf>,
    /// Cross-check JZ results against the model-theoretic computation.
    pub verify: bool,
}

impl SolveRequest {
    pub fn new(source: Source, format: InputFormat, task: Task) -> Self {
        SolveRequest {
            source,
            format,
            task,
            output: OutputMode::Text,
            seed: None,
            measure: None,
            verify: false,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

/// What the binary prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(request: &SolveRequest) -> Outcome {
    match execute(request) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("{e}\n"),
        },
    }
}

fn read_source(source: &Source) -> Result<String, CliError> {
    match source {
        Source::Path(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        Source::Stdin => std::io::read_to_string(std::io::stdin())
            .map_err(|e| CliError::Input(format!("stdin: {e}"))),
        Source::Text(text) => Ok(text.clone()),
    }
}

pub fn load_framework(request: &SolveRequest) -> Result<ArgumentationFramework, CliError> {
    let text = read_source(&request.source)?;
    let parsed = match request.format {
        InputFormat::Apx => parse_apx(&text),
        InputFormat::Tgf => parse_tgf(&text),
    };
    parsed.map_err(|e| CliError::Input(e.to_string()))
}

#[derive(Serialize)]
struct Report {
    task: String,
    extensions: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimum: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<IndexMap<String, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    model: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    principles: Option<IndexMap<String, bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    corpus: Option<CorpusSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    semantics: Option<IndexMap<String, Comparison>>,
}

impl Report {
    fn new(task: Task, extensions: Vec<Vec<String>>) -> Self {
        Report {
            task: task.tag(),
            extensions,
            minimum: None,
            weights: None,
            model: None,
            principles: None,
            corpus: None,
            semantics: None,
        }
    }
}

#[derive(Serialize)]
struct CorpusSummary {
    seed: u64,
    frameworks: usize,
    /// Failures per principle.
    failures: IndexMap<String, usize>,
}

#[derive(Serialize)]
struct Comparison {
    extensions: Vec<Vec<String>>,
    agrees_with_jz: bool,
}

fn sorted_names(framework: &ArgumentationFramework, set: ArgumentSet) -> Vec<String> {
    let mut names: Vec<String> = framework
        .names_of(set)
        .into_iter()
        .map(String::from)
        .collect();
    names.sort();
    names
}

/// Extensions as sorted name lists, themselves sorted, so the output does
/// not depend on declaration order.
fn render_sets(framework: &ArgumentationFramework, sets: &[ArgumentSet]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = sets.iter().map(|&s| sorted_names(framework, s)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn bracket(names: &[String]) -> String {
    format!("[{}]", names.join(","))
}

fn execute(request: &SolveRequest) -> Result<String, CliError> {
    let framework = load_framework(request)?;
    let task = request.task;
    let mut text = String::new();
    let report = match task {
        Task::EnumerateJz | Task::SomeJz => {
            let mut extensions = jz::jz_extensions(&framework);
            check_jz(&framework, &extensions)?;
            if request.verify {
                verify_semantic(&framework, &extensions)?;
            }
            if task == Task::SomeJz {
                extensions.truncate(1);
            }
            let rendered = render_sets(&framework, &extensions);
            for e in &rendered {
                text.push_str(&bracket(e));
                text.push('\n');
            }
            Report::new(task, rendered)
        }
        Task::Weights => {
            let table = jz::weight_table(&framework);
            check_jz(&framework, &table.minima)?;
            let mut weights = IndexMap::new();
            for &(set, w) in &table.entries {
                let key = bracket(&sorted_names(&framework, set));
                text.push_str(&format!(
                    "{key}: {w}{}\n",
                    if w == table.minimum { " *" } else { "" }
                ));
                weights.insert(key, w);
            }
            let mut report = Report::new(task, render_sets(&framework, &table.minima));
            report.minimum = Some(table.minimum);
            report.weights = Some(weights);
            report
        }
        Task::Enumerate(sem) => {
            let rendered = render_sets(&framework, &sem.extensions(&framework));
            for e in &rendered {
                text.push_str(&bracket(e));
                text.push('\n');
            }
            Report::new(task, rendered)
        }
        Task::CheckModel => {
            let (model, is_model) = check_model(&framework, request)?;
            let rendered = render_sets(&framework, &model.ranking_extensions());
            text.push_str(if is_model {
                "model: yes\n"
            } else {
                "model: no\n"
            });
            for e in &rendered {
                text.push_str(&bracket(e));
                text.push('\n');
            }
            let mut report = Report::new(task, rendered);
            report.model = Some(is_model);
            report
        }
        Task::Principles => {
            let extensions = jz::jz_extensions(&framework);
            let mut principles = IndexMap::new();
            for (p, holds) in evaluate_all(&jz::jz_extensions, &framework) {
                text.push_str(&format!(
                    "{:<22}{}\n",
                    p.name(),
                    if holds { "pass" } else { "fail" }
                ));
                principles.insert(p.name().to_string(), holds);
            }
            let mut report = Report::new(task, render_sets(&framework, &extensions));
            report.principles = Some(principles);
            if let Some(seed) = request.seed {
                let frameworks =
                    corpus::random_corpus(seed, SEED_CORPUS_SIZE, SEED_CORPUS_MAX_ARGUMENTS);
                let verdicts = evaluate_corpus(&jz::jz_extensions, &Principle::ALL, &frameworks);
                text.push_str(&format!(
                    "corpus seed {seed}, {} frameworks: failures per principle\n",
                    frameworks.len()
                ));
                let mut failures = IndexMap::new();
                for v in verdicts {
                    text.push_str(&format!("{:<22}{}\n", v.principle.name(), v.failures.len()));
                    failures.insert(v.principle.name().to_string(), v.failures.len());
                }
                report.corpus = Some(CorpusSummary {
                    seed,
                    frameworks: frameworks.len(),
                    failures,
                });
            }
            report
        }
        Task::Compare => {
            let extensions = jz::jz_extensions(&framework);
            check_jz(&framework, &extensions)?;
            let jz_rendered = render_sets(&framework, &extensions);
            text.push_str(&format!(
                "{:<8}{:<8}{}\n",
                "JZ",
                "",
                join_sets(&jz_rendered)
            ));
            let mut semantics = IndexMap::new();
            for sem in Task::CLASSICAL {
                let rendered = render_sets(&framework, &sem.extensions(&framework));
                let agrees = rendered == jz_rendered;
                text.push_str(&format!(
                    "{:<8}{:<8}{}\n",
                    sem.short_name(),
                    if agrees { "same" } else { "differs" },
                    join_sets(&rendered)
                ));
                semantics.insert(
                    sem.short_name().to_string(),
                    Comparison {
                        extensions: rendered,
                        agrees_with_jz: agrees,
                    },
                );
            }
            let mut report = Report::new(task, jz_rendered);
            report.semantics = Some(semantics);
            report
        }
    };
    Ok(match request.output {
        OutputMode::Text => text,
        OutputMode::Json => {
            let mut json = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Invariant(format!("serialization failed: {e}")))?;
            json.push('\n');
            json
        }
    })
}

fn join_sets(sets: &[Vec<String>]) -> String {
    sets.iter()
        .map(|s| bracket(s))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Cheap sanity checks on solver output: non-empty, conflict-free and of
/// equal weight.
fn check_jz(
    framework: &ArgumentationFramework,
    extensions: &[ArgumentSet],
) -> Result<(), CliError> {
    let Some(&first) = extensions.first() else {
        return Err(CliError::Invariant("no JZ extension found".into()));
    };
    let weight = jz::extension_weight(framework, first);
    for &e in extensions {
        if !framework.is_conflict_free(e) || jz::extension_weight(framework, e) != weight {
            return Err(CliError::Invariant(format!(
                "extension {} is not a minimal-weight conflict-free set",
                framework.format_set(e)
            )));
        }
    }
    Ok(())
}

fn verify_semantic(
    framework: &ArgumentationFramework,
    extensions: &[ArgumentSet],
) -> Result<(), CliError> {
    let semantic = generic::ranking_extensions_semantic(framework)
        .map_err(|e| CliError::Input(format!("--verify: {e}")))?;
    if semantic != extensions {
        return Err(CliError::Invariant(
            "direct and model-based extensions differ".into(),
        ));
    }
    Ok(())
}

fn check_model(
    framework: &ArgumentationFramework,
    request: &SolveRequest,
) -> Result<(RankingInstantiationModel, bool), CliError> {
    let path = request
        .measure
        .as_ref()
        .ok_or_else(|| CliError::Input("CHECK-MODEL needs --measure <path>".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let space = GenericSpace::new(framework.len()).map_err(|e| CliError::Input(e.to_string()))?;
    let measure = parse_measure(&text, &space)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let model = RankingInstantiationModel::new(measure, ShallowInstantiation::generic(&space))
        .map_err(|e| CliError::Input(e.to_string()))?;
    let is_model = model.is_model_of(framework);
    Ok((model, is_model))
}
