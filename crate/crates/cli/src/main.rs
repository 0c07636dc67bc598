use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use rankarg_cli::{run, InputFormat, OutputMode, SolveRequest, Source, Task};

/// Ranking-based extensions of abstract argumentation frameworks.
///
/// Tasks: EE-JZ, SE-JZ, WEIGHTS, EE-GR, EE-PR, EE-ST, EE-STG, EE-SST,
/// CHECK-MODEL, PRINCIPLES, COMPARE. Set RANKARG_THREADS to cap the number
/// of worker threads.
#[derive(Parser, Debug)]
#[command(name = "rankarg", version)]
struct Args {
    /// Framework file; reads stdin when omitted or `-`.
    input: Option<PathBuf>,
    #[arg(short, long, value_enum, default_value = "apx")]
    format: InputFormat,
    #[arg(short, long, default_value = "EE-JZ")]
    task: Task,
    #[arg(short, long, value_enum, default_value = "text")]
    output: OutputMode,
    /// Seed for the random corpus checked by PRINCIPLES.
    #[arg(long)]
    seed: Option<u64>,
    /// Measure file (`STATE RANK` lines) for CHECK-MODEL.
    #[arg(long)]
    measure: Option<PathBuf>,
    /// Cross-check JZ extensions against the ranking model (≤ 12 arguments).
    #[arg(long)]
    verify: bool,
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var("RANKARG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .with_context(|| format!("RANKARG_THREADS=`{value}` is not a number"))?;
    if threads == 0 {
        bail!("RANKARG_THREADS must be positive");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("configuring the thread pool")?;
    Ok(())
}

fn main() -> ExitCode {
    // usage errors are input errors (exit 1); 2 is reserved for invariant failures
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("input error: {e:#}");
        return ExitCode::from(1);
    }
    let source = match args.input {
        Some(path) if path.as_os_str() != "-" => Source::Path(path),
        _ => Source::Stdin,
    };
    let request = SolveRequest {
        source,
        format: args.format,
        task: args.task,
        output: args.output,
        seed: args.seed,
        measure: args.measure,
        verify: args.verify,
    };
    let outcome = run(&request);
    // a closed stdout (e.g. piping into `head`) is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
