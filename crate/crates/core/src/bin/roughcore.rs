use std::fs::File;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use roughcore::report::{render_analysis_text, render_core_text, CoreReport, ReportContext};
use roughcore::{
    analyze, codes_for_tokens, compute_core, export_reduced, load_csv, prepare, select_target_set, verify_complement,
    write_csv, DiscretizationConfig, Error, IngestConfig, Preparation, Prepared, StdevMode,
};

#[derive(Parser)]
#[command(name = "roughcore", version, about = "Rough-set approximations and core attributes for decision tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discretize numeric attributes and write the labeled table.
    Transform(TransformArgs),
    /// Partition, approximations, boundary and rough topology of a target set.
    Analyze(AnalyzeArgs),
    /// Per-attribute boundary analysis with exact and tolerant core.
    Core(CoreArgs),
}

#[derive(Args)]
struct InputArgs {
    /// CSV file with a header row, or `-` for stdin.
    input: PathBuf,
    /// Column holding object ids, or `none` to number rows 1..n.
    #[arg(long, default_value = "none")]
    id_column: String,
    /// Decision column (default: last column).
    #[arg(long)]
    decision_column: Option<String>,
    #[arg(long = "stdev", value_enum, default_value_t = Mode::Sample)]
    stdev: Mode,
    /// Decimal places the cuts are rounded to.
    #[arg(long = "round", default_value_t = 3)]
    round: u32,
    /// Input already holds integer labels; skip discretization.
    #[arg(long)]
    already_discrete: bool,
    /// Write the report or table here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Print the binning trace as JSON on stderr.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct TargetArgs {
    /// Decision value(s) defining the target set X.
    #[arg(long, required = true, value_delimiter = ',')]
    target: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    target: TargetArgs,
    /// Also report the approximation space without this attribute.
    #[arg(long)]
    omit: Option<String>,
}

#[derive(Args)]
struct CoreArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    target: TargetArgs,
    /// Attributes with nu above this value form the tolerant core.
    #[arg(long)]
    threshold: u64,
    /// Write the table reduced to the tolerant core (original values) here.
    #[arg(long)]
    export: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Sample,
    Population,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Lib(Error),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Lib(Error::Io(e.into()))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Transform(args) => transform(args),
        Command::Analyze(args) => run_analyze(args),
        Command::Core(args) => run_core(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config() { 3 } else { 2 })
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(4)
        }
    }
}

fn load(args: &InputArgs) -> Result<Prepared, Failure> {
    let config = IngestConfig {
        id_column: (args.id_column != "none").then(|| args.id_column.clone()),
        decision_column: args.decision_column.clone(),
    };
    let table = if args.input.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        load_csv(&buf[..], &config)?
    } else {
        load_csv(File::open(&args.input)?, &config)?
    };
    let preparation = if args.already_discrete {
        Preparation::AlreadyDiscrete
    } else {
        Preparation::Discretize(DiscretizationConfig {
            stdev_mode: match args.stdev {
                Mode::Sample => StdevMode::Sample,
                Mode::Population => StdevMode::Population,
            },
            cut_round_decimals: args.round,
        })
    };
    Ok(prepare(table, preparation)?)
}

fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_trace(prepared: &Prepared) -> Result<(), Failure> {
    let summaries: Vec<_> = prepared.traces.iter().map(|t| t.summary()).collect();
    eprintln!("{}", serde_json::to_string_pretty(&summaries)?);
    Ok(())
}

fn dataset_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| "stdin".to_string(), |s| s.to_string_lossy().into_owned())
}

fn transform(args: TransformArgs) -> Result<(), Failure> {
    let prepared = load(&args.input)?;
    if args.trace {
        emit_trace(&prepared)?;
    }
    write_csv(&prepared.discrete, sink(args.input.output.as_deref())?)?;
    Ok(())
}

fn target(
    prepared: &Prepared,
    args: &TargetArgs,
    input: &InputArgs,
) -> Result<(roughcore::ObjectSet, ReportContext), Failure> {
    let codes = codes_for_tokens(&prepared.discrete, &args.target)?;
    let x = select_target_set(&prepared.discrete, &codes)?;
    let context =
        ReportContext { dataset: dataset_name(&input.input), stdev_mode: prepared.stdev_mode, target_codes: codes };
    Ok((x, context))
}

fn run_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let prepared = load(&args.input)?;
    if args.target.trace {
        emit_trace(&prepared)?;
    }
    let (x, context) = target(&prepared, &args.target, &args.input)?;
    let report = analyze(&prepared.discrete, &x, args.omit.as_deref(), &context)?;
    let mut out = sink(args.input.output.as_deref())?;
    match args.target.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Text => out.write_all(render_analysis_text(&report).as_bytes())?,
    }
    Ok(())
}

fn run_core(args: CoreArgs) -> Result<(), Failure> {
    let prepared = load(&args.input)?;
    if args.target.trace {
        emit_trace(&prepared)?;
    }
    let (x, context) = target(&prepared, &args.target, &args.input)?;
    let core = compute_core(&prepared.discrete, &x, args.threshold)?;
    if !verify_complement(&prepared.discrete, &x, args.threshold)? {
        return Err(Failure::Invariant("core of the complement target set differs".into()));
    }

    let mut out = sink(args.input.output.as_deref())?;
    match args.target.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&CoreReport::new(&core, &context))?)?,
        Format::Text => out.write_all(render_core_text(&prepared.discrete, &core, &context)?.as_bytes())?,
    }
    if let Some(path) = &args.export {
        let reduced = export_reduced(&prepared.original, &core)?;
        write_csv(&reduced, File::create(path)?)?;
    }
    Ok(())
}
