use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use disksched::campaign::{run_property_campaign, CampaignConfig};
use disksched::report::{emit, run_comparison, Format, HeadPathSeries};
use disksched::schedulers::Algorithm;
use disksched::workload::{generate, paper_case, parse_requests, render_requests, WorkloadSpec};
use disksched::{DiskGeometry, HeadState, Instance, RequestQueue, TransferModel};

const EXIT_CAMPAIGN_FAILURE: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "disksched", version, about = "Disk-arm scheduling simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schedule one instance and print a comparison report.
    Run(RunArgs),
    /// Generate a random request file.
    Gen(GenArgs),
    /// Cross-check every policy against the brute-force oracle.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GeometryArgs {
    #[arg(long)]
    min_track: Option<u32>,
    #[arg(long)]
    max_track: Option<u32>,
}

impl GeometryArgs {
    fn resolve(&self, base: DiskGeometry) -> Result<DiskGeometry, String> {
        DiskGeometry::new(
            self.min_track.unwrap_or(base.min_track.value()),
            self.max_track.unwrap_or(base.max_track.value()),
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Built-in instance (1, 2 or 3).
    #[arg(long, conflicts_with_all = ["requests", "input"])]
    case: Option<u8>,
    /// Initial head position.
    #[arg(long)]
    head: Option<u32>,
    /// Comma- or space-separated track list.
    #[arg(long, conflicts_with = "input")]
    requests: Option<String>,
    /// Request file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated: all, fifo, sstf, scan, cscan, look, odsa, optimal.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    algo: Vec<String>,
    #[command(flatten)]
    geometry: GeometryArgs,
    /// Bytes transferred per request.
    #[arg(long, default_value_t = TransferModel::DEFAULT_BYTES_TO_TRANSFER)]
    bytes: u64,
    /// Bytes per track.
    #[arg(long, default_value_t = TransferModel::DEFAULT_BYTES_PER_TRACK)]
    track_bytes: u64,
    /// Rotation speed in revolutions per second.
    #[arg(long, default_value_t = TransferModel::DEFAULT_ROTATION_SPEED)]
    rps: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Emit head-path series instead of the summary table.
    #[arg(long)]
    path: bool,
    /// Add the published figures for the selected --case.
    #[arg(long)]
    paper_table: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Head directive to write at the top of the file.
    #[arg(long)]
    head: Option<u32>,
    #[command(flatten)]
    geometry: GeometryArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[command(flatten)]
    geometry: GeometryArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
}

fn parse_algorithms(names: &[String]) -> Result<Vec<Algorithm>, String> {
    let mut out = Vec::new();
    for name in names {
        if name.eq_ignore_ascii_case("all") {
            out.extend(Algorithm::BASELINES_AND_ODSA);
        } else {
            out.push(name.parse::<Algorithm>().map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

fn load_instance(args: &RunArgs) -> Result<Instance, String> {
    if let Some(id) = args.case {
        let case = paper_case(id).map_err(|e| e.to_string())?;
        let head = args.head.map(HeadState::at).unwrap_or(case.head);
        let geometry = args.geometry.resolve(case.geometry)?;
        return Instance::new(case.queue, head, geometry).map_err(|e| e.to_string());
    }
    let (queue, file_head): (RequestQueue, Option<HeadState>) = if let Some(text) = &args.requests {
        parse_requests(text).map_err(|e| format!("--requests: {e}"))?
    } else if let Some(path) = &args.input {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        parse_requests(&text).map_err(|e| format!("{}: {e}", path.display()))?
    } else {
        return Err("one of --case, --requests or --input is required".into());
    };
    let head = args
        .head
        .map(HeadState::at)
        .or(file_head)
        .ok_or("no head position: pass --head or add a `head` line to the input")?;
    let geometry = args.geometry.resolve(DiskGeometry::default())?;
    Instance::new(queue, head, geometry).map_err(|e| e.to_string())
}

fn run(args: RunArgs) -> Result<String, String> {
    let instance = load_instance(&args)?;
    let algorithms = parse_algorithms(&args.algo)?;
    let model =
        TransferModel::new(args.bytes, args.track_bytes, args.rps).map_err(|e| e.to_string())?;
    let mut report = run_comparison(&instance, &model, &algorithms).map_err(|e| e.to_string())?;
    if args.paper_table {
        let case = args.case.ok_or("--paper-table needs --case")?;
        report = report.with_paper_table(case).map_err(|e| e.to_string())?;
    }
    let format = args.format.into();
    Ok(if args.path {
        let series: Vec<HeadPathSeries> = report.series();
        emit(series.as_slice(), format)
    } else {
        emit(&report, format)
    })
}

fn gen(args: GenArgs) -> Result<String, String> {
    let geometry = args.geometry.resolve(DiskGeometry::default())?;
    let spec = WorkloadSpec::new(args.count, geometry, args.seed).map_err(|e| e.to_string())?;
    let head = args.head.map(HeadState::at);
    if let Some(h) = head {
        if !geometry.contains(h.position) {
            return Err(format!("head {} outside disk range", h.position));
        }
    }
    Ok(render_requests(&generate(&spec), head))
}

fn verify(args: VerifyArgs) -> Result<(String, bool), String> {
    let geometry = args.geometry.resolve(DiskGeometry::default())?;
    let config = CampaignConfig::with_geometry(args.trials, args.seed, args.max_n, geometry)
        .map_err(|e| e.to_string())?;
    let summary = run_property_campaign(&config);
    let ok = summary.failed == 0;
    let text = match args.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&summary).expect("summary serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = format!(
                "trials,passed,failed\n{},{},{}\n",
                summary.trials, summary.passed, summary.failed
            );
            if let Some(c) = &summary.first_failure {
                s.push_str(&format!(
                    "# first failure: trial {} head {} queue {} -- {}\n",
                    c.trial,
                    c.instance.head.position,
                    render_requests(&c.instance.queue, None).trim_end(),
                    c.violation
                ));
            }
            s
        }
    };
    Ok((text, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args).map(|s| (s, true)),
        Command::Gen(args) => gen(args).map(|s| (s, true)),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CAMPAIGN_FAILURE)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID_INPUT)
        }
    }
}
