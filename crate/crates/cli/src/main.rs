use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use songscope::report::export::figure_data_from_csv;
use songscope::report::{render_figure, run_report, AnalysisSet, FigureKind, FigureSpec, ReportOptions};
use songscope::{load_corpus, ColumnMap, Corpus, Error, Feature, IngestReport};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_IO: u8 = 3;

/// Song-corpus analytics: feature statistics, lyric lexicon, co-occurrence
/// networks and genre mood profiles.
#[derive(Parser)]
#[command(name = "songscope", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a corpus CSV; prints the ingest report as JSON.
    Ingest(InputArgs),
    /// Run analyses and write tables, figures and a manifest.
    Report(ReportArgs),
    /// Render one figure from a data CSV.
    Plot(PlotArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Corpus CSV file.
    #[arg(long)]
    input: PathBuf,
    /// Map a logical field to a header, e.g. `--col energy=nrgy`.
    #[arg(long = "col", value_name = "FIELD=HEADER")]
    cols: Vec<String>,
    /// File of `field=header` lines, applied before any --col.
    #[arg(long = "map", value_name = "FILE")]
    map: Option<PathBuf>,
    /// Treat any rejected row as fatal.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    /// Comma-separated: stats, trends, corr, tokens, cooc, mood, or all.
    #[arg(long, default_value = "all")]
    analyses: String,
    /// Words in the frequency table and co-occurrence network.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    top_words: u64,
    /// Feature profiled by genre.
    #[arg(long, default_value = "valence")]
    feature: String,
    /// Write into an existing output directory.
    #[arg(long)]
    force: bool,
    /// Also export the full ranked vocabulary.
    #[arg(long)]
    full_vocab: bool,
}

#[derive(Args)]
struct PlotArgs {
    /// hbar, line, scatter_fit or heatmap.
    #[arg(long)]
    kind: String,
    /// Data CSV in the layout the figure kind expects.
    #[arg(long)]
    data: PathBuf,
    /// Output SVG path.
    #[arg(long)]
    out: PathBuf,
    /// Figure title; defaults to the data file's name.
    #[arg(long)]
    title: Option<String>,
    #[arg(long, default_value_t = 960)]
    width: u32,
    #[arg(long, default_value_t = 600)]
    height: u32,
    /// Leave bars and cells unlabelled.
    #[arg(long)]
    no_annotate: bool,
}

enum Failure {
    Usage(String),
    Data(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_io() {
            Failure::Io(e.to_string())
        } else {
            Failure::Data(e.to_string())
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn column_map(args: &InputArgs) -> Result<ColumnMap, Failure> {
    let mut map = match &args.map {
        Some(path) => ColumnMap::from_mapping_text(&read_text(path)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => ColumnMap::default(),
    };
    for spec in &args.cols {
        map.apply(spec).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(map)
}

fn log_rejections(report: &IngestReport) {
    for r in &report.rejections {
        eprintln!("warning: row {} rejected: {}", r.row, r.reason);
    }
}

fn ingest(args: &InputArgs) -> Result<(Corpus, IngestReport), Failure> {
    let map = column_map(args)?;
    let (corpus, report) = load_corpus(&args.input, &map)?;
    log_rejections(&report);
    Ok((corpus, report))
}

fn check_accepted(args: &InputArgs, report: &IngestReport) -> Result<(), Failure> {
    if args.strict && report.rows_rejected > 0 {
        return Err(Failure::Data(format!(
            "{} row(s) rejected in strict mode",
            report.rows_rejected
        )));
    }
    if report.rows_accepted == 0 {
        return Err(Failure::Data("no rows accepted".into()));
    }
    Ok(())
}

fn cmd_ingest(args: &InputArgs) -> Result<(), Failure> {
    let (_, report) = ingest(args)?;
    println!("{}", report.to_json());
    check_accepted(args, &report)
}

fn cmd_report(args: &ReportArgs) -> Result<(), Failure> {
    let analyses: AnalysisSet = args
        .analyses
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let feature: Feature = args
        .feature
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let (corpus, report) = ingest(&args.input)?;
    check_accepted(&args.input, &report)?;
    let opts = ReportOptions {
        out_dir: args.out.clone(),
        analyses,
        top_words: args.top_words as usize,
        feature,
        force: args.force,
        full_vocab: args.full_vocab,
    };
    let manifest = run_report(&corpus, &args.input.input.display().to_string(), &opts)?;
    println!("{}", songscope::report::export::to_json(&manifest).trim_end());
    Ok(())
}

fn cmd_plot(args: &PlotArgs) -> Result<(), Failure> {
    let kind: FigureKind = args
        .kind
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let data = figure_data_from_csv(kind, &read_text(&args.data)?)?;
    let title = args.title.clone().unwrap_or_else(|| {
        args.data
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    let spec = FigureSpec {
        kind,
        title,
        width_px: args.width,
        height_px: args.height,
        annotate: !args.no_annotate,
    };
    let svg = render_figure(&spec, &data)?;
    fs::write(&args.out, svg).map_err(|e| Failure::Io(format!("{}: {e}", args.out.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = match &cli.command {
        Command::Ingest(args) => cmd_ingest(args),
        Command::Report(args) => cmd_report(args),
        Command::Plot(args) => cmd_plot(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
