use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use setmosaic::color::{parse_color_list, DEFAULT_SEPARATION};
use setmosaic::quiz::{generate_question_with, QuestionOptions, Visualization};
use setmosaic::{
    generate_task_set, linear_layout, load_zones, mosaic_layout, order_zones, render_linear,
    render_mosaic, InputFormat, MosaicMode, OrderStrategy, Palette, Query, Relation, Style,
    TaskKind, ZoneOrder, ZoneSet,
};

const STYLE_ENV: &str = "SETMOSAIC_STYLE";

#[derive(Parser)]
#[command(name = "setmosaic", version, about = "Linear and mosaic set diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a diagram as SVG.
    Render(RenderArgs),
    /// Print the sets satisfying a relation query, one per line.
    Query(QueryArgs),
    /// Print pairwise intersection, disjointness and subset counts.
    Stats(InputArgs),
    /// Write a task question bundle as JSON.
    Quiz(QuizArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_parser = parse_format)]
    format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Diagram {
    Linear,
    Mosaic,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Heuristic,
    Exact,
    Given,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Equal,
    Cardinality,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Intersect,
    Subset,
    Disjoint,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    diagram: Diagram,
    #[arg(long, value_enum, default_value = "heuristic")]
    order: OrderArg,
    /// Comma-separated zone indices, required with `--order given`.
    #[arg(long, value_delimiter = ',')]
    zone_order: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the layout as JSON.
    #[arg(long)]
    dump_layout: Option<PathBuf>,
    #[command(flatten)]
    colors: ColorArgs,
    #[command(flatten)]
    style: StyleArgs,
}

#[derive(Args)]
struct ColorArgs {
    /// Comma-separated `#rrggbb` colours, one per set in legend order.
    #[arg(long)]
    colors: Option<String>,
    /// Skip the minimum-distance check on `--colors`.
    #[arg(long, requires = "colors")]
    no_color_check: bool,
    /// Minimum CIELUV distance between set colours.
    #[arg(long, default_value_t = DEFAULT_SEPARATION)]
    color_threshold: f64,
}

#[derive(Args)]
struct StyleArgs {
    #[arg(long)]
    width: Option<f64>,
    #[arg(long)]
    height: Option<f64>,
    #[arg(long)]
    line_thickness: Option<f64>,
    #[arg(long)]
    border_width: Option<f64>,
}

#[derive(Args)]
struct QueryArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    relation: RelationArg,
    /// One target for an easy query, two for a hard one.
    #[arg(long = "target", required = true, num_args = 1)]
    targets: Vec<String>,
}

#[derive(Args)]
struct QuizArgs {
    /// Twelve inputs for a full task set, or one with `--task`.
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    format: InputFormat,
    /// Single question of this kind, e.g. `EI` or `HD`.
    #[arg(long, value_parser = parse_task)]
    task: Option<TaskKind>,
    /// Candidate sets per question (single question only).
    #[arg(long, requires = "task")]
    choices: Option<usize>,
    /// Fixed targets (single question only).
    #[arg(long = "target", requires = "task")]
    targets: Vec<String>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    replication: u8,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Directory for one SVG per question (task set only).
    #[arg(long, conflicts_with = "task")]
    diagrams: Option<PathBuf>,
    #[command(flatten)]
    style: StyleArgs,
}

fn parse_format(s: &str) -> Result<InputFormat, String> {
    s.parse()
}

fn parse_task(s: &str) -> Result<TaskKind, String> {
    s.parse::<TaskKind>().map_err(|e| e.to_string())
}

/// Exit status classes.
enum Failure {
    Usage(String),
    Data(String),
}

impl From<setmosaic::Error> for Failure {
    fn from(e: setmosaic::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

/// Files to write once everything has been validated.
#[derive(Default)]
struct Outputs(Vec<(Option<PathBuf>, String)>);

impl Outputs {
    fn push(&mut self, path: Option<PathBuf>, text: String) {
        self.0.push((path, text));
    }

    fn flush(self) -> Outcome<()> {
        let stdout = io::stdout();
        for (path, text) in self.0 {
            match path {
                Some(p) => fs::write(&p, text)
                    .map_err(|e| Failure::Data(format!("{}: {e}", p.display())))?,
                None => stdout
                    .lock()
                    .write_all(text.as_bytes())
                    .map_err(|e| Failure::Data(format!("stdout: {e}")))?,
            }
        }
        Ok(())
    }
}

fn read(path: &Path) -> Outcome<Vec<u8>> {
    fs::read(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn load(path: &Path, format: InputFormat) -> Outcome<ZoneSet> {
    let bytes = read(path)?;
    load_zones(format, &bytes).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn style(args: &StyleArgs) -> Outcome<Style> {
    let mut style = match std::env::var_os(STYLE_ENV) {
        Some(path) => {
            let path = PathBuf::from(path);
            Style::from_json(&read(&path)?)
                .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?
        }
        None => Style::default(),
    };
    let overrides = [
        (args.width, &mut style.width),
        (args.height, &mut style.height),
        (args.line_thickness, &mut style.line_thickness),
        (args.border_width, &mut style.border_width),
    ];
    for (value, field) in overrides {
        if let Some(v) = value {
            *field = v;
        }
    }
    style.validate()?;
    Ok(style)
}

fn palette(zones: &ZoneSet, args: &ColorArgs) -> Outcome<Palette> {
    Ok(match &args.colors {
        Some(list) => {
            let colors = parse_color_list(list)?;
            let threshold = (!args.no_color_check).then_some(args.color_threshold);
            Palette::from_colors(zones.labels(), &colors, threshold)?
        }
        None => Palette::generate(zones.labels(), args.color_threshold)?,
    })
}

fn render(args: RenderArgs) -> Outcome<Outputs> {
    let given = matches!(args.order, OrderArg::Given);
    if given != args.zone_order.is_some() {
        return Err(Failure::Usage(
            "--zone-order is required with, and only allowed with, --order given".into(),
        ));
    }
    if args.mode.is_some() && matches!(args.diagram, Diagram::Linear) {
        return Err(Failure::Usage(
            "--mode applies to mosaic diagrams only".into(),
        ));
    }
    let style = style(&args.style)?;
    let zones = load(&args.input.input, args.input.format)?;
    let order = match (args.order, args.zone_order) {
        (OrderArg::Heuristic, _) => order_zones(&zones, OrderStrategy::Heuristic)?,
        (OrderArg::Exact, _) => order_zones(&zones, OrderStrategy::Exact)?,
        (OrderArg::Given, Some(list)) => ZoneOrder::new(list, zones.zone_count())?,
        (OrderArg::Given, None) => unreachable!("checked above"),
    };
    let palette = palette(&zones, &args.colors)?;

    let (svg, layout) = match args.diagram {
        Diagram::Linear => {
            let layout = linear_layout(&zones, &order)?;
            (render_linear(&layout, &palette, &style)?, layout.to_json())
        }
        Diagram::Mosaic => {
            let mode = match args.mode {
                Some(ModeArg::Cardinality) => MosaicMode::Cardinality,
                _ => MosaicMode::Equal,
            };
            let layout = mosaic_layout(&zones, &order, mode)?;
            (render_mosaic(&layout, &palette, &style)?, layout.to_json())
        }
    };
    let mut out = Outputs::default();
    out.push(args.output, svg.into_string());
    if let Some(path) = args.dump_layout {
        out.push(Some(path), layout + "\n");
    }
    Ok(out)
}

fn query(args: QueryArgs) -> Outcome<Outputs> {
    let relation = match args.relation {
        RelationArg::Intersect => Relation::Intersect,
        RelationArg::Subset => Relation::Subset,
        RelationArg::Disjoint => Relation::Disjoint,
    };
    let query = match &args.targets[..] {
        [x] => Query::easy(relation, x.clone()),
        [x, y] => Query::hard(relation, x.clone(), y.clone()),
        _ => {
            return Err(Failure::Usage(
                "--target must be given once or twice".into(),
            ))
        }
    };
    let zones = load(&args.input.input, args.input.format)?;
    let text: String = zones
        .sets_satisfying(&query)?
        .into_iter()
        .map(|l| l + "\n")
        .collect();
    let mut out = Outputs::default();
    out.push(None, text);
    Ok(out)
}

fn stats(args: InputArgs) -> Outcome<Outputs> {
    let zones = load(&args.input, args.format)?;
    let mut out = Outputs::default();
    out.push(None, format!("{}\n", zones.relation_counts()));
    Ok(out)
}

fn quiz(args: QuizArgs) -> Outcome<Outputs> {
    let mut out = Outputs::default();
    if let Some(task) = args.task {
        let [input] = &args.inputs[..] else {
            return Err(Failure::Usage("--task takes exactly one --input".into()));
        };
        let zones = load(input, args.format)?;
        let options = QuestionOptions {
            choice_count: args.choices,
            targets: (!args.targets.is_empty()).then_some(args.targets),
        };
        let question = generate_question_with(&zones, task, args.seed, &options)?;
        let json = serde_json::to_string_pretty(&question).expect("question serializes");
        out.push(args.output, json + "\n");
        return Ok(out);
    }

    if args.inputs.len() != 12 {
        return Err(Failure::Usage(format!(
            "a task set needs 12 --input files (or use --task), got {}",
            args.inputs.len()
        )));
    }
    let style = style(&args.style)?;
    let zone_sets = args
        .inputs
        .iter()
        .map(|p| load(p, args.format))
        .collect::<Outcome<Vec<_>>>()?;
    let set = generate_task_set(&zone_sets, args.replication, args.seed)?;

    if let Some(dir) = &args.diagrams {
        if !dir.is_dir() {
            return Err(Failure::Data(format!("{}: not a directory", dir.display())));
        }
        for entry in &set.entries {
            let zones = &zone_sets[entry.question_number - 1];
            let order = order_zones(zones, OrderStrategy::Heuristic)?;
            let palette = Palette::generate(zones.labels(), DEFAULT_SEPARATION)?;
            let svg = match entry.visualization {
                Visualization::Linear => {
                    render_linear(&linear_layout(zones, &order)?, &palette, &style)?
                }
                Visualization::Mosaic => render_mosaic(
                    &mosaic_layout(zones, &order, MosaicMode::Equal)?,
                    &palette,
                    &style,
                )?,
            };
            out.push(Some(dir.join(entry.diagram_file())), svg.into_string());
        }
    }
    out.push(args.output, set.to_bundle_json() + "\n");
    Ok(out)
}

fn run(cli: Cli) -> Outcome<()> {
    let outputs = match cli.command {
        Command::Render(a) => render(a)?,
        Command::Query(a) => query(a)?,
        Command::Stats(a) => stats(a)?,
        Command::Quiz(a) => quiz(a)?,
    };
    outputs.flush()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
