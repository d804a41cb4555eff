use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::render::{Canvas, Mode};
use super::report::{summary_line, write_tsv};
use super::scene::{load_scene, LoadError, Scene, SceneErrorKind, Window};
use super::{exit, CliError};
use crate::lattice::{DigitalCircle, PixelPoint};
use crate::metrics::{hausdorff_distance, symmetric_difference_metric};
use crate::proximity::{counterexample_search, verify_pair, Formula, SweepBounds};
use crate::{
    circle_cardinality_closed, disc_cardinality_closed, enumerate_circle, enumerate_disc, Disc,
    DiscPair, EnumCap, GeometryError, DEFAULT_ENUM_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Pixmap,
    Vector,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "l1disc", version, about = "Digital discs under the taxicab metric")]
pub struct Cli {
    /// Scene file (`label cx cy radius` per line)
    #[arg(long, global = true)]
    pub scene: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when absent
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 12)]
    pub max_radius: u32,
    #[arg(long, global = true, default_value_t = 24)]
    pub max_offset: u32,
    /// Comma-separated subset of thm1,thm2,thm3,corollary (default: all)
    #[arg(long, global = true, value_delimiter = ',')]
    pub formulas: Vec<Formula>,
    /// Largest radius that may be enumerated pixel by pixel
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP)]
    pub enum_cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form vs enumerated pixel counts
    Card {
        #[arg(long, allow_negative_numbers = true)]
        disc: Vec<i64>,
        #[arg(long, allow_negative_numbers = true)]
        circle: Vec<i64>,
    },
    /// Proximity of two scene discs
    Metric { a: String, b: String },
    /// Exhaustive closed-form sweep against enumeration
    Verify,
    /// Draw two scene discs (default: the first two)
    Render {
        labels: Vec<String>,
        /// Draw boundary circles only
        #[arg(long)]
        boundaries: bool,
    },
}

/// Parses `args` (program name first) and runs the command. Returns the exit
/// code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    let result = match &cli.command {
        Command::Card { disc, circle } => cmd_card(&cli, disc, circle, stdout),
        Command::Metric { a, b } => cmd_metric(&cli, a, b, stdout),
        Command::Verify => cmd_verify(&cli, stdout),
        Command::Render { labels, boundaries } => cmd_render(&cli, labels, *boundaries, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "l1disc: {e}");
            e.exit_code()
        }
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn scene_of(cli: &Cli) -> Result<Scene, CliError> {
    let path = cli
        .scene
        .as_deref()
        .ok_or_else(|| CliError::Usage("--scene <path> is required".into()))?;
    load_scene(path).map_err(|e| match e {
        LoadError::Io(io) => CliError::Io(format!("{}: {io}", path.display())),
        LoadError::Scene(se) => {
            let msg = format!("{}:{se}", path.display());
            match se.kind {
                SceneErrorKind::Parse => CliError::Parse(msg),
                SceneErrorKind::Validation => CliError::Invalid(msg),
            }
        }
    })
}

fn lookup<'a>(scene: &'a Scene, label: &str) -> Result<&'a Disc, CliError> {
    scene
        .get(label)
        .ok_or_else(|| CliError::Usage(format!("no disc labelled {label:?} in the scene")))
}

/// Sends bytes to `--out` when given, else to stdout.
fn emit(out: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout.write_all(bytes).map_err(io_err),
    }
}

fn cmd_card(cli: &Cli, discs: &[i64], circles: &[i64], stdout: &mut dyn Write) -> Result<i32, CliError> {
    if discs.is_empty() && circles.is_empty() {
        return Err(CliError::Usage("card needs --disc <R> or --circle <r>".into()));
    }
    let cap = EnumCap(cli.enum_cap);
    let invalid = |e: GeometryError| CliError::Invalid(e.to_string());
    let mut rows = vec![["kind", "radius", "closed form", "enumerated", "agreement"].map(String::from)];
    for &r in discs {
        let shape = Disc::new(PixelPoint::origin(), r).map_err(invalid)?;
        let closed = disc_cardinality_closed(r).map_err(invalid)?;
        let counted = enumerate_disc(&shape, cap).map(|s| s.len() as i64);
        rows.push(card_row("disc", r, Ok(closed), counted));
    }
    for &r in circles {
        let shape = DigitalCircle::new(PixelPoint::origin(), r).map_err(invalid)?;
        let counted = enumerate_circle(&shape, cap).map(|s| s.len() as i64);
        rows.push(card_row("circle", r, circle_cardinality_closed(r), counted));
    }
    for row in rows {
        writeln!(stdout, "{}", row.join(" | ")).map_err(io_err)?;
    }
    Ok(exit::OK)
}

fn card_row(
    kind: &str,
    radius: i64,
    closed: Result<i64, GeometryError>,
    counted: Result<i64, GeometryError>,
) -> [String; 5] {
    let agreement = match (&closed, &counted) {
        (Ok(a), Ok(b)) if a == b => "ok",
        (Ok(_), Ok(_)) => "MISMATCH",
        (_, Err(GeometryError::EnumerationCap { .. })) => "skipped",
        _ => "n/a",
    };
    let closed = closed.map_or_else(|e| format!("domain error: {e}"), |v| v.to_string());
    let counted = match counted {
        Ok(v) => v.to_string(),
        Err(GeometryError::EnumerationCap { .. }) => "skipped".to_string(),
        Err(e) => format!("error: {e}"),
    };
    [kind.to_string(), radius.to_string(), closed, counted, agreement.to_string()]
}

fn cmd_metric(cli: &Cli, a: &str, b: &str, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let scene = scene_of(cli)?;
    let (da, db) = (*lookup(&scene, a)?, *lookup(&scene, b)?);
    let cap = EnumCap(cli.enum_cap);
    let geometry = |e: GeometryError| match e {
        GeometryError::EnumerationCap { .. } => CliError::Usage(format!("{e} (raise --enum-cap)")),
        other => CliError::Invalid(other.to_string()),
    };
    let set_a = enumerate_disc(&da, cap).map_err(geometry)?;
    let set_b = enumerate_disc(&db, cap).map_err(geometry)?;
    let report = verify_pair(&DiscPair::new(da, db), cap).map_err(geometry)?;
    let m = symmetric_difference_metric(&set_a, &set_b);
    let hausdorff = hausdorff_distance(&set_a, &set_b).map_err(geometry)?;

    let mut text = String::new();
    text += &format!("{a} = {da}\n{b} = {db}\n");
    text += &format!("card({a}) = {}\ncard({b}) = {}\n", set_a.len(), set_b.len());
    text += &format!("card({a} ∩ {b}) = {}\n", report.card_intersection);
    text += &format!("m({a}, {b}) = {m}\nd_H({a}, {b}) = {hausdorff}\n");
    text += &format!("regime = {}\n", report.classification);
    if report.checks.is_empty() {
        text += "closed forms: none applicable\n";
    }
    for check in &report.checks {
        text += &format!(
            "{}: closed {} | oracle {} | {}\n",
            check.form,
            check.closed,
            report.oracle_m,
            if check.agrees { "ok" } else { "DISAGREES" }
        );
    }
    stdout.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(exit::OK)
}

fn cmd_verify(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if !matches!(cli.format, None | Some(Format::Tsv)) {
        return Err(CliError::Usage("verify writes tsv only".into()));
    }
    let formulas: Vec<Formula> = if cli.formulas.is_empty() {
        Formula::ALL.to_vec()
    } else {
        cli.formulas.clone()
    };
    let bounds = SweepBounds {
        max_radius: cli.max_radius,
        max_offset: cli.max_offset,
    };
    let summary = counterexample_search(bounds, &formulas, EnumCap(cli.enum_cap)).map_err(|e| match e {
        GeometryError::EnumerationCap { .. } | GeometryError::OutOfBound { .. } => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Invalid(other.to_string()),
    })?;

    match &cli.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_tsv(&summary, &mut w).and_then(|_| w.flush()).map_err(io_err)?;
        }
        None => write_tsv(&summary, stdout).map_err(io_err)?,
    }
    writeln!(stdout, "{}", summary_line(&summary)).map_err(io_err)?;
    Ok(if summary.disagreement_count() == 0 {
        exit::OK
    } else {
        exit::DISAGREEMENT
    })
}

fn cmd_render(cli: &Cli, labels: &[String], boundaries: bool, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let scene = scene_of(cli)?;
    let chosen: Vec<Disc> = match labels.len() {
        0 => scene.discs.iter().take(2).map(|(_, d)| *d).collect(),
        1 | 2 => labels.iter().map(|l| lookup(&scene, l).copied()).collect::<Result<_, _>>()?,
        _ => return Err(CliError::Usage("render draws at most two discs".into())),
    };
    let canvas = Canvas {
        first: chosen.first().copied(),
        second: chosen.get(1).copied(),
        window: scene.window.or_else(|| Window::around(&chosen, 1)),
        mode: if boundaries { Mode::Boundaries } else { Mode::Fill },
    };
    let bytes = match cli.format.unwrap_or(Format::Ascii) {
        Format::Ascii => canvas.to_ascii().into_bytes(),
        Format::Pixmap => canvas.to_ppm(),
        Format::Vector => canvas.to_svg().into_bytes(),
        Format::Tsv => return Err(CliError::Usage("render supports ascii, pixmap or vector".into())),
    };
    emit(cli.out.as_deref(), &bytes, stdout)?;
    Ok(exit::OK)
}
