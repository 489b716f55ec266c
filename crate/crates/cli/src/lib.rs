//! Command-line front end: distances, closed-form counts, oracle counts,
//! path listings, verification sweeps and table export.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when a
//! verification sweep finds a mismatch.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gridpaths_core::{
    canonicalize, count, distance, enumerate_shortest_paths, oracle_count, shell_table,
    slice_table_2d, verify_region, CountTable, GridPoint, Mismatch, Neighborhood, VerifyReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gridpaths", version, about = "Shortest paths in the 3D cubic grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Digital distance between two points.
    Distance(PairArgs),
    /// Number of shortest paths, from the closed-form formulas.
    Count(PairArgs),
    /// Number of shortest paths, by explicit layered search.
    Oracle(PairArgs),
    /// List shortest paths in lexicographic step order.
    Paths(PathsArgs),
    /// Compare formulas against the search oracle on a box of points.
    Verify(VerifyArgs),
    /// Export path counts on a distance shell or the planar chessboard field.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Selection {
    One(Neighborhood),
    All,
}

impl Selection {
    fn neighborhoods(self) -> Vec<Neighborhood> {
        match self {
            Selection::One(n) => vec![n],
            Selection::All => Neighborhood::ALL.to_vec(),
        }
    }
}

fn parse_selection(s: &str) -> Result<Selection, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Selection::All);
    }
    s.parse().map(Selection::One).map_err(|_| "expected 6, 18, 26 or all".to_string())
}

fn parse_point(s: &str) -> Result<GridPoint, String> {
    s.parse().map_err(|_| "expected three comma-separated integers x,y,z".to_string())
}

fn parse_limit(s: &str) -> Result<usize, String> {
    let v: i128 = s.trim().parse().map_err(|_| "expected a positive integer".to_string())?;
    if v <= 0 {
        return Err("path limit must be positive".to_string());
    }
    usize::try_from(v).map_err(|_| "path limit too large".to_string())
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Start point x,y,z.
    #[arg(long, default_value = "0,0,0", value_parser = parse_point, allow_hyphen_values = true)]
    from: GridPoint,
    /// End point x,y,z.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    to: GridPoint,
    /// 6, 18, 26 or all.
    #[arg(short = 'n', long = "neighborhood", default_value = "all", value_parser = parse_selection)]
    neighborhood: Selection,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PathsFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct PathsArgs {
    #[arg(long, default_value = "0,0,0", value_parser = parse_point, allow_hyphen_values = true)]
    from: GridPoint,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    to: GridPoint,
    /// 6, 18 or 26.
    #[arg(short = 'n', long = "neighborhood", value_parser = parse_selection)]
    neighborhood: Selection,
    /// Stop after this many paths.
    #[arg(long, default_value = "10000", value_parser = parse_limit, allow_hyphen_values = true)]
    limit: usize,
    #[arg(long, value_enum, default_value_t = PathsFormat::Text)]
    format: PathsFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Check every canonical point with coordinates up to this value.
    #[arg(long, default_value_t = 5)]
    extent: u64,
    #[arg(short = 'n', long = "neighborhood", default_value = "all", value_parser = parse_selection)]
    neighborhood: Selection,
    #[arg(long, value_enum, default_value_t = PathsFormat::Text)]
    format: PathsFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Tsv,
    Json,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// 6, 18 or 26 (ignored with --planar).
    #[arg(short = 'n', long = "neighborhood", value_parser = parse_selection, required_unless_present = "planar")]
    neighborhood: Option<Selection>,
    /// Digital distance of the shell, or the largest coordinate with --planar.
    #[arg(long)]
    length: u64,
    /// List every sign/permutation image, not only canonical points.
    #[arg(long)]
    expand_symmetry: bool,
    /// Planar 8-neighborhood counts instead of a 3D shell.
    #[arg(long)]
    planar: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<gridpaths_core::Error> for Failure {
    fn from(e: gridpaths_core::Error) -> Self {
        match e {
            gridpaths_core::Error::Io(e) => Failure::Io(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn single(sel: Selection, cmd: &str) -> Result<Neighborhood, Failure> {
    match sel {
        Selection::One(n) => Ok(n),
        Selection::All => Err(Failure::Usage(format!("{cmd} needs a single neighborhood (6, 18 or 26)"))),
    }
}

/// `to - from`, if it fits in the grid coordinate range.
fn offset(from: GridPoint, to: GridPoint) -> Result<GridPoint, Failure> {
    let d = |a: i64, b: i64| {
        b.checked_sub(a)
            .ok_or_else(|| Failure::Usage("displacement between points exceeds the coordinate range".into()))
    };
    Ok(GridPoint::new(d(from.x, to.x)?, d(from.y, to.y)?, d(from.z, to.z)?))
}

/// One bare value for a single neighborhood, `N<k> <value>` lines for all.
fn print_per_neighborhood<T: std::fmt::Display>(
    out: &mut dyn Write,
    sel: Selection,
    value: impl Fn(Neighborhood) -> T,
) -> std::io::Result<()> {
    match sel {
        Selection::One(n) => writeln!(out, "{}", value(n)),
        Selection::All => {
            for n in Neighborhood::ALL {
                writeln!(out, "{n} {}", value(n))?;
            }
            Ok(())
        }
    }
}

fn cmd_paths(args: &PathsArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let n = single(args.neighborhood, "paths")?;
    let target = offset(args.from, args.to)?;
    let list = enumerate_shortest_paths(target, n, args.limit)?;
    match args.format {
        PathsFormat::Text => {
            for path in &list.paths {
                let steps: Vec<String> = path.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", steps.join(" "))?;
            }
        }
        PathsFormat::Json => {
            let paths: Vec<Vec<[i8; 3]>> = list
                .paths
                .iter()
                .map(|p| p.iter().map(|m| m.components()).collect())
                .collect();
            let doc = json!({
                "from": args.from.coords(),
                "to": args.to.coords(),
                "neighborhood": n.size(),
                "length": distance(args.from, args.to, n).to_string(),
                "truncated": list.truncated,
                "paths": paths,
            });
            writeln!(out, "{doc}")?;
        }
    }
    if list.truncated {
        writeln!(err, "note: output truncated at {} paths", args.limit)?;
    }
    Ok(EXIT_OK)
}

fn report_text(out: &mut dyn Write, r: &VerifyReport) -> std::io::Result<()> {
    writeln!(
        out,
        "{}: checked {} points up to {}, {} mismatches",
        r.neighborhood,
        r.checked,
        r.extent,
        r.mismatches.len()
    )?;
    for m in &r.mismatches {
        match m {
            Mismatch::Oracle { point, formula, oracle } => {
                writeln!(out, "  {point}: formula {formula}, oracle {oracle}")?
            }
            Mismatch::Overlap { point, max_case, half_case } => {
                writeln!(out, "  {point}: max-coordinate {max_case}, half-sum {half_case}")?
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let reports: Vec<VerifyReport> = args
        .neighborhood
        .neighborhoods()
        .into_iter()
        .map(|n| verify_region(args.extent, n))
        .collect();
    match args.format {
        PathsFormat::Text => {
            for r in &reports {
                report_text(out, r)?;
            }
        }
        PathsFormat::Json => {
            let doc = serde_json::to_string(&reports).map_err(gridpaths_core::Error::from)?;
            writeln!(out, "{doc}")?;
        }
    }
    Ok(if reports.iter().all(VerifyReport::is_ok) { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut table: CountTable = if args.planar {
        slice_table_2d(args.length)
    } else {
        let sel = args.neighborhood.expect("clap enforces -n without --planar");
        shell_table(single(sel, "table")?, args.length)
    };
    if args.expand_symmetry {
        table = table.expand_symmetry();
    }
    match args.format {
        TableFormat::Text => table.write_text(out)?,
        TableFormat::Csv => table.write_csv(out)?,
        TableFormat::Tsv => table.write_tsv(out)?,
        TableFormat::Json => table.write_json(out)?,
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Distance(a) => {
            print_per_neighborhood(out, a.neighborhood, |n| distance(a.from, a.to, n))?;
            Ok(EXIT_OK)
        }
        Command::Count(a) => {
            let off = canonicalize(a.to, a.from);
            print_per_neighborhood(out, a.neighborhood, |n| count(&off, n))?;
            Ok(EXIT_OK)
        }
        Command::Oracle(a) => {
            let target = offset(a.from, a.to)?;
            print_per_neighborhood(out, a.neighborhood, |n| oracle_count(target, n))?;
            Ok(EXIT_OK)
        }
        Command::Paths(a) => cmd_paths(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Table(a) => cmd_table(&a, out),
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    // keep only the headline, without the usage block
                    let text = e.render().to_string();
                    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("error: invalid arguments");
                    let _ = writeln!(err, "{line}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
