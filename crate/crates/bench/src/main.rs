use clap::{Parser, ValueEnum};

use gridpaths_bench::{bench_compare, DEFAULT_ORACLE_CAP};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

/// Time closed-form path counting against the layered search oracle.
#[derive(Debug, Parser)]
#[command(name = "gridpaths-bench", version)]
struct Args {
    /// Largest m in the point family (m, m/2, m/4).
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    max_coord: u64,
    /// Skip the oracle above this digital distance.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: u128,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() {
    let args = Args::parse();
    let report = bench_compare(args.max_coord, args.oracle_cap);
    match args.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Csv => print!("{}", report.to_csv()),
    }
    if !report.all_equal() {
        eprintln!("error: formula and oracle disagree");
        std::process::exit(2);
    }
}
