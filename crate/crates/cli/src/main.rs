mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coxinv_core::normalizers::{BulkyContext, StrategyRegistry};
use coxinv_core::rootsystem::{CoxeterType, RootSystem};
use coxinv_core::verify::{default_sweep, dihedral_consistency, sweep, verify_type, SweepConfig};
use coxinv_core::{fvcharacters, normalizers, Error};

/// Involutions, bulky parabolic subgroups and the special-involution
/// character for finite Coxeter groups, in exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "coxinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest group order enumerated for brute-force checks.
    #[arg(long, default_value_t = 60_000, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    oracle_threshold: u64,

    /// Largest rank included in `verify all`.
    #[arg(long, default_value_t = 8, global = true)]
    max_rank: usize,

    /// Seed for randomized conjugation checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Bulkiness decision method (fast, loops, groupoid, brute).
    #[arg(long, default_value = "fast", global = true)]
    bulky_method: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root count, simple roots and coefficient field.
    Roots { r#type: String },
    /// One row per involution class.
    Involutions { r#type: String },
    /// Check the theorem and its supporting properties for one type or `all`.
    Verify { scope: String },
    /// The virtual character over special involution classes.
    Character {
        r#type: String,
        /// Sum over even special involutions only.
        #[arg(long)]
        twisted: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SIZE: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidType(_) | Error::InvalidOperand(_) | Error::Domain(_) => EXIT_USAGE,
        Error::SizeExceeded { .. } => EXIT_SIZE,
        _ => EXIT_COUNTEREXAMPLE,
    }
}

fn parse_type(s: &str) -> Result<CoxeterType, Error> {
    s.parse()
}

fn emit(format: Format, text: String, json: serde_json::Value) {
    let out = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&json).expect("serializable") + "\n",
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().write_all(out.as_bytes());
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let registry = StrategyRegistry::default();
    let strategy = registry.get(&cli.bulky_method)?;
    let threshold = usize::try_from(cli.oracle_threshold).unwrap_or(usize::MAX);
    let cfg = SweepConfig {
        oracle_threshold: threshold,
        seed: cli.seed,
        ..SweepConfig::default()
    };
    match &cli.command {
        Command::Roots { r#type } => {
            let rs = RootSystem::build(parse_type(r#type)?)?;
            emit(cli.format, render::roots_text(&rs), render::roots_json(&rs));
            Ok(0)
        }
        Command::Involutions { r#type } => {
            let rs = RootSystem::build(parse_type(r#type)?)?;
            let ctx = BulkyContext::with_oracle(&rs, threshold);
            let rows = normalizers::verify_theorem1(&ctx, strategy)?;
            emit(
                cli.format,
                render::involutions_text(&rs, &rows),
                render::involutions_json(&rs, &rows),
            );
            Ok(if rows.iter().all(|r| r.agrees()) { 0 } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Verify { scope } if scope.eq_ignore_ascii_case("all") => {
            let types = default_sweep(cli.max_rank);
            let reports = sweep(&types, strategy, &cfg)?;
            let dihedral = dihedral_consistency(strategy, &cfg)?;
            emit(
                cli.format,
                render::sweep_text(&reports, &dihedral),
                render::sweep_json(&reports, &dihedral),
            );
            let ok = reports.iter().all(|r| r.passed()) && dihedral.iter().all(|d| d.2);
            Ok(if ok { 0 } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Verify { scope } => {
            let t = parse_type(scope)?;
            let report = verify_type(t, strategy, &cfg)?;
            emit(cli.format, render::verify_text(&report), render::verify_json(&report));
            Ok(if report.passed() { 0 } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Character { r#type, twisted } => {
            let rs = RootSystem::build(parse_type(r#type)?)?;
            let cd = fvcharacters::conjugacy_classes(&rs, threshold)?;
            let chi = fvcharacters::fv_character(&rs, &cd, *twisted)?;
            let mult = fvcharacters::inner_product(&cd, &chi, &fvcharacters::trivial(&cd))?;
            emit(
                cli.format,
                render::character_text(&rs, &cd, &chi, &mult, *twisted),
                render::character_json(&rs, &cd, &chi, &mult, *twisted),
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            match &e {
                Error::SizeExceeded { limit } => eprintln!(
                    "error: the group has more than {limit} elements; raise --oracle-threshold to enumerate it"
                ),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
