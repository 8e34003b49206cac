mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nilorb::classical::Family;
use nilorb::numbering::Numbering;
use nilorb::{Result, SearchConfig, Verdict};

use commands::{Action, Check, Run};
use render::{Format, Rendered};

#[derive(Parser)]
#[command(
    name = "nilorb",
    version,
    about = "Nilpotent orbits, divisible diagrams and friendly pairs"
)]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random witnesses tried per diagram.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, global = true, default_value = "bourbaki", value_parser = parse_numbering)]
    numbering: Numbering,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted Dynkin diagrams of a simple type.
    Orbits { r#type: String },
    /// Friendly pairs with very-friendly and reachability verdicts.
    Pairs { r#type: String },
    /// Partition data in sl, sp or so.
    Classical {
        #[arg(value_parser = parse_family)]
        family: Family,
        partition: String,
        #[arg(value_enum)]
        action: Action,
    },
    /// Checks on one diagram, given as comma-separated marks.
    Verify {
        r#type: String,
        diagram: String,
        #[arg(long = "check", value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
    },
    /// Branching of R(a, b) to the principal sl2.
    Sl3 {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
}

fn parse_numbering(s: &str) -> std::result::Result<Numbering, String> {
    s.parse()
        .map_err(|_| format!("expected bourbaki or vo, got '{s}'"))
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse()
        .map_err(|_| format!("expected sl, sp or so, got '{s}'"))
}

fn dispatch(cli: &Cli) -> Result<(Rendered, Verdict)> {
    let run = Run {
        cfg: SearchConfig {
            seed: cli.seed,
            trials: cli.trials as usize,
            ..SearchConfig::default()
        },
        numbering: cli.numbering,
    };
    match &cli.command {
        Command::Orbits { r#type } => Ok(run.orbits(commands::parse_type(r#type)?)),
        Command::Pairs { r#type } => Ok(run.pairs(commands::parse_type(r#type)?)),
        Command::Classical {
            family,
            partition,
            action,
        } => run.classical(*family, partition, *action),
        Command::Verify {
            r#type,
            diagram,
            checks,
        } => {
            let t = commands::parse_type(r#type)?;
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks.clone()
            };
            run.verify(t, diagram, &checks)
        }
        Command::Sl3 { a, b } => commands::sl3(*a, *b),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((out, verdict)) => {
            print!("{}", out.emit(cli.output));
            ExitCode::from(match verdict {
                Verdict::Pass => 0,
                Verdict::Fail => 1,
                Verdict::Inconclusive => 3,
            })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
