//! Command-line front end: `tour`, `census`, `verify` and `perm`.
//!
//! Exit codes: 0 on success, 1 when verification finds a mismatch, 2 for
//! usage and validation errors.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::board::{BoardSize, Square};
use crate::census::{failure_table, summarize};
use crate::heuristic::{run_tour, TieBreakPolicy};
use crate::permutations::{base_order, parse_order, rank, reverse, unrank, MoveOrder, OrderRank};
use crate::report::{render_census, render_grid, write_census_csv, ReportDocument, Timing};
use crate::verify::{render_table, verify, VerifyOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "warnsdorff",
    version,
    about = "Warnsdorff knight's tours and move-order census"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one tour and print its visit grid.
    Tour(TourArgs),
    /// Run every move order from every start square.
    Census(CensusArgs),
    /// Check the published figures and counts.
    Verify(VerifyArgs),
    /// Convert between move orders and ranks.
    #[command(subcommand)]
    Perm(PermCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    First,
    Last,
}

impl From<Policy> for TieBreakPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::First => TieBreakPolicy::FirstEncountered,
            Policy::Last => TieBreakPolicy::LastEncountered,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TourFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CensusFormat {
    Text,
    Json,
    Csv,
}

fn parse_size(s: &str) -> Result<BoardSize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    BoardSize::new(n).map_err(|e| e.to_string())
}

fn parse_square(s: &str) -> Result<Square, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_move_order(s: &str) -> Result<MoveOrder, String> {
    parse_order(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct TourArgs {
    /// Start square as "row,col", zero-based.
    #[arg(long, value_parser = parse_square)]
    pub start: Square,
    /// Move order as "<dx,dy>" tokens; defaults to the base order.
    #[arg(long, value_parser = parse_move_order)]
    pub order: Option<MoveOrder>,
    #[arg(long, value_enum, default_value = "first")]
    pub policy: Policy,
    #[arg(long, value_parser = parse_size, default_value = "8")]
    pub size: BoardSize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TourFormat,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, value_enum, default_value = "first")]
    pub policy: Policy,
    #[arg(long, value_parser = parse_size, default_value = "8")]
    pub size: BoardSize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: CensusFormat,
    /// Include the failures-per-order histogram in text output.
    #[arg(long)]
    pub histogram: bool,
    /// Attach wall-clock timing to JSON output.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Only the tour and named-order checks; skip the full censuses.
    #[arg(long)]
    pub quick: bool,
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum PermCommand {
    /// Print the rank of a move order.
    Rank { order: String },
    /// Print the move order with the given rank.
    Unrank { rank: String },
    /// Print a move order reversed.
    Reverse { order: String },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Tour(args) => cmd_tour(args, out),
        Command::Census(args) => cmd_census(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Perm(cmd) => cmd_perm(cmd, out),
    };
    match result {
        Ok(code) => code,
        Err(e) if is_broken_pipe(e.as_ref()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn is_broken_pipe(e: &(dyn std::error::Error + 'static)) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

type CmdResult = Result<u8, Box<dyn std::error::Error>>;

pub fn cmd_tour(args: TourArgs, out: &mut dyn Write) -> CmdResult {
    let start = args.size.check(args.start)?;
    let order = args.order.unwrap_or_else(base_order);
    let tour = run_tour(start, &order, args.policy.into(), args.size);
    match args.format {
        TourFormat::Text => {
            out.write_all(render_grid(&tour).as_bytes())?;
            writeln!(out, "start: {}", tour.start)?;
            writeln!(out, "final: {}", tour.last())?;
            writeln!(out, "length: {}", tour.length)?;
            writeln!(
                out,
                "hamiltonian: {}, closed: {}",
                tour.hamiltonian, tour.closed
            )?;
        }
        TourFormat::Json => writeln!(out, "{}", ReportDocument::for_tour(&tour).to_json())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_census(args: CensusArgs, out: &mut dyn Write) -> CmdResult {
    let workers = args.workers.unwrap_or_else(default_workers);
    if workers == 0 {
        return Err("--workers must be at least 1".into());
    }
    let policy = args.policy.into();
    let started = Instant::now();
    let failures = failure_table(policy, args.size, workers);
    let summary = summarize(policy, args.size, &failures);
    match args.format {
        CensusFormat::Text => out.write_all(render_census(&summary, args.histogram).as_bytes())?,
        CensusFormat::Json => {
            let mut doc = ReportDocument::for_census(&summary);
            if args.timing {
                doc.timing = Some(Timing {
                    elapsed_ms: started.elapsed().as_millis() as u64,
                    workers,
                });
            }
            writeln!(out, "{}", doc.to_json())?;
        }
        CensusFormat::Csv => write_census_csv(out, &failures)?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let workers = args.workers.unwrap_or_else(default_workers).max(1);
    let checks = verify(VerifyOptions {
        quick: args.quick,
        workers,
    });
    out.write_all(render_table(&checks).as_bytes())?;
    Ok(if checks.iter().all(|c| c.passed()) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

pub fn cmd_perm(cmd: PermCommand, out: &mut dyn Write) -> CmdResult {
    match cmd {
        PermCommand::Rank { order } => writeln!(out, "{}", rank(&parse_order(&order)?))?,
        PermCommand::Unrank { rank } => {
            let r: u64 = rank
                .trim()
                .parse()
                .map_err(|_| format!("invalid rank {rank:?}"))?;
            writeln!(out, "{}", unrank(OrderRank::new(r)?))?
        }
        PermCommand::Reverse { order } => writeln!(out, "{}", reverse(&parse_order(&order)?))?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("warnsdorff").chain(args.iter().copied()))
            .expect("arguments parse");
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn off_board_start_is_a_validation_error() {
        let (code, _, err) = run_args(&["tour", "--start", "9,0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("off a 8x8 board"), "{err}");
    }

    #[test]
    fn bad_flags_fail_to_parse() {
        assert!(Cli::try_parse_from(["warnsdorff", "tour"]).is_err());
        assert!(Cli::try_parse_from([
            "warnsdorff",
            "tour",
            "--start",
            "0,0",
            "--policy",
            "random"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["warnsdorff", "census", "--size", "0"]).is_err());
        assert!(
            Cli::try_parse_from(["warnsdorff", "tour", "--start", "0,0", "--order", "<1,3>"])
                .is_err()
        );
    }

    #[test]
    fn perm_commands() {
        assert_eq!(
            run_args(&["perm", "unrank", "0"]).1.trim(),
            base_order().to_string()
        );
        assert_eq!(
            run_args(&["perm", "rank", &base_order().reversed().to_string()])
                .1
                .trim(),
            "40319"
        );
        let (code, _, err) = run_args(&["perm", "rank", "<bad>"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("<bad>"));
        assert_eq!(run_args(&["perm", "unrank", "40320"]).0, EXIT_USAGE);
    }

    #[test]
    fn zero_workers_rejected() {
        assert_eq!(
            run_args(&["census", "--size", "2", "--workers", "0"]).0,
            EXIT_USAGE
        );
    }
}
