use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use signpart::characters::DEFAULT_CAPACITY;
use signpart::{parse_partition, Error, MemoCache, Partition};

mod commands;

/// Exact symmetric group characters and sign conjugacy classes.
#[derive(Debug, Parser)]
#[command(name = "signpart", version, about)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Memo snapshot to load at start and save on exit. SIGNPART_CACHE takes precedence.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Worker threads: a positive count or "auto".
    #[arg(long, global = true, default_value = "auto", value_parser = parse_threads)]
    threads: Threads,

    /// Largest n for tables and brute-force sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_CAPACITY)]
    capacity: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one character value χ^λ_μ.
    Char {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Print the character table of S_n.
    Table { n: usize },
    /// Decide whether a class is a sign class.
    Classify {
        #[arg(long, value_parser = parse_partition)]
        gamma: Partition,
        /// Also run the brute-force test and require agreement.
        #[arg(long)]
        verify: bool,
    },
    /// List the sign partitions of n.
    Enumerate { n: usize },
    /// Construct a witness β with |χ^β_α| ≥ 2.
    Witness {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        /// Re-evaluate the value with an independent recursion.
        #[arg(long)]
        check: bool,
    },
    /// Compare the sign-set test with brute force for every n up to --max-n.
    Verify {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy)]
enum Threads {
    Auto,
    Count(usize),
}

fn parse_threads(s: &str) -> Result<Threads, String> {
    if s == "auto" {
        return Ok(Threads::Auto);
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer or \"auto\", got {s:?}")),
        Ok(n) => Ok(Threads::Count(n)),
    }
}

/// Failure of a command, already mapped to its exit status.
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Output produced before the failure was detected.
    pub partial: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::NotAPartition(_)
            | Error::CellOutOfDiagram { .. }
            | Error::SizeMismatch { .. }
            | Error::PreconditionViolated(_) => 2,
            Error::CapacityExceeded { .. } => 3,
            Error::Inconsistency { .. }
            | Error::ClaimMismatch { .. }
            | Error::NotAWitness { .. }
            | Error::SearchExhausted { .. } => 4,
            Error::Overflow(_) | Error::Snapshot(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
            partial: String::new(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Threads::Count(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }

    let cache = MemoCache::new().with_capacity_n(cli.capacity);
    let cache_path = std::env::var_os("SIGNPART_CACHE").map(PathBuf::from).or(cli.cache.clone());
    if let Some(path) = cache_path.as_deref().filter(|p| p.exists()) {
        match cache.load_snapshot(path) {
            Ok(0) => eprintln!("note: {} was written by an incompatible build; ignored", path.display()),
            Ok(_) => {}
            Err(e) => eprintln!("warning: {e}; starting with an empty cache"),
        }
    }

    let result = commands::run(&cli.command, cli.format, &cache);

    if let Some(path) = cache_path.as_deref() {
        if let Err(e) = cache.save_snapshot(path) {
            eprintln!("warning: {e}");
        }
    }

    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            print!("{}", f.partial);
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
