use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use nrgit_cli::{run, Command, Format, JobSpec};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    /// Torus stability of each panel point
    Stability,
    /// Chambers and the adapted window of the grading
    Chamber,
    /// Kirwan strata of the torus action
    Strata,
    /// Conditions, blowup centre and hat-stability of the graded group
    Graded,
    /// Stability of `(x, [1:1])` on `X × P¹`
    Hatstable,
    /// Invariant dimensions, generator degrees and nonvanishing tests
    Invariants,
    /// Write the built-in documents to `--out`
    Examples,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Stability => Command::Stability,
            Cmd::Chamber => Command::Chamber,
            Cmd::Strata => Command::Strata,
            Cmd::Graded => Command::Graded,
            Cmd::Hatstable => Command::Hatstable,
            Cmd::Invariants => Command::Invariants,
            Cmd::Examples => Command::Examples,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Fmt {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "nrgit", version, about = "Exact stability computations for graded group actions")]
struct Args {
    command: Cmd,
    /// Action document (JSON)
    #[arg(long)]
    action: Option<PathBuf>,
    /// Points file, or inline `name=1,2,3;4,5,6`
    #[arg(long)]
    points: Option<String>,
    /// Override the grading character
    #[arg(long, allow_hyphen_values = true)]
    chi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long, default_value_t = nrgit_core::torus::DEFAULT_SUBSET_CAP)]
    subset_cap: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Fmt::Json)]
    format: Fmt,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let job = JobSpec {
        command: args.command.into(),
        action: args.action,
        points: args.points,
        chi: args.chi,
        q: args.q,
        m: args.m,
        max_degree: args.max_degree,
        subset_cap: args.subset_cap,
        seed: args.seed,
        format: match args.format {
            Fmt::Json => Format::Json,
            Fmt::Text => Format::Text,
        },
        out: args.out,
    };
    match run(&job) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
