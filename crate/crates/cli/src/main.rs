use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crgedit::Rational;

mod commands;

#[derive(Parser)]
#[command(name = "crgedit", version, about = "Edit distance functions of cycle-power-free graphs via coloured regularity graphs")]
struct Cli {
    /// Worker threads for parallel sections (default: one per core).
    #[arg(long, global = true, env = "CRGEDIT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

/// Forbidden family: either `C_h^t` or graphs read from files.
#[derive(Args)]
struct Family {
    /// Cycle length of the forbidden cycle power.
    #[arg(long, required_unless_present = "forbidden")]
    h: Option<usize>,
    /// Power of the forbidden cycle.
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Graph files, each a forbidden induced subgraph.
    #[arg(long, conflicts_with = "h")]
    forbidden: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Edit distance function value with its regime.
    Edfun {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = rational)]
        p: Rational,
    },
    /// Upper bound gamma(p) in closed form.
    Gamma {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = rational)]
        p: Rational,
        /// Also compute it from the clique spectrum by embedding tests.
        #[arg(long)]
        brute: bool,
    },
    /// Clique spectrum table over a window.
    Spectrum {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long)]
        s_max: Option<usize>,
        /// Also report gamma(p) from the spectrum.
        #[arg(long, value_parser = rational)]
        p: Option<Rational>,
        /// Write the table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Solve the quadratic program g_K(p).
    Gk {
        #[arg(long)]
        crg: PathBuf,
        #[arg(long, value_parser = rational)]
        p: Rational,
    },
    /// p-core test with structure and weight identities.
    Pcore {
        #[arg(long)]
        crg: PathBuf,
        #[arg(long, value_parser = rational)]
        p: Rational,
    },
    /// Decide whether a graph embeds in a CRG.
    Embed {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        crg: PathBuf,
    },
    /// Exact distance of a graph to a hereditary property.
    Dist {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        family: Family,
    },
    /// Monte Carlo estimate of the edit distance at finite n.
    Montecarlo {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational)]
        p: Rational,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        family: Family,
    },
    /// Threshold p_0 with its parameters.
    Pzero {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        t: usize,
    },
    /// Search for a CRG beating gamma(p).
    Search {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = rational)]
        p: Rational,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        /// Sample this many random CRGs on kmax vertices instead.
        #[arg(long)]
        heuristic: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// CSV of gamma and the edit distance over a p grid.
    Curve {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        t: usize,
        /// `start:end:steps`, e.g. `0/1:1/2:10`.
        #[arg(long, value_parser = commands::parse_grid)]
        grid: commands::Grid,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Degree condition and cycle search on a weighted graph.
    SetupCheck {
        /// Graph file, optionally followed by a `weights ...` line.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        h: usize,
        #[arg(long, value_parser = rational)]
        p: Rational,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    crgedit::rational::parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("crgedit: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("crgedit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
