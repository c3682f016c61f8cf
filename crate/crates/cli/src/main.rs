use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shiftlab_core::report::{run_command, Command};
use shiftlab_core::SearchBudget;

#[derive(Parser)]
#[command(
    name = "shiftlab",
    version,
    about = "Analyse two-dimensional shifts of finite type given by graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Spec file (dim, symbols, forbid, hmatrix/vmatrix directives)
    spec: PathBuf,
    /// Also write the JSON report here
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Print the JSON report instead of the text summary
    #[arg(long)]
    print_json: bool,
    #[arg(long, default_value_t = 64)]
    max_cells: u64,
    #[arg(long, default_value_t = 1_000_000)]
    max_nodes: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trim, split into components, run every criterion and the oracle
    Analyze(Common),
    /// Non-emptiness verdict only
    Nonempty(Common),
    /// Finiteness criteria and block-count evidence
    Finite(Common),
    /// Triomino sets, chaining matrices and E-pairs
    Epairs(Common),
    /// Recode to a one-step spec over blocks of the given window
    HigherBlock {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 2, value_names = ["M", "N"], required = true)]
        window: Vec<usize>,
    },
    /// Horizontal, vertical and doubly periodic points of the given periods
    Periodic {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 2, value_names = ["P", "Q"], required = true)]
        period: Vec<usize>,
    },
    /// All valid tori with the given periods
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 2, value_names = ["P", "Q"], required = true)]
        torus: Vec<usize>,
    },
    /// Counts of admissible n x n blocks
    Growth {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, command) = match cli.command {
        Cmd::Analyze(c) => (c, Command::Analyze),
        Cmd::Nonempty(c) => (c, Command::Nonempty),
        Cmd::Finite(c) => (c, Command::Finite),
        Cmd::Epairs(c) => (c, Command::EPairs),
        Cmd::HigherBlock { common, window } => (common, Command::HigherBlock { window }),
        Cmd::Periodic { common, period } => (
            common,
            Command::Periodic {
                width: period[0],
                height: period[1],
            },
        ),
        Cmd::Oracle { common, torus } => (common, Command::Oracle { periods: torus }),
        Cmd::Growth { common, max } => (common, Command::Growth { max }),
    };
    let text = match std::fs::read_to_string(&common.spec) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", common.spec.display());
            return ExitCode::from(1);
        }
    };
    let budget = SearchBudget {
        max_cells: common.max_cells,
        max_nodes: common.max_nodes,
    };
    let report = run_command(&command, &text, &budget);
    if let Some(path) = &common.json {
        if let Err(e) = std::fs::write(path, report.to_json_string() + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = if common.print_json {
        writeln!(std::io::stdout(), "{}", report.to_json_string())
    } else if report.exit_code == 1 {
        write!(std::io::stderr(), "{}", report.text)
    } else {
        write!(std::io::stdout(), "{}", report.text)
    };
    ExitCode::from(report.exit_code as u8)
}
