use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tough_ham::generate::GenKind;
use tough_ham::rational::Rational;
use tough_ham_cli::{
    cmd_check, cmd_metrics, cmd_run, cmd_survey, parse_t_grid, CliError, RunOptions, SurveyOptions, EXIT_USAGE,
};

#[derive(Parser)]
#[command(name = "tough-ham", version, about = "Certified Hamilton cycles for tough (2P2 + P1)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the certifying pipeline on every graph of a graph6 file.
    Run {
        /// Toughness bound, as NUM/DEN or an integer.
        #[arg(long, default_value = "11")]
        t: Rational,
        #[arg(long)]
        input: PathBuf,
        /// Certificate file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Vertex cap for exhaustive toughness enumeration.
        #[arg(long, default_value_t = RunOptions::default().cap_toughness)]
        cap_toughness: usize,
        /// Vertex cap for the exhaustive Hamilton cycle search (at most 128).
        #[arg(long, default_value_t = RunOptions::default().cap_oracle)]
        cap_oracle: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Omit trace records.
        #[arg(long)]
        no_trace: bool,
    },
    /// Check a certificate file against its graphs.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Print tau, kappa, alpha, delta and s for every graph.
    Metrics {
        #[arg(long)]
        input: PathBuf,
    },
    /// Tabulate pipeline outcomes over a grid of t on a generated corpus.
    Survey {
        #[arg(long, default_value = "9/4,5,8,11")]
        t_grid: String,
        #[arg(long, default_value = "random_in_class")]
        gen: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = RunOptions::default().cap_toughness)]
        cap_toughness: usize,
        #[arg(long, default_value_t = RunOptions::default().cap_oracle)]
        cap_oracle: usize,
    },
}

fn dispatch(command: Command) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match command {
        Command::Run { t, input, out, cap_toughness, cap_oracle, seed, no_trace } => {
            let opts = RunOptions { t, cap_toughness, cap_oracle, seed, trace: !no_trace };
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(|source| CliError::Io { path, source })?;
                    let mut w = BufWriter::new(file);
                    let code = cmd_run(&input, &opts, &mut w)?;
                    w.flush()?;
                    Ok(code)
                }
                None => cmd_run(&input, &opts, &mut lock),
            }
        }
        Command::Check { graph, cert } => cmd_check(&graph, &cert, &mut lock),
        Command::Metrics { input } => cmd_metrics(&input, &mut lock),
        Command::Survey { t_grid, gen, n, count, seed, cap_toughness, cap_oracle } => {
            let opts = SurveyOptions {
                t_grid: parse_t_grid(&t_grid)?,
                gen: gen.parse::<GenKind>()?,
                n,
                count,
                seed,
                cap_toughness,
                cap_oracle,
            };
            cmd_survey(&opts, &mut lock)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
