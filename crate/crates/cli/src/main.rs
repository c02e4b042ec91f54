use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use perron_cli::json::{ResultDocument, Status, SCHEMA_VERSION};
use perron_cli::prompt::Prompt;
use perron_cli::{execute, exit, Command, Options, DEFAULT_STEP_LIMIT};

#[derive(Parser)]
#[command(name = "perron", version, about = "Comparability steps, the polyhedra game and monomialization")]
struct Cli {
    /// Input JSON file, `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Output file, `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    output: String,
    /// Include the list of rounds in the result.
    #[arg(long, global = true)]
    trace: bool,
    /// Seed for the random adversary.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Maximum number of rounds, 0 for unlimited.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_LIMIT)]
    step_limit: usize,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Make two vectors comparable.
    Compare,
    /// Hironaka's polyhedra game.
    Game {
        #[command(subcommand)]
        mode: GameMode,
    },
    /// Rewrite group elements with nonnegative coordinates.
    Positivize,
    /// Monomialize a polynomial under a monomial valuation.
    Monomialize,
}

#[derive(Subcommand)]
enum GameMode {
    /// Play against a built-in adversary.
    Solve,
    /// Play as the adversary on the terminal.
    Play,
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(PathBuf::from(path))
    }
}

fn write_output(path: &str, text: &str) -> io::Result<()> {
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()
    } else {
        fs::write(path, text)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Compare => Command::Compare,
        Cmd::Game { mode: GameMode::Solve } => Command::GameSolve,
        Cmd::Game { mode: GameMode::Play } => Command::GamePlay,
        Cmd::Positivize => Command::Positivize,
        Cmd::Monomialize => Command::Monomialize,
    };
    let options = Options {
        trace: cli.trace,
        seed: cli.seed,
        step_limit: (cli.step_limit > 0).then_some(cli.step_limit),
    };

    let outcome = match read_input(&cli.input) {
        Ok(input) => {
            // Interactive play needs the job from a file so stdin stays free.
            let tty = io::stdin();
            let mut prompt = Prompt::new(tty.lock(), io::stderr());
            execute(command, &options, &input, Some(&mut prompt))
        }
        Err(e) => perron_cli::Outcome {
            document: ResultDocument {
                schema_version: SCHEMA_VERSION,
                status: Status::Error,
                payload: serde_json::Value::Null,
                trace: None,
                diagnostics: vec![format!("cannot read {}: {e}", cli.input)],
            },
            exit_code: exit::MALFORMED,
        },
    };

    if let Err(e) = write_output(&cli.output, &outcome.document.to_pretty()) {
        eprintln!("perron: cannot write {}: {e}", cli.output);
        return ExitCode::from(exit::MALFORMED as u8);
    }
    ExitCode::from(outcome.exit_code as u8)
}
