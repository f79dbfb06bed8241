use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heegaard_rc::io::{check_report, parse_diagram, serialize_diagram, CheckOptions, Condition, GraphSelector};
use heegaard_rc::twistgen::build_twisted;
use heegaard_rc::Diagram;

/// Rectangle and double rectangle conditions for Heegaard diagrams.
#[derive(Parser)]
#[command(name = "hrc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Rc,
    Drc,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the conditions on a diagram file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        condition: Which,
        /// Print the JSON report instead of the text summary.
        #[arg(long)]
        structured: bool,
    },
    /// Write the twisted diagram of the given genus and power.
    Generate {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_negative_numbers = true)]
        power: i64,
        /// Use the maximal disk systems (genus 3 only).
        #[arg(long)]
        maximal: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check that a file describes a pair of disk systems.
    Validate { file: PathBuf },
    /// Write one of the criteria graphs of a diagram.
    ExportGraph {
        file: PathBuf,
        /// Gk:K, Hd:D or Gdetail:K,L,I,E,J,D
        #[arg(long)]
        which: String,
        /// Graphviz DOT output (the only format).
        #[arg(long)]
        dot: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Exit status for invalid input or parameters.
const INVALID: u8 = 2;

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(INVALID)
}

fn load(path: &Path) -> Result<Diagram, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_diagram(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Check { file, condition, structured } => {
            let d = match load(&file) {
                Ok(d) => d,
                Err(e) => return fail(e),
            };
            let condition = match condition {
                Which::Rc => Condition::Rc,
                Which::Drc => Condition::Drc,
                Which::Both => Condition::Both,
            };
            let report = check_report(&d, CheckOptions { condition });
            if structured {
                print!("{}", report.to_json());
            } else {
                let color = std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
                print!("{}", report.human(&d, color));
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Generate { genus, power, maximal, output } => match build_twisted(genus, power, maximal) {
            Ok(d) => match write_out(Some(&output), &serialize_diagram(&d)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            },
            Err(e) => fail(e),
        },
        Command::Validate { file } => {
            let d = match load(&file) {
                Ok(d) => d,
                Err(e) => return fail(e),
            };
            let v = d.validate_disk_systems();
            if v.passes() {
                println!("valid: genus {}, {} crossings", d.genus(), d.crossing_count());
                ExitCode::SUCCESS
            } else {
                for issue in &v.issues {
                    eprintln!("invalid: {issue}");
                }
                ExitCode::from(INVALID)
            }
        }
        Command::ExportGraph { file, which, dot: _, output } => {
            let selector: GraphSelector = match which.parse() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let d = match load(&file) {
                Ok(d) => d,
                Err(e) => return fail(e),
            };
            match selector.export(&d).map_err(|e| e.to_string()).and_then(|t| write_out(output.as_deref(), &t)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { INVALID } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
