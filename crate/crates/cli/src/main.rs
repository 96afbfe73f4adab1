//! `infon`: evaluate expressions over the exact information algebra and
//! check its laws over enumerated finite domains.
//!
//! Results go to stdout; prompts, diagnostics, and timings go to stderr.
//! Exit codes: 0 success, 1 unexpected check verdict, 2 usage or I/O
//! problems, 3 syntax errors, 4 evaluation errors.

use std::io::{BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use infon_checker::{run_all, CheckConfig, CheckError, PropertyId};
use infon_dsl::{eval_line, DslError, EvalEnv};

#[derive(Parser)]
#[command(
    name = "infon",
    version,
    about = "Exact information objects: evaluate join expressions, check the algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate statements from a file, or from stdin when no file is given
    Eval {
        /// Source file; one statement per line
        file: Option<PathBuf>,
    },
    /// Interactive session (`:env` lists bindings, `:quit` leaves)
    Repl,
    /// Check the algebra's laws over an enumerated finite domain
    Check {
        /// Largest finite order enumerated (inclusive)
        #[arg(long, default_value_t = 8)]
        max_order: u64,
        /// Largest denominator of enumerated values (1 = integers only)
        #[arg(long, default_value_t = 1)]
        denominator_bound: u64,
        /// Check only these properties (repeatable); default is all
        #[arg(long = "property")]
        properties: Vec<String>,
        /// Seed for sampled runs
        #[arg(long)]
        seed: Option<u64>,
        /// Cases per property before sampling kicks in
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print per-property wall-clock timings to stderr
        #[arg(long)]
        timings: bool,
    },
    /// Print what a property asserts and its expected verdict
    Explain {
        /// Property name; omit to list all of them
        property: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval { file } => cmd_eval(file),
        Command::Repl => cmd_repl(),
        Command::Check {
            max_order,
            denominator_bound,
            properties,
            seed,
            budget,
            format,
            timings,
        } => cmd_check(
            max_order,
            denominator_bound,
            &properties,
            seed,
            budget,
            format,
            timings,
        ),
        Command::Explain { property } => cmd_explain(property.as_deref()),
    };
    ExitCode::from(code)
}

fn cmd_eval(file: Option<PathBuf>) -> u8 {
    let source = match &file {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return 2;
            }
        },
        None => {
            let mut buf = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                eprintln!("error: cannot read stdin: {e}");
                return 2;
            }
            buf
        }
    };
    let mut env = EvalEnv::<i64>::new();
    for (index, line) in source.lines().enumerate() {
        match eval_line(&mut env, line) {
            Ok(Some(value)) => println!("{value}"),
            Ok(None) => {}
            Err(e) => return report_error(index + 1, line, &e),
        }
    }
    0
}

fn cmd_repl() -> u8 {
    let stdin = std::io::stdin();
    let mut env = EvalEnv::<i64>::new();
    loop {
        eprint!("> ");
        let _ = std::io::stderr().flush();
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) | Err(_) => break,
            Ok(_) => {}
        }
        let line = line.trim_end_matches(['\n', '\r']);
        match line.trim() {
            ":quit" | ":q" => break,
            ":env" => {
                for (name, infon) in env.bindings() {
                    println!("{name} = {infon}");
                }
                continue;
            }
            _ => {}
        }
        match eval_line(&mut env, line) {
            Ok(Some(value)) => println!("{value}"),
            Ok(None) => {}
            Err(e) => {
                report_error(0, line, &e);
            }
        }
    }
    0
}

/// Print a source diagnostic with a caret under the offending span and
/// return the exit code for erroring out at that point.
fn report_error(line_number: usize, line: &str, error: &DslError) -> u8 {
    if line_number > 0 {
        eprintln!("error (line {line_number}): {error}");
    } else {
        eprintln!("error: {error}");
    }
    let span = error.span();
    eprintln!("  {line}");
    let width = span.end.saturating_sub(span.start).max(1);
    eprintln!("  {}{}", " ".repeat(span.start), "^".repeat(width));
    if error.is_static() {
        3
    } else {
        4
    }
}

fn cmd_check(
    max_order: u64,
    denominator_bound: u64,
    properties: &[String],
    seed: Option<u64>,
    budget: u64,
    format: Format,
    timings: bool,
) -> u8 {
    let mut config = CheckConfig {
        max_order,
        denominator_bound,
        sample_seed: seed,
        case_budget: budget,
        ..CheckConfig::default()
    };
    if !properties.is_empty() {
        let mut parsed = Vec::new();
        for name in properties {
            match PropertyId::from_str(name) {
                Ok(p) => parsed.push(p),
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
        }
        config.properties = parsed;
    }
    let report = match run_all(&config) {
        Ok(r) => r,
        Err(CheckError::InvalidConfig(msg)) => {
            eprintln!("error: invalid configuration: {msg}");
            return 2;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json_lines()),
    }
    if timings {
        for e in &report.entries {
            eprintln!("timing: {} {:.1?}", e.property, e.elapsed);
        }
    }
    if report.is_expected() {
        0
    } else {
        1
    }
}

fn cmd_explain(property: Option<&str>) -> u8 {
    match property {
        Some(name) => match PropertyId::from_str(name) {
            Ok(p) => {
                println!("{p}");
                println!("  {}", p.statement());
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        None => {
            for p in PropertyId::ALL {
                println!("{p}");
                println!("  {}", p.statement());
            }
            0
        }
    }
}
