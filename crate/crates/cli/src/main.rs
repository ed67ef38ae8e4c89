use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nette_core::groebner::DEFAULT_PAIR_BUDGET;
use nette_core::pipeline::{render_text, DEFAULT_PRIMITIVE_BUDGET};
use nette_core::{classify, parse_input, ClassifyOptions, Error, GroebnerOptions, MonomialOrder, Section};

/// Classify finitely presented algebras over Q and GF(p): netteness,
/// smoothness, étaleness, Kähler differentials and étale decompositions.
#[derive(Parser, Debug)]
#[command(name = "nette", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full classification report.
    Classify(Opts),
    /// Whether the module of differentials vanishes.
    Nette(Opts),
    /// Standard-étale test, dimension, discriminant and étale verdict.
    Etale(Opts),
    /// Standard and elementary smoothness. Standard smoothness uses the first
    /// variables in declaration order, so variable order matters there.
    Smooth(Opts),
    /// Presentation of the differentials and their dimension over the base field.
    Differentials(Opts),
    /// Decomposition into monogenic separable factors and primitive element.
    Decompose(Opts),
}

#[derive(Args, Debug)]
struct Opts {
    /// Presentation file, or `-` for standard input.
    file: PathBuf,
    /// Print Bézout identities, failed ideals and splitting idempotents.
    #[arg(long)]
    certificates: bool,
    /// Emit the full report as JSON.
    #[arg(long)]
    json: bool,
    /// Monomial order for Gröbner bases.
    #[arg(long, default_value = "grevlex")]
    order: MonomialOrder,
    /// Maximum number of S-pairs reduced per Gröbner basis.
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
    budget_pairs: usize,
    /// Maximum number of candidates in the primitive-element search.
    #[arg(long, default_value_t = DEFAULT_PRIMITIVE_BUDGET)]
    budget_primitive: usize,
}

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn run(section: Section, opts: &Opts) -> Result<String, (u8, String)> {
    let text = read_input(&opts.file).map_err(|e| (EXIT_INPUT, format!("{}: {e}", opts.file.display())))?;
    let presentation = parse_input(&text).map_err(|e| (EXIT_INPUT, format!("{}:{e}", opts.file.display())))?;
    let options = ClassifyOptions {
        groebner: GroebnerOptions {
            order: opts.order,
            pair_budget: opts.budget_pairs,
        },
        primitive_budget: opts.budget_primitive,
        certificates: opts.certificates,
    };
    let report = classify(&presentation, options).map_err(|e| {
        let code = match e {
            Error::BudgetExceeded(_) | Error::SearchExhausted(_) => EXIT_BUDGET,
            Error::Parse { .. } => EXIT_INPUT,
            _ => EXIT_INTERNAL,
        };
        (code, e.to_string())
    })?;
    if opts.json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| (EXIT_INTERNAL, e.to_string()))?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(render_text(&report, section))
    }
}

fn main() -> ExitCode {
    // usage errors are input errors; exit code 2 is reserved for budgets
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    let (section, opts) = match &cli.command {
        Command::Classify(o) => (Section::All, o),
        Command::Nette(o) => (Section::Nette, o),
        Command::Etale(o) => (Section::Etale, o),
        Command::Smooth(o) => (Section::Smooth, o),
        Command::Differentials(o) => (Section::Differentials, o),
        Command::Decompose(o) => (Section::Decompose, o),
    };
    match run(section, opts) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
