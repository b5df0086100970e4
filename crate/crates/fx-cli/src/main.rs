//! `fx`: law suites and the effect-stack demo interpreter.
//!
//! Exit codes: 0 on success, 1 when a law check fails, 2 on usage errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fx_cli::eval::{eval_program, EvalOutcome, StackKind};
use fx_cli::parser::parse_program;
use fx_cli::report;
use fx_cli::run::{run_suite, OutputFormat, Suite, SuiteConfig};
use fx_core::registry::BaseMonad;

#[derive(Parser)]
#[command(
    name = "fx",
    about = "Adjunction-derived monad transformers, checked law by law",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run law suites and print a report.
    Lawcheck(LawcheckArgs),
    /// Evaluate a program under the derived effect stack.
    Demo(DemoArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Adjunction,
    Translation,
    State,
    Writer,
    Reader,
    Error,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Adjunction => Suite::Adjunction,
            SuiteArg::Translation => Suite::Translation,
            SuiteArg::State => Suite::State,
            SuiteArg::Writer => Suite::Writer,
            SuiteArg::Reader => Suite::Reader,
            SuiteArg::Error => Suite::Error,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

impl From<OutputArg> for OutputFormat {
    fn from(arg: OutputArg) -> OutputFormat {
        match arg {
            OutputArg::Text => OutputFormat::Text,
            OutputArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct LawcheckArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Comma-separated base monads to exercise (identity,option,list,writer).
    #[arg(long = "base-monads", value_delimiter = ',')]
    base_monads: Option<Vec<String>>,
    /// Seed for deterministic sampling.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Sample count used when a space exceeds its enumeration cap.
    #[arg(long = "sample-cap", default_value_t = 64)]
    sample_cap: u64,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
    /// Run the injected-fault fixtures; the report is expected to fail.
    #[arg(long = "negative-controls", default_value_t = false)]
    negative_controls: bool,
}

#[derive(Args)]
struct DemoArgs {
    /// Path to the program to evaluate.
    #[arg(long)]
    program: PathBuf,
    /// Environment bindings, repeatable: --env k=v.
    #[arg(long = "env", value_name = "K=V")]
    env: Vec<String>,
    /// Initial state of the counter.
    #[arg(long = "init-state", default_value_t = 0)]
    init_state: i64,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    eprintln!("run `fx --help` for usage");
    ExitCode::from(2)
}

fn lawcheck(args: LawcheckArgs) -> ExitCode {
    let base_monads = match args.base_monads {
        None => BaseMonad::all().to_vec(),
        Some(names) => {
            let mut selected = Vec::new();
            for name in &names {
                match BaseMonad::parse(name) {
                    Ok(base) => selected.push(base),
                    Err(_) => return usage_error(&format!("unknown base monad `{name}`")),
                }
            }
            selected
        }
    };
    let cfg = SuiteConfig {
        suite: args.suite.into(),
        base_monads,
        seed: args.seed,
        sample_cap: args.sample_cap,
        output: args.output.into(),
        negative_controls: args.negative_controls,
    };
    if let Err(message) = cfg.validate() {
        return usage_error(&message);
    }
    let (report, status) = run_suite(&cfg);
    match cfg.output {
        OutputFormat::Json => print!("{}", report::to_json(&report, cfg.seed)),
        OutputFormat::Text => print!("{}", report::to_text(&report)),
    }
    ExitCode::from(status as u8)
}

fn render_outcome(outcome: &EvalOutcome, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => {
            let mut doc = String::from("{");
            match outcome.value {
                Some(v) => doc.push_str(&format!("\"value\":{v},\"error\":null,")),
                None => doc.push_str(&format!(
                    "\"value\":null,\"error\":{},",
                    serde_json::to_string(outcome.error.as_deref().unwrap_or(""))
                        .expect("string serializes")
                )),
            }
            let log: Vec<String> = outcome.log.iter().map(i64::to_string).collect();
            doc.push_str(&format!(
                "\"log\":[{}],\"final_state\":{}}}\n",
                log.join(","),
                outcome.final_state
            ));
            doc
        }
        OutputFormat::Text => {
            let mut out = String::new();
            match (&outcome.value, &outcome.error) {
                (Some(v), _) => out.push_str(&format!("value: {v}\n")),
                (None, Some(e)) => out.push_str(&format!("error: {e}\n")),
                (None, None) => unreachable!("an outcome has a value or an error"),
            }
            let log: Vec<String> = outcome.log.iter().map(i64::to_string).collect();
            out.push_str(&format!("log: [{}]\n", log.join(", ")));
            out.push_str(&format!("final state: {}\n", outcome.final_state));
            out
        }
    }
}

fn demo(args: DemoArgs) -> ExitCode {
    let source = match std::fs::read_to_string(&args.program) {
        Ok(source) => source,
        Err(err) => {
            return usage_error(&format!(
                "cannot read program {}: {err}",
                args.program.display()
            ))
        }
    };
    let expr = match parse_program(source.trim()) {
        Ok(expr) => expr,
        Err(err) => return usage_error(&err.to_string()),
    };
    let mut env = BTreeMap::new();
    for binding in &args.env {
        let Some((key, value)) = binding.split_once('=') else {
            return usage_error(&format!("malformed --env binding `{binding}`"));
        };
        let Ok(value) = value.parse::<i64>() else {
            return usage_error(&format!("--env value in `{binding}` is not an integer"));
        };
        env.insert(key.to_string(), value);
    }
    match eval_program(&expr, &env, args.init_state, StackKind::Derived) {
        Ok(outcome) => {
            print!("{}", render_outcome(&outcome, args.output.into()));
            ExitCode::SUCCESS
        }
        Err(err) => usage_error(&format!("failed to build the demo stack: {err}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Lawcheck(args) => lawcheck(args),
        Command::Demo(args) => demo(args),
    }
}
