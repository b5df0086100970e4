//! Library surface of the `fx` command line: suite running, report
//! serialization, and the demo language (parser + interpreter).

pub mod corpus;
pub mod eval;
pub mod parser;
pub mod report;
pub mod run;

pub use eval::{demo_stack, eval_program, eval_with, EvalOutcome, StackKind, DEMO_MODULUS};
pub use parser::{parse_program, pretty, Expr, ParseError};
pub use run::{run_suite, OutputFormat, Suite, SuiteConfig};
