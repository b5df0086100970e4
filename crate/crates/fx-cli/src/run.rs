//! Suite selection and execution for `fx lawcheck`.

use fx_core::harness::Budget;
use fx_core::registry::BaseMonad;
use fx_core::suites;
use fx_core::LawReport;

/// Output rendering for reports and demo results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// The named suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Adjunction,
    Translation,
    State,
    Writer,
    Reader,
    Error,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "adjunction" => Suite::Adjunction,
            "translation" => Suite::Translation,
            "state" => Suite::State,
            "writer" => Suite::Writer,
            "reader" => Suite::Reader,
            "error" => Suite::Error,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

/// A validated `lawcheck` invocation.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub base_monads: Vec<BaseMonad>,
    pub seed: u64,
    pub sample_cap: u64,
    pub output: OutputFormat,
    /// Run the injected-fault fixtures instead of the positive suites.
    pub negative_controls: bool,
}

impl SuiteConfig {
    /// Seed and sample cap must be positive; zero values are config errors.
    pub fn validate(&self) -> Result<(), String> {
        if self.seed == 0 {
            return Err("--seed must be positive".to_string());
        }
        if self.sample_cap == 0 {
            return Err("--sample-cap must be positive".to_string());
        }
        if self.base_monads.is_empty() {
            return Err("--base-monads selected an empty set".to_string());
        }
        Ok(())
    }
}

/// Run the configured suites. The exit status is 0 iff every check
/// passed, 1 otherwise; config validation happens before this call.
pub fn run_suite(cfg: &SuiteConfig) -> (LawReport, i32) {
    let budget = Budget {
        samples: cfg.sample_cap,
        seed: cfg.seed,
        ..Budget::default()
    };
    let report = if cfg.negative_controls {
        suites::negative_controls(&budget)
    } else {
        match cfg.suite {
            Suite::Adjunction => suites::suite_adjunction(&budget),
            Suite::Translation => suites::suite_translation(&budget, &cfg.base_monads),
            Suite::State => suites::suite_state(&budget, &cfg.base_monads),
            Suite::Writer => suites::suite_writer(&budget, &cfg.base_monads),
            Suite::Reader => suites::suite_reader(&budget, &cfg.base_monads),
            Suite::Error => suites::suite_error(&budget, &cfg.base_monads),
            Suite::All => suites::suite_all(&budget, &cfg.base_monads),
        }
    };
    let status = if report.passed() { 0 } else { 1 };
    (report, status)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(suite: Suite) -> SuiteConfig {
        SuiteConfig {
            suite,
            base_monads: vec![BaseMonad::Option],
            seed: 42,
            sample_cap: 16,
            output: OutputFormat::Json,
            negative_controls: false,
        }
    }

    #[test]
    fn passing_suites_exit_zero() {
        let (report, status) = run_suite(&config(Suite::Error));
        assert!(report.passed());
        assert_eq!(status, 0);
    }

    #[test]
    fn failing_reports_exit_one() {
        let mut cfg = config(Suite::All);
        cfg.negative_controls = true;
        let (report, status) = run_suite(&cfg);
        assert!(!report.passed());
        assert_eq!(status, 1);
    }

    #[test]
    fn zero_seed_and_cap_are_config_errors() {
        let mut cfg = config(Suite::All);
        cfg.seed = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = config(Suite::All);
        cfg.sample_cap = 0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn unknown_suite_names_do_not_parse() {
        assert!(Suite::parse("nosuch").is_none());
        assert_eq!(Suite::parse("writer"), Some(Suite::Writer));
    }
}
