//! Batch driver: classify every input, render the reports in input order,
//! and fold the outcomes into one exit code.

use std::time::Instant;

use galois_core::{classify_with, ClassifyReport, DedekindViolation, Error, Tolerances};
use rayon::prelude::*;

use crate::output;
use crate::parse::{parse_poly, ParseError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputMode {
    /// Inputs were given on the command line.
    Arguments,
    /// Inputs come from a file or stdin, one per line.
    Batch,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub input_mode: InputMode,
    pub output_mode: OutputMode,
    pub emit_certificate: bool,
    /// Prime bound for the mod-p cross-check, when requested.
    pub run_dedekind: Option<u64>,
    pub tolerances: Tolerances,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            input_mode: InputMode::Arguments,
            output_mode: OutputMode::Text,
            emit_certificate: false,
            run_dedekind: None,
            tolerances: Tolerances::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("{name} must be positive and finite, got {value}")]
    BadTolerance { name: &'static str, value: f64 },
    #[error("the prime bound must be at least 2, got {0}")]
    BadPrimeBound(u64),
    #[error("the iteration budget must be at least 1")]
    BadIterations,
}

impl CliConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let t = &self.tolerances;
        for (name, value) in [
            ("tol-sigma", t.sigma),
            ("tol-theta", t.theta),
            ("tol-residual", t.residual),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ConfigError::BadTolerance { name, value });
            }
        }
        if let Some(b) = self.run_dedekind {
            if b < 2 {
                return Err(ConfigError::BadPrimeBound(b));
            }
        }
        if t.max_iters == 0 {
            return Err(ConfigError::BadIterations);
        }
        Ok(())
    }
}

/// Outcome class of one input, ordered by severity. The discriminant is the
/// process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitClass {
    Ok = 0,
    Reducible = 2,
    Numeric = 3,
    Parse = 4,
    Internal = 5,
}

impl ExitClass {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn name(self) -> &'static str {
        match self {
            ExitClass::Ok => "ok",
            ExitClass::Reducible => "reducible",
            ExitClass::Numeric => "numeric",
            ExitClass::Parse => "parse",
            ExitClass::Internal => "internal",
        }
    }

    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::Reducible { .. } => ExitClass::Reducible,
            e if e.is_numeric() => ExitClass::Numeric,
            // not a polynomial we can classify at all
            Error::ZeroPolynomial | Error::DegreeOutOfRange(_) => ExitClass::Parse,
            _ => ExitClass::Internal,
        }
    }
}

/// Why an input produced no group.
#[derive(Clone, Debug, PartialEq)]
pub enum Failure {
    Parse(ParseError),
    Classify(Error),
}

/// Everything known about one input line.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub input: String,
    pub result: Result<ClassifyReport, Failure>,
    /// Set when a requested mod-p check contradicted the group.
    pub dedekind_violation: Option<DedekindViolation>,
    pub micros: u128,
}

impl Outcome {
    pub fn class(&self) -> ExitClass {
        match &self.result {
            Ok(_) if self.dedekind_violation.is_some() => ExitClass::Internal,
            Ok(_) => ExitClass::Ok,
            Err(Failure::Parse(_)) => ExitClass::Parse,
            Err(Failure::Classify(e)) => ExitClass::of_error(e),
        }
    }
}

pub fn classify_input(config: &CliConfig, input: &str) -> Outcome {
    let start = Instant::now();
    let mut dedekind_violation = None;
    let result = match parse_poly(input) {
        Err(e) => Err(Failure::Parse(e)),
        Ok(g) => match classify_with(&g, &config.tolerances) {
            Err(e) => Err(Failure::Classify(e)),
            Ok(mut report) => {
                if let Some(bound) = config.run_dedekind {
                    dedekind_violation = report.run_dedekind(bound);
                }
                Ok(report)
            }
        },
    };
    Outcome {
        input: input.to_string(),
        result,
        dedekind_violation,
        micros: start.elapsed().as_micros(),
    }
}

/// Lines of a batch file that hold a polynomial: blank lines and lines
/// starting with `#` are skipped, and trailing `#` comments are dropped.
pub fn batch_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

/// Result of a run: the most severe exit code and the rendered output.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub outcomes: Vec<Outcome>,
}

/// Classifies every input concurrently and renders the reports in input
/// order. The exit code is the most severe class seen.
pub fn run(config: &CliConfig, inputs: &[String]) -> RunOutput {
    let outcomes: Vec<Outcome> = inputs
        .par_iter()
        .map(|s| classify_input(config, s))
        .collect();
    let exit = outcomes
        .iter()
        .map(Outcome::class)
        .max()
        .unwrap_or(ExitClass::Ok);
    let mut stdout = String::new();
    for o in &outcomes {
        match config.output_mode {
            OutputMode::Text => stdout.push_str(&output::text(o, config)),
            OutputMode::Json => {
                stdout.push_str(&output::json(o, config).to_string());
                stdout.push('\n');
            }
        }
    }
    RunOutput {
        exit_code: exit.code(),
        stdout,
        outcomes,
    }
}
