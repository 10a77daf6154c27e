use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use galois_cli::{batch_lines, run, CliConfig, ExitClass, InputMode, OutputMode};
use galois_core::Tolerances;

/// Galois group of an irreducible polynomial of degree at most 5.
///
/// Polynomials are written in x, e.g. "x^5 - 5x + 12", "3/2*x^3 - x + 1/4",
/// or as a bracketed coefficient list, highest degree first: "[1, 0, 0, 5, 5]".
/// With no POLY and no --batch, polynomials are read from stdin, one per line.
#[derive(Parser, Debug)]
#[command(name = "galois", version)]
struct Args {
    /// Polynomials to classify. Put `--` before one that starts with a minus sign.
    poly: Vec<String>,

    /// Read polynomials from FILE, one per line; `#` starts a comment.
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,

    /// One JSON object per line instead of text.
    #[arg(long)]
    json: bool,

    /// Print the certificate under each text result.
    #[arg(long)]
    certificate: bool,

    /// Cross-check each group against factorization mod every prime up to BOUND
    /// (default 200); give a bound as `--dedekind=500`.
    #[arg(long, value_name = "BOUND", num_args = 0..=1, require_equals = true, default_missing_value = "200")]
    dedekind: Option<u64>,

    /// Integrality tolerance for sigma1.
    #[arg(long, value_name = "TOL")]
    tol_sigma: Option<f64>,

    /// Matching tolerance for theta1 against the resolvent root.
    #[arg(long, value_name = "TOL")]
    tol_theta: Option<f64>,

    /// Relative residual bound for accepted roots.
    #[arg(long, value_name = "TOL")]
    tol_residual: Option<f64>,

    /// Iteration budget for the root finder.
    #[arg(long, value_name = "N")]
    max_iters: Option<usize>,
}

impl Args {
    fn config(&self, input_mode: InputMode) -> CliConfig {
        let d = Tolerances::default();
        CliConfig {
            input_mode,
            output_mode: if self.json { OutputMode::Json } else { OutputMode::Text },
            emit_certificate: self.certificate,
            run_dedekind: self.dedekind,
            tolerances: Tolerances {
                sigma: self.tol_sigma.unwrap_or(d.sigma),
                theta: self.tol_theta.unwrap_or(d.theta),
                residual: self.tol_residual.unwrap_or(d.residual),
                max_iters: self.max_iters.unwrap_or(d.max_iters),
                ..d
            },
        }
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("galois: {msg}");
    ExitCode::from(ExitClass::Parse.code() as u8)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { ExitClass::Parse.code() } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (mode, mut inputs) = (
        if args.poly.is_empty() { InputMode::Batch } else { InputMode::Arguments },
        args.poly.clone(),
    );
    if let Some(path) = &args.batch {
        match std::fs::read_to_string(path) {
            Ok(text) => inputs.extend(batch_lines(&text)),
            Err(e) => return fail(format!("cannot read {}: {e}", path.display())),
        }
    } else if inputs.is_empty() {
        let mut text = String::new();
        if let Err(e) = io::stdin().read_to_string(&mut text) {
            return fail(format!("cannot read stdin: {e}"));
        }
        inputs = batch_lines(&text);
    }
    let config = args.config(if args.batch.is_some() { InputMode::Batch } else { mode });
    if let Err(e) = config.validate() {
        return fail(e);
    }
    let out = run(&config, &inputs);
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(ExitClass::Internal.code() as u8);
    }
    ExitCode::from(out.exit_code as u8)
}
