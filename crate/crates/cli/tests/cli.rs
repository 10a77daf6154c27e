use std::io::Write;
use std::process::{Command, Stdio};

use galois_cli::{batch_lines, parse_poly, run, CliConfig, OutputMode};
use galois_core::{classify, IntPoly, RatPoly};
use proptest::prelude::*;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_galois"))
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(
        coeffs in prop::collection::vec(-1000i64..=1000, 1..=6),
        lead in prop_oneof![-50i64..=-1, 1i64..=50],
    ) {
        let mut c = coeffs;
        c[0] = lead;
        let p = IntPoly::from_desc(&c);
        let shown = p.to_string();
        prop_assert_eq!(parse_poly(&shown).unwrap(), RatPoly::from(&p), "{}", shown);
        let list = format!("[{}]", c.iter().map(i64::to_string).collect::<Vec<_>>().join(", "));
        prop_assert_eq!(parse_poly(&list).unwrap(), RatPoly::from(&p));
    }

    #[test]
    fn json_normalized_reclassifies_to_same_group(
        coeffs in prop::collection::vec(-9i64..=9, 3..=5),
        lead in 1i64..=4,
    ) {
        let mut c = vec![lead];
        c.extend(coeffs);
        let text = IntPoly::from_desc(&c).to_string();
        let config = CliConfig { output_mode: OutputMode::Json, ..CliConfig::default() };
        let out = run(&config, std::slice::from_ref(&text));
        let v: Value = serde_json::from_str(out.stdout.trim()).unwrap();
        if let Some(group) = v["group"].as_str() {
            let normalized = v["normalized"].as_str().unwrap();
            let again = classify(&parse_poly(normalized).unwrap()).unwrap();
            prop_assert_eq!(again.group.to_string(), group, "{} -> {}", text, normalized);
            let from_coeffs: Vec<i64> = v["normalized_coeffs"]
                .as_array()
                .unwrap()
                .iter()
                .map(|s| s.as_str().unwrap().parse().unwrap())
                .collect();
            prop_assert_eq!(IntPoly::from_desc(&from_coeffs).to_string(), normalized);
        }
    }

    #[test]
    fn batch_output_has_one_line_per_input(
        lines in prop::collection::vec(
            prop_oneof![
                Just("x^3 + x + 1"), Just("x^2 - 1"), Just("x^2 +"), Just("# comment"),
                Just(""), Just("[1,0,0,5,5]"), Just("x + 7 # trailing"), Just("x^7"),
            ],
            0..12,
        ),
        json in any::<bool>(),
    ) {
        let text = lines.join("\n");
        let inputs = batch_lines(&text);
        let expected = lines
            .iter()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .count();
        prop_assert_eq!(inputs.len(), expected);
        let config = CliConfig {
            output_mode: if json { OutputMode::Json } else { OutputMode::Text },
            ..CliConfig::default()
        };
        prop_assert_eq!(run(&config, &inputs).stdout.lines().count(), expected);
    }
}

#[test]
fn binary_reads_batch_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# cubics\nx^3 + x + 1\n\nx^3 + 3x^2 - 3  # cyclic\n[1, 0, 0, 5, 5]").unwrap();
    let out = bin().arg("--batch").arg(file.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let groups: Vec<&str> = stdout
        .lines()
        .map(|l| l.rsplit(": ").next().unwrap().split(' ').next().unwrap())
        .collect();
    assert_eq!(groups, ["S3", "A3", "C4"]);
}

#[test]
fn binary_reads_stdin() {
    let mut child = bin()
        .arg("--json")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"x^5 - x - 1\nx^2 - 1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["group"], "S5");
    assert_eq!(lines[1]["error"]["factor"], "x - 1");
}

#[test]
fn binary_exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["x^4 + 5x + 5"]), Some(0));
    assert_eq!(code(&["x^2 - 1"]), Some(2));
    assert_eq!(code(&["--tol-theta", "100", "x^5 - 5x + 12"]), Some(3));
    assert_eq!(code(&["x^2 + y"]), Some(4));
    assert_eq!(code(&["x^6 + 1"]), Some(4));
    assert_eq!(code(&["--tol-sigma", "-1", "x^2 + 1"]), Some(4));
    assert_eq!(code(&["--dedekind=1", "x^2 + 1"]), Some(4));
    assert_eq!(code(&["--batch", "/nonexistent/file"]), Some(4));
    assert_eq!(code(&["--dedekind=300", "x^5 - 2"]), Some(0));
    assert_eq!(code(&["--", "-x^3 + 2"]), Some(0));
}

#[test]
fn certificate_text_for_cyclic_quartic() {
    let out = bin().args(["--certificate", "x^4 + 5x + 5"]).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("x^4 + 5x + 5: C4 (cyclic of order 4)"));
    assert!(stdout.contains("302500 = 550^2, 75625 = 275^2"), "{stdout}");
}

#[test]
fn mixed_batch_keeps_going_after_failures() {
    let out = run(&CliConfig::default(), &strings(&["x^2 +", "x^2 - 1", "x^3 - 2", "0"]));
    assert_eq!(out.exit_code, 4);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[2], "x^3 - 2: S3 (symmetric of order 6)");
}
