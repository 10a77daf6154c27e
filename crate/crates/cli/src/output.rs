//! Text and JSON rendering of classification outcomes.

use galois_core::{Certificate, ClassifyReport, IntPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::run::{CliConfig, Failure, Outcome};

pub const SCHEMA_VERSION: u32 = 1;

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn complex_text(z: Complex64) -> String {
    let (re, im) = (sig12(z.re), sig12(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if im < 0.0 {
        format!("{re} - {}i", -im)
    } else {
        format!("{re} + {im}i")
    }
}

/// Coefficients as decimal strings, highest degree first.
pub fn coeffs_desc(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().rev().map(BigInt::to_string).collect()
}

fn square_text(n: &BigInt, root: &Option<BigInt>) -> String {
    match root {
        Some(r) => format!("{n} = {r}^2"),
        None => format!("{n} (not a square)"),
    }
}

fn dedekind_note(o: &Outcome, config: &CliConfig) -> String {
    match (config.run_dedekind, &o.dedekind_violation) {
        (Some(_), Some(v)) => format!(
            "; mod-p check FAILED at p = {}: factor degrees {:?} are not a cycle type of the group",
            v.prime, v.shape
        ),
        (Some(bound), None) => format!("; mod-p check passed for primes up to {bound}"),
        (None, _) => String::new(),
    }
}

/// One line per input, followed by indented certificate lines when asked.
pub fn text(o: &Outcome, config: &CliConfig) -> String {
    match &o.result {
        Err(Failure::Parse(e)) => format!("{}: {e}\n", o.input),
        Err(Failure::Classify(e)) => format!("{}: error: {e}\n", o.input),
        Ok(r) => {
            let mut s = format!(
                "{}: {} ({}){}\n",
                o.input,
                r.group,
                r.group.description(),
                dedekind_note(o, config)
            );
            if config.emit_certificate {
                certificate_text(&mut s, r);
            }
            s
        }
    }
}

fn certificate_text(s: &mut String, r: &ClassifyReport) {
    let c = &r.certificate;
    let mut line = |t: String| {
        s.push_str("  ");
        s.push_str(&t);
        s.push('\n');
    };
    line(format!("normalized: {} (lambda = {})", c.normalized, c.lambda));
    if c.classified != c.normalized {
        line(format!("depressed: {} (shift a = {})", c.classified, c.shift));
    }
    line(format!("discriminant: {}", square_text(&c.delta, &c.delta_sqrt)));
    if let Some(res) = &c.resolvent {
        line(format!("resolvent: {res}"));
        let roots: Vec<String> = c.resolvent_roots.iter().map(BigInt::to_string).collect();
        line(format!(
            "resolvent integer roots: {}",
            if roots.is_empty() { "none".to_string() } else { roots.join(", ") }
        ));
    }
    if let Some(kw) = &c.kappe_warren {
        line(format!(
            "kappe-warren: {}, {}",
            square_text(&kw.n1, &kw.n1_sqrt),
            square_text(&kw.n2, &kw.n2_sqrt)
        ));
    }
    if let Some(ord) = &c.theta_ordering {
        line(format!(
            "theta1 = {} for root ordering {:?} ({} of 120 orderings match {})",
            complex_text(ord.theta_value),
            ord.perm.map(|i| i + 1),
            ord.matching,
            ord.target
        ));
    }
    if let Some(sigma) = c.sigma1 {
        let verdict = match &c.sigma1_integer {
            Some(k) => format!("integer {k}"),
            None => "not an integer".to_string(),
        };
        line(format!(
            "sigma1 = {} ({verdict} at tolerance {:e})",
            complex_text(sigma),
            c.tolerances.sigma
        ));
    }
    if c.fast_path {
        line("trinomial shortcut agrees".to_string());
    }
    for w in &r.warnings {
        line(format!("warning: {w}"));
    }
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": sig12(z.re), "im": sig12(z.im) })
}

fn certificate_json(c: &Certificate) -> Value {
    let mut m = Map::new();
    m.insert("delta".into(), json!(c.delta.to_string()));
    m.insert("delta_is_square".into(), json!(c.delta_sqrt.is_some()));
    if let Some(r) = &c.delta_sqrt {
        m.insert("delta_sqrt".into(), json!(r.to_string()));
    }
    m.insert("classified_coeffs".into(), json!(coeffs_desc(&c.classified)));
    if let Some(res) = &c.resolvent {
        m.insert("resolvent_coeffs".into(), json!(coeffs_desc(res)));
        let roots: Vec<String> = c.resolvent_roots.iter().map(BigInt::to_string).collect();
        m.insert("resolvent_integer_roots".into(), json!(roots));
    }
    if let Some(r) = &c.resolvent_root {
        m.insert("resolvent_root".into(), json!(r.to_string()));
    }
    if let Some(kw) = &c.kappe_warren {
        let mut k = Map::new();
        k.insert("n1".into(), json!(kw.n1.to_string()));
        k.insert("n2".into(), json!(kw.n2.to_string()));
        if let Some(r) = &kw.n1_sqrt {
            k.insert("n1_sqrt".into(), json!(r.to_string()));
        }
        if let Some(r) = &kw.n2_sqrt {
            k.insert("n2_sqrt".into(), json!(r.to_string()));
        }
        k.insert("both_square".into(), json!(kw.both_square()));
        m.insert("kappe_warren".into(), Value::Object(k));
    }
    if let Some(ord) = &c.theta_ordering {
        let mut t = Map::new();
        t.insert("re".into(), json!(sig12(ord.theta_value.re)));
        t.insert("im".into(), json!(sig12(ord.theta_value.im)));
        t.insert("target".into(), json!(ord.target.to_string()));
        t.insert("ordering".into(), json!(ord.perm.map(|i| i + 1)));
        t.insert("matching_orderings".into(), json!(ord.matching));
        m.insert("theta1".into(), Value::Object(t));
    }
    if let Some(rs) = &c.roots {
        let roots: Vec<Value> = rs.roots.iter().map(|z| complex_json(*z)).collect();
        m.insert("roots".into(), json!(roots));
    }
    if let Some(sigma) = c.sigma1 {
        let mut s = Map::new();
        s.insert("re".into(), json!(sig12(sigma.re)));
        s.insert("im".into(), json!(sig12(sigma.im)));
        if let Some(k) = &c.sigma1_integer {
            s.insert("as_integer".into(), json!(k.to_string()));
        }
        m.insert("sigma1".into(), Value::Object(s));
    }
    m.insert("fast_path".into(), json!(c.fast_path));
    let t = &c.tolerances;
    m.insert(
        "tolerances".into(),
        json!({
            "residual": t.residual,
            "theta": t.theta,
            "sigma": t.sigma,
            "pairing": t.pairing,
            "max_iters": t.max_iters,
        }),
    );
    Value::Object(m)
}

/// The versioned JSON record for one input.
pub fn json(o: &Outcome, config: &CliConfig) -> Value {
    let class = o.class();
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("input".into(), json!(o.input));
    match &o.result {
        Ok(r) => {
            let c = &r.certificate;
            m.insert("normalized".into(), json!(c.normalized.to_string()));
            m.insert("normalized_coeffs".into(), json!(coeffs_desc(&c.normalized)));
            m.insert("lambda".into(), json!(c.lambda.to_string()));
            m.insert("shift".into(), json!(c.shift.to_string()));
            m.insert("group".into(), json!(r.group.to_string()));
            m.insert("group_order".into(), json!(r.group.order()));
            m.insert("group_description".into(), json!(r.group.description()));
            m.insert("certificate".into(), certificate_json(c));
            m.insert("warnings".into(), json!(r.warnings));
        }
        Err(f) => {
            for key in ["normalized", "normalized_coeffs", "lambda", "shift", "group", "group_order", "certificate"] {
                m.insert(key.into(), Value::Null);
            }
            m.insert("warnings".into(), json!([]));
            let mut e = Map::new();
            match f {
                Failure::Parse(p) => {
                    e.insert("kind".into(), json!("parse"));
                    e.insert("message".into(), json!(p.to_string()));
                    e.insert("column".into(), json!(p.column));
                }
                Failure::Classify(err) => {
                    e.insert("kind".into(), json!(class.name()));
                    e.insert("message".into(), json!(err.to_string()));
                    if let galois_core::Error::Reducible { factor } = err {
                        e.insert("factor".into(), json!(factor.to_string()));
                        e.insert("factor_coeffs".into(), json!(coeffs_desc(factor)));
                    }
                }
            }
            m.insert("error".into(), Value::Object(e));
        }
    }
    if let Some(bound) = config.run_dedekind {
        if o.result.is_ok() {
            let mut d = Map::new();
            d.insert("prime_bound".into(), json!(bound));
            d.insert("passed".into(), json!(o.dedekind_violation.is_none()));
            if let Some(v) = &o.dedekind_violation {
                d.insert("prime".into(), json!(v.prime));
                d.insert("shape".into(), json!(v.shape));
            }
            m.insert("dedekind".into(), Value::Object(d));
        }
    }
    m.insert("exit_class".into(), json!(class.name()));
    m.insert("timings".into(), json!({ "classify_us": o.micros as u64 }));
    Value::Object(m)
}
