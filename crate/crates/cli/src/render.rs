//! JSON and human-readable renderings of results.

use frobdet_core::algebra::cyclotomic::CycNum;
use frobdet_core::algebra::identity::IdentityMode;
use frobdet_core::algebra::poly::{Monomial, Poly, Var};
use frobdet_core::determinant::factorization::{Factorization, Status, VerifyConfig};
use frobdet_core::determinant::frobenius::FrobeniusVerdict;
use frobdet_core::semigroup::Semigroup;
use serde_json::{json, Map, Value};

pub fn var_name(s: &Semigroup, v: Var) -> String {
    format!("x_{{{}}}", s.label(v as usize))
}

pub fn poly(s: &Semigroup, p: &Poly) -> String {
    p.render(&|v| var_name(s, v))
}

fn monomial(s: &Semigroup, m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    Poly::term(m.clone(), CycNum::one()).render(&|v| var_name(s, v))
}

fn pretty(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("JSON values serialize");
    out.push('\n');
    out
}

pub fn json_text(v: &Value) -> String {
    pretty(v)
}

fn verification(f: &Factorization, cfg: &VerifyConfig, seed: u64) -> Value {
    let mode = f.verification.as_ref().map_or(cfg.mode, |v| v.mode);
    let mut m = Map::new();
    match mode {
        IdentityMode::Exact => {
            m.insert("mode".into(), json!("exact"));
            m.insert("rounds".into(), json!(0));
            m.insert("seed".into(), json!(seed));
        }
        IdentityMode::Randomized { seed, rounds } => {
            m.insert("mode".into(), json!("randomized"));
            m.insert("rounds".into(), json!(rounds));
            m.insert("seed".into(), json!(seed));
        }
    }
    if let Some(b) = f.verification.as_ref().and_then(|v| v.failure_bound) {
        m.insert("failure_bound".into(), json!(format!("{b:e}")));
    }
    Value::Object(m)
}

pub fn factorization_json(s: &Semigroup, f: &Factorization, cfg: &VerifyConfig, seed: u64) -> Value {
    let mut m = Map::new();
    m.insert("status".into(), json!(if f.status == Status::Zero { "zero" } else { "factored" }));
    m.insert("constant".into(), json!(f.constant.to_string()));
    m.insert("cyclotomic_order".into(), json!(f.cyclotomic_order()));
    let factors: Vec<Value> = f
        .factors
        .iter()
        .map(|x| {
            let form: Map<String, Value> = x.poly.terms().iter().map(|(mono, c)| (monomial(s, mono), json!(c.to_string()))).collect();
            json!({ "form": form, "multiplicity": x.multiplicity })
        })
        .collect();
    m.insert("factors".into(), Value::Array(factors));
    m.insert("verification".into(), verification(f, cfg, seed));
    m.insert("provenance".into(), json!(f.provenance));
    if let Some(r) = &f.zero_reason {
        m.insert("zero_reason".into(), json!(r));
    }
    if !f.notes.is_empty() {
        m.insert("notes".into(), json!(f.notes));
    }
    Value::Object(m)
}

pub fn factorization_human(s: &Semigroup, f: &Factorization, cfg: &VerifyConfig, seed: u64) -> String {
    let mut out = String::new();
    out.push_str(&format!("status: {}\n", if f.status == Status::Zero { "zero" } else { "factored" }));
    out.push_str(&format!("provenance: {}\n", f.provenance));
    if let Some(r) = &f.zero_reason {
        out.push_str(&format!("reason: {r}\n"));
    } else {
        out.push_str(&format!("constant: {}\n", f.constant));
        out.push_str(&format!("cyclotomic order: {}\n", f.cyclotomic_order()));
        out.push_str("factors:\n");
        for x in &f.factors {
            let body = poly(s, &x.poly);
            if x.multiplicity == 1 {
                out.push_str(&format!("  ({body})\n"));
            } else {
                out.push_str(&format!("  ({body})^{}\n", x.multiplicity));
            }
        }
    }
    for n in &f.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    let v = verification(f, cfg, seed);
    match v["mode"].as_str() {
        Some("exact") => out.push_str("verified: exact\n"),
        _ => out.push_str(&format!(
            "verified: randomized ({} rounds, seed {}, failure bound {})\n",
            v["rounds"],
            v["seed"],
            v.get("failure_bound").and_then(Value::as_str).unwrap_or("n/a")
        )),
    }
    out
}

pub fn frobenius_json(s: &Semigroup, v: &FrobeniusVerdict) -> Value {
    let mut m = Map::new();
    match v {
        FrobeniusVerdict::Frobenius { witness, value } => {
            m.insert("status".into(), json!("frobenius"));
            let point: Map<String, Value> = witness
                .iter()
                .enumerate()
                .map(|(i, w)| (var_name(s, i as Var), w.to_string().parse::<Value>().expect("integers are JSON numbers")))
                .collect();
            m.insert("witness".into(), Value::Object(point));
            m.insert("value".into(), json!(value.to_string()));
            m.insert("cyclotomic_order".into(), json!(value.order()));
        }
        FrobeniusVerdict::NotFrobenius { stage, reason } => {
            m.insert("status".into(), json!("not_frobenius"));
            m.insert("stage".into(), json!(stage.name()));
            m.insert("reason".into(), json!(reason));
        }
        FrobeniusVerdict::Inconclusive { reason } => {
            m.insert("status".into(), json!("inconclusive"));
            m.insert("reason".into(), json!(reason));
        }
    }
    Value::Object(m)
}

pub fn frobenius_human(s: &Semigroup, v: &FrobeniusVerdict) -> String {
    match v {
        FrobeniusVerdict::Frobenius { witness, value } => {
            let point: Vec<String> = witness.iter().enumerate().map(|(i, w)| format!("{} = {w}", var_name(s, i as Var))).collect();
            format!("status: frobenius\nwitness: {}\nvalue: {value}\n", point.join(", "))
        }
        FrobeniusVerdict::NotFrobenius { stage, reason } => format!("status: not_frobenius\nstage: {}\nreason: {reason}\n", stage.name()),
        FrobeniusVerdict::Inconclusive { reason } => format!("status: inconclusive\nreason: {reason}\n"),
    }
}
