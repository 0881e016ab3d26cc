//! `verify`: compare a determinant against a factorization, both read from files.
//!
//! The determinant file holds either a polynomial or the JSON written by
//! `det --json`; the factorization file holds the JSON written by
//! `factor --json`. Variables are matched by name.

use std::cell::RefCell;

use frobdet_core::algebra::cyclotomic::CycNum;
use frobdet_core::algebra::identity::{poly_identity_test, IdentityMode, IdentityVerdict};
use frobdet_core::algebra::poly::{Poly, Var};
use serde_json::{json, Value};

use crate::CliError;

struct Names(RefCell<Vec<String>>);

impl Names {
    fn resolve(&self, name: &str) -> Option<Var> {
        let mut names = self.0.borrow_mut();
        let idx = names.iter().position(|n| n == name).unwrap_or_else(|| {
            names.push(name.to_string());
            names.len() - 1
        });
        Some(idx as Var)
    }
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Domain(msg.into())
}

fn parse_poly(text: &str, order: u32, names: &Names) -> Result<Poly, CliError> {
    Ok(Poly::parse(text, order, &|s| names.resolve(s))?)
}

fn order_of(v: &Value) -> Result<u32, CliError> {
    match v.get("cyclotomic_order") {
        None => Ok(1),
        Some(o) => o.as_u64().and_then(|o| u32::try_from(o).ok()).filter(|&o| o > 0).ok_or_else(|| bad("cyclotomic_order must be a positive integer")),
    }
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub equal: bool,
}

pub fn verify(det_text: &str, fact_text: &str, mode: IdentityMode) -> Result<Report, CliError> {
    let names = Names(RefCell::new(Vec::new()));
    let fact: Value = serde_json::from_str(fact_text).map_err(|e| bad(format!("factorization file is not JSON: {e}")))?;
    let order = order_of(&fact)?;
    let det = if det_text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(det_text).map_err(|e| bad(format!("determinant file is not JSON: {e}")))?;
        let d = v.get("determinant").and_then(Value::as_str).ok_or_else(|| bad("determinant JSON lacks a `determinant` string"))?;
        parse_poly(d, order.max(order_of(&v)?), &names)?
    } else {
        parse_poly(det_text.trim(), order, &names)?
    };
    let expanded = match fact.get("status").and_then(Value::as_str) {
        Some("zero") => Poly::zero(),
        Some("factored") => {
            let constant = fact.get("constant").and_then(Value::as_str).ok_or_else(|| bad("factorization lacks a `constant` string"))?;
            let mut acc = Poly::constant(CycNum::parse(order, constant)?);
            let factors = fact.get("factors").and_then(Value::as_array).ok_or_else(|| bad("factorization lacks a `factors` array"))?;
            for f in factors {
                let form = f.get("form").and_then(Value::as_object).ok_or_else(|| bad("factor lacks a `form` object"))?;
                let mult = f.get("multiplicity").and_then(Value::as_u64).ok_or_else(|| bad("factor lacks a `multiplicity`"))?;
                let mut p = Poly::zero();
                for (mono, coef) in form {
                    let coef = coef.as_str().ok_or_else(|| bad(format!("coefficient of {mono} is not a string")))?;
                    let term = if mono == "1" { format!("({coef})") } else { format!("({coef})*{mono}") };
                    p = &p + &parse_poly(&term, order, &names)?;
                }
                acc = &acc * &p.pow(mult as u32);
            }
            acc
        }
        other => return Err(bad(format!("cannot verify a result with status {other:?}"))),
    };
    let universe = names.0.borrow().len();
    let verdict = poly_identity_test(&det, &expanded, universe, mode)?;
    let (mode_name, rounds, seed) = match mode {
        IdentityMode::Exact => ("exact", 0, 0),
        IdentityMode::Randomized { seed, rounds } => ("randomized", rounds, seed),
    };
    let equal = verdict.is_equal();
    let mut json = json!({
        "status": if equal { "verified" } else { "mismatch" },
        "verification": { "mode": mode_name, "rounds": rounds, "seed": seed },
    });
    let mut text = format!("status: {}\nverification: {mode_name}\n", if equal { "verified" } else { "mismatch" });
    if let IdentityVerdict::Unequal { witness } = verdict {
        let names = names.0.borrow();
        let point: serde_json::Map<String, Value> = names.iter().zip(&witness).map(|(n, w)| (n.clone(), json!(w))).collect();
        let shown: Vec<String> = names.iter().zip(&witness).map(|(n, w)| format!("{n} = {w}")).collect();
        text.push_str(&format!("witness: {}\n", shown.join(", ")));
        json["witness"] = Value::Object(point);
    }
    Ok(Report { json, text, equal })
}
