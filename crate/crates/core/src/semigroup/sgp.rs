//! The `.sgp` text format.
//!
//! ```text
//! # optional comment lines
//! n 3
//! elements I a z
//! table
//! I a z
//! a z z
//! z z z
//! zero z
//! identity I
//! ```
//!
//! Table entries are element names when `elements` is present and 1-based
//! indices otherwise; the same holds for `zero` and `identity`. LF and CRLF
//! line endings are accepted.

use super::{validate_table, RawTable, Semigroup};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

pub fn parse_sgp(text: &str) -> Result<Semigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, first) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let n: usize = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", v] => v.parse().map_err(|_| perr(ln, format!("bad size `{v}`")))?,
        _ => return Err(perr(ln, "expected `n <size>`")),
    };
    if n == 0 {
        return Err(perr(ln, "size must be positive"));
    }

    let (mut ln, mut line) = lines.next().ok_or_else(|| Error::Parse("missing `table`".into()))?;
    let mut names: Option<Vec<String>> = None;
    if let Some(rest) = line.strip_prefix("elements") {
        let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if list.len() != n {
            return Err(perr(ln, format!("expected {n} element names, found {}", list.len())));
        }
        names = Some(list);
        (ln, line) = lines.next().ok_or_else(|| Error::Parse("missing `table`".into()))?;
    }
    if line != "table" {
        return Err(perr(ln, "expected `table`"));
    }

    let resolve = |tok: &str, ln: usize| -> Result<usize> {
        match &names {
            Some(ns) => ns.iter().position(|x| x == tok).ok_or_else(|| perr(ln, format!("unknown element `{tok}`"))),
            None => match tok.parse::<usize>() {
                Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                _ => Err(perr(ln, format!("entry `{tok}` is not an index in 1..={n}"))),
            },
        }
    };

    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, row) = lines.next().ok_or_else(|| Error::Parse(format!("table has fewer than {n} rows")))?;
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != n {
            return Err(perr(ln, format!("expected {n} entries, found {}", entries.len())));
        }
        table.push(entries.iter().map(|t| resolve(t, ln)).collect::<Result<Vec<_>>>()?);
    }

    let mut raw = RawTable { table, names: names.clone(), zero: None, identity: None };
    for (ln, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["zero", v] => raw.zero = Some(resolve(v, ln)?),
            ["identity", v] => raw.identity = Some(resolve(v, ln)?),
            _ => return Err(perr(ln, format!("unexpected `{line}`"))),
        }
    }
    validate_table(raw)
}

/// Canonical serialization; `parse_sgp(&write_sgp(s)) == s`.
pub fn write_sgp(s: &Semigroup) -> String {
    let mut out = format!("n {}\n", s.len());
    if let Some(names) = s.names() {
        out.push_str("elements ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out.push_str("table\n");
    for a in 0..s.len() {
        let row: Vec<String> = (0..s.len()).map(|b| s.label(s.mul(a, b))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(z) = s.zero() {
        out.push_str(&format!("zero {}\n", s.label(z)));
    }
    if let Some(e) = s.identity() {
        out.push_str(&format!("identity {}\n", s.label(e)));
    }
    out
}
