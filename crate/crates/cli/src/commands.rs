//! One handler per subcommand.

use std::io::Read;

use frobdet_core::algebra::identity::{IdentityMode, DEFAULT_ROUNDS};
use frobdet_core::determinant::factorization::VerifyConfig;
use frobdet_core::determinant::frobenius::frobenius_test;
use frobdet_core::determinant::paratrophic::{paratrophic_determinant, Mode};
use frobdet_core::inverse::{groupoid_of, is_inverse, InverseVerdict};
use frobdet_core::nilpotent::{analyze_nilpotent, Cocycle};
use frobdet_core::order::{mobius, natural_order, smith_matrix, OrderMode};
use frobdet_core::rings::{frobenius_form_check, kovacs_check, matrix_monoid, zmod_monoid, FiniteFieldSpec, FormVerdict};
use frobdet_core::semigroup::families::parse_family;
use frobdet_core::semigroup::sgp::{parse_sgp, write_sgp};
use frobdet_core::semigroup::Semigroup;
use serde_json::{json, Map, Value};

use crate::dispatch::{self, Outcome};
use crate::render;
use crate::{Cli, CliError, Command, OrderArg};

pub struct Output {
    pub text: String,
    pub code: u8,
}

fn ok(text: String) -> Result<Output, CliError> {
    Ok(Output { text, code: 0 })
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Domain(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("reading {path}: {e}")))
    }
}

fn load(path: &str) -> Result<Semigroup, CliError> {
    Ok(parse_sgp(&read_input(path)?)?)
}

impl Cli {
    fn verify_config(&self) -> VerifyConfig {
        let mode = if self.randomized { IdentityMode::Randomized { seed: self.seed, rounds: DEFAULT_ROUNDS } } else { IdentityMode::Exact };
        VerifyConfig { cap: self.cap, mode }
    }

    fn cocycle(&self, s: &Semigroup) -> Result<Option<Cocycle>, CliError> {
        match &self.twist {
            None => Ok(None),
            Some(path) => Ok(Some(Cocycle::parse(&read_input(path)?, s)?)),
        }
    }

    fn emit(&self, json: Value, human: String) -> Result<Output, CliError> {
        ok(if self.json { render::json_text(&json) } else { human })
    }
}

fn labels(s: &Semigroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.label(x)).collect()
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    if cli.twist.is_some() && !matches!(cli.command, Command::Det { .. } | Command::Factor { .. }) {
        return Err(CliError::Usage("--twist applies only to `det` and `factor`".into()));
    }
    match &cli.command {
        Command::Validate { input } => {
            let s = load(input)?;
            let text = write_sgp(&s);
            cli.emit(json!({ "status": "valid", "size": s.len(), "sgp": text }), text.clone())
        }
        Command::Info { input } => info(cli, &load(input)?),
        Command::Det { input } => det(cli, &load(input)?),
        Command::Frobenius { input } => {
            let s = load(input)?;
            let v = frobenius_test(&s, cli.cap, cli.seed)?;
            cli.emit(render::frobenius_json(&s, &v), render::frobenius_human(&s, &v))
        }
        Command::Mobius { input, order } => mobius_cmd(cli, &load(input)?, *order),
        Command::Factor { input } => factor(cli, &load(input)?),
        Command::Groupoid { input } => groupoid(cli, &load(input)?),
        Command::Gen { family, params } => {
            let s = parse_family(family, params)?;
            let text = write_sgp(&s);
            cli.emit(json!({ "family": family, "size": s.len(), "sgp": text }), text.clone())
        }
        Command::Smith { n } => smith(cli, *n),
        Command::Kovacs { n, q } => kovacs(cli, *n, *q),
        Command::Ringcheck { ring, params } => ringcheck(cli, ring, params),
        Command::Verify { det_file, factorization_file } => {
            let mode = match cli.verify_config().mode {
                IdentityMode::Exact => IdentityMode::Exact,
                m => m,
            };
            let r = crate::verify::verify(&read_input(det_file)?, &read_input(factorization_file)?, mode)?;
            let mut out = cli.emit(r.json, r.text)?;
            out.code = if r.equal { 0 } else { 1 };
            Ok(out)
        }
    }
}

fn info(cli: &Cli, s: &Semigroup) -> Result<Output, CliError> {
    let r = s.analyze();
    let inverse = matches!(is_inverse(s), InverseVerdict::Yes { .. });
    let mut shapes = Vec::new();
    for (name, holds) in [
        ("commutative", r.is_commutative),
        ("band", s.is_band()),
        ("semilattice", s.is_semilattice()),
        ("group", s.is_group()),
        ("inverse", inverse),
        ("clifford", inverse && r.central_idempotents),
        ("nilpotent-adjoined", analyze_nilpotent(s).is_ok()),
    ] {
        if holds {
            shapes.push(name);
        }
    }
    let fixed: Vec<Value> =
        r.fixed_points.iter().enumerate().map(|(a, &(l, rt))| json!({ "element": s.label(a), "left": l, "right": rt })).collect();
    let json = json!({
        "size": r.size,
        "elements": s.labels(),
        "idempotents": labels(s, &r.idempotents),
        "commutative": r.is_commutative,
        "zero": r.zero.map(|z| s.label(z)),
        "identity": r.identity.map(|e| s.label(e)),
        "square_is_whole": r.is_idempotent_semigroup,
        "fixed_points": fixed,
        "central_idempotents": r.central_idempotents,
        "group_of_units": r.group_of_units.as_ref().map(|g| labels(s, g)),
        "shapes": shapes,
    });
    let opt = |o: Option<usize>| o.map_or("none".to_string(), |x| s.label(x));
    let mut text = format!("size: {}\nelements: {}\n", r.size, s.labels().join(" "));
    text.push_str(&format!("idempotents: {}\n", labels(s, &r.idempotents).join(" ")));
    text.push_str(&format!("commutative: {}\nzero: {}\nidentity: {}\n", r.is_commutative, opt(r.zero), opt(r.identity)));
    text.push_str(&format!("S^2 = S: {}\ncentral idempotents: {}\n", r.is_idempotent_semigroup, r.central_idempotents));
    if let Some(g) = &r.group_of_units {
        text.push_str(&format!("group of units: {}\n", labels(s, g).join(" ")));
    }
    let fp: Vec<String> = r.fixed_points.iter().enumerate().map(|(a, (l, rt))| format!("{}:{l}/{rt}", s.label(a))).collect();
    text.push_str(&format!("fixed points (left/right): {}\n", fp.join(" ")));
    text.push_str(&format!("shapes: {}\n", if shapes.is_empty() { "none".to_string() } else { shapes.join(", ") }));
    cli.emit(json, text)
}

fn det(cli: &Cli, s: &Semigroup) -> Result<Output, CliError> {
    let twist = cli.cocycle(s)?;
    let mode = match (&twist, cli.contracted) {
        (Some(c), _) => Mode::Twisted(c),
        (None, true) => Mode::Contracted,
        (None, false) => Mode::Plain,
    };
    let name = mode.name();
    let theta = paratrophic_determinant(s, mode, cli.cap)?;
    let shown = render::poly(s, &theta);
    let json = json!({
        "mode": name,
        "determinant": shown,
        "cyclotomic_order": theta.order(),
        "degree": theta.degree(),
        "terms": theta.num_terms(),
    });
    cli.emit(json, format!("{shown}\n"))
}

fn mobius_cmd(cli: &Cli, s: &Semigroup, order: Option<OrderArg>) -> Result<Output, CliError> {
    let mode = match order {
        Some(OrderArg::Semilattice) => OrderMode::Semilattice,
        Some(OrderArg::Inverse) => OrderMode::Inverse,
        Some(OrderArg::Central) => OrderMode::CentralIdempotent,
        None if s.is_semilattice() => OrderMode::Semilattice,
        None if matches!(is_inverse(s), InverseVerdict::Yes { .. }) => OrderMode::Inverse,
        None => OrderMode::CentralIdempotent,
    };
    let p = natural_order(s, mode)?;
    let mu = mobius(&p);
    let json = json!({ "mode": mode.name(), "elements": s.labels(), "mobius": mu });
    let names = s.labels();
    let width = names.iter().map(String::len).chain(mu.iter().flatten().map(|v| v.to_string().len())).max().unwrap_or(1);
    let mut text = format!("mode: {}\n{:>width$} ", mode.name(), "");
    text.push_str(&names.iter().map(|n| format!("{n:>width$}")).collect::<Vec<_>>().join(" "));
    text.push('\n');
    for (a, row) in mu.iter().enumerate() {
        text.push_str(&format!("{:>width$} ", names[a]));
        text.push_str(&row.iter().map(|v| format!("{v:>width$}")).collect::<Vec<_>>().join(" "));
        text.push('\n');
    }
    cli.emit(json, text)
}

fn factor(cli: &Cli, s: &Semigroup) -> Result<Output, CliError> {
    let twist = cli.cocycle(s)?;
    let cfg = cli.verify_config();
    match dispatch::factor(s, cli.contracted, twist.as_ref(), &cfg, cli.seed)? {
        Outcome::Factored(f) => cli.emit(render::factorization_json(s, &f, &cfg, cli.seed), render::factorization_human(s, &f, &cfg, cli.seed)),
        Outcome::Tested { verdict, explanation } => {
            let mut json = render::frobenius_json(s, &verdict);
            json["provenance"] = json!("frobenius-test");
            json["explanation"] = json!(explanation);
            let text = format!("provenance: frobenius-test\nexplanation: {explanation}\n{}", render::frobenius_human(s, &verdict));
            cli.emit(json, text)
        }
    }
}

fn groupoid(cli: &Cli, s: &Semigroup) -> Result<Output, CliError> {
    let star = match is_inverse(s) {
        InverseVerdict::Yes { star } => star,
        InverseVerdict::No { element, count } => {
            return Err(CliError::Domain(format!("not an inverse semigroup: {} has {count} inverses", s.label(element))));
        }
    };
    let g = groupoid_of(s, &star);
    let st = g.structure();
    let classes: Vec<Value> = st
        .classes
        .iter()
        .map(|c| {
            json!({
                "objects": labels(s, &c.objects),
                "n": c.size(),
                "group": labels(s, &c.group),
                "group_order": c.group.len(),
                "block_dimension": c.block_dimension(),
            })
        })
        .collect();
    let json = json!({
        "objects": labels(s, &g.objects),
        "arrows": st.arrows,
        "classes": classes,
        "dimension_count_holds": st.dimension_count_holds(),
    });
    let mut text = format!("objects: {}\narrows: {}\n", labels(s, &g.objects).join(" "), st.arrows);
    for c in &st.classes {
        text.push_str(&format!(
            "class {{{}}}: n = {}, |G| = {}, block dimension {}\n",
            labels(s, &c.objects).join(","),
            c.size(),
            c.group.len(),
            c.block_dimension()
        ));
    }
    let sum: Vec<String> = st.classes.iter().map(|c| format!("{}²·{}", c.size(), c.group.len())).collect();
    text.push_str(&format!("{} = {} ({})\n", sum.join(" + "), st.arrows, if st.dimension_count_holds() { "holds" } else { "fails" }));
    cli.emit(json, text)
}

fn smith(cli: &Cli, n: usize) -> Result<Output, CliError> {
    let r = smith_matrix(n)?;
    let phis: Vec<String> = r.totients.iter().map(u64::to_string).collect();
    let json = json!({ "n": n, "determinant": r.determinant.to_string(), "totients": r.totients });
    let text = format!("{}\n= φ(1)⋯φ({n}) = {}\n", r.determinant, phis.join("·"));
    cli.emit(json, text)
}

fn kovacs(cli: &Cli, n: usize, q: usize) -> Result<Output, CliError> {
    let r = kovacs_check(n, q)?;
    let terms: Vec<Value> = r
        .terms
        .iter()
        .map(|t| {
            let mut m = Map::new();
            m.insert("r".into(), json!(t.r));
            m.insert("q_binomial".into(), json!(t.binomial.to_string()));
            m.insert("counted".into(), t.counted.map_or(Value::Null, |c| json!(c.to_string())));
            m.insert("gl_order".into(), json!(t.gl_order.to_string()));
            Value::Object(m)
        })
        .collect();
    let json = json!({
        "n": n, "q": q,
        "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string(),
        "terms": terms, "holds": r.holds,
    });
    let mut text = format!("q^(n^2) = {}^{} = {}\n", q, n * n, r.lhs);
    for t in &r.terms {
        let counted = t.counted.map_or(String::new(), |c| format!(" (counted {c})"));
        text.push_str(&format!("r = {}: [{n} {}]_{q} = {}{counted}, |GL_{}| = {}\n", t.r, t.r, t.binomial, t.r, t.gl_order));
    }
    text.push_str(&format!("sum = {}: {}\n", r.rhs, if r.holds { "holds" } else { "fails" }));
    let mut out = cli.emit(json, text)?;
    if !r.holds {
        out.code = 1;
    }
    Ok(out)
}

fn ringcheck(cli: &Cli, ring: &str, params: &[usize]) -> Result<Output, CliError> {
    let (name, (s, lambda)) = match (ring, params) {
        ("zmod", [n]) => (format!("Z/{n}"), zmod_monoid(*n)?),
        ("matmonoid", [n, q]) => (format!("M_{n}(F_{q})"), matrix_monoid(*n, &FiniteFieldSpec::new(*q)?)?),
        _ => return Err(CliError::Usage("ringcheck takes `zmod N` or `matmonoid N Q`".into())),
    };
    let v = frobenius_form_check(&s, &lambda)?;
    let (status, det) = match &v {
        FormVerdict::Nonzero(d) => ("frobenius", Some(d)),
        FormVerdict::Zero => ("zero", None),
    };
    let json = json!({
        "ring": name,
        "size": s.len(),
        "status": status,
        "determinant": det.map(ToString::to_string),
        "cyclotomic_order": det.map_or(lambda.order, |d| d.order()),
    });
    let text = match det {
        Some(d) => format!("{name} ({} elements): det(λ(st)) = {d}\nstatus: frobenius\n", s.len()),
        None => format!("{name} ({} elements): det(λ(st)) = 0\nstatus: zero\n", s.len()),
    };
    cli.emit(json, text)
}
