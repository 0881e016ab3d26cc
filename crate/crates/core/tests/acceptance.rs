//! Acceptance suite: one PASS/FAIL line per criterion, each within its time budget.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use frobdet_core::algebra::characters::character_group;
use frobdet_core::algebra::cyclotomic::CycNum;
use frobdet_core::algebra::linalg::{det_bigint, inverse_cyc};
use frobdet_core::algebra::poly::{Monomial, Poly};
use frobdet_core::commutative::{chain_fastpath, factor_commutative, factor_local, local_spectrum};
use frobdet_core::corpus;
use frobdet_core::determinant::factorization::{Status, VerifyConfig};
use frobdet_core::determinant::frobenius::{frobenius_test, FrobeniusVerdict};
use frobdet_core::determinant::group::{factor_group_determinant, GroupReps};
use frobdet_core::determinant::paratrophic::{backnforth_check, paratrophic_determinant, BasedAlgebra, Mode};
use frobdet_core::determinant::transport::transport_basis;
use frobdet_core::inverse::{factor_clifford, groupoid_of, inverse_determinant, is_inverse, InverseVerdict};
use frobdet_core::nilpotent::factor_nil_adjoined;
use frobdet_core::order::{factor_semilattice, mobius, natural_order, smith_matrix, OrderMode};
use frobdet_core::rings::{frobenius_form_check, kovacs_check, matrix_monoid, zmod_monoid, FiniteFieldSpec, FormVerdict};
use frobdet_core::semigroup::enumerate::enumerate_commutative;
use frobdet_core::semigroup::{families, Semigroup};
use num_bigint::BigInt;

const CAP: usize = 12;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn theta(s: &Semigroup) -> Result<Poly, String> {
    paratrophic_determinant(s, Mode::Plain, CAP).map_err(|e| e.to_string())
}

fn smith() -> Outcome {
    for (n, want) in [(6, 32), (8, 768)] {
        let r = smith_matrix(n).map_err(|e| e.to_string())?;
        let big: Vec<Vec<BigInt>> = r.matrix.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let direct = det_bigint(&big);
        let product: BigInt = r.totients.iter().map(|&t| BigInt::from(t)).product();
        ensure(r.determinant == BigInt::from(want) && direct == r.determinant && product == r.determinant, || {
            format!("smith {n}: report {}, direct {direct}, totients {product}", r.determinant)
        })?;
    }
    Ok("smith 6 = 32, smith 8 = 768".into())
}

fn wilf_lindstrom() -> Outcome {
    let lattices = corpus::semilattices().map_err(|e| e.to_string())?;
    for e in &lattices {
        let f = factor_semilattice(&e.semigroup).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(f.expand() == theta(&e.semigroup)?, || format!("{}: product differs from the determinant", e.name))?;
    }
    Ok(format!("{} semilattices", lattices.len()))
}

fn groups() -> Outcome {
    let cfg = VerifyConfig::default();
    let mut cases: Vec<(&str, Semigroup, GroupReps)> = Vec::new();
    for n in 2..=4 {
        cases.push((["", "", "Z/2", "Z/3", "Z/4"][n], families::zmod_add(n).unwrap(), GroupReps::AbelianAuto));
    }
    cases.push(("Klein", corpus::klein().unwrap(), GroupReps::AbelianAuto));
    let s3 = families::symmetric(3).unwrap();
    let reps = corpus::s3_reps(&s3).map_err(|e| e.to_string())?;
    cases.push(("S_3", s3, GroupReps::Supplied(reps)));
    for (name, g, reps) in &cases {
        let f = factor_group_determinant(g, reps, &cfg).map_err(|e| format!("{name}: {e}"))?;
        ensure(f.constant.is_rational(), || format!("{name}: constant {} not rational", f.constant))?;
        ensure(f.expand() == theta(g)?, || format!("{name}: product differs from the determinant"))?;
    }
    Ok(format!("{} groups", cases.len()))
}

fn cyclic_nilpotent() -> Outcome {
    let cfg = VerifyConfig::default();
    for k in 2..=5usize {
        let m = families::cyclic_nilpotent(k).unwrap();
        let label = if k == 2 { "a".to_string() } else { format!("a{}", k - 1) };
        let v = m.index_of(&label).ok_or(format!("no element {label}"))?;
        let sign = if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let want = Poly::term(Monomial::from_pairs([(v as u32, k as u32)]), CycNum::from_int(sign));
        let f = factor_nil_adjoined(&m, None, &cfg).map_err(|e| e.to_string())?;
        ensure(f.expand() == want, || format!("k = {k}: got {}", f.expand()))?;
        let contracted = paratrophic_determinant(&m, Mode::Contracted, CAP).map_err(|e| e.to_string())?;
        ensure(contracted == want, || format!("k = {k}: contracted determinant {contracted}"))?;
    }
    Ok("k = 2..5".into())
}

fn worked_examples() -> Outcome {
    let cfg = VerifyConfig::default();
    let w9 = families::wenger9().unwrap();
    let f = factor_local(&w9, &cfg).map_err(|e| e.to_string())?;
    let shown: Vec<(String, u32)> = f.factors.iter().map(|x| (x.poly.render(&|v| w9.label(v as usize)), x.multiplicity)).collect();
    ensure(f.constant == CycNum::from_int(-1), || format!("constant {}", f.constant))?;
    ensure(shown == [("z'+az'".to_string(), 4), ("z'-az'".to_string(), 4)], || format!("factors {shown:?}"))?;
    let contracted = paratrophic_determinant(&w9, Mode::Contracted, CAP).map_err(|e| e.to_string())?;
    ensure(f.expand() == contracted, || "9-element product differs from the 8×8 contracted determinant".into())?;

    let w11 = families::wenger11().unwrap();
    let f = factor_local(&w11, &cfg).map_err(|e| e.to_string())?;
    let reason = f.zero_reason.clone().unwrap_or_default();
    ensure(f.status == Status::Zero && reason.contains("det A(χ") && reason.ends_with("= 0"), || format!("11-element: {:?} {reason}", f.status))?;
    let sp = local_spectrum(&w11).map_err(|e| e.to_string())?;
    ensure(sp.blocks.iter().any(|b| b.det.as_ref().is_some_and(CycNum::is_zero)), || "no vanishing det A(χ) in the report".into())?;
    Ok(format!("constant -1, (z'+az')^4 (z'-az')^4; 11-element: {reason}"))
}

fn commutative_oracle() -> Outcome {
    let cfg = VerifyConfig::default();
    let mut total = 0;
    let mut zeros = 0;
    for n in 1..=4 {
        for s in enumerate_commutative(n).map_err(|e| e.to_string())? {
            total += 1;
            let t = theta(&s)?;
            let f = factor_commutative(&s, &cfg).map_err(|e| format!("{:?}: {e}", s.rows()))?;
            if f.is_zero() {
                zeros += 1;
                ensure(t.is_zero(), || format!("{:?}: reported zero, determinant {t}", s.rows()))?;
            } else {
                ensure(f.expand() == t, || format!("{:?}: product differs from the determinant", s.rows()))?;
            }
        }
    }
    Ok(format!("{total} tables, {zeros} vanish"))
}

fn chains() -> Outcome {
    let cfg = VerifyConfig::default();
    for n in [4, 8, 9] {
        let m = families::zmod_mul(n).unwrap();
        let fast = chain_fastpath(&m, &cfg).map_err(|e| format!("Z/{n}: {e}"))?;
        let local = factor_local(&m, &cfg).map_err(|e| format!("Z/{n}: {e}"))?;
        let contracted = paratrophic_determinant(&m, Mode::Contracted, CAP).map_err(|e| e.to_string())?;
        ensure(fast.expand() == local.expand() && local.expand() == contracted, || format!("Z/{n}: chain, local and symbolic disagree"))?;
    }
    Ok("Z/4, Z/8, Z/9".into())
}

fn inverse_semigroups() -> Outcome {
    let rook = families::rook(2).unwrap();
    let d = inverse_determinant(&rook, CAP).map_err(|e| e.to_string())?;
    ensure(d.theta == theta(&rook)?, || "I_2: groupoid route differs from the 7×7 determinant".into())?;
    let cfg = VerifyConfig::default();
    let cliffords = corpus::clifford().map_err(|e| e.to_string())?;
    for e in &cliffords {
        let f = factor_clifford(&e.semigroup, &HashMap::new(), &cfg).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(f.expand() == theta(&e.semigroup)?, || format!("{}: product differs from the determinant", e.name))?;
    }
    Ok(format!("I_2 and {} Clifford semigroups", cliffords.len()))
}

fn vanishing() -> Outcome {
    let mut cases = vec![("T_2".to_string(), families::full_transform(2).unwrap()), ("left_zero(2)".to_string(), families::left_zero(2).unwrap())];
    cases.extend(corpus::non_semilattice_bands().map_err(|e| e.to_string())?.into_iter().map(|e| (e.name, e.semigroup)));
    for (name, s) in &cases {
        let v = frobenius_test(s, CAP, 0).map_err(|e| e.to_string())?;
        ensure(matches!(v, FrobeniusVerdict::NotFrobenius { .. }), || format!("{name}: {v:?}"))?;
        ensure(theta(s)?.is_zero(), || format!("{name}: determinant does not vanish"))?;
    }
    Ok(format!("{} semigroups", cases.len()))
}

fn rings() -> Outcome {
    for n in 2..=12 {
        let (s, l) = zmod_monoid(n).map_err(|e| e.to_string())?;
        let v = frobenius_form_check(&s, &l).map_err(|e| e.to_string())?;
        ensure(matches!(v, FormVerdict::Nonzero(_)), || format!("Z/{n}: form vanishes"))?;
    }
    let f2 = FiniteFieldSpec::new(2).map_err(|e| e.to_string())?;
    let (m, l) = matrix_monoid(2, &f2).map_err(|e| e.to_string())?;
    ensure(m.len() == 16, || "M_2(F_2) has the wrong size".into())?;
    let v = frobenius_form_check(&m, &l).map_err(|e| e.to_string())?;
    ensure(matches!(v, FormVerdict::Nonzero(_)), || "M_2(F_2): form vanishes".into())?;
    for (n, q) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let r = kovacs_check(n, q).map_err(|e| e.to_string())?;
        ensure(r.holds && r.terms.iter().all(|t| t.counted == Some(t.binomial)), || format!("kovacs ({n}, {q}): {r:?}"))?;
    }
    Ok("Z/2..Z/12, M_2(F_2), five dimension identities".into())
}

fn int_matrix(n: usize, seed: usize) -> Vec<Vec<CycNum>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = if i == j { 1 } else if j > i { ((i * 7 + j * 3 + seed) % 5) as i64 - 2 } else if j + 1 == i { 1 } else { 0 };
                    CycNum::from_int(v)
                })
                .collect()
        })
        .collect()
}

fn structural() -> Outcome {
    let mut counts = [0usize; 6];
    for e in corpus::with_zero(6).map_err(|e| e.to_string())? {
        let r = backnforth_check(&e.semigroup, CAP).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(r.holds, || format!("{}: backnforth identity fails", e.name))?;
        counts[0] += 1;
    }
    for e in corpus::named().map_err(|e| e.to_string())?.iter().filter(|e| e.semigroup.len() <= 4) {
        let alg = BasedAlgebra::from_semigroup(&e.semigroup, Mode::Plain).map_err(|err| err.to_string())?;
        let n = alg.dim();
        let t = alg.paratrophic_matrix("plain").determinant(CAP).map_err(|err| err.to_string())?;
        let cols = int_matrix(n, counts[1]);
        let Some(p) = inverse_cyc(&cols) else { continue };
        let t_new = alg.change_basis(&cols).map_err(|err| err.to_string())?.paratrophic_matrix("new").determinant(CAP).map_err(|err| err.to_string())?;
        ensure(transport_basis(&t_new, &p).map_err(|err| err.to_string())? == t, || format!("{}: transport back fails", e.name))?;
        let there = transport_basis(&t, &cols).map_err(|err| err.to_string())?;
        ensure(transport_basis(&there, &p).map_err(|err| err.to_string())? == t, || format!("{}: round trip fails", e.name))?;
        counts[1] += 1;
    }
    let mut posets = Vec::new();
    for e in corpus::semilattices().map_err(|e| e.to_string())? {
        posets.push((e.name, natural_order(&e.semigroup, OrderMode::Semilattice).map_err(|err| err.to_string())?));
    }
    for e in corpus::inverse(8).map_err(|e| e.to_string())? {
        posets.push((e.name, natural_order(&e.semigroup, OrderMode::Inverse).map_err(|err| err.to_string())?));
    }
    for n in 1..=4 {
        for s in enumerate_commutative(n).map_err(|e| e.to_string())? {
            if let Ok(p) = natural_order(&s, OrderMode::CentralIdempotent) {
                posets.push((format!("{:?}", s.rows()), p));
            }
        }
    }
    for (name, p) in &posets {
        let (z, mu) = (p.zeta(), mobius(p));
        let n = p.len();
        for i in 0..n {
            for j in 0..n {
                let v: i64 = (0..n).map(|k| z[i][k] * mu[k][j]).sum();
                ensure(v == i64::from(i == j), || format!("{name}: ζ·μ ≠ I"))?;
            }
        }
        counts[2] += 1;
    }
    let named = corpus::named().map_err(|e| e.to_string())?;
    for e in named.iter().filter(|e| e.semigroup.is_group() && e.semigroup.is_commutative()) {
        let g = &e.semigroup;
        let chars = character_group(g).map_err(|err| err.to_string())?;
        ensure(chars.len() == g.len(), || format!("{}: {} characters", e.name, chars.len()))?;
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let sum = (0..g.len()).fold(CycNum::zero(1), |acc, x| &acc + &(&a.value(x) * &b.conj_value(x)));
                let want = if i == j { CycNum::from_int(g.len() as i64) } else { CycNum::zero(1) };
                ensure(sum == want, || format!("{}: characters {i}, {j} not orthogonal", e.name))?;
            }
        }
        counts[3] += 1;
    }
    for e in named.iter().filter(|e| e.semigroup.len() <= 10) {
        let t = theta(&e.semigroup)?;
        if !t.is_zero() {
            ensure(t.is_homogeneous() && t.degree() == Some(e.semigroup.len() as u32), || format!("{}: not homogeneous of full degree", e.name))?;
            counts[4] += 1;
        }
    }
    for e in corpus::inverse(usize::MAX).map_err(|e| e.to_string())? {
        let InverseVerdict::Yes { star } = is_inverse(&e.semigroup) else { unreachable!() };
        let g = groupoid_of(&e.semigroup, &star);
        let st = g.structure();
        ensure(st.dimension_count_holds() && g.arrow_count() == e.semigroup.len(), || format!("{}: groupoid dimension count fails", e.name))?;
        counts[5] += 1;
    }
    Ok(format!(
        "backnforth {}, transport {}, posets {}, character groups {}, homogeneous {}, groupoids {}",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5]
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("smith determinant", 1, smith),
        ("wilf-lindstrom semilattices", 30, wilf_lindstrom),
        ("group determinants", 30, groups),
        ("cyclic nilpotent", 1, cyclic_nilpotent),
        ("worked examples", 60, worked_examples),
        ("exhaustive commutative oracle", 600, commutative_oracle),
        ("chain monoids", 60, chains),
        ("inverse semigroups", 60, inverse_semigroups),
        ("vanishing certificates", 30, vanishing),
        ("frobenius rings", 120, rings),
        ("structural identities", 120, structural),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} {:>2} {name} ({:.2?} / {budget} s): {detail}", i + 1, elapsed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
