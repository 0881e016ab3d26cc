//! Exhaustive checks of the factorizers against symbolic determinants on small corpora.

use std::collections::HashMap;

use frobdet_core::algebra::cyclotomic::CycNum;
use frobdet_core::algebra::det::det_poly_matrix;
use frobdet_core::algebra::linalg::det_cyc;
use frobdet_core::commutative::{chain_fastpath, factor_commutative, local_spectrum, splus_decompose};
use frobdet_core::corpus;
use frobdet_core::determinant::factorization::{Status, VerifyConfig};
use frobdet_core::determinant::frobenius::{frobenius_test, FrobeniusVerdict};
use frobdet_core::determinant::paratrophic::{cayley_matrix, paratrophic_determinant, Mode};
use frobdet_core::inverse::{factor_clifford, groupoid_determinant, groupoid_of, inverse_determinant, is_inverse, InverseVerdict};
use frobdet_core::nilpotent::{analyze_nilpotent, annihilator_matrix, factor_nil_adjoined, Cocycle};
use frobdet_core::order::{factor_semilattice, natural_order, smith_matrix, OrderMode};
use frobdet_core::rings::{frobenius_form_check, kovacs_check, matrix_monoid, zmod_monoid, FiniteFieldSpec, FormVerdict};
use frobdet_core::semigroup::enumerate::{enumerate, enumerate_commutative, EnumFilter};
use frobdet_core::semigroup::{families, validate_table, RawTable, Semigroup};
use num_bigint::BigInt;

fn all_tables(max: usize) -> Vec<Semigroup> {
    (1..=max).flat_map(|n| enumerate(n, EnumFilter::default()).unwrap()).collect()
}

fn plain(s: &Semigroup) -> frobdet_core::algebra::poly::Poly {
    paratrophic_determinant(s, Mode::Plain, 12).unwrap()
}

#[test]
fn adjoined_elements_are_detected() {
    for s in all_tables(3) {
        let z = families::adjoin_zero(&s).unwrap();
        assert_eq!(z.analyze().zero, Some(s.len()));
        let i = families::adjoin_identity(&s).unwrap();
        assert_eq!(i.analyze().identity, Some(s.len()));
    }
}

#[test]
fn enumerated_tables_revalidate() {
    for n in 1..=4 {
        for s in enumerate_commutative(n).unwrap() {
            assert!(s.analyze().is_commutative);
            assert_eq!(validate_table(RawTable::new(s.rows())).unwrap(), s);
        }
    }
}

#[test]
fn semilattices_up_to_eight() {
    let mut lattices: Vec<Semigroup> = corpus::semilattices().unwrap().into_iter().map(|e| e.semigroup).collect();
    lattices.extend((6..=8).map(|n| families::gcd(n).unwrap()));
    lattices.push(families::chain_semilattice(8).unwrap());
    let b4 = corpus::boolean_lattice4().unwrap();
    lattices.push(b4.direct_product(&families::chain_semilattice(2).unwrap(), 4096).unwrap());
    for l in lattices {
        let f = factor_semilattice(&l).unwrap();
        assert_eq!(f.expand(), plain(&l), "{:?}", l.rows());
    }
}

#[test]
fn central_idempotent_order_is_compatible() {
    let mut checked = 0;
    for n in 1..=4 {
        for s in enumerate_commutative(n).unwrap() {
            let Ok(p) = natural_order(&s, OrderMode::CentralIdempotent) else { continue };
            checked += 1;
            for (a, b, c, d) in (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |d| (a, b, c, d))))) {
                if p.leq(a, b) && p.leq(c, d) {
                    assert!(p.leq(s.mul(a, c), s.mul(b, d)), "{:?}", s.rows());
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn inverse_semigroups_through_groupoids() {
    let mut cases: Vec<Semigroup> = all_tables(4).into_iter().filter(|s| matches!(is_inverse(s), InverseVerdict::Yes { .. })).collect();
    cases.extend(corpus::inverse(8).unwrap().into_iter().map(|e| e.semigroup));
    assert!(cases.len() > 50);
    for s in &cases {
        let d = inverse_determinant(s, 12).unwrap();
        assert!(d.checked_directly);
        assert_eq!(d.theta, plain(s), "{:?}", s.rows());
        let InverseVerdict::Yes { star } = is_inverse(s) else { unreachable!() };
        let g = groupoid_of(s, &star);
        let all: Vec<usize> = (0..g.arrow_count()).collect();
        assert_eq!(groupoid_determinant(&g, 12).unwrap(), det_poly_matrix(&g.matrix(&all), 12).unwrap());
        assert!(g.structure().dimension_count_holds());
    }
}

#[test]
fn clifford_factors_are_distinct() {
    let cfg = VerifyConfig::default();
    for e in corpus::clifford().unwrap() {
        let f = factor_clifford(&e.semigroup, &HashMap::new(), &cfg).unwrap();
        let monic: Vec<_> = f.factors.iter().map(|x| x.as_linear().unwrap().normalize().unwrap().1).collect();
        for (i, a) in monic.iter().enumerate() {
            assert!(!monic[i + 1..].contains(a), "{}", e.name);
        }
    }
    let s3z = families::adjoin_zero(&families::symmetric(3).unwrap()).unwrap();
    let g = families::symmetric(3).unwrap();
    let reps = HashMap::from([(0, corpus::s3_reps(&g).unwrap())]);
    let f = factor_clifford(&s3z, &reps, &cfg).unwrap();
    assert_eq!(f.expand(), plain(&s3z));
}

#[test]
fn nilpotent_adjoined_monoids() {
    let cfg = VerifyConfig::default();
    let mut cases: Vec<Semigroup> = all_tables(3)
        .iter()
        .filter_map(|s| families::adjoin_identity(s).ok())
        .filter(|m| analyze_nilpotent(m).is_ok())
        .collect();
    cases.extend((1..=7).map(|k| families::cyclic_nilpotent(k).unwrap()));
    for b in [vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1], vec![0, 1]], vec![vec![0, 1], vec![1, 0]], vec![vec![1, 1], vec![1, 1]]] {
        cases.push(families::three_nil(&b).unwrap());
    }
    for m in &cases {
        let f = factor_nil_adjoined(m, None, &cfg).unwrap();
        let contracted = paratrophic_determinant(m, Mode::Contracted, 12).unwrap();
        if f.status == Status::Zero {
            assert!(contracted.is_zero(), "{:?}", m.rows());
        } else {
            assert_eq!(f.expand(), contracted, "{:?}", m.rows());
        }
        if let Ok((_, a)) = annihilator_matrix(m, None) {
            assert!(det_cyc(&a).to_integer().is_some());
        }
    }
}

#[test]
fn twisted_nilpotent_blocks() {
    let cfg = VerifyConfig::default();
    for m in [families::wenger9().unwrap(), families::zmod_mul(8).unwrap(), families::zmod_mul(9).unwrap()] {
        for b in local_spectrum(&m).unwrap().blocks {
            let q = &b.quotient;
            let again = Cocycle::from_fn(q, |x, y| b.cocycle.get(x, y).cloned().unwrap()).unwrap();
            let f = factor_nil_adjoined(q, Some(&again), &cfg).unwrap();
            let twisted = paratrophic_determinant(q, Mode::Twisted(&again), 12).unwrap();
            if f.status == Status::Zero {
                assert!(twisted.is_zero());
            } else {
                assert_eq!(f.expand(), twisted);
            }
        }
    }
}

fn local_monoids() -> Vec<Semigroup> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for s in enumerate_commutative(n).unwrap() {
            if let Ok(d) = splus_decompose(&s) {
                out.extend(d.components.into_iter().map(|c| c.monoid));
            }
        }
    }
    out.extend([4, 8, 9, 16, 25, 27].map(|n| families::zmod_mul(n).unwrap()));
    out.push(families::wenger9().unwrap());
    out.push(families::wenger11().unwrap());
    out
}

#[test]
fn local_spectrum_invariants() {
    for m in local_monoids() {
        let sp = local_spectrum(&m).unwrap();
        if let Some(d) = sp.det_product() {
            assert!(d.to_integer().is_some(), "{:?}: {d}", m.rows());
        }
        let closed = sp.transversal_closed(&m);
        for b in &sp.blocks {
            Cocycle::from_fn(&b.quotient, |x, y| b.cocycle.get(x, y).cloned().unwrap()).unwrap();
            if closed {
                assert!(b.cocycle.is_trivial(), "{:?}", m.rows());
            }
        }
    }
}

#[test]
fn prime_power_chains() {
    for n in [2, 3, 4, 5, 7, 8, 9, 11] {
        // the 11×11 symbolic expansion is slow; check that one at random points
        let cfg = if n == 11 { VerifyConfig::randomized(11) } else { VerifyConfig::default() };
        let s = families::zmod_mul(n).unwrap();
        assert_ne!(factor_commutative(&s, &cfg).unwrap().status, Status::Zero);
        let f = chain_fastpath(&s, &cfg).unwrap();
        assert_eq!(f.provenance, "chain");
        let sp = local_spectrum(&s).unwrap();
        for w in sp.stabilizers.windows(2) {
            assert!(w[0].iter().all(|g| w[1].contains(g)), "Z/{n}");
        }
        let per_chi: Vec<_> = f.factors.iter().map(|x| x.as_linear().unwrap().normalize().unwrap().1).collect();
        for (i, a) in per_chi.iter().enumerate() {
            assert!(!per_chi[i + 1..].contains(a));
        }
    }
}

#[test]
fn frobenius_witnesses_evaluate_nonzero() {
    for s in all_tables(3) {
        match frobenius_test(&s, 12, 7).unwrap() {
            FrobeniusVerdict::Frobenius { witness, value } => {
                let cm = cayley_matrix(&s, Mode::Plain).unwrap();
                let point: Vec<CycNum> = witness.iter().cloned().map(CycNum::from_bigint).collect();
                assert_eq!(cm.numeric_det(&point), value);
                assert!(!value.is_zero());
            }
            FrobeniusVerdict::NotFrobenius { .. } => assert!(plain(&s).is_zero()),
            FrobeniusVerdict::Inconclusive { .. } => panic!("order 3 is within the cap"),
        }
    }
}

#[test]
fn ring_monoids_are_frobenius() {
    for n in 2..=12 {
        let (s, l) = zmod_monoid(n).unwrap();
        assert!(matches!(frobenius_form_check(&s, &l).unwrap(), FormVerdict::Nonzero(_)), "Z/{n}");
    }
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let f = FiniteFieldSpec::new(q).unwrap();
        let (s, l) = matrix_monoid(1, &f).unwrap();
        assert!(matches!(frobenius_form_check(&s, &l).unwrap(), FormVerdict::Nonzero(_)), "F_{q}");
    }
    let (s, l) = matrix_monoid(2, &FiniteFieldSpec::new(2).unwrap()).unwrap();
    assert!(matches!(frobenius_form_check(&s, &l).unwrap(), FormVerdict::Nonzero(_)));
}

#[test]
fn kovacs_and_subspace_counts() {
    for (n, q) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2), (2, 5), (2, 16), (4, 4)] {
        let r = kovacs_check(n, q).unwrap();
        assert!(r.holds, "({n}, {q})");
        for t in &r.terms {
            if let Some(c) = t.counted {
                assert_eq!(c, t.binomial, "({n}, {q}) r = {}", t.r);
            }
        }
    }
}

#[test]
fn smith_determinants_are_totient_products() {
    for n in 1..=30 {
        let r = smith_matrix(n).unwrap();
        let prod: BigInt = r.totients.iter().map(|&t| BigInt::from(t)).product();
        assert_eq!(r.determinant, prod);
    }
}
