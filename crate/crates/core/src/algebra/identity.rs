//! Polynomial identity testing, exact or by random evaluation.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Evaluation points are drawn uniformly from `[-SAMPLE_RANGE, SAMPLE_RANGE]`.
pub const SAMPLE_RANGE: i64 = 1_000_000;

pub const DEFAULT_ROUNDS: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityMode {
    Exact,
    Randomized { seed: u64, rounds: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum IdentityVerdict {
    /// `failure_bound` is `None` for exact comparisons.
    Equal { failure_bound: Option<f64> },
    Unequal { witness: Vec<i64> },
}

impl IdentityVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Self::Equal { .. })
    }
}

/// Schwartz–Zippel bound for `rounds` independent points.
pub fn failure_bound(degree: u32, rounds: u32) -> f64 {
    (degree as f64 / (2.0 * SAMPLE_RANGE as f64)).powi(rounds as i32)
}

pub fn random_point(rng: &mut ChaCha8Rng, universe: usize) -> Vec<i64> {
    (0..universe).map(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)).collect()
}

fn to_big(point: &[i64]) -> Vec<BigInt> {
    point.iter().map(|&v| BigInt::from(v)).collect()
}

fn check_universe(p: &Poly, universe: usize) -> Result<()> {
    match p.vars().last() {
        Some(&v) if v as usize >= universe => Err(Error::VariableMismatch(v as usize, universe)),
        _ => Ok(()),
    }
}

/// Compares `p` and `q`, both in variables `x0..x(universe-1)`.
pub fn poly_identity_test(p: &Poly, q: &Poly, universe: usize, mode: IdentityMode) -> Result<IdentityVerdict> {
    check_universe(p, universe)?;
    check_universe(q, universe)?;
    match mode {
        IdentityMode::Exact => {
            if p == q {
                Ok(IdentityVerdict::Equal { failure_bound: None })
            } else {
                Ok(IdentityVerdict::Unequal { witness: nonzero_witness(&(p - q), universe, 0) })
            }
        }
        IdentityMode::Randomized { seed, rounds } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..rounds {
                let pt = random_point(&mut rng, universe);
                let big = to_big(&pt);
                if p.eval_int(&big)? != q.eval_int(&big)? {
                    return Ok(IdentityVerdict::Unequal { witness: pt });
                }
            }
            let deg = p.degree().unwrap_or(0).max(q.degree().unwrap_or(0));
            Ok(IdentityVerdict::Equal { failure_bound: Some(failure_bound(deg, rounds)) })
        }
    }
}

/// A point where the nonzero polynomial `d` does not vanish: 0/1 points first, then random ones.
pub fn nonzero_witness(d: &Poly, universe: usize, seed: u64) -> Vec<i64> {
    assert!(!d.is_zero());
    let bits = universe.min(12);
    for mask in 0u32..(1 << bits) {
        let pt: Vec<i64> = (0..universe).map(|i| if i < bits { ((mask >> i) & 1) as i64 } else { 0 }).collect();
        if !d.eval_int(&to_big(&pt)).expect("universe checked").is_zero() {
            return pt;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pt = random_point(&mut rng, universe);
        if !d.eval_int(&to_big(&pt)).expect("universe checked").is_zero() {
            return pt;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::parse_index_var;

    fn p(s: &str) -> Poly {
        Poly::parse(s, 1, &parse_index_var).unwrap()
    }

    #[test]
    fn exact_mode() {
        let a = p("x0^2");
        assert!(poly_identity_test(&a, &a, 2, IdentityMode::Exact).unwrap().is_equal());
        match poly_identity_test(&a, &p("x0*x1"), 2, IdentityMode::Exact).unwrap() {
            IdentityVerdict::Unequal { witness } => assert_eq!(witness, vec![1, 0]),
            v => panic!("{v:?}"),
        }
        let prod = &p("x0-x1") * &p("x0+x1");
        assert!(poly_identity_test(&prod, &p("x0^2-x1^2"), 2, IdentityMode::Exact).unwrap().is_equal());
    }

    #[test]
    fn randomized_mode_reports_bound() {
        let prod = &p("x0-x1") * &p("x0+x1");
        let v = poly_identity_test(&prod, &p("x0^2-x1^2"), 2, IdentityMode::Randomized { seed: 1, rounds: 3 }).unwrap();
        match v {
            IdentityVerdict::Equal { failure_bound: Some(b) } => assert!(b > 0.0 && b < 1e-15),
            v => panic!("{v:?}"),
        }
        let v = poly_identity_test(&p("x0^2"), &p("x0*x1"), 2, IdentityMode::Randomized { seed: 1, rounds: 3 }).unwrap();
        assert!(!v.is_equal());
    }

    #[test]
    fn universe_is_checked() {
        assert_eq!(
            poly_identity_test(&p("x5"), &p("x0"), 2, IdentityMode::Exact),
            Err(Error::VariableMismatch(5, 2))
        );
    }
}
