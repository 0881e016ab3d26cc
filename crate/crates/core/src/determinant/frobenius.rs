//! Staged test for whether a semigroup determinant vanishes.
//!
//! Cheap necessary conditions come first (`S² = S`, matching fixed-point
//! counts of left and right multiplication by each element), then exact evaluations of the
//! Cayley matrix at integer points, then the symbolic determinant.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::cyclotomic::CycNum;
use crate::algebra::identity::random_point;
use crate::determinant::paratrophic::{cayley_matrix, Mode};
use crate::error::Result;
use crate::semigroup::Semigroup;

/// Random specializations tried before falling back to the symbolic determinant.
pub const RANDOM_ATTEMPTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Square,
    FixedPoints,
    Specialization,
    Symbolic,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Square => "square",
            Stage::FixedPoints => "fixed-point profile",
            Stage::Specialization => "specialization",
            Stage::Symbolic => "symbolic",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FrobeniusVerdict {
    /// The determinant is nonzero at `witness`.
    Frobenius { witness: Vec<BigInt>, value: CycNum },
    NotFrobenius { stage: Stage, reason: String },
    Inconclusive { reason: String },
}

impl FrobeniusVerdict {
    pub fn is_frobenius(&self) -> bool {
        matches!(self, FrobeniusVerdict::Frobenius { .. })
    }
}

pub fn frobenius_test(s: &Semigroup, cap: usize, seed: u64) -> Result<FrobeniusVerdict> {
    let n = s.len();
    let square = s.square();
    if square.len() != n {
        let missing = (0..n).find(|a| !square.contains(a)).expect("S² is a proper subset");
        return Ok(FrobeniusVerdict::NotFrobenius {
            stage: Stage::Square,
            reason: format!("S² ≠ S: {} is not a product", s.label(missing)),
        });
    }
    if let Some((a, (l, r))) = (0..n).map(|a| (a, s.fixed_points(a))).find(|(_, (l, r))| l != r) {
        return Ok(FrobeniusVerdict::NotFrobenius {
            stage: Stage::FixedPoints,
            reason: format!("{} fixes {l} elements on the left but {r} on the right", s.label(a)),
        });
    }

    let matrix = cayley_matrix(s, Mode::Plain)?;
    let mut points: Vec<Vec<i64>> = Vec::new();
    if let Some(e) = s.identity() {
        points.push((0..n).map(|a| i64::from(a == e)).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        points.push(random_point(&mut rng, n));
    }
    for p in points {
        let big: Vec<BigInt> = p.into_iter().map(BigInt::from).collect();
        let cyc: Vec<CycNum> = big.iter().cloned().map(CycNum::from_bigint).collect();
        let value = matrix.numeric_det(&cyc);
        if !value.is_zero() {
            return Ok(FrobeniusVerdict::Frobenius { witness: big, value });
        }
    }
    if n > cap {
        return Ok(FrobeniusVerdict::Inconclusive {
            reason: format!("determinant vanished at {RANDOM_ATTEMPTS} random points; {n} exceeds the symbolic cap {cap}"),
        });
    }
    let theta = matrix.determinant(cap)?;
    if theta.is_zero() {
        Ok(FrobeniusVerdict::NotFrobenius { stage: Stage::Symbolic, reason: "the symbolic determinant is 0".into() })
    } else {
        // practically unreachable: a nonzero polynomial vanishing at every sample
        Ok(FrobeniusVerdict::Inconclusive { reason: format!("random points missed a nonzero determinant {theta}") })
    }
}
