//! Factorizations of determinants and their verification.
//!
//! Factorizers propose factors; the constant is never taken on faith. It is
//! recovered by dividing the reference determinant by the expanded product
//! (or, beyond the symbolic cap, fitted and checked at random points), and
//! any closed-form constant a factorizer predicts is compared against it.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::cyclotomic::CycNum;
use crate::algebra::identity::{failure_bound, random_point, IdentityMode, IdentityVerdict, DEFAULT_ROUNDS};
use crate::algebra::poly::{LinForm, Poly, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Zero,
    Factored,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub poly: Poly,
    pub multiplicity: u32,
}

impl Factor {
    pub fn new(poly: Poly, multiplicity: u32) -> Self {
        Self { poly, multiplicity }
    }

    pub fn linear(form: LinForm, multiplicity: u32) -> Self {
        Self { poly: form.to_poly(), multiplicity }
    }

    pub fn as_linear(&self) -> Option<LinForm> {
        LinForm::from_poly(&self.poly)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub mode: IdentityMode,
    /// Probability bound for randomized checks; `None` when exact.
    pub failure_bound: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub status: Status,
    pub constant: CycNum,
    pub factors: Vec<Factor>,
    /// Which factorization theorem produced the factors.
    pub provenance: String,
    pub zero_reason: Option<String>,
    pub verification: Option<Verification>,
    /// Diagnostics gathered along the way (e.g. per-character data).
    pub notes: Vec<String>,
}

impl Factorization {
    /// Normalizes every factor to have leading coefficient 1, moving the
    /// leading coefficients into the constant.
    pub fn factored(constant: CycNum, factors: Vec<Factor>, provenance: &str) -> Self {
        let mut c = constant;
        let mut out = Vec::with_capacity(factors.len());
        for f in factors {
            let (_, lc) = f.poly.leading().expect("factors are nonzero").clone();
            let inv = lc.inv().expect("nonzero leading coefficient");
            c = &c * &lc.pow(f.multiplicity);
            out.push(Factor { poly: f.poly.scale(&inv), multiplicity: f.multiplicity });
        }
        Self {
            status: Status::Factored,
            constant: c,
            factors: out,
            provenance: provenance.to_string(),
            zero_reason: None,
            verification: None,
            notes: Vec::new(),
        }
    }

    pub fn zero(provenance: &str, reason: impl Into<String>) -> Self {
        Self {
            status: Status::Zero,
            constant: CycNum::zero(1),
            factors: Vec::new(),
            provenance: provenance.to_string(),
            zero_reason: Some(reason.into()),
            verification: None,
            notes: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.status == Status::Zero
    }

    /// Least common cyclotomic order of all coefficients.
    pub fn cyclotomic_order(&self) -> u32 {
        use num_integer::Integer;
        self.factors.iter().fold(self.constant.order(), |acc, f| acc.lcm(&f.poly.order()))
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.poly.degree().unwrap_or(0) * f.multiplicity).sum()
    }

    /// Product of the factors without the constant.
    pub fn expand_factors(&self) -> Poly {
        let mut acc = Poly::one();
        for f in &self.factors {
            acc = &acc * &f.poly.pow(f.multiplicity);
        }
        acc
    }

    /// `constant · ∏ factor^multiplicity`, or zero.
    pub fn expand(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.expand_factors().scale(&self.constant)
    }

    pub fn eval_factors_int(&self, point: &[BigInt]) -> Result<CycNum> {
        let mut acc = CycNum::one();
        for f in &self.factors {
            acc = &acc * &f.poly.eval_int(point)?.pow(f.multiplicity);
        }
        Ok(acc)
    }

    pub fn eval_int(&self, point: &[BigInt]) -> Result<CycNum> {
        if self.is_zero() {
            return Ok(CycNum::zero(1));
        }
        Ok(&self.constant * &self.eval_factors_int(point)?)
    }

    /// Applies a linear substitution to every factor and renormalizes.
    pub fn substitute_linear(&self, sub: &HashMap<Var, LinForm>) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let factors = self
            .factors
            .iter()
            .map(|f| Ok(Factor::new(f.poly.substitute_linear(sub)?, f.multiplicity)))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Self::factored(self.constant.clone(), factors, &self.provenance);
        out.notes = self.notes.clone();
        Ok(out)
    }

    /// Merges equal factors, adding multiplicities; order of first appearance is kept.
    pub fn merge_equal_factors(&mut self) {
        let mut merged: Vec<Factor> = Vec::new();
        for f in self.factors.drain(..) {
            match merged.iter_mut().find(|g| g.poly == f.poly) {
                Some(g) => g.multiplicity += f.multiplicity,
                None => merged.push(f),
            }
        }
        self.factors = merged;
    }
}

/// Something a factorization can be checked against.
pub trait Reference {
    /// Number of variables `x0..x(universe-1)`.
    fn universe(&self) -> usize;
    /// Matrix dimension, compared with the symbolic cap.
    fn dim(&self) -> usize;
    fn symbolic(&self, cap: usize) -> Result<Poly>;
    fn numeric(&self, point: &[BigInt]) -> CycNum;
}

impl Reference for Poly {
    fn universe(&self) -> usize {
        self.vars().last().map_or(0, |&v| v as usize + 1)
    }
    fn dim(&self) -> usize {
        0
    }
    fn symbolic(&self, _cap: usize) -> Result<Poly> {
        Ok(self.clone())
    }
    fn numeric(&self, point: &[BigInt]) -> CycNum {
        self.eval_int(point).expect("point covers the universe")
    }
}

/// How factorizations are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest matrix dimension expanded symbolically.
    pub cap: usize,
    /// `Exact` verifies symbolically when within the cap and randomly beyond
    /// it; `Randomized` always evaluates at random points.
    pub mode: IdentityMode,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { cap: crate::algebra::det::DEFAULT_CAP, mode: IdentityMode::Exact }
    }
}

impl VerifyConfig {
    pub fn randomized(seed: u64) -> Self {
        Self { mode: IdentityMode::Randomized { seed, rounds: DEFAULT_ROUNDS }, ..Self::default() }
    }

    fn seed_rounds(&self) -> (u64, u32) {
        match self.mode {
            IdentityMode::Exact => (0, DEFAULT_ROUNDS),
            IdentityMode::Randomized { seed, rounds } => (seed, rounds.max(1)),
        }
    }
}

/// Fixes the constant of a proposed factorization against `reference` and
/// verifies it. `predicted` is a closed-form constant to be cross-checked.
pub fn settle(reference: &dyn Reference, mut f: Factorization, predicted: Option<CycNum>, cfg: &VerifyConfig) -> Result<Factorization> {
    let symbolic = cfg.mode == IdentityMode::Exact && reference.dim() <= cfg.cap;
    if symbolic {
        let theta = reference.symbolic(cfg.cap)?;
        if f.is_zero() {
            if !theta.is_zero() {
                return Err(Error::VerificationFailed(format!("claimed zero but the determinant is {theta}")));
            }
        } else {
            let prod = f.expand_factors();
            let (Some((tm, tc)), Some((pm, pc))) = (theta.leading(), prod.leading()) else {
                return Err(Error::VerificationFailed("the determinant is zero but factors were proposed".into()));
            };
            if tm != pm {
                return Err(Error::VerificationFailed("leading monomials of determinant and product differ".into()));
            }
            let c = tc.checked_div(pc)?;
            if prod.scale(&c) != theta {
                return Err(Error::VerificationFailed("determinant is not a constant multiple of the product of factors".into()));
            }
            f.constant = c;
        }
        f.verification = Some(Verification { mode: IdentityMode::Exact, failure_bound: None });
    } else {
        let (seed, rounds) = cfg.seed_rounds();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let universe = reference.universe();
        let mut checked = 0;
        let mut fitted: Option<CycNum> = if f.is_zero() { Some(CycNum::zero(1)) } else { None };
        let mut attempts = 0;
        while checked < rounds {
            attempts += 1;
            if attempts > 64 * rounds {
                return Err(Error::VerificationFailed("could not find a point where the factors are nonzero".into()));
            }
            let pt: Vec<BigInt> = random_point(&mut rng, universe).into_iter().map(BigInt::from).collect();
            let d = reference.numeric(&pt);
            if f.is_zero() {
                if !d.is_zero() {
                    return Err(Error::VerificationFailed("claimed zero but the determinant is nonzero at a random point".into()));
                }
                checked += 1;
                continue;
            }
            let q = f.eval_factors_int(&pt)?;
            if q.is_zero() {
                continue;
            }
            match &fitted {
                None => {
                    fitted = Some(d.checked_div(&q)?);
                }
                Some(c) => {
                    if &(c * &q) != &d {
                        return Err(Error::VerificationFailed("factor product disagrees with the determinant at a random point".into()));
                    }
                }
            }
            checked += 1;
        }
        if let Some(c) = fitted {
            if !f.is_zero() {
                if c.is_zero() {
                    return Err(Error::VerificationFailed("fitted constant is zero".into()));
                }
                f.constant = c;
            }
        }
        // the first nonzero point only fits the constant
        let effective = if f.is_zero() { rounds } else { rounds.saturating_sub(1).max(1) };
        f.verification = Some(Verification { mode: IdentityMode::Randomized { seed, rounds }, failure_bound: Some(failure_bound(reference.dim() as u32, effective)) });
    }
    if let Some(p) = predicted {
        if !f.is_zero() && p != f.constant {
            return Err(Error::VerificationFailed(format!("closed-form constant {p} disagrees with computed constant {}", f.constant)));
        }
    }
    Ok(f)
}

/// Checks `f` against a known determinant.
pub fn verify_factorization(reference: &Poly, f: &Factorization, universe: usize, mode: IdentityMode) -> Result<IdentityVerdict> {
    match mode {
        IdentityMode::Exact => crate::algebra::identity::poly_identity_test(reference, &f.expand(), universe, mode),
        IdentityMode::Randomized { seed, rounds } => {
            for p in f.factors.iter().map(|f| &f.poly).chain(std::iter::once(reference)) {
                if let Some(&v) = p.vars().last() {
                    if v as usize >= universe {
                        return Err(Error::VariableMismatch(v as usize, universe));
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..rounds {
                let pt = random_point(&mut rng, universe);
                let big: Vec<BigInt> = pt.iter().map(|&v| BigInt::from(v)).collect();
                if reference.eval_int(&big)? != f.eval_int(&big)? {
                    return Ok(IdentityVerdict::Unequal { witness: pt });
                }
            }
            let deg = reference.degree().unwrap_or(0).max(f.degree());
            Ok(IdentityVerdict::Equal { failure_bound: Some(failure_bound(deg, rounds)) })
        }
    }
}
