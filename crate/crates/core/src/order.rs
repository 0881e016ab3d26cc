//! Partial orders on semigroups, zeta and Möbius matrices, and the
//! Wilf–Lindström and Smith determinant formulas.

use num_bigint::BigInt;

use crate::algebra::cyclotomic::{euler_phi, CycNum};
use crate::algebra::linalg::{det_bigint, unitriangular_inverse};
use crate::algebra::poly::{LinForm, Var};
use crate::determinant::factorization::{Factor, Factorization};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// A finite partial order with a fixed linear extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
    extension: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderMode {
    /// `s ≤ t` iff `st = s`, on a commutative band.
    Semilattice,
    /// `s ≤ t` iff `s = te` for an idempotent `e`, on an inverse semigroup.
    Inverse,
    /// `s ≤ t` iff `s = t s⁺`, when `S² = S` and idempotents are central.
    CentralIdempotent,
}

impl OrderMode {
    pub fn name(self) -> &'static str {
        match self {
            OrderMode::Semilattice => "semilattice",
            OrderMode::Inverse => "inverse",
            OrderMode::CentralIdempotent => "central_idempotent",
        }
    }
}

impl FinitePoset {
    /// Builds from a relation, checking the order axioms. The linear extension
    /// repeatedly removes the least-index minimal element.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> std::result::Result<Self, String> {
        let rel: Vec<bool> = (0..n * n).map(|k| leq(k / n, k % n)).collect();
        let at = |a: usize, b: usize| rel[a * n + b];
        for a in 0..n {
            if !at(a, a) {
                return Err(format!("relation is not reflexive at {a}"));
            }
            for b in 0..n {
                if a != b && at(a, b) && at(b, a) {
                    return Err(format!("relation is not antisymmetric on {a}, {b}"));
                }
                if at(a, b) {
                    if let Some(c) = (0..n).find(|&c| at(b, c) && !at(a, c)) {
                        return Err(format!("relation is not transitive on {a}, {b}, {c}"));
                    }
                }
            }
        }
        let mut placed = vec![false; n];
        let mut extension = Vec::with_capacity(n);
        while extension.len() < n {
            let m = (0..n)
                .find(|&a| !placed[a] && (0..n).all(|b| placed[b] || b == a || !at(b, a)))
                .expect("a finite order has a minimal element");
            placed[m] = true;
            extension.push(m);
        }
        Ok(Self { n, leq: rel, extension })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Elements listed bottom-up, least index first among minimal elements.
    pub fn linear_extension(&self) -> &[usize] {
        &self.extension
    }

    pub fn below(&self, a: usize) -> Vec<usize> {
        (0..self.n).filter(|&b| self.leq(b, a)).collect()
    }

    pub fn zeta(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.leq(a, b) as i64).collect()).collect()
    }
}

/// Möbius matrix `μ = ζ⁻¹`, indexed by element: `mu[a][b] = μ(a, b)`.
pub fn mobius(p: &FinitePoset) -> Vec<Vec<i64>> {
    unitriangular_inverse(&p.zeta(), p.linear_extension()).expect("zeta is unitriangular along a linear extension")
}

/// `s⁺` for every element: the least idempotent `e` with `se = s`, which is
/// the product of all such idempotents. Requires central idempotents.
pub fn splus(s: &Semigroup) -> Result<Vec<usize>> {
    let idem = s.idempotents();
    if let Some(&e) = idem.iter().find(|&&e| (0..s.len()).any(|t| s.mul(e, t) != s.mul(t, e))) {
        return Err(Error::IdempotentsNotCentral(e));
    }
    (0..s.len())
        .map(|x| {
            let fixing: Vec<usize> = idem.iter().copied().filter(|&e| s.mul(x, e) == x).collect();
            fixing
                .iter()
                .copied()
                .reduce(|a, b| s.mul(a, b))
                .ok_or_else(|| Error::ModeHypothesisFailed { mode: "central_idempotent", reason: format!("no idempotent fixes {}", s.label(x)) })
        })
        .collect()
}

/// The star map of an inverse semigroup, or the first element without a
/// unique generalized inverse.
pub fn star_map(s: &Semigroup) -> std::result::Result<Vec<usize>, (usize, usize)> {
    (0..s.len())
        .map(|x| {
            let inv: Vec<usize> = (0..s.len()).filter(|&t| s.mul(s.mul(x, t), x) == x && s.mul(s.mul(t, x), t) == t).collect();
            if inv.len() == 1 {
                Ok(inv[0])
            } else {
                Err((x, inv.len()))
            }
        })
        .collect()
}

/// The natural partial order of `s` for the given mode; hypotheses are checked.
pub fn natural_order(s: &Semigroup, mode: OrderMode) -> Result<FinitePoset> {
    let fail = |reason: String| Error::ModeHypothesisFailed { mode: mode.name(), reason };
    let n = s.len();
    let poset = match mode {
        OrderMode::Semilattice => {
            if let Some((a, b)) = s.noncommuting_pair() {
                return Err(fail(format!("{}*{} != {}*{}", s.label(a), s.label(b), s.label(b), s.label(a))));
            }
            if let Some(a) = (0..n).find(|&a| !s.is_idempotent(a)) {
                return Err(fail(format!("{} is not idempotent", s.label(a))));
            }
            FinitePoset::from_relation(n, |a, b| s.mul(a, b) == a)
        }
        OrderMode::Inverse => {
            star_map(s).map_err(|(x, c)| fail(format!("{} has {c} generalized inverses", s.label(x))))?;
            let idem = s.idempotents();
            FinitePoset::from_relation(n, |a, b| idem.iter().any(|&e| s.mul(b, e) == a))
        }
        OrderMode::CentralIdempotent => {
            if s.square().len() != n {
                return Err(fail("S^2 != S".into()));
            }
            let plus = splus(s).map_err(|e| match e {
                Error::IdempotentsNotCentral(e) => fail(format!("idempotent {} is not central", s.label(e))),
                other => other,
            })?;
            FinitePoset::from_relation(n, |a, b| s.mul(b, plus[a]) == a)
        }
    };
    poset.map_err(fail)
}

/// Factors the determinant of a semilattice as `∏_a Σ_{b≤a} μ(b,a) x_b`.
pub fn factor_semilattice(l: &Semigroup) -> Result<Factorization> {
    let p = natural_order(l, OrderMode::Semilattice).map_err(|e| match e {
        Error::ModeHypothesisFailed { reason, .. } => Error::NotSemilattice(reason),
        other => other,
    })?;
    let mu = mobius(&p);
    let factors = (0..l.len())
        .map(|a| {
            let mut f = LinForm::new();
            for b in p.below(a) {
                f.add_term(b as Var, CycNum::from_int(mu[b][a]));
            }
            Factor::linear(f, 1)
        })
        .collect();
    Ok(Factorization::factored(CycNum::one(), factors, "wilf-lindstrom"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithReport {
    pub n: usize,
    pub matrix: Vec<Vec<i64>>,
    pub determinant: BigInt,
    /// `φ(1), ..., φ(n)`.
    pub totients: Vec<u64>,
}

/// The `n × n` gcd matrix and its determinant, computed directly and as `∏ φ(i)`.
pub fn smith_matrix(n: usize) -> Result<SmithReport> {
    if !(1..=200).contains(&n) {
        return Err(Error::OutOfRange(format!("smith size {n} not in 1..=200")));
    }
    use num_integer::Integer;
    let matrix: Vec<Vec<i64>> = (1..=n as i64).map(|i| (1..=n as i64).map(|j| i.gcd(&j)).collect()).collect();
    let big: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let direct = det_bigint(&big);
    let totients: Vec<u64> = (1..=n as u64).map(euler_phi).collect();
    let product: BigInt = totients.iter().map(|&t| BigInt::from(t)).product();
    if direct != product {
        return Err(Error::VerificationFailed(format!("gcd matrix determinant {direct} != totient product {product}")));
    }
    Ok(SmithReport { n, matrix, determinant: direct, totients })
}
