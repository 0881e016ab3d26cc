//! Nilpotent semigroups with an adjoined identity, optionally twisted by a
//! cocycle.
//!
//! For `M = S ∪ {I}` with `S` nilpotent, the contracted determinant is
//! `det A · x_{z'}^{|S|}` when `S` has a unique annihilating element `z'`,
//! where `A_{s,t} = c(s,t)` if `st = z'` and 0 otherwise; it vanishes when
//! there is no such element.

use crate::algebra::cyclotomic::CycNum;
use crate::algebra::linalg::det_cyc;
use crate::algebra::poly::{LinForm, Var};
use crate::determinant::factorization::{settle, Factor, Factorization, VerifyConfig};
use crate::determinant::paratrophic::{cayley_matrix, Mode};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// A normalized 2-cocycle on the nonzero products of a semigroup with zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle {
    n: usize,
    /// Row-major; `None` exactly where `st = z`.
    values: Vec<Option<CycNum>>,
}

impl Cocycle {
    pub fn trivial(s: &Semigroup) -> Result<Self> {
        Self::from_fn(s, |_, _| CycNum::one())
    }

    /// Builds `c(a, b) = f(a, b)` on every pair with `ab ≠ z`.
    pub fn from_fn(s: &Semigroup, f: impl Fn(usize, usize) -> CycNum) -> Result<Self> {
        let z = s.zero().ok_or(Error::NoZero)?;
        let n = s.len();
        let values = (0..n * n)
            .map(|k| {
                let (a, b) = (k / n, k % n);
                (s.mul(a, b) != z).then(|| f(a, b))
            })
            .collect();
        let c = Self { n, values };
        c.validate(s)?;
        Ok(c)
    }

    pub fn get(&self, a: usize, b: usize) -> Option<&CycNum> {
        self.values[a * self.n + b].as_ref()
    }

    /// Least common cyclotomic order of the values.
    pub fn order(&self) -> u32 {
        use num_integer::Integer;
        self.values.iter().flatten().fold(1, |acc, v| acc.lcm(&v.order()))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().flatten().all(CycNum::is_one)
    }

    pub fn check_domain(&self, s: &Semigroup) -> Result<()> {
        let z = s.zero().ok_or(Error::NoZero)?;
        if self.n != s.len() {
            return Err(Error::CocycleDomainMismatch(format!("cocycle on {} elements, semigroup has {}", self.n, s.len())));
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if (s.mul(a, b) != z) != self.get(a, b).is_some() {
                    return Err(Error::CocycleDomainMismatch(format!(
                        "c({}, {}) must be defined exactly when the product is nonzero",
                        s.label(a),
                        s.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate(&self, s: &Semigroup) -> Result<()> {
        self.check_domain(s)?;
        let z = s.zero().expect("checked");
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if let Some(v) = self.get(a, b) {
                    if v.is_zero() {
                        return Err(Error::CocycleDomainMismatch(format!("c({}, {}) is zero", s.label(a), s.label(b))));
                    }
                }
            }
        }
        if let Some(e) = s.identity() {
            for m in 0..n {
                for v in [self.get(e, m), self.get(m, e)].into_iter().flatten() {
                    if !v.is_one() {
                        return Err(Error::CocycleDomainMismatch(format!("c is not normalized at {}", s.label(m))));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = s.mul(a, b);
                for c in 0..n {
                    if s.mul(ab, c) == z {
                        continue;
                    }
                    let bc = s.mul(b, c);
                    let lhs = self.get(a, b).unwrap() * self.get(ab, c).unwrap();
                    let rhs = self.get(b, c).unwrap() * self.get(a, bc).unwrap();
                    if lhs != rhs {
                        return Err(Error::CocycleDomainMismatch(format!(
                            "twisted associativity fails at ({}, {}, {})",
                            s.label(a),
                            s.label(b),
                            s.label(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses lines `s t value`, with an optional leading `order N` line
    /// fixing the cyclotomic field of the values. Omitted pairs default to 1.
    /// Elements are given by label (name or 1-based index).
    pub fn parse(text: &str, s: &Semigroup) -> Result<Self> {
        let z = s.zero().ok_or(Error::NoZero)?;
        let n = s.len();
        let mut order = 1u32;
        let mut given: Vec<Option<CycNum>> = vec![None; n * n];
        let mut seen_entry = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| Error::Parse(format!("line {}: {msg}", i + 1));
            let mut words = line.split_whitespace();
            let first = words.next().unwrap();
            if first == "order" && !seen_entry {
                let v = words.next().ok_or_else(|| at("missing order".into()))?;
                order = v.parse().map_err(|_| at(format!("bad order `{v}`")))?;
                if words.next().is_some() {
                    return Err(at("trailing text after order".into()));
                }
                continue;
            }
            seen_entry = true;
            let second = words.next().ok_or_else(|| at("expected `s t value`".into()))?;
            let value: String = words.collect::<Vec<_>>().join(" ");
            if value.is_empty() {
                return Err(at("expected `s t value`".into()));
            }
            let a = s.index_of(first).ok_or_else(|| at(format!("unknown element `{first}`")))?;
            let b = s.index_of(second).ok_or_else(|| at(format!("unknown element `{second}`")))?;
            if s.mul(a, b) == z {
                return Err(at(format!("{first}*{second} is zero, so c({first}, {second}) must be absent")));
            }
            let v = CycNum::parse(order, &value).map_err(|e| at(e.to_string()))?;
            given[a * n + b] = Some(v);
        }
        Self::from_fn(s, |a, b| given[a * n + b].clone().unwrap_or_else(CycNum::one))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilReport {
    pub zero: usize,
    pub identity: usize,
    /// Least `j` with `S^j = {z}`.
    pub nilpotency_index: usize,
    /// `m ≠ z` with `mS = {z}`.
    pub left_annihilating: Vec<usize>,
    /// `m ≠ z` with `Sm = {z}`.
    pub right_annihilating: Vec<usize>,
    pub annihilating: Vec<usize>,
    pub unique_annihilator: Option<usize>,
}

/// Checks that `m` is a nilpotent semigroup with an identity adjoined and
/// locates its annihilating elements.
pub fn analyze_nilpotent(m: &Semigroup) -> Result<NilReport> {
    let fail = |r: String| Error::NotNilpotentAdjoined(r);
    let z = m.zero().ok_or_else(|| fail("no zero".into()))?;
    let e = m.identity().ok_or_else(|| fail("no identity".into()))?;
    if e == z {
        return Err(fail("identity equals zero".into()));
    }
    let s: Vec<usize> = (0..m.len()).filter(|&a| a != e).collect();
    for &a in &s {
        let mut p = a;
        let mut steps = 0;
        while p != z {
            p = m.mul(p, a);
            steps += 1;
            if steps > m.len() {
                return Err(fail(format!("{} is not nilpotent", m.label(a))));
            }
        }
    }
    let mut power: Vec<bool> = (0..m.len()).map(|a| a != e).collect();
    let mut index = 1;
    while power.iter().enumerate().any(|(a, &on)| on && a != z) {
        let mut next = vec![false; m.len()];
        for (a, _) in power.iter().enumerate().filter(|(_, &on)| on) {
            for &b in &s {
                next[m.mul(a, b)] = true;
            }
        }
        power = next;
        index += 1;
    }
    let others = || (0..m.len()).filter(|&a| a != z);
    let left: Vec<usize> = others().filter(|&a| s.iter().all(|&b| m.mul(a, b) == z)).collect();
    let right: Vec<usize> = others().filter(|&a| s.iter().all(|&b| m.mul(b, a) == z)).collect();
    let both: Vec<usize> = left.iter().copied().filter(|a| right.contains(a)).collect();
    let unique = (both.len() == 1).then(|| both[0]);
    Ok(NilReport {
        zero: z,
        identity: e,
        nilpotency_index: index,
        left_annihilating: left,
        right_annihilating: right,
        annihilating: both,
        unique_annihilator: unique,
    })
}

/// The matrix `A` over the basis `M ∖ {z}` (ambient order), with the basis.
pub fn annihilator_matrix(m: &Semigroup, c: Option<&Cocycle>) -> Result<(Vec<usize>, Vec<Vec<CycNum>>)> {
    let report = analyze_nilpotent(m)?;
    let zp = report.unique_annihilator.ok_or(Error::NoUniqueAnnihilator)?;
    if let Some(c) = c {
        c.check_domain(m)?;
    }
    let basis: Vec<usize> = (0..m.len()).filter(|&a| a != report.zero).collect();
    let a = basis
        .iter()
        .map(|&s| {
            basis
                .iter()
                .map(|&t| {
                    if m.mul(s, t) != zp {
                        CycNum::zero(1)
                    } else {
                        c.and_then(|c| c.get(s, t).cloned()).unwrap_or_else(CycNum::one)
                    }
                })
                .collect()
        })
        .collect();
    Ok((basis, a))
}

/// Factors the (twisted) contracted determinant of `m`.
pub fn factor_nil_adjoined(m: &Semigroup, c: Option<&Cocycle>, cfg: &VerifyConfig) -> Result<Factorization> {
    const PROVENANCE: &str = "nilpotent-annihilator";
    let report = analyze_nilpotent(m)?;
    let mode = match c {
        Some(c) => Mode::Twisted(c),
        None => Mode::Contracted,
    };
    let reference = cayley_matrix(m, mode)?;
    let (f, predicted) = match report.unique_annihilator {
        None => (Factorization::zero(PROVENANCE, format!("{} annihilating elements, not exactly one", report.annihilating.len())), None),
        Some(zp) => {
            let (_, a) = annihilator_matrix(m, c)?;
            let det = det_cyc(&a);
            if det.is_zero() {
                let mut f = Factorization::zero(PROVENANCE, "det A = 0");
                f.notes.push("det A = 0".into());
                (f, None)
            } else {
                let mut f = Factorization::factored(det.clone(), vec![Factor::linear(LinForm::var(zp as Var), (m.len() - 1) as u32)], PROVENANCE);
                f.notes.push(format!("annihilator {}, det A = {det}", m.label(zp)));
                (f, Some(det))
            }
        }
    };
    settle(&reference, f, predicted, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determinant::factorization::Status;
    use crate::semigroup::families;

    #[test]
    fn cyclic_nilpotent_report() {
        let m = families::cyclic_nilpotent(3).unwrap();
        let r = analyze_nilpotent(&m).unwrap();
        assert_eq!(r.unique_annihilator, m.index_of("a2"));
        assert_eq!(r.nilpotency_index, 3);
    }

    #[test]
    fn identity_annihilates_trivial_nilpotent() {
        let m = families::cyclic_nilpotent(1).unwrap();
        assert_eq!(m.len(), 2);
        let r = analyze_nilpotent(&m).unwrap();
        assert_eq!(r.unique_annihilator, m.identity());
        let f = factor_nil_adjoined(&m, None, &VerifyConfig::default()).unwrap();
        assert_eq!(f.expand().to_string(), "x0");
    }

    #[test]
    fn zero_matrix_gives_many_annihilators() {
        let m = families::three_nil(&[vec![0, 0], vec![0, 0]]).unwrap();
        let r = analyze_nilpotent(&m).unwrap();
        assert!(r.unique_annihilator.is_none());
        assert!(r.annihilating.len() >= 2);
        let f = factor_nil_adjoined(&m, None, &VerifyConfig::default()).unwrap();
        assert_eq!(f.status, Status::Zero);
    }

    #[test]
    fn cyclic_nilpotent_matrix_is_antidiagonal() {
        let m = families::cyclic_nilpotent(4).unwrap();
        let (_, a) = annihilator_matrix(&m, None).unwrap();
        for (i, row) in a.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(v.is_one(), i + j == 3, "{i} {j}");
            }
        }
    }

    #[test]
    fn three_nil_identity() {
        let m = families::three_nil(&[vec![1, 0], vec![0, 1]]).unwrap();
        let f = factor_nil_adjoined(&m, None, &VerifyConfig::default()).unwrap();
        assert_eq!(f.constant, CycNum::from_int(-1));
        assert_eq!(f.factors[0].multiplicity, 4);
    }

    #[test]
    fn cocycle_validation() {
        let m = families::cyclic_nilpotent(3).unwrap();
        let a = m.index_of("a").unwrap();
        let text = "order 4\na a z\n";
        let c = Cocycle::parse(text, &m).unwrap();
        assert_eq!(c.get(a, a), Some(&CycNum::root_of_unity(4, 1)));
        let f = factor_nil_adjoined(&m, Some(&c), &VerifyConfig::default()).unwrap();
        // A = antidiag(1, i, 1) up to order: entries c(I,a2)=1, c(a,a)=i, c(a2,I)=1
        assert_eq!(f.constant, CycNum::root_of_unity(4, 1).scale_int(-1));
        let bad = "a2 a 2";
        assert!(Cocycle::parse(bad, &m).is_err());
        assert!(Cocycle::parse("I a 2", &m).is_err());
    }
}
