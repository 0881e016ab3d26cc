//! Multiplicative monoids of finite rings.
//!
//! A finite Frobenius ring has a generating character `λ`, and evaluating the
//! Cayley matrix at `x_s = λ(s)` gives a nonsingular matrix, so the semigroup
//! determinant of its multiplicative monoid does not vanish. Also here: the
//! dimension identity `q^{n²} = Σ_r [n r]_q² |GL_r(F_q)|` behind the
//! decomposition of the algebra of `M_n(F_q)`.

use crate::algebra::cyclotomic::CycNum;
use crate::algebra::linalg::det_cyc;
use crate::error::{Error, Result};
use crate::semigroup::{families, Semigroup};

pub const MAX_FIELD_ORDER: usize = 256;
pub const MAX_MATRIX_MONOID: usize = 4096;

/// `F_q` with `q = p^m`. Element `k` is the polynomial whose base-`p` digits
/// (least significant first) are its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldSpec {
    pub p: usize,
    pub m: usize,
    pub q: usize,
    /// Monic modulus, coefficients from the constant term up.
    pub modulus: Vec<usize>,
    mul: Vec<usize>,
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn digits(mut k: usize, p: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = k % p;
            k /= p;
            d
        })
        .collect()
}

/// Remainder of `a` modulo the monic `b` over `F_p` (coefficients low first).
fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteFieldSpec {
    pub fn new(q: usize) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::OutOfRange(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::OutOfRange(format!("field order {q} exceeds {MAX_FIELD_ORDER}")));
        }
        let modulus = (0..p.pow(m as u32))
            .map(|code| {
                let mut f = digits(code, p, m);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        let mut spec = Self { p, m, q, modulus, mul: Vec::new() };
        spec.mul = (0..q * q).map(|k| spec.slow_mul(k / q, k % q)).collect();
        if q <= 16 {
            spec.check_axioms()?;
        }
        Ok(spec)
    }

    fn slow_mul(&self, a: usize, b: usize) -> usize {
        let (da, db) = (digits(a, self.p, self.m), digits(b, self.p, self.m));
        let mut prod = vec![0; 2 * self.m];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let r = poly_rem(&prod, &self.modulus, self.p);
        r.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (digits(a, self.p, self.m), digits(b, self.p, self.m));
        da.iter().zip(&db).rev().fold(0, |acc, (x, y)| acc * self.p + (x + y) % self.p)
    }

    pub fn neg(&self, a: usize) -> usize {
        digits(a, self.p, self.m).iter().rev().fold(0, |acc, x| acc * self.p + (self.p - x) % self.p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// `Tr(a) = Σ_{i<m} a^{p^i}`, an element of the prime field (`0..p`).
    pub fn trace(&self, a: usize) -> usize {
        let mut t = 0;
        let mut x = a;
        for _ in 0..self.m {
            t = self.add(t, x);
            x = self.pow(x, self.p);
        }
        debug_assert!(t < self.p);
        t
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.q;
        let bad = |what: &str| Err(Error::VerificationFailed(format!("F_{q}: {what}")));
        for a in 0..q {
            if a != 0 && !(1..q).any(|b| self.mul(a, b) == 1) {
                return bad("missing inverse");
            }
            for b in 0..q {
                if self.mul(a, b) != self.mul(b, a) {
                    return bad("multiplication is not commutative");
                }
                for c in 0..q {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad("multiplication is not associative");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return bad("distributivity fails");
                    }
                }
            }
        }
        Ok(())
    }
}

/// An additive character `λ(s) = ζ_N^{exps[s]}` of a finite ring, listed by
/// monoid element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingCharacter {
    pub order: u32,
    pub exps: Vec<u32>,
}

impl GeneratingCharacter {
    pub fn value(&self, s: usize) -> CycNum {
        CycNum::root_of_unity(self.order, self.exps[s] as i64)
    }

    /// Checks `λ(a + b) = λ(a) λ(b)` for all pairs, with `add` the ring addition.
    fn check_additive(&self, add: impl Fn(usize, usize) -> usize) -> Result<()> {
        let n = self.exps.len();
        for a in 0..n {
            for b in 0..n {
                if self.exps[add(a, b)] != (self.exps[a] + self.exps[b]) % self.order {
                    return Err(Error::VerificationFailed(format!("λ is not additive at ({}, {})", a + 1, b + 1)));
                }
            }
        }
        Ok(())
    }
}

/// `(Z/n, ·)` with `λ(k) = ζ_n^k`.
pub fn zmod_monoid(n: usize) -> Result<(Semigroup, GeneratingCharacter)> {
    if !(2..=512).contains(&n) {
        return Err(Error::OutOfRange(format!("zmod needs 2 <= n <= 512, got {n}")));
    }
    let s = families::zmod_mul(n)?;
    let lambda = GeneratingCharacter { order: n as u32, exps: (0..n as u32).collect() };
    lambda.check_additive(|a, b| (a + b) % n)?;
    Ok((s, lambda))
}

/// `(M_n(F_q), ·)` with `λ(A) = ζ_p^{Tr(tr A)}`. Matrix `A` has index
/// `Σ_k A_k q^k` over its row-major entries.
pub fn matrix_monoid(n: usize, field: &FiniteFieldSpec) -> Result<(Semigroup, GeneratingCharacter)> {
    let q = field.q;
    let cells = n * n;
    let size = (q as u128).checked_pow(cells as u32).filter(|&s| s <= MAX_MATRIX_MONOID as u128);
    let size = size.ok_or(Error::SizeOverflow { size: usize::MAX.min(q.saturating_pow(cells as u32)), cap: MAX_MATRIX_MONOID })? as usize;
    if n == 0 {
        return Err(Error::OutOfRange("matrix size must be positive".into()));
    }
    let decode = |k: usize| digits(k, q, cells);
    let encode = |m: &[usize]| m.iter().rev().fold(0, |acc, &x| acc * q + x);
    let mats: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let s = Semigroup::from_fn(size, |a, b| {
        let (x, y) = (&mats[a], &mats[b]);
        let mut out = vec![0; cells];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = field.add(acc, field.mul(x[i * n + k], y[k * n + j]));
                }
                out[i * n + j] = acc;
            }
        }
        encode(&out)
    })?;
    let exps = mats
        .iter()
        .map(|m| field.trace((0..n).fold(0, |acc, i| field.add(acc, m[i * n + i]))) as u32)
        .collect();
    let lambda = GeneratingCharacter { order: field.p as u32, exps };
    lambda.check_additive(|a, b| encode(&mats[a].iter().zip(&mats[b]).map(|(&x, &y)| field.add(x, y)).collect::<Vec<_>>()))?;
    Ok((s, lambda))
}

#[derive(Clone, Debug, PartialEq)]
pub enum FormVerdict {
    /// `det(λ(st))`, nonzero.
    Nonzero(CycNum),
    /// This specialization vanishes; nothing is concluded.
    Zero,
}

/// Evaluates the Cayley matrix at `x_s = λ(s)` exactly.
pub fn frobenius_form_check(s: &Semigroup, lambda: &GeneratingCharacter) -> Result<FormVerdict> {
    if s.len() > MAX_MATRIX_MONOID {
        return Err(Error::SizeOverflow { size: s.len(), cap: MAX_MATRIX_MONOID });
    }
    if lambda.exps.len() != s.len() {
        return Err(Error::TableShape { expected: s.len(), got: lambda.exps.len() });
    }
    let values: Vec<CycNum> = (0..s.len()).map(|x| lambda.value(x)).collect();
    let m: Vec<Vec<CycNum>> = s.rows().iter().map(|row| row.iter().map(|&v| values[v].clone()).collect()).collect();
    let d = det_cyc(&m);
    Ok(if d.is_zero() { FormVerdict::Zero } else { FormVerdict::Nonzero(d) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KovacsTerm {
    pub r: usize,
    /// `[n r]_q` by the product formula.
    pub binomial: u128,
    /// `[n r]_q` by counting subspaces, when `q^n ≤ 256`.
    pub counted: Option<u128>,
    pub gl_order: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KovacsReport {
    pub n: usize,
    pub q: usize,
    /// `q^{n²}`.
    pub lhs: u128,
    pub terms: Vec<KovacsTerm>,
    /// `Σ_r [n r]_q² |GL_r(F_q)|`.
    pub rhs: u128,
    pub holds: bool,
}

pub fn q_binomial(n: usize, r: usize, q: u128) -> u128 {
    if r > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

pub fn gl_order(r: usize, q: u128) -> u128 {
    (0..r).map(|i| q.pow(r as u32) - q.pow(i as u32)).product()
}

/// Counts subspaces of `F_q^n` by dimension, building each as a span.
pub fn count_subspaces(n: usize, field: &FiniteFieldSpec) -> Vec<u128> {
    let q = field.q;
    let total = q.pow(n as u32);
    let words = total.div_ceil(64);
    let vec_add = |a: usize, b: usize| {
        let (x, y) = (digits(a, q, n), digits(b, q, n));
        x.iter().zip(&y).rev().fold(0, |acc, (&u, &v)| acc * q + field.add(u, v))
    };
    let vec_scale = |c: usize, a: usize| digits(a, q, n).iter().rev().fold(0, |acc, &u| acc * q + field.mul(c, u));
    let bits = |elems: &[usize]| {
        let mut b = vec![0u64; words];
        for &e in elems {
            b[e / 64] |= 1 << (e % 64);
        }
        b
    };
    let mut seen: std::collections::HashSet<Vec<u64>> = std::collections::HashSet::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![0]];
    seen.insert(bits(&[0]));
    let mut counts = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::new();
        for space in &layer {
            for v in 0..total {
                if space.contains(&v) {
                    continue;
                }
                let mut span: Vec<usize> = space.iter().flat_map(|&a| (0..q).map(move |c| (a, c))).map(|(a, c)| vec_add(a, vec_scale(c, v))).collect();
                span.sort_unstable();
                span.dedup();
                if seen.insert(bits(&span)) {
                    next.push(span);
                }
            }
        }
        counts.push(next.len() as u128);
        layer = next;
    }
    counts
}

pub fn kovacs_check(n: usize, q: usize) -> Result<KovacsReport> {
    if !(1..=4).contains(&n) {
        return Err(Error::OutOfRange(format!("kovacs needs 1 <= n <= 4, got {n}")));
    }
    if !(2..=16).contains(&q) {
        return Err(Error::OutOfRange(format!("kovacs needs q <= 16, got {q}")));
    }
    let field = FiniteFieldSpec::new(q)?;
    let counted = (q.pow(n as u32) <= 256).then(|| count_subspaces(n, &field));
    let qq = q as u128;
    let terms: Vec<KovacsTerm> = (0..=n)
        .map(|r| KovacsTerm { r, binomial: q_binomial(n, r, qq), counted: counted.as_ref().map(|c| c[r]), gl_order: gl_order(r, qq) })
        .collect();
    let lhs = qq.pow((n * n) as u32);
    let rhs = terms.iter().map(|t| t.binomial * t.binomial * t.gl_order).sum();
    let holds = lhs == rhs && terms.iter().all(|t| t.counted.is_none_or(|c| c == t.binomial));
    Ok(KovacsReport { n, q, lhs, terms, rhs, holds })
}
