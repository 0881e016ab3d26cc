//! Sparse multivariate polynomials with cyclotomic coefficients.
//!
//! Terms are kept sorted in decreasing graded-lexicographic order with
//! `x0 > x1 > ...`, so two polynomials are equal exactly when their term
//! lists are.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::cyclotomic::CycNum;
use crate::error::{Error, Result};

pub type Var = u32;

/// A monomial as a sparse exponent vector sorted by variable index.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Self(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        let mut s = SmallVec::new();
        s.push((v, 1));
        Self(s)
    }

    /// Builds from `(variable, exponent)` pairs in any order; zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn max_var(&self) -> Option<Var> {
        self.0.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut d = 0;
            if j < other.0.len() && other.0[j].0 == v {
                d = other.0[j].1;
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if d > e {
                return None;
            }
            if e > d {
                out.push((v, e - d));
            }
        }
        (j == other.0.len()).then_some(Self(out))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a.0 != b.0 {
                // the smaller variable index is the larger variable
                return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; terms sorted by decreasing monomial, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, CycNum)>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(c: CycNum) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn one() -> Self {
        Self::constant(CycNum::one())
    }

    pub fn var(v: Var) -> Self {
        Self { terms: vec![(Monomial::var(v), CycNum::one())] }
    }

    pub fn term(m: Monomial, c: CycNum) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, CycNum)>) -> Self {
        let mut v: Vec<(Monomial, CycNum)> = terms.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, CycNum)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|l| l.1.is_zero()) {
            out.pop();
        }
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, CycNum)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, CycNum)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, CycNum)> {
        self.terms.first()
    }

    /// Constant term if the polynomial has degree 0 (or is zero).
    pub fn as_constant(&self) -> Option<CycNum> {
        match self.terms.as_slice() {
            [] => Some(CycNum::zero(1)),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Least common multiple of the coefficient orders.
    pub fn order(&self) -> u32 {
        use num_integer::Integer;
        self.terms.iter().fold(1u32, |acc, (_, c)| acc.lcm(&c.order()))
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.pairs().iter().map(|&(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    /// Multiplication by a single term keeps the order, so no re-sort.
    pub fn mul_term(&self, m: &Monomial, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of many polynomials in one pass.
    pub fn sum(polys: impl IntoIterator<Item = Poly>) -> Self {
        Self::from_terms(polys.into_iter().flat_map(|p| p.terms))
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (lm, lc) = d.leading().ok_or(Error::DivisionByZero)?;
        if d.terms.len() == 1 {
            let inv = lc.inv().ok_or(Error::DivisionByZero)?;
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((m.div(lm).ok_or(Error::InexactDivision)?, c * &inv));
            }
            return Ok(Self { terms: out });
        }
        let inv = lc.inv().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = m.div(lm).ok_or(Error::InexactDivision)?;
            let qc = c * &inv;
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.push((qm, qc));
        }
        Ok(Self::from_terms(quot))
    }

    /// Replaces every variable by its linear form.
    pub fn substitute_linear(&self, sub: &HashMap<Var, LinForm>) -> Result<Poly> {
        let mut powers: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut acc = Vec::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let key = (v, e);
                if !powers.contains_key(&key) {
                    let lf = sub.get(&v).ok_or(Error::MissingVariable(v as usize))?;
                    powers.insert(key, lf.to_poly().pow(e));
                }
                t = &t * &powers[&key];
            }
            acc.push(t);
        }
        Ok(Poly::sum(acc))
    }

    /// Substitutes arbitrary polynomials for variables; missing variables are kept.
    pub fn substitute(&self, sub: &HashMap<Var, Poly>) -> Poly {
        let mut acc = Vec::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let f = match sub.get(&v) {
                    Some(p) => p.pow(e),
                    None => Poly::term(Monomial::var(v).pow(e), CycNum::one()),
                };
                t = &t * &f;
            }
            acc.push(t);
        }
        Poly::sum(acc)
    }

    /// Evaluates at a point given for every variable index.
    pub fn eval(&self, point: &[CycNum]) -> Result<CycNum> {
        let mut acc = CycNum::zero(1);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = point.get(v as usize).ok_or(Error::MissingVariable(v as usize))?;
                t = &t * &x.pow(e);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Evaluates at an integer point, caching powers.
    pub fn eval_int(&self, point: &[BigInt]) -> Result<CycNum> {
        let mut cache: HashMap<(Var, u32), BigInt> = HashMap::new();
        let mut acc = CycNum::zero(1);
        for (m, c) in &self.terms {
            let mut t = BigInt::one();
            for &(v, e) in m.pairs() {
                let x = point.get(v as usize).ok_or(Error::MissingVariable(v as usize))?;
                let p = cache.entry((v, e)).or_insert_with(|| num_traits::pow(x.clone(), e as usize));
                t *= &*p;
            }
            acc = &acc + &c.mul_bigint(&t);
        }
        Ok(acc)
    }

    /// Renders with a custom variable printer.
    pub fn render(&self, name: &dyn Fn(Var) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let mono: Vec<String> = m
                .pairs()
                .iter()
                .map(|&(v, e)| if e == 1 { name(v) } else { format!("{}^{e}", name(v)) })
                .collect();
            let mono = mono.join("*");
            if let Some(r) = c.to_rational() {
                let neg = r < super::Rat::zero();
                let abs = if neg { -r } else { r };
                out.push_str(if neg { "-" } else if out.is_empty() { "" } else { "+" });
                if mono.is_empty() {
                    out.push_str(&super::cyclotomic::fmt_rat(&abs));
                } else if abs.is_one() {
                    out.push_str(&mono);
                } else {
                    out.push_str(&super::cyclotomic::fmt_rat(&abs));
                    out.push('*');
                    out.push_str(&mono);
                }
            } else {
                if !out.is_empty() {
                    out.push('+');
                }
                out.push('(');
                out.push_str(&c.to_string());
                out.push(')');
                if !mono.is_empty() {
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    /// Parses the printed form. Variables are resolved by `resolve`; `z` in
    /// parenthesized coefficients is a primitive `order`-th root of unity.
    pub fn parse(s: &str, order: u32, resolve: &dyn Fn(&str) -> Option<Var>) -> Result<Poly> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        for (neg, body) in split_top_level_terms(&text) {
            let mut coef = CycNum::from_int(if neg { -1 } else { 1 });
            let mut mono = Monomial::one();
            for factor in split_top_level(body, '*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{s}`")));
                }
                if let Some(inner) = factor.strip_prefix('(').and_then(|f| f.strip_suffix(')')) {
                    coef = &coef * &CycNum::parse(order, inner)?;
                } else if factor.as_bytes()[0].is_ascii_digit() {
                    coef = &coef * &CycNum::from_rat(&super::cyclotomic::parse_rat(factor)?);
                } else {
                    let (base, exp) = match factor.rfind('^') {
                        Some(i) if !factor[i..].contains('}') => (
                            &factor[..i],
                            factor[i + 1..].parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                        ),
                        _ => (factor, 1),
                    };
                    let v = resolve(base).ok_or_else(|| Error::Parse(format!("unknown variable `{base}`")))?;
                    mono = mono.mul(&Monomial::var(v).pow(exp));
                }
            }
            terms.push((mono, coef));
        }
        Ok(Poly::from_terms(terms))
    }
}

fn split_top_level_terms(text: &str) -> Vec<(bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let bytes = text.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'{' => depth += 1,
            b')' | b'}' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                if i > start {
                    out.push((neg, &text[start..i]));
                }
                neg = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((neg, &text[start..]));
    out
}

fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// Default variable spelling `x<index>`, also accepted by [`Poly::parse`] via [`parse_index_var`].
pub fn index_var(v: Var) -> String {
    format!("x{v}")
}

pub fn parse_index_var(s: &str) -> Option<Var> {
    s.strip_prefix('x').and_then(|d| d.parse().ok())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&index_var))
    }
}

fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    let (x, y) = (&a.terms, &b.terms);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            Ordering::Greater => {
                out.push(x[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((y[j].0.clone(), if negate_b { -&y[j].1 } else { y[j].1.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                if !c.is_zero() {
                    out.push((x[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(x[i..].iter().cloned());
    out.extend(y[j..].iter().map(|(m, c)| (m.clone(), if negate_b { -c } else { c.clone() })));
    Poly { terms: out }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        merge(self, rhs, false)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        merge(self, rhs, true)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, CycNum> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                let p = c * d;
                acc.entry(m.mul(n)).and_modify(|e| *e = &*e + &p).or_insert(p);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// A linear form without constant term: variable → coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinForm {
    coeffs: BTreeMap<Var, CycNum>,
}

impl LinForm {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        let mut f = Self::new();
        f.add_term(v, CycNum::one());
        f
    }

    pub fn add_term(&mut self, v: Var, c: CycNum) {
        let e = self.coeffs.entry(v).or_insert_with(|| CycNum::zero(1));
        *e = &*e + &c;
        if e.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    pub fn add_scaled(&mut self, other: &LinForm, c: &CycNum) {
        for (v, d) in &other.coeffs {
            self.add_term(*v, d * c);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<Var, CycNum> {
        &self.coeffs
    }

    pub fn get(&self, v: Var) -> Option<&CycNum> {
        self.coeffs.get(&v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(self.coeffs.iter().map(|(&v, c)| (Monomial::var(v), c.clone())))
    }

    /// Reads a homogeneous degree-1 polynomial back as a linear form.
    pub fn from_poly(p: &Poly) -> Option<Self> {
        let mut f = Self::new();
        for (m, c) in p.terms() {
            match m.pairs() {
                [(v, 1)] => f.add_term(*v, c.clone()),
                _ => return None,
            }
        }
        (!f.is_zero()).then_some(f)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let mut f = Self::new();
        f.add_scaled(self, c);
        f
    }

    /// Splits into `(lead, monic)` with the least-index variable coefficient of
    /// `monic` equal to 1 and `self = lead * monic`.
    pub fn normalize(&self) -> Option<(CycNum, LinForm)> {
        let (_, lead) = self.coeffs.iter().next()?;
        let lead = lead.clone();
        let inv = lead.inv()?;
        Some((lead, self.scale(&inv)))
    }

    pub fn eval(&self, point: &[CycNum]) -> Result<CycNum> {
        let mut acc = CycNum::zero(1);
        for (&v, c) in &self.coeffs {
            let x = point.get(v as usize).ok_or(Error::MissingVariable(v as usize))?;
            acc = &acc + &(c * x);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s, 1, &parse_index_var).unwrap()
    }

    #[test]
    fn graded_lex_order() {
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        assert!(x0 > x1);
        assert!(x1.mul(&x1) > x0);
        assert!(x0.mul(&x1) > x1.mul(&x1));
        assert!(x0.mul(&x0) > x0.mul(&x1));
        assert!(Monomial::var(2) < x1);
    }

    #[test]
    fn arithmetic_and_printing() {
        let a = p("x0+x1");
        let b = p("x0-x1");
        assert_eq!((&a * &b).to_string(), "x0^2-x1^2");
        assert!((&a - &a).is_zero());
        assert_eq!(p("2*x0*x1-1/2*x2^3+4").to_string(), "-1/2*x2^3+2*x0*x1+4");
        assert_eq!(a.pow(3).num_terms(), 4);
    }

    #[test]
    fn parse_round_trip_with_cyclotomic_coefficients() {
        let s = "x0+(z)*x1+(-z-1)*x2";
        let q = Poly::parse(s, 3, &parse_index_var).unwrap();
        assert_eq!(q.to_string(), s);
        assert_eq!(Poly::parse(&q.to_string(), 3, &parse_index_var).unwrap(), q);
    }

    #[test]
    fn substitute_linear_examples() {
        let mut sub = HashMap::new();
        sub.insert(0, LinForm::from_poly(&p("x0-x1")).unwrap());
        assert_eq!(p("x0").substitute_linear(&sub).unwrap(), p("x0-x1"));
        let mut sub = HashMap::new();
        sub.insert(0, LinForm::from_poly(&p("x0+x1")).unwrap());
        sub.insert(1, LinForm::from_poly(&p("x0-x1")).unwrap());
        assert_eq!(p("x0*x1").substitute_linear(&sub).unwrap(), p("x0^2-x1^2"));
        assert_eq!(p("x2").substitute_linear(&sub), Err(Error::MissingVariable(2)));
    }

    #[test]
    fn exact_division() {
        let a = p("x0^2-x1^2");
        assert_eq!(a.exact_div(&p("x0-x1")).unwrap(), p("x0+x1"));
        assert_eq!(a.exact_div(&p("x0+x2")), Err(Error::InexactDivision));
        assert_eq!(p("4*x0^3").exact_div(&p("2*x0")).unwrap(), p("2*x0^2"));
    }

    #[test]
    fn linform_normalization() {
        let f = LinForm::from_poly(&p("3*x1-6*x2")).unwrap();
        let (lead, monic) = f.normalize().unwrap();
        assert_eq!(lead, CycNum::from_int(3));
        assert_eq!(monic.to_poly(), p("x1-2*x2"));
    }

    #[test]
    fn braced_variable_names() {
        let names = ["z'", "az'", "[1-]"];
        let resolve = |s: &str| {
            let inner = s.strip_prefix("x_{")?.strip_suffix('}')?;
            names.iter().position(|n| *n == inner).map(|i| i as Var)
        };
        let q = Poly::parse("x_{z'}^4-x_{[1-]}*x_{az'}", 1, &resolve).unwrap();
        let shown = q.render(&|v| format!("x_{{{}}}", names[v as usize]));
        assert_eq!(shown, "x_{z'}^4-x_{az'}*x_{[1-]}");
    }
}
