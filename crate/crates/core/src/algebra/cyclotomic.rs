//! Exact arithmetic in cyclotomic fields.
//!
//! A [`CycNum`] of order `N` is a polynomial in a primitive `N`-th root of
//! unity `z`, reduced modulo the cyclotomic polynomial `Phi_N`. Coordinates
//! are stored as integer numerators over one positive common denominator,
//! kept in lowest terms, so equal numbers of equal order have equal
//! representations.
//!
//! Numbers of different orders can be mixed freely: binary operations embed
//! both operands into the order `lcm(N, M)` first.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Largest order accepted by [`cyclotomic_polynomial`].
pub const MAX_ORDER: u32 = 10_000;

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term
/// first.
///
/// Computed as `x^n - 1` divided exactly by `Phi_d` for every proper divisor
/// `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Result<Vec<i64>> {
    Ok(cyclotomic_arc(n)?.as_ref().clone())
}

fn cyclotomic_arc(n: u32) -> Result<Arc<Vec<i64>>> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OutOfRange(format!("cyclotomic order {n} not in 1..={MAX_ORDER}")));
    }
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n as u64) {
        if d == n as u64 {
            continue;
        }
        let div = cyclotomic_arc(d as u32)?;
        num = exact_monic_division(&num, &div)?;
    }
    let coeffs = num
        .into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow("cyclotomic polynomial")))
        .collect::<Result<Vec<_>>>()?;
    let arc = Arc::new(coeffs);
    phi_cache().lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

fn exact_monic_division(num: &[i128], den: &[i64]) -> Result<Vec<i128>> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let qlen = rem.len() - dd;
    let mut quot = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                let t = c.checked_mul(d as i128).ok_or(Error::Overflow("cyclotomic division"))?;
                rem[k + i] = rem[k + i].checked_sub(t).ok_or(Error::Overflow("cyclotomic division"))?;
            }
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err(Error::InexactDivision);
    }
    Ok(quot)
}

fn phi_of(order: u32) -> Arc<Vec<i64>> {
    cyclotomic_arc(order).expect("cyclotomic order out of range")
}

/// Exact element of the cyclotomic field `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct CycNum {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn zero(order: u32) -> Self {
        let deg = euler_phi(order as u64) as usize;
        Self { order, num: vec![BigInt::zero(); deg], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self { order: 1, num: vec![BigInt::from(v)], den: BigInt::one() }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self { order: 1, num: vec![v], den: BigInt::one() }
    }

    pub fn from_rat(r: &Rat) -> Self {
        Self { order: 1, num: vec![r.numer().clone()], den: r.denom().clone() }
    }

    /// `zeta_order^k`; negative `k` is allowed.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![BigInt::zero(); e.max(1) + 1];
        poly[e] = BigInt::one();
        Self::from_poly(order, poly, BigInt::one())
    }

    /// Builds `sum_i coeffs[i] * z^i`, reducing modulo `Phi_order`.
    pub fn from_poly(order: u32, mut coeffs: Vec<BigInt>, den: BigInt) -> Self {
        let phi = phi_of(order);
        let deg = phi.len() - 1;
        reduce_mod_phi(&mut coeffs, &phi);
        coeffs.resize(deg, BigInt::zero());
        let mut out = Self { order, num: coeffs, den };
        out.normalize();
        out
    }

    /// Builds from rational coordinates in the basis `1, z, ..., z^(phi-1)`.
    pub fn from_coords(order: u32, coords: &[Rat]) -> Self {
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_poly(order, num, den)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Rational coordinates in the basis `1, z, ..., z^(phi(N)-1)`.
    pub fn coords(&self) -> Vec<Rat> {
        self.num.iter().map(|n| Rat::new(n.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| Rat::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// Re-expresses this number in `Q(zeta_new)`; `new` must be a multiple of the order.
    pub fn embed(&self, new: u32) -> Self {
        assert!(new % self.order == 0, "cannot embed order {} into {}", self.order, new);
        if new == self.order {
            return self.clone();
        }
        if self.is_rational() {
            let mut num = vec![BigInt::zero(); euler_phi(new as u64) as usize];
            num[0] = self.num[0].clone();
            return Self { order: new, num, den: self.den.clone() };
        }
        let k = (new / self.order) as usize;
        let mut poly = vec![BigInt::zero(); (self.num.len() - 1) * k + 1];
        for (i, c) in self.num.iter().enumerate() {
            poly[i * k] = c.clone();
        }
        Self::from_poly(new, poly, self.den.clone())
    }

    /// Complex conjugation, `z^k -> z^(N-k)`.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.order as usize;
        let mut poly = vec![BigInt::zero(); n];
        for (i, c) in self.num.iter().enumerate() {
            poly[(n - i) % n] += c;
        }
        Self::from_poly(self.order, poly, self.den.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            let (mut n, mut d) = (self.den.clone(), self.num[0].clone());
            if d.is_negative() {
                n = -n;
                d = -d;
            }
            return Some(Self { order: 1, num: vec![n], den: d }.lift_to(self.order));
        }
        // Solve (multiplication by self) * v = e_0 over Q.
        let deg = self.num.len();
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(deg);
        for j in 0..deg {
            let zj = Self::root_of_unity(self.order, j as i64);
            cols.push((self * &zj).coords());
        }
        let mut m: Vec<Vec<Rat>> = (0..deg)
            .map(|i| {
                let mut row: Vec<Rat> = (0..deg).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rat::one() } else { Rat::zero() });
                row
            })
            .collect();
        for c in 0..deg {
            let p = (c..deg).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let pivot = m[c][c].clone();
            for v in m[c].iter_mut() {
                *v = &*v / &pivot;
            }
            for r in 0..deg {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=deg {
                        let t = &f * &m[c][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        let sol: Vec<Rat> = m.into_iter().map(|row| row[deg].clone()).collect();
        Some(Self::from_coords(self.order, &sol))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        other.inv().map(|i| self * &i).ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one().lift_to(self.order);
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

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul_bigint(&BigInt::from(k))
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        let mut out = Self { order: self.order, num: self.num.iter().map(|c| c * k).collect(), den: self.den.clone() };
        out.normalize();
        out
    }

    /// If this is a root of unity `z^k` (or its negative, which is also a root of
    /// unity), returns the exponent `k` modulo `N` (or modulo `2N`).
    pub fn root_exponent(&self) -> Option<i64> {
        let n = self.order as i64;
        let m = if n % 2 == 0 { n } else { 2 * n };
        let big = if m == n { self.clone() } else { self.embed(m as u32) };
        (0..m).find(|&k| big == Self::root_of_unity(m as u32, k))
    }

    /// Moves the number into order `lcm(self.order, order)`.
    pub fn lift_to(self, order: u32) -> Self {
        let target = (self.order as u64).lcm(&(order as u64)) as u32;
        if target == self.order {
            self
        } else {
            self.embed(target)
        }
    }

    /// Parses the canonical string form, e.g. `1/2*z^2-3`, in the given order.
    pub fn parse(order: u32, s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty cyclotomic number".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&text[start..i]);
                start = i;
            }
        }
        pieces.push(&text[start..]);
        let mut acc = Self::zero(order);
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (coef, power) = if let Some(idx) = body.find('z') {
                let coef_part = body[..idx].trim_end_matches('*');
                let coef = if coef_part.is_empty() { Rat::one() } else { parse_rat(coef_part)? };
                let rest = &body[idx + 1..];
                let power = if rest.is_empty() {
                    1
                } else if let Some(p) = rest.strip_prefix('^') {
                    p.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?
                } else {
                    return Err(Error::Parse(format!("unexpected `{rest}` in `{s}`")));
                };
                (coef, power)
            } else {
                (parse_rat(body)?, 0)
            };
            let coef = if neg { -coef } else { coef };
            let term = &Self::from_rat(&coef) * &Self::root_of_unity(order, power);
            acc = &acc + &term;
        }
        Ok(acc.lift_to(order))
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    fn aligned<'a>(a: &'a Self, b: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.order == b.order {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else if b.order == 1 || a.order % b.order == 0 {
            (Cow::Borrowed(a), Cow::Owned(b.embed(a.order)))
        } else if a.order == 1 || b.order % a.order == 0 {
            (Cow::Owned(a.embed(b.order)), Cow::Borrowed(b))
        } else {
            let l = (a.order as u64).lcm(&(b.order as u64)) as u32;
            (Cow::Owned(a.embed(l)), Cow::Owned(b.embed(l)))
        }
    }

    fn add_impl(&self, other: &Self, sign: i32) -> Self {
        let (a, b) = Self::aligned(self, other);
        let (a, b) = (a.as_ref(), b.as_ref());
        let mut num = Vec::with_capacity(a.num.len());
        let den;
        if a.den == b.den {
            for (x, y) in a.num.iter().zip(&b.num) {
                num.push(if sign > 0 { x + y } else { x - y });
            }
            den = a.den.clone();
        } else {
            for (x, y) in a.num.iter().zip(&b.num) {
                let l = x * &b.den;
                let r = y * &a.den;
                num.push(if sign > 0 { l + r } else { l - r });
            }
            den = &a.den * &b.den;
        }
        let mut out = Self { order: a.order, num, den };
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        let (a, b) = (a.as_ref(), b.as_ref());
        let den = &a.den * &b.den;
        if a.is_rational() || b.is_rational() {
            let (s, v) = if a.is_rational() { (&a.num[0], b) } else { (&b.num[0], a) };
            let num = v.num.iter().map(|c| c * s).collect();
            let mut out = Self { order: a.order, num, den };
            out.normalize();
            return out;
        }
        let deg = a.num.len();
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::from_poly(a.order, prod, den)
    }
}

pub(crate) fn reduce_mod_phi(coeffs: &mut Vec<BigInt>, phi: &[i64]) {
    let deg = phi.len() - 1;
    if coeffs.len() <= deg {
        return;
    }
    for k in (deg..coeffs.len()).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut coeffs[k]);
        for (i, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                coeffs[k - deg + i] -= &c * p;
            }
        }
    }
    coeffs.truncate(deg);
}

pub(crate) fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub(crate) fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Self::aligned(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycNum {}

impl fmt::Display for CycNum {
    /// Highest power first; unit coefficients are dropped on powers of `z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.coords().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                out.push_str(&fmt_rat(&abs));
            } else if abs.is_one() {
                out.push_str(&zpart);
            } else {
                out.push_str(&fmt_rat(&abs));
                out.push('*');
                out.push_str(&zpart);
            }
        }
        f.write_str(&out)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { order: self.order, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                let f: fn(&CycNum, &CycNum) -> CycNum = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b, 1));
binop!(Sub, sub, |a, b| a.add_impl(b, -1));
binop!(Mul, mul, |a, b| a.mul_impl(b));

impl From<i64> for CycNum {
    fn from(v: i64) -> Self {
        CycNum::from_int(v)
    }
}

/// Approximate complex value, for diagnostics only.
pub fn approx_complex(c: &CycNum) -> (f64, f64) {
    let mut re = 0.0;
    let mut im = 0.0;
    let n = c.order() as f64;
    for (k, v) in c.coords().iter().enumerate() {
        let x = v.numer().to_f64().unwrap_or(f64::NAN) / v.denom().to_f64().unwrap_or(f64::NAN);
        let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
        re += x * ang.cos();
        im += x * ang.sin();
    }
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: multiply out prod_{d | n} Phi_d with plain vectors.
    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6).unwrap(), vec![1, -1, 1]);
        assert!(cyclotomic_polynomial(0).is_err());
        assert!(cyclotomic_polynomial(10_001).is_err());
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=100u32 {
            let mut prod = vec![1i64];
            for d in divisors(n as u64) {
                prod = poly_mul(&prod, &cyclotomic_polynomial(d as u32).unwrap());
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_polynomial(105).unwrap();
        assert_eq!(p.len() - 1, 48);
        assert!(p.contains(&-2));
    }

    #[test]
    fn roots_of_unity_have_the_right_order() {
        for n in 1..=24u32 {
            for k in 0..n as i64 {
                let z = CycNum::root_of_unity(n, k);
                assert!(z.pow(n).is_one());
            }
        }
        let z12 = CycNum::root_of_unity(12, 1);
        assert!(!z12.pow(6).is_one());
        assert_eq!(z12.pow(6), CycNum::from_int(-1));
    }

    #[test]
    fn conjugation_is_an_involution_fixing_rationals() {
        let z = CycNum::root_of_unity(7, 3);
        assert_eq!(z.conj(), CycNum::root_of_unity(7, 4));
        assert_eq!(z.conj().conj(), z);
        let r = CycNum::from_rat(&Rat::new(3.into(), 5.into()));
        assert_eq!(r.conj(), r);
        assert!((&z * &z.conj()).is_one());
    }

    #[test]
    fn string_form_round_trips() {
        let x = CycNum::parse(5, "1/2*z^2-3").unwrap();
        assert_eq!(x.to_string(), "1/2*z^2-3");
        let y = CycNum::parse(3, "-z+2/3").unwrap();
        assert_eq!(y.to_string(), "-z+2/3");
        // z^2 = -z - 1 in order 3
        assert_eq!(CycNum::parse(3, "z^2").unwrap().to_string(), "-z-1");
        assert_eq!(CycNum::zero(4).to_string(), "0");
        assert!(CycNum::parse(3, "z^").is_err());
    }

    #[test]
    fn inverse_in_a_proper_extension() {
        let a = CycNum::parse(5, "z^3+2*z-1").unwrap();
        let ai = a.inv().unwrap();
        assert!((&a * &ai).is_one());
        assert!(CycNum::zero(5).inv().is_none());
        assert_eq!(CycNum::from_int(-4).inv().unwrap().to_string(), "-1/4");
    }

    #[test]
    fn mixed_orders_are_lifted() {
        let i = CycNum::root_of_unity(4, 1);
        let w = CycNum::root_of_unity(3, 1);
        let p = &i * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(p, CycNum::root_of_unity(12, 3 + 4));
        assert_eq!(CycNum::root_of_unity(6, 2), CycNum::root_of_unity(3, 1));
    }

    #[test]
    fn root_exponent_recovers_powers() {
        assert_eq!(CycNum::root_of_unity(6, 5).root_exponent(), Some(5));
        assert_eq!(CycNum::from_int(-1).root_exponent(), Some(1));
        assert_eq!(CycNum::from_int(2).root_exponent(), None);
    }
}
