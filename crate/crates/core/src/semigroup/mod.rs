//! Finite semigroups given by multiplication tables.

pub mod enumerate;
pub mod families;
pub mod sgp;

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Default bound on the number of elements of constructed semigroups.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Unvalidated input for [`validate_table`].
#[derive(Clone, Debug, Default)]
pub struct RawTable {
    pub table: Vec<Vec<usize>>,
    pub names: Option<Vec<String>>,
    pub zero: Option<usize>,
    pub identity: Option<usize>,
}

impl RawTable {
    pub fn new(table: Vec<Vec<usize>>) -> Self {
        Self { table, ..Self::default() }
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.names = Some(names.into_iter().map(Into::into).collect());
        self
    }
}

/// A validated finite semigroup. Elements are `0..n`; `mul(s, t)` is `st`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    n: usize,
    table: Vec<u32>,
    names: Option<Vec<String>>,
    zero: Option<usize>,
    identity: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub size: usize,
    pub idempotents: Vec<usize>,
    pub is_commutative: bool,
    pub zero: Option<usize>,
    pub identity: Option<usize>,
    pub square: Vec<usize>,
    /// `S^2 = S`.
    pub is_idempotent_semigroup: bool,
    /// Per element `s`: `(|{t : st = t}|, |{t : ts = t}|)`.
    pub fixed_points: Vec<(usize, usize)>,
    pub central_idempotents: bool,
    pub group_of_units: Option<Vec<usize>>,
}

pub fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == '{' || c == '}' || c == '#')
}

/// Checks a raw table and builds a [`Semigroup`], detecting zero and identity.
///
/// Associativity is checked with Light's test: it suffices to verify
/// `(xa)y = x(ay)` for `a` ranging over a generating set.
pub fn validate_table(raw: RawTable) -> Result<Semigroup> {
    let n = raw.table.len();
    if n == 0 {
        return Err(Error::TableShape { expected: 1, got: 0 });
    }
    if n > u32::MAX as usize {
        return Err(Error::SizeOverflow { size: n, cap: u32::MAX as usize });
    }
    let mut table = Vec::with_capacity(n * n);
    for (row, r) in raw.table.iter().enumerate() {
        if r.len() != n {
            return Err(Error::TableShape { expected: n * n, got: raw.table.iter().map(Vec::len).sum() });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(Error::IndexOutOfRange { row, col, value, n });
            }
            table.push(value as u32);
        }
    }
    if let Some(names) = &raw.names {
        if names.len() != n {
            return Err(Error::TableShape { expected: n, got: names.len() });
        }
        let mut seen = HashSet::new();
        for name in names {
            if !valid_name(name) {
                return Err(Error::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
    }
    let mut s = Semigroup { n, table, names: raw.names, zero: None, identity: None };
    s.check_associative()?;
    match raw.zero {
        Some(z) if z >= n || !s.is_zero_element(z) => return Err(Error::DeclaredZeroNotZero(z)),
        Some(z) => s.zero = Some(z),
        None => s.zero = (0..n).find(|&z| s.is_zero_element(z)),
    }
    match raw.identity {
        Some(e) if e >= n || !s.is_identity_element(e) => return Err(Error::DeclaredIdentityNotIdentity(e)),
        Some(e) => s.identity = Some(e),
        None => s.identity = (0..n).find(|&e| s.is_identity_element(e)),
    }
    Ok(s)
}

impl Semigroup {
    /// Builds from a product function on `0..n`, validating it.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        validate_table(RawTable::new((0..n).map(|s| (0..n).map(|t| f(s, t)).collect()).collect()))
    }

    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        validate_table(RawTable::new(table))
    }

    pub fn with_names<S: Into<String>>(self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        validate_table(RawTable { table: self.rows(), names: Some(names.into_iter().map(Into::into).collect()), zero: self.zero, identity: self.identity })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.n + t] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|s| (0..self.n).map(|t| self.mul(s, t)).collect()).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label: the declared name, or the 1-based index.
    pub fn label(&self, s: usize) -> String {
        match &self.names {
            Some(names) => names[s].clone(),
            None => (s + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|s| self.label(s)).collect()
    }

    /// Looks an element up by name, or by 1-based index when unnamed.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.names {
            Some(names) => names.iter().position(|n| n == label),
            None => label.parse::<usize>().ok().filter(|&i| i >= 1 && i <= self.n).map(|i| i - 1),
        }
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    fn is_zero_element(&self, z: usize) -> bool {
        (0..self.n).all(|s| self.mul(z, s) == z && self.mul(s, z) == z)
    }

    fn is_identity_element(&self, e: usize) -> bool {
        (0..self.n).all(|s| self.mul(e, s) == s && self.mul(s, e) == s)
    }

    /// Greedy generating set: each new generator is the least element outside the current span.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.n;
        let mut gens: Vec<usize> = Vec::new();
        let mut inside = vec![false; n];
        let mut members: Vec<usize> = Vec::new();
        for a in 0..n {
            if inside[a] {
                continue;
            }
            gens.push(a);
            let mut queue: Vec<usize> = Vec::new();
            let push = |x: usize, inside: &mut Vec<bool>, queue: &mut Vec<usize>| {
                if !inside[x] {
                    inside[x] = true;
                    queue.push(x);
                }
            };
            push(a, &mut inside, &mut queue);
            for &x in &members {
                push(self.mul(x, a), &mut inside, &mut queue);
            }
            while let Some(x) = queue.pop() {
                members.push(x);
                for &g in &gens {
                    push(self.mul(x, g), &mut inside, &mut queue);
                }
            }
        }
        gens
    }

    fn check_associative(&self) -> Result<()> {
        for a in self.generating_set() {
            for x in 0..self.n {
                let xa = self.mul(x, a);
                for y in 0..self.n {
                    if self.mul(xa, y) != self.mul(x, self.mul(a, y)) {
                        return Err(Error::AssociativityViolation(x, a, y));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|s| (s + 1..self.n).all(|t| self.mul(s, t) == self.mul(t, s)))
    }

    /// First non-commuting pair, if any.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|s| (s + 1..self.n).map(move |t| (s, t))).find(|&(s, t)| self.mul(s, t) != self.mul(t, s))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn square(&self) -> Vec<usize> {
        let mut hit = vec![false; self.n];
        for &v in &self.table {
            hit[v as usize] = true;
        }
        (0..self.n).filter(|&s| hit[s]).collect()
    }

    pub fn fixed_points(&self, s: usize) -> (usize, usize) {
        let left = (0..self.n).filter(|&t| self.mul(s, t) == t).count();
        let right = (0..self.n).filter(|&t| self.mul(t, s) == t).count();
        (left, right)
    }

    pub fn has_central_idempotents(&self) -> bool {
        self.idempotents().into_iter().all(|e| (0..self.n).all(|s| self.mul(e, s) == self.mul(s, e)))
    }

    /// Whether the table is a band (every element idempotent).
    pub fn is_band(&self) -> bool {
        (0..self.n).all(|s| self.is_idempotent(s))
    }

    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    pub fn is_group(&self) -> bool {
        match self.identity {
            Some(e) => (0..self.n).all(|s| (0..self.n).any(|t| self.mul(s, t) == e)),
            None => false,
        }
    }

    pub fn analyze(&self) -> AnalysisReport {
        let square = self.square();
        AnalysisReport {
            size: self.n,
            idempotents: self.idempotents(),
            is_commutative: self.is_commutative(),
            zero: self.zero,
            identity: self.identity,
            is_idempotent_semigroup: square.len() == self.n,
            square,
            fixed_points: (0..self.n).map(|s| self.fixed_points(s)).collect(),
            central_idempotents: self.has_central_idempotents(),
            group_of_units: self.identity.map(|e| self.maximal_subgroup(e).expect("identity is idempotent")),
        }
    }

    /// The group of units of `eSe`, sorted.
    pub fn maximal_subgroup(&self, e: usize) -> Result<Vec<usize>> {
        if e >= self.n || !self.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
        let local: Vec<usize> = (0..self.n).filter(|&s| self.mul(e, s) == s && self.mul(s, e) == s).collect();
        Ok(local
            .iter()
            .copied()
            .filter(|&s| local.iter().any(|&t| self.mul(s, t) == e && self.mul(t, s) == e))
            .collect())
    }

    /// Componentwise product; element `(s, t)` has index `s * |T| + t`.
    pub fn direct_product(&self, other: &Semigroup, cap: usize) -> Result<Semigroup> {
        let m = other.n;
        let size = self.n.checked_mul(m).unwrap_or(usize::MAX);
        if size > cap {
            return Err(Error::SizeOverflow { size, cap });
        }
        let table = (0..size)
            .map(|a| (0..size).map(|b| self.mul(a / m, b / m) * m + other.mul(a % m, b % m)).collect())
            .collect();
        let names = (self.names.is_some() || other.names.is_some())
            .then(|| (0..size).map(|a| format!("({},{})", self.label(a / m), other.label(a % m))).collect());
        validate_table(RawTable { table, names, zero: None, identity: None })
    }

    /// The subsemigroup on `elements` (which must be closed), relabelled
    /// `0..k` in the given order and named after the parent labels.
    pub fn restrict(&self, elements: &[usize]) -> Result<Semigroup> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &s) in elements.iter().enumerate() {
            pos[s] = i;
        }
        let mut table = Vec::with_capacity(elements.len());
        for &s in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &t in elements {
                let p = pos[self.mul(s, t)];
                if p == usize::MAX {
                    return Err(Error::OutOfRange(format!(
                        "{}*{} = {} leaves the subset",
                        self.label(s),
                        self.label(t),
                        self.label(self.mul(s, t))
                    )));
                }
                row.push(p);
            }
            table.push(row);
        }
        validate_table(RawTable::new(table).with_names(elements.iter().map(|&s| self.label(s))))
    }

    /// Like [`Semigroup::restrict`] but keeps the parent's labels only if it had names.
    pub fn subsemigroup(&self, elements: &[usize]) -> Result<Semigroup> {
        let mut s = self.restrict(elements)?;
        if self.names.is_none() {
            s.names = None;
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: test all n^3 triples.
    fn brute_associative(t: &[Vec<usize>]) -> bool {
        let n = t.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
    }

    #[test]
    fn trivial_monoid() {
        let s = Semigroup::from_table(vec![vec![0]]).unwrap();
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn left_zero_is_valid_without_zero_or_identity() {
        let t = vec![vec![0, 0], vec![1, 1]];
        assert!(brute_associative(&t));
        let s = Semigroup::from_table(t).unwrap();
        assert_eq!(s.zero(), None);
        assert_eq!(s.identity(), None);
        let r = s.analyze();
        assert!(r.is_idempotent_semigroup);
        assert!(!r.is_commutative);
    }

    #[test]
    fn corrupted_table_is_rejected_with_witness() {
        let t = vec![vec![1, 1], vec![1, 0]];
        assert!(!brute_associative(&t));
        match Semigroup::from_table(t.clone()) {
            Err(Error::AssociativityViolation(a, b, c)) => assert_ne!(t[t[a][b]][c], t[a][t[b][c]]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lights_test_agrees_with_brute_force_on_all_2x2_and_3x3_tables() {
        for n in 2..=3usize {
            let cells = n * n;
            for code in 0..n.pow(cells as u32) {
                let mut c = code;
                let t: Vec<Vec<usize>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let v = c % n;
                                c /= n;
                                v
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(Semigroup::from_table(t.clone()).is_ok(), brute_associative(&t), "{t:?}");
            }
        }
    }

    #[test]
    fn input_errors() {
        assert!(matches!(Semigroup::from_table(vec![vec![0, 2], vec![0, 0]]), Err(Error::IndexOutOfRange { row: 0, col: 1, value: 2, n: 2 })));
        let dup = RawTable::new(vec![vec![0, 0], vec![0, 0]]).with_names(["a", "a"]);
        assert_eq!(validate_table(dup), Err(Error::DuplicateName("a".into())));
        let bad_zero = RawTable { zero: Some(1), ..RawTable::new(vec![vec![0, 0], vec![0, 1]]) };
        assert_eq!(validate_table(bad_zero), Err(Error::DeclaredZeroNotZero(1)));
        let bad_id = RawTable { identity: Some(0), ..RawTable::new(vec![vec![0, 0], vec![0, 1]]) };
        assert_eq!(validate_table(bad_id), Err(Error::DeclaredIdentityNotIdentity(0)));
    }

    #[test]
    fn full_transformation_monoid_t2_profile() {
        // elements: identity, swap, constant 1, constant 2; st = s after t
        let maps: [[usize; 2]; 4] = [[0, 1], [1, 0], [0, 0], [1, 1]];
        let idx = |m: [usize; 2]| maps.iter().position(|&x| x == m).unwrap();
        let s = Semigroup::from_fn(4, |a, b| idx([maps[a][maps[b][0]], maps[a][maps[b][1]]])).unwrap();
        assert_eq!(s.fixed_points(2), (1, 2));
        assert_eq!(s.fixed_points(3), (1, 2));
    }

    #[test]
    fn maximal_subgroups() {
        let chain = Semigroup::from_table(vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(chain.maximal_subgroup(1).unwrap(), vec![1]);
        let z8 = Semigroup::from_fn(8, |a, b| a * b % 8).unwrap();
        assert_eq!(z8.maximal_subgroup(1).unwrap(), vec![1, 3, 5, 7]);
        assert_eq!(z8.maximal_subgroup(3), Err(Error::NotIdempotent(3)));
        let z3 = Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap();
        assert_eq!(z3.maximal_subgroup(0).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn direct_products() {
        let z2 = Semigroup::from_fn(2, |a, b| (a + b) % 2).unwrap();
        let klein = z2.direct_product(&z2, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(klein.rows(), vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]);
        let triv = Semigroup::from_table(vec![vec![0]]).unwrap();
        assert_eq!(triv.direct_product(&z2, 10).unwrap().rows(), z2.rows());
        let chain = Semigroup::from_table(vec![vec![0, 0], vec![0, 1]]).unwrap();
        let boolean = chain.direct_product(&chain, 10).unwrap();
        assert!(boolean.is_semilattice());
        assert_eq!(boolean.idempotents().len(), 4);
        assert!(matches!(z2.direct_product(&z2, 3), Err(Error::SizeOverflow { size: 4, cap: 3 })));
    }
}
