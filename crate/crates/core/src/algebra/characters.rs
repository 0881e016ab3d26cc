//! Characters of finite abelian groups.
//!
//! Characters are found by choosing a greedy generating sequence (each new
//! generator the least element outside the span so far), trying every
//! assignment of roots of unity to the generators in lexicographic order of
//! exponents, and keeping the assignments that extend consistently to the
//! whole group.

use num_integer::Integer;

use super::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// A character `χ: G → μ_N`, stored as exponents: `χ(g) = ζ_N^exps[i]` for
/// `g = elements[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    elements: Vec<usize>,
    exps: Vec<u32>,
    order: u32,
}

impl Character {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// The exponent `N` of the group; values lie in `μ_N`.
    pub fn order(&self) -> u32 {
        self.order
    }

    fn pos(&self, g: usize) -> usize {
        self.elements.binary_search(&g).unwrap_or_else(|_| panic!("element {g} is not in the group"))
    }

    /// `k` with `χ(g) = ζ_N^k`.
    pub fn exponent(&self, g: usize) -> u32 {
        self.exps[self.pos(g)]
    }

    pub fn value(&self, g: usize) -> CycNum {
        CycNum::root_of_unity(self.order, self.exponent(g) as i64)
    }

    pub fn conj_value(&self, g: usize) -> CycNum {
        CycNum::root_of_unity(self.order, -(self.exponent(g) as i64))
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Whether every value is `±1`.
    pub fn is_real(&self) -> bool {
        self.exps.iter().all(|&e| (2 * e) % self.order == 0)
    }

    pub fn conj(&self) -> Character {
        Character {
            elements: self.elements.clone(),
            exps: self.exps.iter().map(|&e| (self.order - e) % self.order).collect(),
            order: self.order,
        }
    }

    pub fn in_kernel(&self, g: usize) -> bool {
        self.exponent(g) == 0
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.elements.iter().zip(&self.exps).filter(|(_, &e)| e == 0).map(|(&g, _)| g).collect()
    }
}

/// Checks that `elements` form a group inside `s` with identity `e`; returns
/// the inverse of each element (indexed like `elements`).
pub fn check_group(s: &Semigroup, elements: &[usize], e: usize) -> Result<Vec<usize>> {
    let inside = |x: usize| elements.binary_search(&x).is_ok();
    if !inside(e) || !s.is_idempotent(e) {
        return Err(Error::NotAGroup(format!("{} is not an identity", s.label(e))));
    }
    let mut inverses = Vec::with_capacity(elements.len());
    for &g in elements {
        if s.mul(e, g) != g || s.mul(g, e) != g {
            return Err(Error::NotAGroup(format!("{} does not fix {}", s.label(e), s.label(g))));
        }
        for &h in elements {
            if !inside(s.mul(g, h)) {
                return Err(Error::NotAGroup(format!("{}*{} leaves the set", s.label(g), s.label(h))));
            }
        }
        let inv = elements.iter().copied().find(|&h| s.mul(g, h) == e && s.mul(h, g) == e);
        inverses.push(inv.ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", s.label(g))))?);
    }
    Ok(inverses)
}

fn element_order(s: &Semigroup, g: usize, e: usize) -> u32 {
    let mut k = 1;
    let mut p = g;
    while p != e {
        p = s.mul(p, g);
        k += 1;
    }
    k
}

/// Characters of a group that is a whole semigroup.
pub fn character_group(g: &Semigroup) -> Result<Vec<Character>> {
    let e = g.identity().ok_or_else(|| Error::NotAGroup("no identity".into()))?;
    let all: Vec<usize> = (0..g.len()).collect();
    character_group_of(g, &all, e)
}

/// Characters of the abelian group on `elements` (sorted) with identity `e`,
/// trivial character first.
pub fn character_group_of(s: &Semigroup, elements: &[usize], e: usize) -> Result<Vec<Character>> {
    let mut elements = elements.to_vec();
    elements.sort_unstable();
    check_group(s, &elements, e)?;
    for (i, &g) in elements.iter().enumerate() {
        for &h in &elements[i + 1..] {
            if s.mul(g, h) != s.mul(h, g) {
                return Err(Error::NotAbelian(g, h));
            }
        }
    }
    let pos = |x: usize| elements.binary_search(&x).expect("closed");
    let size = elements.len();

    // greedy generators
    let mut gens: Vec<usize> = Vec::new();
    let mut span = vec![false; size];
    span[pos(e)] = true;
    let mut span_list = vec![e];
    for &g in &elements {
        if span[pos(g)] {
            continue;
        }
        gens.push(g);
        let mut i = 0;
        while i < span_list.len() {
            let x = span_list[i];
            for &h in &gens {
                let y = s.mul(x, h);
                if !span[pos(y)] {
                    span[pos(y)] = true;
                    span_list.push(y);
                }
            }
            i += 1;
        }
    }
    let orders: Vec<u32> = gens.iter().map(|&g| element_order(s, g, e)).collect();
    let exponent = orders.iter().fold(1u32, |a, &b| a.lcm(&b));

    let mut out = Vec::new();
    let mut assign = vec![0u32; gens.len()];
    loop {
        if let Some(exps) = extend(s, &elements, e, &gens, &orders, &assign, exponent, &pos) {
            out.push(Character { elements: elements.clone(), exps, order: exponent });
        }
        // next assignment in lexicographic order, first generator most significant
        let mut k = gens.len();
        loop {
            if k == 0 {
                if out.len() != size {
                    return Err(Error::NotAGroup(format!("found {} characters for a group of order {size}", out.len())));
                }
                return Ok(out);
            }
            k -= 1;
            assign[k] += 1;
            if assign[k] < orders[k] {
                break;
            }
            assign[k] = 0;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    s: &Semigroup,
    elements: &[usize],
    e: usize,
    gens: &[usize],
    orders: &[u32],
    assign: &[u32],
    n: u32,
    pos: &dyn Fn(usize) -> usize,
) -> Option<Vec<u32>> {
    let mut val: Vec<Option<u32>> = vec![None; elements.len()];
    val[pos(e)] = Some(0);
    let mut queue = vec![e];
    let step: Vec<u32> = gens.iter().zip(orders).zip(assign).map(|((_, &o), &a)| a * (n / o)).collect();
    while let Some(x) = queue.pop() {
        let vx = val[pos(x)].expect("queued elements have values");
        for (j, &g) in gens.iter().enumerate() {
            let y = s.mul(x, g);
            let vy = (vx + step[j]) % n;
            match val[pos(y)] {
                None => {
                    val[pos(y)] = Some(vy);
                    queue.push(y);
                }
                Some(w) if w != vy => return None,
                Some(_) => {}
            }
        }
    }
    val.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::families::zmod_add;

    fn values(c: &Character) -> Vec<CycNum> {
        c.elements().iter().map(|&g| c.value(g)).collect()
    }

    #[test]
    fn z2_and_z3() {
        let z2 = character_group(&zmod_add(2).unwrap()).unwrap();
        assert_eq!(z2.len(), 2);
        assert_eq!(values(&z2[0]), vec![CycNum::one(), CycNum::one()]);
        assert_eq!(values(&z2[1]), vec![CycNum::one(), CycNum::from_int(-1)]);

        let z3 = character_group(&zmod_add(3).unwrap()).unwrap();
        let w = CycNum::root_of_unity(3, 1);
        let w2 = CycNum::root_of_unity(3, 2);
        assert_eq!(values(&z3[1]), vec![CycNum::one(), w.clone(), w2.clone()]);
        assert_eq!(values(&z3[2]), vec![CycNum::one(), w2, w]);
    }

    #[test]
    fn klein_four_characters_are_real() {
        let z2 = zmod_add(2).unwrap();
        let klein = z2.direct_product(&z2, 16).unwrap();
        let chars = character_group(&klein).unwrap();
        assert_eq!(chars.len(), 4);
        assert!(chars.iter().all(Character::is_real));
        assert!(chars[0].is_trivial());
    }

    #[test]
    fn orthogonality_and_conjugation_closure() {
        let g = zmod_add(4).unwrap().direct_product(&zmod_add(3).unwrap(), 64).unwrap();
        let chars = character_group(&g).unwrap();
        assert_eq!(chars.len(), 12);
        for a in &chars {
            assert!(chars.contains(&a.conj()));
            for b in &chars {
                let mut sum = CycNum::zero(1);
                for g in 0..12 {
                    sum = &sum + &(&a.value(g) * &b.conj_value(g));
                }
                let expect = if a == b { 12 } else { 0 };
                assert_eq!(sum, CycNum::from_int(expect));
            }
        }
    }

    #[test]
    fn nonabelian_and_non_groups_are_rejected() {
        let s3 = crate::semigroup::families::symmetric(3).unwrap();
        assert!(matches!(character_group(&s3), Err(Error::NotAbelian(_, _))));
        let chain = crate::semigroup::families::chain_semilattice(2).unwrap();
        assert!(matches!(character_group(&chain), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn units_of_z8() {
        let z8 = crate::semigroup::families::zmod_mul(8).unwrap();
        let chars = character_group_of(&z8, &[1, 3, 5, 7], 1).unwrap();
        assert_eq!(chars.len(), 4);
        assert_eq!(chars[0].order(), 2);
    }
}
