//! A named collection of small semigroups used by tests and the CLI.

use crate::determinant::group::{sign_representation, standard_representation, trivial_representation, RepMatrix};
use crate::error::Result;
use crate::inverse::{is_inverse, InverseVerdict};
use crate::semigroup::enumerate::{enumerate, EnumFilter};
use crate::semigroup::{families, Semigroup, DEFAULT_SIZE_CAP};

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub semigroup: Semigroup,
}

fn entry(name: impl Into<String>, semigroup: Semigroup) -> Entry {
    Entry { name: name.into(), semigroup }
}

/// `B_2`: the rook monoid `I_2` without its group of units.
pub fn brandt2() -> Result<Semigroup> {
    let r = families::rook(2)?;
    let keep: Vec<usize> = (0..r.len()).filter(|&a| !["[12]", "[21]"].contains(&r.label(a).as_str())).collect();
    r.subsemigroup(&keep)
}

pub fn boolean_lattice4() -> Result<Semigroup> {
    let c = families::chain_semilattice(2)?;
    c.direct_product(&c, DEFAULT_SIZE_CAP)
}

pub fn klein() -> Result<Semigroup> {
    let z2 = families::zmod_add(2)?;
    z2.direct_product(&z2, DEFAULT_SIZE_CAP)
}

/// Trivial, sign and standard representations of `symmetric(3)`.
pub fn s3_reps(g: &Semigroup) -> Result<Vec<RepMatrix>> {
    let perms = families::permutations(3);
    Ok(vec![trivial_representation(g)?, sign_representation(g, &perms)?, standard_representation(g, &perms)?])
}

/// Clifford semigroups of order at most 6.
pub fn clifford() -> Result<Vec<Entry>> {
    let chain2 = families::chain_semilattice(2)?;
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push(entry(format!("Z/{n} with zero"), families::adjoin_zero(&families::zmod_add(n)?)?));
    }
    out.push(entry("Z/2 x chain2", families::zmod_add(2)?.direct_product(&chain2, DEFAULT_SIZE_CAP)?));
    out.push(entry("Z/3 x chain2", families::zmod_add(3)?.direct_product(&chain2, DEFAULT_SIZE_CAP)?));
    out.push(entry("Z/2 x chain2 with zero", families::adjoin_zero(&families::zmod_add(2)?.direct_product(&chain2, DEFAULT_SIZE_CAP)?)?));
    out.push(entry("Klein with zero", families::adjoin_zero(&klein()?)?));
    out.push(entry("Z/2 with zero and identity", families::adjoin_identity(&families::adjoin_zero(&families::zmod_add(2)?)?)?));
    out.push(entry("gcd(4)", families::gcd(4)?));
    Ok(out)
}

/// Every named example.
pub fn named() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(entry(format!("gcd({n})"), families::gcd(n)?));
    }
    for n in 1..=4 {
        out.push(entry(format!("chain({n})"), families::chain_semilattice(n)?));
    }
    out.push(entry("boolean4", boolean_lattice4()?));
    for n in 2..=3 {
        out.push(entry(format!("left_zero({n})"), families::left_zero(n)?));
    }
    out.push(entry("T_2", families::full_transform(2)?));
    for n in 1..=2 {
        out.push(entry(format!("I_{n}"), families::rook(n)?));
    }
    out.push(entry("B_2", brandt2()?));
    for n in 1..=6 {
        out.push(entry(format!("Z/{n}"), families::zmod_add(n)?));
    }
    out.push(entry("Klein", klein()?));
    out.push(entry("S_3", families::symmetric(3)?));
    for n in 2..=9 {
        out.push(entry(format!("(Z/{n}, *)"), families::zmod_mul(n)?));
    }
    for k in 2..=5 {
        out.push(entry(format!("cyclic_nilpotent({k})"), families::cyclic_nilpotent(k)?));
    }
    out.push(entry("three_nil(10 01)", families::three_nil(&[vec![1, 0], vec![0, 1]])?));
    out.push(entry("three_nil(11 01)", families::three_nil(&[vec![1, 1], vec![0, 1]])?));
    out.push(entry("three_nil(11 11)", families::three_nil(&[vec![1, 1], vec![1, 1]])?));
    out.push(entry("wenger9", families::wenger9()?));
    out.push(entry("wenger11", families::wenger11()?));
    out.extend(clifford()?.into_iter().filter(|e| !e.name.starts_with("gcd")));
    Ok(out)
}

/// Named examples that have a zero element, up to the given order.
pub fn with_zero(max: usize) -> Result<Vec<Entry>> {
    Ok(named()?.into_iter().filter(|e| e.semigroup.len() <= max && e.semigroup.zero().is_some()).collect())
}

/// Named examples that are inverse semigroups, up to the given order.
pub fn inverse(max: usize) -> Result<Vec<Entry>> {
    Ok(named()?
        .into_iter()
        .filter(|e| e.semigroup.len() <= max && matches!(is_inverse(&e.semigroup), InverseVerdict::Yes { .. }))
        .collect())
}

/// Every meet semilattice table of order at most 4, plus `gcd(5)` and the
/// Boolean lattice on four elements.
pub fn semilattices() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for (i, s) in enumerate(n, EnumFilter { commutative: true, band: true })?.enumerate() {
            out.push(entry(format!("semilattice {n}#{i}"), s));
        }
    }
    out.push(entry("gcd(5)", families::gcd(5)?));
    out.push(entry("boolean4", boolean_lattice4()?));
    Ok(out)
}

/// Every band table of order at most 4 that is not commutative.
pub fn non_semilattice_bands() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for (i, s) in enumerate(n, EnumFilter { commutative: false, band: true })?.enumerate() {
            if !s.is_commutative() {
                out.push(entry(format!("band {n}#{i}"), s));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(brandt2().unwrap().len(), 5);
        assert!(brandt2().unwrap().zero().is_some());
        let names: Vec<String> = named().unwrap().into_iter().map(|e| e.name).collect();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
        for e in clifford().unwrap() {
            assert!(e.semigroup.len() <= 6, "{}", e.name);
            assert!(e.semigroup.has_central_idempotents(), "{}", e.name);
            assert!(matches!(is_inverse(&e.semigroup), InverseVerdict::Yes { .. }), "{}", e.name);
        }
    }

    #[test]
    fn bands_and_semilattices() {
        assert!(semilattices().unwrap().iter().all(|e| e.semigroup.is_semilattice()));
        let bands = non_semilattice_bands().unwrap();
        assert!(bands.iter().any(|e| e.semigroup.len() == 2));
        assert!(bands.iter().all(|e| e.semigroup.is_band() && !e.semigroup.is_commutative()));
    }
}
