//! Commutative semigroup determinants.
//!
//! When `S² = S` and the idempotents are central, the substitution
//! `y_s = Σ_{t≤s} μ(t,s) x_t` over the order `s ≤ t ⇔ s = t s⁺` splits `θ_S`
//! into contracted determinants of local monoids `H̃_e⁰` (units `G_e`, every
//! nonunit nilpotent), one per idempotent `e`. For a commutative local monoid
//! `M` each character `χ` of its unit group contributes a twisted nilpotent
//! monoid `M_χ/G` and one linear factor `Σ_g conj(χ(g)) x_{g m_{i_χ}}`.

use std::collections::HashMap;

use crate::algebra::characters::{character_group_of, Character};
use crate::algebra::cyclotomic::CycNum;
use crate::algebra::linalg::det_cyc;
use crate::algebra::poly::{LinForm, Poly, Var};
use crate::determinant::factorization::{settle, Factor, Factorization, VerifyConfig};
use crate::determinant::paratrophic::{cayley_matrix, paratrophic_determinant, Mode};
use crate::error::{Error, Result};
use crate::inverse::mobius_substitution;
use crate::nilpotent::{analyze_nilpotent, annihilator_matrix, Cocycle};
use crate::order::{natural_order, splus, FinitePoset, OrderMode};
use crate::semigroup::Semigroup;

/// One local monoid `H̃_e⁰ = H̃_e ∪ {z}`.
#[derive(Clone, Debug)]
pub struct LocalComponent {
    pub idempotent: usize,
    /// `H̃_e = {s : s⁺ = e}`, ascending; local index `i` is `elements[i]`.
    pub elements: Vec<usize>,
    /// `I_e = {s : s⁺ < e}`.
    pub ideal: Vec<usize>,
    /// The local monoid; its zero is the last element.
    pub monoid: Semigroup,
}

#[derive(Clone, Debug)]
pub struct SplusDecomposition {
    pub splus: Vec<usize>,
    pub order: FinitePoset,
    pub components: Vec<LocalComponent>,
}

fn fresh_name(taken: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

pub fn splus_decompose(s: &Semigroup) -> Result<SplusDecomposition> {
    let n = s.len();
    if s.square().len() != n {
        return Err(Error::NotIdempotentSemigroup);
    }
    let plus = splus(s)?;
    let order = natural_order(s, OrderMode::CentralIdempotent)?;
    for a in 0..n {
        for b in (0..n).filter(|&b| order.leq(a, b)) {
            for c in 0..n {
                for d in (0..n).filter(|&d| order.leq(c, d)) {
                    if !order.leq(s.mul(a, c), s.mul(b, d)) {
                        return Err(Error::VerificationFailed(format!(
                            "order is not compatible with multiplication at {}, {}",
                            s.label(a),
                            s.label(c)
                        )));
                    }
                }
            }
        }
    }
    let mut components = Vec::new();
    for e in s.idempotents() {
        let elements: Vec<usize> = (0..n).filter(|&x| plus[x] == e).collect();
        let ideal: Vec<usize> = (0..n).filter(|&x| plus[x] != e && s.mul(plus[x], e) == plus[x]).collect();
        let k = elements.len();
        let pos = |x: usize| elements.iter().position(|&y| y == x);
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| pos(s.mul(a, b)).unwrap_or(k)).collect::<Vec<_>>())
            .chain(std::iter::once(vec![k; k + 1]))
            .map(|mut row| {
                row.resize(k + 1, k);
                row
            })
            .collect();
        let mut names: Vec<String> = elements.iter().map(|&a| s.label(a)).collect();
        names.push(fresh_name(&names, "z"));
        let monoid = Semigroup::from_table(table)?.with_names(names)?;
        components.push(LocalComponent { idempotent: e, elements, ideal, monoid });
    }
    Ok(SplusDecomposition { splus: plus, order, components })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GlobalCheck {
    pub theta: Poly,
    /// `∏_e θ̃_{H̃_e⁰}(Y_e)`.
    pub product: Poly,
    pub holds: bool,
}

/// Maps local variables of a component to the `y_s` of the ambient semigroup.
fn local_to_global(comp: &LocalComponent, y: &HashMap<Var, LinForm>) -> HashMap<Var, LinForm> {
    comp.elements.iter().enumerate().map(|(i, &x)| (i as Var, y[&(x as Var)].clone())).collect()
}

pub fn global_decomposition_check(s: &Semigroup, cap: usize) -> Result<GlobalCheck> {
    let d = splus_decompose(s)?;
    let y = mobius_substitution(s, OrderMode::CentralIdempotent)?;
    let theta = paratrophic_determinant(s, Mode::Plain, cap)?;
    let mut product = Poly::one();
    for comp in &d.components {
        let local = paratrophic_determinant(&comp.monoid, Mode::Contracted, cap)?;
        product = &product * &local.substitute_linear(&local_to_global(comp, &y))?;
    }
    let holds = product == theta;
    Ok(GlobalCheck { theta, product, holds })
}

/// Data attached to one character `χ` of the unit group of a local monoid.
#[derive(Clone, Debug)]
pub struct CharacterBlock {
    /// `J_χ`: orbit indices whose stabilizer lies in `ker χ`, ascending.
    pub orbits: Vec<usize>,
    /// `I_χ`: elements whose stabilizer is not in `ker χ` (always contains the zero unless `χ` is trivial).
    pub ideal: Vec<usize>,
    /// `M_χ/G`: the orbits of `J_χ` in order, then a zero.
    pub quotient: Semigroup,
    /// `c_χ(Gm_i, Gm_j) = χ(m_i m_j)` on `quotient`.
    pub cocycle: Cocycle,
    /// `i_χ`, the orbit index of the unique annihilating element of `M_χ/G`.
    pub annihilator: Option<usize>,
    /// `A(χ)` over `J_χ`, when the annihilator exists.
    pub matrix: Option<Vec<Vec<CycNum>>>,
    pub det: Option<CycNum>,
}

/// Orbit and character data of a commutative local monoid.
#[derive(Clone, Debug)]
pub struct LocalSpectrum {
    pub zero: usize,
    pub identity: usize,
    pub units: Vec<usize>,
    /// `m_1 = 1, m_2, …`: the least element of each orbit on `M ∖ {z}`.
    pub reps: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    pub stabilizers: Vec<Vec<usize>>,
    pub characters: Vec<Character>,
    pub blocks: Vec<CharacterBlock>,
    orbit_of: Vec<Option<usize>>,
    /// A unit `g` with `g · m_{orbit_of[m]} = m`.
    witness: Vec<usize>,
}

impl LocalSpectrum {
    /// `χ(m) = χ(g)` for `m = g m_i ∉ I_χ`.
    pub fn chi(&self, k: usize, m: usize) -> CycNum {
        self.characters[k].value(self.witness[m])
    }

    pub fn orbit_of(&self, m: usize) -> Option<usize> {
        self.orbit_of[m]
    }

    /// Whether every nonzero product of representatives is itself a representative.
    pub fn transversal_closed(&self, m: &Semigroup) -> bool {
        self.reps.iter().all(|&a| self.reps.iter().all(|&b| m.mul(a, b) == self.zero || self.reps.contains(&m.mul(a, b))))
    }

    /// `∏_χ det A(χ)`, when every block has a determinant.
    pub fn det_product(&self) -> Option<CycNum> {
        self.blocks.iter().try_fold(CycNum::one(), |acc, b| b.det.as_ref().map(|d| &acc * d))
    }

    /// Characters `χ` representing the conjugate pairs of non-real characters.
    pub fn conjugate_pair_reps(&self) -> Vec<usize> {
        pair_reps(&self.characters)
    }
}

fn pair_reps(chars: &[Character]) -> Vec<usize> {
    (0..chars.len())
        .filter(|&k| {
            !chars[k].is_real() && {
                let c = chars[k].conj();
                chars.iter().position(|x| *x == c).is_some_and(|j| k < j)
            }
        })
        .collect()
}

fn local_shape(m: &Semigroup) -> Result<(usize, usize, Vec<usize>)> {
    let fail = |r: String| Error::NotLocalShape(r);
    if let Some((a, b)) = m.noncommuting_pair() {
        return Err(fail(format!("{}*{} != {}*{}", m.label(a), m.label(b), m.label(b), m.label(a))));
    }
    let z = m.zero().ok_or_else(|| fail("no zero".into()))?;
    let e = m.identity().ok_or_else(|| fail("no identity".into()))?;
    if z == e {
        return Err(fail("identity equals zero".into()));
    }
    let units = m.maximal_subgroup(e)?;
    for a in (0..m.len()).filter(|a| units.binary_search(a).is_err()) {
        let mut p = a;
        for _ in 0..m.len() {
            p = m.mul(p, a);
        }
        if p != z {
            return Err(fail(format!("nonunit {} is not nilpotent", m.label(a))));
        }
    }
    Ok((z, e, units))
}

pub fn local_spectrum(m: &Semigroup) -> Result<LocalSpectrum> {
    let (z, e, units) = local_shape(m)?;
    let n = m.len();
    let mut orbit_of: Vec<Option<usize>> = vec![None; n];
    let mut witness = vec![e; n];
    let mut reps = Vec::new();
    let mut orbits = Vec::new();
    let mut stabilizers = Vec::new();
    for x in std::iter::once(e).chain((0..n).filter(|&x| x != e && x != z)) {
        if orbit_of[x].is_some() {
            continue;
        }
        let i = reps.len();
        let mut orbit = Vec::new();
        for &g in std::iter::once(&e).chain(&units) {
            let y = m.mul(g, x);
            if orbit_of[y].is_none() {
                orbit_of[y] = Some(i);
                witness[y] = g;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        reps.push(x);
        orbits.push(orbit);
        stabilizers.push(units.iter().copied().filter(|&g| m.mul(g, x) == x).collect::<Vec<_>>());
    }
    let characters = character_group_of(m, &units, e)?;
    let zero_name = m.label(z);
    let mut blocks = Vec::new();
    for chi in &characters {
        let orbs: Vec<usize> = (0..reps.len()).filter(|&i| stabilizers[i].iter().all(|&g| chi.in_kernel(g))).collect();
        let ideal: Vec<usize> = (0..n).filter(|&x| orbit_of[x].is_none_or(|i| !orbs.contains(&i))).collect();
        // χ(m) must not depend on the unit carrying m_i to m
        for x in (0..n).filter(|x| !ideal.contains(x)) {
            let i = orbit_of[x].expect("nonzero");
            for &g in &units {
                if m.mul(g, reps[i]) == x && chi.value(g) != chi.value(witness[x]) {
                    return Err(Error::VerificationFailed(format!("χ is not well defined at {}", m.label(x))));
                }
            }
        }
        let k = orbs.len();
        let qpos = |x: usize| -> usize {
            if ideal.contains(&x) {
                k
            } else {
                orbs.iter().position(|&i| Some(i) == orbit_of[x]).expect("orbit in J")
            }
        };
        let table: Vec<Vec<usize>> = (0..=k)
            .map(|a| (0..=k).map(|b| if a == k || b == k { k } else { qpos(m.mul(reps[orbs[a]], reps[orbs[b]])) }).collect())
            .collect();
        let names: Vec<String> = orbs.iter().map(|&i| m.label(reps[i])).chain(std::iter::once(zero_name.clone())).collect();
        let quotient = Semigroup::from_table(table)?.with_names(names)?;
        let cocycle = Cocycle::from_fn(&quotient, |a, b| chi.value(witness[m.mul(reps[orbs[a]], reps[orbs[b]])]))?;
        let report = analyze_nilpotent(&quotient)?;
        let (annihilator, matrix, det) = match report.unique_annihilator {
            Some(q) => {
                let (_, a) = annihilator_matrix(&quotient, Some(&cocycle))?;
                let d = det_cyc(&a);
                (Some(orbs[q]), Some(a), Some(d))
            }
            None => (None, None, None),
        };
        blocks.push(CharacterBlock { orbits: orbs, ideal, quotient, cocycle, annihilator, matrix, det });
    }
    Ok(LocalSpectrum { zero: z, identity: e, units, reps, orbits, stabilizers, characters, blocks, orbit_of, witness })
}

/// `Σ_g conj(χ(g)) x_{g m}`.
fn orbit_form(m: &Semigroup, units: &[usize], chi: &Character, rep: usize) -> LinForm {
    let mut form = LinForm::new();
    for &g in units {
        form.add_term(m.mul(g, rep) as Var, chi.conj_value(g));
    }
    form
}

fn sign_of_pairs(chars: &[Character], exps: &[usize]) -> i64 {
    pair_reps(chars).into_iter().map(|k| if exps[k] % 2 == 0 { 1 } else { -1 }).product()
}

/// Factors the contracted determinant of a commutative local monoid.
pub fn factor_local(m: &Semigroup, cfg: &VerifyConfig) -> Result<Factorization> {
    const PROVENANCE: &str = "commutative-local";
    let sp = local_spectrum(m)?;
    let reference = cayley_matrix(m, Mode::Contracted)?;
    let mut notes = Vec::new();
    let mut zero_reason = None;
    for (k, b) in sp.blocks.iter().enumerate() {
        let labels: Vec<String> = b.orbits.iter().map(|&i| m.label(sp.reps[i])).collect();
        match (&b.annihilator, &b.det) {
            (Some(i), Some(d)) => {
                notes.push(format!("χ{}: J = {{{}}}, annihilator {}, det A(χ{}) = {d}", k + 1, labels.join(", "), m.label(sp.reps[*i]), k + 1));
                if d.is_zero() && zero_reason.is_none() {
                    zero_reason = Some(format!("det A(χ{}) = 0", k + 1));
                }
            }
            _ => {
                notes.push(format!("χ{}: J = {{{}}}, no unique annihilating orbit", k + 1, labels.join(", ")));
                if zero_reason.is_none() {
                    zero_reason = Some(format!("M_χ/G for χ{} has no unique annihilating element", k + 1));
                }
            }
        }
    }
    if let Some(reason) = zero_reason {
        let mut f = Factorization::zero(PROVENANCE, reason);
        f.notes = notes;
        return settle(&reference, f, None, cfg);
    }
    let g = sp.units.len() as i64;
    let mut constant = CycNum::one();
    let mut factors = Vec::new();
    let exps: Vec<usize> = sp.blocks.iter().map(|b| b.orbits.len()).collect();
    for (k, b) in sp.blocks.iter().enumerate() {
        if b.quotient.len() - 1 != b.orbits.len() {
            return Err(Error::VerificationFailed("|M_χ/G| − 1 differs from |J_χ|".into()));
        }
        for &i in &b.orbits {
            constant = constant.scale_int(sp.orbits[i].len() as i64).checked_div(&CycNum::from_int(g))?;
        }
        constant = &constant * b.det.as_ref().expect("checked");
        let rep = sp.reps[b.annihilator.expect("checked")];
        factors.push(Factor::linear(orbit_form(m, &sp.units, &sp.characters[k], rep), b.orbits.len() as u32));
    }
    constant = constant.scale_int(sign_of_pairs(&sp.characters, &exps));
    let mut f = Factorization::factored(constant, factors, PROVENANCE);
    f.notes = notes;
    let predicted = f.constant.clone();
    settle(&reference, f, Some(predicted), cfg)
}

/// Closed form when the nonunits form a principal ideal `Mt`. Cross-checked
/// against [`factor_local`].
pub fn chain_fastpath(m: &Semigroup, cfg: &VerifyConfig) -> Result<Factorization> {
    let (z, e, units) = local_shape(m)?;
    let nonunits: Vec<usize> = (0..m.len()).filter(|x| units.binary_search(x).is_err()).collect();
    let t = nonunits
        .iter()
        .copied()
        .find(|&t| {
            let mut ideal: Vec<usize> = (0..m.len()).map(|x| m.mul(x, t)).collect();
            ideal.sort_unstable();
            ideal.dedup();
            ideal == nonunits
        })
        .ok_or_else(|| Error::NotChain("the ideal of nonunits is not principal".into()))?;
    let mut powers = vec![e];
    while m.mul(*powers.last().unwrap(), t) != z {
        powers.push(m.mul(*powers.last().unwrap(), t));
    }
    let stabilizers: Vec<Vec<usize>> = powers.iter().map(|&p| units.iter().copied().filter(|&g| m.mul(g, p) == p).collect()).collect();
    for w in stabilizers.windows(2) {
        if !w[0].iter().all(|g| w[1].contains(g)) {
            return Err(Error::VerificationFailed("stabilizers of powers of t are not increasing".into()));
        }
    }
    let chars = character_group_of(m, &units, e)?;
    let mut constant = CycNum::one();
    let mut factors = Vec::new();
    let mut exps = Vec::new();
    for chi in &chars {
        let i = (0..powers.len()).rev().find(|&i| stabilizers[i].iter().all(|&g| chi.in_kernel(g))).expect("G_0 is trivial");
        let size = i + 1;
        if (size * (size - 1) / 2) % 2 == 1 {
            constant = constant.scale_int(-1);
        }
        for st in &stabilizers[..=i] {
            constant = constant.checked_div(&CycNum::from_int(st.len() as i64))?;
        }
        factors.push(Factor::linear(orbit_form(m, &units, chi, powers[i]), size as u32));
        exps.push(size);
    }
    constant = constant.scale_int(sign_of_pairs(&chars, &exps));
    let mut f = Factorization::factored(constant, factors, "chain");
    f.notes.push(format!("t = {}, t^{} ≠ z", m.label(t), powers.len() - 1));
    let predicted = f.constant.clone();
    let f = settle(&cayley_matrix(m, Mode::Contracted)?, f, Some(predicted), cfg)?;

    let local = factor_local(m, cfg)?;
    let key = |f: &Factorization| {
        let mut v: Vec<(String, u32)> = f.factors.iter().map(|x| (x.poly.to_string(), x.multiplicity)).collect();
        v.sort();
        v
    };
    if local.constant != f.constant || key(&local) != key(&f) {
        return Err(Error::VerificationFailed("chain closed form disagrees with the local factorization".into()));
    }
    Ok(f)
}

/// Factors the determinant of any finite commutative semigroup.
pub fn factor_commutative(s: &Semigroup, cfg: &VerifyConfig) -> Result<Factorization> {
    const PROVENANCE: &str = "commutative";
    if let Some((a, b)) = s.noncommuting_pair() {
        return Err(Error::NotCommutative(a, b));
    }
    let reference = cayley_matrix(s, Mode::Plain)?;
    if s.square().len() != s.len() {
        return settle(&reference, Factorization::zero(PROVENANCE, "S² ≠ S"), None, cfg);
    }
    let d = splus_decompose(s)?;
    let y = mobius_substitution(s, OrderMode::CentralIdempotent)?;
    let mut constant = CycNum::one();
    let mut factors = Vec::new();
    let mut notes = Vec::new();
    for comp in &d.components {
        let local = factor_local(&comp.monoid, cfg)?;
        let e = s.label(comp.idempotent);
        notes.extend(local.notes.iter().map(|n| format!("e = {e}: {n}")));
        if local.is_zero() {
            let reason = format!("component of {e}: {}", local.zero_reason.clone().unwrap_or_default());
            let mut f = Factorization::zero(PROVENANCE, reason);
            f.notes = notes;
            return settle(&reference, f, None, cfg);
        }
        constant = &constant * &local.constant;
        let sub = local_to_global(comp, &y);
        for fac in &local.factors {
            let form = fac.as_linear().expect("local factors are linear");
            let mut mapped = LinForm::new();
            for (v, c) in form.coeffs() {
                mapped.add_scaled(&sub[v], c);
            }
            factors.push(Factor::linear(mapped, fac.multiplicity));
        }
    }
    let mut f = Factorization::factored(constant, factors, PROVENANCE);
    f.notes = notes;
    let predicted = f.constant.clone();
    settle(&reference, f, Some(predicted), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determinant::factorization::Status;
    use crate::semigroup::families;

    #[test]
    fn semilattice_components_are_trivial() {
        let d = splus_decompose(&families::gcd(4).unwrap()).unwrap();
        assert_eq!(d.components.len(), 4);
        assert!(d.components.iter().all(|c| c.monoid.len() == 2));
    }

    #[test]
    fn zmod8_decomposition() {
        let s = families::zmod_mul(8).unwrap();
        let d = splus_decompose(&s).unwrap();
        let one = d.components.iter().find(|c| c.idempotent == 1).unwrap();
        assert_eq!(one.elements, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(one.ideal, vec![0]);
        assert!(global_decomposition_check(&s, 12).unwrap().holds);
    }

    #[test]
    fn zmod8_spectrum() {
        let m = families::zmod_mul(8).unwrap();
        let sp = local_spectrum(&m).unwrap();
        assert_eq!(sp.reps, vec![1, 2, 4]);
        assert_eq!(sp.stabilizers[1], vec![1, 5]);
        assert!(sp.det_product().unwrap().to_integer().is_some());
    }

    #[test]
    fn group_with_zero_spectrum() {
        let m = families::adjoin_zero(&families::zmod_add(3).unwrap()).unwrap();
        let sp = local_spectrum(&m).unwrap();
        assert_eq!(sp.reps.len(), 1);
        for b in &sp.blocks {
            assert_eq!(b.matrix.as_ref().unwrap(), &vec![vec![CycNum::one()]]);
        }
        let f = factor_local(&m, &VerifyConfig::default()).unwrap();
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn wenger_examples() {
        let w9 = families::wenger9().unwrap();
        let f = factor_local(&w9, &VerifyConfig::default()).unwrap();
        assert_eq!(f.constant, CycNum::from_int(-1));
        let shown: Vec<(String, u32)> = f.factors.iter().map(|x| (x.poly.render(&|v| w9.label(v as usize)), x.multiplicity)).collect();
        assert_eq!(shown, vec![("z'+az'".to_string(), 4), ("z'-az'".to_string(), 4)]);

        let sp = local_spectrum(&w9).unwrap();
        let a1 = sp.blocks[0].matrix.as_ref().unwrap();
        let a2 = sp.blocks[1].matrix.as_ref().unwrap();
        let int = |rows: [[i64; 4]; 4]| -> Vec<Vec<CycNum>> { rows.iter().map(|r| r.iter().map(|&v| CycNum::from_int(v)).collect()).collect() };
        assert_eq!(a1, &int([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]));
        assert_eq!(a2, &int([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, -1, 0], [1, 0, 0, 0]]));

        let w11 = families::wenger11().unwrap();
        let f = factor_local(&w11, &VerifyConfig::default()).unwrap();
        assert_eq!(f.status, Status::Zero);
        assert_eq!(f.zero_reason.as_deref(), Some("det A(χ2) = 0"));
    }

    #[test]
    fn chain_cases() {
        for n in [4, 8, 9] {
            let m = families::zmod_mul(n).unwrap();
            let f = chain_fastpath(&m, &VerifyConfig::default()).unwrap();
            assert_eq!(f.status, Status::Factored, "Z/{n}");
        }
        let nil = families::cyclic_nilpotent(3).unwrap();
        let f = chain_fastpath(&nil, &VerifyConfig::default()).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].multiplicity, 3);
    }

    #[test]
    fn commutative_examples() {
        let cfg = VerifyConfig::default();
        let z6 = families::zmod_mul(6).unwrap();
        let f = factor_commutative(&z6, &cfg).unwrap();
        assert_eq!(f.expand(), paratrophic_determinant(&z6, Mode::Plain, 12).unwrap());
        let nil = families::cyclic_nilpotent(2).unwrap();
        let s = nil.restrict(&[1, 2]).unwrap();
        assert_eq!(factor_commutative(&s, &cfg).unwrap().status, Status::Zero);
        assert!(matches!(factor_commutative(&families::left_zero(2).unwrap(), &cfg), Err(Error::NotCommutative(..))));
    }
}
