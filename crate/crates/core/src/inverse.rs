//! Inverse semigroups, their groupoids, and the Clifford case.
//!
//! An inverse semigroup `S` has a groupoid with the idempotents as objects and
//! the elements as arrows, `dom(s) = s*s` and `ran(s) = ss*`. With
//! `y_s = Σ_{t≤s} μ(t,s) x_t` over the natural order, `θ_S(X) = θ_𝒢(Y)`.
//! When the idempotents are central the groupoid is a disjoint union of the
//! maximal subgroups and `θ_S` splits into group determinants.

use std::collections::HashMap;

use crate::algebra::characters::character_group_of;
use crate::algebra::cyclotomic::CycNum;
use crate::algebra::det::det_poly_matrix;
use crate::algebra::poly::{LinForm, Poly, Var};
use crate::determinant::factorization::{settle, Factor, Factorization, VerifyConfig};
use crate::determinant::group::{permutation_sign, validate_reps, RepMatrix};
use crate::determinant::paratrophic::{cayley_matrix, paratrophic_determinant, Mode};
use crate::error::{Error, Result};
use crate::order::{mobius, natural_order, star_map, OrderMode};
use crate::semigroup::Semigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseVerdict {
    Yes { star: Vec<usize> },
    /// `element` has `count` generalized inverses instead of one.
    No { element: usize, count: usize },
}

pub fn is_inverse(s: &Semigroup) -> InverseVerdict {
    match star_map(s) {
        Ok(star) => InverseVerdict::Yes { star },
        Err((element, count)) => InverseVerdict::No { element, count },
    }
}

fn require_inverse(s: &Semigroup) -> Result<Vec<usize>> {
    match is_inverse(s) {
        InverseVerdict::Yes { star } => Ok(star),
        InverseVerdict::No { element, count } => Err(Error::NotInverse { element, count }),
    }
}

/// The groupoid of an inverse semigroup. Arrows are the semigroup elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    /// Idempotents, ascending.
    pub objects: Vec<usize>,
    pub dom: Vec<usize>,
    pub ran: Vec<usize>,
    pub inv: Vec<usize>,
    product: Vec<usize>,
}

impl Groupoid {
    pub fn arrow_count(&self) -> usize {
        self.dom.len()
    }

    /// `ab`, defined when `dom(a) = ran(b)`.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        (self.dom[a] == self.ran[b]).then(|| self.product[a * self.arrow_count() + b])
    }

    /// Arrows `e → e`.
    pub fn automorphisms(&self, e: usize) -> Vec<usize> {
        (0..self.arrow_count()).filter(|&a| self.dom[a] == e && self.ran[a] == e).collect()
    }

    /// Connected components of objects, each listing its objects ascending;
    /// components are ordered by their least object.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let idx: HashMap<usize, usize> = self.objects.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut parent: Vec<usize> = (0..self.objects.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..self.arrow_count() {
            let (x, y) = (find(&mut parent, idx[&self.dom[a]]), find(&mut parent, idx[&self.ran[a]]));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for i in 0..self.objects.len() {
            let r = find(&mut parent, i);
            let k = *slot.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[k].push(self.objects[i]);
        }
        groups
    }

    /// Arrows whose domain lies in `objects`.
    pub fn arrows_of(&self, objects: &[usize]) -> Vec<usize> {
        (0..self.arrow_count()).filter(|&a| objects.contains(&self.dom[a])).collect()
    }

    /// `C(𝒢)` restricted to `arrows`: entry `x_{ab}` if `dom(a) = ran(b)`.
    pub fn matrix(&self, arrows: &[usize]) -> Vec<Vec<Poly>> {
        arrows
            .iter()
            .map(|&a| arrows.iter().map(|&b| self.compose(a, b).map_or_else(Poly::zero, |ab| Poly::var(ab as Var))).collect())
            .collect()
    }

    pub fn structure(&self) -> GroupoidStructure {
        let classes: Vec<GroupoidClass> = self
            .components()
            .into_iter()
            .map(|objects| {
                let group = self.automorphisms(objects[0]);
                GroupoidClass { objects, group }
            })
            .collect();
        GroupoidStructure { classes, arrows: self.arrow_count() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidClass {
    pub objects: Vec<usize>,
    /// Automorphism group of the least object.
    pub group: Vec<usize>,
}

impl GroupoidClass {
    pub fn size(&self) -> usize {
        self.objects.len()
    }

    /// `n_i² |G_i|`, the dimension of the matrix-algebra block.
    pub fn block_dimension(&self) -> usize {
        self.size() * self.size() * self.group.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidStructure {
    pub classes: Vec<GroupoidClass>,
    pub arrows: usize,
}

impl GroupoidStructure {
    pub fn dimension_count_holds(&self) -> bool {
        self.classes.iter().map(GroupoidClass::block_dimension).sum::<usize>() == self.arrows
    }
}

pub fn groupoid_of(s: &Semigroup, star: &[usize]) -> Groupoid {
    let n = s.len();
    let dom: Vec<usize> = (0..n).map(|a| s.mul(star[a], a)).collect();
    let ran: Vec<usize> = (0..n).map(|a| s.mul(a, star[a])).collect();
    let product = (0..n * n).map(|k| s.mul(k / n, k % n)).collect();
    Groupoid { objects: s.idempotents(), dom, ran, inv: star.to_vec(), product }
}

/// `θ_𝒢`, computed as the product of the component blocks. The cap applies
/// to each block.
pub fn groupoid_determinant(g: &Groupoid, cap: usize) -> Result<Poly> {
    let mut theta = Poly::one();
    for comp in g.components() {
        let arrows = g.arrows_of(&comp);
        theta = &theta * &det_poly_matrix(&g.matrix(&arrows), cap)?;
    }
    Ok(theta)
}

/// `y_s = Σ_{t≤s} μ(t,s) x_t` for every `s`.
pub fn mobius_substitution(s: &Semigroup, mode: OrderMode) -> Result<HashMap<Var, LinForm>> {
    let p = natural_order(s, mode)?;
    let mu = mobius(&p);
    Ok((0..s.len())
        .map(|a| {
            let mut y = LinForm::new();
            for b in p.below(a) {
                y.add_term(b as Var, CycNum::from_int(mu[b][a]));
            }
            (a as Var, y)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct InverseDeterminant {
    /// `θ_𝒢(Y)`, which equals `θ_S(X)`.
    pub theta: Poly,
    pub groupoid_theta: Poly,
    /// `y_s` by element.
    pub substitution: Vec<LinForm>,
    pub structure: GroupoidStructure,
    /// Whether `θ_S` was also expanded directly and compared.
    pub checked_directly: bool,
}

pub fn inverse_determinant(s: &Semigroup, cap: usize) -> Result<InverseDeterminant> {
    let star = require_inverse(s)?;
    let g = groupoid_of(s, &star);
    let groupoid_theta = groupoid_determinant(&g, cap)?;
    let sub = mobius_substitution(s, OrderMode::Inverse)?;
    let theta = groupoid_theta.substitute_linear(&sub)?;
    let checked_directly = s.len() <= cap;
    if checked_directly && theta != paratrophic_determinant(s, Mode::Plain, cap)? {
        return Err(Error::VerificationFailed("θ_𝒢(Y) differs from the semigroup determinant".into()));
    }
    Ok(InverseDeterminant {
        theta,
        groupoid_theta,
        substitution: (0..s.len()).map(|a| sub[&(a as Var)].clone()).collect(),
        structure: g.structure(),
        checked_directly,
    })
}

/// Factors the determinant of a Clifford semigroup. Maximal subgroups that
/// are not abelian need representations in `reps`, keyed by their idempotent
/// and indexed over `s.restrict(G_e)` (the subgroup's elements ascending).
pub fn factor_clifford(s: &Semigroup, reps: &HashMap<usize, Vec<RepMatrix>>, cfg: &VerifyConfig) -> Result<Factorization> {
    require_inverse(s)?;
    if let Some(&e) = s.idempotents().iter().find(|&&e| (0..s.len()).any(|t| s.mul(e, t) != s.mul(t, e))) {
        return Err(Error::NotClifford(format!("idempotent {} is not central", s.label(e))));
    }
    let sub = mobius_substitution(s, OrderMode::Inverse)?;
    let mut sign = 1;
    let mut factors = Vec::new();
    let mut linear = true;
    for e in s.idempotents() {
        let group = s.maximal_subgroup(e)?;
        let inverses: Vec<usize> = group
            .iter()
            .map(|&g| group.iter().position(|&h| s.mul(g, h) == e).expect("maximal subgroups are groups"))
            .collect();
        sign *= permutation_sign(&inverses);
        match character_group_of(s, &group, e) {
            Ok(chars) => {
                for chi in chars {
                    let mut form = LinForm::new();
                    for &g in &group {
                        form.add_scaled(&sub[&(g as Var)], &chi.value(g));
                    }
                    factors.push(Factor::linear(form, 1));
                }
            }
            Err(Error::NotAbelian(..)) => {
                let rs = reps.get(&e).ok_or(Error::NonabelianWithoutReps(e))?;
                let sub_group = s.restrict(&group)?;
                validate_reps(&sub_group, rs)?;
                let local: HashMap<Var, LinForm> = group.iter().enumerate().map(|(i, &g)| (i as Var, sub[&(g as Var)].clone())).collect();
                for r in rs {
                    let p = r.group_matrix_determinant(cfg.cap)?.substitute_linear(&local)?;
                    factors.push(Factor::new(p, r.dim() as u32));
                }
                linear = false;
            }
            Err(other) => return Err(other),
        }
    }
    if linear {
        check_distinct(&factors)?;
    }
    let f = Factorization::factored(CycNum::from_int(sign), factors, "clifford");
    let predicted = f.constant.clone();
    settle(&cayley_matrix(s, Mode::Plain)?, f, Some(predicted), cfg)
}

/// Linear factors must be pairwise non-proportional.
fn check_distinct(factors: &[Factor]) -> Result<()> {
    let mut seen: Vec<LinForm> = Vec::new();
    for f in factors {
        let Some((_, monic)) = f.as_linear().and_then(|l| l.normalize()) else {
            return Err(Error::VerificationFailed(format!("factor {} is not linear", f.poly)));
        };
        if seen.contains(&monic) {
            return Err(Error::VerificationFailed(format!("repeated linear factor {}", f.poly)));
        }
        seen.push(monic);
    }
    Ok(())
}
