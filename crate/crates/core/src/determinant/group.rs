//! Group determinants factored through representations.
//!
//! With columns reordered by `t ↦ t⁻¹`, the Cayley matrix becomes the group
//! matrix `(x_{st⁻¹})`, whose determinant is `∏_k det[Σ_g ρ_k(g) x_g]^{d_k}`
//! over the irreducible representations. The sign of the column permutation
//! gives a closed-form constant, which is checked against the computed one.

use crate::algebra::characters::character_group;
use crate::algebra::cyclotomic::CycNum;
use crate::algebra::det::det_poly_matrix;
use crate::algebra::linalg::{identity_cyc, mat_mul_cyc};
use crate::algebra::poly::{LinForm, Monomial, Poly, Var};
use crate::determinant::factorization::{settle, Factor, Factorization, VerifyConfig};
use crate::determinant::paratrophic::{cayley_matrix, Mode};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// A matrix representation of a group, indexed by element.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    dim: usize,
    images: Vec<Vec<Vec<CycNum>>>,
}

impl RepMatrix {
    /// Checks shapes, `ρ(1) = I` and `ρ(g)ρ(h) = ρ(gh)`.
    pub fn new(g: &Semigroup, images: Vec<Vec<Vec<CycNum>>>) -> Result<Self> {
        let e = g.identity().ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        if images.len() != g.len() {
            return Err(Error::RepDimensionMismatch(format!("{} images for a group of order {}", images.len(), g.len())));
        }
        let dim = images[0].len();
        for (x, m) in images.iter().enumerate() {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(Error::RepDimensionMismatch(format!("image of {} is not {dim}×{dim}", g.label(x))));
            }
        }
        if images[e] != identity_cyc(dim) {
            return Err(Error::NotMultiplicative("the identity does not map to the identity matrix".into()));
        }
        for a in 0..g.len() {
            for b in 0..g.len() {
                if mat_mul_cyc(&images[a], &images[b]) != images[g.mul(a, b)] {
                    return Err(Error::NotMultiplicative(format!("ρ({})ρ({}) ≠ ρ({})", g.label(a), g.label(b), g.label(g.mul(a, b)))));
                }
            }
        }
        Ok(Self { dim, images })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, g: usize) -> &[Vec<CycNum>] {
        &self.images[g]
    }

    pub fn character(&self) -> Vec<CycNum> {
        self.images.iter().map(|m| (0..self.dim).fold(CycNum::zero(1), |acc, i| &acc + &m[i][i])).collect()
    }

    /// `det[Σ_g ρ_ij(g) x_g]`, with variable `x_g` for element `g`.
    pub fn group_matrix_determinant(&self, cap: usize) -> Result<Poly> {
        let m: Vec<Vec<Poly>> = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| Poly::from_terms(self.images.iter().enumerate().map(|(g, im)| (Monomial::var(g as Var), im[i][j].clone()))))
                    .collect()
            })
            .collect();
        det_poly_matrix(&m, cap)
    }
}

/// The representation of `S_n` on `{v : Σ v_i = 0}` with basis
/// `e_i − e_{i+1}`, for a group whose elements are the permutations `perms`
/// (image lists, composed as functions).
pub fn standard_representation(g: &Semigroup, perms: &[Vec<usize>]) -> Result<RepMatrix> {
    let n = perms.first().map_or(0, Vec::len);
    let d = n.saturating_sub(1);
    // e_a − e_b in the basis v_k = e_k − e_{k+1}
    let diff = |a: usize, b: usize| {
        let mut col = vec![CycNum::zero(1); d];
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        for c in col.iter_mut().take(hi).skip(lo) {
            *c = CycNum::from_int(sign);
        }
        col
    };
    let images = perms
        .iter()
        .map(|p| {
            let cols: Vec<Vec<CycNum>> = (0..d).map(|i| diff(p[i], p[i + 1])).collect();
            (0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect()
        })
        .collect();
    RepMatrix::new(g, images)
}

/// The sign character of a permutation group.
pub fn sign_representation(g: &Semigroup, perms: &[Vec<usize>]) -> Result<RepMatrix> {
    let images = perms.iter().map(|p| vec![vec![CycNum::from_int(permutation_sign(p))]]).collect();
    RepMatrix::new(g, images)
}

pub fn trivial_representation(g: &Semigroup) -> Result<RepMatrix> {
    RepMatrix::new(g, vec![vec![vec![CycNum::one()]]; g.len()])
}

pub fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug)]
pub enum GroupReps {
    /// Abelian group; characters are computed.
    AbelianAuto,
    Supplied(Vec<RepMatrix>),
}

fn inverses(g: &Semigroup, e: usize) -> Result<Vec<usize>> {
    (0..g.len())
        .map(|a| (0..g.len()).find(|&b| g.mul(a, b) == e).ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", g.label(a)))))
        .collect()
}

/// Checks that the supplied representations are pairwise inequivalent
/// irreducibles filling the regular representation.
pub fn validate_reps(g: &Semigroup, reps: &[RepMatrix]) -> Result<()> {
    let total: usize = reps.iter().map(|r| r.dim * r.dim).sum();
    if total != g.len() {
        return Err(Error::RepDimensionMismatch(format!("squared dimensions sum to {total}, not |G| = {}", g.len())));
    }
    let chars: Vec<Vec<CycNum>> = reps.iter().map(RepMatrix::character).collect();
    let order = CycNum::from_int(g.len() as i64);
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            let sum = a.iter().zip(b).fold(CycNum::zero(1), |acc, (x, y)| &acc + &(x * &y.conj()));
            let want = if i == j { order.clone() } else { CycNum::zero(1) };
            if sum != want {
                return Err(Error::VerificationFailed(format!(
                    "representations {} and {} are not inequivalent irreducibles",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

pub fn factor_group_determinant(g: &Semigroup, reps: &GroupReps, cfg: &VerifyConfig) -> Result<Factorization> {
    if !g.is_group() {
        return Err(Error::NotAGroup("not every element is invertible".into()));
    }
    let e = g.identity().expect("groups have identities");
    let inv = inverses(g, e)?;
    let sign = permutation_sign(&inv);
    let (factors, provenance) = match reps {
        GroupReps::AbelianAuto => {
            if !g.is_commutative() {
                return Err(Error::NotAbelianWithoutReps);
            }
            let factors = character_group(g)?
                .iter()
                .map(|chi| {
                    let mut form = LinForm::new();
                    for x in 0..g.len() {
                        form.add_term(x as Var, chi.value(x));
                    }
                    Factor::linear(form, 1)
                })
                .collect();
            (factors, "dedekind")
        }
        GroupReps::Supplied(reps) => {
            validate_reps(g, reps)?;
            let factors = reps
                .iter()
                .map(|r| Ok(Factor::new(r.group_matrix_determinant(cfg.cap)?, r.dim as u32)))
                .collect::<Result<Vec<_>>>()?;
            (factors, "frobenius-group")
        }
    };
    let f = Factorization::factored(CycNum::from_int(sign), factors, provenance);
    let predicted = f.constant.clone();
    let f = settle(&cayley_matrix(g, Mode::Plain)?, f, Some(predicted), cfg)?;
    if !f.constant.is_rational() {
        return Err(Error::VerificationFailed(format!("group determinant constant {} is not rational", f.constant)));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::parse_index_var;
    use crate::semigroup::families;

    #[test]
    fn z2_dedekind() {
        let f = factor_group_determinant(&families::zmod_add(2).unwrap(), &GroupReps::AbelianAuto, &VerifyConfig::default()).unwrap();
        assert!(f.constant.is_one());
        let shown: Vec<String> = f.factors.iter().map(|f| f.poly.to_string()).collect();
        assert_eq!(shown, vec!["x0+x1", "x0-x1"]);
        assert_eq!(f.expand(), Poly::parse("x0^2-x1^2", 1, &parse_index_var).unwrap());
    }

    #[test]
    fn z3_factors_have_cube_roots() {
        let f = factor_group_determinant(&families::zmod_add(3).unwrap(), &GroupReps::AbelianAuto, &VerifyConfig::default()).unwrap();
        assert_eq!(f.factors.len(), 3);
        let w = CycNum::root_of_unity(3, 1);
        let second = f.factors[1].as_linear().unwrap();
        assert_eq!(second.get(1), Some(&w));
        assert_eq!(second.get(2), Some(&(&w * &w)));
    }

    #[test]
    fn s3_with_supplied_reps() {
        let g = families::symmetric(3).unwrap();
        let perms = families::permutations(3);
        let reps = vec![
            trivial_representation(&g).unwrap(),
            sign_representation(&g, &perms).unwrap(),
            standard_representation(&g, &perms).unwrap(),
        ];
        let f = factor_group_determinant(&g, &GroupReps::Supplied(reps), &VerifyConfig::default()).unwrap();
        let mults: Vec<u32> = f.factors.iter().map(|f| f.multiplicity).collect();
        assert_eq!(mults, vec![1, 1, 2]);
        assert_eq!(f.factors[2].poly.degree(), Some(2));
        assert!(matches!(
            factor_group_determinant(&g, &GroupReps::AbelianAuto, &VerifyConfig::default()),
            Err(Error::NotAbelianWithoutReps)
        ));
    }

    #[test]
    fn bad_reps_are_rejected() {
        let g = families::symmetric(3).unwrap();
        let perms = families::permutations(3);
        let twice = vec![trivial_representation(&g).unwrap(); 2];
        assert!(matches!(validate_reps(&g, &twice), Err(Error::RepDimensionMismatch(_))));
        let mut images: Vec<Vec<Vec<CycNum>>> = vec![vec![vec![CycNum::one()]]; 6];
        images[1] = vec![vec![CycNum::from_int(2)]];
        assert!(matches!(RepMatrix::new(&g, images), Err(Error::NotMultiplicative(_))));
        let std = standard_representation(&g, &perms).unwrap();
        let dup = vec![std.clone(), trivial_representation(&g).unwrap(), trivial_representation(&g).unwrap()];
        assert!(validate_reps(&g, &dup).is_err());
    }
}
