//! Chooses the factorization theorem that applies to a semigroup.

use std::collections::HashMap;

use frobdet_core::algebra::cyclotomic::CycNum;
use frobdet_core::algebra::det::det_poly_matrix;
use frobdet_core::algebra::poly::{LinForm, Var};
use frobdet_core::commutative::{factor_commutative, factor_local};
use frobdet_core::determinant::factorization::{settle, Factor, Factorization, Status, VerifyConfig};
use frobdet_core::determinant::frobenius::{frobenius_test, FrobeniusVerdict};
use frobdet_core::determinant::group::{factor_group_determinant, GroupReps};
use frobdet_core::determinant::paratrophic::{cayley_matrix, Mode};
use frobdet_core::inverse::{factor_clifford, groupoid_of, is_inverse, mobius_substitution, InverseVerdict};
use frobdet_core::nilpotent::{analyze_nilpotent, factor_nil_adjoined, Cocycle};
use frobdet_core::order::{factor_semilattice, OrderMode};
use frobdet_core::semigroup::Semigroup;
use frobdet_core::Error;

use crate::CliError;

pub enum Outcome {
    Factored(Factorization),
    /// No theorem applies; the staged vanishing test ran instead.
    Tested { verdict: FrobeniusVerdict, explanation: String },
}

pub fn factor(s: &Semigroup, contracted: bool, twist: Option<&Cocycle>, cfg: &VerifyConfig, seed: u64) -> Result<Outcome, CliError> {
    if let Some(c) = twist {
        analyze_nilpotent(s).map_err(|e| CliError::Domain(format!("--twist needs a nilpotent semigroup with identity adjoined: {e}")))?;
        return Ok(Outcome::Factored(factor_nil_adjoined(s, Some(c), cfg)?));
    }
    if contracted {
        if analyze_nilpotent(s).is_ok() {
            return Ok(Outcome::Factored(factor_nil_adjoined(s, None, cfg)?));
        }
        if s.is_commutative() {
            return Ok(Outcome::Factored(factor_local(s, cfg)?));
        }
        return Err(CliError::Domain(
            "contracted factorization needs a nilpotent semigroup with identity adjoined or a commutative local monoid".into(),
        ));
    }
    if s.is_semilattice() {
        let f = factor_semilattice(s)?;
        let predicted = f.constant.clone();
        return Ok(Outcome::Factored(settle(&cayley_matrix(s, Mode::Plain)?, f, Some(predicted), cfg)?));
    }
    if s.is_group() && s.is_commutative() {
        return Ok(Outcome::Factored(factor_group_determinant(s, &GroupReps::AbelianAuto, cfg)?));
    }
    if s.is_group() {
        let explanation = "nonabelian group: the factorization needs its irreducible representations".to_string();
        return Ok(Outcome::Tested { verdict: frobenius_test(s, cfg.cap, seed)?, explanation });
    }
    if let InverseVerdict::Yes { star } = is_inverse(s) {
        if s.has_central_idempotents() {
            match factor_clifford(s, &HashMap::new(), cfg) {
                Ok(f) => return Ok(Outcome::Factored(f)),
                Err(Error::NonabelianWithoutReps(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        return Ok(Outcome::Factored(factor_inverse(s, &star, cfg)?));
    }
    if analyze_nilpotent(s).is_ok() {
        return Ok(Outcome::Factored(factor_nil_plain(s, cfg)?));
    }
    if s.is_commutative() {
        return Ok(Outcome::Factored(factor_commutative(s, cfg)?));
    }
    let explanation = "no factorization theorem covers this table".to_string();
    Ok(Outcome::Tested { verdict: frobenius_test(s, cfg.cap, seed)?, explanation })
}

/// `θ_S = ∏_components det C(𝒢_c)(Y)`, one factor per connected component of the groupoid.
fn factor_inverse(s: &Semigroup, star: &[usize], cfg: &VerifyConfig) -> Result<Factorization, CliError> {
    let g = groupoid_of(s, star);
    let sub = mobius_substitution(s, OrderMode::Inverse)?;
    let structure = g.structure();
    let mut factors = Vec::new();
    let mut notes = Vec::new();
    for class in &structure.classes {
        let arrows = g.arrows_of(&class.objects);
        let block = det_poly_matrix(&g.matrix(&arrows), cfg.cap)?.substitute_linear(&sub)?;
        if block.is_zero() {
            return Err(CliError::Domain("a groupoid block determinant vanished".into()));
        }
        notes.push(format!(
            "block on {}: n = {}, |G| = {}, dimension {}",
            class.objects.iter().map(|&e| s.label(e)).collect::<Vec<_>>().join(","),
            class.size(),
            class.group.len(),
            class.block_dimension()
        ));
        factors.push(Factor::new(block, 1));
    }
    let mut f = Factorization::factored(CycNum::one(), factors, "inverse-groupoid");
    f.notes = notes;
    Ok(settle(&cayley_matrix(s, Mode::Plain)?, f, None, cfg)?)
}

/// The plain determinant of a nilpotent-adjoined monoid: `θ = x_z · θ̃(x_s − x_z)`
/// with `θ̃ = det A · x_{z'}^{|M|−1}`.
fn factor_nil_plain(m: &Semigroup, cfg: &VerifyConfig) -> Result<Factorization, CliError> {
    let inner = factor_nil_adjoined(m, None, cfg)?;
    let z = m.zero().expect("nilpotent monoids have a zero");
    let mut f = if inner.status == Status::Zero {
        let mut f = Factorization::zero("nilpotent-annihilator", inner.zero_reason.clone().unwrap_or_default());
        f.notes = inner.notes.clone();
        f
    } else {
        let zp = inner.factors[0].poly.vars()[0];
        let mut shifted = LinForm::var(zp);
        shifted.add_term(z as Var, CycNum::from_int(-1));
        let mut f = Factorization::factored(
            inner.constant.clone(),
            vec![Factor::linear(LinForm::var(z as Var), 1), Factor::linear(shifted, inner.factors[0].multiplicity)],
            "nilpotent-annihilator",
        );
        f.notes = inner.notes.clone();
        f
    };
    let predicted = (!f.is_zero()).then(|| f.constant.clone());
    f = settle(&cayley_matrix(m, Mode::Plain)?, f, predicted, cfg)?;
    Ok(f)
}
