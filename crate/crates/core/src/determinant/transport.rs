//! Moving a paratrophic determinant along a change of basis.
//!
//! If `f: A → A'` is an isomorphism with matrix `P` (rows indexed by the basis
//! `B'` of `A'`, columns by `B`), then `θ_(A,B) = det(P)² f̃⁻¹(θ_(A',B'))`, where
//! `f̃⁻¹(x_{b'}) = Σ_b (P⁻¹)_{b,b'} x_b`.

use std::collections::HashMap;

use crate::algebra::cyclotomic::CycNum;
use crate::algebra::linalg::{det_cyc, inverse_cyc};
use crate::algebra::poly::{LinForm, Poly, Var};
use crate::error::{Error, Result};

pub fn transport_basis(theta_prime: &Poly, p: &[Vec<CycNum>]) -> Result<Poly> {
    let n = p.len();
    if p.iter().any(|row| row.len() != n) {
        return Err(Error::TableShape { expected: n, got: p.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0) });
    }
    let q = inverse_cyc(p).ok_or(Error::SingularP)?;
    let det = det_cyc(p);
    let mut sub: HashMap<Var, LinForm> = HashMap::new();
    for bp in 0..n {
        let mut form = LinForm::new();
        for (b, row) in q.iter().enumerate() {
            form.add_term(b as Var, row[bp].clone());
        }
        sub.insert(bp as Var, form);
    }
    Ok(theta_prime.substitute_linear(&sub)?.scale(&(&det * &det)))
}
