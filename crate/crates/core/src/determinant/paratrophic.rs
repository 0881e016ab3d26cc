//! Based algebras and their paratrophic matrices.
//!
//! For an algebra with basis `b_0..b_{n-1}` and products
//! `b_i b_j = Σ_k c_{k,i,j} b_k`, the paratrophic matrix has `(i, j)` entry
//! `Σ_k c_{k,i,j} x_{var(k)}`. Semigroup (Cayley) matrices, contracted and
//! twisted variants, and groupoid matrices are all instances.

use num_bigint::BigInt;

use crate::algebra::cyclotomic::CycNum;
use crate::algebra::det::det_poly_matrix;
use crate::algebra::linalg::det_cyc;
use crate::algebra::poly::{Monomial, Poly, Var};
use crate::determinant::factorization::Reference;
use crate::error::{Error, Result};
use crate::nilpotent::Cocycle;
use crate::semigroup::Semigroup;

#[derive(Clone, Copy, Debug)]
pub enum Mode<'a> {
    /// Entry `(s, t)` is `x_{st}`.
    Plain,
    /// Basis `S ∖ {z}`; entry `x_{st}` if `st ≠ z`, else 0.
    Contracted,
    /// Contracted, scaled by a cocycle: `c(s,t) x_{st}`.
    Twisted(&'a Cocycle),
}

impl Mode<'_> {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Plain => "plain",
            Mode::Contracted => "contracted",
            Mode::Twisted(_) => "twisted",
        }
    }
}

/// Sparse linear form used as a matrix entry.
pub type Entry = Vec<(Var, CycNum)>;

/// A finite-dimensional algebra with a distinguished basis.
#[derive(Clone, Debug)]
pub struct BasedAlgebra {
    /// Variable attached to each basis element.
    vars: Vec<Var>,
    universe: usize,
    /// `products[i][j]` lists `(k, c_{k,i,j})`.
    products: Vec<Vec<Vec<(usize, CycNum)>>>,
}

impl BasedAlgebra {
    pub fn new(vars: Vec<Var>, universe: usize, products: Vec<Vec<Vec<(usize, CycNum)>>>) -> Self {
        Self { vars, universe, products }
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn from_semigroup(s: &Semigroup, mode: Mode) -> Result<Self> {
        let n = s.len();
        match mode {
            Mode::Plain => {
                let products = (0..n).map(|a| (0..n).map(|b| vec![(s.mul(a, b), CycNum::one())]).collect()).collect();
                Ok(Self::new((0..n as Var).collect(), n, products))
            }
            Mode::Contracted | Mode::Twisted(_) => {
                let z = s.zero().ok_or(Error::NoZero)?;
                if let Mode::Twisted(c) = mode {
                    c.check_domain(s)?;
                }
                let basis: Vec<usize> = (0..n).filter(|&a| a != z).collect();
                let pos = |x: usize| basis.iter().position(|&b| b == x).expect("nonzero element");
                let products = basis
                    .iter()
                    .map(|&a| {
                        basis
                            .iter()
                            .map(|&b| {
                                let ab = s.mul(a, b);
                                if ab == z {
                                    return vec![];
                                }
                                let coef = match mode {
                                    Mode::Twisted(c) => c.get(a, b).cloned().unwrap_or_else(CycNum::one),
                                    _ => CycNum::one(),
                                };
                                vec![(pos(ab), coef)]
                            })
                            .collect()
                    })
                    .collect();
                Ok(Self::new(basis.iter().map(|&b| b as Var).collect(), n, products))
            }
        }
    }

    /// The `n × n` matrix units `E_ij` (index `i*n + j`), `E_ij E_kl = δ_jk E_il`.
    pub fn matrix_units(n: usize) -> Self {
        let dim = n * n;
        let products = (0..dim)
            .map(|a| {
                let (i, j) = (a / n, a % n);
                (0..dim)
                    .map(|b| {
                        let (k, l) = (b / n, b % n);
                        if j == k {
                            vec![(i * n + l, CycNum::one())]
                        } else {
                            vec![]
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new((0..dim as Var).collect(), dim, products)
    }

    /// Direct product: bases are concatenated, cross products vanish, and the
    /// second algebra's variables are shifted past the first universe.
    pub fn direct_product(&self, other: &Self) -> Self {
        let d1 = self.dim();
        let d = d1 + other.dim();
        let mut products = vec![vec![vec![]; d]; d];
        for i in 0..d1 {
            for j in 0..d1 {
                products[i][j] = self.products[i][j].clone();
            }
        }
        for i in 0..other.dim() {
            for j in 0..other.dim() {
                products[d1 + i][d1 + j] = other.products[i][j].iter().map(|(k, c)| (d1 + k, c.clone())).collect();
            }
        }
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().map(|&v| v + self.universe as Var));
        Self::new(vars, self.universe + other.universe, products)
    }

    /// Re-expresses the algebra in the basis `b'_j = Σ_i P_{i,j} b_i`
    /// (columns of `p`); new variables are `0..dim`.
    pub fn change_basis(&self, p: &[Vec<CycNum>]) -> Result<Self> {
        let n = self.dim();
        let q = crate::algebra::linalg::inverse_cyc(p).ok_or(Error::SingularP)?;
        // b'_a b'_b = Σ_{i,j} P_ia P_jb b_i b_j = Σ_k (Σ_{i,j} P_ia P_jb c_{k,i,j}) b_k, then b_k = Σ_m Q_mk b'_m.
        let mut products = vec![vec![vec![]; n]; n];
        for a in 0..n {
            for b in 0..n {
                let mut coeffs = vec![CycNum::zero(1); n];
                for i in 0..n {
                    if p[i][a].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if p[j][b].is_zero() {
                            continue;
                        }
                        let w = &p[i][a] * &p[j][b];
                        for (k, c) in &self.products[i][j] {
                            coeffs[*k] = &coeffs[*k] + &(&w * c);
                        }
                    }
                }
                let mut out = Vec::new();
                for m in 0..n {
                    let mut v = CycNum::zero(1);
                    for k in 0..n {
                        if !coeffs[k].is_zero() && !q[m][k].is_zero() {
                            v = &v + &(&q[m][k] * &coeffs[k]);
                        }
                    }
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                }
                products[a][b] = out;
            }
        }
        Ok(Self::new((0..n as Var).collect(), n, products))
    }

    pub fn paratrophic_matrix(&self, label: &'static str) -> ParatrophicMatrix {
        let entries = self
            .products
            .iter()
            .map(|row| row.iter().map(|cell| cell.iter().map(|(k, c)| (self.vars[*k], c.clone())).collect()).collect())
            .collect();
        ParatrophicMatrix { basis: self.vars.iter().map(|&v| v as usize).collect(), universe: self.universe, entries, mode: label }
    }
}

/// A paratrophic matrix whose entries are linear forms.
#[derive(Clone, Debug)]
pub struct ParatrophicMatrix {
    /// Element (or basis) label of each row and column.
    pub basis: Vec<usize>,
    pub universe: usize,
    pub entries: Vec<Vec<Entry>>,
    pub mode: &'static str,
}

impl ParatrophicMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_poly_matrix(&self) -> Vec<Vec<Poly>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| Poly::from_terms(e.iter().map(|(v, c)| (Monomial::var(*v), c.clone())))).collect())
            .collect()
    }

    /// Exact symbolic determinant; nonzero results are checked to be homogeneous of degree `dim`.
    pub fn determinant(&self, cap: usize) -> Result<Poly> {
        let d = det_poly_matrix(&self.to_poly_matrix(), cap)?;
        if !d.is_zero() && (!d.is_homogeneous() || d.degree() != Some(self.dim() as u32)) {
            return Err(Error::VerificationFailed(format!("determinant is not homogeneous of degree {}", self.dim())));
        }
        Ok(d)
    }

    pub fn eval(&self, point: &[CycNum]) -> Vec<Vec<CycNum>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.iter().fold(CycNum::zero(1), |acc, (v, c)| &acc + &(c * &point[*v as usize])))
                    .collect()
            })
            .collect()
    }

    pub fn numeric_det(&self, point: &[CycNum]) -> CycNum {
        det_cyc(&self.eval(point))
    }
}

impl Reference for ParatrophicMatrix {
    fn universe(&self) -> usize {
        self.universe
    }
    fn dim(&self) -> usize {
        ParatrophicMatrix::dim(self)
    }
    fn symbolic(&self, cap: usize) -> Result<Poly> {
        self.determinant(cap)
    }
    fn numeric(&self, point: &[BigInt]) -> CycNum {
        let pt: Vec<CycNum> = point.iter().map(|v| CycNum::from_bigint(v.clone())).collect();
        self.numeric_det(&pt)
    }
}

pub fn cayley_matrix(s: &Semigroup, mode: Mode) -> Result<ParatrophicMatrix> {
    Ok(BasedAlgebra::from_semigroup(s, mode)?.paratrophic_matrix(mode.name()))
}

/// The (plain, contracted or twisted) semigroup determinant.
pub fn paratrophic_determinant(s: &Semigroup, mode: Mode, cap: usize) -> Result<Poly> {
    cayley_matrix(s, mode)?.determinant(cap)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BacknforthReport {
    pub theta: Poly,
    pub contracted: Poly,
    /// `x_z · θ̃(x_s − x_z)`.
    pub transported: Poly,
    pub holds: bool,
}

/// Compares `θ_S(X)` with `x_z θ̃_S(Y)`, `y_s = x_s − x_z`.
pub fn backnforth_check(s: &Semigroup, cap: usize) -> Result<BacknforthReport> {
    let z = s.zero().ok_or(Error::NoZero)?;
    let theta = paratrophic_determinant(s, Mode::Plain, cap)?;
    let contracted = paratrophic_determinant(s, Mode::Contracted, cap)?;
    let sub: std::collections::HashMap<Var, Poly> = (0..s.len())
        .filter(|&a| a != z)
        .map(|a| (a as Var, &Poly::var(a as Var) - &Poly::var(z as Var)))
        .collect();
    let transported = &Poly::var(z as Var) * &contracted.substitute(&sub);
    let holds = transported == theta;
    Ok(BacknforthReport { theta, contracted, transported, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::parse_index_var;
    use crate::semigroup::families;

    fn p(s: &str) -> Poly {
        Poly::parse(s, 1, &parse_index_var).unwrap()
    }

    #[test]
    fn cayley_matrices() {
        let triv = Semigroup::from_table(vec![vec![0]]).unwrap();
        assert_eq!(cayley_matrix(&triv, Mode::Plain).unwrap().to_poly_matrix(), vec![vec![p("x0")]]);
        let z2 = families::zmod_add(2).unwrap();
        assert_eq!(
            cayley_matrix(&z2, Mode::Plain).unwrap().to_poly_matrix(),
            vec![vec![p("x0"), p("x1")], vec![p("x1"), p("x0")]]
        );
        let chain = families::chain_semilattice(2).unwrap();
        assert_eq!(cayley_matrix(&chain, Mode::Contracted).unwrap().to_poly_matrix(), vec![vec![p("x1")]]);
        assert!(matches!(cayley_matrix(&z2, Mode::Contracted), Err(Error::NoZero)));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(paratrophic_determinant(&families::zmod_add(2).unwrap(), Mode::Plain, 12).unwrap(), p("x0^2-x1^2"));
        assert!(paratrophic_determinant(&families::left_zero(2).unwrap(), Mode::Plain, 12).unwrap().is_zero());
        // cyclic nilpotent k = 2: basis {I, a}, θ̃ = -x_a^2
        assert_eq!(paratrophic_determinant(&families::cyclic_nilpotent(2).unwrap(), Mode::Contracted, 12).unwrap(), p("-x1^2"));
    }

    #[test]
    fn backnforth_on_two_chain() {
        let r = backnforth_check(&families::chain_semilattice(2).unwrap(), 12).unwrap();
        assert!(r.holds);
        assert_eq!(r.theta, p("x0*x1-x0^2"));
    }

    #[test]
    fn matrix_units_determinant() {
        // (-1)^{C(n,2)} det[x_ij]^n
        let two = BasedAlgebra::matrix_units(2).paratrophic_matrix("units").determinant(12).unwrap();
        assert_eq!(two, p("x0*x3-x1*x2").pow(2).scale(&CycNum::from_int(-1)));
    }
}
