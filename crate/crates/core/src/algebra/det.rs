//! Exact determinants of polynomial matrices.
//!
//! Two algorithms are provided and cross-checked in tests:
//!
//! * [`det_cofactor`]: Laplace expansion row by row, memoized on the set of
//!   columns already used. Each of the `2^n` column subsets is expanded once,
//!   and every multiplication is by a single matrix entry, which for Cayley
//!   matrices is a single term.
//! * [`det_bareiss`]: fraction-free elimination with exact multivariate
//!   division at every step.

use std::collections::HashMap;

use rayon::prelude::*;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Default dimension cap for symbolic determinants.
pub const DEFAULT_CAP: usize = 12;

/// Largest dimension the subset expansion will attempt at all.
const SUBSET_LIMIT: usize = 24;

/// Determinant of a square polynomial matrix of dimension at most `cap`.
pub fn det_poly_matrix(m: &[Vec<Poly>], cap: usize) -> Result<Poly> {
    check_square(m)?;
    if m.len() > cap {
        return Err(Error::DimensionCap { dim: m.len(), cap });
    }
    det_cofactor(m)
}

fn check_square(m: &[Vec<Poly>]) -> Result<()> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::TableShape { expected: n, got: row.len() });
    }
    Ok(())
}

/// Memoized Laplace expansion over column subsets.
pub fn det_cofactor(m: &[Vec<Poly>]) -> Result<Poly> {
    check_square(m)?;
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    if n > SUBSET_LIMIT {
        return Err(Error::DimensionCap { dim: n, cap: SUBSET_LIMIT });
    }
    let mut layer: HashMap<u32, Poly> = HashMap::new();
    layer.insert(0, Poly::one());
    for (k, row) in m.iter().enumerate() {
        let entries: Vec<(usize, &Poly)> = row.iter().enumerate().filter(|(_, p)| !p.is_zero()).collect();
        let contributions: Vec<(u32, Poly)> = layer
            .par_iter()
            .flat_map_iter(|(&mask, d)| {
                entries.iter().filter(move |(j, _)| mask & (1 << j) == 0).map(move |&(j, e)| {
                    let pos = (mask & ((1u32 << j) - 1)).count_ones() as usize;
                    let term = e * d;
                    let term = if (k + pos) % 2 == 1 { -&term } else { term };
                    (mask | (1 << j), term)
                })
            })
            .collect();
        let mut grouped: HashMap<u32, Vec<Poly>> = HashMap::new();
        for (mask, p) in contributions {
            grouped.entry(mask).or_default().push(p);
        }
        layer = grouped
            .into_par_iter()
            .map(|(mask, ps)| (mask, Poly::sum(ps)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        if layer.is_empty() {
            return Ok(Poly::zero());
        }
    }
    Ok(layer.remove(&((1u32 << n) - 1)).unwrap_or_default())
}

/// Fraction-free Bareiss elimination; every division is asserted exact.
pub fn det_bareiss(m: &[Vec<Poly>]) -> Result<Poly> {
    check_square(m)?;
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly::zero()),
            }
        }
        let pivot = a[k][k].clone();
        let pivot_row = a[k].clone();
        let rows: Vec<(usize, Vec<Poly>)> = (k + 1..n)
            .into_par_iter()
            .map(|i| {
                let mut row = a[i].clone();
                let aik = row[k].clone();
                for j in k + 1..n {
                    let num = &(&pivot * &row[j]) - &(&aik * &pivot_row[j]);
                    row[j] = num.exact_div(&prev)?;
                }
                row[k] = Poly::zero();
                Ok((i, row))
            })
            .collect::<Result<_>>()?;
        for (i, row) in rows {
            a[i] = row;
        }
        prev = pivot;
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::CycNum;
    use crate::algebra::poly::{parse_index_var, Monomial};
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> Poly {
        Poly::parse(s, 1, &parse_index_var).unwrap()
    }

    /// Leibniz formula over all permutations, the independent oracle.
    fn leibniz(m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut acc = Vec::new();
        fn rec(k: usize, perm: &mut Vec<usize>, m: &[Vec<Poly>], acc: &mut Vec<Poly>) {
            let n = perm.len();
            if k == n {
                let mut inv = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inv += 1;
                        }
                    }
                }
                let mut t = Poly::one();
                for (i, &j) in perm.iter().enumerate() {
                    t = &t * &m[i][j];
                }
                acc.push(if inv % 2 == 1 { -&t } else { t });
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                rec(k + 1, perm, m, acc);
                perm.swap(k, i);
            }
        }
        rec(0, &mut perm, m, &mut acc);
        Poly::sum(acc)
    }

    #[test]
    fn small_examples() {
        assert_eq!(det_poly_matrix(&[vec![p("x0")]], 12).unwrap(), p("x0"));
        let m = vec![vec![p("x0"), p("x1")], vec![p("x1"), p("x0")]];
        assert_eq!(det_poly_matrix(&m, 12).unwrap(), p("x0^2-x1^2"));
        assert_eq!(det_bareiss(&m).unwrap(), p("x0^2-x1^2"));
        let eq = vec![vec![p("x0"), p("x1")], vec![p("x0"), p("x1")]];
        assert!(det_poly_matrix(&eq, 12).unwrap().is_zero());
        assert!(det_bareiss(&eq).unwrap().is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        let m: Vec<Vec<Poly>> = (0..3).map(|i| (0..3).map(|j| if i == j { Poly::one() } else { Poly::zero() }).collect()).collect();
        assert_eq!(det_poly_matrix(&m, 2), Err(Error::DimensionCap { dim: 3, cap: 2 }));
    }

    #[test]
    fn algorithms_agree_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            for _ in 0..6 {
                let m: Vec<Vec<Poly>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let terms = (0..rng.gen_range(0..3)).map(|_| {
                                    (Monomial::var(rng.gen_range(0..3)), CycNum::from_int(rng.gen_range(-3..=3)))
                                });
                                Poly::from_terms(terms)
                            })
                            .collect()
                    })
                    .collect();
                let oracle = leibniz(&m);
                assert_eq!(det_cofactor(&m).unwrap(), oracle);
                assert_eq!(det_bareiss(&m).unwrap(), oracle);
            }
        }
    }
}
