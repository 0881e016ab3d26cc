//! Dense exact linear algebra over the integers and cyclotomic fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// Bareiss determinant of an integer matrix.
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinant over a cyclotomic field.
///
/// Integer matrices take the Bareiss route; otherwise Gaussian elimination
/// with exact field inverses.
pub fn det_cyc(m: &[Vec<CycNum>]) -> CycNum {
    let n = m.len();
    if n == 0 {
        return CycNum::one();
    }
    if let Some(int) = m.iter().map(|r| r.iter().map(CycNum::to_integer).collect::<Option<Vec<_>>>()).collect::<Option<Vec<_>>>() {
        return CycNum::from_bigint(det_bigint(&int));
    }
    let mut a = m.to_vec();
    let mut det = CycNum::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return CycNum::zero(1);
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let inv = a[k][k].inv().expect("nonzero pivot");
        det = &det * &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    det
}

/// Inverse over a cyclotomic field, `None` when singular.
pub fn inverse_cyc(m: &[Vec<CycNum>]) -> Option<Vec<Vec<CycNum>>> {
    let n = m.len();
    let mut a: Vec<Vec<CycNum>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| CycNum::from_int((i == j) as i64)));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(p, k);
        let inv = a[k][k].inv()?;
        for v in a[k].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..2 * n {
                let t = &f * &a[k][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul_cyc(a: &[Vec<CycNum>], b: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = CycNum::zero(1);
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn identity_cyc(n: usize) -> Vec<Vec<CycNum>> {
    (0..n).map(|i| (0..n).map(|j| CycNum::from_int((i == j) as i64)).collect()).collect()
}

/// Inverse of an integer matrix that is unitriangular along `order`.
///
/// `order` lists the row/column indices so that `z[order[i]][order[j]]` is 0
/// for `i > j` and 1 for `i == j`. Back-substitution in that order with
/// checked arithmetic.
pub fn unitriangular_inverse(z: &[Vec<i64>], order: &[usize]) -> Result<Vec<Vec<i64>>> {
    let n = z.len();
    let mut seen = vec![false; n];
    if order.len() != n || z.iter().any(|r| r.len() != n) {
        return Err(Error::NotUnitriangular);
    }
    for &o in order {
        if o >= n || std::mem::replace(&mut seen[o], true) {
            return Err(Error::NotUnitriangular);
        }
    }
    for i in 0..n {
        if z[order[i]][order[i]] != 1 {
            return Err(Error::NotUnitriangular);
        }
        for j in 0..i {
            if z[order[i]][order[j]] != 0 {
                return Err(Error::NotUnitriangular);
            }
        }
    }
    // Solve Z * W = I column by column, bottom-up in the given order.
    let mut w = vec![vec![0i64; n]; n];
    for col in 0..n {
        for i in (0..n).rev() {
            let r = order[i];
            let mut acc: i64 = if r == col { 1 } else { 0 };
            for &c in &order[i + 1..] {
                let t = z[r][c].checked_mul(w[c][col]).ok_or(Error::Overflow("unitriangular inverse"))?;
                acc = acc.checked_sub(t).ok_or(Error::Overflow("unitriangular inverse"))?;
            }
            w[r][col] = acc;
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(det_bigint(&bi(&[&[1, 1, 1], &[1, 2, 1], &[1, 1, 3]])), BigInt::from(2));
        assert_eq!(det_bigint(&bi(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bigint(&bi(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn cyclotomic_determinant_and_inverse() {
        let w = CycNum::root_of_unity(3, 1);
        let one = CycNum::one();
        let m = vec![vec![one.clone(), one.clone()], vec![one.clone(), w.clone()]];
        assert_eq!(det_cyc(&m), &w - &one);
        let inv = inverse_cyc(&m).unwrap();
        assert_eq!(mat_mul_cyc(&m, &inv), identity_cyc(2));
        let sing = vec![vec![w.clone(), w.clone()], vec![one.clone(), one.clone()]];
        assert!(inverse_cyc(&sing).is_none());
        assert!(det_cyc(&sing).is_zero());
    }

    #[test]
    fn unitriangular_examples() {
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(unitriangular_inverse(&id, &[0, 1]).unwrap(), id);
        assert_eq!(unitriangular_inverse(&[vec![1, 1], vec![0, 1]], &[0, 1]).unwrap(), vec![vec![1, -1], vec![0, 1]]);
        // zeta of the 3-chain 0 < 1 < 2
        let zeta = vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]];
        let mu = unitriangular_inverse(&zeta, &[0, 1, 2]).unwrap();
        assert_eq!(mu, vec![vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 1]]);
        // same poset listed top first, order given explicitly
        let zeta_rev = vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]];
        let mu_rev = unitriangular_inverse(&zeta_rev, &[2, 1, 0]).unwrap();
        assert_eq!(mu_rev, vec![vec![1, 0, 0], vec![-1, 1, 0], vec![0, -1, 1]]);
        assert_eq!(unitriangular_inverse(&zeta_rev, &[0, 1, 2]), Err(Error::NotUnitriangular));
    }
}
