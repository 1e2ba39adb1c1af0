//! Integer matrices of prime power order: companions of cyclotomic
//! polynomials, which realise the smallest lattice automorphisms of order
//! `p^a`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldPrime;

/// Square integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

fn check_prime_power(p: u32, a: u32) -> Result<u64> {
    FieldPrime::new(p)?;
    if a == 0 {
        return Err(Error::InvalidParams("exponent a must be at least 1".into()));
    }
    u64::from(p)
        .checked_pow(a)
        .ok_or_else(|| Error::InvalidParams(format!("{p}^{a} overflows")))
}

/// Euler phi of `p^a`.
pub fn min_torus_dim_for_order(p: u32, a: u32) -> Result<u64> {
    let q = check_prime_power(p, a)?;
    Ok(q / u64::from(p) * u64::from(p - 1))
}

/// Companion matrix of `Phi_{p^a}(x) = sum_{i<p} x^{i p^(a-1)}`: ones on the
/// subdiagonal, minus the low coefficients in the last column.
pub fn cyclotomic_companion(p: u32, a: u32) -> Result<IntMatrix> {
    let n = usize::try_from(min_torus_dim_for_order(p, a)?)
        .map_err(|_| Error::InvalidParams("dimension too large".into()))?;
    if n > 4096 {
        return Err(Error::InvalidParams(format!("companion of size {n} is too large")));
    }
    let step = n / (p as usize - 1);
    let mut m = vec![vec![0i64; n]; n];
    for i in 1..n {
        m[i][i - 1] = 1;
    }
    for k in (0..n).step_by(step) {
        m[k][n - 1] = -1;
    }
    Ok(m)
}

fn mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for (k, &x) in a[i].iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let t = x
                    .checked_mul(b[k][j])
                    .and_then(|t| t.checked_add(c[i][j]))
                    .ok_or_else(|| Error::InvalidParams("integer overflow in matrix power".into()))?;
                c[i][j] = t;
            }
        }
    }
    Ok(c)
}

fn is_identity(m: &IntMatrix) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
}

/// Least `k <= cap` with `m^k = 1`, `None` if there is none. Overflow of the
/// entries is reported as an error.
pub fn integer_matrix_order(m: &IntMatrix, cap: u64) -> Result<Option<u64>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("order of a non-square integer matrix".into()));
    }
    let mut power = m.clone();
    for k in 1..=cap {
        if is_identity(&power) {
            return Ok(Some(k));
        }
        power = mul(&power, m)?;
    }
    Ok(None)
}

/// A companion matrix together with its measured order and the lower bound on
/// the rank of a torus admitting an automorphism of order `p^a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    pub p: u32,
    pub a: u32,
    pub matrix: IntMatrix,
    pub order: u64,
    pub bound: u64,
}

pub fn order_witness(p: u32, a: u32) -> Result<OrderWitness> {
    let matrix = cyclotomic_companion(p, a)?;
    let target = check_prime_power(p, a)?;
    let order = integer_matrix_order(&matrix, target)?.ok_or_else(|| Error::SearchExhausted {
        what: format!("order of the companion of Phi_{target}"),
        cap: target,
    })?;
    Ok(OrderWitness {
        p,
        a,
        bound: min_torus_dim_for_order(p, a)?,
        matrix,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let m = cyclotomic_companion(2, 3).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m[0][3], -1);
        assert_eq!(m[3][3], 0);
        assert_eq!(integer_matrix_order(&m, 100).unwrap(), Some(8));
        assert_eq!(min_torus_dim_for_order(2, 3).unwrap(), 4);

        let m = cyclotomic_companion(3, 2).unwrap();
        assert_eq!(m.len(), 6);
        assert_eq!(integer_matrix_order(&m, 100).unwrap(), Some(9));

        assert_eq!(cyclotomic_companion(2, 1).unwrap(), vec![vec![-1]]);
        assert_eq!(order_witness(2, 1).unwrap().order, 2);
    }

    #[test]
    fn orders_match_prime_powers() {
        for (p, a) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (11, 1), (5, 2)] {
            let w = order_witness(p, a).unwrap();
            assert_eq!(w.order, u64::from(p).pow(a));
            assert_eq!(w.matrix.len() as u64, w.bound);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(cyclotomic_companion(4, 1).is_err());
        assert!(cyclotomic_companion(2, 0).is_err());
        assert_eq!(integer_matrix_order(&vec![vec![2]], 50).unwrap(), None);
        assert_eq!(integer_matrix_order(&vec![vec![1, 1], vec![0, 1]], 50).unwrap(), None);
    }
}
