//! Small integer linear algebra on weight lattices (`i128`, no bignums).

/// Integer row reduction of `rows` (each of length `width`) by unimodular row
/// operations. Returns `(k, v, v_inv)` where the first `k` rows of `v * rows`
/// form a basis of the row lattice and the rest vanish; `v` is unimodular and
/// `v_inv` its inverse.
fn row_reduce(rows: &[Vec<i128>], width: usize) -> (usize, Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let m = rows.len();
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut v: Vec<Vec<i128>> = (0..m).map(|i| unit(m, i)).collect();
    let mut v_inv = v.clone();
    let mut piv = 0;
    for col in 0..width {
        if piv == m {
            break;
        }
        loop {
            let best = (piv..m)
                .filter(|&r| a[r][col] != 0)
                .min_by_key(|&r| a[r][col].abs());
            let Some(best) = best else { break };
            if best != piv {
                a.swap(best, piv);
                v.swap(best, piv);
                for row in v_inv.iter_mut() {
                    row.swap(best, piv);
                }
            }
            let mut done = true;
            for r in piv + 1..m {
                let q = a[r][col].div_euclid(a[piv][col]);
                if q != 0 {
                    // row_r -= q row_piv; the inverse adds q col_r to col_piv
                    let (top, bottom) = a.split_at_mut(r);
                    for (x, y) in bottom[0].iter_mut().zip(&top[piv]).take(width) {
                        *x -= q * y;
                    }
                    let (top, bottom) = v.split_at_mut(r);
                    for (x, y) in bottom[0].iter_mut().zip(&top[piv]).take(m) {
                        *x -= q * y;
                    }
                    for row in v_inv.iter_mut() {
                        row[piv] += q * row[r];
                    }
                }
                if a[r][col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[piv][col] != 0 {
            piv += 1;
        }
    }
    (piv, v, v_inv)
}

fn unit(n: usize, i: usize) -> Vec<i128> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// Rank of the lattice spanned by `vectors`.
pub fn lattice_rank(vectors: &[Vec<i64>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let rows: Vec<Vec<i128>> = vectors.iter().map(|v| v.iter().map(|&x| i128::from(x)).collect()).collect();
    row_reduce(&rows, first.len()).0
}

/// Determinant by fraction-free elimination.
pub fn bareiss_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Whether `w_i -> w_{perm[i]}` extends to an automorphism of the lattice
/// spanned by the vectors `w`.
///
/// With `B` a lattice basis and integer coordinates `C` (`W = B C`), there is
/// an integer `X` with `C X = I`; the only candidate map in coordinates is
/// `M = C_perm X`, which must reproduce every image and have determinant ±1.
pub fn permutation_extends_to_automorphism(w: &[Vec<i64>], perm: &[usize]) -> bool {
    let m = w.len();
    if m == 0 {
        return true;
    }
    let width = w[0].len();
    let rows: Vec<Vec<i128>> = w.iter().map(|v| v.iter().map(|&x| i128::from(x)).collect()).collect();
    let (k, v, v_inv) = row_reduce(&rows, width);
    // W^T = V^{-1} [B^T; 0], so weight i has coordinates v_inv[i][0..k];
    // X^T is the first k rows of V.
    let coords: Vec<Vec<i128>> = (0..m).map(|i| v_inv[i][..k].to_vec()).collect();
    // M^T = X^T C_perm^T, i.e. M[a][b] = sum_i coords[perm[i]][a] * v[b][i]
    let mat: Vec<Vec<i128>> = (0..k)
        .map(|a| (0..k).map(|b| (0..m).map(|i| coords[perm[i]][a] * v[b][i]).sum()).collect())
        .collect();
    let consistent = (0..m).all(|i| {
        (0..k).all(|a| (0..k).map(|b| mat[a][b] * coords[i][b]).sum::<i128>() == coords[perm[i]][a])
    });
    consistent && bareiss_det(&mat).abs() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(bareiss_det(&[vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(bareiss_det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(bareiss_det(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(bareiss_det(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn ranks() {
        assert_eq!(lattice_rank(&[vec![1, 0], vec![-1, 0], vec![0, 0]]), 1);
        assert_eq!(lattice_rank(&[vec![2, 0], vec![0, 0], vec![-2, 0]]), 1);
        assert_eq!(lattice_rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![-1, -1, 0]]), 2);
    }

    #[test]
    fn automorphism_checks() {
        // cyclic permutation of the weights e_1, e_2, -e_1-e_2
        let w = vec![vec![1, 0], vec![0, 1], vec![-1, -1]];
        assert!(permutation_extends_to_automorphism(&w, &[1, 2, 0]));
        assert!(permutation_extends_to_automorphism(&w, &[1, 0, 2]));
        // negation swap of +-e_1 plus a fixed zero weight
        let w = vec![vec![1], vec![0], vec![-1]];
        assert!(permutation_extends_to_automorphism(&w, &[2, 1, 0]));
        // moving the zero weight is not linear
        assert!(!permutation_extends_to_automorphism(&w, &[1, 0, 2]));
        // e_1 -> e_2 -> e_1 + e_2 is not additive
        let w = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        assert!(!permutation_extends_to_automorphism(&w, &[1, 2, 0]));
        // doubling is linear but not invertible over Z: weights 1, 2 swapped
        let w = vec![vec![1], vec![2]];
        assert!(!permutation_extends_to_automorphism(&w, &[1, 0]));
        // lattice 2Z: +-2 swapped is fine
        let w = vec![vec![2], vec![-2]];
        assert!(permutation_extends_to_automorphism(&w, &[1, 0]));
    }
}
