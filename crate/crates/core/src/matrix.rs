//! Dense matrices over GF(p).
//!
//! A matrix acts on column vectors. Subspaces elsewhere in the crate are
//! stored as the row space of a matrix, so a vector is always a row slice
//! here and `g * v` is computed by [`Matrix::mul_vec`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::field::FieldPrime;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldPrime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {} [", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

fn check_field(a: FieldPrime, b: FieldPrime) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch {
            left: a.p(),
            right: b.p(),
        })
    }
}

impl Matrix {
    pub fn zeros(field: FieldPrime, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldPrime, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: FieldPrime, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from residues already in `[0, p)` or larger values to reduce.
    pub fn from_vec(field: FieldPrime, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let p = field.p();
        let data = data.into_iter().map(|x| x % p).collect();
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: FieldPrime,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(field.reduce(f(i, j)));
            }
        }
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    /// The unipotent Jordan block `J_n`: ones on the diagonal and superdiagonal.
    pub fn jordan_block(field: FieldPrime, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| i64::from(i == j || i + 1 == j))
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(field: FieldPrime, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut m = Self::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            if i >= n || seen[i] {
                return Err(Error::InvalidParams(format!("{perm:?} is not a permutation")));
            }
            seen[i] = true;
            m.data[i * n + j] = 1;
        }
        Ok(m)
    }

    /// Block diagonal sum of square or rectangular blocks.
    pub fn block_diag(blocks: &[Matrix]) -> Result<Self> {
        let field = blocks
            .first()
            .map(|b| b.field)
            .ok_or_else(|| Error::Shape("block_diag of no blocks".into()))?;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            check_field(field, b.field)?;
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[(r0 + i) * cols + c0 + j] = b.get(i, j);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    /// Row-major residues as plain integers, for serialization.
    pub fn to_rows_u32(&self) -> Vec<Vec<u32>> {
        self.row_vecs()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self {
            data: self.data.iter().map(|&x| f.mul(x, c % f.p())).collect(),
            ..self.clone()
        }
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Self> {
        check_field(self.field, other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Self { data, ..self.clone() })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Self> {
        check_field(self.field, other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "cannot subtract {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Self { data, ..self.clone() })
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Self> {
        check_field(self.field, other.field)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = u64::from(self.field.p());
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let mut acc = vec![0u64; m];
        let mut data = Vec::with_capacity(n * m);
        for i in 0..n {
            acc.iter_mut().for_each(|a| *a = 0);
            for l in 0..k {
                let a = u64::from(self.data[i * k + l]);
                if a == 0 {
                    continue;
                }
                let brow = &other.data[l * m..(l + 1) * m];
                for (dst, &b) in acc.iter_mut().zip(brow) {
                    *dst += a * u64::from(b);
                }
            }
            data.extend(acc.iter().map(|&x| (x % p) as u32));
        }
        Ok(Self {
            field: self.field,
            rows: n,
            cols: m,
            data,
        })
    }

    /// `self * v` for a vector given by its coordinates.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let p = u64::from(self.field.p());
        (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| u64::from(a) * u64::from(b))
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Self {
        assert!(self.is_square(), "minus_identity of a non-square matrix");
        let mut m = self.clone();
        let f = self.field;
        for i in 0..self.rows {
            let v = m.get(i, i);
            m.data[i * self.cols + i] = f.sub(v, 1);
        }
        m
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    ///
    /// Pivoting is deterministic: for each column in order, the first row at or
    /// below the current position with a nonzero entry becomes the pivot row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    m.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.data[r * cols + c]).expect("nonzero pivot");
            for j in c..cols {
                m.data[r * cols + j] = f.mul(m.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul(factor, m.data[r * cols + j]);
                    m.data[i * cols + j] = f.sub(m.data[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`, one vector per row, in
    /// reduced echelon form.
    pub fn kernel_basis(&self) -> Self {
        let f = self.field;
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![None; n];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let free: Vec<usize> = (0..n).filter(|&c| is_pivot[c].is_none()).collect();
        let mut k = Self::zeros(f, free.len(), n);
        for (idx, &fc) in free.iter().enumerate() {
            k.data[idx * n + fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                k.data[idx * n + pc] = f.neg(r.get(row, fc));
            }
        }
        k.rref().0
    }

    /// Solves `self * x = rhs` for `x` (rhs may have several columns).
    ///
    /// Returns `Ok(None)` when the system is inconsistent. Free variables are
    /// set to zero.
    pub fn solve_linear(&self, rhs: &Matrix) -> Result<Option<Self>> {
        check_field(self.field, rhs.field)?;
        if rhs.rows != self.rows {
            return Err(Error::Shape(format!(
                "coefficient matrix has {} rows, right-hand side has {}",
                self.rows, rhs.rows
            )));
        }
        let (n, k) = (self.cols, rhs.cols);
        let aug = Self::from_fn(self.field, self.rows, n + k, |i, j| {
            i64::from(if j < n { self.get(i, j) } else { rhs.get(i, j - n) })
        });
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.field, n, k);
        for (row, &c) in pivots.iter().enumerate() {
            for j in 0..k {
                x.data[c * k + j] = r.get(row, n + j);
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let id = Self::identity(self.field, self.rows);
        if self.rank() < self.rows {
            return Err(Error::Singular);
        }
        Ok(self.solve_linear(&id)?.expect("invertible system is consistent"))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Kronecker product; entry `(i*b.rows + k, j*b.cols + l)` is `a[i][j] * b[k][l]`.
    pub fn kronecker(&self, b: &Matrix) -> Result<Self> {
        check_field(self.field, b.field)?;
        let f = self.field;
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut m = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        m.data[(i * b.rows + k) * cols + j * b.cols + l] = f.mul(a, b.get(k, l));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Least `k >= 1` with `self^k = I`, or `None` if no such `k <= cap`.
    pub fn matrix_order(&self, cap: u64) -> Result<Option<u64>> {
        if !self.is_square() {
            return Err(Error::Shape("order of a non-square matrix".into()));
        }
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        let mut power = self.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return Ok(Some(k));
            }
            power = &power * self;
        }
        Ok(None)
    }

    /// Matrix of the restriction of `self` to an invariant subspace given by the
    /// rows of `basis`: returns `R` with `self * b_j = sum_i R[i][j] b_i`.
    /// `None` if the subspace is not invariant.
    pub fn restrict_to(&self, basis: &Matrix) -> Result<Option<Self>> {
        let bt = basis.transpose();
        let image = self.checked_mul(&bt)?;
        bt.solve_linear(&image)
    }

    /// Matrix induced on the quotient by the invariant subspace spanned by the rows
    /// of `sub`, in the basis of the complement given by the rows of `complement`.
    pub fn induced_on_quotient(&self, sub: &Matrix, complement: &Matrix) -> Result<Option<Self>> {
        // Express g*c_j in the combined basis (complement, sub) and keep the complement part.
        let combined = Self::from_fn(
            self.field,
            complement.rows + sub.rows,
            self.cols,
            |i, j| {
                i64::from(if i < complement.rows {
                    complement.get(i, j)
                } else {
                    sub.get(i - complement.rows, j)
                })
            },
        );
        let image = self.checked_mul(&complement.transpose())?;
        let Some(coords) = combined.transpose().solve_linear(&image)? else {
            return Ok(None);
        };
        let k = complement.rows;
        Ok(Some(Self::from_fn(self.field, k, k, |i, j| {
            i64::from(coords.get(i, j))
        })))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on shape or field mismatch; use [`Matrix::checked_mul`] otherwise.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix difference shape mismatch")
    }
}

/// Induced action on the exterior square, basis `e_i ^ e_j` for `i < j` in
/// lexicographic order.
pub fn wedge2_matrix(g: &Matrix) -> Matrix {
    let f = g.field();
    let n = g.rows();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Matrix::from_fn(f, pairs.len(), pairs.len(), |row, col| {
        let (k, l) = pairs[row];
        let (i, j) = pairs[col];
        let a = f.mul(g.get(k, i), g.get(l, j));
        let b = f.mul(g.get(l, i), g.get(k, j));
        i64::from(f.sub(a, b))
    })
}

/// Induced action on the symmetric square, basis `e_i e_j` for `i <= j` in
/// lexicographic order.
pub fn sym2_matrix(g: &Matrix) -> Matrix {
    let f = g.field();
    let n = g.rows();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    Matrix::from_fn(f, pairs.len(), pairs.len(), |row, col| {
        let (k, l) = pairs[row];
        let (i, j) = pairs[col];
        let v = if k == l {
            f.mul(g.get(k, i), g.get(k, j))
        } else {
            f.add(f.mul(g.get(k, i), g.get(l, j)), f.mul(g.get(l, i), g.get(k, j)))
        };
        i64::from(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, f: FieldPrime, r: usize, c: usize) -> Matrix {
        Matrix::from_fn(f, r, c, |_, _| i64::from(rng.gen_range(0..f.p())))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(gf(2), 3).rank(), 3);
        assert_eq!(Matrix::zeros(gf(3), 4, 5).rank(), 0);
        assert_eq!(Matrix::jordan_block(gf(2), 5).minus_identity().rank(), 4);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2);
        let k = Matrix::jordan_block(f, 4).minus_identity().kernel_basis();
        assert_eq!(k, Matrix::from_rows(f, &[[1, 0, 0, 0]]).unwrap());

        let k = Matrix::zeros(f, 3, 3).kernel_basis();
        assert_eq!(k, Matrix::identity(f, 3));

        let j2 = Matrix::jordan_block(f, 2);
        let d = Matrix::block_diag(&[j2.clone(), j2]).unwrap().minus_identity();
        let k = d.kernel_basis();
        assert_eq!(
            k,
            Matrix::from_rows(f, &[[1, 0, 0, 0], [0, 0, 1, 0]]).unwrap()
        );
    }

    #[test]
    fn solve_examples() {
        let f = gf(5);
        let b = Matrix::from_rows(f, &[[1], [2], [3]]).unwrap();
        let x = Matrix::identity(f, 3).solve_linear(&b).unwrap().unwrap();
        assert_eq!(x, b);

        // x + y = 1, x + y = 2 is inconsistent.
        let a = Matrix::from_rows(f, &[[1, 1], [1, 1]]).unwrap();
        let rhs = Matrix::from_rows(f, &[[1], [2]]).unwrap();
        assert_eq!(a.solve_linear(&rhs).unwrap(), None);

        // x + 2y + z = 3: free variables y, z are set to zero.
        let a = Matrix::from_rows(f, &[[1, 2, 1]]).unwrap();
        let rhs = Matrix::from_rows(f, &[[3]]).unwrap();
        let x = a.solve_linear(&rhs).unwrap().unwrap();
        assert_eq!(x, Matrix::from_rows(f, &[[3], [0], [0]]).unwrap());

        let bad = Matrix::from_rows(f, &[[1], [2]]).unwrap();
        assert!(matches!(
            Matrix::identity(f, 3).solve_linear(&bad),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn kronecker_examples() {
        let f = gf(2);
        let j2 = Matrix::jordan_block(f, 2);
        let k = j2.kronecker(&j2).unwrap();
        assert_eq!((k.rows(), k.cols()), (4, 4));
        let n = k.minus_identity();
        assert!(!n.is_zero());
        assert!((&n * &n).is_zero());

        let m = Matrix::from_rows(f, &[[1, 1], [0, 1]]).unwrap();
        let i2 = Matrix::identity(f, 2);
        assert_eq!(
            i2.kronecker(&m).unwrap(),
            Matrix::block_diag(&[m.clone(), m]).unwrap()
        );

        assert!(matches!(
            j2.kronecker(&Matrix::identity(gf(3), 2)),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn kronecker_mixed_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2, 3, 5, 7] {
            let f = gf(p);
            for _ in 0..25 {
                let a = random_matrix(&mut rng, f, 2, 2);
                let b = random_matrix(&mut rng, f, 2, 2);
                let c = random_matrix(&mut rng, f, 2, 2);
                let d = random_matrix(&mut rng, f, 2, 2);
                let lhs = &a.kronecker(&b).unwrap() * &c.kronecker(&d).unwrap();
                let rhs = (&a * &c).kronecker(&(&b * &d)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(
            Matrix::jordan_block(gf(2), 4).matrix_order(100).unwrap(),
            Some(4)
        );
        assert_eq!(
            Matrix::jordan_block(gf(2), 6).matrix_order(100).unwrap(),
            Some(8)
        );
        assert_eq!(
            Matrix::jordan_block(gf(5), 3).matrix_order(100).unwrap(),
            Some(5)
        );
        assert_eq!(
            Matrix::jordan_block(gf(2), 6).matrix_order(7).unwrap(),
            None
        );
        assert_eq!(
            Matrix::zeros(gf(2), 2, 2).matrix_order(10),
            Err(Error::Singular)
        );
    }

    #[test]
    fn jordan_block_orders_are_p_powers() {
        for p in [2u64, 3, 5, 7] {
            let f = gf(p as u32);
            for n in 1..=32usize {
                let mut expected = 1;
                while expected < n as u64 {
                    expected *= p;
                }
                let got = Matrix::jordan_block(f, n).matrix_order(1000).unwrap();
                assert_eq!(got, Some(expected), "J_{n} over GF({p})");
            }
        }
    }

    #[test]
    fn rank_nullity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2, 3, 5, 7] {
            let f = gf(p);
            for _ in 0..40 {
                let r = rng.gen_range(1..7);
                let c = rng.gen_range(1..7);
                let m = random_matrix(&mut rng, f, r, c);
                let k = m.kernel_basis();
                assert_eq!(m.rank() + k.rows(), c);
                assert!((&m * &k.transpose()).is_zero());
                assert_eq!(k.rank(), k.rows());
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = gf(7);
        let mut found = 0;
        while found < 20 {
            let m = random_matrix(&mut rng, f, 4, 4);
            match m.inverse() {
                Ok(inv) => {
                    assert!((&m * &inv).is_identity());
                    found += 1;
                }
                Err(e) => assert_eq!(e, Error::Singular),
            }
        }
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        let f = gf(3);
        let j = Matrix::jordan_block(f, 3);
        let w = Matrix::from_rows(f, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        let r = j.restrict_to(&w).unwrap().unwrap();
        assert_eq!(r, Matrix::jordan_block(f, 2));
        let not_inv = Matrix::from_rows(f, &[[0, 1, 0]]).unwrap();
        assert_eq!(j.restrict_to(&not_inv).unwrap(), None);
    }

    #[test]
    fn wedge_and_sym_are_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [2, 3, 5] {
            let f = gf(p);
            for _ in 0..10 {
                let a = random_matrix(&mut rng, f, 4, 4);
                let b = random_matrix(&mut rng, f, 4, 4);
                assert_eq!(wedge2_matrix(&(&a * &b)), &wedge2_matrix(&a) * &wedge2_matrix(&b));
                assert_eq!(sym2_matrix(&(&a * &b)), &sym2_matrix(&a) * &sym2_matrix(&b));
            }
        }
    }
}
