//! Subspaces of GF(p)^n stored as reduced echelon row bases, plus the line
//! enumeration used by the exhaustive searches.

use serde::Serialize;

use crate::field::FieldPrime;
use crate::matrix::Matrix;

/// A subspace given by independent rows in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    basis: Matrix,
}

impl Serialize for SubspaceBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.to_rows_u32().serialize(s)
    }
}

impl SubspaceBasis {
    /// Row space of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let basis = Matrix::from_fn(m.field(), k, m.cols(), |i, j| i64::from(r.get(i, j)));
        Self { basis }
    }

    pub fn span(field: FieldPrime, ambient_dim: usize, vectors: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
            data.extend_from_slice(v);
        }
        let m = Matrix::from_vec(field, vectors.len(), ambient_dim, data).expect("shape checked");
        Self::from_rows(&m)
    }

    pub fn zero(field: FieldPrime, ambient_dim: usize) -> Self {
        Self {
            basis: Matrix::zeros(field, 0, ambient_dim),
        }
    }

    pub fn full(field: FieldPrime, ambient_dim: usize) -> Self {
        Self {
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: FieldPrime, ambient_dim: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<u32>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![0; ambient_dim];
                v[i] = 1;
                v
            })
            .collect();
        Self::span(field, ambient_dim, &vecs)
    }

    pub fn field(&self) -> FieldPrime {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        let e = Echelon::from_subspace(self);
        e.reduce(&mut v.to_vec()).is_none()
    }

    pub fn contains(&self, other: &SubspaceBasis) -> bool {
        let e = Echelon::from_subspace(self);
        other
            .vectors()
            .into_iter()
            .all(|mut v| e.reduce(&mut v).is_none())
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Self {
        let mut vecs = self.vectors();
        vecs.extend(other.vectors());
        Self::span(self.field(), self.ambient_dim(), &vecs)
    }

    pub fn intersection(&self, other: &SubspaceBasis) -> Self {
        let f = self.field();
        let n = self.ambient_dim();
        if self.is_zero() || other.is_zero() {
            return Self::zero(f, n);
        }
        // x lies in `other` iff it is annihilated by every vector orthogonal to `other`.
        let ann = other.basis.kernel_basis();
        if ann.rows() == 0 {
            return self.clone();
        }
        let coeffs = (&ann * &self.basis.transpose()).kernel_basis();
        if coeffs.rows() == 0 {
            return Self::zero(f, n);
        }
        Self::from_rows(&(&coeffs * &self.basis))
    }

    /// Image `g(W)`.
    pub fn image(&self, g: &Matrix) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self::from_rows(&(g * &self.basis.transpose()).transpose())
    }

    pub fn is_invariant(&self, g: &Matrix) -> bool {
        self.contains(&self.image(g))
    }
}

/// Incremental echelon basis used by spinning and by membership tests.
///
/// Each stored row has a leading 1 at its pivot and zeros at the pivots of
/// earlier rows, so a single pass in insertion order reduces any vector.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    field: FieldPrime,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(field: FieldPrime, n: usize) -> Self {
        Self {
            field,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn from_subspace(s: &SubspaceBasis) -> Self {
        let mut e = Self::new(s.field(), s.ambient_dim());
        for v in s.vectors() {
            e.insert(v);
        }
        e
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Reduces `v` in place; returns its pivot if something nonzero remains.
    pub(crate) fn reduce(&self, v: &mut [u32]) -> Option<usize> {
        let f = self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row).skip(piv) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        v.iter().position(|&x| x != 0)
    }

    /// Inserts `v`; returns the normalized new row if `v` was not already in the span.
    pub(crate) fn insert(&mut self, mut v: Vec<u32>) -> Option<&Vec<u32>> {
        let piv = self.reduce(&mut v)?;
        let inv = self.field.inv(v[piv]).expect("nonzero pivot");
        for x in v.iter_mut().skip(piv) {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(v);
        self.pivots.push(piv);
        self.rows.last()
    }

    pub(crate) fn to_subspace(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.field, self.n, &self.rows)
    }
}

/// Number of one-dimensional subspaces of GF(p)^n.
pub fn line_count(p: u32, n: usize) -> u128 {
    let p = u128::from(p);
    (0..n).map(|i| p.pow(i as u32)).sum()
}

/// The `index`-th line of GF(p)^n in the canonical order, as its normalized
/// representative (first nonzero coordinate equal to 1).
///
/// Lines are ordered by the position of the leading coordinate (first
/// coordinate first), then by the remaining coordinates read as base-p digits
/// with the earliest coordinate least significant. Line 0 is `e_1`.
pub fn line_at(p: u32, n: usize, mut index: u128) -> Vec<u32> {
    let pp = u128::from(p);
    let mut v = vec![0u32; n];
    for lead in 0..n {
        let block = pp.pow((n - 1 - lead) as u32);
        if index < block {
            v[lead] = 1;
            let mut t = index;
            for x in v.iter_mut().skip(lead + 1) {
                *x = (t % pp) as u32;
                t /= pp;
            }
            return v;
        }
        index -= block;
    }
    panic!("line index out of range");
}
