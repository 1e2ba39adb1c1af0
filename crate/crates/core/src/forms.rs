//! Bilinear and quadratic spaces over GF(p).
//!
//! A [`QuadSpace`] stores the quadratic form by its upper-triangular
//! coefficients `Q(x) = sum_{i<=j} q_ij x_i x_j` together with the polar Gram
//! matrix `B(x, y) = Q(x + y) - Q(x) - Q(y)`. In characteristic 2 the Gram
//! matrix is alternating and the quadratic form carries strictly more
//! information than `B`; in odd characteristic the two determine each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::matrix::Matrix;
use crate::subspace::SubspaceBasis;

/// Anything carrying a Gram matrix.
pub trait FormSpace {
    fn gram(&self) -> &Matrix;

    fn dim(&self) -> usize {
        self.gram().rows()
    }

    fn field(&self) -> FieldPrime {
        self.gram().field()
    }

    /// `B(x, y) = x^T G y`.
    fn bilinear(&self, x: &[u32], y: &[u32]) -> u32 {
        let f = self.field();
        let gy = self.gram().mul_vec(y);
        x.iter().zip(&gy).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// Whether `g` preserves the form. For quadratic spaces this also checks
    /// `Q(g e_i) = Q(e_i)` on the basis, which together with the bilinear
    /// condition gives `Q(g v) = Q(v)` for all `v`.
    fn is_isometry(&self, g: &Matrix) -> Result<bool> {
        check_square(g, self.dim())?;
        let lhs = &(&g.transpose() * self.gram()) * g;
        Ok(&lhs == self.gram())
    }

    /// Orthogonal complement `{x : B(s, x) = 0 for all s in S}`.
    fn perp(&self, s: &SubspaceBasis) -> SubspaceBasis {
        if s.is_zero() {
            return SubspaceBasis::full(self.field(), self.dim());
        }
        let eqs = s.basis() * self.gram();
        SubspaceBasis::from_rows(&eqs.kernel_basis())
    }

    /// Whether `B` vanishes on all pairs of basis vectors of `s`.
    fn is_totally_isotropic(&self, s: &SubspaceBasis) -> bool {
        let v = s.vectors();
        v.iter()
            .enumerate()
            .all(|(i, x)| v[i..].iter().all(|y| self.bilinear(x, y) == 0))
    }
}

fn check_square(g: &Matrix, n: usize) -> Result<()> {
    if g.rows() != n || g.cols() != n {
        return Err(Error::Shape(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    Ok(())
}

/// A nondegenerate alternating space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SympSpace {
    #[serde(serialize_with = "ser_matrix")]
    gram: Matrix,
}

impl SympSpace {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !is_alternating(&gram) {
            return Err(Error::InvalidParams("Gram matrix is not alternating".into()));
        }
        if gram.rank() != gram.rows() {
            return Err(Error::InvalidParams("alternating form is degenerate".into()));
        }
        Ok(Self { gram })
    }

    /// Basis `e_1..e_l, f_1..f_l` with `B(e_i, f_i) = 1`.
    pub fn standard(field: FieldPrime, l: usize) -> Self {
        let gram = Matrix::from_fn(field, 2 * l, 2 * l, |i, j| {
            if j == i + l {
                1
            } else if i == j + l {
                -1
            } else {
                0
            }
        });
        Self { gram }
    }
}

impl FormSpace for SympSpace {
    fn gram(&self) -> &Matrix {
        &self.gram
    }
}

fn is_alternating(g: &Matrix) -> bool {
    let f = g.field();
    g.is_square()
        && (0..g.rows()).all(|i| {
            g.get(i, i) == 0 && (0..i).all(|j| g.get(i, j) == f.neg(g.get(j, i)))
        })
}

fn is_symmetric(g: &Matrix) -> bool {
    g.is_square() && (0..g.rows()).all(|i| (0..i).all(|j| g.get(i, j) == g.get(j, i)))
}

/// A quadratic space with its polar bilinear form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadSpace {
    #[serde(serialize_with = "ser_matrix")]
    quad: Matrix,
    #[serde(serialize_with = "ser_matrix")]
    gram: Matrix,
}

pub(crate) fn ser_matrix<S: serde::Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.to_rows_u32().serialize(s)
}

impl QuadSpace {
    /// From a coefficient matrix; entries below the diagonal are folded into
    /// the upper triangle (`q_ij + q_ji` becomes the coefficient of `x_i x_j`).
    pub fn from_quad(coeffs: &Matrix) -> Result<Self> {
        if !coeffs.is_square() {
            return Err(Error::Shape("quadratic form coefficients must be square".into()));
        }
        let f = coeffs.field();
        let n = coeffs.rows();
        let quad = Matrix::from_fn(f, n, n, |i, j| {
            i64::from(match i.cmp(&j) {
                std::cmp::Ordering::Less => f.add(coeffs.get(i, j), coeffs.get(j, i)),
                std::cmp::Ordering::Equal => coeffs.get(i, i),
                std::cmp::Ordering::Greater => 0,
            })
        });
        let gram = Matrix::from_fn(f, n, n, |i, j| {
            i64::from(match i.cmp(&j) {
                std::cmp::Ordering::Less => quad.get(i, j),
                std::cmp::Ordering::Equal => f.add(quad.get(i, i), quad.get(i, i)),
                std::cmp::Ordering::Greater => quad.get(j, i),
            })
        });
        Ok(Self { quad, gram })
    }

    /// Odd characteristic only: the quadratic form `Q(x) = B(x, x) / 2` of a
    /// symmetric Gram matrix.
    pub fn from_symmetric_gram(gram: &Matrix) -> Result<Self> {
        let f = gram.field();
        if f.p() == 2 {
            return Err(Error::WrongCharacteristic {
                expected: 0,
                actual: 2,
            });
        }
        if !is_symmetric(gram) {
            return Err(Error::InvalidParams("Gram matrix is not symmetric".into()));
        }
        let half = f.inv(2).expect("p odd");
        let n = gram.rows();
        let coeffs = Matrix::from_fn(f, n, n, |i, j| {
            i64::from(match i.cmp(&j) {
                std::cmp::Ordering::Less => gram.get(i, j),
                std::cmp::Ordering::Equal => f.mul(gram.get(i, i), half),
                std::cmp::Ordering::Greater => 0,
            })
        });
        Self::from_quad(&coeffs)
    }

    /// Hyperbolic space on `e_1..e_l, f_1..f_l` with `Q = sum a_i b_i`.
    pub fn hyperbolic(field: FieldPrime, l: usize) -> Self {
        let coeffs = Matrix::from_fn(field, 2 * l, 2 * l, |i, j| i64::from(j == i + l));
        Self::from_quad(&coeffs).expect("square")
    }

    /// Orthogonal direct sum, bases concatenated in order.
    pub fn orthogonal_sum(parts: &[QuadSpace]) -> Result<Self> {
        let blocks: Vec<Matrix> = parts.iter().map(|q| q.quad.clone()).collect();
        Self::from_quad(&Matrix::block_diag(&blocks)?)
    }

    pub fn quad(&self) -> &Matrix {
        &self.quad
    }

    pub fn q(&self, v: &[u32]) -> u32 {
        let f = self.quad.field();
        let n = self.quad.rows();
        let mut acc = 0;
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            for j in i..n {
                let c = self.quad.get(i, j);
                if c != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(v[i], v[j])));
                }
            }
        }
        acc
    }

    /// Radical of the polar form.
    pub fn radical(&self) -> SubspaceBasis {
        SubspaceBasis::from_rows(&self.gram.kernel_basis())
    }

    /// Nondegenerate: trivial radical, or in characteristic 2 a radical of
    /// dimension one on which `Q` does not vanish.
    pub fn is_nondegenerate(&self) -> bool {
        let rad = self.radical();
        match rad.dim() {
            0 => true,
            1 if self.field().p() == 2 => self.q(&rad.vectors()[0]) != 0,
            _ => false,
        }
    }

    /// `Q` vanishes on the basis and `B` on all pairs.
    pub fn is_totally_singular(&self, s: &SubspaceBasis) -> bool {
        s.vectors().iter().all(|v| self.q(v) == 0) && self.is_totally_isotropic(s)
    }

    /// Checks `B(x, y) = Q(x + y) - Q(x) - Q(y)` on all pairs of basis vectors.
    pub fn polarization_holds(&self) -> bool {
        let f = self.field();
        let n = self.dim();
        let e = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = e(i);
                s[j] = f.add(s[j], 1);
                let expected = f.sub(f.sub(self.q(&s), self.q(&e(i))), self.q(&e(j)));
                self.gram.get(i, j) == expected
            })
        })
    }

    /// Reflection (orthogonal transvection in characteristic 2)
    /// `x -> x - B(x, v)/Q(v) v` for an anisotropic `v`.
    pub fn reflection(&self, v: &[u32]) -> Result<Matrix> {
        let f = self.field();
        let qv = self.q(v);
        let inv = f
            .inv(qv)
            .ok_or_else(|| Error::InvalidParams("reflection in a singular vector".into()))?;
        let gv = self.gram.mul_vec(v);
        let n = self.dim();
        Ok(Matrix::from_fn(f, n, n, |i, j| {
            let delta = u32::from(i == j);
            i64::from(f.sub(delta, f.mul(inv, f.mul(v[i], gv[j]))))
        }))
    }
}

impl FormSpace for QuadSpace {
    fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn is_isometry(&self, g: &Matrix) -> Result<bool> {
        check_square(g, self.dim())?;
        let lhs = &(&g.transpose() * &self.gram) * g;
        if lhs != self.gram {
            return Ok(false);
        }
        Ok((0..self.dim()).all(|i| self.q(&g.col(i)) == self.quad.get(i, i)))
    }
}

/// Symplectic transvection `x -> x + a B(x, v) v`.
pub fn symplectic_transvection(space: &SympSpace, v: &[u32], a: u32) -> Matrix {
    let f = space.field();
    let n = space.dim();
    // B(x, v) = x^T G v = (G v) . x
    let gv_col = space.gram().mul_vec(v);
    Matrix::from_fn(f, n, n, |i, j| {
        let delta = u32::from(i == j);
        i64::from(f.add(delta, f.mul(a, f.mul(v[i], gv_col[j]))))
    })
}

/// Dickson invariant `rank(g - 1) mod 2` of an isometry in characteristic 2.
pub fn dickson(g: &Matrix, space: &QuadSpace) -> Result<u8> {
    let p = space.field().p();
    if p != 2 {
        return Err(Error::WrongCharacteristic {
            expected: 2,
            actual: p,
        });
    }
    if !space.is_isometry(g)? {
        return Err(Error::NotIsometry);
    }
    Ok((g.minus_identity().rank() % 2) as u8)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Alternating,
    Symmetric,
}

fn parameter_basis(field: FieldPrime, n: usize, kind: FormKind) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        let start = match kind {
            FormKind::Alternating => i + 1,
            FormKind::Symmetric => i,
        };
        for j in start..n {
            let mut m = Matrix::zeros(field, n, n);
            if i == j {
                m.set(i, i, 1);
            } else {
                m.set(i, j, 1);
                let other = match kind {
                    FormKind::Alternating => field.neg(1),
                    FormKind::Symmetric => 1,
                };
                m.set(j, i, other);
            }
            out.push(m);
        }
    }
    out
}

/// Combines basis matrices with coefficients.
fn combine(basis: &[Matrix], coeffs: &[u32]) -> Matrix {
    let mut acc = Matrix::zeros(basis[0].field(), basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &b.scale(c);
        }
    }
    acc
}

/// Basis of `{B : u^T B u = B}` among alternating or symmetric matrices.
pub fn invariant_bilinear_forms(u: &Matrix, kind: FormKind) -> Result<Vec<Matrix>> {
    if !u.is_invertible() {
        return Err(Error::Singular);
    }
    let f = u.field();
    let n = u.rows();
    let params = parameter_basis(f, n, kind);
    let ut = u.transpose();
    let columns: Vec<Matrix> = params.iter().map(|b| &(&(&ut * b) * u) - b).collect();
    let system = Matrix::from_fn(f, n * n, params.len(), |r, c| i64::from(columns[c].data()[r]));
    let kernel = system.kernel_basis();
    Ok((0..kernel.rows())
        .map(|k| combine(&params, kernel.row(k)))
        .collect())
}

/// Basis of the quadratic forms invariant under `u` (characteristic 2).
pub fn invariant_quadratic_forms(u: &Matrix) -> Result<Vec<QuadSpace>> {
    let f = u.field();
    if f.p() != 2 {
        return Err(Error::WrongCharacteristic {
            expected: 2,
            actual: f.p(),
        });
    }
    if !u.is_invertible() {
        return Err(Error::Singular);
    }
    let n = u.rows();
    let mut params = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut m = Matrix::zeros(f, n, n);
            m.set(a, b, 1);
            params.push(QuadSpace::from_quad(&m)?);
        }
    }
    let ut = u.transpose();
    let rows_per = n + n * n;
    let mut system = Matrix::zeros(f, rows_per, params.len());
    for (c, q) in params.iter().enumerate() {
        for i in 0..n {
            let val = f.sub(q.q(&u.col(i)), q.quad.get(i, i));
            system.set(i, c, val);
        }
        let d = &(&(&ut * q.gram()) * u) - q.gram();
        for (r, &x) in d.data().iter().enumerate() {
            system.set(n + r, c, x);
        }
    }
    let kernel = system.kernel_basis();
    (0..kernel.rows())
        .map(|k| {
            let quads: Vec<Matrix> = params.iter().map(|q| q.quad.clone()).collect();
            QuadSpace::from_quad(&combine(&quads, kernel.row(k)))
        })
        .collect()
}

/// Upper bound on the number of coefficient vectors tried when picking a
/// nondegenerate member of a solution space.
pub const COMBINATION_CAP: u64 = 1 << 22;

/// Nonzero coefficient vectors of length `k` over GF(p) in lexicographic order
/// (first coordinate most significant), capped.
fn lex_coefficients(p: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = u64::from(p).checked_pow(k as u32).unwrap_or(u64::MAX);
    (1..total.min(COMBINATION_CAP)).map(move |mut idx| {
        let mut c = vec![0; k];
        for slot in c.iter_mut().rev() {
            *slot = (idx % u64::from(p)) as u32;
            idx /= u64::from(p);
        }
        c
    })
}

/// First combination of `basis` (lexicographic coefficient order) whose Gram
/// matrix has full rank.
pub fn first_nondegenerate_bilinear(basis: &[Matrix]) -> Option<Matrix> {
    let first = basis.first()?;
    let p = first.field().p();
    lex_coefficients(p, basis.len())
        .map(|c| combine(basis, &c))
        .find(|b| b.rank() == b.rows())
}

/// First combination of `basis` (lexicographic coefficient order) that is a
/// nondegenerate quadratic form.
pub fn first_nondegenerate_quadratic(basis: &[QuadSpace]) -> Option<QuadSpace> {
    let first = basis.first()?;
    let p = first.field().p();
    let quads: Vec<Matrix> = basis.iter().map(|q| q.quad.clone()).collect();
    lex_coefficients(p, basis.len())
        .map(|c| QuadSpace::from_quad(&combine(&quads, &c)).expect("square"))
        .find(QuadSpace::is_nondegenerate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    fn random_anisotropic(rng: &mut ChaCha8Rng, q: &QuadSpace) -> Vec<u32> {
        loop {
            let v: Vec<u32> = (0..q.dim()).map(|_| rng.gen_range(0..q.field().p())).collect();
            if q.q(&v) != 0 {
                return v;
            }
        }
    }

    #[test]
    fn isometry_examples() {
        let f = gf(2);
        let h = QuadSpace::hyperbolic(f, 3);
        assert!(h.is_isometry(&Matrix::identity(f, 6)).unwrap());
        let s = SympSpace::standard(f, 1);
        assert!(s.is_isometry(&Matrix::jordan_block(f, 2)).unwrap());
        // swap e_i <-> f_i
        let swap = Matrix::permutation(f, &[3, 4, 5, 0, 1, 2]).unwrap();
        assert!(h.is_isometry(&swap).unwrap());
        assert!(h.is_isometry(&Matrix::identity(f, 4)).is_err());
        // J_2 on each hyperbolic pair preserves B but not Q
        let t = Matrix::from_rows(f, &[[1, 1], [0, 1]]).unwrap();
        let h1 = QuadSpace::hyperbolic(f, 1);
        assert!(!h1.is_isometry(&t).unwrap());
    }

    #[test]
    fn totally_singular_examples() {
        let f = gf(3);
        let h = QuadSpace::hyperbolic(f, 1);
        assert!(h.is_totally_singular(&SubspaceBasis::coordinate(f, 2, &[0])));
        let diag = SubspaceBasis::span(f, 2, &[vec![1, 1]]);
        assert!(!h.is_totally_singular(&diag));
        assert_eq!(h.q(&[1, 1]), 1);
    }

    #[test]
    fn perp_examples() {
        let f = gf(5);
        let h = QuadSpace::hyperbolic(f, 3);
        assert!(h.perp(&SubspaceBasis::zero(f, 6)).is_full());
        let w = SubspaceBasis::coordinate(f, 6, &[0, 1, 2]);
        assert_eq!(h.perp(&w), w);
        let pair = SubspaceBasis::coordinate(f, 6, &[0, 3]);
        let comp = h.perp(&pair);
        assert_eq!(comp.dim() + pair.dim(), 6);
        assert!(comp.intersection(&pair).is_zero());
    }

    #[test]
    fn perp_perp_contains() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for p in [2, 3, 5] {
            let f = gf(p);
            let h = QuadSpace::hyperbolic(f, 3);
            let degenerate = QuadSpace::from_quad(&Matrix::from_fn(f, 4, 4, |i, j| i64::from(i == 0 && j == 1))).unwrap();
            for _ in 0..20 {
                let k = rng.gen_range(0..4);
                let vecs: Vec<Vec<u32>> = (0..k)
                    .map(|_| (0..6).map(|_| rng.gen_range(0..p)).collect())
                    .collect();
                let s = SubspaceBasis::span(f, 6, &vecs);
                assert_eq!(h.perp(&h.perp(&s)), s);
                let vecs4: Vec<Vec<u32>> = vecs.iter().map(|v| v[..4].to_vec()).collect();
                let s4 = SubspaceBasis::span(f, 4, &vecs4);
                assert!(degenerate.perp(&degenerate.perp(&s4)).contains(&s4));
            }
        }
    }

    #[test]
    fn polarization_on_constructed_spaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for p in [2, 3, 7] {
            let f = gf(p);
            for _ in 0..10 {
                let c = Matrix::from_fn(f, 5, 5, |_, _| i64::from(rng.gen_range(0..p)));
                assert!(QuadSpace::from_quad(&c).unwrap().polarization_holds());
            }
            assert!(QuadSpace::hyperbolic(f, 4).polarization_holds());
        }
        let g = Matrix::from_rows(gf(3), &[[2, 1], [1, 0]]).unwrap();
        let q = QuadSpace::from_symmetric_gram(&g).unwrap();
        assert_eq!(q.gram(), &g);
        assert!(q.polarization_holds());
    }

    #[test]
    fn dickson_examples() {
        let f = gf(2);
        let h = QuadSpace::hyperbolic(f, 2);
        assert_eq!(dickson(&Matrix::identity(f, 4), &h).unwrap(), 0);
        let swap = Matrix::permutation(f, &[2, 1, 0, 3]).unwrap();
        assert_eq!(dickson(&swap, &h).unwrap(), 1);
        let not_iso = Matrix::jordan_block(f, 4);
        assert_eq!(dickson(&not_iso, &h), Err(Error::NotIsometry));
        let h3 = QuadSpace::hyperbolic(gf(3), 2);
        assert!(matches!(
            dickson(&Matrix::identity(gf(3), 4), &h3),
            Err(Error::WrongCharacteristic { .. })
        ));
    }

    /// Products of orthogonal transvections have Dickson invariant equal to the
    /// number of factors mod 2; the rank formula must agree.
    #[test]
    fn dickson_matches_transvection_parity_and_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let f = gf(2);
        for l in [2, 3, 4] {
            let h = QuadSpace::hyperbolic(f, l);
            let random_element = |rng: &mut ChaCha8Rng| {
                let k = rng.gen_range(0..7);
                let mut g = Matrix::identity(f, 2 * l);
                for _ in 0..k {
                    let v = random_anisotropic(rng, &h);
                    g = &g * &h.reflection(&v).unwrap();
                }
                (g, (k % 2) as u8)
            };
            for _ in 0..40 {
                let (g, pg) = random_element(&mut rng);
                let (k, pk) = random_element(&mut rng);
                assert!(h.is_isometry(&g).unwrap());
                assert_eq!(dickson(&g, &h).unwrap(), pg);
                assert_eq!(dickson(&k, &h).unwrap(), pk);
                assert_eq!(dickson(&(&g * &k), &h).unwrap(), (pg + pk) % 2);
            }
        }
    }

    #[test]
    fn invariant_alternating_forms() {
        let f = gf(3);
        let forms = invariant_bilinear_forms(&Matrix::jordan_block(f, 2), FormKind::Alternating).unwrap();
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].rank(), 2);

        for p in [3, 5, 7] {
            for l in 1..=4 {
                let u = Matrix::jordan_block(gf(p), 2 * l);
                let forms = invariant_bilinear_forms(&u, FormKind::Alternating).unwrap();
                for b in &forms {
                    assert_eq!(&(&(&u.transpose() * b) * &u), b);
                    assert!(is_alternating(b));
                }
                let nd = first_nondegenerate_bilinear(&forms).expect("nondegenerate form");
                assert!(SympSpace::new(nd).is_ok());
            }
        }
    }

    #[test]
    fn invariant_symmetric_forms() {
        let u = Matrix::jordan_block(gf(3), 3);
        let forms = invariant_bilinear_forms(&u, FormKind::Symmetric).unwrap();
        for b in &forms {
            assert!(is_symmetric(b));
            assert_eq!(&(&(&u.transpose() * b) * &u), b);
        }
        let nd = first_nondegenerate_bilinear(&forms).unwrap();
        assert_eq!(nd.rank(), 3);
    }

    #[test]
    fn invariant_quadratic_forms_examples() {
        let f = gf(2);
        let all = invariant_quadratic_forms(&Matrix::identity(f, 3)).unwrap();
        assert_eq!(all.len(), 6);

        for l in 1..=4 {
            let u = Matrix::jordan_block(f, 2 * l);
            let forms = invariant_quadratic_forms(&u).unwrap();
            for q in &forms {
                assert!(q.is_isometry(&u).unwrap());
            }
            let q = first_nondegenerate_quadratic(&forms).expect("nondegenerate");
            assert!(q.is_isometry(&u).unwrap());
            assert_eq!(dickson(&u, &q).unwrap(), 1);
        }

        let j2 = Matrix::jordan_block(f, 2);
        let u = Matrix::block_diag(&[j2.clone(), j2]).unwrap();
        let forms = invariant_quadratic_forms(&u).unwrap();
        assert!(forms.len() >= 2);
        // some invariant form is hyperbolic: nondegenerate with a 2-dim totally singular subspace
        let mut found = false;
        for c in lex_coefficients(2, forms.len()) {
            let quads: Vec<Matrix> = forms.iter().map(|q| q.quad().clone()).collect();
            let q = QuadSpace::from_quad(&combine(&quads, &c)).unwrap();
            if !q.is_nondegenerate() {
                continue;
            }
            let singular: Vec<Vec<u32>> = (1..16u32)
                .map(|m| (0..4).map(|b| (m >> b) & 1).collect::<Vec<u32>>())
                .filter(|v| q.q(v) == 0)
                .collect();
            if singular.len() == 5 {
                found = true;
            }
        }
        assert!(found);
        assert!(matches!(
            invariant_quadratic_forms(&Matrix::identity(gf(3), 2)),
            Err(Error::WrongCharacteristic { .. })
        ));
    }

    #[test]
    fn symplectic_transvections_are_isometries() {
        for p in [2, 3, 5] {
            let s = SympSpace::standard(gf(p), 2);
            for v in [[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1]] {
                let t = symplectic_transvection(&s, &v, 1);
                assert!(s.is_isometry(&t).unwrap());
                assert!(!t.is_identity());
            }
        }
    }
}
