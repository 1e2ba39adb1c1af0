//! Regular unipotent representatives in the classical groups, on their
//! natural modules.
//!
//! Every representative is an explicit unipotent matrix together with an
//! invariant form, either found by the invariant-form solvers around a fixed
//! Jordan block or built directly (the outer elements of `GL_l.2`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::forms::{
    dickson, first_nondegenerate_bilinear, first_nondegenerate_quadratic, invariant_bilinear_forms,
    invariant_quadratic_forms, ser_matrix, FormKind, FormSpace, QuadSpace, SympSpace,
};
use crate::jordan::{jordan_type, unipotent_order, JordanType};
use crate::matrix::Matrix;

/// Candidate cap for the `GL_l.2` outer search.
pub const GL_STAB_CAP: u64 = 1_000_000;

/// Seed used by the `GL_l.2` outer search once unitriangular candidates are
/// exhausted, unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupTag {
    #[serde(rename = "SL")]
    Sl,
    #[serde(rename = "Sp")]
    Sp,
    #[serde(rename = "SO_odd")]
    SoOdd,
    #[serde(rename = "SO_even")]
    SoEven,
    #[serde(rename = "GO_outer")]
    GoOuter,
    #[serde(rename = "GLl2_outer")]
    GlStabOuter,
}

/// The form preserved by a representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Form {
    Symplectic(SympSpace),
    Quadratic(QuadSpace),
}

impl Form {
    pub fn is_isometry(&self, g: &Matrix) -> Result<bool> {
        match self {
            Form::Symplectic(s) => s.is_isometry(g),
            Form::Quadratic(q) => q.is_isometry(g),
        }
    }

    pub fn as_quadratic(&self) -> Option<&QuadSpace> {
        match self {
            Form::Quadratic(q) => Some(q),
            Form::Symplectic(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularRep {
    pub group_tag: GroupTag,
    /// `n` for `SL`, `SO_odd` and `SO_even`, the dimension `2l` for `Sp` and
    /// `GO_outer`, and `l` for `GLl2_outer`.
    pub param: usize,
    pub p: u32,
    pub u: Matrix,
    pub form: Option<Form>,
    pub expected_type: JordanType,
}

#[derive(Serialize)]
struct RepJson<'a> {
    group_tag: GroupTag,
    params: serde_json::Value,
    p: u32,
    #[serde(serialize_with = "ser_matrix")]
    u: &'a Matrix,
    form: &'a Option<Form>,
    jordan_type: JordanType,
    order: u64,
    dickson: Option<u8>,
}

impl RegularRep {
    pub fn field(&self) -> FieldPrime {
        self.u.field()
    }

    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    pub fn jordan_type(&self) -> Result<JordanType> {
        jordan_type(&self.u)
    }

    pub fn order(&self) -> Result<u64> {
        Ok(unipotent_order(&self.jordan_type()?, self.p))
    }

    /// Dickson invariant when the form is quadratic in characteristic 2.
    pub fn dickson(&self) -> Option<u8> {
        match &self.form {
            Some(Form::Quadratic(q)) if self.p == 2 => dickson(&self.u, q).ok(),
            _ => None,
        }
    }

    /// Checks isometry and the expected Jordan type.
    pub fn validate(&self) -> Result<()> {
        if let Some(form) = &self.form {
            if !form.is_isometry(&self.u)? {
                return Err(Error::NotIsometry);
            }
        }
        let actual = self.jordan_type()?;
        if actual != self.expected_type {
            return Err(Error::Validation(format!(
                "{:?}: expected type {}, got {actual}",
                self.group_tag, self.expected_type
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let name = match self.group_tag {
            GroupTag::Sl | GroupTag::SoOdd | GroupTag::SoEven => "n",
            GroupTag::Sp | GroupTag::GoOuter => "dim",
            GroupTag::GlStabOuter => "l",
        };
        let doc = RepJson {
            group_tag: self.group_tag,
            params: serde_json::json!({ name: self.param }),
            p: self.p,
            u: &self.u,
            form: &self.form,
            jordan_type: self.jordan_type()?,
            order: self.order()?,
            dickson: self.dickson(),
        };
        Ok(serde_json::to_value(doc).expect("serializable"))
    }
}

/// Block pattern of a regular unipotent element on the natural module.
///
/// `param` follows the convention of [`RegularRep::param`].
pub fn expected_block_pattern(tag: GroupTag, param: usize, p: u32) -> JordanType {
    match tag {
        GroupTag::Sl | GroupTag::Sp | GroupTag::GoOuter => JordanType::single(param),
        GroupTag::SoOdd if p == 2 => JordanType::new(vec![param - 1, 1]).expect("positive"),
        GroupTag::SoOdd => JordanType::single(param),
        GroupTag::SoEven if p == 2 => JordanType::new(vec![param - 2, 2]).expect("positive"),
        GroupTag::SoEven => JordanType::new(vec![param - 1, 1]).expect("positive"),
        GroupTag::GlStabOuter if param % 2 == 1 => JordanType::single(2 * param),
        GroupTag::GlStabOuter => JordanType::new(vec![2 * param - 2, 2]).expect("positive"),
    }
}

fn field(p: u32) -> Result<FieldPrime> {
    FieldPrime::new(p)
}

pub fn regular_in_sl(n: usize, p: u32) -> Result<RegularRep> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("SL_n needs n >= 2, got {n}")));
    }
    let f = field(p)?;
    Ok(RegularRep {
        group_tag: GroupTag::Sl,
        param: n,
        p,
        u: Matrix::jordan_block(f, n),
        form: None,
        expected_type: JordanType::single(n),
    })
}

pub fn regular_in_sp(dim: usize, p: u32) -> Result<RegularRep> {
    if dim < 2 || dim % 2 == 1 {
        return Err(Error::InvalidParams(format!("Sp needs an even dimension >= 2, got {dim}")));
    }
    let f = field(p)?;
    let u = Matrix::jordan_block(f, dim);
    let forms = invariant_bilinear_forms(&u, FormKind::Alternating)?;
    let gram = first_nondegenerate_bilinear(&forms)
        .ok_or_else(|| Error::NoNondegenerateForm(format!("alternating, J_{dim} over GF({p})")))?;
    Ok(RegularRep {
        group_tag: GroupTag::Sp,
        param: dim,
        p,
        u,
        form: Some(Form::Symplectic(SympSpace::new(gram)?)),
        expected_type: JordanType::single(dim),
    })
}

/// Nondegenerate quadratic form invariant under `u`, chosen deterministically.
fn invariant_quadratic_space(u: &Matrix) -> Result<QuadSpace> {
    let f = u.field();
    if f.p() == 2 {
        let forms = invariant_quadratic_forms(u)?;
        first_nondegenerate_quadratic(&forms)
    } else {
        let forms = invariant_bilinear_forms(u, FormKind::Symmetric)?;
        first_nondegenerate_bilinear(&forms).map(|g| QuadSpace::from_symmetric_gram(&g).expect("odd p"))
    }
    .ok_or_else(|| Error::NoNondegenerateForm(format!("quadratic, dim {} over GF({})", u.rows(), f.p())))
}

/// The anisotropic plane `x^2 + xy + y^2` over GF(2), preserved by `J_2`.
fn anisotropic_plane() -> QuadSpace {
    let f = FieldPrime::new(2).expect("prime");
    QuadSpace::from_quad(&Matrix::from_fn(f, 2, 2, |i, j| i64::from(i <= j))).expect("square")
}

/// Regular unipotent element of `SO_n`.
///
/// Odd `n`: a single block for odd `p` and blocks `n-1, 1` for `p = 2`, where
/// the form has a one-dimensional radical. Even `n`: blocks `n-1, 1` for odd
/// `p`; for `p = 2` a single-block element of `GO_{n-2}` summed with `J_2` on
/// the anisotropic plane, giving blocks `n-2, 2` and Dickson invariant 0.
pub fn regular_in_so(n: usize, p: u32) -> Result<RegularRep> {
    let f = field(p)?;
    let odd = n % 2 == 1;
    if (odd && n < 3) || (!odd && n < 6) {
        return Err(Error::InvalidParams(format!("SO_n needs n >= 3 (odd) or n >= 6 (even), got {n}")));
    }
    let (tag, u, space) = if odd {
        let u = if p == 2 {
            Matrix::block_diag(&[Matrix::jordan_block(f, n - 1), Matrix::identity(f, 1)])?
        } else {
            Matrix::jordan_block(f, n)
        };
        let q = invariant_quadratic_space(&u)?;
        (GroupTag::SoOdd, u, q)
    } else if p == 2 {
        let outer = go_outer_regular(n - 2)?;
        let q = QuadSpace::orthogonal_sum(&[
            outer.form.as_ref().and_then(Form::as_quadratic).expect("quadratic").clone(),
            anisotropic_plane(),
        ])?;
        let u = Matrix::block_diag(&[outer.u, Matrix::jordan_block(f, 2)])?;
        (GroupTag::SoEven, u, q)
    } else {
        let u = Matrix::block_diag(&[Matrix::jordan_block(f, n - 1), Matrix::identity(f, 1)])?;
        let q = invariant_quadratic_space(&u)?;
        (GroupTag::SoEven, u, q)
    };
    Ok(RegularRep {
        group_tag: tag,
        param: n,
        p,
        u,
        form: Some(Form::Quadratic(space)),
        expected_type: expected_block_pattern(tag, n, p),
    })
}

/// Single-block element of `GO_{dim}` outside `SO_{dim}`, characteristic 2.
pub fn go_outer_regular(dim: usize) -> Result<RegularRep> {
    if dim < 4 || dim % 2 == 1 {
        return Err(Error::InvalidParams(format!("GO outer needs an even dimension >= 4, got {dim}")));
    }
    let f = field(2)?;
    let u = Matrix::jordan_block(f, dim);
    let q = invariant_quadratic_space(&u)?;
    Ok(RegularRep {
        group_tag: GroupTag::GoOuter,
        param: dim,
        p: 2,
        u,
        form: Some(Form::Quadratic(q)),
        expected_type: JordanType::single(dim),
    })
}

/// The element `tau . diag(g, g^{-T})` of the stabiliser of the pair of
/// totally singular subspaces `<e_i>`, `<f_i>` of the hyperbolic space, where
/// `tau` swaps `e_i` and `f_i`.
pub fn swap_element(g: &Matrix) -> Result<Matrix> {
    let f = g.field();
    let l = g.rows();
    let d = Matrix::block_diag(&[g.clone(), g.inverse()?.transpose()])?;
    let perm: Vec<usize> = (0..2 * l).map(|i| (i + l) % (2 * l)).collect();
    Ok(&Matrix::permutation(f, &perm)? * &d)
}

/// Jordan type `g^{-T} g` must have for `swap_element(g)` to be regular.
fn square_target(l: usize) -> JordanType {
    if l % 2 == 1 {
        JordanType::single(l)
    } else {
        JordanType::new(vec![l - 1, 1]).expect("positive")
    }
}

fn is_square_target(g: &Matrix, target: &JordanType) -> bool {
    let Ok(inv) = g.inverse() else { return false };
    let sq = &inv.transpose() * g;
    matches!(jordan_type(&sq), Ok(t) if &t == target)
}

/// Upper unitriangular matrix whose above-diagonal entries (row-major) are
/// the bits of `mask`.
fn unitriangular(f: FieldPrime, l: usize, mask: u64) -> Matrix {
    let mut m = Matrix::identity(f, l);
    let mut bit = 0;
    for i in 0..l {
        for j in i + 1..l {
            if mask >> bit & 1 == 1 {
                m.set(i, j, 1);
            }
            bit += 1;
        }
    }
    m
}

/// Searches `GL_l(2)` for `g` with `g^{-T} g` of the regular square type:
/// unitriangular candidates by increasing bitmask, then seeded random
/// matrices, at most `cap` candidates in total.
pub fn find_gl_stab_g(l: usize, seed: u64, cap: u64) -> Result<Matrix> {
    let f = field(2)?;
    let target = square_target(l);
    let positions = l * (l - 1) / 2;
    let tri = if positions >= 63 { u64::MAX } else { 1u64 << positions };
    let tri_budget = tri.min(cap);
    for mask in 0..tri_budget {
        let g = unitriangular(f, l, mask);
        if is_square_target(&g, &target) {
            return Ok(g);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in tri_budget..cap {
        let g = Matrix::from_fn(f, l, l, |_, _| i64::from(rng.gen_range(0..2u32)));
        if is_square_target(&g, &target) {
            return Ok(g);
        }
    }
    Err(Error::SearchExhausted {
        what: format!("GL_{l}(2) element with square of type {target}"),
        cap,
    })
}

/// Regular element of the outer coset of `GL_l.2 < GO_{2l}`, characteristic 2.
pub fn gl_stab_outer(l: usize, seed: u64) -> Result<RegularRep> {
    if l < 3 {
        return Err(Error::InvalidParams(format!("GL_l.2 outer needs l >= 3, got {l}")));
    }
    let g = find_gl_stab_g(l, seed, GL_STAB_CAP)?;
    let u = swap_element(&g)?;
    Ok(RegularRep {
        group_tag: GroupTag::GlStabOuter,
        param: l,
        p: 2,
        u,
        form: Some(Form::Quadratic(QuadSpace::hyperbolic(g.field(), l))),
        expected_type: expected_block_pattern(GroupTag::GlStabOuter, l, 2),
    })
}
