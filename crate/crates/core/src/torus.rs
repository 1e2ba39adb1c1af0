//! Symbolic tori normalised by unipotent elements.
//!
//! A [`DiagTorus`] is never enumerated as a set of field points. It is given
//! by an integer weight vector for each vector of a basis; the torus acts on
//! that basis vector through the corresponding character. Weight spaces,
//! normalisation and centralisation are all decided from this data.

use serde::Serialize;

use crate::classical::gl_stab_outer;
use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::forms::{dickson, FormSpace, QuadSpace, SympSpace};
use crate::jordan::{jordan_type, JordanType};
use crate::lattice::{lattice_rank, permutation_extends_to_automorphism};
use crate::matrix::{wedge2_matrix, Matrix};
use crate::subspace::SubspaceBasis;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagTorus {
    rank: usize,
    weights: Vec<Vec<i64>>,
    basis_change: Matrix,
}

/// A weight together with its weight space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSpace {
    pub weight: Vec<i64>,
    pub space: SubspaceBasis,
}

impl DiagTorus {
    /// Torus acting diagonally on the standard basis.
    pub fn new(field: FieldPrime, rank: usize, weights: Vec<Vec<i64>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParams("torus rank must be positive".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.len() != rank) {
            return Err(Error::Shape(format!("weight {w:?} does not have length {rank}")));
        }
        let n = weights.len();
        Ok(Self {
            rank,
            weights,
            basis_change: Matrix::identity(field, n),
        })
    }

    /// The torus acts diagonally on the columns of `b` instead.
    pub fn with_basis_change(mut self, b: Matrix) -> Result<Self> {
        if b.rows() != self.dim() || b.cols() != self.dim() {
            return Err(Error::Shape("basis change has the wrong size".into()));
        }
        if !b.is_invertible() {
            return Err(Error::Singular);
        }
        self.basis_change = b;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn field(&self) -> FieldPrime {
        self.basis_change.field()
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn basis_change(&self) -> &Matrix {
        &self.basis_change
    }

    /// Rank of the lattice spanned by the weights.
    pub fn lattice_rank(&self) -> usize {
        lattice_rank(&self.weights)
    }

    pub fn weights_sum_to_zero(&self) -> bool {
        (0..self.rank).all(|k| self.weights.iter().map(|w| w[k]).sum::<i64>() == 0)
    }

    /// Distinct weights in order of first occurrence, with their basis indices.
    fn grouped(&self) -> Vec<(Vec<i64>, Vec<usize>)> {
        let mut groups: Vec<(Vec<i64>, Vec<usize>)> = Vec::new();
        for (i, w) in self.weights.iter().enumerate() {
            match groups.iter_mut().find(|(v, _)| v == w) {
                Some((_, idx)) => idx.push(i),
                None => groups.push((w.clone(), vec![i])),
            }
        }
        groups
    }

    pub fn weight_spaces(&self) -> Vec<WeightSpace> {
        let f = self.field();
        let n = self.dim();
        self.grouped()
            .into_iter()
            .map(|(weight, idx)| {
                let vecs: Vec<Vec<u32>> = idx.iter().map(|&i| self.basis_change.col(i)).collect();
                WeightSpace {
                    weight,
                    space: SubspaceBasis::span(f, n, &vecs),
                }
            })
            .collect()
    }

    /// Projections onto the weight spaces along the others. A subspace is
    /// torus-invariant exactly when it is invariant under all of them.
    pub fn projections(&self) -> Vec<Matrix> {
        let f = self.field();
        let n = self.dim();
        let inv = self.basis_change.inverse().expect("checked invertible");
        self.grouped()
            .into_iter()
            .map(|(_, idx)| {
                let d = Matrix::from_fn(f, n, n, |i, j| i64::from(i == j && idx.contains(&i)));
                if self.basis_change.is_identity() {
                    d
                } else {
                    &(&self.basis_change * &d) * &inv
                }
            })
            .collect()
    }

    /// Induced torus on the exterior square: `e_i ^ e_j` has weight `w_i + w_j`.
    pub fn wedge2(&self) -> Result<Self> {
        let n = self.dim();
        let mut weights = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                weights.push(self.weights[i].iter().zip(&self.weights[j]).map(|(a, b)| a + b).collect());
            }
        }
        let t = Self::new(self.field(), self.rank, weights)?;
        if self.basis_change.is_identity() {
            Ok(t)
        } else {
            t.with_basis_change(wedge2_matrix(&self.basis_change))
        }
    }
}

/// The permutation of weight spaces induced by `u`, if `u` normalises the
/// torus: `u` must map weight spaces onto weight spaces and the induced map
/// on weights must extend to an automorphism of the weight lattice.
pub fn normalizes_torus(u: &Matrix, t: &DiagTorus) -> Option<Vec<usize>> {
    if u.rows() != t.dim() || u.cols() != t.dim() || !u.is_invertible() {
        return None;
    }
    let spaces = t.weight_spaces();
    let mut perm = Vec::with_capacity(spaces.len());
    for ws in &spaces {
        let image = ws.space.image(u);
        let target = spaces.iter().position(|other| other.space == image)?;
        perm.push(target);
    }
    let mut seen = vec![false; perm.len()];
    for &j in &perm {
        if std::mem::replace(&mut seen[j], true) {
            return None;
        }
    }
    let weights: Vec<Vec<i64>> = spaces.iter().map(|w| w.weight.clone()).collect();
    permutation_extends_to_automorphism(&weights, &perm).then_some(perm)
}

/// Whether `g` stabilises every weight space, which is the same as commuting
/// with every point of the torus.
pub fn centralizes_torus(g: &Matrix, t: &DiagTorus) -> bool {
    g.rows() == t.dim() && t.weight_spaces().iter().all(|ws| ws.space.is_invariant(g))
}

/// Cycles of a permutation, each starting at its smallest element, ordered by
/// that element.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        out.push(cycle);
    }
    out
}

/// The group containing a torus normaliser.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Ambient {
    Sl,
    Sp { form: SympSpace },
    So { form: QuadSpace },
    Go { form: QuadSpace },
}

impl Ambient {
    pub fn name(&self) -> &'static str {
        match self {
            Ambient::Sl => "SL",
            Ambient::Sp { .. } => "Sp",
            Ambient::So { .. } => "SO",
            Ambient::Go { .. } => "GO",
        }
    }

    pub fn contains(&self, g: &Matrix) -> Result<bool> {
        match self {
            Ambient::Sl => Ok(g.is_invertible()),
            Ambient::Sp { form } => form.is_isometry(g),
            Ambient::Go { form } => form.is_isometry(g),
            Ambient::So { form } => {
                if !form.is_isometry(g)? {
                    return Ok(false);
                }
                if form.field().p() == 2 {
                    Ok(dickson(g, form)? == 0)
                } else {
                    Ok(true)
                }
            }
        }
    }

    pub(crate) fn bilinear(&self, x: &[u32], y: &[u32]) -> u32 {
        match self {
            Ambient::Sl => 0,
            Ambient::Sp { form } => form.bilinear(x, y),
            Ambient::So { form } | Ambient::Go { form } => form.bilinear(x, y),
        }
    }

    /// Totally singular (quadratic) or totally isotropic (symplectic).
    pub fn is_totally_singular(&self, s: &SubspaceBasis) -> bool {
        match self {
            Ambient::Sl => false,
            Ambient::Sp { form } => form.is_totally_isotropic(s),
            Ambient::So { form } | Ambient::Go { form } => form.is_totally_singular(s),
        }
    }
}

/// A torus together with a unipotent element normalising it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusNormalizerDatum {
    pub construction: String,
    pub params: Vec<(String, u64)>,
    pub torus: DiagTorus,
    pub u: Matrix,
    pub ambient: Ambient,
}

impl TorusNormalizerDatum {
    pub fn p(&self) -> u32 {
        self.u.field().p()
    }

    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    pub fn jordan_type(&self) -> Result<JordanType> {
        jordan_type(&self.u)
    }

    /// Checks that `u` lies in the ambient group and normalises the torus,
    /// and that the torus lies in the ambient group.
    pub fn validate(&self) -> Result<Vec<usize>> {
        if !self.ambient.contains(&self.u)? {
            return Err(Error::Validation(format!("{}: u is not in {}", self.construction, self.ambient.name())));
        }
        if !self.torus_in_ambient() {
            return Err(Error::Validation(format!(
                "{}: torus is not in {}",
                self.construction,
                self.ambient.name()
            )));
        }
        normalizes_torus(&self.u, &self.torus)
            .ok_or_else(|| Error::Validation(format!("{}: u does not normalise the torus", self.construction)))
    }

    /// Determinant one, or preservation of the form: weight spaces for
    /// weights `a`, `b` pair trivially unless `a + b = 0`, and nonzero weight
    /// spaces are totally singular.
    fn torus_in_ambient(&self) -> bool {
        match &self.ambient {
            Ambient::Sl => self.torus.weights_sum_to_zero(),
            ambient => {
                let spaces = self.torus.weight_spaces();
                spaces.iter().all(|a| {
                    let zero = a.weight.iter().all(|&x| x == 0);
                    (zero || ambient.is_totally_singular(&a.space))
                        && spaces.iter().all(|b| {
                            let opposed = a.weight.iter().zip(&b.weight).all(|(x, y)| x + y == 0);
                            opposed
                                || a.space.vectors().iter().all(|x| {
                                    b.space.vectors().iter().all(|y| ambient.bilinear(x, y) == 0)
                                })
                        })
                })
            }
        }
    }

    pub fn params_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.params {
            map.insert(k.clone(), (*v).into());
        }
        serde_json::Value::Object(map)
    }
}

fn field(p: u32) -> Result<FieldPrime> {
    FieldPrime::new(p)
}

/// Block cyclic shift sending block `b` to block `b + 1` (mod `blocks`).
fn block_cycle(f: FieldPrime, blocks: usize, size: usize) -> Matrix {
    let perm: Vec<usize> = (0..blocks * size)
        .map(|i| ((i / size + 1) % blocks) * size + i % size)
        .collect();
    Matrix::permutation(f, &perm).expect("permutation")
}

/// `x . diag(seed, 1, ..., 1)` for the block cycle `x`.
fn wreath_element(seed: &Matrix, blocks: usize) -> Result<Matrix> {
    let f = seed.field();
    let size = seed.rows();
    let mut parts = vec![seed.clone()];
    parts.extend((1..blocks).map(|_| Matrix::identity(f, size)));
    Ok(&block_cycle(f, blocks, size) * &Matrix::block_diag(&parts)?)
}

fn unit_weight(rank: usize, k: usize, sign: i64) -> Vec<i64> {
    let mut w = vec![0; rank];
    w[k] = sign;
    w
}

/// Determinant-one block-scalar torus on `p^a` blocks of size `d`, normalised
/// by the block cycle twisted by `J_d` on the first block.
pub fn sl_wreath(p: u32, a: u32, d: usize) -> Result<TorusNormalizerDatum> {
    if a == 0 || d == 0 {
        return Err(Error::InvalidParams("sl_wreath needs a >= 1 and d >= 1".into()));
    }
    let f = field(p)?;
    let q = (p as usize)
        .checked_pow(a)
        .filter(|q| q.checked_mul(d).is_some_and(|n| n <= 4096))
        .ok_or_else(|| Error::InvalidParams("sl_wreath dimension too large".into()))?;
    let rank = q - 1;
    let mut weights = Vec::with_capacity(q * d);
    for b in 0..q {
        let w = if b < rank {
            unit_weight(rank, b, 1)
        } else {
            vec![-1; rank]
        };
        weights.extend(std::iter::repeat_n(w, d));
    }
    Ok(TorusNormalizerDatum {
        construction: "sl-wreath".into(),
        params: vec![("p".into(), p.into()), ("a".into(), a.into()), ("d".into(), d as u64)],
        torus: DiagTorus::new(f, rank, weights)?,
        u: wreath_element(&Matrix::jordan_block(f, d), q)?,
        ambient: Ambient::Sl,
    })
}

/// Wreath of `2^f` copies of the `GL_m.2 < GO_{2m}` outer element over the
/// central tori of the `GL_m` factors, in characteristic 2.
pub fn go_wreath(m: usize, f: u32, seed: u64) -> Result<TorusNormalizerDatum> {
    if m < 3 || m.is_multiple_of(2) || f == 0 {
        return Err(Error::InvalidParams("go_wreath needs odd m >= 3 and f >= 1".into()));
    }
    let copies = 1usize
        .checked_shl(f)
        .filter(|c| c * m <= 64)
        .ok_or_else(|| Error::InvalidParams("go_wreath dimension too large".into()))?;
    let gf2 = field(2)?;
    let v = gl_stab_outer(m, seed)?.u;
    let mut weights = Vec::new();
    for c in 0..copies {
        weights.extend(std::iter::repeat_n(unit_weight(copies, c, 1), m));
        weights.extend(std::iter::repeat_n(unit_weight(copies, c, -1), m));
    }
    let form = QuadSpace::orthogonal_sum(&vec![QuadSpace::hyperbolic(gf2, m); copies])?;
    Ok(TorusNormalizerDatum {
        construction: "go-wreath".into(),
        params: vec![("m".into(), m as u64), ("f".into(), f.into())],
        torus: DiagTorus::new(gf2, copies, weights)?,
        u: wreath_element(&v, copies)?,
        ambient: Ambient::Go { form },
    })
}

/// Central torus of `GL_l` in the stabiliser of a pair of complementary
/// maximal totally singular subspaces, with the regular outer element.
pub fn so_pair_stab(l: usize, seed: u64) -> Result<TorusNormalizerDatum> {
    if l < 4 || l % 2 == 1 {
        return Err(Error::InvalidParams("so_pair_stab needs even l >= 4".into()));
    }
    let rep = gl_stab_outer(l, seed)?;
    let gf2 = rep.field();
    let mut weights = vec![vec![1]; l];
    weights.extend(vec![vec![-1]; l]);
    Ok(TorusNormalizerDatum {
        construction: "so-pair-stab".into(),
        params: vec![("l".into(), l as u64)],
        torus: DiagTorus::new(gf2, 1, weights)?,
        u: rep.u,
        ambient: Ambient::So {
            form: QuadSpace::hyperbolic(gf2, l),
        },
    })
}

/// `GO_{2l-2} x GO_2` inside `SO_{2l}`, `l = 2^s + 1`: the first factor carries
/// the wreath of `2^s` hyperbolic planes with the swap, the second the swap
/// alone, and the torus is the maximal torus of the first factor.
pub fn so_orthsum(l: usize) -> Result<TorusNormalizerDatum> {
    let copies = l.saturating_sub(1);
    if copies < 4 || !copies.is_power_of_two() || copies > 64 {
        return Err(Error::InvalidParams("so_orthsum needs l = 2^s + 1 with 2 <= s <= 6".into()));
    }
    let gf2 = field(2)?;
    let swap = Matrix::permutation(gf2, &[1, 0])?;
    let u = Matrix::block_diag(&[wreath_element(&swap, copies)?, swap])?;
    let mut weights = Vec::new();
    for c in 0..copies {
        weights.push(unit_weight(copies, c, 1));
        weights.push(unit_weight(copies, c, -1));
    }
    weights.extend(vec![vec![0; copies]; 2]);
    let form = QuadSpace::orthogonal_sum(&vec![QuadSpace::hyperbolic(gf2, 1); copies + 1])?;
    Ok(TorusNormalizerDatum {
        construction: "so-orthsum".into(),
        params: vec![("l".into(), l as u64)],
        torus: DiagTorus::new(gf2, copies, weights)?,
        u,
        ambient: Ambient::So { form },
    })
}

/// Exterior square of `sl_wreath(2, 1, 2)`, viewed inside `SO_6`.
pub fn sl4_wedge() -> Result<TorusNormalizerDatum> {
    let base = sl_wreath(2, 1, 2)?;
    let gf2 = base.u.field();
    // basis e01, e02, e03, e12, e13, e23; Q = x01 x23 + x02 x13 + x03 x12
    let coeffs = Matrix::from_fn(gf2, 6, 6, |i, j| i64::from(i + j == 5 && i < j));
    Ok(TorusNormalizerDatum {
        construction: "sl4-wedge".into(),
        params: Vec::new(),
        torus: base.torus.wedge2()?,
        u: wedge2_matrix(&base.u),
        ambient: Ambient::So {
            form: QuadSpace::from_quad(&coeffs)?,
        },
    })
}

/// Outcome of [`classify_torus_case`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "case")]
pub enum TorusCase {
    /// All weight spaces have the common dimension `d`.
    EqualWeightDims { d: usize },
    /// Totally singular weight spaces in `r/2` mutually orthogonal opposed pairs.
    PairedSingular { r: usize },
    /// Two weight spaces swapped by `u`.
    SoSwap,
    /// One orbit of nonzero weight spaces plus a 2-dimensional zero weight space.
    SoZeroPlane,
    /// One orbit plus two opposed 1-dimensional weight spaces swapped by `u`.
    SoOpposedLines,
}

impl std::fmt::Display for TorusCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TorusCase::EqualWeightDims { d } => write!(f, "equal-weight-dims:d={d}"),
            TorusCase::PairedSingular { r } => write!(f, "paired-singular:r={r}"),
            TorusCase::SoSwap => write!(f, "so-case-1"),
            TorusCase::SoZeroPlane => write!(f, "so-case-2"),
            TorusCase::SoOpposedLines => write!(f, "so-case-3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub case: TorusCase,
    pub weight_dims: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
}

fn violated(datum: &TorusNormalizerDatum, what: &str) -> Error {
    Error::PropositionViolated(format!("{}: {what}", datum.construction))
}

fn is_zero(w: &[i64]) -> bool {
    w.iter().all(|&x| x == 0)
}

fn opposed(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x + y == 0)
}

/// Structure of the weight-space decomposition of a torus normaliser.
///
/// `SL`: the weight spaces are permuted transitively and share a dimension.
/// `Sp`/`GO`: additionally they are totally singular and pair up into
/// mutually orthogonal nondegenerate sums. `SO`: one of three shapes, see
/// [`TorusCase`]; in dimension 6 only the opposed-lines shape is accepted.
pub fn classify_torus_case(datum: &TorusNormalizerDatum) -> Result<Classification> {
    let perm = normalizes_torus(&datum.u, &datum.torus).ok_or_else(|| violated(datum, "u does not normalise T"))?;
    let spaces = datum.torus.weight_spaces();
    let dims: Vec<usize> = spaces.iter().map(|w| w.space.dim()).collect();
    let orbits = cycles(&perm);
    let r = spaces.len();
    let case = match &datum.ambient {
        Ambient::Sl => {
            if orbits.len() != 1 {
                return Err(violated(datum, "weight spaces are not permuted transitively"));
            }
            if dims.iter().any(|&d| d != dims[0]) {
                return Err(violated(datum, "weight spaces have different dimensions"));
            }
            TorusCase::EqualWeightDims { d: dims[0] }
        }
        Ambient::Sp { .. } | Ambient::Go { .. } => {
            if orbits.len() != 1 {
                return Err(violated(datum, "weight spaces are not permuted transitively"));
            }
            classify_paired(datum, &spaces)?;
            TorusCase::PairedSingular { r }
        }
        Ambient::So { .. } => classify_so(datum, &spaces, &orbits)?,
    };
    Ok(Classification {
        case,
        weight_dims: dims,
        orbits,
    })
}

fn classify_paired(datum: &TorusNormalizerDatum, spaces: &[WeightSpace]) -> Result<()> {
    let ambient = &datum.ambient;
    let n = datum.dim();
    for w in spaces {
        if is_zero(&w.weight) || !ambient.is_totally_singular(&w.space) {
            return Err(violated(datum, "a weight space is not totally singular"));
        }
    }
    let mut used = vec![false; spaces.len()];
    let mut pairs: Vec<SubspaceBasis> = Vec::new();
    for i in 0..spaces.len() {
        if used[i] {
            continue;
        }
        let j = (0..spaces.len())
            .find(|&j| !used[j] && j != i && opposed(&spaces[i].weight, &spaces[j].weight))
            .ok_or_else(|| violated(datum, "a weight has no opposed weight"))?;
        used[i] = true;
        used[j] = true;
        pairs.push(spaces[i].space.sum(&spaces[j].space));
    }
    let perp_of = |s: &SubspaceBasis| -> SubspaceBasis {
        match ambient {
            Ambient::Sp { form } => form.perp(s),
            Ambient::So { form } | Ambient::Go { form } => form.perp(s),
            Ambient::Sl => unreachable!(),
        }
    };
    for (a, pa) in pairs.iter().enumerate() {
        if !pa.intersection(&perp_of(pa)).is_zero() {
            return Err(violated(datum, "an opposed pair is degenerate"));
        }
        for pb in &pairs[a + 1..] {
            if !perp_of(pa).contains(pb) {
                return Err(violated(datum, "opposed pairs are not orthogonal"));
            }
        }
    }
    let total: usize = pairs.iter().map(SubspaceBasis::dim).sum();
    if total != n {
        return Err(violated(datum, "opposed pairs do not reassemble V"));
    }
    Ok(())
}

fn classify_so(datum: &TorusNormalizerDatum, spaces: &[WeightSpace], orbits: &[Vec<usize>]) -> Result<TorusCase> {
    let n = datum.dim();
    if n < 6 || (n < 8 && n != 6) {
        return Err(violated(datum, "orthogonal classification needs dim >= 8 (or the dim-6 opposed-lines shape)"));
    }
    let r = spaces.len();
    let l = n / 2;
    let case = if orbits.len() == 1 && r == 2 {
        let sq = &datum.u * &datum.u;
        let target = JordanType::new(vec![l - 1, 1]).expect("positive");
        let blocks_ok = l.is_multiple_of(2)
            && spaces.iter().all(|w| {
                sq.restrict_to(w.space.basis())
                    .ok()
                    .flatten()
                    .and_then(|m| jordan_type(&m).ok())
                    .is_some_and(|t| t == target)
            });
        if !blocks_ok {
            return Err(violated(datum, "two swapped weight spaces without the expected square"));
        }
        TorusCase::SoSwap
    } else if orbits.len() == 2 {
        let is_pair = |o: &Vec<usize>| {
            o.len() == 2
                && o.iter().all(|&i| spaces[i].space.dim() == 1)
                && opposed(&spaces[o[0]].weight, &spaces[o[1]].weight)
                && !is_zero(&spaces[o[0]].weight)
        };
        let is_zero_plane = |o: &Vec<usize>| {
            o.len() == 1 && is_zero(&spaces[o[0]].weight) && spaces[o[0]].space.dim() == 2
        };
        let pair_lines = is_pair(&orbits[0]) || is_pair(&orbits[1]);
        let zero_plane = is_zero_plane(&orbits[0]) || is_zero_plane(&orbits[1]);
        if pair_lines {
            TorusCase::SoOpposedLines
        } else if zero_plane {
            TorusCase::SoZeroPlane
        } else {
            return Err(violated(datum, "two orbits of neither allowed shape"));
        }
    } else {
        return Err(violated(datum, "u has more than two orbits on weight spaces"));
    };
    if n == 6 && case != TorusCase::SoOpposedLines {
        return Err(violated(datum, "dimension 6 admits only the opposed-lines shape"));
    }
    Ok(case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::jordan_power;

    fn gf(p: u32) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    #[test]
    fn weight_space_examples() {
        let d = sl_wreath(2, 1, 2).unwrap();
        let dims: Vec<usize> = d.torus.weight_spaces().iter().map(|w| w.space.dim()).collect();
        assert_eq!(dims, vec![2, 2]);
        let t = DiagTorus::new(gf(5), 2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        assert_eq!(t.weight_spaces().len(), 3);
        let h = so_pair_stab(4, 0).unwrap();
        let ws = h.torus.weight_spaces();
        assert_eq!(ws.len(), 2);
        assert_eq!(ws[0].weight, vec![1]);
        assert_eq!(ws[1].weight, vec![-1]);
        assert!(ws.iter().all(|w| w.space.dim() == 4));
    }

    #[test]
    fn normalization_examples() {
        let d = sl_wreath(2, 1, 2).unwrap();
        assert_eq!(normalizes_torus(&d.u, &d.torus), Some(vec![1, 0]));
        let d = sl_wreath(3, 1, 1).unwrap();
        assert_eq!(normalizes_torus(&d.u, &d.torus), Some(vec![1, 2, 0]));
        let id = Matrix::identity(gf(3), 3);
        assert_eq!(normalizes_torus(&id, &d.torus), Some(vec![0, 1, 2]));
        let generic = Matrix::from_rows(gf(3), &[[1, 1, 2], [0, 1, 1], [0, 0, 1]]).unwrap();
        assert_eq!(normalizes_torus(&generic, &d.torus), None);
    }

    #[test]
    fn centralization_examples() {
        let d = sl_wreath(2, 1, 2).unwrap();
        let u2 = d.u.pow(2);
        assert!(centralizes_torus(&u2, &d.torus));
        assert!(!u2.is_identity());
        assert!(!centralizes_torus(&d.u, &d.torus));
        let diag = Matrix::from_fn(gf(2), 4, 4, |i, j| i64::from(i == j));
        assert!(centralizes_torus(&diag, &d.torus));
    }

    #[test]
    fn sl_wreath_examples() {
        for (p, a, d, rank) in [(2, 1, 2, 1), (2, 2, 1, 3), (3, 1, 1, 2), (2, 1, 3, 1), (3, 1, 2, 2), (2, 3, 2, 7)] {
            let datum = sl_wreath(p, a, d).unwrap();
            datum.validate().unwrap();
            let n = (p as usize).pow(a) * d;
            assert_eq!(datum.jordan_type().unwrap(), JordanType::single(n));
            assert_eq!(datum.torus.rank(), rank);
            assert_eq!(datum.torus.lattice_rank(), rank);
            let q = (p as u64).pow(a);
            let blocks = vec![Matrix::jordan_block(gf(p), d); q as usize];
            assert_eq!(datum.u.pow(q), Matrix::block_diag(&blocks).unwrap());
            let c = classify_torus_case(&datum).unwrap();
            assert_eq!(c.case, TorusCase::EqualWeightDims { d });
        }
    }

    #[test]
    fn go_wreath_examples() {
        for (m, f, dim) in [(3, 1, 12), (5, 1, 20), (3, 2, 24)] {
            let datum = go_wreath(m, f, 0).unwrap();
            datum.validate().unwrap();
            assert_eq!(datum.dim(), dim);
            assert_eq!(datum.jordan_type().unwrap(), JordanType::single(dim));
            let z = datum.u.pow(1 << (f + 1));
            assert!(!z.is_identity());
            assert!(centralizes_torus(&z, &datum.torus));
            let c = classify_torus_case(&datum).unwrap();
            assert_eq!(c.case, TorusCase::PairedSingular { r: 2 << f });
        }
    }

    #[test]
    fn so_pair_stab_examples() {
        for (l, t) in [(4, "6+2"), (6, "10+2")] {
            let datum = so_pair_stab(l, 0).unwrap();
            datum.validate().unwrap();
            assert_eq!(datum.jordan_type().unwrap().to_string(), t);
            let z = &datum.u * &datum.u;
            assert!(!z.is_identity());
            assert!(centralizes_torus(&z, &datum.torus));
            assert_eq!(classify_torus_case(&datum).unwrap().case, TorusCase::SoSwap);
        }
    }

    #[test]
    fn so_orthsum_examples() {
        for (l, t) in [(5, "8+2"), (9, "16+2")] {
            let datum = so_orthsum(l).unwrap();
            datum.validate().unwrap();
            assert_eq!(datum.jordan_type().unwrap().to_string(), t);
            assert_eq!(datum.torus.lattice_rank(), l - 1);
            let c = classify_torus_case(&datum).unwrap();
            assert_eq!(c.case, TorusCase::SoZeroPlane);
            assert_eq!(c.orbits.len(), 2);
            assert_eq!(c.orbits[0].len(), 2 * l - 2);
            assert_eq!(*c.weight_dims.last().unwrap(), 2);
        }
        assert!(so_orthsum(3).is_err());
        assert!(so_orthsum(6).is_err());
    }

    #[test]
    fn sl4_wedge_example() {
        let datum = sl4_wedge().unwrap();
        datum.validate().unwrap();
        assert_eq!(datum.jordan_type().unwrap().to_string(), "4+2");
        let ws = datum.torus.weight_spaces();
        let summary: Vec<(i64, usize)> = ws.iter().map(|w| (w.weight[0], w.space.dim())).collect();
        assert_eq!(summary, vec![(2, 1), (0, 4), (-2, 1)]);
        let perm = normalizes_torus(&datum.u, &datum.torus).unwrap();
        assert_eq!(perm, vec![2, 1, 0]);
        assert_eq!(classify_torus_case(&datum).unwrap().case, TorusCase::SoOpposedLines);
    }

    #[test]
    fn dim_six_rejects_other_shapes() {
        // a 6-dim swap datum would be the first shape; it must be flagged
        let mut datum = so_pair_stab(4, 0).unwrap();
        let gf2 = gf(2);
        let rep = crate::classical::gl_stab_outer(3, 0).unwrap();
        datum.u = rep.u;
        datum.torus = DiagTorus::new(gf2, 1, [vec![vec![1]; 3], vec![vec![-1]; 3]].concat()).unwrap();
        datum.ambient = Ambient::So {
            form: QuadSpace::hyperbolic(gf2, 3),
        };
        assert!(matches!(classify_torus_case(&datum), Err(Error::PropositionViolated(_))));
    }

    #[test]
    fn power_map_consistent_on_wreaths() {
        let datum = go_wreath(3, 1, 0).unwrap();
        let t = datum.jordan_type().unwrap();
        assert_eq!(jordan_type(&(&datum.u * &datum.u)).unwrap(), jordan_power(&t, 2));
    }
}
