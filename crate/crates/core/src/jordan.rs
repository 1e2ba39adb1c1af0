//! Jordan types of unipotent matrices in characteristic p.
//!
//! The block structure of a unipotent `u` is read off the rank sequence
//! `r_k = rank((u - 1)^k)`: the number of blocks of size at least `k` is
//! `r_{k-1} - r_k`. Everything else here is either a closed form checked
//! against that oracle, or the oracle applied to a constructed matrix.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::matrix::{sym2_matrix, wedge2_matrix, Matrix};

/// A partition of the dimension, blocks in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanType {
    blocks: Vec<usize>,
}

impl JordanType {
    /// Sorts the blocks; zero-size blocks are rejected.
    pub fn new(mut blocks: Vec<usize>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::InvalidParams("Jordan blocks must be positive".into()));
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { blocks })
    }

    /// A single block of size `n`.
    pub fn single(n: usize) -> Self {
        Self { blocks: vec![n] }
    }

    /// The identity type `[1, ..., 1]`.
    pub fn trivial(n: usize) -> Self {
        Self { blocks: vec![1; n] }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn max_block(&self) -> usize {
        self.blocks.first().copied().unwrap_or(0)
    }

    pub fn is_single_block(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Disjoint union of two partitions.
    pub fn union(&self, other: &JordanType) -> JordanType {
        let mut b = self.blocks.clone();
        b.extend_from_slice(&other.blocks);
        b.sort_unstable_by(|x, y| y.cmp(x));
        JordanType { blocks: b }
    }

    /// Block-diagonal sum of Jordan blocks realizing this type.
    pub fn realize(&self, field: FieldPrime) -> Matrix {
        if self.blocks.is_empty() {
            return Matrix::zeros(field, 0, 0);
        }
        let blocks: Vec<Matrix> = self
            .blocks
            .iter()
            .map(|&n| Matrix::jordan_block(field, n))
            .collect();
        Matrix::block_diag(&blocks).expect("same field")
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for JordanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let t = JordanType::new(blocks.clone()).map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        if t.blocks != blocks {
            return Err(Error::Parse(format!("partition {s:?} is not in descending order")));
        }
        Ok(t)
    }
}

impl Serialize for JordanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Jordan type of a unipotent matrix from its rank sequence.
pub fn jordan_type(u: &Matrix) -> Result<JordanType> {
    if !u.is_square() {
        return Err(Error::Shape("Jordan type of a non-square matrix".into()));
    }
    let n = u.rows();
    let nil = u.minus_identity();
    let mut ranks = vec![n];
    let mut power = Matrix::identity(u.field(), n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(Error::NotUnipotent);
        }
        power = &power * &nil;
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(Error::NotUnipotent);
        }
        ranks.push(r);
    }
    // at_least[k-1] = number of blocks of size >= k
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut blocks = Vec::with_capacity(at_least.first().copied().unwrap_or(0));
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        blocks.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(JordanType { blocks })
}

/// Closed form for the Jordan type of `u^p`: a block of size `n = a*p + b`
/// (`0 <= b < p`) becomes `b` blocks of size `a + 1` and `p - b` blocks of
/// size `a`. Blocks of size zero are dropped.
pub fn jordan_power(t: &JordanType, p: u32) -> JordanType {
    let p = p as usize;
    let mut blocks = Vec::new();
    for &n in &t.blocks {
        let (a, b) = (n / p, n % p);
        blocks.extend(std::iter::repeat_n(a + 1, b));
        if a > 0 {
            blocks.extend(std::iter::repeat_n(a, p - b));
        }
    }
    blocks.sort_unstable_by(|x, y| y.cmp(x));
    JordanType { blocks }
}

/// Jordan type of `J_a ⊗ J_b` for single blocks, by the rank oracle.
pub fn tensor_of_blocks(a: usize, b: usize, field: FieldPrime) -> JordanType {
    let ja = Matrix::jordan_block(field, a);
    let jb = Matrix::jordan_block(field, b);
    jordan_type(&ja.kronecker(&jb).expect("same field")).expect("tensor of unipotents is unipotent")
}

/// Jordan type of `J_s ⊗ J_t` over GF(p), summed over pairs of blocks.
pub fn jordan_tensor(s: &JordanType, t: &JordanType, field: FieldPrime) -> JordanType {
    TensorTable::new(field).tensor(s, t)
}

/// Memo table for block-pair tensor products over a fixed field.
#[derive(Debug, Clone)]
pub struct TensorTable {
    field: FieldPrime,
    pairs: HashMap<(usize, usize), JordanType>,
}

impl TensorTable {
    pub fn new(field: FieldPrime) -> Self {
        Self {
            field,
            pairs: HashMap::new(),
        }
    }

    pub fn pair(&mut self, a: usize, b: usize) -> JordanType {
        let key = (a.min(b), a.max(b));
        let field = self.field;
        self.pairs
            .entry(key)
            .or_insert_with(|| tensor_of_blocks(key.0, key.1, field))
            .clone()
    }

    pub fn tensor(&mut self, s: &JordanType, t: &JordanType) -> JordanType {
        let mut acc = JordanType { blocks: Vec::new() };
        for &a in &s.blocks {
            for &b in &t.blocks {
                acc = acc.union(&self.pair(a, b));
            }
        }
        acc
    }
}

/// Jordan type of the induced action on the exterior square.
pub fn jordan_wedge2(u: &Matrix) -> Result<JordanType> {
    if u.rows() < 2 {
        return Err(Error::InvalidParams("exterior square needs dimension >= 2".into()));
    }
    jordan_type(u)?;
    jordan_type(&wedge2_matrix(u))
}

/// Jordan type of the induced action on the symmetric square.
pub fn jordan_sym2(u: &Matrix) -> Result<JordanType> {
    if u.rows() < 2 {
        return Err(Error::InvalidParams("symmetric square needs dimension >= 2".into()));
    }
    jordan_type(u)?;
    jordan_type(&sym2_matrix(u))
}

/// Order of a unipotent element of the given type: the least power of `p`
/// that is at least the largest block.
pub fn unipotent_order(t: &JordanType, p: u32) -> u64 {
    let m = t.max_block() as u64;
    let mut q = 1u64;
    while q < m {
        q *= u64::from(p);
    }
    q
}

/// All partitions of `n`, each in descending order.
pub fn partitions(n: usize) -> Vec<JordanType> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<JordanType>) {
        if rest == 0 {
            out.push(JordanType { blocks: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    fn jt(s: &str) -> JordanType {
        s.parse().unwrap()
    }

    /// Independent route for the exterior/symmetric square: the quotient of
    /// `V ⊗ V` by the kernel of the projection, with ranks taken modulo that
    /// kernel. `symmetric = false` quotients by span{e_i⊗e_i, e_i⊗e_j + e_j⊗e_i},
    /// `symmetric = true` by span{e_i⊗e_j - e_j⊗e_i}.
    fn quotient_square_type(u: &Matrix, symmetric: bool) -> JordanType {
        let f = u.field();
        let n = u.rows();
        let big = u.kronecker(u).unwrap();
        let idx = |i: usize, j: usize| i * n + j;
        let mut rel: Vec<Vec<u32>> = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut v = vec![0u32; n * n];
                if symmetric {
                    if i == j {
                        continue;
                    }
                    v[idx(i, j)] = 1;
                    v[idx(j, i)] = f.neg(1);
                } else if i == j {
                    v[idx(i, i)] = 1;
                } else {
                    v[idx(i, j)] = 1;
                    v[idx(j, i)] = 1;
                }
                rel.push(v);
            }
        }
        let rel_rank = Matrix::from_vec(f, rel.len(), n * n, rel.concat()).unwrap().rank();
        let quotient_dim = n * n - rel_rank;
        let nil = big.minus_identity();
        let mut power = Matrix::identity(f, n * n);
        let mut ranks = vec![quotient_dim];
        while *ranks.last().unwrap() > 0 {
            power = &power * &nil;
            // rank of the induced map = dim((image + rel) / rel)
            let mut rows = power.transpose().row_vecs();
            rows.extend(rel.iter().cloned());
            let m = Matrix::from_vec(f, rows.len(), n * n, rows.concat()).unwrap();
            ranks.push(m.rank() - rel_rank);
            assert!(ranks.len() <= quotient_dim + 2, "not unipotent");
        }
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut blocks = Vec::new();
        for k in 1..=at_least.len() {
            let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            blocks.extend(std::iter::repeat_n(k, exactly));
        }
        JordanType::new(blocks).unwrap()
    }

    #[test]
    fn partition_text_format() {
        let t = jt("7+4+1");
        assert_eq!(t.blocks(), &[7, 4, 1]);
        assert_eq!(t.to_string(), "7+4+1");
        assert!("4+7".parse::<JordanType>().is_err());
        assert!("4+0".parse::<JordanType>().is_err());
        assert!("x".parse::<JordanType>().is_err());
        assert_eq!(serde_json::to_string(&t).unwrap(), "\"7+4+1\"");
    }

    #[test]
    fn jordan_type_examples() {
        let f = gf(2);
        assert_eq!(jordan_type(&Matrix::jordan_block(f, 5)).unwrap(), jt("5"));
        let m = Matrix::block_diag(&[Matrix::jordan_block(f, 3), Matrix::jordan_block(f, 2)]).unwrap();
        assert_eq!(jordan_type(&m).unwrap(), jt("3+2"));
        assert_eq!(jordan_type(&Matrix::identity(f, 3)).unwrap(), jt("1+1+1"));
    }

    #[test]
    fn jordan_type_rejects_non_unipotent() {
        let f = gf(3);
        let d = Matrix::from_rows(f, &[[2, 0], [0, 1]]).unwrap();
        assert_eq!(jordan_type(&d), Err(Error::NotUnipotent));
        let s = Matrix::from_rows(f, &[[0, 1], [1, 0]]).unwrap();
        assert_eq!(jordan_type(&s), Err(Error::NotUnipotent));
    }

    #[test]
    fn power_map_examples() {
        assert_eq!(jordan_power(&jt("7"), 2), jt("4+3"));
        assert_eq!(jordan_power(&jt("9"), 3), jt("3+3+3"));
        for p in [2, 3, 5, 7] {
            assert_eq!(jordan_power(&jt("1"), p), jt("1"));
        }
        // blocks smaller than p split into ones
        assert_eq!(jordan_power(&jt("2"), 3), jt("1+1"));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(jordan_tensor(&jt("2"), &jt("2"), gf(2)), jt("2+2"));
        assert_eq!(jordan_tensor(&jt("3"), &jt("3"), gf(2)), jt("4+4+1"));
        for p in [2, 3, 5] {
            assert_eq!(jordan_tensor(&jt("3"), &jt("1"), gf(p)), jt("3"));
        }
        // characteristic-0-like behaviour for large p: [2]⊗[2] = [3,1]
        assert_eq!(jordan_tensor(&jt("2"), &jt("2"), gf(5)), jt("3+1"));
    }

    #[test]
    fn tensor_is_commutative_and_conserves_dimension() {
        for p in [2, 3, 5] {
            let f = gf(p);
            let mut table = TensorTable::new(f);
            for s in partitions(4) {
                for t in partitions(3) {
                    let st = table.tensor(&s, &t);
                    assert_eq!(st, table.tensor(&t, &s));
                    assert_eq!(st.dim(), 12);
                }
                assert_eq!(table.tensor(&s, &jt("1")), s);
            }
        }
    }

    #[test]
    fn wedge_and_sym_examples_against_quotient_oracle() {
        let j4 = Matrix::jordan_block(gf(2), 4);
        // Frozen from the quotient oracle below.
        assert_eq!(quotient_square_type(&j4, false), jt("4+2"));
        assert_eq!(jordan_wedge2(&j4).unwrap(), jt("4+2"));

        let j2 = Matrix::jordan_block(gf(3), 2);
        assert_eq!(quotient_square_type(&j2, true), jt("3"));
        assert_eq!(jordan_sym2(&j2).unwrap(), jt("3"));

        for n in 2..6 {
            let id = Matrix::identity(gf(5), n);
            assert_eq!(jordan_wedge2(&id).unwrap(), JordanType::trivial(n * (n - 1) / 2));
        }
    }

    #[test]
    fn wedge_and_sym_agree_with_quotient_oracle_on_small_types() {
        for p in [2, 3, 5] {
            let f = gf(p);
            for n in 2..=5 {
                for t in partitions(n) {
                    let u = t.realize(f);
                    assert_eq!(jordan_wedge2(&u).unwrap(), quotient_square_type(&u, false), "wedge {t} p={p}");
                    assert_eq!(jordan_sym2(&u).unwrap(), quotient_square_type(&u, true), "sym {t} p={p}");
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(unipotent_order(&jt("6"), 2), 8);
        assert_eq!(unipotent_order(&jt("8"), 2), 8);
        for p in [3u32, 5, 7] {
            for m in 1..p as usize {
                assert_eq!(unipotent_order(&JordanType::single(m + 1), p), u64::from(p));
            }
        }
        assert_eq!(unipotent_order(&jt("1+1"), 3), 1);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
