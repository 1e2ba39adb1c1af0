//! Module structure of matrix groups: spinning, exhaustive irreducibility,
//! commutants and fixed spaces.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::matrix::Matrix;
use crate::subspace::{line_at, line_count, Echelon, SubspaceBasis};

/// Default bound on the number of lines enumerated by exhaustive searches.
pub const LINE_CAP: u64 = 10_000_000;

/// A group acting on GF(p)^n through generator matrices.
///
/// Extra endomorphisms (for instance weight-space projections of a torus) can
/// be attached; invariant subspaces must then be stable under them as well.
#[derive(Debug, Clone)]
pub struct ModuleAction {
    field: FieldPrime,
    dim: usize,
    generators: Vec<Matrix>,
    operators: Vec<Matrix>,
    /// Diagonal endomorphisms, applied entrywise.
    diagonals: Vec<Vec<u32>>,
}

impl ModuleAction {
    pub fn new(field: FieldPrime, dim: usize, generators: Vec<Matrix>) -> Result<Self> {
        let mut operators = Vec::with_capacity(2 * generators.len());
        for g in &generators {
            if g.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.p(),
                    right: g.field().p(),
                });
            }
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Shape(format!("generator is {}x{}, expected {dim}x{dim}", g.rows(), g.cols())));
            }
            operators.push(g.clone());
            let inv = g.inverse()?;
            if &inv != g {
                operators.push(inv);
            }
        }
        Ok(Self {
            field,
            dim,
            generators,
            operators,
            diagonals: Vec::new(),
        })
    }

    /// Adds endomorphisms that invariant subspaces must also be stable under.
    pub fn with_endomorphisms(mut self, extra: impl IntoIterator<Item = Matrix>) -> Result<Self> {
        for m in extra {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(Error::Shape("endomorphism has the wrong shape".into()));
            }
            let diagonal = (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || m.get(i, j) == 0));
            if diagonal {
                self.diagonals.push((0..self.dim).map(|i| m.get(i, i)).collect());
            } else {
                self.operators.push(m);
            }
        }
        Ok(self)
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Every operator used for closure: generators, their inverses and any
    /// attached endomorphisms.
    pub fn operators(&self) -> Vec<Matrix> {
        let mut ops = self.operators.clone();
        for d in &self.diagonals {
            ops.push(Matrix::from_fn(self.field, self.dim, self.dim, |i, j| {
                if i == j {
                    i64::from(d[i])
                } else {
                    0
                }
            }));
        }
        ops
    }

    fn apply_all<'a>(&'a self, v: &'a [u32]) -> impl Iterator<Item = Vec<u32>> + 'a {
        let f = self.field;
        let dense = self.operators.iter().map(move |op| op.mul_vec(v));
        let diag = self
            .diagonals
            .iter()
            .map(move |d| d.iter().zip(v).map(|(&a, &b)| f.mul(a, b)).collect());
        dense.chain(diag)
    }

    /// Closure of `seeds` under all operators; `reject` is consulted on every
    /// new basis row and aborts the closure (returning `None`) when it fires.
    pub(crate) fn spin_until<F>(&self, seeds: &[Vec<u32>], mut reject: F) -> Option<Echelon>
    where
        F: FnMut(&Echelon, &[u32]) -> bool,
    {
        let mut e = Echelon::new(self.field, self.dim);
        let mut queue: Vec<Vec<u32>> = Vec::new();
        let mut push = |e: &mut Echelon, queue: &mut Vec<Vec<u32>>, v: Vec<u32>| -> bool {
            let mut w = v;
            if e.reduce(&mut w).is_none() {
                return true;
            }
            if reject(e, &w) {
                return false;
            }
            let row = e.insert(w).expect("not in span").clone();
            queue.push(row);
            true
        };
        for s in seeds {
            if !push(&mut e, &mut queue, s.clone()) {
                return None;
            }
        }
        while let Some(v) = queue.pop() {
            for w in self.apply_all(&v) {
                if e.dim() == self.dim {
                    return Some(e);
                }
                if !push(&mut e, &mut queue, w) {
                    return None;
                }
            }
        }
        Some(e)
    }

    /// Smallest invariant subspace containing `seeds`.
    pub fn spin(&self, seeds: &SubspaceBasis) -> SubspaceBasis {
        self.spin_until(&seeds.vectors(), |_, _| false)
            .expect("closure without rejection")
            .to_subspace()
    }

    /// Whether every operator maps `s` into itself.
    pub fn is_invariant(&self, s: &SubspaceBasis) -> bool {
        self.operators().iter().all(|g| s.is_invariant(g))
    }

    /// Dimension of the algebra of matrices commuting with every operator.
    pub fn commutant_dimension(&self) -> usize {
        let n = self.dim;
        let f = self.field;
        let operators = self.operators();
        if operators.is_empty() {
            return n * n;
        }
        // Unknown M_{ab} sits at column a*n + b; equation (M g - g M)_{ij} = 0.
        let mut system = Matrix::zeros(f, n * n * operators.len(), n * n);
        for (k, g) in operators.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let row = k * n * n + i * n + j;
                    for t in 0..n {
                        // (M g)_{ij} = sum_t M_{it} g_{tj}
                        let c = g.get(t, j);
                        if c != 0 {
                            let col = i * n + t;
                            system.set(row, col, f.add(system.get(row, col), c));
                        }
                        // (g M)_{ij} = sum_t g_{it} M_{tj}
                        let c = g.get(i, t);
                        if c != 0 {
                            let col = t * n + j;
                            system.set(row, col, f.sub(system.get(row, col), c));
                        }
                    }
                }
            }
        }
        n * n - system.rank()
    }

    /// First line (in canonical order) whose spin is a proper subspace.
    pub fn first_proper_spin(&self, cap: u64) -> Result<Option<SubspaceBasis>> {
        let count = line_count(self.field.p(), self.dim);
        if count > u128::from(cap) {
            return Err(Error::CapExceeded { lines: count, cap });
        }
        let full = self.dim;
        Ok(search_lines(self.field.p(), self.dim, count as u64, |v| {
            self.spin_until(&[v.to_vec()], |e, _| e.dim() + 1 >= full)
                .map(|e| e.to_subspace())
        }))
    }

    /// Exhaustive irreducibility test followed by the commutant check.
    pub fn is_absolutely_irreducible(&self, cap: u64) -> Result<IrreducibilityReport> {
        let witness = if self.dim == 0 { None } else { self.first_proper_spin(cap)? };
        let irreducible = self.dim > 0 && witness.is_none();
        let commutant_dimension = self.commutant_dimension();
        Ok(IrreducibilityReport {
            irreducible,
            commutant_dimension,
            absolutely_irreducible: irreducible && commutant_dimension == 1,
            witness,
        })
    }
}

/// Outcome of [`ModuleAction::is_absolutely_irreducible`]; `witness` is a
/// proper nonzero invariant subspace when the module is reducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibilityReport {
    pub irreducible: bool,
    pub commutant_dimension: usize,
    pub absolutely_irreducible: bool,
    pub witness: Option<SubspaceBasis>,
}

/// Applies `f` to the first `limit` lines of GF(p)^n in parallel and returns
/// the result for the earliest line where it is `Some`.
pub(crate) fn search_lines<T, F>(p: u32, n: usize, limit: u64, f: F) -> Option<T>
where
    T: Send,
    F: Fn(&[u32]) -> Option<T> + Sync,
{
    (0..limit)
        .into_par_iter()
        .find_map_first(|i| f(&line_at(p, n, u128::from(i))))
}

/// Fixed space `ker(g - 1)`.
pub fn fixed_space(g: &Matrix) -> SubspaceBasis {
    SubspaceBasis::from_rows(&g.minus_identity().kernel_basis())
}
