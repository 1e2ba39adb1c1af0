//! Certificates for containment in a proper parabolic subgroup.
//!
//! A subgroup of `SL(V)` lies in a proper parabolic subgroup exactly when it
//! stabilises a proper nonzero subspace; inside `Sp(V)` or `SO(V)` the
//! subspace must be totally isotropic, respectively totally singular. The
//! search spins lines in a fixed order and reports the first one whose spin is
//! such a subspace. Every nonzero invariant subspace contains a line whose
//! spin stays inside it, so an empty search is a proof of absence.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::ser_matrix;
use crate::matrix::Matrix;
use crate::modstruct::{search_lines, ModuleAction};
use crate::subspace::{line_count, SubspaceBasis};
use crate::torus::{centralizes_torus, Ambient, DiagTorus, TorusNormalizerDatum};

/// Generators, an optional torus and an optional distinguished unipotent
/// element, inside an ambient classical group.
#[derive(Debug, Clone)]
pub struct SubgroupDatum {
    pub gens: Vec<Matrix>,
    pub torus: Option<DiagTorus>,
    pub unipotent: Option<Matrix>,
    pub ambient: Ambient,
}

impl From<&TorusNormalizerDatum> for SubgroupDatum {
    fn from(d: &TorusNormalizerDatum) -> Self {
        Self {
            gens: vec![d.u.clone()],
            torus: Some(d.torus.clone()),
            unipotent: Some(d.u.clone()),
            ambient: d.ambient.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ContainmentWitness {
    InvariantSubspace {
        basis: SubspaceBasis,
    },
    InvariantTotallySingularSubspace {
        basis: SubspaceBasis,
    },
    CentralizedUnipotent {
        #[serde(serialize_with = "ser_matrix")]
        element: Matrix,
    },
}

impl ContainmentWitness {
    /// Re-checks the certificate against the datum.
    pub fn verify(&self, datum: &SubgroupDatum) -> bool {
        let Ok(action) = datum.action() else { return false };
        match self {
            ContainmentWitness::InvariantSubspace { basis } => {
                !basis.is_zero() && !basis.is_full() && action.is_invariant(basis)
            }
            ContainmentWitness::InvariantTotallySingularSubspace { basis } => {
                !basis.is_zero() && action.is_invariant(basis) && datum.ambient.is_totally_singular(basis)
            }
            ContainmentWitness::CentralizedUnipotent { element } => is_centralized_unipotent(element, datum),
        }
    }
}

impl SubgroupDatum {
    pub fn dim(&self) -> usize {
        self.gens
            .first()
            .map(Matrix::rows)
            .or_else(|| self.torus.as_ref().map(DiagTorus::dim))
            .unwrap_or(0)
    }

    /// Generators plus the weight-space projections of the torus.
    pub fn action(&self) -> Result<ModuleAction> {
        let n = self.dim();
        let field = self
            .gens
            .first()
            .map(Matrix::field)
            .or_else(|| self.torus.as_ref().map(DiagTorus::field))
            .ok_or_else(|| Error::InvalidParams("empty subgroup datum".into()))?;
        let action = ModuleAction::new(field, n, self.gens.clone())?;
        match &self.torus {
            Some(t) => action.with_endomorphisms(t.projections()),
            None => Ok(action),
        }
    }

    /// Lines searched: those inside a weight space when a torus is present
    /// (torus-invariant subspaces are sums of their weight components),
    /// otherwise all lines. Each entry is a basis of the ambient piece.
    fn line_pieces(&self) -> Vec<Vec<Vec<u32>>> {
        match &self.torus {
            Some(t) => t.weight_spaces().into_iter().map(|w| w.space.vectors()).collect(),
            None => {
                let n = self.dim();
                let f = self.gens[0].field();
                vec![SubspaceBasis::full(f, n).vectors()]
            }
        }
    }
}

fn is_centralized_unipotent(z: &Matrix, datum: &SubgroupDatum) -> bool {
    !z.is_identity()
        && z.minus_identity().pow(z.rows() as u64).is_zero()
        && datum.gens.iter().all(|g| (g * z) == (z * g))
        && datum.torus.as_ref().is_none_or(|t| centralizes_torus(z, t))
}

/// Combination `sum c_i b_i` of the piece basis.
fn combine(basis: &[Vec<u32>], coeffs: &[u32], p: u32) -> Vec<u32> {
    let n = basis[0].len();
    let mut v = vec![0u32; n];
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            for (x, &y) in v.iter_mut().zip(b) {
                *x = (*x + c * y) % p;
            }
        }
    }
    v
}

/// First invariant subspace certifying containment in a proper parabolic
/// subgroup of the ambient group, or `None` when none exists.
pub fn parabolic_witness(datum: &SubgroupDatum, cap: u64) -> Result<Option<ContainmentWitness>> {
    let action = datum.action()?;
    let n = datum.dim();
    let p = action.field().p();
    let pieces = datum.line_pieces();
    let counts: Vec<u128> = pieces.iter().map(|b| line_count(p, b.len())).collect();
    let total: u128 = counts.iter().sum();
    if total > u128::from(cap) {
        return Err(Error::CapExceeded { lines: total, cap });
    }
    let ambient = &datum.ambient;
    let singular = |v: &[u32]| match ambient {
        Ambient::Sl | Ambient::Sp { .. } => true,
        Ambient::So { form } | Ambient::Go { form } => form.q(v) == 0,
    };
    for (basis, &count) in pieces.iter().zip(&counts) {
        if basis.is_empty() {
            continue;
        }
        let k = basis.len();
        let found = search_lines(p, k, count as u64, |coeffs| {
            let v = combine(basis, coeffs, p);
            if !singular(&v) {
                return None;
            }
            let e = match ambient {
                Ambient::Sl => action.spin_until(&[v], |e, _| e.dim() + 1 >= n)?,
                _ => action.spin_until(&[v], |e, w| {
                    !singular(w) || e.rows().iter().any(|r| ambient.bilinear(r, w) != 0)
                })?,
            };
            Some(e.to_subspace())
        });
        if let Some(basis) = found {
            return Ok(Some(match ambient {
                Ambient::Sl => ContainmentWitness::InvariantSubspace { basis },
                _ => ContainmentWitness::InvariantTotallySingularSubspace { basis },
            }));
        }
    }
    Ok(None)
}

/// A nontrivial unipotent commuting with all generators and centralising the
/// torus: the distinguished unipotent's `p`-power iterates are tried first,
/// then the generators themselves.
pub fn borel_tits_witness(datum: &SubgroupDatum) -> Option<ContainmentWitness> {
    let mut candidates = Vec::new();
    if let Some(u) = &datum.unipotent {
        let p = u64::from(u.field().p());
        let mut z = u.clone();
        while !z.is_identity() {
            candidates.push(z.clone());
            z = z.pow(p);
        }
    }
    candidates.extend(datum.gens.iter().cloned());
    candidates
        .into_iter()
        .find(|z| is_centralized_unipotent(z, datum))
        .map(|element| ContainmentWitness::CentralizedUnipotent { element })
}
