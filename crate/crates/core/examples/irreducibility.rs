//! Spinning vectors and testing absolute irreducibility.

use regulib::modstruct::{ModuleAction, LINE_CAP};
use regulib::reptable::sym_power_rep;
use regulib::{FieldPrime, Matrix, SubspaceBasis};

fn main() -> regulib::Result<()> {
    for (m, p) in [(1, 2), (2, 3), (4, 5), (6, 7)] {
        let rep = sym_power_rep(m, p)?;
        let r = rep.action()?.is_absolutely_irreducible(LINE_CAP)?;
        println!("Sym^{m} at p={p}: absolutely irreducible {} commutant {}", r.absolutely_irreducible, r.commutant_dimension);
    }

    // SL2 acting on the natural module plus a trivial summand
    let f = FieldPrime::new(3)?;
    let x = Matrix::from_rows(f, &[[1, 1], [0, 1]])?;
    let y = Matrix::from_rows(f, &[[1, 0], [1, 1]])?;
    let one = Matrix::identity(f, 1);
    let gens = vec![Matrix::block_diag(&[x, one.clone()])?, Matrix::block_diag(&[y, one])?];
    let action = ModuleAction::new(f, 3, gens)?;
    let r = action.is_absolutely_irreducible(LINE_CAP)?;
    println!("natural + trivial: irreducible {} witness {:?}", r.irreducible, r.witness.map(|w| w.vectors()));

    let seed = SubspaceBasis::span(f, 3, &[vec![0, 1, 0]]);
    println!("spin of e1: dimension {}", action.spin(&seed).dim());
    Ok(())
}
