//! Forms preserved by a unipotent element, and the Dickson invariant.

use regulib::forms::{
    dickson, first_nondegenerate_bilinear, first_nondegenerate_quadratic, invariant_bilinear_forms,
    invariant_quadratic_forms, FormKind, QuadSpace,
};
use regulib::jordan::JordanType;
use regulib::{FieldPrime, Matrix};

fn main() -> regulib::Result<()> {
    let f = FieldPrime::new(2)?;
    for t in ["6", "4+2", "3+3", "3+2+1"] {
        let t: JordanType = t.parse()?;
        let u = t.realize(f);
        let alt = invariant_bilinear_forms(&u, FormKind::Alternating)?;
        let quad = invariant_quadratic_forms(&u)?;
        println!(
            "[{t}]: {} alternating forms (nondegenerate: {}), {} quadratic forms (nondegenerate: {})",
            alt.len(),
            first_nondegenerate_bilinear(&alt).is_some(),
            quad.len(),
            first_nondegenerate_quadratic(&quad).is_some(),
        );
    }

    let h = QuadSpace::hyperbolic(f, 3);
    let swap = Matrix::permutation(f, &[3, 1, 2, 0, 4, 5])?;
    println!("swap of a hyperbolic pair: dickson {}", dickson(&swap, &h)?);
    println!("identity: dickson {}", dickson(&Matrix::identity(f, 6), &h)?);
    Ok(())
}
