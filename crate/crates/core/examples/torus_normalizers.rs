//! Tori normalised by a regular unipotent element, their classification and
//! the invariant subspaces that place them in a parabolic.

use regulib::modstruct::LINE_CAP;
use regulib::torus::{classify_torus_case, go_wreath, sl4_wedge, sl_wreath, so_orthsum, so_pair_stab, TorusNormalizerDatum};
use regulib::witness::{parabolic_witness, SubgroupDatum};

fn show(d: &TorusNormalizerDatum) -> regulib::Result<()> {
    d.validate()?;
    let cls = classify_torus_case(d)?;
    let w = parabolic_witness(&SubgroupDatum::from(d), LINE_CAP)?;
    println!(
        "{:<14} dim {:>2}  type {:<6} rank {:>2}  {:<22} weight dims {:?}  witness {}",
        d.construction,
        d.dim(),
        d.jordan_type()?.to_string(),
        d.torus.lattice_rank(),
        cls.case.to_string(),
        cls.weight_dims,
        w.map_or("none".to_string(), |w| serde_json::to_value(&w).unwrap()["kind"].to_string()),
    );
    Ok(())
}

fn main() -> regulib::Result<()> {
    for (p, a, d) in [(2, 1, 1), (2, 1, 3), (2, 2, 2), (3, 1, 2)] {
        show(&sl_wreath(p, a, d)?)?;
    }
    show(&go_wreath(3, 1, 0)?)?;
    show(&so_pair_stab(4, 0)?)?;
    show(&so_orthsum(5)?)?;
    show(&sl4_wedge()?)?;
    Ok(())
}
