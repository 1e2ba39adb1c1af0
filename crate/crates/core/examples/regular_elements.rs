//! Regular unipotent representatives in the classical groups, with their
//! block patterns and, in characteristic 2, Dickson invariants.

use regulib::classical::{gl_stab_outer, go_outer_regular, regular_in_sl, regular_in_so, regular_in_sp, RegularRep};

fn show(name: &str, r: &RegularRep) -> regulib::Result<()> {
    r.validate()?;
    let dickson = r.dickson().map_or(String::new(), |d| format!("  dickson {d}"));
    println!("{name:<18} p={}  type {:<10} order {}{dickson}", r.p, r.jordan_type()?.to_string(), r.order()?);
    Ok(())
}

fn main() -> regulib::Result<()> {
    for p in [2, 3] {
        show("SL(5)", &regular_in_sl(5, p)?)?;
        show("Sp(6)", &regular_in_sp(6, p)?)?;
        show("SO(7)", &regular_in_so(7, p)?)?;
        show("SO(8)", &regular_in_so(8, p)?)?;
    }
    show("GO(8) outer", &go_outer_regular(8)?)?;
    for l in [3, 4] {
        show(&format!("GL({l}).2 outer"), &gl_stab_outer(l, 0)?)?;
    }
    Ok(())
}
