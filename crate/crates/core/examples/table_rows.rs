//! Rows of the representation table: single block, order bound, form,
//! absolute irreducibility and absence of a parabolic witness.

use regulib::modstruct::LINE_CAP;
use regulib::reptable::table_rows;

fn main() -> regulib::Result<()> {
    for row in table_rows(3, &[2, 3])? {
        let c = row.check(LINE_CAP)?;
        println!(
            "{:<14} dim {:>2}  type {:<4} order {:>3} ({})  abs-irreducible {}  ok {}",
            row.row_tag,
            row.dim,
            c.jordan_type.to_string(),
            c.order,
            row.order_bound,
            c.irreducibility.absolutely_irreducible,
            c.passed(),
        );
    }
    Ok(())
}
