//! Jordan types of tensor products of single blocks.

use regulib::jordan::TensorTable;
use regulib::FieldPrime;

fn main() -> regulib::Result<()> {
    for p in [2, 3, 5] {
        let mut table = TensorTable::new(FieldPrime::new(p)?);
        println!("p = {p}");
        for a in 2..=4 {
            for b in a..=16 / a {
                println!("  [{a}] x [{b}] = {}", table.pair(a, b));
            }
        }
    }
    Ok(())
}
