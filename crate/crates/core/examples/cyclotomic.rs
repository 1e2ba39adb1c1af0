//! Integer matrices of order p^a of the least possible size.

use regulib::cyclotomic::order_witness;

fn main() -> regulib::Result<()> {
    for (p, a) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)] {
        let w = order_witness(p, a)?;
        println!("{p}^{a}: size {} order {}", w.bound, w.order);
        for row in &w.matrix {
            println!("    {row:?}");
        }
    }
    Ok(())
}
