//! The p-th power of a unipotent class, in closed form and by matrix power.

use regulib::jordan::{jordan_power, jordan_type, partitions};
use regulib::FieldPrime;

fn main() -> regulib::Result<()> {
    for p in [2, 3, 5] {
        let f = FieldPrime::new(p)?;
        println!("p = {p}");
        for t in partitions(6) {
            let closed = jordan_power(&t, p);
            let oracle = jordan_type(&t.realize(f).pow(u64::from(p)))?;
            assert_eq!(closed, oracle);
            println!("  {t:<12} -> {closed}");
        }
    }
    Ok(())
}
