//! Holomorph orders of the groups of order 8, and the order argument that
//! rules out a large Galois group in degree 11.

use hgkit::holomorph::{holomorph_order_formula, HolKind};
use hgkit::hopf::holomorph_orders;

fn main() -> hgkit::Result<()> {
    for (n, hol) in holomorph_orders(8)? {
        println!("{:<8} |Hol| = {}", n.name, hol);
    }
    let hol11 = holomorph_order_formula(HolKind::Cyclic(11))?;
    println!("|Hol(C11)| = {}; 660 divides it: {}", hol11, hol11 % 660 == 0);
    Ok(())
}
