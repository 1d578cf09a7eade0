//! Decide whether the quartic with Galois group D8 is Hopf Galois.

use hgkit::hopf::is_hopf_galois;
use hgkit::{ExtensionDatum, PermGroup};

fn main() -> hgkit::Result<()> {
    let d8 = PermGroup::from_cycles(4, &["(1,2,3,4)", "(2,4)"])?;
    let e = ExtensionDatum::from_transitive(&d8)?;
    let d = is_hopf_galois(&e)?;
    println!("{} (decided by {})", d.verdict, d.decided_by);
    if let Some(w) = d.witness {
        println!("witness {} = <{}>", w.type_name, w.generator_strings().join(", "));
    }
    Ok(())
}
