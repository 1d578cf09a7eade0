//! Stable subgroups and the strong form of the correspondence for the
//! structures on the biquadratic Galois extension.

use hgkit::hopf::count_structures;
use hgkit::lattice::{stable_subgroup_records, strong_form_holds};
use hgkit::{ExtensionDatum, PermGroup};

fn main() -> hgkit::Result<()> {
    let v4 = PermGroup::from_cycles(4, &["(1,2)(3,4)", "(1,3)(2,4)"])?;
    let e = ExtensionDatum::galois(&v4)?;
    for s in count_structures(&e)?.structures {
        let report = strong_form_holds(&s, &e)?;
        println!("{} <{}>: strong form {}", s.type_name, s.generator_strings().join(", "), report.holds);
        for r in stable_subgroup_records(&s, &e)? {
            println!("  |N'| = {}  ->  |S(N')| = {}", r.subgroup.order(), r.corresponding_subgroup.order());
        }
    }
    Ok(())
}
