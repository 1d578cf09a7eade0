//! Intermediate fields between a quintic with group S5 and its closure.

use hgkit::catalog::transitive_group;
use hgkit::lattice::intermediate_report;
use hgkit::ExtensionDatum;

fn main() -> hgkit::Result<()> {
    let g = transitive_group(5, "S5")?.group().expect("generators");
    for row in intermediate_report(&ExtensionDatum::from_transitive(g)?)? {
        println!("[F:k] = {:>3}  {}", row.degree, row.verdict);
        for (gens, v) in &row.detail {
            println!("    G'' = <{}>: {}", gens.join(", "), v);
        }
    }
    Ok(())
}
