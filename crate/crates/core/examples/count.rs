//! Count Hopf Galois structures on Galois extensions by type.

use hgkit::catalog::small_group;
use hgkit::hopf::count_structures;
use hgkit::ExtensionDatum;

fn main() -> hgkit::Result<()> {
    for name in ["V4", "S3", "C8", "C3×C3"] {
        let g = small_group(name)?.group().expect("catalog group");
        let c = count_structures(&ExtensionDatum::galois(g)?)?;
        let types: Vec<String> = c.per_type.iter().map(|(t, k)| format!("{}:{}", t, k)).collect();
        println!("{:<6} {:>3}  {}", name, c.total, types.join(" "));
    }
    Ok(())
}
