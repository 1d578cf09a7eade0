//! The Hopf algebra of the cyclic structure on Q(2^(1/3)), computed from the
//! bundled presentation of its normal closure.

use hgkit::descent::{validate_presentation, Descent, SplittingFieldPresentation};
use hgkit::{ExtensionDatum, GroupDocument, HGStructure, PermGroup, Permutation};

fn main() -> hgkit::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/fields/");
    let p = SplittingFieldPresentation::from_json(&std::fs::read_to_string(format!("{}cbrt2.json", dir))?)?;
    let g: GroupDocument = serde_json::from_str(&std::fs::read_to_string(format!("{}cbrt2.group.json", dir))?)?;
    let g = g.to_group()?;
    let tau = PermGroup::from_cycles(3, &["(2,3)"])?;
    let e = ExtensionDatum::new(&g, &tau)?;
    let p = validate_presentation(&p, &g)?;

    let sigma = e.lambda(&Permutation::parse("(1,2,3)", 3)?);
    let s = HGStructure::new(&e, PermGroup::new(3, vec![sigma])?)?;
    let d = Descent::new(&p, &e, &s)?;
    println!("convention: {}", d.convention().formula());
    for (i, h) in d.hopf_algebra_basis().basis.iter().enumerate() {
        println!("h{}:", i);
        for (eta, c) in d.n_elements().iter().zip(&h.coeffs) {
            let c: Vec<String> = c.coeffs.iter().map(|x| x.to_string()).collect();
            println!("  {:>8}  [{}]", eta.to_string(), c.join(" "));
        }
    }
    println!("K ⊗ H -> End(K) bijective: {}", d.verify_hg_isomorphism()?);
    Ok(())
}
