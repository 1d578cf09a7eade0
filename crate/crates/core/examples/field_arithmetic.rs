//! Exact arithmetic in Q(θ) and fixed subspaces of the biquadratic field.

use hgkit::descent::{fixed_subspace, validate_presentation, SplittingFieldPresentation};
use hgkit::field::{is_irreducible, NumberField};
use hgkit::linalg::q;
use hgkit::PermGroup;

fn main() -> hgkit::Result<()> {
    let k = NumberField::new(vec![q(1), q(0), q(-10), q(0), q(1)])?;
    let t = k.generator();
    let inv = k.inverse(&t)?;
    println!("1/θ = {:?}", inv.coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("x^4 - 10x^2 + 1 irreducible: {}", is_irreducible(k.min_poly())?);
    println!("x^4 + 3x^2 + 2 irreducible: {}", is_irreducible(&[q(2), q(0), q(3), q(0), q(1)])?);

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/fields/biquadratic.json");
    let p = SplittingFieldPresentation::from_json(&std::fs::read_to_string(path)?)?;
    let v4 = PermGroup::from_cycles(4, &["(1,2)(3,4)", "(1,3)(2,4)"])?;
    let p = validate_presentation(&p, &v4)?;
    let sigma = PermGroup::from_cycles(4, &["(1,2)(3,4)"])?;
    println!("dim fixed field of sigma: {}", fixed_subspace(&p, &sigma).len());
    Ok(())
}
