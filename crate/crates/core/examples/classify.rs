//! Verdict table for every transitive group of degree 6.

use hgkit::hopf::classify_degree;

fn main() -> hgkit::Result<()> {
    let degree = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for row in classify_degree(degree, false)? {
        println!("{:<10} {:>6}  {}", row.name, row.order, row.verdict);
    }
    Ok(())
}
