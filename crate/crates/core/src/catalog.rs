//! Embedded catalogs: one representative per isomorphism class for small
//! orders, and the transitive groups of degrees 2 to 7 and 11.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Orders for which [`groups_of_order`] is complete.
pub const COVERED_ORDERS: &[usize] = &[
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 21, 24, 30, 36, 40, 60,
];

pub const TRANSITIVE_DEGREES: &[usize] = &[2, 3, 4, 5, 6, 7, 11];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub order: u64,
    pub generators: Vec<String>,
    pub transitive: bool,
    #[serde(skip)]
    group: OnceLock<Option<PermGroup>>,
}

impl PartialEq for CatalogEntry {
    fn eq(&self, other: &Self) -> bool {
        (&self.name, self.degree, self.order, &self.generators, self.transitive)
            == (&other.name, other.degree, other.order, &other.generators, other.transitive)
    }
}

impl Eq for CatalogEntry {}

impl CatalogEntry {
    pub fn new(name: &str, degree: usize, order: u64, generators: Vec<String>, transitive: bool) -> Self {
        CatalogEntry {
            name: name.to_string(),
            degree,
            order,
            generators,
            transitive,
            group: OnceLock::new(),
        }
    }

    pub fn has_generators(&self) -> bool {
        !self.generators.is_empty()
    }

    /// The generated group, or `None` for order-only entries.
    pub fn group(&self) -> Option<&PermGroup> {
        self.group
            .get_or_init(|| {
                if self.generators.is_empty() {
                    return None;
                }
                let gens = self
                    .generators
                    .iter()
                    .map(|s| Permutation::parse(s, self.degree))
                    .collect::<Result<Vec<_>>>()
                    .expect("catalog generators parse");
                Some(PermGroup::new(self.degree, gens).expect("catalog group"))
            })
            .as_ref()
    }

    /// Checks the stated order and, for transitive entries, transitivity.
    pub fn validate(&self) -> Result<()> {
        if let Some(g) = self.group() {
            if g.order() as u64 != self.order {
                return Err(Error::Invalid(format!(
                    "catalog entry {} has order {}, stated {}",
                    self.name,
                    g.order(),
                    self.order
                )));
            }
            if self.transitive && !g.is_transitive() {
                return Err(Error::Invalid(format!("catalog entry {} is not transitive", self.name)));
            }
        }
        Ok(())
    }
}

fn load(json: &str) -> Vec<CatalogEntry> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(json).expect("embedded catalog is valid JSON");
    for e in &entries {
        e.validate().expect("embedded catalog entry");
    }
    entries
}

pub fn small_groups() -> &'static [CatalogEntry] {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| load(include_str!("../data/small_groups.json")))
}

pub fn transitive_catalog() -> &'static [CatalogEntry] {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| load(include_str!("../data/transitive_groups.json")))
}

/// One representative per isomorphism class of groups of order `m`.
pub fn groups_of_order(m: usize) -> Result<Vec<&'static CatalogEntry>> {
    if !COVERED_ORDERS.contains(&m) {
        return Err(Error::Unsupported(format!(
            "no group catalog for order {} (covered: {:?})",
            m, COVERED_ORDERS
        )));
    }
    Ok(small_groups().iter().filter(|e| e.order == m as u64).collect())
}

/// Transitive groups of the given degree up to conjugacy, in table order.
pub fn transitive_groups(degree: usize) -> Result<Vec<&'static CatalogEntry>> {
    if !TRANSITIVE_DEGREES.contains(&degree) {
        return Err(Error::Unsupported(format!(
            "no transitive catalog for degree {} (covered: {:?})",
            degree, TRANSITIVE_DEGREES
        )));
    }
    Ok(transitive_catalog()
        .iter()
        .filter(|e| e.degree == degree)
        .collect())
}

/// Looks up a transitive entry by degree and name.
pub fn transitive_group(degree: usize, name: &str) -> Result<&'static CatalogEntry> {
    transitive_groups(degree)?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Invalid(format!("no transitive group {} of degree {}", name, degree)))
}

/// Looks up an abstract entry by name.
pub fn small_group(name: &str) -> Result<&'static CatalogEntry> {
    small_groups()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Invalid(format!("no catalog group named {}", name)))
}
