//! Isomorphism invariants, isomorphism testing and catalog naming.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::catalog::{small_groups, transitive_catalog, CatalogEntry, COVERED_ORDERS};
use crate::error::{Error, Result};
use crate::finite::{isomorphisms, IndexedGroup, SourceGroup};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const DEFAULT_ISOMORPHISM_BOUND: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub element_order_histogram: BTreeMap<u64, usize>,
    pub is_abelian: bool,
    pub center_order: usize,
    pub derived_subgroup_order: usize,
}

pub fn fingerprint(g: &PermGroup) -> GroupFingerprint {
    let mut hist = BTreeMap::new();
    for x in g.elements() {
        *hist.entry(x.order()).or_insert(0) += 1;
    }
    GroupFingerprint {
        order: g.order(),
        element_order_histogram: hist,
        is_abelian: g.is_abelian(),
        center_order: g.center().order(),
        derived_subgroup_order: g.derived_subgroup().order(),
    }
}

/// An isomorphism given by the images of the source group's generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub images: Vec<(Permutation, Permutation)>,
}

/// Tests `g ≅ h` for groups of order at most [`DEFAULT_ISOMORPHISM_BOUND`].
pub fn are_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<Option<Isomorphism>> {
    are_isomorphic_bounded(g, h, DEFAULT_ISOMORPHISM_BOUND)
}

pub fn are_isomorphic_bounded(
    g: &PermGroup,
    h: &PermGroup,
    bound: usize,
) -> Result<Option<Isomorphism>> {
    let n = g.order().max(h.order());
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "group order for isomorphism testing",
            value: n,
            limit: bound,
        });
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }
    let (tg, th) = (g.table(), h.table());
    let src = SourceGroup::generating(tg);
    let Some(map) = isomorphisms(tg, &src, th, true).pop() else {
        return Ok(None);
    };
    // homomorphism on every Cayley-graph edge, and bijective
    for &s in src.gens() {
        for a in 0..tg.size() {
            assert_eq!(map[tg.mul(s, a)], th.mul(map[s], map[a]));
        }
    }
    let mut seen = vec![false; th.size()];
    for &x in &map {
        assert!(!std::mem::replace(&mut seen[x], true));
    }
    let images = src
        .gens()
        .iter()
        .map(|&s| (tg.element(s).clone(), th.element(map[s]).clone()))
        .collect();
    Ok(Some(Isomorphism { images }))
}

fn entry_fingerprint(e: &CatalogEntry) -> Option<GroupFingerprint> {
    static CACHE: OnceLock<Mutex<HashMap<(String, usize), GroupFingerprint>>> = OnceLock::new();
    let g = e.group()?;
    let key = (e.name.clone(), e.degree);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(fp) = cache.lock().unwrap().get(&key) {
        return Some(fp.clone());
    }
    let fp = fingerprint(g);
    cache.lock().unwrap().insert(key, fp.clone());
    Some(fp)
}

fn matches(g: &PermGroup, fp: &GroupFingerprint, e: &CatalogEntry) -> bool {
    let Some(eg) = e.group() else { return false };
    if eg.order() != g.order() || entry_fingerprint(e).as_ref() != Some(fp) {
        return false;
    }
    are_isomorphic_bounded(g, eg, usize::MAX)
        .expect("unbounded")
        .is_some()
}

/// Catalog name of `g`: the abstract catalog is searched first, then the
/// transitive catalog; otherwise `unknown(order=m)`.
pub fn identify(g: &PermGroup) -> String {
    let fp = fingerprint(g);
    let m = g.order();
    if COVERED_ORDERS.contains(&m) {
        let cands: Vec<&CatalogEntry> = small_groups()
            .iter()
            .filter(|e| e.order == m as u64 && entry_fingerprint(e).as_ref() == Some(&fp))
            .collect();
        // the catalog is complete for covered orders, so a unique invariant
        // match is the isomorphism class
        if cands.len() == 1 {
            return cands[0].name.clone();
        }
        if let Some(e) = cands.iter().find(|e| matches(g, &fp, e)) {
            return e.name.clone();
        }
    }
    for e in transitive_catalog() {
        if e.order == m as u64 && matches(g, &fp, e) {
            return e.name.clone();
        }
    }
    format!("unknown(order={})", m)
}
