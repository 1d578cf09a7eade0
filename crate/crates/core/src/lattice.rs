//! The Galois correspondence of a Hopf Galois structure at group level, and
//! verdicts for the intermediate fields `K ⊆ F ⊆ K̃`.
//!
//! A subgroup `N′ ⊆ N` stable under `λ(G)` is sent to
//! `S(N′) = {x ∈ λ(G) : x(0) ∈ N′·0}`, a subgroup between `λ(G′)` and
//! `λ(G)`; its fixed field is the field fixed by the sub-Hopf algebra of `N′`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::catalog::COVERED_ORDERS;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hopf::{is_hopf_galois, normal_complements, ExtensionDatum, HGStructure, Verdict};
use crate::perm::Permutation;

/// Largest `[F:k]` for which intermediate rows are decided.
pub const INTERMEDIATE_MAX_DEGREE: usize = 60;

#[derive(Clone, Debug)]
pub struct StableSubgroupRecord {
    pub subgroup: PermGroup,
    pub corresponding_subgroup: PermGroup,
    pub orbit_of_base: Vec<usize>,
}

/// Subgroups of `N` normalized by `λ(G)`, trivial and full included.
pub fn stable_subgroups(s: &HGStructure, e: &ExtensionDatum) -> Result<Vec<PermGroup>> {
    Ok(s.n
        .all_subgroups_bounded(s.n.order())?
        .into_iter()
        .filter(|h| h.is_normalized_by(e.lambda_group()))
        .collect())
}

/// `S(N′)` for a `λ(G)`-stable subgroup `N′` of a regular `N`.
pub fn corresponding_subgroup(np: &PermGroup, e: &ExtensionDatum) -> Result<PermGroup> {
    if np.degree() != e.degree() {
        return Err(Error::DegreeMismatch {
            expected: e.degree(),
            found: np.degree(),
        });
    }
    if !np.is_normalized_by(e.lambda_group()) {
        return Err(Error::Invalid(format!("{:?} is not stable under λ(G)", np)));
    }
    let orbit = np.orbit(0);
    let mut inside = vec![false; e.degree()];
    for &p in &orbit {
        inside[p] = true;
    }
    let elems: Vec<Permutation> = e
        .lambda_group()
        .elements()
        .iter()
        .filter(|x| inside[x.apply(0)])
        .cloned()
        .collect();
    Ok(PermGroup::from_unsorted_elements(e.degree(), elems))
}

pub fn stable_subgroup_records(s: &HGStructure, e: &ExtensionDatum) -> Result<Vec<StableSubgroupRecord>> {
    stable_subgroups(s, e)?
        .into_iter()
        .map(|np| {
            let corresponding_subgroup = corresponding_subgroup(&np, e)?;
            let orbit_of_base = np.orbit(0);
            Ok(StableSubgroupRecord {
                subgroup: np,
                corresponding_subgroup,
                orbit_of_base,
            })
        })
        .collect()
}

/// Subgroups `T` with `h ⊆ T ⊆ g`, sorted.
pub fn overgroups(g: &PermGroup, h: &PermGroup) -> Vec<PermGroup> {
    let mut seen: HashSet<PermGroup> = HashSet::new();
    seen.insert(h.clone());
    let mut queue = vec![h.clone()];
    let mut i = 0;
    while i < queue.len() {
        let t = queue[i].clone();
        i += 1;
        let mut covered: HashSet<Permutation> = t.elements().iter().cloned().collect();
        for x in g.elements() {
            if covered.contains(x) {
                continue;
            }
            // ⟨T, x⟩ depends only on the coset Tx
            for y in t.elements() {
                covered.insert(y.compose(x));
            }
            let mut gens = t.generators().to_vec();
            gens.push(x.clone());
            let u = PermGroup::new(g.degree(), gens).expect("subgroup");
            if seen.insert(u.clone()) {
                queue.push(u);
            }
        }
    }
    let mut out: Vec<PermGroup> = seen.into_iter().collect();
    out.sort();
    out
}

/// Image of the correspondence against every subgroup between `λ(G′)` and
/// `λ(G)`.
#[derive(Clone, Debug)]
pub struct StrongFormReport {
    pub structure: HGStructure,
    pub image_subgroups: Vec<PermGroup>,
    pub all_intermediate_subgroups: Vec<PermGroup>,
    pub holds: bool,
}

pub fn strong_form_holds(s: &HGStructure, e: &ExtensionDatum) -> Result<StrongFormReport> {
    let mut image: Vec<PermGroup> = stable_subgroups(s, e)?
        .iter()
        .map(|np| corresponding_subgroup(np, e))
        .collect::<Result<_>>()?;
    image.sort();
    image.dedup();
    let all = overgroups(e.lambda_group(), &e.lambda_of(e.subgroup()));
    Ok(StrongFormReport {
        structure: s.clone(),
        holds: image == all,
        image_subgroups: image,
        all_intermediate_subgroups: all,
    })
}

/// Verdict of one intermediate row. Several non-conjugate `G″` of the same
/// index may give different verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowVerdict {
    #[serde(rename = "verdict")]
    Uniform(Verdict),
    /// Some, not all, classes are almost classically Galois.
    #[serde(rename = "exists almost classically Galois")]
    ExistsAlmostClassical,
    /// Some, not all, classes are Hopf Galois; none is almost classical.
    #[serde(rename = "exists Hopf Galois")]
    ExistsHopfGalois,
    #[serde(rename = "skipped")]
    Skipped(String),
}

impl RowVerdict {
    pub fn label(&self) -> String {
        match self {
            RowVerdict::Uniform(v) => v.as_str().to_string(),
            RowVerdict::ExistsAlmostClassical => "∃ almost classically Galois".to_string(),
            RowVerdict::ExistsHopfGalois => "∃ Hopf Galois".to_string(),
            RowVerdict::Skipped(why) => format!("skipped: {}", why),
        }
    }
}

/// One class of `G″ ⊊ G′` up to `G`-conjugacy.
#[derive(Clone, Debug)]
pub struct IntermediateClass {
    pub subgroup: PermGroup,
    pub verdict: Option<Verdict>,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IntermediateRow {
    /// `[F:k] = [G:G″]`.
    pub degree: usize,
    pub classes: usize,
    pub verdict: String,
    #[serde(skip)]
    pub detail: Vec<(Vec<String>, String)>,
}

/// Subgroups of `G′` up to conjugation in `G`, excluding `1` and `G′`.
pub fn intermediate_subgroups(e: &ExtensionDatum) -> Result<Vec<PermGroup>> {
    let gp = e.subgroup();
    let g = e.group();
    let mut subs = gp.all_subgroups()?;
    subs.retain(|h| !h.is_trivial() && h.order() < gp.order());
    subs.sort();
    let index: HashSet<PermGroup> = subs.iter().cloned().collect();
    let mut done: HashSet<PermGroup> = HashSet::new();
    let mut reps = Vec::new();
    for h in &subs {
        if done.contains(h) {
            continue;
        }
        reps.push(h.clone());
        for x in g.elements() {
            let c = h.conjugate(x);
            if index.contains(&c) {
                done.insert(c);
            }
        }
    }
    Ok(reps)
}

fn decide_class(e: &ExtensionDatum, h: &PermGroup, max_degree: usize) -> Result<IntermediateClass> {
    let degree = e.group().order() / h.order();
    let skipped = |why: String| IntermediateClass {
        subgroup: h.clone(),
        verdict: None,
        skipped: Some(why),
    };
    if degree > max_degree {
        return Ok(skipped(format!("[F:k] = {} exceeds {}", degree, max_degree)));
    }
    // G″ ⊆ G′ is core-free because G′ is
    let sub = ExtensionDatum::new(e.group(), h)?;
    if !COVERED_ORDERS.contains(&degree) && normal_complements(&sub).is_empty() {
        return Ok(skipped(format!("no group catalog for order {}", degree)));
    }
    let d = is_hopf_galois(&sub)?;
    Ok(IntermediateClass {
        subgroup: h.clone(),
        verdict: Some(d.verdict),
        skipped: None,
    })
}

/// Verdict for every class of `G″`, grouped into rows by `[F:k]`.
pub fn intermediate_report(e: &ExtensionDatum) -> Result<Vec<IntermediateRow>> {
    intermediate_report_bounded(e, INTERMEDIATE_MAX_DEGREE)
}

pub fn intermediate_report_bounded(e: &ExtensionDatum, max_degree: usize) -> Result<Vec<IntermediateRow>> {
    let mut by_degree: BTreeMap<usize, Vec<IntermediateClass>> = BTreeMap::new();
    for h in intermediate_subgroups(e)? {
        let c = decide_class(e, &h, max_degree)?;
        by_degree.entry(e.group().order() / h.order()).or_default().push(c);
    }
    Ok(by_degree
        .into_iter()
        .map(|(degree, classes)| {
            let detail = classes
                .iter()
                .map(|c| {
                    let gens = c.subgroup.generators().iter().map(|p| p.to_string()).collect();
                    let v = match (&c.verdict, &c.skipped) {
                        (Some(v), _) => v.as_str().to_string(),
                        (None, Some(why)) => format!("skipped: {}", why),
                        (None, None) => unreachable!(),
                    };
                    (gens, v)
                })
                .collect();
            IntermediateRow {
                degree,
                classes: classes.len(),
                verdict: combine(&classes).label(),
                detail,
            }
        })
        .collect())
}

fn combine(classes: &[IntermediateClass]) -> RowVerdict {
    if let Some(why) = classes.iter().find_map(|c| c.skipped.clone()) {
        return RowVerdict::Skipped(why);
    }
    let vs: Vec<Verdict> = classes.iter().map(|c| c.verdict.unwrap()).collect();
    if vs.iter().all(|&v| v == vs[0]) {
        return RowVerdict::Uniform(vs[0]);
    }
    if vs.iter().any(|v| v.is_almost_classical()) {
        RowVerdict::ExistsAlmostClassical
    } else if vs.iter().any(|v| v.is_hopf_galois()) {
        RowVerdict::ExistsHopfGalois
    } else {
        RowVerdict::Uniform(Verdict::NotHopfGalois)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Transitivity {
    /// `K/k`, `F/K` and `F/k` are all Hopf Galois.
    Consistent,
    /// `K/k` or `F/K` is not Hopf Galois, so nothing is asserted.
    Vacuous,
    /// `K/k` and `F/K` are Hopf Galois but `F/k` is not.
    Violated,
}

/// Checks the tower `k ⊆ K ⊆ F ⊆ K̃` given by `G″ ⊆ G′ ⊆ G`: if `K/k` and
/// `F/K` are Hopf Galois, so is `F/k`.
///
/// `F/K` has Galois closure group `G′/core_{G′}(G″)` acting on `G′/G″`.
pub fn transitivity_check(e: &ExtensionDatum, gpp: &PermGroup) -> Result<Transitivity> {
    if !gpp.is_subgroup_of(e.subgroup()) {
        return Err(Error::NotSubgroup("G″ must lie in G′".into()));
    }
    let base = is_hopf_galois(e)?.verdict.is_hopf_galois();
    let top = is_hopf_galois(&ExtensionDatum::new(e.group(), gpp)?)?.verdict.is_hopf_galois();
    let relative = relative_datum(e.subgroup(), gpp)?;
    let rel = is_hopf_galois(&relative)?.verdict.is_hopf_galois();
    Ok(match (base && rel, top) {
        (false, _) => Transitivity::Vacuous,
        (true, true) => Transitivity::Consistent,
        (true, false) => Transitivity::Violated,
    })
}

/// `(G′/core, G″/core)` realized as the action of `G′` on `G′/G″`, where
/// `G″` is the stabilizer of the base coset.
fn relative_datum(gp: &PermGroup, gpp: &PermGroup) -> Result<ExtensionDatum> {
    let (img, space) = crate::group::left_coset_action(gp, gpp)?;
    ExtensionDatum::new(&img, &img.stabilizer(space.base_point()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::transitive_group;
    use crate::hopf::{classical_structure, complement_structure, count_structures};

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn biquadratic_cyclic_structure() {
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let e = ExtensionDatum::from_transitive(&v4).unwrap();
        let n1 = HGStructure::new(&e, grp(4, &["(1,2,3,4)"])).unwrap();
        assert_eq!(stable_subgroups(&n1, &e).unwrap().len(), 3);
        let half = grp(4, &["(1,3)(2,4)"]);
        let s = corresponding_subgroup(&half, &e).unwrap();
        assert_eq!(s, grp(4, &["(1,3)(2,4)"]));
        let r = strong_form_holds(&n1, &e).unwrap();
        assert!(!r.holds);
        assert_eq!((r.image_subgroups.len(), r.all_intermediate_subgroups.len()), (3, 5));
    }

    #[test]
    fn dihedral_quartic() {
        let d8 = grp(4, &["(1,2,3,4)", "(2,4)"]);
        let e = ExtensionDatum::from_transitive(&d8).unwrap();
        let n2 = HGStructure::new(&e, grp(4, &["(1,3)(2,4)", "(1,2)(3,4)"])).unwrap();
        let stable = stable_subgroups(&n2, &e).unwrap();
        assert_eq!(stable.len(), 3);
        let s = corresponding_subgroup(&grp(4, &["(1,3)(2,4)"]), &e).unwrap();
        assert_eq!(s, grp(4, &["(2,4)", "(1,3)(2,4)"]));
        assert!(corresponding_subgroup(&grp(4, &["(1,2)(3,4)"]), &e).is_err());
        assert!(strong_form_holds(&n2, &e).unwrap().holds);
    }

    #[test]
    fn classical_and_lambda_on_s3() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        let e = ExtensionDatum::galois(&s3).unwrap();
        assert!(strong_form_holds(&classical_structure(&e).unwrap(), &e).unwrap().holds);
        let lam = HGStructure::new(&e, e.lambda_group().clone()).unwrap();
        let r = strong_form_holds(&lam, &e).unwrap();
        assert!(!r.holds);
        assert_eq!(r.image_subgroups.len(), 3);
        assert!(r.image_subgroups.iter().all(|h| h.is_normal_in(e.lambda_group())));
    }

    #[test]
    fn correspondence_is_injective_and_reversing() {
        for (d, name) in [(4, "S4"), (6, "F_{18}:2"), (4, "D_{2·4}")] {
            let g = transitive_group(d, name).unwrap().group().unwrap();
            let e = ExtensionDatum::from_transitive(g).unwrap();
            for s in count_structures(&e).unwrap().structures {
                let recs = stable_subgroup_records(&s, &e).unwrap();
                for a in &recs {
                    assert_eq!(
                        a.corresponding_subgroup.order(),
                        e.subgroup().order() * a.subgroup.order()
                    );
                    for b in &recs {
                        if a.subgroup.is_subgroup_of(&b.subgroup) {
                            assert!(a.corresponding_subgroup.is_subgroup_of(&b.corresponding_subgroup));
                        }
                        if a.subgroup != b.subgroup {
                            assert_ne!(a.corresponding_subgroup, b.corresponding_subgroup);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complement_structures_hold_strongly() {
        let g = transitive_group(6, "F_{18}:2").unwrap().group().unwrap();
        let e = ExtensionDatum::from_transitive(g).unwrap();
        for m in normal_complements(&e) {
            let s = complement_structure(&e, &m).unwrap();
            assert!(strong_form_holds(&s, &e).unwrap().holds);
        }
    }

    #[test]
    fn quartic_intermediate_rows() {
        let e = ExtensionDatum::from_transitive(&PermGroup::symmetric(4)).unwrap();
        let rows = intermediate_report(&e).unwrap();
        let got: Vec<(usize, &str)> = rows.iter().map(|r| (r.degree, r.verdict.as_str())).collect();
        assert_eq!(
            got,
            [(8, "Hopf Galois not almost classically Galois"), (12, "almost classically Galois")]
        );
    }

    #[test]
    fn tower_through_degree_eight() {
        let e = ExtensionDatum::from_transitive(&PermGroup::symmetric(4)).unwrap();
        let c3 = grp(4, &["(2,3,4)"]);
        assert_eq!(transitivity_check(&e, &c3).unwrap(), Transitivity::Consistent);
    }
}
