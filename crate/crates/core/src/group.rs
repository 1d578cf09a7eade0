//! Finitely generated permutation groups with fully enumerated element sets.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{closure, GroupTable, IndexedGroup};
use crate::perm::Permutation;

/// Hard cap on enumerated group orders.
pub const MAX_ENUMERATED_ORDER: usize = 500_000;

/// Default bound for subgroup-lattice enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 120;

/// A subgroup of `Sym(degree)` given by generators. The element set is
/// materialized on first use and kept sorted lexicographically.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceLock<Arc<Vec<Permutation>>>,
    table: OnceLock<Arc<GroupTable>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Invalid("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let g = PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
            table: OnceLock::new(),
        };
        g.try_elements()?;
        Ok(g)
    }

    /// Like [`PermGroup::new`] but defers element enumeration to first use.
    pub(crate) fn new_lazy(degree: usize, generators: Vec<Permutation>) -> Self {
        debug_assert!(generators.iter().all(|g| g.degree() == degree));
        PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
            table: OnceLock::new(),
        }
    }

    /// Closure of a non-empty generator list.
    pub fn generate(generators: &[Permutation]) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Invalid("empty generator list; use PermGroup::new".into()))?;
        PermGroup::new(first.degree(), generators.to_vec())
    }

    pub fn from_cycles(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_sorted_elements(degree, vec![Permutation::identity(degree)])
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree > 1 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[cycle]).unwrap());
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1]]).unwrap());
        }
        PermGroup::new(degree, gens).expect("symmetric group")
    }

    /// Builds a group from a sorted, deduplicated, closed element list.
    /// A short generating set is chosen greedily.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements[0].is_identity());
        let generators = greedy_generators(&elements);
        let g = PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
            table: OnceLock::new(),
        };
        let _ = g.elements.set(Arc::new(elements));
        g
    }

    pub(crate) fn from_unsorted_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        PermGroup::from_sorted_elements(degree, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn try_elements(&self) -> Result<&Arc<Vec<Permutation>>> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let e = enumerate(self.degree, &self.generators)?;
        Ok(self.elements.get_or_init(|| Arc::new(e)))
    }

    /// All elements, sorted; the identity is first.
    pub fn elements(&self) -> &[Permutation] {
        self.try_elements().expect("element enumeration checked at construction")
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn table(&self) -> &GroupTable {
        self.table
            .get_or_init(|| Arc::new(GroupTable::new(self.elements())))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements().binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements().binary_search(p).ok()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut out = vec![point];
        let mut i = 0;
        while i < out.len() {
            let p = out[i];
            i += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    out.push(q);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let elems = self
            .elements()
            .iter()
            .filter(|g| g.fixes(point))
            .cloned()
            .collect();
        PermGroup::from_sorted_elements(self.degree, elems)
    }

    /// True iff the group is transitive on `{0..domain_size}` with order
    /// `domain_size`.
    pub fn is_regular(&self, domain_size: usize) -> bool {
        self.degree == domain_size && self.order() == domain_size && self.is_transitive()
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let elems = self.elements().iter().map(|x| x.conjugate_by(g)).collect();
        PermGroup::from_unsorted_elements(self.degree, elems)
    }

    /// True iff every generator of `g` conjugates `self` into itself.
    pub fn is_normalized_by(&self, g: &PermGroup) -> bool {
        self.degree == g.degree
            && g.generators.iter().all(|s| {
                self.generators
                    .iter()
                    .all(|x| self.contains(&x.conjugate_by(s)))
            })
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && self.is_normalized_by(g)
    }

    /// Largest normal subgroup of `g` contained in `self`.
    pub fn core_in(&self, g: &PermGroup) -> Result<PermGroup> {
        if !self.is_subgroup_of(g) {
            return Err(Error::NotSubgroup("core requires a subgroup".into()));
        }
        let mut cur: Vec<Permutation> = self.elements().to_vec();
        for x in g.elements() {
            if cur.len() == 1 {
                break;
            }
            let xi = x.inverse();
            cur.retain(|h| self.contains(&h.conjugate_by(&xi)));
        }
        Ok(PermGroup::from_sorted_elements(self.degree, cur))
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elems = self
            .elements()
            .iter()
            .filter(|x| other.contains(x))
            .cloned()
            .collect();
        PermGroup::from_sorted_elements(self.degree, elems)
    }

    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        PermGroup::new(self.degree, gens).expect("join of subgroups")
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn center(&self) -> PermGroup {
        let elems = self
            .elements()
            .iter()
            .filter(|x| self.generators.iter().all(|g| x.compose(g) == g.compose(x)))
            .cloned()
            .collect();
        PermGroup::from_sorted_elements(self.degree, elems)
    }

    /// Commutator subgroup: normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = &(&a.inverse() * &b.inverse()) * &(a * b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_solvable(&self) -> bool {
        let mut g = self.clone();
        loop {
            if g.is_trivial() {
                return true;
            }
            let d = g.derived_subgroup();
            if d.order() == g.order() {
                return false;
            }
            g = d;
        }
    }

    /// Smallest normal subgroup of `self` containing `xs`.
    pub fn normal_closure(&self, xs: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = xs.iter().filter(|x| !x.is_identity()).cloned().collect();
        if gens.is_empty() {
            return PermGroup::trivial(self.degree);
        }
        loop {
            let h = PermGroup::new(self.degree, gens.clone()).expect("subgroup");
            let missing = gens.iter().find_map(|x| {
                self.generators
                    .iter()
                    .map(|g| x.conjugate_by(g))
                    .find(|y| !h.contains(y))
            });
            match missing {
                Some(y) => gens.push(y),
                None => {
                    return PermGroup::from_sorted_elements(self.degree, h.elements().to_vec())
                }
            }
        }
    }

    /// Conjugacy classes, each sorted, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Permutation>> {
        let t = self.table();
        let gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| t.index_of(g).expect("generator"))
            .collect();
        let n = t.size();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[x] = id;
            let mut members = vec![x];
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                i += 1;
                for &g in &gens {
                    let z = t.mul(t.mul(g, y), t.inv(g));
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        members.push(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
            .into_iter()
            .map(|c| c.into_iter().map(|i| t.element(i).clone()).collect())
            .collect()
    }

    /// Every normal subgroup, in canonical order.
    pub fn normal_subgroups(&self) -> Vec<PermGroup> {
        let t = self.table();
        let n = t.size();
        let to_idx = |g: &PermGroup| -> (Vec<usize>, Vec<usize>) {
            let gens = g.generators().iter().map(|p| t.index_of(p).unwrap()).collect();
            let elems = g.elements().iter().map(|p| t.index_of(p).unwrap()).collect();
            (gens, elems)
        };
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut list: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        seen.insert(bitset(n, &[0]));
        list.push((vec![], vec![0]));
        let mut minimal: Vec<(Vec<usize>, Vec<u64>)> = Vec::new();
        for c in self.conjugacy_classes() {
            let (gens, elems) = to_idx(&self.normal_closure(&c[..1]));
            let mask = bitset(n, &elems);
            if seen.insert(mask.clone()) {
                minimal.push((gens.clone(), mask));
                list.push((gens, elems));
            }
        }
        let mut i = 0;
        while i < list.len() {
            let (gens, elems) = list[i].clone();
            i += 1;
            let amask = bitset(n, &elems);
            for (mg, mmask) in &minimal {
                if mmask.iter().zip(&amask).all(|(m, a)| m & !a == 0) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.extend(mg.iter().copied());
                let j = closure(t, &g2);
                if seen.insert(bitset(n, &j)) {
                    list.push((g2, j));
                }
            }
        }
        let mut out: Vec<PermGroup> = list
            .into_iter()
            .map(|(_, mut idx)| {
                idx.sort_unstable();
                PermGroup::from_sorted_elements(
                    self.degree,
                    idx.into_iter().map(|i| t.element(i).clone()).collect(),
                )
            })
            .collect();
        out.sort();
        out
    }

    /// Every subgroup exactly once, in canonical order (by order, then by
    /// sorted element list).
    pub fn all_subgroups(&self) -> Result<Vec<PermGroup>> {
        self.all_subgroups_bounded(DEFAULT_SUBGROUP_BOUND)
    }

    pub fn all_subgroups_bounded(&self, bound: usize) -> Result<Vec<PermGroup>> {
        if self.order() > bound {
            return Err(Error::BoundExceeded {
                what: "group order for subgroup enumeration",
                value: self.order(),
                limit: bound,
            });
        }
        let t = self.table();
        let n = t.size();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        // (generators, elements)
        let mut subs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut cyclic: Vec<usize> = Vec::new();
        for a in 0..n {
            let elems = closure(t, &[a]);
            if seen.insert(bitset(n, &elems)) {
                subs.push((if a == 0 { vec![] } else { vec![a] }, elems));
                if a != 0 {
                    cyclic.push(a);
                }
            }
        }
        let mut i = 0;
        while i < subs.len() {
            let (gens, elems) = subs[i].clone();
            i += 1;
            let mask = bitset(n, &elems);
            for &c in &cyclic {
                if bit(&mask, c) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(c);
                let j = closure(t, &g2);
                if seen.insert(bitset(n, &j)) {
                    subs.push((g2, j));
                }
            }
        }
        let mut out: Vec<PermGroup> = subs
            .into_iter()
            .map(|(_, mut e)| {
                e.sort_unstable();
                PermGroup::from_sorted_elements(
                    self.degree,
                    e.into_iter().map(|i| t.element(i).clone()).collect(),
                )
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Group document for JSON output.
    pub fn to_document(&self, name: Option<String>) -> GroupDocument {
        GroupDocument {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            name,
        }
    }
}

fn enumerate(degree: usize, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        let x = out[i].clone();
        i += 1;
        for g in gens {
            let y = g.compose(&x);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                out.push(y);
                if out.len() > MAX_ENUMERATED_ORDER {
                    return Err(Error::BoundExceeded {
                        what: "group order",
                        value: out.len(),
                        limit: MAX_ENUMERATED_ORDER,
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn greedy_generators(elements: &[Permutation]) -> Vec<Permutation> {
    if elements.len() <= 1 {
        return Vec::new();
    }
    let degree = elements[0].degree();
    let mut by_order: Vec<(u64, &Permutation)> =
        elements.iter().skip(1).map(|p| (p.order(), p)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(b.1)));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut inside: HashSet<Permutation> = HashSet::new();
    inside.insert(Permutation::identity(degree));
    for (_, p) in by_order {
        if inside.len() == elements.len() {
            break;
        }
        if inside.contains(p) {
            continue;
        }
        gens.push(p.clone());
        inside = enumerate(degree, &gens)
            .expect("subgroup of an enumerated group")
            .into_iter()
            .collect();
    }
    gens
}

pub(crate) fn bitset(n: usize, elems: &[usize]) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &e in elems {
        b[e / 64] |= 1 << (e % 64);
    }
    b
}

#[inline]
pub(crate) fn bit(b: &[u64], i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements() == other.elements()
    }
}

impl Eq for PermGroup {}

impl PartialOrd for PermGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PermGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.order().cmp(&other.order()))
            .then_with(|| self.elements().cmp(other.elements()))
    }
}

impl std::hash::Hash for PermGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements().hash(state);
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, "> (order {})", self.order())
    }
}

/// JSON form of a group: `{ "degree": n, "generators": ["(1,2)", ..], "name": .. }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDocument {
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupDocument {
    pub fn to_group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|s| Permutation::parse(s, self.degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree, gens)
    }
}

/// Left cosets `gG′` of a subgroup, enumerated breadth-first from the base
/// coset along the parent's generators.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    parent: PermGroup,
    subgroup: PermGroup,
    representatives: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl CosetSpace {
    pub fn new(g: &PermGroup, gp: &PermGroup) -> Result<Self> {
        if !gp.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!(
                "{:?} is not contained in {:?}",
                gp, g
            )));
        }
        let mut space = CosetSpace {
            parent: g.clone(),
            subgroup: gp.clone(),
            representatives: Vec::new(),
            index: HashMap::new(),
        };
        let id = g.identity();
        space.index.insert(space.key(&id), 0);
        space.representatives.push(id);
        let mut i = 0;
        while i < space.representatives.len() {
            let r = space.representatives[i].clone();
            i += 1;
            for s in g.generators() {
                let x = s.compose(&r);
                let k = space.key(&x);
                if !space.index.contains_key(&k) {
                    space.index.insert(k, space.representatives.len());
                    space.representatives.push(x);
                }
            }
        }
        debug_assert_eq!(space.representatives.len() * gp.order(), g.order());
        Ok(space)
    }

    /// Cosets of the point stabilizer `G_0` of a transitive group, labelled
    /// so that coset `p` is `{x : x(0) = p}`. The coset action is then the
    /// group's own action.
    pub fn from_transitive(g: &PermGroup) -> Result<Self> {
        if !g.is_transitive() {
            return Err(Error::Invalid(format!("{:?} is not transitive", g)));
        }
        let n = g.degree();
        let mut reps: Vec<Option<Permutation>> = vec![None; n];
        for x in g.elements() {
            let p = x.apply(0);
            if reps[p].is_none() {
                reps[p] = Some(x.clone());
            }
        }
        let representatives: Vec<Permutation> = reps.into_iter().map(Option::unwrap).collect();
        let index = representatives
            .iter()
            .enumerate()
            .map(|(p, r)| (r.clone(), p))
            .collect();
        Ok(CosetSpace {
            parent: g.clone(),
            subgroup: g.stabilizer(0),
            representatives,
            index,
        })
    }

    /// Canonical label of `xG′`: its smallest element.
    fn key(&self, x: &Permutation) -> Permutation {
        self.subgroup
            .elements()
            .iter()
            .map(|h| x.compose(h))
            .min()
            .expect("non-empty subgroup")
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    pub fn base_point(&self) -> usize {
        0
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: &Permutation) -> usize {
        self.index[&self.key(x)]
    }

    /// `λ(g)`: the permutation `xG′ ↦ gxG′` of coset indices.
    pub fn lambda(&self, g: &Permutation) -> Permutation {
        let images = self
            .representatives
            .iter()
            .map(|r| self.coset_of(&g.compose(r)))
            .collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    }
}

/// Action of `g` on the left cosets of `gp`, base coset at point 1.
pub fn left_coset_action(g: &PermGroup, gp: &PermGroup) -> Result<(PermGroup, CosetSpace)> {
    let space = CosetSpace::new(g, gp)?;
    let gens = g.generators().iter().map(|s| space.lambda(s)).collect();
    let image = PermGroup::new(space.len(), gens)?;
    Ok((image, space))
}

/// Largest normal subgroup of `g` contained in `gp`.
pub fn core(g: &PermGroup, gp: &PermGroup) -> Result<PermGroup> {
    gp.core_in(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(grp(4, &["(1,2,3,4)"]).order(), 4);
        assert_eq!(grp(3, &["(1,2)", "(1,2,3)"]).order(), 6);
        assert_eq!(grp(4, &["(1,2,3,4)", "(2,4)"]).order(), 8);
        assert_eq!(PermGroup::symmetric(5).order(), 120);
        let bad = PermGroup::new(4, vec![Permutation::parse("(1,2)", 3).unwrap()]);
        assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn coset_action_matches_worked_labels() {
        let g = grp(3, &["(2,3)", "(1,2,3)"]);
        let gp = grp(3, &["(2,3)"]);
        let (img, space) = left_coset_action(&g, &gp).unwrap();
        assert_eq!(space.lambda(&g.generators()[0]).to_string(), "(2,3)");
        assert_eq!(space.lambda(&g.generators()[1]).to_string(), "(1,2,3)");
        assert_eq!(img.order(), 6);
        let (img, _) = left_coset_action(&g, &g).unwrap();
        assert_eq!((img.degree(), img.order()), (1, 1));
        let d8 = grp(4, &["(1,2,3,4)", "(2,4)"]);
        let space = CosetSpace::from_transitive(&d8).unwrap();
        for x in d8.elements() {
            assert_eq!(&space.lambda(x), x);
        }
    }

    #[test]
    fn coset_action_of_s4_on_s3_cosets() {
        let s4 = PermGroup::symmetric(4);
        let s3 = grp(4, &["(1,2)", "(1,2,3)"]);
        let (img, _) = left_coset_action(&s4, &s3).unwrap();
        assert_eq!(img.degree(), 4);
        assert_eq!(img.order(), 24);
        assert!(img.is_transitive());
        assert!(core(&s4, &s3).unwrap().is_trivial());
        assert!(left_coset_action(&s3, &s4).is_err());
    }

    #[test]
    fn regularity_and_normalizing() {
        assert!(grp(4, &["(1,2,3,4)"]).is_regular(4));
        assert!(!grp(4, &["(1,2)"]).is_regular(4));
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert!(v4.is_regular(4));
        assert!(grp(4, &["(1,2,3,4)"]).is_normalized_by(&v4));
        assert!(v4.is_normalized_by(&v4));
        assert!(!grp(3, &["(1,2)"]).is_normalized_by(&grp(3, &["(1,3)"])));
        assert!(v4.stabilizer(0).is_trivial());
        assert_eq!(grp(3, &["(1,2,3)"]).orbit(0), vec![0, 1, 2]);
    }

    #[test]
    fn subgroup_counts() {
        let count = |g: PermGroup| g.all_subgroups().unwrap().len();
        assert_eq!(count(grp(4, &["(1,2,3,4)"])), 3);
        assert_eq!(count(grp(3, &["(1,2)", "(1,2,3)"])), 6);
        assert_eq!(count(grp(4, &["(1,2,3,4)", "(2,4)"])), 10);
        assert_eq!(count(grp(4, &["(1,2,3)", "(2,3,4)"])), 10);
        assert_eq!(count(PermGroup::symmetric(4)), 30);
        assert_eq!(count(PermGroup::symmetric(5)), 156);
        assert!(PermGroup::symmetric(6).all_subgroups().is_err());
    }

    #[test]
    fn normal_subgroups_and_solvability() {
        let n = |g: PermGroup| g.normal_subgroups().len();
        assert_eq!(n(PermGroup::symmetric(4)), 4);
        assert_eq!(n(PermGroup::symmetric(5)), 3);
        assert_eq!(n(grp(4, &["(1,2,3,4)", "(2,4)"])), 6);
        assert_eq!(n(PermGroup::symmetric(7)), 3);
        assert!(PermGroup::symmetric(4).is_solvable());
        assert!(!PermGroup::symmetric(5).is_solvable());
        assert_eq!(PermGroup::symmetric(4).derived_subgroup().order(), 12);
        assert_eq!(grp(4, &["(1,2,3,4)", "(2,4)"]).center().order(), 2);
    }

    #[test]
    fn conjugacy_classes_partition() {
        let s5 = PermGroup::symmetric(5);
        let cl = s5.conjugacy_classes();
        assert_eq!(cl.len(), 7);
        assert_eq!(cl.iter().map(Vec::len).sum::<usize>(), 120);
    }
}
