//! Hopf Galois structures on a separable extension `K/k`, given by the Galois
//! group `G` of the normal closure and the subgroup `G′` fixing `K`.
//!
//! A structure is a regular subgroup `N ⊆ Perm(G/G′)` normalized by `λ(G)`.
//! Structures are found by embedding `G` into `Hol(N)` for each abstract
//! group `N` of order `[K:k]`; a direct search in `Sym(G/G′)` serves as an
//! independent check for small degrees.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::catalog::{groups_of_order, transitive_groups, CatalogEntry};
use crate::error::{Error, Result};
use crate::finite::{for_each_hom, IndexedGroup, SourceGroup};
use crate::group::{CosetSpace, PermGroup};
use crate::groupid::identify;
use crate::holomorph::{automorphism_data, automorphism_group, AutData, HolTable};
use crate::perm::Permutation;

/// Largest degree accepted by [`gp_regular_subgroups`].
pub const DIRECT_SEARCH_MAX_DEGREE: usize = 8;

/// `(G, G′)` with `G′` core-free, together with the coset action `λ`.
pub struct ExtensionDatum {
    g: PermGroup,
    space: CosetSpace,
    lambda_group: PermGroup,
    preimage: OnceLock<HashMap<Permutation, Permutation>>,
    search: OnceLock<SearchData>,
}

struct SearchData {
    src: SourceGroup,
    in_gp: Vec<bool>,
    reps: Vec<usize>,
}

impl fmt::Debug for ExtensionDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtensionDatum {{ G: {:?}, G′: {:?} }}", self.g, self.space.subgroup())
    }
}

impl ExtensionDatum {
    /// Fails if `G′ ⊄ G` or if `G′` contains a nontrivial normal subgroup of `G`.
    pub fn new(g: &PermGroup, gp: &PermGroup) -> Result<Self> {
        let space = CosetSpace::new(g, gp)?;
        Self::from_space(space)
    }

    /// The extension cut out by a point stabilizer of a transitive group.
    /// Cosets are labelled by points, so `λ(G) = G`.
    pub fn from_transitive(g: &PermGroup) -> Result<Self> {
        Self::from_space(CosetSpace::from_transitive(g)?)
    }

    /// The Galois extension with group `g` (`G′ = 1`).
    pub fn galois(g: &PermGroup) -> Result<Self> {
        Self::new(g, &PermGroup::trivial(g.degree()))
    }

    fn from_space(space: CosetSpace) -> Result<Self> {
        let g = space.parent().clone();
        let core = space.subgroup().core_in(&g)?;
        if !core.is_trivial() {
            return Err(Error::Invalid(format!(
                "subgroup {:?} contains the nontrivial normal subgroup {:?}",
                space.subgroup(),
                core
            )));
        }
        let gens: Vec<Permutation> = g.generators().iter().map(|x| space.lambda(x)).collect();
        let lambda_group = PermGroup::new(space.len(), gens)?;
        debug_assert_eq!(lambda_group.order(), g.order());
        Ok(ExtensionDatum {
            g,
            space,
            lambda_group,
            preimage: OnceLock::new(),
            search: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.g
    }

    pub fn subgroup(&self) -> &PermGroup {
        self.space.subgroup()
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.space
    }

    /// `[K:k] = [G:G′]`.
    pub fn degree(&self) -> usize {
        self.space.len()
    }

    pub fn is_galois(&self) -> bool {
        self.subgroup().is_trivial()
    }

    pub fn lambda(&self, g: &Permutation) -> Permutation {
        self.space.lambda(g)
    }

    pub fn lambda_group(&self) -> &PermGroup {
        &self.lambda_group
    }

    /// The element of `G` acting as `x`, if any.
    pub fn lambda_preimage(&self, x: &Permutation) -> Option<&Permutation> {
        self.preimage
            .get_or_init(|| {
                self.g
                    .elements()
                    .iter()
                    .map(|g| (self.lambda(g), g.clone()))
                    .collect()
            })
            .get(x)
    }

    /// `λ(H)` for a subgroup `H ⊆ G`.
    pub fn lambda_of(&self, h: &PermGroup) -> PermGroup {
        let gens: Vec<Permutation> = h.generators().iter().map(|x| self.lambda(x)).collect();
        PermGroup::new(self.degree(), gens).expect("image of a subgroup")
    }

    /// `λ⁻¹(S)` for a subgroup `S ⊆ λ(G)`.
    pub fn lambda_inverse_of(&self, s: &PermGroup) -> PermGroup {
        let gens: Vec<Permutation> = s
            .generators()
            .iter()
            .map(|x| self.lambda_preimage(x).expect("subgroup of λ(G)").clone())
            .collect();
        PermGroup::new(self.g.degree(), gens).expect("preimage of a subgroup")
    }

    fn search_data(&self) -> &SearchData {
        self.search.get_or_init(|| {
            let t = self.g.table();
            let src = SourceGroup::generating(t);
            let in_gp = t.elements().iter().map(|x| self.subgroup().contains(x)).collect();
            let reps = self
                .space
                .representatives()
                .iter()
                .map(|r| t.index_of(r).expect("representative in G"))
                .collect();
            SearchData { src, in_gp, reps }
        })
    }
}

/// A Hopf Galois structure: a regular subgroup of `Perm(G/G′)` normalized by
/// `λ(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGStructure {
    pub n: PermGroup,
    pub type_name: String,
    /// Set when the structure is the one attached to a normal complement
    /// `M`, namely the centralizer of `λ(M)`.
    pub complement: Option<PermGroup>,
}

impl HGStructure {
    pub fn new(e: &ExtensionDatum, n: PermGroup) -> Result<Self> {
        verify_structure(e, &n)?;
        let type_name = identify(&n);
        Ok(HGStructure {
            n,
            type_name,
            complement: None,
        })
    }

    /// Whether `N ⊆ λ(G)`.
    pub fn is_inside_lambda(&self, e: &ExtensionDatum) -> bool {
        self.n.is_subgroup_of(e.lambda_group())
    }

    /// Whether `N` is the centralizer of `λ(G)` (the classical structure of
    /// a Galois extension).
    pub fn is_classical(&self, e: &ExtensionDatum) -> bool {
        e.is_galois() && self.n == centralizer_of_regular(e.lambda_group())
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.n.generators().iter().map(|p| p.to_string()).collect()
    }
}

/// Checks that `n` acts regularly on `G/G′` and is normalized by `λ(G)`.
pub fn verify_structure(e: &ExtensionDatum, n: &PermGroup) -> Result<()> {
    if n.degree() != e.degree() {
        return Err(Error::DegreeMismatch {
            expected: e.degree(),
            found: n.degree(),
        });
    }
    if !n.is_regular(e.degree()) {
        return Err(Error::Invalid(format!("{:?} is not regular", n)));
    }
    if !n.is_normalized_by(e.lambda_group()) {
        return Err(Error::Invalid(format!("{:?} is not normalized by λ(G)", n)));
    }
    Ok(())
}

/// Centralizer in the full symmetric group of a regular group `r`: the
/// unique element sending `0` to `q` is `r(0) ↦ r(q)`.
pub fn centralizer_of_regular(r: &PermGroup) -> PermGroup {
    let d = r.degree();
    let mut at: Vec<Option<&Permutation>> = vec![None; d];
    for x in r.elements() {
        at[x.apply(0)] = Some(x);
    }
    let elems: Vec<Permutation> = (0..d)
        .map(|q| {
            let mut img = vec![0u16; d];
            for x in at.iter().map(|x| x.expect("regular")) {
                img[x.apply(0)] = x.apply(q) as u16;
            }
            Permutation::from_images_unchecked(img)
        })
        .collect();
    PermGroup::from_unsorted_elements(d, elems)
}

/// Normal subgroups `M` of `G` with `G = M·G′` and `M ∩ G′ = 1`.
pub fn normal_complements(e: &ExtensionDatum) -> Vec<PermGroup> {
    let gp = e.subgroup();
    e.group()
        .normal_subgroups()
        .into_iter()
        .filter(|m| m.order() == e.degree() && m.intersection(gp).is_trivial())
        .collect()
}

pub fn is_almost_classically_galois(e: &ExtensionDatum) -> bool {
    !normal_complements(e).is_empty()
}

/// The structure attached to a normal complement `M`: the centralizer of
/// `λ(M)` in `Perm(G/G′)`. For abelian `M` this is `λ(M)` itself.
pub fn complement_structure(e: &ExtensionDatum, m: &PermGroup) -> Result<HGStructure> {
    let n = centralizer_of_regular(&e.lambda_of(m));
    let mut s = HGStructure::new(e, n)?;
    s.complement = Some(m.clone());
    Ok(s)
}

/// The classical structure `Cent(λ(G))` of a Galois extension.
pub fn classical_structure(e: &ExtensionDatum) -> Result<HGStructure> {
    if !e.is_galois() {
        return Err(Error::Invalid("the extension is not Galois".into()));
    }
    complement_structure(e, e.group())
}

/// All regular subgroups of `Sym(G/G′)` normalized by `λ(G)`, by direct
/// search over fixed-point-free semiregular permutations. Degree at most
/// [`DIRECT_SEARCH_MAX_DEGREE`].
pub fn gp_regular_subgroups(e: &ExtensionDatum) -> Result<Vec<PermGroup>> {
    let n = e.degree();
    if n > DIRECT_SEARCH_MAX_DEGREE {
        return Err(Error::BoundExceeded {
            what: "degree for direct regular-subgroup search",
            value: n,
            limit: DIRECT_SEARCH_MAX_DEGREE,
        });
    }
    let lam = e.lambda_group();
    let mut blocks: Vec<PermGroup> = Vec::new();
    let mut seen: HashSet<PermGroup> = HashSet::new();
    for x in PermGroup::symmetric(n).elements() {
        if x.is_identity() || !x.is_semiregular() {
            continue;
        }
        let Some(c) = conjugation_closure_bounded(lam, x, n) else { continue };
        if c.orbit(0).len() == c.order() && seen.insert(c.clone()) {
            blocks.push(c);
        }
    }
    let mut found: Vec<PermGroup> = Vec::new();
    let mut visited: HashSet<PermGroup> = HashSet::new();
    let mut stack: Vec<(PermGroup, usize)> = vec![(PermGroup::trivial(n), 0)];
    // every reachable join is expanded once, against all blocks
    while let Some((j, start)) = stack.pop() {
        for b in blocks.iter().skip(start) {
            if b.is_subgroup_of(&j) {
                continue;
            }
            let k = j.join(b);
            if k.order() > n || k.orbit(0).len() != k.order() || !visited.insert(k.clone()) {
                continue;
            }
            if k.order() == n {
                found.push(k);
            } else {
                stack.push((k, 0));
            }
        }
    }
    found.sort();
    Ok(found)
}

/// `⟨x^h : h ∈ H⟩`, or `None` once it exceeds `bound` elements.
fn conjugation_closure_bounded(h: &PermGroup, x: &Permutation, bound: usize) -> Option<PermGroup> {
    let mut gens: Vec<Permutation> = vec![x.clone()];
    let mut i = 0;
    while i < gens.len() {
        for g in h.generators() {
            let y = gens[i].conjugate_by(g);
            if !gens.contains(&y) {
                gens.push(y);
                if gens.len() > bound {
                    return None;
                }
            }
        }
        i += 1;
    }
    let id = Permutation::identity(x.degree());
    let mut elems = vec![id];
    let mut seen: HashSet<Permutation> = elems.iter().cloned().collect();
    let mut j = 0;
    while j < elems.len() {
        for s in &gens {
            let y = s.compose(&elems[j]);
            if seen.insert(y.clone()) {
                elems.push(y);
                if elems.len() > bound {
                    return None;
                }
            }
        }
        j += 1;
    }
    Some(PermGroup::from_unsorted_elements(x.degree(), elems))
}

/// Embeddings `β : G → Hol(N)` with `β(G′) = β(G) ∩ Stab(e_N)`, up to
/// conjugation by `Aut(N)`.
pub struct ByottClasses {
    pub type_name: String,
    pub aut_order: usize,
    /// Number of embeddings before taking classes.
    pub embeddings: usize,
    /// One element map per class, indexed like `G`'s sorted elements.
    pub representatives: Vec<Vec<usize>>,
    table: HolTable,
    n_group: PermGroup,
}

impl ByottClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn hol(&self) -> &HolTable {
        &self.table
    }

    pub fn n_group(&self) -> &PermGroup {
        &self.n_group
    }
}

/// Runs the embedding search for one abstract type `N`. With `first_only`
/// the search stops at the first embedding.
pub fn byott_embedding_classes(
    e: &ExtensionDatum,
    n: &PermGroup,
    type_name: &str,
    first_only: bool,
) -> Result<ByottClasses> {
    if n.order() != e.degree() {
        return Err(Error::DegreeMismatch {
            expected: e.degree(),
            found: n.order(),
        });
    }
    let aut: Arc<AutData> = automorphism_data(n)?;
    let table = HolTable::new(aut);
    let mut out = ByottClasses {
        type_name: type_name.to_string(),
        aut_order: table.aut().len(),
        embeddings: 0,
        representatives: Vec::new(),
        table,
        n_group: n.clone(),
    };
    if out.table.size() % e.group().order() != 0 {
        return Ok(out);
    }
    let sd = e.search_data();
    let hol = &out.table;
    let mut by_class: HashMap<(usize, bool), Vec<usize>> = HashMap::new();
    for x in 0..hol.size() {
        by_class
            .entry((hol.order_of(x), hol.in_stabilizer(x)))
            .or_default()
            .push(x);
    }
    let candidates: Vec<Vec<usize>> = sd
        .src
        .gens()
        .iter()
        .zip(sd.src.gen_orders())
        .map(|(&s, &o)| by_class.get(&(o, sd.in_gp[s])).cloned().unwrap_or_default())
        .collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut raw = 0usize;
    let gens = sd.src.gens().to_vec();
    for_each_hom(
        &sd.src,
        hol,
        &candidates,
        |g, x| sd.in_gp[g] == hol.in_stabilizer(x),
        |m| {
            raw += 1;
            let key: Vec<usize> = gens.iter().map(|&s| m[s]).collect();
            if !seen.contains(&key) {
                for b in 0..hol.aut().len() {
                    seen.insert(key.iter().map(|&x| hol.conj_by_aut(b, x)).collect());
                }
                reps.push(m.to_vec());
            }
            !first_only
        },
    );
    if !first_only {
        debug_assert_eq!(raw, reps.len() * hol.aut().len());
    }
    out.embeddings = raw;
    out.representatives = reps;
    Ok(out)
}

/// The regular subgroup of `Perm(G/G′)` carried by an embedding: with
/// `φ(c) = β(rep_c)(e_N)`, the element `η ∈ N` acts as `c ↦ φ⁻¹(η·φ(c))`.
pub fn structure_from_embedding(
    e: &ExtensionDatum,
    classes: &ByottClasses,
    beta: &[usize],
) -> Result<HGStructure> {
    let sd = e.search_data();
    let hol = classes.hol();
    let d = e.degree();
    let phi: Vec<usize> = sd.reps.iter().map(|&r| hol.split(beta[r]).0).collect();
    let mut phi_inv = vec![usize::MAX; d];
    for (c, &x) in phi.iter().enumerate() {
        phi_inv[x] = c;
    }
    if phi_inv.contains(&usize::MAX) {
        return Err(Error::Invalid("embedding does not induce a bijection".into()));
    }
    let nt = classes.n_group().table();
    let gens: Vec<Permutation> = classes
        .n_group()
        .generators()
        .iter()
        .map(|eta| {
            let i = nt.index_of(eta).expect("generator");
            Permutation::from_images_unchecked(
                (0..d).map(|c| phi_inv[nt.mul(i, phi[c])] as u16).collect(),
            )
        })
        .collect();
    let n = if gens.is_empty() {
        PermGroup::trivial(d)
    } else {
        PermGroup::new(d, gens)?
    };
    verify_structure(e, &n)?;
    Ok(HGStructure {
        n,
        type_name: classes.type_name.clone(),
        complement: None,
    })
}

/// Structure counts by type of `N`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountReport {
    /// Types with at least one structure.
    pub per_type: BTreeMap<String, usize>,
    pub total: usize,
    #[serde(skip)]
    pub structures: Vec<HGStructure>,
}

/// `|Hol(N)|` for every group `N` of the given order.
pub fn holomorph_orders(degree: usize) -> Result<Vec<(&'static CatalogEntry, usize)>> {
    groups_of_order(degree)?
        .into_iter()
        .map(|n| {
            let aut = automorphism_data(n.group().expect("catalog group"))?;
            Ok((n, degree * aut.len()))
        })
        .collect()
}

fn holomorph_is_solvable(n: &PermGroup) -> Result<bool> {
    Ok(n.is_solvable() && automorphism_group(n)?.is_solvable())
}

/// Types `N` for which an embedding is possible at all: `|G|` divides
/// `|Hol(N)|`, and `Hol(N)` is not solvable when `G` is not.
fn admissible_types(e: &ExtensionDatum) -> Result<Vec<&'static CatalogEntry>> {
    let g_order = e.group().order();
    let g_solvable = e.group().is_solvable();
    let mut out = Vec::new();
    for (n, hol) in holomorph_orders(e.degree())? {
        if hol % g_order != 0 {
            continue;
        }
        if !g_solvable && holomorph_is_solvable(n.group().unwrap())? {
            continue;
        }
        out.push(n);
    }
    Ok(out)
}

/// Every Hopf Galois structure, grouped by type.
pub fn count_structures(e: &ExtensionDatum) -> Result<CountReport> {
    let mut report = CountReport {
        per_type: BTreeMap::new(),
        total: 0,
        structures: Vec::new(),
    };
    for n in admissible_types(e)? {
        let classes = byott_embedding_classes(e, n.group().unwrap(), &n.name, false)?;
        if classes.count() == 0 {
            continue;
        }
        report.per_type.insert(n.name.clone(), classes.count());
        report.total += classes.count();
        for beta in &classes.representatives {
            report.structures.push(structure_from_embedding(e, &classes, beta)?);
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Verdict {
    #[serde(rename = "Galois")]
    Galois,
    #[serde(rename = "almost classically Galois")]
    AlmostClassicallyGalois,
    #[serde(rename = "Hopf Galois not almost classically Galois")]
    HopfGaloisNotAcg,
    #[serde(rename = "not Hopf Galois")]
    NotHopfGalois,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Galois => "Galois",
            Verdict::AlmostClassicallyGalois => "almost classically Galois",
            Verdict::HopfGaloisNotAcg => "Hopf Galois not almost classically Galois",
            Verdict::NotHopfGalois => "not Hopf Galois",
        }
    }

    pub fn is_hopf_galois(self) -> bool {
        self != Verdict::NotHopfGalois
    }

    /// Galois extensions count as almost classically Galois.
    pub fn is_almost_classical(self) -> bool {
        matches!(self, Verdict::Galois | Verdict::AlmostClassicallyGalois)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecidedBy {
    #[serde(rename = "step0")]
    Step0,
    #[serde(rename = "order-precheck")]
    OrderPrecheck,
    #[serde(rename = "byott-search")]
    ByottSearch,
}

impl DecidedBy {
    pub fn as_str(self) -> &'static str {
        match self {
            DecidedBy::Step0 => "step0",
            DecidedBy::OrderPrecheck => "order-precheck",
            DecidedBy::ByottSearch => "byott-search",
        }
    }
}

impl fmt::Display for DecidedBy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    pub decided_by: DecidedBy,
    pub witness: Option<HGStructure>,
    pub trace: Vec<String>,
}

/// Decides whether `K/k` is Hopf Galois, stopping at the first witness.
///
/// Step 0 looks for a normal complement. Failing that, each type `N` with
/// `|G|` dividing `|Hol(N)|` is searched for an embedding.
pub fn is_hopf_galois(e: &ExtensionDatum) -> Result<Decision> {
    let mut trace = Vec::new();
    if e.is_galois() {
        trace.push("G′ = 1".to_string());
        return Ok(Decision {
            verdict: Verdict::Galois,
            decided_by: DecidedBy::Step0,
            witness: Some(classical_structure(e)?),
            trace,
        });
    }
    if let Some(m) = normal_complements(e).first() {
        trace.push(format!("normal complement {:?}", m));
        return Ok(Decision {
            verdict: Verdict::AlmostClassicallyGalois,
            decided_by: DecidedBy::Step0,
            witness: Some(complement_structure(e, m)?),
            trace,
        });
    }
    trace.push("no normal complement".to_string());
    let g_order = e.group().order();
    let g_solvable = e.group().is_solvable();
    let mut any_divisible = false;
    for (n, hol) in holomorph_orders(e.degree())? {
        if hol % g_order != 0 {
            trace.push(format!("{}: |Hol| = {} not divisible by {}", n.name, hol, g_order));
            continue;
        }
        any_divisible = true;
        let ng = n.group().unwrap();
        if !g_solvable && holomorph_is_solvable(ng)? {
            trace.push(format!("{}: Hol solvable, G not", n.name));
            continue;
        }
        let classes = byott_embedding_classes(e, ng, &n.name, true)?;
        if let Some(beta) = classes.representatives.first() {
            trace.push(format!("{}: embedding found", n.name));
            return Ok(Decision {
                verdict: Verdict::HopfGaloisNotAcg,
                decided_by: DecidedBy::ByottSearch,
                witness: Some(structure_from_embedding(e, &classes, beta)?),
                trace,
            });
        }
        trace.push(format!("{}: no embedding", n.name));
    }
    Ok(Decision {
        verdict: Verdict::NotHopfGalois,
        decided_by: if any_divisible {
            DecidedBy::ByottSearch
        } else {
            DecidedBy::OrderPrecheck
        },
        witness: None,
        trace,
    })
}

/// One transitive group of a given degree with its verdict.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassifyRow {
    pub name: String,
    pub order: u64,
    pub verdict: Verdict,
    pub per_type_counts: BTreeMap<String, usize>,
    /// Generators of each regular subgroup found.
    pub witnesses: Vec<Vec<String>>,
    pub decided_by: DecidedBy,
}

/// Verdict for a catalog entry. Entries without generators are decided by
/// the order test alone.
pub fn classify_entry(entry: &CatalogEntry, with_counts: bool) -> Result<ClassifyRow> {
    let Some(g) = entry.group() else {
        let divides = holomorph_orders(entry.degree)?
            .iter()
            .any(|&(_, hol)| hol as u64 % entry.order == 0);
        if divides {
            return Err(Error::Unsupported(format!(
                "{} has no generators and passes the order test",
                entry.name
            )));
        }
        return Ok(ClassifyRow {
            name: entry.name.clone(),
            order: entry.order,
            verdict: Verdict::NotHopfGalois,
            per_type_counts: BTreeMap::new(),
            witnesses: Vec::new(),
            decided_by: DecidedBy::OrderPrecheck,
        });
    };
    let e = ExtensionDatum::from_transitive(g)?;
    let d = is_hopf_galois(&e)?;
    let (per_type_counts, witnesses) = if with_counts {
        let c = count_structures(&e)?;
        let w = c.structures.iter().map(HGStructure::generator_strings).collect();
        (c.per_type, w)
    } else {
        (
            BTreeMap::new(),
            d.witness.iter().map(HGStructure::generator_strings).collect(),
        )
    };
    Ok(ClassifyRow {
        name: entry.name.clone(),
        order: entry.order,
        verdict: d.verdict,
        per_type_counts,
        witnesses,
        decided_by: d.decided_by,
    })
}

/// Rows for every transitive group of the given degree, in catalog order.
pub fn classify_degree(degree: usize, with_counts: bool) -> Result<Vec<ClassifyRow>> {
    transitive_groups(degree)?
        .into_iter()
        .map(|entry| classify_entry(entry, with_counts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::transitive_group;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    fn counts(e: &ExtensionDatum) -> Vec<(String, usize)> {
        count_structures(e).unwrap().per_type.into_iter().collect()
    }

    fn pairs(v: &[(&str, usize)]) -> Vec<(String, usize)> {
        v.iter().map(|&(a, b)| (a.to_string(), b)).collect()
    }

    #[test]
    fn galois_counts() {
        let v4 = ExtensionDatum::galois(&grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"])).unwrap();
        assert_eq!(counts(&v4), pairs(&[("C4", 3), ("V4", 1)]));
        let s3 = ExtensionDatum::galois(&grp(3, &["(1,2)", "(1,2,3)"])).unwrap();
        assert_eq!(counts(&s3), pairs(&[("C6", 3), ("S3", 2)]));
        let c8 = ExtensionDatum::galois(&grp(8, &["(1,2,3,4,5,6,7,8)"])).unwrap();
        assert_eq!(counts(&c8), pairs(&[("C8", 2), ("D_{2·4}", 2), ("Q8", 2)]));
    }

    #[test]
    fn byott_agrees_with_direct_search() {
        let cases: Vec<ExtensionDatum> = vec![
            ExtensionDatum::galois(&grp(3, &["(1,2)", "(1,2,3)"])).unwrap(),
            ExtensionDatum::galois(&grp(4, &["(1,2,3,4)", "(2,4)"])).unwrap(),
            ExtensionDatum::from_transitive(&grp(4, &["(1,2,3,4)", "(2,4)"])).unwrap(),
            ExtensionDatum::from_transitive(&PermGroup::symmetric(4)).unwrap(),
            ExtensionDatum::from_transitive(&grp(5, &["(1,2,3,4,5)", "(2,3,5,4)"])).unwrap(),
            ExtensionDatum::from_transitive(transitive_group(6, "F_{18}:2").unwrap().group().unwrap())
                .unwrap(),
        ];
        for e in &cases {
            let mut byott: Vec<PermGroup> =
                count_structures(e).unwrap().structures.into_iter().map(|s| s.n).collect();
            byott.sort();
            let direct = gp_regular_subgroups(e).unwrap();
            assert_eq!(byott, direct, "{:?}", e);
        }
    }

    #[test]
    fn cubic_and_quartic_verdicts() {
        let s3 = ExtensionDatum::from_transitive(&PermGroup::symmetric(3)).unwrap();
        let d = is_hopf_galois(&s3).unwrap();
        assert_eq!((d.verdict, d.decided_by), (Verdict::AlmostClassicallyGalois, DecidedBy::Step0));
        let a4 = ExtensionDatum::from_transitive(&grp(4, &["(1,2,3)", "(2,3,4)"])).unwrap();
        assert_eq!(is_hopf_galois(&a4).unwrap().verdict, Verdict::AlmostClassicallyGalois);
        let rows = classify_degree(4, true).unwrap();
        let v: Vec<Verdict> = rows.iter().map(|r| r.verdict).collect();
        assert_eq!(v, [Verdict::Galois, Verdict::Galois, Verdict::AlmostClassicallyGalois,
            Verdict::AlmostClassicallyGalois, Verdict::AlmostClassicallyGalois]);
    }

    #[test]
    fn quintic_verdicts() {
        let rows = classify_degree(5, false).unwrap();
        let v: Vec<(&str, Verdict, DecidedBy)> =
            rows.iter().map(|r| (r.name.as_str(), r.verdict, r.decided_by)).collect();
        assert_eq!(v[0].1, Verdict::Galois);
        assert_eq!(v[1].1, Verdict::AlmostClassicallyGalois);
        assert_eq!(v[2].1, Verdict::AlmostClassicallyGalois);
        assert_eq!(v[3].1, Verdict::NotHopfGalois);
        assert_eq!(v[4].1, Verdict::NotHopfGalois);
        assert_eq!(v[3].2, DecidedBy::OrderPrecheck);
    }

    #[test]
    fn complement_structure_of_abelian_complement_is_its_image() {
        let d8 = grp(4, &["(1,2,3,4)", "(2,4)"]);
        let e = ExtensionDatum::from_transitive(&d8).unwrap();
        let ms = normal_complements(&e);
        assert_eq!(ms.len(), 2);
        for m in &ms {
            let s = complement_structure(&e, m).unwrap();
            assert_eq!(s.n, e.lambda_of(m));
            assert!(s.is_inside_lambda(&e));
        }
    }

    #[test]
    fn classical_structure_is_right_regular() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        let e = ExtensionDatum::galois(&s3).unwrap();
        let c = classical_structure(&e).unwrap();
        assert!(c.is_classical(&e));
        assert!(!c.is_inside_lambda(&e));
        assert_eq!(c.type_name, "S3");
    }

    #[test]
    fn rejects_subgroup_with_core() {
        let d8 = grp(4, &["(1,2,3,4)", "(2,4)"]);
        let bad = grp(4, &["(1,3)(2,4)"]);
        assert!(ExtensionDatum::new(&d8, &bad).is_err());
    }
}
