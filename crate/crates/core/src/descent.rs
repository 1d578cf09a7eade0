//! The Hopf algebra `H = K̃[N]^G` of a structure, computed from an explicit
//! presentation `K̃ = Q(θ)` by exact linear algebra.
//!
//! `G` acts on `K̃[N]` semilinearly: `g·(Σ u_η η) = Σ g(u_η) λ(g)ηλ(g)⁻¹`.
//! Elements of `K̃` are coordinate vectors on `1, θ, …, θ^{d-1}` and
//! `K = K̃^{G′}` is a subspace of those.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_rationals, FieldElement, NumberField};
use crate::group::PermGroup;
use crate::hopf::{ExtensionDatum, HGStructure};
use crate::lattice::{corresponding_subgroup, stable_subgroups};
use crate::linalg::{self, Q};
use crate::perm::Permutation;

/// A primitive-element presentation of the normal closure, as read from
/// JSON. Coefficients are rational strings such as `"-9/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingFieldPresentation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// `c_0, …, c_{d-1}, 1`.
    pub min_poly: Vec<String>,
    /// Image of `θ` under each named generator, as a polynomial in `θ`.
    #[serde(rename = "generators")]
    pub generator_images: BTreeMap<String, Vec<String>>,
    /// The permutation of `G` each named generator stands for.
    #[serde(rename = "binding")]
    pub group_binding: BTreeMap<String, String>,
    /// Named field elements, for display and tests.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub elements: BTreeMap<String, Vec<String>>,
}

impl SplittingFieldPresentation {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("field presentation: {}", e)))
    }
}

/// A validated presentation with the matrix of every element of `G`.
#[derive(Clone)]
pub struct CheckedPresentation {
    name: Option<String>,
    field: NumberField,
    group: PermGroup,
    matrices: HashMap<Permutation, Vec<Vec<Q>>>,
    elements: BTreeMap<String, FieldElement>,
}

impl fmt::Debug for CheckedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckedPresentation")
            .field("name", &self.name)
            .field("degree", &self.field.degree())
            .field("group", &self.group)
            .finish()
    }
}

pub fn validate_presentation(
    p: &SplittingFieldPresentation,
    g: &PermGroup,
) -> Result<CheckedPresentation> {
    let field = NumberField::new(parse_rationals(&p.min_poly)?)?;
    let d = field.degree();
    if !field.is_irreducible()? {
        return Err(Error::Invalid("minimal polynomial is reducible".into()));
    }
    if d != g.order() {
        return Err(Error::DegreeMismatch {
            expected: g.order(),
            found: d,
        });
    }
    let names: Vec<&String> = p.generator_images.keys().collect();
    if names != p.group_binding.keys().collect::<Vec<_>>() {
        return Err(Error::Invalid(
            "generator images and binding name different generators".into(),
        ));
    }
    let mut gens = Vec::with_capacity(names.len());
    for name in names {
        let perm = Permutation::parse(&p.group_binding[name], g.degree())?;
        if !g.contains(&perm) {
            return Err(Error::Invalid(format!("{} = {} is not in G", name, perm)));
        }
        let mut coeffs = parse_rationals(&p.generator_images[name])?;
        if coeffs.len() > d {
            return Err(Error::Invalid(format!("image of θ under {} has too many coefficients", name)));
        }
        coeffs.resize(d, Q::zero());
        let image = field.element(coeffs)?;
        if !field.eval(field.min_poly(), &image).is_zero() {
            return Err(Error::Invalid(format!(
                "image of θ under {} is not a root of the minimal polynomial",
                name
            )));
        }
        gens.push((perm, field.automorphism_matrix(&image)));
    }
    if PermGroup::new(g.degree(), gens.iter().map(|(x, _)| x.clone()).collect())?.order() != g.order() {
        return Err(Error::Invalid("bound generators do not generate G".into()));
    }

    let id = g.identity();
    let mut matrices = HashMap::from([(id.clone(), linalg::identity(d))]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let mx = matrices[&x].clone();
        for (s, ms) in &gens {
            let y = s.compose(&x);
            let my = linalg::mat_mul(ms, &mx);
            match matrices.get(&y) {
                Some(m) if *m != my => {
                    return Err(Error::Invalid(format!(
                        "automorphisms violate a relation of G at {}",
                        y
                    )))
                }
                Some(_) => {}
                None => {
                    matrices.insert(y.clone(), my);
                    queue.push_back(y);
                }
            }
        }
    }
    let distinct: HashSet<&Vec<Vec<Q>>> = matrices.values().collect();
    if distinct.len() != d {
        return Err(Error::Invalid("G does not act faithfully on the field".into()));
    }

    let mut elements = BTreeMap::new();
    for (name, c) in &p.elements {
        let mut coeffs = parse_rationals(c)?;
        coeffs.resize(d, Q::zero());
        elements.insert(name.clone(), field.element(coeffs)?);
    }
    Ok(CheckedPresentation {
        name: p.name.clone(),
        field,
        group: g.clone(),
        matrices,
        elements,
    })
}

impl CheckedPresentation {
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Matrix of `g` on coordinate vectors; `M_{gh} = M_g M_h`.
    pub fn matrix(&self, g: &Permutation) -> Option<&Vec<Vec<Q>>> {
        self.matrices.get(g)
    }

    pub fn apply(&self, g: &Permutation, x: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: linalg::mat_vec(&self.matrices[g], &x.coeffs),
        }
    }

    pub fn element(&self, name: &str) -> Option<&FieldElement> {
        self.elements.get(name)
    }
}

/// Reduced echelon basis of `K̃^S`.
pub fn fixed_subspace(p: &CheckedPresentation, s: &PermGroup) -> Vec<Vec<Q>> {
    let d = p.field.degree();
    let id = linalg::identity(d);
    let mut rows = Vec::new();
    for g in s.generators() {
        let m = &p.matrices[g];
        for (r, i) in m.iter().zip(&id) {
            rows.push(r.iter().zip(i).map(|(a, b)| a - b).collect());
        }
    }
    if rows.is_empty() {
        return id;
    }
    linalg::row_space(&linalg::kernel(&rows, d))
}

/// `Σ u_η η`, with coefficients listed in the order of the structure's
/// elements (identity first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub coeffs: Vec<FieldElement>,
}

impl GroupAlgebraElement {
    pub fn to_vector(&self) -> Vec<Q> {
        self.coeffs.iter().flat_map(|c| c.coeffs.iter().cloned()).collect()
    }

    pub fn from_vector(v: &[Q], d: usize) -> Self {
        GroupAlgebraElement {
            coeffs: v
                .chunks(d)
                .map(|c| FieldElement { coeffs: c.to_vec() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraBasis {
    pub basis: Vec<GroupAlgebraElement>,
    pub n: usize,
}

impl HopfAlgebraBasis {
    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.basis.iter().map(GroupAlgebraElement::to_vector).collect()
    }
}

/// How `η ∈ N` evaluates on `x ∈ K`: through the coset representative of
/// `η(base)` or of `η⁻¹(base)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActionConvention {
    #[serde(rename = "direct")]
    Direct,
    #[serde(rename = "inverse-at-base")]
    InverseAtBase,
}

impl ActionConvention {
    /// `Direct` for abelian `N ⊆ λ(G)`, `InverseAtBase` otherwise.
    pub fn for_structure(e: &ExtensionDatum, s: &HGStructure) -> Self {
        if s.is_inside_lambda(e) && s.n.is_abelian() {
            ActionConvention::Direct
        } else {
            ActionConvention::InverseAtBase
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ActionConvention::Direct => "direct",
            ActionConvention::InverseAtBase => "inverse-at-base",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            ActionConvention::Direct => "mu(sum u_eta eta)(x) = sum u_eta * r(eta(base))(x)",
            ActionConvention::InverseAtBase => {
                "mu(sum u_eta eta)(x) = sum u_eta * r(eta^-1(base))(x)"
            }
        }
    }
}

impl fmt::Display for ActionConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Descent data for one structure on one presentation.
pub struct Descent<'a> {
    p: &'a CheckedPresentation,
    e: &'a ExtensionDatum,
    s: &'a HGStructure,
    n_elements: Vec<Permutation>,
    n_index: HashMap<Permutation, usize>,
    convention: ActionConvention,
    /// `M_r` for the coset representative paired with each `η`.
    eval: Vec<Vec<Vec<Q>>>,
    k_basis: Vec<Vec<Q>>,
    k_pivots: Vec<usize>,
    h: HopfAlgebraBasis,
}

impl<'a> Descent<'a> {
    pub fn new(p: &'a CheckedPresentation, e: &'a ExtensionDatum, s: &'a HGStructure) -> Result<Self> {
        if p.group != *e.group() {
            return Err(Error::Invalid(
                "presentation is bound to a different group".into(),
            ));
        }
        let convention = ActionConvention::for_structure(e, s);
        let n_elements = s.n.elements().to_vec();
        let n_index = n_elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        let reps = e.cosets().representatives();
        let base = e.cosets().base_point();
        let eval = n_elements
            .iter()
            .map(|eta| {
                let point = match convention {
                    ActionConvention::Direct => eta.apply(base),
                    ActionConvention::InverseAtBase => eta.inverse().apply(base),
                };
                p.matrices[&reps[point]].clone()
            })
            .collect();
        let (k_basis, k_pivots) = linalg::rref(&fixed_subspace(p, e.subgroup()));
        let mut descent = Descent {
            p,
            e,
            s,
            n_elements,
            n_index,
            convention,
            eval,
            k_basis,
            k_pivots,
            h: HopfAlgebraBasis {
                basis: Vec::new(),
                n: 0,
            },
        };
        let all = s.n.clone();
        let basis = descent.fixed_points(&all)?;
        if basis.len() != e.degree() {
            return Err(Error::Invalid(format!(
                "fixed points have dimension {}, expected {}",
                basis.len(),
                e.degree()
            )));
        }
        descent.h = HopfAlgebraBasis {
            n: basis.len(),
            basis,
        };
        Ok(descent)
    }

    pub fn convention(&self) -> ActionConvention {
        self.convention
    }

    pub fn structure(&self) -> &HGStructure {
        self.s
    }

    pub fn n_elements(&self) -> &[Permutation] {
        &self.n_elements
    }

    pub fn presentation(&self) -> &CheckedPresentation {
        self.p
    }

    pub fn d(&self) -> usize {
        self.p.field.degree()
    }

    /// Reduced echelon basis of `K` inside `K̃`.
    pub fn k_basis(&self) -> &[Vec<Q>] {
        &self.k_basis
    }

    pub fn hopf_algebra_basis(&self) -> &HopfAlgebraBasis {
        &self.h
    }

    /// `Σ c_η η` with each `c_η` given as a field element.
    pub fn element(&self, terms: &[(Permutation, FieldElement)]) -> Result<GroupAlgebraElement> {
        let mut coeffs = vec![self.p.field.zero(); self.n_elements.len()];
        for (eta, c) in terms {
            let i = *self
                .n_index
                .get(eta)
                .ok_or_else(|| Error::Invalid(format!("{} is not in N", eta)))?;
            coeffs[i] = self.p.field.add(&coeffs[i], c);
        }
        Ok(GroupAlgebraElement { coeffs })
    }

    pub fn unit(&self) -> GroupAlgebraElement {
        let mut coeffs = vec![self.p.field.zero(); self.n_elements.len()];
        coeffs[0] = self.p.field.one();
        GroupAlgebraElement { coeffs }
    }

    pub fn multiply(&self, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> GroupAlgebraElement {
        let f = &self.p.field;
        let mut coeffs = vec![f.zero(); self.n_elements.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = self.n_index[&self.n_elements[i].compose(&self.n_elements[j])];
                coeffs[k] = f.add(&coeffs[k], &f.mul(x, y));
            }
        }
        GroupAlgebraElement { coeffs }
    }

    /// Counit `Σ u_η`.
    pub fn counit(&self, h: &GroupAlgebraElement) -> FieldElement {
        h.coeffs
            .iter()
            .fold(self.p.field.zero(), |acc, c| self.p.field.add(&acc, c))
    }

    /// Basis of `K̃[N′]^G`: elements of `K̃[N′]` fixed by `G`.
    pub fn sub_hopf_algebra(&self, np: &PermGroup) -> Result<Vec<GroupAlgebraElement>> {
        if !np.is_subgroup_of(&self.s.n) {
            return Err(Error::NotSubgroup(format!("{:?} is not contained in N", np)));
        }
        self.fixed_points(np)
    }

    fn fixed_points(&self, np: &PermGroup) -> Result<Vec<GroupAlgebraElement>> {
        let d = self.d();
        let elems = np.elements();
        let local: HashMap<&Permutation, usize> =
            elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let cols = elems.len() * d;
        let mut rows = Vec::new();
        for g in self.e.group().generators() {
            let mg = &self.p.matrices[g];
            let lg = self.e.lambda(g);
            for (i, eta) in elems.iter().enumerate() {
                let target = local.get(&eta.conjugate_by(&lg)).copied();
                for r in 0..d {
                    let mut row = vec![Q::zero(); cols];
                    for c in 0..d {
                        row[i * d + c] = mg[r][c].clone();
                    }
                    if let Some(t) = target {
                        row[t * d + r] -= Q::one();
                    }
                    rows.push(row);
                }
            }
        }
        let kernel = if rows.is_empty() {
            linalg::identity(cols)
        } else {
            linalg::kernel(&rows, cols)
        };
        Ok(linalg::row_space(&kernel)
            .into_iter()
            .map(|v| {
                let mut full = vec![Q::zero(); self.n_elements.len() * d];
                for (i, eta) in elems.iter().enumerate() {
                    let k = self.n_index[eta];
                    full[k * d..(k + 1) * d].clone_from_slice(&v[i * d..(i + 1) * d]);
                }
                GroupAlgebraElement::from_vector(&full, d)
            })
            .collect())
    }

    /// `μ(h)(x)` for `x ∈ K`, as an element of `K̃`.
    pub fn act(&self, h: &GroupAlgebraElement, x: &FieldElement) -> FieldElement {
        let f = &self.p.field;
        let mut out = f.zero();
        for (u, m) in h.coeffs.iter().zip(&self.eval) {
            if u.is_zero() {
                continue;
            }
            let y = FieldElement {
                coeffs: linalg::mat_vec(m, &x.coeffs),
            };
            out = f.add(&out, &f.mul(u, &y));
        }
        out
    }

    /// Coordinates of `x` on the basis of `K`.
    pub fn k_coordinates(&self, x: &FieldElement) -> Option<Vec<Q>> {
        linalg::echelon_coordinates(&self.k_basis, &self.k_pivots, &x.coeffs)
    }

    pub fn k_element(&self, coords: &[Q]) -> FieldElement {
        let mut v = vec![Q::zero(); self.d()];
        for (c, row) in coords.iter().zip(&self.k_basis) {
            for (x, y) in v.iter_mut().zip(row) {
                *x += c * y;
            }
        }
        FieldElement { coeffs: v }
    }

    fn operator_on_k(&self, h: &GroupAlgebraElement) -> Result<Vec<Vec<Q>>> {
        let cols: Vec<Vec<Q>> = self
            .k_basis
            .iter()
            .map(|b| {
                let y = self.act(h, &FieldElement { coeffs: b.clone() });
                self.k_coordinates(&y)
                    .ok_or_else(|| Error::Invalid("action does not preserve K".into()))
            })
            .collect::<Result<_>>()?;
        Ok(transpose(&cols))
    }

    /// Matrix of `μ(h)` on the basis of `K` (columns are images of basis
    /// vectors). Fails unless `h ∈ H`.
    pub fn hopf_action_matrix(&self, h: &GroupAlgebraElement) -> Result<Vec<Vec<Q>>> {
        if !linalg::row_space_contains(&self.h.rows(), &[h.to_vector()]) {
            return Err(Error::Invalid("element is not in H".into()));
        }
        self.operator_on_k(h)
    }

    /// Reduced echelon basis (inside `K̃`) of `{x ∈ K : μ(h)x = ε(h)x}` for
    /// all `h` in the given span.
    pub fn fixed_field_of_sub_hopf(&self, hp: &[GroupAlgebraElement]) -> Result<Vec<Vec<Q>>> {
        let dk = self.k_basis.len();
        let mut rows = Vec::new();
        for h in hp {
            let eps = self.counit(h);
            if eps.coeffs[1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::Invalid("counit of a sub-Hopf element is not rational".into()));
            }
            let mut a = self.hopf_action_matrix(h)?;
            for (i, row) in a.iter_mut().enumerate() {
                row[i] -= &eps.coeffs[0];
            }
            rows.extend(a);
        }
        let kernel = if rows.is_empty() {
            linalg::identity(dk)
        } else {
            linalg::kernel(&rows, dk)
        };
        let vectors: Vec<Vec<Q>> = kernel.iter().map(|c| self.k_element(c).coeffs).collect();
        Ok(linalg::row_space(&vectors))
    }

    /// Whether `K ⊗ H → End_k(K)` is bijective.
    pub fn verify_hg_isomorphism(&self) -> Result<bool> {
        self.verify_hg_isomorphism_with(&self.h.basis)
    }

    /// The same rank test for an arbitrary list standing in for a basis of
    /// `H`.
    pub fn verify_hg_isomorphism_with(&self, basis: &[GroupAlgebraElement]) -> Result<bool> {
        let n = self.k_basis.len();
        let mult: Vec<Vec<Vec<Q>>> = self
            .k_basis
            .iter()
            .map(|x| {
                let x = FieldElement { coeffs: x.clone() };
                let cols: Vec<Vec<Q>> = self
                    .k_basis
                    .iter()
                    .map(|b| {
                        let y = self.p.field.mul(&x, &FieldElement { coeffs: b.clone() });
                        self.k_coordinates(&y).expect("K is a field")
                    })
                    .collect();
                transpose(&cols)
            })
            .collect();
        let mut rows = Vec::with_capacity(n * basis.len());
        for h in basis {
            let a = self.operator_on_k(h)?;
            for l in &mult {
                rows.push(linalg::mat_mul(l, &a).concat());
            }
        }
        Ok(linalg::rank(&rows) == n * n)
    }

    /// Whether the `K̃`-span of `H` is all of `K̃[N]`.
    pub fn descent_consistent(&self) -> bool {
        let f = &self.p.field;
        let theta = f.generator();
        let mut rows = Vec::new();
        for h in &self.h.basis {
            let mut power = f.one();
            for _ in 0..self.d() {
                let scaled = GroupAlgebraElement {
                    coeffs: h.coeffs.iter().map(|c| f.mul(&power, c)).collect(),
                };
                rows.push(scaled.to_vector());
                power = f.mul(&power, &theta);
            }
        }
        linalg::rank(&rows) == self.n_elements.len() * self.d()
    }

    /// Whether `μ(hh′) = μ(h)∘μ(h′)` on all pairs of basis elements.
    pub fn action_is_multiplicative(&self) -> Result<bool> {
        for a in &self.h.basis {
            let ma = self.operator_on_k(a)?;
            for b in &self.h.basis {
                let mb = self.operator_on_k(b)?;
                let mab = self.operator_on_k(&self.multiply(a, b))?;
                if mab != linalg::mat_mul(&ma, &mb) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For every stable `N′`, whether `K^{K̃[N′]^G}` equals the fixed field
    /// of the group the lattice module attaches to `N′`.
    pub fn lattice_agreement(&self) -> Result<Vec<(PermGroup, bool)>> {
        stable_subgroups(self.s, self.e)?
            .into_iter()
            .map(|np| {
                let by_action = self.fixed_field_of_sub_hopf(&self.sub_hopf_algebra(&np)?)?;
                let s = corresponding_subgroup(&np, self.e)?;
                let classical = fixed_subspace(self.p, &self.e.lambda_inverse_of(&s));
                Ok((np, linalg::same_row_space(&by_action, &classical)))
            })
            .collect()
    }

    /// Serializable summary: basis of `H`, action matrices and the lattice
    /// of sub-Hopf algebras with their fixed fields.
    pub fn report(&self) -> Result<DescentReport> {
        let labels: Vec<String> = self.n_elements.iter().map(|x| x.to_string()).collect();
        let show_elem = |h: &GroupAlgebraElement| -> BTreeMap<String, Vec<String>> {
            labels
                .iter()
                .zip(&h.coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| (l.clone(), strings(&c.coeffs)))
                .collect()
        };
        let basis = self.h.basis.iter().map(&show_elem).collect();
        let action_matrices = self
            .h
            .basis
            .iter()
            .map(|h| Ok(self.hopf_action_matrix(h)?.iter().map(|r| strings(r)).collect()))
            .collect::<Result<_>>()?;
        let stable: HashSet<PermGroup> = stable_subgroups(self.s, self.e)?.into_iter().collect();
        let mut sub_hopf = Vec::new();
        for np in self.s.n.all_subgroups()? {
            let sub = self.sub_hopf_algebra(&np)?;
            let fixed = self.fixed_field_of_sub_hopf(&sub)?;
            sub_hopf.push(SubHopfEntry {
                subgroup: np.generators().iter().map(|x| x.to_string()).collect(),
                order: np.order(),
                stable: stable.contains(&np),
                dimension: sub.len(),
                basis: sub.iter().map(&show_elem).collect(),
                fixed_field: fixed.iter().map(|r| strings(r)).collect(),
            });
        }
        Ok(DescentReport {
            field: self.p.name.clone(),
            structure_type: self.s.type_name.clone(),
            structure: self.s.generator_strings(),
            convention: self.convention,
            convention_formula: self.convention.formula().to_string(),
            n_elements: labels,
            k_basis: self.k_basis.iter().map(|r| strings(r)).collect(),
            hopf_basis: basis,
            action_matrices,
            sub_hopf,
            hg_isomorphism: self.verify_hg_isomorphism()?,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SubHopfEntry {
    pub subgroup: Vec<String>,
    pub order: usize,
    pub stable: bool,
    pub dimension: usize,
    pub basis: Vec<BTreeMap<String, Vec<String>>>,
    pub fixed_field: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DescentReport {
    pub field: Option<String>,
    pub structure_type: String,
    pub structure: Vec<String>,
    pub convention: ActionConvention,
    pub convention_formula: String,
    pub n_elements: Vec<String>,
    pub k_basis: Vec<Vec<String>>,
    pub hopf_basis: Vec<BTreeMap<String, Vec<String>>>,
    pub action_matrices: Vec<Vec<Vec<String>>>,
    pub sub_hopf: Vec<SubHopfEntry>,
    pub hg_isomorphism: bool,
}

fn strings(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn transpose(cols: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let rows = cols.first().map_or(0, Vec::len);
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}
