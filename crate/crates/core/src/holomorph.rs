//! `Aut(N)` and `Hol(N) = λ(N) ⋊ Aut(N)` acting on the element list of `N`.
//!
//! Points are positions in `N`'s sorted element list, so point 0 (printed
//! as 1) is the identity `e_N`.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{isomorphisms, GroupTable, IndexedGroup, SourceGroup, CAYLEY_LIMIT};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 64;

/// Automorphisms of a group, each a permutation of its element indices.
pub struct AutData {
    pub n_table: Vec<u32>,
    pub n_inverse: Vec<u32>,
    pub perms: Vec<Vec<u16>>,
    aut_table: Option<Vec<u32>>,
    aut_index: HashMap<Vec<u16>, u32>,
    aut_inverse: Vec<u32>,
}

impl AutData {
    fn new(table: &GroupTable, mut perms: Vec<Vec<u16>>) -> Self {
        let n = table.size();
        perms.sort();
        let aut_index: HashMap<Vec<u16>, u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let compose = |a: &[u16], b: &[u16]| -> Vec<u16> { b.iter().map(|&x| a[x as usize]).collect() };
        let aut_inverse = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u16; n];
                for (i, &x) in p.iter().enumerate() {
                    inv[x as usize] = i as u16;
                }
                aut_index[&inv]
            })
            .collect();
        let aut_table = (perms.len() <= CAYLEY_LIMIT).then(|| {
            let mut t = Vec::with_capacity(perms.len() * perms.len());
            for a in &perms {
                for b in &perms {
                    t.push(aut_index[&compose(a, b)]);
                }
            }
            t
        });
        let mut n_table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                n_table.push(table.mul(a, b) as u32);
            }
        }
        AutData {
            n_table,
            n_inverse: (0..n).map(|a| table.inv(a) as u32).collect(),
            perms,
            aut_table,
            aut_index,
            aut_inverse,
        }
    }

    pub fn n(&self) -> usize {
        self.n_inverse.len()
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    #[inline]
    fn nmul(&self, a: usize, b: usize) -> usize {
        self.n_table[a * self.n() + b] as usize
    }

    #[inline]
    fn amul(&self, a: usize, b: usize) -> usize {
        match &self.aut_table {
            Some(t) => t[a * self.perms.len() + b] as usize,
            None => {
                let c: Vec<u16> = self.perms[b]
                    .iter()
                    .map(|&x| self.perms[a][x as usize])
                    .collect();
                self.aut_index[&c] as usize
            }
        }
    }
}

fn memo() -> &'static Mutex<HashMap<Vec<u32>, Arc<OnceLock<Arc<AutData>>>>> {
    static CELL: OnceLock<Mutex<HashMap<Vec<u32>, Arc<OnceLock<Arc<AutData>>>>>> = OnceLock::new();
    CELL.get_or_init(Default::default)
}

fn cayley(table: &GroupTable) -> Vec<u32> {
    let n = table.size();
    let mut key = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            key.push(table.mul(a, b) as u32);
        }
    }
    key
}

/// Automorphism data for `n`, memoized by multiplication table. Concurrent
/// callers asking for the same table wait on a single computation.
pub fn automorphism_data(n: &PermGroup) -> Result<Arc<AutData>> {
    automorphism_data_bounded(n, DEFAULT_AUTOMORPHISM_BOUND)
}

pub fn automorphism_data_bounded(n: &PermGroup, bound: usize) -> Result<Arc<AutData>> {
    if n.order() > bound {
        return Err(Error::BoundExceeded {
            what: "group order for automorphism search",
            value: n.order(),
            limit: bound,
        });
    }
    let table = n.table();
    let key = cayley(table);
    let cell = {
        let mut map = memo().lock().unwrap();
        map.entry(key.clone()).or_default().clone()
    };
    Ok(cell
        .get_or_init(|| {
            let perms = load_disk(&key).unwrap_or_else(|| {
                let perms = search_automorphisms(table);
                store_disk(&key, &perms);
                perms
            });
            Arc::new(AutData::new(table, perms))
        })
        .clone())
}

fn search_automorphisms(table: &GroupTable) -> Vec<Vec<u16>> {
    let src = SourceGroup::generating(table);
    isomorphisms(table, &src, table, false)
        .into_iter()
        .map(|m| m.into_iter().map(|x| x as u16).collect())
        .collect()
}

#[derive(Serialize, Deserialize)]
struct DiskEntry {
    table: Vec<u32>,
    automorphisms: Vec<Vec<u16>>,
}

fn disk_path(key: &[u32]) -> Option<PathBuf> {
    let dir = std::env::var_os("HGKIT_CACHE_DIR")?;
    // FNV-1a, stable across builds
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &x in key {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    Some(PathBuf::from(dir).join(format!("aut-{:016x}.json", h)))
}

fn load_disk(key: &[u32]) -> Option<Vec<Vec<u16>>> {
    let path = disk_path(key)?;
    let text = std::fs::read_to_string(path).ok()?;
    let entry: DiskEntry = serde_json::from_str(&text).ok()?;
    if entry.table != key {
        return None;
    }
    let n = (key.len() as f64).sqrt() as usize;
    let preserves = |p: &Vec<u16>| {
        p.len() == n
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    p[key[a * n + b] as usize] as u32
                        == key[p[a] as usize * n + p[b] as usize]
                })
            })
    };
    entry.automorphisms.iter().all(preserves).then_some(entry.automorphisms)
}

fn store_disk(key: &[u32], perms: &[Vec<u16>]) {
    let Some(path) = disk_path(key) else { return };
    let entry = DiskEntry {
        table: key.to_vec(),
        automorphisms: perms.to_vec(),
    };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    if let Ok(text) = serde_json::to_string(&entry) {
        let tmp = path.with_extension("tmp");
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(tmp, path);
        }
    }
}

/// `Aut(N)` as permutations of `N`'s sorted element list fixing point 0.
pub fn automorphism_group(n: &PermGroup) -> Result<PermGroup> {
    let data = automorphism_data(n)?;
    Ok(PermGroup::from_sorted_elements(
        n.order(),
        data.perms
            .iter()
            .map(|p| Permutation::from_images_unchecked(p.clone()))
            .collect(),
    ))
}

/// `Hol(N)` with elements indexed as `η·|Aut| + α`, acting by
/// `x ↦ η·α(x)`. Index 0 is the identity and indices below `|Aut|` form the
/// stabilizer of the identity point.
pub struct HolTable {
    aut: Arc<AutData>,
}

impl HolTable {
    pub fn new(aut: Arc<AutData>) -> Self {
        HolTable { aut }
    }

    pub fn aut(&self) -> &AutData {
        &self.aut
    }

    #[inline]
    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.aut.len(), x % self.aut.len())
    }

    #[inline]
    pub fn join(&self, eta: usize, alpha: usize) -> usize {
        eta * self.aut.len() + alpha
    }

    #[inline]
    pub fn in_stabilizer(&self, x: usize) -> bool {
        x < self.aut.len()
    }

    /// Image of point `p` (an element index of `N`).
    #[inline]
    pub fn apply(&self, x: usize, p: usize) -> usize {
        let (eta, alpha) = self.split(x);
        self.aut.nmul(eta, self.aut.perms[alpha][p] as usize)
    }

    pub fn to_perm(&self, x: usize) -> Permutation {
        let n = self.aut.n();
        Permutation::from_images_unchecked((0..n).map(|p| self.apply(x, p) as u16).collect())
    }

    /// Conjugation by the automorphism `beta`: `β (η, α) β⁻¹`.
    #[inline]
    pub fn conj_by_aut(&self, beta: usize, x: usize) -> usize {
        let (eta, alpha) = self.split(x);
        let a = &self.aut;
        let e2 = a.perms[beta][eta] as usize;
        let a2 = a.amul(a.amul(beta, alpha), a.aut_inverse[beta] as usize);
        self.join(e2, a2)
    }
}

impl IndexedGroup for HolTable {
    fn size(&self) -> usize {
        self.aut.n() * self.aut.len()
    }

    #[inline]
    fn mul(&self, x: usize, y: usize) -> usize {
        let (e1, a1) = self.split(x);
        let (e2, a2) = self.split(y);
        let a = &self.aut;
        self.join(a.nmul(e1, a.perms[a1][e2] as usize), a.amul(a1, a2))
    }

    fn inv(&self, x: usize) -> usize {
        let (eta, alpha) = self.split(x);
        let a = &self.aut;
        let ai = a.aut_inverse[alpha] as usize;
        self.join(a.perms[ai][a.n_inverse[eta] as usize] as usize, ai)
    }
}

pub struct HolomorphGroup {
    pub ambient: PermGroup,
    pub left_regular_n: PermGroup,
    pub automorphism_part: PermGroup,
    pub n_labels: Vec<Permutation>,
    pub table: HolTable,
}

impl HolomorphGroup {
    pub fn order(&self) -> usize {
        self.table.size()
    }
}

/// Left-regular representation `λ(N)` on `N`'s sorted element list.
pub fn left_regular(n: &PermGroup) -> PermGroup {
    let t = n.table();
    let gens = n
        .generators()
        .iter()
        .map(|g| {
            let a = t.index_of(g).unwrap();
            Permutation::from_images_unchecked((0..t.size()).map(|x| t.mul(a, x) as u16).collect())
        })
        .collect();
    PermGroup::new(n.order(), gens).expect("regular representation")
}

/// Right-regular representation `ρ(N)`: `x ↦ x·η⁻¹`.
pub fn right_regular(n: &PermGroup) -> PermGroup {
    let t = n.table();
    let gens = n
        .generators()
        .iter()
        .map(|g| {
            let a = t.inv(t.index_of(g).unwrap());
            Permutation::from_images_unchecked((0..t.size()).map(|x| t.mul(x, a) as u16).collect())
        })
        .collect();
    PermGroup::new(n.order(), gens).expect("regular representation")
}

pub fn holomorph(n: &PermGroup) -> Result<HolomorphGroup> {
    let data = automorphism_data(n)?;
    let aut = automorphism_group(n)?;
    let lam = left_regular(n);
    let mut gens: Vec<Permutation> = lam.generators().to_vec();
    gens.extend(aut.generators().iter().cloned());
    let degree = n.order();
    // the ambient element set is only enumerated on demand
    let ambient = PermGroup::new_lazy(degree, gens);
    Ok(HolomorphGroup {
        ambient,
        left_regular_n: lam,
        automorphism_part: aut,
        n_labels: n.elements().to_vec(),
        table: HolTable::new(data),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HolKind {
    Cyclic(u64),
    /// Dihedral of order `2n`.
    Dihedral(u64),
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `nφ(n)` for `C_n`, `2n²φ(n)` for the dihedral group of order `2n`.
pub fn holomorph_order_formula(kind: HolKind) -> Result<u64> {
    match kind {
        HolKind::Cyclic(n) if n >= 1 => Ok(n * euler_phi(n)),
        HolKind::Dihedral(n) if n >= 3 => Ok(2 * n * n * euler_phi(n)),
        _ => Err(Error::Invalid(format!("no holomorph formula for {:?}", kind))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupid::{are_isomorphic, identify};

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphism_group(&grp(6, &["(1,2,3,4,5,6)"])).unwrap().order(), 2);
        let c2cube = grp(6, &["(1,2)", "(3,4)", "(5,6)"]);
        assert_eq!(automorphism_group(&c2cube).unwrap().order(), 168);
        assert_eq!(automorphism_group(&grp(3, &["(1,2)", "(1,2,3)"])).unwrap().order(), 6);
    }

    #[test]
    fn holomorph_examples() {
        let c6 = holomorph(&grp(6, &["(1,2,3,4,5,6)"])).unwrap();
        assert_eq!(c6.ambient.order(), 12);
        assert_eq!(identify(&c6.ambient), "D_{2·6}");
        let s3 = holomorph(&grp(3, &["(1,2)", "(1,2,3)"])).unwrap();
        assert_eq!(s3.ambient.order(), 36);
        let s3xs3 = grp(6, &["(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"]);
        assert!(are_isomorphic(&s3.ambient, &s3xs3).unwrap().is_some());
        assert_eq!(identify(&s3.ambient), "F_{18}:2");
        let c2cube = holomorph(&grp(6, &["(1,2)", "(3,4)", "(5,6)"])).unwrap();
        assert_eq!(c2cube.ambient.order(), 1344);
        assert_eq!(c2cube.order(), 1344);
    }

    #[test]
    fn structured_table_agrees_with_permutations() {
        let h = holomorph(&grp(4, &["(1,2,3,4)", "(2,4)"])).unwrap();
        let t = &h.table;
        let perms: Vec<Permutation> = (0..t.size()).map(|x| t.to_perm(x)).collect();
        assert!(perms[0].is_identity());
        for x in 0..t.size() {
            assert!(h.ambient.contains(&perms[x]));
            assert_eq!(t.in_stabilizer(x), perms[x].fixes(0));
            assert!((&perms[x] * &perms[t.inv(x)]).is_identity());
            for y in 0..t.size() {
                assert_eq!(perms[t.mul(x, y)], &perms[x] * &perms[y]);
            }
        }
        assert_eq!(h.ambient.stabilizer(0), h.automorphism_part);
        assert!(h.left_regular_n.is_normal_in(&h.ambient));
        assert!(h.left_regular_n.is_regular(8));
    }

    #[test]
    fn formulas() {
        assert_eq!(holomorph_order_formula(HolKind::Cyclic(15)).unwrap(), 120);
        assert_eq!(holomorph_order_formula(HolKind::Cyclic(11)).unwrap(), 110);
        assert_eq!(holomorph_order_formula(HolKind::Dihedral(3)).unwrap(), 36);
        assert!(holomorph_order_formula(HolKind::Dihedral(2)).is_err());
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let key = vec![0, 1, 1, 0];
        std::env::set_var("HGKIT_CACHE_DIR", dir.path());
        store_disk(&key, &[vec![0, 1]]);
        assert_eq!(load_disk(&key), Some(vec![vec![0, 1]]));
        // a non-automorphism is rejected
        store_disk(&key, &[vec![1, 0]]);
        assert_eq!(load_disk(&key), None);
        std::env::remove_var("HGKIT_CACHE_DIR");
    }
}
