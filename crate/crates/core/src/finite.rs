//! Finite groups on index sets `0..size` with `0` the identity, and the
//! generator-image backtracking shared by automorphism, isomorphism and
//! embedding searches.

use std::collections::HashMap;

use crate::perm::Permutation;

pub trait IndexedGroup {
    fn size(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    fn order_of(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// Above this size a full multiplication table is not materialized.
pub const CAYLEY_LIMIT: usize = 2048;

/// A group of permutations addressed by position in a sorted element list.
pub struct GroupTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
}

impl GroupTable {
    /// `elements` must be sorted with the identity first and closed under
    /// composition.
    pub fn new(elements: &[Permutation]) -> Self {
        let n = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let table = (n <= CAYLEY_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in elements {
                for b in elements {
                    t.push(index[&a.compose(b)]);
                }
            }
            t
        });
        GroupTable {
            elements: elements.to_vec(),
            index,
            table,
            inverse,
        }
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }
}

impl IndexedGroup for GroupTable {
    fn size(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])] as usize,
        }
    }

    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }
}

/// Elements of `⟨gens⟩` by breadth-first closure under left multiplication.
pub fn closure<G: IndexedGroup + ?Sized>(g: &G, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.size()];
    seen[0] = true;
    let mut out = vec![0];
    let mut i = 0;
    while i < out.len() {
        let h = out[i];
        i += 1;
        for &s in gens {
            let t = g.mul(s, h);
            if !seen[t] {
                seen[t] = true;
                out.push(t);
            }
        }
    }
    out
}

/// A short generating set chosen greedily: at each step the candidate (among
/// a bounded number of high-order elements outside the current subgroup)
/// that enlarges the subgroup most.
pub fn small_generating_set<G: IndexedGroup + ?Sized>(g: &G) -> Vec<usize> {
    let n = g.size();
    let orders: Vec<usize> = (0..n).map(|a| g.order_of(a)).collect();
    let mut by_order: Vec<usize> = (1..n).collect();
    by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));

    let mut gens: Vec<usize> = Vec::new();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut size = 1;
    while size < n {
        let mut best: Option<(usize, usize)> = None;
        for &x in by_order.iter().filter(|&&x| !inside[x]).take(48) {
            let mut trial = gens.clone();
            trial.push(x);
            let s = closure(g, &trial).len();
            if best.map_or(true, |(bs, _)| s > bs) {
                best = Some((s, x));
            }
            if s == n {
                break;
            }
        }
        let (_, x) = best.expect("element outside a proper subgroup");
        gens.push(x);
        let elems = closure(g, &gens);
        size = elems.len();
        for e in elems {
            inside[e] = true;
        }
    }
    gens
}

#[derive(Clone, Copy)]
struct Edge {
    target: u32,
    gen: u32,
    from: u32,
}

/// A source group prepared for homomorphism search: for each prefix
/// `⟨s_0..s_k⟩` of the generating list, the Cayley-graph edges that become
/// checkable once `s_k` has an image.
pub struct SourceGroup {
    size: usize,
    gens: Vec<usize>,
    gen_orders: Vec<usize>,
    levels: Vec<Vec<Edge>>,
}

impl SourceGroup {
    pub fn new<G: IndexedGroup + ?Sized>(g: &G, gens: Vec<usize>) -> Self {
        let n = g.size();
        let mut member = vec![false; n];
        member[0] = true;
        let mut queue = vec![0usize];
        let mut levels = Vec::with_capacity(gens.len());
        for k in 0..gens.len() {
            let old_len = queue.len();
            let mut edges = Vec::new();
            let mut i = 0;
            while i < queue.len() {
                let h = queue[i];
                let is_old = i < old_len;
                i += 1;
                for (s, &gs) in gens.iter().enumerate().take(k + 1) {
                    if is_old && s < k {
                        continue;
                    }
                    let t = g.mul(gs, h);
                    if !member[t] {
                        member[t] = true;
                        queue.push(t);
                    }
                    edges.push(Edge {
                        target: t as u32,
                        gen: s as u32,
                        from: h as u32,
                    });
                }
            }
            levels.push(edges);
        }
        assert_eq!(queue.len(), n, "generators do not generate the group");
        let gen_orders = gens.iter().map(|&s| g.order_of(s)).collect();
        SourceGroup {
            size: n,
            gens,
            gen_orders,
            levels,
        }
    }

    pub fn generating<G: IndexedGroup + ?Sized>(g: &G) -> Self {
        let gens = small_generating_set(g);
        SourceGroup::new(g, gens)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn gen_orders(&self) -> &[usize] {
        &self.gen_orders
    }
}

const UNSET: usize = usize::MAX;

/// Enumerates homomorphisms from `src` into `target` whose generator images
/// are drawn from `candidates[i]` for generator `i`.
///
/// `elem_ok(g, image)` is consulted the first time each source element gets
/// an image; returning false prunes the branch. `visit` receives the full
/// element map (indexed by source element) and returns false to stop.
pub fn for_each_hom<T, F, V>(
    src: &SourceGroup,
    target: &T,
    candidates: &[Vec<usize>],
    elem_ok: F,
    mut visit: V,
) where
    T: IndexedGroup + ?Sized,
    F: Fn(usize, usize) -> bool,
    V: FnMut(&[usize]) -> bool,
{
    assert_eq!(candidates.len(), src.gens.len());
    let mut img = vec![UNSET; src.size];
    img[0] = 0;
    if !elem_ok(0, 0) {
        return;
    }
    let mut gen_img = vec![0usize; src.gens.len()];
    if src.gens.is_empty() {
        visit(&img);
        return;
    }
    recurse(src, target, candidates, &elem_ok, &mut visit, 0, &mut img, &mut gen_img);
}

#[allow(clippy::too_many_arguments)]
fn recurse<T, F, V>(
    src: &SourceGroup,
    target: &T,
    candidates: &[Vec<usize>],
    elem_ok: &F,
    visit: &mut V,
    k: usize,
    img: &mut Vec<usize>,
    gen_img: &mut Vec<usize>,
) -> bool
where
    T: IndexedGroup + ?Sized,
    F: Fn(usize, usize) -> bool,
    V: FnMut(&[usize]) -> bool,
{
    let mut assigned: Vec<usize> = Vec::new();
    for &c in &candidates[k] {
        gen_img[k] = c;
        let mut ok = true;
        for e in &src.levels[k] {
            let val = target.mul(gen_img[e.gen as usize], img[e.from as usize]);
            let t = e.target as usize;
            if img[t] == UNSET {
                if !elem_ok(t, val) {
                    ok = false;
                    break;
                }
                img[t] = val;
                assigned.push(t);
            } else if img[t] != val {
                ok = false;
                break;
            }
        }
        if ok {
            let keep_going = if k + 1 == src.gens.len() {
                visit(img)
            } else {
                recurse(src, target, candidates, elem_ok, visit, k + 1, img, gen_img)
            };
            if !keep_going {
                for &t in &assigned {
                    img[t] = UNSET;
                }
                return false;
            }
        }
        for t in assigned.drain(..) {
            img[t] = UNSET;
        }
    }
    true
}

/// Elements of `target` grouped by order.
pub fn elements_by_order<T: IndexedGroup + ?Sized>(target: &T) -> HashMap<usize, Vec<usize>> {
    let mut out: HashMap<usize, Vec<usize>> = HashMap::new();
    for a in 0..target.size() {
        out.entry(target.order_of(a)).or_default().push(a);
    }
    out
}

/// All isomorphisms (or the first one when `first_only`) from `src` onto
/// `target`, as element maps.
pub fn isomorphisms<T: IndexedGroup + ?Sized>(
    src_group: &dyn IndexedGroup,
    src: &SourceGroup,
    target: &T,
    first_only: bool,
) -> Vec<Vec<usize>> {
    if src.size != target.size() {
        return Vec::new();
    }
    let by_order = elements_by_order(target);
    let candidates: Vec<Vec<usize>> = src
        .gens
        .iter()
        .map(|&s| {
            by_order
                .get(&src_group.order_of(s))
                .cloned()
                .unwrap_or_default()
        })
        .collect();
    let mut out = Vec::new();
    let mut hit = vec![false; target.size()];
    for_each_hom(
        src,
        target,
        &candidates,
        |g, x| (g == 0) == (x == 0),
        |m| {
            // trivial kernel plus equal sizes gives a bijection; checked anyway
            hit.iter_mut().for_each(|h| *h = false);
            let bijective = m.iter().all(|&x| !std::mem::replace(&mut hit[x], true));
            if bijective {
                out.push(m.to_vec());
            }
            !(first_only && !out.is_empty())
        },
    );
    out
}
