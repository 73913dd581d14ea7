//! Finite permutation groups at desk scale.
//!
//! A [`PermGroup`] is materialized completely: its elements are numbered in breadth-first
//! order from the identity (index 0), and all element-level work goes through a
//! multiplication table of indices. [`Subgroup`]s are sorted index sets into an ambient group.

mod families;
mod parse;
mod perm;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use families::{
    alternating, alternating_presentation, cyclic, cyclic_presentation, dihedral, dihedral_presentation,
    direct_product, klein_four, klein_four_presentation, quaternion8, quaternion8_presentation, sl2_3,
    sl2_3_presentation, symmetric, symmetric_presentation, trivial_group, trivial_presentation, Presentation,
};
pub use parse::parse_group_file;
pub(crate) use perm::lcm;
pub use perm::Perm;

pub const DEFAULT_ORDER_GUARD: usize = 360;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("images do not form a permutation")]
    NotAPermutation,
    #[error("generators act on different numbers of points")]
    DegreeMismatch,
    #[error("group order exceeds the guard of {limit}")]
    GuardExceeded { limit: usize },
    #[error("arguments live in different ambient groups")]
    AmbientMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

struct ClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: Vec<u32>,
    inverses: Vec<usize>,
    orders: Vec<u32>,
    // (parent, generator): element = parent * generator
    tree: Vec<(usize, usize)>,
    classes: OnceLock<ClassPartition>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// Closes `generators` under multiplication. Fails once more than `guard` elements appear.
    pub fn materialize(degree: usize, generators: Vec<Perm>, guard: usize) -> Result<Arc<Self>, GroupError> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut tree = vec![(0usize, usize::MAX)];
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); generators.len()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, g) in generators.iter().enumerate() {
                let y = elements[x].compose(g);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= guard {
                            return Err(GroupError::GuardExceeded { limit: guard });
                        }
                        let j = elements.len();
                        index.insert(y.clone(), j);
                        elements.push(y);
                        tree.push((x, gi));
                        queue.push_back(j);
                        j
                    }
                };
                // BFS visits x in index order, so this stays aligned.
                debug_assert_eq!(right[gi].len(), x);
                right[gi].push(j as u32);
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
            for j in 1..n {
                let (parent, gi) = tree[j];
                table[i * n + j] = right[gi][table[i * n + parent] as usize];
            }
        }
        let mut inverses = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inverses[i] = j;
                    break;
                }
            }
        }
        let orders = (0..n)
            .map(|i| {
                let mut x = i;
                let mut k = 1;
                while x != 0 {
                    x = table[x * n + i] as usize;
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Arc::new(PermGroup {
            degree,
            generators,
            elements,
            index,
            table,
            inverses,
            orders,
            tree,
            classes: OnceLock::new(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverses[g], x), g)
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.orders[a] as u64;
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    /// Generator indices `i_1, .., i_k` with `element(a) = gen_{i_1} * .. * gen_{i_k}`.
    pub fn word(&self, a: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut x = a;
        while x != 0 {
            let (parent, gi) = self.tree[x];
            w.push(gi);
            x = parent;
        }
        w.reverse();
        w
    }

    /// `(parent, generator)` with `element(a) = element(parent) * gen_generator`, for `a != 0`.
    pub fn tree_parent(&self, a: usize) -> Option<(usize, usize)> {
        (a != 0).then(|| self.tree[a])
    }

    /// Index of the group generator `gen_i` (generators may repeat or be trivial).
    pub fn generator_index(&self, i: usize) -> usize {
        self.index[&self.generators[i]]
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<usize> = (0..self.generators.len()).map(|i| self.generator_index(i)).collect();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| lcm(acc, o as u64))
    }

    /// `exp(G)` with its `p`-part removed.
    pub fn exp_p_prime(&self, p: u32) -> u64 {
        let mut t = self.exponent();
        while t.is_multiple_of(p as u64) {
            t /= p as u64;
        }
        t
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(0);
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen.put(y) {
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    fn partition(&self) -> &ClassPartition {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gens: Vec<usize> = (0..self.generators.len()).map(|i| self.generator_index(i)).collect();
            let mut class_of = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = raw.len();
                let mut members = vec![start];
                class_of[start] = id;
                let mut k = 0;
                while k < members.len() {
                    let x = members[k];
                    for &g in &gens {
                        let y = self.conj(x, g);
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            members.push(y);
                        }
                    }
                    k += 1;
                }
                raw.push(members);
            }
            for members in raw.iter_mut() {
                members.sort_by(|&a, &b| self.elements[a].cmp(&self.elements[b]));
            }
            raw.sort_by(|a, b| {
                (self.orders[a[0]], a.len(), &self.elements[a[0]]).cmp(&(
                    self.orders[b[0]],
                    b.len(),
                    &self.elements[b[0]],
                ))
            });
            for (id, members) in raw.iter().enumerate() {
                for &x in members {
                    class_of[x] = id;
                }
            }
            for members in raw.iter_mut() {
                members.sort_unstable();
            }
            ClassPartition { classes: raw, class_of }
        })
    }

    pub fn class_count(&self) -> usize {
        self.partition().classes.len()
    }

    /// Class index of an element, in the order of [`Self::conjugacy_classes`].
    pub fn class_of(&self, a: usize) -> usize {
        self.partition().class_of[a]
    }

    /// Members of class `c`, sorted by index.
    pub fn class_members(&self, c: usize) -> &[usize] {
        &self.partition().classes[c]
    }

    /// The lexicographically least member of class `c`.
    pub fn class_representative(&self, c: usize) -> usize {
        *self
            .class_members(c)
            .iter()
            .min_by(|&&a, &&b| self.elements[a].cmp(&self.elements[b]))
            .unwrap()
    }

    pub fn conjugacy_classes(&self, p: u32) -> Vec<ConjClass> {
        let nu_g = p_valuation(self.order() as u64, p);
        (0..self.class_count())
            .map(|c| {
                let members = self.class_members(c).to_vec();
                let size = members.len();
                let representative = self.class_representative(c);
                ConjClass {
                    representative,
                    element_order: self.orders[representative],
                    p_defect: nu_g - p_valuation(size as u64, p),
                    size,
                    members,
                }
            })
            .collect()
    }

    /// Classes of elements of order prime to `p`, as class indices.
    pub fn p_regular_classes(&self, p: u32) -> Vec<usize> {
        (0..self.class_count())
            .filter(|&c| !self.orders[self.class_members(c)[0]].is_multiple_of(p))
            .collect()
    }

    /// The permutation `C -> C^(p^m)` of the `p`-regular classes, given as positions in
    /// [`Self::p_regular_classes`].
    pub fn p_power_class_map(&self, p: u32, m: u32) -> Vec<usize> {
        let regular = self.p_regular_classes(p);
        let pos: HashMap<usize, usize> = regular.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        regular
            .iter()
            .map(|&c| {
                let g = self.class_members(c)[0];
                let o = self.orders[g] as u64;
                let e = crate::gf::mod_pow(p as u64, m as u64, o);
                pos[&self.class_of(self.pow(g, e))]
            })
            .collect()
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_sorted(self, (0..self.order()).collect())
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_sorted(self, vec![0])
    }

    pub fn subgroup_generated(self: &Arc<Self>, gens: &[usize]) -> Subgroup {
        Subgroup::from_sorted(self, self.closure(gens))
    }

    /// Checks closure before wrapping an element set.
    pub fn subgroup_from_elements(self: &Arc<Self>, mut elements: Vec<usize>) -> Result<Subgroup, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        let n = self.order();
        if elements.first() != Some(&0) || elements.iter().any(|&x| x >= n) || !n.is_multiple_of(elements.len()) {
            return Err(GroupError::NotASubgroup);
        }
        let mut mask = FixedBitSet::with_capacity(n);
        for &x in &elements {
            mask.insert(x);
        }
        for &a in &elements {
            for &b in &elements {
                if !mask.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Subgroup::from_sorted(self, elements))
    }

    pub fn centralizer_of(self: &Arc<Self>, a: usize) -> Subgroup {
        let elems = (0..self.order())
            .filter(|&g| self.mul(a, g) == self.mul(g, a))
            .collect();
        Subgroup::from_sorted(self, elems)
    }

    pub fn centralizer(self: &Arc<Self>, g: &Perm) -> Result<Subgroup, GroupError> {
        let a = self.index_of(g).ok_or(GroupError::AmbientMismatch)?;
        Ok(self.centralizer_of(a))
    }

    pub fn normalizer(self: &Arc<Self>, h: &Subgroup) -> Result<Subgroup, GroupError> {
        if !Arc::ptr_eq(self, &h.ambient) {
            return Err(GroupError::AmbientMismatch);
        }
        Ok(h.normalizer())
    }

    /// A Sylow `p`-subgroup, grown one normalizing `p`-element at a time.
    pub fn sylow(self: &Arc<Self>, p: u32) -> Subgroup {
        let target = p_part(self.order() as u64, p) as usize;
        let mut h = self.trivial_subgroup();
        while h.order() < target {
            let norm = h.normalizer();
            let x = norm
                .elements()
                .iter()
                .copied()
                .find(|&x| !h.contains(x) && h.contains(self.pow(x, p as u64)))
                .expect("a p-subgroup below Sylow order has a p-element in N(H)/H");
            let mut gens = h.generators();
            gens.push(x);
            h = self.subgroup_generated(&gens);
        }
        h
    }
}

pub(crate) fn p_valuation(mut n: u64, p: u32) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p as u64) {
        n /= p as u64;
        v += 1;
    }
    v
}

pub(crate) fn p_part(n: u64, p: u32) -> u64 {
    (p as u64).pow(p_valuation(n, p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Index of the lexicographically least member.
    pub representative: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub element_order: u32,
    /// `v_p(|G|) - v_p(size)`, i.e. `v_p(|C_G(g)|)`.
    pub p_defect: u32,
}

impl ConjClass {
    pub fn is_p_regular(&self, p: u32) -> bool {
        !self.element_order.is_multiple_of(p)
    }
}

/// A subgroup of a materialized group, held as a sorted set of element indices.
#[derive(Clone)]
pub struct Subgroup {
    ambient: Arc<PermGroup>,
    elements: Vec<usize>,
    mask: FixedBitSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), self.elements)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_sorted(ambient: &Arc<PermGroup>, elements: Vec<usize>) -> Self {
        let mut mask = FixedBitSet::with_capacity(ambient.order());
        for &x in &elements {
            mask.insert(x);
        }
        Subgroup {
            ambient: ambient.clone(),
            elements,
            mask,
        }
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.mask.contains(a)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn same_ambient(&self, other: &Subgroup) -> Result<(), GroupError> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(GroupError::AmbientMismatch)
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let g = &self.ambient;
        let mut gens = Vec::new();
        let mut span = FixedBitSet::with_capacity(g.order());
        span.insert(0);
        for &x in &self.elements {
            if span.contains(x) {
                continue;
            }
            gens.push(x);
            for y in g.closure(&gens) {
                span.insert(y);
            }
        }
        gens
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let mut elems: Vec<usize> = self.elements.iter().map(|&x| self.ambient.conj(x, g)).collect();
        elems.sort_unstable();
        Subgroup::from_sorted(&self.ambient, elems)
    }

    /// Whether `g` normalizes this subgroup.
    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.generators()
            .iter()
            .all(|&x| self.contains(self.ambient.conj(x, g)))
    }

    pub fn normalizer(&self) -> Subgroup {
        let gens = self.generators();
        let g = &self.ambient;
        let elems = (0..g.order())
            .filter(|&a| gens.iter().all(|&x| self.contains(g.conj(x, a))))
            .collect();
        Subgroup::from_sorted(g, elems)
    }

    /// Elements of the ambient group commuting with every element of this subgroup.
    pub fn centralizer(&self) -> Subgroup {
        let gens = self.generators();
        let g = &self.ambient;
        let elems = (0..g.order())
            .filter(|&a| gens.iter().all(|&x| g.mul(x, a) == g.mul(a, x)))
            .collect();
        Subgroup::from_sorted(g, elems)
    }

    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        let gens = self.generators();
        self.is_subgroup_of(other)
            && other
                .generators()
                .iter()
                .all(|&a| gens.iter().all(|&x| self.contains(self.ambient.conj(x, a))))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elems = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_sorted(&self.ambient, elems)
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        p_part(self.order() as u64, p) == self.order() as u64
    }

    /// The subgroup as a group in its own right, plus the index map into the ambient group.
    pub fn to_group(&self) -> (Arc<PermGroup>, Vec<usize>) {
        let g = &self.ambient;
        let gens: Vec<Perm> = self.generators().iter().map(|&x| g.element(x).clone()).collect();
        let h = PermGroup::materialize(g.degree(), gens, usize::MAX).expect("no guard");
        let embed = h.elements().iter().map(|x| g.index_of(x).unwrap()).collect();
        (h, embed)
    }
}

/// `N/P` realized as the permutation action of `N` on the cosets of `P`.
pub struct Quotient {
    group: Arc<PermGroup>,
    // ambient index -> quotient index (u32::MAX outside N)
    projection: Vec<u32>,
}

impl Quotient {
    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    /// Image of an ambient element of `N`.
    pub fn project(&self, a: usize) -> Option<usize> {
        match self.projection.get(a) {
            Some(&x) if x != u32::MAX => Some(x as usize),
            _ => None,
        }
    }
}

pub fn quotient_group(n: &Subgroup, p: &Subgroup) -> Result<Quotient, GroupError> {
    n.same_ambient(p)?;
    if !p.is_normal_in(n) {
        return Err(GroupError::NotNormal);
    }
    let g = n.ambient();
    // Coset ids by first appearance in index order; cosets are P x (= x P).
    let mut coset_of: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    for &x in n.elements() {
        if coset_of.contains_key(&x) {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &y in p.elements() {
            coset_of.insert(g.mul(y, x), id);
        }
    }
    let k = reps.len();
    let action = |a: usize| -> Perm {
        let images = reps.iter().map(|&r| coset_of[&g.mul(r, a)]).collect();
        Perm::from_images(images).expect("coset action is a permutation")
    };
    let gens: Vec<Perm> = n.generators().iter().map(|&a| action(a)).collect();
    let q = PermGroup::materialize(k, gens, usize::MAX)?;
    let mut projection = vec![u32::MAX; g.order()];
    for &a in n.elements() {
        projection[a] = q.index_of(&action(a)).expect("image lies in the quotient") as u32;
    }
    Ok(Quotient { group: q, projection })
}
