//! The poset of p-subgroups of a group and G-orbit representatives of chains in it.
//!
//! Subgroups are numbered in the order `(order, sorted element list)`, so index order is
//! canonical. A chain `1 = P_0 < .. < P_n` is stored by its term indices; the representative
//! of a G-orbit is the member whose reversed term list is lexicographically least, which
//! forces the top term to be the least member of its conjugacy class.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::group::{GroupError, PermGroup, Subgroup};

pub const DEFAULT_SUBGROUP_CAP: usize = 5000;
pub const DEFAULT_CHAIN_CAP: usize = 200_000;

pub struct PSubgroupPoset {
    group: Arc<PermGroup>,
    prime: u32,
    subgroups: Vec<Subgroup>,
    // conj[g * len + i] = index of g^-1 S_i g
    conj: Vec<u32>,
    // below[j] = indices i with S_i a proper subgroup of S_j
    below: Vec<FixedBitSet>,
    normalizers: Vec<Subgroup>,
    orbit_of: Vec<usize>,
    orbit_reps: Vec<usize>,
}

impl fmt::Debug for PSubgroupPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PSubgroupPoset")
            .field("prime", &self.prime)
            .field("subgroups", &self.subgroups.len())
            .field("orbit_reps", &self.orbit_reps)
            .finish()
    }
}

pub fn enumerate_p_subgroups(group: &Arc<PermGroup>, p: u32) -> Result<PSubgroupPoset, GroupError> {
    PSubgroupPoset::new(group, p, DEFAULT_SUBGROUP_CAP)
}

impl PSubgroupPoset {
    pub fn new(group: &Arc<PermGroup>, p: u32, cap: usize) -> Result<Self, GroupError> {
        let g = group;
        let sylow = g.sylow(p);
        // Subgroups of the Sylow subgroup by cyclic extension.
        let mut found: HashMap<Vec<usize>, ()> = HashMap::from([(vec![0], ())]);
        let mut frontier = vec![vec![0usize]];
        while let Some(h) = frontier.pop() {
            let hs = g.subgroup_from_elements(h.clone())?;
            let gens = hs.generators();
            for &x in sylow.elements() {
                if hs.contains(x) {
                    continue;
                }
                let mut ext = gens.clone();
                ext.push(x);
                let k = g.closure(&ext);
                if !found.contains_key(&k) {
                    if found.len() >= cap {
                        return Err(GroupError::GuardExceeded { limit: cap });
                    }
                    found.insert(k.clone(), ());
                    frontier.push(k);
                }
            }
        }
        // Close under conjugation.
        let mut all: HashMap<Vec<usize>, ()> = HashMap::new();
        for h in found.keys() {
            for a in 0..g.order() {
                let mut c: Vec<usize> = h.iter().map(|&x| g.conj(x, a)).collect();
                c.sort_unstable();
                if !all.contains_key(&c) {
                    if all.len() >= cap {
                        return Err(GroupError::GuardExceeded { limit: cap });
                    }
                    all.insert(c, ());
                }
            }
        }
        let mut lists: Vec<Vec<usize>> = all.into_keys().collect();
        lists.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let index: HashMap<&[usize], usize> = lists.iter().enumerate().map(|(i, l)| (l.as_slice(), i)).collect();
        let subgroups: Vec<Subgroup> = lists
            .iter()
            .map(|l| g.subgroup_from_elements(l.clone()))
            .collect::<Result<_, _>>()?;
        let len = subgroups.len();

        let image = |i: usize, a: usize| -> usize {
            let mut c: Vec<usize> = lists[i].iter().map(|&x| g.conj(x, a)).collect();
            c.sort_unstable();
            index[c.as_slice()]
        };
        let ngens = g.generators().len();
        let gen_tables: Vec<Vec<u32>> = (0..ngens)
            .map(|k| {
                let a = g.generator_index(k);
                (0..len).map(|i| image(i, a) as u32).collect()
            })
            .collect();
        let mut conj = vec![0u32; g.order() * len];
        for i in 0..len {
            conj[i] = i as u32;
        }
        for a in 1..g.order() {
            let w = g.word(a);
            let gi = *w.last().unwrap();
            // a = parent * gen_gi, and conjugation by a is conjugation by parent then by gen.
            let parent = {
                let inv_gen = g.inv(g.generator_index(gi));
                g.mul(a, inv_gen)
            };
            debug_assert!(parent < a);
            for i in 0..len {
                let via = conj[parent * len + i] as usize;
                conj[a * len + i] = gen_tables[gi][via];
            }
        }

        let mut below = vec![FixedBitSet::with_capacity(len); len];
        for j in 0..len {
            for i in 0..j {
                if subgroups[i].order() < subgroups[j].order()
                    && subgroups[j].order().is_multiple_of(subgroups[i].order())
                    && subgroups[i].is_subgroup_of(&subgroups[j])
                {
                    below[j].insert(i);
                }
            }
        }
        let normalizers: Vec<Subgroup> = (0..len)
            .map(|i| {
                let elems = (0..g.order()).filter(|&a| conj[a * len + i] as usize == i).collect();
                g.subgroup_from_elements(elems).expect("stabilizer is a subgroup")
            })
            .collect();
        let mut orbit_of = vec![usize::MAX; len];
        let mut orbit_reps = Vec::new();
        for i in 0..len {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            for a in 0..g.order() {
                orbit_of[conj[a * len + i] as usize] = i;
            }
            orbit_reps.push(i);
        }
        Ok(PSubgroupPoset {
            group: group.clone(),
            prime: p,
            subgroups,
            conj,
            below,
            normalizers,
            orbit_of,
            orbit_reps,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups.iter().position(|s| s == h)
    }

    /// Index of `a^-1 S_i a`.
    #[inline]
    pub fn conj(&self, i: usize, a: usize) -> usize {
        self.conj[a * self.subgroups.len() + i] as usize
    }

    /// Whether `S_i` is a proper subgroup of `S_j`.
    pub fn is_proper_subgroup(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    pub fn normalizer(&self, i: usize) -> &Subgroup {
        &self.normalizers[i]
    }

    pub fn orbit_reps(&self) -> &[usize] {
        &self.orbit_reps
    }

    /// The least index in the conjugacy class of `S_i`.
    pub fn orbit_rep_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    pub fn chain_stabilizer(&self, terms: &[usize]) -> Subgroup {
        let top = *terms.last().expect("chains have a trivial term");
        let elems = self.normalizers[top]
            .elements()
            .iter()
            .copied()
            .filter(|&a| terms.iter().all(|&t| self.conj(t, a) == t))
            .collect();
        self.group
            .subgroup_from_elements(elems)
            .expect("stabilizer is a subgroup")
    }

    /// The orbit representative of a chain and an element conjugating the chain onto it.
    pub fn canonical_chain(&self, terms: &[usize]) -> (Vec<usize>, usize) {
        (0..self.group.order())
            .map(|a| (terms.iter().map(|&t| self.conj(t, a)).collect::<Vec<_>>(), a))
            .min_by(|(x, _), (y, _)| x.iter().rev().cmp(y.iter().rev()))
            .unwrap()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Every strictly ascending chain of p-subgroups.
    All,
    /// Chains whose terms are all normal in the top term.
    Normal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::All => "all",
            Family::Normal => "normal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Poset indices `P_0 = 1, P_1, .., P_n`.
    pub terms: Vec<usize>,
    pub length: usize,
    /// Every term is normal in the top term.
    pub normal: bool,
    pub stabilizer: Subgroup,
}

impl Chain {
    pub fn top(&self) -> usize {
        *self.terms.last().unwrap()
    }

    /// Number of chains in the G-orbit, `[G : G_τ]`.
    pub fn orbit_size(&self) -> usize {
        self.stabilizer.ambient().order() / self.stabilizer.order()
    }

    /// A stable textual key: the term indices joined by `<`.
    pub fn key(&self) -> String {
        self.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("<")
    }
}

pub fn enumerate_chains(poset: &PSubgroupPoset, family: Family) -> Result<Vec<Chain>, GroupError> {
    enumerate_chains_capped(poset, family, DEFAULT_CHAIN_CAP)
}

pub fn enumerate_chains_capped(poset: &PSubgroupPoset, family: Family, cap: usize) -> Result<Vec<Chain>, GroupError> {
    let mut out = Vec::new();
    let mut visited = 0usize;
    for &top in poset.orbit_reps() {
        let allowed: Vec<usize> = (0..top)
            .filter(|&i| poset.is_proper_subgroup(i, top))
            .filter(|&i| family == Family::All || poset.subgroup(i).is_normal_in(poset.subgroup(top)))
            .collect();
        let norm = poset.normalizer(top).elements().to_vec();
        // Descending DFS: stack holds chains written top first.
        let mut stack: Vec<Vec<usize>> = vec![vec![top]];
        while let Some(desc) = stack.pop() {
            let low = *desc.last().unwrap();
            if low == 0 {
                visited += 1;
                if visited > cap {
                    return Err(GroupError::GuardExceeded { limit: cap });
                }
                let minimal = norm.iter().all(|&a| {
                    let img = desc.iter().map(|&t| poset.conj(t, a));
                    img.cmp(desc.iter().copied()) != std::cmp::Ordering::Less
                });
                if minimal {
                    let terms: Vec<usize> = desc.iter().rev().copied().collect();
                    let normal = terms
                        .iter()
                        .all(|&t| poset.subgroup(t).is_normal_in(poset.subgroup(top)));
                    let stabilizer = poset.chain_stabilizer(&terms);
                    out.push(Chain {
                        length: terms.len() - 1,
                        terms,
                        normal,
                        stabilizer,
                    });
                }
                continue;
            }
            for &i in allowed.iter().rev() {
                if poset.is_proper_subgroup(i, low) {
                    let mut next = desc.clone();
                    next.push(i);
                    stack.push(next);
                }
            }
        }
    }
    out.sort_by(|a, b| a.terms.iter().rev().cmp(b.terms.iter().rev()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, symmetric, Perm};

    #[test]
    fn coprime_prime_gives_trivial_poset() {
        let g = symmetric(3).unwrap();
        let poset = enumerate_p_subgroups(&g, 5).unwrap();
        assert_eq!(poset.len(), 1);
        let chains = enumerate_chains(&poset, Family::All).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].stabilizer.order(), 6);
        assert_eq!(chains[0].length, 0);
    }

    #[test]
    fn cyclic_p_group() {
        let g = cyclic(5).unwrap();
        let poset = enumerate_p_subgroups(&g, 5).unwrap();
        assert_eq!(poset.len(), 2);
        assert_eq!(poset.orbit_reps(), &[0, 1]);
        let chains = enumerate_chains(&poset, Family::All).unwrap();
        assert_eq!(chains.iter().map(|c| c.length).collect::<Vec<_>>(), vec![0, 1]);
        assert!(chains.iter().all(|c| c.stabilizer.order() == 5));
    }

    #[test]
    fn s3_posets() {
        let g = symmetric(3).unwrap();
        let p3 = enumerate_p_subgroups(&g, 3).unwrap();
        assert_eq!(p3.len(), 2);
        assert_eq!(p3.orbit_reps().len(), 2);
        let p2 = enumerate_p_subgroups(&g, 2).unwrap();
        assert_eq!(p2.len(), 4);
        assert_eq!(p2.orbit_reps().len(), 2);
        let normal = enumerate_chains(&p2, Family::Normal).unwrap();
        assert_eq!(normal.len(), 2);
        assert_eq!(normal[0].stabilizer.order(), 6);
        assert_eq!(normal[1].stabilizer.order(), 2);
    }

    #[test]
    fn s4_chain_stabilizer() {
        let g = symmetric(4).unwrap();
        let poset = enumerate_p_subgroups(&g, 2).unwrap();
        let find = |cycles: &[Vec<usize>]| g.index_of(&Perm::from_cycles(4, cycles).unwrap()).unwrap();
        let c2 = g.subgroup_generated(&[find(&[vec![0, 1], vec![2, 3]])]);
        let v4 = g.subgroup_generated(&[find(&[vec![0, 1], vec![2, 3]]), find(&[vec![0, 2], vec![1, 3]])]);
        let terms = vec![0, poset.index_of(&c2).unwrap(), poset.index_of(&v4).unwrap()];
        assert_eq!(poset.chain_stabilizer(&terms).order(), 8);
        assert_eq!(poset.chain_stabilizer(&[0]).order(), 24);
    }

    #[test]
    fn reps_are_canonical() {
        let g = alternating(5).unwrap();
        let poset = enumerate_p_subgroups(&g, 2).unwrap();
        for chain in enumerate_chains(&poset, Family::All).unwrap() {
            let (canon, _) = poset.canonical_chain(&chain.terms);
            assert_eq!(canon, chain.terms);
        }
    }
}
