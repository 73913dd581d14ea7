//! Blocks of group algebras over finite fields, in the basis of class sums.
//!
//! [`BlockSystem`] decomposes `1` into the primitive idempotents of `Z(kG)` and attaches
//! to each its central character, defect and minimal field. The Brauer map, its
//! pushforward to `N_G(P)/P`, and weight counting are built on top.

mod algebra;
mod oracle;
mod split;

use std::sync::Arc;

use thiserror::Error;

pub use algebra::ClassAlgebra;
pub use oracle::central_character_oracle;
pub use split::{berlekamp_subalgebra, lift_idempotent, radical, residue_dimension, split_idempotent};

use crate::gf::{divisors, Echelon, Fq, FqField, GaloisSubgroup, GfError};
use crate::group::{p_valuation, GroupError, PermGroup, Quotient, Subgroup};
use crate::rng;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("an idempotent is not primitive over the splitting field")]
    NotSplit,
    #[error("central characters from the eigenvalue oracle do not match the blocks")]
    OracleMismatch,
    #[error("element is not a central idempotent")]
    NotIdempotent,
    #[error("the Galois subgroup moves the idempotent")]
    TNotStabilizing,
    #[error("no splitting element found within the trial budget")]
    SplitBudgetExceeded,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A central idempotent of `kH` (possibly zero, possibly a sum of blocks), in class-sum coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralIdempotent {
    pub coords: Vec<Fq>,
}

impl CentralIdempotent {
    pub fn new(coords: Vec<Fq>) -> Self {
        CentralIdempotent { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    /// Coefficientwise `x -> x^(p^m)`.
    pub fn galois_conjugate(&self, field: &FqField, m: u32) -> Self {
        CentralIdempotent {
            coords: self.coords.iter().map(|&x| field.frobenius(x, m)).collect(),
        }
    }

    pub fn is_fixed_by(&self, field: &FqField, m: u32) -> bool {
        self.galois_conjugate(field, m) == *self
    }

    /// Least `m0 | d` such that `Frob^m0` fixes every coordinate.
    pub fn minimal_field_degree(&self, field: &FqField) -> u32 {
        divisors(field.degree())
            .into_iter()
            .find(|&m| self.is_fixed_by(field, m))
            .expect("Frob^d is the identity")
    }

    /// Number of group elements with nonzero coefficient.
    pub fn support_size(&self, alg: &ClassAlgebra) -> usize {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| alg.class_size(i))
            .sum()
    }
}

/// A primitive idempotent of `Z(kG)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockIdempotent {
    pub index: usize,
    pub idempotent: CentralIdempotent,
    pub defect: u32,
    pub minimal_field_degree: u32,
    /// Values of the central character on the class sums.
    pub central_character: Vec<Fq>,
    pub principal: bool,
}

impl BlockIdempotent {
    pub fn coords(&self) -> &[Fq] {
        &self.idempotent.coords
    }
}

/// The block decomposition of `kG` over one field.
pub struct BlockSystem {
    algebra: ClassAlgebra,
    radical: Echelon,
    blocks: Vec<BlockIdempotent>,
}

impl std::fmt::Debug for BlockSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BlockSystem").field("blocks", &self.blocks).finish()
    }
}

impl BlockSystem {
    /// Decomposes `1` over `field`, requiring every part to be absolutely primitive.
    pub fn new(group: &Arc<PermGroup>, field: &Arc<FqField>) -> Result<Self, BlockError> {
        let algebra = ClassAlgebra::new(group, field);
        let mut rng = rng::stream(0, &format!("blocks/{}/{}", group.order(), field.order()));
        let (radical, parts) = central_primitive_idempotents(&algebra, &mut rng)?;
        let f = &**field;
        let p = f.characteristic();
        let nu = p_valuation(group.order() as u64, p);
        let mut blocks: Vec<BlockIdempotent> = Vec::with_capacity(parts.len());
        for coords in parts {
            if residue_dimension(&algebra, &coords, &radical) != 1 {
                return Err(BlockError::NotSplit);
            }
            let omega = central_character(&algebra, &coords, &radical)?;
            let defect = (0..algebra.dim())
                .filter(|&c| omega[c] != 0)
                .filter(|&c| !group.element_order(group.class_members(c)[0]).is_multiple_of(p))
                .map(|c| nu - p_valuation(algebra.class_size(c) as u64, p))
                .min()
                .expect("the identity class has nonzero central character");
            let idempotent = CentralIdempotent::new(coords);
            blocks.push(BlockIdempotent {
                index: 0,
                principal: algebra.augmentation(&idempotent.coords) == 1,
                minimal_field_degree: idempotent.minimal_field_degree(f),
                idempotent,
                defect,
                central_character: omega,
            });
        }
        blocks.sort_by(|a, b| (!a.principal, a.coords()).cmp(&(!b.principal, b.coords())));
        for (i, b) in blocks.iter_mut().enumerate() {
            b.index = i;
        }
        Ok(BlockSystem {
            algebra,
            radical,
            blocks,
        })
    }

    pub fn algebra(&self) -> &ClassAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        self.algebra.group()
    }

    pub fn field(&self) -> &Arc<FqField> {
        self.algebra.field()
    }

    pub fn radical(&self) -> &Echelon {
        &self.radical
    }

    pub fn blocks(&self) -> &[BlockIdempotent] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &BlockIdempotent {
        &self.blocks[i]
    }

    pub fn one(&self) -> CentralIdempotent {
        CentralIdempotent::new(self.algebra.one())
    }

    /// Indices of the blocks `e` with `e b = e`; for a central idempotent `b` these sum to `b`.
    pub fn blocks_under(&self, b: &CentralIdempotent) -> Result<Vec<usize>, BlockError> {
        if !self.algebra.is_idempotent(&b.coords) {
            return Err(BlockError::NotIdempotent);
        }
        let under: Vec<usize> = self
            .blocks
            .iter()
            .filter(|e| self.algebra.mul(e.coords(), &b.coords) == e.coords())
            .map(|e| e.index)
            .collect();
        let mut sum = self.algebra.zero();
        for &i in &under {
            sum = self.algebra.add(&sum, self.blocks[i].coords());
        }
        if sum != b.coords {
            return Err(BlockError::NotIdempotent);
        }
        Ok(under)
    }

    /// Index of the block `Frob^m(b_i)`.
    pub fn galois_conjugate(&self, i: usize, m: u32) -> usize {
        let conj = self.blocks[i].idempotent.galois_conjugate(self.field(), m);
        self.blocks
            .iter()
            .position(|b| b.idempotent == conj)
            .expect("Frobenius permutes the blocks")
    }

    /// `|W(G, b)^T|` and the fixed defect-zero blocks under `b`.
    pub fn weights_fixed(&self, b: &CentralIdempotent, t: GaloisSubgroup) -> Result<Vec<usize>, BlockError> {
        let m = t.generator_exponent();
        if !b.is_fixed_by(self.field(), m) {
            return Err(BlockError::TNotStabilizing);
        }
        Ok(self
            .blocks_under(b)?
            .into_iter()
            .filter(|&i| self.blocks[i].defect == 0 && self.galois_conjugate(i, m) == i)
            .collect())
    }

    pub fn weights_fixed_count(&self, b: &CentralIdempotent, t: GaloisSubgroup) -> Result<usize, BlockError> {
        Ok(self.weights_fixed(b, t)?.len())
    }

    /// Checks that the central characters agree with the eigenvalue oracle.
    pub fn check_oracle(&self) -> Result<(), BlockError> {
        let mut rng = rng::stream(1, "oracle");
        let oracle = central_character_oracle(&self.algebra, &mut rng)?;
        let mut ours: Vec<Vec<Fq>> = self.blocks.iter().map(|b| b.central_character.clone()).collect();
        ours.sort();
        if oracle != ours {
            return Err(BlockError::OracleMismatch);
        }
        Ok(())
    }
}

/// The radical and the primitive idempotents of `Z(kG)` over the algebra's field.
pub fn central_primitive_idempotents<R: rand::Rng>(
    alg: &ClassAlgebra,
    rng: &mut R,
) -> Result<(Echelon, Vec<Vec<Fq>>), BlockError> {
    let j = radical(alg);
    let b = berlekamp_subalgebra(alg, &j);
    let parts = split_idempotent(alg, &alg.one(), &j, &b, rng)?;
    Ok((j, parts))
}

/// `w(C_i)` from `C_i e = w(C_i) e` modulo the radical.
fn central_character(alg: &ClassAlgebra, e: &[Fq], radical: &Echelon) -> Result<Vec<Fq>, BlockError> {
    let f = alg.field();
    let re = radical.reduce(f, e);
    let pivot = re.iter().position(|&x| x != 0).ok_or(BlockError::NotIdempotent)?;
    let inv = f.inv(re[pivot])?;
    (0..alg.dim())
        .map(|i| {
            let r = radical.reduce(f, &alg.mul(&alg.basis(i), e));
            let w = f.mul(r[pivot], inv);
            let expected: Vec<Fq> = re.iter().map(|&x| f.mul(w, x)).collect();
            if r == expected {
                Ok(w)
            } else {
                Err(BlockError::NotSplit)
            }
        })
        .collect()
}

/// A subgroup materialized as a group of its own, with index maps both ways.
pub struct SubgroupView {
    pub subgroup: Subgroup,
    pub group: Arc<PermGroup>,
    /// local index -> ambient index
    pub embedding: Vec<usize>,
    /// ambient index -> local index (`usize::MAX` outside)
    pub lookup: Vec<usize>,
}

impl SubgroupView {
    pub fn new(subgroup: &Subgroup) -> Self {
        let (group, embedding) = subgroup.to_group();
        let mut lookup = vec![usize::MAX; subgroup.ambient().order()];
        for (i, &a) in embedding.iter().enumerate() {
            lookup[a] = i;
        }
        SubgroupView {
            subgroup: subgroup.clone(),
            group,
            embedding,
            lookup,
        }
    }
}

/// `br_P`: coefficients (indexed by ambient elements) truncated to `C_G(P)`.
pub fn brauer_hom(coeffs: &[Fq], p: &Subgroup) -> Vec<Fq> {
    let c = p.centralizer();
    coeffs
        .iter()
        .enumerate()
        .map(|(g, &x)| if c.contains(g) { x } else { 0 })
        .collect()
}

/// Class-sum coordinates on `view` of an ambient-indexed element supported in it.
pub fn restrict_to(coeffs: &[Fq], view: &SubgroupView) -> Result<Vec<Fq>, BlockError> {
    if coeffs
        .iter()
        .enumerate()
        .any(|(g, &x)| x != 0 && view.lookup[g] == usize::MAX)
    {
        return Err(BlockError::NotIdempotent);
    }
    let h = &view.group;
    let out: Vec<Fq> = (0..h.class_count())
        .map(|c| coeffs[view.embedding[h.class_members(c)[0]]])
        .collect();
    if (0..h.order()).any(|x| coeffs[view.embedding[x]] != out[h.class_of(x)]) {
        return Err(BlockError::NotIdempotent);
    }
    Ok(out)
}

/// `b_tau = br_{P_n}(b)` as a central idempotent of `k G_tau`.
pub fn chain_idempotent(
    b: &CentralIdempotent,
    ambient: &ClassAlgebra,
    top: &Subgroup,
    stabilizer: &SubgroupView,
    target: &ClassAlgebra,
) -> Result<CentralIdempotent, BlockError> {
    let coeffs = brauer_hom(&ambient.expand(&b.coords), top);
    let coords = restrict_to(&coeffs, stabilizer)?;
    if !target.is_idempotent(&coords) {
        return Err(BlockError::NotIdempotent);
    }
    Ok(CentralIdempotent::new(coords))
}

/// Image of an element of `kN` (ambient-indexed) under `kN -> k[N/P]`, in class-sum coordinates.
pub fn quotient_idempotent(
    coeffs: &[Fq],
    field: &FqField,
    quotient: &Quotient,
    target: &ClassAlgebra,
) -> Result<CentralIdempotent, BlockError> {
    let q = quotient.group();
    let mut image = vec![0; q.order()];
    for (g, &x) in coeffs.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let Some(i) = quotient.project(g) else {
            return Err(BlockError::NotIdempotent);
        };
        image[i] = field.add(image[i], x);
    }
    let coords = target.collect(&image).ok_or(BlockError::NotIdempotent)?;
    if !target.is_idempotent(&coords) {
        return Err(BlockError::NotIdempotent);
    }
    Ok(CentralIdempotent::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::splitting_field;
    use crate::group::{cyclic, symmetric};

    fn system(g: &Arc<PermGroup>, p: u32) -> BlockSystem {
        let (f, _) = splitting_field(p, g.exp_p_prime(p) as u32).unwrap();
        BlockSystem::new(g, &f).unwrap()
    }

    #[test]
    fn f3_c2_idempotents() {
        let g = cyclic(2).unwrap();
        let s = system(&g, 3);
        let coords: Vec<Vec<Fq>> = s.blocks().iter().map(|b| b.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![2, 2], vec![2, 1]]);
        assert!(s.blocks().iter().all(|b| b.defect == 0));
    }

    #[test]
    fn s3_blocks() {
        let g = symmetric(3).unwrap();
        let s3 = system(&g, 3);
        assert_eq!(s3.blocks().len(), 1);
        assert_eq!(s3.block(0).central_character, vec![1, 0, 2]);
        assert_eq!(s3.block(0).defect, 1);
        let s2 = system(&g, 2);
        assert_eq!(s2.blocks().iter().map(|b| b.defect).collect::<Vec<_>>(), vec![1, 0]);
        s2.check_oracle().unwrap();
        s3.check_oracle().unwrap();
    }

    #[test]
    fn c7_at_2() {
        let g = cyclic(7).unwrap();
        let s = system(&g, 2);
        assert_eq!(s.blocks().len(), 7);
        let degrees: Vec<u32> = s.blocks().iter().map(|b| b.minimal_field_degree).collect();
        assert_eq!(degrees, vec![1, 3, 3, 3, 3, 3, 3]);
        let i = 1;
        let j = s.galois_conjugate(i, 1);
        assert_ne!(i, j);
        assert_eq!(s.galois_conjugate(i, 3), i);
    }
}
