//! Matrix representations over the splitting field and a MeatAxe-style composition-factor
//! search, used to count simple modules per block and their Frobenius-twist fixed points.

use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::blocks::{BlockError, BlockSystem, CentralIdempotent};
use crate::gf::{Echelon, Fq, FqField, GaloisSubgroup, Matrix};
use crate::group::PermGroup;
use crate::rng;

pub const DEFAULT_CHOP_BUDGET: usize = 200;
// Factors of the characteristic polynomial above this degree are not used for splitting.
const MAX_FACTOR_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModRepError {
    #[error("no split or irreducibility certificate after {0} random elements")]
    ChopBudgetExceeded(usize),
    #[error("a composition factor is irreducible but not absolutely irreducible")]
    NotAbsolutelyIrreducible,
    #[error("matrices do not define a representation of the group")]
    NotARepresentation,
    #[error(transparent)]
    Block(#[from] BlockError),
}

/// A representation given by one matrix per group generator, acting on column vectors.
#[derive(Clone)]
pub struct MatRep {
    group: Arc<PermGroup>,
    field: Arc<FqField>,
    gens: Vec<Matrix>,
    dim: usize,
}

impl std::fmt::Debug for MatRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MatRep(dim {}, {} generators)", self.dim, self.gens.len())
    }
}

impl MatRep {
    /// Checks invertibility and that every group element gets a well-defined matrix.
    pub fn new(group: &Arc<PermGroup>, field: &Arc<FqField>, gens: Vec<Matrix>) -> Result<Self, ModRepError> {
        let dim = gens.first().map_or(0, |m| m.rows());
        if gens.len() != group.generators().len() || gens.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ModRepError::NotARepresentation);
        }
        let rep = MatRep {
            group: group.clone(),
            field: field.clone(),
            gens,
            dim,
        };
        if rep.gens.iter().any(|m| m.inverse(field).is_none()) {
            return Err(ModRepError::NotARepresentation);
        }
        // Each generator of the group must act as the matrix of its own element.
        let elems = rep.element_matrices();
        for (i, m) in rep.gens.iter().enumerate() {
            if elems[group.generator_index(i)] != *m {
                return Err(ModRepError::NotARepresentation);
            }
        }
        // And products must follow the multiplication table on a sample.
        let n = group.order();
        let step = (n / 7).max(1);
        for a in (0..n).step_by(step) {
            for b in (0..n).step_by(step) {
                if elems[a].mul(field, &elems[b]) != elems[group.mul(a, b)] {
                    return Err(ModRepError::NotARepresentation);
                }
            }
        }
        Ok(rep)
    }

    fn from_parts(group: &Arc<PermGroup>, field: &Arc<FqField>, gens: Vec<Matrix>, dim: usize) -> Self {
        MatRep {
            group: group.clone(),
            field: field.clone(),
            gens,
            dim,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_matrices(&self) -> &[Matrix] {
        &self.gens
    }

    /// Matrices of all group elements, indexed like the group.
    pub fn element_matrices(&self) -> Vec<Matrix> {
        let g = &self.group;
        let mut out = Vec::with_capacity(g.order());
        out.push(Matrix::identity(self.dim));
        for a in 1..g.order() {
            let (parent, gi) = g.tree_parent(a).unwrap();
            let m = out[parent].mul(&self.field, &self.gens[gi]);
            out.push(m);
        }
        out
    }

    pub fn element_matrix(&self, a: usize) -> Matrix {
        self.group.word(a).iter().fold(Matrix::identity(self.dim), |acc, &gi| {
            acc.mul(&self.field, &self.gens[gi])
        })
    }

    /// The image of a class-sum combination.
    pub fn class_combination(&self, coords: &[Fq]) -> Matrix {
        let f = &*self.field;
        let g = &self.group;
        let mut acc = Matrix::zero(self.dim, self.dim);
        for (c, &x) in coords.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &a in g.class_members(c) {
                acc = acc.add_scaled(f, x, &self.element_matrix(a));
            }
        }
        acc
    }

    /// Traces of the given group elements.
    pub fn traces(&self, elements: &[usize]) -> Vec<Fq> {
        elements
            .iter()
            .map(|&a| self.element_matrix(a).trace(&self.field))
            .collect()
    }

    /// Entrywise `x -> x^(p^m)` on every generator matrix.
    pub fn frobenius_twist(&self, m: u32) -> MatRep {
        MatRep::from_parts(
            &self.group,
            &self.field,
            self.gens.iter().map(|a| a.frobenius(&self.field, m)).collect(),
            self.dim,
        )
    }

    /// Conjugate by an invertible matrix `s`: generators become `s^-1 A s`.
    pub fn conjugate(&self, s: &Matrix) -> Option<MatRep> {
        let inv = s.inverse(&self.field)?;
        let gens = self
            .gens
            .iter()
            .map(|a| inv.mul(&self.field, a).mul(&self.field, s))
            .collect();
        Some(MatRep::from_parts(&self.group, &self.field, gens, self.dim))
    }

    fn transposed(&self) -> Vec<Matrix> {
        self.gens.iter().map(|m| m.transpose()).collect()
    }
}

/// `kG e` with `G` acting by left multiplication, in an echelon basis of `{g e}`.
pub fn regular_representation(group: &Arc<PermGroup>, e: &[Fq], field: &Arc<FqField>) -> MatRep {
    let g = group;
    let f = &**field;
    let n = g.order();
    // Element coefficients of e, then of x e for every x: (x e)_y = e_{x^-1 y}.
    let coeffs: Vec<Fq> = (0..n).map(|y| e[g.class_of(y)]).collect();
    let translate = |v: &[Fq], x: usize| -> Vec<Fq> {
        let xi = g.inv(x);
        (0..n).map(|y| v[g.mul(xi, y)]).collect()
    };
    let mut span = Echelon::new(n);
    for x in 0..n {
        span.insert(f, translate(&coeffs, x));
        if span.rank() == n {
            break;
        }
    }
    let basis = span.basis().to_vec();
    let dim = basis.len();
    let gens = (0..g.generators().len())
        .map(|k| {
            let h = g.generator_index(k);
            let cols: Vec<Vec<Fq>> = basis.iter().map(|b| span.coords(&translate(b, h))).collect();
            Matrix::from_columns(&cols, dim)
        })
        .collect();
    MatRep::from_parts(group, field, gens, dim)
}

/// A linear combination of generator words, reproducible on any representation of the group.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Recipe {
    terms: Vec<(Fq, Vec<usize>)>,
}

impl Recipe {
    fn evaluate(&self, gens: &[Matrix], f: &FqField, dim: usize) -> Matrix {
        let mut acc = Matrix::zero(dim, dim);
        for (c, word) in &self.terms {
            let m = word
                .iter()
                .fold(Matrix::identity(dim), |acc, &gi| acc.mul(f, &gens[gi]));
            acc = acc.add_scaled(f, *c, &m);
        }
        acc
    }
}

/// Proof of absolute irreducibility: `ker(recipe - lambda)` is one-dimensional and spins up.
#[derive(Clone, Debug)]
struct Certificate {
    recipe: Recipe,
    lambda: Fq,
    // standard basis from the kernel vector: (source basis index, generator)
    script: Vec<(usize, usize)>,
}

/// An absolutely irreducible module, up to isomorphism.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    rep: MatRep,
    /// Traces on the `p`-regular class representatives (in [`PermGroup::p_regular_classes`] order).
    pub fingerprint: Vec<Fq>,
    /// Block acting as the identity, when known.
    pub block: Option<usize>,
    certificate: Option<Certificate>,
}

impl SimpleModule {
    pub fn rep(&self) -> &MatRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim
    }
}

fn fingerprint(rep: &MatRep) -> Vec<Fq> {
    let g = &rep.group;
    let p = rep.field.characteristic();
    let reps: Vec<usize> = g
        .p_regular_classes(p)
        .into_iter()
        .map(|c| g.class_members(c)[0])
        .collect();
    rep.traces(&reps)
}

/// Spins `v` under `gens`; returns the echelon span and the script of `(source, generator)`
/// steps that produced each new basis vector after the first.
fn spin(f: &FqField, gens: &[Matrix], v: Vec<Fq>) -> (Echelon, Vec<Vec<Fq>>, Vec<(usize, usize)>) {
    let n = v.len();
    let mut ech = Echelon::new(n);
    let mut vectors = Vec::new();
    let mut script = Vec::new();
    if !ech.insert(f, v.clone()) {
        return (ech, vectors, script);
    }
    vectors.push(v);
    let mut i = 0;
    while i < vectors.len() && ech.rank() < n {
        for (gi, a) in gens.iter().enumerate() {
            let w = a.mul_vec(f, &vectors[i]);
            if ech.insert(f, w.clone()) {
                vectors.push(w);
                script.push((i, gi));
                if ech.rank() == n {
                    break;
                }
            }
        }
        i += 1;
    }
    (ech, vectors, script)
}

/// Replays a spinning script from `v`; `None` if the vectors fail to be independent.
fn replay(f: &FqField, gens: &[Matrix], v: Vec<Fq>, script: &[(usize, usize)]) -> Option<Vec<Vec<Fq>>> {
    let n = v.len();
    let mut ech = Echelon::new(n);
    let mut vectors = vec![v.clone()];
    if !ech.insert(f, v) {
        return None;
    }
    for &(src, gi) in script {
        let w = gens[gi].mul_vec(f, &vectors[src]);
        if !ech.insert(f, w.clone()) {
            return None;
        }
        vectors.push(w);
    }
    Some(vectors)
}

fn submodule(rep: &MatRep, span: &Echelon) -> MatRep {
    let f = &*rep.field;
    let basis = span.basis();
    let r = basis.len();
    let gens = rep
        .gens
        .iter()
        .map(|a| {
            let cols: Vec<Vec<Fq>> = basis.iter().map(|b| span.coords(&a.mul_vec(f, b))).collect();
            Matrix::from_columns(&cols, r)
        })
        .collect();
    MatRep::from_parts(&rep.group, &rep.field, gens, r)
}

fn quotient(rep: &MatRep, span: &Echelon) -> MatRep {
    let f = &*rep.field;
    let comp = span.complement();
    let r = comp.len();
    let gens = rep
        .gens
        .iter()
        .map(|a| {
            let cols: Vec<Vec<Fq>> = comp
                .iter()
                .map(|&c| {
                    let reduced = span.reduce(f, &a.column(c));
                    comp.iter().map(|&k| reduced[k]).collect()
                })
                .collect();
            Matrix::from_columns(&cols, r)
        })
        .collect();
    MatRep::from_parts(&rep.group, &rep.field, gens, r)
}

enum Outcome {
    Split(MatRep, MatRep),
    Simple(Option<Certificate>),
}

/// Draws random algebra elements until `rep` is split or certified absolutely irreducible.
fn split_or_certify<R: Rng>(rep: &MatRep, budget: usize, rng: &mut R) -> Result<Outcome, ModRepError> {
    let f = &*rep.field;
    let n = rep.dim;
    if n == 1 {
        return Ok(Outcome::Simple(None));
    }
    let transposed = rep.transposed();
    let mut pool: Vec<(Vec<usize>, Matrix)> = rep.gens.iter().enumerate().map(|(i, m)| (vec![i], m.clone())).collect();
    let mut irreducible = false;
    for _ in 0..budget {
        let (i, j) = (rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()));
        let word = [pool[i].0.clone(), pool[j].0.clone()].concat();
        let m = pool[i].1.mul(f, &pool[j].1);
        pool.push((word, m));
        let start = pool.len().saturating_sub(4);
        let mut recipe = Recipe { terms: Vec::new() };
        let mut a = Matrix::zero(n, n);
        for (word, m) in &pool[start..] {
            let c = rng.gen_range(1..f.order());
            a = a.add_scaled(f, c, m);
            recipe.terms.push((c, word.clone()));
        }
        let cp = a.charpoly(f);
        for (fac, _) in cp.factor(f, rng) {
            let deg = fac.degree().unwrap();
            if deg > MAX_FACTOR_DEGREE {
                break;
            }
            let fa = a.eval_poly(f, &fac);
            let kernel = fa.nullspace(f);
            let v = kernel[0].clone();
            if !irreducible {
                let (span, _, _) = spin(f, &rep.gens, v.clone());
                if span.rank() < n {
                    return Ok(Outcome::Split(submodule(rep, &span), quotient(rep, &span)));
                }
                let w = fa.transpose().nullspace(f)[0].clone();
                let (dual, _, _) = spin(f, &transposed, w);
                if dual.rank() < n {
                    // The annihilator of a proper dual submodule is a proper submodule.
                    let ann = Matrix::from_rows(dual.basis(), n).nullspace(f);
                    let span = Echelon::from_vectors(f, n, ann);
                    return Ok(Outcome::Split(submodule(rep, &span), quotient(rep, &span)));
                }
                if kernel.len() == deg {
                    irreducible = true;
                }
            }
            if irreducible && deg == 1 && kernel.len() == 1 {
                let lambda = f.neg(fac.coeffs()[0]);
                let (_, _, script) = spin(f, &rep.gens, v);
                return Ok(Outcome::Simple(Some(Certificate { recipe, lambda, script })));
            }
        }
    }
    if irreducible {
        if endomorphism_dimension(rep) == 1 {
            return Ok(Outcome::Simple(None));
        }
        return Err(ModRepError::NotAbsolutelyIrreducible);
    }
    Err(ModRepError::ChopBudgetExceeded(budget))
}

/// Solutions `X` of `X A_i = B_i X` for all generators, as flattened row-major matrices.
fn intertwiners(m: &MatRep, n: &MatRep) -> Vec<Vec<Fq>> {
    let f = &*m.field;
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dn * dm;
    let mut rows = Vec::new();
    for (a, b) in m.gens.iter().zip(&n.gens) {
        // (X A - B X)_{rc} = sum_k X_{rk} A_{kc} - sum_k B_{rk} X_{kc}
        for r in 0..dn {
            for c in 0..dm {
                let mut row = vec![0; unknowns];
                for k in 0..dm {
                    let idx = r * dm + k;
                    row[idx] = f.add(row[idx], a.get(k, c));
                }
                for k in 0..dn {
                    let idx = k * dm + c;
                    row[idx] = f.sub(row[idx], b.get(r, k));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(&rows, unknowns).nullspace(f)
}

fn endomorphism_dimension(rep: &MatRep) -> usize {
    intertwiners(rep, rep).len()
}

/// Isomorphism of absolutely irreducible modules: equal dimension and fingerprint, then an
/// explicit intertwiner.
pub fn is_isomorphic(m: &SimpleModule, n: &SimpleModule) -> bool {
    if m.dim() != n.dim() || m.fingerprint != n.fingerprint {
        return false;
    }
    intertwiner(m, n).is_some()
}

fn intertwiner(m: &SimpleModule, n: &SimpleModule) -> Option<Matrix> {
    let f = &*m.rep.field;
    let d = m.dim();
    if let Some(cert) = &m.certificate {
        let a = cert
            .recipe
            .evaluate(&n.rep.gens, f, d)
            .add_scalar(f, f.neg(cert.lambda));
        let kernel = a.nullspace(f);
        if kernel.len() != 1 {
            return None;
        }
        let am = cert
            .recipe
            .evaluate(&m.rep.gens, f, d)
            .add_scalar(f, f.neg(cert.lambda));
        let vm = am.nullspace(f).into_iter().next()?;
        let sm = replay(f, &m.rep.gens, vm, &cert.script)?;
        let sn = replay(f, &n.rep.gens, kernel[0].clone(), &cert.script)?;
        let sm = Matrix::from_columns(&sm, d);
        let sn = Matrix::from_columns(&sn, d);
        let x = sn.mul(f, &sm.inverse(f)?);
        let ok = m
            .rep
            .gens
            .iter()
            .zip(&n.rep.gens)
            .all(|(a, b)| x.mul(f, a) == b.mul(f, &x));
        return ok.then_some(x);
    }
    let sols = intertwiners(&m.rep, &n.rep);
    let x = Matrix::from_rows(&sols.first()?.chunks(d).map(|r| r.to_vec()).collect::<Vec<_>>(), d);
    x.inverse(f).map(|_| x)
}

/// Composition factors of `rep`, up to isomorphism, with multiplicities.
pub fn chop<R: Rng>(rep: &MatRep, budget: usize, rng: &mut R) -> Result<Vec<(SimpleModule, usize)>, ModRepError> {
    let mut factors: Vec<(SimpleModule, usize)> = Vec::new();
    let mut work = vec![rep.clone()];
    while let Some(m) = work.pop() {
        if m.dim == 0 {
            continue;
        }
        match split_or_certify(&m, budget, rng)? {
            Outcome::Split(a, b) => {
                work.push(a);
                work.push(b);
            }
            Outcome::Simple(certificate) => {
                let s = SimpleModule {
                    fingerprint: fingerprint(&m),
                    rep: m,
                    block: None,
                    certificate,
                };
                match factors.iter_mut().find(|(t, _)| is_isomorphic(t, &s)) {
                    Some((_, k)) => *k += 1,
                    None => factors.push((s, 1)),
                }
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| (a.dim(), &a.fingerprint).cmp(&(b.dim(), &b.fingerprint)));
    Ok(factors)
}

/// Twist of a simple module, carrying the certificate over (twisting every scalar).
pub fn frobenius_twist(s: &SimpleModule, m: u32) -> SimpleModule {
    let f = &*s.rep.field;
    let rep = s.rep.frobenius_twist(m);
    let certificate = s.certificate.as_ref().map(|c| Certificate {
        recipe: Recipe {
            terms: c
                .recipe
                .terms
                .iter()
                .map(|(x, w)| (f.frobenius(*x, m), w.clone()))
                .collect(),
        },
        lambda: f.frobenius(c.lambda, m),
        script: c.script.clone(),
    });
    SimpleModule {
        fingerprint: fingerprint(&rep),
        rep,
        block: s.block,
        certificate,
    }
}

/// Simple modules of a group, sorted into its blocks.
pub struct ModularSystem {
    blocks: BlockSystem,
    simples: Vec<SimpleModule>,
    by_block: Vec<Vec<usize>>,
}

impl ModularSystem {
    /// Chops `kG e` for every block `e`.
    pub fn new(blocks: BlockSystem, seed: u64, context: &str) -> Result<Self, ModRepError> {
        let group = blocks.group().clone();
        let field = blocks.field().clone();
        let mut simples = Vec::new();
        let mut by_block = Vec::new();
        for b in blocks.blocks() {
            let mut rng = rng::stream(seed, &format!("{context}/block{}", b.index));
            let rep = regular_representation(&group, b.coords(), &field);
            let mut ids = Vec::new();
            for (mut s, _) in chop(&rep, DEFAULT_CHOP_BUDGET, &mut rng)? {
                let acts = s.rep.class_combination(b.coords());
                if acts != Matrix::identity(s.dim()) {
                    return Err(BlockError::NotIdempotent.into());
                }
                s.block = Some(b.index);
                ids.push(simples.len());
                simples.push(s);
            }
            by_block.push(ids);
        }
        Ok(ModularSystem {
            blocks,
            simples,
            by_block,
        })
    }

    pub fn blocks(&self) -> &BlockSystem {
        &self.blocks
    }

    pub fn simples(&self) -> &[SimpleModule] {
        &self.simples
    }

    pub fn simples_in_block(&self, b: usize) -> &[usize] {
        &self.by_block[b]
    }

    /// `IBr(G, b)` for a central idempotent `b`: the simples of the blocks under it.
    pub fn ibr(&self, b: &CentralIdempotent) -> Result<Vec<usize>, ModRepError> {
        if b.is_zero() {
            return Ok(Vec::new());
        }
        Ok(self
            .blocks
            .blocks_under(b)?
            .into_iter()
            .flat_map(|i| self.by_block[i].iter().copied())
            .collect())
    }

    /// Index of the simple isomorphic to the `p^m` twist of simple `i`.
    pub fn twist_of(&self, i: usize, m: u32) -> usize {
        let s = &self.simples[i];
        let target_block = self.blocks.galois_conjugate(s.block.unwrap(), m);
        let t = frobenius_twist(s, m);
        self.by_block[target_block]
            .iter()
            .copied()
            .find(|&j| is_isomorphic(&self.simples[j], &t))
            .expect("twists of simples are simple")
    }

    /// `|IBr(G, b)^T|`.
    pub fn count_fixed_ibr(&self, b: &CentralIdempotent, t: GaloisSubgroup) -> Result<usize, ModRepError> {
        let m = t.generator_exponent();
        if !b.is_fixed_by(self.blocks.field(), m) {
            return Err(BlockError::TNotStabilizing.into());
        }
        Ok(self.ibr(b)?.into_iter().filter(|&i| self.twist_of(i, m) == i).count())
    }

    /// Number of simples fixed by `Frob^m`, over all blocks.
    pub fn count_fixed_simples(&self, m: u32) -> usize {
        (0..self.simples.len()).filter(|&i| self.twist_of(i, m) == i).count()
    }
}

/// Number of `p`-regular classes `C` with `C^(p^m) = C`.
pub fn class_count_oracle(group: &PermGroup, p: u32, m: u32) -> usize {
    let map = group.p_power_class_map(p, m);
    map.iter().enumerate().filter(|&(i, &j)| i == j).count()
}

/// Distinct composition factors of the full regular module `kG`.
pub fn regular_module_simples<R: Rng>(
    group: &Arc<PermGroup>,
    field: &Arc<FqField>,
    rng: &mut R,
) -> Result<Vec<(SimpleModule, usize)>, ModRepError> {
    let mut one = vec![0; group.class_count()];
    one[0] = 1;
    chop(&regular_representation(group, &one, field), DEFAULT_CHOP_BUDGET, rng)
}

/// Whether the class-sum combination `e` acts as the identity on `rep`.
pub fn idempotent_acts_as_identity(rep: &MatRep, e: &[Fq]) -> bool {
    rep.class_combination(e) == Matrix::identity(rep.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::splitting_field;
    use crate::group::{cyclic, symmetric, trivial_group};

    fn modular(g: &Arc<PermGroup>, p: u32) -> ModularSystem {
        let (f, _) = splitting_field(p, g.exp_p_prime(p) as u32).unwrap();
        ModularSystem::new(BlockSystem::new(g, &f).unwrap(), 0, "test").unwrap()
    }

    #[test]
    fn regular_rep_dimensions() {
        let t = trivial_group();
        let f = crate::gf::FqField::prime(2).unwrap();
        assert_eq!(regular_representation(&t, &[1], &f).dim(), 1);
        let c2 = cyclic(2).unwrap();
        let f3 = crate::gf::FqField::prime(3).unwrap();
        let r = regular_representation(&c2, &[1, 0], &f3);
        assert_eq!(r.dim(), 2);
        MatRep::new(&c2, &f3, r.generator_matrices().to_vec()).unwrap();
    }

    #[test]
    fn cyclic_p_group_regular_module() {
        let g = cyclic(5).unwrap();
        let f = crate::gf::FqField::prime(5).unwrap();
        let factors = regular_module_simples(&g, &f, &mut rng::stream(0, "c5")).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.dim(), 1);
        assert_eq!(factors[0].1, 5);
    }

    #[test]
    fn s3_counts() {
        let g = symmetric(3).unwrap();
        let m3 = modular(&g, 3);
        assert_eq!(m3.simples().len(), 2);
        let m2 = modular(&g, 2);
        assert_eq!(m2.simples().len(), 2);
        let dims: Vec<usize> = m2.simples().iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn c7_twist_orbits() {
        let g = cyclic(7).unwrap();
        let m = modular(&g, 2);
        assert_eq!(m.simples().len(), 7);
        assert_eq!(m.count_fixed_simples(1), 1);
        assert_eq!(m.count_fixed_simples(3), 7);
        assert_eq!(class_count_oracle(&g, 2, 1), 1);
        assert_eq!(class_count_oracle(&g, 2, 3), 7);
        assert_eq!(class_count_oracle(&g, 2, 0), 7);
    }
}
