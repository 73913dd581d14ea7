//! Executable forms of the chain identities: alternating sums over chain families, the
//! weight equation, the inflation and recursion lemmas, and comparisons between Galois
//! conjugate blocks.
//!
//! A [`CaseContext`] holds everything computed for one `(G, p)` over the splitting field
//! `k'`: blocks, simple modules, the p-subgroup poset, chain representatives, the modular
//! systems of chain stabilizers and of the quotients `N_G(P)/P`. Every random choice is
//! seeded from the case seed and a canonical label, so results do not depend on the
//! order in which parallel jobs run.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::blocks::{
    brauer_hom, chain_idempotent, quotient_idempotent, BlockError, BlockSystem, CentralIdempotent, SubgroupView,
};
use crate::gf::{divisors, galois_subgroups, splitting_field, FqField, GaloisSubgroup, GfError};
use crate::group::{p_valuation, quotient_group, GroupError, PermGroup, Quotient, Subgroup};
use crate::modrep::{ModRepError, ModularSystem};
use crate::psub::{enumerate_chains, enumerate_p_subgroups, Chain, Family, PSubgroupPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    ModRep(#[from] ModRepError),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("fixed-point profiles are indexed by different subgroup sets")]
    ProfileMismatch,
    #[error("no block with index {0}")]
    NoSuchBlock(usize),
    #[error("the check needs a normal chain of positive length")]
    NotApplicable,
}

pub type Result<T> = std::result::Result<T, HarnessError>;

/// The central idempotent a check runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Block(usize),
    /// The identity, i.e. the sum of all blocks.
    One,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Block(i) => write!(f, "block {i}"),
            Target::One => f.write_str("1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Alternating sum over a chain family against the fixed defect-zero blocks.
    AlternatingSum,
    /// Alternating sums over all chains and over normal chains coincide.
    FamilyAgreement,
    /// Fixed simples against fixed weights summed over p-subgroup classes.
    WeightEquation,
    /// Nontrivial chains regrouped by their first nontrivial term.
    Recursion,
    /// Alternating sum over all chains of the fixed-simple multiplicities.
    FunctorialSum,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::AlternatingSum => "alternating-sum",
            Check::FamilyAgreement => "family-agreement",
            Check::WeightEquation => "weight-equation",
            Check::Recursion => "recursion",
            Check::FunctorialSum => "functorial-sum",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationCase {
    pub group: String,
    pub prime: u32,
    pub target: Target,
    pub t: GaloisSubgroup,
    /// The chain family summed over, for checks that sum over one family.
    pub family: Option<Family>,
}

/// One summand: a chain (or a p-subgroup, for the weight equation) and its fixed count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LedgerEntry {
    pub chain: String,
    pub length: usize,
    pub count: usize,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationResult {
    pub check: Check,
    pub case: VerificationCase,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub ledger: Vec<LedgerEntry>,
}

impl VerificationResult {
    pub fn ledger_total(&self) -> i64 {
        self.ledger.iter().map(|e| e.sign * e.count as i64).sum()
    }

    /// The ledger reproduces the side it records: the right side for the weight
    /// equation, the left side otherwise.
    pub fn ledger_matches(&self) -> bool {
        match self.check {
            Check::WeightEquation => self.ledger_total() == self.rhs,
            _ => self.ledger_total() == self.lhs,
        }
    }
}

fn sign(length: usize) -> i64 {
    if length.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed_total(ledger: &[LedgerEntry]) -> i64 {
    ledger.iter().map(|e| e.sign * e.count as i64).sum()
}

struct Local {
    view: SubgroupView,
    system: ModularSystem,
}

struct QuotientContext {
    subgroup: Subgroup,
    quotient: Quotient,
    context: GroupContext,
}

/// Blocks, simples, p-subgroups and chains of one group over a fixed field, built lazily.
struct GroupContext {
    group: Arc<PermGroup>,
    field: Arc<FqField>,
    prime: u32,
    seed: u64,
    label: String,
    blocks: BlockSystem,
    system: OnceLock<Result<ModularSystem>>,
    poset: OnceLock<Result<PSubgroupPoset>>,
    chains: [OnceLock<Result<Vec<Chain>>>; 2],
    locals: Mutex<HashMap<Vec<usize>, Arc<Local>>>,
    quotients: Mutex<HashMap<usize, Arc<QuotientContext>>>,
}

impl GroupContext {
    fn new(group: &Arc<PermGroup>, field: &Arc<FqField>, prime: u32, seed: u64, label: String) -> Result<Self> {
        Ok(GroupContext {
            group: group.clone(),
            field: field.clone(),
            prime,
            seed,
            label,
            blocks: BlockSystem::new(group, field)?,
            system: OnceLock::new(),
            poset: OnceLock::new(),
            chains: [OnceLock::new(), OnceLock::new()],
            locals: Mutex::new(HashMap::new()),
            quotients: Mutex::new(HashMap::new()),
        })
    }

    fn system(&self) -> Result<&ModularSystem> {
        self.system
            .get_or_init(|| {
                // ModularSystem owns its block system; the decomposition is deterministic.
                let blocks = BlockSystem::new(&self.group, &self.field)?;
                Ok(ModularSystem::new(blocks, self.seed, &self.label)?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn poset(&self) -> Result<&PSubgroupPoset> {
        self.poset
            .get_or_init(|| Ok(enumerate_p_subgroups(&self.group, self.prime)?))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn chains(&self, family: Family) -> Result<&[Chain]> {
        let slot = match family {
            Family::All => &self.chains[0],
            Family::Normal => &self.chains[1],
        };
        slot.get_or_init(|| Ok(enumerate_chains(self.poset()?, family)?))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// The modular system of a subgroup, shared between all chains with that stabilizer.
    fn local(&self, h: &Subgroup) -> Result<Arc<Local>> {
        let key = h.elements().to_vec();
        if let Some(l) = self.locals.lock().unwrap().get(&key) {
            return Ok(l.clone());
        }
        let view = SubgroupView::new(h);
        let label = format!("{}/sub{:?}", self.label, key);
        let blocks = BlockSystem::new(&view.group, &self.field)?;
        let system = ModularSystem::new(blocks, self.seed, &label)?;
        let local = Arc::new(Local { view, system });
        Ok(self.locals.lock().unwrap().entry(key).or_insert(local).clone())
    }

    /// The context of `N_G(P)/P` for the poset subgroup `P = S_i`.
    fn quotient(&self, i: usize) -> Result<Arc<QuotientContext>> {
        if let Some(q) = self.quotients.lock().unwrap().get(&i) {
            return Ok(q.clone());
        }
        let poset = self.poset()?;
        let p = poset.subgroup(i).clone();
        let quotient = quotient_group(poset.normalizer(i), &p)?;
        let label = format!("{}/quot{}", self.label, i);
        let context = GroupContext::new(quotient.group(), &self.field, self.prime, self.seed, label)?;
        let q = Arc::new(QuotientContext {
            subgroup: p,
            quotient,
            context,
        });
        Ok(self.quotients.lock().unwrap().entry(i).or_insert(q).clone())
    }

    /// The image in `k[N_G(P)/P]` of `br_P(b)`.
    fn quotient_image(&self, q: &QuotientContext, b: &CentralIdempotent) -> Result<CentralIdempotent> {
        let coeffs = brauer_hom(&self.blocks.algebra().expand(&b.coords), &q.subgroup);
        Ok(quotient_idempotent(
            &coeffs,
            &self.field,
            &q.quotient,
            q.context.blocks.algebra(),
        )?)
    }

    /// `|IBr(G_tau, b_tau)^T|`.
    fn chain_count(&self, b: &CentralIdempotent, t: GaloisSubgroup, chain: &Chain) -> Result<usize> {
        if chain.length == 0 {
            return Ok(self.system()?.count_fixed_ibr(b, t)?);
        }
        let poset = self.poset()?;
        self.stabilizer_count(b, t, poset.subgroup(chain.top()), &chain.stabilizer)
    }

    /// `|IBr(H, br_Q(b))^T|` for a subgroup `H` normalizing the p-subgroup `Q`.
    fn stabilizer_count(
        &self,
        b: &CentralIdempotent,
        t: GaloisSubgroup,
        top: &Subgroup,
        h: &Subgroup,
    ) -> Result<usize> {
        let local = self.local(h)?;
        let bt = chain_idempotent(
            b,
            self.blocks.algebra(),
            top,
            &local.view,
            local.system.blocks().algebra(),
        )?;
        if bt.is_zero() {
            return Ok(0);
        }
        Ok(local.system.count_fixed_ibr(&bt, t)?)
    }

    fn ledger(&self, b: &CentralIdempotent, t: GaloisSubgroup, family: Family) -> Result<Vec<LedgerEntry>> {
        self.chains(family)?
            .par_iter()
            .map(|c| {
                Ok(LedgerEntry {
                    chain: c.key(),
                    length: c.length,
                    count: self.chain_count(b, t, c)?,
                    sign: sign(c.length),
                })
            })
            .collect()
    }

    /// Per nontrivial p-subgroup class: `|IBr(N_P, c_P)^T|` minus the signed counts over
    /// nontrivial normal chains of `N_P`.
    fn recursion_right_side(&self, b: &CentralIdempotent, t: GaloisSubgroup) -> Result<i64> {
        let reps: Vec<usize> = self.poset()?.orbit_reps().iter().copied().filter(|&i| i != 0).collect();
        let terms: Vec<i64> = reps
            .par_iter()
            .map(|&i| {
                let q = self.quotient(i)?;
                let c = self.quotient_image(&q, b)?;
                if c.is_zero() {
                    return Ok(0);
                }
                let head = q.context.system()?.count_fixed_ibr(&c, t)? as i64;
                let tail: i64 = q
                    .context
                    .ledger(&c, t, Family::Normal)?
                    .iter()
                    .filter(|e| e.length > 0)
                    .map(|e| -e.sign * e.count as i64)
                    .sum();
                Ok(head - tail)
            })
            .collect::<Result<_>>()?;
        Ok(terms.iter().sum())
    }

    /// One entry per p-subgroup class: fixed defect-zero blocks of `N_G(P)/P` under the image of `br_P(b)`.
    fn weight_ledger(&self, b: &CentralIdempotent, t: GaloisSubgroup) -> Result<Vec<LedgerEntry>> {
        let poset = self.poset()?;
        poset
            .orbit_reps()
            .par_iter()
            .map(|&i| {
                let q = self.quotient(i)?;
                let c = self.quotient_image(&q, b)?;
                let count = if c.is_zero() {
                    0
                } else {
                    q.context.blocks.weights_fixed_count(&c, t)?
                };
                Ok(LedgerEntry {
                    chain: format!("P{i}"),
                    length: p_valuation(poset.subgroup(i).order() as u64, self.prime) as usize,
                    count,
                    sign: 1,
                })
            })
            .collect()
    }
}

/// Outcome of the inflation check on one chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InflationOutcome {
    /// `br_{P_1}(b) = 0`, so the lemma says nothing.
    Skipped,
    Checked {
        /// The image of `G_sigma` in `N_G(P_1)/P_1` is the stabilizer of the shortened chain.
        stabilizers_agree: bool,
        lhs: usize,
        rhs: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationCheck {
    pub chain: String,
    pub t: GaloisSubgroup,
    pub outcome: InflationOutcome,
}

impl InflationCheck {
    pub fn holds(&self) -> bool {
        match self.outcome {
            InflationOutcome::Skipped => true,
            InflationOutcome::Checked {
                stabilizers_agree,
                lhs,
                rhs,
            } => stabilizers_agree && lhs == rhs,
        }
    }
}

/// Invariants of a block and of its `Frob^m` conjugate, side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateComparison {
    pub block: usize,
    pub conjugate: usize,
    pub m: u32,
    pub defects: (u32, u32),
    pub ibr_sizes: (usize, usize),
    /// Per-chain fixed-count ledgers agree for both families and every admissible `T`.
    pub ledgers_agree: bool,
    /// Fixed weight counts, total and per p-subgroup class, agree for every admissible `T`.
    pub weights_agree: bool,
}

impl ConjugateComparison {
    pub fn holds(&self) -> bool {
        self.defects.0 == self.defects.1
            && self.ibr_sizes.0 == self.ibr_sizes.1
            && self.ledgers_agree
            && self.weights_agree
    }
}

/// All computations for one group at one prime.
pub struct CaseContext {
    name: String,
    ctx: GroupContext,
}

impl fmt::Debug for CaseContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CaseContext")
            .field("name", &self.name)
            .field("prime", &self.ctx.prime)
            .field("field", &self.ctx.field)
            .finish()
    }
}

impl CaseContext {
    /// Builds the block system over `k' = F_p(zeta_t)`, `t = exp(G)_{p'}`.
    pub fn new(name: &str, group: &Arc<PermGroup>, p: u32, seed: u64) -> Result<Self> {
        let (field, _) = splitting_field(p, group.exp_p_prime(p) as u32)?;
        let label = format!("{name}/p{p}");
        Ok(CaseContext {
            name: name.to_string(),
            ctx: GroupContext::new(group, &field, p, seed, label)?,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.ctx.group
    }

    pub fn prime(&self) -> u32 {
        self.ctx.prime
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.ctx.field
    }

    pub fn blocks(&self) -> &BlockSystem {
        &self.ctx.blocks
    }

    pub fn system(&self) -> Result<&ModularSystem> {
        self.ctx.system()
    }

    pub fn poset(&self) -> Result<&PSubgroupPoset> {
        self.ctx.poset()
    }

    pub fn chains(&self, family: Family) -> Result<&[Chain]> {
        self.ctx.chains(family)
    }

    pub fn idempotent(&self, target: Target) -> Result<CentralIdempotent> {
        match target {
            Target::One => Ok(self.ctx.blocks.one()),
            Target::Block(i) if i < self.ctx.blocks.blocks().len() => Ok(self.ctx.blocks.block(i).idempotent.clone()),
            Target::Block(i) => Err(HarnessError::NoSuchBlock(i)),
        }
    }

    /// The subgroups `<Frob^m>` of `Gal(k'/F_p)` fixing the target, one per `m0 | m | d`.
    pub fn admissible(&self, target: Target) -> Result<Vec<GaloisSubgroup>> {
        let b = self.idempotent(target)?;
        let m0 = b.minimal_field_degree(&self.ctx.field);
        Ok(galois_subgroups(self.ctx.field.degree(), m0)?)
    }

    fn case(&self, target: Target, t: GaloisSubgroup, family: Option<Family>) -> VerificationCase {
        VerificationCase {
            group: self.name.clone(),
            prime: self.ctx.prime,
            target,
            t,
            family,
        }
    }

    /// Per-chain fixed counts `|IBr(G_tau, b_tau)^T|` over the chain-orbit representatives.
    pub fn chain_ledger(&self, target: Target, t: GaloisSubgroup, family: Family) -> Result<Vec<LedgerEntry>> {
        self.ctx.ledger(&self.idempotent(target)?, t, family)
    }

    /// `sum_tau (-1)^|tau| |IBr(G_tau, b_tau)^T|` with its ledger.
    pub fn alternating_sum(
        &self,
        target: Target,
        t: GaloisSubgroup,
        family: Family,
    ) -> Result<(i64, Vec<LedgerEntry>)> {
        let ledger = self.chain_ledger(target, t, family)?;
        Ok((signed_total(&ledger), ledger))
    }

    /// The alternating sum over one chain family against `|W(G, b)^T|`.
    pub fn verify_alternating_sum(
        &self,
        target: Target,
        t: GaloisSubgroup,
        family: Family,
    ) -> Result<VerificationResult> {
        let (lhs, ledger) = self.alternating_sum(target, t, family)?;
        let rhs = self.ctx.blocks.weights_fixed_count(&self.idempotent(target)?, t)? as i64;
        Ok(VerificationResult {
            check: Check::AlternatingSum,
            case: self.case(target, t, Some(family)),
            lhs,
            rhs,
            holds: lhs == rhs,
            ledger,
        })
    }

    /// The all-chain sum (left, with ledger) against the normal-chain sum (right).
    pub fn verify_family_agreement(&self, target: Target, t: GaloisSubgroup) -> Result<VerificationResult> {
        let (lhs, ledger) = self.alternating_sum(target, t, Family::All)?;
        let (rhs, _) = self.alternating_sum(target, t, Family::Normal)?;
        Ok(VerificationResult {
            check: Check::FamilyAgreement,
            case: self.case(target, t, Some(Family::All)),
            lhs,
            rhs,
            holds: lhs == rhs,
            ledger,
        })
    }

    /// `|IBr(G, b)^T|` against the fixed weights summed over p-subgroup classes; the
    /// ledger has one entry per class.
    pub fn verify_weight_equation(&self, target: Target, t: GaloisSubgroup) -> Result<VerificationResult> {
        let b = self.idempotent(target)?;
        let lhs = self.ctx.system()?.count_fixed_ibr(&b, t)? as i64;
        let ledger = self.ctx.weight_ledger(&b, t)?;
        let rhs = signed_total(&ledger);
        Ok(VerificationResult {
            check: Check::WeightEquation,
            case: self.case(target, t, None),
            lhs,
            rhs,
            holds: lhs == rhs,
            ledger,
        })
    }

    /// Compares the stabilizer of a normal chain `sigma` and its fixed count with those of
    /// the shortened chain in `N_G(P_1)/P_1`, computed there from scratch.
    pub fn verify_inflation_lemma(&self, target: Target, chain: &Chain, t: GaloisSubgroup) -> Result<InflationCheck> {
        if chain.length == 0 || !chain.normal {
            return Err(HarnessError::NotApplicable);
        }
        let b = self.idempotent(target)?;
        let poset = self.ctx.poset()?;
        let p1 = chain.terms[1];
        let q = self.ctx.quotient(p1)?;
        let br = brauer_hom(&self.ctx.blocks.algebra().expand(&b.coords), poset.subgroup(p1));
        if br.iter().all(|&x| x == 0) {
            return Ok(InflationCheck {
                chain: chain.key(),
                t,
                outcome: InflationOutcome::Skipped,
            });
        }
        let qg = q.quotient.group();
        let project = |h: &Subgroup| -> Result<Subgroup> {
            let mut image: Vec<usize> = h
                .elements()
                .iter()
                .map(|&a| q.quotient.project(a).ok_or(GroupError::NotASubgroup))
                .collect::<std::result::Result<_, _>>()?;
            image.sort_unstable();
            image.dedup();
            Ok(qg.subgroup_from_elements(image)?)
        };
        let bar_terms: Vec<Subgroup> = chain.terms[1..]
            .iter()
            .map(|&i| project(poset.subgroup(i)))
            .collect::<Result<_>>()?;
        let bar_stabilizer: Vec<usize> = (0..qg.order())
            .filter(|&x| bar_terms.iter().all(|s| s.is_normalized_by(x)))
            .collect();
        let bar_stabilizer = qg.subgroup_from_elements(bar_stabilizer)?;
        let stabilizers_agree = project(&chain.stabilizer)? == bar_stabilizer;

        let lhs = self.ctx.chain_count(&b, t, chain)?;
        let c = self.ctx.quotient_image(&q, &b)?;
        let top = bar_terms.last().expect("chain has a nontrivial term");
        let rhs = q.context.stabilizer_count(&c, t, top, &bar_stabilizer)?;
        Ok(InflationCheck {
            chain: chain.key(),
            t,
            outcome: InflationOutcome::Checked {
                stabilizers_agree,
                lhs,
                rhs,
            },
        })
    }

    /// The inflation check on every nontrivial normal chain representative.
    pub fn verify_inflation_all(&self, target: Target, t: GaloisSubgroup) -> Result<Vec<InflationCheck>> {
        self.ctx
            .chains(Family::Normal)?
            .par_iter()
            .filter(|c| c.length > 0)
            .map(|c| self.verify_inflation_lemma(target, c, t))
            .collect()
    }

    /// Nontrivial normal chains of `G` (left, with ledger) against the sum over nontrivial
    /// p-subgroup classes `P` of the same expression evaluated in `N_G(P)/P` with its own
    /// chain enumeration (right). For a defect-zero block both sides must vanish.
    pub fn verify_recursion_lemma(&self, target: Target, t: GaloisSubgroup) -> Result<VerificationResult> {
        let b = self.idempotent(target)?;
        let ledger: Vec<LedgerEntry> = self
            .ctx
            .ledger(&b, t, Family::Normal)?
            .into_iter()
            .filter(|e| e.length > 0)
            .map(|e| LedgerEntry { sign: -e.sign, ..e })
            .collect();
        let lhs = signed_total(&ledger);
        let rhs = self.ctx.recursion_right_side(&b, t)?;
        let defect_zero = matches!(target, Target::Block(i) if self.ctx.blocks.block(i).defect == 0);
        Ok(VerificationResult {
            check: Check::Recursion,
            case: self.case(target, t, Some(Family::Normal)),
            lhs,
            rhs,
            holds: lhs == rhs && (!defect_zero || lhs == 0),
            ledger,
        })
    }

    /// Multiplicity of the simple functor at the trivial pair in the projective functor of
    /// `kGb`, fixed by `T`; it is `|IBr(G, b)^T|`.
    pub fn functorial_multiplicity(&self, target: Target, t: GaloisSubgroup) -> Result<usize> {
        Ok(self.ctx.system()?.count_fixed_ibr(&self.idempotent(target)?, t)?)
    }

    /// The all-chain alternating sum of functorial multiplicities against `|W(G, b)^T|`,
    /// which is 0 for blocks of positive defect.
    pub fn verify_functorial_sum(&self, target: Target, t: GaloisSubgroup) -> Result<VerificationResult> {
        let (lhs, ledger) = self.alternating_sum(target, t, Family::All)?;
        let rhs = self.ctx.blocks.weights_fixed_count(&self.idempotent(target)?, t)? as i64;
        let positive_defect = matches!(target, Target::Block(i) if self.ctx.blocks.block(i).defect > 0);
        Ok(VerificationResult {
            check: Check::FunctorialSum,
            case: self.case(target, t, Some(Family::All)),
            lhs,
            rhs,
            holds: lhs == rhs && (!positive_defect || lhs == 0),
            ledger,
        })
    }

    /// `m -> |IBr(G, b)^<Frob^m>|` over the admissible exponents.
    pub fn ibr_profile(&self, target: Target) -> Result<BTreeMap<u32, usize>> {
        let b = self.idempotent(target)?;
        let system = self.ctx.system()?;
        self.admissible(target)?
            .into_iter()
            .map(|t| Ok((t.generator_exponent(), system.count_fixed_ibr(&b, t)?)))
            .collect()
    }

    /// `m -> sum_P |W(N_G(P)/P, b_P)^<Frob^m>|` over the admissible exponents.
    pub fn weight_profile(&self, target: Target) -> Result<BTreeMap<u32, usize>> {
        let b = self.idempotent(target)?;
        self.admissible(target)?
            .into_iter()
            .map(|t| {
                let total = self.ctx.weight_ledger(&b, t)?.iter().map(|e| e.count).sum();
                Ok((t.generator_exponent(), total))
            })
            .collect()
    }

    /// Compares block `i` with its `Frob^m` conjugate.
    pub fn conjugate_invariants(&self, i: usize, m: u32) -> Result<ConjugateComparison> {
        let blocks = &self.ctx.blocks;
        if i >= blocks.blocks().len() {
            return Err(HarnessError::NoSuchBlock(i));
        }
        let j = blocks.galois_conjugate(i, m);
        let (bi, bj) = (Target::Block(i), Target::Block(j));
        let system = self.ctx.system()?;
        let ibr_sizes = (
            system.ibr(&self.idempotent(bi)?)?.len(),
            system.ibr(&self.idempotent(bj)?)?.len(),
        );
        let mut ledgers_agree = true;
        let mut weights_agree = true;
        for t in self.admissible(bi)? {
            for family in [Family::All, Family::Normal] {
                ledgers_agree &= self.chain_ledger(bi, t, family)? == self.chain_ledger(bj, t, family)?;
            }
            let wi = self.ctx.weight_ledger(&self.idempotent(bi)?, t)?;
            let wj = self.ctx.weight_ledger(&self.idempotent(bj)?, t)?;
            weights_agree &= wi == wj
                && blocks.weights_fixed_count(&self.idempotent(bi)?, t)?
                    == blocks.weights_fixed_count(&self.idempotent(bj)?, t)?;
        }
        Ok(ConjugateComparison {
            block: i,
            conjugate: j,
            m,
            defects: (blocks.block(i).defect, blocks.block(j).defect),
            ibr_sizes,
            ledgers_agree,
            weights_agree,
        })
    }
}

/// Fixed-point counts of a finite `Z/d`-set with the given orbit sizes, one per subgroup
/// `<m>` with `m | d`: an orbit of size `s` is fixed pointwise by `<m>` iff `s | m`.
pub fn fixed_point_profile(orbit_sizes: &[u32], d: u32) -> Result<BTreeMap<u32, usize>> {
    if d == 0 || orbit_sizes.iter().any(|&s| s == 0 || !d.is_multiple_of(s)) {
        return Err(HarnessError::ProfileMismatch);
    }
    Ok(divisors(d)
        .into_iter()
        .map(|m| {
            let fixed = orbit_sizes.iter().filter(|&&s| m % s == 0).map(|&s| s as usize).sum();
            (m, fixed)
        })
        .collect())
}

/// Whether two finite sets with an action of a cyclic group of order `d` are isomorphic,
/// judged by their fixed-point counts on every subgroup `<m>`, `m | d`.
pub fn permutation_iso_check(x: &BTreeMap<u32, usize>, y: &BTreeMap<u32, usize>, d: u32) -> Result<bool> {
    let valid = |p: &BTreeMap<u32, usize>| d > 0 && p.keys().all(|&m| m > 0 && d.is_multiple_of(m));
    if !valid(x) || !valid(y) || !x.keys().eq(y.keys()) {
        return Err(HarnessError::ProfileMismatch);
    }
    Ok(x == y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    fn trivial_t(c: &CaseContext) -> GaloisSubgroup {
        GaloisSubgroup::trivial(c.field().degree())
    }

    #[test]
    fn cyclic_p_cancels() {
        let c = CaseContext::new("C3", &cyclic(3).unwrap(), 3, 0).unwrap();
        let t = trivial_t(&c);
        let (sum, ledger) = c.alternating_sum(Target::One, t, Family::Normal).unwrap();
        assert_eq!(sum, 0);
        assert_eq!(ledger.iter().map(|e| e.count).collect::<Vec<_>>(), vec![1, 1]);
        let r = c.verify_recursion_lemma(Target::Block(0), t).unwrap();
        assert_eq!((r.lhs, r.rhs), (1, 1));
    }

    #[test]
    fn s3_at_3_weight_ledger() {
        let c = CaseContext::new("S3", &symmetric(3).unwrap(), 3, 0).unwrap();
        let t = trivial_t(&c);
        let r = c.verify_weight_equation(Target::Block(0), t).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 2));
        assert_eq!(
            r.ledger.iter().map(|e| (e.length, e.count)).collect::<Vec<_>>(),
            vec![(0, 0), (1, 2)]
        );
        let r = c.verify_recursion_lemma(Target::Block(0), t).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, 2);
    }

    #[test]
    fn s3_at_2_identity_sum_is_one() {
        let c = CaseContext::new("S3", &symmetric(3).unwrap(), 2, 0).unwrap();
        let r = c
            .verify_alternating_sum(Target::One, trivial_t(&c), Family::Normal)
            .unwrap();
        assert_eq!((r.lhs, r.rhs), (1, 1));
        assert!(r.ledger_matches());
    }

    #[test]
    fn profile_examples() {
        let x = fixed_point_profile(&[2], 2).unwrap();
        let y = fixed_point_profile(&[1, 1], 2).unwrap();
        assert_eq!(x[&2], 2);
        assert_eq!(x[&1], 0);
        assert!(!permutation_iso_check(&x, &y, 2).unwrap());
        assert!(permutation_iso_check(&x, &x, 2).unwrap());
        let z: BTreeMap<u32, usize> = [(1, 0)].into();
        assert_eq!(permutation_iso_check(&x, &z, 2), Err(HarnessError::ProfileMismatch));
    }
}
