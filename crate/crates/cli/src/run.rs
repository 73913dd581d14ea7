//! Corpus orchestration: one job per (group, prime), merged in corpus order.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use bgawc_core::blocks::central_character_oracle;
use bgawc_core::group::{GroupError, PermGroup};
use bgawc_core::harness::{CaseContext, HarnessError, InflationOutcome, Target, VerificationResult};
use bgawc_core::modrep::{class_count_oracle, regular_module_simples, DEFAULT_CHOP_BUDGET};
use bgawc_core::psub::{Family, DEFAULT_CHAIN_CAP, DEFAULT_SUBGROUP_CAP};
use bgawc_core::{gf, rng};
use rayon::prelude::*;

use crate::corpus::CorpusEntry;
use crate::report::*;
use crate::CliError;

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "BGAWC_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilySelection {
    All,
    Normal,
    Both,
}

impl FamilySelection {
    pub fn families(self) -> Vec<Family> {
        match self {
            FamilySelection::All => vec![Family::All],
            FamilySelection::Normal => vec![Family::Normal],
            FamilySelection::Both => vec![Family::All, Family::Normal],
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub entries: Vec<CorpusEntry>,
    pub seed: u64,
    pub max_order: usize,
    pub families: FamilySelection,
    /// Restricts every entry to this prime.
    pub prime: Option<u32>,
    /// Worker count; falls back to `BGAWC_THREADS`, then to rayon's default.
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            entries: crate::corpus::default_corpus(),
            seed: 0,
            max_order: bgawc_core::group::DEFAULT_ORDER_GUARD,
            families: FamilySelection::Both,
            prime: None,
            threads: None,
        }
    }
}

impl RunConfig {
    fn worker_count(&self) -> Option<usize> {
        self.threads
            .or_else(|| std::env::var(THREADS_VAR).ok()?.parse().ok())
            .filter(|&n| n > 0)
    }
}

#[derive(Default)]
struct JobOutput {
    census: Option<Census>,
    cases: Vec<CaseRecord>,
    inflation: Vec<InflationRecord>,
    conjugates: Vec<ConjugateRecord>,
    oracles: Vec<OracleRecord>,
    failures: Vec<EntryFailure>,
    elapsed_ms: u64,
}

enum Job {
    Case {
        name: String,
        group: Arc<PermGroup>,
        prime: u32,
    },
    Failed(EntryFailure),
}

fn failure(group: &str, prime: Option<u32>, err: &CliError) -> EntryFailure {
    let guard = matches!(
        err,
        CliError::Group(GroupError::GuardExceeded { .. })
            | CliError::Harness(HarnessError::Group(GroupError::GuardExceeded { .. }))
    );
    EntryFailure {
        group: group.to_string(),
        prime,
        kind: if guard { "guard" } else { "error" }.to_string(),
        error: err.to_string(),
    }
}

fn jobs(config: &RunConfig) -> Vec<Job> {
    let mut out = Vec::new();
    for e in &config.entries {
        match e.resolve(config.max_order) {
            Ok(g) => {
                let primes = match config.prime {
                    Some(p) => vec![p],
                    None => e.primes_for(g.order()),
                };
                for p in primes {
                    if !gf::is_prime(p as u64) {
                        let err = CliError::BadPrime { p, order: g.order() };
                        out.push(Job::Failed(failure(&e.name, Some(p), &err)));
                        continue;
                    }
                    out.push(Job::Case {
                        name: e.name.clone(),
                        group: g.clone(),
                        prime: p,
                    });
                }
            }
            Err(err) => out.push(Job::Failed(failure(&e.name, None, &err))),
        }
    }
    out
}

/// Runs every check on every (group, prime) of the corpus. Individual failures are
/// recorded in the report; they do not stop the run.
pub fn run_corpus(config: &RunConfig) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.worker_count() {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| CliError::Config(e.to_string()))?;
    let jobs = jobs(config);
    let outputs: Vec<JobOutput> = pool.install(|| {
        jobs.par_iter()
            .map(|job| match job {
                Job::Failed(f) => JobOutput {
                    failures: vec![f.clone()],
                    ..Default::default()
                },
                Job::Case { name, group, prime } => {
                    let t0 = Instant::now();
                    let mut out = JobOutput::default();
                    if let Err(err) = run_case(name, group, *prime, config, &mut out) {
                        out.failures.push(failure(name, Some(*prime), &err));
                    }
                    out.elapsed_ms = t0.elapsed().as_millis() as u64;
                    out
                }
            })
            .collect()
    });

    let mut report = Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: config.seed,
        guards: Guards {
            max_order: config.max_order,
            subgroup_cap: DEFAULT_SUBGROUP_CAP,
            chain_cap: DEFAULT_CHAIN_CAP,
            chop_budget: DEFAULT_CHOP_BUDGET,
        },
        censuses: Vec::new(),
        cases: Vec::new(),
        inflation: Vec::new(),
        conjugates: Vec::new(),
        oracles: Vec::new(),
        failures: Vec::new(),
        timings: Timings::default(),
    };
    for (job, out) in jobs.iter().zip(outputs) {
        if let Job::Case { name, prime, .. } = job {
            report
                .timings
                .per_case_ms
                .insert(format!("{name}/p{prime}"), out.elapsed_ms);
        }
        report.censuses.extend(out.census);
        report.cases.extend(out.cases);
        report.inflation.extend(out.inflation);
        report.conjugates.extend(out.conjugates);
        report.oracles.extend(out.oracles);
        report.failures.extend(out.failures);
    }
    report.timings.total_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn block_record(c: &CaseContext, i: usize) -> BlockRecord {
    let b = c.blocks().block(i);
    BlockRecord {
        index: i,
        defect: b.defect,
        min_field_degree: b.minimal_field_degree,
        support_size: b.idempotent.support_size(c.blocks().algebra()),
    }
}

/// Block census for one (group, prime).
pub fn census(c: &CaseContext, families: &[Family]) -> Result<Census, CliError> {
    let g = c.group();
    let system = c.system()?;
    let poset = c.poset()?;
    let mut chain_orbits = BTreeMap::new();
    for &f in families {
        chain_orbits.insert(f.to_string(), c.chains(f)?.len());
    }
    let blocks = (0..c.blocks().blocks().len())
        .map(|i| {
            Ok(CensusBlock {
                block: block_record(c, i),
                principal: c.blocks().block(i).principal,
                ibr: system.simples_in_block(i).len(),
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(Census {
        group: c.name().to_string(),
        order: g.order(),
        prime: c.prime(),
        field_degree: c.field().degree(),
        p_regular_classes: g.p_regular_classes(c.prime()).len(),
        p_subgroups: poset.len(),
        p_subgroup_classes: poset.orbit_reps().len(),
        chain_orbits,
        blocks,
    })
}

fn case_record(c: &CaseContext, r: &VerificationResult) -> CaseRecord {
    let block = match r.case.target {
        Target::Block(i) => Some(block_record(c, i)),
        Target::One => None,
    };
    CaseRecord {
        group: c.name().to_string(),
        order: c.group().order(),
        prime: c.prime(),
        check: r.check.name().to_string(),
        target: r.case.target.to_string(),
        block,
        family: r.case.family.map(|f| f.to_string()),
        t_exponent: r.case.t.generator_exponent(),
        lhs: r.lhs,
        rhs: r.rhs,
        holds: r.holds,
        ledger: r
            .ledger
            .iter()
            .map(|e| LedgerRecord {
                chain: e.chain.clone(),
                length: e.length,
                count: e.count,
                sign: e.sign,
            })
            .collect(),
    }
}

/// Brauer count, regular-module, central-character and Galois class-count oracles.
pub fn oracles(c: &CaseContext, seed: u64) -> Result<Vec<OracleRecord>, CliError> {
    let g = c.group();
    let p = c.prime();
    let system = c.system()?;
    let record = |name: &str, m: Option<u32>, expected: usize, actual: usize| OracleRecord {
        name: name.to_string(),
        group: c.name().to_string(),
        prime: p,
        m,
        expected,
        actual,
        holds: expected == actual,
    };
    let regular = g.p_regular_classes(p).len();
    let ibr_total: usize = (0..c.blocks().blocks().len())
        .map(|i| system.simples_in_block(i).len())
        .sum();
    let mut out = vec![record("brauer-count", None, regular, ibr_total)];
    let mut r = rng::stream(seed, &format!("{}/p{}/regular", c.name(), p));
    let simples = regular_module_simples(g, c.field(), &mut r)?;
    out.push(record("regular-module", None, regular, simples.len()));
    let mut r = rng::stream(seed, &format!("{}/p{}/characters", c.name(), p));
    let characters = central_character_oracle(c.blocks().algebra(), &mut r)?;
    let agree = c.blocks().check_oracle().is_ok();
    out.push(OracleRecord {
        holds: agree && characters.len() == c.blocks().blocks().len(),
        ..record("central-characters", None, characters.len(), c.blocks().blocks().len())
    });
    for m in gf::divisors(c.field().degree()) {
        out.push(record(
            "galois-count",
            Some(m),
            class_count_oracle(g, p, m),
            system.count_fixed_simples(m),
        ));
    }
    Ok(out)
}

fn run_case(
    name: &str,
    group: &Arc<PermGroup>,
    p: u32,
    config: &RunConfig,
    out: &mut JobOutput,
) -> Result<(), CliError> {
    let c = CaseContext::new(name, group, p, config.seed)?;
    let families = config.families.families();
    out.census = Some(census(&c, &families)?);
    out.oracles = oracles(&c, config.seed)?;

    let n = c.blocks().blocks().len();
    let mut targets: Vec<Target> = (0..n).map(Target::Block).collect();
    targets.push(Target::One);
    for &target in &targets {
        let is_block = matches!(target, Target::Block(_));
        for t in c.admissible(target)? {
            let mut results = Vec::new();
            for &f in &families {
                results.push(c.verify_alternating_sum(target, t, f)?);
            }
            if config.families == FamilySelection::Both {
                results.push(c.verify_family_agreement(target, t)?);
            }
            if is_block {
                results.push(c.verify_weight_equation(target, t)?);
                results.push(c.verify_recursion_lemma(target, t)?);
            }
            if families.contains(&Family::All) {
                results.push(c.verify_functorial_sum(target, t)?);
            }
            out.cases.extend(results.iter().map(|r| case_record(&c, r)));
            for i in c.verify_inflation_all(target, t)? {
                let (skipped, stabilizers_agree, lhs, rhs) = match i.outcome {
                    InflationOutcome::Skipped => (true, None, None, None),
                    InflationOutcome::Checked {
                        stabilizers_agree,
                        lhs,
                        rhs,
                    } => (false, Some(stabilizers_agree), Some(lhs), Some(rhs)),
                };
                out.inflation.push(InflationRecord {
                    group: name.to_string(),
                    prime: p,
                    target: target.to_string(),
                    chain: i.chain.clone(),
                    t_exponent: t.generator_exponent(),
                    skipped,
                    stabilizers_agree,
                    lhs,
                    rhs,
                    holds: i.holds(),
                });
            }
        }
    }
    for i in 0..n {
        for m in 0..c.field().degree() {
            let r = c.conjugate_invariants(i, m)?;
            out.conjugates.push(ConjugateRecord {
                group: name.to_string(),
                prime: p,
                block: i,
                m,
                conjugate: r.conjugate,
                defects: [r.defects.0, r.defects.1],
                ibr: [r.ibr_sizes.0, r.ibr_sizes.1],
                ledgers_agree: r.ledgers_agree,
                weights_agree: r.weights_agree,
                holds: r.holds(),
            });
        }
    }
    Ok(())
}
