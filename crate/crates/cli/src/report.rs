//! The report model, its JSON form and a markdown rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub guards: Guards,
    pub censuses: Vec<Census>,
    pub cases: Vec<CaseRecord>,
    pub inflation: Vec<InflationRecord>,
    pub conjugates: Vec<ConjugateRecord>,
    pub oracles: Vec<OracleRecord>,
    pub failures: Vec<EntryFailure>,
    /// Wall-clock data; the only part allowed to differ between identical runs.
    pub timings: Timings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    pub max_order: usize,
    pub subgroup_cap: usize,
    pub chain_cap: usize,
    pub chop_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub index: usize,
    pub defect: u32,
    pub min_field_degree: u32,
    pub support_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusBlock {
    #[serde(flatten)]
    pub block: BlockRecord,
    pub principal: bool,
    pub ibr: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub group: String,
    pub order: usize,
    pub prime: u32,
    pub field_degree: u32,
    pub p_regular_classes: usize,
    pub p_subgroups: usize,
    pub p_subgroup_classes: usize,
    pub chain_orbits: BTreeMap<String, usize>,
    pub blocks: Vec<CensusBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerRecord {
    pub chain: String,
    pub length: usize,
    pub count: usize,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub group: String,
    pub order: usize,
    pub prime: u32,
    pub check: String,
    /// `block i` or `1`.
    pub target: String,
    /// Present when the target is a single block.
    pub block: Option<BlockRecord>,
    pub family: Option<String>,
    #[serde(rename = "T_exponent")]
    pub t_exponent: u32,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub ledger: Vec<LedgerRecord>,
}

impl CaseRecord {
    pub fn ledger_total(&self) -> i64 {
        self.ledger.iter().map(|e| e.sign * e.count as i64).sum()
    }

    /// The weight equation's ledger records the right side; the others record the left.
    pub fn ledger_matches(&self) -> bool {
        let side = if self.check == "weight-equation" {
            self.rhs
        } else {
            self.lhs
        };
        self.ledger_total() == side
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InflationRecord {
    pub group: String,
    pub prime: u32,
    pub target: String,
    pub chain: String,
    #[serde(rename = "T_exponent")]
    pub t_exponent: u32,
    pub skipped: bool,
    pub stabilizers_agree: Option<bool>,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugateRecord {
    pub group: String,
    pub prime: u32,
    pub block: usize,
    pub m: u32,
    pub conjugate: usize,
    pub defects: [u32; 2],
    pub ibr: [usize; 2],
    pub ledgers_agree: bool,
    pub weights_agree: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub name: String,
    pub group: String,
    pub prime: u32,
    pub m: Option<u32>,
    pub expected: usize,
    pub actual: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryFailure {
    pub group: String,
    pub prime: Option<u32>,
    /// `guard` when a size guard tripped, `error` otherwise.
    pub kind: String,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u64,
    pub per_case_ms: BTreeMap<String, u64>,
}

impl Report {
    /// Everything except the timings, as canonical JSON text.
    pub fn payload(&self) -> String {
        let mut r = self.clone();
        r.timings = Timings::default();
        serde_json::to_string(&r).expect("report serializes")
    }

    pub fn failed_checks(&self) -> usize {
        self.cases.iter().filter(|c| !c.holds).count()
            + self.inflation.iter().filter(|c| !c.holds).count()
            + self.conjugates.iter().filter(|c| !c.holds).count()
            + self.oracles.iter().filter(|c| !c.holds).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_checks() == 0 && self.failures.is_empty()
    }

    /// 0 when every check passed and no entry failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Weight-count report\n");
        let _ = writeln!(
            s,
            "version {}, seed {}, max order {}\n",
            self.version, self.seed, self.guards.max_order
        );
        let _ = writeln!(
            s,
            "{} checks, {} failed, {} entries not run\n",
            self.cases.len() + self.inflation.len() + self.conjugates.len() + self.oracles.len(),
            self.failed_checks(),
            self.failures.len()
        );

        let _ = writeln!(s, "## Block census\n");
        let _ = writeln!(s, "| group | order | p | k' degree | p-regular classes | p-subgroup classes | blocks (defect, min field, IBr) |");
        let _ = writeln!(s, "|---|---|---|---|---|---|---|");
        for c in &self.censuses {
            let blocks: Vec<String> = c
                .blocks
                .iter()
                .map(|b| format!("({}, {}, {})", b.block.defect, b.block.min_field_degree, b.ibr))
                .collect();
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} |",
                c.group,
                c.order,
                c.prime,
                c.field_degree,
                c.p_regular_classes,
                c.p_subgroup_classes,
                blocks.join(" ")
            );
        }

        let _ = writeln!(s, "\n## Checks\n");
        let _ = writeln!(s, "| group | p | check | cases | passed |");
        let _ = writeln!(s, "|---|---|---|---|---|");
        let mut tally: BTreeMap<(String, u32, String), (usize, usize)> = BTreeMap::new();
        let mut bump = |g: &str, p: u32, check: &str, ok: bool| {
            let e = tally.entry((g.to_string(), p, check.to_string())).or_default();
            e.0 += 1;
            e.1 += ok as usize;
        };
        for c in &self.cases {
            bump(&c.group, c.prime, &c.check, c.holds);
        }
        for c in &self.inflation {
            bump(&c.group, c.prime, "inflation", c.holds);
        }
        for c in &self.conjugates {
            bump(&c.group, c.prime, "conjugate-invariants", c.holds);
        }
        for c in &self.oracles {
            bump(&c.group, c.prime, &c.name, c.holds);
        }
        let order: BTreeMap<&str, usize> = self
            .censuses
            .iter()
            .enumerate()
            .map(|(i, c)| (c.group.as_str(), i))
            .collect();
        let mut rows: Vec<_> = tally.into_iter().collect();
        rows.sort_by_key(|((g, p, check), _)| (order.get(g.as_str()).copied(), *p, check.clone()));
        for ((g, p, check), (n, ok)) in rows {
            let _ = writeln!(s, "| {g} | {p} | {check} | {n} | {ok} |");
        }

        let failing: Vec<&CaseRecord> = self.cases.iter().filter(|c| !c.holds).collect();
        if !failing.is_empty() {
            let _ = writeln!(s, "\n## Failed identities\n");
            for c in failing {
                let _ = writeln!(
                    s,
                    "- {} p={} {} {} T=<Frob^{}>: lhs {} rhs {}",
                    c.group, c.prime, c.check, c.target, c.t_exponent, c.lhs, c.rhs
                );
                for e in &c.ledger {
                    let _ = writeln!(
                        s,
                        "  - chain {} (length {}): {} x {}",
                        e.chain, e.length, e.sign, e.count
                    );
                }
            }
        }
        if !self.failures.is_empty() {
            let _ = writeln!(s, "\n## Entries not run\n");
            for f in &self.failures {
                let p = f.prime.map_or(String::new(), |p| format!(" p={p}"));
                let _ = writeln!(s, "- {}{}: {} ({})", f.group, p, f.error, f.kind);
            }
        }
        s
    }

    pub fn write_json(&self, path: &Path) -> Result<(), CliError> {
        write(path, &self.to_json())
    }

    pub fn write_markdown(&self, path: &Path) -> Result<(), CliError> {
        write(path, &self.to_markdown())
    }
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
