use std::path::PathBuf;
use std::process::ExitCode;

use bgawc::run::{census, oracles};
use bgawc::{entry_for, run_corpus, CliError, FamilySelection, Report, RunConfig};
use bgawc_core::group::DEFAULT_ORDER_GUARD;
use bgawc_core::harness::CaseContext;
use clap::{Args, Parser, Subcommand};

/// Blocks, p-subgroup chains and Galois-refined weight-count identities for small
/// permutation groups.
#[derive(Parser)]
#[command(name = "bgawc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the block census of a group at one or all primes.
    Blocks(GroupArgs),
    /// List chain-orbit representatives of p-subgroup chains.
    Chains(GroupArgs),
    /// Run every check on one group.
    Verify(GroupArgs),
    /// Run every check on the corpus (the default corpus unless groups are given).
    Report(ReportArgs),
}

#[derive(Args)]
struct Common {
    /// Chain families summed over.
    #[arg(long, value_enum, default_value = "both")]
    family: FamilySelection,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Groups larger than this are refused.
    #[arg(long, default_value_t = DEFAULT_ORDER_GUARD)]
    max_order: usize,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the markdown report here.
    #[arg(long)]
    markdown: Option<PathBuf>,
}

#[derive(Args)]
struct GroupArgs {
    /// Builtin name (`symmetric 4`, `C3xS3`, `SL(2,3)`, ...) or a group file.
    #[arg(long)]
    group: String,
    /// Restrict to this prime; defaults to every prime dividing the order.
    #[arg(long)]
    prime: Option<u32>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ReportArgs {
    /// Groups to run instead of the default corpus; may be repeated.
    #[arg(long)]
    group: Vec<String>,
    #[arg(long)]
    prime: Option<u32>,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn config(groups: &[String], prime: Option<u32>, common: &Common) -> Result<RunConfig, CliError> {
    let mut config = RunConfig {
        seed: common.seed,
        max_order: common.max_order,
        families: common.family,
        prime,
        ..RunConfig::default()
    };
    if !groups.is_empty() {
        config.entries = groups.iter().map(|g| entry_for(g)).collect();
    }
    // Unparseable specifications are configuration errors; guard trips are reported.
    for e in &config.entries {
        e.presentation()?;
    }
    if let Some(p) = prime {
        if !bgawc_core::gf::is_prime(p as u64) {
            return Err(CliError::Config(format!("{p} is not a prime")));
        }
    }
    Ok(config)
}

fn emit(report: &Report, common: &Common) -> Result<u8, CliError> {
    if let Some(path) = &common.json {
        report.write_json(path)?;
    }
    if let Some(path) = &common.markdown {
        report.write_markdown(path)?;
    }
    if common.json.is_none() && common.markdown.is_none() {
        print!("{}", report.to_markdown());
    } else {
        println!(
            "{} censuses, {} identity cases, {} failed checks, {} entries not run",
            report.censuses.len(),
            report.cases.len(),
            report.failed_checks(),
            report.failures.len()
        );
    }
    Ok(report.exit_code() as u8)
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Report(args) => {
            let config = config(&args.group, args.prime, &args.common)?;
            emit(&run_corpus(&config)?, &args.common)
        }
        Command::Verify(args) => {
            let config = config(std::slice::from_ref(&args.group), args.prime, &args.common)?;
            emit(&run_corpus(&config)?, &args.common)
        }
        Command::Blocks(args) => {
            let config = config(std::slice::from_ref(&args.group), args.prime, &args.common)?;
            let entry = &config.entries[0];
            let g = entry.resolve(config.max_order)?;
            let primes = args.prime.map_or_else(|| entry.primes_for(g.order()), |p| vec![p]);
            let mut censuses = Vec::new();
            let mut all_hold = true;
            for p in primes {
                let c = CaseContext::new(&entry.name, &g, p, config.seed)?;
                let cen = census(&c, &config.families.families())?;
                let checks = oracles(&c, config.seed)?;
                all_hold &= checks.iter().all(|o| o.holds);
                println!(
                    "{} (order {}) at p = {}: splitting field degree {}, {} p-regular classes, {} blocks",
                    cen.group,
                    cen.order,
                    cen.prime,
                    cen.field_degree,
                    cen.p_regular_classes,
                    cen.blocks.len()
                );
                for b in &cen.blocks {
                    println!(
                        "  block {}: defect {}, minimal field degree {}, support {}, {} simple modules{}",
                        b.block.index,
                        b.block.defect,
                        b.block.min_field_degree,
                        b.block.support_size,
                        b.ibr,
                        if b.principal { ", principal" } else { "" }
                    );
                }
                for o in checks.iter().filter(|o| !o.holds) {
                    println!("  oracle {} failed: expected {}, got {}", o.name, o.expected, o.actual);
                }
                censuses.push(cen);
            }
            if let Some(path) = &args.common.json {
                let text = serde_json::to_string_pretty(&censuses)?;
                std::fs::write(path, text).map_err(|e| CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            Ok(if all_hold { 0 } else { 1 })
        }
        Command::Chains(args) => {
            let config = config(std::slice::from_ref(&args.group), args.prime, &args.common)?;
            let entry = &config.entries[0];
            let g = entry.resolve(config.max_order)?;
            let primes = args.prime.map_or_else(|| entry.primes_for(g.order()), |p| vec![p]);
            for p in primes {
                let c = CaseContext::new(&entry.name, &g, p, config.seed)?;
                let poset = c.poset()?;
                println!(
                    "{} at p = {}: {} p-subgroups in {} classes",
                    entry.name,
                    p,
                    poset.len(),
                    poset.orbit_reps().len()
                );
                for &i in poset.orbit_reps() {
                    println!(
                        "  P{}: order {}, |N_G(P)| = {}",
                        i,
                        poset.subgroup(i).order(),
                        poset.normalizer(i).order()
                    );
                }
                for f in config.families.families() {
                    let chains = c.chains(f)?;
                    println!("  {} chains: {} orbit representatives", f, chains.len());
                    for ch in chains {
                        println!(
                            "    {} length {}, |G_sigma| = {}, orbit size {}{}",
                            ch.key(),
                            ch.length,
                            ch.stabilizer.order(),
                            ch.orbit_size(),
                            if ch.normal { ", normal" } else { "" }
                        );
                    }
                }
            }
            Ok(0)
        }
    }
}
