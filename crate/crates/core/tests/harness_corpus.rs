mod common;

use std::time::Instant;

use bgawc_core::harness::{CaseContext, InflationOutcome, Target};
use bgawc_core::psub::Family;

#[test]
fn identities_hold_on_corpus() {
    for (name, g, primes) in common::cases() {
        for p in primes {
            let start = Instant::now();
            let c = CaseContext::new(name, &g, p, 0).unwrap();
            let mut targets: Vec<Target> = (0..c.blocks().blocks().len()).map(Target::Block).collect();
            targets.push(Target::One);
            let mut checks = 0;
            for &target in &targets {
                for t in c.admissible(target).unwrap() {
                    let results = [
                        c.verify_alternating_sum(target, t, Family::Normal).unwrap(),
                        c.verify_alternating_sum(target, t, Family::All).unwrap(),
                        c.verify_family_agreement(target, t).unwrap(),
                        c.verify_weight_equation(target, t).unwrap(),
                        c.verify_recursion_lemma(target, t).unwrap(),
                        c.verify_functorial_sum(target, t).unwrap(),
                    ];
                    for r in &results {
                        assert!(r.holds, "{name} p={p} {target} m={}: {r:?}", t.generator_exponent());
                        assert!(r.ledger_matches());
                    }
                    for i in c.verify_inflation_all(target, t).unwrap() {
                        assert!(i.holds(), "{name} p={p} {target}: {i:?}");
                    }
                    checks += 1;
                }
            }
            eprintln!(
                "{name} p={p}: {} blocks, {checks} (b, T) cases, {:?}",
                targets.len() - 1,
                start.elapsed()
            );
        }
    }
}

#[test]
fn s3_at_3_inflation_on_a3() {
    let g = bgawc_core::group::symmetric(3).unwrap();
    let c = CaseContext::new("S3", &g, 3, 0).unwrap();
    let t = c.admissible(Target::Block(0)).unwrap().pop().unwrap();
    let chain = c
        .chains(Family::Normal)
        .unwrap()
        .iter()
        .find(|ch| ch.length == 1)
        .unwrap()
        .clone();
    let r = c.verify_inflation_lemma(Target::Block(0), &chain, t).unwrap();
    assert_eq!(
        r.outcome,
        InflationOutcome::Checked {
            stabilizers_agree: true,
            lhs: 2,
            rhs: 2
        }
    );
}

#[test]
fn conjugate_blocks_share_invariants() {
    for (name, g, primes) in common::cases() {
        for p in primes {
            let c = CaseContext::new(name, &g, p, 0).unwrap();
            let d = c.field().degree();
            for i in 0..c.blocks().blocks().len() {
                for m in 0..d {
                    let r = c.conjugate_invariants(i, m).unwrap();
                    assert!(r.holds(), "{name} p={p}: {r:?}");
                    if m == 0 {
                        assert_eq!(r.conjugate, i);
                    }
                }
            }
        }
    }
}

#[test]
fn c7_at_2_nonprincipal_blocks_form_frobenius_orbits_of_size_three() {
    let g = bgawc_core::group::cyclic(7).unwrap();
    let c = CaseContext::new("C7", &g, 2, 0).unwrap();
    let blocks = c.blocks();
    assert_eq!(c.field().degree(), 3);
    let mut seen = vec![false; blocks.blocks().len()];
    let mut orbits = Vec::new();
    for b in blocks.blocks().iter().filter(|b| !b.principal) {
        assert_eq!((b.defect, b.minimal_field_degree), (0, 3));
        if seen[b.index] {
            continue;
        }
        let orbit: Vec<usize> = (0..3).map(|m| blocks.galois_conjugate(b.index, m)).collect();
        orbit.iter().for_each(|&j| seen[j] = true);
        orbits.push(orbit);
    }
    assert_eq!(orbits.len(), 2);
    assert!(orbits.iter().all(|o| o[0] != o[1] && o[1] != o[2] && o[0] != o[2]));
    let r = c.conjugate_invariants(1, 1).unwrap();
    assert_ne!(r.conjugate, 1);
    assert_eq!((r.defects, r.ibr_sizes), ((0, 0), (1, 1)));
}

#[test]
fn fixed_counts_depend_only_on_the_generated_subgroup() {
    for (name, g, primes) in common::cases() {
        for p in primes {
            let c = CaseContext::new(name, &g, p, 0).unwrap();
            let d = c.field().degree();
            let s = c.system().unwrap();
            for m in 0..2 * d {
                let gcd = (1..=d).rev().find(|k| d.is_multiple_of(*k) && m % k == 0).unwrap();
                assert_eq!(
                    s.count_fixed_simples(m),
                    s.count_fixed_simples(gcd),
                    "{name} p={p} m={m}"
                );
            }
        }
    }
}
