#![allow(dead_code)]

use std::sync::Arc;

use bgawc_core::gf::{splitting_field, FqField};
use bgawc_core::group::*;

/// The default corpus with the primes dividing each order.
pub fn corpus() -> Vec<(&'static str, Arc<PermGroup>)> {
    vec![
        ("C2", cyclic(2).unwrap()),
        ("C3", cyclic(3).unwrap()),
        ("C7", cyclic(7).unwrap()),
        ("S3", symmetric(3).unwrap()),
        ("D8", dihedral(8).unwrap()),
        ("Q8", quaternion8()),
        ("A4", alternating(4).unwrap()),
        ("SL(2,3)", sl2_3()),
        ("S4", symmetric(4).unwrap()),
        (
            "C3xS3",
            direct_product(&cyclic_presentation(3), &symmetric_presentation(3)).unwrap(),
        ),
        ("A5", alternating(5).unwrap()),
        ("S5", symmetric(5).unwrap()),
    ]
}

pub fn primes_of(n: usize) -> Vec<u32> {
    (2..=n as u32)
        .filter(|&p| n.is_multiple_of(p as usize) && (2..p).all(|d| p % d != 0))
        .collect()
}

pub fn field_for(g: &PermGroup, p: u32) -> Arc<FqField> {
    splitting_field(p, g.exp_p_prime(p) as u32).unwrap().0
}

/// Corpus groups with the primes to test: every prime divisor, plus `p = 2` for `C7`
/// where Frobenius moves blocks.
pub fn cases() -> Vec<(&'static str, Arc<PermGroup>, Vec<u32>)> {
    corpus()
        .into_iter()
        .map(|(name, g)| {
            let mut ps = primes_of(g.order());
            if name == "C7" {
                ps.insert(0, 2);
            }
            (name, g, ps)
        })
        .collect()
}
