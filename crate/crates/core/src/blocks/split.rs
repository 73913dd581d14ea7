//! Primitive idempotents of the class algebra: radical, Berlekamp splitting, lifting.

use rand::Rng;

use super::{BlockError, ClassAlgebra};
use crate::gf::{Echelon, Fq, Matrix, Poly};

const SPLIT_TRIALS: usize = 200;
const LIFT_ROUNDS: usize = 64;

/// Basis of the Jacobson radical, as the stable kernel of iterated `z -> z^p`.
///
/// With `K_0 = 0`, `K_{j+1} = {z : z^p in K_j}`. Writing `z = sum c_i C_i`, `z^p` is
/// `M (c_i^p)` for the matrix `M` of columns `C_i^p`, so `K_{j+1}` is the coordinatewise
/// `p`-th root of the linear space `{u : M u in K_j}`.
pub fn radical(alg: &ClassAlgebra) -> Echelon {
    let f = alg.field();
    let n = alg.dim();
    let p = f.characteristic() as u64;
    let d = f.degree();
    let powers: Vec<Vec<Fq>> = (0..n).map(|i| alg.pow(&alg.basis(i), p)).collect();
    let mut k = Echelon::new(n);
    loop {
        let cols: Vec<Vec<Fq>> = powers.iter().map(|v| k.reduce(f, v)).collect();
        let u = Matrix::from_columns(&cols, n).nullspace(f);
        let next = Echelon::from_vectors(
            f,
            n,
            u.into_iter()
                .map(|v| v.into_iter().map(|x| f.frobenius(x, d - 1)).collect::<Vec<_>>()),
        );
        if next.rank() == k.rank() {
            return k;
        }
        k = next;
    }
}

/// Basis of `{z : z^q - z in J}` for `q` the field order; it contains `J`, and its
/// dimension over `J` is the number of primitive idempotents.
pub fn berlekamp_subalgebra(alg: &ClassAlgebra, radical: &Echelon) -> Vec<Vec<Fq>> {
    let f = alg.field();
    let n = alg.dim();
    let q = f.order() as u64;
    let cols: Vec<Vec<Fq>> = (0..n)
        .map(|i| {
            let b = alg.basis(i);
            radical.reduce(f, &alg.sub(&alg.pow(&b, q), &b))
        })
        .collect();
    Matrix::from_columns(&cols, n).nullspace(f)
}

/// The unique idempotent congruent to `x` modulo the radical, by `x -> 3x^2 - 2x^3`.
pub fn lift_idempotent(alg: &ClassAlgebra, x: &[Fq]) -> Result<Vec<Fq>, BlockError> {
    let f = alg.field();
    let three = f.from_int(3);
    let two = f.from_int(2);
    let mut e = x.to_vec();
    for _ in 0..LIFT_ROUNDS {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = alg.mul(&e2, &e);
        e = alg.sub(&alg.scale(three, &e2), &alg.scale(two, &e3));
    }
    Err(BlockError::NotIdempotent)
}

/// Number of primitive idempotents below `e`: the dimension of `e B + J` over `J`.
fn count_below(alg: &ClassAlgebra, e: &[Fq], berlekamp: &[Vec<Fq>], radical: &Echelon) -> usize {
    let f = alg.field();
    let mut span = radical.clone();
    for b in berlekamp {
        span.insert(f, alg.mul(e, b));
    }
    span.rank() - radical.rank()
}

/// Minimal polynomial of `y` in `eA / J`, where `e` is the identity of `eA`.
fn minimal_polynomial(alg: &ClassAlgebra, e: &[Fq], y: &[Fq], radical: &Echelon) -> Poly {
    let f = alg.field();
    let n = alg.dim();
    let mut powers = vec![radical.reduce(f, e)];
    let mut cur = e.to_vec();
    loop {
        cur = alg.mul(&cur, y);
        powers.push(radical.reduce(f, &cur));
        let m = Matrix::from_columns(&powers, n);
        if let Some(rel) = m.nullspace(f).into_iter().next() {
            return Poly::from_coeffs(f, rel).monic(f);
        }
    }
}

/// Primitive idempotents of the class algebra lying below the idempotent `e`.
pub fn split_idempotent<R: Rng>(
    alg: &ClassAlgebra,
    e: &[Fq],
    radical: &Echelon,
    berlekamp: &[Vec<Fq>],
    rng: &mut R,
) -> Result<Vec<Vec<Fq>>, BlockError> {
    let f = alg.field();
    if e.iter().all(|&x| x == 0) {
        return Ok(Vec::new());
    }
    let r = count_below(alg, e, berlekamp, radical);
    if r <= 1 {
        return Ok(vec![e.to_vec()]);
    }
    for _ in 0..SPLIT_TRIALS {
        let mut y = alg.zero();
        for b in berlekamp {
            let c = rng.gen_range(0..f.order());
            y = alg.add(&y, &alg.scale(c, b));
        }
        let y = alg.mul(e, &y);
        let mu = minimal_polynomial(alg, e, &y, radical);
        let roots = mu.roots(f, rng);
        if roots.len() < 2 {
            continue;
        }
        let mut parts = Vec::new();
        for (i, &li) in roots.iter().enumerate() {
            let mut x = e.to_vec();
            for (j, &lj) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                let factor = alg.sub(&y, &alg.scale(lj, e));
                let inv = f.inv(f.sub(li, lj)).expect("distinct roots");
                x = alg.scale(inv, &alg.mul(&x, &factor));
            }
            let lifted = lift_idempotent(alg, &x)?;
            parts.extend(split_idempotent(alg, &lifted, radical, berlekamp, rng)?);
        }
        return Ok(parts);
    }
    Err(BlockError::SplitBudgetExceeded)
}

/// Dimension over the field of `eA / eJ`; 1 exactly when `e` stays primitive over every extension.
pub fn residue_dimension(alg: &ClassAlgebra, e: &[Fq], radical: &Echelon) -> usize {
    let f = alg.field();
    let mut span = radical.clone();
    for i in 0..alg.dim() {
        span.insert(f, alg.mul(e, &alg.basis(i)));
    }
    span.rank() - radical.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FqField;
    use crate::group::{cyclic, symmetric};
    use crate::rng;

    #[test]
    fn radical_of_p_group_is_augmentation_ideal() {
        let g = cyclic(4).unwrap();
        let f = FqField::prime(2).unwrap();
        let a = ClassAlgebra::new(&g, &f);
        assert_eq!(radical(&a).rank(), 3);
    }

    #[test]
    fn radical_vanishes_when_p_does_not_divide_order() {
        let g = symmetric(3).unwrap();
        let f = FqField::prime(5).unwrap();
        let a = ClassAlgebra::new(&g, &f);
        assert_eq!(radical(&a).rank(), 0);
        assert_eq!(berlekamp_subalgebra(&a, &radical(&a)).len(), 3);
    }

    #[test]
    fn split_c7_over_f2_and_f8() {
        let g = cyclic(7).unwrap();
        for (deg, expected) in [(1, 3), (3, 7)] {
            let f = FqField::new(2, deg).unwrap();
            let a = ClassAlgebra::new(&g, &f);
            let j = radical(&a);
            let b = berlekamp_subalgebra(&a, &j);
            let parts = split_idempotent(&a, &a.one(), &j, &b, &mut rng::stream(0, "t")).unwrap();
            assert_eq!(parts.len(), expected);
        }
    }
}
