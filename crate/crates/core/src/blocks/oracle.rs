//! Central characters computed without idempotents: joint eigenvectors of the transposed
//! multiplication operators `z -> C_i z`.

use rand::Rng;

use super::{BlockError, ClassAlgebra};
use crate::gf::{Echelon, Fq, Matrix};

/// All algebra homomorphisms `Z(kG) -> k`, as value vectors on the class sums.
///
/// A homomorphism `w` is a linear functional with `w(C_i z) = w(C_i) w(z)`, i.e. a joint
/// eigenvector of the transposed multiplication matrices, normalized by `w(1) = 1`.
pub fn central_character_oracle<R: Rng>(alg: &ClassAlgebra, rng: &mut R) -> Result<Vec<Vec<Fq>>, BlockError> {
    let f = alg.field();
    let n = alg.dim();
    let ops: Vec<Matrix> = (0..n).map(|i| alg.multiplication_matrix(i).transpose()).collect();
    let mut spaces: Vec<Vec<Vec<Fq>>> = vec![(0..n).map(|i| alg.basis(i)).collect()];
    for op in &ops {
        let mut next = Vec::new();
        for basis in spaces {
            let w = basis.len();
            let ech = Echelon::from_vectors(f, n, basis.iter().cloned());
            // Matrix of op restricted to the invariant subspace, in the echelon basis.
            let eb: Vec<Vec<Fq>> = ech.basis().to_vec();
            let cols: Vec<Vec<Fq>> = eb.iter().map(|v| ech.coords(&op.mul_vec(f, v))).collect();
            let restricted = Matrix::from_columns(&cols, w);
            for lambda in restricted.charpoly(f).roots(f, rng) {
                let shifted = restricted.add_scalar(f, f.neg(lambda));
                let kernel: Vec<Vec<Fq>> = shifted
                    .nullspace(f)
                    .into_iter()
                    .map(|c| {
                        let mut v = vec![0; n];
                        for (coef, b) in c.iter().zip(&eb) {
                            crate::gf::axpy(f, &mut v, *coef, b);
                        }
                        v
                    })
                    .collect();
                if !kernel.is_empty() {
                    next.push(kernel);
                }
            }
        }
        spaces = next;
    }
    let mut out = Vec::new();
    for space in spaces {
        if space.len() != 1 {
            return Err(BlockError::OracleMismatch);
        }
        let v = &space[0];
        let inv = f.inv(v[0]).map_err(|_| BlockError::OracleMismatch)?;
        out.push(v.iter().map(|&x| f.mul(x, inv)).collect());
    }
    out.sort();
    Ok(out)
}
