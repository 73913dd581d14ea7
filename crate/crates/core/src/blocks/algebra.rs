use std::sync::Arc;

use crate::gf::{Echelon, Fq, FqField, Matrix};
use crate::group::PermGroup;

/// The center of `kG` in the basis of class sums, with exact structure constants.
pub struct ClassAlgebra {
    group: Arc<PermGroup>,
    field: Arc<FqField>,
    sizes: Vec<usize>,
    // exact[i * n + j] = [(k, a_ijk)] with a_ijk > 0
    exact: Vec<Vec<(u32, u32)>>,
    // the same, reduced into the field, zero entries dropped
    reduced: Vec<Vec<(u32, Fq)>>,
}

impl std::fmt::Debug for ClassAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ClassAlgebra(dim {}, {:?})", self.dim(), self.field)
    }
}

impl ClassAlgebra {
    /// Counts `a_ijk = #{(x, y) in C_i x C_j : xy = z_k}` for a fixed `z_k` in `C_k`.
    pub fn new(group: &Arc<PermGroup>, field: &Arc<FqField>) -> Self {
        let g = group;
        let n = g.class_count();
        let sizes: Vec<usize> = (0..n).map(|c| g.class_members(c).len()).collect();
        let p = field.characteristic();
        let mut exact = Vec::with_capacity(n * n);
        let mut reduced = Vec::with_capacity(n * n);
        let mut counts = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                counts.iter_mut().for_each(|c| *c = 0);
                for &x in g.class_members(i) {
                    for &y in g.class_members(j) {
                        counts[g.class_of(g.mul(x, y))] += 1;
                    }
                }
                let mut e = Vec::new();
                let mut r = Vec::new();
                for (k, &c) in counts.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    debug_assert_eq!(c % sizes[k] as u64, 0);
                    let a = (c / sizes[k] as u64) as u32;
                    e.push((k as u32, a));
                    if !a.is_multiple_of(p) {
                        r.push((k as u32, field.from_int((a % p) as i64)));
                    }
                }
                exact.push(e);
                reduced.push(r);
            }
        }
        ClassAlgebra {
            group: group.clone(),
            field: field.clone(),
            sizes,
            exact,
            reduced,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    /// The integer `a_ijk`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.exact[i * self.dim() + j]
            .iter()
            .find(|&&(kk, _)| kk as usize == k)
            .map_or(0, |&(_, a)| a)
    }

    pub fn zero(&self) -> Vec<Fq> {
        vec![0; self.dim()]
    }

    /// The identity, i.e. the class sum of the identity class.
    pub fn one(&self) -> Vec<Fq> {
        self.basis(0)
    }

    pub fn basis(&self, i: usize) -> Vec<Fq> {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn add(&self, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
        a.iter().zip(b).map(|(&x, &y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, c: Fq, a: &[Fq]) -> Vec<Fq> {
        a.iter().map(|&x| self.field.mul(c, x)).collect()
    }

    pub fn mul(&self, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
        let f = &*self.field;
        let n = self.dim();
        let mut out = vec![0; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(x, y);
                for &(k, a) in &self.reduced[i * n + j] {
                    out[k as usize] = f.mul_add(out[k as usize], c, a);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Fq], mut e: u64) -> Vec<Fq> {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_idempotent(&self, a: &[Fq]) -> bool {
        self.mul(a, a) == a
    }

    /// Coefficientwise `x -> x^(p^m)`.
    pub fn frobenius(&self, a: &[Fq], m: u32) -> Vec<Fq> {
        a.iter().map(|&x| self.field.frobenius(x, m)).collect()
    }

    /// The matrix of `z -> C_i z` acting on coordinate columns.
    pub fn multiplication_matrix(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Fq>> = (0..self.dim())
            .map(|j| self.mul(&self.basis(i), &self.basis(j)))
            .collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// The matrix of `z -> a z`.
    pub fn multiplication_by(&self, a: &[Fq]) -> Matrix {
        let cols: Vec<Vec<Fq>> = (0..self.dim()).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// The image under the augmentation `g -> 1`.
    pub fn augmentation(&self, a: &[Fq]) -> Fq {
        let f = &*self.field;
        a.iter()
            .enumerate()
            .fold(0, |acc, (i, &x)| f.mul_add(acc, x, f.from_int(self.sizes[i] as i64)))
    }

    /// Coefficients on group elements (indexed like the group) of a class-sum combination.
    pub fn expand(&self, a: &[Fq]) -> Vec<Fq> {
        (0..self.group.order()).map(|g| a[self.group.class_of(g)]).collect()
    }

    /// Class-sum coordinates of an element given by its coefficients on group elements, or
    /// `None` if the coefficients are not constant on classes.
    pub fn collect(&self, coeffs: &[Fq]) -> Option<Vec<Fq>> {
        let g = &self.group;
        let out: Vec<Fq> = (0..self.dim()).map(|c| coeffs[g.class_members(c)[0]]).collect();
        (0..g.order()).all(|x| coeffs[x] == out[g.class_of(x)]).then_some(out)
    }

    /// Span of the given vectors, in echelon form.
    pub fn span(&self, vectors: impl IntoIterator<Item = Vec<Fq>>) -> Echelon {
        Echelon::from_vectors(&self.field, self.dim(), vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn c2_square_of_involution_class() {
        let g = cyclic(2).unwrap();
        let f = FqField::prime(3).unwrap();
        let a = ClassAlgebra::new(&g, &f);
        assert_eq!(a.mul(&a.basis(1), &a.basis(1)), a.one());
    }

    #[test]
    fn s3_transposition_class_square() {
        let g = symmetric(3).unwrap();
        let f = FqField::prime(5).unwrap();
        let a = ClassAlgebra::new(&g, &f);
        // classes: identity, transpositions (size 3), 3-cycles (size 2)
        assert_eq!(a.structure_constant(1, 1, 0), 3);
        assert_eq!(a.structure_constant(1, 1, 2), 3);
        assert_eq!(a.structure_constant(1, 1, 1), 0);
        assert_eq!(a.mul(&a.basis(1), &a.basis(1)), vec![3, 0, 3]);
    }

    #[test]
    fn identity_and_symmetry() {
        let g = symmetric(4).unwrap();
        let f = FqField::prime(2).unwrap();
        let a = ClassAlgebra::new(&g, &f);
        let n = a.dim();
        for i in 0..n {
            assert_eq!(a.mul(&a.one(), &a.basis(i)), a.basis(i));
            for j in 0..n {
                for k in 0..n {
                    let c = a.structure_constant(i, j, k);
                    assert_eq!(c, a.structure_constant(j, i, k));
                    assert!(c as usize <= a.class_size(i) * a.class_size(j));
                }
            }
        }
    }
}
