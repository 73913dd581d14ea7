//! Dense row-major matrices over `F_q`, incremental reduced echelon forms, kernels and
//! characteristic polynomials.
//!
//! Vectors are plain `Vec<Fq>`; matrices act on column vectors (`A v`).

use super::field::{Fq, FqField};
use super::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

/// `dst += c * src`.
#[inline]
pub fn axpy(f: &FqField, dst: &mut [Fq], c: Fq, src: &[Fq]) {
    if c == 0 {
        return;
    }
    if c == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = f.add(*d, s);
            }
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = f.add(*d, f.mul(c, s));
            }
        }
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(n: usize, c: Fq) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Fq>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Fq>], rows: usize) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fq) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Fq] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Fq> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[Fq] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, f: &FqField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    axpy(f, dst, a, other.row(k));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &FqField, v: &[Fq]) -> Vec<Fq> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(
                    0,
                    |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.mul_add(acc, a, b) },
                )
            })
            .collect()
    }

    pub fn add(&self, f: &FqField, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, f: &FqField, c: Fq) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, f: &FqField, c: Fq, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        axpy(f, &mut out.data, c, &other.data);
        out
    }

    /// `self + c * I`.
    pub fn add_scalar(&self, f: &FqField, c: Fq) -> Matrix {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = out.get(i, i);
            out.set(i, i, f.add(v, c));
        }
        out
    }

    /// Entry-wise `a -> a^(p^m)`.
    pub fn frobenius(&self, f: &FqField, m: u32) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.frobenius(a, m)).collect(),
        }
    }

    pub fn trace(&self, f: &FqField) -> Fq {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    /// `poly(self)` by Horner's rule.
    pub fn eval_poly(&self, f: &FqField, poly: &Poly) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::zero(self.rows, self.cols);
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(f, self).add_scalar(f, c);
        }
        acc
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, f: &FqField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).unwrap();
            for x in self.row_mut(r) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let c_i = self.get(i, c);
                    if c_i != 0 {
                        axpy(f, self.row_mut(i), f.neg(c_i), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FqField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{v : self v = 0}`.
    pub fn nullspace(&self, f: &FqField) -> Vec<Vec<Fq>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self, f: &FqField) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            inv.row_mut(i).copy_from_slice(&aug.row(i)[n..]);
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(xI - A)` via Hessenberg reduction.
    pub fn charpoly(&self, f: &FqField) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1)).unwrap();
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u == 0 {
                    continue;
                }
                let row_m = h.row(m).to_vec();
                axpy(f, h.row_mut(i), f.neg(u), &row_m);
                for r in 0..n {
                    let v = f.mul_add(h.get(r, m), u, h.get(r, i));
                    h.set(r, m, v);
                }
            }
        }
        let mut p: Vec<Poly> = Vec::with_capacity(n + 1);
        p.push(Poly::one());
        for m in 1..=n {
            let mut pm = Poly::linear(f, h.get(m - 1, m - 1)).mul(f, &p[m - 1]);
            let mut t = 1;
            for i in (1..m).rev() {
                t = f.mul(t, h.get(i, i - 1));
                if t == 0 {
                    break;
                }
                let c = f.mul(t, h.get(i - 1, m - 1));
                if c != 0 {
                    pm = pm.sub(f, &p[i - 1].scale(f, c));
                }
            }
            p.push(pm);
        }
        p.pop().unwrap()
    }
}

/// A subspace held in reduced row echelon form, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors(f: &FqField, width: usize, vectors: impl IntoIterator<Item = Vec<Fq>>) -> Self {
        let mut e = Self::new(width);
        for v in vectors {
            e.insert(f, v);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    pub fn basis(&self) -> &[Vec<Fq>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection onto the span along the pivot coordinates.
    pub fn reduce(&self, f: &FqField, v: &[Fq]) -> Vec<Fq> {
        let mut r = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = r[c];
            if x != 0 {
                axpy(f, &mut r, f.neg(x), row);
            }
        }
        r
    }

    pub fn contains(&self, f: &FqField, v: &[Fq]) -> bool {
        self.reduce(f, v).iter().all(|&x| x == 0)
    }

    /// Coordinates of a vector of the span with respect to [`Self::basis`].
    pub fn coords(&self, v: &[Fq]) -> Vec<Fq> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, f: &FqField, v: Vec<Fq>) -> bool {
        assert_eq!(v.len(), self.width);
        let mut r = self.reduce(f, &v);
        let Some(c) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[c]).unwrap();
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let x = row[c];
            if x != 0 {
                axpy(f, row, f.neg(x), &r);
            }
        }
        self.rows.push(r);
        self.pivots.push(c);
        true
    }

    /// Non-pivot columns; their unit vectors complete [`Self::basis`] to a basis.
    pub fn complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FqField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &FqField, n: usize, rng: &mut impl Rng) -> Matrix {
        let rows: Vec<Vec<Fq>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.order())).collect())
            .collect();
        Matrix::from_rows(&rows, n)
    }

    #[test]
    fn cayley_hamilton() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, m) in [(2, 1), (2, 2), (3, 1), (5, 2), (3, 4)] {
            let f = FqField::new(p, m).unwrap();
            for n in 1..9 {
                let a = random_matrix(&f, n, &mut rng);
                let chi = a.charpoly(&f);
                assert_eq!(chi.degree(), Some(n));
                assert!(a.eval_poly(&f, &chi).is_zero(), "p={p} m={m} n={n}");
                assert_eq!(chi.coeffs()[n - 1], f.neg(a.trace(&f)));
            }
        }
    }

    #[test]
    fn nullspace_and_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = FqField::new(3, 2).unwrap();
        for _ in 0..20 {
            let a = random_matrix(&f, 6, &mut rng);
            let b = random_matrix(&f, 6, &mut rng);
            // Force a kernel by making the last column a combination of the first two.
            let mut c = a.mul(&f, &b);
            for i in 0..6 {
                let v = f.add(c.get(i, 0), f.mul(2, c.get(i, 1)));
                c.set(i, 5, v);
            }
            let ker = c.nullspace(&f);
            assert_eq!(ker.len() + c.rank(&f), 6);
            for v in &ker {
                assert!(c.mul_vec(&f, v).iter().all(|&x| x == 0));
            }
            assert!(c.inverse(&f).is_none());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = FqField::new(2, 4).unwrap();
        let mut found = 0;
        while found < 10 {
            let a = random_matrix(&f, 5, &mut rng);
            if let Some(inv) = a.inverse(&f) {
                assert_eq!(a.mul(&f, &inv), Matrix::identity(5));
                found += 1;
            }
        }
    }

    #[test]
    fn echelon_coords() {
        let f = FqField::new(5, 1).unwrap();
        let mut e = Echelon::new(4);
        assert!(e.insert(&f, vec![1, 2, 0, 3]));
        assert!(e.insert(&f, vec![0, 1, 1, 1]));
        assert!(!e.insert(&f, vec![1, 3, 1, 4]));
        let v = vec![2, 0, 1, 2]; // 2*(1,2,0,3) + (0,1,1,1)
        assert!(e.contains(&f, &v));
        let c = e.coords(&v);
        let mut w = vec![0; 4];
        for (ci, row) in c.iter().zip(e.basis()) {
            axpy(&f, &mut w, *ci, row);
        }
        assert_eq!(w, v);
        assert!(!e.contains(&f, &[0, 0, 0, 1]));
        assert_eq!(e.complement().len(), 2);
    }
}
