//! Dense univariate polynomials over an [`FqField`], with the factoring routines the
//! idempotent splitter and the MeatAxe need (squarefree, distinct-degree, equal-degree).

use rand::Rng;

use super::field::{Fq, FqField};

/// Coefficients low degree first; no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Fq>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: Fq) -> Self {
        Self::from_raw(vec![c])
    }

    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    /// `x - a`.
    pub fn linear(f: &FqField, a: Fq) -> Self {
        Poly {
            coeffs: vec![f.neg(a), 1],
        }
    }

    pub fn from_coeffs(f: &FqField, coeffs: Vec<Fq>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| f.contains(c)));
        Self::from_raw(coeffs)
    }

    fn from_raw(mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fq {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, f: &FqField, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        Self::from_raw(c)
    }

    pub fn sub(&self, f: &FqField, other: &Poly) -> Poly {
        self.add(f, &other.scale(f, f.neg(1)))
    }

    pub fn scale(&self, f: &FqField, c: Fq) -> Poly {
        Self::from_raw(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &FqField, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(c[i + j], a, b);
            }
        }
        Self::from_raw(c)
    }

    pub fn monic(&self, f: &FqField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = f.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(f, inv)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, f: &FqField, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let inv_lead = f.inv(d.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let mut q = vec![0; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = f.mul(r[k + dd], inv_lead);
            if c == 0 {
                continue;
            }
            q[k] = c;
            let neg = f.neg(c);
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[k + j] = f.mul_add(r[k + j], neg, dc);
            }
        }
        r.truncate(dd);
        (Self::from_raw(q), Self::from_raw(r))
    }

    pub fn rem(&self, f: &FqField, d: &Poly) -> Poly {
        self.divrem(f, d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, f: &FqField, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, f: &FqField, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(f, &q.mul(f, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(f, &q.mul(f, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.leading()).unwrap();
        (r0.scale(f, inv), s0.scale(f, inv), t0.scale(f, inv))
    }

    pub fn derivative(&self, f: &FqField) -> Poly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, f.from_int(i as i64)))
            .collect();
        Self::from_raw(c)
    }

    pub fn eval(&self, f: &FqField, x: Fq) -> Fq {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, f: &FqField, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(f, m);
        let mut acc = Poly::one().rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// `self^(q^k) mod m` with `q = |f|`.
    fn frob_pow_mod(&self, f: &FqField, k: u32, m: &Poly) -> Poly {
        let mut r = self.rem(f, m);
        for _ in 0..k {
            r = r.pow_mod(f, f.order() as u64, m);
        }
        r
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self, f: &FqField) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let g = self.monic(f);
        let x = Poly::x();
        if x.frob_pow_mod(f, n as u32, &g) != x.rem(f, &g) {
            return false;
        }
        for r in super::field::prime_factors(n as u64) {
            let h = x.frob_pow_mod(f, (n as u64 / r) as u32, &g).sub(f, &x);
            if !h.gcd(f, &g).is_one() {
                return false;
            }
        }
        true
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with `self = prod g^e`.
    pub fn squarefree(&self, f: &FqField) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        sff(f, &self.monic(f), 1, &mut out);
        out.sort_by_key(|a| a.1);
        out
    }

    /// Full factorization into monic irreducibles with multiplicities, sorted by (degree, coeffs).
    pub fn factor<R: Rng>(&self, f: &FqField, rng: &mut R) -> Vec<(Poly, u32)> {
        let mut out: Vec<(Poly, u32)> = Vec::new();
        for (g, e) in self.squarefree(f) {
            for (h, d) in g.distinct_degree(f) {
                for irr in h.equal_degree(f, d, rng) {
                    out.push((irr, e));
                }
            }
        }
        out.sort_by(|a, b| (a.0.coeffs.len(), &a.0.coeffs).cmp(&(b.0.coeffs.len(), &b.0.coeffs)));
        out
    }

    /// Distinct-degree factorization of a squarefree monic polynomial: `(product, d)` where the
    /// product collects all irreducible factors of degree `d`.
    pub fn distinct_degree(&self, f: &FqField) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x = Poly::x();
        let mut h = x.clone();
        let mut d = 0;
        while let Some(n) = rest.degree() {
            if n == 0 {
                break;
            }
            d += 1;
            if 2 * d > n {
                out.push((rest.clone(), n));
                break;
            }
            h = h.pow_mod(f, f.order() as u64, &rest);
            let g = rest.gcd(f, &h.sub(f, &x));
            if !g.is_one() {
                rest = rest.divrem(f, &g).0;
                h = h.rem(f, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Splits a squarefree monic product of irreducibles that all have degree `d`.
    pub fn equal_degree<R: Rng>(&self, f: &FqField, d: usize, rng: &mut R) -> Vec<Poly> {
        let Some(n) = self.degree() else { return Vec::new() };
        if n == 0 {
            return Vec::new();
        }
        if n == d {
            return vec![self.monic(f)];
        }
        loop {
            let a = random_poly(f, n, rng);
            let b = if f.characteristic() == 2 {
                // Trace map down to F_2.
                let k = f.degree() * d as u32;
                let mut t = a.rem(f, self);
                let mut acc = t.clone();
                for _ in 1..k {
                    t = t.mul(f, &t).rem(f, self);
                    acc = acc.add(f, &t);
                }
                acc
            } else {
                // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
                let mut t = a.rem(f, self);
                let mut norm = t.clone();
                for _ in 1..d {
                    t = t.pow_mod(f, f.order() as u64, self);
                    norm = norm.mul(f, &t).rem(f, self);
                }
                norm.pow_mod(f, (f.order() as u64 - 1) / 2, self).sub(f, &Poly::one())
            };
            let g = self.gcd(f, &b);
            if let Some(gd) = g.degree() {
                if gd > 0 && gd < n {
                    let h = self.divrem(f, &g).0;
                    let mut out = g.equal_degree(f, d, rng);
                    out.extend(h.equal_degree(f, d, rng));
                    return out;
                }
            }
        }
    }

    /// Distinct roots in the field.
    pub fn roots<R: Rng>(&self, f: &FqField, rng: &mut R) -> Vec<Fq> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let g = self.monic(f);
        let xq = Poly::x().pow_mod(f, f.order() as u64, &g);
        let lin = g.gcd(f, &xq.sub(f, &Poly::x()));
        if lin.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots: Vec<Fq> = lin
            .equal_degree(f, 1, rng)
            .into_iter()
            .map(|l| f.neg(l.coeffs[0]))
            .collect();
        roots.sort_unstable();
        roots
    }
}

fn sff(f: &FqField, g: &Poly, mult: u32, out: &mut Vec<(Poly, u32)>) {
    if g.degree().unwrap_or(0) == 0 {
        return;
    }
    let p = f.characteristic();
    let dg = g.derivative(f);
    if dg.is_zero() {
        // g = h(x^p): take p-th roots of the coefficients.
        sff(f, &pth_root(f, g), mult * p, out);
        return;
    }
    let mut c = g.gcd(f, &dg);
    let mut w = g.divrem(f, &c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(f, &c);
        let fac = w.divrem(f, &y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i * mult));
        }
        w = y;
        c = c.divrem(f, &w).0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        sff(f, &pth_root(f, &c), mult * p, out);
    }
}

fn pth_root(f: &FqField, g: &Poly) -> Poly {
    let p = f.characteristic() as usize;
    let e = f.degree() - 1; // inverse Frobenius on F_q is a -> a^(p^(m-1))
    let c = g.coeffs.iter().step_by(p).map(|&a| f.frobenius(a, e)).collect();
    Poly::from_raw(c)
}

fn random_poly<R: Rng>(f: &FqField, n: usize, rng: &mut R) -> Poly {
    Poly::from_raw((0..n).map(|_| rng.gen_range(0..f.order())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FqField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn expand(f: &FqField, factors: &[(Poly, u32)]) -> Poly {
        let mut acc = Poly::one();
        for (g, e) in factors {
            for _ in 0..*e {
                acc = acc.mul(f, g);
            }
        }
        acc
    }

    #[test]
    fn factor_recovers_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, m) in [(2, 1), (2, 3), (3, 2), (5, 1), (7, 1), (2, 4)] {
            let f = FqField::new(p, m).unwrap();
            for _ in 0..30 {
                let n = rng.gen_range(1..12);
                let mut c: Vec<u32> = (0..n).map(|_| rng.gen_range(0..f.order())).collect();
                c.push(1);
                let g = Poly::from_coeffs(&f, c);
                // Force repeated factors sometimes.
                let g = if rng.gen_bool(0.3) { g.mul(&f, &g) } else { g };
                let fac = g.factor(&f, &mut rng);
                assert_eq!(expand(&f, &fac), g, "p={p} m={m}");
                for (h, _) in &fac {
                    assert!(h.is_irreducible(&f));
                }
            }
        }
    }

    #[test]
    fn x7_minus_1_over_f2() {
        let f = FqField::new(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = Poly::from_coeffs(&f, vec![1, 0, 0, 0, 0, 0, 0, 1]);
        let degs: Vec<usize> = g
            .factor(&f, &mut rng)
            .iter()
            .map(|(h, _)| h.degree().unwrap())
            .collect();
        assert_eq!(degs, vec![1, 3, 3]);
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = FqField::new(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut g = Poly::one();
        for a in [0, 2, 5, 7] {
            g = g.mul(&f, &Poly::linear(&f, a));
        }
        assert_eq!(g.roots(&f, &mut rng), vec![0, 2, 5, 7]);
    }

    #[test]
    fn xgcd_identity() {
        let f = FqField::new(5, 1).unwrap();
        let a = Poly::from_coeffs(&f, vec![1, 2, 3, 1]);
        let b = Poly::from_coeffs(&f, vec![4, 0, 1]);
        let (g, s, t) = a.xgcd(&f, &b);
        assert_eq!(s.mul(&f, &a).add(&f, &t.mul(&f, &b)), g);
    }
}
