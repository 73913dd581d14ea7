//! Finite fields `F_{p^m}` with table-driven arithmetic.
//!
//! Elements are packed integers: the coefficient vector `c_0 + c_1 x + ... + c_{m-1} x^{m-1}`
//! of the residue modulo the defining polynomial is stored as `sum c_i p^i`. Prime-field
//! elements are therefore the integers `0..p`, and the prime field embeds verbatim.

use std::fmt;
use std::sync::Arc;

use super::conway::conway_polynomial;
use super::GfError;

/// Packed field element. Only meaningful together with the [`FqField`] it came from.
pub type Fq = u32;

const NONE: u32 = u32::MAX;

/// Largest field order the table-driven representation accepts.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

pub struct FqField {
    p: u32,
    degree: u32,
    q: u32,
    modulus: Vec<u32>,
    conway: bool,
    generator: Fq,
    exp: Vec<Fq>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FqField")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("conway", &self.conway)
            .finish()
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FqField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `a` modulo `n` (`gcd(a, n) = 1`, `n >= 1`).
pub fn multiplicative_order(a: u64, n: u64) -> u32 {
    if n == 1 {
        return 1;
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = x * (a % n) % n;
        k += 1;
    }
    k
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Slow packed arithmetic used only while the tables are being built.
struct Builder<'a> {
    p: u32,
    degree: usize,
    modulus: &'a [u32],
}

impl Builder<'_> {
    fn unpack(&self, mut v: u32) -> Vec<u32> {
        let mut c = vec![0; self.degree];
        for slot in c.iter_mut() {
            *slot = v % self.p;
            v /= self.p;
        }
        c
    }

    fn pack(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.unpack(a), self.unpack(b));
        let c: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&c)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let m = self.degree;
        let (ca, cb) = (self.unpack(a), self.unpack(b));
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mc) in self.modulus[..m].iter().enumerate() {
                let sub = c * mc as u64 % p;
                prod[k - m + j] = (prod[k - m + j] + p - sub) % p;
            }
        }
        let c: Vec<u32> = prod[..m].iter().map(|&x| x as u32).collect();
        self.pack(&c)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl FqField {
    /// `F_{p^m}` defined by the Conway polynomial when one is tabulated, otherwise by the
    /// least monic irreducible polynomial (packed order of the lower coefficients).
    pub fn new(p: u32, degree: u32) -> Result<Arc<Self>, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if degree == 0 {
            return Err(GfError::InvalidDegree(degree));
        }
        check_order(p, degree)?;
        if let Some(poly) = conway_polynomial(p, degree) {
            return Self::build(p, poly.to_vec(), true);
        }
        let modulus = least_irreducible(p, degree)?;
        Self::build(p, modulus, false)
    }

    /// Prime field `F_p`.
    pub fn prime(p: u32) -> Result<Arc<Self>, GfError> {
        Self::new(p, 1)
    }

    /// Field defined by an explicit monic polynomial (coefficients low to high, leading 1).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Arc<Self>, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(GfError::NotIrreducible);
        }
        let degree = (modulus.len() - 1) as u32;
        check_order(p, degree)?;
        if !is_irreducible_over_prime(p, &modulus)? {
            return Err(GfError::NotIrreducible);
        }
        let conway = conway_polynomial(p, degree) == Some(modulus.as_slice());
        Self::build(p, modulus, conway)
    }

    fn build(p: u32, modulus: Vec<u32>, conway: bool) -> Result<Arc<Self>, GfError> {
        let degree = (modulus.len() - 1) as u32;
        let q = check_order(p, degree)?;
        let b = Builder {
            p,
            degree: degree as usize,
            modulus: &modulus,
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let is_primitive = |g: u32| g != 0 && factors.iter().all(|&r| b.pow(g, order / r) != 1) && b.pow(g, order) == 1;
        // x is primitive for Conway polynomials; search otherwise.
        let x = if degree == 1 { NONE } else { p };
        let generator = if x != NONE && is_primitive(x) {
            x
        } else {
            (1..q).find(|&g| is_primitive(g)).ok_or(GfError::NotIrreducible)?
        };
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![NONE; q as usize];
        let mut acc = 1u32;
        for k in 0..n {
            if log[acc as usize] != NONE {
                return Err(GfError::NotIrreducible);
            }
            exp[k] = acc;
            log[acc as usize] = k as u32;
            acc = b.mul(acc, generator);
        }
        for k in 0..n {
            exp[n + k] = exp[k];
        }
        let mut zech = Vec::new();
        if p != 2 && degree > 1 {
            zech = (0..n)
                .map(|k| {
                    let s = b.add(1, exp[k]);
                    if s == 0 {
                        NONE
                    } else {
                        log[s as usize]
                    }
                })
                .collect();
        }
        Ok(Arc::new(FqField {
            p,
            degree,
            q,
            modulus,
            conway,
            generator,
            exp,
            log,
            zech,
        }))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn defining_polynomial(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_conway(&self) -> bool {
        self.conway
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fq {
        self.generator
    }

    /// Coefficients of the packed element, low degree first.
    pub fn coords(&self, a: Fq) -> Vec<u32> {
        let mut v = a;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, c: &[u32]) -> Result<Fq, GfError> {
        if c.len() > self.degree as usize || c.iter().any(|&d| d >= self.p) {
            return Err(GfError::InvalidElement);
        }
        Ok(c.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    /// Image of an integer in the prime field.
    #[inline]
    pub fn from_int(&self, n: i64) -> Fq {
        n.rem_euclid(self.p as i64) as Fq
    }

    #[inline]
    pub fn contains(&self, a: Fq) -> bool {
        a < self.q
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.degree == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let (la, lb) = (self.log[a as usize], self.log[b as usize]);
        let n = self.q - 1;
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NONE {
            0
        } else {
            self.exp[(la + z) as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if a == 0 || self.p == 2 {
            return a;
        }
        if self.degree == 1 {
            return self.p - a;
        }
        self.exp[(self.log[a as usize] + (self.q - 1) / 2) as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as Fq;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// `a + c * b`.
    #[inline]
    pub fn mul_add(&self, a: Fq, c: Fq, b: Fq) -> Fq {
        self.add(a, self.mul(c, b))
    }

    pub fn inv(&self, a: Fq) -> Result<Fq, GfError> {
        if a == 0 {
            return Err(GfError::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let k = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[k as usize]
    }

    /// Discrete logarithm to the base of [`Self::primitive_element`].
    pub fn log(&self, a: Fq) -> Option<u32> {
        if a == 0 || a >= self.q {
            None
        } else {
            Some(self.log[a as usize])
        }
    }

    pub fn exp_of(&self, k: u64) -> Fq {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// `a^(p^m)`.
    #[inline]
    pub fn frobenius(&self, a: Fq, m: u32) -> Fq {
        if a == 0 || self.degree == 1 {
            return a;
        }
        let n = (self.q - 1) as u64;
        let pm = mod_pow(self.p as u64, m as u64, n);
        let k = self.log[a as usize] as u64 * pm % n;
        self.exp[k as usize]
    }

    /// A primitive `t`-th root of unity, `t | q - 1`.
    pub fn root_of_unity(&self, t: u32) -> Result<Fq, GfError> {
        if t == 0 || !(self.q - 1).is_multiple_of(t) {
            return Err(GfError::NoRootOfUnity(t));
        }
        Ok(self.exp[((self.q - 1) / t) as usize % (self.q - 1) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fq) -> Option<u32> {
        let l = self.log(a)? as u64;
        let n = (self.q - 1) as u64;
        Some((n / gcd(l, n)) as u32)
    }

    /// Least `m0 | degree` with `a^(p^m0) = a`: the degree of `F_p(a)`.
    pub fn element_degree(&self, a: Fq) -> u32 {
        divisors(self.degree)
            .into_iter()
            .find(|&m| self.frobenius(a, m) == a)
            .unwrap_or(self.degree)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.q
    }
}

fn check_order(p: u32, degree: u32) -> Result<u32, GfError> {
    let q = (p as u64).checked_pow(degree).filter(|&q| q <= MAX_FIELD_ORDER);
    q.map(|q| q as u32).ok_or(GfError::FieldTooLarge { p, degree })
}

pub(crate) fn mod_pow(base: u64, mut e: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut b = base % n;
    let mut acc = 1 % n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Rabin's test over the prime field.
fn is_irreducible_over_prime(p: u32, modulus: &[u32]) -> Result<bool, GfError> {
    use super::poly::Poly;
    let fp = FqField::prime(p)?;
    let f = Poly::from_coeffs(&fp, modulus.to_vec());
    Ok(f.is_irreducible(&fp))
}

fn least_irreducible(p: u32, degree: u32) -> Result<Vec<u32>, GfError> {
    let count = (p as u64).pow(degree);
    for v in 0..count {
        let mut c = Vec::with_capacity(degree as usize + 1);
        let mut x = v;
        for _ in 0..degree {
            c.push((x % p as u64) as u32);
            x /= p as u64;
        }
        c.push(1);
        if c[0] == 0 && degree > 1 {
            continue;
        }
        if is_irreducible_over_prime(p, &c)? {
            return Ok(c);
        }
    }
    Err(GfError::NotIrreducible)
}

/// `F_{p^d}` with `d = ord_t(p)` together with a distinguished primitive `t`-th root of unity.
pub fn splitting_field(p: u32, t: u32) -> Result<(Arc<FqField>, Fq), GfError> {
    if t == 0 || gcd(p as u64, t as u64) != 1 {
        return Err(GfError::NotCoprime { p, t });
    }
    let d = multiplicative_order(p as u64, t as u64);
    let field = FqField::new(p, d)?;
    let xi = field.root_of_unity(t)?;
    Ok((field, xi))
}

/// An element bundled with its field, for callers that want checked arithmetic.
#[derive(Clone)]
pub struct FqElement {
    field: Arc<FqField>,
    value: Fq,
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.field.coords(self.value))
    }
}

impl PartialEq for FqElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl FqElement {
    pub fn new(field: &Arc<FqField>, value: Fq) -> Result<Self, GfError> {
        if !field.contains(value) {
            return Err(GfError::InvalidElement);
        }
        Ok(FqElement {
            field: field.clone(),
            value,
        })
    }

    pub fn zero(field: &Arc<FqField>) -> Self {
        FqElement {
            field: field.clone(),
            value: 0,
        }
    }

    pub fn one(field: &Arc<FqField>) -> Self {
        FqElement {
            field: field.clone(),
            value: 1,
        }
    }

    /// The class of `x`.
    pub fn x(field: &Arc<FqField>) -> Self {
        let value = if field.degree() == 1 { 0 } else { field.characteristic() };
        FqElement {
            field: field.clone(),
            value,
        }
    }

    pub fn value(&self) -> Fq {
        self.value
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn coords(&self) -> Vec<u32> {
        self.field.coords(self.value)
    }

    fn same_field(&self, other: &Self) -> Result<(), GfError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn with(&self, value: Fq) -> Self {
        FqElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }

    pub fn frobenius(&self, m: u32) -> Self {
        self.with(self.field.frobenius(self.value, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_x_squared() {
        let f = FqField::new(2, 2).unwrap();
        assert_eq!(f.defining_polynomial(), &[1, 1, 1]);
        let x = FqElement::x(&f);
        assert_eq!(x.mul(&x).unwrap().coords(), vec![1, 1]);
    }

    #[test]
    fn f8_x_cubed() {
        let f = FqField::new(2, 3).unwrap();
        assert_eq!(f.defining_polynomial(), &[1, 1, 0, 1]);
        let x = FqElement::x(&f);
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x.mul(&x2).unwrap().coords(), vec![1, 1, 0]);
    }

    #[test]
    fn additive_identity_and_inverse() {
        for (p, m) in [(2, 4), (3, 2), (5, 2), (7, 1), (3, 4)] {
            let f = FqField::new(p, m).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let f = FqField::new(3, 2).unwrap();
        let g = FqField::new(5, 1).unwrap();
        assert_eq!(f.inv(0), Err(GfError::DivisionByZero));
        let a = FqElement::one(&f);
        let b = FqElement::one(&g);
        assert_eq!(a.add(&b), Err(GfError::FieldMismatch));
    }

    #[test]
    fn splitting_field_degrees() {
        assert_eq!(splitting_field(2, 7).unwrap().0.degree(), 3);
        assert_eq!(splitting_field(3, 2).unwrap().0.degree(), 1);
        assert_eq!(splitting_field(2, 5).unwrap().0.degree(), 4);
        assert!(matches!(splitting_field(3, 6), Err(GfError::NotCoprime { .. })));
    }

    #[test]
    fn distinguished_root_is_primitive() {
        for (p, t) in [(2, 7), (2, 15), (3, 10), (5, 12), (3, 20), (2, 1), (7, 6)] {
            let (f, xi) = splitting_field(p, t).unwrap();
            assert_eq!(f.pow(xi, t as u64), 1);
            for s in 1..t {
                if t % s == 0 {
                    assert_ne!(f.pow(xi, s as u64), 1, "p={p} t={t} s={s}");
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = FqField::new(2, 3).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.frobenius(g, 1), f.mul(g, g));
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 3), a);
        }
        for a in 0..2 {
            assert_eq!(f.frobenius(a, 1), a);
        }
    }

    #[test]
    fn fallback_is_least_irreducible() {
        // degree 17 over F_2 is untabulated; the least irreducible is x^17 + x^3 + 1.
        let poly = least_irreducible(2, 17).unwrap();
        let mut expected = vec![0; 18];
        expected[0] = 1;
        expected[3] = 1;
        expected[17] = 1;
        assert_eq!(poly, expected);
    }

    #[test]
    fn with_modulus_rejects_reducible() {
        assert_eq!(
            FqField::with_modulus(2, vec![1, 0, 1]).unwrap_err(),
            GfError::NotIrreducible
        );
        let f = FqField::with_modulus(2, vec![1, 1, 0, 0, 1]).unwrap();
        assert!(f.is_conway());
    }

    #[test]
    fn element_degree_matches_subfields() {
        let f = FqField::new(2, 6).unwrap();
        let mut counts = [0usize; 7];
        for a in f.elements() {
            counts[f.element_degree(a) as usize] += 1;
        }
        assert_eq!(counts[1], 2);
        assert_eq!(counts[2], 2);
        assert_eq!(counts[3], 6);
        assert_eq!(counts[6], 54);
    }
}
