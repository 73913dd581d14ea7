//! Exact arithmetic over `F_{p^m}`: fields, polynomials, dense matrices and Galois subgroups.

mod conway;
mod field;
mod matrix;
mod poly;

use thiserror::Error;

pub use conway::conway_polynomial;
pub(crate) use field::mod_pow;
pub use field::{divisors, is_prime, multiplicative_order, splitting_field, Fq, FqElement, FqField, MAX_FIELD_ORDER};
pub use matrix::{axpy, Echelon, Matrix};
pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid extension degree {0}")]
    InvalidDegree(u32),
    #[error("field of order {p}^{degree} exceeds the table limit")]
    FieldTooLarge { p: u32, degree: u32 },
    #[error("defining polynomial is not irreducible")]
    NotIrreducible,
    #[error("value is not an element of the field")]
    InvalidElement,
    #[error("gcd({p}, {t}) != 1")]
    NotCoprime { p: u32, t: u32 },
    #[error("no primitive {0}-th root of unity in this field")]
    NoRootOfUnity(u32),
    #[error("{m} does not divide {d}")]
    NotADivisor { m: u32, d: u32 },
}

/// The cyclic subgroup `<Frob^m>` of `Gal(F_{p^d}/F_p)`, `m | d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisSubgroup {
    ambient_degree: u32,
    generator_exponent: u32,
}

impl GaloisSubgroup {
    pub fn new(ambient_degree: u32, generator_exponent: u32) -> Result<Self, GfError> {
        if generator_exponent == 0 || !ambient_degree.is_multiple_of(generator_exponent) {
            return Err(GfError::NotADivisor {
                m: generator_exponent,
                d: ambient_degree,
            });
        }
        Ok(GaloisSubgroup {
            ambient_degree,
            generator_exponent,
        })
    }

    /// The trivial subgroup, `<Frob^d>`.
    pub fn trivial(ambient_degree: u32) -> Self {
        GaloisSubgroup {
            ambient_degree,
            generator_exponent: ambient_degree,
        }
    }

    pub fn ambient_degree(&self) -> u32 {
        self.ambient_degree
    }

    pub fn generator_exponent(&self) -> u32 {
        self.generator_exponent
    }

    pub fn order(&self) -> u32 {
        self.ambient_degree / self.generator_exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.generator_exponent == self.ambient_degree
    }
}

/// Subgroups of `<Frob^m0>` inside `Gal(F_{p^d}/F_p)`, one per `m` with `m0 | m | d`.
pub fn galois_subgroups(d: u32, m0: u32) -> Result<Vec<GaloisSubgroup>, GfError> {
    if m0 == 0 || !d.is_multiple_of(m0) {
        return Err(GfError::NotADivisor { m: m0, d });
    }
    Ok(divisors(d)
        .into_iter()
        .filter(|m| m % m0 == 0)
        .map(|m| GaloisSubgroup {
            ambient_degree: d,
            generator_exponent: m,
        })
        .collect())
}
