use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::GwError;

/// A square class of a unit: `sign * mag * product(atoms)` modulo squares.
///
/// Invariants: `sign` is +1 or -1, `mag` is a positive squarefree integer,
/// and `atoms` holds each symbolic unit at most once (multiplicity mod 2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SquareClass {
    sign: i8,
    mag: u64,
    atoms: BTreeSet<String>,
}

impl SquareClass {
    pub fn one() -> Self {
        SquareClass { sign: 1, mag: 1, atoms: BTreeSet::new() }
    }

    pub fn minus_one() -> Self {
        SquareClass { sign: -1, mag: 1, atoms: BTreeSet::new() }
    }

    /// Class of a nonzero integer. `of_int(8) == of_int(2)`.
    pub fn of_int(n: i64) -> Result<Self, GwError> {
        if n == 0 {
            return Err(GwError::ZeroClass);
        }
        let mag = squarefree_u128(n.unsigned_abs() as u128)?;
        Ok(SquareClass { sign: if n < 0 { -1 } else { 1 }, mag, atoms: BTreeSet::new() })
    }

    /// Class of a nonzero rational: `p/q` and `p*q` share a square class.
    pub fn of_rational(r: &BigRational) -> Result<Self, GwError> {
        if r.is_zero() {
            return Err(GwError::ZeroClass);
        }
        let sign = if r.is_negative() { -1 } else { 1 };
        let prod: BigInt = r.numer() * r.denom();
        let mag = squarefree_big(prod.magnitude())?;
        Ok(SquareClass { sign, mag, atoms: BTreeSet::new() })
    }

    /// A purely symbolic unit atom.
    pub fn atom(name: impl Into<String>) -> Self {
        let mut atoms = BTreeSet::new();
        atoms.insert(name.into());
        SquareClass { sign: 1, mag: 1, atoms }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn magnitude(&self) -> u64 {
        self.mag
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.atoms.iter().map(|s| s.as_str())
    }

    pub fn is_rational(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn has_atom(&self, name: &str) -> bool {
        self.atoms.contains(name)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.sign = -out.sign;
        out
    }

    /// Product of square classes: signs multiply, squarefree magnitudes
    /// combine exactly via `sf(ab) = ab / gcd(a,b)^2`, atom multiplicities
    /// add mod 2.
    pub fn mul(&self, other: &Self) -> Self {
        let g = self.mag.gcd(&other.mag);
        let mag = (self.mag / g) * (other.mag / g);
        let atoms: BTreeSet<String> =
            self.atoms.symmetric_difference(&other.atoms).cloned().collect();
        SquareClass { sign: self.sign * other.sign, mag, atoms }
    }

    /// Multiply by the class of a nonzero integer.
    pub fn mul_int(&self, n: i64) -> Result<Self, GwError> {
        Ok(self.mul(&SquareClass::of_int(n)?))
    }

    /// The class with one occurrence of `name` removed; `None` if absent.
    pub fn without_atom(&self, name: &str) -> Option<Self> {
        if !self.atoms.contains(name) {
            return None;
        }
        let mut out = self.clone();
        out.atoms.remove(name);
        Some(out)
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.mag != 1 || self.atoms.is_empty() {
            parts.push(self.mag.to_string());
        }
        parts.extend(self.atoms.iter().cloned());
        let body = parts.join("*");
        if self.sign < 0 {
            write!(f, "<-{body}>")
        } else {
            write!(f, "<{body}>")
        }
    }
}

/// Exact squarefree part of a positive integer that fits in u128.
fn squarefree_u128(mut n: u128) -> Result<u64, GwError> {
    debug_assert!(n > 0);
    let mut out: u128 = 1;
    let mut d: u128 = 2;
    // Trial division; `n` shrinks as factors are stripped, so smooth inputs
    // (the only ones arising from lattice data) finish immediately.
    while d <= 10_000_000 && d * d <= n {
        if n % d == 0 {
            let mut parity = 0u32;
            while n % d == 0 {
                n /= d;
                parity ^= 1;
            }
            if parity == 1 {
                out *= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // Remainder has no factor <= 10^7: it is 1, a prime, a prime square, or a
    // product of two distinct large primes (anything else would exceed 10^21).
    if n > 1 {
        if n >= 1_000_000_000_000_000_000_000 {
            return Err(GwError::MagnitudeOverflow);
        }
        let r = n.isqrt();
        if r * r == n {
            // perfect square of a large prime: contributes nothing
        } else {
            out = out.checked_mul(n).ok_or(GwError::MagnitudeOverflow)?;
        }
    }
    out.to_u64().ok_or(GwError::MagnitudeOverflow)
}

fn squarefree_big(n: &BigUint) -> Result<u64, GwError> {
    n.to_u128().ok_or(GwError::MagnitudeOverflow).and_then(squarefree_u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_normalization() {
        assert_eq!(SquareClass::of_int(8).unwrap(), SquareClass::of_int(2).unwrap());
        assert_eq!(SquareClass::of_int(12).unwrap(), SquareClass::of_int(3).unwrap());
        assert_eq!(SquareClass::of_int(-50).unwrap(), SquareClass::of_int(-2).unwrap());
        assert_eq!(SquareClass::of_int(49).unwrap(), SquareClass::one());
    }

    #[test]
    fn rational_class_matches_product() {
        let r = BigRational::new(BigInt::from(3), BigInt::from(4));
        assert_eq!(SquareClass::of_rational(&r).unwrap(), SquareClass::of_int(3).unwrap());
        let r = BigRational::new(BigInt::from(-2), BigInt::from(3));
        assert_eq!(SquareClass::of_rational(&r).unwrap(), SquareClass::of_int(-6).unwrap());
    }

    #[test]
    fn atom_multiplicity_mod_two() {
        let u = SquareClass::atom("u");
        assert_eq!(u.mul(&u), SquareClass::one());
        let v = SquareClass::atom("v");
        let uv = u.mul(&v);
        assert!(uv.has_atom("u") && uv.has_atom("v"));
        assert_eq!(uv.mul(&u), v);
    }
}
