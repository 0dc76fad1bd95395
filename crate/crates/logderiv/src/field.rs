//! Coefficient fields for the polynomial engine.
//!
//! Everything authoritative runs over the rationals. A word-sized prime
//! field (default p = 32003) is available for fast advisory cross-checks;
//! its results are never used to certify anything.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::hash::Hash;

/// Exact rational scalar, always reduced, denominator positive.
pub type Scalar = BigRational;

/// A coefficient field, passed by value as a small context object.
///
/// Elements themselves carry no field reference; all arithmetic goes
/// through the context so mixed-modulus bugs cannot arise.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Embed num/den. Fails over F_p when den ≡ 0 (mod p).
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero (callers guard).
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Multipliers (u, v) with u·cp = v·cg and u ≠ 0, chosen to keep
    /// coefficients small: a reduction step may rescale the reducee by u
    /// and subtract v times the reducer instead of dividing. Exact fields
    /// with cheap division return (1, cp/cg).
    fn reduction_pair(&self, cp: &Self::Elem, cg: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (self.one(), self.div(cp, cg))
    }

    /// Rescale a nonempty coefficient list by a unit to a canonical form:
    /// integer coefficients with content 1 and positive lead over Q,
    /// monic over F_p. Returns the unit applied.
    fn normalize(&self, coeffs: &mut [Self::Elem]) -> Self::Elem;

    fn fmt_elem(&self, a: &Self::Elem) -> String;
}

/// The rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num.clone(), den.clone()))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    /// Fraction-free step: u = cg/g, v = cp/g for a common rational
    /// divisor g, so integer inputs produce integer multipliers with no
    /// per-coefficient gcd work downstream.
    fn reduction_pair(&self, cp: &BigRational, cg: &BigRational) -> (BigRational, BigRational) {
        let num_gcd = cp.numer().gcd(cg.numer());
        let den_lcm = cp.denom().lcm(cg.denom());
        let g = BigRational::new(num_gcd, den_lcm);
        let mut u = cg / &g;
        let mut v = cp / &g;
        if u.is_negative() {
            u = -u;
            v = -v;
        }
        (u, v)
    }

    fn normalize(&self, coeffs: &mut [BigRational]) -> BigRational {
        if coeffs.is_empty() {
            return BigRational::one();
        }
        // lcm of denominators, then gcd of numerators, sign from the lead.
        let mut den_lcm = BigInt::one();
        for c in coeffs.iter() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let mut unit = BigRational::new(den_lcm, num_gcd);
        if (coeffs[0].numer().sign() == num_bigint::Sign::Minus) != unit.is_negative() {
            unit = -unit;
        }
        for c in coeffs.iter_mut() {
            *c *= &unit;
        }
        unit
    }

    fn fmt_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Z/p for a word-sized prime p; elements are reduced residues.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Default modulus for advisory cross-checks.
    pub const DEFAULT_PRIME: u64 = 32003;

    pub fn new(p: u64) -> Self {
        assert!(p > 1 && p < (1 << 31), "modulus out of range");
        assert!(is_prime(p), "modulus must be prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        let (_, digits) = m.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u64> {
        let d = self.reduce_bigint(den);
        if d == 0 {
            return None;
        }
        let n = self.reduce_bigint(num);
        Some(n * self.inv(&d) % self.p)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }

    fn normalize(&self, coeffs: &mut [u64]) -> u64 {
        match coeffs.first() {
            None | Some(0) => 1,
            Some(&lead) => {
                let u = self.inv(&lead);
                for c in coeffs.iter_mut() {
                    *c = *c * u % self.p;
                }
                u
            }
        }
    }

    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normalize_makes_primitive_integer() {
        let q = Rationals;
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let mut v = vec![r(1, 2), r(-3, 4), r(5, 6)];
        q.normalize(&mut v);
        assert_eq!(v, vec![r(6, 1), r(-9, 1), r(10, 1)]);
        let mut w = vec![r(-2, 3), r(4, 3)];
        q.normalize(&mut w);
        assert_eq!(w, vec![r(1, 1), r(-2, 1)]);
    }

    #[test]
    fn prime_field_ops() {
        let f = PrimeField::new(32003);
        let a = f.from_i64(-1);
        assert_eq!(a, 32002);
        let b = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f.mul(&b, &f.from_i64(2)), 1);
        for v in [1u64, 2, 17, 32002] {
            assert_eq!(f.mul(&v, &f.inv(&v)), 1);
        }
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(32003)).is_none());
    }

    #[test]
    #[should_panic]
    fn composite_modulus_rejected() {
        PrimeField::new(32004);
    }
}
