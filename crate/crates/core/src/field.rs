//! Exact coefficient fields: the rationals and prime fields `F_p` with `p < 2^31`.
//!
//! Every polynomial carries its field as a small context value, so prime-field
//! elements are bare residues and rational elements are reduced big rationals
//! (lowest terms, positive denominator, zero stored as 0/1).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced arbitrary-precision rational, the coefficient type over `Q`.
pub type Rat = BigRational;

/// Convenience constructor: the rational `n`.
pub fn rat_i(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor: the rational `n/d`. Panics on `d = 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient with the convention that out-of-range arguments give 0.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// An exact field of coefficients, passed by value next to each polynomial.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// `(is_negative, magnitude_string)` used by the printer for sign folding.
    fn display_parts(&self, a: &Self::Elem) -> (bool, String);
    /// Numerator/denominator pair for the JSON interchange format.
    fn to_num_den(&self, a: &Self::Elem) -> (BigInt, BigInt);
    fn from_num_den(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    /// `"Q"` or `"Fp"`, the JSON field tag.
    fn name(&self) -> &'static str;
    /// `None` over the rationals, `Some(p)` over `F_p`.
    fn characteristic(&self) -> Option<u64>;
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Q;

impl Field for Q {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> Rat {
        rat_i(n)
    }
    fn from_bigint(&self, n: &BigInt) -> Rat {
        Rat::from_integer(n.clone())
    }
    fn display_parts(&self, a: &Rat) -> (bool, String) {
        let neg = a.is_negative();
        let m = a.abs();
        let s = if m.denom().is_one() {
            m.numer().to_string()
        } else {
            format!("{}/{}", m.numer(), m.denom())
        };
        (neg, s)
    }
    fn to_num_den(&self, a: &Rat) -> (BigInt, BigInt) {
        (a.numer().clone(), a.denom().clone())
    }
    fn from_num_den(&self, num: &BigInt, den: &BigInt) -> Result<Rat> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat::new(num.clone(), den.clone()))
    }
    fn name(&self) -> &'static str {
        "Q"
    }
    fn characteristic(&self) -> Option<u64> {
        None
    }
}

/// The prime field `F_p`, restricted to `p < 2^31` so products fit in `u64`
/// without any special reduction scheme.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (((n % p) + p) % p) as u64
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        use num_traits::ToPrimitive;
        let m = n % BigInt::from(self.p);
        let m = if m.is_negative() { m + BigInt::from(self.p) } else { m };
        m.to_u64().expect("residue fits u64")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        self.reduce_bigint(n)
    }
    fn display_parts(&self, a: &u64) -> (bool, String) {
        (false, a.to_string())
    }
    fn to_num_den(&self, a: &u64) -> (BigInt, BigInt) {
        (BigInt::from(*a), BigInt::one())
    }
    fn from_num_den(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let d = self.reduce_bigint(den);
        let di = self.inv(&d).ok_or(Error::ZeroDenominator)?;
        Ok(self.mul(&self.reduce_bigint(num), &di))
    }
    fn name(&self) -> &'static str {
        "Fp"
    }
    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_out_of_range_is_zero() {
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(5, 6), BigInt::zero());
        assert_eq!(binom(-2, 0), BigInt::zero());
        assert_eq!(binom(6, 2), BigInt::from(15));
    }

    #[test]
    fn prime_field_basics() {
        let f = PrimeField::new(31).unwrap();
        assert_eq!(f.mul(&17, &20), 17 * 20 % 31);
        assert_eq!(f.mul(&f.inv(&5).unwrap(), &5), 1);
        assert_eq!(f.reduce_i64(-1), 30);
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(1 << 32).is_err());
    }

    #[test]
    fn rational_invariants_hold() {
        let r = Rat::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        let z = Q.zero();
        assert!(z.denom().is_one());
    }
}
