use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{DomainSpec, ValuationDomain};
use crate::error::{Error, Result};
use crate::field::{int_valuation, is_prime, render_rational, Field};

/// ℤ_(p): rationals with nonnegative `p`-adic valuation, kept as reduced
/// fractions with positive denominator. The valuation is computed on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zp {
    p: u64,
    prime: BigInt,
}

impl Zp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Zp {
            p,
            prime: BigInt::from(p),
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `p`-adic valuation; `None` stands for the +∞ of zero.
    pub fn valuation(&self, a: &BigRational) -> Option<i64> {
        if a.is_zero() {
            return None;
        }
        let vn = int_valuation(a.numer(), &self.prime) as i64;
        let vd = int_valuation(a.denom(), &self.prime) as i64;
        Some(vn - vd)
    }

    /// `a/b` as a canonical element of `V`.
    pub fn frac(&self, a: i64, b: i64) -> Result<BigRational> {
        if b == 0 {
            return Err(Error::NotInDomain(format!("{a}/0")));
        }
        self.make(BigRational::new(BigInt::from(a), BigInt::from(b)))
    }

    fn divisible(&self, n: &BigInt) -> bool {
        (n % &self.prime).is_zero()
    }
}

impl Field for Zp {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn render(&self, a: &BigRational) -> String {
        render_rational(a)
    }
}

impl ValuationDomain for Zp {
    fn in_domain(&self, a: &BigRational) -> bool {
        a.is_zero() || !self.divisible(a.denom())
    }

    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero() && !self.divisible(a.numer()) && !self.divisible(a.denom())
    }

    fn spec(&self) -> DomainSpec {
        DomainSpec::Zp { p: self.p }
    }
}
