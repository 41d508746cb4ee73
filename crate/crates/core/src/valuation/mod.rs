//! Residually discrete valuation domains.
//!
//! A [`ValuationDomain`] is presented through its quotient field `K`: the
//! element type is the type of `K`, and the domain `V` is carved out by
//! [`ValuationDomain::in_domain`]. Everything the module algorithms need is
//! the unit test and the divisibility decision built on it, so instances with
//! other value groups can be added without touching the algorithms.

mod rational_function;
mod trivial;
mod zp;

use std::fmt;
use std::str::FromStr;

pub use rational_function::{RatFunc, RationalFunctionsAtZero};
pub use zp::Zp;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field};

/// Outcome of comparing two elements for divisibility.
///
/// `ADividesB(x)` means `b = x·a`, `BDividesA(x)` means `a = x·b`, and
/// `Both(x, x')` carries both cofactors, which are then units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Divisibility<E> {
    ADividesB(E),
    BDividesA(E),
    Both(E, E),
}

pub trait ValuationDomain: Field {
    /// True iff the element of `K` lies in `V` (valuation ≥ 0).
    fn in_domain(&self, a: &Self::Elem) -> bool;

    /// True iff the element is a unit of `V` (valuation exactly 0).
    fn is_unit(&self, a: &Self::Elem) -> bool;

    fn spec(&self) -> DomainSpec;

    /// Canonical element of `V` equal to `raw`.
    fn make(&self, raw: Self::Elem) -> Result<Self::Elem> {
        if self.in_domain(&raw) {
            Ok(raw)
        } else {
            Err(Error::NotInDomain(self.render(&raw)))
        }
    }

    /// Does `a` divide `b` in `V`? Both arguments may be arbitrary elements of `K`.
    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return true;
        }
        match self.div(b, a) {
            None => false,
            Some(q) => self.in_domain(&q),
        }
    }

    fn decide_divisibility(&self, a: &Self::Elem, b: &Self::Elem) -> Divisibility<Self::Elem> {
        match (self.is_zero(a), self.is_zero(b)) {
            (true, true) => Divisibility::Both(self.one(), self.one()),
            (true, false) => Divisibility::BDividesA(self.zero()),
            (false, true) => Divisibility::ADividesB(self.zero()),
            (false, false) => {
                let x = self.div(b, a).unwrap();
                if self.is_unit(&x) {
                    let xi = self.inv(&x).unwrap();
                    Divisibility::Both(x, xi)
                } else if self.in_domain(&x) {
                    Divisibility::ADividesB(x)
                } else {
                    Divisibility::BDividesA(self.inv(&x).unwrap())
                }
            }
        }
    }

    /// `a / b`, required to lie in `V`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        match self.div(a, b) {
            Some(q) if self.in_domain(&q) => Ok(q),
            _ => Err(Error::NotDivisible {
                numerator: self.render(a),
                denominator: self.render(b),
            }),
        }
    }
}

/// A coefficient of minimal valuation, i.e. one dividing all the others,
/// together with the first position where such a coefficient occurs.
///
/// Zeros are skipped. Works for coefficients in `K` as well as in `V`.
pub fn content<D: ValuationDomain>(d: &D, coeffs: &[D::Elem]) -> Result<(D::Elem, usize)> {
    content_of(d, coeffs.iter())
}

/// Iterator form of [`content`].
pub fn content_of<'a, D, I>(d: &D, coeffs: I) -> Result<(D::Elem, usize)>
where
    D: ValuationDomain,
    D::Elem: 'a,
    I: IntoIterator<Item = &'a D::Elem>,
{
    let mut best: Option<(&D::Elem, usize)> = None;
    for (i, c) in coeffs.into_iter().enumerate() {
        if d.is_zero(c) {
            continue;
        }
        match best {
            Some((b, _)) if d.divides(b, c) => {}
            _ => best = Some((c, i)),
        }
    }
    best.map(|(c, i)| (c.clone(), i)).ok_or(Error::AllZero)
}

/// The prime fields ℚ and 𝔽_p, usable as base fields of rational functions.
pub trait PrimeBase: Field {
    fn tag(&self) -> BaseField;
}

/// Base field of the rational-function and trivial-valuation instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

/// Which concrete valuation domain to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainSpec {
    /// ℤ localized at `p`: rationals whose denominator is prime to `p`.
    Zp { p: u64 },
    /// `k₀(t)` functions regular at `t = 0`, valued by the order at zero.
    RationalFunctionAtZero { base: BaseField },
    /// A field with the trivial valuation: every nonzero element is a unit.
    TrivialField { base: BaseField },
}

impl DomainSpec {
    pub fn validate(&self) -> Result<()> {
        let p = match self {
            DomainSpec::Zp { p } => Some(*p),
            DomainSpec::RationalFunctionAtZero { base } | DomainSpec::TrivialField { base } => {
                match base {
                    BaseField::Rationals => None,
                    BaseField::Prime(p) => Some(*p),
                }
            }
        };
        match p {
            Some(p) if !is_prime(p) => Err(Error::NotPrime(p)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "q"),
            BaseField::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Zp { p } => write!(f, "zp:{p}"),
            DomainSpec::RationalFunctionAtZero { base } => write!(f, "rft0:{base}"),
            DomainSpec::TrivialField { base } => write!(f, "field:{base}"),
        }
    }
}

impl FromStr for BaseField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(BaseField::Rationals),
            other => other
                .parse::<u64>()
                .map(BaseField::Prime)
                .map_err(|_| Error::InvalidDomain(s.to_string())),
        }
    }
}

/// Parses `zp:<p>`, `rft0:<q|p>` or `field:<q|p>`; primality is checked.
impl FromStr for DomainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::InvalidDomain(s.to_string()))?;
        let spec = match kind.trim() {
            "zp" => DomainSpec::Zp {
                p: arg
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidDomain(s.to_string()))?,
            },
            "rft0" => DomainSpec::RationalFunctionAtZero { base: arg.parse()? },
            "field" => DomainSpec::TrivialField { base: arg.parse()? },
            _ => return Err(Error::InvalidDomain(s.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}
