//! A field with the trivial valuation: `V = K`, every nonzero element is a unit.

use super::{BaseField, DomainSpec, PrimeBase, ValuationDomain};
use crate::field::{Field, PrimeField, Rationals};

impl ValuationDomain for Rationals {
    fn in_domain(&self, _a: &Self::Elem) -> bool {
        true
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a)
    }
    fn spec(&self) -> DomainSpec {
        DomainSpec::TrivialField {
            base: self.tag(),
        }
    }
}

impl PrimeBase for Rationals {
    fn tag(&self) -> BaseField {
        BaseField::Rationals
    }
}

impl PrimeBase for PrimeField {
    fn tag(&self) -> BaseField {
        BaseField::Prime(self.modulus())
    }
}

impl ValuationDomain for PrimeField {
    fn in_domain(&self, _a: &Self::Elem) -> bool {
        true
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a)
    }
    fn spec(&self) -> DomainSpec {
        DomainSpec::TrivialField {
            base: self.tag(),
        }
    }
}
