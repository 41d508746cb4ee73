use super::{DomainSpec, PrimeBase, ValuationDomain};
use crate::field::Field;
use crate::poly::Poly;

/// A reduced fraction `num(t)/den(t)` with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E: Clone> RatFunc<E> {
    pub fn numerator(&self) -> &Poly<E> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<E> {
        &self.den
    }
}

/// `k₀(t)` with the order-at-zero valuation; the domain is the ring of
/// rational functions without a pole at `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionsAtZero<F> {
    base: F,
}

impl<F: Field> RationalFunctionsAtZero<F> {
    pub fn new(base: F) -> Self {
        RationalFunctionsAtZero { base }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    /// Canonical `num/den`; panics on a zero denominator.
    pub fn fraction(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> RatFunc<F::Elem> {
        let f = &self.base;
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return self.zero();
        }
        let g = num.gcd(f, &den);
        let (num, _) = num.div_rem(f, &g);
        let (den, _) = den.div_rem(f, &g);
        let lc_inv = f.inv(den.leading().unwrap()).unwrap();
        RatFunc {
            num: num.scale(f, &lc_inv),
            den: den.scale(f, &lc_inv),
        }
    }

    /// Order at `t = 0`; `None` for zero.
    pub fn order(&self, a: &RatFunc<F::Elem>) -> Option<i64> {
        let on = a.num.order(&self.base)? as i64;
        let od = a.den.order(&self.base).unwrap() as i64;
        Some(on - od)
    }

    fn poly_const(&self, c: F::Elem) -> Poly<F::Elem> {
        Poly::constant(&self.base, c)
    }
}

impl<F: Field> Field for RationalFunctionsAtZero<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFunc {
            num: Poly::zero(),
            den: self.poly_const(self.base.one()),
        }
    }
    fn one(&self) -> Self::Elem {
        RatFunc {
            num: self.poly_const(self.base.one()),
            den: self.poly_const(self.base.one()),
        }
    }
    fn from_bigint(&self, n: &num_bigint::BigInt) -> Self::Elem {
        RatFunc {
            num: self.poly_const(self.base.from_bigint(n)),
            den: self.poly_const(self.base.one()),
        }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        if a.den == b.den {
            return self.fraction(a.num.add(f, &b.num), a.den.clone());
        }
        let num = a.num.mul(f, &b.den).add(f, &b.num.mul(f, &a.den));
        self.fraction(num, a.den.mul(f, &b.den))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc {
            num: a.num.neg(&self.base),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        self.fraction(a.num.mul(f, &b.num), a.den.mul(f, &b.den))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.fraction(a.den.clone(), a.num.clone()))
    }
    fn render(&self, a: &Self::Elem) -> String {
        let f = &self.base;
        let num = a.num.render(f, "t");
        if a.den.degree() == Some(0) {
            num
        } else {
            format!("({})/({})", num, a.den.render(f, "t"))
        }
    }
    fn generator(&self, name: &str) -> Option<Self::Elem> {
        (name == "t").then(|| RatFunc {
            num: Poly::monomial(&self.base, self.base.one(), 1),
            den: self.poly_const(self.base.one()),
        })
    }
}

fn regular_at_zero<F: Field>(f: &F, p: &Poly<F::Elem>) -> bool {
    p.coeff(0).is_some_and(|c| !f.is_zero(c))
}

impl<F: PrimeBase> ValuationDomain for RationalFunctionsAtZero<F> {
    fn in_domain(&self, a: &Self::Elem) -> bool {
        // reduced, so a pole at 0 shows up as den(0) = 0
        a.num.is_zero() || regular_at_zero(&self.base, &a.den)
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        regular_at_zero(&self.base, &a.num) && regular_at_zero(&self.base, &a.den)
    }

    fn spec(&self) -> DomainSpec {
        DomainSpec::RationalFunctionAtZero {
            base: self.base.tag(),
        }
    }
}
