//! Dense univariate polynomials over an exact [`Field`].
//!
//! The same type serves for `k₀[t]` inside rational functions and for
//! `K[X]`/`V[X]` in the module algorithms. Coefficients are stored from the
//! constant term upward with trailing zeros trimmed, so `degree` is exact and
//! structural equality is polynomial equality.

use crate::field::{is_atom, is_negative_atom, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from coefficients `c_0, c_1, ...`, trimming zeros.
    pub fn from_coeffs<F: Field<Elem = E>>(f: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant<F: Field<Elem = E>>(f: &F, c: E) -> Self {
        Self::from_coeffs(f, vec![c])
    }

    /// `c·X^r`.
    pub fn monomial<F: Field<Elem = E>>(f: &F, c: E, r: usize) -> Self {
        if f.is_zero(&c) {
            return Self::zero();
        }
        let mut coeffs = vec![f.zero(); r];
        coeffs.push(c);
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `X^i`, `None` when beyond the stored degree.
    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Order at zero: index of the lowest nonzero coefficient.
    pub fn order<F: Field<Elem = E>>(&self, f: &F) -> Option<usize> {
        self.coeffs.iter().position(|c| !f.is_zero(c))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(f, coeffs)
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.add(f, &other.neg(f))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        if f.is_zero(c) {
            return Self::zero();
        }
        Self::from_coeffs(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::from_coeffs(f, out)
    }

    /// Multiplication by `X^r`.
    pub fn shift<F: Field<Elem = E>>(&self, f: &F, r: usize) -> Self {
        if self.is_zero() || r == 0 {
            return self.clone();
        }
        let mut coeffs = vec![f.zero(); r];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem<F: Field<Elem = E>>(&self, f: &F, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let q = f.mul(&rem[i], &lead_inv);
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(&rem[k], &f.mul(&q, b));
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(f, quot), Self::from_coeffs(f, rem))
    }

    /// Divides by the leading coefficient. The zero polynomial is returned as is.
    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(f, &f.inv(l).unwrap()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Renders with the highest degree first, e.g. `2/3*X^2 - X + 1`.
    pub fn render<F: Field<Elem = E>>(&self, f: &F, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (r, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            terms.push(render_term(f, c, r, var));
        }
        let mut out = String::new();
        for (i, t) in terms.into_iter().enumerate() {
            if i == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}

fn render_term<F: Field>(f: &F, c: &F::Elem, r: usize, var: &str) -> String {
    let s = f.render(c);
    let wrapped = if is_atom(&s) || is_negative_atom(&s) {
        s.clone()
    } else {
        format!("({s})")
    };
    if r == 0 {
        return wrapped;
    }
    let mon = if r == 1 {
        var.to_string()
    } else {
        format!("{var}^{r}")
    };
    if f.is_one(c) {
        mon
    } else if f.is_one(&f.neg(c)) && is_negative_atom(&s) {
        format!("-{mon}")
    } else {
        format!("{wrapped}*{mon}")
    }
}
