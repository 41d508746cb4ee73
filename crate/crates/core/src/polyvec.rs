//! Vectors of `V[X]^n` and the lexicographic pivot order on the `V`-basis
//! `X^r f_j`.
//!
//! A [`PolyVec`] is read two ways: by its `V[X]`-coefficients (one polynomial
//! per component `f_j`) and by its `V`-coordinates, indexed by
//! [`PivotIndex`] `(j, r)` for the basis vector `X^r f_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::valuation::{content_of, ValuationDomain};

/// Index `(j, r)` of the basis vector `X^r f_j`, with `j` counted from 1.
///
/// The derived order compares `index` first, then `exponent`, which is the
/// lexicographic order `X^h f_i < X^k f_j iff i < j, or i = j and h < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PivotIndex {
    pub index: usize,
    pub exponent: usize,
}

impl PivotIndex {
    pub fn new(index: usize, exponent: usize) -> Self {
        PivotIndex { index, exponent }
    }

    /// The index of `X·e_{j,r}`.
    pub fn shifted(self) -> Self {
        PivotIndex::new(self.index, self.exponent + 1)
    }
}

impl fmt::Display for PivotIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.index, self.exponent)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVec<E> {
    comps: Vec<Poly<E>>,
}

impl<E: Clone> PolyVec<E> {
    /// Panics on an empty component list: `n` must be positive.
    pub fn new(comps: Vec<Poly<E>>) -> Self {
        assert!(!comps.is_empty(), "a vector needs at least one component");
        PolyVec { comps }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Poly::zero(); n])
    }

    /// Builds from per-component coefficient lists `[c_0, c_1, ...]`.
    pub fn from_coeffs<F: Field<Elem = E>>(f: &F, comps: Vec<Vec<E>>) -> Self {
        Self::new(comps.into_iter().map(|c| Poly::from_coeffs(f, c)).collect())
    }

    /// Builds from small integer coefficient lists; handy in tests.
    pub fn from_ints<F: Field<Elem = E>>(f: &F, comps: &[&[i64]]) -> Self {
        Self::from_coeffs(
            f,
            comps
                .iter()
                .map(|c| c.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    /// Number of components `n`.
    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Poly<E>] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Poly<E>> {
        self.comps
    }

    /// Component `f_index`, counted from 1.
    pub fn component(&self, index: usize) -> &Poly<E> {
        &self.comps[index - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    /// Highest exact degree over the components; `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.comps.iter().filter_map(Poly::degree).max()
    }

    /// Stored coordinate, `None` when it is beyond the component's degree.
    pub fn coord_ref(&self, at: PivotIndex) -> Option<&E> {
        if at.index == 0 {
            return None;
        }
        self.comps.get(at.index - 1)?.coeff(at.exponent)
    }

    /// The `V`-coordinate on `X^exponent f_index`.
    pub fn coord<F: Field<Elem = E>>(&self, f: &F, at: PivotIndex) -> Result<E> {
        if at.index == 0 || at.index > self.len() {
            return Err(Error::IndexOutOfRange {
                index: at.index,
                exponent: at.exponent,
                n: self.len(),
            });
        }
        Ok(self.coord_ref(at).cloned().unwrap_or_else(|| f.zero()))
    }

    /// All stored coordinates in increasing [`PivotIndex`] order (zeros included).
    pub fn coords(&self) -> impl Iterator<Item = (PivotIndex, &E)> + '_ {
        self.comps.iter().enumerate().flat_map(|(j, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .map(move |(r, c)| (PivotIndex::new(j + 1, r), c))
        })
    }

    fn check_len(&self, other: &Self) {
        assert_eq!(self.len(), other.len(), "component count mismatch");
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.check_len(other);
        PolyVec {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(f, b))
                .collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.check_len(other);
        PolyVec {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(f, b))
                .collect(),
        }
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        PolyVec {
            comps: self.comps.iter().map(|a| a.neg(f)).collect(),
        }
    }

    /// Multiplication by a scalar `c`.
    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        PolyVec {
            comps: self.comps.iter().map(|a| a.scale(f, c)).collect(),
        }
    }

    /// Multiplication by a polynomial scalar `p ∈ V[X]`.
    pub fn mul_poly<F: Field<Elem = E>>(&self, f: &F, p: &Poly<E>) -> Self {
        PolyVec {
            comps: self.comps.iter().map(|a| a.mul(f, p)).collect(),
        }
    }

    /// `self - c·other`.
    pub fn sub_scaled<F: Field<Elem = E>>(&self, f: &F, c: &E, other: &Self) -> Self {
        self.sub(f, &other.scale(f, c))
    }

    /// Multiplication by `X^r`.
    pub fn shift<F: Field<Elem = E>>(&self, f: &F, r: usize) -> Self {
        PolyVec {
            comps: self.comps.iter().map(|a| a.shift(f, r)).collect(),
        }
    }

    /// Multiplication by `X`.
    pub fn shift_x<F: Field<Elem = E>>(&self, f: &F) -> Self {
        self.shift(f, 1)
    }

    /// True when every coefficient lies in `V`.
    pub fn in_domain<D: ValuationDomain<Elem = E>>(&self, d: &D) -> bool {
        self.coords().all(|(_, c)| d.in_domain(c))
    }

    /// Renders components separated by `, `, parenthesized when `n > 1`.
    pub fn render<F: Field<Elem = E>>(&self, f: &F) -> String {
        let parts: Vec<String> = self.comps.iter().map(|p| p.render(f, "X")).collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(", "))
        }
    }
}

/// Pivot index and pivot coefficient: the first coordinate that is a unit.
pub fn piv<D: ValuationDomain>(d: &D, v: &PolyVec<D::Elem>) -> Result<(PivotIndex, D::Elem)> {
    v.coords()
        .find(|(_, c)| d.is_unit(c))
        .map(|(at, c)| (at, c.clone()))
        .ok_or(Error::NotPrimitive)
}

/// True when some coordinate is a unit.
pub fn is_primitive<D: ValuationDomain>(d: &D, v: &PolyVec<D::Elem>) -> bool {
    v.coords().any(|(_, c)| d.is_unit(c))
}

/// `RedPrim`: divides `v` by its content `u`, the first coordinate (in pivot
/// order) of minimal valuation. Returns the primitive quotient and `u`.
pub fn red_prim<D: ValuationDomain>(
    d: &D,
    v: &PolyVec<D::Elem>,
) -> Result<(PolyVec<D::Elem>, D::Elem)> {
    let (u, _) = content_of(d, v.coords().map(|(_, c)| c)).map_err(|_| Error::ZeroVector)?;
    let u_inv = d.inv(&u).expect("content is nonzero");
    Ok((v.scale(d, &u_inv), u))
}

/// Multiplication by `X`.
pub fn shift_x<F: Field>(f: &F, v: &PolyVec<F::Elem>) -> PolyVec<F::Elem> {
    v.shift_x(f)
}

/// Highest degree of a coordinate over a nonempty family of nonzero vectors.
pub fn family_degree<E: Clone>(family: &[PolyVec<E>]) -> Result<usize> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    family
        .iter()
        .map(|v| v.degree().ok_or(Error::ZeroVector))
        .try_fold(0, |acc, d| Ok(acc.max(d?)))
}
