//! Saturation of a finitely generated submodule of a free `V`-module via
//! strict residual echelon forms.
//!
//! Columns are treated one at a time: each new column is reduced against
//! the current basis by Gaussian elimination on the pivot coordinates, and a
//! nonzero remainder is made primitive and appended. The list obtained after
//! any prefix of the input is a `V`-basis of the saturation of that prefix.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::polyvec::{piv, red_prim, PivotIndex, PolyVec};
use crate::valuation::ValuationDomain;

/// Primitive columns in strict echelon form.
///
/// Invariants: pivots are pairwise distinct, and a column has a zero
/// coordinate at the pivot of every earlier column. Such a family is a basis
/// of a saturated `V`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis<E> {
    cols: Vec<PolyVec<E>>,
    pivots: Vec<(PivotIndex, E)>,
    occupied: HashSet<PivotIndex>,
}

impl<E> Default for EchelonBasis<E> {
    fn default() -> Self {
        EchelonBasis {
            cols: Vec::new(),
            pivots: Vec::new(),
            occupied: HashSet::new(),
        }
    }
}

/// Result of treating one column with [`EchelonBasis::insert`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inserted<E> {
    /// The appended primitive column, or the zero vector if the input already
    /// lay in the `V`-span of the basis.
    pub vector: PolyVec<E>,
    /// True when the content removed by `RedPrim` was not a unit, i.e. the
    /// new column is not in the `V`-span of the old basis and the input.
    pub new_generator: bool,
}

impl<E: Clone + PartialEq> EchelonBasis<E> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Validates and wraps an existing list of columns.
    pub fn from_columns<D: ValuationDomain<Elem = E>>(d: &D, cols: Vec<PolyVec<E>>) -> Result<Self> {
        let mut basis = Self::new();
        for c in cols {
            let (at, cp) = piv(d, &c)?;
            basis.occupied.insert(at);
            basis.pivots.push((at, cp));
            basis.cols.push(c);
        }
        if basis.occupied.len() != basis.cols.len() || !basis.is_strict(d) {
            return Err(Error::NotPrimitive);
        }
        Ok(basis)
    }

    pub fn columns(&self) -> &[PolyVec<E>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<PolyVec<E>> {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Pivot indices, in column order.
    pub fn pivots(&self) -> impl Iterator<Item = PivotIndex> + '_ {
        self.pivots.iter().map(|(at, _)| *at)
    }

    /// Pivot index and pivot coefficient of column `i`.
    pub fn pivot(&self, i: usize) -> &(PivotIndex, E) {
        &self.pivots[i]
    }

    pub fn has_pivot(&self, at: PivotIndex) -> bool {
        self.occupied.contains(&at)
    }

    /// The first `len` columns, itself a strict echelon basis.
    pub fn prefix(&self, len: usize) -> Self {
        let cols = self.cols[..len].to_vec();
        let pivots = self.pivots[..len].to_vec();
        let occupied = pivots.iter().map(|(at, _)| *at).collect();
        EchelonBasis {
            cols,
            pivots,
            occupied,
        }
    }

    /// Checks both echelon invariants from scratch.
    pub fn is_strict<D: ValuationDomain<Elem = E>>(&self, d: &D) -> bool {
        let mut seen = HashSet::new();
        for (i, c) in self.cols.iter().enumerate() {
            match piv(d, c) {
                Ok((at, cp)) if at == self.pivots[i].0 && cp == self.pivots[i].1 => {
                    if !seen.insert(at) {
                        return false;
                    }
                }
                _ => return false,
            }
            let later_zero = self.cols[i + 1..]
                .iter()
                .all(|later| later.coord_ref(self.pivots[i].0).is_none_or(|x| d.is_zero(x)));
            if !later_zero {
                return false;
            }
        }
        true
    }

    /// Gaussian elimination of `c` against the columns, in order. Stops early
    /// once the vector vanishes.
    pub fn eliminate<D: ValuationDomain<Elem = E>>(&self, d: &D, c: &PolyVec<E>) -> PolyVec<E> {
        let mut v = c.clone();
        for (col, (at, cp)) in self.cols.iter().zip(&self.pivots) {
            let Some(cs) = v.coord_ref(*at) else { continue };
            if d.is_zero(cs) {
                continue;
            }
            let factor = d.div(cs, cp).expect("pivot coefficient is a unit");
            v = v.sub_scaled(d, &factor, col);
            if v.is_zero() {
                break;
            }
        }
        v
    }

    /// Treats one more column: eliminate, then `RedPrim` and append if nonzero.
    pub fn insert<D: ValuationDomain<Elem = E>>(&mut self, d: &D, v0: &PolyVec<E>) -> Result<Inserted<E>> {
        if v0.is_zero() {
            return Err(Error::ZeroVector);
        }
        if let Some(first) = self.cols.first() {
            if first.len() != v0.len() {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    found: v0.len(),
                });
            }
        }
        let v = self.eliminate(d, v0);
        if v.is_zero() {
            return Ok(Inserted {
                vector: v,
                new_generator: false,
            });
        }
        let (w, content) = red_prim(d, &v)?;
        let (at, cp) = piv(d, &w).expect("RedPrim output is primitive");
        debug_assert!(!self.occupied.contains(&at));
        self.occupied.insert(at);
        self.pivots.push((at, cp));
        self.cols.push(w.clone());
        Ok(Inserted {
            vector: w,
            new_generator: !d.is_unit(&content),
        })
    }
}

/// One Gaussian elimination pass of `c` against `basis`.
pub fn gauss_eliminate<D: ValuationDomain>(
    d: &D,
    c: &PolyVec<D::Elem>,
    basis: &EchelonBasis<D::Elem>,
) -> PolyVec<D::Elem> {
    basis.eliminate(d, c)
}

/// Functional form of [`EchelonBasis::insert`]: returns the treated vector,
/// the new-generator flag and the extended basis.
pub fn echelon_insert<D: ValuationDomain>(
    d: &D,
    basis: &EchelonBasis<D::Elem>,
    v0: &PolyVec<D::Elem>,
) -> Result<(PolyVec<D::Elem>, bool, EchelonBasis<D::Elem>)> {
    let mut next = basis.clone();
    let ins = next.insert(d, v0)?;
    Ok((ins.vector, ins.new_generator, next))
}

/// Strict echelon `V`-basis of the saturation of the `V`-span of `family`.
/// Zero columns are skipped.
pub fn saturate_free<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
) -> Result<EchelonBasis<D::Elem>> {
    let mut basis = EchelonBasis::new();
    for v in family.iter().filter(|v| !v.is_zero()) {
        basis.insert(d, v)?;
    }
    Ok(basis)
}

/// Coefficients of `v` on the basis if `v` lies in its `V`-span.
pub fn member<D: ValuationDomain>(
    d: &D,
    basis: &EchelonBasis<D::Elem>,
    v: &PolyVec<D::Elem>,
) -> Option<Vec<D::Elem>> {
    let mut rest = v.clone();
    let mut coeffs = Vec::with_capacity(basis.len());
    for (col, (at, cp)) in basis.cols.iter().zip(&basis.pivots) {
        let cs = rest.coord_ref(*at).cloned().unwrap_or_else(|| d.zero());
        let a = d.div(&cs, cp).expect("pivot coefficient is a unit");
        if !d.in_domain(&a) {
            return None;
        }
        if !d.is_zero(&a) {
            rest = rest.sub_scaled(d, &a, col);
        }
        coeffs.push(a);
    }
    rest.is_zero().then_some(coeffs)
}
