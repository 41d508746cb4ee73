//! Brute-force verifiers on finite degree slices.
//!
//! A polynomial vector of degree ≤ `D` in `K[X]^n` is flattened to its
//! `n·(D+1)` coefficients, ordered like pivot indexes: coordinate `(j, r)`
//! sits at position `(j-1)(D+1) + r`. Saturations are then computed straight
//! from `Sat(M) = K·M ∩ V[X]^n` with dense linear algebra over `K`. None of
//! the incremental echelon machinery is used here.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::polyvec::{PivotIndex, PolyVec};
use crate::valuation::{content, content_of, ValuationDomain};
use crate::vxsat::SaturationResult;

/// Coordinates `{X^r e_j : 1 ≤ j ≤ n, r ≤ D}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slice {
    pub n: usize,
    pub degree: usize,
}

impl Slice {
    pub fn new(n: usize, degree: usize) -> Self {
        Slice { n, degree }
    }

    pub fn dim(&self) -> usize {
        self.n * (self.degree + 1)
    }

    pub fn position(&self, at: PivotIndex) -> usize {
        (at.index - 1) * (self.degree + 1) + at.exponent
    }

    pub fn index_at(&self, pos: usize) -> PivotIndex {
        PivotIndex::new(pos / (self.degree + 1) + 1, pos % (self.degree + 1))
    }

    /// Flattened coefficients of `v`.
    pub fn coords<F: Field>(&self, f: &F, v: &PolyVec<F::Elem>) -> Result<Vec<F::Elem>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        if let Some(deg) = v.degree().filter(|&deg| deg > self.degree) {
            return Err(Error::DegreeExceeded {
                degree: deg,
                bound: self.degree,
            });
        }
        let mut out = vec![f.zero(); self.dim()];
        for (at, c) in v.coords() {
            out[self.position(at)] = c.clone();
        }
        Ok(out)
    }

    pub fn vector<F: Field>(&self, f: &F, coords: &[F::Elem]) -> PolyVec<F::Elem> {
        let comps = coords
            .chunks(self.degree + 1)
            .map(|c| Poly::from_coeffs(f, c.to_vec()))
            .collect();
        PolyVec::new(comps)
    }

    /// Flattened `X^r v` for every `v` in `family` and every `r` keeping the
    /// degree within the slice. Zero vectors are skipped.
    pub fn shifts<F: Field>(&self, f: &F, family: &[PolyVec<F::Elem>]) -> Result<Vec<Vec<F::Elem>>> {
        let mut out = Vec::new();
        for v in family {
            let Some(deg) = v.degree() else {
                self.coords(f, v)?;
                continue;
            };
            let base = self.coords(f, v)?;
            for r in 0..=self.degree - deg {
                let mut row = vec![f.zero(); self.dim()];
                for j in 0..self.n {
                    let off = j * (self.degree + 1);
                    for e in 0..=deg {
                        row[off + e + r] = base[off + e].clone();
                    }
                }
                out.push(row);
            }
        }
        Ok(out)
    }

    /// Coordinates of exponent above `inner` first, then the rest in pivot order.
    fn outside_first(&self, inner: usize) -> Vec<usize> {
        let (mut outer, mut rest): (Vec<usize>, Vec<usize>) =
            (0..self.dim()).partition(|&p| self.index_at(p).exponent > inner);
        outer.append(&mut rest);
        outer
    }
}

fn is_zero_row<F: Field>(f: &F, r: &[F::Elem]) -> bool {
    r.iter().all(|x| f.is_zero(x))
}

// r -= a·p
fn axpy<F: Field>(f: &F, r: &mut [F::Elem], a: &F::Elem, p: &[F::Elem]) {
    for (x, y) in r.iter_mut().zip(p) {
        if !f.is_zero(y) {
            *x = f.sub(x, &f.mul(a, y));
        }
    }
}

fn scale_row<F: Field>(f: &F, r: &[F::Elem], a: &F::Elem) -> Vec<F::Elem> {
    r.iter().map(|x| f.mul(x, a)).collect()
}

/// Reduced row echelon form over `K`, eliminating columns in the given order.
/// Returns `(pivot column, row)` pairs with unit leading entries.
pub fn rref<F: Field>(f: &F, rows: Vec<Vec<F::Elem>>, order: &[usize]) -> Vec<(usize, Vec<F::Elem>)> {
    let mut rows: Vec<_> = rows.into_iter().filter(|r| !is_zero_row(f, r)).collect();
    let mut out: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    for &c in order {
        let Some(i) = rows.iter().position(|r| !f.is_zero(&r[c])) else {
            continue;
        };
        let p = rows.swap_remove(i);
        let p = scale_row(f, &p, &f.inv(&p[c]).unwrap());
        for r in rows.iter_mut().chain(out.iter_mut().map(|(_, r)| r)) {
            if !f.is_zero(&r[c]) {
                let a = r[c].clone();
                axpy(f, r, &a, &p);
            }
        }
        rows.retain(|r| !is_zero_row(f, r));
        out.push((c, p));
        if rows.is_empty() {
            break;
        }
    }
    out
}

/// `K`-basis of `{x : M·x = 0}` for a matrix given by rows of length `cols`.
pub fn nullspace<F: Field>(f: &F, rows: Vec<Vec<F::Elem>>, cols: usize) -> Vec<Vec<F::Elem>> {
    let order: Vec<usize> = (0..cols).collect();
    let reduced = rref(f, rows, &order);
    let mut is_pivot = vec![false; cols];
    for (c, _) in &reduced {
        is_pivot[*c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![f.zero(); cols];
            x[free] = f.one();
            for (c, r) in &reduced {
                x[*c] = f.neg(&r[free]);
            }
            x
        })
        .collect()
}

fn make_primitive<D: ValuationDomain>(d: &D, r: &[D::Elem]) -> Vec<D::Elem> {
    let (c, _) = content(d, r).expect("nonzero row");
    scale_row(d, r, &d.inv(&c).unwrap())
}

/// Rows `b_1, ..., b_m` with pivot columns `c_1, ..., c_m` such that
/// `b_i[c_i] ≠ 0` and `b_j[c_i] = 0` for `j > i`. Coefficients with respect
/// to such a family are read off column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularBasis<E> {
    pivots: Vec<usize>,
    rows: Vec<Vec<E>>,
}

impl<E> Default for TriangularBasis<E> {
    fn default() -> Self {
        TriangularBasis {
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }
}

impl<E: Clone> TriangularBasis<E> {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn push(&mut self, c: usize, row: Vec<E>) {
        self.pivots.push(c);
        self.rows.push(row);
    }

    /// `V`-coefficients of `x`, or `None` if `x` is outside the `V`-span.
    pub fn coefficients<D: ValuationDomain<Elem = E>>(&self, d: &D, x: &[E]) -> Option<Vec<E>> {
        let mut rest = x.to_vec();
        let mut coeffs = Vec::with_capacity(self.len());
        for (&c, b) in self.pivots.iter().zip(&self.rows) {
            let lambda = d.div(&rest[c], &b[c]).unwrap();
            if !d.in_domain(&lambda) {
                return None;
            }
            if !d.is_zero(&lambda) {
                axpy(d, &mut rest, &lambda, b);
            }
            coeffs.push(lambda);
        }
        is_zero_row(d, &rest).then_some(coeffs)
    }

    pub fn contains<D: ValuationDomain<Elem = E>>(&self, d: &D, x: &[E]) -> bool {
        self.coefficients(d, x).is_some()
    }
}

/// `V`-basis of `W ∩ V^N` for the `K`-space `W` spanned by independent `rows`.
///
/// Rows are made primitive; the first one keeps its first unit coordinate as
/// pivot, that coordinate is cleared from the others, which are made
/// primitive again, and so on.
pub fn unit_pivot_basis<D: ValuationDomain>(d: &D, rows: Vec<Vec<D::Elem>>) -> TriangularBasis<D::Elem> {
    let mut rest: Vec<_> = rows
        .iter()
        .filter(|r| !is_zero_row(d, r))
        .map(|r| make_primitive(d, r))
        .collect();
    let mut basis = TriangularBasis::default();
    while !rest.is_empty() {
        let b = rest.remove(0);
        let c = b.iter().position(|x| d.is_unit(x)).expect("primitive row");
        for r in rest.iter_mut() {
            if !d.is_zero(&r[c]) {
                let a = d.div(&r[c], &b[c]).unwrap();
                axpy(d, r, &a, &b);
                *r = make_primitive(d, r);
            }
        }
        basis.push(c, b);
    }
    basis
}

/// Echelon form of the `V`-span of `rows`, eliminating columns in `order`.
/// At each column the entry of least valuation is the pivot.
pub fn hermite<D: ValuationDomain>(d: &D, rows: Vec<Vec<D::Elem>>, order: &[usize]) -> TriangularBasis<D::Elem> {
    let mut rows: Vec<_> = rows.into_iter().filter(|r| !is_zero_row(d, r)).collect();
    let mut basis = TriangularBasis::default();
    for &c in order {
        let Ok((_, i)) = content_of(d, rows.iter().map(|r| &r[c])) else {
            continue;
        };
        let p = rows.swap_remove(i);
        for r in rows.iter_mut() {
            if !d.is_zero(&r[c]) {
                let a = d.div(&r[c], &p[c]).unwrap();
                axpy(d, r, &a, &p);
            }
        }
        rows.retain(|r| !is_zero_row(d, r));
        basis.push(c, p);
        if rows.is_empty() {
            break;
        }
    }
    basis
}

/// A `V`-submodule of a slice, with a triangular `V`-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceModule<E> {
    slice: Slice,
    basis: TriangularBasis<E>,
}

impl<E: Clone> SliceModule<E> {
    pub fn slice(&self) -> Slice {
        self.slice
    }

    pub fn basis(&self) -> &TriangularBasis<E> {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn generators<F: Field<Elem = E>>(&self, f: &F) -> Vec<PolyVec<E>> {
        self.basis.rows.iter().map(|r| self.slice.vector(f, r)).collect()
    }

    /// Membership; vectors of larger degree are never members.
    pub fn contains<D: ValuationDomain<Elem = E>>(&self, d: &D, v: &PolyVec<E>) -> bool {
        match self.slice.coords(d, v) {
            Ok(x) => self.basis.contains(d, &x),
            Err(_) => false,
        }
    }

    /// Number of basis vectors of `other` lying outside `self`.
    pub fn missing_from<D: ValuationDomain<Elem = E>>(&self, d: &D, other: &SliceModule<E>) -> usize {
        assert_eq!(self.slice, other.slice, "modules live in different slices");
        other.basis.rows.iter().filter(|r| !self.basis.contains(d, r)).count()
    }

    pub fn same_module<D: ValuationDomain<Elem = E>>(&self, d: &D, other: &SliceModule<E>) -> bool {
        self.missing_from(d, other) == 0 && other.missing_from(d, self) == 0
    }
}

fn family_dim<E: Clone>(family: &[PolyVec<E>]) -> Result<usize> {
    let n = family.first().map(PolyVec::len).ok_or(Error::EmptyFamily)?;
    match family.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        }),
        None => Ok(n),
    }
}

fn restrict<E: Clone>(big: Slice, degree: usize, triangular: TriangularBasis<E>) -> (Slice, Vec<Vec<E>>) {
    let small = Slice::new(big.n, degree);
    let rows = triangular
        .pivots
        .iter()
        .zip(triangular.rows)
        .filter(|(&c, _)| big.index_at(c).exponent <= degree)
        .map(|(_, r)| {
            (0..small.dim())
                .map(|p| r[big.position(small.index_at(p))].clone())
                .collect()
        })
        .collect();
    (small, rows)
}

/// `K·{X^r f : deg ≤ big} ∩ V[X]^n`, cut down to degree ≤ `degree`.
pub fn saturation_in_slice<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    big: usize,
    degree: usize,
) -> Result<SliceModule<D::Elem>> {
    assert!(degree <= big, "inner degree above outer degree");
    let slice = Slice::new(family_dim(family)?, big);
    let reduced = rref(d, slice.shifts(d, family)?, &slice.outside_first(degree));
    let triangular = TriangularBasis {
        pivots: reduced.iter().map(|(c, _)| *c).collect(),
        rows: reduced.into_iter().map(|(_, r)| r).collect(),
    };
    let (small, rows) = restrict(slice, degree, triangular);
    Ok(SliceModule {
        slice: small,
        basis: unit_pivot_basis(d, rows),
    })
}

/// `V`-span of `{X^r f : deg ≤ big}`, cut down to degree ≤ `degree`.
pub fn span_in_slice<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    big: usize,
    degree: usize,
) -> Result<SliceModule<D::Elem>> {
    assert!(degree <= big, "inner degree above outer degree");
    let slice = Slice::new(family_dim(family)?, big);
    let triangular = hermite(d, slice.shifts(d, family)?, &slice.outside_first(degree));
    let (slice, rows) = restrict(slice, degree, triangular);
    let basis = TriangularBasis {
        pivots: rows
            .iter()
            .map(|r| r.iter().position(|x| !d.is_zero(x)).unwrap())
            .collect(),
        rows,
    };
    Ok(SliceModule { slice, basis })
}

/// `K·F ∩ V[X]^n` inside the slice of degree `degree`, without shifts.
pub fn free_saturation<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    degree: usize,
) -> Result<SliceModule<D::Elem>> {
    let slice = Slice::new(family_dim(family)?, degree);
    let rows = family
        .iter()
        .map(|v| slice.coords(d, v))
        .collect::<Result<Vec<_>>>()?;
    let order: Vec<usize> = (0..slice.dim()).collect();
    let reduced = rref(d, rows, &order).into_iter().map(|(_, r)| r).collect();
    Ok(SliceModule {
        slice,
        basis: unit_pivot_basis(d, reduced),
    })
}

/// `V`-span of `F` inside the slice of degree `degree`, without shifts.
pub fn free_span<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    degree: usize,
) -> Result<SliceModule<D::Elem>> {
    let slice = Slice::new(family_dim(family)?, degree);
    let rows = family
        .iter()
        .map(|v| slice.coords(d, v))
        .collect::<Result<Vec<_>>>()?;
    let order: Vec<usize> = (0..slice.dim()).collect();
    Ok(SliceModule {
        slice,
        basis: hermite(d, rows, &order),
    })
}

/// `V`-basis of the saturation of the `V[X]`-module generated by `F`, on the
/// slice of degree `D`: the `K`-span of all shifts of degree ≤ `D`,
/// intersected with `V`-coordinates.
pub fn brute_saturation<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    degree: usize,
) -> Result<Vec<PolyVec<D::Elem>>> {
    if family.is_empty() {
        return Ok(Vec::new());
    }
    Ok(saturation_in_slice(d, family, degree, degree)?.generators(d))
}

/// `V`-basis of `K·F ∩ V[X]^n` on the slice of degree `D`.
pub fn brute_saturation_free<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    degree: usize,
) -> Result<Vec<PolyVec<D::Elem>>> {
    if family.is_empty() {
        return Ok(Vec::new());
    }
    Ok(free_saturation(d, family, degree)?.generators(d))
}

/// Syzygies `f ∈ V[X]^n` of `u_1, ..., u_n` with `deg f_j ≤ D`, as a module.
pub fn syzygy_slice<D: ValuationDomain>(
    d: &D,
    u: &[PolyVec<D::Elem>],
    degree: usize,
) -> Result<SliceModule<D::Elem>> {
    let k = family_dim(u)?;
    let n = u.len();
    let slice = Slice::new(n, degree);
    let du = u.iter().filter_map(PolyVec::degree).max().unwrap_or(0);
    // equation (i, e): coefficient of X^e in component i of Σ_j f_j u_j
    let mut eqs = vec![vec![d.zero(); slice.dim()]; k * (degree + du + 1)];
    for (j, uj) in u.iter().enumerate() {
        for (i, comp) in uj.components().iter().enumerate() {
            for (s, c) in comp.coeffs().iter().enumerate() {
                if d.is_zero(c) {
                    continue;
                }
                for r in 0..=degree {
                    let col = slice.position(PivotIndex::new(j + 1, r));
                    eqs[i * (degree + du + 1) + r + s][col] = c.clone();
                }
            }
        }
    }
    let kernel = nullspace(d, eqs, slice.dim());
    let order: Vec<usize> = (0..slice.dim()).collect();
    let reduced = rref(d, kernel, &order).into_iter().map(|(_, r)| r).collect();
    Ok(SliceModule {
        slice,
        basis: unit_pivot_basis(d, reduced),
    })
}

/// Primitive `V`-basis of the syzygies of degree ≤ `D`.
pub fn brute_syzygies<D: ValuationDomain>(
    d: &D,
    u: &[PolyVec<D::Elem>],
    degree: usize,
) -> Result<Vec<PolyVec<D::Elem>>> {
    if u.is_empty() {
        return Ok(Vec::new());
    }
    Ok(syzygy_slice(d, u, degree)?.generators(d))
}

/// Outcome of comparing an algorithm's output with the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    /// Degree of the slice on which both modules were compared.
    pub degree: usize,
    /// Oracle basis vectors not reached by the algorithm's output.
    pub missing: usize,
    /// Output vectors the oracle rejects.
    pub extra: usize,
}

impl Verdict {
    pub fn agree(&self) -> bool {
        self.missing == 0 && self.extra == 0
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.agree() {
            write!(f, "agree on degree <= {}", self.degree)
        } else {
            write!(
                f,
                "MISMATCH on degree <= {}: {} oracle vectors missing, {} output vectors rejected",
                self.degree, self.missing, self.extra
            )
        }
    }
}

/// Degree of the slice used to check a `V[X]`-saturation and the larger
/// degree up to which shifts are admitted before cutting down.
pub fn vx_check_degrees(n: usize, degree: usize, final_k: usize) -> (usize, usize) {
    let inner = degree + final_k + 2;
    (inner, inner + shift_allowance(n, degree, final_k))
}

fn shift_allowance(n: usize, degree: usize, final_k: usize) -> usize {
    (n + 1) * (degree + final_k + 1)
}

/// Compares a basis of `K·F ∩ V[X]^n` against the oracle, no shifts.
pub fn verify_free<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    basis: &[PolyVec<D::Elem>],
    degree: Option<usize>,
) -> Result<Verdict> {
    let top = family
        .iter()
        .chain(basis)
        .filter_map(PolyVec::degree)
        .max()
        .unwrap_or(0);
    let degree = degree.unwrap_or(top).max(top);
    let oracle = free_saturation(d, family, degree)?;
    let output = if basis.is_empty() {
        SliceModule {
            slice: oracle.slice,
            basis: TriangularBasis::default(),
        }
    } else {
        free_span(d, basis, degree)?
    };
    Ok(Verdict {
        degree,
        missing: output.missing_from(d, &oracle),
        extra: oracle.missing_from(d, &output),
    })
}

/// Compares the `V[X]`-span of `generators` with the saturation of the
/// `V[X]`-module generated by `family`, on a slice of degree `inner`, with
/// shifts admitted up to degree `outer`.
pub fn compare_vx<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    generators: &[PolyVec<D::Elem>],
    inner: usize,
    outer: usize,
) -> Result<Verdict> {
    let oracle = saturation_in_slice(d, family, outer, inner)?;
    let output = span_in_slice(d, generators, outer, inner)?;
    Ok(Verdict {
        degree: inner,
        missing: output.missing_from(d, &oracle),
        extra: oracle.missing_from(d, &output),
    })
}

/// Checks a `V[X]`-saturation run against the oracle, on the slice of the
/// given degree or else the one chosen by [`vx_check_degrees`].
pub fn verify_vx<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    result: &SaturationResult<D::Elem>,
    degree: Option<usize>,
) -> Result<Verdict> {
    let n = family_dim(family)?;
    let (inner, outer) = match degree {
        Some(inner) => (inner, inner + shift_allowance(n, result.degree, result.final_k())),
        None => vx_check_degrees(n, result.degree, result.final_k()),
    };
    compare_vx(d, family, &result.generators, inner, outer)
}

/// Checks syzygy generators against the syzygies of degree ≤ `D`, where `D`
/// exceeds the generator degrees by 2 unless given.
pub fn verify_syzygy<D: ValuationDomain>(
    d: &D,
    u: &[PolyVec<D::Elem>],
    generators: &[PolyVec<D::Elem>],
    degree: Option<usize>,
) -> Result<Verdict> {
    let top = generators
        .iter()
        .chain(u)
        .filter_map(PolyVec::degree)
        .max()
        .unwrap_or(0);
    let inner = degree.unwrap_or(top + 2).max(generators.iter().filter_map(PolyVec::degree).max().unwrap_or(0));
    let oracle = syzygy_slice(d, u, inner)?;
    let extra = generators.iter().filter(|g| !oracle.contains(d, g)).count();
    let missing = if generators.is_empty() {
        oracle.rank()
    } else {
        let outer = inner + (u.len() + 1) * (top + 1);
        let output = span_in_slice(d, generators, outer, inner)?;
        output.missing_from(d, &oracle)
    };
    Ok(Verdict {
        degree: inner,
        missing,
        extra,
    })
}
