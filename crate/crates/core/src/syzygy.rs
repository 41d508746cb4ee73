//! Syzygies over `V[X]`.
//!
//! The syzygy module of `u_1, ..., u_n ∈ V[X]^k` over `V[X]` is the
//! `V`-saturation of the `V[X]`-module generated by any `K[X]`-generating set
//! of the syzygies over `K[X]`, once those generators are rescaled into
//! primitive vectors of `V[X]^n`. The `K[X]` syzygies are obtained by
//! unimodular column reduction, `K[X]` being Euclidean.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::polyvec::PolyVec;
use crate::valuation::{content_of, ValuationDomain};
use crate::vxsat::{saturate_vx, SaturationResult};

/// A `k × n` matrix over `K[X]`, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPolyMatrix<E> {
    rows: usize,
    cols: Vec<Vec<Poly<E>>>,
}

impl<E: Clone> KPolyMatrix<E> {
    /// The matrix whose columns are the given vectors of `K[X]^k`.
    pub fn from_columns(columns: &[PolyVec<E>]) -> Result<Self> {
        let rows = columns.first().map_or(0, PolyVec::len);
        for c in columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
        }
        Ok(KPolyMatrix {
            rows,
            cols: columns.iter().map(|c| c.components().to_vec()).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Poly<E> {
        &self.cols[col][row]
    }

    /// `U·f` for `f ∈ K[X]^n`.
    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &PolyVec<E>) -> Vec<Poly<E>> {
        assert_eq!(v.len(), self.cols(), "vector length must match column count");
        let mut out = vec![Poly::zero(); self.rows];
        for (col, coef) in self.cols.iter().zip(v.components()) {
            if coef.is_zero() {
                continue;
            }
            for (o, entry) in out.iter_mut().zip(col) {
                *o = o.add(f, &entry.mul(f, coef));
            }
        }
        out
    }
}

fn axpy_column<F: Field>(f: &F, target: &mut [Poly<F::Elem>], q: &Poly<F::Elem>, source: &[Poly<F::Elem>]) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t = t.sub(f, &q.mul(f, s));
        }
    }
}

/// `K[X]`-basis of `{f ∈ K[X]^n : U·f = 0}`.
///
/// Each row is cleared by Euclidean column operations down to a single
/// entry of minimal degree, tracked on an `n × n` companion matrix. The
/// companion columns sitting under the columns of `U` that end up zero form
/// the basis. Each output vector is divided by the monic gcd of its entries.
pub fn kernel_kx<F: Field>(f: &F, u: &KPolyMatrix<F::Elem>) -> Vec<PolyVec<F::Elem>> {
    let n = u.cols();
    if n == 0 {
        return Vec::new();
    }
    let mut a = u.cols.clone();
    let mut t: Vec<Vec<Poly<F::Elem>>> = (0..n)
        .map(|c| {
            (0..n)
                .map(|r| if r == c { Poly::constant(f, f.one()) } else { Poly::zero() })
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();

    for row in 0..u.rows() {
        loop {
            let nonzero: Vec<usize> = active.iter().copied().filter(|&c| !a[c][row].is_zero()).collect();
            let Some(&p) = nonzero.iter().min_by_key(|&&c| a[c][row].degree()) else {
                break;
            };
            if nonzero.len() == 1 {
                active.retain(|&c| c != p);
                break;
            }
            let (pa, pt) = (a[p].clone(), t[p].clone());
            for &c in nonzero.iter().filter(|&&c| c != p) {
                let (q, _) = a[c][row].div_rem(f, &pa[row]);
                axpy_column(f, &mut a[c], &q, &pa);
                axpy_column(f, &mut t[c], &q, &pt);
            }
        }
    }

    active
        .into_iter()
        .map(|c| {
            let col = std::mem::take(&mut t[c]);
            let g = col.iter().fold(Poly::zero(), |g, p| g.gcd(f, p));
            let col = col.into_iter().map(|p| p.div_rem(f, &g).0).collect();
            PolyVec::new(col)
        })
        .collect()
}

/// Rescales a nonzero vector of `K[X]^n` into a primitive vector of `V[X]^n`
/// by dividing by its content over `K`, so the coordinate at the content
/// position becomes 1.
pub fn primitive_scale<D: ValuationDomain>(d: &D, v: &PolyVec<D::Elem>) -> Result<PolyVec<D::Elem>> {
    let (c, _) = content_of(d, v.coords().map(|(_, c)| c)).map_err(|_| Error::ZeroVector)?;
    Ok(v.scale(d, &d.inv(&c).expect("content is nonzero")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyResult<E> {
    /// The rescaled `K[X]` syzygies `s^1, ..., s^m`.
    pub kernel: Vec<PolyVec<E>>,
    /// Saturation of the `V[X]`-module they generate; its generators are the
    /// generators of the syzygy module over `V[X]`.
    pub saturation: SaturationResult<E>,
}

impl<E: Clone + PartialEq> SyzygyResult<E> {
    pub fn generators(&self) -> &[PolyVec<E>] {
        &self.saturation.generators
    }
}

/// Finite generating set of the syzygies of `u_1, ..., u_n ∈ V[X]^k` over `V[X]`.
pub fn syzygy_vx<D: ValuationDomain>(
    d: &D,
    u: &[PolyVec<D::Elem>],
    max_iter: usize,
) -> Result<SyzygyResult<D::Elem>> {
    if u.is_empty() {
        return Err(Error::EmptyInput);
    }
    for v in u {
        if !v.in_domain(d) {
            return Err(Error::NotInDomain(v.render(d)));
        }
    }
    let matrix = KPolyMatrix::from_columns(u)?;
    let kernel = kernel_kx(d, &matrix)
        .iter()
        .map(|v| primitive_scale(d, v))
        .collect::<Result<Vec<_>>>()?;
    let saturation = if kernel.is_empty() {
        SaturationResult::empty()
    } else {
        saturate_vx(d, &kernel, max_iter)?
    };
    Ok(SyzygyResult { kernel, saturation })
}

/// `Σ_j f_j u_j`.
pub fn combine<F: Field>(f: &F, u: &[PolyVec<F::Elem>], coeffs: &PolyVec<F::Elem>) -> Result<Vec<Poly<F::Elem>>> {
    Ok(KPolyMatrix::from_columns(u)?.apply(f, coeffs))
}
