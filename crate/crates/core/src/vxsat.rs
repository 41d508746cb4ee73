//! `V`-saturation of a finitely generated `V[X]`-submodule of `V[X]^n`.
//!
//! The `V`-module spanned by `S, XS, ..., X^k S` is saturated incrementally:
//! `G_0` is the strict echelon basis obtained from `S`, and `G_{k+1}` is
//! obtained from `G_k` by treating `X·H_k`, where `H_k` are the columns added
//! at step `k`. The loop stops when `H_k` has no supernumerary column (defect
//! zero); the columns collected in `B` then generate the saturation as a
//! `V[X]`-module.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::echelon::EchelonBasis;
use crate::error::{Error, Result};
use crate::polyvec::{family_degree, piv, PivotIndex, PolyVec};
use crate::valuation::ValuationDomain;

pub const DEFAULT_MAX_ITER: usize = 64;

/// Counters attached to step `k` of the loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationRecord {
    pub k: usize,
    /// `N_k`: columns of `H_k`, i.e. vectors that survived insertion.
    pub new_columns: usize,
    /// `r_k`: number of columns of `G_k`.
    pub rank: usize,
    /// `n_k`: distinct pivot indexes present in `H_k`.
    pub indexes: usize,
    /// `u_k = n_k·(1 + d + k)`.
    pub available: usize,
    /// `δ_k`: supernumerary columns of `H_k`.
    pub defect: usize,
    /// `Δ_k = u_k − r_k`.
    pub slack: i64,
    /// Shifted pivots of `H_{k-1}` that were already pivots of `G_{k-1}`.
    pub collisions: usize,
    /// Shifted pivots of `H_{k-1}` that were already pivots of `G_0`.
    pub collisions_initial: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationResult<E> {
    /// Strict echelon `V`-basis of `G_k` at termination.
    pub basis: EchelonBasis<E>,
    /// `V[X]`-generators of the saturation, extracted from `basis`.
    pub generators: Vec<PolyVec<E>>,
    pub trace: Vec<IterationRecord>,
    /// Highest coordinate degree of the input family.
    pub degree: usize,
}

impl<E: Clone + PartialEq> SaturationResult<E> {
    /// Result for the zero module.
    pub fn empty() -> Self {
        SaturationResult {
            basis: EchelonBasis::new(),
            generators: Vec::new(),
            trace: Vec::new(),
            degree: 0,
        }
    }

    /// Index of the last iteration.
    pub fn final_k(&self) -> usize {
        self.trace.last().map_or(0, |r| r.k)
    }

    /// Columns of `H_k` as recorded in the trace.
    pub fn h_columns(&self, k: usize) -> &[PolyVec<E>] {
        let rec = &self.trace[k];
        &self.basis.columns()[rec.rank - rec.new_columns..rec.rank]
    }

    /// The basis `G_k`.
    pub fn g_basis(&self, k: usize) -> EchelonBasis<E> {
        self.basis.prefix(self.trace[k].rank)
    }
}

/// Number of supernumerary pivots: those with a strictly larger exponent
/// present on the same index.
pub fn defect_of_pivots(pivots: &[PivotIndex]) -> usize {
    let mut top: BTreeMap<usize, usize> = BTreeMap::new();
    for p in pivots {
        let e = top.entry(p.index).or_insert(p.exponent);
        *e = (*e).max(p.exponent);
    }
    pivots.iter().filter(|p| p.exponent < top[&p.index]).count()
}

/// Defect of a list of primitive columns.
pub fn defect<D: ValuationDomain>(d: &D, h: &[PolyVec<D::Elem>]) -> Result<usize> {
    let pivots = h
        .iter()
        .map(|c| piv(d, c).map(|(at, _)| at))
        .collect::<Result<Vec<_>>>()?;
    Ok(defect_of_pivots(&pivots))
}

/// Counters for a step whose `G_k` has `rank` columns and whose `H_k` has the
/// given pivots, for a family of degree `degree`.
pub fn counters_from_pivots(rank: usize, h_pivots: &[PivotIndex], degree: usize, k: usize) -> IterationRecord {
    let indexes = h_pivots.iter().map(|p| p.index).collect::<BTreeSet<_>>().len();
    let available = indexes * (1 + degree + k);
    IterationRecord {
        k,
        new_columns: h_pivots.len(),
        rank,
        indexes,
        available,
        defect: defect_of_pivots(h_pivots),
        slack: available as i64 - rank as i64,
        collisions: 0,
        collisions_initial: 0,
    }
}

/// Counters for `G_k` and its suffix `H_k`.
pub fn counters<D: ValuationDomain>(
    d: &D,
    g: &EchelonBasis<D::Elem>,
    h: &[PolyVec<D::Elem>],
    degree: usize,
    k: usize,
) -> Result<IterationRecord> {
    let pivots = h
        .iter()
        .map(|c| piv(d, c).map(|(at, _)| at))
        .collect::<Result<Vec<_>>>()?;
    Ok(counters_from_pivots(g.len(), &pivots, degree, k))
}

/// Finite `V[X]`-generating set of the `V`-saturation of the `V[X]`-module
/// generated by `family`.
///
/// Fails with [`Error::IterationCapExceeded`] if the defect is still positive
/// after `max_iter` shift rounds.
pub fn saturate_vx<D: ValuationDomain>(
    d: &D,
    family: &[PolyVec<D::Elem>],
    max_iter: usize,
) -> Result<SaturationResult<D::Elem>> {
    let s: Vec<_> = family.iter().filter(|v| !v.is_zero()).cloned().collect();
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let degree = family_degree(&s)?;

    let mut g = EchelonBasis::new();
    for v in &s {
        g.insert(d, v)?;
    }
    let mut generators = g.columns().to_vec();
    let mut fresh = g.len();
    let initial: HashSet<PivotIndex> = g.pivots().collect();

    let pivots_of_tail = |g: &EchelonBasis<D::Elem>, n: usize| -> Vec<PivotIndex> {
        (g.len() - n..g.len()).map(|i| g.pivot(i).0).collect()
    };

    let mut trace = vec![counters_from_pivots(g.len(), &pivots_of_tail(&g, fresh), degree, 0)];
    let mut k = 0;
    while trace[k].defect > 0 {
        if k >= max_iter {
            return Err(Error::IterationCapExceeded(max_iter));
        }
        let start = g.len() - fresh;
        let mut collisions = 0;
        let mut collisions_initial = 0;
        for i in start..g.len() {
            let target = g.pivot(i).0.shifted();
            collisions += usize::from(g.has_pivot(target));
            collisions_initial += usize::from(initial.contains(&target));
        }
        let shifted: Vec<_> = g.columns()[start..].iter().map(|c| c.shift_x(d)).collect();

        fresh = 0;
        for v in &shifted {
            let ins = g.insert(d, v)?;
            if !ins.vector.is_zero() {
                fresh += 1;
            }
            if ins.new_generator {
                generators.push(ins.vector);
            }
        }
        k += 1;

        let mut rec = counters_from_pivots(g.len(), &pivots_of_tail(&g, fresh), degree, k);
        rec.collisions = collisions;
        rec.collisions_initial = collisions_initial;
        debug_assert_eq!(
            rec.indexes,
            g.pivots().map(|p| p.index).collect::<BTreeSet<_>>().len(),
            "indexes of H_k and G_k coincide"
        );
        trace.push(rec);
    }

    Ok(SaturationResult {
        basis: g,
        generators,
        trace,
        degree,
    })
}
