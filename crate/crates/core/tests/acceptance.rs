//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;

use common::Gen;
use valsat::cli::pivot_diagram;
use valsat::echelon::{gauss_eliminate, saturate_free, EchelonBasis};
use valsat::oracle::{brute_syzygies, compare_vx, rref, span_in_slice, syzygy_slice, verify_free, verify_syzygy, verify_vx, vx_check_degrees};
use valsat::poly::Poly;
use valsat::polyvec::{is_primitive, piv};
use valsat::syzygy::{kernel_kx, syzygy_vx, KPolyMatrix};
use valsat::vxsat::{counters, saturate_vx, IterationRecord, SaturationResult};
use valsat::{Field, PivotIndex, PolyVec, Rationals, ValuationDomain, Zp};

type Q = BigRational;
type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// `X^r e_j` in `V[X]^n`.
fn unit_column(d: &Zp, n: usize, at: (usize, usize)) -> PolyVec<Q> {
    let mut comps = vec![Poly::zero(); n];
    comps[at.0 - 1] = Poly::monomial(d, d.one(), at.1);
    PolyVec::new(comps)
}

fn columns(d: &Zp, n: usize, pivots: &[(usize, usize)]) -> Vec<PolyVec<Q>> {
    pivots.iter().map(|&at| unit_column(d, n, at)).collect()
}

fn counter_tuple(r: &IterationRecord) -> (usize, usize, usize, usize, i64) {
    (r.indexes, r.rank, r.available, r.defect, r.slack)
}

fn reference_counters() -> Outcome {
    let d = Zp::new(2).unwrap();
    let (n, deg) = (5, 4);

    // The pivot multiset as listed for the first step.
    let listed = [(1, 2), (1, 4), (2, 2), (3, 1), (4, 1), (4, 3)];
    let g0 = EchelonBasis::from_columns(&d, columns(&d, n, &listed)).map_err(|e| e.to_string())?;
    let rec = counters(&d, &g0, g0.columns(), deg, 0).map_err(|e| e.to_string())?;
    ensure!(counter_tuple(&rec) == (4, 6, 20, 2, 14), "listed H0 gives {:?}", counter_tuple(&rec));

    let pivots: Vec<PivotIndex> = g0.pivots().collect();
    let diagram = pivot_diagram(&[], &pivots, n, deg);
    let circles = diagram.matches(['O', '@']).count();
    let doubles = diagram.matches('@').count();
    ensure!(circles == 6 && doubles == 2, "diagram has {circles} circles, {doubles} double");
    let top = diagram.lines().nth(1).unwrap();
    ensure!(top == "i=5 | # # # # #", "row 5 should be unoccupied: {top}");

    // The configuration implied by the walkthrough: collision at (4, 2), (5, 1) shifted in.
    let h0 = [(1, 3), (2, 2), (4, 1), (4, 2), (5, 0), (5, 2)];
    let g0 = EchelonBasis::from_columns(&d, columns(&d, n, &h0)).map_err(|e| e.to_string())?;
    let rec0 = counters(&d, &g0, g0.columns(), deg, 0).map_err(|e| e.to_string())?;
    ensure!(counter_tuple(&rec0) == (4, 6, 20, 2, 14), "walkthrough H0 gives {:?}", counter_tuple(&rec0));

    // Second step: the collision at (4, 2) produced a pivot at (2, 0).
    let h1 = [(1, 4), (2, 3), (4, 3), (5, 3), (5, 1), (2, 0)];
    let mut all = columns(&d, n, &h0);
    all.extend(columns(&d, n, &h1));
    let g1 = EchelonBasis::from_columns(&d, all).map_err(|e| e.to_string())?;
    let rec1 = counters(&d, &g1, &g1.columns()[6..], deg, 1).map_err(|e| e.to_string())?;
    let got = (rec1.indexes, rec1.defect, rec1.available, rec1.slack, rec1.rank);
    ensure!(got == (4, 2, 24, 12, 12), "second step gives (n1, d1, u1, D1, r1) = {got:?}");
    ensure!(rec1.rank == rec0.rank + rec1.new_columns, "r1 != r0 + N1");
    Ok("(n0,r0,u0,d0,D0)=(4,6,20,2,14); (n1,d1,u1,D1)=(4,2,24,12), r1=12".into())
}

fn worked_syzygy() -> Outcome {
    let d = Zp::new(2).unwrap();
    let u = [PolyVec::from_ints(&d, &[&[0, 1]]), PolyVec::from_ints(&d, &[&[2]])];
    let res = syzygy_vx(&d, &u, 64).map_err(|e| e.to_string())?;
    let gens = res.generators();
    ensure!(gens.len() == 1, "expected one generator, got {}", gens.len());
    let g = &gens[0];
    let reference = PolyVec::from_ints(&d, &[&[2], &[0, -1]]);
    let c = d.div(&g.coord(&d, PivotIndex::new(1, 0)).unwrap(), &d.from_i64(2)).unwrap();
    ensure!(d.is_unit(&c), "generator {} is not a unit multiple of (2, -X)", g.render(&d));
    ensure!(*g == reference.scale(&d, &c), "generator {} is not c*(2, -X)", g.render(&d));

    // Any syzygy (f, g) has f = 2h and g = -hX; each such pair is a multiple of the generator.
    let mut gen = Gen::new(2);
    let cinv = d.inv(&c).unwrap();
    for _ in 0..50 {
        let h = gen.poly(&d, 4);
        let s = PolyVec::new(vec![h.scale(&d, &d.from_i64(2)), h.mul(&d, &Poly::monomial(&d, d.from_i64(-1), 1))]);
        let image = u[0].component(1).mul(&d, s.component(1)).add(&d, &u[1].component(1).mul(&d, s.component(2)));
        ensure!(image.is_zero(), "(2h, -hX) is not a syzygy");
        ensure!(g.mul_poly(&d, &h.scale(&d, &cinv)) == s, "(2h, -hX) not a multiple of the generator");
    }

    let oracle = brute_syzygies(&d, &u, 6).map_err(|e| e.to_string())?;
    let span = span_in_slice(&d, gens, 20, 6).map_err(|e| e.to_string())?;
    ensure!(oracle.iter().all(|v| span.contains(&d, v)), "oracle syzygy outside V[X]*B");
    let slice = syzygy_slice(&d, &u, 6).map_err(|e| e.to_string())?;
    ensure!(gens.iter().all(|v| slice.contains(&d, v)), "generator outside the oracle syzygies");
    let verdict = verify_syzygy(&d, &u, gens, Some(6)).map_err(|e| e.to_string())?;
    ensure!(verdict.agree(), "{verdict}");
    Ok(format!("B = [{}]; {} oracle vectors at D = 6 agree", g.render(&d), oracle.len()))
}

fn free_oracle_equivalence() -> Outcome {
    let mut gen = Gen::new(3);
    let mut nontrivial = 0;
    for case in 0..500 {
        let d = gen.domain();
        let n = gen_range(&mut gen, 1, 4);
        let m = gen_range(&mut gen, 1, 5);
        let deg = gen_range(&mut gen, 0, 2);
        let fam = gen.family(&d, n, m, deg);
        let g = saturate_free(&d, &fam).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(g.is_strict(&d), "case {case}: basis not strict");
        let verdict = verify_free(&d, &fam, g.columns(), None).map_err(|e| e.to_string())?;
        ensure!(verdict.agree(), "case {case} over Z_({}): {verdict}", d.prime());
        if g.len() < fam.len() || fam.iter().any(|v| !v.is_zero() && !is_primitive(&d, v)) {
            nontrivial += 1;
        }
    }
    Ok(format!("500/500 agree ({nontrivial} with non-saturated or dependent input)"))
}

fn gen_range(gen: &mut Gen, lo: usize, hi: usize) -> usize {
    use rand::Rng;
    gen.rng.gen_range(lo..=hi)
}

fn check_trace(res: &SaturationResult<Q>) -> Result<(), String> {
    let t = &res.trace;
    ensure!(t.last().map(|r| r.defect) == Some(0), "final defect not 0");
    for (k, r) in t.iter().enumerate() {
        ensure!(r.k == k, "trace index");
        ensure!(r.available == r.indexes * (1 + res.degree + k), "u_{k} != n_k(1+d+k)");
        ensure!(r.slack == r.available as i64 - r.rank as i64, "Delta_{k} != u_k - r_k");
        if r.new_columns > 0 {
            ensure!(r.new_columns == r.indexes + r.defect, "N_{k} != n_k + delta_k");
        }
        if k > 0 {
            let p = &t[k - 1];
            ensure!(r.rank == p.rank + r.new_columns, "r_{k} != r_(k-1) + N_k");
            ensure!(r.defect <= p.defect, "delta increased at k = {k}");
            ensure!(r.indexes >= p.indexes, "n_k decreased at k = {k}");
            if r.indexes == p.indexes {
                ensure!(r.slack == p.slack - r.defect as i64, "Delta recurrence fails at k = {k}");
            }
        }
    }
    Ok(())
}

fn vx_oracle_equivalence() -> Outcome {
    let mut gen = Gen::new(4);
    let mut max_k = 0;
    let mut shifted = 0;
    for case in 0..200 {
        let d = gen.domain();
        let n = gen_range(&mut gen, 1, 3);
        let m = gen_range(&mut gen, 1, 3);
        let deg = gen_range(&mut gen, 0, 3);
        let fam = gen.vx_family(&d, n, m, deg);
        let res = saturate_vx(&d, &fam, 64).map_err(|e| format!("case {case}: {e}"))?;
        check_trace(&res).map_err(|e| format!("case {case}: {e}"))?;
        for b in &res.generators {
            ensure!(res.basis.columns().contains(b), "case {case}: B not inside G");
        }
        let verdict = verify_vx(&d, &fam, &res, None).map_err(|e| e.to_string())?;
        ensure!(verdict.agree(), "case {case} over Z_({}): {verdict}", d.prime());
        max_k = max_k.max(res.final_k());
        shifted += usize::from(res.final_k() > 0);
    }
    Ok(format!("200/200 agree; {shifted} needed shifts, largest k_final = {max_k}"))
}

fn idempotence() -> Outcome {
    let mut gen = Gen::new(5);
    let mut immediate = 0;
    for case in 0..100 {
        let d = gen.domain();
        let n = gen_range(&mut gen, 1, 3);
        let m = gen_range(&mut gen, 1, 3);
        let deg = gen_range(&mut gen, 0, 3);
        let fam = gen.vx_family(&d, n, m, deg);
        let res = saturate_vx(&d, &fam, 64).map_err(|e| format!("case {case}: {e}"))?;
        let again = saturate_vx(&d, &res.generators, 64).map_err(|e| format!("case {case}: {e}"))?;
        if again.trace.len() == 1 && again.trace[0].defect == 0 {
            immediate += 1;
            continue;
        }
        let (inner, outer) = vx_check_degrees(n, res.degree, res.final_k().max(again.final_k()));
        let verdict = compare_vx(&d, &res.generators, &again.generators, inner, outer).map_err(|e| e.to_string())?;
        ensure!(verdict.agree(), "case {case}: {verdict}");
    }
    Ok(format!("100/100 ({immediate} stop at k = 0, the rest span the same module)"))
}

fn fresh_pivot_elimination() -> Outcome {
    let mut gen = Gen::new(6);
    let mut done = 0;
    let mut touched = 0;
    while done < 1000 {
        let d = gen.domain();
        let n = gen_range(&mut gen, 1, 4);
        let deg = gen_range(&mut gen, 0, 2);
        let m = gen_range(&mut gen, 0, 4);
        let basis = saturate_free(&d, &gen.family(&d, n, m, deg)).unwrap();
        let c = gen.vector(&d, n, deg);
        let Ok((at, _)) = piv(&d, &c) else { continue };
        if basis.has_pivot(at) {
            continue;
        }
        let out = gauss_eliminate(&d, &c, &basis);
        ensure!(is_primitive(&d, &out), "case {done}: result not primitive");
        let (at2, _) = piv(&d, &out).unwrap();
        ensure!(at2 == at, "case {done}: pivot moved from {at} to {at2}");
        for p in basis.pivots() {
            ensure!(out.coord(&d, p).map(|x| d.is_zero(&x)).unwrap_or(true), "case {done}: pivot coordinate not cleared");
        }
        touched += usize::from(out != c);
        done += 1;
    }
    Ok(format!("1000/1000 ({touched} actually modified by elimination)"))
}

fn eval_rank(f: &Rationals, cols: &[Vec<Poly<Q>>], rows: usize, points: usize) -> usize {
    (0..=points)
        .map(|x| {
            let x = f.from_i64(x as i64);
            let m: Vec<Vec<Q>> = (0..rows)
                .map(|i| cols.iter().map(|c| c[i].eval(f, &x)).collect())
                .collect();
            let order: Vec<usize> = (0..cols.len()).collect();
            rref(f, m, &order).len()
        })
        .max()
        .unwrap_or(0)
}

fn kernel_rank_check() -> Outcome {
    let f = Rationals;
    let mut gen = Gen::new(7);
    let mut deficient = 0;
    for case in 0..200 {
        let k = gen_range(&mut gen, 1, 3);
        let n = gen_range(&mut gen, 1, 4);
        let deg = gen_range(&mut gen, 0, 3);
        let mut cols: Vec<Vec<Poly<Q>>> = Vec::new();
        for _ in 0..n {
            use rand::Rng;
            let col = if !cols.is_empty() && gen.rng.gen_ratio(1, 3) {
                let a = gen.qpoly(1);
                let i = gen.rng.gen_range(0..cols.len());
                cols[i].iter().map(|p| p.mul(&f, &a)).collect()
            } else {
                (0..k).map(|_| gen.qpoly(deg)).collect()
            };
            cols.push(col);
        }
        let top = cols.iter().flatten().filter_map(Poly::degree).max().unwrap_or(0);
        let rank = eval_rank(&f, &cols, k, k.min(n) * top);
        let u: Vec<PolyVec<Q>> = cols.iter().map(|c| PolyVec::new(c.clone())).collect();
        let ker = kernel_kx(&f, &KPolyMatrix::from_columns(&u).unwrap());
        ensure!(ker.len() == n - rank, "case {case}: |basis| = {}, n - rank = {}", ker.len(), n - rank);
        deficient += usize::from(rank < k.min(n));
        for s in &ker {
            for i in 0..k {
                let mut acc = Poly::zero();
                for (j, c) in cols.iter().enumerate() {
                    acc = acc.add(&f, &c[i].mul(&f, s.component(j + 1)));
                }
                ensure!(acc.is_zero(), "case {case}: U*s != 0");
            }
        }
        if !ker.is_empty() {
            let kcols: Vec<Vec<Poly<Q>>> = ker.iter().map(|s| s.components().to_vec()).collect();
            let kdeg = ker.iter().filter_map(PolyVec::degree).max().unwrap_or(0);
            let krank = eval_rank(&f, &kcols, n, ker.len() * kdeg);
            ensure!(krank == ker.len(), "case {case}: kernel basis is dependent");
        }
    }
    Ok(format!("200/200 ({deficient} rank-deficient)"))
}

fn incrementality() -> Outcome {
    let mut gen = Gen::new(8);
    for case in 0..300 {
        let d = gen.domain();
        let n = gen_range(&mut gen, 1, 4);
        let m = gen_range(&mut gen, 1, 6);
        let deg = gen_range(&mut gen, 0, 2);
        let fam = gen.family(&d, n, m, deg);
        let split = gen_range(&mut gen, 0, m);
        let whole = saturate_free(&d, &fam).unwrap();
        let head = saturate_free(&d, &fam[..split]).unwrap();
        ensure!(
            whole.columns().len() >= head.len() && whole.columns()[..head.len()] == *head.columns(),
            "case {case}: prefix differs"
        );
    }
    Ok("300/300 splits".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "reference counters", limit: Some(Duration::from_secs(1)), run: reference_counters },
    Criterion { id: 2, name: "worked syzygy", limit: Some(Duration::from_secs(1)), run: worked_syzygy },
    Criterion { id: 3, name: "free-module oracle equivalence", limit: Some(Duration::from_secs(60)), run: free_oracle_equivalence },
    Criterion { id: 4, name: "V[X]-saturation oracle equivalence", limit: Some(Duration::from_secs(300)), run: vx_oracle_equivalence },
    Criterion { id: 5, name: "idempotence", limit: None, run: idempotence },
    Criterion { id: 6, name: "fresh-pivot elimination", limit: None, run: fresh_pivot_elimination },
    Criterion { id: 7, name: "kernel rank", limit: None, run: kernel_rank_check },
    Criterion { id: 8, name: "incrementality", limit: None, run: incrementality },
];

fn main() -> ExitCode {
    let filter: BTreeSet<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| filter.is_empty() || filter.contains(&c.id)) {
        let start = Instant::now();
        let outcome = panic::catch_unwind(c.run).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) => match c.limit {
                Some(l) if elapsed > l => (false, format!("{d}; over the {l:?} limit")),
                _ => (true, d),
            },
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {} {:<36} {} ({detail}) [{:.2?}]",
            c.id,
            c.name,
            if ok { "PASS" } else { "FAIL" },
            elapsed
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
