//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use valsat::poly::Poly;
use valsat::{Field, PolyVec, Rationals, Zp};

pub const PRIMES: [u64; 3] = [2, 3, 5];

pub struct Gen {
    pub rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn domain(&mut self) -> Zp {
        Zp::new(*PRIMES.choose(&mut self.rng).unwrap()).unwrap()
    }

    /// `a/b` in `V` with `|a| ≤ 100`, `1 ≤ b ≤ 100`, `p ∤ b`; zero with
    /// probability 1/4, divisible by a power of `p` with probability 1/3.
    pub fn elem(&mut self, d: &Zp) -> BigRational {
        let p = d.prime() as i64;
        if self.rng.gen_ratio(1, 4) {
            return BigRational::from_integer(0.into());
        }
        let mut scale = 1i64;
        if self.rng.gen_ratio(1, 3) {
            let e = self.rng.gen_range(1..=3);
            scale = p.pow(e);
            while scale > 100 {
                scale /= p;
            }
        }
        let a = self.rng.gen_range(1..=100 / scale) * scale * if self.rng.gen() { 1 } else { -1 };
        let b = loop {
            let b = if self.rng.gen_ratio(1, 2) { 1 } else { self.rng.gen_range(1..=100i64) };
            if b % p != 0 {
                break b;
            }
        };
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    pub fn poly(&mut self, d: &Zp, deg: usize) -> Poly<BigRational> {
        let coeffs = (0..=deg).map(|_| self.elem(d)).collect();
        Poly::from_coeffs(d, coeffs)
    }

    pub fn vector(&mut self, d: &Zp, n: usize, deg: usize) -> PolyVec<BigRational> {
        PolyVec::new((0..n).map(|_| self.poly(d, deg)).collect())
    }

    /// `m` vectors of `V[X]^n` of degree ≤ `deg`. Some columns are `p` times
    /// an earlier column, or sums of two earlier ones, so that the spans are
    /// often neither saturated nor free of `K`-relations.
    pub fn family(&mut self, d: &Zp, n: usize, m: usize, deg: usize) -> Vec<PolyVec<BigRational>> {
        let p = d.from_i64(d.prime() as i64);
        let mut out: Vec<PolyVec<BigRational>> = Vec::with_capacity(m);
        for _ in 0..m {
            let v = match (out.len(), self.rng.gen_range(0..6)) {
                (1.., 0) => out.choose(&mut self.rng).unwrap().scale(d, &p),
                (2.., 1) => {
                    let a = out.choose(&mut self.rng).unwrap().clone();
                    let b = out.choose(&mut self.rng).unwrap().scale(d, &p);
                    a.add(d, &b)
                }
                _ => {
                    let deg = self.rng.gen_range(0..=deg);
                    self.vector(d, n, deg)
                }
            };
            out.push(v);
        }
        out
    }

    /// Nonzero `V[X]` family whose saturation is interesting more often:
    /// at least one vector is not primitive.
    pub fn vx_family(&mut self, d: &Zp, n: usize, m: usize, deg: usize) -> Vec<PolyVec<BigRational>> {
        loop {
            let mut fam = self.family(d, n, m, deg);
            if self.rng.gen_ratio(1, 2) {
                let p = d.from_i64(d.prime() as i64);
                let i = self.rng.gen_range(0..fam.len());
                fam[i] = fam[i].scale(d, &p);
            }
            if fam.iter().any(|v| !v.is_zero()) {
                return fam;
            }
        }
    }

    /// A polynomial over ℚ with small integer coefficients.
    pub fn qpoly(&mut self, deg: usize) -> Poly<BigRational> {
        let f = Rationals;
        let coeffs = (0..=deg)
            .map(|_| {
                if self.rng.gen_ratio(1, 3) {
                    f.zero()
                } else {
                    f.from_i64(self.rng.gen_range(-9..=9))
                }
            })
            .collect();
        Poly::from_coeffs(&f, coeffs)
    }
}
