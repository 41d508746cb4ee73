mod common;

use proptest::prelude::*;

use common::Gen;
use valsat::cli::{render_document, Instance, Task};
use valsat::echelon::{member, saturate_free};
use valsat::oracle::{verify_free, verify_syzygy, verify_vx};
use valsat::polyvec::is_primitive;
use valsat::syzygy::{combine, syzygy_vx};
use valsat::vxsat::{saturate_vx, DEFAULT_MAX_ITER};
use valsat::DomainSpec;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn free_saturation_contains_input_and_matches_oracle(seed in any::<u64>(), n in 1usize..=3, m in 1usize..=4) {
        let mut g = Gen::new(seed);
        let d = g.domain();
        let fam = g.family(&d, n, m, 1);
        let basis = saturate_free(&d, &fam).unwrap();
        prop_assert!(basis.is_strict(&d));
        for v in &fam {
            prop_assert!(member(&d, &basis, v).is_some());
        }
        for c in basis.columns() {
            prop_assert!(is_primitive(&d, c));
        }
        let verdict = verify_free(&d, &fam, basis.columns(), None).unwrap();
        prop_assert!(verdict.agree(), "{}", verdict);
    }

    #[test]
    fn vx_trace_counters_are_consistent(seed in any::<u64>(), n in 1usize..=3, m in 1usize..=3) {
        let mut g = Gen::new(seed);
        let d = g.domain();
        let fam = g.vx_family(&d, n, m, 2);
        let res = saturate_vx(&d, &fam, DEFAULT_MAX_ITER).unwrap();
        prop_assert!(res.basis.is_strict(&d));
        prop_assert_eq!(res.trace.last().unwrap().defect, 0);
        let mut rank = 0;
        for (k, rec) in res.trace.iter().enumerate() {
            prop_assert_eq!(rec.k, k);
            rank += rec.new_columns;
            prop_assert_eq!(rec.rank, rank);
            prop_assert_eq!(rec.new_columns, rec.indexes + rec.defect);
            prop_assert_eq!(rec.available, rec.indexes * (1 + res.degree + k));
            prop_assert_eq!(rec.slack, rec.available as i64 - rec.rank as i64);
            prop_assert!(rec.collisions_initial <= rec.collisions);
        }
        for v in &fam {
            prop_assert!(member(&d, &res.basis, v).is_some());
        }
        for c in &res.generators {
            prop_assert!(c.in_domain(&d));
        }
    }

    #[test]
    fn syzygy_generators_annihilate_input(seed in any::<u64>(), k in 1usize..=2, n in 1usize..=3) {
        let mut g = Gen::new(seed);
        let d = g.domain();
        let u: Vec<_> = (0..n).map(|_| g.vector(&d, k, 1)).collect();
        let res = syzygy_vx(&d, &u, DEFAULT_MAX_ITER).unwrap();
        for s in res.generators() {
            prop_assert!(s.in_domain(&d));
            prop_assert!(combine(&d, &u, s).unwrap().iter().all(|p| p.is_zero()));
        }
    }

    #[test]
    fn rendered_vectors_parse_back(seed in any::<u64>(), n in 1usize..=3, m in 1usize..=4) {
        let mut g = Gen::new(seed);
        let d = g.domain();
        let fam: Vec<_> = (0..m).map(|_| g.vector(&d, n, 3)).collect();
        let doc = render_document(&d, DomainSpec::Zp { p: d.prime() }, Task::SaturateVx, "round trip", &fam);
        let inst = Instance::parse(&doc).unwrap();
        prop_assert_eq!(inst.domain, Some(DomainSpec::Zp { p: d.prime() }));
        prop_assert_eq!(inst.task, Some(Task::SaturateVx));
        prop_assert_eq!(inst.vectors_over(&d).unwrap(), fam);
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn vx_saturation_matches_oracle(seed in any::<u64>(), m in 1usize..=2) {
        let mut g = Gen::new(seed);
        let d = g.domain();
        let fam = g.vx_family(&d, 2, m, 1);
        let res = saturate_vx(&d, &fam, DEFAULT_MAX_ITER).unwrap();
        let verdict = verify_vx(&d, &fam, &res, None).unwrap();
        prop_assert!(verdict.agree(), "{}", verdict);
    }

    #[test]
    fn syzygies_match_oracle(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = Gen::new(seed);
        let d = g.domain();
        let u: Vec<_> = (0..n).map(|_| g.vector(&d, 1, 1)).collect();
        let res = syzygy_vx(&d, &u, DEFAULT_MAX_ITER).unwrap();
        let verdict = verify_syzygy(&d, &u, res.generators(), None).unwrap();
        prop_assert!(verdict.agree(), "{}", verdict);
    }
}
