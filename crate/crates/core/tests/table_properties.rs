mod common;

use common::*;
use margalg::table::sample_zero_margin_table;
use margalg::{FaceSet, Table, Q};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn margins_compose(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sh = random_shape(&mut r, 36);
        let t = random_table(&mut r, &sh);
        let outer = random_face(&mut r, sh.rank());
        let inner = FaceSet::new(outer.iter().filter(|_| r.gen_bool(0.5)).collect());
        let relabeled = inner.relabel_within(&outer).unwrap();
        let step = t.marginalize(&outer).unwrap().marginalize(&relabeled).unwrap();
        prop_assert_eq!(step, t.marginalize(&inner).unwrap());
    }

    #[test]
    fn grand_total_is_preserved(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sh = random_shape(&mut r, 36);
        let t = random_table(&mut r, &sh);
        let face = random_face(&mut r, sh.rank());
        prop_assert_eq!(t.marginalize(&face).unwrap().grand_total(), t.grand_total());
    }

    #[test]
    fn rank_one_test_matches_brute_force(seed in any::<u64>(), structured in any::<bool>()) {
        let mut r = rng(seed);
        let sh = random_shape(&mut r, 16);
        let t = if structured { random_rank_one(&mut r, &sh, false) } else { random_table(&mut r, &sh) };
        prop_assert_eq!(t.is_completely_independent(), brute_rank_one(&t));
        if structured {
            prop_assert!(t.is_completely_independent());
        }
    }

    #[test]
    fn decomposition_invariants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sh = random_shape(&mut r, 36);
        let t = random_table(&mut r, &sh);
        prop_assume!(!t.grand_total().is_zero());
        let (indep, rest) = t.decompose().unwrap();
        prop_assert!(indep.is_completely_independent());
        prop_assert_eq!(indep.add(&rest).unwrap(), t);
        for m in rest.one_margins() {
            prop_assert!(m.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn detected_complex_on_probability_tables(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sh = random_shape(&mut r, 24);
        let raw = Table::from_fn(sh.clone(), |_| q(r.gen_range(1..=5), 1));
        let t = raw.scale(&(Q::from_integer(1.into()) / raw.grand_total()));
        let detected = t.detect_complex().unwrap();
        for face in FaceSet::full(sh.rank()).subsets() {
            let independent = t.marginalize(&face).unwrap().is_completely_independent();
            prop_assert_eq!(detected.contains_face(&face), independent, "face {}", face);
            // Downward closed.
            if detected.contains_face(&face) {
                for sub in face.subsets() {
                    prop_assert!(detected.contains_face(&sub));
                }
            }
        }
    }

    #[test]
    fn perturbation_by_zero_margin_tables(seed in any::<u64>(), num in -9i64..=9, den in 1i64..=9) {
        let mut r = rng(seed);
        let dims = [vec![2, 2, 2], vec![2, 2, 3], vec![2, 3, 2]][r.gen_range(0..3)].clone();
        let sh = shape(&dims);
        let c = triangle();
        let raw = random_rank_one(&mut r, &sh, true);
        let a = raw.scale(&(Q::from_integer(1.into()) / raw.grand_total()));
        prop_assert!(a.is_delta_independent(&c).unwrap());
        let z = sample_zero_margin_table(&sh, &c, r.gen()).unwrap();
        let b = a.add(&z.scale(&q(num, den))).unwrap();
        prop_assert!(b.is_delta_independent(&c).unwrap());
    }

    #[test]
    fn independence_passes_to_sub_margins(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sh = random_shape(&mut r, 36);
        let t = if r.gen_bool(0.5) { random_rank_one(&mut r, &sh, false) } else { random_table(&mut r, &sh) };
        let face = random_face(&mut r, sh.rank());
        let m = t.marginalize(&face).unwrap();
        if m.is_completely_independent() {
            for sub in face.subsets() {
                prop_assert!(t.marginalize(&sub).unwrap().is_completely_independent());
            }
        }
    }
}

#[test]
fn zero_margin_samples_have_zero_facet_margins() {
    let c = triangle();
    for seed in 0..20 {
        let z = sample_zero_margin_table(&shape(&[2, 3, 2]), &c, seed).unwrap();
        for f in c.facets() {
            assert!(z.marginalize(f).unwrap().is_zero());
        }
    }
}
