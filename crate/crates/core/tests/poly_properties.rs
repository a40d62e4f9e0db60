mod common;

use common::*;
use margalg::poly::{buchberger, ideal_member, saturate, Budget, Polynomial};
use margalg::Q;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn s_pairs_reduce_to_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ring = var_ring(r.gen_range(2..=4));
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=3)).map(|_| random_poly(&mut r, &ring, 3, 3)).collect();
        let gb = buchberger(&ring, &gens, Budget::default()).unwrap();
        prop_assert!(gb.s_pairs_reduce_to_zero());
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn membership_matches_linear_algebra(seed in any::<u64>(), constructed in any::<bool>()) {
        let mut r = rng(seed);
        let ring = var_ring(r.gen_range(2..=4));
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=3))
            .map(|_| { let d = r.gen_range(1..=3); random_homogeneous(&mut r, &ring, 3, d) })
            .collect();
        let d = r.gen_range(1..=3usize).max(gens.iter().filter_map(|g| g.total_degree()).min().unwrap_or(1) as usize);
        let p = if constructed {
            gens.iter().fold(Polynomial::zero(&ring), |acc, g| {
                let e = g.total_degree().unwrap_or(0) as usize;
                if e > d { return acc; }
                let c = random_homogeneous(&mut r, &ring, 2, d - e);
                &acc + &(&c * g)
            })
        } else {
            random_homogeneous(&mut r, &ring, 4, d)
        };
        let expected = homogeneous_member_oracle(&p, &gens);
        prop_assert_eq!(ideal_member(&p, &gens, Budget::default()).unwrap(), expected, "p = {}", p);
        if constructed {
            prop_assert!(expected);
        }
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ring = var_ring(r.gen_range(2..=4));
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=3)).map(|_| random_poly(&mut r, &ring, 3, 3)).collect();
        let gb = buchberger(&ring, &gens, Budget::default()).unwrap();
        let p = random_poly(&mut r, &ring, 6, 4);
        let nf = gb.normal_form(&p).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&(&p - &nf)).unwrap());
    }

    #[test]
    fn saturation_contains_gens_and_keeps_points(seed in any::<u64>()) {
        let mut r = rng(seed);
        let nv = r.gen_range(2..=3);
        let ring = var_ring(nv);
        let point: Vec<Q> = (0..nv).map(|_| q(r.gen_range(-3..=3), 1)).collect();
        // Generators vanishing at `point`.
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=2))
            .map(|_| {
                let v = r.gen_range(0..nv);
                let shift = &Polynomial::var(&ring, margalg::poly::VarId(v)) - &Polynomial::constant(&ring, point[v].clone());
                &shift * &random_poly(&mut r, &ring, 2, 2)
            })
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let f = random_poly(&mut r, &ring, 3, 2);
        prop_assume!(!f.eval(&point).is_zero());
        let sat = saturate(&gens, &f, Budget::default()).unwrap();
        let gb = buchberger(&ring, &sat, Budget::default()).unwrap();
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
        for s in &sat {
            prop_assert!(s.eval(&point).is_zero());
        }
    }

    #[test]
    fn arithmetic_is_exact(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ring = var_ring(r.gen_range(1..=4));
        let p = random_poly(&mut r, &ring, 6, 4);
        let s = random_poly(&mut r, &ring, 6, 4);
        prop_assert_eq!(&(&p + &s) - &s, p.clone());
        prop_assert_eq!(&p * &s, &s * &p);
        let text = p.to_string();
        prop_assert_eq!(Polynomial::parse(&ring, &text).unwrap(), p);
    }
}
