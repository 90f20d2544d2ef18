use proptest::prelude::*;
use speyer_core::exactnum::int;
use speyer_core::gamma::{gamma_expand, is_palindromic};
use speyer_core::realroots::{count_real_roots, interlaces, isolate_roots, is_real_rooted};
use speyer_core::report::{diff, Entry};
use speyer_core::seqineq::{is_k_log_concave, l_transform_poly, RSeq};
use speyer_core::{BiPoly, UniPoly, VerificationReport};

/// `prod (x + r_i)` for the given nonnegative integers.
fn from_roots(rs: &[i64]) -> UniPoly {
    rs.iter().fold(UniPoly::one(), |acc, &r| acc * UniPoly::from_ints(&[r, 1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_round_trip(gs in proptest::collection::vec(-9i64..9, 1..5), extra in 0usize..3) {
        let darga = 2 * (gs.len() - 1) + extra.min(1);
        let one_plus_x = UniPoly::from_ints(&[1, 1]);
        let f = gs.iter().enumerate().fold(UniPoly::zero(), |acc, (i, &g)| {
            acc + one_plus_x.pow((darga - 2 * i) as u32).shift(i).scale(&int(g))
        });
        prop_assume!(!f.is_zero());
        let b = BiPoly::from_x_poly(&f);
        prop_assert!(is_palindromic(&b, darga).unwrap());
        let back = gamma_expand(&b, darga).unwrap();
        let want: Vec<_> = gs.iter().map(|&g| int(g)).collect();
        prop_assert_eq!(back.at(&int(0)), want);
        prop_assert_eq!(back.reconstruct(), b);
    }

    #[test]
    fn negative_real_roots_give_log_concave_coefficients(rs in proptest::collection::vec(0i64..12, 1..8)) {
        let f = from_roots(&rs);
        prop_assert!(is_real_rooted(&f).unwrap());
        let s: RSeq = f.coeffs().to_vec().into();
        prop_assert_eq!(is_k_log_concave(&s, 1).unwrap(), Ok(()));
        // the coefficient transform of a real-rooted polynomial with
        // nonnegative coefficients stays real-rooted
        prop_assert!(is_real_rooted(&l_transform_poly(&f)).unwrap());
    }

    #[test]
    fn derivative_interlaces(rs in proptest::collection::vec(-10i64..10, 2..7)) {
        let f = from_roots(&rs);
        prop_assert!(interlaces(&f.derivative(1), &f, false).unwrap());
    }

    #[test]
    fn isolation_accounts_for_every_distinct_root(rs in proptest::collection::vec(-6i64..6, 1..8)) {
        let f = from_roots(&rs);
        let mut distinct = rs.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(isolate_roots(&f).unwrap().len(), distinct.len());
        prop_assert_eq!(count_real_roots(&f, None, None).unwrap(), distinct.len());
    }

    #[test]
    fn report_json_round_trip(flags in proptest::collection::vec(any::<(bool, bool)>(), 0..12)) {
        let mut r = VerificationReport::default();
        for (k, (pass, exp)) in flags.iter().enumerate() {
            let mut e = Entry::new("gamma", "gamma-positive").param("n", k).param("t", "1/2").pass(*pass);
            if *exp {
                e = e.experimental();
            }
            r.push(e);
        }
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert!(diff(&back, &r).is_empty());
        prop_assert_eq!(r.summary.total, flags.len());
    }
}
