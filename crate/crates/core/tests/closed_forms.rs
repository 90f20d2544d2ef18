//! Closed forms and identities stated for small cases, checked verbatim.

use speyer_core::exactnum::{int, rational};
use speyer_core::gamma::gamma_recur;
use speyer_core::gpoly::{h_closed, h_recur, recurrence_coeffs};
use speyer_core::stats::{mean, ratio, variance};
use speyer_core::{BiPoly, Rational, UniPoly};

fn grid() -> Vec<Rational> {
    vec![rational(1, 2).unwrap(), int(1), int(2), rational(7, 3).unwrap(), rational(1, 9).unwrap()]
}

#[test]
fn first_generating_polynomials() {
    let one_plus_x = BiPoly::from_x_poly(&UniPoly::from_ints(&[1, 1]));
    let tx = BiPoly::from_terms(&[(1, 1, 1)]);
    assert_eq!(h_closed(2).unwrap(), tx);
    assert_eq!(h_closed(3).unwrap(), &tx * &one_plus_x);
    let h4 = &(&tx * &one_plus_x) * &one_plus_x + BiPoly::from_terms(&[(2, 2, 1)]);
    assert_eq!(h_closed(4).unwrap(), h4);
}

#[test]
fn gamma_initial_values() {
    let t = UniPoly::x();
    for n in [2, 3] {
        let g = gamma_recur(n).unwrap();
        assert!(g.gammas()[0].is_zero());
        assert_eq!(g.gammas()[1], t);
    }
}

#[test]
fn second_moment_identity() {
    // f''(1)/f(1) = (n-1)/(4(t+1)) * f_{n+1}(1)/f_n(1) + n(nt+n-2t-3)/(4(t+1))
    for t in grid() {
        for n in 2..=25 {
            let f = h_recur(n).unwrap().eval_t(&t);
            let lhs = f.derivative(2).eval(&int(1)) / f.eval(&int(1));
            let q = (&t + int(1)) * int(4);
            let nn = int(n);
            let rhs = (int(n - 1) * ratio(n, &t).unwrap()) / &q
                + &nn * (&nn * &t + &nn - &t * int(2) - int(3)) / &q;
            assert_eq!(lhs, rhs, "n={n} t={t}");
        }
    }
}

#[test]
fn first_order_recurrence_at_one() {
    // at x = 1 the leading coefficient vanishes and the identity reads
    // 0 = -2n(t+1) f_n(1) + 4(t+1) f_n'(1)
    for n in 2..=20 {
        let rc = recurrence_coeffs(n).unwrap();
        assert!(rc.a.eval_x(&int(1)).is_zero());
        assert_eq!(rc.b.eval_x(&int(1)), UniPoly::from_ints(&[-2 * n, -2 * n]));
        assert_eq!(rc.c.eval_x(&int(1)), UniPoly::from_ints(&[4, 4]));
    }
    for t in grid() {
        for n in 2..=20 {
            assert_eq!(mean(n, &t).unwrap(), rational(n, 2).unwrap());
        }
    }
}

#[test]
fn variance_is_linear_in_ratio() {
    for t in grid() {
        for n in 2..=25 {
            let q = (&t + int(1)) * int(4);
            let want = int(n - 1) / &q * ratio(n, &t).unwrap() - int(n) / &q;
            assert_eq!(variance(n, &t).unwrap(), want);
        }
    }
}

#[test]
fn ratio_limit_solves_fixed_point() {
    for t in grid() {
        let tf = speyer_core::stats::to_f64(&t);
        let lambda = 1.0 + (tf + 1.0).sqrt();
        assert!((lambda * lambda - 2.0 * lambda - tf).abs() < 1e-12);
        let r = speyer_core::stats::to_f64(&ratio(120, &t).unwrap());
        assert!((r - lambda).abs() < 1e-10, "t={t}");
    }
}
