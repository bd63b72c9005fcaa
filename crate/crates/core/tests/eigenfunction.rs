use proptest::prelude::*;
use square_nodal::chebyshev::{ChebyshevCatalog, SpecialThetaCatalog};
use square_nodal::eigenfunction::{FormCase, SubstitutedForm, ThetaFamily};
use std::f64::consts::PI;

fn fam(m: usize, n: usize, th: f64) -> ThetaFamily<f64> {
    ThetaFamily::new(m, n, th).unwrap()
}

#[test]
fn lattice_points_are_zeroes() {
    for r in 2..12 {
        for k in 0..7 {
            let f = fam(1, r, k as f64 * 0.45);
            for i in 1..r {
                for j in 1..r {
                    let (x, y) = (i as f64 * PI / r as f64, j as f64 * PI / r as f64);
                    assert!(f.eval(x, y).abs() < 1e-13);
                }
            }
        }
    }
}

#[test]
fn lattice_points_are_regular() {
    for r in 2..10 {
        let f = fam(1, r, 0.3);
        for i in 1..r {
            for j in 1..r {
                let (x, y) = (i as f64 * PI / r as f64, j as f64 * PI / r as f64);
                let (gx, gy) = f.grad(x, y);
                assert!(gx.hypot(gy) > 1e-3);
            }
        }
    }
}

#[test]
fn hessian_diagonal_at_interior_critical_zeroes() {
    let cat = ChebyshevCatalog::<f64>::new(8).unwrap();
    let sp = SpecialThetaCatalog::new(&cat).unwrap();
    for &((i, j), th) in &sp.interior {
        let f = fam(1, 8, th);
        let (x, y) = (cat.q[i - 1], cat.q[j - 1]);
        let h = f.hessian(x, y);
        assert!(h[0][1].abs() < 1e-10, "({i}, {j})");
        assert!(h[0][0].abs() > 1e-3 && h[1][1].abs() > 1e-3);
    }
}

#[test]
fn factorizations_match_on_interior_grid() {
    let cases = [
        FormCase::OneThree,
        FormCase::TwoThree,
        FormCase::OneFour,
        FormCase::OneR(7),
        FormCase::OneR(12),
    ];
    for case in cases {
        for k in 0..6 {
            let form = SubstitutedForm::new(case, k as f64 * 0.5).unwrap();
            let (m, n) = form.mode();
            let f = fam(m, n, k as f64 * 0.5);
            for i in 1..40 {
                for j in 1..40 {
                    let (x, y) = (i as f64 * PI / 40.0, j as f64 * PI / 40.0);
                    let rhs = form.prefactor(x, y) * form.eval_substituted(x.cos(), y.cos());
                    assert!((f.eval(x, y) - rhs).abs() < 1e-10, "{case:?}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn vanishes_on_boundary(m in 1usize..9, n in 1usize..9, th in 0.0..PI, t in 0.0..PI) {
        let f = fam(m, n, th);
        prop_assert!(f.eval(0.0, t).abs() < 1e-14);
        prop_assert!(f.eval(t, 0.0).abs() < 1e-14);
        prop_assert!(f.eval(PI, t).abs() < 1e-14);
        prop_assert!(f.eval(t, PI).abs() < 1e-14);
    }

    #[test]
    fn trace_of_hessian_is_eigenvalue_relation(
        m in 1usize..9, n in 1usize..9, th in 0.0..PI, x in 0.0..PI, y in 0.0..PI
    ) {
        let f = fam(m, n, th);
        let h = f.hessian(x, y);
        let lambda = (m * m + n * n) as f64;
        prop_assert!((h[0][0] + h[1][1] + lambda * f.eval(x, y)).abs() < 1e-10 * lambda);
    }

    #[test]
    fn central_symmetry(r in 1usize..14, th in 0.0..PI, x in 0.0..PI, y in 0.0..PI) {
        let f = fam(1, r, th);
        let sign = if r % 2 == 0 { -1.0 } else { 1.0 };
        prop_assert!((f.eval(PI - x, PI - y) - sign * f.eval(x, y)).abs() < 1e-12);
    }

    #[test]
    fn odd_r_is_even_in_x(r in 0usize..7, th in 0.0..PI, x in 0.0..PI, y in 0.0..PI) {
        let f = fam(1, 2 * r + 1, th);
        prop_assert!((f.eval(PI - x, y) - f.eval(x, y)).abs() < 1e-12);
    }

    #[test]
    fn even_r_reflection_flips_theta(r in 1usize..7, th in 0.01..PI, x in 0.0..PI, y in 0.0..PI) {
        let f = fam(1, 2 * r, th);
        let g = fam(1, 2 * r, PI - th);
        prop_assert!((f.eval(x, PI - y) - g.eval(x, y)).abs() < 1e-12);
    }

    #[test]
    fn swap_is_complementary_angle(r in 1usize..14, th in 0.0..PI / 2.0, x in 0.0..PI, y in 0.0..PI) {
        let f = fam(1, r, th);
        let g = fam(1, r, PI / 2.0 - th);
        prop_assert!((g.eval(x, y) - f.eval(y, x)).abs() < 1e-12);
    }

    #[test]
    fn f32_tracks_f64(r in 1usize..10, th in 0.0f64..3.1, x in 0.0f64..3.1, y in 0.0f64..3.1) {
        let a = fam(1, r, th).eval(x, y);
        let b = ThetaFamily::<f32>::new(1, r, th as f32).unwrap().eval(x as f32, y as f32);
        prop_assert!((a - b as f64).abs() < 1e-4);
    }
}
