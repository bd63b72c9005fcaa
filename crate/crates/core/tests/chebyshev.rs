use proptest::prelude::*;
use square_nodal::chebyshev::{u_eval, ChebyshevCatalog, MinimumLocation, SpecialThetaCatalog};
use square_nodal::scalar::angle_distance_mod_pi;
use std::f64::consts::PI;

#[test]
fn identity_on_dense_grid() {
    for n in 0..=32 {
        for k in 1..10_000 {
            let t = PI * k as f64 / 10_000.0;
            let lhs = t.sin() * u_eval(n, t.cos());
            assert!((lhs - ((n + 1) as f64 * t).sin()).abs() < 1e-10, "n={n} t={t}");
        }
    }
}

#[test]
fn printed_values_r8() {
    let cat = ChebyshevCatalog::<f64>::new(8).unwrap();
    let q = [0.179749, 0.309108, 0.436495, 0.563505, 0.690892, 0.820251];
    for (a, b) in cat.q.iter().zip(q) {
        assert!((a / PI - b).abs() < 1e-5);
    }
    let sp = SpecialThetaCatalog::new(&cat).unwrap();
    assert_eq!(sp.t_o.len(), 14);
    let tx = [0.040363, 0.047665, 0.071705, 0.928295, 0.952335, 0.959636];
    for (a, b) in sp.t_x.iter().zip(tx) {
        assert!((a / PI - b).abs() < 1e-5);
    }
    assert_eq!(cat.theta_minus, PI / 4.0);
}

#[test]
fn printed_values_r9() {
    let cat = ChebyshevCatalog::<f64>::new(9).unwrap();
    assert!((cat.q[3] / PI - 0.5).abs() < 1e-15);
    let sp = SpecialThetaCatalog::new(&cat).unwrap();
    assert!(sp.t_o.iter().any(|t| (t / PI - 0.75).abs() < 1e-12));
    let ty = [0.429078, 0.462505, 0.535223, 0.546050];
    assert_eq!(sp.t_y.len(), 4);
    for (a, b) in sp.t_y.iter().zip(ty) {
        assert!((a / PI - b).abs() < 1e-5);
    }
}

#[test]
fn minimum_location_is_recorded() {
    // reported, not assumed: the scan covers every extremum and both ends
    for r in 3..30 {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let inf = match cat.minimum_at {
            MinimumLocation::Extremum(j) => cat.extrema[j - 1],
            MinimumLocation::Endpoint(e) => cat.u(e as f64),
        };
        assert!(cat.extrema.iter().all(|&m| m >= inf));
        assert!((cat.theta_minus - (inf.abs() / r as f64).atan()).abs() < 1e-15);
    }
}

#[test]
fn single_precision_catalog() {
    let c32 = ChebyshevCatalog::<f32>::new(8).unwrap();
    let c64 = ChebyshevCatalog::<f64>::new(8).unwrap();
    for (a, b) in c32.q.iter().zip(&c64.q) {
        assert!((*a as f64 - b).abs() < 1e-5);
    }
}

#[test]
fn empty_catalog_below_three() {
    assert!(ChebyshevCatalog::<f64>::new(0).is_err());
    let cat = ChebyshevCatalog::<f64>::new(2).unwrap();
    assert!(SpecialThetaCatalog::new(&cat).unwrap().union().is_empty());
}

proptest! {
    #[test]
    fn extrema_interlace_and_alternate(r in 3usize..40) {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        prop_assert_eq!(cat.q.len(), r - 2);
        for (j, (&q, &m)) in cat.q.iter().zip(&cat.extrema).enumerate() {
            let j = j + 1;
            prop_assert!(cat.p[j] < q && q < cat.p[j + 1]);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!(sign * m > 0.0);
            prop_assert!(m.abs() <= r as f64);
        }
    }

    #[test]
    fn extrema_are_symmetric(r in 3usize..40) {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let k = cat.q.len();
        for j in 0..k {
            prop_assert!((cat.q[k - 1 - j] - (PI - cat.q[j])).abs() < 1e-12);
        }
        if r % 2 == 1 {
            prop_assert!((cat.q[r / 2 - 1] - PI / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn theta_minus_quarter_iff_even(r in 2usize..40) {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        if r % 2 == 0 {
            prop_assert_eq!(cat.theta_minus, PI / 4.0);
        } else {
            prop_assert!(cat.theta_minus > 0.0 && cat.theta_minus < PI / 4.0);
        }
    }

    #[test]
    fn transposed_pairs_sum_to_half_pi(r in 3usize..20) {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let sp = SpecialThetaCatalog::new(&cat).unwrap();
        for i in 1..=r - 2 {
            for j in 1..=r - 2 {
                let s = sp.theta_interior(i, j) + sp.theta_interior(j, i);
                prop_assert!(angle_distance_mod_pi(s, PI / 2.0) < 1e-12);
            }
        }
    }

    #[test]
    fn special_values_solve_their_equations(r in 3usize..20) {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let sp = SpecialThetaCatalog::new(&cat).unwrap();
        for &((i, j), t) in &sp.interior {
            let res = t.cos() * cat.extrema[j - 1] + t.sin() * cat.extrema[i - 1];
            prop_assert!(res.abs() < 1e-12 * r as f64);
            prop_assert!((0.0..PI).contains(&t));
        }
        for &((star, j), t) in &sp.vertical_edge {
            let res = t.cos() * cat.extrema[j - 1] + t.sin() * cat.endpoint_value(star);
            prop_assert!(res.abs() < 1e-12 * r as f64);
        }
    }
}
