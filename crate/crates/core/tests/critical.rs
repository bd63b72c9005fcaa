use proptest::prelude::*;
use square_nodal::chebyshev::{ChebyshevCatalog, SpecialThetaCatalog};
use square_nodal::critical::{
    boundary_hits, case3_critical_zeroes, critical_zeroes, edge_critical_zeroes,
    interior_critical_zeroes, theta_tolerance, CriticalZero, Locus, LowCase,
};
use square_nodal::eigenfunction::ThetaFamily;
use square_nodal::scalar::angle_distance_mod_pi;
use std::f64::consts::PI;

fn check_zeroes(m: usize, n: usize, th: f64, zs: &[CriticalZero<f64>]) {
    let f = ThetaFamily::new(m, n, th).unwrap();
    for z in zs {
        let (gx, gy) = f.grad_direct(z.x, z.y);
        assert!(f.eval(z.x, z.y).abs() < 1e-10, "{z:?}");
        assert!(gx.hypot(gy) < 1e-8, "{z:?} grad {gx} {gy}");
    }
}

fn centrally_symmetric(zs: &[CriticalZero<f64>]) -> bool {
    zs.iter().all(|z| {
        zs.iter()
            .any(|w| (w.x - (PI - z.x)).abs() < 1e-9 && (w.y - (PI - z.y)).abs() < 1e-9)
    })
}

#[test]
fn every_catalog_value_gives_true_critical_zeroes() {
    for r in [3, 4, 7, 8, 9] {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let sp = SpecialThetaCatalog::new(&cat).unwrap();
        for th in sp.union() {
            let zs = critical_zeroes(&ThetaFamily::new(1, r, th).unwrap()).unwrap();
            check_zeroes(1, r, th, &zs);
            assert!(centrally_symmetric(&zs), "R={r} theta={th}");
        }
    }
}

#[test]
fn order_three_only_at_edge_values() {
    for r in [4, 5, 8, 9] {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let sp = SpecialThetaCatalog::new(&cat).unwrap();
        let edge_values: Vec<f64> = sp.t_x.iter().chain(&sp.t_y).copied().collect();
        for th in sp.union() {
            let zs = edge_critical_zeroes(r, th).unwrap();
            let has3 = zs.iter().any(|z| z.order == 3);
            let is_edge = edge_values.iter().any(|&t| angle_distance_mod_pi(t, th) < 1e-12);
            assert_eq!(has3, is_edge, "R={r} theta={th}");
        }
    }
}

#[test]
fn generic_theta_has_no_interior_or_degenerate_edge_zeroes() {
    for r in 3..12 {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let sp = SpecialThetaCatalog::new(&cat).unwrap();
        let mut crit = sp.union();
        crit.extend([0.0, PI / 4.0, PI / 2.0, 0.75 * PI, PI]);
        crit.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in crit.windows(2) {
            let th = 0.5 * (w[0] + w[1]);
            if w[1] - w[0] < 1e-9 {
                continue;
            }
            assert!(interior_critical_zeroes(r, th, theta_tolerance()).unwrap().is_empty());
            assert!(edge_critical_zeroes(r, th).unwrap().iter().all(|z| !z.degenerate));
        }
    }
}

#[test]
fn product_theta_gives_r_minus_one_edge_zeroes_per_edge() {
    let zs = edge_critical_zeroes(8, 0.0).unwrap();
    let left = zs.iter().filter(|z| z.locus == Locus::Edge(square_nodal::critical::Edge::Left));
    assert_eq!(left.count(), 7);
    assert!(zs.iter().all(|z| z.order == 2));
}

#[test]
fn no_open_edge_zeroes_for_z_plus_even() {
    assert!(edge_critical_zeroes(8, PI / 4.0).unwrap().is_empty());
}

#[test]
fn odd_r_middle_range_has_no_edge_zeroes() {
    let cat = ChebyshevCatalog::<f64>::new(9).unwrap();
    let (lo, hi) = (cat.theta_minus, PI / 2.0 - cat.theta_minus);
    for k in 1..20 {
        let th = lo + (hi - lo) * k as f64 / 20.0;
        assert!(edge_critical_zeroes(9, th).unwrap().is_empty(), "theta={th}");
    }
}

#[test]
fn odd_r_edge_count_at_upper_threshold_is_reported() {
    // left open: the count at π/2 − θ₋ is computed, not asserted against a conjecture
    for r in [5, 7, 9, 11] {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let zs = edge_critical_zeroes(r, PI / 2.0 - cat.theta_minus).unwrap();
        assert!(zs.len() % 2 == 0);
        check_zeroes(1, r, PI / 2.0 - cat.theta_minus, &zs);
    }
}

#[test]
fn interior_zeroes_of_z_plus_and_z_minus() {
    for r in [4, 6, 8, 10] {
        let zs = interior_critical_zeroes(r, PI / 4.0, 1e-9).unwrap();
        assert_eq!(zs.len(), r - 2);
        assert!(zs.iter().all(|z| (z.x + z.y - PI).abs() < 1e-10));
    }
    for r in [5, 7, 9, 11] {
        assert!(interior_critical_zeroes(r, PI / 4.0, 1e-9).unwrap().is_empty());
        let zs = interior_critical_zeroes(r, 0.75 * PI, 1e-9).unwrap();
        assert_eq!(zs.len(), 2 * r - 5);
        assert!(zs
            .iter()
            .all(|z| (z.x - z.y).abs() < 1e-10 || (z.x + z.y - PI).abs() < 1e-10));
    }
}

#[test]
fn low_cases() {
    let f = |case, th: f64| case3_critical_zeroes(case, th);
    assert!(f(LowCase::TwoThree, 0.4).is_empty());
    assert!(f(LowCase::TwoThree, PI / 4.0).is_empty());
    let c = f(LowCase::OneThree, 0.75 * PI);
    assert_eq!(c.len(), 1);
    assert!((c[0].x - PI / 2.0).abs() < 1e-15 && (c[0].y - PI / 2.0).abs() < 1e-15);
    check_zeroes(1, 4, PI / 4.0, &f(LowCase::OneFour, PI / 4.0));
    check_zeroes(1, 4, 0.75 * PI, &f(LowCase::OneFour, 0.75 * PI));
    check_zeroes(2, 3, 0.0, &f(LowCase::TwoThree, 0.0));
    check_zeroes(2, 3, PI / 2.0, &f(LowCase::TwoThree, PI / 2.0));
}

#[test]
fn one_four_boundary_hits_at_most_six() {
    for k in 0..64 {
        let th = k as f64 * PI / 64.0;
        let zs = critical_zeroes(&ThetaFamily::new(1, 4, th).unwrap()).unwrap();
        assert!(boundary_hits(&zs) <= 6);
    }
}

#[test]
fn transposed_mode_mirrors_positions() {
    let a = critical_zeroes(&ThetaFamily::new(1, 5, 0.3).unwrap()).unwrap();
    let b = critical_zeroes(&ThetaFamily::new(5, 1, 0.3).unwrap()).unwrap();
    assert_eq!(a.len(), b.len());
    check_zeroes(5, 1, 0.3, &b);
}

proptest! {
    #[test]
    fn random_theta_zeroes_are_genuine(r in 2usize..12, th in 0.0..PI) {
        let zs = critical_zeroes(&ThetaFamily::new(1, r, th).unwrap()).unwrap();
        check_zeroes(1, r, th, &zs);
        prop_assert!(centrally_symmetric(&zs));
        prop_assert_eq!(zs.iter().filter(|z| z.locus == Locus::Vertex).count(), 4);
    }
}
