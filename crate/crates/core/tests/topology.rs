use square_nodal::chebyshev::{ChebyshevCatalog, SpecialThetaCatalog};
use square_nodal::scalar::angle_distance_mod_pi;
use square_nodal::topology::patterns::Opening;
use square_nodal::topology::{
    checkerboard_violations, classify_q_pattern, count_nodal_domains, default_resolution,
    desingularization_check, lattice_touch, summarize, PatternContext, QPattern,
};
use std::f64::consts::PI;

#[test]
fn domain_count_examples() {
    assert_eq!(count_nodal_domains(1, 3, 0.0_f64, 192).unwrap(), 3);
    assert_eq!(count_nodal_domains(1, 4, PI / 4.0, 256).unwrap(), 4);
    for r in 1..=4 {
        let big_r = 2 * r;
        let res = default_resolution(1, big_r);
        assert_eq!(count_nodal_domains(1, big_r, PI / 4.0 - 0.01, res).unwrap(), 2);
        assert_eq!(count_nodal_domains(1, big_r, PI / 4.0, res).unwrap(), big_r);
    }
}

#[test]
fn products_count_mn() {
    for m in 1..5 {
        for n in m..6 {
            let res = default_resolution(m, n);
            assert_eq!(count_nodal_domains(m, n, 0.0_f64, res).unwrap(), m * n);
            assert_eq!(count_nodal_domains(m, n, PI / 2.0, res).unwrap(), m * n);
        }
    }
}

#[test]
fn swap_symmetry_of_counts() {
    for r in [3, 5, 8] {
        let res = default_resolution(1, r);
        for k in 1..12 {
            let th = k as f64 * PI / 24.0;
            let a = count_nodal_domains(1, r, th, res).unwrap();
            let b = count_nodal_domains(1, r, PI / 2.0 - th, res).unwrap();
            assert_eq!(a, b, "R={r} theta={th}");
        }
    }
}

#[test]
fn checkerboard_examples() {
    assert_eq!(checkerboard_violations(8, 0.2 * PI, 512).unwrap(), 0);
    assert_eq!(checkerboard_violations(9, 0.6 * PI, 576).unwrap(), 0);
    assert_eq!(checkerboard_violations(3, PI / 4.0, 512).unwrap(), 0);
}

#[test]
fn checkerboard_on_catalog_values() {
    for r in [4, 7] {
        let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
        let sp = SpecialThetaCatalog::new(&cat).unwrap();
        for th in sp.union() {
            assert_eq!(checkerboard_violations(r, th, 64 * r).unwrap(), 0);
        }
    }
}

#[test]
fn pattern_examples() {
    let cat = ChebyshevCatalog::<f64>::new(8).unwrap();
    let sp = SpecialThetaCatalog::new(&cat).unwrap();
    let th = sp.theta_interior(1, 2);
    assert_eq!(classify_q_pattern(8, th, 1, 2).unwrap(), QPattern::InnerC);
    assert_eq!(classify_q_pattern(8, PI / 4.0, 0, 7).unwrap(), QPattern::BoundaryA);

    let ctx = PatternContext::new(8, 0.24 * PI).unwrap();
    assert!(sp.t_o.iter().all(|&t| angle_distance_mod_pi(t, 0.24 * PI) > 1e-3));
    for ((i, j), p) in ctx.pattern_map().unwrap() {
        if ctx.is_inner(i, j) {
            assert!(matches!(p, QPattern::InnerA | QPattern::InnerB), "({i}, {j}) {p:?}");
        }
    }
}

#[test]
fn boundary_b_only_at_edge_values() {
    let r = 8;
    let cat = ChebyshevCatalog::<f64>::new(r).unwrap();
    let sp = SpecialThetaCatalog::new(&cat).unwrap();
    for &t in sp.t_x.iter().chain(&sp.t_y) {
        let map = PatternContext::new(r, t).unwrap().pattern_map().unwrap();
        assert!(map.values().any(|&p| p == QPattern::BoundaryB));
    }
    let map = PatternContext::new(r, 0.3).unwrap().pattern_map().unwrap();
    assert!(map.values().all(|&p| p != QPattern::BoundaryB && p != QPattern::InnerC));
}

#[test]
fn inner_c_only_at_interior_values() {
    let cat = ChebyshevCatalog::<f64>::new(7).unwrap();
    let sp = SpecialThetaCatalog::new(&cat).unwrap();
    for &t in &sp.t_o {
        let ctx = PatternContext::new(7, t).unwrap();
        let map = ctx.pattern_map().unwrap();
        let c = map.values().filter(|&&p| p == QPattern::InnerC).count();
        assert_eq!(c, ctx.interior_zeroes.len());
    }
}

#[test]
fn grey_square_is_rejected() {
    assert!(classify_q_pattern(8, 0.2 * PI, 0, 0).is_err());
    assert!(classify_q_pattern(8, 0.0, 0, 1).is_err());
}

#[test]
fn crossings_open_up_together() {
    let cases = [
        (8, PI / 4.0 - 0.01, 6, Opening::Horizontal),
        (8, PI / 4.0 + 0.01, 6, Opening::Vertical),
        (9, 0.75 * PI - 0.01, 13, Opening::Vertical),
        (9, 0.75 * PI + 0.01, 13, Opening::Horizontal),
    ];
    for (r, th, squares, dir) in cases {
        let rep = desingularization_check(r, th).unwrap();
        assert_eq!(rep.squares.len(), squares);
        assert_eq!(rep.unanimous(), Some(dir), "R={r} theta={th}");
    }
    assert!(desingularization_check(8, PI / 4.0).is_err());
}

#[test]
fn every_nodal_component_meets_the_lattice() {
    for (r, th) in [(4, 0.3), (6, 1.0), (7, 2.0), (8, 0.1), (9, 2.6)] {
        let (comps, missing) = lattice_touch(r, th, 64 * r).unwrap();
        assert!(comps > 0);
        assert_eq!(missing, 0, "R={r} theta={th}");
    }
}

#[test]
fn summary_respects_courant() {
    for (m, n, th) in [(1, 3, 0.75 * PI), (2, 3, 0.0), (1, 4, 1.0), (1, 1, 0.0), (2, 2, 0.0)] {
        let s = summarize(m, n, th, None).unwrap();
        assert!(s.courant_ok(), "({m},{n}) {th}: {} > {}", s.domain_count, s.courant_index);
    }
}

#[test]
fn single_precision_counts() {
    assert_eq!(count_nodal_domains(1, 4, std::f32::consts::FRAC_PI_4, 256).unwrap(), 4);
    assert_eq!(count_nodal_domains(2, 3, 0.3_f32, 192).unwrap(), 4);
}
