//! Runners for the acceptance checks. Each returns a [`CriterionReport`] with
//! a one-line verdict; the CLI and the integration tests share them.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{rngs::StdRng, Rng, SeedableRng};
use serde::Serialize;

use crate::chebyshev::{u_eval, ChebyshevCatalog, SpecialThetaCatalog};
use crate::critical::{critical_zeroes, Locus};
use crate::eigenfunction::ThetaFamily;
use crate::error::{invalid, Result};
use crate::spectrum::{courant_sharp_candidates, enumerate_spectrum};
use crate::topology::{
    count_nodal_domains_checked, default_resolution, grid_checkerboard_violations, summarize,
    sweep, verify_z_structure, NodalGrid, ThetaSamples,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {} {}: {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_ms
        )
    }
}

fn timed(id: u8, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionReport {
    let t = Instant::now();
    let (passed, detail) = match f() {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionReport {
        id,
        name,
        passed,
        detail,
        elapsed_ms: t.elapsed().as_millis(),
    }
}

/// `(eigenvalue, cluster size)` for every eigenvalue up to 73, as printed in
/// the reference spectral list.
pub const REFERENCE_CLUSTERS: [(u64, usize); 26] = [
    (2, 1),
    (5, 2),
    (8, 1),
    (10, 2),
    (13, 2),
    (17, 2),
    (18, 1),
    (20, 2),
    (25, 2),
    (26, 2),
    (29, 2),
    (32, 1),
    (34, 2),
    (37, 2),
    (40, 2),
    (41, 2),
    (45, 2),
    (50, 3),
    (52, 2),
    (53, 2),
    (58, 2),
    (61, 2),
    (65, 4),
    (68, 2),
    (72, 1),
    (73, 2),
];

pub fn spectrum_reproduction() -> CriterionReport {
    timed(1, "spectrum reproduction", || {
        let entries = enumerate_spectrum(73.0_f64)?;
        let expected: Vec<u64> = REFERENCE_CLUSTERS
            .iter()
            .flat_map(|&(v, c)| std::iter::repeat(v).take(c))
            .collect();
        let got: Vec<u64> = entries.iter().map(|e| e.eigenvalue).collect();
        let ranks_ok = entries.iter().enumerate().all(|(i, e)| e.k == i + 1);
        let mult_ok = entries.iter().all(|e| {
            REFERENCE_CLUSTERS
                .iter()
                .find(|c| c.0 == e.eigenvalue)
                .is_some_and(|c| c.1 == e.multiplicity())
        });
        Ok((
            got == expected && ranks_ok && mult_ok,
            format!("{} entries, last eigenvalue {}", entries.len(), got.last().copied().unwrap_or(0)),
        ))
    })
}

/// Largest nodal-domain count found over the eigenspace of `λ_k`.
pub fn max_domains_in_eigenspace(k: usize, resolution: Option<usize>) -> Result<usize> {
    let entries = enumerate_spectrum((k as f64 + 4.0).max(8.0) * 2.0)?;
    let entry = entries
        .get(k - 1)
        .ok_or_else(|| invalid(format!("index {k} beyond enumeration")))?;
    if entry.modes.len() != 1 {
        return Err(invalid(format!(
            "eigenvalue {} has several mode pairs; not supported",
            entry.eigenvalue
        )));
    }
    let (m, n) = (entry.modes[0].m as usize, entry.modes[0].n as usize);
    if m == n {
        return Ok(summarize(m, n, 0.0, resolution)?.domain_count);
    }
    let samples = if m == 1 {
        ThetaSamples::full()
    } else {
        ThetaSamples::Explicit(general_theta_grid())
    };
    Ok(sweep(m, n, &samples, resolution)?.max_count())
}

/// Uniform grid of 48 angles in `[0, π)` plus the four symmetric values.
pub fn general_theta_grid() -> Vec<f64> {
    use std::f64::consts::PI;
    let mut v: Vec<f64> = (0..48).map(|k| k as f64 * PI / 48.0).collect();
    v.extend([0.0, PI / 4.0, PI / 2.0, 0.75 * PI]);
    v
}

/// Courant-sharp indices among the candidates, decided by the sweeps.
pub fn courant_sharp_final(resolution: Option<usize>) -> Result<(Vec<usize>, BTreeMap<usize, usize>)> {
    let mut maxima = BTreeMap::new();
    let mut sharp = Vec::new();
    for k in courant_sharp_candidates() {
        let best = max_domains_in_eigenspace(k, resolution)?;
        maxima.insert(k, best);
        if best == k {
            sharp.push(k);
        }
    }
    Ok((sharp, maxima))
}

pub fn courant_pipeline() -> CriterionReport {
    timed(2, "Courant-sharp pipeline", || {
        let candidates = courant_sharp_candidates();
        let (sharp, maxima) = courant_sharp_final(None)?;
        let ok = candidates == vec![1, 2, 4, 5, 7, 9]
            && sharp == vec![1, 2, 4]
            && maxima.get(&5) == Some(&4)
            && maxima.get(&7) == Some(&6)
            && maxima.get(&9) == Some(&4);
        Ok((
            ok,
            format!(
                "candidates {candidates:?}, maxima {maxima:?}, Courant sharp {{{}}}",
                sharp.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(", ")
            ),
        ))
    })
}

/// Printed catalog values in units of `π`: `(R, Q, T_o, T_x, T_y)`.
type Printed = (usize, &'static [f64], &'static [f64], &'static [f64], &'static [f64]);

pub const PRINTED_CATALOGS: [Printed; 2] = [
    (
        8,
        &[0.179749, 0.309108, 0.436495, 0.563505, 0.690892, 0.820251],
        &[
            0.161605, 0.185335, 0.223323, 0.25, 0.276677, 0.314665, 0.338395, 0.661605, 0.685335,
            0.723323, 0.75, 0.776677, 0.814665, 0.838395,
        ],
        &[0.040363, 0.047665, 0.071705, 0.928295, 0.952335, 0.959636],
        &[0.428295, 0.452335, 0.459636, 0.540363, 0.547665, 0.571705],
    ),
    (
        9,
        &[0.159593, 0.274419, 0.387439, 0.500000, 0.612561, 0.725581, 0.840407],
        &[
            0.145132, 0.181901, 0.217145, 0.239975, 0.260025, 0.282855, 0.318099, 0.354868,
            0.653215, 0.707395, 0.75, 0.792605, 0.846785,
        ],
        &[0.037494, 0.070922, 0.953949, 0.964777],
        &[0.429078, 0.462505, 0.535223, 0.546050],
    ),
];

fn close_lists(got: &[f64], want: &[f64], tol: f64) -> bool {
    let pi = std::f64::consts::PI;
    got.len() == want.len() && got.iter().zip(want).all(|(g, w)| (g / pi - w).abs() < tol)
}

pub fn special_theta_catalogs() -> CriterionReport {
    timed(3, "special-theta catalogs", || {
        let mut ok = true;
        let mut notes = Vec::new();
        for (r, q, t_o, t_x, t_y) in PRINTED_CATALOGS {
            let cat = ChebyshevCatalog::<f64>::new(r)?;
            let sp = SpecialThetaCatalog::new(&cat)?;
            let good = close_lists(&cat.q, q, 1e-5)
                && close_lists(&sp.t_o, t_o, 1e-5)
                && close_lists(&sp.t_x, t_x, 1e-5)
                && close_lists(&sp.t_y, t_y, 1e-5);
            ok &= good;
            notes.push(format!("R={r} {}", if good { "matches" } else { "differs" }));
        }
        for r in (2..=20).step_by(2) {
            let cat = ChebyshevCatalog::<f64>::new(r)?;
            if cat.theta_minus != std::f64::consts::FRAC_PI_4 {
                ok = false;
                notes.push(format!("theta_minus(R={r}) != pi/4"));
            }
        }
        Ok((ok, notes.join(", ")))
    })
}

/// Checks for one even `R` at `π/4 − 0.01` and at `π/4`.
fn stern_case(r: usize) -> Result<(bool, String)> {
    use std::f64::consts::{FRAC_PI_4, PI};
    let below = summarize(1, r, FRAC_PI_4 - 0.01, None)?;
    let edges: Vec<_> = below
        .critical_zeroes
        .iter()
        .filter(|z| matches!(z.locus, Locus::Edge(_)))
        .collect();
    let pair = edges.len() == 2
        && (edges[0].x + edges[1].x - PI).abs() < 1e-12
        && (edges[0].y + edges[1].y - PI).abs() < 1e-12;
    let at = summarize(1, r, FRAC_PI_4, None)?;
    let fam = ThetaFamily::new(1, r, FRAC_PI_4)?;
    let interior: Vec<_> = at
        .critical_zeroes
        .iter()
        .filter(|z| z.locus == Locus::Interior)
        .collect();
    let on_anti = interior.iter().all(|z| {
        let (gx, gy) = fam.grad_direct(z.x, z.y);
        (z.x + z.y - PI).abs() < 1e-10
            && fam.eval(z.x, z.y).abs() < 1e-10
            && gx.hypot(gy) < 1e-8
            && z.order == 2
    });
    let ok = below.domain_count == 2
        && below.interior_count() == 0
        && pair
        && at.domain_count == r
        && interior.len() == r - 2
        && on_anti;
    Ok((
        ok,
        format!(
            "R={r}: {}/{}/{} then {}/{}",
            below.domain_count,
            below.interior_count(),
            edges.len(),
            at.domain_count,
            interior.len()
        ),
    ))
}

pub fn stern_theorem() -> CriterionReport {
    timed(4, "two nodal domains below pi/4", || {
        let mut ok = true;
        let mut notes = Vec::new();
        for r in [2, 4, 6, 8, 10] {
            let (good, note) = stern_case(r)?;
            ok &= good;
            notes.push(note);
        }
        Ok((ok, notes.join("; ")))
    })
}

pub fn z_structure() -> CriterionReport {
    timed(5, "Z+/Z- closed curves", || {
        let mut ok = true;
        let mut notes = Vec::new();
        for r in 4..=12 {
            let rep = verify_z_structure::<f64>(r, None)?;
            ok &= rep.passed();
            notes.push(format!(
                "R={r}: {}/{}",
                rep.plus.closed_curves, rep.minus.closed_curves
            ));
        }
        Ok((ok, notes.join(", ")))
    })
}

pub fn lambda5_sweep() -> CriterionReport {
    timed(6, "lambda_5 sweep", || {
        let rep = sweep(1, 3, &ThetaSamples::<f64>::full(), None)?;
        let required = [
            std::f64::consts::FRAC_PI_4,
            3.0_f64.atan(),
            std::f64::consts::FRAC_PI_2,
            0.75 * std::f64::consts::PI,
        ];
        let covered = required
            .iter()
            .all(|t| rep.samples.iter().any(|s| (s.theta - t).abs() < 1e-12));
        let counts = rep.counts();
        Ok((
            covered && counts == vec![2, 3, 4],
            format!("{} samples, counts {:?}", rep.samples.len(), counts),
        ))
    })
}

pub fn lambda7_lambda9() -> CriterionReport {
    timed(7, "lambda_7 and lambda_9", || {
        use std::f64::consts::FRAC_PI_2;
        let seven = sweep(2, 3, &ThetaSamples::Explicit(general_theta_grid()), None)?;
        let seven_ok = seven.samples.iter().all(|s| {
            let product = s.theta.abs() < 1e-12 || (s.theta - FRAC_PI_2).abs() < 1e-12;
            if product {
                s.domain_count == 6
            } else {
                s.domain_count == 4
            }
        });
        let nine = sweep(1, 4, &ThetaSamples::<f64>::full(), None)?;
        let nine_ok = nine.max_count() == 4 && nine.counts().contains(&2);
        Ok((
            seven_ok && nine_ok,
            format!("(2,3) counts {:?}, (1,4) counts {:?}", seven.counts(), nine.counts()),
        ))
    })
}

/// Finite-difference check of gradient and Hessian at 100 random points.
pub fn derivative_check(seed: u64) -> Result<(f64, f64)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let h = 1e-5;
    let (mut worst_g, mut worst_h) = (0.0_f64, 0.0_f64);
    let rel = |a: f64, b: f64, scale: f64| (a - b).abs() / scale.max(1.0);
    for _ in 0..100 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=12);
        let fam = ThetaFamily::new(m, n, rng.gen_range(0.0..std::f64::consts::PI))?;
        let x = rng.gen_range(0.05..3.09);
        let y = rng.gen_range(0.05..3.09);
        let (gx, gy) = fam.grad(x, y);
        let fx = (fam.eval(x + h, y) - fam.eval(x - h, y)) / (2.0 * h);
        let fy = (fam.eval(x, y + h) - fam.eval(x, y - h)) / (2.0 * h);
        let gscale = gx.abs().max(gy.abs());
        worst_g = worst_g.max(rel(gx, fx, gscale)).max(rel(gy, fy, gscale));
        let hs = fam.hessian(x, y);
        let dx = |px: f64, py: f64| fam.grad(px, py);
        let (ax, ay) = (dx(x + h, y), dx(x - h, y));
        let (bx, by) = (dx(x, y + h), dx(x, y - h));
        let fd = [
            [(ax.0 - ay.0) / (2.0 * h), (ax.1 - ay.1) / (2.0 * h)],
            [(bx.0 - by.0) / (2.0 * h), (bx.1 - by.1) / (2.0 * h)],
        ];
        let hscale = hs.iter().flatten().fold(0.0_f64, |a, v| a.max(v.abs()));
        for i in 0..2 {
            for j in 0..2 {
                worst_h = worst_h.max(rel(hs[i][j], fd[i][j], hscale));
            }
        }
    }
    Ok((worst_g, worst_h))
}

/// Largest violation of the symmetry identities of the `(1, R)` family over
/// 1000 random points.
pub fn symmetry_check(seed: u64) -> Result<f64> {
    use std::f64::consts::{FRAC_PI_2, PI};
    let mut rng = StdRng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let r = rng.gen_range(2..=12usize);
        let th = rng.gen_range(0.0..PI);
        let (x, y) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI));
        let f = ThetaFamily::new(1, r, th)?;
        let sign = if r % 2 == 0 { -1.0 } else { 1.0 };
        worst = worst.max((f.eval(PI - x, PI - y) - sign * f.eval(x, y)).abs());
        // storing θ mod π turns Φ into −Φ when π/2 − θ is folded up
        let folded = if th > FRAC_PI_2 { -1.0 } else { 1.0 };
        let g = ThetaFamily::new(1, r, FRAC_PI_2 - th)?;
        worst = worst.max((folded * g.eval(x, y) - f.eval(y, x)).abs());
        if r % 2 == 1 {
            worst = worst.max((f.eval(PI - x, y) - f.eval(x, y)).abs());
        } else {
            // π − θ stays in (0, π] and only θ = 0 folds
            let k = ThetaFamily::new(1, r, PI - th)?;
            let folded = if th == 0.0 { -1.0 } else { 1.0 };
            worst = worst.max((f.eval(x, PI - y) - folded * k.eval(x, y)).abs());
        }
    }
    Ok(worst)
}

/// `max |sin t · U_n(cos t) − sin((n+1)t)|` over `n ≤ 32` and a 10⁴-point grid.
pub fn chebyshev_identity_error() -> f64 {
    let pi = std::f64::consts::PI;
    let mut worst = 0.0_f64;
    for n in 0..=32 {
        for k in 1..=10_000 {
            let t = pi * k as f64 / 10_001.0;
            let e = (t.sin() * u_eval(n, t.cos()) - ((n + 1) as f64 * t).sin()).abs();
            worst = worst.max(e);
        }
    }
    worst
}

/// `(m, n, θ)` cases counted by the property suite.
pub fn property_cases() -> Vec<(usize, usize, f64)> {
    use std::f64::consts::PI;
    let mut v = Vec::new();
    for r in 2..=10 {
        for t in [0.1, 0.2, 0.25, 0.3, 0.45, 0.6, 0.75, 0.9] {
            v.push((1, r, t * PI));
        }
    }
    v.extend([(2, 3, 0.3), (2, 3, 0.0), (1, 1, 0.0), (2, 2, 0.0), (3, 4, 1.1)]);
    v
}

pub fn property_suite() -> CriterionReport {
    timed(8, "property suites", || {
        let (g, h) = derivative_check(7)?;
        let sym = symmetry_check(11)?;
        let cheb = chebyshev_identity_error();
        let mut checker_bad = 0;
        let mut courant_bad = 0;
        let mut unstable = 0;
        let mut zero_bad = 0;
        for (m, n, th) in property_cases() {
            let fam = ThetaFamily::new(m, n, th)?;
            let res = default_resolution(m, n);
            let count = count_nodal_domains_checked(&fam, res)?;
            if count.refinements != 0 {
                unstable += 1;
            }
            let s = summarize(m, n, th, Some(res))?;
            if !s.courant_ok() {
                courant_bad += 1;
            }
            if m == 1 && n >= 2 && s.checkerboard_violations.is_some() {
                let grid = NodalGrid::new(&fam, 2 * res)?;
                checker_bad += s.checkerboard_violations.unwrap_or(0);
                checker_bad += grid_checkerboard_violations(&grid)?;
            }
            for z in critical_zeroes(&fam)? {
                let (gx, gy) = fam.grad_direct(z.x, z.y);
                if fam.eval(z.x, z.y).abs() >= 1e-10 || gx.hypot(gy) >= 1e-8 {
                    zero_bad += 1;
                }
            }
        }
        let ok = g < 1e-6
            && h < 1e-5
            && sym < 1e-12
            && cheb < 1e-10
            && checker_bad == 0
            && courant_bad == 0
            && unstable == 0
            && zero_bad == 0;
        Ok((
            ok,
            format!(
                "grad {g:.1e}, hess {h:.1e}, sym {sym:.1e}, cheb {cheb:.1e}, checkerboard {checker_bad}, courant {courant_bad}, unstable {unstable}, bad zeroes {zero_bad}"
            ),
        ))
    })
}

pub fn deformation_stability() -> CriterionReport {
    timed(9, "deformation stability (1,8)", || {
        let rep = sweep(
            1,
            8,
            &ThetaSamples::Auto {
                lo: 0.0,
                hi: std::f64::consts::FRAC_PI_4,
                per_interval: 3,
            },
            None,
        )?;
        let intervals = rep
            .samples
            .iter()
            .filter_map(|s| s.interval)
            .max()
            .map_or(0, |k| k + 1);
        Ok((
            rep.anomalies() == 0,
            format!("{intervals} intervals, {} anomalies", rep.anomalies()),
        ))
    })
}

/// Named groups of criteria.
pub fn suite(name: &str) -> Result<Vec<fn() -> CriterionReport>> {
    let all: [fn() -> CriterionReport; 9] = [
        spectrum_reproduction,
        courant_pipeline,
        special_theta_catalogs,
        stern_theorem,
        z_structure,
        lambda5_sweep,
        lambda7_lambda9,
        property_suite,
        deformation_stability,
    ];
    let pick = |ids: &[usize]| ids.iter().map(|&i| all[i - 1]).collect();
    Ok(match name {
        "all" => all.to_vec(),
        "spectrum" => pick(&[1]),
        "pleijel" => pick(&[1, 2, 6, 7]),
        "catalog" => pick(&[3]),
        "stern" => pick(&[4, 9]),
        "z-structure" => pick(&[5]),
        "properties" => pick(&[8]),
        other => return Err(invalid(format!("unknown suite '{other}'"))),
    })
}

pub const SUITES: [&str; 7] = [
    "all",
    "spectrum",
    "pleijel",
    "catalog",
    "stern",
    "z-structure",
    "properties",
];
