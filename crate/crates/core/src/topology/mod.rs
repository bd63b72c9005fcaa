//! Nodal sets on sampling grids: domain counts, checkerboard containment,
//! Q-square patterns, the `Z±` structure and θ-sweeps.

pub mod checkerboard;
pub mod contour;
pub mod grid;
pub mod patterns;
pub mod sweep;
pub mod union_find;
pub mod zstructure;

use serde::Serialize;

pub use checkerboard::{checkerboard_violations, grid_checkerboard_violations, CheckerboardMask};
pub use grid::{count_nodal_domains, count_nodal_domains_checked, default_resolution, NodalGrid};
pub use patterns::{
    classify_q_pattern, desingularization_check, DesingularizationReport, Opening,
    PatternContext, QPattern,
};
pub use sweep::{sweep, SweepReport, SweepSample, ThetaSamples};
pub use zstructure::{verify_z_structure, ZSide, ZStructureReport};

use crate::chebyshev::ChebyshevCatalog;
use crate::critical::{boundary_hits, critical_zeroes, theta_tolerance, CriticalZero, Locus};
use crate::eigenfunction::ThetaFamily;
use crate::error::Result;
use crate::scalar::{angle_distance_mod_pi, Scalar};
use crate::spectrum::first_index_of;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquarePattern {
    pub i: usize,
    pub j: usize,
    pub pattern: QPattern,
}

/// Topological summary of one `Φ^θ_{m,n}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodalSummary<T> {
    pub m: usize,
    pub n: usize,
    pub theta: T,
    pub domain_count: usize,
    /// Resolution at which the count was confirmed.
    pub resolution: usize,
    pub critical_zeroes: Vec<CriticalZero<T>>,
    pub boundary_hits: usize,
    /// White-square patterns; `(1, R)` with `θ ∉ {0, π/2}` only.
    pub q_patterns: Option<Vec<SquarePattern>>,
    /// Filled by the `Z±` verification.
    pub closed_curve_count: Option<usize>,
    /// Smallest spectral index of `m² + n²`.
    pub courant_index: usize,
    /// `(1, R)` with `θ ∉ {0, π/2}` only.
    pub checkerboard_violations: Option<usize>,
}

impl<T: Scalar> NodalSummary<T> {
    pub fn courant_ok(&self) -> bool {
        self.domain_count >= 1 && self.domain_count <= self.courant_index
    }

    pub fn interior_count(&self) -> usize {
        self.critical_zeroes
            .iter()
            .filter(|z| z.locus == Locus::Interior)
            .count()
    }

    pub fn edge_count(&self) -> usize {
        self.critical_zeroes
            .iter()
            .filter(|z| matches!(z.locus, Locus::Edge(_)))
            .count()
    }
}

pub(crate) fn is_product_theta<T: Scalar>(theta: T) -> bool {
    let tol = theta_tolerance::<T>();
    angle_distance_mod_pi(theta, T::zero()) < tol
        || angle_distance_mod_pi(theta, T::FRAC_PI_2()) < tol
}

/// Full summary of `Φ^θ_{m,n}` at `resolution` (default `64 · max(m, n)`).
pub fn summarize<T: Scalar>(
    m: usize,
    n: usize,
    theta: T,
    resolution: Option<usize>,
) -> Result<NodalSummary<T>> {
    summarize_with_grid(m, n, theta, resolution).map(|(s, _)| s)
}

/// As [`summarize`], also returning the base-resolution grid.
pub fn summarize_with_grid<T: Scalar>(
    m: usize,
    n: usize,
    theta: T,
    resolution: Option<usize>,
) -> Result<(NodalSummary<T>, NodalGrid<T>)> {
    let fam = ThetaFamily::new(m, n, theta)?;
    let res = resolution.unwrap_or_else(|| default_resolution(m, n));
    let count = count_nodal_domains_checked(&fam, res)?;
    let grid = NodalGrid::new(&fam, res)?;
    let zeros = critical_zeroes(&fam)?;
    let one_r = m == 1 && n >= 2 && !is_product_theta(fam.theta);
    let (q_patterns, violations) = if one_r {
        let ctx = PatternContext::new(n, fam.theta)?;
        let map = ctx
            .pattern_map()?
            .into_iter()
            .map(|((i, j), pattern)| SquarePattern { i, j, pattern })
            .collect();
        (Some(map), Some(grid_checkerboard_violations(&grid)?))
    } else {
        (None, None)
    };
    let summary = NodalSummary {
        m,
        n,
        theta: fam.theta,
        domain_count: count.count,
        resolution: count.resolution,
        boundary_hits: boundary_hits(&zeros),
        critical_zeroes: zeros,
        q_patterns,
        closed_curve_count: None,
        courant_index: first_index_of((m * m + n * n) as u64),
        checkerboard_violations: violations,
    };
    Ok((summary, grid))
}

/// Whether every component of the nodal set of `Φ^θ_{1,R}` inside the open
/// square passes within `1.5 h` of a lattice point. Returns the number of
/// components and how many of them miss the lattice.
pub fn lattice_touch<T: Scalar>(r: usize, theta: T, resolution: usize) -> Result<(usize, usize)> {
    let fam = ThetaFamily::new(1, r, theta)?;
    let grid = NodalGrid::new(&fam, resolution)?;
    let h = grid.spacing();
    let segs = contour::march(
        resolution,
        &grid.values,
        |k| grid.coord(k),
        |i, j| fam.eval(T::from_count(i + 1) * h, T::from_count(j + 1) * h),
    );
    let comps = contour::components(resolution, &segs);
    let cat = ChebyshevCatalog::<T>::new(r)?;
    let reach = T::lit(1.5) * h;
    let near_lattice = |p: (T, T)| {
        let nearest = |t: T| {
            let k = (t / cat.p[1]).round();
            (k, (t - k * cat.p[1]).abs())
        };
        let (kx, dx) = nearest(p.0);
        let (ky, dy) = nearest(p.1);
        let rr = T::from_count(r);
        kx >= T::one() && kx < rr && ky >= T::one() && ky < rr && dx <= reach && dy <= reach
    };
    let missing = comps
        .iter()
        .filter(|c| {
            !c.segments
                .iter()
                .any(|&k| near_lattice(segs[k].a) || near_lattice(segs[k].b))
        })
        .count();
    Ok((comps.len(), missing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn summary_of_one_four_quarter() {
        let s = summarize(1, 4, PI / 4.0, None).unwrap();
        assert_eq!(s.domain_count, 4);
        assert_eq!(s.courant_index, 9);
        assert!(s.courant_ok());
        assert_eq!(s.checkerboard_violations, Some(0));
    }

    #[test]
    fn lattice_touch_generic_theta() {
        let (comps, missing) = lattice_touch(6, 0.3_f64, 384).unwrap();
        assert!(comps > 0);
        assert_eq!(missing, 0);
    }
}
