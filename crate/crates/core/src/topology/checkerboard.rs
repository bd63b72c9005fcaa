//! Grey/white checkerboard of the `(1, R)` family: outside the white squares,
//! the lattice and the boundary, `Φ^θ_{1,R}` cannot vanish.

use serde::Serialize;

use super::grid::NodalGrid;
use crate::critical::theta_tolerance;
use crate::eigenfunction::ThetaFamily;
use crate::error::{invalid, Result};
use crate::scalar::{angle_distance_mod_pi, canonical_theta, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckerboardMask {
    pub r: usize,
    /// Sign of `cos θ`.
    pub polarity: i8,
    /// `(i, j)` with `(−1)^{i+j} · polarity = −1`, sorted.
    pub white_squares: Vec<(usize, usize)>,
}

impl CheckerboardMask {
    pub fn new<T: Scalar>(r: usize, theta: T) -> Result<Self> {
        if r < 1 {
            return Err(invalid("R must be >= 1"));
        }
        let theta = canonical_theta(theta);
        let tol = theta_tolerance::<T>();
        if angle_distance_mod_pi(theta, T::zero()) < tol
            || angle_distance_mod_pi(theta, T::FRAC_PI_2()) < tol
        {
            return Err(invalid("checkerboard undefined for product theta (0 or pi/2)"));
        }
        let polarity = if theta.cos() > T::zero() { 1 } else { -1 };
        let white_squares = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .filter(|&(i, j)| is_white(polarity, i, j))
            .collect();
        Ok(CheckerboardMask {
            r,
            polarity,
            white_squares,
        })
    }

    pub fn is_white(&self, i: usize, j: usize) -> bool {
        is_white(self.polarity, i, j)
    }

    /// `r = ⌊R/2⌋`.
    pub fn half(&self) -> usize {
        self.r / 2
    }

    /// Indices of the nested square `S_k = (p_k, π − p_k)²` as a Q-square range.
    pub fn nested_square(&self, k: usize) -> Option<std::ops::Range<usize>> {
        (2 * k < self.r).then(|| k..self.r - k)
    }
}

fn is_white(polarity: i8, i: usize, j: usize) -> bool {
    let parity = if (i + j) % 2 == 0 { 1 } else { -1 };
    parity * polarity == -1
}

/// Q-square holding sample index `a` on an `N`-grid, or `None` if the sample
/// sits exactly on a line `x = p_i`.
pub(crate) fn square_of(a: usize, res: usize, r: usize) -> Option<usize> {
    let num = (2 * a + 1) * r;
    let den = 2 * res;
    (num % den != 0).then_some(num / den)
}

/// Counts 2×2 sample cells lying strictly inside one grey square whose samples
/// do not share a single nonzero sign.
pub fn grid_checkerboard_violations<T: Scalar>(grid: &NodalGrid<T>) -> Result<usize> {
    if grid.m != 1 {
        return Err(invalid("checkerboard applies to the (1, R) family"));
    }
    let r = grid.n;
    let mask = CheckerboardMask::new(r, grid.theta)?;
    let res = grid.resolution;
    let sq: Vec<Option<usize>> = (0..res).map(|a| square_of(a, res, r)).collect();
    let mut bad = 0;
    for j in 0..res - 1 {
        for i in 0..res - 1 {
            let (Some(a0), Some(a1), Some(b0), Some(b1)) = (sq[i], sq[i + 1], sq[j], sq[j + 1])
            else {
                continue;
            };
            if a0 != a1 || b0 != b1 || mask.is_white(a0, b0) {
                continue;
            }
            let s = [
                grid.signs[grid.index(i, j)],
                grid.signs[grid.index(i + 1, j)],
                grid.signs[grid.index(i, j + 1)],
                grid.signs[grid.index(i + 1, j + 1)],
            ];
            if s[0] == 0 || s.iter().any(|&x| x != s[0]) {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

/// Checkerboard violations of `Φ^θ_{1,R}` on an `N`-grid.
pub fn checkerboard_violations<T: Scalar>(r: usize, theta: T, resolution: usize) -> Result<usize> {
    let fam = ThetaFamily::new(1, r, theta)?;
    grid_checkerboard_violations(&NodalGrid::new(&fam, resolution)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn white_count_is_half() {
        for r in 2..10 {
            let m = CheckerboardMask::new(r, 0.3_f64).unwrap();
            let w = m.white_squares.len();
            assert!(w == r * r / 2 || w == (r * r + 1) / 2);
            let flipped = CheckerboardMask::new(r, 0.7 * PI).unwrap();
            assert_eq!(w + flipped.white_squares.len(), r * r);
        }
    }

    #[test]
    fn product_theta_rejected() {
        assert!(CheckerboardMask::new(4, 0.0_f64).is_err());
        assert!(CheckerboardMask::new(4, PI / 2.0).is_err());
    }

    #[test]
    fn square_lookup_skips_grid_lines() {
        // N = 3, R = 3: sample centres at π/6, π/2, 5π/6, none on p-lines
        assert_eq!(square_of(1, 3, 3), Some(1));
        // N = 1, R = 2: the single sample sits on x = π/2
        assert_eq!(square_of(0, 1, 2), None);
    }

    #[test]
    fn nested_squares_shrink() {
        let m = CheckerboardMask::new(6, 0.2_f64).unwrap();
        assert_eq!(m.nested_square(0), Some(0..6));
        assert_eq!(m.nested_square(2), Some(2..4));
        assert_eq!(m.nested_square(3), None);
    }
}
