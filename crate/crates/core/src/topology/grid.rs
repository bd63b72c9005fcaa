//! Sign samples of `Φ` at the cell centres `((i+½)π/N, (j+½)π/N)` and
//! nodal-domain counting on them.

use serde::Serialize;

use super::union_find::UnionFind;
use crate::eigenfunction::ThetaFamily;
use crate::error::{invalid, Error, Result};
use crate::scalar::Scalar;

/// Samples of `Φ` on an `N × N` offset grid, row-major with `x` fastest.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodalGrid<T> {
    pub m: usize,
    pub n: usize,
    pub theta: T,
    pub resolution: usize,
    pub values: Vec<T>,
    pub signs: Vec<i8>,
    /// Values at or below this magnitude have sign 0.
    pub zero_tol: T,
    #[serde(skip)]
    pub(crate) sep: Separable<T>,
}

/// Per-axis factors making `Φ = c A(x) B(y) + s C(x) D(y)` cheap to tabulate.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Separable<T> {
    pub c: T,
    pub s: T,
    /// `sin(m t)` and `sin(n t)` at the sample coordinates.
    pub sm: Vec<T>,
    pub sn: Vec<T>,
    /// The same at the integer nodes `kπ/N`, `0 ≤ k ≤ N`.
    pub sm_node: Vec<T>,
    pub sn_node: Vec<T>,
}

impl<T: Scalar> Separable<T> {
    fn new(fam: &ThetaFamily<T>, res: usize) -> Self {
        let h = T::PI() / T::from_count(res);
        let (m, n) = (T::from_count(fam.m), T::from_count(fam.n));
        let at = |k: usize, off: T, w: T| ((T::from_count(k) + off) * h * w).sin();
        let half = T::lit(0.5);
        Separable {
            c: fam.theta.cos(),
            s: fam.theta.sin(),
            sm: (0..res).map(|k| at(k, half, m)).collect(),
            sn: (0..res).map(|k| at(k, half, n)).collect(),
            sm_node: (0..=res).map(|k| at(k, T::zero(), m)).collect(),
            sn_node: (0..=res).map(|k| at(k, T::zero(), n)).collect(),
        }
    }

    #[inline]
    fn sample(&self, i: usize, j: usize) -> T {
        self.c * self.sm[i] * self.sn[j] + self.s * self.sn[i] * self.sm[j]
    }

    /// `Φ` halfway between samples `(i, j)` and `(i+1, j)`.
    #[inline]
    fn mid_x(&self, i: usize, j: usize) -> T {
        self.c * self.sm_node[i + 1] * self.sn[j] + self.s * self.sn_node[i + 1] * self.sm[j]
    }

    /// `Φ` halfway between samples `(i, j)` and `(i, j+1)`.
    #[inline]
    fn mid_y(&self, i: usize, j: usize) -> T {
        self.c * self.sm[i] * self.sn_node[j + 1] + self.s * self.sn[i] * self.sm_node[j + 1]
    }
}

fn sign_of<T: Scalar>(v: T, tol: T) -> i8 {
    if v > tol {
        1
    } else if v < -tol {
        -1
    } else {
        0
    }
}

/// Relative threshold below which a sample counts as zero.
pub fn relative_zero_tolerance<T: Scalar>() -> T {
    T::lit(1e-12).max(T::epsilon() * T::lit(16.0))
}

impl<T: Scalar> NodalGrid<T> {
    pub fn new(fam: &ThetaFamily<T>, resolution: usize) -> Result<Self> {
        let need = 16 * fam.m.max(fam.n);
        if resolution < need {
            return Err(invalid(format!(
                "resolution {resolution} below the minimum {need} for mode ({}, {})",
                fam.m, fam.n
            )));
        }
        let sep = Separable::new(fam, resolution);
        let mut values = Vec::with_capacity(resolution * resolution);
        for j in 0..resolution {
            for i in 0..resolution {
                values.push(sep.sample(i, j));
            }
        }
        let peak = values.iter().fold(T::zero(), |a, &v| a.max(v.abs()));
        let zero_tol = peak * relative_zero_tolerance::<T>();
        let signs = values.iter().map(|&v| sign_of(v, zero_tol)).collect();
        Ok(NodalGrid {
            m: fam.m,
            n: fam.n,
            theta: fam.theta,
            resolution,
            values,
            signs,
            zero_tol,
            sep,
        })
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.resolution + i
    }

    /// Physical coordinate of sample index `k`.
    pub fn coord(&self, k: usize) -> T {
        (T::from_count(k) + T::lit(0.5)) * T::PI() / T::from_count(self.resolution)
    }

    pub fn spacing(&self) -> T {
        T::PI() / T::from_count(self.resolution)
    }

    /// Labels every nonzero sample with its nodal domain. Neighbours (4-adjacent)
    /// join only if both carry the same sign and `Φ` keeps that sign at the
    /// midpoint between them, so thin necks near crossings are not bridged.
    pub fn label_domains(&self) -> (Vec<Option<usize>>, usize) {
        let res = self.resolution;
        let mut uf = UnionFind::new(res * res);
        for j in 0..res {
            for i in 0..res {
                let k = self.index(i, j);
                let sk = self.signs[k];
                if sk == 0 {
                    continue;
                }
                if i + 1 < res
                    && self.signs[k + 1] == sk
                    && sign_of(self.sep.mid_x(i, j), self.zero_tol) == sk
                {
                    uf.union(k, k + 1);
                }
                if j + 1 < res
                    && self.signs[k + res] == sk
                    && sign_of(self.sep.mid_y(i, j), self.zero_tol) == sk
                {
                    uf.union(k, k + res);
                }
            }
        }
        let mut ids = vec![usize::MAX; res * res];
        let mut labels = vec![None; res * res];
        let mut count = 0;
        for k in 0..res * res {
            if self.signs[k] == 0 {
                continue;
            }
            let root = uf.find(k);
            if ids[root] == usize::MAX {
                ids[root] = count;
                count += 1;
            }
            labels[k] = Some(ids[root]);
        }
        (labels, count)
    }

    /// Number of nodal domains seen at this resolution.
    pub fn domain_count(&self) -> usize {
        self.label_domains().1
    }
}

/// Default resolution `64 · max(m, n)`.
pub fn default_resolution(m: usize, n: usize) -> usize {
    64 * m.max(n)
}

/// Result of a stability-checked count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DomainCount {
    pub count: usize,
    /// Finest resolution the count was confirmed at.
    pub resolution: usize,
    /// Resolution doublings needed beyond the first comparison.
    pub refinements: usize,
}

/// Counts nodal domains at `resolution` and `2·resolution`; on disagreement
/// moves one level finer, at most twice.
pub fn count_nodal_domains_checked<T: Scalar>(
    fam: &ThetaFamily<T>,
    resolution: usize,
) -> Result<DomainCount> {
    let mut res = resolution;
    let mut coarse = NodalGrid::new(fam, res)?.domain_count();
    for refinements in 0..=2 {
        let fine = NodalGrid::new(fam, 2 * res)?.domain_count();
        if fine == coarse {
            return Ok(DomainCount {
                count: fine,
                resolution: 2 * res,
                refinements,
            });
        }
        coarse = fine;
        res *= 2;
    }
    Err(Error::Unstable(format!(
        "mode ({}, {}) at theta = {}: counts disagree up to resolution {}",
        fam.m, fam.n, fam.theta, res
    )))
}

/// Stability-checked nodal-domain count of `Φ^θ_{m,n}`.
pub fn count_nodal_domains<T: Scalar>(
    m: usize,
    n: usize,
    theta: T,
    resolution: usize,
) -> Result<usize> {
    let fam = ThetaFamily::new(m, n, theta)?;
    Ok(count_nodal_domains_checked(&fam, resolution)?.count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_have_mn_domains() {
        for (m, n) in [(1, 1), (1, 3), (2, 3), (3, 3), (2, 5)] {
            let c = count_nodal_domains(m, n, 0.0_f64, default_resolution(m, n)).unwrap();
            assert_eq!(c, m * n, "({m}, {n})");
        }
    }

    #[test]
    fn coarse_grid_rejected() {
        assert!(count_nodal_domains(1, 4, 0.3_f64, 63).is_err());
    }

    #[test]
    fn samples_match_direct_evaluation() {
        let fam = ThetaFamily::new(2, 5, 0.7_f64).unwrap();
        let g = NodalGrid::new(&fam, 80).unwrap();
        for &(i, j) in &[(0, 0), (13, 71), (79, 79)] {
            let v = fam.eval(g.coord(i), g.coord(j));
            assert!((g.values[g.index(i, j)] - v).abs() < 1e-14);
        }
    }
}
