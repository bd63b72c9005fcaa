//! Global structure of the nodal sets of `Z₊ = Φ^{π/4}_{1,R}` and
//! `Z₋ = Φ^{3π/4}_{1,R}`: the boundary, the diagonals they contain, and a
//! family of closed curves.
//!
//! The closed curves are counted on `g = Z / (diagonal factors)`, whose zero
//! set is exactly the union of the curves, so crossings with the diagonals do
//! not glue curves together.

use serde::Serialize;

use super::contour::{components, march};
use super::{summarize, NodalSummary};
use crate::chebyshev::ChebyshevCatalog;
use crate::eigenfunction::ThetaFamily;
use crate::error::{invalid, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Diagonal {
    /// `x = y`.
    Main,
    /// `x + y = π`.
    Anti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZSide<T> {
    pub sign: ZSign,
    pub summary: NodalSummary<T>,
    pub diagonals: Vec<Diagonal>,
    pub closed_curves: usize,
    /// Components of the reduced level set that reach the sampling hull.
    pub open_components: usize,
    pub expected_closed_curves: usize,
    pub expected_domains: usize,
    pub expected_interior_zeroes: usize,
    /// `(−1)^j Z₊(x, m_j) > 0` on `(p_{j+1}, π − p_{j+1})`; even `R`, `Z₊` only.
    pub median_sign_definite: Option<bool>,
}

impl<T: Scalar> ZSide<T> {
    pub fn passed(&self) -> bool {
        let interior = self
            .summary
            .critical_zeroes
            .iter()
            .filter(|z| z.locus == crate::critical::Locus::Interior)
            .count();
        self.closed_curves == self.expected_closed_curves
            && self.open_components == 0
            && self.summary.domain_count == self.expected_domains
            && interior == self.expected_interior_zeroes
            && self.median_sign_definite != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZStructureReport<T> {
    pub r: usize,
    pub plus: ZSide<T>,
    pub minus: ZSide<T>,
}

impl<T: Scalar> ZStructureReport<T> {
    pub fn passed(&self) -> bool {
        self.plus.passed() && self.minus.passed()
    }
}

/// Diagonals contained in the nodal set of `Z₊` / `Z₋`.
pub fn diagonals(r: usize, sign: ZSign) -> Vec<Diagonal> {
    match (r % 2 == 0, sign) {
        (true, ZSign::Plus) => vec![Diagonal::Anti],
        (true, ZSign::Minus) => vec![Diagonal::Main],
        (false, ZSign::Plus) => Vec::new(),
        (false, ZSign::Minus) => vec![Diagonal::Main, Diagonal::Anti],
    }
}

/// Samples `Z / Π(diagonal factors)` on the `N`-grid. On a diagonal the
/// quotient is replaced by `Z_x` over the remaining factor, every factor
/// having unit `x`-derivative. `N` must be even so the centre is never hit.
pub fn reduced_field<T: Scalar>(
    fam: &ThetaFamily<T>,
    diags: &[Diagonal],
    res: usize,
) -> (Vec<T>, Vec<T>) {
    let h = T::PI() / T::from_count(res);
    let pi = T::PI();
    // on_main / on_anti decided from indices so rounding never matters
    let eval = |x: T, y: T, on_main: bool, on_anti: bool| -> T {
        let main = x - y;
        let anti = x + y - pi;
        let has_main = diags.contains(&Diagonal::Main);
        let has_anti = diags.contains(&Diagonal::Anti);
        let mut value = fam.eval(x, y);
        let mut divisor = T::one();
        let mut used_derivative = false;
        if has_main {
            if on_main {
                value = fam.grad(x, y).0;
                used_derivative = true;
            } else {
                divisor = divisor * main;
            }
        }
        if has_anti {
            if on_anti && !used_derivative {
                value = fam.grad(x, y).0;
            } else {
                divisor = divisor * anti;
            }
        }
        value / divisor
    };
    let mut samples = Vec::with_capacity(res * res);
    for j in 0..res {
        let y = (T::from_count(j) + T::lit(0.5)) * h;
        for i in 0..res {
            let x = (T::from_count(i) + T::lit(0.5)) * h;
            samples.push(eval(x, y, i == j, i + j + 1 == res));
        }
    }
    // cell centres sit on the nodes (i+1)h, (j+1)h
    let mut centres = Vec::with_capacity(res * res);
    for j in 0..res {
        let y = T::from_count(j + 1) * h;
        for i in 0..res {
            let x = T::from_count(i + 1) * h;
            let on_main = i == j;
            let on_anti = i + j + 2 == res;
            if on_main && on_anti {
                // the centre of the square: use the nearest sample instead
                centres.push(samples[j * res + i]);
            } else {
                centres.push(eval(x, y, on_main, on_anti));
            }
        }
    }
    (samples, centres)
}

/// Closed and open components of the reduced nodal set.
pub fn count_reduced_curves<T: Scalar>(
    fam: &ThetaFamily<T>,
    diags: &[Diagonal],
    res: usize,
) -> (usize, usize) {
    let res = res + res % 2;
    let (samples, centres) = reduced_field(fam, diags, res);
    let h = T::PI() / T::from_count(res);
    let segs = march(
        res,
        &samples,
        |k| (T::from_count(k) + T::lit(0.5)) * h,
        |i, j| centres[j * res + i],
    );
    let comps = components(res, &segs);
    let closed = comps.iter().filter(|c| c.closed).count();
    (closed, comps.len() - closed)
}

fn median_check<T: Scalar>(r: usize) -> Result<bool> {
    let cat = ChebyshevCatalog::<T>::new(r)?;
    let fam = ThetaFamily::z_plus(1, r)?;
    let pi = T::PI();
    for j in 0..r / 2 {
        let (a, b) = (cat.p[j + 1], pi - cat.p[j + 1]);
        if a >= b {
            continue;
        }
        let y = cat.midpoints[j];
        let sign = if j % 2 == 0 { T::one() } else { -T::one() };
        let samples = 2000;
        for k in 0..samples {
            let x = a + (b - a) * (T::from_count(k) + T::lit(0.5)) / T::from_count(samples);
            if sign * fam.eval(x, y) <= T::zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn side<T: Scalar>(r: usize, sign: ZSign, res: usize) -> Result<ZSide<T>> {
    let theta = match sign {
        ZSign::Plus => T::FRAC_PI_4(),
        ZSign::Minus => T::lit(3.0) * T::FRAC_PI_4(),
    };
    let fam = ThetaFamily::new(1, r, theta)?;
    let diags = diagonals(r, sign);
    let (closed, open) = count_reduced_curves(&fam, &diags, res);
    let mut summary = summarize(1, r, theta, Some(res))?;
    summary.closed_curve_count = Some(closed);
    let half = r / 2;
    let even = r % 2 == 0;
    let (expected_closed, expected_domains, expected_interior) = match (even, sign) {
        (true, _) => (half - 1, r, r - 2),
        (false, ZSign::Plus) => (half, half + 1, 0),
        (false, ZSign::Minus) => (half - 1, 4 * half, 2 * r - 5),
    };
    let median = (even && sign == ZSign::Plus)
        .then(|| median_check::<T>(r))
        .transpose()?;
    Ok(ZSide {
        sign,
        summary,
        diagonals: diags,
        closed_curves: closed,
        open_components: open,
        expected_closed_curves: expected_closed,
        expected_domains,
        expected_interior_zeroes: expected_interior,
        median_sign_definite: median,
    })
}

/// Checks the decomposition of `N(Z₊)` and `N(Z₋)` for the `(1, R)` family at
/// the given resolution (default `64 R`).
pub fn verify_z_structure<T: Scalar>(r: usize, resolution: Option<usize>) -> Result<ZStructureReport<T>> {
    if r < 2 {
        return Err(invalid(format!("R must be >= 2, got {r}")));
    }
    let res = resolution.unwrap_or(64 * r);
    Ok(ZStructureReport {
        r,
        plus: side(r, ZSign::Plus, res)?,
        minus: side(r, ZSign::Minus, res)?,
    })
}
