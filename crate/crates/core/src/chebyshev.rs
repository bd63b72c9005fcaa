//! Second-kind Chebyshev polynomials and the special parameter values of the
//! `(1, R)` family.
//!
//! With `sin t · U_n(cos t) = sin((n+1)t)`, the function `t ↦ U_{R-1}(cos t)`
//! has `R - 2` interior extrema `q_j ∈ (p_j, p_{j+1})`, `p_i = iπ/R`. The
//! special values of `θ` are the angles at which `cos θ · A + sin θ · B`
//! vanishes for `A, B` among the extremal values and the endpoint values `±R`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::scalar::{bisect, Scalar};

/// `U_n(t)` by the three-term recurrence.
pub fn u_eval<T: Scalar>(n: usize, t: T) -> T {
    u_eval_with_derivatives(n, t).0
}

/// `(U_n(t), U_n'(t), U_n''(t))`, all from the recurrence
/// `U_{k+1} = 2t U_k − U_{k−1}` differentiated term by term.
pub fn u_eval_with_derivatives<T: Scalar>(n: usize, t: T) -> (T, T, T) {
    let two = T::lit(2.0);
    let (mut u0, mut d0, mut s0) = (T::one(), T::zero(), T::zero());
    if n == 0 {
        return (u0, d0, s0);
    }
    let (mut u1, mut d1, mut s1) = (two * t, two, T::zero());
    for _ in 1..n {
        let u2 = two * t * u1 - u0;
        let d2 = two * u1 + two * t * d1 - d0;
        let s2 = T::lit(4.0) * d1 + two * t * s1 - s0;
        (u0, d0, s0) = (u1, d1, s1);
        (u1, d1, s1) = (u2, d2, s2);
    }
    (u1, d1, s1)
}

/// Where the infimum of `U_{R-1}` over `[-1, 1]` was attained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimumLocation {
    /// At `cos q_j` (1-based `j`).
    Extremum(usize),
    /// At `t = -1` or `t = 1`.
    Endpoint(i8),
}

/// Extremum angles and values of `t ↦ U_{R-1}(cos t)` for one `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevCatalog<T> {
    /// Second mode number `R` of the `(1, R)` family.
    pub r: usize,
    /// `q_1 < … < q_{R-2}` in `(0, π)`.
    pub q: Vec<T>,
    /// `M_j = U_{R-1}(cos q_j)`.
    pub extrema: Vec<T>,
    /// `p_i = iπ/R`, `0 ≤ i ≤ R`.
    pub p: Vec<T>,
    /// `m_i = (i + ½)π/R`, `0 ≤ i ≤ R-1`.
    pub midpoints: Vec<T>,
    /// `arctan(|inf U_{R-1}| / R)`.
    pub theta_minus: T,
    pub minimum_at: MinimumLocation,
}

impl<T: Scalar> ChebyshevCatalog<T> {
    pub fn new(r: usize) -> Result<Self> {
        if r < 2 {
            return Err(invalid(format!("R must be >= 2, got {r}")));
        }
        let rr = T::from_count(r);
        let pi = T::PI();
        let p: Vec<T> = (0..=r).map(|i| T::from_count(i) * pi / rr).collect();
        let midpoints: Vec<T> = (0..r)
            .map(|i| (T::from_count(i) + T::lit(0.5)) * pi / rr)
            .collect();
        let n = r - 1;
        let slope = |t: T| u_eval_with_derivatives(n, t.cos()).1;
        let q: Vec<T> = (1..r - 1).map(|j| bisect(p[j], p[j + 1], slope)).collect();
        let extrema: Vec<T> = q.iter().map(|&t| u_eval(n, t.cos())).collect();

        let mut min_val = u_eval(n, T::one());
        let mut minimum_at = MinimumLocation::Endpoint(1);
        let at_minus_one = u_eval(n, -T::one());
        if at_minus_one < min_val {
            min_val = at_minus_one;
            minimum_at = MinimumLocation::Endpoint(-1);
        }
        for (j, &m) in extrema.iter().enumerate() {
            if m < min_val {
                min_val = m;
                minimum_at = MinimumLocation::Extremum(j + 1);
            }
        }
        let theta_minus = (min_val.abs() / rr).atan();
        Ok(ChebyshevCatalog {
            r,
            q,
            extrema,
            p,
            midpoints,
            theta_minus,
            minimum_at,
        })
    }

    /// `⌊R/2⌋`.
    pub fn half(&self) -> usize {
        self.r / 2
    }

    /// `U_{R-1}(t)`.
    pub fn u(&self, t: T) -> T {
        u_eval(self.r - 1, t)
    }

    /// `(U_{R-1}, U'_{R-1}, U''_{R-1})` at `t`.
    pub fn u_derivs(&self, t: T) -> (T, T, T) {
        u_eval_with_derivatives(self.r - 1, t)
    }

    /// `U_{R-1}(cos *)` for `* ∈ {0, π}`: `R` and `(-1)^{R-1} R`.
    pub fn endpoint_value(&self, star: Star) -> T {
        let rr = T::from_count(self.r);
        match star {
            Star::Zero => rr,
            Star::Pi if self.r % 2 == 0 => -rr,
            Star::Pi => rr,
        }
    }
}

/// Endpoint marker `* ∈ {0, π}` used in the edge special values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Star {
    Zero,
    Pi,
}

impl Star {
    pub fn angle<T: Scalar>(self) -> T {
        match self {
            Star::Zero => T::zero(),
            Star::Pi => T::PI(),
        }
    }
}

/// Unique `θ ∈ [0, π)` with `cos θ · a + sin θ · b = 0`.
pub fn resolve_theta<T: Scalar>(a: T, b: T) -> Result<T> {
    if a == T::zero() && b == T::zero() {
        return Err(Error::Internal(
            "both coefficients of the special-value equation vanish".into(),
        ));
    }
    let pi = T::PI();
    let mut t = (-a).atan2(b);
    if t < T::zero() {
        t = t + pi;
    }
    if t >= pi {
        t = t - pi;
    }
    Ok(t)
}

/// Special values of `θ` for one `R`, with their defining labels.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialThetaCatalog<T> {
    pub r: usize,
    /// `θ(q_i, q_j)` for `1 ≤ i, j ≤ R-2`, indexed `(i, j)` 1-based.
    pub interior: Vec<((usize, usize), T)>,
    /// `θ(*, q_j)`: vertical-edge values, indexed `(*, j)`.
    pub vertical_edge: Vec<((Star, usize), T)>,
    /// `θ(q_i, *)`: horizontal-edge values, indexed `(i, *)`.
    pub horizontal_edge: Vec<((usize, Star), T)>,
    /// Deduplicated, sorted `T_o`.
    pub t_o: Vec<T>,
    /// Deduplicated, sorted `T_x`.
    pub t_x: Vec<T>,
    /// Deduplicated, sorted `T_y`.
    pub t_y: Vec<T>,
}

fn dedup_sorted<T: Scalar>(mut v: Vec<T>, tol: T) -> Vec<T> {
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite angle"));
    let mut out: Vec<T> = Vec::with_capacity(v.len());
    for x in v {
        match out.last() {
            Some(&last) if (x - last).abs() <= tol => {}
            _ => out.push(x),
        }
    }
    out
}

impl<T: Scalar> SpecialThetaCatalog<T> {
    /// Builds all special values from a Chebyshev catalog. Empty for `R < 3`.
    pub fn new(cat: &ChebyshevCatalog<T>) -> Result<Self> {
        let k = cat.q.len();
        let mut interior = Vec::with_capacity(k * k);
        let mut vertical_edge = Vec::with_capacity(2 * k);
        let mut horizontal_edge = Vec::with_capacity(2 * k);
        for i in 0..k {
            for j in 0..k {
                let th = resolve_theta(cat.extrema[j], cat.extrema[i])?;
                interior.push(((i + 1, j + 1), th));
            }
        }
        for star in [Star::Zero, Star::Pi] {
            let end = cat.endpoint_value(star);
            for j in 0..k {
                vertical_edge.push(((star, j + 1), resolve_theta(cat.extrema[j], end)?));
            }
            for i in 0..k {
                horizontal_edge.push(((i + 1, star), resolve_theta(end, cat.extrema[i])?));
            }
        }
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(16.0));
        let t_o = dedup_sorted(interior.iter().map(|e| e.1).collect(), tol);
        let t_x = dedup_sorted(vertical_edge.iter().map(|e| e.1).collect(), tol);
        let t_y = dedup_sorted(horizontal_edge.iter().map(|e| e.1).collect(), tol);
        Ok(SpecialThetaCatalog {
            r: cat.r,
            interior,
            vertical_edge,
            horizontal_edge,
            t_o,
            t_x,
            t_y,
        })
    }

    /// `T = T_o ∪ T_x ∪ T_y`, sorted and deduplicated.
    pub fn union(&self) -> Vec<T> {
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(16.0));
        let all: Vec<T> = self
            .t_o
            .iter()
            .chain(&self.t_x)
            .chain(&self.t_y)
            .copied()
            .collect();
        dedup_sorted(all, tol)
    }

    /// `θ(q_i, q_j)`, 1-based indices.
    pub fn theta_interior(&self, i: usize, j: usize) -> T {
        let k = self.r - 2;
        self.interior[(i - 1) * k + (j - 1)].1
    }

    /// `θ(*, q_j)`.
    pub fn theta_vertical(&self, star: Star, j: usize) -> T {
        let k = self.r - 2;
        let base = if star == Star::Zero { 0 } else { k };
        self.vertical_edge[base + j - 1].1
    }

    /// `θ(q_i, *)`.
    pub fn theta_horizontal(&self, i: usize, star: Star) -> T {
        let k = self.r - 2;
        let base = if star == Star::Zero { 0 } else { k };
        self.horizontal_edge[base + i - 1].1
    }
}
