//! Dirichlet spectrum of the square `[0, π]²` and the Courant-sharp audit.
//!
//! Eigenvalues are the integers `m² + n²` with `m, n ≥ 1`. Each unordered pair
//! `{m, n}` is stored once as a [`Mode`] with `m ≤ n`; the multiplicity of an
//! eigenvalue counts ordered pairs.

use serde::Serialize;

use crate::bessel::faber_krahn_ratio;
use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// Eigenvalues at or below this bound survive the Pleijel / Faber–Krahn combination.
pub const PLEIJEL_CUTOFF: u64 = 68;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Mode {
    pub m: u32,
    pub n: u32,
}

impl Mode {
    /// Builds the representative `{min, max}` of the unordered pair.
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(invalid(format!("mode ({m}, {n}) must have m, n >= 1")));
        }
        Ok(Mode {
            m: m.min(n),
            n: m.max(n),
        })
    }

    pub fn eigenvalue(&self) -> u64 {
        let (m, n) = (self.m as u64, self.n as u64);
        m * m + n * n
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    /// 1-based rank.
    pub k: usize,
    pub eigenvalue: u64,
    /// Unordered representatives sorted by `m`.
    pub modes: Vec<Mode>,
}

impl SpectrumEntry {
    /// Number of ordered pairs `(m, n)` with `m² + n²` equal to this eigenvalue.
    pub fn multiplicity(&self) -> usize {
        self.modes.iter().map(|md| if md.m == md.n { 1 } else { 2 }).sum()
    }
}

fn isqrt(v: u64) -> u64 {
    let mut r = (v as f64).sqrt() as u64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// Unordered representatives `{m ≤ n}` with `m² + n² = value`.
pub fn modes_of(value: u64) -> Vec<Mode> {
    let mut out = Vec::new();
    let mut m = 1u64;
    while 2 * m * m <= value {
        let rest = value - m * m;
        let n = isqrt(rest);
        if n * n == rest && n >= m {
            out.push(Mode {
                m: m as u32,
                n: n as u32,
            });
        }
        m += 1;
    }
    out
}

/// Number of ordered pairs `(m, n)`, `m, n ≥ 1`, with `m² + n² = value`.
pub fn multiplicity(value: u64) -> usize {
    modes_of(value)
        .iter()
        .map(|md| if md.m == md.n { 1 } else { 2 })
        .sum()
}

/// All eigenvalues `λ_k ≤ lambda_max` with their ranks, in nondecreasing order.
///
/// Inside a cluster of equal eigenvalues every rank carries the same mode list.
pub fn enumerate_spectrum<T: Scalar>(lambda_max: T) -> Result<Vec<SpectrumEntry>> {
    if !(lambda_max >= T::lit(2.0)) {
        return Err(invalid(format!(
            "lambda_max must be >= 2, got {lambda_max}"
        )));
    }
    let cap = lambda_max.floor().as_f64() as u64;
    let mut out = Vec::new();
    let mut k = 1usize;
    for value in 2..=cap {
        let modes = modes_of(value);
        if modes.is_empty() {
            continue;
        }
        let mult = multiplicity(value);
        for _ in 0..mult {
            out.push(SpectrumEntry {
                k,
                eigenvalue: value,
                modes: modes.clone(),
            });
            k += 1;
        }
    }
    Ok(out)
}

/// `N(λ) = #{k : λ_k < λ}`, counted with multiplicity.
pub fn counting_function<T: Scalar>(lambda: T) -> usize {
    if !(lambda > T::zero()) {
        return 0;
    }
    let bound = lambda.as_f64();
    let mut count = 0usize;
    let mut m = 1u64;
    while ((m * m + 1) as f64) < bound {
        let mut n = 1u64;
        while ((m * m + n * n) as f64) < bound {
            count += 1;
            n += 1;
        }
        m += 1;
    }
    count
}

/// Rank of the first eigenvalue equal to `value` (1-based), i.e. `N(value) + 1`.
pub fn first_index_of(value: u64) -> usize {
    counting_function(value as f64) + 1
}

/// Right-hand side of the lattice-point estimate `N(λ) > (π/4)λ − 2√λ − 1`.
pub fn pleijel_lower_bound<T: Scalar>(lambda: T) -> T {
    T::FRAC_PI_4() * lambda - T::lit(2.0) * lambda.sqrt() - T::one()
}

/// Faber–Krahn necessary condition for Courant sharpness: `k / λ ≤ π / j_{0,1}²`.
pub fn faber_krahn_pass<T: Scalar>(k: usize, lambda: T) -> bool {
    T::from_count(k) / lambda <= faber_krahn_ratio::<T>()
}

/// Largest `λ` for which `(π/4)λ − 2√λ < λ·π/j_{0,1}²` can hold, the bound
/// obtained by combining the two necessary conditions.
pub fn pleijel_cutoff<T: Scalar>() -> T {
    let gap = T::FRAC_PI_4() - faber_krahn_ratio::<T>();
    let root = T::lit(2.0) / gap;
    root * root
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CourantAudit {
    pub k: usize,
    pub eigenvalue: u64,
    pub is_first_of_cluster: bool,
    pub pleijel_bound: f64,
    pub faber_krahn_pass: bool,
    pub candidate: bool,
}

/// Audits every entry with `λ_k ≤ lambda_max` against the Courant-sharp filters,
/// keeping only eigenvalues up to `bound` as candidates.
pub fn courant_audit(lambda_max: f64, bound: u64) -> Result<Vec<CourantAudit>> {
    let entries = enumerate_spectrum(lambda_max)?;
    let mut prev: Option<u64> = None;
    let mut out = Vec::with_capacity(entries.len());
    for e in &entries {
        let first = prev.map_or(true, |p| p < e.eigenvalue);
        let fk = faber_krahn_pass(e.k, e.eigenvalue as f64);
        out.push(CourantAudit {
            k: e.k,
            eigenvalue: e.eigenvalue,
            is_first_of_cluster: first,
            pleijel_bound: pleijel_lower_bound(e.eigenvalue as f64),
            faber_krahn_pass: fk,
            candidate: first && fk && e.eigenvalue <= bound,
        });
        prev = Some(e.eigenvalue);
    }
    Ok(out)
}

/// Indices that survive the cluster, Faber–Krahn and `λ ≤ bound` filters.
pub fn courant_sharp_candidates_up_to(bound: u64) -> Vec<usize> {
    courant_audit(bound.max(2) as f64, bound)
        .expect("bound >= 2")
        .into_iter()
        .filter(|a| a.candidate)
        .map(|a| a.k)
        .collect()
}

/// Courant-sharp candidates of the square: `{1, 2, 4, 5, 7, 9}`.
pub fn courant_sharp_candidates() -> Vec<usize> {
    courant_sharp_candidates_up_to(PLEIJEL_CUTOFF)
}
