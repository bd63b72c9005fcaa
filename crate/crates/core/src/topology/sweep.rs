//! Sweeps over `θ`, one summary per sample, with a check that the topology
//! stays constant between consecutive critical values.

use rayon::prelude::*;
use serde::Serialize;

use super::{summarize, NodalSummary, SquarePattern};
use crate::chebyshev::{ChebyshevCatalog, SpecialThetaCatalog};
use crate::error::{invalid, Result};
use crate::scalar::{canonical_theta, Scalar};

/// Which values of `θ` to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaSamples<T> {
    /// The critical values of the `(1, R)` family inside `[lo, hi]` plus
    /// `per_interval` interior points in each gap between them.
    Auto { lo: T, hi: T, per_interval: usize },
    /// Exactly these values.
    Explicit(Vec<T>),
}

impl<T: Scalar> ThetaSamples<T> {
    /// Auto sweep over `[0, π]` with one midpoint per interval.
    pub fn full() -> Self {
        ThetaSamples::Auto {
            lo: T::zero(),
            hi: T::PI(),
            per_interval: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    Critical,
    Regular,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSample<T> {
    pub theta: T,
    pub kind: SampleKind,
    /// Gap between consecutive critical values the sample belongs to.
    pub interval: Option<usize>,
    pub domain_count: usize,
    pub n_interior_cz: usize,
    pub n_edge_cz: usize,
    pub boundary_hits: usize,
    pub q_patterns: Option<Vec<SquarePattern>>,
    /// Topology differs from another sample of the same gap.
    pub anomaly: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport<T> {
    pub m: usize,
    pub n: usize,
    pub samples: Vec<SweepSample<T>>,
}

impl<T: Scalar> SweepReport<T> {
    pub fn anomalies(&self) -> usize {
        self.samples.iter().filter(|s| s.anomaly).count()
    }

    pub fn max_count(&self) -> usize {
        self.samples.iter().map(|s| s.domain_count).max().unwrap_or(0)
    }

    /// Distinct domain counts, sorted.
    pub fn counts(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.samples.iter().map(|s| s.domain_count).collect();
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// `T ∪ {0, π/4, π/2, 3π/4}` for the `(1, R)` family, sorted.
pub fn critical_values<T: Scalar>(r: usize) -> Result<Vec<T>> {
    let cat = ChebyshevCatalog::<T>::new(r)?;
    let special = SpecialThetaCatalog::new(&cat)?;
    let mut v = special.union();
    let q = T::FRAC_PI_4();
    v.extend([T::zero(), q, q + q, q + q + q]);
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let tol = T::lit(1e-12).max(T::epsilon() * T::lit(16.0));
    v.dedup_by(|a, b| (*a - *b).abs() <= tol);
    Ok(v)
}

struct Job<T> {
    theta: T,
    kind: SampleKind,
    interval: Option<usize>,
}

fn plan_auto<T: Scalar>(r: usize, lo: T, hi: T, per_interval: usize) -> Result<Vec<Job<T>>> {
    if !(lo <= hi) || lo < T::zero() || hi > T::PI() {
        return Err(invalid("sweep range must satisfy 0 <= lo <= hi <= pi"));
    }
    let crit: Vec<T> = critical_values::<T>(r)?
        .into_iter()
        .filter(|&t| t >= lo && t <= hi)
        .collect();
    let mut cuts = vec![lo];
    cuts.extend(crit.iter().copied());
    cuts.push(hi);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= T::epsilon());
    let mut jobs = Vec::new();
    for (k, w) in cuts.windows(2).enumerate() {
        if crit.contains(&w[0]) {
            jobs.push(Job {
                theta: w[0],
                kind: SampleKind::Critical,
                interval: None,
            });
        }
        for s in 0..per_interval {
            let f = T::from_count(s + 1) / T::from_count(per_interval + 1);
            jobs.push(Job {
                theta: w[0] + (w[1] - w[0]) * f,
                kind: SampleKind::Regular,
                interval: Some(k),
            });
        }
    }
    if let Some(&last) = crit.last() {
        if cuts.len() >= 2 && last == cuts[cuts.len() - 1] && last < T::PI() {
            jobs.push(Job {
                theta: last,
                kind: SampleKind::Critical,
                interval: None,
            });
        }
    }
    Ok(jobs)
}

/// Evaluates `Φ^θ_{m,n}` at every requested `θ` (in parallel), merged in `θ`
/// order. Auto mode needs `(1, R)` or `(R, 1)`.
pub fn sweep<T: Scalar>(
    m: usize,
    n: usize,
    samples: &ThetaSamples<T>,
    resolution: Option<usize>,
) -> Result<SweepReport<T>> {
    let jobs = match samples {
        ThetaSamples::Auto {
            lo,
            hi,
            per_interval,
        } => {
            let r = match (m, n) {
                (1, r) | (r, 1) if r >= 2 => r,
                _ => {
                    return Err(invalid(format!(
                        "auto sweep needs a (1, R) mode, got ({m}, {n})"
                    )))
                }
            };
            plan_auto(r, *lo, *hi, *per_interval)?
        }
        ThetaSamples::Explicit(v) => {
            let mut t: Vec<T> = v.iter().map(|&x| canonical_theta(x)).collect();
            t.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
            t.dedup();
            t.into_iter()
                .map(|theta| Job {
                    theta,
                    kind: SampleKind::Explicit,
                    interval: None,
                })
                .collect()
        }
    };
    let summaries: Vec<Result<NodalSummary<T>>> = jobs
        .par_iter()
        .map(|j| summarize(m, n, j.theta, resolution))
        .collect();
    let mut out = Vec::with_capacity(jobs.len());
    for (job, s) in jobs.iter().zip(summaries) {
        let s = s?;
        out.push(SweepSample {
            theta: job.theta,
            kind: job.kind,
            interval: job.interval,
            domain_count: s.domain_count,
            n_interior_cz: s.interior_count(),
            n_edge_cz: s.edge_count(),
            boundary_hits: s.boundary_hits,
            q_patterns: s.q_patterns,
            anomaly: false,
        });
    }
    flag_anomalies(&mut out);
    out.sort_by(|a, b| a.theta.partial_cmp(&b.theta).expect("finite"));
    Ok(SweepReport { m, n, samples: out })
}

fn flag_anomalies<T: Scalar>(samples: &mut [SweepSample<T>]) {
    let gaps: Vec<usize> = {
        let mut g: Vec<usize> = samples.iter().filter_map(|s| s.interval).collect();
        g.sort_unstable();
        g.dedup();
        g
    };
    for gap in gaps {
        let members: Vec<usize> = (0..samples.len())
            .filter(|&k| samples[k].interval == Some(gap))
            .collect();
        let first = &samples[members[0]];
        let differs = members.iter().any(|&k| {
            let s = &samples[k];
            s.domain_count != first.domain_count
                || s.q_patterns != first.q_patterns
                || s.n_interior_cz != first.n_interior_cz
                || s.n_edge_cz != first.n_edge_cz
        });
        if differs {
            for k in members {
                samples[k].anomaly = true;
            }
        }
    }
}
