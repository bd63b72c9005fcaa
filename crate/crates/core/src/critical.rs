//! Critical zeroes (common zeroes of `Φ` and `∇Φ`) on the closed square.
//!
//! For the `(1, R)` family everything is analytic: vertices from the mixed
//! derivative, edge points from a one-variable equation in `U_{R−1}`, interior
//! points from the extremum grid `(q_i, q_j)`. A grid-seeded search covers
//! other modes as a best-effort cross-check.

use serde::Serialize;

use crate::chebyshev::{resolve_theta, ChebyshevCatalog, SpecialThetaCatalog, Star};
use crate::eigenfunction::ThetaFamily;
use crate::error::{invalid, Result};
use crate::scalar::{angle_distance_mod_pi, bisect, canonical_theta, Scalar};

/// Default angular tolerance for "θ equals a special value".
pub fn theta_tolerance<T: Scalar>() -> T {
    T::lit(1e-9).max(T::epsilon() * T::lit(64.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Edge {
    /// `x = 0`.
    Left,
    /// `x = π`.
    Right,
    /// `y = 0`.
    Bottom,
    /// `y = π`.
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "edge")]
pub enum Locus {
    Vertex,
    Edge(Edge),
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalZero<T> {
    pub x: T,
    pub y: T,
    pub locus: Locus,
    /// Number of nodal arcs through the point, boundary arcs excluded at
    /// vertices and counted as in the equi-angular picture otherwise.
    pub order: u32,
    pub degenerate: bool,
    pub theta: T,
}

impl<T: Scalar> CriticalZero<T> {
    fn new(x: T, y: T, locus: Locus, order: u32, theta: T) -> Self {
        CriticalZero {
            x,
            y,
            locus,
            order,
            degenerate: order > 2,
            theta,
        }
    }

    /// Contribution to the boundary-hit count of the nodal set.
    pub fn boundary_hits(&self) -> usize {
        match self.locus {
            Locus::Vertex => (self.order as usize / 2).saturating_sub(1),
            Locus::Edge(_) => self.order as usize - 1,
            Locus::Interior => 0,
        }
    }
}

fn vertex_positions<T: Scalar>() -> [(T, T, i32, i32); 4] {
    let (z, pi) = (T::zero(), T::PI());
    // (x, y, x at π?, y at π?)
    [(z, z, 0, 0), (pi, z, 1, 0), (pi, pi, 1, 1), (z, pi, 0, 1)]
}

/// Vertex critical zeroes of `Φ^θ_{m,n}`. Every vertex is a critical zero; it
/// is degenerate of order 4 exactly when the mixed derivative vanishes there.
pub fn vertex_classification_mode<T: Scalar>(
    m: usize,
    n: usize,
    theta: T,
) -> Vec<CriticalZero<T>> {
    let theta = canonical_theta(theta);
    let tol = theta_tolerance::<T>();
    let sign = |k: usize, at_pi: i32| -> T {
        if at_pi == 1 && k % 2 == 1 {
            -T::one()
        } else {
            T::one()
        }
    };
    vertex_positions::<T>()
        .into_iter()
        .map(|(x, y, xp, yp)| {
            // Φ_xy ∝ cos θ · cos(m x) cos(n y) + sin θ · cos(n x) cos(m y)
            let a = sign(m, xp) * sign(n, yp);
            let b = sign(n, xp) * sign(m, yp);
            let root = resolve_theta(a, b).expect("nonzero signs");
            let order = if angle_distance_mod_pi(theta, root) < tol { 4 } else { 2 };
            CriticalZero::new(x, y, Locus::Vertex, order, theta)
        })
        .collect()
}

/// Vertex critical zeroes of `Φ^θ_{1,R}`.
pub fn vertex_classification<T: Scalar>(r: usize, theta: T) -> Vec<CriticalZero<T>> {
    vertex_classification_mode(1, r.max(1), theta)
}

/// Critical zeroes on the four open edges for `Φ^θ_{1,R}`.
///
/// On `x = 0` the condition is `cos θ U_{R−1}(cos y) + R sin θ = 0`, on
/// `y = 0` it is `R cos θ + sin θ U_{R−1}(cos x) = 0`; the other two edges
/// follow by the central symmetry.
pub fn edge_critical_zeroes<T: Scalar>(r: usize, theta: T) -> Result<Vec<CriticalZero<T>>> {
    if r < 2 {
        return Err(invalid(format!("R must be >= 2, got {r}")));
    }
    let cat = ChebyshevCatalog::<T>::new(r)?;
    let theta = canonical_theta(theta);
    let (c, s) = (theta.cos(), theta.sin());
    let rr = T::from_count(r);
    let special = SpecialThetaCatalog::new(&cat)?;
    let pi = T::PI();

    let mut out = Vec::new();
    // Left edge: f(y) = c U(cos y) + R s; degenerate values θ(0, q_j).
    let left = solve_edge(&cat, |t| c * cat.u(t.cos()) + rr * s, |j| {
        special.theta_vertical(Star::Zero, j)
    }, theta);
    for (y, order) in left {
        out.push(CriticalZero::new(T::zero(), y, Locus::Edge(Edge::Left), order, theta));
        out.push(CriticalZero::new(pi, pi - y, Locus::Edge(Edge::Right), order, theta));
    }
    let bottom = solve_edge(&cat, |t| rr * c + s * cat.u(t.cos()), |i| {
        special.theta_horizontal(i, Star::Zero)
    }, theta);
    for (x, order) in bottom {
        out.push(CriticalZero::new(x, T::zero(), Locus::Edge(Edge::Bottom), order, theta));
        out.push(CriticalZero::new(pi - x, pi, Locus::Edge(Edge::Top), order, theta));
    }
    Ok(out)
}

/// Roots of `f` on `(0, π)` split at the extremum angles, where `f` is
/// monotone. A root at some `q_j` (θ within tolerance of the matching special
/// value) is a double root of `f` and gives an order-3 zero.
fn solve_edge<T: Scalar>(
    cat: &ChebyshevCatalog<T>,
    f: impl Fn(T) -> T,
    special: impl Fn(usize) -> T,
    theta: T,
) -> Vec<(T, u32)> {
    let tol = theta_tolerance::<T>();
    let mut breaks = vec![T::zero()];
    breaks.extend(cat.q.iter().copied());
    breaks.push(T::PI());
    let degenerate: Vec<bool> = (1..=cat.q.len())
        .map(|j| angle_distance_mod_pi(theta, special(j)) < tol)
        .collect();
    // Roots closer than this to a degenerate q_j are the two halves of the
    // split double root and are merged into it.
    let merge = T::lit(1e-3) / T::from_count(cat.r);
    let near_degenerate = |t: T| {
        cat.q
            .iter()
            .zip(&degenerate)
            .any(|(&q, &d)| d && (t - q).abs() < merge)
    };
    // Values this small at a break point are rounding noise around a root
    // sitting exactly on it (a vertex or a degenerate q_j).
    let noise = T::epsilon() * T::lit(64.0) * T::from_count(cat.r);
    let mut out = Vec::new();
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (f(a), f(b));
        if fa.abs() <= noise || fb.abs() <= noise || (fa < T::zero()) == (fb < T::zero()) {
            continue;
        }
        let t = bisect(a, b, &f);
        if !near_degenerate(t) {
            out.push((t, 2));
        }
    }
    for (j, &d) in degenerate.iter().enumerate() {
        if d {
            out.push((cat.q[j], 3));
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
    out
}

/// Interior critical zeroes of `Φ^θ_{1,R}`: the points `(q_i, q_j)` with
/// `θ = θ(q_i, q_j)` up to `tol`. All are nondegenerate crossings.
pub fn interior_critical_zeroes<T: Scalar>(
    r: usize,
    theta: T,
    tol: T,
) -> Result<Vec<CriticalZero<T>>> {
    if r < 3 {
        return Ok(Vec::new());
    }
    let cat = ChebyshevCatalog::<T>::new(r)?;
    let special = SpecialThetaCatalog::new(&cat)?;
    Ok(interior_from_catalog(&cat, &special, theta, tol))
}

pub(crate) fn interior_from_catalog<T: Scalar>(
    cat: &ChebyshevCatalog<T>,
    special: &SpecialThetaCatalog<T>,
    theta: T,
    tol: T,
) -> Vec<CriticalZero<T>> {
    let theta = canonical_theta(theta);
    let k = cat.q.len();
    let mut out = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            if angle_distance_mod_pi(theta, special.theta_interior(i, j)) < tol {
                out.push(CriticalZero::new(
                    cat.q[i - 1],
                    cat.q[j - 1],
                    Locus::Interior,
                    2,
                    theta,
                ));
            }
        }
    }
    out
}

/// The three exceptional low modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowCase {
    OneThree,
    TwoThree,
    OneFour,
}

impl LowCase {
    pub fn from_mode(m: usize, n: usize) -> Result<Self> {
        match (m.min(n), m.max(n)) {
            (1, 3) => Ok(LowCase::OneThree),
            (2, 3) => Ok(LowCase::TwoThree),
            (1, 4) => Ok(LowCase::OneFour),
            _ => Err(invalid(format!("({m}, {n}) is not one of (1,3), (2,3), (1,4)"))),
        }
    }
}

/// Interior critical zeroes for `(1,3)`, `(2,3)`, `(1,4)` in closed form.
///
/// For `(2,3)` the product cases `θ ∈ {0, π/2}` have crossings where the
/// straight nodal lines meet; all other `θ` give none.
pub fn case3_critical_zeroes<T: Scalar>(case: LowCase, theta: T) -> Vec<CriticalZero<T>> {
    let theta = canonical_theta(theta);
    let tol = theta_tolerance::<T>();
    let pi = T::PI();
    let near = |a: T| angle_distance_mod_pi(theta, a) < tol;
    let quarter = T::FRAC_PI_4();
    let three_quarters = T::lit(3.0) * quarter;
    let pt = |x: T, y: T| CriticalZero::new(x, y, Locus::Interior, 2, theta);
    match case {
        LowCase::OneThree => {
            if near(three_quarters) {
                vec![pt(T::FRAC_PI_2(), T::FRAC_PI_2())]
            } else {
                Vec::new()
            }
        }
        LowCase::OneFour => {
            let w = (T::one() / T::lit(6.0)).sqrt();
            let (a, b) = (w.acos(), (-w).acos());
            if near(quarter) {
                // u = −v = ±1/√6
                vec![pt(a, b), pt(b, a)]
            } else if near(three_quarters) {
                vec![pt(a, a), pt(b, b)]
            } else {
                Vec::new()
            }
        }
        LowCase::TwoThree => {
            let (h, t1, t2) = (pi / T::lit(2.0), pi / T::lit(3.0), T::lit(2.0) * pi / T::lit(3.0));
            if near(T::zero()) {
                // sin 2x sin 3y
                vec![pt(h, t1), pt(h, t2)]
            } else if near(T::FRAC_PI_2()) {
                vec![pt(t1, h), pt(t2, h)]
            } else {
                Vec::new()
            }
        }
    }
}

/// Σ over boundary critical zeroes of the number of extra nodal arcs they
/// carry into the boundary.
pub fn boundary_hits<T: Scalar>(zeros: &[CriticalZero<T>]) -> usize {
    zeros.iter().map(CriticalZero::boundary_hits).sum()
}

/// All critical zeroes of `Φ^θ_{m,n}`: analytic for `(1,R)`, `(R,1)` and the
/// three low cases, the numerical search otherwise.
pub fn critical_zeroes<T: Scalar>(fam: &ThetaFamily<T>) -> Result<Vec<CriticalZero<T>>> {
    let (m, n, theta) = (fam.m, fam.n, fam.theta);
    if m == 1 && n >= 2 {
        let mut out = vertex_classification(n, theta);
        out.extend(edge_critical_zeroes(n, theta)?);
        out.extend(interior_critical_zeroes(n, theta, theta_tolerance())?);
        return Ok(out);
    }
    if n == 1 && m >= 2 {
        // Φ^θ_{R,1}(x, y) = Φ^θ_{1,R}(y, x)
        let swapped = ThetaFamily::new(1, m, theta)?;
        return Ok(critical_zeroes(&swapped)?
            .into_iter()
            .map(|z| CriticalZero {
                x: z.y,
                y: z.x,
                locus: match z.locus {
                    Locus::Edge(e) => Locus::Edge(match e {
                        Edge::Left => Edge::Bottom,
                        Edge::Bottom => Edge::Left,
                        Edge::Right => Edge::Top,
                        Edge::Top => Edge::Right,
                    }),
                    l => l,
                },
                ..z
            })
            .collect());
    }
    let mut out = vertex_classification_mode(m, n, theta);
    out.extend(search_edge_zeroes(fam));
    match LowCase::from_mode(m, n) {
        Ok(case) if m < n => out.extend(case3_critical_zeroes(case, theta)),
        Ok(case) => out.extend(
            case3_critical_zeroes(case, fam.transposed().theta)
                .into_iter()
                .map(|z| CriticalZero { theta, ..z }),
        ),
        Err(_) => out.extend(search_interior_zeroes(fam)),
    }
    Ok(out)
}

/// Numerical search for edge critical zeroes of a general mode: sign changes
/// of the normal derivative, plus its tangential local minima that reach zero
/// (double roots, order 3).
pub fn search_edge_zeroes<T: Scalar>(fam: &ThetaFamily<T>) -> Vec<CriticalZero<T>> {
    let pi = T::PI();
    let samples = 128 * fam.m.max(fam.n);
    let h = pi / T::from_count(samples);
    let scale = T::from_count(fam.m * fam.n).max(T::one());
    let zero_tol = T::lit(1e-9) * scale;
    let mut out = Vec::new();
    for edge in [Edge::Left, Edge::Right, Edge::Bottom, Edge::Top] {
        let normal = |t: T| -> T {
            match edge {
                Edge::Left => fam.grad_direct(T::zero(), t).0,
                Edge::Right => fam.grad_direct(pi, t).0,
                Edge::Bottom => fam.grad_direct(t, T::zero()).1,
                Edge::Top => fam.grad_direct(t, pi).1,
            }
        };
        let place = |t: T| match edge {
            Edge::Left => (T::zero(), t),
            Edge::Right => (pi, t),
            Edge::Bottom => (t, T::zero()),
            Edge::Top => (t, pi),
        };
        let ts: Vec<T> = (0..=samples).map(|k| T::from_count(k) * h).collect();
        let vals: Vec<T> = ts.iter().map(|&t| normal(t)).collect();
        let mut roots: Vec<(T, u32)> = Vec::new();
        let small = |v: T| v.abs() <= zero_tol;
        for k in 0..samples {
            let (a, b) = (vals[k], vals[k + 1]);
            if !small(a) && !small(b) && (a < T::zero()) != (b < T::zero()) {
                roots.push((bisect(ts[k], ts[k + 1], &normal), 2));
            }
        }
        // simple roots landing on a sample
        for k in 1..samples {
            let (a, c) = (vals[k - 1], vals[k + 1]);
            if small(vals[k]) && !small(a) && !small(c) && (a < T::zero()) != (c < T::zero()) {
                roots.push((bisect(ts[k - 1], ts[k + 1], &normal), 2));
            }
        }
        // double roots: |f| has a local minimum at a sample that touches zero
        let slope = |t: T| {
            let e = h * T::lit(1e-4);
            (normal(t + e) - normal(t - e)) / (e + e)
        };
        for k in 1..samples {
            let (a, b, c) = (vals[k - 1].abs(), vals[k].abs(), vals[k + 1].abs());
            let no_change = (vals[k - 1] < T::zero()) == (vals[k + 1] < T::zero());
            if b <= a && b <= c && no_change {
                let (s0, s1) = (slope(ts[k - 1]), slope(ts[k + 1]));
                if (s0 < T::zero()) == (s1 < T::zero()) {
                    continue;
                }
                let t = bisect(ts[k - 1], ts[k + 1], slope);
                if normal(t).abs() <= zero_tol {
                    roots.retain(|&(r, _)| (r - t).abs() > h);
                    roots.push((t, 3));
                }
            }
        }
        for (t, order) in roots {
            let (x, y) = place(t);
            out.push(CriticalZero::new(x, y, Locus::Edge(edge), order, fam.theta));
        }
    }
    out
}

/// Grid-seeded Newton iteration on `∇Φ = 0`, keeping the critical points
/// where `Φ` also vanishes. Order is read off the sign changes of `Φ` on a
/// small circle. Best-effort only.
pub fn search_interior_zeroes<T: Scalar>(fam: &ThetaFamily<T>) -> Vec<CriticalZero<T>> {
    let pi = T::PI();
    let g = 8 * fam.m.max(fam.n);
    let h = pi / T::from_count(g);
    let scale = T::from_count(fam.m.max(fam.n));
    let mut found: Vec<CriticalZero<T>> = Vec::new();
    for i in 0..g {
        for j in 0..g {
            let mut x = (T::from_count(i) + T::lit(0.5)) * h;
            let mut y = (T::from_count(j) + T::lit(0.5)) * h;
            let mut ok = false;
            for _ in 0..60 {
                let (gx, gy) = fam.grad_direct(x, y);
                let hs = fam.hessian_direct(x, y);
                let det = hs[0][0] * hs[1][1] - hs[0][1] * hs[1][0];
                if det.abs() < T::lit(1e-14) {
                    break;
                }
                let dx = (hs[1][1] * gx - hs[0][1] * gy) / det;
                let dy = (hs[0][0] * gy - hs[1][0] * gx) / det;
                x = x - dx;
                y = y - dy;
                if dx.abs() + dy.abs() < T::lit(1e-13) {
                    ok = true;
                    break;
                }
            }
            let margin = h / T::lit(8.0);
            if !ok || x <= margin || y <= margin || x >= pi - margin || y >= pi - margin {
                continue;
            }
            if fam.eval(x, y).abs() > T::lit(1e-10) * scale {
                continue;
            }
            if found
                .iter()
                .any(|z| (z.x - x).abs() + (z.y - y).abs() < T::lit(1e-7))
            {
                continue;
            }
            let order = circle_order(fam, x, y, h / T::lit(64.0));
            found.push(CriticalZero::new(x, y, Locus::Interior, order, fam.theta));
        }
    }
    found.sort_by(|a, b| {
        (a.x, a.y)
            .partial_cmp(&(b.x, b.y))
            .expect("finite positions")
    });
    found
}

fn circle_order<T: Scalar>(fam: &ThetaFamily<T>, x: T, y: T, rho: T) -> u32 {
    let k = 720;
    let mut changes = 0u32;
    let at = |a: usize| {
        let t = T::lit(2.0) * T::PI() * T::from_count(a) / T::from_count(k);
        fam.eval(x + rho * t.cos(), y + rho * t.sin())
    };
    let mut prev = at(0);
    for a in 1..=k {
        let cur = at(a % k);
        if (cur < T::zero()) != (prev < T::zero()) {
            changes += 1;
        }
        prev = cur;
    }
    (changes / 2).max(2)
}
