//! Local nodal patterns inside the white Q-squares of `Φ^θ_{1,R}` and the way
//! interior crossings open up when `θ` leaves a critical value.

use std::collections::BTreeMap;

use serde::Serialize;

use super::checkerboard::CheckerboardMask;
use crate::chebyshev::{ChebyshevCatalog, SpecialThetaCatalog};
use crate::critical::{
    edge_critical_zeroes, interior_from_catalog, theta_tolerance, vertex_classification,
    CriticalZero, Edge, Locus,
};
use crate::eigenfunction::ThetaFamily;
use crate::error::{invalid, Error, Result};
use crate::scalar::{canonical_theta, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QPattern {
    /// Two arcs, each joining a bottom corner to a top corner.
    InnerA,
    /// Two arcs, each joining a left corner to a right corner.
    InnerB,
    /// Two arcs crossing at `(q_i, q_j)`.
    InnerC,
    /// One arc reaches the boundary of the square `S`.
    BoundaryA,
    /// An order-3 edge zero.
    BoundaryB,
    /// Two arcs reach the boundary.
    BoundaryC,
    /// No arc reaches the boundary.
    BoundaryD,
}

/// Side of the flood-fill subgrid for inner squares.
const SUBGRID: usize = 64;

/// Everything needed to classify the squares of one `(R, θ)`.
#[derive(Debug, Clone)]
pub struct PatternContext<T> {
    pub family: ThetaFamily<T>,
    pub catalog: ChebyshevCatalog<T>,
    pub special: SpecialThetaCatalog<T>,
    pub mask: CheckerboardMask,
    pub boundary_zeroes: Vec<CriticalZero<T>>,
    pub interior_zeroes: Vec<CriticalZero<T>>,
}

impl<T: Scalar> PatternContext<T> {
    pub fn new(r: usize, theta: T) -> Result<Self> {
        if r < 2 {
            return Err(invalid(format!("R must be >= 2, got {r}")));
        }
        let theta = canonical_theta(theta);
        let mask = CheckerboardMask::new(r, theta)?;
        let catalog = ChebyshevCatalog::new(r)?;
        let special = SpecialThetaCatalog::new(&catalog)?;
        let mut boundary_zeroes = vertex_classification(r, theta);
        boundary_zeroes.extend(edge_critical_zeroes(r, theta)?);
        let interior_zeroes = interior_from_catalog(&catalog, &special, theta, theta_tolerance());
        Ok(PatternContext {
            family: ThetaFamily::new(1, r, theta)?,
            catalog,
            special,
            mask,
            boundary_zeroes,
            interior_zeroes,
        })
    }

    fn r(&self) -> usize {
        self.catalog.r
    }

    pub fn is_inner(&self, i: usize, j: usize) -> bool {
        let r = self.r();
        i >= 1 && j >= 1 && i + 2 <= r && j + 2 <= r
    }

    pub fn classify(&self, i: usize, j: usize) -> Result<QPattern> {
        let r = self.r();
        if i >= r || j >= r {
            return Err(invalid(format!("square ({i}, {j}) outside 0..{r}")));
        }
        if !self.mask.is_white(i, j) {
            return Err(invalid(format!("square ({i}, {j}) is grey")));
        }
        if self.is_inner(i, j) {
            self.classify_inner(i, j)
        } else {
            Ok(self.classify_boundary(i, j))
        }
    }

    fn classify_inner(&self, i: usize, j: usize) -> Result<QPattern> {
        let (qi, qj) = (self.catalog.q[i - 1], self.catalog.q[j - 1]);
        if self
            .interior_zeroes
            .iter()
            .any(|z| z.x == qi && z.y == qj)
        {
            return Ok(QPattern::InnerC);
        }
        let p = &self.catalog.p;
        let h = (p[i + 1] - p[i]) / T::from_count(SUBGRID);
        let half = T::lit(0.5);
        let mut sign = vec![0i8; SUBGRID * SUBGRID];
        for b in 0..SUBGRID {
            let y = p[j] + (T::from_count(b) + half) * h;
            for a in 0..SUBGRID {
                let x = p[i] + (T::from_count(a) + half) * h;
                let v = self.family.eval(x, y);
                sign[b * SUBGRID + a] = if v > T::zero() {
                    1
                } else if v < T::zero() {
                    -1
                } else {
                    0
                };
            }
        }
        // On y = p_j the sign of Φ is that of sin θ · sin(R x) = (−1)^i.
        let bottom: i8 = if i % 2 == 0 { 1 } else { -1 };
        let from_bottom: Vec<usize> = (0..SUBGRID).collect();
        if flood_reaches(&sign, bottom, &from_bottom, |k| k / SUBGRID == SUBGRID - 1) {
            return Ok(QPattern::InnerA);
        }
        let from_left: Vec<usize> = (0..SUBGRID).map(|b| b * SUBGRID).collect();
        if flood_reaches(&sign, -bottom, &from_left, |k| k % SUBGRID == SUBGRID - 1) {
            return Ok(QPattern::InnerB);
        }
        // Neck thinner than the subgrid: the sign at (q_i, q_j) tells which
        // pair of corners is joined.
        let v = self.family.eval(qi, qj);
        if v == T::zero() {
            return Err(Error::Internal(format!(
                "square ({i}, {j}) unresolved at theta = {}",
                self.family.theta
            )));
        }
        Ok(if (v > T::zero()) == (bottom > 0) {
            QPattern::InnerA
        } else {
            QPattern::InnerB
        })
    }

    fn classify_boundary(&self, i: usize, j: usize) -> QPattern {
        let r = self.r();
        let p = &self.catalog.p;
        let (x0, x1, y0, y1) = (p[i], p[i + 1], p[j], p[j + 1]);
        let in_x = |x: T| x > x0 && x < x1;
        let in_y = |y: T| y > y0 && y < y1;
        let mut hits = 0;
        for z in &self.boundary_zeroes {
            let mine = match z.locus {
                Locus::Edge(Edge::Left) => i == 0 && in_y(z.y),
                Locus::Edge(Edge::Right) => i == r - 1 && in_y(z.y),
                Locus::Edge(Edge::Bottom) => j == 0 && in_x(z.x),
                Locus::Edge(Edge::Top) => j == r - 1 && in_x(z.x),
                Locus::Vertex => {
                    z.degenerate
                        && (z.x == x0 || z.x == x1)
                        && (z.y == y0 || z.y == y1)
                }
                Locus::Interior => false,
            };
            if !mine {
                continue;
            }
            if z.locus != Locus::Vertex && z.order == 3 {
                return QPattern::BoundaryB;
            }
            hits += 1;
        }
        match hits {
            0 => QPattern::BoundaryD,
            1 => QPattern::BoundaryA,
            _ => QPattern::BoundaryC,
        }
    }

    /// Pattern of every white square.
    pub fn pattern_map(&self) -> Result<BTreeMap<(usize, usize), QPattern>> {
        self.mask
            .white_squares
            .iter()
            .map(|&(i, j)| Ok(((i, j), self.classify(i, j)?)))
            .collect()
    }
}

fn flood_reaches(sign: &[i8], want: i8, seeds: &[usize], goal: impl Fn(usize) -> bool) -> bool {
    let mut seen = vec![false; sign.len()];
    let mut stack: Vec<usize> = seeds.iter().copied().filter(|&k| sign[k] == want).collect();
    for &k in &stack {
        seen[k] = true;
    }
    while let Some(k) = stack.pop() {
        if goal(k) {
            return true;
        }
        let (a, b) = (k % SUBGRID, k / SUBGRID);
        let mut nb = Vec::with_capacity(4);
        if a > 0 {
            nb.push(k - 1);
        }
        if a + 1 < SUBGRID {
            nb.push(k + 1);
        }
        if b > 0 {
            nb.push(k - SUBGRID);
        }
        if b + 1 < SUBGRID {
            nb.push(k + SUBGRID);
        }
        for q in nb {
            if !seen[q] && sign[q] == want {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    false
}

/// Pattern of the white square `Q_{i,j}` of `Φ^θ_{1,R}`.
pub fn classify_q_pattern<T: Scalar>(r: usize, theta: T, i: usize, j: usize) -> Result<QPattern> {
    PatternContext::new(r, theta)?.classify(i, j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Opening {
    /// The vertical probe `x = q_i` meets the nodal set twice, the horizontal
    /// probe `y = q_j` not at all.
    Horizontal,
    /// The reverse.
    Vertical,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesingularizationReport<T> {
    pub r: usize,
    pub theta: T,
    /// `π/4` for even `R`, `3π/4` for odd `R`.
    pub critical_theta: T,
    pub squares: Vec<((usize, usize), Opening)>,
}

impl<T> DesingularizationReport<T> {
    /// Common direction if every square agrees.
    pub fn unanimous(&self) -> Option<Opening> {
        let first = self.squares.first()?.1;
        (first != Opening::Undetermined && self.squares.iter().all(|s| s.1 == first))
            .then_some(first)
    }
}

fn sign_changes<T: Scalar>(f: impl Fn(T) -> T, a: T, b: T, samples: usize) -> usize {
    let mut prev: Option<bool> = None;
    let mut changes = 0;
    for k in 0..samples {
        let t = a + (b - a) * (T::from_count(k) + T::lit(0.5)) / T::from_count(samples);
        let v = f(t);
        if v == T::zero() {
            continue;
        }
        let pos = v > T::zero();
        if prev.is_some_and(|p| p != pos) {
            changes += 1;
        }
        prev = Some(pos);
    }
    changes
}

/// For `θ` near the value where `Φ^θ_{1,R}` has its interior crossings
/// (`π/4` for even `R`, `3π/4` for odd `R`), reports how each crossing has
/// opened up, probing the two lines through `(q_i, q_j)`.
pub fn desingularization_check<T: Scalar>(r: usize, theta: T) -> Result<DesingularizationReport<T>> {
    if r < 3 {
        return Err(invalid(format!("R must be >= 3, got {r}")));
    }
    let theta = canonical_theta(theta);
    let critical_theta = if r % 2 == 0 {
        T::FRAC_PI_4()
    } else {
        T::lit(3.0) * T::FRAC_PI_4()
    };
    let gap = (theta - critical_theta).abs();
    if gap < theta_tolerance::<T>() || gap > T::lit(0.1) {
        return Err(invalid(
            "theta must be near, but not at, the crossing value",
        ));
    }
    let cat = ChebyshevCatalog::<T>::new(r)?;
    let special = SpecialThetaCatalog::new(&cat)?;
    let crossings = interior_from_catalog(&cat, &special, critical_theta, theta_tolerance());
    let fam = ThetaFamily::new(1, r, theta)?;
    let p = &cat.p;
    let mut squares: Vec<((usize, usize), Opening)> = Vec::new();
    for z in &crossings {
        let i = cat.q.iter().position(|&q| q == z.x).expect("crossing on q grid") + 1;
        let j = cat.q.iter().position(|&q| q == z.y).expect("crossing on q grid") + 1;
        if squares.iter().any(|s| s.0 == (i, j)) {
            continue;
        }
        let vertical = sign_changes(|y| fam.eval(z.x, y), p[j], p[j + 1], 4096);
        let horizontal = sign_changes(|x| fam.eval(x, z.y), p[i], p[i + 1], 4096);
        let dir = match (vertical, horizontal) {
            (2, 0) => Opening::Horizontal,
            (0, 2) => Opening::Vertical,
            _ => Opening::Undetermined,
        };
        squares.push(((i, j), dir));
    }
    squares.sort_by_key(|s| s.0);
    Ok(DesingularizationReport {
        r,
        theta,
        critical_theta,
        squares,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn grey_square_rejected() {
        // θ = π/4: cos θ > 0, so (0, 0) is grey
        assert!(classify_q_pattern(8, PI / 4.0, 0, 0).is_err());
        assert!(classify_q_pattern(8, PI / 4.0, 9, 0).is_err());
    }

    #[test]
    fn corner_square_at_quarter() {
        assert_eq!(
            classify_q_pattern(8, PI / 4.0, 0, 7).unwrap(),
            QPattern::BoundaryA
        );
    }

    #[test]
    fn crossing_square_is_c() {
        let cat = ChebyshevCatalog::<f64>::new(8).unwrap();
        let sp = SpecialThetaCatalog::new(&cat).unwrap();
        let th = sp.theta_interior(2, 3);
        let ctx = PatternContext::new(8, th).unwrap();
        assert!(ctx.mask.is_white(2, 3));
        assert_eq!(ctx.classify(2, 3).unwrap(), QPattern::InnerC);
        let map = ctx.pattern_map().unwrap();
        assert_eq!(map.len(), 32);
    }
}
