//! Marching squares on a sampled scalar field and the connected components of
//! the resulting polyline set.

use super::union_find::UnionFind;
use crate::scalar::Scalar;

/// One marching-squares segment. `na`/`nb` identify the grid edges the end
/// points lie on: `2·(j·N + i)` for the edge from sample `(i, j)` to
/// `(i+1, j)`, `2·(j·N + i) + 1` for the edge to `(i, j+1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<T> {
    pub a: (T, T),
    pub b: (T, T),
    pub na: usize,
    pub nb: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContourComponent {
    pub segments: Vec<usize>,
    /// Every node has degree two, so the component is a closed curve that
    /// avoids the hull of the sample grid.
    pub closed: bool,
}

/// Extracts the zero level set of `values` (an `N × N` row-major field sampled
/// at `coord(i), coord(j)`). Values `≥ 0` count as positive; the saddle
/// ambiguity is resolved with `center(i, j)`, the field at the cell centre.
pub fn march<T: Scalar>(
    res: usize,
    values: &[T],
    coord: impl Fn(usize) -> T,
    center: impl Fn(usize, usize) -> T,
) -> Vec<Segment<T>> {
    let mut out = Vec::new();
    if res < 2 {
        return out;
    }
    let idx = |i: usize, j: usize| j * res + i;
    for j in 0..res - 1 {
        for i in 0..res - 1 {
            let v = [
                values[idx(i, j)],
                values[idx(i + 1, j)],
                values[idx(i + 1, j + 1)],
                values[idx(i, j + 1)],
            ];
            let pos = v.map(|x| x >= T::zero());
            if pos.iter().all(|&p| p == pos[0]) {
                continue;
            }
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            // edge k joins corners k and k+1 (mod 4)
            let node = |e: usize| match e {
                0 => 2 * idx(i, j),
                1 => 2 * idx(i + 1, j) + 1,
                2 => 2 * idx(i, j + 1),
                _ => 2 * idx(i, j) + 1,
            };
            let point = |e: usize| {
                let (a, b) = (e, (e + 1) % 4);
                let t = v[a] / (v[a] - v[b]);
                let (xa, ya) = (coord(corners[a].0), coord(corners[a].1));
                let (xb, yb) = (coord(corners[b].0), coord(corners[b].1));
                (xa + t * (xb - xa), ya + t * (yb - ya))
            };
            let crossing: Vec<usize> = (0..4).filter(|&e| pos[e] != pos[(e + 1) % 4]).collect();
            let mut push = |e0: usize, e1: usize| {
                out.push(Segment {
                    a: point(e0),
                    b: point(e1),
                    na: node(e0),
                    nb: node(e1),
                })
            };
            if crossing.len() == 2 {
                push(crossing[0], crossing[1]);
            } else {
                let c = center(i, j) >= T::zero();
                if c == pos[0] {
                    // corners 0 and 2 joined through the centre
                    push(0, 1);
                    push(2, 3);
                } else {
                    push(3, 0);
                    push(1, 2);
                }
            }
        }
    }
    out
}

/// Groups segments into connected polylines.
pub fn components<T: Scalar>(res: usize, segments: &[Segment<T>]) -> Vec<ContourComponent> {
    let nodes = 2 * res * res;
    let mut uf = UnionFind::new(nodes);
    let mut degree = vec![0u8; nodes];
    for s in segments {
        uf.union(s.na, s.nb);
        degree[s.na] = degree[s.na].saturating_add(1);
        degree[s.nb] = degree[s.nb].saturating_add(1);
    }
    let mut by_root: std::collections::BTreeMap<usize, ContourComponent> = Default::default();
    for (k, s) in segments.iter().enumerate() {
        let root = uf.find(s.na);
        let comp = by_root.entry(root).or_insert(ContourComponent {
            segments: Vec::new(),
            closed: true,
        });
        comp.segments.push(k);
        if degree[s.na] != 2 || degree[s.nb] != 2 {
            comp.closed = false;
        }
    }
    by_root.into_values().collect()
}
