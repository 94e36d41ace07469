use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::rook::dodecagon;
use super::{cerr, gate, META_CONSTRUCTION};
use crate::error::Result;
use crate::geometry::Point;
use crate::model::{merge, Drawing, Edge};
use crate::numeric::{angle_30, QField};

/// Axial lattice directions, counter-clockwise from +x in 60° steps.
pub(super) const DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Bookkeeping for a grid with `k` full layers plus `a` extra vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub k: usize,
    pub n: usize,
    /// Vertices beyond the `k` full layers.
    pub a: usize,
    /// Number of dodecagons in the full layers.
    pub h: usize,
    /// Adjacent dodecagon pairs (each shares one edge).
    pub c1: usize,
    /// Gray edges between neighbouring boundary dodecagons.
    pub c2: usize,
}

/// `(n, e)` of the grid with `k ≥ 1` full layers.
pub fn grid_counts(k: usize) -> (usize, usize) {
    let k = k as i64;
    ((69 * k * k - 57 * k + 17) as usize, (207 * k * k - 195 * k + 60) as usize)
}

impl ConstructionParams {
    pub fn for_layers(k: usize) -> Self {
        assert!(k >= 1, "at least one layer");
        let h = 3 * k * k - 3 * k + 1;
        ConstructionParams { k, n: grid_counts(k).0, a: 0, h, c1: 3 * h + 3 - 6 * k, c2: 6 * (k - 1) }
    }

    /// Largest `k` whose full grid fits in `n` vertices.
    pub fn for_n(n: usize) -> Option<Self> {
        if n < 29 {
            return None;
        }
        let mut k = 1;
        while grid_counts(k + 1).0 <= n {
            k += 1;
        }
        let mut p = Self::for_layers(k);
        p.a = n - p.n;
        p.n = n;
        Some(p)
    }

    /// Vertices needed to complete layer `k + 1`.
    pub fn layer_capacity(&self) -> usize {
        138 * self.k + 12
    }
}

pub(super) fn hex_ring(r: i64) -> Vec<(i64, i64)> {
    if r == 0 {
        return vec![(0, 0)];
    }
    // Clockwise from the +x corner, which comes last.
    let mut out = Vec::with_capacity(6 * r as usize);
    let (mut q, mut s) = (r, 0);
    for dir in [4, 3, 2, 1, 0, 5] {
        for _ in 0..r {
            q += DIRS[dir].0;
            s += DIRS[dir].1;
            out.push((q, s));
        }
    }
    out
}

/// Dodecagon centre spacing: twice the apothem `(2+√3)/2`.
fn center(pos: (i64, i64)) -> Point {
    let d0 = Point::new(QField::new(2, 1, 1, 1), QField::zero());
    let d1 = Point::new(QField::new(1, 1, 1, 2), QField::new(3, 2, 1, 1));
    d0.scale(&QField::int(pos.0)).add(&d1.scale(&QField::int(pos.1)))
}

/// Rim vertex of the centred dodecagon at angle `15° + 30°·j`.
fn rim(j: i64) -> Point {
    let (c, s) = angle_30(j);
    Point::new(QField::new(1, 1, 1, 2), QField::ratio(1, 2)).rotated(&c, &s)
}

/// Dodecagons at `positions`, plus the edges closing each gap triangle
/// between two adjacent dodecagons (the gray edges on the boundary).
fn assemble(template: &Drawing, positions: &[(i64, i64)]) -> Result<(Drawing, usize)> {
    let parts: Vec<Drawing> = positions.iter().map(|&p| template.translated(&center(p))).collect();
    let body = merge(&parts);
    let index: HashMap<&Point, usize> = body.vertices().iter().enumerate().map(|(i, p)| (p, i)).collect();
    let occupied: HashSet<(i64, i64)> = positions.iter().copied().collect();
    let existing: HashSet<Edge> = body.edges().iter().copied().collect();
    let mut gray = Vec::new();
    for &p in positions {
        for (i, dir) in DIRS.iter().enumerate() {
            let q = (p.0 + dir.0, p.1 + dir.1);
            if !occupied.contains(&q) || q < p {
                continue;
            }
            let i = i as i64;
            for (jp, jq) in [(2 * i + 1, 2 * i + 4), (2 * i - 2, 2 * i + 7)] {
                let a = rim(jp).add(&center(p));
                let b = rim(jq).add(&center(q));
                if a.dist2(&b) != QField::one() {
                    return Err(cerr("grid", "gap closure is not a unit segment"));
                }
                let (ia, ib) = match (index.get(&a), index.get(&b)) {
                    (Some(&x), Some(&y)) => (x.min(y), x.max(y)),
                    _ => return Err(cerr("grid", "gap closure endpoint missing")),
                };
                if !existing.contains(&(ia, ib)) {
                    gray.push((ia, ib));
                }
            }
        }
    }
    gray.sort_unstable();
    gray.dedup();
    let mut dashed = body.dashed_pairs();
    dashed.extend(gray.iter().copied());
    let mut edges = body.edges().to_vec();
    edges.extend(gray.iter().copied());
    let mut d = Drawing::new(body.vertices().to_vec(), edges);
    d.mark_dashed(&dashed);
    Ok((d, gray.len()))
}

fn layers(k: usize) -> Vec<(i64, i64)> {
    (0..k as i64).flat_map(hex_ring).collect()
}

/// `3k²−3k+1` dodecagons in a hexagonal pattern, adjacent ones sharing an
/// edge, with gray edges between neighbouring boundary dodecagons.
pub fn dodecagon_grid(k: usize) -> Result<Drawing> {
    let name = format!("grid(k={k})");
    if k == 0 {
        return Err(cerr(&name, "k must be at least 1"));
    }
    let params = ConstructionParams::for_layers(k);
    let template = dodecagon()?;
    let (mut d, gray) = assemble(&template, &layers(k))?;
    let (n, e) = grid_counts(k);
    if (d.n(), d.e(), gray) != (n, e, params.c2) {
        return Err(cerr(
            &name,
            format!(
                "counts (n, e, gray) = ({}, {}, {gray}), expected ({n}, {e}, {})",
                d.n(),
                d.e(),
                params.c2
            ),
        ));
    }
    gate(&name, &d, 2)?;
    d.set_meta(META_CONSTRUCTION, "grid");
    d.set_meta("k", k.to_string());
    Ok(d)
}

/// The grid with the largest number of full layers fitting in `n` vertices,
/// continued along the next layer clockwise one dodecagon at a time; the last
/// dodecagon may be partial.
pub fn spiral_construction(n: usize) -> Result<Drawing> {
    let name = format!("spiral(n={n})");
    let params = ConstructionParams::for_n(n).ok_or_else(|| cerr(&name, "n must be at least 29"))?;
    let template = dodecagon()?;
    let mut positions = layers(params.k);
    let mut placed: HashSet<(i64, i64)> = positions.iter().copied().collect();
    let mut remaining = params.a;
    let mut partial = None;
    for p in hex_ring(params.k as i64) {
        if remaining == 0 {
            break;
        }
        let touching = DIRS.iter().filter(|d| placed.contains(&(p.0 + d.0, p.1 + d.1))).count();
        let cost = 29 - 2 * touching;
        if cost <= remaining {
            remaining -= cost;
            positions.push(p);
            placed.insert(p);
        } else {
            partial = Some(p);
            break;
        }
    }
    let (full, _) = assemble(&template, &positions)?;
    let mut d = match partial {
        None => full,
        Some(p) => {
            positions.push(p);
            let (target, _) = assemble(&template, &positions)?;
            let present: HashSet<&Point> = full.vertices().iter().collect();
            let mut keep: Vec<usize> =
                (0..target.n()).filter(|&i| present.contains(&target.vertices()[i])).collect();
            let mut fresh: Vec<usize> =
                (0..target.n()).filter(|&i| !present.contains(&target.vertices()[i])).collect();
            let adj = target.adjacency();
            let mut inside = vec![false; target.n()];
            for &i in &keep {
                inside[i] = true;
            }
            // Most new edges first, ties by index.
            for _ in 0..remaining {
                let (pos, _) = fresh
                    .iter()
                    .enumerate()
                    .map(|(pos, &w)| (pos, adj[w].iter().filter(|&&u| inside[u]).count()))
                    .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                    .ok_or_else(|| cerr(&name, "dodecagon exhausted"))?;
                let w = fresh.remove(pos);
                inside[w] = true;
                keep.push(w);
            }
            keep.sort_unstable();
            target.induced(&keep)
        }
    };
    if d.n() != n {
        return Err(cerr(&name, format!("built {} vertices", d.n())));
    }
    gate(&name, &d, 2)?;
    d.set_meta(META_CONSTRUCTION, "spiral");
    d.set_meta("k", params.k.to_string());
    d.set_meta("A", params.a.to_string());
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_order_and_costs() {
        let ring = hex_ring(2);
        assert_eq!(ring.len(), 12);
        assert_eq!(ring[0], (2, -1));
        assert_eq!(*ring.last().unwrap(), (2, 0));
        let p = ConstructionParams::for_layers(2);
        assert_eq!((p.h, p.c1, p.c2, p.n, p.layer_capacity()), (7, 12, 6, 179, 288));
    }

    #[test]
    fn grid_k2() {
        let d = dodecagon_grid(2).unwrap();
        assert_eq!((d.n(), d.e()), (179, 498));
    }

    #[test]
    fn grid_k1_is_dodecagon() {
        let g = dodecagon_grid(1).unwrap();
        let d = dodecagon().unwrap();
        assert_eq!(g.vertices(), d.vertices());
        assert_eq!(g.edges(), d.edges());
    }

    #[test]
    fn spiral_first_dodecagon() {
        assert_eq!(spiral_construction(179).unwrap().e(), 498);
        assert_eq!(spiral_construction(204).unwrap().e(), 569);
    }
}
