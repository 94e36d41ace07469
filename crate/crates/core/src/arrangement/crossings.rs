use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{line_intersection, segment_relation, Point, SegmentRelation};
use crate::model::Drawing;
use crate::numeric::QField;
use crate::spatial::{segment_box, GridIndex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// Edge indices, `first < second`.
    pub edges: (usize, usize),
    #[serde(skip)]
    pub point: Point,
}

/// Every proper crossing of a drawing, with per-edge counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub per_edge: Vec<usize>,
    /// Sorted by edge pair.
    pub crossings: Vec<Crossing>,
    pub max_crossings_per_edge: usize,
}

impl CrossingReport {
    fn from_crossings(m: usize, mut crossings: Vec<Crossing>) -> Self {
        crossings.sort_by_key(|a| a.edges);
        let mut per_edge = vec![0; m];
        for c in &crossings {
            per_edge[c.edges.0] += 1;
            per_edge[c.edges.1] += 1;
        }
        let max_crossings_per_edge = per_edge.iter().copied().max().unwrap_or(0);
        CrossingReport { per_edge, crossings, max_crossings_per_edge }
    }

    pub fn is_k_plane(&self, k: usize) -> bool {
        self.max_crossings_per_edge <= k
    }

    pub fn count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossings on edge `e`, as `(other edge, crossing index)`.
    pub fn crossings_of(&self, e: usize) -> Vec<(usize, usize)> {
        self.crossings
            .iter()
            .enumerate()
            .filter_map(|(ci, c)| {
                if c.edges.0 == e {
                    Some((c.edges.1, ci))
                } else if c.edges.1 == e {
                    Some((c.edges.0, ci))
                } else {
                    None
                }
            })
            .collect()
    }
}

fn classify(d: &Drawing, e1: usize, e2: usize) -> Result<Option<Crossing>> {
    let (a, b) = d.edge_points(e1);
    let (c, dd) = d.edge_points(e2);
    match segment_relation(a, b, c, dd) {
        SegmentRelation::Disjoint | SegmentRelation::SharedEndpoint => Ok(None),
        SegmentRelation::ProperCrossing => {
            let point = line_intersection(a, b, c, dd)
                .ok_or_else(|| Error::Degenerate(e1, e2, "parallel crossing".into()))?;
            Ok(Some(Crossing { edges: (e1, e2), point }))
        }
        SegmentRelation::Touching => {
            Err(Error::Degenerate(e1, e2, "edges touch without crossing".into()))
        }
        SegmentRelation::Overlap => Err(Error::Degenerate(e1, e2, "edges overlap".into())),
    }
}

/// Exact proper crossings, candidate pairs pruned by a uniform grid.
pub fn crossing_report(d: &Drawing) -> Result<CrossingReport> {
    let mut grid = GridIndex::new(1.0);
    for idx in 0..d.e() {
        let (p, q) = d.edge_points(idx);
        grid.insert(segment_box(p.to_f64(), q.to_f64()));
    }
    let mut crossings = Vec::new();
    for (e1, e2) in grid.candidate_pairs() {
        if let Some(c) = classify(d, e1, e2)? {
            crossings.push(c);
        }
    }
    Ok(CrossingReport::from_crossings(d.e(), crossings))
}

/// Brute-force reference: every edge pair, decided by solving the 2×2 system
/// for both segment parameters. Shares no code with [`crossing_report`]
/// beyond field arithmetic.
pub fn oracle_crossings(d: &Drawing) -> Result<CrossingReport> {
    let m = d.e();
    let pts: Vec<[(f64, f64); 2]> = (0..m)
        .map(|i| {
            let (p, q) = d.edge_points(i);
            [p.to_f64(), q.to_f64()]
        })
        .collect();
    let mut crossings = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            // Float boxes farther apart than any rounding error cannot meet.
            let (a, b) = (pts[i], pts[j]);
            let sep = 1e-7;
            if a[0].0.max(a[1].0) + sep < b[0].0.min(b[1].0)
                || b[0].0.max(b[1].0) + sep < a[0].0.min(a[1].0)
                || a[0].1.max(a[1].1) + sep < b[0].1.min(b[1].1)
                || b[0].1.max(b[1].1) + sep < a[0].1.min(a[1].1)
            {
                continue;
            }
            if let Some(p) = oracle_pair(d, i, j)? {
                crossings.push(Crossing { edges: (i, j), point: p });
            }
        }
    }
    Ok(CrossingReport::from_crossings(m, crossings))
}

fn oracle_pair(d: &Drawing, e1: usize, e2: usize) -> Result<Option<Point>> {
    let (u1, v1) = d.edges()[e1];
    let (u2, v2) = d.edges()[e2];
    let (p, p2) = d.edge_points(e1);
    let (q, q2) = d.edge_points(e2);
    let r = p2.sub(p);
    let s = q2.sub(q);
    let denom = r.cross(&s);
    let qp = q.sub(p);
    let shares = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
    if denom.is_zero() {
        // Parallel. Collinear iff qp is parallel to r.
        if !qp.cross(&r).is_zero() {
            return Ok(None);
        }
        // Project the second segment onto the first: parameters t0, t1 in units of |r|².
        let rr = r.dot(&r);
        let t0 = qp.dot(&r);
        let t1 = q2.sub(p).dot(&r);
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let zero = QField::zero();
        // Overlap length is min(hi, rr) - max(lo, 0).
        let top = if hi < rr { hi } else { rr };
        let bot = if lo > zero { lo } else { zero };
        return match (&top - &bot).signum() {
            1 => Err(Error::Degenerate(e1, e2, "edges overlap".into())),
            0 if !shares => Err(Error::Degenerate(e1, e2, "edges touch without crossing".into())),
            _ => Ok(None),
        };
    }
    // p + t r = q + u s  =>  t = (qp × s) / (r × s), u = (qp × r) / (r × s)
    let t_num = qp.cross(&s);
    let u_num = qp.cross(&r);
    // Compare t and u against [0, 1] without dividing: scale by the sign of denom.
    let sd = denom.signum();
    let tn = if sd > 0 { t_num.clone() } else { -&t_num };
    let un = if sd > 0 { u_num.clone() } else { -&u_num };
    let den = denom.abs();
    let t_pos = tn.signum();
    let t_lt1 = (&den - &tn).signum();
    let u_pos = un.signum();
    let u_lt1 = (&den - &un).signum();
    if t_pos < 0 || t_lt1 < 0 || u_pos < 0 || u_lt1 < 0 {
        return Ok(None);
    }
    if t_pos > 0 && t_lt1 > 0 && u_pos > 0 && u_lt1 > 0 {
        let t = t_num.checked_div(&denom)?;
        return Ok(Some(p.add(&r.scale(&t))));
    }
    // Meeting at an endpoint of at least one segment.
    let at_p_end = t_pos == 0 || t_lt1 == 0;
    let at_q_end = u_pos == 0 || u_lt1 == 0;
    if at_p_end && at_q_end && shares {
        return Ok(None);
    }
    Err(Error::Degenerate(e1, e2, "edges touch without crossing".into()))
}
