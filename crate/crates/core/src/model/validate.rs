use serde::Serialize;

use super::drawing::{Drawing, Edge};
use crate::geometry::{in_open_segment, segment_relation, Point, SegmentRelation};
use crate::numeric::QField;
use crate::spatial::{segment_box, GridIndex};

/// Every way a drawing can fail to be a valid unit-distance drawing.
///
/// Failures are data, not errors: a drawing is valid iff every list is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Edge indices whose squared length is not exactly 1.
    pub non_unit_edges: Vec<usize>,
    /// Vertex pairs with identical coordinates.
    pub coincident_vertices: Vec<(usize, usize)>,
    /// Edge index pairs naming the same vertex pair.
    pub duplicate_edges: Vec<(usize, usize)>,
    /// Edges with `i == j` or an index out of range.
    pub malformed_edges: Vec<usize>,
    /// `(vertex, edge)`: the vertex lies in the open interior of the edge.
    pub vertex_in_edge: Vec<(usize, usize)>,
    /// Edge pairs sharing a sub-segment of positive length.
    pub overlapping_edges: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.non_unit_edges.is_empty()
            && self.coincident_vertices.is_empty()
            && self.duplicate_edges.is_empty()
            && self.malformed_edges.is_empty()
            && self.vertex_in_edge.is_empty()
            && self.overlapping_edges.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            return "VALID".into();
        }
        let mut parts = Vec::new();
        let mut push = |name: &str, n: usize| {
            if n > 0 {
                parts.push(format!("{n} {name}"));
            }
        };
        push("non-unit edges", self.non_unit_edges.len());
        push("coincident vertex pairs", self.coincident_vertices.len());
        push("duplicate edges", self.duplicate_edges.len());
        push("malformed edges", self.malformed_edges.len());
        push("vertex-in-edge incidences", self.vertex_in_edge.len());
        push("overlapping edge pairs", self.overlapping_edges.len());
        parts.join(", ")
    }
}

pub fn validate_drawing(d: &Drawing) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let n = d.n();
    let one = QField::one();

    let mut sorted: Vec<(Point, usize)> =
        d.vertices().iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
            rep.coincident_vertices.push((a, b));
        }
    }
    rep.coincident_vertices.sort_unstable();

    let mut good: Vec<usize> = Vec::new();
    for (idx, &(i, j)) in d.edges().iter().enumerate() {
        if i == j || i >= n || j >= n {
            rep.malformed_edges.push(idx);
            continue;
        }
        good.push(idx);
        if d.vertices()[i].dist2(&d.vertices()[j]) != one {
            rep.non_unit_edges.push(idx);
        }
    }

    let mut keyed: Vec<(Edge, usize)> = good
        .iter()
        .map(|&idx| {
            let (i, j) = d.edges()[idx];
            ((i.min(j), i.max(j)), idx)
        })
        .collect();
    keyed.sort_unstable();
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 {
            rep.duplicate_edges.push((w[0].1, w[1].1));
        }
    }

    // Geometry checks over candidate pairs from a coarse grid.
    let cell = 1.0;
    let mut grid = GridIndex::new(cell);
    let mut ids = Vec::new();
    for &idx in &good {
        let (p, q) = d.edge_points(idx);
        grid.insert(segment_box(p.to_f64(), q.to_f64()));
        ids.push(idx);
    }
    for (v, p) in d.vertices().iter().enumerate() {
        let (x, y) = p.to_f64();
        for g in grid.query(&[x, y, x, y]) {
            let idx = ids[g];
            let (i, j) = d.edges()[idx];
            if i == v || j == v {
                continue;
            }
            let (a, b) = d.edge_points(idx);
            if in_open_segment(p, a, b) {
                rep.vertex_in_edge.push((v, idx));
            }
        }
    }
    rep.vertex_in_edge.sort_unstable();
    for (gi, gj) in grid.candidate_pairs() {
        let (e1, e2) = (ids[gi], ids[gj]);
        if d.edges()[e1] == d.edges()[e2] {
            continue;
        }
        let (a, b) = d.edge_points(e1);
        let (c, dd) = d.edge_points(e2);
        if segment_relation(a, b, c, dd) == SegmentRelation::Overlap {
            rep.overlapping_edges.push((e1.min(e2), e1.max(e2)));
        }
    }
    rep.overlapping_edges.sort_unstable();
    rep
}

/// Non-edge vertex pairs at exact unit distance, lexicographic.
pub fn unit_pairs(d: &Drawing) -> Vec<Edge> {
    let one = QField::one();
    let mut grid = GridIndex::new(1.0);
    for p in d.vertices() {
        let (x, y) = p.to_f64();
        grid.insert([x, y, x, y]);
    }
    let mut out = Vec::new();
    for (i, p) in d.vertices().iter().enumerate() {
        let (x, y) = p.to_f64();
        for j in grid.query(&[x - 1.0, y - 1.0, x + 1.0, y + 1.0]) {
            if j <= i || d.has_edge((i, j)) {
                continue;
            }
            if p.dist2(&d.vertices()[j]) == one {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Drawing {
        let v = vec![
            Point::new(QField::zero(), QField::zero()),
            Point::new(QField::one(), QField::zero()),
            Point::new(QField::ratio(1, 2), QField::new(0, 1, 1, 2)),
        ];
        Drawing::new(v, vec![(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn triangle_is_valid() {
        assert!(validate_drawing(&triangle()).is_valid());
        assert!(unit_pairs(&triangle()).is_empty());
    }

    #[test]
    fn long_edge_reported() {
        let v = vec![Point::origin(), Point::new(QField::int(2), QField::zero())];
        let r = validate_drawing(&Drawing::new(v, vec![(0, 1)]));
        assert_eq!(r.non_unit_edges, vec![0]);
        assert!(!r.is_valid());
    }

    #[test]
    fn degeneracies_reported() {
        let h = QField::ratio(1, 2);
        let v = vec![
            Point::origin(),
            Point::new(QField::one(), QField::zero()),
            Point::new(h.clone(), QField::zero()),
            Point::new(h.clone(), QField::one()),
            Point::new(QField::ratio(3, 2), QField::zero()),
            Point::origin(),
        ];
        let d = Drawing::new(v, vec![(0, 1), (2, 3), (2, 4), (0, 1), (3, 3)]);
        let r = validate_drawing(&d);
        assert_eq!(r.coincident_vertices, vec![(0, 5)]);
        assert_eq!(r.duplicate_edges.len(), 1);
        assert_eq!(r.malformed_edges.len(), 1);
        assert!(r.vertex_in_edge.iter().any(|&(v, _)| v == 2));
        assert_eq!(r.overlapping_edges.len(), 2);
    }

    #[test]
    fn rhombus_closing_pairs() {
        // Two unit triangles sharing only vertex 0, the second rotated by 120°.
        let (c, s) = crate::numeric::angle_30(4);
        let t = triangle();
        let rot = t.map_points(|p| p.rotated(&c, &s));
        let m = super::super::merge(&[t, rot]);
        assert_eq!(m.n(), 5);
        let pairs = unit_pairs(&m);
        // Brute force over all vertex pairs.
        let mut brute = Vec::new();
        for i in 0..m.n() {
            for j in i + 1..m.n() {
                if !m.has_edge((i, j)) && m.vertices()[i].dist2(&m.vertices()[j]) == QField::one() {
                    brute.push((i, j));
                }
            }
        }
        assert_eq!(pairs, brute);
        assert_eq!(pairs.len(), 1);
    }
}
