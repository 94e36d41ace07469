use super::drawing::{Drawing, Edge};
use super::validate::unit_pairs;
use crate::arrangement::crossing_report;
use crate::error::{Error, Result};
use crate::geometry::{in_open_segment, segment_relation, SegmentRelation};
use crate::spatial::{segment_box, GridIndex};

/// Greedily adds unit pairs, in lexicographic order, as long as the drawing
/// stays valid and k-plane. Added edges are tagged `dashed`.
pub fn augment_2planar(d: &Drawing, k: usize) -> Result<Drawing> {
    let rep = crossing_report(d)?;
    if !rep.is_k_plane(k) {
        return Err(Error::Precondition(format!(
            "drawing is not {k}-plane (max {} crossings per edge)",
            rep.max_crossings_per_edge
        )));
    }
    let mut edges: Vec<Edge> = d.edges().to_vec();
    let mut counts = rep.per_edge.clone();
    let mut grid = GridIndex::new(1.0);
    for &(i, j) in &edges {
        grid.insert(segment_box(d.vertices()[i].to_f64(), d.vertices()[j].to_f64()));
    }
    let mut vgrid = GridIndex::new(1.0);
    for p in d.vertices() {
        let (x, y) = p.to_f64();
        vgrid.insert([x, y, x, y]);
    }
    let mut added = Vec::new();
    'cand: for (a, b) in unit_pairs(d) {
        let (pa, pb) = (&d.vertices()[a], &d.vertices()[b]);
        let bx = segment_box(pa.to_f64(), pb.to_f64());
        for v in vgrid.query(&bx) {
            if v != a && v != b && in_open_segment(&d.vertices()[v], pa, pb) {
                continue 'cand;
            }
        }
        let mut crossed = Vec::new();
        for e in grid.query(&bx) {
            let (i, j) = edges[e];
            match segment_relation(pa, pb, &d.vertices()[i], &d.vertices()[j]) {
                SegmentRelation::ProperCrossing => crossed.push(e),
                SegmentRelation::Touching | SegmentRelation::Overlap => continue 'cand,
                _ => {}
            }
        }
        if crossed.len() > k || crossed.iter().any(|&e| counts[e] >= k) {
            continue;
        }
        for &e in &crossed {
            counts[e] += 1;
        }
        counts.push(crossed.len());
        edges.push((a, b));
        grid.insert(bx);
        added.push((a, b));
    }
    let mut dashed = d.dashed_pairs();
    dashed.extend(added);
    let mut out = Drawing::new(d.vertices().to_vec(), edges);
    *out.meta_mut() = d.meta().clone();
    out.mark_dashed(&dashed);
    Ok(out)
}
