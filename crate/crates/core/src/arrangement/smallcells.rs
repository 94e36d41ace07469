use std::collections::BTreeMap;

use serde::Serialize;

use super::cells::{cell_decomposition, planarize, Cell, NodeKind, Planarization};
use crate::error::{Error, Result};
use crate::geometry::orient;
use crate::model::Drawing;
use crate::numeric::QField;

/// The six possible small cells, by (edge-segments, vertices) census.
///
/// `A` is the only one compatible with 1-planarity: an uncrossed edge plus
/// the two halves of crossing edges meeting at one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SmallCellType {
    /// 3 segments, 2 vertices.
    A,
    /// 3 segments, 1 vertex.
    B,
    /// 3 segments, no vertex.
    C,
    /// 4 segments, 1 vertex.
    D,
    /// 4 segments, no vertex.
    E,
    /// 5 segments, no vertex.
    F,
}

impl SmallCellType {
    pub fn from_census(segments: usize, vertices: usize) -> Option<Self> {
        use SmallCellType::*;
        Some(match (segments, vertices) {
            (3, 2) => A,
            (3, 1) => B,
            (3, 0) => C,
            (4, 1) => D,
            (4, 0) => E,
            (5, 0) => F,
            _ => return None,
        })
    }

    pub fn label(&self) -> &'static str {
        use SmallCellType::*;
        match self {
            A => "a",
            B => "b",
            C => "c",
            D => "d",
            E => "e",
            F => "f",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SmallCellReport {
    /// Count per type label `a`..`f`.
    pub histogram: BTreeMap<String, usize>,
    /// `(cell index, type)` for every classified cell of size at most 5.
    pub classified: Vec<(usize, SmallCellType)>,
    /// Cells of size at most 5 that match no type.
    pub unclassifiable: Vec<usize>,
    /// Number of cells of size exactly 5.
    pub c5: usize,
    /// For 1-plane inputs: whether every small cell is type (a).
    pub one_plane_ok: Option<bool>,
}

fn classify_cell(c: &Cell) -> Option<SmallCellType> {
    if c.walks.len() != 1 || c.walks[0].len() != c.segment_incidences {
        return None;
    }
    let walk = &c.walks[0];
    let mut distinct = walk.clone();
    distinct.sort_unstable();
    distinct.dedup();
    // A simple cycle whose crossing corners account for the rest.
    if distinct.len() != walk.len() {
        return None;
    }
    let t = SmallCellType::from_census(c.segment_incidences, c.vertex_incidences)?;
    if c.crossings.len() != c.segment_incidences - c.vertex_incidences {
        return None;
    }
    Some(t)
}

pub fn small_cell_classifier(d: &Drawing) -> Result<SmallCellReport> {
    let p = planarize(d)?;
    Ok(small_cells_with(&p))
}

pub fn small_cells_with(p: &Planarization) -> SmallCellReport {
    let cells = cell_decomposition(p);
    let mut histogram: BTreeMap<String, usize> =
        ["a", "b", "c", "d", "e", "f"].iter().map(|s| (s.to_string(), 0)).collect();
    let mut classified = Vec::new();
    let mut unclassifiable = Vec::new();
    let mut c5 = 0;
    for (i, c) in cells.iter().enumerate() {
        if c.size == 5 {
            c5 += 1;
        }
        if c.size > 5 {
            continue;
        }
        match classify_cell(c) {
            Some(t) => {
                *histogram.get_mut(t.label()).unwrap() += 1;
                classified.push((i, t));
            }
            None => unclassifiable.push(i),
        }
    }
    let one_plane_ok = p.crossings.is_k_plane(1).then(|| {
        unclassifiable.is_empty() && classified.iter().all(|(_, t)| *t == SmallCellType::A)
    });
    SmallCellReport { histogram, classified, unclassifiable, c5, one_plane_ok }
}

#[derive(Clone, Debug, Serialize)]
pub struct IncidenceAudit {
    pub crossings: usize,
    pub c5: usize,
    /// Crossings incident to exactly one size-5 cell.
    pub x1: usize,
    /// Crossings incident to exactly two size-5 cells.
    pub x2: usize,
    /// Unit equilateral triangles, one per `x2` crossing, as sorted vertex triples.
    pub triangles: Vec<[usize; 3]>,
    pub claims_hold: bool,
    pub diagnostics: Vec<String>,
}

/// For a 1-plane drawing, pairs the size-5 cells around each crossing and
/// extracts the unit triangle each doubly-incident crossing certifies.
pub fn crossing_incidence_audit(d: &Drawing) -> Result<IncidenceAudit> {
    let p = planarize(d)?;
    crossing_incidence_with(d, &p)
}

pub fn crossing_incidence_with(d: &Drawing, p: &Planarization) -> Result<IncidenceAudit> {
    if !p.crossings.is_k_plane(1) {
        return Err(Error::Precondition(format!(
            "incidence audit needs a 1-plane drawing (max {} crossings per edge)",
            p.crossings.max_crossings_per_edge
        )));
    }
    let cells = cell_decomposition(p);
    let nx = p.crossings.count();
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); nx];
    let mut c5 = 0;
    for (i, c) in cells.iter().enumerate() {
        if c.size == 5 {
            c5 += 1;
            for &x in &c.crossings {
                around[x].push(i);
            }
        }
    }
    let mut diagnostics = Vec::new();
    let (mut x1, mut x2) = (0, 0);
    let mut triangles = Vec::new();
    let node_of_crossing: Vec<usize> = {
        let mut v = vec![usize::MAX; nx];
        for (node, k) in p.kinds.iter().enumerate() {
            if let NodeKind::Crossing(ci) = k {
                v[*ci] = node;
            }
        }
        v
    };
    for (x, cs) in around.iter().enumerate() {
        match cs.len() {
            0 => {}
            1 => x1 += 1,
            2 => {
                x2 += 1;
                match extract_triangle(d, p, &cells[cs[0]], &cells[cs[1]], node_of_crossing[x]) {
                    Ok(t) => triangles.push(t),
                    Err(msg) => diagnostics.push(format!("crossing {x}: {msg}")),
                }
            }
            k => diagnostics.push(format!("crossing {x} is incident to {k} cells of size 5")),
        }
    }
    triangles.sort_unstable();
    let one = QField::one();
    for t in &triangles {
        let [a, b, c] = *t;
        let v = d.vertices();
        if v[a].dist2(&v[b]) != one || v[b].dist2(&v[c]) != one || v[a].dist2(&v[c]) != one {
            diagnostics.push(format!("triangle {t:?} is not unit equilateral"));
        }
    }
    for i in 0..triangles.len() {
        for j in i + 1..triangles.len() {
            if !interior_disjoint(d, &triangles[i], &triangles[j]) {
                diagnostics.push(format!(
                    "triangles {:?} and {:?} overlap",
                    triangles[i], triangles[j]
                ));
            }
        }
    }
    if x1 + 2 * x2 < c5 {
        diagnostics.push(format!("x1 + 2·x2 = {} < c5 = {c5}", x1 + 2 * x2));
    }
    if (x2 as i64) < c5 as i64 - nx as i64 {
        diagnostics.push(format!("x2 = {x2} < c5 − |X| = {}", c5 as i64 - nx as i64));
    }
    if triangles.len() != x2 {
        diagnostics.push(format!("{} triangles extracted for x2 = {x2}", triangles.len()));
    }
    Ok(IncidenceAudit {
        crossings: nx,
        c5,
        x1,
        x2,
        triangles,
        claims_hold: diagnostics.is_empty(),
        diagnostics,
    })
}

/// The two size-5 cells around crossing node `x` must share the segment
/// from `x` to a vertex `w`; the triangle is `w` plus the two far vertices.
fn extract_triangle(
    d: &Drawing,
    p: &Planarization,
    c1: &Cell,
    c2: &Cell,
    x: usize,
) -> std::result::Result<[usize; 3], String> {
    let w1 = &c1.walks[0];
    let w2 = &c2.walks[0];
    let vertex_of = |node: usize| match p.kinds[node] {
        NodeKind::Vertex(v) => Some(v),
        NodeKind::Crossing(_) => None,
    };
    let shared: Vec<usize> =
        w1.iter().copied().filter(|v| w2.contains(v) && *v != x && vertex_of(*v).is_some()).collect();
    // The shared neighbour of x must be adjacent to x along both walks.
    let adjacent = |walk: &Vec<usize>, a: usize, b: usize| {
        let k = walk.len();
        (0..k).any(|i| {
            let (s, t) = (walk[i], walk[(i + 1) % k]);
            (s == a && t == b) || (s == b && t == a)
        })
    };
    let w = shared
        .into_iter()
        .find(|&w| adjacent(w1, x, w) && adjacent(w2, x, w))
        .ok_or("size-5 cells share no edge-segment at the crossing")?;
    let other = |walk: &Vec<usize>| walk.iter().copied().find(|&v| v != x && v != w);
    let a = other(w1).ok_or("degenerate cell")?;
    let b = other(w2).ok_or("degenerate cell")?;
    let (va, vb, vw) = (
        vertex_of(a).ok_or("cell corner is a crossing")?,
        vertex_of(b).ok_or("cell corner is a crossing")?,
        vertex_of(w).ok_or("cell corner is a crossing")?,
    );
    if !d.has_edge((va, vb)) || !d.has_edge((va, vw)) || !d.has_edge((vw, vb)) {
        return Err("far vertices do not close a triangle".into());
    }
    let mut t = [va, vb, vw];
    t.sort_unstable();
    Ok(t)
}

fn interior_disjoint(d: &Drawing, t1: &[usize; 3], t2: &[usize; 3]) -> bool {
    let v = d.vertices();
    let separated_by = |a: &[usize; 3], b: &[usize; 3]| {
        (0..3).any(|i| {
            let (p, q, r) = (&v[a[i]], &v[a[(i + 1) % 3]], &v[a[(i + 2) % 3]]);
            let s = orient(p, q, r);
            b.iter().all(|&w| orient(p, q, &v[w]) * s <= 0)
        })
    };
    separated_by(t1, t2) || separated_by(t2, t1)
}
