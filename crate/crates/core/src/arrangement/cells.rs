use std::collections::HashMap;

use serde::Serialize;

use super::crossings::{crossing_report, CrossingReport};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::model::Drawing;
use crate::numeric::QField;
use crate::planemap::PlaneMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    Vertex(usize),
    /// Index into the crossing report.
    Crossing(usize),
}

/// The plane graph obtained by turning crossings into nodes.
#[derive(Clone, Debug)]
pub struct Planarization {
    pub crossings: CrossingReport,
    pub kinds: Vec<NodeKind>,
    pub map: PlaneMap,
    /// Parent edge per segment.
    pub parent: Vec<usize>,
    /// Segments of each original edge, in order from its lower endpoint.
    pub edge_segments: Vec<Vec<usize>>,
}

impl Planarization {
    pub fn is_connected(&self) -> bool {
        self.map.n_components <= 1
    }

    pub fn is_vertex(&self, node: usize) -> bool {
        matches!(self.kinds[node], NodeKind::Vertex(_))
    }
}

pub fn planarize(d: &Drawing) -> Result<Planarization> {
    let crossings = crossing_report(d)?;
    planarize_with(d, crossings)
}

/// Fails when three or more edges pass through one crossing point.
pub fn planarize_with(d: &Drawing, crossings: CrossingReport) -> Result<Planarization> {
    let mut seen: HashMap<&Point, usize> = HashMap::new();
    for (ci, c) in crossings.crossings.iter().enumerate() {
        if let Some(&other) = seen.get(&c.point) {
            let (a, b) = (crossings.crossings[other].edges.0, c.edges.0);
            return Err(Error::Degenerate(a, b, "three or more edges cross at one point".into()));
        }
        seen.insert(&c.point, ci);
    }
    let n = d.n();
    let mut nodes: Vec<Point> = d.vertices().to_vec();
    let mut kinds: Vec<NodeKind> = (0..n).map(NodeKind::Vertex).collect();
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); d.e()];
    for (ci, c) in crossings.crossings.iter().enumerate() {
        let node = nodes.len();
        nodes.push(c.point.clone());
        kinds.push(NodeKind::Crossing(ci));
        on_edge[c.edges.0].push(node);
        on_edge[c.edges.1].push(node);
    }
    let mut segments = Vec::new();
    let mut parent = Vec::new();
    let mut edge_segments = vec![Vec::new(); d.e()];
    for (e, &(i, j)) in d.edges().iter().enumerate() {
        let dir = nodes[j].sub(&nodes[i]);
        let mut inner = std::mem::take(&mut on_edge[e]);
        inner.sort_by(|&a, &b| {
            let ta = nodes[a].sub(&nodes[i]).dot(&dir);
            let tb = nodes[b].sub(&nodes[i]).dot(&dir);
            ta.cmp(&tb)
        });
        let mut chain = Vec::with_capacity(inner.len() + 2);
        chain.push(i);
        chain.extend(inner);
        chain.push(j);
        for w in chain.windows(2) {
            edge_segments[e].push(segments.len());
            segments.push((w[0], w[1]));
            parent.push(e);
        }
    }
    let map = PlaneMap::build(nodes, segments);
    Ok(Planarization { crossings, kinds, map, parent, edge_segments })
}

/// A connected component of the complement of the drawing.
#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    /// Boundary walks as node sequences, outer first.
    pub walks: Vec<Vec<usize>>,
    pub segment_incidences: usize,
    pub vertex_incidences: usize,
    /// Segment plus vertex incidences, with multiplicity.
    pub size: usize,
    /// Crossing indices on the boundary, sorted, without repetition.
    pub crossings: Vec<usize>,
    pub bounded: bool,
}

/// Cells of the planarization, the unbounded one first.
pub fn cell_decomposition(p: &Planarization) -> Vec<Cell> {
    let map = &p.map;
    map.regions
        .iter()
        .enumerate()
        .map(|(r, region)| {
            let mut walks = Vec::new();
            let mut segs = 0;
            let mut verts = 0;
            let mut crossings = Vec::new();
            for w in region.walks() {
                let nodes = map.walk_nodes(w);
                segs += nodes.len();
                for &v in &nodes {
                    match p.kinds[v] {
                        super::NodeKind::Vertex(_) => verts += 1,
                        super::NodeKind::Crossing(c) => crossings.push(c),
                    }
                }
                walks.push(nodes);
            }
            for &v in &region.isolated {
                if p.is_vertex(v) {
                    verts += 1;
                }
                walks.push(vec![v]);
            }
            crossings.sort_unstable();
            crossings.dedup();
            Cell {
                walks,
                segment_incidences: segs,
                vertex_incidences: verts,
                size: segs + verts,
                crossings,
                bounded: r != 0,
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityCheck {
    pub t: String,
    pub edges: usize,
    #[serde(serialize_with = "crate::report::ser_qfield")]
    pub rhs: QField,
    #[serde(serialize_with = "crate::report::ser_qfield")]
    pub slack: QField,
    pub holds: bool,
}

/// Evaluates `|E| ≤ t(|V|−2) − Σ_c ((t−1)/4·‖c‖ − t) − |X|` exactly.
pub fn density_check(d: &Drawing, t: &QField) -> Result<DensityCheck> {
    let p = planarize(d)?;
    density_check_with(d, &p, t)
}

pub fn density_check_with(d: &Drawing, p: &Planarization, t: &QField) -> Result<DensityCheck> {
    if d.e() == 0 {
        return Err(Error::Precondition("density formula needs at least one edge".into()));
    }
    if !p.is_connected() {
        return Err(Error::Precondition("drawing is not connected as a planarization".into()));
    }
    let cells = cell_decomposition(p);
    let one = QField::one();
    let coeff = (t - &one).scale(1, 4);
    let mut sum = QField::zero();
    for c in &cells {
        sum = sum + &coeff * &QField::int(c.size as i64) - t;
    }
    let rhs = t * &QField::int(d.n() as i64 - 2) - sum - QField::int(p.crossings.count() as i64);
    let slack = &rhs - &QField::int(d.e() as i64);
    Ok(DensityCheck {
        t: t.to_string(),
        edges: d.e(),
        holds: slack.signum() >= 0,
        rhs,
        slack,
    })
}

/// Lower and upper rational bounds on π.
pub const PI_LOWER: (i64, i64) = (333, 106);
pub const PI_UPPER: (i64, i64) = (355, 113);

#[derive(Clone, Debug, Serialize)]
pub struct OuterMetrics {
    #[serde(serialize_with = "crate::report::ser_qfield")]
    pub perimeter: QField,
    #[serde(serialize_with = "crate::report::ser_qfield")]
    pub area: QField,
    /// `ℓ² ≥ 4πA` certified with the upper bound on π.
    pub isoperimetric_holds: bool,
    /// `ℓ² < 4πA` certified with the lower bound on π.
    pub isoperimetric_violated: bool,
}

/// Perimeter and area of the polygon traced by the unbounded cell.
pub fn outer_metrics(d: &Drawing) -> Result<OuterMetrics> {
    let p = planarize(d)?;
    outer_metrics_with(d, &p)
}

pub fn outer_metrics_with(d: &Drawing, p: &Planarization) -> Result<OuterMetrics> {
    if !p.is_connected() {
        return Err(Error::Precondition("outer metrics need a connected drawing".into()));
    }
    let map = &p.map;
    let mut perimeter = QField::zero();
    let mut area2 = QField::zero();
    for w in map.regions[0].walks() {
        for &dart in &map.walks[w].darts {
            let seg = dart / 2;
            let e = p.parent[seg];
            let (u, v) = d.edge_points(e);
            let dir = v.sub(u);
            let (a, b) = map.segments[seg];
            // Parent edges have unit length, so the projection is the length.
            perimeter = perimeter + map.nodes[b].sub(&map.nodes[a]).dot(&dir).abs();
        }
        area2 = area2 + &map.walks[w].area2;
    }
    let area = area2.abs().scale(1, 2);
    let l2 = perimeter.square();
    let four_a = area.scale(4, 1);
    let hi = &l2 - &four_a.scale(PI_UPPER.0, PI_UPPER.1);
    let lo = &l2 - &four_a.scale(PI_LOWER.0, PI_LOWER.1);
    Ok(OuterMetrics {
        perimeter,
        area,
        isoperimetric_holds: hi.signum() >= 0,
        isoperimetric_violated: lo.signum() < 0,
    })
}
