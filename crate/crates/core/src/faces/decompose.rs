use std::collections::BTreeSet;

use serde::Serialize;

use super::split::PlaneSplit;
use crate::model::Drawing;
use crate::planemap::PlaneMap;

/// A face of the plane subgraph `G₀`.
#[derive(Clone, Debug, Serialize)]
pub struct Face {
    /// Boundary walks as vertex sequences, outer first.
    pub walks: Vec<Vec<usize>>,
    /// Vertices lying isolated inside the face.
    pub isolated: Vec<usize>,
    /// `|Φ|`: bounding edges with multiplicity.
    pub size: usize,
    /// `ℓ(Φ)`: distinct bounding edges.
    pub distinct: usize,
    /// `m`: boundary components, isolated vertices included.
    pub components: usize,
    /// `t(Φ) = |Φ| + 3m − 6`.
    pub t: i64,
    pub bounded: bool,
}

impl Face {
    /// Triangle whose boundary is a single walk with nothing inside.
    pub fn is_connected_triangle(&self) -> bool {
        self.size == 3 && self.components == 1
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceDecomposition {
    /// Indexed like the regions of the map; the unbounded face first.
    pub faces: Vec<Face>,
    /// Faces bounded by exactly 3 edges.
    pub f3: usize,
    /// `Σ_{i≥5} i·fᵢ`.
    pub f_ge5: usize,
    #[serde(skip)]
    pub map: PlaneMap,
    /// Drawing edge per map segment.
    #[serde(skip)]
    pub seg_edge: Vec<usize>,
    /// Map segment per drawing edge (`usize::MAX` for `E₁`).
    #[serde(skip)]
    pub edge_seg: Vec<usize>,
}

impl FaceDecomposition {
    /// The two faces on either side of an `E₀` edge.
    pub fn sides(&self, edge: usize) -> Option<(usize, usize)> {
        let s = *self.edge_seg.get(edge)?;
        (s != usize::MAX).then(|| (self.map.left_region(2 * s), self.map.left_region(2 * s + 1)))
    }
}

pub fn face_decomposition(d: &Drawing, split: &PlaneSplit) -> FaceDecomposition {
    let seg_edge = split.e0.clone();
    let mut edge_seg = vec![usize::MAX; d.e()];
    for (s, &e) in seg_edge.iter().enumerate() {
        edge_seg[e] = s;
    }
    let segments = seg_edge.iter().map(|&e| d.edges()[e]).collect();
    let map = PlaneMap::build(d.vertices().to_vec(), segments);
    let faces: Vec<Face> = map
        .regions
        .iter()
        .enumerate()
        .map(|(r, region)| {
            let mut size = 0;
            let mut segs = BTreeSet::new();
            let mut walks = Vec::new();
            for w in region.walks() {
                let darts = &map.walks[w].darts;
                size += darts.len();
                segs.extend(darts.iter().map(|&dt| dt / 2));
                walks.push(map.walk_nodes(w));
            }
            let components = region.boundary_components();
            Face {
                walks,
                isolated: region.isolated.clone(),
                size,
                distinct: segs.len(),
                components,
                t: size as i64 + 3 * components as i64 - 6,
                bounded: r != 0,
            }
        })
        .collect();
    let f3 = faces.iter().filter(|f| f.size == 3).count();
    let f_ge5 = faces.iter().filter(|f| f.size >= 5).map(|f| f.size).sum();
    FaceDecomposition { faces, f3, f_ge5, map, seg_edge, edge_seg }
}

/// The two edge bounds in terms of `F≥5` and `f₃`, evaluated for one drawing.
#[derive(Clone, Debug, Serialize)]
pub struct GtBoundCheck {
    pub n: usize,
    pub e: usize,
    pub f_ge5: usize,
    pub f3: usize,
    /// `e ≤ 3n − F≥5/10`.
    pub p1_holds: bool,
    pub p1_slack: f64,
    /// `e ≤ 3n − √f₃/5`.
    pub p2_holds: bool,
    pub p2_slack: f64,
}

pub fn gt_bound_check(d: &Drawing, split: &PlaneSplit) -> GtBoundCheck {
    let fd = face_decomposition(d, split);
    let (n, e) = (d.n() as i128, d.e() as i128);
    let gap = 3 * n - e;
    let (f5, f3) = (fd.f_ge5 as i128, fd.f3 as i128);
    GtBoundCheck {
        n: d.n(),
        e: d.e(),
        f_ge5: fd.f_ge5,
        f3: fd.f3,
        p1_holds: 10 * gap >= f5,
        p1_slack: gap as f64 - f5 as f64 / 10.0,
        p2_holds: gap >= 0 && 25 * gap * gap >= f3,
        p2_slack: gap as f64 - (f3 as f64).sqrt() / 5.0,
    }
}
