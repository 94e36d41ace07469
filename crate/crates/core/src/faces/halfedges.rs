use serde::Serialize;

use super::decompose::{face_decomposition, FaceDecomposition};
use super::split::PlaneSplit;
use crate::error::{Error, Result};
use crate::model::Drawing;
use crate::numeric::QField;

/// The piece of an `E₁` edge from one endpoint up to its nearest crossing
/// with an `E₀` edge.
#[derive(Clone, Debug, Serialize)]
pub struct Halfedge {
    /// The `E₁` edge carrying it.
    pub edge: usize,
    pub endpoint: usize,
    /// Nearest `E₀` edge crossed.
    pub first_crossed: usize,
    /// Face of `G₀` containing it.
    pub face: usize,
    /// Another halfedge it crosses.
    pub partner: Option<usize>,
    /// Squared length.
    #[serde(skip)]
    pub(crate) reach: QField,
}

#[derive(Clone, Debug, Serialize)]
pub struct HalfedgeReport {
    pub halfedges: Vec<Halfedge>,
    /// `h(Φ)` per face.
    pub per_face: Vec<usize>,
}

pub fn halfedge_extraction(d: &Drawing, split: &PlaneSplit) -> Result<HalfedgeReport> {
    let fd = face_decomposition(d, split);
    halfedges_in(d, split, &fd)
}

pub(crate) fn halfedges_in(d: &Drawing, split: &PlaneSplit, fd: &FaceDecomposition) -> Result<HalfedgeReport> {
    let v = d.vertices();
    let crossings = &split.report.crossings;
    let mut halfedges: Vec<Halfedge> = Vec::with_capacity(2 * split.e1.len());
    for &e in &split.e1 {
        let (a, b) = d.edges()[e];
        for (from, to) in [(a, b), (b, a)] {
            let nearest = split
                .e0_partners(e)
                .map(|(f, ci)| (v[from].dist2(&crossings[ci].point), f))
                .min()
                .ok_or_else(|| {
                    Error::Inconsistency(format!("edge {e} of E₁ crosses no edge of E₀"))
                })?;
            let dir = v[to].sub(&v[from]);
            halfedges.push(Halfedge {
                edge: e,
                endpoint: from,
                first_crossed: nearest.1,
                face: fd.map.region_at(from, &dir),
                partner: None,
                reach: nearest.0,
            });
        }
    }
    // Halfedges of two crossing E₁ edges cross when both cover the crossing.
    let mut by_edge = vec![[usize::MAX; 2]; d.e()];
    for (i, h) in halfedges.iter().enumerate() {
        let slot = &mut by_edge[h.edge];
        slot[usize::from(slot[0] != usize::MAX)] = i;
    }
    for c in crossings {
        let (x, y) = c.edges;
        if split.is_e0(x) || split.is_e0(y) {
            continue;
        }
        let cover = |e: usize| {
            by_edge[e]
                .iter()
                .copied()
                .find(|&i| v[halfedges[i].endpoint].dist2(&c.point) < halfedges[i].reach)
        };
        if let (Some(i), Some(j)) = (cover(x), cover(y)) {
            halfedges[i].partner = Some(j);
            halfedges[j].partner = Some(i);
        }
    }
    let mut per_face = vec![0; fd.faces.len()];
    for h in &halfedges {
        per_face[h.face] += 1;
    }
    Ok(HalfedgeReport { halfedges, per_face })
}

/// A triangular face with connected boundary holding two halfedges.
#[derive(Clone, Debug, Serialize)]
pub struct BadTriangle {
    pub face: usize,
    /// 1–4.
    pub kind: u8,
    pub alpha: usize,
    pub beta: usize,
    /// Edge of the triangle crossed by both halfedges (kinds 2–4).
    pub crossed: Option<usize>,
    /// `E₀` edges other than `crossed` crossing α̂ and β̂, respectively.
    pub alpha_others: Vec<usize>,
    pub beta_others: Vec<usize>,
}

pub fn bad_triangle_classify(d: &Drawing, split: &PlaneSplit) -> Result<Vec<BadTriangle>> {
    let fd = face_decomposition(d, split);
    let hs = halfedges_in(d, split, &fd)?;
    classify_in(split, &fd, &hs)
}

pub(crate) fn classify_in(
    split: &PlaneSplit,
    fd: &FaceDecomposition,
    hs: &HalfedgeReport,
) -> Result<Vec<BadTriangle>> {
    let mut in_face: Vec<Vec<usize>> = vec![Vec::new(); fd.faces.len()];
    for (i, h) in hs.halfedges.iter().enumerate() {
        in_face[h.face].push(i);
    }
    let mut out = Vec::new();
    for (fi, face) in fd.faces.iter().enumerate() {
        if !face.is_connected_triangle() {
            continue;
        }
        let list = &in_face[fi];
        if list.len() > 2 {
            return Err(Error::Inconsistency(format!(
                "triangular face {fi} holds {} halfedges",
                list.len()
            )));
        }
        if list.len() < 2 {
            continue;
        }
        let (alpha, beta) = (list[0], list[1]);
        let (ha, hb) = (&hs.halfedges[alpha], &hs.halfedges[beta]);
        if ha.endpoint != hb.endpoint {
            out.push(BadTriangle {
                face: fi,
                kind: 1,
                alpha,
                beta,
                crossed: None,
                alpha_others: Vec::new(),
                beta_others: Vec::new(),
            });
            continue;
        }
        if ha.first_crossed != hb.first_crossed {
            return Err(Error::Inconsistency(format!(
                "halfedges {alpha} and {beta} leave triangle {fi} through different edges"
            )));
        }
        let e = ha.first_crossed;
        let others = |edge: usize| -> Vec<usize> {
            let mut v: Vec<usize> =
                split.e0_partners(edge).map(|(f, _)| f).filter(|&f| f != e).collect();
            v.sort_unstable();
            v
        };
        let (oa, ob) = (others(ha.edge), others(hb.edge));
        let kind = if oa.is_empty() || ob.is_empty() {
            2
        } else if oa.iter().any(|f| ob.contains(f)) {
            3
        } else {
            4
        };
        out.push(BadTriangle {
            face: fi,
            kind,
            alpha,
            beta,
            crossed: Some(e),
            alpha_others: oa,
            beta_others: ob,
        });
    }
    Ok(out)
}
