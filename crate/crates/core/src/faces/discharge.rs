use serde::Serialize;

use super::decompose::face_decomposition;
use super::halfedges::{classify_in, halfedges_in, BadTriangle};
use super::split::PlaneSplit;
use crate::error::{Error, Result};
use crate::model::Drawing;

#[derive(Clone, Debug, Serialize)]
pub struct FaceCharge {
    pub face: usize,
    pub size: usize,
    pub distinct: usize,
    pub components: usize,
    pub t: i64,
    pub h: usize,
    /// `c(Φ) = 2t + |Φ| − 2 − h`.
    pub c: i64,
    /// After transfers.
    pub c_final: i64,
}

/// One unit moved from a helper face to a bad triangle.
#[derive(Clone, Debug, Serialize)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    pub amount: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChargeLedger {
    pub n: usize,
    pub e: usize,
    pub e0: usize,
    pub e1: usize,
    pub faces: Vec<FaceCharge>,
    pub bad_triangles: Vec<BadTriangle>,
    pub transfers: Vec<Transfer>,
    /// `h(Φ) ≤ 2t(Φ) + |Φ| − 2` off connected triangles, `h ≤ 2` on them.
    pub halfedge_bound: bool,
    /// `c′(Φ) ≥ 0` everywhere.
    pub charges_nonnegative: bool,
    /// `|E| ≤ 3n − 6 + ½Σ(|Φ| − 2) ≤ 4n − 8`.
    pub edge_chain: bool,
    /// Every bad triangle is of kind 4 and its helper has `|Ψ| ≥ 5`.
    pub helpers_ok: bool,
    /// `|E₀| = 3n − 6 − Σt(Φ)`.
    pub euler_identity: bool,
    /// `Σc = Σc′`.
    pub conserved: bool,
    pub diagnostics: Vec<String>,
    pub passed: bool,
}

/// Charges, helper transfers and the three verdicts for a 2-plane drawing and
/// a flip-repaired split of it.
pub fn discharging_audit(d: &Drawing, split: &PlaneSplit) -> Result<ChargeLedger> {
    if !split.report.is_k_plane(2) {
        return Err(Error::Precondition(format!(
            "discharging needs a 2-plane drawing (max {} crossings per edge)",
            split.report.max_crossings_per_edge
        )));
    }
    let fd = face_decomposition(d, split);
    let hs = halfedges_in(d, split, &fd)?;
    let bad = classify_in(split, &fd, &hs)?;
    let mut diagnostics = Vec::new();

    let mut faces: Vec<FaceCharge> = fd
        .faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let h = hs.per_face[i];
            let c = 2 * f.t + f.size as i64 - 2 - h as i64;
            FaceCharge {
                face: i,
                size: f.size,
                distinct: f.distinct,
                components: f.components,
                t: f.t,
                h,
                c,
                c_final: c,
            }
        })
        .collect();

    let mut halfedge_bound = true;
    for (fc, f) in faces.iter().zip(&fd.faces) {
        let limit = if f.is_connected_triangle() { 2 } else { 2 * fc.t + fc.size as i64 - 2 };
        if fc.h as i64 > limit {
            halfedge_bound = false;
            diagnostics.push(format!("face {}: h = {} exceeds {limit}", fc.face, fc.h));
        }
    }

    let mut transfers = Vec::new();
    let mut helpers_ok = true;
    for t in &bad {
        if t.kind != 4 {
            helpers_ok = false;
            diagnostics.push(format!("face {}: bad triangle of kind {}", t.face, t.kind));
            continue;
        }
        let e = t.crossed.expect("kind 4 has a crossed edge");
        let (l, r) = fd.sides(e).expect("crossed edge lies in E₀");
        let helper = if l == t.face { r } else { l };
        if helper == t.face {
            helpers_ok = false;
            diagnostics.push(format!("face {}: edge {e} has the triangle on both sides", t.face));
            continue;
        }
        if fd.faces[helper].size < 5 {
            helpers_ok = false;
            diagnostics.push(format!(
                "face {}: helper face {helper} has only {} edges",
                t.face, fd.faces[helper].size
            ));
        }
        faces[t.face].c_final += 1;
        faces[helper].c_final -= 1;
        transfers.push(Transfer { from: helper, to: t.face, amount: 1 });
    }

    let charges_nonnegative = faces.iter().all(|f| f.c_final >= 0);
    for f in faces.iter().filter(|f| f.c_final < 0) {
        diagnostics.push(format!("face {}: final charge {}", f.face, f.c_final));
    }
    let conserved =
        faces.iter().map(|f| f.c).sum::<i64>() == faces.iter().map(|f| f.c_final).sum::<i64>();

    let (n, e) = (d.n() as i64, d.e() as i64);
    let e0 = split.e0.len() as i64;
    let sum_t: i64 = faces.iter().map(|f| f.t).sum();
    let euler_identity = e0 == 3 * n - 6 - sum_t;
    if !euler_identity {
        diagnostics.push(format!("|E₀| = {e0} but 3n − 6 − Σt = {}", 3 * n - 6 - sum_t));
    }
    let sum_size2: i64 = faces.iter().map(|f| f.size as i64 - 2).sum();
    let edge_chain = 2 * e <= 6 * n - 12 + sum_size2 && sum_size2 <= 2 * n - 4 && e <= 4 * n - 8;
    if !edge_chain {
        diagnostics.push(format!(
            "chain fails: |E| = {e}, 3n − 6 + ½Σ(|Φ|−2) = {}, 4n − 8 = {}",
            3.0 * n as f64 - 6.0 + sum_size2 as f64 / 2.0,
            4 * n - 8
        ));
    }
    let passed = halfedge_bound && charges_nonnegative && edge_chain && helpers_ok && conserved;
    Ok(ChargeLedger {
        n: d.n(),
        e: d.e(),
        e0: split.e0.len(),
        e1: split.e1.len(),
        faces,
        bad_triangles: bad,
        transfers,
        halfedge_bound,
        charges_nonnegative,
        edge_chain,
        helpers_ok,
        euler_identity,
        conserved,
        diagnostics,
        passed,
    })
}
