use super::decompose::face_decomposition;
use super::halfedges::{classify_in, halfedges_in, BadTriangle, HalfedgeReport};
use super::split::PlaneSplit;
use crate::error::{Error, Result};
use crate::model::Drawing;

/// `(removed from E₀, added to E₀)` for a bad triangle of kind 1–3.
fn flip_for(t: &BadTriangle, hs: &HalfedgeReport) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (&hs.halfedges[t.alpha], &hs.halfedges[t.beta]);
    match t.kind {
        1 => (vec![a.first_crossed], vec![a.edge]),
        2 => {
            let free = if t.beta_others.is_empty() { b } else { a };
            (vec![a.first_crossed], vec![free.edge])
        }
        _ => {
            let f = *t.alpha_others.iter().find(|f| t.beta_others.contains(f)).expect("kind 3");
            (vec![a.first_crossed, f], vec![a.edge, b.edge])
        }
    }
}

/// Applies edge flips until every bad triangle is of kind 4.
///
/// Each flip keeps `|E₀|` and must lower the number of triangular faces;
/// `E₁` edges freed by a flip are moved back into `E₀`.
pub fn flip_repair(d: &Drawing, mut split: PlaneSplit) -> Result<PlaneSplit> {
    split.readded += split.maximalize();
    let mut f3 = face_decomposition(d, &split).f3;
    for _ in 0..=4 * d.e() + 16 {
        let fd = face_decomposition(d, &split);
        let hs = halfedges_in(d, &split, &fd)?;
        let bad = classify_in(&split, &fd, &hs)?;
        let Some(t) = bad.iter().find(|t| t.kind < 4) else {
            return Ok(split);
        };
        let (removed, added) = flip_for(t, &hs);
        for &e in &removed {
            split.in_e0[e] = false;
        }
        for &e in &added {
            split.in_e0[e] = true;
        }
        split.refresh();
        split.flips += 1;
        for &e in &added {
            if let Some((f, _)) = split.e0_partners(e).next() {
                return Err(Error::Inconsistency(format!(
                    "flip at face {} (kind {}) makes edges {e} and {f} of E₀ cross",
                    t.face, t.kind
                )));
            }
        }
        let after = face_decomposition(d, &split).f3;
        if after >= f3 {
            return Err(Error::Inconsistency(format!(
                "flip at face {} (kind {}) left {after} triangular faces (was {f3})",
                t.face, t.kind
            )));
        }
        split.readded += split.maximalize();
        f3 = face_decomposition(d, &split).f3;
    }
    Err(Error::Inconsistency("flip repair did not terminate".into()))
}
