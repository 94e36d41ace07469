use super::{cerr, gate, META_CONSTRUCTION};
use crate::error::Result;
use crate::geometry::Point;
use crate::model::{augment_2planar, merge, Drawing};
use crate::numeric::{angle_30, check_unit, QField};

fn unit_triangle() -> [Point; 3] {
    [
        Point::origin(),
        Point::new(QField::one(), QField::zero()),
        Point::new(QField::ratio(1, 2), QField::new(0, 1, 1, 2)),
    ]
}

/// The 3×3 Rook's graph drawn as the Minkowski sum of a unit triangle and
/// its copy rotated by `(cos, sin)`; vertex `3i + j` is `aᵢ + bⱼ`.
pub fn rook_block(cos: &QField, sin: &QField) -> Result<Drawing> {
    let name = format!("rook(cos={cos}, sin={sin})");
    check_unit(cos, sin).map_err(|e| cerr(&name, e.to_string()))?;
    let a = unit_triangle();
    let b: Vec<Point> = a.iter().map(|p| p.rotated(cos, sin)).collect();
    let mut vertices = Vec::with_capacity(9);
    for ai in &a {
        for bj in &b {
            vertices.push(ai.add(bj));
        }
    }
    let mut edges = Vec::with_capacity(18);
    for i in 0..3 {
        for (j1, j2) in [(0, 1), (0, 2), (1, 2)] {
            edges.push((3 * i + j1, 3 * i + j2));
            edges.push((3 * j1 + i, 3 * j2 + i));
        }
    }
    let mut d = Drawing::new(vertices, edges);
    gate(&name, &d, 2)?;
    d.set_meta(META_CONSTRUCTION, "rook");
    Ok(d)
}

/// Rook block with the 30° relative rotation.
pub fn rook_block_default() -> Result<Drawing> {
    let (c, s) = angle_30(1);
    rook_block(&c, &s)
}

/// Four quarter-turn copies of the Rook block around its corner, closed up to
/// a regular unit-side 12-gon by four extra edges (tagged `dashed`).
pub fn dodecagon() -> Result<Drawing> {
    let name = "dodecagon";
    let block = rook_block_default()?;
    let parts: Vec<Drawing> = (0..4)
        .map(|q| {
            let (c, s) = angle_30(3 * q);
            block.map_points(|p| p.rotated(&c, &s))
        })
        .collect();
    let body = merge(&parts);
    if body.n() != 29 {
        return Err(cerr(name, format!("merged copies have {} vertices, expected 29", body.n())));
    }
    let mut d = augment_2planar(&body, 2)?;
    if d.e() != 72 {
        return Err(cerr(name, format!("{} edges after augmentation, expected 72", d.e())));
    }
    gate(name, &d, 2)?;
    d.set_meta(META_CONSTRUCTION, "dodecagon");
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rook_counts_and_far_vertex() {
        let d = rook_block_default().unwrap();
        assert_eq!((d.n(), d.e()), (9, 18));
        let far = d.vertices().iter().map(|p| p.norm2()).max().unwrap();
        assert_eq!(far, QField::new(2, 1, 1, 1));
        assert_eq!(d.vertices()[0], Point::origin());
    }

    #[test]
    fn dodecagon_counts_and_rim() {
        let d = dodecagon().unwrap();
        assert_eq!((d.n(), d.e()), (29, 72));
        assert_eq!(d.dashed_pairs().len(), 4);
        let r2 = QField::new(2, 1, 1, 1);
        assert_eq!(d.vertices().iter().filter(|p| p.norm2() == r2).count(), 12);
    }

    #[test]
    fn non_unit_rotation_rejected() {
        assert!(rook_block(&QField::one(), &QField::one()).is_err());
    }
}
