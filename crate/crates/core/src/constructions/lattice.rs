use std::collections::HashMap;

use super::grid::{hex_ring, DIRS};
use super::{cerr, gate, META_CONSTRUCTION};
use crate::error::Result;
use crate::geometry::Point;
use crate::model::Drawing;
use crate::numeric::QField;

fn lattice_point(a: i64, b: i64) -> Point {
    Point::new(QField::int(a) + QField::ratio(b, 2), QField::new(0, 1, b, 2))
}

fn hex_dist((a, b): (i64, i64)) -> i64 {
    a.abs().max(b.abs()).max((a + b).abs())
}

/// `n` points of the unit triangular lattice grown from the origin, each new
/// point chosen to gain the most unit edges (ties: inner rings first, then
/// clockwise ring order). Crossing-free.
pub fn triangular_hexagon(n: usize) -> Result<Drawing> {
    if n == 0 {
        return Err(cerr("hexlattice", "n must be at least 1"));
    }
    let ring_rank = |p: (i64, i64)| {
        let r = hex_dist(p);
        let pos = hex_ring(r).iter().position(|&q| q == p).unwrap_or(0);
        (r, pos)
    };
    let mut order: Vec<(i64, i64)> = vec![(0, 0)];
    let mut index: HashMap<(i64, i64), usize> = HashMap::from([((0, 0), 0)]);
    let mut gain: HashMap<(i64, i64), usize> = HashMap::new();
    let mut edges = Vec::new();
    let bump = |p: (i64, i64), index: &HashMap<_, _>, gain: &mut HashMap<(i64, i64), usize>| {
        for d in DIRS {
            let q = (p.0 + d.0, p.1 + d.1);
            if !index.contains_key(&q) {
                *gain.entry(q).or_insert(0) += 1;
            }
        }
    };
    bump((0, 0), &index, &mut gain);
    while order.len() < n {
        let (&p, _) = gain
            .iter()
            .max_by(|x, y| x.1.cmp(y.1).then_with(|| ring_rank(*y.0).cmp(&ring_rank(*x.0))))
            .expect("frontier is never empty");
        gain.remove(&p);
        let id = order.len();
        for d in DIRS {
            if let Some(&j) = index.get(&(p.0 + d.0, p.1 + d.1)) {
                edges.push((j, id));
            }
        }
        index.insert(p, id);
        order.push(p);
        bump(p, &index, &mut gain);
    }
    let vertices = order.iter().map(|&(a, b)| lattice_point(a, b)).collect();
    let mut d = Drawing::new(vertices, edges);
    gate("hexlattice", &d, 0)?;
    d.set_meta(META_CONSTRUCTION, "hexlattice");
    Ok(d)
}

/// Two copies of `triangular_hexagon(n/2)`, the second translated by `shift`,
/// joined by the `n/2` translation edges. Must come out 3-plane.
pub fn shifted_lattice_with(n: usize, shift: &Point) -> Result<Drawing> {
    let name = format!("shifted(n={n}, shift=({}, {}))", shift.x, shift.y);
    if n < 6 || !n.is_multiple_of(2) {
        return Err(cerr(&name, "n must be even and at least 6"));
    }
    if shift.norm2() != QField::one() {
        return Err(cerr(&name, "shift is not a unit vector"));
    }
    let m = n / 2;
    let base = triangular_hexagon(m)?;
    let mut vertices = base.vertices().to_vec();
    vertices.extend(base.vertices().iter().map(|p| p.add(shift)));
    let mut edges = base.edges().to_vec();
    edges.extend(base.edges().iter().map(|&(i, j)| (i + m, j + m)));
    edges.extend((0..m).map(|i| (i, i + m)));
    let mut d = Drawing::new(vertices, edges);
    gate(&name, &d, 3)?;
    d.set_meta(META_CONSTRUCTION, "shifted");
    d.set_meta("shift", format!("({}, {})", shift.x, shift.y));
    Ok(d)
}

/// Default shift `(3/5, 4/5)`.
pub fn shifted_lattice(n: usize) -> Result<Drawing> {
    shifted_lattice_with(n, &Point::new(QField::ratio(3, 5), QField::ratio(4, 5)))
}
