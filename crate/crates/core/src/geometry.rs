//! Exact planar predicates on points with ℚ(√3) coordinates.

use std::cmp::Ordering;
use std::fmt;

use crate::numeric::{Approx, QField};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point {
    pub x: QField,
    pub y: QField,
}

impl Point {
    pub fn new(x: QField, y: QField) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::default()
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, f: &QField) -> Point {
        Point::new(&self.x * f, &self.y * f)
    }

    pub fn dot(&self, o: &Point) -> QField {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Point) -> QField {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm2(&self) -> QField {
        self.dot(self)
    }

    pub fn dist2(&self, o: &Point) -> QField {
        self.sub(o).norm2()
    }

    /// Rotation by an exact unit pair; the caller guarantees `c² + s² = 1`.
    pub fn rotated(&self, c: &QField, s: &QField) -> Point {
        let (x, y) = crate::numeric::rotate_unchecked((&self.x, &self.y), c, s);
        Point::new(x, y)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    fn approx(&self) -> (Approx, Approx) {
        (self.x.approx(), self.y.approx())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(b − a) × (c − a)`: +1 when `a, b, c` turn left.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    let (ax, ay) = a.approx();
    let (bx, by) = b.approx();
    let (cx, cy) = c.approx();
    let det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    if let Some(s) = det.sign() {
        return s;
    }
    b.sub(a).cross(&c.sub(a)).signum()
}

/// Sign of `(b − a)·(c − a)`.
pub fn dot_sign(a: &Point, b: &Point, c: &Point) -> i8 {
    let (ax, ay) = a.approx();
    let (bx, by) = b.approx();
    let (cx, cy) = c.approx();
    let d = (bx - ax) * (cx - ax) + (by - ay) * (cy - ay);
    if let Some(s) = d.sign() {
        return s;
    }
    b.sub(a).dot(&c.sub(a)).signum()
}

/// True when `p` lies strictly between `a` and `b` on the segment `ab`.
pub fn in_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == 0 && dot_sign(p, a, b) < 0
}

/// How two closed segments meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    /// Meet only at an endpoint they share (same vertex).
    SharedEndpoint,
    /// Interiors cross at a single point.
    ProperCrossing,
    /// An endpoint of one lies in the open interior of the other.
    Touching,
    /// Collinear with a common sub-segment of positive length.
    Overlap,
}

/// Classify `ab` against `cd`. Endpoints equal by coordinates count as shared.
pub fn segment_relation(a: &Point, b: &Point, c: &Point, d: &Point) -> SegmentRelation {
    use SegmentRelation::*;
    // Cheap bounding-box reject on the float images.
    if boxes_apart(a, b, c, d) {
        return Disjoint;
    }
    let shared = a == c || a == d || b == c || b == d;
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    if o1 == 0 && o2 == 0 {
        // Collinear: project on the direction of ab.
        let cin = in_open_segment(c, a, b);
        let din = in_open_segment(d, a, b);
        let ain = in_open_segment(a, c, d);
        let bin = in_open_segment(b, c, d);
        if cin || din || ain || bin || (a == c && b == d) || (a == d && b == c) {
            return Overlap;
        }
        return if shared { SharedEndpoint } else { Disjoint };
    }
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if shared {
        // Non-collinear segments sharing an endpoint meet only there.
        return SharedEndpoint;
    }
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return ProperCrossing;
    }
    if (o1 == 0 && in_open_segment(c, a, b))
        || (o2 == 0 && in_open_segment(d, a, b))
        || (o3 == 0 && in_open_segment(a, c, d))
        || (o4 == 0 && in_open_segment(b, c, d))
    {
        return Touching;
    }
    Disjoint
}

fn boxes_apart(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    const MARGIN: f64 = 1e-7;
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    let (cx, cy) = c.to_f64();
    let (dx, dy) = d.to_f64();
    let apart = |p0: f64, p1: f64, q0: f64, q1: f64| {
        p0.max(p1) + MARGIN < q0.min(q1) || q0.max(q1) + MARGIN < p0.min(p1)
    };
    let finite = [ax, ay, bx, by, cx, cy, dx, dy].iter().all(|v| v.is_finite());
    finite && (apart(ax, bx, cx, dx) || apart(ay, by, cy, dy))
}

/// Intersection point of the lines through `ab` and `cd`; `None` when parallel.
pub fn line_intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<Point> {
    let r = b.sub(a);
    let s = d.sub(c);
    let denom = r.cross(&s);
    if denom.is_zero() {
        return None;
    }
    let t = c.sub(a).cross(&s).checked_div(&denom).ok()?;
    Some(a.add(&r.scale(&t)))
}

/// Half-plane index of a direction: 0 for angles in [0, π), 1 for [π, 2π).
fn half(v: &Point) -> u8 {
    let sy = v.y.signum();
    if sy > 0 || (sy == 0 && v.x.signum() > 0) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order of non-zero direction vectors, starting at +x.
pub fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    let o = Point::origin();
    match orient(&o, u, v) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(QField::int(x), QField::int(y))
    }

    #[test]
    fn relations() {
        use SegmentRelation::*;
        assert_eq!(segment_relation(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)), ProperCrossing);
        assert_eq!(segment_relation(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 3)), Touching);
        assert_eq!(segment_relation(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)), Overlap);
        assert_eq!(segment_relation(&p(0, 0), &p(2, 0), &p(2, 0), &p(3, 0)), SharedEndpoint);
        assert_eq!(segment_relation(&p(0, 0), &p(2, 0), &p(2, 0), &p(1, 0)), Overlap);
        assert_eq!(segment_relation(&p(0, 0), &p(2, 0), &p(3, 0), &p(4, 0)), Disjoint);
        assert_eq!(segment_relation(&p(0, 0), &p(2, 0), &p(2, 0), &p(2, 5)), SharedEndpoint);
    }

    #[test]
    fn intersection_point_exact() {
        let half = QField::ratio(1, 2);
        let x = line_intersection(&p(0, 0), &p(1, 1), &p(0, 1), &p(1, 0)).unwrap();
        assert_eq!(x, Point::new(half.clone(), half));
    }

    #[test]
    fn angular_order() {
        let dirs = [p(1, 0), p(1, 1), p(0, 1), p(-1, 0), p(-1, -1), p(0, -1), p(1, -1)];
        for i in 0..dirs.len() {
            for j in 0..dirs.len() {
                assert_eq!(angle_cmp(&dirs[i], &dirs[j]), i.cmp(&j), "{i} {j}");
            }
        }
    }
}
