use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

/// A floating midpoint with an absolute error radius.
///
/// Only used to short-circuit exact predicates: when the enclosure excludes
/// zero the sign is certain, otherwise callers fall back to exact arithmetic.
#[derive(Clone, Copy, Debug)]
pub struct Approx {
    pub mid: f64,
    pub rad: f64,
}

const SLACK: f64 = 4.0 * f64::EPSILON;

impl Approx {
    pub fn new(mid: f64, rad: f64) -> Self {
        Approx { mid, rad }
    }

    /// Certain sign, if the enclosure excludes zero.
    pub fn sign(&self) -> Option<i8> {
        if !self.mid.is_finite() || !self.rad.is_finite() {
            return None;
        }
        if self.mid > self.rad {
            Some(1)
        } else if self.mid < -self.rad {
            Some(-1)
        } else {
            None
        }
    }

    pub fn cmp_certain(&self, other: &Approx) -> Option<Ordering> {
        (*self - *other).sign().map(|s| s.cmp(&0))
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, rhs: Approx) -> Approx {
        let mid = self.mid + rhs.mid;
        Approx::new(mid, self.rad + rhs.rad + mid.abs() * SLACK)
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, rhs: Approx) -> Approx {
        let mid = self.mid - rhs.mid;
        Approx::new(mid, self.rad + rhs.rad + mid.abs() * SLACK)
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, rhs: Approx) -> Approx {
        let mid = self.mid * rhs.mid;
        let rad = self.mid.abs() * rhs.rad + rhs.mid.abs() * self.rad + self.rad * rhs.rad;
        Approx::new(mid, rad + mid.abs() * SLACK + f64::MIN_POSITIVE)
    }
}
