//! Exact arithmetic over ℚ(√3).

mod approx;
mod qfield;
mod rational;

pub use approx::Approx;
pub use qfield::{qfield_arith, ArithOp, QField, SQRT3_F64};

use crate::error::{Error, Result};

/// Rotate `(x, y)` by the angle whose cosine and sine are `c` and `s`.
///
/// The pair must satisfy `c² + s² = 1` exactly.
pub fn rotate(p: (&QField, &QField), c: &QField, s: &QField) -> Result<(QField, QField)> {
    check_unit(c, s)?;
    Ok(rotate_unchecked(p, c, s))
}

pub(crate) fn check_unit(c: &QField, s: &QField) -> Result<()> {
    if &c.square() + &s.square() != QField::one() {
        return Err(Error::NonUnitRotation { cos: c.to_string(), sin: s.to_string() });
    }
    Ok(())
}

pub(crate) fn rotate_unchecked(p: (&QField, &QField), c: &QField, s: &QField) -> (QField, QField) {
    let (x, y) = p;
    (c * x - s * y, s * x + c * y)
}

/// `(cos, sin)` of `30°·steps`, exact.
pub fn angle_30(steps: i64) -> (QField, QField) {
    let half = QField::ratio(1, 2);
    let r3h = QField::new(0, 1, 1, 2);
    let k = steps.rem_euclid(12);
    let mut out = match k % 3 {
        0 => (QField::one(), QField::zero()),
        1 => (r3h, half),
        _ => (half, r3h),
    };
    // quarter turns: (c, s) -> (-s, c)
    for _ in 0..k / 3 {
        out = (-&out.1, out.0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotate_examples() {
        let (one, zero) = (QField::one(), QField::zero());
        let (x, y) = rotate((&one, &zero), &zero, &one).unwrap();
        assert_eq!((x, y), (QField::zero(), QField::one()));

        let (c, s) = angle_30(1);
        let (x, y) = rotate((&one, &zero), &c, &s).unwrap();
        assert_eq!(x, QField::new(0, 1, 1, 2));
        assert_eq!(y, QField::ratio(1, 2));
        let (x2, y2) = rotate((&x, &y), &c, &s).unwrap();
        assert_eq!(x2, QField::ratio(1, 2));
        assert_eq!(y2, QField::new(0, 1, 1, 2));
    }

    #[test]
    fn rotate_rejects_non_unit() {
        let two = QField::int(2);
        assert!(rotate((&two, &two), &two, &QField::zero()).is_err());
    }

    #[test]
    fn angle_table_is_unit_and_periodic() {
        for k in -12..24 {
            let (c, s) = angle_30(k);
            assert_eq!(&c.square() + &s.square(), QField::one());
            assert_eq!(angle_30(k), angle_30(k + 12));
            assert!((c.to_f64() - (k as f64 * 30f64).to_radians().cos()).abs() < 1e-12);
            assert!((s.to_f64() - (k as f64 * 30f64).to_radians().sin()).abs() < 1e-12);
        }
    }
}
