use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::approx::Approx;
use super::rational::Rat;
use crate::error::{Error, Result};

pub const SQRT3_F64: f64 = 1.732_050_807_568_877_2;

/// An exact element `a + b·√3` of the real quadratic field ℚ(√3).
///
/// Both rational parts are kept reduced, so two values are equal exactly when
/// their representations are equal. This is what lets drawings deduplicate
/// vertices by coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QField {
    a: Rat,
    b: Rat,
}

impl QField {
    pub fn zero() -> Self {
        QField { a: Rat::ZERO, b: Rat::ZERO }
    }

    pub fn one() -> Self {
        QField { a: Rat::ONE, b: Rat::ZERO }
    }

    /// √3
    pub fn sqrt3() -> Self {
        QField { a: Rat::ZERO, b: Rat::ONE }
    }

    pub fn int(v: i64) -> Self {
        QField { a: Rat::int(v), b: Rat::ZERO }
    }

    /// The rational `num/den`. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        QField { a: &Rat::int(num) / &Rat::int(den), b: Rat::ZERO }
    }

    /// `a_num/a_den + (b_num/b_den)·√3` from small integers. Panics on a zero denominator.
    pub fn new(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        assert!(a_den != 0 && b_den != 0, "zero denominator");
        QField {
            a: &Rat::int(a_num) / &Rat::int(a_den),
            b: &Rat::int(b_num) / &Rat::int(b_den),
        }
    }

    /// Build from arbitrary-precision parts, reducing each fraction.
    pub fn from_parts(a_num: BigInt, a_den: BigInt, b_num: BigInt, b_den: BigInt) -> Result<Self> {
        if a_den.is_zero() || b_den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QField {
            a: Rat::from_bigints(a_num, a_den),
            b: Rat::from_bigints(b_num, b_den),
        })
    }

    /// Canonical parts `[a_num, a_den, b_num, b_den]`.
    pub fn parts(&self) -> [BigInt; 4] {
        [self.a.numer(), self.a.denom(), self.b.numer(), self.b.denom()]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the √3 part vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of `a + b√3`.
    pub fn signum(&self) -> i8 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // Opposite signs: compare a² with 3b².
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b;
        let b2x3 = &b2 * &Rat::int(3);
        match a2.cmp(&b2x3) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> QField {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a − b√3`.
    pub fn conjugate(&self) -> QField {
        QField { a: self.a.clone(), b: -&self.b }
    }

    /// `a² − 3b²`, the (rational) field norm.
    fn norm(&self) -> Rat {
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b;
        &a2 - &(&b2 * &Rat::int(3))
    }

    pub fn recip(&self) -> Result<QField> {
        let n = self.norm();
        let inv = n.recip().ok_or(Error::DivisionByZero)?;
        let c = self.conjugate();
        Ok(QField { a: &c.a * &inv, b: &c.b * &inv })
    }

    pub fn checked_div(&self, rhs: &QField) -> Result<QField> {
        Ok(self * &rhs.recip()?)
    }

    /// Multiply by a rational `num/den`.
    pub fn scale(&self, num: i64, den: i64) -> QField {
        let r = &Rat::int(num) / &Rat::int(den);
        QField { a: &self.a * &r, b: &self.b * &r }
    }

    pub fn square(&self) -> QField {
        self * self
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * SQRT3_F64
    }

    /// Floating enclosure of the value, used by predicate filters.
    pub fn approx(&self) -> Approx {
        let a = self.a.to_f64();
        let b = self.b.to_f64();
        let mid = a + b * SQRT3_F64;
        let mag = a.abs() + (b * SQRT3_F64).abs();
        Approx::new(mid, mag * 8.0 * f64::EPSILON + f64::MIN_POSITIVE)
    }

    /// `⌊value⌋` computed exactly.
    pub fn floor(&self) -> BigInt {
        // Start from the float guess and correct by exact comparison.
        let guess = self.to_f64().floor();
        let mut k = if guess.is_finite() && guess.abs() < 1e15 {
            BigInt::from(guess as i64)
        } else {
            self.a.floor() + (self.b.clone().abs().floor() * 2)
        };
        loop {
            let kq = QField::from_bigint(&k);
            if (self - &kq).signum() < 0 {
                k -= 1;
                continue;
            }
            let k1 = QField::from_bigint(&(&k + 1));
            if (self - &k1).signum() >= 0 {
                k += 1;
                continue;
            }
            return k;
        }
    }

    pub fn from_bigint(v: &BigInt) -> QField {
        QField { a: Rat::from_bigints(v.clone(), BigInt::from(1)), b: Rat::ZERO }
    }
}

impl Ord for QField {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (x, y) = (self.approx(), other.approx());
        if let Some(o) = x.cmp_certain(&y) {
            return o;
        }
        (self - other).signum().cmp(&0)
    }
}

impl PartialOrd for QField {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a QField> for &'a QField {
    type Output = QField;
    fn add(self, rhs: &'a QField) -> QField {
        QField { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a QField> for &'a QField {
    type Output = QField;
    fn sub(self, rhs: &'a QField) -> QField {
        QField { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a QField> for &'a QField {
    type Output = QField;
    fn mul(self, rhs: &'a QField) -> QField {
        // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
        if self.b.is_zero() && rhs.b.is_zero() {
            return QField { a: &self.a * &rhs.a, b: Rat::ZERO };
        }
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        QField { a: &ac + &(&bd * &Rat::int(3)), b: &ad + &bc }
    }
}

impl Neg for &QField {
    type Output = QField;
    fn neg(self) -> QField {
        QField { a: -&self.a, b: -&self.b }
    }
}

impl Neg for QField {
    type Output = QField;
    fn neg(self) -> QField {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QField> for QField {
            type Output = QField;
            fn $m(self, rhs: QField) -> QField {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QField> for QField {
            type Output = QField;
            fn $m(self, rhs: &'a QField) -> QField {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for QField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√3", self.b),
            (false, false) => write!(f, "{}+{}√3", self.a, self.b),
        }
    }
}

/// Which of the four field operations to apply in [`qfield_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn qfield_arith(x: &QField, y: &QField, op: ArithOp) -> Result<QField> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}


fn parse_rational(s: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse { context: s.to_string(), message: "expected p or p/q".into() };
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    Ok((p, q))
}

/// Accepts `a`, `a,b` (meaning `a + b√3`) and the display form `a+b√3`
/// (`sqrt3` also allowed), where `a` and `b` are `p` or `p/q`.
impl std::str::FromStr for QField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.replace("sqrt3", "√3").replace('*', "");
        let (a, b) = if let Some((a, b)) = s.split_once(',') {
            (a.to_string(), b.to_string())
        } else if let Some(body) = s.strip_suffix("√3") {
            match body.char_indices().skip(1).find(|&(_, c)| c == '+') {
                Some((i, _)) => (body[..i].to_string(), body[i + 1..].to_string()),
                None => ("0".to_string(), body.to_string()),
            }
        } else {
            (s.clone(), "0".to_string())
        };
        let b = match b.as_str() {
            "" | "+" => "1".to_string(),
            "-" => "-1".to_string(),
            _ => b,
        };
        let (an, ad) = parse_rational(&a)?;
        let (bn, bd) = parse_rational(&b)?;
        QField::from_parts(an, ad, bn, bd)
    }
}
