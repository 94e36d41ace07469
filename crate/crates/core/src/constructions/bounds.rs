use num_integer::Roots;
use serde::Serialize;

use super::{spiral_construction, triangular_hexagon};
use crate::error::{Error, Result};

fn ceil_sqrt(m: u128) -> u128 {
    let s = m.sqrt();
    if s * s == m {
        s
    } else {
        s + 1
    }
}

/// Maximum matchstick edge count `⌊3n − √(12n−3)⌋`, exact. `n ≥ 1`.
pub fn u0(n: u64) -> i64 {
    3 * n as i64 - ceil_sqrt(12 * n as u128 - 3) as i64
}

/// The other floor placement, `3n − ⌊√(12n−3)⌋`. Agrees with [`u0`] exactly
/// when `12n−3` is a perfect square and is one larger otherwise.
pub fn u0_printed(n: u64) -> i64 {
    3 * n as i64 - (12 * n as u128 - 3).sqrt() as i64
}

/// `⌊3n − √(192n/23 − 23088/529) − 13683/23⌋`, evaluated on integers.
///
/// The radical equals `√(4416n − 23088)/23`, so with `T = ⌈√(4416n − 23088)⌉`
/// the value is `3n − ⌈(T + 13683)/23⌉`. Defined for `n ≥ 6`.
pub fn theorem3_floor(n: u64) -> Option<i64> {
    let m = (4416 * n as u128).checked_sub(23088)?;
    let t = ceil_sqrt(m) as i64;
    Some(3 * n as i64 - (t + 13683 + 22) / 23)
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundTable {
    pub n: u64,
    pub u0: i64,
    pub u0_printed: i64,
    /// `3n − √n/100`.
    pub u1_upper: f64,
    /// `4n − 8`.
    pub u2_upper: i64,
    /// Maximum 1-planar unit distance edges, `4n − 8`.
    pub e1: i64,
    /// `5n − 10`.
    pub e2_upper: i64,
    pub theorem3_floor: Option<i64>,
    pub hexlattice_edges: usize,
    pub spiral_edges: Option<usize>,
    /// `spiral_edges − u0`.
    pub margin: Option<i64>,
}

pub fn bound_table(n: u64) -> Result<BoundTable> {
    if n < 3 {
        return Err(Error::Precondition("bound table needs n ≥ 3".into()));
    }
    let u = u0(n);
    let spiral_edges = if n >= 29 { Some(spiral_construction(n as usize)?.e()) } else { None };
    let ni = n as i64;
    Ok(BoundTable {
        n,
        u0: u,
        u0_printed: u0_printed(n),
        u1_upper: 3.0 * n as f64 - (n as f64).sqrt() / 100.0,
        u2_upper: 4 * ni - 8,
        e1: 4 * ni - 8,
        e2_upper: 5 * ni - 10,
        theorem3_floor: theorem3_floor(n),
        hexlattice_edges: triangular_hexagon(n as usize)?.e(),
        spiral_edges,
        margin: spiral_edges.map(|e| e as i64 - u),
    })
}
