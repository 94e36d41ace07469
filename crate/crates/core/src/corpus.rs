//! Deterministic test corpora: every generator at moderate size, plus seeded
//! random k-plane unit distance drawings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{crossing_report, planarize};
use crate::constructions::*;
use crate::error::Result;
use crate::geometry::Point;
use crate::model::{unit_pairs, validate_drawing, Drawing, Edge};
use crate::numeric::{angle_30, QField};

/// Exact unit vectors: Pythagorean triples in all orientations plus 30° steps.
fn unit_directions() -> Vec<(QField, QField)> {
    let mut out = Vec::new();
    for (a, b, c) in [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)] {
        for (x, y) in [(a, b), (b, a)] {
            for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push((QField::ratio(sx * x, c), QField::ratio(sy * y, c)));
            }
        }
    }
    out.extend((0..12).map(angle_30));
    out
}

fn acceptable(d: &Drawing, k: usize) -> bool {
    validate_drawing(d).is_valid()
        && matches!(crossing_report(d), Ok(r) if r.is_k_plane(k))
        && planarize(d).is_ok()
}

/// Connected piece of the unit triangular lattice around the origin.
fn lattice_piece(rng: &mut ChaCha8Rng) -> Drawing {
    let radius: i64 = rng.gen_range(1..=2);
    let mut pts = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            if (a + b).abs() <= radius && ((a, b) == (0, 0) || rng.gen_bool(0.75)) {
                pts.push((a, b));
            }
        }
    }
    // Grow from the origin so the piece is connected.
    let dirs = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    let mut order = vec![(0i64, 0i64)];
    let mut i = 0;
    while i < order.len() {
        let (a, b) = order[i];
        for (da, db) in dirs {
            let q = (a + da, b + db);
            if pts.contains(&q) && !order.contains(&q) {
                order.push(q);
            }
        }
        i += 1;
    }
    let vertices: Vec<Point> = order
        .iter()
        .map(|&(a, b)| Point::new(QField::int(a) + QField::ratio(b, 2), QField::new(0, 1, b, 2)))
        .collect();
    let mut edges = Vec::new();
    for (i, p) in order.iter().enumerate() {
        for (j, q) in order.iter().enumerate().skip(i + 1) {
            if dirs.contains(&(q.0 - p.0, q.1 - p.1)) {
                edges.push((i, j));
            }
        }
    }
    Drawing::new(vertices, edges)
}

fn with_vertex(d: &Drawing, p: Point, anchor: usize) -> Drawing {
    let mut v = d.vertices().to_vec();
    v.push(p);
    let mut e = d.edges().to_vec();
    e.push((anchor, v.len() - 1));
    Drawing::new(v, e)
}

/// A connected, valid, k-plane unit distance drawing determined by `seed`.
pub fn random_drawing(seed: u64, k: usize) -> Drawing {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dirs = unit_directions();
    let mut d = lattice_piece(&mut rng);
    let steps = rng.gen_range(4..=12);
    let mut done = 0;
    for _ in 0..steps * 4 {
        if done == steps {
            break;
        }
        let anchor = rng.gen_range(0..d.n());
        let (c, s) = dirs.choose(&mut rng).expect("nonempty").clone();
        let roll: f64 = rng.gen();
        let candidate = if roll < 0.55 {
            // Pendant unit edge.
            let p = d.vertices()[anchor].add(&Point::new(c, s));
            with_vertex(&d, p, anchor)
        } else if roll < 0.8 {
            // Rotated lattice piece hung from a unit edge.
            let piece = lattice_piece(&mut rng);
            let (rc, rs) = dirs.choose(&mut rng).expect("nonempty").clone();
            let at = d.vertices()[anchor].add(&Point::new(c, s));
            let piece = piece.map_points(|p| p.rotated(&rc, &rs).add(&at));
            let joined = with_vertex(&d, at, anchor);
            let mut parts = crate::model::merge(&[joined, piece]);
            parts.meta_mut().clear();
            parts
        } else {
            // A missing unit chord.
            let pairs: Vec<Edge> = unit_pairs(&d);
            match pairs.choose(&mut rng) {
                Some(&e) => {
                    let mut edges = d.edges().to_vec();
                    edges.push(e);
                    Drawing::new(d.vertices().to_vec(), edges)
                }
                None => continue,
            }
        };
        if acceptable(&candidate, k) {
            d = candidate;
            done += 1;
        }
    }
    d.set_meta("construction", "random");
    d.set_meta("seed", seed.to_string());
    d.set_meta("k", k.to_string());
    d
}

/// `count` random drawings with seeds `seed, seed+1, …`.
pub fn random_corpus(seed: u64, count: usize, k: usize) -> Vec<Drawing> {
    (0..count as u64).map(|i| random_drawing(seed + i, k)).collect()
}

/// Every generator at a spread of sizes (at most three layers, n ≤ 1100),
/// keyed by a file-name stem.
pub fn generated_corpus() -> Result<Vec<(String, Drawing)>> {
    let mut out = vec![
        ("rook".to_string(), rook_block_default()?),
        ("dodecagon".to_string(), dodecagon()?),
    ];
    for k in 1..=3 {
        out.push((format!("grid-k{k}"), dodecagon_grid(k)?));
    }
    for n in [29, 100, 179, 204, 250, 467, 600, 893, 1100] {
        out.push((format!("spiral-n{n}"), spiral_construction(n)?));
    }
    for n in [3, 7, 19, 50, 200] {
        out.push((format!("hexlattice-n{n}"), triangular_hexagon(n)?));
    }
    for n in [6, 14, 40, 100] {
        out.push((format!("shifted-n{n}"), shifted_lattice(n)?));
    }
    Ok(out)
}
