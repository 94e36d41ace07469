//! Uniform grid over float bounding boxes, used to enumerate candidate pairs.
//!
//! The grid only prunes; every candidate is still decided by exact predicates.

use std::collections::HashMap;

const MARGIN: f64 = 1e-6;

pub(crate) struct GridIndex {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<usize>>,
    boxes: Vec<[f64; 4]>,
}

impl GridIndex {
    pub(crate) fn new(cell: f64) -> Self {
        GridIndex { cell, buckets: HashMap::new(), boxes: Vec::new() }
    }

    fn range(&self, bx: &[f64; 4]) -> (i64, i64, i64, i64) {
        let f = |v: f64| (v / self.cell).floor() as i64;
        (f(bx[0] - MARGIN), f(bx[2] + MARGIN), f(bx[1] - MARGIN), f(bx[3] + MARGIN))
    }

    /// Insert an item with box `[xmin, ymin, xmax, ymax]`; ids are assigned in order.
    pub(crate) fn insert(&mut self, bx: [f64; 4]) -> usize {
        let id = self.boxes.len();
        let (x0, x1, y0, y1) = self.range(&bx);
        for gx in x0..=x1 {
            for gy in y0..=y1 {
                self.buckets.entry((gx, gy)).or_default().push(id);
            }
        }
        self.boxes.push(bx);
        id
    }

    /// Ids whose boxes may overlap `bx`, sorted and unique.
    pub(crate) fn query(&self, bx: &[f64; 4]) -> Vec<usize> {
        let (x0, x1, y0, y1) = self.range(bx);
        let mut out = Vec::new();
        for gx in x0..=x1 {
            for gy in y0..=y1 {
                if let Some(ids) = self.buckets.get(&(gx, gy)) {
                    out.extend(ids.iter().copied().filter(|&i| overlaps(&self.boxes[i], bx)));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All pairs `(i, j)`, `i < j`, whose boxes may overlap, sorted.
    pub(crate) fn candidate_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for ids in self.buckets.values() {
            for (a, &i) in ids.iter().enumerate() {
                for &j in &ids[a + 1..] {
                    let (i, j) = if i < j { (i, j) } else { (j, i) };
                    if overlaps(&self.boxes[i], &self.boxes[j]) {
                        out.push((i, j));
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn overlaps(a: &[f64; 4], b: &[f64; 4]) -> bool {
    a[0] <= b[2] + MARGIN && b[0] <= a[2] + MARGIN && a[1] <= b[3] + MARGIN && b[1] <= a[3] + MARGIN
}

pub(crate) fn segment_box(p: (f64, f64), q: (f64, f64)) -> [f64; 4] {
    [p.0.min(q.0), p.1.min(q.1), p.0.max(q.0), p.1.max(q.1)]
}
