//! Half-edge structure over a set of interior-disjoint straight segments.
//!
//! Darts are numbered `2s` (a→b) and `2s+1` (b→a) for segment `s = (a, b)`.
//! Each boundary walk keeps its region on the left. Walks with positive
//! signed area are the outer boundaries of bounded regions; every connected
//! component owns exactly one walk with non-positive area, its outer walk,
//! which becomes a hole of the region that contains the component.

use std::cmp::Ordering;

use crate::geometry::{angle_cmp, orient, Point};
use crate::model::drawing::Dsu;
use crate::numeric::QField;

#[derive(Clone, Debug)]
pub struct Walk {
    pub darts: Vec<usize>,
    /// Twice the signed area enclosed by the walk.
    pub area2: QField,
    pub component: usize,
    pub region: usize,
}

/// A connected piece of the complement. Region 0 is the unbounded one.
#[derive(Clone, Debug, Default)]
pub struct Region {
    /// Bounding walk for bounded regions.
    pub outer: Option<usize>,
    /// Outer walks of the components nested directly inside.
    pub holes: Vec<usize>,
    /// Degree-0 nodes lying directly inside.
    pub isolated: Vec<usize>,
}

impl Region {
    /// All walks on the boundary, outer first.
    pub fn walks(&self) -> impl Iterator<Item = usize> + '_ {
        self.outer.iter().copied().chain(self.holes.iter().copied())
    }

    /// Boundary components, counting isolated nodes.
    pub fn boundary_components(&self) -> usize {
        self.outer.iter().count() + self.holes.len() + self.isolated.len()
    }
}

#[derive(Clone, Debug)]
pub struct PlaneMap {
    pub nodes: Vec<Point>,
    pub segments: Vec<(usize, usize)>,
    /// Outgoing darts per node, counter-clockwise from +x.
    pub out: Vec<Vec<usize>>,
    pub next: Vec<usize>,
    pub walk_of: Vec<usize>,
    pub walks: Vec<Walk>,
    pub regions: Vec<Region>,
    /// Component per node.
    pub component: Vec<usize>,
    pub n_components: usize,
    /// Region per isolated node (`usize::MAX` for nodes with segments).
    pub isolated_region: Vec<usize>,
}

pub fn twin(d: usize) -> usize {
    d ^ 1
}

impl PlaneMap {
    /// Builds the map. Segments must be interior-disjoint and non-degenerate.
    pub fn build(nodes: Vec<Point>, segments: Vec<(usize, usize)>) -> PlaneMap {
        let n = nodes.len();
        let nd = segments.len() * 2;
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, &(a, b)) in segments.iter().enumerate() {
            out[a].push(2 * s);
            out[b].push(2 * s + 1);
        }
        let tail_head = |d: usize| -> (usize, usize) {
            let (a, b) = segments[d / 2];
            if d.is_multiple_of(2) {
                (a, b)
            } else {
                (b, a)
            }
        };
        for (v, list) in out.iter_mut().enumerate() {
            let dirs: Vec<(usize, Point)> = list
                .iter()
                .map(|&d| (d, nodes[tail_head(d).1].sub(&nodes[v])))
                .collect();
            let mut dirs = dirs;
            dirs.sort_by(|a, b| angle_cmp(&a.1, &b.1).then(a.0.cmp(&b.0)));
            *list = dirs.into_iter().map(|(d, _)| d).collect();
        }
        let mut pos = vec![0usize; nd];
        for list in &out {
            for (i, &d) in list.iter().enumerate() {
                pos[d] = i;
            }
        }
        let mut next = vec![0usize; nd];
        for d in 0..nd {
            let t = twin(d);
            let (v, _) = tail_head(t);
            let list = &out[v];
            let k = list.len();
            next[d] = list[(pos[t] + k - 1) % k];
        }

        // Components.
        let mut dsu = Dsu::new(n);
        for &(a, b) in &segments {
            dsu.union(a, b);
        }
        let mut comp_id = vec![usize::MAX; n];
        let mut n_components = 0;
        let mut component = vec![0; n];
        for v in 0..n {
            let r = dsu.find(v);
            if comp_id[r] == usize::MAX {
                comp_id[r] = n_components;
                n_components += 1;
            }
            component[v] = comp_id[r];
        }

        // Walks.
        let mut walk_of = vec![usize::MAX; nd];
        let mut walks = Vec::new();
        for start in 0..nd {
            if walk_of[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                walk_of[d] = id;
                darts.push(d);
                d = next[d];
                if d == start {
                    break;
                }
            }
            let mut area2 = QField::zero();
            for &d in &darts {
                let (a, b) = tail_head(d);
                area2 = area2 + nodes[a].cross(&nodes[b]);
            }
            let comp = component[tail_head(start).0];
            walks.push(Walk { darts, area2, component: comp, region: usize::MAX });
        }

        let mut map = PlaneMap {
            nodes,
            segments,
            out,
            next,
            walk_of,
            walks,
            regions: Vec::new(),
            component,
            n_components,
            isolated_region: vec![usize::MAX; n],
        };
        map.assign_regions();
        map
    }

    pub fn tail(&self, d: usize) -> usize {
        let (a, b) = self.segments[d / 2];
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(twin(d))
    }

    /// Region on the left of dart `d`.
    pub fn left_region(&self, d: usize) -> usize {
        self.walks[self.walk_of[d]].region
    }

    fn assign_regions(&mut self) {
        let mut regions = vec![Region::default()];
        for (w, walk) in self.walks.iter_mut().enumerate() {
            if walk.area2.signum() > 0 {
                walk.region = regions.len();
                regions.push(Region { outer: Some(w), ..Region::default() });
            }
        }
        // Outer walk per component; isolated nodes are their own components.
        let mut outer_walk = vec![usize::MAX; self.n_components];
        for (w, walk) in self.walks.iter().enumerate() {
            if walk.area2.signum() <= 0 {
                debug_assert_eq!(outer_walk[walk.component], usize::MAX);
                outer_walk[walk.component] = w;
            }
        }
        let mut rep = vec![usize::MAX; self.n_components];
        for v in (0..self.nodes.len()).rev() {
            rep[self.component[v]] = v;
        }
        let bounded: Vec<(usize, [f64; 4])> = self
            .walks
            .iter()
            .enumerate()
            .filter(|(_, w)| w.area2.signum() > 0)
            .map(|(i, w)| (i, self.walk_box(w)))
            .collect();
        for c in 0..self.n_components {
            let p = &self.nodes[rep[c]];
            let (px, py) = p.to_f64();
            let mut best: Option<usize> = None;
            for &(w, bx) in &bounded {
                let walk = &self.walks[w];
                if walk.component == c {
                    continue;
                }
                if px < bx[0] - 1e-6 || px > bx[2] + 1e-6 || py < bx[1] - 1e-6 || py > bx[3] + 1e-6 {
                    continue;
                }
                if self.winding(w, p) == 0 {
                    continue;
                }
                best = match best {
                    Some(b) if self.walks[b].area2.cmp(&walk.area2) != Ordering::Greater => Some(b),
                    _ => Some(w),
                };
            }
            let region = best.map(|w| self.walks[w].region).unwrap_or(0);
            if outer_walk[c] != usize::MAX {
                self.walks[outer_walk[c]].region = region;
                regions[region].holes.push(outer_walk[c]);
            } else {
                self.isolated_region[rep[c]] = region;
                regions[region].isolated.push(rep[c]);
            }
        }
        self.regions = regions;
    }

    fn walk_box(&self, w: &Walk) -> [f64; 4] {
        let mut bx = [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY];
        for &d in &w.darts {
            let (x, y) = self.nodes[self.tail(d)].to_f64();
            bx[0] = bx[0].min(x);
            bx[1] = bx[1].min(y);
            bx[2] = bx[2].max(x);
            bx[3] = bx[3].max(y);
        }
        bx
    }

    /// Winding number of walk `w` around `p`; `p` must not lie on the walk.
    pub fn winding(&self, w: usize, p: &Point) -> i32 {
        let mut wn = 0;
        for &d in &self.walks[w].darts {
            let a = &self.nodes[self.tail(d)];
            let b = &self.nodes[self.head(d)];
            if a.y <= p.y {
                if b.y > p.y && orient(a, b, p) > 0 {
                    wn += 1;
                }
            } else if b.y <= p.y && orient(a, b, p) < 0 {
                wn -= 1;
            }
        }
        wn
    }

    /// Region entered from node `v` in direction `dir`. The direction must not
    /// coincide with any segment at `v`.
    pub fn region_at(&self, v: usize, dir: &Point) -> usize {
        let list = &self.out[v];
        if list.is_empty() {
            return self.isolated_region[v];
        }
        // Last dart strictly before `dir` counter-clockwise, cyclically.
        let dirs: Vec<Point> =
            list.iter().map(|&d| self.nodes[self.head(d)].sub(&self.nodes[v])).collect();
        let mut chosen = list[list.len() - 1];
        for (i, dd) in dirs.iter().enumerate() {
            if angle_cmp(dd, dir) == Ordering::Less {
                chosen = list[i];
            }
        }
        self.left_region(chosen)
    }

    /// Node sequence of a walk (tails of its darts).
    pub fn walk_nodes(&self, w: usize) -> Vec<usize> {
        self.walks[w].darts.iter().map(|&d| self.tail(d)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(QField::int(x), QField::int(y))
    }

    #[test]
    fn square_with_isolated_point_and_inner_triangle() {
        let nodes = vec![
            p(0, 0),
            p(10, 0),
            p(10, 10),
            p(0, 10),
            p(5, 5), // isolated
            p(2, 2),
            p(4, 2),
            p(3, 4),
        ];
        let segs = vec![(0, 1), (1, 2), (2, 3), (3, 0), (5, 6), (6, 7), (7, 5)];
        let m = PlaneMap::build(nodes, segs);
        assert_eq!(m.n_components, 3);
        // unbounded, square interior, triangle interior
        assert_eq!(m.regions.len(), 3);
        assert_eq!(m.regions[0].holes.len(), 1);
        let square = m.walks[m.walk_of[0]].region;
        assert_ne!(square, 0);
        assert_eq!(m.regions[square].holes.len(), 1);
        assert_eq!(m.regions[square].isolated, vec![4]);
        assert_eq!(m.regions[square].boundary_components(), 3);
    }

    #[test]
    fn single_segment_has_one_walk() {
        let m = PlaneMap::build(vec![p(0, 0), p(1, 0)], vec![(0, 1)]);
        assert_eq!(m.walks.len(), 1);
        assert_eq!(m.walks[0].darts.len(), 2);
        assert_eq!(m.regions.len(), 1);
        assert_eq!(m.region_at(0, &p(0, 1)), 0);
    }
}
