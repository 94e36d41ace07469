use std::collections::{BTreeMap, HashMap};

use crate::geometry::Point;

pub type Edge = (usize, usize);

/// Straight-line drawing: exact vertex coordinates plus edges as index pairs.
///
/// Edges are kept with `i < j` and sorted lexicographically, so an edge index
/// is stable for a given edge set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Drawing {
    vertices: Vec<Point>,
    edges: Vec<Edge>,
    meta: BTreeMap<String, String>,
}

pub const META_DASHED: &str = "dashed";

impl Drawing {
    /// Orients every edge as `i < j` and sorts the edge list. Duplicates are
    /// kept so that validation can report them.
    pub fn new(vertices: Vec<Point>, edges: Vec<Edge>) -> Self {
        let mut edges: Vec<Edge> =
            edges.into_iter().map(|(i, j)| if i <= j { (i, j) } else { (j, i) }).collect();
        edges.sort_unstable();
        Drawing { vertices, edges, meta: BTreeMap::new() }
    }

    /// Keeps the given order verbatim.
    pub(crate) fn from_raw(vertices: Vec<Point>, edges: Vec<Edge>, meta: BTreeMap<String, String>) -> Self {
        Drawing { vertices, edges, meta }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn meta(&self) -> &BTreeMap<String, String> {
        &self.meta
    }

    pub fn meta_mut(&mut self) -> &mut BTreeMap<String, String> {
        &mut self.meta
    }

    pub fn set_meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.insert(key.to_string(), value.into());
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_points(&self, idx: usize) -> (&Point, &Point) {
        let (i, j) = self.edges[idx];
        (&self.vertices[i], &self.vertices[j])
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        let e = if e.0 <= e.1 { e } else { (e.1, e.0) };
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edge_index(e).is_some()
    }

    /// Edge pairs listed under the `dashed` meta key.
    pub fn dashed_pairs(&self) -> Vec<Edge> {
        self.meta
            .get(META_DASHED)
            .map(|s| {
                s.split(',')
                    .filter_map(|t| t.trim().parse::<usize>().ok())
                    .filter_map(|i| self.edges.get(i).copied())
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Record `pairs` (those present) under the `dashed` key as edge indices.
    pub fn mark_dashed(&mut self, pairs: &[Edge]) {
        let mut idx: Vec<usize> = pairs.iter().filter_map(|&e| self.edge_index(e)).collect();
        idx.sort_unstable();
        idx.dedup();
        if idx.is_empty() {
            self.meta.remove(META_DASHED);
        } else {
            let s: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            self.meta.insert(META_DASHED.to_string(), s.join(","));
        }
    }

    /// Same vertices, edges replaced; `dashed` follows the surviving pairs.
    pub fn with_edges(&self, edges: Vec<Edge>) -> Drawing {
        let dashed = self.dashed_pairs();
        let mut d = Drawing::new(self.vertices.clone(), edges);
        d.meta = self.meta.clone();
        d.mark_dashed(&dashed);
        d
    }

    /// Sub-drawing induced by a vertex subset, renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> Drawing {
        let mut map = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let verts = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(i, j)| map[i] != usize::MAX && map[j] != usize::MAX)
            .map(|&(i, j)| (map[i], map[j]))
            .collect();
        let dashed: Vec<Edge> = self
            .dashed_pairs()
            .into_iter()
            .filter(|&(i, j)| map[i] != usize::MAX && map[j] != usize::MAX)
            .map(|(i, j)| (map[i].min(map[j]), map[i].max(map[j])))
            .collect();
        let mut d = Drawing::new(verts, edges);
        d.meta = self.meta.clone();
        d.mark_dashed(&dashed);
        d
    }

    /// Apply `f` to every vertex.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Drawing {
        Drawing {
            vertices: self.vertices.iter().map(f).collect(),
            edges: self.edges.clone(),
            meta: self.meta.clone(),
        }
    }

    pub fn translated(&self, v: &Point) -> Drawing {
        self.map_points(|p| p.add(v))
    }

    /// Adjacency lists, neighbours in increasing order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Number of connected components of the abstract graph.
    pub fn graph_components(&self) -> usize {
        let mut dsu = Dsu::new(self.n());
        for &(i, j) in &self.edges {
            dsu.union(i, j);
        }
        (0..self.n()).filter(|&i| dsu.find(i) == i).count()
    }
}

/// Union of drawings with exact-coordinate vertex identification.
///
/// Vertex order is first occurrence; duplicate edges collapse.
pub fn merge(parts: &[Drawing]) -> Drawing {
    let mut index: HashMap<Point, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut dashed = Vec::new();
    for part in parts {
        let map: Vec<usize> = part
            .vertices
            .iter()
            .map(|p| {
                *index.entry(p.clone()).or_insert_with(|| {
                    vertices.push(p.clone());
                    vertices.len() - 1
                })
            })
            .collect();
        for &(i, j) in &part.edges {
            let (a, b) = (map[i], map[j]);
            edges.push((a.min(b), a.max(b)));
        }
        for (i, j) in part.dashed_pairs() {
            let (a, b) = (map[i], map[j]);
            dashed.push((a.min(b), a.max(b)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let mut d = Drawing::new(vertices, edges);
    d.mark_dashed(&dashed);
    d
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
