use serde::Serialize;

use super::flips::flip_repair;
use crate::arrangement::{crossing_report, CrossingReport};
use crate::error::{Error, Result};
use crate::model::Drawing;

pub const DEFAULT_EXACT_LIMIT: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitMode {
    /// Maximum crossing-free edge set (branch and bound).
    Exact,
    /// Lexicographic greedy; maximal only.
    Greedy,
    /// Supplied by the caller.
    Given,
}

/// A crossing-free edge set `E₀` and the remaining edges `E₁`.
#[derive(Clone, Debug, Serialize)]
pub struct PlaneSplit {
    pub e0: Vec<usize>,
    pub e1: Vec<usize>,
    pub mode: SplitMode,
    /// Flips applied by repair.
    pub flips: usize,
    /// `E₁` edges moved back into `E₀` because a flip freed them.
    pub readded: usize,
    #[serde(skip)]
    pub(crate) in_e0: Vec<bool>,
    #[serde(skip)]
    pub(crate) report: CrossingReport,
    /// Per edge: `(other edge, crossing index)`.
    #[serde(skip)]
    pub(crate) partners: Vec<Vec<(usize, usize)>>,
}

impl PlaneSplit {
    pub(crate) fn new(report: CrossingReport, in_e0: Vec<bool>, mode: SplitMode) -> Self {
        let mut partners = vec![Vec::new(); in_e0.len()];
        for (ci, c) in report.crossings.iter().enumerate() {
            partners[c.edges.0].push((c.edges.1, ci));
            partners[c.edges.1].push((c.edges.0, ci));
        }
        let mut s = PlaneSplit {
            e0: Vec::new(),
            e1: Vec::new(),
            mode,
            flips: 0,
            readded: 0,
            in_e0,
            report,
            partners,
        };
        s.refresh();
        s
    }

    pub(crate) fn refresh(&mut self) {
        self.e0 = (0..self.in_e0.len()).filter(|&e| self.in_e0[e]).collect();
        self.e1 = (0..self.in_e0.len()).filter(|&e| !self.in_e0[e]).collect();
    }

    /// Split with a caller-chosen `E₀`; no repair is applied.
    pub fn from_e0(d: &Drawing, e0: &[usize]) -> Result<Self> {
        let mut in_e0 = vec![false; d.e()];
        for &e in e0 {
            *in_e0.get_mut(e).ok_or_else(|| Error::Precondition(format!("no edge {e}")))? = true;
        }
        let split = PlaneSplit::new(crossing_report(d)?, in_e0, SplitMode::Given);
        if !split.is_plane() {
            return Err(Error::Precondition("E₀ is not crossing-free".into()));
        }
        Ok(split)
    }

    pub fn is_e0(&self, e: usize) -> bool {
        self.in_e0[e]
    }

    pub fn crossings(&self) -> &CrossingReport {
        &self.report
    }

    /// `E₀` edges crossing edge `e`, with crossing indices.
    pub(crate) fn e0_partners(&self, e: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partners[e].iter().copied().filter(|&(f, _)| self.in_e0[f])
    }

    /// No two `E₀` edges cross.
    pub fn is_plane(&self) -> bool {
        self.report.crossings.iter().all(|c| !(self.in_e0[c.edges.0] && self.in_e0[c.edges.1]))
    }

    /// Every `E₁` edge crosses some `E₀` edge.
    pub fn is_maximal(&self) -> bool {
        self.e1.iter().all(|&e| self.e0_partners(e).next().is_some())
    }

    /// Move every free `E₁` edge into `E₀`, lowest index first.
    pub(crate) fn maximalize(&mut self) -> usize {
        let mut added = 0;
        for e in 0..self.in_e0.len() {
            if !self.in_e0[e] && self.e0_partners(e).next().is_none() {
                self.in_e0[e] = true;
                added += 1;
            }
        }
        if added > 0 {
            self.refresh();
        }
        added
    }
}

pub fn plane_subgraph(d: &Drawing, mode: SplitMode) -> Result<PlaneSplit> {
    plane_subgraph_with_limit(d, mode, DEFAULT_EXACT_LIMIT)
}

/// Crossing-free subset of the edges, then flip-repaired to remove bad
/// triangles of types 1–3.
pub fn plane_subgraph_with_limit(d: &Drawing, mode: SplitMode, limit: usize) -> Result<PlaneSplit> {
    let report = crossing_report(d)?;
    let m = d.e();
    let mut adj = vec![Vec::new(); m];
    for c in &report.crossings {
        adj[c.edges.0].push(c.edges.1);
        adj[c.edges.1].push(c.edges.0);
    }
    let in_e0 = match mode {
        SplitMode::Given => {
            return Err(Error::Precondition("given splits are built with PlaneSplit::from_e0".into()))
        }
        SplitMode::Greedy => {
            let mut chosen = vec![false; m];
            for e in 0..m {
                if adj[e].iter().all(|&f| !chosen[f]) {
                    chosen[e] = true;
                }
            }
            chosen
        }
        SplitMode::Exact => {
            if m > limit {
                return Err(Error::TooLarge { size: m, limit });
            }
            max_independent_set(&adj)
        }
    };
    let split = PlaneSplit::new(report, in_e0, mode);
    flip_repair(d, split)
}

/// Maximum independent set, solved per connected component.
fn max_independent_set(adj: &[Vec<usize>]) -> Vec<bool> {
    let m = adj.len();
    let mut chosen = vec![false; m];
    let mut seen = vec![false; m];
    for s in 0..m {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let local: std::collections::HashMap<usize, usize> =
            comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let ladj: Vec<Vec<usize>> =
            comp.iter().map(|&v| adj[v].iter().map(|w| local[w]).collect()).collect();
        let mut best = None;
        branch(&ladj, vec![true; comp.len()], comp.len(), Vec::new(), &mut best);
        for v in best.unwrap_or_default() {
            chosen[comp[v]] = true;
        }
    }
    chosen
}

fn kill(adj: &[Vec<usize>], alive: &mut [bool], count: &mut usize, v: usize) {
    if alive[v] {
        alive[v] = false;
        *count -= 1;
    }
    for &w in &adj[v] {
        if alive[w] {
            alive[w] = false;
            *count -= 1;
        }
    }
}

fn branch(
    adj: &[Vec<usize>],
    mut alive: Vec<bool>,
    mut count: usize,
    mut cur: Vec<usize>,
    best: &mut Option<Vec<usize>>,
) {
    // Vertices of degree ≤ 1 are always safe to take.
    while let Some(v) =
        (0..adj.len()).find(|&v| alive[v] && adj[v].iter().filter(|&&w| alive[w]).count() <= 1)
    {
        cur.push(v);
        kill(adj, &mut alive, &mut count, v);
    }
    if count == 0 {
        if best.as_ref().is_none_or(|b| cur.len() > b.len()) {
            *best = Some(cur);
        }
        return;
    }
    if best.as_ref().is_some_and(|b| cur.len() + count <= b.len()) {
        return;
    }
    let v = (0..adj.len()).find(|&v| alive[v]).expect("count > 0");
    let mut with = alive.clone();
    let mut c_with = count;
    kill(adj, &mut with, &mut c_with, v);
    let mut cur_with = cur.clone();
    cur_with.push(v);
    branch(adj, with, c_with, cur_with, best);
    alive[v] = false;
    branch(adj, alive, count - 1, cur, best);
}

/// Drops the lower-indexed edge of every crossing not already resolved.
pub fn matchstick_reduction(d: &Drawing) -> Result<Drawing> {
    let report = crossing_report(d)?;
    let mut removed = vec![false; d.e()];
    for c in &report.crossings {
        let (a, b) = c.edges;
        if !removed[a] && !removed[b] {
            removed[a] = true;
        }
    }
    let edges = (0..d.e()).filter(|&e| !removed[e]).map(|e| d.edges()[e]).collect();
    Ok(d.with_edges(edges))
}
