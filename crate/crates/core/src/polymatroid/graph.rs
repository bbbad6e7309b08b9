//! Simple graphs, their edge ideals, and complete multipartite recognition.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Simple graph on vertices `0..n`; edges stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Wire form with 1-based vertices: `{"n":5, "edges":[[1,3],[1,4]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {}", a + 1)));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({}, {}) out of range for n = {n}",
                    a + 1,
                    b + 1
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        if json.edges.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidArgument("vertices are 1-based".into()));
        }
        Self::new(json.n, json.edges.iter().map(|e| (e[0] - 1, e[1] - 1)))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }

    /// Graph with the given edge bitmask over the pairs `(i, j)`, `i < j`, in
    /// lexicographic order. Used for exhaustive enumeration.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut edges = BTreeSet::new();
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.insert((i, j));
                }
                bit += 1;
            }
        }
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Complete multipartite graph with consecutive interval parts of the
    /// given sizes.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidArgument("empty part".into()));
        }
        let n = sizes.iter().sum();
        let mut part = Vec::with_capacity(n);
        for (p, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat(p).take(s));
        }
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| part[i] != part[j]);
        Self::new(n, edges.collect::<Vec<_>>())
    }

    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::squarefree(self.n, &[a, b]))
            .collect();
        MonomialIdeal::new(self.n, gens).expect("edges are in range")
    }

    /// The complement is a disjoint union of cliques, i.e. non-adjacency is
    /// an equivalence relation on the vertices.
    pub fn is_complete_multipartite(&self) -> bool {
        self.parts().is_some()
    }

    /// Vertex classes of the non-adjacency relation, if it is transitive.
    pub fn parts(&self) -> Option<Vec<Vec<usize>>> {
        let mut assigned = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if assigned[v] != usize::MAX {
                continue;
            }
            let class: Vec<usize> = (0..self.n)
                .filter(|&w| w == v || !self.adjacent(v, w))
                .collect();
            for &w in &class {
                if assigned[w] != usize::MAX {
                    return None;
                }
                assigned[w] = parts.len();
            }
            for (x, &a) in class.iter().enumerate() {
                for &b in &class[x + 1..] {
                    if self.adjacent(a, b) {
                        return None;
                    }
                }
            }
            parts.push(class);
        }
        // every cross-class pair must be an edge
        for a in 0..self.n {
            for b in a + 1..self.n {
                if assigned[a] != assigned[b] && !self.adjacent(a, b) {
                    return None;
                }
            }
        }
        Some(parts)
    }

    /// Part sizes when the graph is complete multipartite with parts that are
    /// consecutive vertex intervals.
    pub fn interval_parts(&self) -> Option<Vec<usize>> {
        let parts = self.parts()?;
        let mut next = 0;
        let mut sizes = Vec::with_capacity(parts.len());
        for p in &parts {
            if p.iter().enumerate().any(|(k, &v)| v != next + k) {
                return None;
            }
            next += p.len();
            sizes.push(p.len());
        }
        Some(sizes)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        (0..self.n).filter(|&v| deg[v] == 0).collect()
    }

    /// Induced subgraph on the non-isolated vertices, relabelled in order.
    pub fn without_isolated_vertices(&self) -> SimpleGraph {
        let isolated: BTreeSet<usize> = self.isolated_vertices().into_iter().collect();
        let keep: Vec<usize> = (0..self.n).filter(|v| !isolated.contains(v)).collect();
        let mut index = vec![usize::MAX; self.n];
        for (k, &v) in keep.iter().enumerate() {
            index[v] = k;
        }
        SimpleGraph {
            n: keep.len(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (index[a], index[b]))
                .collect(),
        }
    }
}
