//! Oriented graphs, the overlap graph of a signed permutation, local
//! complementation and the graph move `gcdr`.
//!
//! Vertices carry `u32` labels. For graphs built from a permutation the
//! label `i` names the pointer `(i, i+1)`. Equality is label-sensitive.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{Pointer, SignedPermutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn new(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, on: bool) {
        if on {
            self.0[i / 64] |= 1 << (i % 64);
        } else {
            self.0[i / 64] &= !(1 << (i % 64));
        }
    }

    fn toggle(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    labels: Vec<u32>,
    oriented: Vec<bool>,
    adj: Vec<BitRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<u32>,
    pub oriented: bool,
}

/// Connected components with at least two vertices, and isolated vertices
/// with their orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub components: Vec<Component>,
    pub isolated: Vec<(u32, bool)>,
}

impl OrientedGraph {
    /// Builds a graph from `(label, oriented)` pairs and undirected edges.
    pub fn new(
        vertices: impl IntoIterator<Item = (u32, bool)>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let mut vs: Vec<(u32, bool)> = vertices.into_iter().collect();
        vs.sort_by_key(|v| v.0);
        vs.dedup_by_key(|v| v.0);
        let n = vs.len();
        let mut g = OrientedGraph {
            labels: vs.iter().map(|v| v.0).collect(),
            oriented: vs.iter().map(|v| v.1).collect(),
            adj: vec![BitRow::new(n); n],
        };
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let i = g.index(a)?;
            let j = g.index(b)?;
            g.adj[i].set(j, true);
            g.adj[j].set(i, true);
        }
        Ok(g)
    }

    /// An edgeless graph on `0` vertices.
    pub fn empty() -> Self {
        OrientedGraph {
            labels: Vec::new(),
            oriented: Vec::new(),
            adj: Vec::new(),
        }
    }

    fn index(&self, label: u32) -> Result<usize> {
        self.labels
            .binary_search(&label)
            .map_err(|_| Error::UnknownVertex(label))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.labels
    }

    pub fn contains(&self, label: u32) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    pub fn is_oriented(&self, label: u32) -> Result<bool> {
        Ok(self.oriented[self.index(label)?])
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        match (self.index(a), self.index(b)) {
            (Ok(i), Ok(j)) => self.adj[i].get(j),
            _ => false,
        }
    }

    pub fn neighbors(&self, label: u32) -> Result<Vec<u32>> {
        let i = self.index(label)?;
        Ok(self.adj[i].ones().map(|j| self.labels[j]).collect())
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..self.labels.len() {
            for j in self.adj[i].ones().filter(|&j| j > i) {
                out.push((self.labels[i], self.labels[j]));
            }
        }
        out
    }

    pub fn oriented_vertices(&self) -> Vec<u32> {
        self.labels
            .iter()
            .zip(&self.oriented)
            .filter(|(_, &o)| o)
            .map(|(&l, _)| l)
            .collect()
    }

    pub fn oriented_count(&self) -> usize {
        self.oriented.iter().filter(|&&o| o).count()
    }

    /// Complements the edges inside `set` and flips the orientation of its
    /// members. Labels not in the graph are ignored.
    pub fn local_complement(&self, set: &[u32]) -> OrientedGraph {
        let mut idx: Vec<usize> = set.iter().filter_map(|&l| self.index(l).ok()).collect();
        idx.sort_unstable();
        idx.dedup();
        let mut g = self.clone();
        g.complement_indices(&idx);
        g
    }

    fn complement_indices(&mut self, idx: &[usize]) {
        for (k, &i) in idx.iter().enumerate() {
            self.oriented[i] = !self.oriented[i];
            for &j in &idx[k + 1..] {
                self.adj[i].toggle(j);
                self.adj[j].toggle(i);
            }
        }
    }

    fn closed_neighborhood_indices(&self, i: usize) -> Vec<usize> {
        let mut idx: Vec<usize> = self.adj[i].ones().collect();
        idx.push(i);
        idx.sort_unstable();
        idx
    }

    /// Neighbors of `label` together with `label` itself.
    pub fn closed_neighborhood(&self, label: u32) -> Result<Vec<u32>> {
        let i = self.index(label)?;
        Ok(self
            .closed_neighborhood_indices(i)
            .into_iter()
            .map(|j| self.labels[j])
            .collect())
    }

    /// Local complement at the closed neighborhood of an oriented vertex.
    pub fn gcdr(&self, v: u32) -> Result<OrientedGraph> {
        let i = self.index(v)?;
        if !self.oriented[i] {
            return Err(Error::UnorientedVertex(v));
        }
        let mut g = self.clone();
        g.complement_indices(&self.closed_neighborhood_indices(i));
        Ok(g)
    }

    /// Like [`OrientedGraph::gcdr`], but an unoriented vertex leaves the
    /// graph unchanged and returns `false`.
    pub fn try_gcdr(&self, v: u32) -> Result<(OrientedGraph, bool)> {
        match self.gcdr(v) {
            Ok(g) => Ok((g, true)),
            Err(Error::UnorientedVertex(_)) => Ok((self.clone(), false)),
            Err(e) => Err(e),
        }
    }

    pub fn component_report(&self) -> ComponentReport {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut report = ComponentReport {
            components: Vec::new(),
            isolated: Vec::new(),
        };
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut members = Vec::new();
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in self.adj[i].ones() {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            if members.len() == 1 {
                report
                    .isolated
                    .push((self.labels[start], self.oriented[start]));
            } else {
                members.sort_unstable();
                report.components.push(Component {
                    oriented: members.iter().any(|&i| self.oriented[i]),
                    vertices: members.into_iter().map(|i| self.labels[i]).collect(),
                });
            }
        }
        report
    }

    pub fn has_unoriented_component(&self) -> bool {
        self.component_report()
            .components
            .iter()
            .any(|c| !c.oriented)
    }

    /// No oriented vertex remains.
    pub fn is_terminal(&self) -> bool {
        !self.oriented.iter().any(|&o| o)
    }

    /// Every vertex is isolated and unoriented.
    pub fn is_total_terminal(&self) -> bool {
        self.is_terminal() && self.adj.iter().all(BitRow::is_empty)
    }

    /// Random graph on labels `1..=n`: each edge present with probability
    /// `edge_prob`, each vertex oriented with probability `oriented_prob`.
    pub fn random<R: Rng + ?Sized>(
        n: usize,
        edge_prob: f64,
        oriented_prob: f64,
        rng: &mut R,
    ) -> Self {
        let mut g = OrientedGraph {
            labels: (1..=n as u32).collect(),
            oriented: (0..n).map(|_| rng.gen_bool(oriented_prob)).collect(),
            adj: vec![BitRow::new(n); n],
        };
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(edge_prob) {
                    g.adj[i].set(j, true);
                    g.adj[j].set(i, true);
                }
            }
        }
        g
    }

    /// Graph-description output: filled nodes are oriented, labels are
    /// pointer pairs, ordering is deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph overlap {\n  node [shape=circle];\n");
        for (&l, &o) in self.labels.iter().zip(&self.oriented) {
            let style = if o {
                ", style=filled, fillcolor=black, fontcolor=white"
            } else {
                ""
            };
            out.push_str(&format!("  v{l} [label=\"{}\"{style}];\n", Pointer(l)));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Line format read back by [`OrientedGraph::from_str`]:
    ///
    /// ```text
    /// vertex 1 oriented
    /// vertex 2 unoriented
    /// edge 1 2
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (&l, &o) in self.labels.iter().zip(&self.oriented) {
            let tag = if o { "oriented" } else { "unoriented" };
            out.push_str(&format!("vertex {l} {tag}\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("edge {a} {b}\n"));
        }
        out
    }
}

/// The oriented overlap graph: one vertex per pointer, an edge when two
/// arcs strictly interleave, a vertex oriented when its two occurrences lie
/// on entries of opposite sign.
pub fn build_overlap_graph(perm: &SignedPermutation) -> OrientedGraph {
    let n = perm.len().saturating_sub(1);
    let pos = perm.positions();
    let arcs: Vec<(usize, usize, bool)> = perm
        .pointers()
        .map(|p| {
            let [a, b] = perm.occurrences_with(p, &pos);
            (a.key(), b.key(), a.entry_sign != b.entry_sign)
        })
        .collect();
    let mut g = OrientedGraph {
        labels: (1..=n as u32).collect(),
        oriented: arcs.iter().map(|a| a.2).collect(),
        adj: vec![BitRow::new(n); n],
    };
    for i in 0..n {
        let (a1, a2, _) = arcs[i];
        for (j, &(b1, b2, _)) in arcs.iter().enumerate().skip(i + 1) {
            if (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2) {
                g.adj[i].set(j, true);
                g.adj[j].set(i, true);
            }
        }
    }
    g
}

impl fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for OrientedGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let err = |message: String| Error::GraphSyntax {
                line: i + 1,
                message,
            };
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| {
                w.parse::<u32>()
                    .map_err(|_| err(format!("`{w}` is not a vertex label")))
            };
            match words.as_slice() {
                ["vertex", l, "oriented"] => vertices.push((num(l)?, true)),
                ["vertex", l, "unoriented"] => vertices.push((num(l)?, false)),
                ["edge", a, b] => edges.push((num(a)?, num(b)?)),
                _ => return Err(err(format!("unrecognized line `{line}`"))),
            }
        }
        let mut labels: Vec<u32> = vertices.iter().map(|v| v.0).collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::GraphSyntax {
                line: 0,
                message: format!("vertex {} declared twice", w[0]),
            });
        }
        OrientedGraph::new(vertices, edges)
    }
}
