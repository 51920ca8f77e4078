//! Loopless multigraphs with positive integer vertex weights.
//!
//! Vertices are dense 0-based ids. Edges are unordered endpoint pairs with
//! stable 0-based ids in declaration order; parallel edges are materialized
//! as individual ids because edge vectors and f-matchings assign values per
//! edge copy. All values are immutable after construction.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write as _;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A set of edge ids, kept sorted for deterministic iteration.
pub type EdgeSet = BTreeSet<EdgeId>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Multigraph {
    /// Builds a multigraph from unordered endpoint pairs. Loops are rejected;
    /// parallel edges are fine and keep distinct ids.
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        id: w,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop { edge: id, vertex: u });
            }
        }
        Ok(Multigraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`, in declaration order. Panics on a bad id.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                id: v,
                count: self.vertex_count,
            });
        }
        Ok(())
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e >= self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                id: e,
                count: self.edges.len(),
            });
        }
        Ok(())
    }

    /// Membership mask for a vertex set given as a slice (duplicates allowed).
    fn vertex_mask(&self, set: &[VertexId]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.vertex_count];
        for &v in set {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    /// `E[U]`: all edges with both ends in `U`.
    pub fn induced_edges(&self, set: &[VertexId]) -> Result<EdgeSet> {
        let mask = self.vertex_mask(set)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| mask[u] && mask[v])
            .map(|(e, _)| e)
            .collect())
    }

    /// `∂U`: all edges with exactly one end in `U`.
    pub fn boundary(&self, set: &[VertexId]) -> Result<EdgeSet> {
        let mask = self.vertex_mask(set)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| mask[u] != mask[v])
            .map(|(e, _)| e)
            .collect())
    }

    /// `E(X, Y)`: all edges with one end in `X` and the other in `Y`.
    /// `X` and `Y` must be disjoint.
    pub fn cut_edges(&self, x: &[VertexId], y: &[VertexId]) -> Result<EdgeSet> {
        let mx = self.vertex_mask(x)?;
        let my = self.vertex_mask(y)?;
        if let Some(v) = (0..self.vertex_count).find(|&v| mx[v] && my[v]) {
            return Err(Error::OverlappingSets { id: v });
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| (mx[u] && my[v]) || (my[u] && mx[v]))
            .map(|(e, _)| e)
            .collect())
    }

    /// Degree of `v`, counting parallel edges with multiplicity.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// True when no two edges share the same unordered endpoint pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&(u, v)| {
            let key = (u.min(v), u.max(v));
            seen.insert(key)
        })
    }
}

/// A loopless multigraph plus a positive integer weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Multigraph,
    f: Vec<u64>,
    names: Vec<String>,
}

impl WeightedGraph {
    /// Pairs a multigraph with weights, using default vertex names `v0, v1, ...`.
    pub fn new(graph: Multigraph, f: Vec<u64>) -> Result<Self> {
        let names = (0..graph.vertex_count()).map(|i| format!("v{i}")).collect();
        Self::with_names(graph, f, names)
    }

    /// As [`WeightedGraph::new`] with explicit vertex names (must be unique).
    pub fn with_names(graph: Multigraph, f: Vec<u64>, names: Vec<String>) -> Result<Self> {
        if f.len() != graph.vertex_count() {
            return Err(Error::WeightLength {
                got: f.len(),
                want: graph.vertex_count(),
            });
        }
        if names.len() != graph.vertex_count() {
            return Err(Error::WeightLength {
                got: names.len(),
                want: graph.vertex_count(),
            });
        }
        if let Some(v) = f.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight { vertex: v });
        }
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(Error::InvalidParameter(
                "vertex names must be unique".to_string(),
            ));
        }
        Ok(WeightedGraph { graph, f, names })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// The weight `f(v)`. Panics on a bad id.
    pub fn f(&self, v: VertexId) -> u64 {
        self.f[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.f
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    /// `f(U) = Σ_{v ∈ U} f(v)`; duplicates in the slice count once.
    pub fn f_sum(&self, set: &[VertexId]) -> Result<u64> {
        let mask = self.graph.vertex_mask(set)?;
        Ok((0..self.vertex_count())
            .filter(|&v| mask[v])
            .map(|v| self.f[v])
            .sum())
    }

    /// `f(V(G))`.
    pub fn f_total(&self) -> u64 {
        self.f.iter().sum()
    }

    /// True when `f(v) = 1` at every vertex.
    pub fn is_unit_weighted(&self) -> bool {
        self.f.iter().all(|&w| w == 1)
    }

    /// Parses the line-oriented graph file format:
    ///
    /// ```text
    /// # comment
    /// vertex <name> <f-weight>
    /// edge <name1> <name2> [multiplicity]
    /// ```
    ///
    /// Edge ids are assigned in file order; a multiplicity `n` line produces
    /// `n` consecutive ids.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
        let mut f: Vec<u64> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let err = |line: usize, msg: String| Error::Parse { line, msg };

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens[0] {
                "vertex" => {
                    if tokens.len() != 3 {
                        return Err(err(line, "expected: vertex <name> <f-weight>".into()));
                    }
                    let name = tokens[1];
                    if index.contains_key(name) {
                        return Err(err(line, format!("duplicate vertex {name:?}")));
                    }
                    let weight: u64 = tokens[2]
                        .parse()
                        .map_err(|_| err(line, format!("bad weight {:?}", tokens[2])))?;
                    if weight == 0 {
                        return Err(err(line, format!("vertex {name:?} has non-positive weight")));
                    }
                    index.insert(name.to_string(), names.len());
                    names.push(name.to_string());
                    f.push(weight);
                }
                "edge" => {
                    if tokens.len() != 3 && tokens.len() != 4 {
                        return Err(err(
                            line,
                            "expected: edge <name1> <name2> [multiplicity]".into(),
                        ));
                    }
                    let resolve = |name: &str| {
                        index
                            .get(name)
                            .copied()
                            .ok_or_else(|| err(line, format!("unknown vertex {name:?}")))
                    };
                    let u = resolve(tokens[1])?;
                    let v = resolve(tokens[2])?;
                    if u == v {
                        return Err(err(
                            line,
                            format!("loop edge at vertex {:?} is not allowed", tokens[1]),
                        ));
                    }
                    let mult: usize = if tokens.len() == 4 {
                        let m = tokens[3]
                            .parse()
                            .map_err(|_| err(line, format!("bad multiplicity {:?}", tokens[3])))?;
                        if m == 0 {
                            return Err(err(line, "multiplicity must be at least 1".into()));
                        }
                        m
                    } else {
                        1
                    };
                    for _ in 0..mult {
                        edges.push((u, v));
                    }
                }
                other => {
                    return Err(err(line, format!("unknown directive {other:?}")));
                }
            }
        }

        if names.is_empty() {
            return Err(err(0, "graph must have at least one vertex".into()));
        }
        let graph = Multigraph::new(names.len(), edges)?;
        WeightedGraph::with_names(graph, f, names)
    }

    /// Canonical text form: vertex lines in id order, then edge lines with
    /// runs of consecutive identical endpoint pairs folded into one
    /// multiplicity. Parsing the output reproduces this graph exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            writeln!(out, "vertex {} {}", self.names[v], self.f[v]).unwrap();
        }
        let edges = self.graph.edges();
        let mut i = 0;
        while i < edges.len() {
            let (u, v) = edges[i];
            let mut j = i + 1;
            while j < edges.len() && edges[j] == (u, v) {
                j += 1;
            }
            let mult = j - i;
            if mult == 1 {
                writeln!(out, "edge {} {}", self.names[u], self.names[v]).unwrap();
            } else {
                writeln!(out, "edge {} {} {}", self.names[u], self.names[v], mult).unwrap();
            }
            i = j;
        }
        out
    }
}
