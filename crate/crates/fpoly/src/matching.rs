//! f-matchings: edge sets meeting every vertex `v` at most `f(v)` times.
//!
//! Enumeration is depth-first over edge ids with per-vertex residual
//! capacities, pruning as soon as a capacity hits zero; the output order is
//! ascending by edge-id bitmask so downstream reports are byte-stable.

use crate::graph::{EdgeSet, WeightedGraph};
use crate::polytope::EdgePoint;
use crate::rat::Rat;
use crate::{Caps, Error, Result};
use num::traits::{One, Zero};

/// An edge set `M` with `|M ∩ ∂v| ≤ f(v)` at every vertex of its graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FMatching {
    edges: EdgeSet,
}

impl FMatching {
    /// Validates the degree caps and wraps the set.
    pub fn new(g: &WeightedGraph, edges: EdgeSet) -> Result<Self> {
        if is_f_matching(g, &edges)? {
            Ok(FMatching { edges })
        } else {
            Err(Error::InvalidParameter(
                "edge set exceeds a vertex weight and is not an f-matching".to_string(),
            ))
        }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }
}

/// True iff every vertex meets its cap: `|M ∩ ∂v| ≤ f(v)`.
pub fn is_f_matching(g: &WeightedGraph, edges: &EdgeSet) -> Result<bool> {
    let mut load = vec![0u64; g.vertex_count()];
    for &e in edges {
        g.graph().check_edge(e)?;
        let (u, v) = g.graph().endpoints(e);
        load[u] += 1;
        load[v] += 1;
    }
    Ok((0..g.vertex_count()).all(|v| load[v] <= g.f(v)))
}

fn check_edge_cap(g: &WeightedGraph, caps: Caps) -> Result<()> {
    let m = g.edge_count();
    if m > caps.max_edges {
        return Err(Error::EdgeCapExceeded {
            required: m,
            cap: caps.max_edges,
        });
    }
    Ok(())
}

/// All f-matchings of `g`, including the empty one, in ascending bitmask
/// order of edge ids.
pub fn enumerate_all(g: &WeightedGraph, caps: Caps) -> Result<Vec<FMatching>> {
    check_edge_cap(g, caps)?;
    let mut residual: Vec<u64> = g.weights().to_vec();
    let mut out = Vec::new();
    let mut current = EdgeSet::new();
    descend(g, g.edge_count(), &mut residual, &mut current, &mut out);
    Ok(out)
}

/// Recursing from the highest edge id down, excluded branch first, emits
/// subsets in ascending bitmask order.
fn descend(
    g: &WeightedGraph,
    depth: usize,
    residual: &mut Vec<u64>,
    current: &mut EdgeSet,
    out: &mut Vec<FMatching>,
) {
    if depth == 0 {
        out.push(FMatching {
            edges: current.clone(),
        });
        return;
    }
    let e = depth - 1;
    descend(g, e, residual, current, out);
    let (u, v) = g.graph().endpoints(e);
    if residual[u] > 0 && residual[v] > 0 {
        residual[u] -= 1;
        residual[v] -= 1;
        current.insert(e);
        descend(g, e, residual, current, out);
        current.remove(&e);
        residual[u] += 1;
        residual[v] += 1;
    }
}

/// Exactly the inclusion-maximal f-matchings, in the enumeration order of
/// [`enumerate_all`].
pub fn enumerate_maximal(g: &WeightedGraph, caps: Caps) -> Result<Vec<FMatching>> {
    let all = enumerate_all(g, caps)?;
    Ok(all
        .into_iter()
        .filter(|m| is_maximal(g, m.edges()))
        .collect())
}

fn is_maximal(g: &WeightedGraph, edges: &EdgeSet) -> bool {
    let mut residual: Vec<u64> = g.weights().to_vec();
    for &e in edges {
        let (u, v) = g.graph().endpoints(e);
        residual[u] -= 1;
        residual[v] -= 1;
    }
    (0..g.edge_count()).all(|e| {
        if edges.contains(&e) {
            return true;
        }
        let (u, v) = g.graph().endpoints(e);
        residual[u] == 0 || residual[v] == 0
    })
}

/// Extends `edges` to an inclusion-maximal f-matching by adding feasible
/// edges in ascending id order. The input must already be an f-matching.
pub fn extend_to_maximal(g: &WeightedGraph, edges: &EdgeSet) -> EdgeSet {
    let mut residual: Vec<u64> = g.weights().to_vec();
    for &e in edges {
        let (u, v) = g.graph().endpoints(e);
        residual[u] -= 1;
        residual[v] -= 1;
    }
    let mut out = edges.clone();
    for e in 0..g.edge_count() {
        if out.contains(&e) {
            continue;
        }
        let (u, v) = g.graph().endpoints(e);
        if residual[u] > 0 && residual[v] > 0 {
            residual[u] -= 1;
            residual[v] -= 1;
            out.insert(e);
        }
    }
    out
}

/// The 0/1 characteristic vector of `m` over edge ids.
pub fn indicator(g: &WeightedGraph, m: &FMatching) -> EdgePoint {
    let values = (0..g.edge_count())
        .map(|e| if m.contains(e) { Rat::one() } else { Rat::zero() })
        .collect();
    EdgePoint::new(values)
}
