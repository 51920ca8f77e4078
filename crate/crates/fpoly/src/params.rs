//! The six graph parameters of a weighted graph.
//!
//! * `Δ*_f = max_v d(v)/f(v)` — fractional maximum f-degree; `Δ_f` its ceiling.
//! * `w*_f = max_{U, |U|≥2} |E[U]| / ⌊f(U)/2⌋` — fractional f-density (0 on
//!   graphs with fewer than two vertices); `w_f` its ceiling. Maximizing over
//!   induced subgraphs suffices: adding edges only raises the numerator while
//!   the denominator depends on the vertex set alone.
//! * `Γ*_f = max (|E[U]|+|F|) / ⌊(f(U)+|F|)/2⌋` over `U ⊆ V`, `F ⊆ ∂U` with
//!   `f(U)+|F| ≥ 2` (0 on edgeless graphs); `Γ_f` its ceiling. For fixed `U`
//!   the objective depends on `F` only through `|F|`, so the scan iterates
//!   the size `s = |F|` from 0 to `|∂U|` instead of actual boundary subsets.
//!
//! All scans are exhaustive over vertex subsets, guarded by the vertex cap.
//! Ties break toward the lexicographically smallest witness (`U` as a sorted
//! id list, then the smallest `s`) so reports are reproducible.

use crate::graph::{VertexId, WeightedGraph};
use crate::rat::{ceil_u64, rat, Rat};
use crate::{Caps, Error, Result};
use num::traits::Zero;

/// Exact values of all six parameters plus the witnesses achieving the
/// fractional maxima. Witnesses are `None` only where the defining maximum
/// ranges over an empty candidate set and the value is 0 by convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterReport {
    pub delta_star: Rat,
    pub delta: u64,
    pub density_star: Rat,
    pub density: u64,
    pub gamma_star: Rat,
    pub gamma: u64,
    pub density_witness: Option<Vec<VertexId>>,
    pub gamma_witness: Option<GammaWitness>,
}

fn check_vertex_cap(g: &WeightedGraph, caps: Caps) -> Result<()> {
    let n = g.vertex_count();
    let cap = caps.max_vertices.min(63);
    if n > cap {
        return Err(Error::VertexCapExceeded {
            required: n,
            cap,
        });
    }
    Ok(())
}

/// `Δ*_f = max_v d(v)/f(v)`.
pub fn delta_star(g: &WeightedGraph) -> Rat {
    let degrees = g.graph().degrees();
    (0..g.vertex_count())
        .map(|v| rat(degrees[v] as u64, g.f(v)))
        .max()
        .expect("graphs have at least one vertex")
}

/// `Δ_f = ⌈Δ*_f⌉`.
pub fn delta(g: &WeightedGraph) -> u64 {
    ceil_u64(&delta_star(g))
}

fn subset_vertices(n: usize, mask: u64) -> Vec<VertexId> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

/// Candidate comparison: keep the larger value; on ties, the smaller witness.
fn consider<W: Ord>(best: &mut Option<(Rat, W)>, value: Rat, witness: W) {
    match best {
        None => *best = Some((value, witness)),
        Some((bv, bw)) => {
            if value > *bv || (value == *bv && witness < *bw) {
                *best = Some((value, witness));
            }
        }
    }
}

fn density_scan(g: &WeightedGraph, caps: Caps) -> Result<Option<(Rat, Vec<VertexId>)>> {
    check_vertex_cap(g, caps)?;
    let n = g.vertex_count();
    if n < 2 {
        return Ok(None);
    }
    let edge_masks: Vec<u64> = g
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| (1 << u) | (1 << v))
        .collect();
    let mut best: Option<(Rat, Vec<VertexId>)> = None;
    for mask in 1u64..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let inside = edge_masks.iter().filter(|&&em| em & mask == em).count();
        let vertices = subset_vertices(n, mask);
        let f_u: u64 = vertices.iter().map(|&v| g.f(v)).sum();
        // |U| ≥ 2 and f ≥ 1 keep the floor positive.
        let value = rat(inside as u64, f_u / 2);
        consider(&mut best, value, vertices);
    }
    Ok(best)
}

/// `w*_f`, the fractional f-density; 0 when the graph has fewer than two
/// vertices.
pub fn density_star(g: &WeightedGraph, caps: Caps) -> Result<Rat> {
    Ok(density_scan(g, caps)?
        .map(|(v, _)| v)
        .unwrap_or_else(Rat::zero))
}

/// `w_f = ⌈w*_f⌉`.
pub fn density(g: &WeightedGraph, caps: Caps) -> Result<u64> {
    Ok(ceil_u64(&density_star(g, caps)?))
}

/// A Γ witness: the vertex set and the boundary subset size.
pub type GammaWitness = (Vec<VertexId>, usize);

fn gamma_scan(g: &WeightedGraph, caps: Caps) -> Result<Option<(Rat, GammaWitness)>> {
    check_vertex_cap(g, caps)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Ok(None);
    }
    let edge_masks: Vec<u64> = g
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| (1 << u) | (1 << v))
        .collect();
    let mut best: Option<(Rat, (Vec<VertexId>, usize))> = None;
    for mask in 0u64..(1 << n) {
        let mut inside = 0u64;
        let mut boundary = 0u64;
        for &em in &edge_masks {
            let overlap = em & mask;
            if overlap == em {
                inside += 1;
            } else if overlap != 0 {
                boundary += 1;
            }
        }
        let vertices = subset_vertices(n, mask);
        let f_u: u64 = vertices.iter().map(|&v| g.f(v)).sum();
        for s in 0..=boundary {
            let total = f_u + s;
            if total < 2 {
                continue;
            }
            let value = rat(inside + s, total / 2);
            consider(&mut best, value, (vertices.clone(), s as usize));
        }
    }
    Ok(best)
}

/// `Γ*_f`, the boundary-augmented fractional density; 0 when the graph has
/// no edge.
pub fn gamma_star(g: &WeightedGraph, caps: Caps) -> Result<Rat> {
    Ok(gamma_scan(g, caps)?
        .map(|(v, _)| v)
        .unwrap_or_else(Rat::zero))
}

/// `Γ_f = ⌈Γ*_f⌉`.
pub fn gamma(g: &WeightedGraph, caps: Caps) -> Result<u64> {
    Ok(ceil_u64(&gamma_star(g, caps)?))
}

/// Computes all six parameters and the witnesses in one pass.
pub fn report(g: &WeightedGraph, caps: Caps) -> Result<ParameterReport> {
    let d_star = delta_star(g);
    let density = density_scan(g, caps)?;
    let gamma = gamma_scan(g, caps)?;
    let (density_star, density_witness) = match density {
        Some((v, w)) => (v, Some(w)),
        None => (Rat::zero(), None),
    };
    let (gamma_star, gamma_witness) = match gamma {
        Some((v, w)) => (v, Some(w)),
        None => (Rat::zero(), None),
    };
    Ok(ParameterReport {
        delta: ceil_u64(&d_star),
        delta_star: d_star,
        density: ceil_u64(&density_star),
        density_star,
        gamma: ceil_u64(&gamma_star),
        gamma_star,
        density_witness,
        gamma_witness,
    })
}

/// The identity `max{Δ_f + 1, Γ_f} = max{Δ_f + 1, w_f}`. It holds for every
/// weighted graph; a `false` return signals an implementation bug.
pub fn densities_interchangeable(g: &WeightedGraph, caps: Caps) -> Result<bool> {
    let d1 = delta(g) + 1;
    Ok(d1.max(gamma(g, caps)?) == d1.max(density(g, caps)?))
}

/// Evaluates the Γ objective at an explicit `(U, s)` pair, for witness
/// re-checks. Errors when `f(U) + s < 2` or `s > |∂U|`.
pub fn gamma_objective(g: &WeightedGraph, u: &[VertexId], s: usize) -> Result<Rat> {
    let inside = g.graph().induced_edges(u)?.len() as u64;
    let boundary = g.graph().boundary(u)?.len();
    if s > boundary {
        return Err(Error::InvalidParameter(format!(
            "boundary subset size {s} exceeds |∂U| = {boundary}"
        )));
    }
    let total = g.f_sum(u)? + s as u64;
    if total < 2 {
        return Err(Error::InvalidParameter(
            "f(U) + |F| must be at least 2".to_string(),
        ));
    }
    Ok(rat(inside + s as u64, total / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use crate::rat::rint;

    fn triangle_unit() -> WeightedGraph {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        WeightedGraph::new(g, vec![1, 1, 1]).unwrap()
    }

    fn edgeless() -> WeightedGraph {
        WeightedGraph::new(Multigraph::new(3, vec![]).unwrap(), vec![1, 2, 3]).unwrap()
    }

    fn single_edge_unit() -> WeightedGraph {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        WeightedGraph::new(g, vec![1, 1]).unwrap()
    }

    #[test]
    fn delta_star_examples() {
        assert_eq!(delta_star(&edgeless()), rint(0));
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let wg = WeightedGraph::new(star, vec![3, 1, 1, 1]).unwrap();
        assert_eq!(delta_star(&wg), rint(1));
        assert_eq!(delta_star(&triangle_unit()), rint(2));
    }

    #[test]
    fn density_star_examples() {
        assert_eq!(
            density_star(&single_edge_unit(), Caps::default()).unwrap(),
            rint(1)
        );
        assert_eq!(
            density_star(&triangle_unit(), Caps::default()).unwrap(),
            rint(3)
        );
        assert_eq!(density_star(&edgeless(), Caps::default()).unwrap(), rint(0));
        let lonely = WeightedGraph::new(Multigraph::new(1, vec![]).unwrap(), vec![5]).unwrap();
        assert_eq!(density_star(&lonely, Caps::default()).unwrap(), rint(0));
    }

    #[test]
    fn gamma_star_examples() {
        assert_eq!(
            gamma_star(&single_edge_unit(), Caps::default()).unwrap(),
            rint(1)
        );
        assert_eq!(gamma_star(&edgeless(), Caps::default()).unwrap(), rint(0));
        assert_eq!(
            gamma_star(&triangle_unit(), Caps::default()).unwrap(),
            rint(3)
        );
    }

    #[test]
    fn ceilings_and_interchange_identity() {
        let r = report(&triangle_unit(), Caps::default()).unwrap();
        assert_eq!(r.delta, 2);
        assert_eq!(r.density, 3);
        assert_eq!(r.gamma, 3);
        assert!(densities_interchangeable(&triangle_unit(), Caps::default()).unwrap());
        assert!(densities_interchangeable(&edgeless(), Caps::default()).unwrap());

        let e = report(&edgeless(), Caps::default()).unwrap();
        assert_eq!((e.delta, e.density, e.gamma), (0, 0, 0));
        assert!(e.gamma_witness.is_none());
    }

    #[test]
    fn density_never_exceeds_gamma() {
        // F = ∅ embeds every density candidate into the Γ scan.
        for g in [triangle_unit(), single_edge_unit(), edgeless()] {
            let w = density_star(&g, Caps::default()).unwrap();
            let gam = gamma_star(&g, Caps::default()).unwrap();
            assert!(w <= gam);
        }
    }

    #[test]
    fn witnesses_reproduce_the_maxima() {
        let g = triangle_unit();
        let r = report(&g, Caps::default()).unwrap();
        let (u, s) = r.gamma_witness.clone().unwrap();
        assert_eq!(gamma_objective(&g, &u, s).unwrap(), r.gamma_star);
        let uw = r.density_witness.clone().unwrap();
        let inside = g.graph().induced_edges(&uw).unwrap().len() as u64;
        let f_u = g.f_sum(&uw).unwrap();
        assert_eq!(rat(inside, f_u / 2), r.density_star);
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // Two disjoint edges with identical weights: both {0,1} and {2,3}
        // achieve the density maximum; the report must pick {0,1}.
        let g = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let wg = WeightedGraph::new(g, vec![1, 1, 1, 1]).unwrap();
        let r = report(&wg, Caps::default()).unwrap();
        assert_eq!(r.density_witness, Some(vec![0, 1]));
        assert_eq!(r.gamma_witness, Some((vec![0], 1)));
    }

    #[test]
    fn vertex_cap_guard() {
        let tight = Caps {
            max_edges: 20,
            max_vertices: 2,
        };
        assert!(matches!(
            density_star(&triangle_unit(), tight),
            Err(Error::VertexCapExceeded {
                required: 3,
                cap: 2
            })
        ));
    }
}
