//! A gallery of small weighted graphs with machine-checkable claims, a
//! vertex-probing witness search, and a seeded random sweep.
//!
//! The gallery pins down the graphs on which the degree/density system
//! (`Q_ORIGINAL`, even with unit bounds added as `Q_UNIT`) strictly contains
//! the f-matching polytope, each packaged with the claims that make the gap
//! checkable by the other modules:
//!
//! * `example1` — two vertices joined by two parallel edges, weights 2; the
//!   point `(2, 0)` satisfies `Q_ORIGINAL` yet is not a member.
//! * `example2` — an odd cycle plus a doubled pendant vertex; the displayed
//!   half-integral point satisfies `Q_UNIT` yet is not a member.
//! * `example3` — two dense blobs joined by a bridge, weights 2; here
//!   `Γ*_f > Δ*_f ≥ w*_f`, so the fractional index exceeds `max{Δ*_f, w*_f}`.
//! * `c4-chord` — a simple graph (a 4-cycle with a chord) whose `Q_UNIT`
//!   polyhedron still has a vertex outside the polytope, found by search.
//!
//! [`sweep`] stress-tests the index formulas, the density-interchange
//! identity, the polytope characterization, and the bound chain on seeded
//! random graphs, with the gallery graphs always injected into the pool.

use crate::chromatic::{self, LpMode};
use crate::graph::{Multigraph, VertexId, WeightedGraph};
use crate::lp::{solve, LinearProgram, LpOutcome, Relation};
use crate::params;
use crate::polytope::{
    check_system, membership, separating_check, EdgePoint, MembershipVerdict, QSystemVariant,
};
use crate::rat::{rat, rint, Rat};
use crate::{Caps, Error, Result};
use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// A graph, an optional witness point, and the claims that verify against
/// the other modules.
#[derive(Clone, Debug)]
pub struct GalleryItem {
    pub name: String,
    pub graph: WeightedGraph,
    pub witness: Option<EdgePoint>,
    pub claims: Vec<Claim>,
    pub note: Option<String>,
}

/// One machine-checkable claim about a gallery item.
#[derive(Clone, Debug)]
pub enum Claim {
    /// The witness point satisfies the system with zero violations.
    SystemClean(QSystemVariant),
    /// The witness point is outside the f-matching polytope, certified by a
    /// re-verified separating functional.
    OutsidePolytope,
    DeltaStarEquals(Rat),
    /// `w*_f ≤ Δ*_f`.
    DensityAtMostDeltaStar,
    /// The Γ objective at `(u, f_size)` equals `value`, hence `Γ*_f ≥ value`.
    GammaStarAtLeast {
        value: Rat,
        u: Vec<VertexId>,
        f_size: usize,
    },
    /// `χ'*_f > max{Δ*_f, w*_f}`.
    FracIndexExceedsDegreeDensity,
    DegreesAllEqual(usize),
    /// `f(v) ≤ d(v)` at every vertex.
    WeightsWithinDegrees,
    /// `x(∂v)` equals the given value.
    BoundarySum { vertex: VertexId, value: Rat },
    /// `|E[U]| ≤ f(U) − 1` for every nonempty vertex subset `U`.
    InducedEdgesBelowWeightSum,
    SimpleGraph,
    /// The witness search succeeded for this variant.
    WitnessFound(QSystemVariant),
    ExactIndexEquals(u64),
}

impl Claim {
    pub fn describe(&self) -> String {
        match self {
            Claim::SystemClean(v) => format!("witness satisfies {} with zero violations", v.label()),
            Claim::OutsidePolytope => {
                "witness is outside the f-matching polytope (separating functional verified)"
                    .to_string()
            }
            Claim::DeltaStarEquals(r) => format!("fractional maximum f-degree equals {r}"),
            Claim::DensityAtMostDeltaStar => {
                "fractional f-density is at most the fractional maximum f-degree".to_string()
            }
            Claim::GammaStarAtLeast { value, u, f_size } => format!(
                "gamma objective at U={u:?}, |F|={f_size} equals {value}, so gamma* >= {value}"
            ),
            Claim::FracIndexExceedsDegreeDensity => {
                "fractional f-chromatic index exceeds max of f-degree and f-density".to_string()
            }
            Claim::DegreesAllEqual(d) => format!("every vertex has degree {d}"),
            Claim::WeightsWithinDegrees => "f(v) <= d(v) at every vertex".to_string(),
            Claim::BoundarySum { vertex, value } => {
                format!("witness boundary sum at vertex {vertex} equals {value}")
            }
            Claim::InducedEdgesBelowWeightSum => {
                "|E[U]| <= f(U) - 1 for every nonempty vertex subset".to_string()
            }
            Claim::SimpleGraph => "graph is simple".to_string(),
            Claim::WitnessFound(v) => format!("witness search found a {} gap point", v.label()),
            Claim::ExactIndexEquals(t) => format!("f-chromatic index equals {t}"),
        }
    }

    pub fn check(&self, item: &GalleryItem, caps: Caps) -> Result<bool> {
        let g = &item.graph;
        match self {
            Claim::SystemClean(variant) => match &item.witness {
                Some(x) => Ok(check_system(g, x, *variant, caps)?.is_empty()),
                None => Ok(false),
            },
            Claim::OutsidePolytope => match &item.witness {
                Some(x) => match membership(g, x, caps)? {
                    MembershipVerdict::NonMember { functional } => {
                        separating_check(g, &functional, x, caps)
                    }
                    MembershipVerdict::Member { .. } => Ok(false),
                },
                None => Ok(false),
            },
            Claim::DeltaStarEquals(r) => Ok(&params::delta_star(g) == r),
            Claim::DensityAtMostDeltaStar => {
                Ok(params::density_star(g, caps)? <= params::delta_star(g))
            }
            Claim::GammaStarAtLeast { value, u, f_size } => {
                let at_witness = params::gamma_objective(g, u, *f_size)?;
                Ok(&at_witness == value && &params::gamma_star(g, caps)? >= value)
            }
            Claim::FracIndexExceedsDegreeDensity => {
                let (chi_star, _) = chromatic::frac_index_lp(g, LpMode::CoverMaximal, caps)?;
                let floor = params::delta_star(g).max(params::density_star(g, caps)?);
                Ok(chi_star > floor)
            }
            Claim::DegreesAllEqual(d) => Ok(g.graph().degrees().iter().all(|x| x == d)),
            Claim::WeightsWithinDegrees => {
                let degrees = g.graph().degrees();
                Ok((0..g.vertex_count()).all(|v| g.f(v) <= degrees[v] as u64))
            }
            Claim::BoundarySum { vertex, value } => match &item.witness {
                Some(x) => {
                    let boundary = g.graph().boundary(&[*vertex])?;
                    Ok(&x.sum_over(&boundary) == value)
                }
                None => Ok(false),
            },
            Claim::InducedEdgesBelowWeightSum => {
                let n = g.vertex_count();
                if n > caps.max_vertices.min(63) {
                    return Err(Error::VertexCapExceeded {
                        required: n,
                        cap: caps.max_vertices.min(63),
                    });
                }
                let edge_masks: Vec<u64> = g
                    .graph()
                    .edges()
                    .iter()
                    .map(|&(u, v)| (1 << u) | (1 << v))
                    .collect();
                for mask in 1u64..(1 << n) {
                    let inside = edge_masks.iter().filter(|&&em| em & mask == em).count() as u64;
                    let f_u: u64 = (0..n).filter(|v| mask >> v & 1 == 1).map(|v| g.f(v)).sum();
                    if inside + 1 > f_u {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Claim::SimpleGraph => Ok(g.graph().is_simple()),
            Claim::WitnessFound(_) => Ok(item.witness.is_some()),
            Claim::ExactIndexEquals(t) => Ok(chromatic::exact_index(g, caps)?.0 == *t),
        }
    }
}

/// Per-claim verification results.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub results: Vec<(String, bool)>,
}

impl VerifyOutcome {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }
}

/// Runs every claim of the item through the other modules.
pub fn verify(item: &GalleryItem, caps: Caps) -> Result<VerifyOutcome> {
    let mut results = Vec::new();
    for claim in &item.claims {
        results.push((claim.describe(), claim.check(item, caps)?));
    }
    Ok(VerifyOutcome { results })
}

/// Two vertices joined by two parallel edges, both weights 2. The point
/// `(2, 0)` satisfies the degree/density system yet lies outside the
/// polytope: no unit bound stops a single edge from carrying weight 2.
pub fn example1() -> GalleryItem {
    let graph = Multigraph::new(2, vec![(0, 1), (0, 1)]).expect("static graph");
    let wg = WeightedGraph::with_names(
        graph,
        vec![2, 2],
        vec!["a".to_string(), "b".to_string()],
    )
    .expect("static graph");
    GalleryItem {
        name: "example1".to_string(),
        graph: wg,
        witness: Some(EdgePoint::new(vec![rint(2), rint(0)])),
        claims: vec![
            Claim::SystemClean(QSystemVariant::QOriginal),
            Claim::OutsidePolytope,
            Claim::DeltaStarEquals(rint(1)),
            Claim::ExactIndexEquals(1),
        ],
        note: None,
    }
}

/// An odd cycle of length `k` plus an extra vertex `u'` joined to the cycle
/// vertex `u` by two parallel edges `e1, e2`; weights 2 at `u` and `u'`,
/// 1 elsewhere. The half-integral point (`e1 ↦ 1`, `e2 ↦ 0`, cycle `↦ 1/2`)
/// satisfies the unit-augmented system but sums to `k/2 > ⌊k/2⌋` over the
/// cycle inside any convex combination, so it is not a member.
pub fn example2(k: usize) -> Result<GalleryItem> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be odd and at least 3, got {k}"
        )));
    }
    // Vertices: u = 0, u' = 1, cycle companions w1..w_{k-1} = 2..=k.
    let mut names = vec!["u".to_string(), "u'".to_string()];
    for i in 1..k {
        names.push(format!("w{i}"));
    }
    let mut edges = vec![(0, 1), (0, 1)]; // e1, e2
    let cycle: Vec<VertexId> = std::iter::once(0).chain(2..=k).collect();
    for i in 0..k {
        edges.push((cycle[i], cycle[(i + 1) % k]));
    }
    let mut f = vec![1u64; k + 1];
    f[0] = 2;
    f[1] = 2;
    let wg = WeightedGraph::with_names(Multigraph::new(k + 1, edges).expect("valid cycle"), f, names)?;

    let mut x = vec![rint(1), rint(0)];
    x.extend(std::iter::repeat_with(|| rat(1, 2)).take(k));
    let mut claims = vec![
        Claim::WeightsWithinDegrees,
        Claim::SystemClean(QSystemVariant::QUnit),
        Claim::OutsidePolytope,
        Claim::BoundarySum {
            vertex: 0,
            value: rint(2),
        },
        Claim::BoundarySum {
            vertex: 1,
            value: rint(1),
        },
        Claim::InducedEdgesBelowWeightSum,
    ];
    for v in 2..=k {
        claims.push(Claim::BoundarySum {
            vertex: v,
            value: rint(1),
        });
    }
    Ok(GalleryItem {
        name: "example2".to_string(),
        graph: wg,
        witness: Some(EdgePoint::new(x)),
        claims,
        note: Some(format!("cycle length k = {k}")),
    })
}

/// Six vertices in two blobs joined by one bridge: `v1v4` once, `v1v2`,
/// `v1v3`, `v4v5`, `v4v6` each `k` times, `v2v3` and `v5v6` each `k+1`
/// times; all weights 2. Every degree is `2k+1`, so `Δ*_f = k + 1/2` and the
/// density never beats it, yet `U = {v1, v2, v3}` with one boundary edge
/// pushes `Γ*_f` to at least `k + 2/3`.
pub fn example3(k: usize) -> Result<GalleryItem> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "blob multiplicity k must be at least 1".to_string(),
        ));
    }
    let mut edges = vec![(0usize, 3usize)];
    let multi = |edges: &mut Vec<(usize, usize)>, u: usize, v: usize, count: usize| {
        for _ in 0..count {
            edges.push((u, v));
        }
    };
    multi(&mut edges, 0, 1, k); // v1v2
    multi(&mut edges, 0, 2, k); // v1v3
    multi(&mut edges, 1, 2, k + 1); // v2v3
    multi(&mut edges, 3, 4, k); // v4v5
    multi(&mut edges, 3, 5, k); // v4v6
    multi(&mut edges, 4, 5, k + 1); // v5v6
    let names = (1..=6).map(|i| format!("v{i}")).collect();
    let wg = WeightedGraph::with_names(
        Multigraph::new(6, edges).expect("valid blobs"),
        vec![2; 6],
        names,
    )?;
    let ku = k as u64;
    Ok(GalleryItem {
        name: "example3".to_string(),
        graph: wg,
        witness: None,
        claims: vec![
            Claim::DegreesAllEqual(2 * k + 1),
            Claim::DeltaStarEquals(rat(2 * ku + 1, 2u64)),
            Claim::DensityAtMostDeltaStar,
            Claim::GammaStarAtLeast {
                value: rat(3 * ku + 2, 3u64),
                u: vec![0, 1, 2],
                f_size: 1,
            },
            Claim::FracIndexExceedsDegreeDensity,
        ],
        note: Some(format!("blob multiplicity k = {k}")),
    })
}

fn c4_with_chord(chord: (usize, usize)) -> WeightedGraph {
    let edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), chord];
    let names = (1..=4).map(|i| format!("c{i}")).collect();
    WeightedGraph::with_names(
        Multigraph::new(4, edges).expect("valid chord placement"),
        vec![2, 2, 1, 1],
        names,
    )
    .expect("static graph")
}

/// A simple 4-cycle with a chord, weights 2 on two consecutive cycle
/// vertices and 1 on the others. Both chord placements relative to the
/// weight-2 pair are searched; the first that yields a point inside the
/// unit-augmented system but outside the polytope becomes the item.
pub fn c4_chord() -> GalleryItem {
    let caps = Caps::default();
    let search = WitnessSearch::default();
    let mut chosen = None;
    for chord in [(0usize, 2usize), (1usize, 3usize)] {
        let g = c4_with_chord(chord);
        let witness = find_witness(&g, QSystemVariant::QUnit, &search, caps)
            .expect("five-edge search stays within caps");
        if let Some(x) = witness {
            chosen = Some((g, x, chord));
            break;
        }
    }
    let (graph, witness, note) = match chosen {
        Some((g, x, chord)) => (
            g,
            Some(x),
            Some(format!("chord joins c{} and c{}", chord.0 + 1, chord.1 + 1)),
        ),
        // No witness found: keep the first placement and let verification
        // report the failed claims honestly.
        None => (c4_with_chord((0, 2)), None, None),
    };
    GalleryItem {
        name: "c4-chord".to_string(),
        graph,
        witness,
        claims: vec![
            Claim::SimpleGraph,
            Claim::WitnessFound(QSystemVariant::QUnit),
            Claim::SystemClean(QSystemVariant::QUnit),
            Claim::OutsidePolytope,
        ],
        note,
    }
}

/// Deterministic vertex-probing search configuration.
#[derive(Copy, Clone, Debug)]
pub struct WitnessSearch {
    /// Seeded rational directions tried after the unit vectors and the
    /// per-vertex incident sums.
    pub random_directions: usize,
    pub seed: u64,
}

impl Default for WitnessSearch {
    fn default() -> Self {
        WitnessSearch {
            random_directions: 200,
            seed: 1,
        }
    }
}

/// Builds the variant's inequalities as LP rows over one variable per edge
/// (non-negativity is carried by the variable bounds).
fn system_rows(g: &WeightedGraph, variant: QSystemVariant, caps: Caps) -> Result<LinearProgram> {
    if variant == QSystemVariant::Edmonds1 && !g.is_unit_weighted() {
        return Err(Error::UnitWeightsRequired);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > caps.max_vertices.min(63) {
        return Err(Error::VertexCapExceeded {
            required: n,
            cap: caps.max_vertices.min(63),
        });
    }
    let mut lp = LinearProgram::maximize(vec![Rat::zero(); m]);

    let unit = |e: usize| {
        let mut row = vec![Rat::zero(); m];
        row[e] = Rat::one();
        row
    };
    if matches!(variant, QSystemVariant::QUnit | QSystemVariant::EdmondsF) {
        for e in 0..m {
            lp.push_row(unit(e), Relation::Le, Rat::one());
        }
    }
    for v in 0..n {
        let mut row = vec![Rat::zero(); m];
        for (e, &(a, b)) in g.graph().edges().iter().enumerate() {
            if a == v || b == v {
                row[e] = Rat::one();
            }
        }
        lp.push_row(row, Relation::Le, rint(g.f(v)));
    }
    let edge_masks: Vec<u64> = g
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| (1 << u) | (1 << v))
        .collect();
    for mask in 1u64..(1 << n) {
        let f_u: u64 = (0..n).filter(|v| mask >> v & 1 == 1).map(|v| g.f(v)).sum();
        match variant {
            QSystemVariant::QOriginal | QSystemVariant::QUnit | QSystemVariant::Edmonds1 => {
                let mut row = vec![Rat::zero(); m];
                for (e, &em) in edge_masks.iter().enumerate() {
                    if em & mask == em {
                        row[e] = Rat::one();
                    }
                }
                let bound = match variant {
                    QSystemVariant::Edmonds1 => (mask.count_ones() / 2) as u64,
                    _ => f_u / 2,
                };
                lp.push_row(row, Relation::Le, rint(bound));
            }
            QSystemVariant::EdmondsF => {
                // One row per boundary subset F of each U.
                let inside: Vec<usize> = edge_masks
                    .iter()
                    .enumerate()
                    .filter(|(_, &em)| em & mask == em)
                    .map(|(e, _)| e)
                    .collect();
                let boundary: Vec<usize> = edge_masks
                    .iter()
                    .enumerate()
                    .filter(|(_, &em)| em & mask != em && em & mask != 0)
                    .map(|(e, _)| e)
                    .collect();
                if boundary.len() > 20 {
                    return Err(Error::EdgeCapExceeded {
                        required: boundary.len(),
                        cap: 20,
                    });
                }
                for fmask in 0u64..(1 << boundary.len()) {
                    let mut row = vec![Rat::zero(); m];
                    for &e in &inside {
                        row[e] = Rat::one();
                    }
                    let mut fsize = 0u64;
                    for (i, &e) in boundary.iter().enumerate() {
                        if fmask >> i & 1 == 1 {
                            row[e] = Rat::one();
                            fsize += 1;
                        }
                    }
                    lp.push_row(row, Relation::Le, rint((f_u + fsize) / 2));
                }
            }
        }
    }
    Ok(lp)
}

/// Hunts for a point satisfying the variant's inequalities but outside the
/// polytope, by maximizing a deterministic family of objective directions
/// (unit vectors, ± incident-edge sums per vertex, then seeded rational
/// directions) over the variant's polyhedron and testing each optimal vertex
/// for membership. Absence of a find is not a proof that the polyhedron
/// equals the polytope.
pub fn find_witness(
    g: &WeightedGraph,
    variant: QSystemVariant,
    search: &WitnessSearch,
    caps: Caps,
) -> Result<Option<EdgePoint>> {
    let m = g.edge_count();
    if m == 0 {
        return Ok(None);
    }
    let base = system_rows(g, variant, caps)?;

    let mut directions: Vec<Vec<Rat>> = Vec::new();
    for e in 0..m {
        let mut d = vec![Rat::zero(); m];
        d[e] = Rat::one();
        directions.push(d);
    }
    for v in 0..g.vertex_count() {
        let mut d = vec![Rat::zero(); m];
        for (e, &(a, b)) in g.graph().edges().iter().enumerate() {
            if a == v || b == v {
                d[e] = Rat::one();
            }
        }
        let negated = d.iter().map(|x| -x.clone()).collect();
        directions.push(d);
        directions.push(negated);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for _ in 0..search.random_directions {
        let d = (0..m)
            .map(|_| rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=4)))
            .collect();
        directions.push(d);
    }

    let mut tried: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for objective in directions {
        let mut lp = base.clone();
        lp.objective = objective;
        let LpOutcome::Optimal { point, .. } = solve(&lp)? else {
            // The variant polyhedra are bounded; anything else is impossible.
            continue;
        };
        if !tried.insert(point.clone()) {
            continue;
        }
        let x = EdgePoint::new(point);
        if let MembershipVerdict::NonMember { .. } = membership(g, &x, caps)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Seeded, reproducible loopless multigraph with weights in `[1, max_f]`.
pub fn random_weighted_graph(
    max_vertices: usize,
    max_edges: usize,
    max_f: u64,
    seed: u64,
) -> WeightedGraph {
    assert!(max_vertices >= 1 && max_edges >= 1 && max_f >= 1, "limits must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let m = if n >= 2 { rng.gen_range(0..=max_edges) } else { 0 };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = loop {
            let w = rng.gen_range(0..n);
            if w != u {
                break w;
            }
        };
        edges.push((u, v));
    }
    let f = (0..n).map(|_| rng.gen_range(1..=max_f)).collect();
    WeightedGraph::new(Multigraph::new(n, edges).expect("loopless by construction"), f)
        .expect("weights are positive")
}

#[derive(Copy, Clone, Debug)]
pub struct SweepLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_f: u64,
}

impl Default for SweepLimits {
    fn default() -> Self {
        SweepLimits {
            max_vertices: 5,
            max_edges: 8,
            max_f: 3,
        }
    }
}

/// Aggregated results of one sweep. `failures` is empty on a correct build;
/// any entry names the instance and the identity it broke.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub instances_tested: usize,
    pub seed: u64,
    pub unit_formula_confirmed: usize,
    pub gamma_formula_confirmed: usize,
    pub interchange_confirmed: usize,
    pub membership_system_confirmed: usize,
    pub gamma_exceeds_density_count: usize,
    pub qf_gap_witnesses: Vec<(WeightedGraph, EdgePoint)>,
    pub failures: Vec<String>,
}

/// The gallery graphs injected into every sweep pool.
pub fn injected_pool() -> Vec<(String, WeightedGraph)> {
    vec![
        ("example1".to_string(), example1().graph),
        ("example2(k=3)".to_string(), example2(3).expect("k = 3 is odd").graph),
        ("example3(k=1)".to_string(), example3(1).expect("k = 1 is valid").graph),
        ("c4-chord".to_string(), c4_chord().graph),
    ]
}

/// Runs `count` instances (gallery graphs first, then seeded random graphs)
/// through every identity: the two index formulas, the density-interchange
/// identity, the polytope characterization on sampled points, the lower and
/// upper bound chain, and a unit-bound witness hunt. Deterministic for fixed
/// inputs.
pub fn sweep(count: usize, seed: u64, limits: SweepLimits, caps: Caps) -> Result<SweepReport> {
    let mut report = SweepReport {
        instances_tested: 0,
        seed,
        unit_formula_confirmed: 0,
        gamma_formula_confirmed: 0,
        interchange_confirmed: 0,
        membership_system_confirmed: 0,
        gamma_exceeds_density_count: 0,
        qf_gap_witnesses: Vec::new(),
        failures: Vec::new(),
    };
    if count == 0 {
        return Ok(report);
    }

    let mut pool: Vec<(String, WeightedGraph)> = injected_pool();
    pool.truncate(count);
    let mut seeder = ChaCha8Rng::seed_from_u64(seed);
    let mut index = 0usize;
    while pool.len() < count {
        let sub_seed: u64 = seeder.gen();
        // Alternate unit weights in so the f ≡ 1 identities get exercised.
        let max_f = if index % 2 == 1 { 1 } else { limits.max_f };
        let g = random_weighted_graph(limits.max_vertices, limits.max_edges, max_f, sub_seed);
        pool.push((format!("random#{index}(seed={sub_seed})"), g));
        index += 1;
    }

    let mut point_rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    for (name, g) in &pool {
        report.instances_tested += 1;
        let fail = |report: &mut SweepReport, what: &str| {
            report.failures.push(format!("{name}: {what}"));
        };

        let bounds = chromatic::bounds_report(g, caps)?;
        if bounds.interchange_ok {
            report.interchange_confirmed += 1;
        } else {
            fail(&mut report, "density-interchange identity failed");
        }
        if !bounds.lower_bound_ok {
            fail(&mut report, "chi below max{delta, density}");
        }
        if !bounds.nine_eighths_ok {
            fail(&mut report, "nine-eighths upper bound failed");
        }
        if !bounds.sandwich_ok {
            fail(&mut report, "ceil(chi*) <= chi <= ceil(chi*)+1 failed");
        }
        if bounds.ceil_identity == Some(false) {
            fail(&mut report, "ceil(chi*) != max{delta, gamma}");
        }

        let delta_star = params::delta_star(g);
        let density_star = params::density_star(g, caps)?;
        let gamma_star = params::gamma_star(g, caps)?;
        if g.is_unit_weighted() {
            if bounds.chi_star == delta_star.clone().max(density_star.clone()) {
                report.unit_formula_confirmed += 1;
            } else {
                fail(&mut report, "chi* != max{delta*, w*} with unit weights");
            }
        }
        if delta_star >= Rat::one() {
            if bounds.chi_star == delta_star.clone().max(gamma_star.clone()) {
                report.gamma_formula_confirmed += 1;
            } else {
                fail(&mut report, "chi* != max{delta*, gamma*}");
            }
        }
        if gamma_star > density_star {
            report.gamma_exceeds_density_count += 1;
        }

        // Membership versus the exact inequality description, on three
        // sampled rational points in the unit box.
        let m = g.edge_count();
        let mut agree = true;
        for _ in 0..3 {
            let coords: Vec<Rat> = (0..m)
                .map(|_| {
                    let den = point_rng.gen_range(1i64..=4);
                    rat(point_rng.gen_range(0..=den), den)
                })
                .collect();
            let x = EdgePoint::new(coords);
            let is_member = membership(g, &x, caps)?.is_member();
            let clean = check_system(g, &x, QSystemVariant::EdmondsF, caps)?.is_empty();
            if is_member != clean {
                agree = false;
            }
        }
        if agree {
            report.membership_system_confirmed += 1;
        } else {
            fail(&mut report, "membership disagrees with the exact system");
        }

        let hunt = WitnessSearch {
            random_directions: 24,
            seed: 7,
        };
        if let Some(x) = find_witness(g, QSystemVariant::QUnit, &hunt, caps)? {
            report.qf_gap_witnesses.push((g.clone(), x));
        }
    }
    Ok(report)
}

/// All gallery item names, for the command line.
pub fn item_names() -> &'static [&'static str] {
    &["example1", "example2", "example3", "c4-chord"]
}

/// Builds a gallery item by name; `k` applies to the parametrized families.
pub fn item_by_name(name: &str, k: Option<usize>) -> Result<GalleryItem> {
    match name {
        "example1" => {
            if k.is_some() {
                return Err(Error::InvalidParameter(
                    "example1 does not take --k".to_string(),
                ));
            }
            Ok(example1())
        }
        "example2" => example2(k.unwrap_or(3)),
        "example3" => example3(k.unwrap_or(1)),
        "c4-chord" => {
            if k.is_some() {
                return Err(Error::InvalidParameter(
                    "c4-chord does not take --k".to_string(),
                ));
            }
            Ok(c4_chord())
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown gallery item {other:?}; available: {}",
            item_names().join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_claims_pass() {
        let item = example1();
        let outcome = verify(&item, Caps::default()).unwrap();
        assert!(outcome.all_passed(), "failures: {:?}", outcome.results);
    }

    #[test]
    fn example2_claims_pass_for_k3() {
        let item = example2(3).unwrap();
        assert_eq!(item.graph.edge_count(), 5);
        assert_eq!(item.graph.graph().degree(0).unwrap(), 4);
        let outcome = verify(&item, Caps::default()).unwrap();
        assert!(outcome.all_passed(), "failures: {:?}", outcome.results);
    }

    #[test]
    fn example2_rejects_even_or_small_k() {
        assert!(example2(4).is_err());
        assert!(example2(1).is_err());
    }

    #[test]
    fn set_operators_on_the_gallery_structures() {
        // Odd cycle with doubled pendant, k = 3: the cycle vertices induce
        // exactly the three cycle edges (ids 2..=4), never e1 or e2.
        let pendant = example2(3).unwrap().graph;
        let cycle_vertices = [0usize, 2, 3];
        let induced: Vec<usize> = pendant
            .graph()
            .induced_edges(&cycle_vertices)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(induced, vec![2, 3, 4]);
        assert_eq!(pendant.graph().boundary(&[0]).unwrap().len(), 4);
        assert_eq!(pendant.f_sum(&[0, 1, 2]).unwrap(), 5); // u, u', one companion

        // Bridged blobs: the left blob meets the rest in the bridge alone,
        // f over the blob is 6, and the parallel classes have size k.
        let blobs = example3(2).unwrap().graph;
        let left = [0usize, 1, 2];
        let boundary: Vec<usize> = blobs.graph().boundary(&left).unwrap().into_iter().collect();
        assert_eq!(boundary, vec![0]);
        assert_eq!(blobs.f_sum(&left).unwrap(), 6);
        assert_eq!(blobs.graph().cut_edges(&[0], &[1]).unwrap().len(), 2);
        assert_eq!(blobs.graph().cut_edges(&[0], &[3]).unwrap().len(), 1);
    }

    #[test]
    fn example2_witness_violates_the_exact_system() {
        // The half-integral point is outside the polytope, so the exact
        // description must flag it with a boundary-augmented violation.
        let item = example2(3).unwrap();
        let x = item.witness.as_ref().unwrap();
        let violations =
            check_system(&item.graph, x, QSystemVariant::EdmondsF, Caps::default()).unwrap();
        assert!(!violations.is_empty());
        assert!(violations
            .iter()
            .any(|v| v.family == crate::polytope::InequalityFamily::C));
    }

    #[test]
    fn example3_density_value_k1() {
        let g = example3(1).unwrap().graph;
        assert_eq!(params::density_star(&g, Caps::default()).unwrap(), rat(3, 2));
        assert_eq!(params::delta_star(&g), rat(3, 2));
    }

    #[test]
    fn example3_structure() {
        let item = example3(1).unwrap();
        assert_eq!(item.graph.edge_count(), 9);
        assert!(item.graph.graph().degrees().iter().all(|&d| d == 3));
        assert!(example3(0).is_err());
    }

    #[test]
    fn example3_claims_pass_for_k1() {
        let item = example3(1).unwrap();
        let outcome = verify(&item, Caps::default()).unwrap();
        assert!(outcome.all_passed(), "failures: {:?}", outcome.results);
    }

    #[test]
    fn witness_search_on_example1() {
        let g = example1().graph;
        let search = WitnessSearch {
            random_directions: 8,
            seed: 3,
        };
        let found = find_witness(&g, QSystemVariant::QOriginal, &search, Caps::default()).unwrap();
        let x = found.expect("a gap point exists");
        assert!(check_system(&g, &x, QSystemVariant::QOriginal, Caps::default())
            .unwrap()
            .is_empty());
        assert!(!membership(&g, &x, Caps::default()).unwrap().is_member());
    }

    #[test]
    fn witness_search_respects_exact_systems() {
        // A single unit edge: the exact system leaves no gap to find.
        let g = WeightedGraph::new(Multigraph::new(2, vec![(0, 1)]).unwrap(), vec![1, 1]).unwrap();
        let search = WitnessSearch {
            random_directions: 16,
            seed: 3,
        };
        for variant in [
            QSystemVariant::QOriginal,
            QSystemVariant::QUnit,
            QSystemVariant::EdmondsF,
            QSystemVariant::Edmonds1,
        ] {
            assert!(find_witness(&g, variant, &search, Caps::default())
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn random_graphs_are_reproducible_and_in_range() {
        for seed in 0..100 {
            let a = random_weighted_graph(5, 8, 3, seed);
            let b = random_weighted_graph(5, 8, 3, seed);
            assert_eq!(a, b);
            assert!(a.vertex_count() >= 1 && a.vertex_count() <= 5);
            assert!(a.edge_count() <= 8);
            assert!(a.weights().iter().all(|&f| (1..=3).contains(&f)));
        }
    }

    #[test]
    fn random_edge_count_distribution_is_sane() {
        let total: usize = (0..1000)
            .map(|seed| random_weighted_graph(5, 8, 3, seed).edge_count())
            .sum();
        let average = total as f64 / 1000.0;
        assert!((1.0..=8.0).contains(&average), "average {average}");
    }

    #[test]
    fn empty_sweep_is_empty() {
        let report = sweep(0, 99, SweepLimits::default(), Caps::default()).unwrap();
        assert_eq!(report.instances_tested, 0);
        assert_eq!(report.interchange_confirmed, 0);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn gallery_lookup() {
        assert!(item_by_name("example2", Some(5)).is_ok());
        assert!(item_by_name("example1", Some(2)).is_err());
        assert!(item_by_name("nonsense", None).is_err());
    }
}
