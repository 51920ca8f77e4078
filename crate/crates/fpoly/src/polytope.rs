//! The f-matching polytope and the inequality systems that try to describe it.
//!
//! The polytope `P_f(G)` is the convex hull of the characteristic vectors of
//! all f-matchings. [`membership`] decides exactly whether a rational edge
//! vector lies in it, returning convex weights or a separating functional.
//! [`check_system`] evaluates one of four linear inequality systems against a
//! point and reports every violation with its witness:
//!
//! * `QOriginal` — non-negativity, degree caps `x(∂v) ≤ f(v)`, and set bounds
//!   `x(E[U]) ≤ ⌊f(U)/2⌋`;
//! * `QUnit` — `QOriginal` plus the unit bound `x(e) ≤ 1`;
//! * `EdmondsF` — `0 ≤ x(e) ≤ 1`, degree caps, and the boundary-augmented
//!   bounds `x(E[U] ∪ F) ≤ ⌊(f(U)+|F|)/2⌋` over all `U` and all `F ⊆ ∂U`
//!   (these do characterize the polytope);
//! * `Edmonds1` — the classical matching-polytope system, requiring `f ≡ 1`.
//!
//! Only `EdmondsF` (and `Edmonds1` for unit weights) is equivalent to
//! membership; the two `Q` systems are strictly weaker on some graphs, and
//! the gallery module exhibits witnesses.

use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::lp::{solve, LinearProgram, LpOutcome, Relation};
use crate::matching::{enumerate_all, FMatching};
use crate::rat::{rint, Rat};
use crate::{Caps, Error, Result};
use num::traits::{One, Signed, Zero};
use std::fmt;

/// An exact rational vector indexed by edge ids, total on `E(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePoint {
    values: Vec<Rat>,
}

impl EdgePoint {
    pub fn new(values: Vec<Rat>) -> Self {
        EdgePoint { values }
    }

    pub fn zeros(edge_count: usize) -> Self {
        EdgePoint {
            values: vec![Rat::zero(); edge_count],
        }
    }

    /// Builds a point from `(edge id, value)` pairs; absent ids default to 0
    /// and are reported back so callers can warn.
    pub fn from_pairs(edge_count: usize, pairs: &[(EdgeId, Rat)]) -> Result<(Self, Vec<EdgeId>)> {
        let mut values = vec![Rat::zero(); edge_count];
        let mut seen = vec![false; edge_count];
        for (e, v) in pairs {
            if *e >= edge_count {
                return Err(Error::EdgeOutOfRange {
                    id: *e,
                    count: edge_count,
                });
            }
            if seen[*e] {
                return Err(Error::InvalidParameter(format!(
                    "edge {e} assigned twice"
                )));
            }
            seen[*e] = true;
            values[*e] = v.clone();
        }
        let missing = (0..edge_count).filter(|&e| !seen[e]).collect();
        Ok((EdgePoint { values }, missing))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, e: EdgeId) -> &Rat {
        &self.values[e]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// `x(F) = Σ_{e ∈ F} x(e)`.
    pub fn sum_over<'a, I: IntoIterator<Item = &'a EdgeId>>(&self, edges: I) -> Rat {
        let mut acc = Rat::zero();
        for &e in edges {
            acc += &self.values[e];
        }
        acc
    }

    pub fn dot(&self, other: &EdgePoint) -> Rat {
        let mut acc = Rat::zero();
        for (a, b) in self.values.iter().zip(&other.values) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }
}

/// Which inequality system to evaluate.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QSystemVariant {
    QOriginal,
    QUnit,
    EdmondsF,
    Edmonds1,
}

impl QSystemVariant {
    pub fn label(&self) -> &'static str {
        match self {
            QSystemVariant::QOriginal => "q",
            QSystemVariant::QUnit => "q-unit",
            QSystemVariant::EdmondsF => "edmonds-f",
            QSystemVariant::Edmonds1 => "edmonds-1",
        }
    }
}

/// Inequality families, named after their positions in the four systems.
/// `≥`-type constraints are recorded in negated `≤` form, so a violation
/// always reads `lhs > rhs`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum InequalityFamily {
    I,
    Ii,
    Iii,
    Unit,
    A,
    B,
    C,
    One,
    Two,
    Three,
}

impl fmt::Display for InequalityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InequalityFamily::I => "(i)",
            InequalityFamily::Ii => "(ii)",
            InequalityFamily::Iii => "(iii)",
            InequalityFamily::Unit => "unit",
            InequalityFamily::A => "(a)",
            InequalityFamily::B => "(b)",
            InequalityFamily::C => "(c)",
            InequalityFamily::One => "(1)",
            InequalityFamily::Two => "(2)",
            InequalityFamily::Three => "(3)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    Edge(EdgeId),
    Vertex(VertexId),
    SetPair {
        u: Vec<VertexId>,
        f: Vec<EdgeId>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Edge(e) => write!(out, "edge {e}"),
            Witness::Vertex(v) => write!(out, "vertex {v}"),
            Witness::SetPair { u, f } => {
                let us: Vec<String> = u.iter().map(|v| v.to_string()).collect();
                let fs: Vec<String> = f.iter().map(|e| e.to_string()).collect();
                write!(out, "U={{{}}}, F={{{}}}", us.join(","), fs.join(","))
            }
        }
    }
}

/// One violated inequality: `lhs > rhs` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintViolation {
    pub family: InequalityFamily,
    pub witness: Witness,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "{} at {}: {} > {}",
            self.family, self.witness, self.lhs, self.rhs
        )
    }
}

/// A linear functional `(a, c)` with `a·i_M ≤ c` for every f-matching `M` but
/// `a·x > c` for the refuted point — a certificate of non-membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingFunctional {
    pub coeffs: EdgePoint,
    pub bound: Rat,
}

/// Exact verdict of the membership test, carrying its certificate.
#[derive(Clone, Debug, PartialEq)]
pub enum MembershipVerdict {
    Member { weights: Vec<(FMatching, Rat)> },
    NonMember { functional: SeparatingFunctional },
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipVerdict::Member { .. })
    }
}

fn check_point_dims(g: &WeightedGraph, x: &EdgePoint) -> Result<()> {
    if x.len() != g.edge_count() {
        return Err(Error::DimensionMismatch(format!(
            "point has {} entries for {} edges",
            x.len(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// Decides `x ∈ P_f(G)` exactly. A `Member` verdict carries convex weights
/// over f-matchings that re-sum to `x`; a `NonMember` verdict carries a
/// separating functional, re-verified against every enumerated f-matching
/// before being returned.
pub fn membership(g: &WeightedGraph, x: &EdgePoint, caps: Caps) -> Result<MembershipVerdict> {
    check_point_dims(g, x)?;
    let matchings = enumerate_all(g, caps)?;
    let cols = matchings.len();
    let m = g.edge_count();

    let mut lp = LinearProgram::minimize(vec![Rat::zero(); cols]);
    for e in 0..m {
        let coeffs = matchings
            .iter()
            .map(|mm| if mm.contains(e) { Rat::one() } else { Rat::zero() })
            .collect();
        lp.push_row(coeffs, Relation::Eq, x.value(e).clone());
    }
    lp.push_row(vec![Rat::one(); cols], Relation::Eq, Rat::one());

    match solve(&lp)? {
        LpOutcome::Optimal { point, .. } => {
            let weights: Vec<(FMatching, Rat)> = matchings
                .into_iter()
                .zip(point)
                .filter(|(_, w)| !w.is_zero())
                .collect();
            let mut total = Rat::zero();
            let mut resummed = vec![Rat::zero(); m];
            for (mm, w) in &weights {
                assert!(!w.is_negative(), "internal: negative convex weight");
                total += w;
                for &e in mm.edges() {
                    resummed[e] += w;
                }
            }
            assert!(total.is_one(), "internal: convex weights do not sum to 1");
            assert!(
                resummed.iter().zip(x.values()).all(|(a, b)| a == b),
                "internal: convex combination does not reproduce the point"
            );
            Ok(MembershipVerdict::Member { weights })
        }
        LpOutcome::Infeasible { farkas } => {
            let coeffs = EdgePoint::new(farkas[..m].to_vec());
            let bound = -farkas[m].clone();
            let functional = SeparatingFunctional { coeffs, bound };
            assert!(
                separating_check(g, &functional, x, caps)?,
                "internal: separating functional failed re-verification"
            );
            Ok(MembershipVerdict::NonMember { functional })
        }
        LpOutcome::Unbounded { .. } => {
            unreachable!("a feasibility program with constant objective is never unbounded")
        }
    }
}

/// True iff `functional` is valid on every f-matching indicator and cuts off `x`.
pub fn separating_check(
    g: &WeightedGraph,
    functional: &SeparatingFunctional,
    x: &EdgePoint,
    caps: Caps,
) -> Result<bool> {
    check_point_dims(g, x)?;
    check_point_dims(g, &functional.coeffs)?;
    let matchings = enumerate_all(g, caps)?;
    let a = &functional.coeffs;
    let c = &functional.bound;
    let valid = matchings.iter().all(|m| &a.sum_over(m.edges()) <= c);
    Ok(valid && &a.dot(x) > c)
}

struct Collector {
    out: Vec<ConstraintViolation>,
    first_only: bool,
}

impl Collector {
    /// Records `lhs ≤ rhs` when violated; returns false to stop the scan.
    fn check(&mut self, family: InequalityFamily, witness: Witness, lhs: Rat, rhs: Rat) -> bool {
        if lhs > rhs {
            self.out.push(ConstraintViolation {
                family,
                witness,
                lhs,
                rhs,
            });
            if self.first_only {
                return false;
            }
        }
        true
    }
}

/// Visits all subsets of `0..n` in lexicographic order of their sorted id
/// lists (the empty set first). The visitor returns false to stop.
fn subsets_lex(
    n: usize,
    start: usize,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    if start == 0 && !visit(current)? {
        return Ok(false);
    }
    for v in start..n {
        current.push(v);
        if !visit(current)? {
            current.pop();
            return Ok(false);
        }
        if !subsets_lex(n, v + 1, current, visit)? {
            current.pop();
            return Ok(false);
        }
        current.pop();
    }
    Ok(true)
}

/// Visits all subsets of `items` in lexicographic order, threading the
/// running sum `x(F)` through the recursion.
fn boundary_subsets(
    items: &[EdgeId],
    start: usize,
    chosen: &mut Vec<EdgeId>,
    sum: &Rat,
    x: &EdgePoint,
    visit: &mut dyn FnMut(&[EdgeId], &Rat) -> bool,
) -> bool {
    if start == 0 && !visit(chosen, sum) {
        return false;
    }
    for idx in start..items.len() {
        let e = items[idx];
        chosen.push(e);
        let next = sum + x.value(e);
        if !visit(chosen, &next) {
            chosen.pop();
            return false;
        }
        if !boundary_subsets(items, idx + 1, chosen, &next, x, visit) {
            chosen.pop();
            return false;
        }
        chosen.pop();
    }
    true
}

fn scan_system(
    g: &WeightedGraph,
    x: &EdgePoint,
    variant: QSystemVariant,
    caps: Caps,
    first_only: bool,
) -> Result<Vec<ConstraintViolation>> {
    check_point_dims(g, x)?;
    if variant == QSystemVariant::Edmonds1 && !g.is_unit_weighted() {
        return Err(Error::UnitWeightsRequired);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > caps.max_vertices {
        return Err(Error::VertexCapExceeded {
            required: n,
            cap: caps.max_vertices,
        });
    }
    if variant == QSystemVariant::EdmondsF && m > caps.max_edges {
        return Err(Error::EdgeCapExceeded {
            required: m,
            cap: caps.max_edges,
        });
    }

    use InequalityFamily as F;
    use QSystemVariant as V;
    let mut col = Collector {
        out: Vec::new(),
        first_only,
    };
    let (lower_family, degree_family, set_family) = match variant {
        V::QOriginal | V::QUnit => (F::I, F::Ii, F::Iii),
        V::EdmondsF => (F::A, F::B, F::C),
        V::Edmonds1 => (F::One, F::Two, F::Three),
    };

    // Per-edge bounds.
    'edges: {
        for e in 0..m {
            if !col.check(lower_family, Witness::Edge(e), -x.value(e).clone(), Rat::zero()) {
                break 'edges;
            }
            if variant == V::EdmondsF
                && !col.check(F::A, Witness::Edge(e), x.value(e).clone(), Rat::one())
            {
                break 'edges;
            }
        }
    }
    if col.first_only && !col.out.is_empty() {
        return Ok(col.out);
    }

    // Degree caps x(∂v) ≤ f(v).
    for v in 0..n {
        let incident: Vec<EdgeId> = (0..m)
            .filter(|&e| {
                let (a, b) = g.graph().endpoints(e);
                a == v || b == v
            })
            .collect();
        let lhs = x.sum_over(&incident);
        if !col.check(degree_family, Witness::Vertex(v), lhs, rint(g.f(v))) {
            return Ok(col.out);
        }
    }

    // Set bounds, over every vertex subset.
    let mut current: Vec<usize> = Vec::new();
    subsets_lex(n, 0, &mut current, &mut |u: &[usize]| {
        let in_u = {
            let mut mask = vec![false; n];
            for &v in u {
                mask[v] = true;
            }
            mask
        };
        let mut induced_sum = Rat::zero();
        let mut boundary: Vec<EdgeId> = Vec::new();
        for e in 0..m {
            let (a, b) = g.graph().endpoints(e);
            match (in_u[a], in_u[b]) {
                (true, true) => induced_sum += x.value(e),
                (true, false) | (false, true) => boundary.push(e),
                _ => {}
            }
        }
        let f_u: u64 = u.iter().map(|&v| g.f(v)).sum();
        match variant {
            V::QOriginal | V::QUnit => Ok(col.check(
                set_family,
                Witness::SetPair {
                    u: u.to_vec(),
                    f: Vec::new(),
                },
                induced_sum,
                rint(f_u / 2),
            )),
            V::Edmonds1 => Ok(col.check(
                set_family,
                Witness::SetPair {
                    u: u.to_vec(),
                    f: Vec::new(),
                },
                induced_sum,
                rint((u.len() / 2) as u64),
            )),
            V::EdmondsF => {
                let mut chosen: Vec<EdgeId> = Vec::new();
                let zero = Rat::zero();
                let go = boundary_subsets(
                    &boundary,
                    0,
                    &mut chosen,
                    &zero,
                    x,
                    &mut |fset: &[EdgeId], fsum: &Rat| {
                        col.check(
                            F::C,
                            Witness::SetPair {
                                u: u.to_vec(),
                                f: fset.to_vec(),
                            },
                            &induced_sum + fsum,
                            rint((f_u + fset.len() as u64) / 2),
                        )
                    },
                );
                Ok(go)
            }
        }
    })?;

    // Unit bounds come after the shared families in the canonical order.
    if variant == V::QUnit && !(col.first_only && !col.out.is_empty()) {
        for e in 0..m {
            if !col.check(F::Unit, Witness::Edge(e), x.value(e).clone(), Rat::one()) {
                break;
            }
        }
    }

    Ok(col.out)
}

/// Evaluates the chosen system exhaustively and returns every violated
/// inequality in canonical `(family, witness)` order; an empty list means the
/// point satisfies the system.
pub fn check_system(
    g: &WeightedGraph,
    x: &EdgePoint,
    variant: QSystemVariant,
    caps: Caps,
) -> Result<Vec<ConstraintViolation>> {
    scan_system(g, x, variant, caps, false)
}

/// As [`check_system`] but stops at the first violation.
pub fn first_violation(
    g: &WeightedGraph,
    x: &EdgePoint,
    variant: QSystemVariant,
    caps: Caps,
) -> Result<Option<ConstraintViolation>> {
    Ok(scan_system(g, x, variant, caps, true)?.into_iter().next())
}

/// Parses the point file format: lines `<edge-id> <p>/<q>` or
/// `<edge-id> <integer>`, `#` comments. Missing edges default to 0 and are
/// returned as warnings.
pub fn parse_point(text: &str, edge_count: usize) -> Result<(EdgePoint, Vec<EdgeId>)> {
    let mut pairs: Vec<(EdgeId, Rat)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let (Some(id_tok), Some(val_tok), None) = (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(Error::Parse {
                line,
                msg: "expected: <edge-id> <value>".to_string(),
            });
        };
        let e: EdgeId = id_tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad edge id {id_tok:?}"),
        })?;
        if e >= edge_count {
            return Err(Error::Parse {
                line,
                msg: format!("edge id {e} out of range (graph has {edge_count} edges)"),
            });
        }
        if pairs.iter().any(|(seen, _)| *seen == e) {
            return Err(Error::Parse {
                line,
                msg: format!("edge {e} assigned twice"),
            });
        }
        let v = crate::rat::parse_rat(val_tok).map_err(|err| Error::Parse {
            line,
            msg: err.to_string(),
        })?;
        pairs.push((e, v));
    }
    EdgePoint::from_pairs(edge_count, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use crate::rat::{rat, rint};

    fn parallel_pair() -> WeightedGraph {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        WeightedGraph::new(g, vec![2, 2]).unwrap()
    }

    fn two_zero_point() -> EdgePoint {
        EdgePoint::new(vec![rint(2), rint(0)])
    }

    #[test]
    fn parallel_pair_point_satisfies_q_but_not_membership() {
        let g = parallel_pair();
        let x = two_zero_point();
        let violations = check_system(&g, &x, QSystemVariant::QOriginal, Caps::default()).unwrap();
        assert!(violations.is_empty(), "unexpected: {violations:?}");

        let verdict = membership(&g, &x, Caps::default()).unwrap();
        match verdict {
            MembershipVerdict::NonMember { functional } => {
                assert!(separating_check(&g, &functional, &x, Caps::default()).unwrap());
            }
            MembershipVerdict::Member { .. } => panic!("(2,0) must not be a member"),
        }
    }

    #[test]
    fn unit_bound_catches_the_gap() {
        let g = parallel_pair();
        let x = two_zero_point();
        let violations = check_system(&g, &x, QSystemVariant::QUnit, Caps::default()).unwrap();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].family, InequalityFamily::Unit);
        assert_eq!(violations[0].witness, Witness::Edge(0));
        assert_eq!(violations[0].lhs, rint(2));
        assert_eq!(violations[0].rhs, rint(1));

        let first = first_violation(&g, &x, QSystemVariant::QUnit, Caps::default()).unwrap();
        assert_eq!(first, Some(violations[0].clone()));
    }

    #[test]
    fn indicator_points_are_members_with_unit_weight() {
        let g = parallel_pair();
        for m in enumerate_all(&g, Caps::default()).unwrap() {
            let x = crate::matching::indicator(&g, &m);
            match membership(&g, &x, Caps::default()).unwrap() {
                MembershipVerdict::Member { weights } => {
                    // The combination is unique: the matching itself, weight 1.
                    assert_eq!(weights.len(), 1);
                    assert_eq!(weights[0].0, m);
                    assert!(weights[0].1.is_one());
                }
                MembershipVerdict::NonMember { .. } => panic!("indicator must be a member"),
            }
        }
    }

    #[test]
    fn zero_functional_does_not_separate() {
        let g = parallel_pair();
        let x = EdgePoint::zeros(2);
        let functional = SeparatingFunctional {
            coeffs: EdgePoint::zeros(2),
            bound: rint(0),
        };
        assert!(!separating_check(&g, &functional, &x, Caps::default()).unwrap());
    }

    #[test]
    fn edmonds1_requires_unit_weights() {
        let g = parallel_pair();
        let x = EdgePoint::zeros(2);
        assert!(matches!(
            check_system(&g, &x, QSystemVariant::Edmonds1, Caps::default()),
            Err(Error::UnitWeightsRequired)
        ));
    }

    #[test]
    fn edmonds1_on_a_triangle() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let wg = WeightedGraph::new(g, vec![1, 1, 1]).unwrap();
        // The all-1/3 point meets the triangle bound x(E[U]) ≤ 1 exactly.
        let third = EdgePoint::new(vec![rat(1, 3), rat(1, 3), rat(1, 3)]);
        assert!(check_system(&wg, &third, QSystemVariant::Edmonds1, Caps::default())
            .unwrap()
            .is_empty());
        // All-1/2 satisfies the degree caps but breaks the odd-set bound.
        let half = EdgePoint::new(vec![rat(1, 2), rat(1, 2), rat(1, 2)]);
        let violations =
            check_system(&wg, &half, QSystemVariant::Edmonds1, Caps::default()).unwrap();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].family, InequalityFamily::Three);
        assert_eq!(
            violations[0].witness,
            Witness::SetPair {
                u: vec![0, 1, 2],
                f: vec![]
            }
        );
        assert_eq!(violations[0].lhs, rat(3, 2));
        assert_eq!(violations[0].rhs, rint(1));
    }

    #[test]
    fn violations_come_out_in_canonical_order() {
        let g = parallel_pair();
        let x = EdgePoint::new(vec![rint(3), rint(-1)]);
        let violations = check_system(&g, &x, QSystemVariant::QUnit, Caps::default()).unwrap();
        let mut sorted = violations.clone();
        sorted.sort_by(|a, b| {
            (a.family, &a.witness)
                .cmp(&(b.family, &b.witness))
        });
        assert_eq!(violations, sorted);
        assert!(violations
            .iter()
            .any(|v| v.family == InequalityFamily::I && v.witness == Witness::Edge(1)));
    }

    #[test]
    fn point_file_parsing() {
        let (x, missing) = parse_point("# demo\n0 2\n", 2).unwrap();
        assert_eq!(x, two_zero_point());
        assert_eq!(missing, vec![1]);

        let (y, none_missing) = parse_point("0 1/2\n1 3/4\n", 2).unwrap();
        assert_eq!(y.value(0), &rat(1, 2));
        assert_eq!(y.value(1), &rat(3, 4));
        assert!(none_missing.is_empty());

        assert!(matches!(
            parse_point("0 1\n0 2\n", 2),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_point("9 1\n", 2),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_point("0 1/0\n", 2),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
