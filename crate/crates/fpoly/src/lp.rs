//! Exact rational linear programming.
//!
//! A dense two-phase simplex over [`Rat`] with Bland's smallest-index
//! anti-cycling rule. Instance sizes here are desk scale (at most a few
//! thousand columns from f-matching enumeration), so exactness and
//! simplicity beat sparse sophistication. Every outcome carries a
//! certificate that [`check_certificate`] verifies independently of any
//! solver state:
//!
//! * `Optimal` — the point plus dual multipliers; verified by primal
//!   feasibility, dual sign conditions, complementary slackness, and the
//!   strong-duality identity.
//! * `Infeasible` — a Farkas vector whose aggregated constraint contradicts
//!   the variable lower bounds.
//! * `Unbounded` — a feasible point plus an improving ray.
//!
//! Pivoting is deterministic: identical inputs yield identical bases, points,
//! and certificates.

use crate::rat::Rat;
use crate::{Error, Result};
use num::traits::{One, Signed, Zero};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpRow {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

/// An exact LP: `direction c·x` subject to rows `a·x {≤,=,≥} b` and
/// per-variable lower bounds (`None` marks a free variable). Upper bounds are
/// expressed as rows.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub variable_count: usize,
    pub rows: Vec<LpRow>,
    pub objective: Vec<Rat>,
    pub direction: Direction,
    pub lower_bounds: Vec<Option<Rat>>,
}

impl LinearProgram {
    /// An LP with the given objective; all variables bounded below by 0.
    pub fn new(direction: Direction, objective: Vec<Rat>) -> Self {
        let n = objective.len();
        LinearProgram {
            variable_count: n,
            rows: Vec::new(),
            objective,
            direction,
            lower_bounds: vec![Some(Rat::zero()); n],
        }
    }

    pub fn minimize(objective: Vec<Rat>) -> Self {
        Self::new(Direction::Minimize, objective)
    }

    pub fn maximize(objective: Vec<Rat>) -> Self {
        Self::new(Direction::Maximize, objective)
    }

    pub fn push_row(&mut self, coeffs: Vec<Rat>, relation: Relation, rhs: Rat) {
        self.rows.push(LpRow {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Removes the lower bound of variable `j`.
    pub fn set_free(&mut self, j: usize) {
        self.lower_bounds[j] = None;
    }

    pub fn set_lower_bound(&mut self, j: usize, bound: Rat) {
        self.lower_bounds[j] = Some(bound);
    }

    fn validate(&self) -> Result<()> {
        let n = self.variable_count;
        if self.objective.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "objective has {} coefficients for {} variables",
                self.objective.len(),
                n
            )));
        }
        if self.lower_bounds.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} lower bounds for {} variables",
                self.lower_bounds.len(),
                n
            )));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.coeffs.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} coefficients for {} variables",
                    i,
                    row.coeffs.len(),
                    n
                )));
            }
        }
        Ok(())
    }
}

/// Solver outcome with its certificate.
///
/// `Optimal.dual` holds row multipliers for the equivalent *minimization*
/// problem (a maximization is solved as `min −c·x`); [`check_certificate`]
/// applies the same convention. `Infeasible.farkas` aggregates the rows into
/// a contradiction: with `y` respecting the row senses (`y ≤ 0` on `≤` rows,
/// `y ≥ 0` on `≥` rows) the combination `d = Σ yᵢaᵢ` is non-positive on
/// lower-bounded variables and zero on free ones, yet `y·b > Σ dⱼlⱼ`.
#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rat,
        point: Vec<Rat>,
        dual: Vec<Rat>,
    },
    Infeasible {
        farkas: Vec<Rat>,
    },
    Unbounded {
        point: Vec<Rat>,
        ray: Vec<Rat>,
    },
}

#[derive(Copy, Clone)]
struct CompVar {
    orig: usize,
    negated: bool,
}

enum End {
    Optimal,
    Unbounded { col: usize },
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

fn row_sub(target: &mut [Rat], source: &[Rat], factor: &Rat) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= factor * s;
        }
    }
}

fn pivot(tab: &mut [Vec<Rat>], cost: &mut [Rat], basis: &mut [usize], r: usize, j: usize) {
    let p = tab[r][j].clone();
    if !p.is_one() {
        for v in tab[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &p;
            }
        }
    }
    let prow = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i != r {
            let f = row[j].clone();
            if !f.is_zero() {
                row_sub(row, &prow, &f);
            }
        }
    }
    let f = cost[j].clone();
    if !f.is_zero() {
        row_sub(cost, &prow, &f);
    }
    basis[r] = j;
}

/// Bland's rule: entering = smallest eligible index with negative reduced
/// cost; leaving = smallest basic index among the minimum ratios.
fn run_simplex(tab: &mut [Vec<Rat>], cost: &mut [Rat], basis: &mut [usize], eligible: &[bool]) -> End {
    let m = tab.len();
    let rhs_col = cost.len() - 1;
    loop {
        let entering = (0..rhs_col).find(|&j| eligible[j] && cost[j].is_negative());
        let Some(j) = entering else {
            return End::Optimal;
        };
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if tab[i][j].is_positive() {
                let ratio = &tab[i][rhs_col] / &tab[i][j];
                let better = match &leave {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        match leave {
            Some((r, _)) => pivot(tab, cost, basis, r, j),
            None => return End::Unbounded { col: j },
        }
    }
}

/// Solves an exact LP. Deterministic: a fixed input always produces the same
/// outcome, point, and certificate.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let n = lp.variable_count;
    let m = lp.rows.len();

    let c_min: Vec<Rat> = match lp.direction {
        Direction::Minimize => lp.objective.clone(),
        Direction::Maximize => lp.objective.iter().map(|c| -c).collect(),
    };

    // Computational variables: x_j = l_j + y_k for lower-bounded variables,
    // x_j = y_pos - y_neg for free ones.
    let mut comp: Vec<CompVar> = Vec::new();
    for j in 0..n {
        comp.push(CompVar {
            orig: j,
            negated: false,
        });
        if lp.lower_bounds[j].is_none() {
            comp.push(CompVar {
                orig: j,
                negated: true,
            });
        }
    }
    let n_cv = comp.len();
    let n_slack = lp
        .rows
        .iter()
        .filter(|r| r.relation != Relation::Eq)
        .count();
    let n_cs = n_cv + n_slack;
    let n_total = n_cs + m;
    let rhs_col = n_total;

    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut row_flip = vec![false; m];
    let mut slack_cursor = 0usize;
    for (i, row) in lp.rows.iter().enumerate() {
        let mut t = vec![Rat::zero(); n_total + 1];
        for (k, cv) in comp.iter().enumerate() {
            let a = &row.coeffs[cv.orig];
            if !a.is_zero() {
                t[k] = if cv.negated { -a.clone() } else { a.clone() };
            }
        }
        let mut rhs = row.rhs.clone();
        for j in 0..n {
            if let Some(l) = &lp.lower_bounds[j] {
                if !l.is_zero() && !row.coeffs[j].is_zero() {
                    rhs -= &row.coeffs[j] * l;
                }
            }
        }
        match row.relation {
            Relation::Le => {
                t[n_cv + slack_cursor] = Rat::one();
                slack_cursor += 1;
            }
            Relation::Ge => {
                t[n_cv + slack_cursor] = -Rat::one();
                slack_cursor += 1;
            }
            Relation::Eq => {}
        }
        if rhs.is_negative() {
            row_flip[i] = true;
            for v in t.iter_mut() {
                if !v.is_zero() {
                    *v = -v.clone();
                }
            }
            rhs = -rhs;
        }
        t[n_cs + i] = Rat::one();
        t[rhs_col] = rhs;
        tab.push(t);
    }

    let mut basis: Vec<usize> = (0..m).map(|i| n_cs + i).collect();
    // Artificials never (re-)enter the basis.
    let eligible: Vec<bool> = (0..n_total).map(|j| j < n_cs).collect();

    // Phase 1: minimize the sum of artificials.
    let mut cost = vec![Rat::zero(); n_total + 1];
    for i in 0..m {
        cost[n_cs + i] = Rat::one();
    }
    for row in &tab {
        row_sub(&mut cost, row, &Rat::one());
    }
    match run_simplex(&mut tab, &mut cost, &mut basis, &eligible) {
        End::Optimal => {}
        End::Unbounded { .. } => unreachable!("phase 1 objective is bounded below by zero"),
    }
    let phase1_value = -cost[rhs_col].clone();
    if phase1_value.is_positive() {
        let mut farkas = Vec::with_capacity(m);
        for i in 0..m {
            let w = Rat::one() - &cost[n_cs + i];
            farkas.push(if row_flip[i] { -w } else { w });
        }
        return Ok(LpOutcome::Infeasible { farkas });
    }

    // Drive artificials out of the basis where possible; rows where none of
    // the real columns has a nonzero entry are redundant and stay inert.
    for r in 0..m {
        if basis[r] >= n_cs {
            if let Some(q) = (0..n_cs).find(|&q| !tab[r][q].is_zero()) {
                pivot(&mut tab, &mut cost, &mut basis, r, q);
            }
        }
    }

    // Phase 2: the real objective.
    let mut cost = vec![Rat::zero(); n_total + 1];
    for (k, cv) in comp.iter().enumerate() {
        let c = &c_min[cv.orig];
        if !c.is_zero() {
            cost[k] = if cv.negated { -c.clone() } else { c.clone() };
        }
    }
    for i in 0..m {
        let cb = cost[basis[i]].clone();
        if !cb.is_zero() {
            let trow = tab[i].clone();
            row_sub(&mut cost, &trow, &cb);
        }
    }
    let end = run_simplex(&mut tab, &mut cost, &mut basis, &eligible);

    let comp_point = |tab: &[Vec<Rat>], basis: &[usize]| -> Vec<Rat> {
        let mut y = vec![Rat::zero(); n_cs];
        for i in 0..m {
            if basis[i] < n_cs {
                y[basis[i]] = tab[i][rhs_col].clone();
            }
        }
        y
    };
    let to_original = |y: &[Rat], include_shift: bool| -> Vec<Rat> {
        let mut x: Vec<Rat> = (0..n)
            .map(|j| {
                if include_shift {
                    lp.lower_bounds[j].clone().unwrap_or_else(Rat::zero)
                } else {
                    Rat::zero()
                }
            })
            .collect();
        for (k, cv) in comp.iter().enumerate() {
            if y[k].is_zero() {
                continue;
            }
            if cv.negated {
                x[cv.orig] -= &y[k];
            } else {
                x[cv.orig] += &y[k];
            }
        }
        x
    };

    match end {
        End::Optimal => {
            let point = to_original(&comp_point(&tab, &basis), true);
            let value = dot(&lp.objective, &point);
            let mut dual = Vec::with_capacity(m);
            for i in 0..m {
                let w = -cost[n_cs + i].clone();
                dual.push(if row_flip[i] { -w } else { w });
            }
            let outcome = LpOutcome::Optimal { value, point, dual };
            debug_assert!(matches!(check_certificate(lp, &outcome), Ok(true)));
            Ok(outcome)
        }
        End::Unbounded { col } => {
            let mut y_ray = vec![Rat::zero(); n_cs];
            y_ray[col] = Rat::one();
            for i in 0..m {
                if basis[i] < n_cs && !tab[i][col].is_zero() {
                    y_ray[basis[i]] = -tab[i][col].clone();
                }
            }
            let ray = to_original(&y_ray, false);
            let point = to_original(&comp_point(&tab, &basis), true);
            let outcome = LpOutcome::Unbounded { point, ray };
            debug_assert!(matches!(check_certificate(lp, &outcome), Ok(true)));
            Ok(outcome)
        }
    }
}

fn point_feasible(lp: &LinearProgram, x: &[Rat]) -> bool {
    for row in &lp.rows {
        let lhs = dot(&row.coeffs, x);
        let ok = match row.relation {
            Relation::Le => lhs <= row.rhs,
            Relation::Eq => lhs == row.rhs,
            Relation::Ge => lhs >= row.rhs,
        };
        if !ok {
            return false;
        }
    }
    lp.lower_bounds
        .iter()
        .zip(x)
        .all(|(l, v)| l.as_ref().is_none_or(|l| v >= l))
}

/// Independently verifies an outcome's certificate using only rational
/// arithmetic and the LP itself — no solver state, no tolerances. Returns
/// `false` for a certificate that does not prove its claim; errs only on
/// dimension mismatches.
pub fn check_certificate(lp: &LinearProgram, outcome: &LpOutcome) -> Result<bool> {
    lp.validate()?;
    let n = lp.variable_count;
    let m = lp.rows.len();
    let dim = |what: &str, got: usize, want: usize| {
        Error::DimensionMismatch(format!("{what} has length {got}, expected {want}"))
    };

    match outcome {
        LpOutcome::Optimal { value, point, dual } => {
            if point.len() != n {
                return Err(dim("point", point.len(), n));
            }
            if dual.len() != m {
                return Err(dim("dual", dual.len(), m));
            }
            if !point_feasible(lp, point) {
                return Ok(false);
            }
            if &dot(&lp.objective, point) != value {
                return Ok(false);
            }
            let c_min: Vec<Rat> = match lp.direction {
                Direction::Minimize => lp.objective.clone(),
                Direction::Maximize => lp.objective.iter().map(|c| -c).collect(),
            };
            let value_min = match lp.direction {
                Direction::Minimize => value.clone(),
                Direction::Maximize => -value.clone(),
            };
            for (row, y) in lp.rows.iter().zip(dual) {
                let sign_ok = match row.relation {
                    Relation::Le => !y.is_positive(),
                    Relation::Ge => !y.is_negative(),
                    Relation::Eq => true,
                };
                if !sign_ok {
                    return Ok(false);
                }
            }
            // Reduced costs r = c_min - Aᵀy.
            let mut reduced = c_min;
            for (row, y) in lp.rows.iter().zip(dual) {
                if !y.is_zero() {
                    for (r, a) in reduced.iter_mut().zip(&row.coeffs) {
                        if !a.is_zero() {
                            *r -= y * a;
                        }
                    }
                }
            }
            for (r, l) in reduced.iter().zip(&lp.lower_bounds) {
                match l {
                    Some(_) => {
                        if r.is_negative() {
                            return Ok(false);
                        }
                    }
                    None => {
                        if !r.is_zero() {
                            return Ok(false);
                        }
                    }
                }
            }
            // Complementary slackness.
            for (row, y) in lp.rows.iter().zip(dual) {
                if !y.is_zero() && dot(&row.coeffs, point) != row.rhs {
                    return Ok(false);
                }
            }
            for j in 0..n {
                if reduced[j].is_positive() {
                    let l = lp.lower_bounds[j].as_ref().expect("free reduced cost is zero");
                    if &point[j] != l {
                        return Ok(false);
                    }
                }
            }
            // Strong duality: value = y·b + r·l.
            let mut dual_value = Rat::zero();
            for (row, y) in lp.rows.iter().zip(dual) {
                if !y.is_zero() && !row.rhs.is_zero() {
                    dual_value += y * &row.rhs;
                }
            }
            for (r, l) in reduced.iter().zip(&lp.lower_bounds) {
                if let Some(l) = l {
                    if !r.is_zero() && !l.is_zero() {
                        dual_value += r * l;
                    }
                }
            }
            Ok(dual_value == value_min)
        }
        LpOutcome::Infeasible { farkas } => {
            if farkas.len() != m {
                return Err(dim("farkas", farkas.len(), m));
            }
            for (row, y) in lp.rows.iter().zip(farkas) {
                let sign_ok = match row.relation {
                    Relation::Le => !y.is_positive(),
                    Relation::Ge => !y.is_negative(),
                    Relation::Eq => true,
                };
                if !sign_ok {
                    return Ok(false);
                }
            }
            let mut combo = vec![Rat::zero(); n];
            let mut agg_rhs = Rat::zero();
            for (row, y) in lp.rows.iter().zip(farkas) {
                if y.is_zero() {
                    continue;
                }
                for (d, a) in combo.iter_mut().zip(&row.coeffs) {
                    if !a.is_zero() {
                        *d += y * a;
                    }
                }
                if !row.rhs.is_zero() {
                    agg_rhs += y * &row.rhs;
                }
            }
            let mut bound_value = Rat::zero();
            for (d, l) in combo.iter().zip(&lp.lower_bounds) {
                match l {
                    Some(l) => {
                        if d.is_positive() {
                            return Ok(false);
                        }
                        if !d.is_zero() && !l.is_zero() {
                            bound_value += d * l;
                        }
                    }
                    None => {
                        if !d.is_zero() {
                            return Ok(false);
                        }
                    }
                }
            }
            // Every feasible x would satisfy d·x >= y·b yet d·x <= d·l.
            Ok(agg_rhs > bound_value)
        }
        LpOutcome::Unbounded { point, ray } => {
            if point.len() != n {
                return Err(dim("point", point.len(), n));
            }
            if ray.len() != n {
                return Err(dim("ray", ray.len(), n));
            }
            if !point_feasible(lp, point) {
                return Ok(false);
            }
            for row in &lp.rows {
                let s = dot(&row.coeffs, ray);
                let ok = match row.relation {
                    Relation::Le => !s.is_positive(),
                    Relation::Eq => s.is_zero(),
                    Relation::Ge => !s.is_negative(),
                };
                if !ok {
                    return Ok(false);
                }
            }
            for (r, l) in ray.iter().zip(&lp.lower_bounds) {
                if l.is_some() && r.is_negative() {
                    return Ok(false);
                }
            }
            let drift = dot(&lp.objective, ray);
            Ok(match lp.direction {
                Direction::Minimize => drift.is_negative(),
                Direction::Maximize => drift.is_positive(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn assert_certified(lp: &LinearProgram, outcome: &LpOutcome) {
        assert!(check_certificate(lp, outcome).unwrap(), "certificate rejected for {outcome:?}");
    }

    #[test]
    fn one_variable_minimum() {
        let mut lp = LinearProgram::minimize(vec![rint(1)]);
        lp.push_row(vec![rint(1)], Relation::Ge, rat(1, 3));
        let outcome = solve(&lp).unwrap();
        match &outcome {
            LpOutcome::Optimal { value, point, .. } => {
                assert_eq!(*value, rat(1, 3));
                assert_eq!(point[0], rat(1, 3));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
        assert_certified(&lp, &outcome);

        // A claimed optimum of 1/2 fails the independent check.
        let fake = LpOutcome::Optimal {
            value: rat(1, 2),
            point: vec![rat(1, 2)],
            dual: vec![rint(0)],
        };
        assert!(!check_certificate(&lp, &fake).unwrap());
    }

    #[test]
    fn contradictory_rows_are_infeasible() {
        let mut lp = LinearProgram::minimize(vec![rint(0)]);
        lp.push_row(vec![rint(1)], Relation::Le, rint(0));
        lp.push_row(vec![rint(1)], Relation::Ge, rint(1));
        let outcome = solve(&lp).unwrap();
        assert!(matches!(outcome, LpOutcome::Infeasible { .. }));
        assert_certified(&lp, &outcome);

        let fake = LpOutcome::Infeasible {
            farkas: vec![rint(0), rint(0)],
        };
        assert!(!check_certificate(&lp, &fake).unwrap());
    }

    #[test]
    fn unbounded_above() {
        let lp = LinearProgram::maximize(vec![rint(1)]);
        let outcome = solve(&lp).unwrap();
        assert!(matches!(outcome, LpOutcome::Unbounded { .. }));
        assert_certified(&lp, &outcome);
    }

    #[test]
    fn equalities_via_two_phases() {
        let mut lp = LinearProgram::minimize(vec![rint(1), rint(1)]);
        lp.push_row(vec![rint(1), rint(1)], Relation::Eq, rint(2));
        lp.push_row(vec![rint(1), rint(-1)], Relation::Eq, rint(0));
        let outcome = solve(&lp).unwrap();
        match &outcome {
            LpOutcome::Optimal { value, point, .. } => {
                assert_eq!(*value, rint(2));
                assert_eq!(point, &vec![rint(1), rint(1)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
        assert_certified(&lp, &outcome);
    }

    #[test]
    fn maximization_with_slack_rows() {
        let mut lp = LinearProgram::maximize(vec![rint(3), rint(2)]);
        lp.push_row(vec![rint(1), rint(1)], Relation::Le, rint(4));
        lp.push_row(vec![rint(1), rint(0)], Relation::Le, rint(2));
        lp.push_row(vec![rint(0), rint(1)], Relation::Le, rint(3));
        let outcome = solve(&lp).unwrap();
        match &outcome {
            LpOutcome::Optimal { value, point, .. } => {
                assert_eq!(*value, rint(10));
                assert_eq!(point, &vec![rint(2), rint(2)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
        assert_certified(&lp, &outcome);
    }

    #[test]
    fn free_variable_hits_its_row_bound() {
        let mut lp = LinearProgram::minimize(vec![rint(1)]);
        lp.set_free(0);
        lp.push_row(vec![rint(1)], Relation::Ge, rint(-5));
        let outcome = solve(&lp).unwrap();
        match &outcome {
            LpOutcome::Optimal { value, .. } => assert_eq!(*value, rint(-5)),
            other => panic!("expected optimal, got {other:?}"),
        }
        assert_certified(&lp, &outcome);
    }

    /// A classic degenerate instance on which greedy pivot rules cycle
    /// forever; Bland's rule must terminate at value -1/20.
    #[test]
    fn degenerate_cycling_fixture_terminates() {
        let mut lp = LinearProgram::minimize(vec![rat(-3, 4), rint(150), rat(-1, 50), rint(6)]);
        lp.push_row(
            vec![rat(1, 4), rint(-60), rat(-1, 25), rint(9)],
            Relation::Le,
            rint(0),
        );
        lp.push_row(
            vec![rat(1, 2), rint(-90), rat(-1, 50), rint(3)],
            Relation::Le,
            rint(0),
        );
        lp.push_row(vec![rint(0), rint(0), rint(1), rint(0)], Relation::Le, rint(1));
        let outcome = solve(&lp).unwrap();
        match &outcome {
            LpOutcome::Optimal { value, .. } => assert_eq!(*value, rat(-1, 20)),
            other => panic!("expected optimal, got {other:?}"),
        }
        assert_certified(&lp, &outcome);
    }

    #[test]
    fn deterministic_resolve() {
        let mut lp = LinearProgram::maximize(vec![rint(1), rint(1), rint(1)]);
        lp.push_row(vec![rint(1), rint(2), rint(1)], Relation::Le, rint(6));
        lp.push_row(vec![rint(2), rint(1), rint(1)], Relation::Le, rint(6));
        let a = solve(&lp).unwrap();
        let b = solve(&lp).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut lp = LinearProgram::minimize(vec![rint(1)]);
        lp.push_row(vec![rint(1), rint(2)], Relation::Le, rint(1));
        assert!(matches!(solve(&lp), Err(Error::DimensionMismatch(_))));
    }
}
