//! Property-based invariants over random small instances.

use fpoly::chromatic::{self, LpMode};
use fpoly::graph::{EdgeSet, Multigraph, WeightedGraph};
use fpoly::lp::{check_certificate, solve, Direction, LinearProgram, Relation};
use fpoly::matching::{enumerate_all, enumerate_maximal, extend_to_maximal, is_f_matching};
use fpoly::params;
use fpoly::rat::{parse_rat, rat, rint, Rat};
use fpoly::Caps;
use proptest::prelude::*;

fn arb_weighted_graph(
    max_vertices: usize,
    max_edges: usize,
    max_f: u64,
) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_vertices)
        .prop_flat_map(move |n| {
            let edges = prop::collection::vec((0..n, 0..n - 1), 0..=max_edges);
            let weights = prop::collection::vec(1..=max_f, n);
            (Just(n), edges, weights)
        })
        .prop_map(|(n, raw_edges, f)| {
            // Encode the second endpoint as an offset to rule out loops.
            let edges: Vec<(usize, usize)> = raw_edges
                .into_iter()
                .map(|(u, v)| (u, if v >= u { v + 1 } else { v }))
                .collect();
            WeightedGraph::new(Multigraph::new(n, edges).unwrap(), f).unwrap()
        })
}

proptest! {
    /// 2|E[U]| + |∂U| = Σ_{v ∈ U} d(v).
    #[test]
    fn handshake_identity(g in arb_weighted_graph(6, 10, 3), picks in prop::collection::vec(any::<bool>(), 6)) {
        let u: Vec<usize> = (0..g.vertex_count()).filter(|&v| picks[v]).collect();
        let inside = g.graph().induced_edges(&u).unwrap().len();
        let boundary = g.graph().boundary(&u).unwrap().len();
        let degree_sum: usize = u.iter().map(|&v| g.graph().degree(v).unwrap()).sum();
        prop_assert_eq!(2 * inside + boundary, degree_sum);
    }

    /// E[U] and ∂U partition the edges incident to U, and degree is the
    /// boundary of a singleton.
    #[test]
    fn boundary_induced_partition(g in arb_weighted_graph(6, 10, 3), picks in prop::collection::vec(any::<bool>(), 6)) {
        let u: Vec<usize> = (0..g.vertex_count()).filter(|&v| picks[v]).collect();
        let inside = g.graph().induced_edges(&u).unwrap();
        let boundary = g.graph().boundary(&u).unwrap();
        prop_assert!(inside.is_disjoint(&boundary));
        let incident: EdgeSet = (0..g.edge_count())
            .filter(|&e| {
                let (a, b) = g.graph().endpoints(e);
                u.contains(&a) || u.contains(&b)
            })
            .collect();
        let union: EdgeSet = inside.union(&boundary).copied().collect();
        prop_assert_eq!(union, incident);
        for &v in &u {
            prop_assert_eq!(g.graph().degree(v).unwrap(), g.graph().boundary(&[v]).unwrap().len());
        }
    }

    #[test]
    fn parse_serialize_round_trip(g in arb_weighted_graph(5, 8, 3)) {
        let text = g.to_text();
        let parsed = WeightedGraph::parse(&text).unwrap();
        prop_assert_eq!(parsed, g);
    }

    /// (Σ aᵢ)/(Σ bᵢ) ≤ max aᵢ/bᵢ for positive rationals.
    #[test]
    fn mediant_inequality(pairs in prop::collection::vec((1i64..=30, 1i64..=30), 1..8)) {
        let mut num = rint(0);
        let mut den = rint(0);
        let mut best: Option<Rat> = None;
        for (a, b) in &pairs {
            num += rint(*a);
            den += rint(*b);
            let ratio = rat(*a, *b);
            best = Some(match best { None => ratio, Some(m) => m.max(ratio) });
        }
        prop_assert!(num / den <= best.unwrap());
    }

    /// Every subset of an f-matching is an f-matching, every f-matching
    /// extends to a maximal one, and the maximal list is a sublist.
    #[test]
    fn matching_closure_properties(g in arb_weighted_graph(4, 7, 2)) {
        let all = enumerate_all(&g, Caps::default()).unwrap();
        let maximal = enumerate_maximal(&g, Caps::default()).unwrap();
        for m in &maximal {
            prop_assert!(all.contains(m));
        }
        for m in &all {
            for &e in m.edges() {
                let mut smaller = m.edges().clone();
                smaller.remove(&e);
                prop_assert!(is_f_matching(&g, &smaller).unwrap());
            }
            let grown = extend_to_maximal(&g, m.edges());
            prop_assert!(m.edges().is_subset(&grown));
            prop_assert!(maximal.iter().any(|mm| mm.edges() == &grown));
        }
    }

    /// For fixed U the Γ objective depends on F only through |F|: the
    /// size-based scan agrees with literal enumeration of boundary subsets.
    #[test]
    fn gamma_matches_literal_boundary_subsets(g in arb_weighted_graph(4, 5, 2)) {
        let n = g.vertex_count();
        let mut literal: Option<Rat> = None;
        for mask in 0u64..(1 << n) {
            let u: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let boundary: Vec<usize> = g.graph().boundary(&u).unwrap().into_iter().collect();
            let inside = g.graph().induced_edges(&u).unwrap().len() as u64;
            let f_u = g.f_sum(&u).unwrap();
            for fmask in 0u64..(1 << boundary.len()) {
                let size = fmask.count_ones() as u64;
                let total = f_u + size;
                if total < 2 {
                    continue;
                }
                let value = rat(inside + size, total / 2);
                literal = Some(match literal.take() { None => value, Some(b) => b.max(value) });
            }
        }
        let scanned = params::gamma_star(&g, Caps::default()).unwrap();
        prop_assert_eq!(literal.unwrap_or_else(|| rint(0)), scanned);
    }

    /// Maximizing the density over induced subgraphs equals maximizing over
    /// all subgraphs.
    #[test]
    fn density_over_all_subgraphs(g in arb_weighted_graph(4, 5, 3)) {
        let n = g.vertex_count();
        let mut over_subgraphs: Option<Rat> = None;
        for mask in 1u64..(1 << n) {
            let u: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if u.len() < 2 {
                continue;
            }
            let inside: Vec<usize> = g.graph().induced_edges(&u).unwrap().into_iter().collect();
            let f_u = g.f_sum(&u).unwrap();
            for emask in 0u64..(1 << inside.len()) {
                let count = emask.count_ones() as u64;
                let value = rat(count, f_u / 2);
                over_subgraphs = Some(match over_subgraphs.take() { None => value, Some(b) => b.max(value) });
            }
        }
        let expected = over_subgraphs.unwrap_or_else(|| rint(0));
        prop_assert_eq!(params::density_star(&g, Caps::default()).unwrap(), expected);
    }

    /// w* ≤ Γ*, the density-interchange identity, and witness reproduction.
    #[test]
    fn parameter_report_invariants(g in arb_weighted_graph(5, 8, 3)) {
        let report = params::report(&g, Caps::default()).unwrap();
        prop_assert!(report.density_star <= report.gamma_star);
        prop_assert!(params::densities_interchangeable(&g, Caps::default()).unwrap());
        if let Some((u, s)) = &report.gamma_witness {
            prop_assert_eq!(params::gamma_objective(&g, u, *s).unwrap(), report.gamma_star.clone());
        }
        if let Some(u) = &report.density_witness {
            let inside = g.graph().induced_edges(u).unwrap().len() as u64;
            let f_u = g.f_sum(u).unwrap();
            prop_assert_eq!(rat(inside, f_u / 2), report.density_star.clone());
        }
    }

    /// Solver outcomes always carry a certificate that checks out.
    #[test]
    fn lp_outcomes_are_certified(
        n in 1usize..=3,
        maximize in any::<bool>(),
        obj in prop::collection::vec(-3i64..=3, 3),
        raw_rows in prop::collection::vec(
            (prop::collection::vec(-3i64..=3, 3), 0usize..3, -4i64..=4),
            0..4
        ),
    ) {
        let direction = if maximize { Direction::Maximize } else { Direction::Minimize };
        let mut lp = LinearProgram::new(direction, obj[..n].iter().map(|&c| rint(c)).collect());
        for (coeffs, rel, rhs) in raw_rows {
            let relation = [Relation::Le, Relation::Eq, Relation::Ge][rel];
            lp.push_row(coeffs[..n].iter().map(|&c| rint(c)).collect(), relation, rint(rhs));
        }
        let outcome = solve(&lp).unwrap();
        prop_assert!(check_certificate(&lp, &outcome).unwrap());
    }

    #[test]
    fn rational_strings_round_trip(p in -1000i64..=1000, q in 1i64..=1000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Convex combinations of f-matching indicators are members, and members
    /// satisfy both relaxed systems (the converse fails on the gallery
    /// graphs). With unit weights, membership coincides with the classical
    /// matching system exactly.
    #[test]
    fn members_satisfy_the_relaxed_systems(
        g in arb_weighted_graph(4, 6, 2),
        picks in prop::collection::vec((0usize..64, 0i64..=4), 2..4),
    ) {
        use fpoly::matching::indicator;
        use fpoly::polytope::{check_system, membership, EdgePoint, QSystemVariant};

        let matchings = enumerate_all(&g, Caps::default()).unwrap();
        // A random convex combination of indicator vectors.
        let mut weights: Vec<(usize, i64)> = picks
            .iter()
            .map(|&(i, w)| (i % matchings.len(), w))
            .collect();
        if weights.iter().all(|(_, w)| *w == 0) {
            weights[0].1 = 1;
        }
        let total: i64 = weights.iter().map(|(_, w)| w).sum();
        let mut coords = vec![rint(0); g.edge_count()];
        for (i, w) in &weights {
            let ind = indicator(&g, &matchings[*i]);
            for (c, v) in coords.iter_mut().zip(ind.values()) {
                *c += rat(*w, total) * v;
            }
        }
        let x = EdgePoint::new(coords);

        prop_assert!(membership(&g, &x, Caps::default()).unwrap().is_member());
        for variant in [QSystemVariant::QOriginal, QSystemVariant::QUnit] {
            prop_assert!(check_system(&g, &x, variant, Caps::default()).unwrap().is_empty());
        }
    }

    /// For unit weights the classical matching system characterizes
    /// membership exactly, on random box points.
    #[test]
    fn unit_weight_system_is_exact(
        g in arb_weighted_graph(4, 6, 1),
        raw in prop::collection::vec((0i64..=4, 1i64..=4), 6),
    ) {
        use fpoly::polytope::{check_system, membership, EdgePoint, QSystemVariant};
        let coords: Vec<Rat> = (0..g.edge_count())
            .map(|e| {
                let (p, q) = raw[e];
                rat(p.min(q), q)
            })
            .collect();
        let x = EdgePoint::new(coords);
        let member = membership(&g, &x, Caps::default()).unwrap().is_member();
        let clean = check_system(&g, &x, QSystemVariant::Edmonds1, Caps::default())
            .unwrap()
            .is_empty();
        prop_assert_eq!(member, clean);
    }

    /// The optimal fractional weighting really is a fractional colouring and
    /// both LP routes agree (heavier, so fewer cases).
    #[test]
    fn fractional_colouring_conditions(g in arb_weighted_graph(4, 6, 2)) {
        let (cover_value, cover) = chromatic::frac_index_lp(&g, LpMode::CoverMaximal, Caps::default()).unwrap();
        let (eq_value, equality) = chromatic::frac_index_lp(&g, LpMode::EqualityAll, Caps::default()).unwrap();
        prop_assert_eq!(&cover_value, &eq_value);
        prop_assert!(cover.verify(&g, LpMode::CoverMaximal));
        prop_assert!(equality.verify(&g, LpMode::EqualityAll));
        prop_assert_eq!(cover_value, cover.value());
        // The integer index partition is disjoint, spans E(G), and sits
        // between the fractional ceiling and the general upper bound.
        let (chi, classes) = chromatic::exact_index(&g, Caps::default()).unwrap();
        let mut seen = EdgeSet::new();
        for class in &classes {
            prop_assert!(is_f_matching(&g, class.edges()).unwrap());
            for &e in class.edges() {
                prop_assert!(seen.insert(e));
            }
        }
        prop_assert_eq!(seen.len(), g.edge_count());
        prop_assert_eq!(classes.len() as u64, chi);
        prop_assert!(rint(chi) >= eq_value);
    }
}
