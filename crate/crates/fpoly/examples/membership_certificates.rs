//! Membership in the f-matching polytope always comes with a certificate:
//! convex weights over f-matchings that re-sum to the point, or a separating
//! functional valid on every f-matching indicator but not on the point.
//!
//! ```bash
//! cargo run --example membership_certificates
//! ```

use fpoly::graph::WeightedGraph;
use fpoly::polytope::{membership, separating_check, EdgePoint, MembershipVerdict};
use fpoly::rat::{rat, rint};
use fpoly::Caps;

fn describe(g: &WeightedGraph, x: &EdgePoint) {
    let coords: Vec<String> = x.values().iter().map(|v| v.to_string()).collect();
    println!("point ({}):", coords.join(", "));
    match membership(g, x, Caps::default()).unwrap() {
        MembershipVerdict::Member { weights } => {
            println!("  member; convex combination:");
            for (m, w) in &weights {
                let ids: Vec<String> = m.edges().iter().map(|e| e.to_string()).collect();
                println!("    {w} * {{{}}}", ids.join(", "));
            }
        }
        MembershipVerdict::NonMember { functional } => {
            let a: Vec<String> = functional.coeffs.values().iter().map(|v| v.to_string()).collect();
            println!(
                "  non-member; separating functional a = ({}), c = {}",
                a.join(", "),
                functional.bound
            );
            println!(
                "  re-verified against every f-matching: {}",
                separating_check(g, &functional, x, Caps::default()).unwrap()
            );
        }
    }
}

fn main() {
    // A path of three vertices where the middle vertex may be used twice.
    let g = WeightedGraph::parse("vertex a 1\nvertex b 2\nvertex c 1\nedge a b\nedge b c\n")
        .unwrap();
    describe(&g, &EdgePoint::new(vec![rint(1), rint(1)]));
    describe(&g, &EdgePoint::new(vec![rat(1, 2), rat(3, 4)]));
    describe(&g, &EdgePoint::new(vec![rat(3, 2), rint(0)]));
}
