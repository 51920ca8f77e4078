//! Even with the unit bound `x(e) ≤ 1` added, the degree/density system
//! fails to describe the f-matching polytope. Take an odd cycle of length k
//! plus a pendant vertex doubled onto it, weight 2 at the two special
//! vertices: the half-integral point below satisfies every inequality, but
//! summing any convex representation over the cycle would force
//! k/2 ≤ ⌊k/2⌋.
//!
//! ```bash
//! cargo run --example unit_bound_gap [k]   # k odd, default 3
//! ```

use fpoly::gallery;
use fpoly::polytope::{check_system, membership, MembershipVerdict, QSystemVariant};
use fpoly::Caps;

fn main() {
    let k: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("k must be a number"))
        .unwrap_or(3);
    let item = gallery::example2(k).expect("k must be odd and at least 3");
    let g = &item.graph;
    let x = item.witness.as_ref().unwrap();

    println!("cycle length k = {k}; {} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("point: 1 on one pendant edge, 0 on the other, 1/2 on the cycle");
    for v in 0..g.vertex_count() {
        let boundary = g.graph().boundary(&[v]).unwrap();
        println!(
            "  x(boundary({})) = {}  (cap f = {})",
            g.name(v),
            x.sum_over(&boundary),
            g.f(v)
        );
    }

    let violations = check_system(g, x, QSystemVariant::QUnit, Caps::default()).unwrap();
    println!("unit-augmented system: {} violations", violations.len());

    match membership(g, x, Caps::default()).unwrap() {
        MembershipVerdict::NonMember { .. } => {
            println!("membership: NON-MEMBER (separating functional verified)");
        }
        MembershipVerdict::Member { .. } => println!("membership: member (unexpected!)"),
    }

    let outcome = gallery::verify(&item, Caps::default()).unwrap();
    println!("all structural claims pass: {}", outcome.all_passed());
}
