//! The smallest gap between the degree/density inequality system and the
//! f-matching polytope: two vertices joined by two parallel edges, both
//! weights 2. The point (2, 0) satisfies non-negativity, the degree caps,
//! and every set bound, yet no convex combination of f-matching indicators
//! reaches it — no single edge can carry weight above 1.
//!
//! ```bash
//! cargo run --example polytope_gap
//! ```

use fpoly::gallery;
use fpoly::polytope::{check_system, membership, MembershipVerdict, QSystemVariant};
use fpoly::Caps;

fn main() {
    let item = gallery::example1();
    let g = &item.graph;
    let x = item.witness.as_ref().unwrap();
    let coords: Vec<String> = x.values().iter().map(|v| v.to_string()).collect();
    println!("graph: {} vertices, {} parallel edges, weights 2", g.vertex_count(), g.edge_count());
    println!("point: x = ({})", coords.join(", "));

    let violations = check_system(g, x, QSystemVariant::QOriginal, Caps::default()).unwrap();
    println!("degree/density system: {} violations", violations.len());

    match membership(g, x, Caps::default()).unwrap() {
        MembershipVerdict::NonMember { functional } => {
            let a: Vec<String> = functional.coeffs.values().iter().map(|v| v.to_string()).collect();
            println!("membership: NON-MEMBER");
            println!(
                "separating functional: a = ({}), c = {}; a.x = {} > c",
                a.join(", "),
                functional.bound,
                functional.coeffs.dot(x)
            );
        }
        MembershipVerdict::Member { .. } => println!("membership: member (unexpected!)"),
    }

    // Adding the unit bound x(e) <= 1 catches this point...
    let unit_violations = check_system(g, x, QSystemVariant::QUnit, Caps::default()).unwrap();
    println!("with unit bounds added: {} violation(s):", unit_violations.len());
    for v in &unit_violations {
        println!("  {v}");
    }
    // ...but the unit_bound_gap example shows that even that is not enough.
}
