//! Parallel edges are not to blame: a simple graph exhibits the same gap.
//! On a 4-cycle with a chord, weights 2 on two consecutive cycle vertices,
//! the witness search maximizes a deterministic family of objectives over
//! the unit-augmented polyhedron and tests each optimal vertex for
//! membership.
//!
//! ```bash
//! cargo run --example simple_graph_gap
//! ```

use fpoly::gallery::{self, WitnessSearch};
use fpoly::polytope::QSystemVariant;
use fpoly::Caps;

fn main() {
    let item = gallery::c4_chord();
    let g = &item.graph;
    println!(
        "graph: simple = {}, {} vertices, {} edges",
        g.graph().is_simple(),
        g.vertex_count(),
        g.edge_count()
    );
    if let Some(note) = &item.note {
        println!("placement: {note}");
    }
    match &item.witness {
        Some(x) => {
            println!("gap point found:");
            for e in 0..g.edge_count() {
                let (u, v) = g.graph().endpoints(e);
                println!("  x({}-{}) = {}", g.name(u), g.name(v), x.value(e));
            }
        }
        None => println!("no gap point found (unexpected)"),
    }
    let outcome = gallery::verify(&item, Caps::default()).unwrap();
    for (claim, pass) in &outcome.results {
        println!("[{}] {claim}", if *pass { "pass" } else { "FAIL" });
    }

    // The same search machinery, driven by hand with the default budget.
    let again = gallery::find_witness(g, QSystemVariant::QUnit, &WitnessSearch::default(), Caps::default())
        .unwrap()
        .expect("the default search finds the gap");
    let coords: Vec<String> = again.values().iter().map(|v| v.to_string()).collect();
    println!("another search run finds: ({})", coords.join(", "));
}
