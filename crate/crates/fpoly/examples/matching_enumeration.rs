//! Enumerate all f-matchings of a small weighted graph, mark the maximal
//! ones, and show the indicator vector of one of them.
//!
//! ```bash
//! cargo run --example matching_enumeration
//! ```

use fpoly::graph::{Multigraph, WeightedGraph};
use fpoly::matching::{enumerate_all, enumerate_maximal, indicator};
use fpoly::Caps;

fn main() {
    // A 4-cycle where one vertex may be matched twice.
    let graph = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let g = WeightedGraph::new(graph, vec![2, 1, 1, 1]).unwrap();

    let all = enumerate_all(&g, Caps::default()).unwrap();
    let maximal = enumerate_maximal(&g, Caps::default()).unwrap();
    println!(
        "{} f-matchings in total, {} inclusion-maximal:",
        all.len(),
        maximal.len()
    );
    for m in &all {
        let ids: Vec<String> = m.edges().iter().map(|e| e.to_string()).collect();
        let mark = if maximal.contains(m) { "  [maximal]" } else { "" };
        println!("  {{{}}}{mark}", ids.join(", "));
    }

    let sample = maximal.last().unwrap();
    let x = indicator(&g, sample);
    let coords: Vec<String> = x.values().iter().map(|v| v.to_string()).collect();
    println!("indicator of the last maximal one: ({})", coords.join(", "));
}
