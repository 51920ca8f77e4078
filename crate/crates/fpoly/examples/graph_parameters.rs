//! Parse a weighted graph and compute all six parameters with witnesses.
//!
//! ```bash
//! cargo run --example graph_parameters [path/to/file.graph]
//! ```

use fpoly::graph::WeightedGraph;
use fpoly::params;
use fpoly::Caps;

const DEMO: &str = "\
# a triangle with one doubled corner
vertex a 2
vertex b 1
vertex c 1
edge a b 2
edge b c
edge a c
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable graph file"),
        None => DEMO.to_string(),
    };
    let g = WeightedGraph::parse(&text).expect("valid graph file");
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());

    let report = params::report(&g, Caps::default()).expect("within caps");
    println!("fractional maximum f-degree  delta*_f = {}", report.delta_star);
    println!("maximum f-degree             delta_f  = {}", report.delta);
    println!("fractional f-density         w*_f     = {}", report.density_star);
    println!("f-density                    w_f      = {}", report.density);
    println!("boundary-augmented density   gamma*_f = {}", report.gamma_star);
    println!("its ceiling                  gamma_f  = {}", report.gamma);

    if let Some(u) = &report.density_witness {
        let names: Vec<&str> = u.iter().map(|&v| g.name(v)).collect();
        println!("density witness: U = {{{}}}", names.join(", "));
    }
    if let Some((u, s)) = &report.gamma_witness {
        let names: Vec<&str> = u.iter().map(|&v| g.name(v)).collect();
        println!("gamma witness:   U = {{{}}}, |F| = {s}", names.join(", "));
    }
    println!(
        "density-interchange identity max{{delta+1, gamma}} = max{{delta+1, w}}: {}",
        params::densities_interchangeable(&g, Caps::default()).unwrap()
    );
}
