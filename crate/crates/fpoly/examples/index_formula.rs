//! The fractional f-chromatic index obeys `χ'* = max{Δ*, Γ*}` (for
//! `Δ* ≥ 1`), and `Γ*` cannot be replaced by the plain density `w*`: on two
//! dense blobs joined by a bridge, all weights 2, the index strictly exceeds
//! `max{Δ*, w*}`.
//!
//! ```bash
//! cargo run --example index_formula [k]   # blob multiplicity, default 1
//! ```

use fpoly::chromatic::{self, LpMode};
use fpoly::gallery;
use fpoly::params;
use fpoly::Caps;

fn main() {
    let k: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("k must be a number"))
        .unwrap_or(1);
    let item = gallery::example3(k).expect("k must be at least 1");
    let g = &item.graph;
    let caps = Caps {
        max_edges: 24,
        max_vertices: 20,
    };

    println!("blob multiplicity k = {k}; every vertex has degree {}", 2 * k + 1);
    let delta_star = params::delta_star(g);
    let density_star = params::density_star(g, caps).unwrap();
    let gamma_star = params::gamma_star(g, caps).unwrap();
    println!("delta*_f = {delta_star}");
    println!("w*_f     = {density_star}");
    println!("gamma*_f = {gamma_star}   (witness pushes past delta* with one boundary edge)");

    let (by_lp, weighting) = chromatic::frac_index_lp(g, LpMode::CoverMaximal, caps).unwrap();
    let by_formula = chromatic::frac_index_formula(g, caps).unwrap();
    println!("chi'*_f by LP      = {by_lp}  ({} matchings in the weighting)", weighting.weights().len());
    println!("chi'*_f by formula = {by_formula}");
    assert_eq!(by_lp, by_formula);

    let degree_density = delta_star.max(density_star);
    println!(
        "chi'*_f = {by_lp} > max{{delta*, w*}} = {degree_density}: {}",
        by_lp > degree_density
    );
}
