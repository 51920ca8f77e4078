//! The exact rational LP engine: optimal, infeasible, and unbounded outcomes
//! all carry certificates that an independent checker verifies without any
//! solver state. The last fixture makes greedy pivot rules cycle forever;
//! Bland's smallest-index rule terminates.
//!
//! ```bash
//! cargo run --example exact_lp
//! ```

use fpoly::lp::{check_certificate, solve, LinearProgram, LpOutcome, Relation};
use fpoly::rat::{rat, rint};

fn report(name: &str, lp: &LinearProgram) {
    let outcome = solve(lp).unwrap();
    let certified = check_certificate(lp, &outcome).unwrap();
    match &outcome {
        LpOutcome::Optimal { value, point, .. } => {
            let p: Vec<String> = point.iter().map(|v| v.to_string()).collect();
            println!("{name}: optimal value {value} at ({})", p.join(", "));
        }
        LpOutcome::Infeasible { farkas } => {
            let y: Vec<String> = farkas.iter().map(|v| v.to_string()).collect();
            println!("{name}: infeasible, contradiction multipliers ({})", y.join(", "));
        }
        LpOutcome::Unbounded { ray, .. } => {
            let r: Vec<String> = ray.iter().map(|v| v.to_string()).collect();
            println!("{name}: unbounded along ({})", r.join(", "));
        }
    }
    println!("  certificate independently verified: {certified}");
}

fn main() {
    let mut basic = LinearProgram::minimize(vec![rint(1)]);
    basic.push_row(vec![rint(1)], Relation::Ge, rat(1, 3));
    report("minimize x subject to x >= 1/3", &basic);

    let mut impossible = LinearProgram::minimize(vec![rint(0)]);
    impossible.push_row(vec![rint(1)], Relation::Le, rint(0));
    impossible.push_row(vec![rint(1)], Relation::Ge, rint(1));
    report("x <= 0 and x >= 1", &impossible);

    let open = LinearProgram::maximize(vec![rint(1), rint(1)]);
    report("maximize x + y with no rows", &open);

    let mut cycler = LinearProgram::minimize(vec![rat(-3, 4), rint(150), rat(-1, 50), rint(6)]);
    cycler.push_row(
        vec![rat(1, 4), rint(-60), rat(-1, 25), rint(9)],
        Relation::Le,
        rint(0),
    );
    cycler.push_row(
        vec![rat(1, 2), rint(-90), rat(-1, 50), rint(3)],
        Relation::Le,
        rint(0),
    );
    cycler.push_row(
        vec![rint(0), rint(0), rint(1), rint(0)],
        Relation::Le,
        rint(1),
    );
    report("degenerate cycling fixture (expects -1/20)", &cycler);
}
