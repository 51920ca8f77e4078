//! Command-line front end.
//!
//! Exit codes: 0 on success with all claims passing, 1 on a failed
//! claim/verification (a rejected point, a violated system, a failed gallery
//! claim, sweep failures), 2 on usage or input errors. All numeric output is
//! exact-rational text (`p/q` in lowest terms); `--decimal` adds approximate
//! values clearly marked as such. Output is byte-stable for fixed inputs.

use crate::chromatic::{self, BoundsReport, FractionalColouring, LpMode};
use crate::gallery::{self, SweepLimits, SweepReport};
use crate::graph::WeightedGraph;
use crate::matching::FMatching;
use crate::params::ParameterReport;
use crate::polytope::{
    check_system, first_violation, membership, parse_point, ConstraintViolation, EdgePoint,
    MembershipVerdict, QSystemVariant, Witness,
};
use crate::rat::{approx, Rat};
use crate::{Caps, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

const SCHEMA: &str = "fpoly/1";

#[derive(Parser)]
#[command(
    name = "fpoly",
    version,
    about = "Exact tools for f-matchings, the f-matching polytope, and f-chromatic indices of weighted multigraphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Add approximate decimal values next to exact rationals.
    #[arg(long, global = true)]
    decimal: bool,
    /// Largest edge count enumerated exhaustively.
    #[arg(long, global = true, default_value_t = 20)]
    cap_edges: usize,
    /// Largest vertex count scanned over subsets.
    #[arg(long, global = true, default_value_t = 20)]
    cap_vertices: usize,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the six graph parameters with witnesses.
    Params { graph: PathBuf },
    /// Exact fractional f-chromatic index with an optimal weighting.
    FracIndex {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Cover)]
        mode: ModeArg,
    },
    /// Exact integer f-chromatic index with an optimal partition.
    Index { graph: PathBuf },
    /// Index bounds and identities report.
    Bounds { graph: PathBuf },
    /// Test membership of a point in the f-matching polytope.
    Member { graph: PathBuf, point: PathBuf },
    /// Check a point against one inequality system.
    Qcheck {
        graph: PathBuf,
        point: PathBuf,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Stop at the first violation.
        #[arg(long)]
        first_only: bool,
    },
    /// Reference graphs with machine-checkable claims.
    Gallery {
        #[command(subcommand)]
        action: GalleryCmd,
    },
    /// Seeded random stress sweep over all identities.
    Sweep {
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_f: u64,
    },
}

#[derive(Subcommand)]
enum GalleryCmd {
    /// List the gallery items.
    List,
    /// Build one item and check every claim.
    Verify {
        name: String,
        /// Family parameter where applicable (example2: odd cycle length,
        /// example3: blob multiplicity).
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(ValueEnum, Copy, Clone)]
enum VariantArg {
    Q,
    QUnit,
    EdmondsF,
    Edmonds1,
}

impl From<VariantArg> for QSystemVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Q => QSystemVariant::QOriginal,
            VariantArg::QUnit => QSystemVariant::QUnit,
            VariantArg::EdmondsF => QSystemVariant::EdmondsF,
            VariantArg::Edmonds1 => QSystemVariant::Edmonds1,
        }
    }
}

#[derive(ValueEnum, Copy, Clone)]
enum ModeArg {
    Equality,
    Cover,
}

impl From<ModeArg> for LpMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Equality => LpMode::EqualityAll,
            ModeArg::Cover => LpMode::CoverMaximal,
        }
    }
}

#[derive(ValueEnum, Copy, Clone, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
}

/// Runs the command line; returns the process exit code.
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                // --help and --version land here.
                let _ = write!(out, "{e}");
                0
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        // A closed output pipe is not a failure of the computation.
        Err(crate::Error::Io(io)) if io.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Ctx {
    format: OutputFormat,
    decimal: bool,
    caps: Caps,
}

impl Ctx {
    fn rat(&self, r: &Rat) -> String {
        if self.decimal {
            format!("{r} (~{:.6})", approx(r))
        } else {
            r.to_string()
        }
    }

    fn emit(&self, out: &mut dyn Write, payload: Value) -> Result<()> {
        let rendered =
            serde_json::to_string_pretty(&payload).expect("report values serialize to JSON");
        writeln!(out, "{rendered}")?;
        Ok(())
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let ctx = Ctx {
        format: cli.format,
        decimal: cli.decimal,
        caps: Caps {
            max_edges: cli.cap_edges,
            max_vertices: cli.cap_vertices,
        },
    };
    match &cli.command {
        Cmd::Params { graph } => cmd_params(&ctx, graph, out),
        Cmd::FracIndex { graph, mode } => cmd_frac_index(&ctx, graph, (*mode).into(), out),
        Cmd::Index { graph } => cmd_index(&ctx, graph, out),
        Cmd::Bounds { graph } => cmd_bounds(&ctx, graph, out),
        Cmd::Member { graph, point } => cmd_member(&ctx, graph, point, out, err),
        Cmd::Qcheck {
            graph,
            point,
            variant,
            first_only,
        } => cmd_qcheck(&ctx, graph, point, (*variant).into(), *first_only, out, err),
        Cmd::Gallery { action } => match action {
            GalleryCmd::List => cmd_gallery_list(&ctx, out),
            GalleryCmd::Verify { name, k } => cmd_gallery_verify(&ctx, name, *k, out),
        },
        Cmd::Sweep {
            count,
            seed,
            max_vertices,
            max_edges,
            max_f,
        } => {
            let limits = SweepLimits {
                max_vertices: *max_vertices,
                max_edges: *max_edges,
                max_f: *max_f,
            };
            cmd_sweep(&ctx, *count, *seed, limits, out)
        }
    }
}

fn load_graph(path: &Path) -> Result<WeightedGraph> {
    WeightedGraph::parse(&std::fs::read_to_string(path)?)
}

fn load_point(
    path: &Path,
    g: &WeightedGraph,
    err: &mut dyn Write,
) -> Result<EdgePoint> {
    let (point, missing) = parse_point(&std::fs::read_to_string(path)?, g.edge_count())?;
    for e in missing {
        let _ = writeln!(err, "warning: edge {e} missing from point file, defaulting to 0");
    }
    Ok(point)
}

fn names_of(g: &WeightedGraph, ids: &[usize]) -> String {
    let names: Vec<&str> = ids.iter().map(|&v| g.name(v)).collect();
    format!("{{{}}}", names.join(", "))
}

fn weights_json(weights: &[(FMatching, Rat)]) -> Value {
    Value::Array(
        weights
            .iter()
            .map(|(m, w)| {
                json!({
                    "edges": m.edges().iter().collect::<Vec<_>>(),
                    "weight": w.to_string(),
                })
            })
            .collect(),
    )
}

fn params_json(ctx: &Ctx, p: &ParameterReport) -> Value {
    let mut v = json!({
        "delta_star": p.delta_star.to_string(),
        "delta": p.delta,
        "density_star": p.density_star.to_string(),
        "density": p.density,
        "gamma_star": p.gamma_star.to_string(),
        "gamma": p.gamma,
        "density_witness": p.density_witness,
        "gamma_witness": p.gamma_witness.as_ref().map(|(u, s)| json!({"u": u, "f_size": s})),
    });
    if ctx.decimal {
        let o = v.as_object_mut().expect("object literal");
        o.insert("delta_star_approx".into(), json!(approx(&p.delta_star)));
        o.insert("density_star_approx".into(), json!(approx(&p.density_star)));
        o.insert("gamma_star_approx".into(), json!(approx(&p.gamma_star)));
    }
    v
}

fn cmd_params(ctx: &Ctx, path: &Path, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(path)?;
    let p = crate::params::report(&g, ctx.caps)?;
    match ctx.format {
        OutputFormat::Json => {
            let mut payload = json!({"schema": SCHEMA, "report": "params"});
            payload
                .as_object_mut()
                .expect("object literal")
                .append(params_json(ctx, &p).as_object_mut().expect("object literal"));
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => {
            writeln!(out, "delta*_f = {}", ctx.rat(&p.delta_star))?;
            writeln!(out, "delta_f  = {}", p.delta)?;
            match &p.density_witness {
                Some(u) => writeln!(
                    out,
                    "w*_f     = {}   (witness U = {})",
                    ctx.rat(&p.density_star),
                    names_of(&g, u)
                )?,
                None => writeln!(out, "w*_f     = {}", ctx.rat(&p.density_star))?,
            }
            writeln!(out, "w_f      = {}", p.density)?;
            match &p.gamma_witness {
                Some((u, s)) => writeln!(
                    out,
                    "gamma*_f = {}   (witness U = {}, |F| = {})",
                    ctx.rat(&p.gamma_star),
                    names_of(&g, u),
                    s
                )?,
                None => writeln!(out, "gamma*_f = {}", ctx.rat(&p.gamma_star))?,
            }
            writeln!(out, "gamma_f  = {}", p.gamma)?;
        }
    }
    Ok(0)
}

fn describe_matching(m: &FMatching) -> String {
    let ids: Vec<String> = m.edges().iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", ids.join(", "))
}

fn cmd_frac_index(ctx: &Ctx, path: &Path, mode: LpMode, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(path)?;
    let (value, colouring): (Rat, FractionalColouring) =
        chromatic::frac_index_lp(&g, mode, ctx.caps)?;
    match ctx.format {
        OutputFormat::Json => {
            let mut payload = json!({
                "schema": SCHEMA,
                "report": "frac-index",
                "mode": match mode { LpMode::EqualityAll => "equality", LpMode::CoverMaximal => "cover" },
                "value": value.to_string(),
                "weights": weights_json(colouring.weights()),
            });
            if ctx.decimal {
                payload
                    .as_object_mut()
                    .expect("object literal")
                    .insert("value_approx".into(), json!(approx(&value)));
            }
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => {
            writeln!(out, "chi'*_f = {}", ctx.rat(&value))?;
            writeln!(out, "optimal weighting ({} matchings):", colouring.weights().len())?;
            for (m, w) in colouring.weights() {
                writeln!(out, "  {} * {}", w, describe_matching(m))?;
            }
        }
    }
    Ok(0)
}

fn cmd_index(ctx: &Ctx, path: &Path, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(path)?;
    let (chi, classes) = chromatic::exact_index(&g, ctx.caps)?;
    match ctx.format {
        OutputFormat::Json => {
            let payload = json!({
                "schema": SCHEMA,
                "report": "index",
                "chi": chi,
                "classes": classes.iter().map(|c| c.edges().iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => {
            writeln!(out, "chi'_f = {chi}")?;
            for (i, class) in classes.iter().enumerate() {
                writeln!(out, "class {}: {}", i + 1, describe_matching(class))?;
            }
        }
    }
    Ok(0)
}

fn bool_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "VIOLATED"
    }
}

fn cmd_bounds(ctx: &Ctx, path: &Path, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(path)?;
    let b: BoundsReport = chromatic::bounds_report(&g, ctx.caps)?;
    match ctx.format {
        OutputFormat::Json => {
            let mut payload = json!({
                "schema": SCHEMA,
                "report": "bounds",
                "chi": b.chi,
                "chi_star": b.chi_star.to_string(),
                "lower_bound_ok": b.lower_bound_ok,
                "nine_eighths_ok": b.nine_eighths_ok,
                "delta_plus_one_ok": b.delta_plus_one_ok,
                "ceil_identity": b.ceil_identity,
                "sandwich_ok": b.sandwich_ok,
                "interchange_ok": b.interchange_ok,
            });
            payload
                .as_object_mut()
                .expect("object literal")
                .insert("params".into(), params_json(ctx, &b.params));
            if ctx.decimal {
                payload
                    .as_object_mut()
                    .expect("object literal")
                    .insert("chi_star_approx".into(), json!(approx(&b.chi_star)));
            }
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => {
            writeln!(out, "chi'_f   = {}", b.chi)?;
            writeln!(out, "chi'*_f  = {}", ctx.rat(&b.chi_star))?;
            writeln!(
                out,
                "delta_f = {}, w_f = {}, gamma_f = {} (delta*_f = {}, w*_f = {}, gamma*_f = {})",
                b.params.delta,
                b.params.density,
                b.params.gamma,
                ctx.rat(&b.params.delta_star),
                ctx.rat(&b.params.density_star),
                ctx.rat(&b.params.gamma_star),
            )?;
            writeln!(out, "chi >= max{{delta, w}}:           {}", bool_word(b.lower_bound_ok))?;
            writeln!(out, "chi <= max{{9/8 delta + 6/8, w}}: {}", bool_word(b.nine_eighths_ok))?;
            writeln!(out, "chi <= max{{delta + 1, w}}:       {}", bool_word(b.delta_plus_one_ok))?;
            match b.ceil_identity {
                Some(ok) => writeln!(out, "ceil(chi*) = max{{delta, gamma}}:  {}", bool_word(ok))?,
                None => writeln!(out, "ceil(chi*) = max{{delta, gamma}}:  n/a (delta*_f < 1)")?,
            }
            writeln!(out, "ceil(chi*) <= chi <= ceil+1:     {}", bool_word(b.sandwich_ok))?;
            writeln!(out, "density-interchange identity:    {}", bool_word(b.interchange_ok))?;
        }
    }
    Ok(if b.all_ok() { 0 } else { 1 })
}

fn cmd_member(
    ctx: &Ctx,
    graph_path: &Path,
    point_path: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let g = load_graph(graph_path)?;
    let x = load_point(point_path, &g, err)?;
    let verdict = membership(&g, &x, ctx.caps)?;
    match ctx.format {
        OutputFormat::Json => {
            let payload = match &verdict {
                MembershipVerdict::Member { weights } => json!({
                    "schema": SCHEMA,
                    "report": "member",
                    "verdict": "member",
                    "weights": weights_json(weights),
                }),
                MembershipVerdict::NonMember { functional } => json!({
                    "schema": SCHEMA,
                    "report": "member",
                    "verdict": "non-member",
                    "functional": {
                        "coeffs": functional.coeffs.values().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                        "bound": functional.bound.to_string(),
                    },
                }),
            };
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => match &verdict {
            MembershipVerdict::Member { weights } => {
                writeln!(out, "verdict: member")?;
                writeln!(out, "convex combination ({} matchings):", weights.len())?;
                for (m, w) in weights {
                    writeln!(out, "  {} * {}", w, describe_matching(m))?;
                }
            }
            MembershipVerdict::NonMember { functional } => {
                writeln!(out, "verdict: non-member")?;
                let coeffs: Vec<String> =
                    functional.coeffs.values().iter().map(|r| r.to_string()).collect();
                writeln!(
                    out,
                    "separating functional: a = ({}), c = {}",
                    coeffs.join(", "),
                    functional.bound
                )?;
                writeln!(
                    out,
                    "a.x = {} > c, while a.i_M <= c for every f-matching M",
                    functional.coeffs.dot(&x)
                )?;
            }
        },
    }
    Ok(if verdict.is_member() { 0 } else { 1 })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Edge(e) => json!({"kind": "edge", "edge": e}),
        Witness::Vertex(v) => json!({"kind": "vertex", "vertex": v}),
        Witness::SetPair { u, f } => json!({"kind": "set", "u": u, "f": f}),
    }
}

fn violation_json(v: &ConstraintViolation) -> Value {
    json!({
        "family": v.family.to_string(),
        "witness": witness_json(&v.witness),
        "lhs": v.lhs.to_string(),
        "rhs": v.rhs.to_string(),
    })
}

fn cmd_qcheck(
    ctx: &Ctx,
    graph_path: &Path,
    point_path: &Path,
    variant: QSystemVariant,
    first_only: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let g = load_graph(graph_path)?;
    let x = load_point(point_path, &g, err)?;
    let violations = if first_only {
        first_violation(&g, &x, variant, ctx.caps)?
            .into_iter()
            .collect()
    } else {
        check_system(&g, &x, variant, ctx.caps)?
    };
    match ctx.format {
        OutputFormat::Json => {
            let payload = json!({
                "schema": SCHEMA,
                "report": "qcheck",
                "variant": variant.label(),
                "violations": violations.iter().map(violation_json).collect::<Vec<_>>(),
            });
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => {
            if violations.is_empty() {
                writeln!(out, "0 violations")?;
            } else {
                writeln!(out, "{} violation(s):", violations.len())?;
                for v in &violations {
                    writeln!(out, "  {v}")?;
                }
            }
        }
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn gallery_blurb(name: &str) -> &'static str {
    match name {
        "example1" => "two vertices joined by two parallel edges, weights 2; (2,0) satisfies the degree/density system but is outside the polytope",
        "example2" => "odd cycle plus a doubled pendant (--k sets the odd cycle length); a half-integral point beats the unit-augmented system",
        "example3" => "two dense blobs joined by a bridge (--k sets the multiplicity); the fractional index exceeds max{delta*, w*}",
        "c4-chord" => "simple 4-cycle with a chord; the witness search finds a unit-system point outside the polytope",
        _ => "",
    }
}

fn cmd_gallery_list(ctx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    match ctx.format {
        OutputFormat::Json => {
            let items: Vec<Value> = gallery::item_names()
                .iter()
                .map(|n| json!({"name": n, "about": gallery_blurb(n)}))
                .collect();
            ctx.emit(
                out,
                json!({"schema": SCHEMA, "report": "gallery-list", "items": items}),
            )?;
        }
        OutputFormat::Text => {
            for name in gallery::item_names() {
                writeln!(out, "{name:10} {}", gallery_blurb(name))?;
            }
        }
    }
    Ok(0)
}

fn cmd_gallery_verify(
    ctx: &Ctx,
    name: &str,
    k: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32> {
    let item = gallery::item_by_name(name, k)?;
    let outcome = gallery::verify(&item, ctx.caps)?;
    match ctx.format {
        OutputFormat::Json => {
            let claims: Vec<Value> = outcome
                .results
                .iter()
                .map(|(claim, pass)| json!({"claim": claim, "pass": pass}))
                .collect();
            let payload = json!({
                "schema": SCHEMA,
                "report": "gallery-verify",
                "item": item.name,
                "note": item.note,
                "claims": claims,
                "all_passed": outcome.all_passed(),
            });
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => {
            match &item.note {
                Some(note) => writeln!(out, "item: {} ({})", item.name, note)?,
                None => writeln!(out, "item: {}", item.name)?,
            }
            for (claim, pass) in &outcome.results {
                writeln!(out, "  [{}] {}", if *pass { "pass" } else { "FAIL" }, claim)?;
            }
            writeln!(
                out,
                "{}",
                if outcome.all_passed() {
                    "all claims passed"
                } else {
                    "some claims FAILED"
                }
            )?;
        }
    }
    Ok(if outcome.all_passed() { 0 } else { 1 })
}

fn cmd_sweep(
    ctx: &Ctx,
    count: usize,
    seed: u64,
    limits: SweepLimits,
    out: &mut dyn Write,
) -> Result<i32> {
    let report: SweepReport = gallery::sweep(count, seed, limits, ctx.caps)?;
    match ctx.format {
        OutputFormat::Json => {
            let witnesses: Vec<Value> = report
                .qf_gap_witnesses
                .iter()
                .map(|(g, x)| {
                    json!({
                        "graph": g.to_text(),
                        "point": x.values().iter().enumerate()
                            .map(|(e, v)| json!({"edge": e, "value": v.to_string()}))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let payload = json!({
                "schema": SCHEMA,
                "report": "sweep",
                "instances_tested": report.instances_tested,
                "seed": report.seed,
                "unit_formula_confirmed": report.unit_formula_confirmed,
                "gamma_formula_confirmed": report.gamma_formula_confirmed,
                "interchange_confirmed": report.interchange_confirmed,
                "membership_system_confirmed": report.membership_system_confirmed,
                "gamma_exceeds_density_count": report.gamma_exceeds_density_count,
                "qf_gap_witnesses": witnesses,
                "failures": report.failures,
            });
            ctx.emit(out, payload)?;
        }
        OutputFormat::Text => {
            writeln!(out, "instances tested:             {}", report.instances_tested)?;
            writeln!(out, "seed:                         {}", report.seed)?;
            writeln!(out, "index formula (f == 1):       {} confirmed", report.unit_formula_confirmed)?;
            writeln!(out, "index formula (general):      {} confirmed", report.gamma_formula_confirmed)?;
            writeln!(out, "density-interchange identity: {} confirmed", report.interchange_confirmed)?;
            writeln!(out, "membership == system:         {} confirmed", report.membership_system_confirmed)?;
            writeln!(out, "gamma* > w* observed:         {} times", report.gamma_exceeds_density_count)?;
            writeln!(out, "unit-system gap points:       {} found", report.qf_gap_witnesses.len())?;
            if report.failures.is_empty() {
                writeln!(out, "failures: none")?;
            } else {
                writeln!(out, "failures ({}):", report.failures.len())?;
                for f in &report.failures {
                    writeln!(out, "  {f}")?;
                }
            }
        }
    }
    Ok(if report.failures.is_empty() { 0 } else { 1 })
}
