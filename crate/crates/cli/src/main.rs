use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chordcrystal::alcove::{
    aperiodic_tile, find_tiling25, shape_classes, verify_golden, weight_line_count, GoldenTiling, Region, Walk,
};
use chordcrystal::bridge::intertwine_check;
use chordcrystal::chordring::{cheb, chord_ring, factor, identity_suite, is_irreducible, ChebKind};
use chordcrystal::coxeter::{
    aug_gens, check_m, dodeca_check, golden_action_table, golden_label, group_closure, root_orbit, RankTwoLattice,
};
use chordcrystal::crystal::{odd_spec, Crystal, JSeq};
use chordcrystal::io::{Config, Envelope};
use chordcrystal::pentagon::verify_suite;
use chordcrystal::render::{self, RenderSpec, Scene, Target};
use chordcrystal::tiling::{
    all_triangles, closure_reach, decompose, method_sweep, natural_whole, verify, Method, Reach, ScaledTriangle, Triangle,
};

#[derive(Parser)]
#[command(name = "chordcrystal", version, about = "Chord rings, golden crystals, augmented Weyl groups and triangle tilings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print a versioned JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write an SVG picture to this path, where the command has one.
    #[arg(long, global = true, value_name = "OUT")]
    svg: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Polygon size.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// TOML file with default depths and caps.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Chebyshev families.
    Cheb {
        #[command(subcommand)]
        action: ChebCmd,
    },
    /// Chord rings of the m-gon.
    Ring {
        #[command(subcommand)]
        action: RingCmd,
    },
    /// Closure of the rank-two crystal for odd m.
    Crystal,
    /// The golden crystal.
    Pentagon {
        #[command(subcommand)]
        action: PentagonCmd,
    },
    /// Comparison with the classical crystal of type A_2n.
    Bridge {
        #[command(subcommand)]
        action: BridgeCmd,
    },
    /// Augmented Weyl groups and roots.
    Coxeter {
        #[command(subcommand)]
        action: CoxeterCmd,
    },
    /// Triangle decompositions of the m-gon.
    Tile {
        #[command(subcommand)]
        action: TileCmd,
    },
    /// Pentagonal alcoves and Golden Pair tilings.
    Alcove {
        #[command(subcommand)]
        action: AlcoveCmd,
    },
    /// Draw a picture as SVG.
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum ChebCmd {
    /// Print one polynomial.
    Poly {
        /// P, Pc, Q or S.
        #[arg(long, default_value = "P")]
        kind: String,
        #[arg(long)]
        n: i64,
    },
    /// Check the product and factorization identities.
    Identities {
        #[arg(long, default_value_t = 20)]
        max_n: i64,
    },
    /// Irreducibility of the odd- and even-modulus families.
    Irreducible {
        #[arg(long, default_value_t = 12)]
        max_n: i64,
    },
    /// Factor one polynomial over the integers.
    Factor {
        #[arg(long, default_value = "P")]
        kind: String,
        #[arg(long)]
        n: i64,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Modulus, basis and chord values.
    Show,
}

#[derive(Subcommand)]
enum PentagonCmd {
    /// Membership, annihilation, character and transport checks.
    Verify,
}

#[derive(Subcommand)]
enum BridgeCmd {
    /// Intertwining of the module and classical operators.
    Check {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CoxeterCmd {
    /// Group order by closure.
    Order {
        /// Use the augmented generators instead of the two simple reflections.
        #[arg(long)]
        augmented: bool,
    },
    /// Coxeter relations and order against the classical type.
    Check,
    /// Roots for odd m.
    Roots,
    /// Action of the golden generators on roots.
    Table,
    /// Dodecahedron scalar products.
    Dodeca,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodName {
    Pair,
    Inscribed,
    Nine,
    Pt,
    Square,
}

#[derive(Subcommand)]
enum TileCmd {
    /// Decompose one scaled triangle and verify the pieces.
    Decompose {
        /// Angles in units of pi/m, e.g. 1,2,2.
        #[arg(long, value_delimiter = ',', required = true)]
        angles: Vec<usize>,
        #[arg(long, value_enum)]
        method: MethodName,
        #[arg(long, default_value_t = 0)]
        rotation: usize,
        /// Method parameter (cut position, chord index or square side).
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// Run every method on every triangle of the m-gon.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_t: usize,
    },
    /// Derive a chord-scaled triangle from generator triangles.
    Reach {
        #[arg(long, value_delimiter = ',', required = true)]
        angles: Vec<usize>,
        /// Chord index of the scale; 0 means unit scale.
        #[arg(long, default_value_t = 0)]
        chord: usize,
        /// Generator triangles as angle triples `a,b,c`; all triangles of the m-gon if omitted.
        #[arg(long = "gen", value_name = "A,B,C")]
        gens: Vec<String>,
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Subcommand)]
enum AlcoveCmd {
    /// The twelve shape classes of alcove images.
    Shapes,
    /// The 25 alcoves whose images tile the fundamental triangle.
    Base,
    /// A Golden Pair tiling from a seeded walk.
    Tile {
        #[arg(long, default_value_t = 1)]
        extent: usize,
    },
    /// Sums of distinct weights lying on the reflection lines.
    Lines {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetName {
    RootDiagram,
    WeightDiagram,
    Tiling,
    AlcoveShapes,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    target: TargetName,
    /// Rank parameter for the weight diagram.
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    extent: usize,
    #[arg(long)]
    scale: Option<f64>,
}

/// Result of one command: a payload plus whether its checks held.
struct Outcome {
    kind: &'static str,
    data: Value,
    text: String,
    ok: bool,
    svg: Option<String>,
}

impl Outcome {
    fn new(kind: &'static str, data: Value, text: String, ok: bool) -> Outcome {
        Outcome {
            kind,
            data,
            text,
            ok,
            svg: None,
        }
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn kind_of(s: &str) -> Result<ChebKind> {
    ChebKind::parse(s).ok_or_else(|| anyhow!("unknown family {s:?}; expected P, Pc, Q or S"))
}

fn need_m(g: &Global, default: usize) -> usize {
    g.m.unwrap_or(default)
}

fn triangle(m: usize, angles: &[usize]) -> Result<Triangle> {
    let a: [usize; 3] = angles.try_into().map_err(|_| anyhow!("need three angles"))?;
    Ok(Triangle::new(m, a)?)
}

fn run_cheb(action: &ChebCmd) -> Result<Outcome> {
    Ok(match action {
        ChebCmd::Poly { kind, n } => {
            let p = cheb(kind_of(kind)?, *n)?;
            Outcome::new(
                "cheb-poly",
                json!({ "kind": kind, "n": n, "coeffs": p.coeffs(), "display": p.to_string() }),
                p.to_string(),
                true,
            )
        }
        ChebCmd::Identities { max_n } => {
            let checks = identity_suite(*max_n);
            let bad: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
            let text = format!("{} identities checked, {} failed", checks.len(), bad.len());
            Outcome::new("cheb-identities", serde_json::to_value(&checks)?, text, bad.is_empty())
        }
        ChebCmd::Irreducible { max_n } => {
            let mut rows = Vec::new();
            let mut text = String::from("n  Q_n  S_n\n");
            for n in 1..=*max_n {
                let q = is_irreducible(&cheb(ChebKind::OddModulus, n)?)?;
                let s = is_irreducible(&cheb(ChebKind::EvenModulus, n)?)?;
                text.push_str(&format!("{n:<3}{:<5}{}\n", q, s));
                rows.push(json!({ "n": n, "odd_modulus": q, "even_modulus": s }));
            }
            Outcome::new("cheb-irreducible", Value::Array(rows), text.trim_end().into(), true)
        }
        ChebCmd::Factor { kind, n } => {
            let fs = factor(&cheb(kind_of(kind)?, *n)?)?;
            let shown: Vec<String> = fs.iter().map(|p| format!("({p})")).collect();
            Outcome::new(
                "cheb-factor",
                json!(fs.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
                shown.join(" "),
                true,
            )
        }
    })
}

fn run_ring(g: &Global) -> Result<Outcome> {
    let m = need_m(g, 5);
    let ring = chord_ring(m)?;
    let chords: Vec<Value> = (0..m.saturating_sub(1))
        .map(|i| {
            let c = chordcrystal::chordring::chord_in(&ring, i);
            json!({ "index": i, "coords": c.coords(), "value": c.eval_f64() })
        })
        .collect();
    let mut text = ring.describe();
    for i in 0..m.saturating_sub(1) {
        let c = chordcrystal::chordring::chord_in(&ring, i);
        text.push_str(&format!("\np{i}: {c}  ({:.6})", c.eval_f64()));
    }
    Ok(Outcome::new(
        "ring",
        json!({ "m": m, "rank": ring.rank(), "modulus": ring.modulus().coeffs(), "basis": ring.basis_kind().name(), "chords": chords }),
        text,
        true,
    ))
}

fn run_crystal(g: &Global, cfg: &Config) -> Result<Outcome> {
    let m = need_m(g, 5);
    if m % 2 == 0 {
        bail!("the crystal command needs odd m");
    }
    let depth = g.depth.unwrap_or(cfg.crystal_depth);
    let c = Crystal::new(odd_spec(m)?, JSeq::Periodic(vec![0, 1]));
    let cl = c.closure(depth)?;
    let layers: Vec<usize> = cl.layers.iter().map(Vec::len).collect();
    let text = format!("m = {m}, depth {depth}: layers {layers:?}, total {}", cl.len());
    Ok(Outcome::new("crystal", json!({ "m": m, "depth": depth, "layers": layers }), text, true))
}

fn run_pentagon(g: &Global, cfg: &Config) -> Result<Outcome> {
    let depth = g.depth.unwrap_or(cfg.pentagon_depth);
    let r = verify_suite(depth)?;
    let mut text = String::from("degree  closure  members\n");
    for row in &r.layers {
        text.push_str(&format!("{:<8}{:<9}{}\n", row.degree, row.closure, row.members));
    }
    text.push_str(&format!(
        "membership {}, annihilation {}, character {}, transport (<= {}) {}",
        mark(r.membership),
        mark(r.annihilation_mismatches == 0),
        mark(r.character_mismatches == 0),
        r.transport_depth,
        mark(r.transport_mismatches == 0)
    ));
    let ok = r.passed();
    Ok(Outcome::new("pentagon-verify", serde_json::to_value(&r)?, text, ok))
}

fn run_bridge(g: &Global, cfg: &Config, n: usize) -> Result<Outcome> {
    let depth = g.depth.unwrap_or(cfg.bridge_depth);
    let r = intertwine_check(n, depth)?;
    let text = format!(
        "n = {n}, depth {depth}: {} elements, {} operator checks, {} mismatches, layers {:?} vs Kostant {:?}: {}",
        r.module_elements,
        r.operator_checks,
        r.mismatches.len(),
        r.module_layers,
        r.kostant_layers,
        mark(r.passed())
    );
    let ok = r.passed();
    Ok(Outcome::new("bridge-check", serde_json::to_value(&r)?, text, ok))
}

fn run_coxeter(g: &Global, cfg: &Config, action: &CoxeterCmd) -> Result<Outcome> {
    let m = need_m(g, 5);
    Ok(match action {
        CoxeterCmd::Order { augmented } => {
            let gens = if *augmented {
                aug_gens(m)?
            } else {
                let lat = RankTwoLattice::new(m)?;
                vec![lat.simple_reflection(0), lat.simple_reflection(1)]
            };
            let order = group_closure(&gens, cfg.closure_cap)?.len();
            Outcome::new(
                "coxeter-order",
                json!({ "m": m, "augmented": augmented, "order": order }),
                order.to_string(),
                true,
            )
        }
        CoxeterCmd::Check => {
            let r = check_m(m)?;
            let text = format!(
                "m = {m}: {} relations {}, order {} (expected {}): {}",
                r.target,
                mark(r.relations_hold),
                r.order,
                r.expected_order,
                mark(r.passed())
            );
            let ok = r.passed();
            Outcome::new("coxeter-check", serde_json::to_value(&r)?, text, ok)
        }
        CoxeterCmd::Roots => {
            let r = root_orbit(m)?;
            let text = format!(
                "{} roots, W-orbits {:?}, augmented orbits {:?}, stable {}",
                r.count, r.w_orbit_sizes, r.wa_orbit_sizes, r.stable
            );
            let ok = r.stable;
            Outcome::new("coxeter-roots", serde_json::to_value(&r)?, text, ok)
        }
        CoxeterCmd::Table => {
            let rows = golden_action_table();
            let mut text = String::new();
            for r in &rows {
                let fixed: Vec<String> = r.fixed.iter().map(|v| golden_label(v)).collect();
                let swapped: Vec<String> =
                    r.swapped.iter().map(|(a, b)| format!("{}<->{}", golden_label(a), golden_label(b))).collect();
                text.push_str(&format!("{}: fixes {}; swaps {}\n", r.generator, fixed.join(" "), swapped.join(" ")));
            }
            let ok = chordcrystal::coxeter::alpha_action_matches();
            Outcome::new("coxeter-table", serde_json::to_value(&rows)?, text.trim_end().into(), ok)
        }
        CoxeterCmd::Dodeca => {
            let r = dodeca_check();
            let mut text = String::new();
            for (name, ok) in &r.checks {
                text.push_str(&format!("{name}: {}\n", mark(*ok)));
            }
            let ok = r.passed();
            Outcome::new("coxeter-dodeca", serde_json::to_value(&r)?, text.trim_end().into(), ok)
        }
    })
}

fn method(name: MethodName, rotation: usize, t: usize) -> Method {
    match name {
        MethodName::Pair => Method::Pair { rotation, t },
        MethodName::Inscribed => Method::Inscribed { t },
        MethodName::Nine => Method::Nine { rotation },
        MethodName::Pt => Method::Pt { rotation, t },
        MethodName::Square => Method::Square { rotation, n: t },
    }
}

fn run_tile(g: &Global, cfg: &Config, action: &TileCmd) -> Result<Outcome> {
    let m = need_m(g, 5);
    Ok(match action {
        TileCmd::Decompose {
            angles,
            method: name,
            rotation,
            t,
        } => {
            let tri = triangle(m, angles)?;
            let meth = method(*name, *rotation, *t);
            let d = decompose(&natural_whole(tri, meth)?, meth)?;
            let r = verify(&d);
            let parts: Vec<String> = d.part_triangles().iter().map(|p| p.to_string()).collect();
            let text = format!("{} = {} parts: {}\ncheck: {}", d.whole(), parts.len(), parts.join(" "), mark(r.passed()));
            let ok = r.passed();
            Outcome::new("tile-decompose", json!({ "decomposition": d, "report": r }), text, ok)
        }
        TileCmd::Verify { max_t } => {
            let r = method_sweep(m, *max_t);
            let text = format!("m = {m}: {} decompositions, {} failed", r.checked, r.failures.len());
            let ok = r.passed();
            Outcome::new("tile-verify", serde_json::to_value(&r)?, text, ok)
        }
        TileCmd::Reach {
            angles,
            chord,
            gens,
            budget,
        } => {
            let tri = triangle(m, angles)?;
            let target = if *chord == 0 {
                ScaledTriangle::unit(tri)?
            } else {
                ScaledTriangle::chord_scaled(tri, *chord)?
            };
            let generators = if gens.is_empty() {
                all_triangles(m)
            } else {
                gens.iter()
                    .map(|s| {
                        let a: Vec<usize> = s
                            .split(',')
                            .map(|x| x.trim().parse::<usize>())
                            .collect::<Result<_, _>>()
                            .with_context(|| format!("generator {s:?}"))?;
                        triangle(m, &a)
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let r = closure_reach(&target, &generators, budget.unwrap_or(cfg.reach_budget), &[]);
            let text = match &r {
                Reach::Derived(d) => format!("{target}: derived, {} nodes", d.size()),
                Reach::Unreachable { exhausted: true } => format!("{target}: not reachable"),
                Reach::Unreachable { exhausted: false } => format!("{target}: not found within budget"),
            };
            let ok = matches!(r, Reach::Derived(_));
            Outcome::new("tile-reach", serde_json::to_value(&r)?, text, ok)
        }
    })
}

fn golden(extent: usize, seed: u64) -> Result<GoldenTiling> {
    let base = find_tiling25()?;
    let region = Region::new(extent, &base)?;
    let walk = Walk::seeded(&region, seed)?;
    Ok(aperiodic_tile(&walk, &region)?)
}

fn run_alcove(g: &Global, cfg: &Config, action: &AlcoveCmd) -> Result<Outcome> {
    Ok(match action {
        AlcoveCmd::Shapes => {
            let sc = shape_classes();
            let mut text = String::new();
            for c in &sc.classes {
                text.push_str(&format!("{:<4}{} alcoves\n", c.label.to_string(), c.members.len()));
            }
            text.push_str(&format!("orbits {:?}", sc.orbit_sizes));
            let classes: Vec<Value> = sc
                .classes
                .iter()
                .map(|c| json!({ "label": c.label.to_string(), "members": c.members }))
                .collect();
            let mut out = Outcome::new(
                "alcove-shapes",
                json!({ "alcoves": sc.alcoves, "classes": classes, "orbit_sizes": sc.orbit_sizes }),
                text,
                true,
            );
            out.svg = Some(svg(&RenderSpec::new(Target::AlcoveShapes), &render::alcove_shapes(), cfg)?);
            out
        }
        AlcoveCmd::Base => {
            let t = find_tiling25()?;
            let text = format!(
                "{} alcoves, one lattice vertex each: {}, area {}, edges {}",
                t.alcoves.len(),
                mark(t.one_lattice_vertex),
                mark(t.area_ok),
                mark(t.edges_ok)
            );
            let ok = t.passed();
            Outcome::new("alcove-base", serde_json::to_value(&t)?, text, ok)
        }
        AlcoveCmd::Tile { extent } => {
            let seed = g.seed.unwrap_or(cfg.seed);
            let t = golden(*extent, seed)?;
            let c = verify_golden(&t);
            let text = format!(
                "extent {extent}, seed {seed}: {} triangles, T1 {} T2 {}: {}",
                c.tiles,
                c.t1,
                c.t2,
                mark(c.passed())
            );
            let ok = c.passed();
            let mut out = Outcome::new("alcove-tiling", json!({ "tiling": t, "check": c }), text, ok);
            let spec = RenderSpec::new(Target::Tiling);
            out.svg = Some(svg(&spec, &render::tiling_scene(&t), cfg)?);
            out
        }
        AlcoveCmd::Lines { n } => {
            let (on, total) = weight_line_count(*n)?;
            Outcome::new(
                "alcove-lines",
                json!({ "n": n, "on_lines": on, "total": total }),
                format!("{on} of {total} on lines"),
                true,
            )
        }
    })
}

fn svg(spec: &RenderSpec, scene: &Scene, cfg: &Config) -> Result<String> {
    let mut spec = spec.clone();
    if spec.scale == RenderSpec::new(spec.target.clone()).scale {
        spec.scale = cfg.render_scale;
    }
    Ok(render::render_svg(&spec, scene)?)
}

fn run_render(g: &Global, cfg: &Config, args: &RenderArgs) -> Result<Outcome> {
    let m = need_m(g, 5);
    let (target, scene) = match args.target {
        TargetName::RootDiagram => (Target::RootDiagram { m }, render::root_diagram(m)?),
        TargetName::WeightDiagram => (Target::WeightDiagram { n: args.n }, render::weight_diagram(args.n)?),
        TargetName::AlcoveShapes => (Target::AlcoveShapes, render::alcove_shapes()),
        TargetName::Tiling => {
            let t = golden(args.extent, g.seed.unwrap_or(cfg.seed))?;
            (Target::Tiling, render::tiling_scene(&t))
        }
    };
    let mut spec = RenderSpec::new(target);
    spec.scale = args.scale.unwrap_or(cfg.render_scale);
    let doc = render::render_svg(&spec, &scene)?;
    let (polygons, circles) = render::count_elements(&doc);
    let data = json!({ "spec": spec, "polygons": polygons, "nodes": circles });
    let mut out = Outcome::new("render", data, String::new(), true);
    out.svg = Some(doc);
    Ok(out)
}

fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    let cfg = match &g.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let out = match &cli.command {
        Command::Cheb { action } => run_cheb(action)?,
        Command::Ring { action: RingCmd::Show } => run_ring(g)?,
        Command::Crystal => run_crystal(g, &cfg)?,
        Command::Pentagon {
            action: PentagonCmd::Verify,
        } => run_pentagon(g, &cfg)?,
        Command::Bridge {
            action: BridgeCmd::Check { n },
        } => run_bridge(g, &cfg, *n)?,
        Command::Coxeter { action } => run_coxeter(g, &cfg, action)?,
        Command::Tile { action } => run_tile(g, &cfg, action)?,
        Command::Alcove { action } => run_alcove(g, &cfg, action)?,
        Command::Render(args) => run_render(g, &cfg, args)?,
    };
    let is_render = matches!(cli.command, Command::Render(_));
    match (&g.svg, &out.svg) {
        (Some(path), Some(doc)) => {
            std::fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?;
        }
        (Some(_), None) => bail!("this command has no picture"),
        // render without --svg prints the document itself
        (None, Some(doc)) if is_render && !g.json => print!("{doc}"),
        _ => {}
    }
    if g.json {
        println!("{}", Envelope::new(out.kind, &out.data).to_json()?);
    } else if !out.text.is_empty() {
        println!("{}", out.text);
    }
    Ok(out.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // bad parameters are reported like clap's own usage errors
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
