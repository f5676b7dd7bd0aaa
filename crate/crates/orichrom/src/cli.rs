//! Command-line surface: graph families, products, exact solvers,
//! constructions and the named verification checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or cap errors.

use std::collections::BTreeSet;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::caps::Caps;
use crate::checks::{run_theorem, CheckContext, THEOREM_NAMES};
use crate::constructions::{
    bipartite_target, c3_cartesian_path_hom, cartesian_upper_hom, cartesian_upper_target,
    direct_upper_hom, direct_upper_target, lexico_upper_hom, lexico_upper_target, square_coloring,
    strong_upper_hom, strong_upper_target, t7_strong_grid_hom, CartesianFactors, DirectFactors,
    Label, LexicoFactors, StrongFactors,
};
use crate::error::{Error, Result};
use crate::formats::{
    parse_digraph6, parse_graph6, write_digraph6, write_dot_oriented, write_dot_undirected,
    write_graph6,
};
use crate::graph::{
    circulant_tournament, complete, complete_bipartite, cycle, directed_path, line_digraph,
    orientation_at, path, square, EdgeOrder, OrientedGraph, UndirectedGraph,
};
use crate::homomorphism::{find_homomorphism, verify_homomorphism, verify_oriented_coloring};
use crate::products::{product_oriented, product_undirected, ProductKind};
use crate::report::{Report, SCHEMA_VERSION};
use crate::solver::{
    chi_o_oriented, chi_o_plus_with_target, chi_o_undirected, chromatic_number,
    find_proper_coloring, moon_bounds, universal_tournament_size,
};

#[derive(Parser)]
#[command(
    name = "orichrom",
    version,
    about = "Exact oriented colorings, graph products and universal targets for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format; graph6/digraph6/dot emit the raw artifact for
    /// graph-producing commands, json emits a full report.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Seed for sampled sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on the number of edges in orientation sweeps.
    #[arg(long, global = true)]
    cap_edges: Option<usize>,
    /// Cap on enumerated target orders.
    #[arg(long, global = true)]
    cap_order: Option<usize>,
    /// Worker count for orientation sweeps; results are independent of it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Include witness maps in reports.
    #[arg(long, global = true)]
    witness: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Graph6,
    Digraph6,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WhichConstruction {
    Bipartite,
    Square,
    T7,
    C3Grid,
    LexicoW,
    StrongW,
    CartesianW,
    DirectW,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a named graph family member.
    Family { spec: String },
    /// Build a product of two graphs (both undirected or both oriented).
    Product {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Exact chromatic number of an undirected graph.
    Chi {
        #[arg(long)]
        graph: String,
    },
    /// Exact oriented chromatic number (sweeps orientations for undirected
    /// input).
    ChiO {
        #[arg(long)]
        graph: String,
    },
    /// Least order of a single target receiving every orientation.
    ChiOPlus {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
    },
    /// Least order of a tournament containing every tournament of order N.
    Epsilon { n: usize },
    /// Exact order bounds for N-universal tournaments.
    MoonBounds { n: usize },
    /// Search for a homomorphism between two oriented graphs.
    Hom {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Build a target construction and its verified map.
    Construct {
        #[arg(long, value_enum)]
        which: WhichConstruction,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long, default_value_t = 0)]
        orientation_index: u64,
        #[arg(long, default_value_t = 0)]
        left_index: u64,
        #[arg(long, default_value_t = 0)]
        right_index: u64,
    },
    /// Run a named verification check (or all of them).
    Verify {
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Line digraph of an oriented graph.
    LineDigraph {
        #[arg(long)]
        graph: String,
    },
}

enum GraphArg {
    Undirected(UndirectedGraph),
    Oriented(OrientedGraph),
}

fn parse_count(text: &str) -> Result<usize> {
    text.trim()
        .parse::<usize>()
        .map_err(|_| Error::Format(format!("`{text}` is not a count")))
}

/// Parses `path:K`, `cycle:K`, `complete:N`, `bipartite:M,N`, `dpath:K`,
/// `circulant:N,a-b-c`, or a raw graph6/digraph6 string.
fn parse_graph_arg(s: &str) -> Result<GraphArg> {
    if let Some(rest) = s.strip_prefix("path:") {
        return Ok(GraphArg::Undirected(path(parse_count(rest)?)?));
    }
    if let Some(rest) = s.strip_prefix("cycle:") {
        return Ok(GraphArg::Undirected(cycle(parse_count(rest)?)?));
    }
    if let Some(rest) = s.strip_prefix("complete:") {
        return Ok(GraphArg::Undirected(complete(parse_count(rest)?)?));
    }
    if let Some(rest) = s.strip_prefix("bipartite:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Format("bipartite:M,N takes two counts".into()));
        }
        return Ok(GraphArg::Undirected(complete_bipartite(
            parse_count(parts[0])?,
            parse_count(parts[1])?,
        )?));
    }
    if let Some(rest) = s.strip_prefix("dpath:") {
        return Ok(GraphArg::Oriented(directed_path(parse_count(rest)?)?));
    }
    if let Some(rest) = s.strip_prefix("circulant:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Format("circulant:N,a-b-c takes an order and residues".into()));
        }
        let n = parse_count(parts[0])?;
        let residues: BTreeSet<usize> = parts[1]
            .split('-')
            .map(parse_count)
            .collect::<Result<_>>()?;
        return Ok(GraphArg::Oriented(circulant_tournament(n, &residues)?));
    }
    if s.starts_with('&') || s.starts_with(">>digraph6<<") {
        return Ok(GraphArg::Oriented(parse_digraph6(s)?));
    }
    Ok(GraphArg::Undirected(parse_graph6(s)?))
}

fn need_undirected(arg: GraphArg) -> Result<UndirectedGraph> {
    match arg {
        GraphArg::Undirected(g) => Ok(g),
        GraphArg::Oriented(_) => Err(Error::Format(
            "this command needs an undirected graph".into(),
        )),
    }
}

fn need_oriented(arg: GraphArg) -> Result<OrientedGraph> {
    match arg {
        GraphArg::Oriented(d) => Ok(d),
        GraphArg::Undirected(_) => Err(Error::Format(
            "this command needs an oriented graph (dpath:, circulant:, or digraph6)".into(),
        )),
    }
}

/// Six-significant-digit rendering of an exact integer.
fn sig6(x: &BigUint) -> String {
    let digits = x.to_string();
    if digits.len() <= 6 {
        return digits;
    }
    let mantissa: String = digits.chars().take(6).collect();
    format!(
        "{}.{}e{}",
        &mantissa[..1],
        &mantissa[1..],
        digits.len() - 1
    )
}

fn undirected_json(g: &UndirectedGraph) -> serde_json::Value {
    json!({
        "order": g.order(),
        "edges": g.edge_count(),
        "graph6": write_graph6(g),
    })
}

fn oriented_json(d: &OrientedGraph) -> serde_json::Value {
    json!({
        "order": d.order(),
        "arcs": d.arc_count(),
        "digraph6": write_digraph6(d),
    })
}

fn labels_json(labels: &[Label]) -> serde_json::Value {
    json!(labels.iter().map(|l| l.to_string()).collect::<Vec<_>>())
}

struct Ctx {
    caps: Caps,
    seed: u64,
    jobs: usize,
    witness: bool,
    format: OutputFormat,
}

enum Outcome {
    /// A report plus an optional raw artifact for non-json formats.
    Report {
        values: serde_json::Value,
        witness: Option<serde_json::Value>,
        raw_undirected: Option<UndirectedGraph>,
        raw_oriented: Option<OrientedGraph>,
        raw_labels: Option<Vec<Label>>,
        failed_verification: bool,
    },
}

fn ok(values: serde_json::Value) -> Result<Outcome> {
    Ok(Outcome::Report {
        values,
        witness: None,
        raw_undirected: None,
        raw_oriented: None,
        raw_labels: None,
        failed_verification: false,
    })
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let mut caps = Caps::from_env();
    if let Some(edges) = cli.cap_edges {
        caps.orientation_edges = edges;
    }
    if let Some(order) = cli.cap_order {
        caps.target_order = order;
    }
    let ctx = Ctx {
        caps,
        seed: cli.seed.unwrap_or(0x0C1A55),
        jobs: cli.jobs.max(1),
        witness: cli.witness,
        format: cli.format,
    };

    let started = Instant::now();
    let command_echo = command_name(&cli.cmd);
    let input_echo = input_echo(&cli.cmd);

    let dispatch = || -> Result<Outcome> {
        if ctx.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(ctx.jobs)
                .build()
                .map_err(|e| Error::Format(e.to_string()))?;
            pool.install(|| dispatch_command(&cli.cmd, &ctx))
        } else {
            dispatch_command(&cli.cmd, &ctx)
        }
    };

    match dispatch() {
        Ok(Outcome::Report {
            values,
            witness,
            raw_undirected,
            raw_oriented,
            raw_labels,
            failed_verification,
        }) => {
            match ctx.format {
                OutputFormat::Json => {
                    let report = Report {
                        schema_version: SCHEMA_VERSION,
                        command: command_echo,
                        input: input_echo,
                        caps: (&ctx.caps).into(),
                        seed: ctx.seed,
                        jobs: ctx.jobs,
                        values,
                        witness: if ctx.witness { witness } else { None },
                        elapsed_ms: started.elapsed().as_millis(),
                    };
                    println!("{}", report.to_json());
                }
                OutputFormat::Graph6 => match raw_undirected {
                    Some(g) => println!("{}", write_graph6(&g)),
                    None => {
                        eprintln!("graph6 output needs an undirected graph result");
                        return 2;
                    }
                },
                OutputFormat::Digraph6 => match raw_oriented {
                    Some(d) => println!("{}", write_digraph6(&d)),
                    None => {
                        eprintln!("digraph6 output needs an oriented graph result");
                        return 2;
                    }
                },
                OutputFormat::Dot => {
                    if let Some(d) = raw_oriented {
                        println!("{}", write_dot_oriented(&d, raw_labels.as_deref()));
                    } else if let Some(g) = raw_undirected {
                        println!("{}", write_dot_undirected(&g, None));
                    } else {
                        eprintln!("dot output needs a graph result");
                        return 2;
                    }
                }
            }
            if failed_verification {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn command_name(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Family { .. } => "family",
        Cmd::Product { .. } => "product",
        Cmd::Chi { .. } => "chi",
        Cmd::ChiO { .. } => "chi-o",
        Cmd::ChiOPlus { .. } => "chi-o-plus",
        Cmd::Epsilon { .. } => "epsilon",
        Cmd::MoonBounds { .. } => "moon-bounds",
        Cmd::Hom { .. } => "hom",
        Cmd::Construct { .. } => "construct",
        Cmd::Verify { .. } => "verify",
        Cmd::LineDigraph { .. } => "line-digraph",
    }
    .to_string()
}

fn input_echo(cmd: &Cmd) -> serde_json::Value {
    match cmd {
        Cmd::Family { spec } => json!({ "spec": spec }),
        Cmd::Product { kind, left, right } => {
            json!({ "kind": kind, "left": left, "right": right })
        }
        Cmd::Chi { graph } | Cmd::ChiO { graph } | Cmd::LineDigraph { graph } => {
            json!({ "graph": graph })
        }
        Cmd::ChiOPlus { graph, max_order } => json!({ "graph": graph, "max_order": max_order }),
        Cmd::Epsilon { n } | Cmd::MoonBounds { n } => json!({ "n": n }),
        Cmd::Hom { from, to } => json!({ "from": from, "to": to }),
        Cmd::Construct {
            which,
            m,
            k,
            l,
            graph,
            left,
            right,
            orientation_index,
            left_index,
            right_index,
        } => json!({
            "which": format!("{:?}", which),
            "m": m, "k": k, "l": l,
            "graph": graph, "left": left, "right": right,
            "orientation_index": orientation_index,
            "left_index": left_index,
            "right_index": right_index,
        }),
        Cmd::Verify { theorem, all, k, l } => {
            json!({ "theorem": theorem, "all": all, "k": k, "l": l })
        }
    }
}

fn dispatch_command(cmd: &Cmd, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        Cmd::Family { spec } => match parse_graph_arg(spec)? {
            GraphArg::Undirected(g) => Ok(Outcome::Report {
                values: undirected_json(&g),
                witness: None,
                raw_undirected: Some(g),
                raw_oriented: None,
                raw_labels: None,
                failed_verification: false,
            }),
            GraphArg::Oriented(d) => Ok(Outcome::Report {
                values: oriented_json(&d),
                witness: None,
                raw_undirected: None,
                raw_oriented: Some(d),
                raw_labels: None,
                failed_verification: false,
            }),
        },
        Cmd::Product { kind, left, right } => {
            let kind: ProductKind = kind.parse()?;
            match (parse_graph_arg(left)?, parse_graph_arg(right)?) {
                (GraphArg::Undirected(g), GraphArg::Undirected(h)) => {
                    let p = product_undirected(kind, &g, &h);
                    Ok(Outcome::Report {
                        values: undirected_json(&p),
                        witness: None,
                        raw_undirected: Some(p),
                        raw_oriented: None,
                        raw_labels: None,
                        failed_verification: false,
                    })
                }
                (GraphArg::Oriented(d), GraphArg::Oriented(e)) => {
                    let p = product_oriented(kind, &d, &e);
                    Ok(Outcome::Report {
                        values: oriented_json(&p),
                        witness: None,
                        raw_undirected: None,
                        raw_oriented: Some(p),
                        raw_labels: None,
                        failed_verification: false,
                    })
                }
                _ => Err(Error::Format(
                    "product factors must both be undirected or both oriented".into(),
                )),
            }
        }
        Cmd::Chi { graph } => {
            let g = need_undirected(parse_graph_arg(graph)?)?;
            let value = chromatic_number(&g, &ctx.caps)?;
            ok(json!({ "chi": value }))
        }
        Cmd::ChiO { graph } => match parse_graph_arg(graph)? {
            GraphArg::Undirected(g) => {
                let value = chi_o_undirected(&g, &ctx.caps, ctx.jobs)?;
                ok(json!({ "chi_o": value, "input": "undirected" }))
            }
            GraphArg::Oriented(d) => {
                let value = chi_o_oriented(&d, &ctx.caps)?;
                ok(json!({ "chi_o": value, "input": "oriented" }))
            }
        },
        Cmd::ChiOPlus { graph, max_order } => {
            let g = need_undirected(parse_graph_arg(graph)?)?;
            match chi_o_plus_with_target(&g, *max_order, &ctx.caps)? {
                Some((value, target)) => Ok(Outcome::Report {
                    values: json!({ "chi_o_plus": value }),
                    witness: Some(json!({ "target": oriented_json(&target) })),
                    raw_undirected: None,
                    raw_oriented: Some(target),
                    raw_labels: None,
                    failed_verification: false,
                }),
                None => ok(json!({ "chi_o_plus": "unknown", "max_order": max_order })),
            }
        }
        Cmd::Epsilon { n } => {
            let value = universal_tournament_size(*n, &ctx.caps)?;
            ok(json!({ "epsilon": value }))
        }
        Cmd::MoonBounds { n } => {
            let bounds = moon_bounds(*n)?;
            ok(json!({
                "lower": bounds.lower.to_string(),
                "upper": bounds.upper.to_string(),
                "lower_display": sig6(&bounds.lower),
                "upper_display": sig6(&bounds.upper),
            }))
        }
        Cmd::Hom { from, to } => {
            let d = need_oriented(parse_graph_arg(from)?)?;
            let t = need_oriented(parse_graph_arg(to)?)?;
            match find_homomorphism(&d, &t) {
                Some(map) => Ok(Outcome::Report {
                    values: json!({ "found": true }),
                    witness: Some(json!({ "map": map.images() })),
                    raw_undirected: None,
                    raw_oriented: None,
                    raw_labels: None,
                    failed_verification: false,
                }),
                None => ok(json!({ "found": false })),
            }
        }
        Cmd::LineDigraph { graph } => {
            let d = need_oriented(parse_graph_arg(graph)?)?;
            let ld = line_digraph(&d);
            Ok(Outcome::Report {
                values: oriented_json(&ld),
                witness: None,
                raw_undirected: None,
                raw_oriented: Some(ld),
                raw_labels: None,
                failed_verification: false,
            })
        }
        Cmd::Construct {
            which,
            m,
            k,
            l,
            graph,
            left,
            right,
            orientation_index,
            left_index,
            right_index,
        } => run_construct(
            *which,
            ConstructArgs {
                m: *m,
                k: *k,
                l: *l,
                graph: graph.clone(),
                left: left.clone(),
                right: right.clone(),
                orientation_index: *orientation_index,
                left_index: *left_index,
                right_index: *right_index,
            },
            ctx,
        ),
        Cmd::Verify { theorem, all, k, l } => {
            let check_ctx = CheckContext {
                caps: ctx.caps.clone(),
                seed: ctx.seed,
                jobs: ctx.jobs,
                k: *k,
                l: *l,
            };
            let names: Vec<&str> = if *all {
                THEOREM_NAMES.to_vec()
            } else {
                match theorem {
                    Some(name) => vec![THEOREM_NAMES
                        .iter()
                        .copied()
                        .find(|&n| n == name)
                        .ok_or_else(|| {
                            Error::Format(format!(
                                "unknown theorem `{name}`; known: {}",
                                THEOREM_NAMES.join(", ")
                            ))
                        })?],
                    None => {
                        return Err(Error::Format(
                            "verify needs --theorem NAME or --all".into(),
                        ))
                    }
                }
            };
            let mut all_passed = true;
            let mut results = Vec::new();
            for name in names {
                let outcome = run_theorem(name, &check_ctx)?;
                all_passed &= outcome.passed;
                results.push(json!({
                    "criterion": outcome.criterion,
                    "name": outcome.name,
                    "passed": outcome.passed,
                    "details": outcome.details,
                    "values": outcome.values,
                }));
            }
            Ok(Outcome::Report {
                values: json!({ "passed": all_passed, "checks": results }),
                witness: None,
                raw_undirected: None,
                raw_oriented: None,
                raw_labels: None,
                failed_verification: !all_passed,
            })
        }
    }
}

struct ConstructArgs {
    m: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
    graph: Option<String>,
    left: Option<String>,
    right: Option<String>,
    orientation_index: u64,
    left_index: u64,
    right_index: u64,
}

fn need_arg<T>(value: Option<T>, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::Format(format!("construct needs --{what}")))
}

fn parse_undirected_arg(text: &Option<String>, what: &str) -> Result<UndirectedGraph> {
    let text = text
        .as_ref()
        .ok_or_else(|| Error::Format(format!("construct needs --{what}")))?;
    need_undirected(parse_graph_arg(text)?)
}

fn universal_target_for(g: &UndirectedGraph, caps: &Caps) -> Result<OrientedGraph> {
    match chi_o_plus_with_target(g, caps.target_order, caps)? {
        Some((_, target)) => Ok(target),
        None => Err(Error::CapExceeded {
            what: "target order",
            cap: caps.target_order,
            actual: caps.target_order + 1,
        }),
    }
}

fn orient(g: &UndirectedGraph, index: u64, caps: &Caps) -> Result<OrientedGraph> {
    let count = crate::graph::orientation_count(g, caps)?;
    if index >= count {
        return Err(Error::Format(format!(
            "orientation index {index} out of range (< {count})"
        )));
    }
    let order = EdgeOrder::lexicographic(g);
    Ok(orientation_at(g, &order, index))
}

fn run_construct(which: WhichConstruction, args: ConstructArgs, ctx: &Ctx) -> Result<Outcome> {
    match which {
        WhichConstruction::Bipartite => {
            let m = need_arg(args.m, "m")?;
            let target = bipartite_target(m, &ctx.caps)?;
            Ok(Outcome::Report {
                values: json!({
                    "order": target.order(),
                    "arcs": target.graph.arc_count(),
                    "labels": labels_json(&target.labels),
                }),
                witness: None,
                raw_undirected: None,
                raw_labels: Some(target.labels.clone()),
                raw_oriented: Some(target.graph),
                failed_verification: false,
            })
        }
        WhichConstruction::Square => {
            let g = parse_undirected_arg(&args.graph, "graph")?;
            let sq = square(&g);
            let k = chromatic_number(&sq, &ctx.caps)?;
            let sigma = find_proper_coloring(&sq, k).expect("chromatic number is feasible");
            let d = orient(&g, args.orientation_index, &ctx.caps)?;
            let coloring = square_coloring(&g, &sigma, &d)?;
            let valid = verify_oriented_coloring(&d, &coloring);
            Ok(Outcome::Report {
                values: json!({
                    "square_chromatic": k,
                    "label_bound": (1usize << k) - 1,
                    "labels_used": coloring.color_count(),
                    "valid": valid,
                }),
                witness: Some(json!({ "coloring": coloring.images() })),
                raw_undirected: None,
                raw_oriented: None,
                raw_labels: None,
                failed_verification: !valid,
            })
        }
        WhichConstruction::T7 => {
            let k = args.k.unwrap_or(3);
            let l = args.l.unwrap_or(3);
            let (target, map) = t7_strong_grid_hom(k, l)?;
            let product =
                product_oriented(ProductKind::Strong, &directed_path(k)?, &directed_path(l)?);
            let valid = verify_homomorphism(&product, &target, &map);
            Ok(Outcome::Report {
                values: json!({ "k": k, "l": l, "target_order": 7, "valid": valid }),
                witness: Some(json!({ "map": map.images() })),
                raw_undirected: None,
                raw_oriented: Some(target),
                raw_labels: None,
                failed_verification: !valid,
            })
        }
        WhichConstruction::C3Grid => {
            let k = args.k.unwrap_or(4);
            let l = args.l.unwrap_or(4);
            let p = orient(&path(k)?, args.left_index, &ctx.caps)?;
            let q = orient(&path(l)?, args.right_index, &ctx.caps)?;
            let (target, map) = c3_cartesian_path_hom(&p, &q)?;
            let product = product_oriented(ProductKind::Cartesian, &p, &q);
            let valid = verify_homomorphism(&product, &target, &map);
            Ok(Outcome::Report {
                values: json!({ "k": k, "l": l, "target_order": 3, "valid": valid }),
                witness: Some(json!({ "map": map.images() })),
                raw_undirected: None,
                raw_oriented: Some(target),
                raw_labels: None,
                failed_verification: !valid,
            })
        }
        WhichConstruction::LexicoW => {
            let g = parse_undirected_arg(&args.left, "left")?;
            let h = parse_undirected_arg(&args.right, "right")?;
            let u = universal_target_for(&h, &ctx.caps)?;
            let kk = chromatic_number(&square(&g), &ctx.caps)?;
            let w = lexico_upper_target(kk, &u, h.order(), &ctx.caps)?;
            let product = product_undirected(ProductKind::Lexicographic, &g, &h);
            let d = orient(&product, args.orientation_index, &ctx.caps)?;
            let factors = LexicoFactors::derive(&g, &h, &d, &u, &ctx.caps)?;
            let map = lexico_upper_hom(&d, &g, &u, &factors, &ctx.caps)?;
            let valid = verify_homomorphism(&d, &w.graph, &map);
            Ok(Outcome::Report {
                values: json!({ "order": w.order(), "valid": valid }),
                witness: Some(json!({ "map": map.images() })),
                raw_undirected: None,
                raw_labels: Some(w.labels.clone()),
                raw_oriented: Some(w.graph),
                failed_verification: !valid,
            })
        }
        WhichConstruction::StrongW => {
            let g = parse_undirected_arg(&args.left, "left")?;
            let h = parse_undirected_arg(&args.right, "right")?;
            let t = universal_target_for(&g, &ctx.caps)?;
            let u = universal_target_for(&h, &ctx.caps)?;
            let kk = chromatic_number(&square(&h), &ctx.caps)?;
            let ell = chromatic_number(&g, &ctx.caps)?;
            let w = strong_upper_target(kk, ell, &t, &u, &ctx.caps)?;
            let product = product_undirected(ProductKind::Strong, &g, &h);
            let d = orient(&product, args.orientation_index, &ctx.caps)?;
            let factors = StrongFactors::derive(&g, &h, &d, &t, &u, &ctx.caps)?;
            match strong_upper_hom(&d, &g, &h, &t, &u, &factors) {
                Ok(map) => {
                    let valid = verify_homomorphism(&d, &w.graph, &map);
                    Ok(Outcome::Report {
                        values: json!({ "order": w.order(), "valid": valid }),
                        witness: Some(json!({ "map": map.images() })),
                        raw_undirected: None,
                        raw_labels: Some(w.labels.clone()),
                        raw_oriented: Some(w.graph),
                        failed_verification: !valid,
                    })
                }
                Err(Error::AmbiguousArcRecord { vertex, color }) => Ok(Outcome::Report {
                    values: json!({
                        "order": w.order(),
                        "valid": false,
                        "reason": format!(
                            "vertex {vertex} has oppositely directed cross arcs into color class {color}"
                        ),
                    }),
                    witness: None,
                    raw_undirected: None,
                    raw_labels: Some(w.labels.clone()),
                    raw_oriented: Some(w.graph),
                    failed_verification: true,
                }),
                Err(other) => Err(other),
            }
        }
        WhichConstruction::CartesianW => {
            let mut g = parse_undirected_arg(&args.left, "left")?;
            let mut h = parse_undirected_arg(&args.right, "right")?;
            // The colored factor is the right one; swap so it has the
            // smaller chromatic number.
            let chi_g = chromatic_number(&g, &ctx.caps)?;
            let chi_h = chromatic_number(&h, &ctx.caps)?;
            let swapped = chi_h > chi_g;
            if swapped {
                std::mem::swap(&mut g, &mut h);
            }
            let kk = chi_g.min(chi_h);
            let t = universal_target_for(&g, &ctx.caps)?;
            let u = universal_target_for(&h, &ctx.caps)?;
            let w = cartesian_upper_target(kk, &t, &u, &ctx.caps)?;
            let product = product_undirected(ProductKind::Cartesian, &g, &h);
            let d = orient(&product, args.orientation_index, &ctx.caps)?;
            let factors = CartesianFactors::derive(&g, &h, &d, &t, &u, &ctx.caps)?;
            let map = cartesian_upper_hom(&d, &g, &h, &t, &u, &factors)?;
            let valid = verify_homomorphism(&d, &w.graph, &map);
            Ok(Outcome::Report {
                values: json!({ "order": w.order(), "valid": valid, "factors_swapped": swapped }),
                witness: Some(json!({ "map": map.images() })),
                raw_undirected: None,
                raw_labels: Some(w.labels.clone()),
                raw_oriented: Some(w.graph),
                failed_verification: !valid,
            })
        }
        WhichConstruction::DirectW => {
            let g = parse_undirected_arg(&args.left, "left")?;
            let h = parse_undirected_arg(&args.right, "right")?;
            let kk = chromatic_number(&square(&g), &ctx.caps)?;
            let ell = chromatic_number(&square(&h), &ctx.caps)?;
            let w = direct_upper_target(kk, ell, &ctx.caps)?;
            let product = product_undirected(ProductKind::Direct, &g, &h);
            let d = orient(&product, args.orientation_index, &ctx.caps)?;
            let factors = DirectFactors::derive(&g, &h, &d, &ctx.caps)?;
            let map = direct_upper_hom(&d, &g, &h, &factors)?;
            let valid = verify_homomorphism(&d, &w.graph, &map);
            Ok(Outcome::Report {
                values: json!({ "order": w.order(), "valid": valid }),
                witness: Some(json!({ "map": map.images() })),
                raw_undirected: None,
                raw_labels: Some(w.labels.clone()),
                raw_oriented: Some(w.graph),
                failed_verification: !valid,
            })
        }
    }
}
