//! Named verification checks, one per acceptance criterion. The CLI `verify`
//! subcommand and the acceptance test suite both run these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::caps::Caps;
use crate::constructions::{
    bipartite_hom, c3_cartesian_path_hom, cartesian_upper_hom, cartesian_upper_target,
    direct_upper_hom, direct_upper_target, lexico_upper_hom, lexico_upper_target,
    product_hom_compose, projection_hom, square_coloring, strong_upper_hom, strong_upper_target,
    CartesianFactors, DirectFactors, LexicoFactors, StrongFactors,
};
use crate::error::{Error, Result};
use crate::graph::{
    complete, complete_bipartite, cycle, directed_path, is_oriented_clique, orientation_at,
    orientations, path, square, EdgeOrder, OrientedGraph, UndirectedGraph,
};
use crate::homomorphism::{verify_homomorphism, verify_oriented_coloring, VertexMap};
use crate::products::{product_oriented, product_undirected, ProductKind, Side};
use crate::solver::{
    chi_o_oriented, chi_o_plus, chi_o_undirected, chromatic_number, find_proper_coloring,
    moon_bounds, universal_tournament_size,
};

/// Check names in criterion order.
pub const THEOREM_NAMES: [&str; 13] = [
    "c3",
    "bipartite-chi-o",
    "bipartite-hom",
    "strong-paths",
    "t7-grid",
    "lexico-paths",
    "c3-grid",
    "epsilon",
    "square-coloring",
    "cartesian-w",
    "direct-w",
    "sampled-w",
    "product-properties",
];

/// Settings shared by all checks.
#[derive(Clone, Debug)]
pub struct CheckContext {
    pub caps: Caps,
    pub seed: u64,
    pub jobs: usize,
    pub k: Option<usize>,
    pub l: Option<usize>,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext {
            caps: Caps::default(),
            seed: 0x0C1A55,
            jobs: std::thread::available_parallelism()
                .map(|p| p.get().min(8))
                .unwrap_or(1),
            k: None,
            l: None,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub criterion: usize,
    pub passed: bool,
    pub summary: String,
    pub details: Vec<String>,
    pub values: serde_json::Value,
}

struct Recorder {
    passed: bool,
    details: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            passed: true,
            details: Vec::new(),
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.passed &= ok;
        self.details.push(format!(
            "{what}: got {got:?}, want {want:?} [{}]",
            if ok { "ok" } else { "FAIL" }
        ));
    }

    fn expect(&mut self, what: &str, ok: bool) {
        self.passed &= ok;
        self.details
            .push(format!("{what} [{}]", if ok { "ok" } else { "FAIL" }));
    }
}

fn dc3() -> OrientedGraph {
    OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
}

/// Runs the named check.
pub fn run_theorem(name: &str, ctx: &CheckContext) -> Result<TheoremCheck> {
    match name {
        "c3" => check_c3(ctx),
        "bipartite-chi-o" => check_bipartite_chi_o(ctx),
        "bipartite-hom" => check_bipartite_hom(ctx),
        "strong-paths" => check_strong_paths(ctx),
        "t7-grid" => check_t7_grid(ctx),
        "lexico-paths" => check_lexico_paths(ctx),
        "c3-grid" => check_c3_grid(ctx),
        "epsilon" => check_epsilon(ctx),
        "square-coloring" => check_square_coloring(ctx),
        "cartesian-w" => check_cartesian_w(ctx),
        "direct-w" => check_direct_w(ctx),
        "sampled-w" => check_sampled_w(ctx),
        "product-properties" => check_product_properties(ctx),
        other => Err(Error::Format(format!("unknown theorem name `{other}`"))),
    }
}

fn finish(
    name: &'static str,
    criterion: usize,
    rec: Recorder,
    values: serde_json::Value,
) -> TheoremCheck {
    TheoremCheck {
        name,
        criterion,
        passed: rec.passed,
        summary: format!(
            "criterion {criterion} ({name}): {}",
            if rec.passed { "PASS" } else { "FAIL" }
        ),
        details: rec.details,
        values,
    }
}

fn check_c3(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let c3 = cycle(3)?;
    let chi_o = chi_o_undirected(&c3, &ctx.caps, 1)?;
    rec.expect_eq("oriented chromatic number of the 3-cycle", chi_o, 3);
    let plus = chi_o_plus(&c3, 5, &ctx.caps)?;
    rec.expect_eq("upper oriented chromatic number of the 3-cycle", plus, Some(4));
    let values = json!({ "chi_o": chi_o, "chi_o_plus": plus });
    Ok(finish("c3", 1, rec, values))
}

fn check_bipartite_chi_o(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let pairs = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 4)];
    let mut computed = Vec::new();
    for (m, n) in pairs {
        let g = complete_bipartite(m, n)?;
        let expected = m + n.min(1 << m);
        let got = chi_o_undirected(&g, &ctx.caps, ctx.jobs)?;
        rec.expect_eq(&format!("chi_o of K_{{{m},{n}}}"), got, expected);
        computed.push(json!({ "m": m, "n": n, "chi_o": got, "expected": expected }));
    }
    Ok(finish("bipartite-chi-o", 2, rec, json!({ "pairs": computed })))
}

fn check_bipartite_hom(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let mut checked = 0u64;
    for m in 1..=3usize {
        for n in 1..=4usize {
            let g = complete_bipartite(m, n)?;
            let order = EdgeOrder::lexicographic(&g);
            let mut all = true;
            for d in orientations(&g, &order, &ctx.caps)? {
                let (target, map) = bipartite_hom(&d, &ctx.caps)?;
                all &= verify_homomorphism(&d, &target.graph, &map);
                checked += 1;
            }
            rec.expect(
                &format!("every orientation of K_{{{m},{n}}} maps into the subset target"),
                all,
            );
        }
    }
    Ok(finish(
        "bipartite-hom",
        3,
        rec,
        json!({ "orientations_checked": checked }),
    ))
}

fn check_strong_paths(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let k = ctx.k.unwrap_or(3);
    let l = ctx.l.unwrap_or(3);
    if k < 3 || l < 3 {
        return Err(Error::SizeTooSmall {
            what: "strong grid side",
            min: 3,
            got: k.min(l),
        });
    }
    let product = product_oriented(
        ProductKind::Strong,
        &directed_path(k)?,
        &directed_path(l)?,
    );
    let (t7, map) = crate::constructions::t7_strong_grid_hom(k, l)?;
    rec.expect(
        "the residue map into T(7;1,2,3) verifies",
        verify_homomorphism(&product, &t7, &map),
    );
    // The order-7 witness inside the 3 x 3 corner.
    let witness = [0, l, l + 1, l + 2, 2 * l, 2 * l + 1, 2 * l + 2];
    let sub = product.induced(&witness)?;
    rec.expect("the 7-vertex witness is an oriented clique", is_oriented_clique(&sub));
    let exact = chi_o_oriented(&product, &ctx.caps)?;
    rec.expect_eq("exact oriented chromatic number", exact, 7);
    // Largest induced oriented clique, for the record (subset sweep).
    let mut largest = 0usize;
    if product.order() <= 16 {
        for mask in 0..1u32 << product.order() {
            if (mask.count_ones() as usize) > largest {
                let verts: Vec<usize> =
                    (0..product.order()).filter(|&v| mask >> v & 1 == 1).collect();
                if is_oriented_clique(&product.induced(&verts)?) {
                    largest = verts.len();
                }
            }
        }
    }
    Ok(finish(
        "strong-paths",
        4,
        rec,
        json!({ "k": k, "l": l, "chi_o": exact, "largest_oriented_clique": largest }),
    ))
}

fn check_t7_grid(_ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let mut all = true;
    for k in 3..=20usize {
        for l in 3..=20usize {
            let product = product_oriented(
                ProductKind::Strong,
                &directed_path(k)?,
                &directed_path(l)?,
            );
            let (t7, map) = crate::constructions::t7_strong_grid_hom(k, l)?;
            all &= verify_homomorphism(&product, &t7, &map);
        }
    }
    rec.expect("the residue map verifies for every grid with sides 3..=20", all);
    Ok(finish("t7-grid", 5, rec, json!({ "grids": 18 * 18 })))
}

fn check_lexico_paths(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let product = product_oriented(
        ProductKind::Lexicographic,
        &directed_path(3)?,
        &directed_path(3)?,
    );
    rec.expect(
        "the 9-vertex product is an oriented clique",
        is_oriented_clique(&product),
    );
    let exact = chi_o_oriented(&product, &ctx.caps)?;
    rec.expect_eq("exact oriented chromatic number", exact, 9);
    Ok(finish("lexico-paths", 6, rec, json!({ "chi_o": exact })))
}

fn check_c3_grid(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let p4 = path(4)?;
    let order = EdgeOrder::lexicographic(&p4);
    let mut all = true;
    let mut pairs = 0u32;
    for a in 0..8u64 {
        let p = orientation_at(&p4, &order, a);
        for b in 0..8u64 {
            let q = orientation_at(&p4, &order, b);
            let (target, map) = c3_cartesian_path_hom(&p, &q)?;
            let product = product_oriented(ProductKind::Cartesian, &p, &q);
            all &= verify_homomorphism(&product, &target, &map);
            pairs += 1;
        }
    }
    rec.expect_eq("orientation pairs checked", pairs, 64);
    rec.expect(
        "the inductive 3-cycle map verifies for every pair, so chi_o <= 3",
        all,
    );
    let _ = ctx;
    Ok(finish("c3-grid", 7, rec, json!({ "pairs": pairs })))
}

fn check_epsilon(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let mut values = Vec::new();
    let mut eps = Vec::new();
    for n in 1..=4usize {
        let e = universal_tournament_size(n, &ctx.caps)?;
        eps.push(e);
        let bounds = moon_bounds(n)?;
        let e_big = num_bigint::BigUint::from(e);
        rec.expect(
            &format!("bounds sandwich the universal tournament order for n = {n}"),
            bounds.lower <= e_big && e_big <= bounds.upper,
        );
        values.push(json!({
            "n": n,
            "epsilon": e,
            "lower": bounds.lower.to_string(),
            "upper": bounds.upper.to_string(),
        }));
    }
    rec.expect_eq("1-universal order", eps[0], 1);
    rec.expect_eq("2-universal order", eps[1], 2);
    rec.expect_eq("3-universal order", eps[2], 4);
    let k3_plus = chi_o_plus(&complete(3)?, 5, &ctx.caps)?;
    rec.expect_eq(
        "upper oriented chromatic number of K_3 equals the 3-universal order",
        k3_plus,
        Some(eps[2]),
    );
    Ok(finish("epsilon", 8, rec, json!({ "table": values })))
}

fn check_square_coloring(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let mut entries = Vec::new();
    for (label, g) in [("path on 5", path(5)?), ("cycle on 6", cycle(6)?)] {
        let sq = square(&g);
        let k = chromatic_number(&sq, &ctx.caps)?;
        let sigma = find_proper_coloring(&sq, k).expect("chromatic number is feasible");
        let order = EdgeOrder::lexicographic(&g);
        let mut all = true;
        let mut max_labels = 0usize;
        for d in orientations(&g, &order, &ctx.caps)? {
            let c = square_coloring(&g, &sigma, &d)?;
            all &= verify_oriented_coloring(&d, &c);
            max_labels = max_labels.max(c.color_count());
        }
        let bound = (1usize << k) - 1;
        rec.expect(
            &format!("{label}: every orientation gets a valid oriented coloring"),
            all,
        );
        rec.expect(
            &format!("{label}: label count {max_labels} stays within {bound}"),
            max_labels <= bound,
        );
        entries.push(json!({ "graph": label, "k": k, "max_labels": max_labels, "bound": bound }));
    }
    Ok(finish("square-coloring", 9, rec, json!({ "graphs": entries })))
}

fn check_cartesian_w(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let g = path(3)?;
    let h = path(3)?;
    let t = dc3();
    let u = dc3();
    let w = cartesian_upper_target(2, &t, &u, &ctx.caps)?;
    rec.expect_eq("target order for path factors", w.order(), 18);
    let product = product_undirected(ProductKind::Cartesian, &g, &h);
    let order = EdgeOrder::lexicographic(&product);
    let mut verified = 0u64;
    let total = 1u64 << product.edge_count();
    for idx in 0..total {
        let d = orientation_at(&product, &order, idx);
        let factors = CartesianFactors::derive(&g, &h, &d, &t, &u, &ctx.caps)?;
        let m = cartesian_upper_hom(&d, &g, &h, &t, &u, &factors)?;
        if verify_homomorphism(&d, &w.graph, &m) {
            verified += 1;
        }
    }
    rec.expect_eq("orientations verified", verified, total);
    Ok(finish(
        "cartesian-w",
        10,
        rec,
        json!({ "order": w.order(), "verified": verified, "total": total }),
    ))
}

fn check_direct_w(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let g = path(3)?;
    let h = path(3)?;
    let w = direct_upper_target(3, 3, &ctx.caps)?;
    rec.expect_eq("target order for k = l = 3", w.order(), 21);
    let product = product_undirected(ProductKind::Direct, &g, &h);
    let order = EdgeOrder::lexicographic(&product);
    let total = 1u64 << product.edge_count();
    let mut verified = 0u64;
    for idx in 0..total {
        let d = orientation_at(&product, &order, idx);
        let factors = DirectFactors::derive(&g, &h, &d, &ctx.caps)?;
        let m = direct_upper_hom(&d, &g, &h, &factors)?;
        if verify_homomorphism(&d, &w.graph, &m) {
            verified += 1;
        }
    }
    rec.expect_eq("orientations verified", verified, total);
    Ok(finish(
        "direct-w",
        11,
        rec,
        json!({ "order": w.order(), "verified": verified, "total": total }),
    ))
}

fn check_sampled_w(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let samples = 1000u32;

    // Strong product of paths on three vertices.
    let g = path(3)?;
    let h = path(3)?;
    let t = dc3();
    let u = dc3();
    let w = strong_upper_target(3, 2, &t, &u, &ctx.caps)?;
    rec.expect_eq("strong target order for path factors", w.order(), 126);
    let product = product_undirected(ProductKind::Strong, &g, &h);
    let order = EdgeOrder::lexicographic(&product);
    let total = 1u64 << product.edge_count();
    let mut strong_ok = 0u32;
    let mut ambiguous = 0u32;
    for _ in 0..samples {
        let idx = rng.gen_range(0..total);
        let d = orientation_at(&product, &order, idx);
        let factors = StrongFactors::derive(&g, &h, &d, &t, &u, &ctx.caps)?;
        match strong_upper_hom(&d, &g, &h, &t, &u, &factors) {
            Ok(m) => {
                if verify_homomorphism(&d, &w.graph, &m) {
                    strong_ok += 1;
                }
            }
            Err(Error::AmbiguousArcRecord { .. }) => ambiguous += 1,
            Err(other) => return Err(other),
        }
    }
    rec.expect_eq(
        "strong maps verified on sampled orientations",
        strong_ok,
        samples,
    );
    rec.expect(
        "every unambiguous strong sample verifies",
        strong_ok + ambiguous == samples,
    );

    // Lexicographic product of a path on three vertices with an edge.
    let h2 = path(2)?;
    let u2 = OrientedGraph::new(2, [(0, 1)])?;
    let wl = lexico_upper_target(3, &u2, 2, &ctx.caps)?;
    let formula = 3 * 2 * (2usize + 4).pow(2);
    rec.expect_eq("lexicographic target order formula", wl.order(), formula);
    let lproduct = product_undirected(ProductKind::Lexicographic, &g, &h2);
    let lorder = EdgeOrder::lexicographic(&lproduct);
    let ltotal = 1u64 << lproduct.edge_count();
    let mut lex_ok = 0u32;
    for _ in 0..samples {
        let idx = rng.gen_range(0..ltotal);
        let d = orientation_at(&lproduct, &lorder, idx);
        let factors = LexicoFactors::derive(&g, &h2, &d, &u2, &ctx.caps)?;
        let m = lexico_upper_hom(&d, &g, &u2, &factors, &ctx.caps)?;
        if verify_homomorphism(&d, &wl.graph, &m) {
            lex_ok += 1;
        }
    }
    rec.expect_eq(
        "lexicographic maps verified on sampled orientations",
        lex_ok,
        samples,
    );

    Ok(finish(
        "sampled-w",
        12,
        rec,
        json!({
            "strong_order": w.order(),
            "strong_verified": strong_ok,
            "strong_ambiguous": ambiguous,
            "lexico_order": wl.order(),
            "lexico_verified": lex_ok,
            "samples": samples,
        }),
    ))
}

fn random_graph(rng: &mut ChaCha8Rng, max_order: usize) -> UndirectedGraph {
    let n = rng.gen_range(1..=max_order);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges).unwrap()
}

fn random_orientation(rng: &mut ChaCha8Rng, g: &UndirectedGraph) -> OrientedGraph {
    let order = EdgeOrder::lexicographic(g);
    let idx = if g.edge_count() == 0 {
        0
    } else {
        rng.gen_range(0..1u64 << g.edge_count())
    };
    orientation_at(g, &order, idx)
}

/// Random (source, target, map) triple where the map is a homomorphism by
/// construction: source arcs are drawn only between vertices whose images
/// are joined in the target.
fn random_hom_instance(
    rng: &mut ChaCha8Rng,
    max_order: usize,
) -> (OrientedGraph, OrientedGraph, VertexMap) {
    let base = random_graph(rng, max_order);
    let target = random_orientation(rng, &base);
    let n = rng.gen_range(1..=max_order);
    let images: Vec<usize> = (0..n).map(|_| rng.gen_range(0..target.order())).collect();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && target.has_arc(images[u], images[v]) && rng.gen_bool(0.5) {
                arcs.push((u, v));
            }
        }
    }
    let source = OrientedGraph::new(n, arcs).unwrap();
    let map = VertexMap::new(images, target.order()).unwrap();
    (source, target, map)
}

fn check_product_properties(ctx: &CheckContext) -> Result<TheoremCheck> {
    let mut rec = Recorder::new();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let instances = 500u32;
    let mut counts_ok = true;
    let mut containments_ok = true;
    let mut composition_ok = true;
    let mut product_compose_ok = true;
    let mut projections_ok = true;

    for _ in 0..instances {
        let g = random_graph(&mut rng, 5);
        let h = random_graph(&mut rng, 5);
        let (eg, vg) = (g.edge_count(), g.order());
        let (eh, vh) = (h.edge_count(), h.order());
        let cart = product_undirected(ProductKind::Cartesian, &g, &h);
        let strong = product_undirected(ProductKind::Strong, &g, &h);
        let direct = product_undirected(ProductKind::Direct, &g, &h);
        let lex = product_undirected(ProductKind::Lexicographic, &g, &h);
        counts_ok &= cart.edge_count() == eg * vh + vg * eh;
        counts_ok &= strong.edge_count() == eg * vh + vg * eh + 2 * eg * eh;
        counts_ok &= direct.edge_count() == 2 * eg * eh;
        counts_ok &= lex.edge_count() == eg * vh * vh + vg * eh;
        containments_ok &= cart.is_subgraph_of(&strong);
        containments_ok &= direct.is_subgraph_of(&strong);
        containments_ok &= strong.is_subgraph_of(&lex);

        // Homomorphisms compose.
        let (mid, last, m2) = random_hom_instance(&mut rng, 4);
        let n = rng.gen_range(1..=4usize);
        let images: Vec<usize> = (0..n).map(|_| rng.gen_range(0..mid.order())).collect();
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && mid.has_arc(images[u], images[v]) && rng.gen_bool(0.5) {
                    arcs.push((u, v));
                }
            }
        }
        let first = OrientedGraph::new(n, arcs).unwrap();
        let m1 = VertexMap::new(images, mid.order()).unwrap();
        composition_ok &= verify_homomorphism(&first, &mid, &m1);
        composition_ok &= verify_homomorphism(&mid, &last, &m2);
        composition_ok &= verify_homomorphism(&first, &last, &m1.compose(&m2));

        // Coordinate-wise composition across products.
        let (d, dt, alpha) = random_hom_instance(&mut rng, 4);
        let (e, et, beta) = random_hom_instance(&mut rng, 4);
        for kind in [
            ProductKind::Lexicographic,
            ProductKind::Strong,
            ProductKind::Cartesian,
        ] {
            let m = product_hom_compose(kind, &d, &dt, &alpha, &e, &et, &beta)?;
            let source = product_oriented(kind, &d, &e);
            let target = product_oriented(kind, &dt, &et);
            product_compose_ok &= verify_homomorphism(&source, &target, &m);
        }

        // Direct-product projections.
        let dd_base = random_graph(&mut rng, 5);
        let dd = random_orientation(&mut rng, &dd_base);
        let ee_base = random_graph(&mut rng, 5);
        let ee = random_orientation(&mut rng, &ee_base);
        let source = product_oriented(ProductKind::Direct, &dd, &ee);
        projections_ok &= verify_homomorphism(&source, &dd, &projection_hom(Side::Left, &dd, &ee));
        projections_ok &=
            verify_homomorphism(&source, &ee, &projection_hom(Side::Right, &dd, &ee));
    }

    rec.expect("edge-count formulas hold on every instance", counts_ok);
    rec.expect("product containments hold on every instance", containments_ok);
    rec.expect("homomorphism composition holds on every instance", composition_ok);
    rec.expect(
        "coordinate-wise composition verifies on every instance",
        product_compose_ok,
    );
    rec.expect("direct-product projections verify on every instance", projections_ok);
    Ok(finish(
        "product-properties",
        13,
        rec,
        json!({ "instances": instances }),
    ))
}

/// Criterion number for a check name.
pub fn criterion_of(name: &str) -> Option<usize> {
    THEOREM_NAMES.iter().position(|&n| n == name).map(|i| i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_map_to_criteria() {
        assert_eq!(criterion_of("c3"), Some(1));
        assert_eq!(criterion_of("product-properties"), Some(13));
        assert_eq!(criterion_of("nope"), None);
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(run_theorem("nope", &CheckContext::default()).is_err());
    }
}
