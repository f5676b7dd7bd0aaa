//! The four standard graph products (Cartesian, strong, direct,
//! lexicographic) for undirected and oriented graphs, plus layer extraction.
//!
//! Product vertices are pairs `[u, v]` flattened row-major in the left
//! factor: `[u, v]` has index `u * |V(right)| + v`.

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};

/// Which of the four products to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Strong,
    Direct,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Direct,
        ProductKind::Lexicographic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Direct => "direct",
            ProductKind::Lexicographic => "lexicographic",
        }
    }
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            "direct" => Ok(ProductKind::Direct),
            "lexicographic" => Ok(ProductKind::Lexicographic),
            other => Err(Error::Format(format!("unknown product kind `{other}`"))),
        }
    }
}

impl std::fmt::Display for ProductKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex `[u, v]` of a product graph together with its flat index rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductVertex {
    pub left: usize,
    pub right: usize,
}

impl ProductVertex {
    pub fn flat(&self, right_order: usize) -> usize {
        self.left * right_order + self.right
    }

    pub fn from_flat(index: usize, right_order: usize) -> Self {
        ProductVertex {
            left: index / right_order,
            right: index % right_order,
        }
    }
}

fn undirected_rule(kind: ProductKind, same_u: bool, eg: bool, same_v: bool, eh: bool) -> bool {
    match kind {
        ProductKind::Cartesian => (same_u && eh) || (same_v && eg),
        ProductKind::Strong => (same_u && eh) || (same_v && eg) || (eg && eh),
        ProductKind::Direct => eg && eh,
        ProductKind::Lexicographic => eg || (same_u && eh),
    }
}

/// Product of two undirected graphs. The edge rule is applied to every pair
/// of product vertices.
pub fn product_undirected(
    kind: ProductKind,
    g: &UndirectedGraph,
    h: &UndirectedGraph,
) -> UndirectedGraph {
    let (ng, nh) = (g.order(), h.order());
    let mut edges = Vec::new();
    for p in 0..ng * nh {
        let a = ProductVertex::from_flat(p, nh);
        for q in p + 1..ng * nh {
            let b = ProductVertex::from_flat(q, nh);
            let rule = undirected_rule(
                kind,
                a.left == b.left,
                g.has_edge(a.left, b.left),
                a.right == b.right,
                h.has_edge(a.right, b.right),
            );
            if rule {
                edges.push((p, q));
            }
        }
    }
    UndirectedGraph::new(ng * nh, edges).expect("products of simple graphs are simple")
}

fn oriented_rule(kind: ProductKind, same_u: bool, ag: bool, same_v: bool, ah: bool) -> bool {
    match kind {
        ProductKind::Cartesian => (same_u && ah) || (same_v && ag),
        ProductKind::Strong => (same_u && ah) || (same_v && ag) || (ag && ah),
        ProductKind::Direct => ag && ah,
        ProductKind::Lexicographic => ag || (same_u && ah),
    }
}

/// Product of two oriented graphs: the same rules with arcs in place of
/// edges. Antisymmetry of the factors carries over to the product.
pub fn product_oriented(
    kind: ProductKind,
    d: &OrientedGraph,
    e: &OrientedGraph,
) -> OrientedGraph {
    let (ng, nh) = (d.order(), e.order());
    let mut arcs = Vec::new();
    for p in 0..ng * nh {
        let a = ProductVertex::from_flat(p, nh);
        for q in 0..ng * nh {
            if p == q {
                continue;
            }
            let b = ProductVertex::from_flat(q, nh);
            let rule = oriented_rule(
                kind,
                a.left == b.left,
                d.has_arc(a.left, b.left),
                a.right == b.right,
                e.has_arc(a.right, b.right),
            );
            if rule {
                arcs.push((p, q));
            }
        }
    }
    OrientedGraph::new(ng * nh, arcs).expect("products of oriented graphs are oriented")
}

/// Which factor a layer copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A layer of a product: the induced subgraph on one factor copy, relabeled
/// to factor indices, plus the flat product index of each layer vertex.
#[derive(Clone, Debug)]
pub struct Layer<G> {
    pub graph: G,
    pub product_vertices: Vec<usize>,
}

fn layer_vertices(
    side: Side,
    ng: usize,
    nh: usize,
    fixed: usize,
) -> Result<Vec<usize>> {
    match side {
        Side::Left => {
            if fixed >= nh {
                return Err(Error::VertexOutOfRange {
                    v: fixed,
                    order: nh,
                });
            }
            Ok((0..ng).map(|u| u * nh + fixed).collect())
        }
        Side::Right => {
            if fixed >= ng {
                return Err(Error::VertexOutOfRange {
                    v: fixed,
                    order: ng,
                });
            }
            Ok((0..nh).map(|v| fixed * nh + v).collect())
        }
    }
}

fn check_layer_kind(kind: ProductKind, side: Side) -> Result<()> {
    // Lexicographic layers exist only on the right side (copies of the right
    // factor); slices of the left factor are complete joins, not layers.
    if kind == ProductKind::Lexicographic && side == Side::Left {
        return Err(Error::LexicographicLayer);
    }
    Ok(())
}

/// Layer of an undirected product. For the Cartesian and strong products the
/// layer is an isomorphic copy of the chosen factor; for the direct product
/// it is an independent set.
pub fn layer_undirected(
    kind: ProductKind,
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    side: Side,
    fixed: usize,
) -> Result<Layer<UndirectedGraph>> {
    check_layer_kind(kind, side)?;
    let verts = layer_vertices(side, g.order(), h.order(), fixed)?;
    let product = product_undirected(kind, g, h);
    Ok(Layer {
        graph: product.induced(&verts)?,
        product_vertices: verts,
    })
}

/// Layer of an oriented product.
pub fn layer_oriented(
    kind: ProductKind,
    d: &OrientedGraph,
    e: &OrientedGraph,
    side: Side,
    fixed: usize,
) -> Result<Layer<OrientedGraph>> {
    check_layer_kind(kind, side)?;
    let verts = layer_vertices(side, d.order(), e.order(), fixed)?;
    let product = product_oriented(kind, d, e);
    Ok(Layer {
        graph: product.induced(&verts)?,
        product_vertices: verts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, directed_path, path};

    #[test]
    fn small_products_match_known_shapes() {
        let k2 = complete(2).unwrap();
        // A 4-cycle: 0 - 1 - 3 - 2 - 0 in flat indices.
        let cart = product_undirected(ProductKind::Cartesian, &k2, &k2);
        assert_eq!(
            cart.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)]
        );
        assert!((0..4).all(|v| cart.degree(v) == 2));
        assert_eq!(
            product_undirected(ProductKind::Strong, &k2, &k2),
            complete(4).unwrap()
        );
        let direct = product_undirected(ProductKind::Direct, &k2, &k2);
        assert_eq!(direct.edge_count(), 2);
        assert!((0..4).all(|v| direct.degree(v) == 1));
        let lex = product_undirected(ProductKind::Lexicographic, &k2, &k2);
        assert_eq!(lex, complete(4).unwrap());
        assert_eq!(lex.edge_count(), 6);
    }

    #[test]
    fn edge_count_formulas() {
        let g = path(3).unwrap();
        let h = cycle(4).unwrap();
        let (eg, vg) = (g.edge_count(), g.order());
        let (eh, vh) = (h.edge_count(), h.order());
        assert_eq!(
            product_undirected(ProductKind::Cartesian, &g, &h).edge_count(),
            eg * vh + vg * eh
        );
        assert_eq!(
            product_undirected(ProductKind::Strong, &g, &h).edge_count(),
            eg * vh + vg * eh + 2 * eg * eh
        );
        assert_eq!(
            product_undirected(ProductKind::Direct, &g, &h).edge_count(),
            2 * eg * eh
        );
        assert_eq!(
            product_undirected(ProductKind::Lexicographic, &g, &h).edge_count(),
            eg * vh * vh + vg * eh
        );
    }

    #[test]
    fn containments() {
        let g = path(3).unwrap();
        let h = path(4).unwrap();
        let cart = product_undirected(ProductKind::Cartesian, &g, &h);
        let strong = product_undirected(ProductKind::Strong, &g, &h);
        let direct = product_undirected(ProductKind::Direct, &g, &h);
        let lex = product_undirected(ProductKind::Lexicographic, &g, &h);
        assert!(cart.is_subgraph_of(&strong));
        assert!(direct.is_subgraph_of(&strong));
        assert!(strong.is_subgraph_of(&lex));
    }

    #[test]
    fn lexicographic_is_not_symmetric() {
        let p3 = path(3).unwrap();
        let k2 = complete(2).unwrap();
        let a = product_undirected(ProductKind::Lexicographic, &p3, &k2);
        let b = product_undirected(ProductKind::Lexicographic, &k2, &p3);
        assert_ne!(a.edge_count(), b.edge_count());
    }

    #[test]
    fn swap_symmetric_kinds() {
        // Cartesian, strong and direct products are symmetric up to the
        // pair-swap relabeling [u, v] -> [v, u].
        let g = path(3).unwrap();
        let h = cycle(4).unwrap();
        let (ng, nh) = (g.order(), h.order());
        for kind in [ProductKind::Cartesian, ProductKind::Strong, ProductKind::Direct] {
            let gh = product_undirected(kind, &g, &h);
            let hg = product_undirected(kind, &h, &g);
            let swap = |flat: usize| {
                let v = ProductVertex::from_flat(flat, nh);
                ProductVertex {
                    left: v.right,
                    right: v.left,
                }
                .flat(ng)
            };
            let relabeled: Vec<(usize, usize)> =
                gh.edges().map(|(a, b)| (swap(a), swap(b))).collect();
            assert_eq!(
                UndirectedGraph::new(ng * nh, relabeled).unwrap(),
                hg,
                "kind {kind}"
            );
        }
    }

    #[test]
    fn strong_directed_grid_arc_forms() {
        // Every arc of the strong product of two directed paths is a row
        // step, a column step, or the aligned diagonal step; anti-diagonal
        // pairs carry no arc.
        let d = directed_path(3).unwrap();
        let e = directed_path(3).unwrap();
        let p = product_oriented(ProductKind::Strong, &d, &e);
        for (a, b) in p.arcs() {
            let pa = ProductVertex::from_flat(a, 3);
            let pb = ProductVertex::from_flat(b, 3);
            let right = pb.left == pa.left + 1 && pb.right == pa.right;
            let up = pb.left == pa.left && pb.right == pa.right + 1;
            let diag = pb.left == pa.left + 1 && pb.right == pa.right + 1;
            assert!(right || up || diag);
        }
        assert_eq!(p.arc_count(), 2 * 3 + 3 * 2 + 2 * 2);
    }

    #[test]
    fn direct_product_of_directed_edges() {
        let d = directed_path(2).unwrap();
        let p = product_oriented(ProductKind::Direct, &d, &d);
        assert_eq!(p.arcs().collect::<Vec<_>>(), vec![(0, 3)]);
    }

    #[test]
    fn forgetting_directions_recovers_the_cartesian_and_lexicographic_products() {
        // For the Cartesian and lexicographic products every product edge is
        // driven by exactly one factor adjacency, so the oriented product is
        // an orientation of the undirected one. The strong and direct
        // products also pair opposite factor arcs, which joins anti-diagonal
        // vertices in the undirected product but not in the oriented one.
        let d = directed_path(3).unwrap();
        let e = crate::graph::orientation_at(
            &cycle(4).unwrap(),
            &crate::graph::EdgeOrder::lexicographic(&cycle(4).unwrap()),
            5,
        );
        for kind in ProductKind::ALL {
            let oriented = product_oriented(kind, &d, &e);
            let undirected = product_undirected(kind, &d.underlying(), &e.underlying());
            assert!(
                oriented.underlying().is_subgraph_of(&undirected),
                "kind {kind}"
            );
            match kind {
                ProductKind::Cartesian | ProductKind::Lexicographic => {
                    assert_eq!(oriented.underlying(), undirected, "kind {kind}");
                }
                ProductKind::Strong | ProductKind::Direct => {
                    assert!(
                        oriented.underlying().edge_count() < undirected.edge_count(),
                        "kind {kind}"
                    );
                }
            }
        }
    }

    #[test]
    fn nested_products_associate_on_flat_indices() {
        let k2 = complete(2).unwrap();
        let p3 = path(3).unwrap();
        let c4 = cycle(4).unwrap();
        for kind in ProductKind::ALL {
            let left = product_undirected(kind, &product_undirected(kind, &k2, &p3), &c4);
            let right = product_undirected(kind, &k2, &product_undirected(kind, &p3, &c4));
            assert_eq!(left, right, "kind {kind}");
        }
    }

    #[test]
    fn direct_products_of_paths_split_into_two_components() {
        // The parity of the coordinate sum is preserved by direct-product
        // edges, so path-by-path direct products fall apart into two pieces.
        let count_components = |g: &UndirectedGraph| {
            let n = g.order();
            let mut comp = vec![usize::MAX; n];
            let mut count = 0;
            for start in 0..n {
                if comp[start] != usize::MAX {
                    continue;
                }
                let mut stack = vec![start];
                comp[start] = count;
                while let Some(v) = stack.pop() {
                    for w in g.neighbors(v) {
                        if comp[w] == usize::MAX {
                            comp[w] = count;
                            stack.push(w);
                        }
                    }
                }
                count += 1;
            }
            count
        };
        for (k, l) in [(2, 2), (3, 3), (3, 4), (4, 5)] {
            let p = product_undirected(ProductKind::Direct, &path(k).unwrap(), &path(l).unwrap());
            assert_eq!(count_components(&p), 2, "{k} x {l}");
        }
    }

    #[test]
    fn oriented_layers_copy_the_factor() {
        let dp3 = directed_path(3).unwrap();
        let dp2 = directed_path(2).unwrap();
        let l = layer_oriented(ProductKind::Cartesian, &dp3, &dp2, Side::Left, 1).unwrap();
        assert_eq!(l.graph, dp3);
        assert_eq!(l.product_vertices, vec![1, 3, 5]);
        let l = layer_oriented(ProductKind::Strong, &dp3, &dp2, Side::Right, 2).unwrap();
        assert_eq!(l.graph, dp2);
    }

    #[test]
    fn layers() {
        let p3 = path(3).unwrap();
        let p2 = path(2).unwrap();
        let l = layer_undirected(ProductKind::Cartesian, &p3, &p2, Side::Left, 0).unwrap();
        assert_eq!(l.graph, p3);
        assert_eq!(l.product_vertices, vec![0, 2, 4]);

        let k2 = complete(2).unwrap();
        let l = layer_undirected(ProductKind::Direct, &k2, &k2, Side::Left, 0).unwrap();
        assert_eq!(l.graph.order(), 2);
        assert_eq!(l.graph.edge_count(), 0);

        let l = layer_undirected(ProductKind::Strong, &p3, &p3, Side::Right, 1).unwrap();
        assert_eq!(l.graph, p3);

        assert!(layer_undirected(ProductKind::Lexicographic, &p3, &p2, Side::Left, 0).is_err());
        let l = layer_undirected(ProductKind::Lexicographic, &p3, &p2, Side::Right, 1).unwrap();
        assert_eq!(l.graph, p2);
        assert!(layer_undirected(ProductKind::Cartesian, &p3, &p2, Side::Left, 9).is_err());
    }
}
