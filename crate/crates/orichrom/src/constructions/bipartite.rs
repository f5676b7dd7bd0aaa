//! The universal target for complete bipartite graphs, the in-neighborhood
//! homomorphism into it, and the orientation witnessing the matching lower
//! bound.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, OrientedGraph};
use crate::homomorphism::VertexMap;

use super::{Label, StructuredTarget};

/// Universal target for orientations of `K_{m,n}`: vertices `a_1..a_m` plus
/// `b_S` for every subset `S` of `{1..m}`. Each pair `(a_i, b_S)` carries
/// exactly one arc, `a_i -> b_S` iff `i` lies in `S`, `b_S -> a_i` otherwise.
/// There are no arcs among the `a`'s or among the `b`'s.
///
/// Vertex `i < m` is `a_{i+1}`; vertex `m + S` is `b_S` with `S` read as a
/// bitmask over `0..m`.
pub fn bipartite_target(m: usize, caps: &Caps) -> Result<StructuredTarget> {
    if m == 0 {
        return Err(Error::SizeTooSmall {
            what: "bipartite target side",
            min: 1,
            got: 0,
        });
    }
    if m > caps.subset_width {
        return Err(Error::CapExceeded {
            what: "subset width",
            cap: caps.subset_width,
            actual: m,
        });
    }
    let pow = 1usize << m;
    let mut arcs = Vec::with_capacity(m * pow);
    for i in 0..m {
        for s in 0..pow {
            if s >> i & 1 == 1 {
                arcs.push((i, m + s));
            } else {
                arcs.push((m + s, i));
            }
        }
    }
    let mut labels: Vec<Label> = (0..m).map(|i| Label::A(i + 1)).collect();
    labels.extend((0..pow).map(|s| Label::BSubset(s as u32)));
    StructuredTarget::new(OrientedGraph::new(m + pow, arcs)?, labels)
}

/// Splits an orientation of `K_{m,n}` (parts `0..m` and `m..m+n`) into its
/// part sizes, or fails when the underlying graph is not complete bipartite
/// with that labeling.
fn bipartite_shape(d: &OrientedGraph) -> Result<(usize, usize)> {
    let total = d.order();
    if total < 2 {
        return Err(Error::NotOrientationOf {
            expected: "a complete bipartite graph",
        });
    }
    let n = d.degree(0);
    if n == 0 || n >= total {
        return Err(Error::NotOrientationOf {
            expected: "a complete bipartite graph",
        });
    }
    let m = total - n;
    if d.underlying() != complete_bipartite(m, n)? {
        return Err(Error::NotOrientationOf {
            expected: "a complete bipartite graph",
        });
    }
    Ok((m, n))
}

/// The in-neighborhood homomorphism: `x_i` goes to `a_i` and each `y_j` to
/// `b_S` where `S` collects the `x`-side in-neighbors of `y_j`. Works for
/// every orientation of `K_{m,n}`; the part sizes are inferred from the
/// graph. Returns the target alongside the verified map.
pub fn bipartite_hom(d: &OrientedGraph, caps: &Caps) -> Result<(StructuredTarget, VertexMap)> {
    let (m, n) = bipartite_shape(d)?;
    let target = bipartite_target(m, caps)?;
    let mut images = Vec::with_capacity(m + n);
    images.extend(0..m);
    for j in 0..n {
        let y = m + j;
        let mut s = 0usize;
        for i in 0..m {
            if d.has_arc(i, y) {
                s |= 1 << i;
            }
        }
        images.push(m + s);
    }
    let map = VertexMap::new(images, target.order())?;
    debug_assert!(crate::homomorphism::verify_homomorphism(
        d,
        &target.graph,
        &map
    ));
    Ok((target, map))
}

/// The orientation of `K_{m,n}` whose oriented chromatic number meets the
/// exact value: `x_i -> y_j` iff `j` indexes one of the first `2^m` subsets
/// and `i` lies in that subset, all remaining edges oriented `y -> x`.
/// Subsets are enumerated in bitmask counter order. When `n >= 2^m`, the
/// subgraph on the `x`'s and the first `2^m` `y`'s is an oriented clique.
pub fn bipartite_tight_orientation(m: usize, n: usize, caps: &Caps) -> Result<OrientedGraph> {
    if m == 0 || n == 0 {
        return Err(Error::SizeTooSmall {
            what: "complete bipartite part",
            min: 1,
            got: m.min(n),
        });
    }
    if m > caps.subset_width {
        return Err(Error::CapExceeded {
            what: "subset width",
            cap: caps.subset_width,
            actual: m,
        });
    }
    let pow = 1usize << m;
    let mut arcs = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let forwards = j < pow && j >> i & 1 == 1;
            if forwards {
                arcs.push((i, m + j));
            } else {
                arcs.push((m + j, i));
            }
        }
    }
    OrientedGraph::new(m + n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::graph::{is_oriented_clique, orientations, EdgeOrder};
    use crate::homomorphism::verify_homomorphism;
    use crate::solver::chi_o_oriented;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn target_shape() {
        let t = bipartite_target(2, &caps()).unwrap();
        assert_eq!(t.order(), 6);
        // One arc per (a, b) pair; four of them point from a to b.
        assert_eq!(t.graph.arc_count(), 2 * 4);
        let a_to_b = t
            .graph
            .arcs()
            .filter(|&(u, _)| u < 2)
            .count();
        assert_eq!(a_to_b, 4);

        // a_1 -> b_{1,2} present, a_2 -> b_{1} absent.
        assert!(t.graph.has_arc(0, 2 + 0b11));
        assert!(!t.graph.has_arc(1, 2 + 0b01));
        // b_empty has in-degree 0.
        assert_eq!(t.graph.in_neighbors(2).len(), 0);
        assert!(bipartite_target(0, &caps()).is_err());
    }

    #[test]
    fn hom_in_neighborhoods() {
        // A y vertex with in-neighbors {x_1} lands on b_{1}; a source y on b_{}.
        let d = OrientedGraph::new(3, [(0, 1), (2, 0)]).unwrap(); // K_{1,2}: x_1 -> y_1, y_2 -> x_1
        let (t, m) = bipartite_hom(&d, &caps()).unwrap();
        assert_eq!(m.get(0), 0); // a_1
        assert_eq!(m.get(1), 1 + 0b1); // b_{1}
        assert_eq!(m.get(2), 1); // b_{}
        assert!(verify_homomorphism(&d, &t.graph, &m));
    }

    #[test]
    fn all_orientations_of_k23_map() {
        let g = complete_bipartite(2, 3).unwrap();
        let order = EdgeOrder::lexicographic(&g);
        for d in orientations(&g, &order, &caps()).unwrap() {
            let (t, m) = bipartite_hom(&d, &caps()).unwrap();
            assert!(verify_homomorphism(&d, &t.graph, &m));
        }
    }

    #[test]
    fn rejects_non_bipartite_inputs() {
        let triangle = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(bipartite_hom(&triangle, &caps()).is_err());
    }

    #[test]
    fn tight_orientation_witnesses() {
        // m=2, n=4: the whole graph is an oriented clique, so chi_o >= 6.
        let w = bipartite_tight_orientation(2, 4, &caps()).unwrap();
        assert!(is_oriented_clique(&w));

        // m=2, n=2: order-4 witness with chi_o = 4.
        let w = bipartite_tight_orientation(2, 2, &caps()).unwrap();
        assert_eq!(chi_o_oriented(&w, &caps()).unwrap(), 4);

        // m=1, n=2: order-3 witness with chi_o = 3.
        let w = bipartite_tight_orientation(1, 2, &caps()).unwrap();
        assert_eq!(chi_o_oriented(&w, &caps()).unwrap(), 3);
    }
}
