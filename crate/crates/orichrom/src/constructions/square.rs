//! Oriented coloring from a proper coloring of the square: at most
//! `2^k - 1` labels when the square is `k`-chromatic.

use crate::error::{Error, Result};
use crate::graph::{square, OrientedGraph, UndirectedGraph};
use crate::homomorphism::VertexMap;

use super::Label;

/// The label set: tuples `[a, b_1, .., b_{a-1}]` with `1 <= a <= k` and
/// binary `b_i`, listed in increasing packed order. Its size is `2^k - 1`.
pub fn square_color_labels(k: usize) -> Vec<Label> {
    let mut labels = Vec::with_capacity((1usize << k) - 1);
    for a in 1..=k {
        for bits in 0..1usize << (a - 1) {
            let mut tuple = Vec::with_capacity(a);
            tuple.push(a as u32);
            for i in 0..a - 1 {
                tuple.push((bits >> i & 1) as u32);
            }
            labels.push(Label::Tuple(tuple));
        }
    }
    labels
}

fn pack(a: usize, bits: usize) -> usize {
    (1usize << (a - 1)) - 1 + bits
}

/// Builds the oriented coloring of an orientation `d` of `g` from a proper
/// coloring `sigma` of the square of `g`.
///
/// The label of `u` starts with `a(u) = sigma(u) + 1` and carries one bit per
/// smaller color class: bit `i` is set iff `u` has an in-neighbor of class
/// `i`. Properness on the square makes that neighbor unique, which is
/// checked, not assumed. Color ids pack the labels of `square_color_labels`
/// in order, so the result uses at most `2^k - 1` ids.
pub fn square_coloring(
    g: &UndirectedGraph,
    sigma: &VertexMap,
    d: &OrientedGraph,
) -> Result<VertexMap> {
    if d.underlying() != *g {
        return Err(Error::NotOrientationOf {
            expected: "the given graph",
        });
    }
    if sigma.len() != g.order() {
        return Err(Error::MapSizeMismatch {
            expected: g.order(),
            got: sigma.len(),
        });
    }
    let sq = square(g);
    for (u, v) in sq.edges() {
        if sigma.get(u) == sigma.get(v) {
            return Err(Error::NotProperColoring {
                what: "sigma",
                graph: "the square of the graph",
            });
        }
    }
    let k = sigma.images().iter().copied().max().map_or(0, |m| m + 1);

    let mut images = Vec::with_capacity(g.order());
    for u in 0..g.order() {
        let a = sigma.get(u) + 1;
        let mut bits = 0usize;
        for i in 1..a {
            let mut hits = 0usize;
            for v in d.in_neighbors(u) {
                if sigma.get(v) + 1 == i {
                    hits += 1;
                    bits |= 1 << (i - 1);
                }
            }
            if hits > 1 {
                return Err(Error::NonUniqueNeighbor {
                    vertex: u,
                    color: i,
                    count: hits,
                });
            }
        }
        images.push(pack(a, bits));
    }
    VertexMap::new(images, (1usize << k) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::graph::{cycle, orientations, path, EdgeOrder};
    use crate::homomorphism::verify_oriented_coloring;
    use crate::solver::{chromatic_number, find_proper_coloring};

    #[test]
    fn label_set_size() {
        assert_eq!(square_color_labels(3).len(), 7);
        assert_eq!(square_color_labels(1).len(), 1);
        // The first color class gets the bare label [1].
        assert_eq!(square_color_labels(3)[0], Label::Tuple(vec![1]));
    }

    #[test]
    fn every_orientation_of_p5_is_colored() {
        let g = path(5).unwrap();
        let caps = Caps::default();
        // sigma(u) = u mod 3 is proper on the square of a path.
        let sigma = VertexMap::new((0..5).map(|u| u % 3).collect(), 3).unwrap();
        let order = EdgeOrder::lexicographic(&g);
        for d in orientations(&g, &order, &caps).unwrap() {
            let c = square_coloring(&g, &sigma, &d).unwrap();
            assert!(verify_oriented_coloring(&d, &c));
            assert!(c.color_count() <= 7);
        }
    }

    #[test]
    fn works_for_cycles_with_solver_colorings() {
        let g = cycle(6).unwrap();
        let caps = Caps::default();
        let k = chromatic_number(&square(&g), &caps).unwrap();
        let sigma = find_proper_coloring(&square(&g), k).unwrap();
        let order = EdgeOrder::lexicographic(&g);
        for d in orientations(&g, &order, &caps).unwrap() {
            let c = square_coloring(&g, &sigma, &d).unwrap();
            assert!(verify_oriented_coloring(&d, &c));
            assert!(c.color_count() < (1 << k));
        }
    }

    #[test]
    fn improper_sigma_rejected() {
        let g = path(3).unwrap();
        let sigma = VertexMap::new(vec![0, 1, 0], 2).unwrap(); // ends collide in the square
        let d = crate::graph::directed_path(3).unwrap();
        assert!(square_coloring(&g, &sigma, &d).is_err());
    }
}
