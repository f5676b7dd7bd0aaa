//! Closed-form homomorphisms for grids of paths: the strong product of two
//! directed paths into the order-7 circulant tournament, and the Cartesian
//! product of any two oriented paths into the directed 3-cycle.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{circulant_tournament, path, OrientedGraph};
use crate::homomorphism::VertexMap;

/// Maps the strong product of directed paths on `k` and `l` vertices into
/// the circulant tournament T(7; 1, 2, 3) by `[x_i, y_j] -> 2j + i (mod 7)`
/// with 1-based `i, j`. Every arc advances by 1 (row step), 2 (column step)
/// or 3 (diagonal step).
pub fn t7_strong_grid_hom(k: usize, l: usize) -> Result<(OrientedGraph, VertexMap)> {
    if k == 0 || l == 0 {
        return Err(Error::SizeTooSmall {
            what: "directed path grid side",
            min: 1,
            got: k.min(l),
        });
    }
    let s: BTreeSet<usize> = [1, 2, 3].into_iter().collect();
    let target = circulant_tournament(7, &s)?;
    let mut images = Vec::with_capacity(k * l);
    for i in 1..=k {
        for j in 1..=l {
            images.push((2 * j + i) % 7);
        }
    }
    let map = VertexMap::new(images, 7)?;
    Ok((target, map))
}

fn check_path_orientation(p: &OrientedGraph) -> Result<()> {
    if p.order() == 0 || p.underlying() != path(p.order())? {
        return Err(Error::NotOrientationOf {
            expected: "a path with vertices in path order",
        });
    }
    Ok(())
}

/// Maps the Cartesian product of two oriented paths into the directed
/// 3-cycle (the circulant tournament T(3; 1)).
///
/// The image of `[x_1, y_1]` is 0; moving along the second factor steps the
/// image by +1 or -1 (mod 3) according to the arc direction in `q`, and
/// moving along the first factor steps by +1 or -1 according to `p`.
pub fn c3_cartesian_path_hom(
    p: &OrientedGraph,
    q: &OrientedGraph,
) -> Result<(OrientedGraph, VertexMap)> {
    check_path_orientation(p)?;
    check_path_orientation(q)?;
    let (k, l) = (p.order(), q.order());
    let s: BTreeSet<usize> = [1].into_iter().collect();
    let target = circulant_tournament(3, &s)?;

    let mut values = vec![0usize; k * l];
    for j in 1..l {
        let prev = values[j - 1];
        values[j] = if q.has_arc(j - 1, j) {
            (prev + 1) % 3
        } else {
            (prev + 2) % 3
        };
    }
    for i in 1..k {
        for j in 0..l {
            let prev = values[(i - 1) * l + j];
            values[i * l + j] = if p.has_arc(i - 1, i) {
                (prev + 1) % 3
            } else {
                (prev + 2) % 3
            };
        }
    }
    let map = VertexMap::new(values, 3)?;
    Ok((target, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::graph::{directed_path, orientation_at, EdgeOrder};
    use crate::homomorphism::verify_homomorphism;
    use crate::products::{product_oriented, ProductKind};

    #[test]
    fn t7_values_and_verification() {
        let (target, map) = t7_strong_grid_hom(3, 3).unwrap();
        // [x_2, y_3] has flat index (2-1)*3 + (3-1) = 5 and lands on 1.
        assert_eq!(map.get(5), (2 * 3 + 2) % 7);
        let product = product_oriented(
            ProductKind::Strong,
            &directed_path(3).unwrap(),
            &directed_path(3).unwrap(),
        );
        assert!(verify_homomorphism(&product, &target, &map));
        // Diagonal arcs advance by exactly 3.
        for (a, b) in product.arcs() {
            let (ia, ja) = (a / 3, a % 3);
            let (ib, jb) = (b / 3, b % 3);
            if ib == ia + 1 && jb == ja + 1 {
                assert_eq!((map.get(b) + 7 - map.get(a)) % 7, 3);
            }
        }
    }

    #[test]
    fn t7_large_grid() {
        let (target, map) = t7_strong_grid_hom(20, 20).unwrap();
        let dp20 = directed_path(20).unwrap();
        let product = product_oriented(ProductKind::Strong, &dp20, &dp20);
        assert!(verify_homomorphism(&product, &target, &map));
    }

    #[test]
    fn c3_grid_all_orientation_pairs_of_p4() {
        let caps = Caps::default();
        let p4 = path(4).unwrap();
        let order = EdgeOrder::lexicographic(&p4);
        for a in 0..8u64 {
            let p = orientation_at(&p4, &order, a);
            for b in 0..8u64 {
                let q = orientation_at(&p4, &order, b);
                let (target, map) = c3_cartesian_path_hom(&p, &q).unwrap();
                let product = product_oriented(ProductKind::Cartesian, &p, &q);
                assert!(verify_homomorphism(&product, &target, &map));
                assert_eq!(map.get(0), 0);
            }
        }
        let _ = caps;
    }

    #[test]
    fn c3_grid_directed_case_is_linear() {
        let p = directed_path(4).unwrap();
        let (_, map) = c3_cartesian_path_hom(&p, &p).unwrap();
        for i in 1..=4usize {
            for j in 1..=4usize {
                assert_eq!(map.get((i - 1) * 4 + (j - 1)), (i + j - 2) % 3);
            }
        }
    }

    #[test]
    fn non_paths_rejected() {
        let c3 = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = directed_path(3).unwrap();
        assert!(c3_cartesian_path_hom(&c3, &p).is_err());
    }
}
