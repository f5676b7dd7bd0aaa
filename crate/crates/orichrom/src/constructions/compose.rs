//! Coordinate-wise composition of homomorphisms across products, and the
//! factor projections of the direct product.

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::homomorphism::{verify_homomorphism, VertexMap};
use crate::products::{product_oriented, ProductKind, ProductVertex, Side};

/// Given homomorphisms `alpha: d -> t` and `beta: e -> u`, builds
/// `[x, y] -> [alpha(x), beta(y)]` as a map from the `kind`-product of
/// `d, e` to the `kind`-product of `t, u`. Defined for the lexicographic,
/// strong and Cartesian products; the direct product goes through
/// `projection_hom` instead.
#[allow(clippy::too_many_arguments)]
pub fn product_hom_compose(
    kind: ProductKind,
    d: &OrientedGraph,
    t: &OrientedGraph,
    alpha: &VertexMap,
    e: &OrientedGraph,
    u: &OrientedGraph,
    beta: &VertexMap,
) -> Result<VertexMap> {
    if kind == ProductKind::Direct {
        return Err(Error::DirectComposition);
    }
    if !verify_homomorphism(d, t, alpha) {
        return Err(Error::NotHomomorphism {
            what: "the left factor map",
        });
    }
    if !verify_homomorphism(e, u, beta) {
        return Err(Error::NotHomomorphism {
            what: "the right factor map",
        });
    }
    let nh = e.order();
    let target_right = u.order();
    let mut images = Vec::with_capacity(d.order() * nh);
    for flat in 0..d.order() * nh {
        let v = ProductVertex::from_flat(flat, nh);
        let image = ProductVertex {
            left: alpha.get(v.left),
            right: beta.get(v.right),
        };
        images.push(image.flat(target_right));
    }
    VertexMap::new(images, t.order() * target_right)
}

/// Projection of the direct product onto one factor; always a homomorphism.
pub fn projection_hom(which: Side, d: &OrientedGraph, e: &OrientedGraph) -> VertexMap {
    let nh = e.order();
    let total = d.order() * nh;
    let images: Vec<usize> = (0..total)
        .map(|flat| {
            let v = ProductVertex::from_flat(flat, nh);
            match which {
                Side::Left => v.left,
                Side::Right => v.right,
            }
        })
        .collect();
    let order = match which {
        Side::Left => d.order(),
        Side::Right => e.order(),
    };
    let map = VertexMap::new(images, order.max(1)).expect("projections stay in range");
    debug_assert!(verify_homomorphism(
        &product_oriented(ProductKind::Direct, d, e),
        match which {
            Side::Left => d,
            Side::Right => e,
        },
        &map
    ));
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::directed_path;
    use crate::homomorphism::find_homomorphism;

    fn dc3() -> OrientedGraph {
        OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn identity_maps_compose_to_identity() {
        let d = directed_path(3).unwrap();
        let id = VertexMap::identity(3);
        for kind in [
            ProductKind::Lexicographic,
            ProductKind::Strong,
            ProductKind::Cartesian,
        ] {
            let m = product_hom_compose(kind, &d, &d, &id, &d, &d, &id).unwrap();
            assert_eq!(m.images(), VertexMap::identity(9).images());
        }
    }

    #[test]
    fn composed_maps_verify() {
        let d = directed_path(4).unwrap();
        let e = directed_path(5).unwrap();
        let t = dc3();
        let alpha = find_homomorphism(&d, &t).unwrap();
        let beta = find_homomorphism(&e, &t).unwrap();
        for kind in [
            ProductKind::Lexicographic,
            ProductKind::Strong,
            ProductKind::Cartesian,
        ] {
            let m = product_hom_compose(kind, &d, &t, &alpha, &e, &t, &beta).unwrap();
            let source = product_oriented(kind, &d, &e);
            let target = product_oriented(kind, &t, &t);
            assert!(verify_homomorphism(&source, &target, &m), "kind {kind}");
        }
    }

    #[test]
    fn direct_kind_is_rejected() {
        let d = directed_path(2).unwrap();
        let id = VertexMap::identity(2);
        assert!(matches!(
            product_hom_compose(ProductKind::Direct, &d, &d, &id, &d, &d, &id),
            Err(Error::DirectComposition)
        ));
    }

    #[test]
    fn projections_verify() {
        let d = directed_path(3).unwrap();
        let e = dc3();
        let left = projection_hom(Side::Left, &d, &e);
        let right = projection_hom(Side::Right, &d, &e);
        let product = product_oriented(ProductKind::Direct, &d, &e);
        assert!(verify_homomorphism(&product, &d, &left));
        assert!(verify_homomorphism(&product, &e, &right));

        // Degenerate right factor: the projection is the constant map.
        let single = OrientedGraph::empty(1);
        let m = projection_hom(Side::Right, &d, &single);
        assert!(m.images().iter().all(|&x| x == 0));
    }
}
