//! Universal target for Cartesian products: order
//! `k * |T| * |U|` where `k` is the chromatic number of the colored factor
//! and `T`, `U` receive every orientation of the two factors.
//!
//! The colored factor is the right one; callers order the factors so the
//! right factor has the smaller chromatic number.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};
use crate::homomorphism::{find_homomorphism, verify_homomorphism, VertexMap};
use crate::products::{product_undirected, ProductKind, ProductVertex};
use crate::solver::find_proper_coloring;

use super::{left_layer_of, right_layer_of, Label, StructuredTarget};

fn pack(ell: usize, a: usize, b: usize, nt: usize, nu: usize) -> usize {
    ((ell - 1) * nt + a) * nu + b
}

/// Vertices `[l, a, b]` with `1 <= l <= k`, `a` in `V(T)`, `b` in `V(U)`.
/// Arc iff `l = l'` and `(a, a')` is an arc of `T`, or `l != l'` and
/// `(b, b')` is an arc of `U`.
pub fn cartesian_upper_target(
    k: usize,
    t: &OrientedGraph,
    u: &OrientedGraph,
    caps: &Caps,
) -> Result<StructuredTarget> {
    if k == 0 {
        return Err(Error::SizeTooSmall {
            what: "color count",
            min: 1,
            got: 0,
        });
    }
    let (nt, nu) = (t.order(), u.order());
    let order = k
        .checked_mul(nt)
        .and_then(|x| x.checked_mul(nu))
        .ok_or(Error::CapExceeded {
            what: "construction order",
            cap: caps.construction_order,
            actual: usize::MAX,
        })?;
    if order > caps.construction_order {
        return Err(Error::CapExceeded {
            what: "construction order",
            cap: caps.construction_order,
            actual: order,
        });
    }
    let tm = t.matrix();
    let um = u.matrix();
    let mut labels = Vec::with_capacity(order);
    for ell in 1..=k {
        for a in 0..nt {
            for b in 0..nu {
                labels.push(Label::Tuple(vec![ell as u32, a as u32, b as u32]));
            }
        }
    }
    let mut arcs = Vec::new();
    for (p, lp) in labels.iter().enumerate() {
        let (ell, a, b) = match lp {
            Label::Tuple(v) => (v[0] as usize, v[1] as usize, v[2] as usize),
            _ => unreachable!(),
        };
        for (q, lq) in labels.iter().enumerate() {
            if p == q {
                continue;
            }
            let (ell2, a2, b2) = match lq {
                Label::Tuple(v) => (v[0] as usize, v[1] as usize, v[2] as usize),
                _ => unreachable!(),
            };
            let arc = if ell == ell2 {
                tm.has(a, a2)
            } else {
                um.has(b, b2)
            };
            if arc {
                arcs.push((p, q));
            }
        }
    }
    StructuredTarget::new(OrientedGraph::new(order, arcs)?, labels)
}

/// Proper coloring of the right factor plus one homomorphism per layer:
/// `g_layer[v]` maps the left layer at `v` into `T`, `h_layer[u]` maps the
/// right layer at `u` into `U`.
#[derive(Clone, Debug)]
pub struct CartesianFactors {
    pub k: usize,
    pub lambda: VertexMap,
    pub g_layer: Vec<VertexMap>,
    pub h_layer: Vec<VertexMap>,
}

impl CartesianFactors {
    /// Derives factor data from the exact solvers: `lambda` is a minimum
    /// proper coloring of `h`, layer maps come from homomorphism search
    /// against `t` and `u`.
    pub fn derive(
        g: &UndirectedGraph,
        h: &UndirectedGraph,
        d: &OrientedGraph,
        t: &OrientedGraph,
        u: &OrientedGraph,
        caps: &Caps,
    ) -> Result<Self> {
        if d.underlying() != product_undirected(ProductKind::Cartesian, g, h) {
            return Err(Error::NotOrientationOf {
                expected: "the Cartesian product of the factors",
            });
        }
        let k = crate::solver::chromatic_number(h, caps)?;
        let lambda = find_proper_coloring(h, k).expect("chromatic number is feasible");
        let (ng, nh) = (g.order(), h.order());
        let mut g_layer = Vec::with_capacity(nh);
        for v in 0..nh {
            let layer = left_layer_of(d, ng, nh, v);
            g_layer.push(find_homomorphism(&layer, t).ok_or(Error::NotHomomorphism {
                what: "a left layer into T",
            })?);
        }
        let mut h_layer = Vec::with_capacity(ng);
        for uu in 0..ng {
            let layer = right_layer_of(d, ng, nh, uu);
            h_layer.push(find_homomorphism(&layer, u).ok_or(Error::NotHomomorphism {
                what: "a right layer into U",
            })?);
        }
        Ok(CartesianFactors {
            k,
            lambda,
            g_layer,
            h_layer,
        })
    }

    fn validate(
        &self,
        g: &UndirectedGraph,
        h: &UndirectedGraph,
        d: &OrientedGraph,
        t: &OrientedGraph,
        u: &OrientedGraph,
    ) -> Result<()> {
        if self.lambda.len() != h.order() {
            return Err(Error::MapSizeMismatch {
                expected: h.order(),
                got: self.lambda.len(),
            });
        }
        for (a, b) in h.edges() {
            if self.lambda.get(a) == self.lambda.get(b) {
                return Err(Error::NotProperColoring {
                    what: "lambda",
                    graph: "the right factor",
                });
            }
        }
        if self.lambda.images().iter().any(|&c| c >= self.k) {
            return Err(Error::ImageOutOfRange {
                image: *self.lambda.images().iter().max().unwrap(),
                order: self.k,
            });
        }
        let (ng, nh) = (g.order(), h.order());
        if self.g_layer.len() != nh || self.h_layer.len() != ng {
            return Err(Error::MapSizeMismatch {
                expected: nh + ng,
                got: self.g_layer.len() + self.h_layer.len(),
            });
        }
        for v in 0..nh {
            if !verify_homomorphism(&left_layer_of(d, ng, nh, v), t, &self.g_layer[v]) {
                return Err(Error::NotHomomorphism {
                    what: "a left layer map",
                });
            }
        }
        for uu in 0..ng {
            if !verify_homomorphism(&right_layer_of(d, ng, nh, uu), u, &self.h_layer[uu]) {
                return Err(Error::NotHomomorphism {
                    what: "a right layer map",
                });
            }
        }
        Ok(())
    }
}

/// Maps an orientation `d` of the Cartesian product of `g` and `h` into
/// `cartesian_upper_target(k, t, u)`:
/// `[u, v] -> [lambda(v) + 1, g_layer[v](u), h_layer[u](v)]`.
#[allow(clippy::too_many_arguments)]
pub fn cartesian_upper_hom(
    d: &OrientedGraph,
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    t: &OrientedGraph,
    u: &OrientedGraph,
    factors: &CartesianFactors,
) -> Result<VertexMap> {
    factors.validate(g, h, d, t, u)?;
    let (nt, nu) = (t.order(), u.order());
    let nh = h.order();
    let mut images = Vec::with_capacity(d.order());
    for flat in 0..d.order() {
        let pv = ProductVertex::from_flat(flat, nh);
        let ell = factors.lambda.get(pv.right) + 1;
        let a = factors.g_layer[pv.right].get(pv.left);
        let b = factors.h_layer[pv.left].get(pv.right);
        images.push(pack(ell, a, b, nt, nu));
    }
    VertexMap::new(images, factors.k * nt * nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{orientation_at, path, EdgeOrder};
    use crate::products::product_oriented;

    fn dc3() -> OrientedGraph {
        OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn order_for_path_factors() {
        let caps = Caps::default();
        let w = cartesian_upper_target(2, &dc3(), &dc3(), &caps).unwrap();
        assert_eq!(w.order(), 18);
        // With a tree factor the order is 6 |T|.
        let w = cartesian_upper_target(2, &dc3(), &dc3(), &caps).unwrap();
        assert_eq!(w.order(), 6 * 3);
    }

    #[test]
    fn sampled_orientations_verify() {
        let caps = Caps::default();
        let g = path(3).unwrap();
        let h = path(3).unwrap();
        let product = product_undirected(ProductKind::Cartesian, &g, &h);
        let order = EdgeOrder::lexicographic(&product);
        let w = cartesian_upper_target(2, &dc3(), &dc3(), &caps).unwrap();
        for idx in [0u64, 1, 77, 1023, 4095] {
            let d = orientation_at(&product, &order, idx);
            let factors = CartesianFactors::derive(&g, &h, &d, &dc3(), &dc3(), &caps).unwrap();
            let m = cartesian_upper_hom(&d, &g, &h, &dc3(), &dc3(), &factors).unwrap();
            assert!(verify_homomorphism(&d, &w.graph, &m), "index {idx}");
        }
        let _ = product_oriented(ProductKind::Cartesian, &dc3(), &dc3());
    }

    #[test]
    fn factors_from_another_orientation_are_rejected() {
        let caps = Caps::default();
        let g = path(3).unwrap();
        let h = path(3).unwrap();
        let product = product_undirected(ProductKind::Cartesian, &g, &h);
        let order = EdgeOrder::lexicographic(&product);
        let d0 = orientation_at(&product, &order, 0);
        let d1 = orientation_at(&product, &order, 4095);
        let factors = CartesianFactors::derive(&g, &h, &d0, &dc3(), &dc3(), &caps).unwrap();
        assert!(cartesian_upper_hom(&d1, &g, &h, &dc3(), &dc3(), &factors).is_err());
    }
}
