//! Universal target for strong products: order `(2^k - 1) * l * m * n` with
//! `l` coloring the left factor, `k` coloring the square of the right factor
//! and `T`, `U` universal targets of orders `m`, `n` for the two factors.
//!
//! The direction-record coordinates store, per lower color class, whether
//! the unique incident cross arc into that class comes in (1) or goes out
//! (0). When an orientation has oppositely-directed cross arcs meeting the
//! same vertex and class, no record satisfies both and the map builder
//! reports the ambiguity as an error.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{square, OrientedGraph, UndirectedGraph};
use crate::homomorphism::{find_homomorphism, verify_homomorphism, VertexMap};
use crate::products::{product_undirected, ProductKind, ProductVertex};
use crate::solver::find_proper_coloring;

use super::{left_layer_of, right_layer_of, Label, StructuredTarget};

struct StrongShape {
    ell: usize,
    m: usize,
    n: usize,
}

impl StrongShape {
    /// Vertices are grouped by the number of binary coordinates, so the
    /// packing offsets each `beta` block by the size of all earlier blocks.
    fn pack(&self, alpha: usize, beta: usize, mu: usize, lambda: usize, bits: usize) -> usize {
        let earlier = self.ell * self.m * self.n * ((1usize << (beta - 1)) - 1);
        earlier + (((alpha - 1) * self.m + mu) * self.n + lambda) * (1 << (beta - 1)) + bits
    }
}

/// Builds the strong-product target: vertices
/// `[alpha, beta, mu, lambda, c_1..c_{beta-1}]` with `1 <= alpha <= l`,
/// `1 <= beta <= k`, `mu` in `V(T)`, `lambda` in `V(U)` and binary `c_i`.
/// Arc iff one of:
/// `alpha = alpha'` and `(lambda, lambda')` in `U`;
/// `alpha != alpha'`, `beta = beta'` and `(mu, mu')` in `T`;
/// `alpha != alpha'`, `beta < beta'` and `c'_beta = 1`;
/// `alpha != alpha'`, `beta > beta'` and `c_{beta'} = 0`.
pub fn strong_upper_target(
    k: usize,
    ell: usize,
    t: &OrientedGraph,
    u: &OrientedGraph,
    caps: &Caps,
) -> Result<StructuredTarget> {
    if k == 0 || ell == 0 || t.order() == 0 || u.order() == 0 {
        return Err(Error::SizeTooSmall {
            what: "strong target parameter",
            min: 1,
            got: 0,
        });
    }
    let (m, n) = (t.order(), u.order());
    let order = ell
        .checked_mul(m)
        .and_then(|x| x.checked_mul(n))
        .and_then(|x| x.checked_mul((1usize << k) - 1))
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
    let shape = StrongShape { ell, m, n };

    let mut labels: Vec<Label> = Vec::with_capacity(order);
    let mut tuples: Vec<(usize, usize, usize, usize, usize)> = Vec::with_capacity(order);
    for beta in 1..=k {
        for alpha in 1..=ell {
            for mu in 0..m {
                for lambda in 0..n {
                    for bits in 0..1usize << (beta - 1) {
                        let mut tuple = vec![alpha as u32, beta as u32, mu as u32, lambda as u32];
                        for i in 0..beta - 1 {
                            tuple.push((bits >> i & 1) as u32);
                        }
                        labels.push(Label::Tuple(tuple));
                        tuples.push((alpha, beta, mu, lambda, bits));
                    }
                }
            }
        }
    }
    debug_assert_eq!(tuples.len(), order);
    debug_assert!(tuples
        .iter()
        .enumerate()
        .all(|(i, &(a, b, mu, la, bits))| shape.pack(a, b, mu, la, bits) == i));

    let tm = t.matrix();
    let um = u.matrix();
    let mut arcs = Vec::new();
    for (p, &(a1, b1, mu1, la1, c1)) in tuples.iter().enumerate() {
        for (q, &(a2, b2, mu2, la2, c2)) in tuples.iter().enumerate() {
            if p == q {
                continue;
            }
            let arc = if a1 == a2 {
                um.has(la1, la2)
            } else if b1 == b2 {
                tm.has(mu1, mu2)
            } else if b1 < b2 {
                c2 >> (b1 - 1) & 1 == 1
            } else {
                c1 >> (b2 - 1) & 1 == 0
            };
            if arc {
                arcs.push((p, q));
            }
        }
    }
    StructuredTarget::new(OrientedGraph::new(order, arcs)?, labels)
}

/// Factor data for the strong-product homomorphism: a proper `l`-coloring of
/// the left factor, a proper `k`-coloring of the square of the right factor,
/// and one homomorphism per layer (`g_layer[v]` into `T`, `h_layer[u]` into
/// `U`).
#[derive(Clone, Debug)]
pub struct StrongFactors {
    pub k: usize,
    pub ell: usize,
    pub gamma: VertexMap,
    pub hsq: VertexMap,
    pub g_layer: Vec<VertexMap>,
    pub h_layer: Vec<VertexMap>,
}

impl StrongFactors {
    pub fn derive(
        g: &UndirectedGraph,
        h: &UndirectedGraph,
        d: &OrientedGraph,
        t: &OrientedGraph,
        u: &OrientedGraph,
        caps: &Caps,
    ) -> Result<Self> {
        if d.underlying() != product_undirected(ProductKind::Strong, g, h) {
            return Err(Error::NotOrientationOf {
                expected: "the strong product of the factors",
            });
        }
        let ell = crate::solver::chromatic_number(g, caps)?;
        let gamma = find_proper_coloring(g, ell).expect("chromatic number is feasible");
        let hsq_graph = square(h);
        let k = crate::solver::chromatic_number(&hsq_graph, caps)?;
        let hsq = find_proper_coloring(&hsq_graph, k).expect("chromatic number is feasible");
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
        Ok(StrongFactors {
            k,
            ell,
            gamma,
            hsq,
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
        for (a, b) in g.edges() {
            if self.gamma.get(a) == self.gamma.get(b) {
                return Err(Error::NotProperColoring {
                    what: "gamma",
                    graph: "the left factor",
                });
            }
        }
        for (a, b) in square(h).edges() {
            if self.hsq.get(a) == self.hsq.get(b) {
                return Err(Error::NotProperColoring {
                    what: "the right square coloring",
                    graph: "the square of the right factor",
                });
            }
        }
        if self.gamma.len() != g.order() || self.hsq.len() != h.order() {
            return Err(Error::MapSizeMismatch {
                expected: g.order() + h.order(),
                got: self.gamma.len() + self.hsq.len(),
            });
        }
        if self.gamma.images().iter().any(|&c| c >= self.ell)
            || self.hsq.images().iter().any(|&c| c >= self.k)
        {
            return Err(Error::NotProperColoring {
                what: "a coloring with out-of-range colors",
                graph: "a factor",
            });
        }
        let (ng, nh) = (g.order(), h.order());
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

/// Maps an orientation of the strong product of `g` and `h` into
/// `strong_upper_target(k, l, t, u)`.
///
/// The binary coordinate of `[u, v]` for a class `i` below the class of `v`
/// records the direction of the incident cross arcs whose other endpoint has
/// class `i`: 1 for incoming, 0 for outgoing, 0 when no such arc exists.
/// If both directions occur, the record is ambiguous and an error is
/// returned.
#[allow(clippy::too_many_arguments)]
pub fn strong_upper_hom(
    d: &OrientedGraph,
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    t: &OrientedGraph,
    u: &OrientedGraph,
    factors: &StrongFactors,
) -> Result<VertexMap> {
    factors.validate(g, h, d, t, u)?;
    let shape = StrongShape {
        ell: factors.ell,
        m: t.order(),
        n: u.order(),
    };
    let nh = h.order();
    let order = factors.ell * t.order() * u.order() * ((1usize << factors.k) - 1);

    let mut images = Vec::with_capacity(d.order());
    for flat in 0..d.order() {
        let pv = ProductVertex::from_flat(flat, nh);
        let (uu, vv) = (pv.left, pv.right);
        let alpha = factors.gamma.get(uu) + 1;
        let beta = factors.hsq.get(vv) + 1;
        let mu = factors.g_layer[vv].get(uu);
        let lambda = factors.h_layer[uu].get(vv);

        let mut record: Vec<Option<bool>> = vec![None; beta - 1];
        let mut set = |idx: usize, value: bool| -> Result<()> {
            match record[idx] {
                Some(old) if old != value => Err(Error::AmbiguousArcRecord {
                    vertex: flat,
                    color: idx + 1,
                }),
                _ => {
                    record[idx] = Some(value);
                    Ok(())
                }
            }
        };
        for other in d.in_neighbors(flat) {
            let ov = ProductVertex::from_flat(other, nh);
            if ov.left != uu {
                let oc = factors.hsq.get(ov.right) + 1;
                if oc < beta {
                    set(oc - 1, true)?;
                }
            }
        }
        for other in d.out_neighbors(flat) {
            let ov = ProductVertex::from_flat(other, nh);
            if ov.left != uu {
                let oc = factors.hsq.get(ov.right) + 1;
                if oc < beta {
                    set(oc - 1, false)?;
                }
            }
        }
        let mut bits = 0usize;
        for (i, slot) in record.iter().enumerate() {
            if slot == &Some(true) {
                bits |= 1 << i;
            }
        }
        images.push(shape.pack(alpha, beta, mu, lambda, bits));
    }
    VertexMap::new(images, order)
}
