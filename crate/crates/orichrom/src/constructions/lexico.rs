//! Universal target for lexicographic products: order
//! `k * l * (n + 2^n)^(k-1)` where `k` colors the square of the left factor,
//! `l` is the order of a universal target `U` for the right factor and `n`
//! is the order of the right factor.

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{square, OrientedGraph, UndirectedGraph};
use crate::homomorphism::{find_homomorphism, verify_homomorphism, VertexMap};
use crate::products::{product_undirected, ProductKind, ProductVertex};
use crate::solver::find_proper_coloring;

use super::{bipartite_hom, bipartite_target, right_layer_of, Label, StructuredTarget};

struct LexicoShape {
    k: usize,
    ell: usize,
    r: usize,
}

impl LexicoShape {
    fn order(&self) -> Option<usize> {
        let free = self.r.checked_pow(self.k as u32 - 1)?;
        self.k.checked_mul(self.ell)?.checked_mul(free)
    }

    /// Packs `[a, b, c_1..c_k]` (with `c_a = 0` fixed) into a flat index:
    /// `a` major, then `b`, then the `k - 1` free coordinates in ascending
    /// position order, each a base-`r` digit.
    fn pack(&self, a: usize, b: usize, cs: &[usize]) -> usize {
        let mut acc = (a - 1) * self.ell + b;
        for (pos, &c) in cs.iter().enumerate() {
            if pos + 1 != a {
                acc = acc * self.r + c;
            }
        }
        acc
    }
}

/// Builds the lexicographic-product target: vertices `[a, b, c_1..c_k]` with
/// `1 <= a <= k`, `b` a vertex of `U`, `c_a = 0`, and every other `c_i` a
/// vertex of the complete-bipartite target of side `n` (order `n + 2^n`).
/// Arc iff `a = a'` and `(b, b')` is an arc of `U`, or `a != a'` and
/// `(c_{a'}, c'_a)` is an arc of that bipartite target.
pub fn lexico_upper_target(
    k: usize,
    u: &OrientedGraph,
    n: usize,
    caps: &Caps,
) -> Result<StructuredTarget> {
    if k == 0 || n == 0 || u.order() == 0 {
        return Err(Error::SizeTooSmall {
            what: "lexicographic target parameter",
            min: 1,
            got: 0,
        });
    }
    if n > caps.subset_width {
        return Err(Error::CapExceeded {
            what: "subset width",
            cap: caps.subset_width,
            actual: n,
        });
    }
    let t = bipartite_target(n, caps)?;
    let shape = LexicoShape {
        k,
        ell: u.order(),
        r: t.order(),
    };
    let order = shape.order().ok_or(Error::CapExceeded {
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

    // Enumerate labels in packed order.
    let mut labels: Vec<Label> = Vec::with_capacity(order);
    let mut tuples: Vec<(usize, usize, Vec<usize>)> = Vec::with_capacity(order);
    let free = shape.r.pow(k as u32 - 1);
    for a in 1..=k {
        for b in 0..shape.ell {
            for mut digits in 0..free {
                let mut cs = vec![0usize; k];
                for pos in (0..k).rev() {
                    if pos + 1 != a {
                        cs[pos] = digits % shape.r;
                        digits /= shape.r;
                    }
                }
                let mut tuple = Vec::with_capacity(k + 2);
                tuple.push(a as u32);
                tuple.push(b as u32);
                tuple.extend(cs.iter().map(|&c| c as u32));
                labels.push(Label::Tuple(tuple));
                tuples.push((a, b, cs));
            }
        }
    }
    debug_assert_eq!(tuples.len(), order);
    debug_assert!(tuples
        .iter()
        .enumerate()
        .all(|(i, (a, b, cs))| shape.pack(*a, *b, cs) == i));

    let um = u.matrix();
    let tm = t.graph.matrix();
    let mut arcs = Vec::new();
    for (p, (a, b, cs)) in tuples.iter().enumerate() {
        for (q, (a2, b2, cs2)) in tuples.iter().enumerate() {
            if p == q {
                continue;
            }
            let arc = if a == a2 {
                um.has(*b, *b2)
            } else {
                tm.has(cs[a2 - 1], cs2[a - 1])
            };
            if arc {
                arcs.push((p, q));
            }
        }
    }
    StructuredTarget::new(OrientedGraph::new(order, arcs)?, labels)
}

/// Factor data for the lexicographic-product homomorphism: a proper
/// `k`-coloring of the square of the left factor, one homomorphism per right
/// layer into `U`, and one map per left-factor edge from the induced
/// between-layer orientation of `K_{n,n}` into the bipartite target.
///
/// Between-layer maps are keyed by the edge `(min, max)`; their domain is the
/// cross orientation labeled with the `min` layer as the `x` side.
#[derive(Clone, Debug)]
pub struct LexicoFactors {
    pub k: usize,
    pub n: usize,
    pub alpha: VertexMap,
    pub layer: Vec<VertexMap>,
    pub cross: BTreeMap<(usize, usize), VertexMap>,
}

/// The orientation of `K_{n,n}` induced between two layers of an orientation
/// of a lexicographic product: `x` side is the `u1` layer, `y` side the `u2`
/// layer.
fn cross_orientation(d: &OrientedGraph, n: usize, u1: usize, u2: usize) -> OrientedGraph {
    let mut arcs = Vec::with_capacity(n * n);
    for xv in 0..n {
        for yv in 0..n {
            let p = u1 * n + xv;
            let q = u2 * n + yv;
            if d.has_arc(p, q) {
                arcs.push((xv, n + yv));
            } else {
                arcs.push((n + yv, xv));
            }
        }
    }
    OrientedGraph::new(2 * n, arcs).expect("cross orientations are antisymmetric")
}

impl LexicoFactors {
    /// Derives factor data from the exact solvers: the square coloring from
    /// the chromatic solver, layer maps by homomorphism search into
    /// `u_target`, and between-layer maps from the in-neighborhood
    /// homomorphism.
    pub fn derive(
        g: &UndirectedGraph,
        h: &UndirectedGraph,
        d: &OrientedGraph,
        u_target: &OrientedGraph,
        caps: &Caps,
    ) -> Result<Self> {
        if d.underlying() != product_undirected(ProductKind::Lexicographic, g, h) {
            return Err(Error::NotOrientationOf {
                expected: "the lexicographic product of the factors",
            });
        }
        let sq = square(g);
        let k = crate::solver::chromatic_number(&sq, caps)?;
        let alpha = find_proper_coloring(&sq, k).expect("chromatic number is feasible");
        let (ng, nh) = (g.order(), h.order());
        let mut layer = Vec::with_capacity(ng);
        for uu in 0..ng {
            let l = right_layer_of(d, ng, nh, uu);
            layer.push(find_homomorphism(&l, u_target).ok_or(Error::NotHomomorphism {
                what: "a right layer into U",
            })?);
        }
        let mut cross = BTreeMap::new();
        for (u1, u2) in g.edges() {
            let k_nn = cross_orientation(d, nh, u1, u2);
            let (_, map) = bipartite_hom(&k_nn, caps)?;
            cross.insert((u1, u2), map);
        }
        Ok(LexicoFactors {
            k,
            n: nh,
            alpha,
            layer,
            cross,
        })
    }

    fn validate(
        &self,
        g: &UndirectedGraph,
        d: &OrientedGraph,
        u_target: &OrientedGraph,
        caps: &Caps,
    ) -> Result<()> {
        let sq = square(g);
        if self.alpha.len() != g.order() {
            return Err(Error::MapSizeMismatch {
                expected: g.order(),
                got: self.alpha.len(),
            });
        }
        for (a, b) in sq.edges() {
            if self.alpha.get(a) == self.alpha.get(b) {
                return Err(Error::NotProperColoring {
                    what: "alpha",
                    graph: "the square of the left factor",
                });
            }
        }
        if self.alpha.images().iter().any(|&c| c >= self.k) {
            return Err(Error::ImageOutOfRange {
                image: *self.alpha.images().iter().max().unwrap(),
                order: self.k,
            });
        }
        let ng = g.order();
        let nh = self.n;
        if self.layer.len() != ng {
            return Err(Error::MapSizeMismatch {
                expected: ng,
                got: self.layer.len(),
            });
        }
        for uu in 0..ng {
            if !verify_homomorphism(&right_layer_of(d, ng, nh, uu), u_target, &self.layer[uu]) {
                return Err(Error::NotHomomorphism {
                    what: "a right layer map",
                });
            }
        }
        let t = bipartite_target(nh, caps)?;
        for (u1, u2) in g.edges() {
            let map = self.cross.get(&(u1, u2)).ok_or(Error::NotHomomorphism {
                what: "a missing between-layer map",
            })?;
            if !verify_homomorphism(&cross_orientation(d, nh, u1, u2), &t.graph, map) {
                return Err(Error::NotHomomorphism {
                    what: "a between-layer map",
                });
            }
        }
        Ok(())
    }
}

/// Maps an orientation of the lexicographic product of `g` and `h` into
/// `lexico_upper_target(k, u_target, n)`. Coordinate `c_{a'}` of `[u, v]` is
/// the between-layer image of `[u, v]` for the unique neighbor of `u`
/// colored `a' - 1`, or 0 when no such neighbor exists.
pub fn lexico_upper_hom(
    d: &OrientedGraph,
    g: &UndirectedGraph,
    u_target: &OrientedGraph,
    factors: &LexicoFactors,
    caps: &Caps,
) -> Result<VertexMap> {
    factors.validate(g, d, u_target, caps)?;
    let shape = LexicoShape {
        k: factors.k,
        ell: u_target.order(),
        r: factors.n + (1 << factors.n),
    };
    let order = shape.order().ok_or(Error::CapExceeded {
        what: "construction order",
        cap: caps.construction_order,
        actual: usize::MAX,
    })?;
    let nh = factors.n;
    let neighbors: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v)).collect();

    let mut images = Vec::with_capacity(d.order());
    for flat in 0..d.order() {
        let pv = ProductVertex::from_flat(flat, nh);
        let uu = pv.left;
        let a = factors.alpha.get(uu) + 1;
        let b = factors.layer[uu].get(pv.right);
        let mut cs = vec![0usize; factors.k];
        for a2 in 1..=factors.k {
            if a2 == a {
                continue;
            }
            let found: Vec<usize> = neighbors[uu]
                .iter()
                .copied()
                .filter(|&w| factors.alpha.get(w) + 1 == a2)
                .collect();
            match found.len() {
                0 => {}
                1 => {
                    let u2 = found[0];
                    let key = (uu.min(u2), uu.max(u2));
                    let map = &factors.cross[&key];
                    let position = if uu < u2 { pv.right } else { nh + pv.right };
                    cs[a2 - 1] = map.get(position);
                }
                count => {
                    return Err(Error::NonUniqueNeighbor {
                        vertex: uu,
                        color: a2,
                        count,
                    })
                }
            }
        }
        images.push(shape.pack(a, b, &cs));
    }
    VertexMap::new(images, order)
}
