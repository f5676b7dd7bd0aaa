//! Universal target for direct products, driven by proper colorings of the
//! two factor squares.
//!
//! Vertices carry a color pair `(alpha, beta)` plus one bit per pair of a
//! lower left color and a right color; the bit for the pair of an adjacent
//! vertex records whether the connecting arc ascends in the right coloring.
//! Because both colorings are proper on squares, the adjacent vertex with a
//! given color pair is unique and the records never clash.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{square, OrientedGraph, UndirectedGraph};
use crate::homomorphism::VertexMap;
use crate::products::{product_undirected, ProductKind, ProductVertex};
use crate::solver::find_proper_coloring;

use super::{Label, StructuredTarget};

struct DirectShape {
    ell: usize,
}

impl DirectShape {
    fn block(&self, alpha: usize) -> usize {
        1usize << ((alpha - 1) * (self.ell - 1))
    }

    fn offset(&self, alpha: usize) -> usize {
        (1..alpha).map(|a| self.ell * self.block(a)).sum()
    }

    /// Free-bit position of matrix cell `(row, col)` (0-based) when column
    /// `zero_col` is pinned to 0.
    fn free_index(&self, row: usize, col: usize, zero_col: usize) -> usize {
        debug_assert_ne!(col, zero_col);
        row * (self.ell - 1) + if col < zero_col { col } else { col - 1 }
    }

    fn pack(&self, alpha: usize, beta: usize, bits: usize) -> usize {
        self.offset(alpha) + (beta - 1) * self.block(alpha) + bits
    }
}

/// Total vertex count of the direct-product target for square colorings with
/// `k` and `l` colors: `l * (1 + 2^(l-1) + .. + 2^((k-1)(l-1)))`.
pub fn direct_upper_order(k: usize, ell: usize) -> Option<usize> {
    let shape = DirectShape { ell };
    let mut total = 0usize;
    for alpha in 1..=k {
        total = total.checked_add(ell.checked_mul(shape.block(alpha))?)?;
    }
    Some(total)
}

/// Builds the direct-product target: vertices
/// `[alpha, beta, c_{1,1}, .., c_{alpha-1,l}]` with `1 <= alpha <= k`,
/// `1 <= beta <= l`, binary `c_{i,j}` and column `beta` pinned to 0.
/// For vertices `P`, `Q` with `alpha_P < alpha_Q`, the arc between them (if
/// any) is decided by `Q`'s bit at `(alpha_P, beta_P)`: bit 1 admits the
/// arc that ascends in `beta`, bit 0 the descending one; equal `alpha` or
/// equal `beta` admits no arc.
pub fn direct_upper_target(k: usize, ell: usize, caps: &Caps) -> Result<StructuredTarget> {
    if k == 0 || ell == 0 {
        return Err(Error::SizeTooSmall {
            what: "direct target parameter",
            min: 1,
            got: 0,
        });
    }
    let order = direct_upper_order(k, ell).ok_or(Error::CapExceeded {
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
    let shape = DirectShape { ell };

    // Tuples hold the full (alpha-1) x l bit matrix, zero column included.
    let mut labels: Vec<Label> = Vec::with_capacity(order);
    let mut tuples: Vec<(usize, usize, Vec<u8>)> = Vec::with_capacity(order);
    for alpha in 1..=k {
        for beta in 1..=ell {
            for bits in 0..shape.block(alpha) {
                let mut matrix = vec![0u8; (alpha - 1) * ell];
                for row in 0..alpha - 1 {
                    for col in 0..ell {
                        if col == beta - 1 {
                            continue;
                        }
                        let idx = shape.free_index(row, col, beta - 1);
                        matrix[row * ell + col] = (bits >> idx & 1) as u8;
                    }
                }
                let mut tuple = vec![alpha as u32, beta as u32];
                tuple.extend(matrix.iter().map(|&b| b as u32));
                labels.push(Label::Tuple(tuple));
                tuples.push((alpha, beta, matrix));
            }
        }
    }
    debug_assert_eq!(tuples.len(), order);

    let cell = |matrix: &[u8], row: usize, col: usize| matrix[row * ell + col];
    let mut arcs = Vec::new();
    for (p, (a1, b1, m1)) in tuples.iter().enumerate() {
        for (q, (a2, b2, m2)) in tuples.iter().enumerate() {
            if p == q || a1 == a2 || b1 == b2 {
                continue;
            }
            let arc = if a1 < a2 {
                // The higher-alpha endpoint records the lower's color pair.
                let bit = cell(m2, a1 - 1, b1 - 1);
                if b1 < b2 {
                    bit == 1
                } else {
                    bit == 0
                }
            } else {
                let bit = cell(m1, a2 - 1, b2 - 1);
                if b1 < b2 {
                    bit == 1
                } else {
                    bit == 0
                }
            };
            if arc {
                arcs.push((p, q));
            }
        }
    }
    StructuredTarget::new(OrientedGraph::new(order, arcs)?, labels)
}

/// Factor data for the direct-product homomorphism: proper colorings of the
/// squares of both factors.
#[derive(Clone, Debug)]
pub struct DirectFactors {
    pub k: usize,
    pub ell: usize,
    pub a: VertexMap,
    pub b: VertexMap,
}

impl DirectFactors {
    pub fn derive(
        g: &UndirectedGraph,
        h: &UndirectedGraph,
        d: &OrientedGraph,
        caps: &Caps,
    ) -> Result<Self> {
        if d.underlying() != product_undirected(ProductKind::Direct, g, h) {
            return Err(Error::NotOrientationOf {
                expected: "the direct product of the factors",
            });
        }
        let gsq = square(g);
        let k = crate::solver::chromatic_number(&gsq, caps)?;
        let a = find_proper_coloring(&gsq, k).expect("chromatic number is feasible");
        let hsq = square(h);
        let ell = crate::solver::chromatic_number(&hsq, caps)?;
        let b = find_proper_coloring(&hsq, ell).expect("chromatic number is feasible");
        Ok(DirectFactors { k, ell, a, b })
    }

    fn validate(&self, g: &UndirectedGraph, h: &UndirectedGraph) -> Result<()> {
        if self.a.len() != g.order() || self.b.len() != h.order() {
            return Err(Error::MapSizeMismatch {
                expected: g.order() + h.order(),
                got: self.a.len() + self.b.len(),
            });
        }
        for (x, y) in square(g).edges() {
            if self.a.get(x) == self.a.get(y) {
                return Err(Error::NotProperColoring {
                    what: "the left square coloring",
                    graph: "the square of the left factor",
                });
            }
        }
        for (x, y) in square(h).edges() {
            if self.b.get(x) == self.b.get(y) {
                return Err(Error::NotProperColoring {
                    what: "the right square coloring",
                    graph: "the square of the right factor",
                });
            }
        }
        if self.a.images().iter().any(|&c| c >= self.k)
            || self.b.images().iter().any(|&c| c >= self.ell)
        {
            return Err(Error::NotProperColoring {
                what: "a coloring with out-of-range colors",
                graph: "a factor square",
            });
        }
        Ok(())
    }
}

/// Maps an orientation of the direct product of `g` and `h` into
/// `direct_upper_target(k, l)`. The bit of `[u, v]` at the color pair of an
/// adjacent `[w, x]` with a lower left color is 1 iff the connecting arc
/// ascends in the right coloring. Properness on the squares makes that
/// neighbor unique; a repeated pair is reported as an error.
pub fn direct_upper_hom(
    d: &OrientedGraph,
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    factors: &DirectFactors,
) -> Result<VertexMap> {
    factors.validate(g, h)?;
    let shape = DirectShape { ell: factors.ell };
    let order = direct_upper_order(factors.k, factors.ell).ok_or(Error::CapExceeded {
        what: "construction order",
        cap: usize::MAX,
        actual: usize::MAX,
    })?;
    let nh = h.order();

    let mut images = Vec::with_capacity(d.order());
    for flat in 0..d.order() {
        let pv = ProductVertex::from_flat(flat, nh);
        let alpha = factors.a.get(pv.left) + 1;
        let beta = factors.b.get(pv.right) + 1;

        let mut record: Vec<Option<bool>> = vec![None; (alpha - 1) * (factors.ell - 1)];
        if factors.ell > 1 {
            let mut set = |row: usize, col: usize, value: bool| -> Result<()> {
                let idx = shape.free_index(row, col, beta - 1);
                match record[idx] {
                    Some(old) if old != value => Err(Error::NonUniqueNeighbor {
                        vertex: flat,
                        color: row + 1,
                        count: 2,
                    }),
                    _ => {
                        record[idx] = Some(value);
                        Ok(())
                    }
                }
            };
            for other in d.out_neighbors(flat) {
                let ov = ProductVertex::from_flat(other, nh);
                let oa = factors.a.get(ov.left) + 1;
                let ob = factors.b.get(ov.right) + 1;
                if oa < alpha {
                    set(oa - 1, ob - 1, ob > beta)?;
                }
            }
            for other in d.in_neighbors(flat) {
                let ov = ProductVertex::from_flat(other, nh);
                let oa = factors.a.get(ov.left) + 1;
                let ob = factors.b.get(ov.right) + 1;
                if oa < alpha {
                    set(oa - 1, ob - 1, ob < beta)?;
                }
            }
        }
        let mut bits = 0usize;
        for (i, slot) in record.iter().enumerate() {
            if slot == &Some(true) {
                bits |= 1 << i;
            }
        }
        images.push(shape.pack(alpha, beta, bits));
    }
    VertexMap::new(images, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{orientation_at, path, EdgeOrder};
    use crate::homomorphism::verify_homomorphism;

    #[test]
    fn orders() {
        // The declared vertex set carries the beta coordinate, so each
        // geometric block is repeated l times.
        assert_eq!(direct_upper_order(3, 3), Some(3 * 21));
        assert_eq!(direct_upper_order(2, 2), Some(2 * 3));
        let caps = Caps::default();
        assert_eq!(direct_upper_target(3, 3, &caps).unwrap().order(), 63);
    }

    #[test]
    fn all_orientations_of_p3_x_p3_verify() {
        let caps = Caps::default();
        let g = path(3).unwrap();
        let h = path(3).unwrap();
        let product = product_undirected(ProductKind::Direct, &g, &h);
        let order = EdgeOrder::lexicographic(&product);
        let w = direct_upper_target(3, 3, &caps).unwrap();
        for idx in 0..1u64 << product.edge_count() {
            let d = orientation_at(&product, &order, idx);
            let factors = DirectFactors::derive(&g, &h, &d, &caps).unwrap();
            let m = direct_upper_hom(&d, &g, &h, &factors).unwrap();
            assert!(verify_homomorphism(&d, &w.graph, &m), "index {idx}");
        }
    }
}
