//! Core graph types: simple undirected graphs, oriented graphs (antisymmetric
//! loop-free digraphs), the standard families, orientation enumeration,
//! squares, oriented-clique tests and the line digraph.
//!
//! Vertices are dense integers `0..n`. Edges are stored as sorted `(min, max)`
//! pairs, arcs as ordered pairs. All values are immutable after construction
//! and safe to share across threads.

use std::collections::BTreeSet;

use crate::caps::Caps;
use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UndirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl UndirectedGraph {
    /// Builds a graph, normalizing every edge to `(min, max)`.
    /// Rejects loops and endpoints outside `0..n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge { v: u });
            }
            let w = u.max(v);
            if w >= n {
                return Err(Error::VertexOutOfRange { v: w, order: n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(UndirectedGraph { n, edges: set })
    }

    /// Edgeless graph on `n` vertices. The empty graph (`n = 0`) is legal.
    pub fn empty(n: usize) -> Self {
        UndirectedGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Edges in sorted `(min, max)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| self.has_edge(u, w)).collect()
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&w| self.has_edge(u, w)).count()
    }

    /// True when both graphs share the vertex set and `self`'s edges are a
    /// subset of `other`'s.
    pub fn is_subgraph_of(&self, other: &UndirectedGraph) -> bool {
        self.n == other.n && self.edges.is_subset(&other.edges)
    }

    /// Induced subgraph on `verts`, relabeled to `0..verts.len()` in the given
    /// order. The listed vertices must be distinct and in range.
    pub fn induced(&self, verts: &[usize]) -> Result<UndirectedGraph> {
        check_vertex_list(verts, self.n)?;
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        UndirectedGraph::new(verts.len(), edges)
    }
}

/// Oriented graph: a loop-free antisymmetric digraph on vertices `0..n`.
/// At most one of `(u,v)` and `(v,u)` is ever present.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl OrientedGraph {
    /// Builds an oriented graph, rejecting loops, out-of-range endpoints and
    /// opposite arc pairs.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(Error::LoopEdge { v: u });
            }
            let w = u.max(v);
            if w >= n {
                return Err(Error::VertexOutOfRange { v: w, order: n });
            }
            if set.contains(&(v, u)) {
                return Err(Error::OppositeArcs { u: v, v: u });
            }
            set.insert((u, v));
        }
        Ok(OrientedGraph { n, arcs: set })
    }

    pub fn empty(n: usize) -> Self {
        OrientedGraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| self.has_arc(u, w)).collect()
    }

    pub fn in_neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| self.has_arc(w, u)).collect()
    }

    /// Number of adjacent vertices (in- plus out-neighbors; the two sets are
    /// disjoint by antisymmetry).
    pub fn degree(&self, u: usize) -> usize {
        (0..self.n)
            .filter(|&w| self.has_arc(u, w) || self.has_arc(w, u))
            .count()
    }

    /// The undirected graph obtained by forgetting arc directions.
    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.n, self.arcs.iter().copied())
            .expect("an oriented graph always has a simple underlying graph")
    }

    /// Induced subdigraph on `verts`, relabeled to `0..verts.len()`.
    pub fn induced(&self, verts: &[usize]) -> Result<OrientedGraph> {
        check_vertex_list(verts, self.n)?;
        let mut arcs = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    arcs.push((i, j));
                }
            }
        }
        OrientedGraph::new(verts.len(), arcs)
    }

    /// Dense arc lookup for inner loops.
    pub(crate) fn matrix(&self) -> ArcMatrix {
        let mut m = ArcMatrix::new(self.n);
        for &(u, v) in &self.arcs {
            m.set(u, v);
        }
        m
    }
}

fn check_vertex_list(verts: &[usize], n: usize) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &v in verts {
        if v >= n {
            return Err(Error::VertexOutOfRange { v, order: n });
        }
        if !seen.insert(v) {
            return Err(Error::LoopEdge { v });
        }
    }
    Ok(())
}

/// Bit-matrix arc lookup; `n*n` bits.
pub(crate) struct ArcMatrix {
    n: usize,
    bits: Vec<u64>,
}

impl ArcMatrix {
    fn new(n: usize) -> Self {
        ArcMatrix {
            n,
            bits: vec![0; (n * n).div_ceil(64)],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        let i = u * self.n + v;
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn has(&self, u: usize, v: usize) -> bool {
        let i = u * self.n + v;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }
}

// ---------------------------------------------------------------------------
// Standard families
// ---------------------------------------------------------------------------

/// Path on `k` vertices, edges `{i, i+1}`.
pub fn path(k: usize) -> Result<UndirectedGraph> {
    if k == 0 {
        return Err(Error::SizeTooSmall {
            what: "path",
            min: 1,
            got: 0,
        });
    }
    UndirectedGraph::new(k, (0..k - 1).map(|i| (i, i + 1)))
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Result<UndirectedGraph> {
    if k < 3 {
        return Err(Error::SizeTooSmall {
            what: "cycle",
            min: 3,
            got: k,
        });
    }
    UndirectedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<UndirectedGraph> {
    if n == 0 {
        return Err(Error::SizeTooSmall {
            what: "complete graph",
            min: 1,
            got: 0,
        });
    }
    UndirectedGraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Complete bipartite graph with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<UndirectedGraph> {
    if m == 0 || n == 0 {
        return Err(Error::SizeTooSmall {
            what: "complete bipartite part",
            min: 1,
            got: m.min(n),
        });
    }
    UndirectedGraph::new(
        m + n,
        (0..m).flat_map(|x| (0..n).map(move |y| (x, m + y))),
    )
}

/// Directed path: arcs `(i, i+1)` on `k` vertices.
pub fn directed_path(k: usize) -> Result<OrientedGraph> {
    if k == 0 {
        return Err(Error::SizeTooSmall {
            what: "directed path",
            min: 1,
            got: 0,
        });
    }
    OrientedGraph::new(k, (0..k - 1).map(|i| (i, i + 1)))
}

/// Circulant tournament on an odd number `n` of vertices: arc `(i, j)` iff
/// `(j - i) mod n` lies in `s`. The set `s` must pick exactly one of `d` and
/// `n - d` for every `d` in `1..n`, which makes the result a tournament.
pub fn circulant_tournament(n: usize, s: &BTreeSet<usize>) -> Result<OrientedGraph> {
    if n == 0 {
        return Err(Error::SizeTooSmall {
            what: "circulant tournament",
            min: 1,
            got: 0,
        });
    }
    if n.is_multiple_of(2) {
        return Err(Error::CirculantEvenOrder { n });
    }
    for &d in s {
        if d == 0 || d >= n {
            return Err(Error::VertexOutOfRange { v: d, order: n });
        }
    }
    for d in 1..n {
        let complement = n - d;
        if s.contains(&d) == s.contains(&complement) {
            return Err(Error::BadResidues { d, complement, n });
        }
    }
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && s.contains(&((j + n - i) % n)) {
                arcs.push((i, j));
            }
        }
    }
    OrientedGraph::new(n, arcs)
}

// ---------------------------------------------------------------------------
// Squares, cliques, line digraph
// ---------------------------------------------------------------------------

/// Square of a graph: same vertices, edge `{u, v}` iff the distance between
/// `u` and `v` in `g` is 1 or 2.
pub fn square(g: &UndirectedGraph) -> UndirectedGraph {
    let n = g.order();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let close = g.has_edge(u, v)
                || (0..n).any(|w| w != u && w != v && g.has_edge(u, w) && g.has_edge(w, v));
            if close {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges).expect("square of a simple graph is simple")
}

/// True iff every pair of vertices is joined by a directed path of length 1
/// or 2. The oriented chromatic number of such a graph equals its order.
pub fn is_oriented_clique(d: &OrientedGraph) -> bool {
    let n = d.order();
    let m = d.matrix();
    for u in 0..n {
        for v in u + 1..n {
            let direct = m.has(u, v) || m.has(v, u);
            let two_step = || {
                (0..n).any(|w| {
                    w != u && w != v && ((m.has(u, w) && m.has(w, v)) || (m.has(v, w) && m.has(w, u)))
                })
            };
            if !direct && !two_step() {
                return false;
            }
        }
    }
    true
}

/// Line digraph: one vertex per arc of `d`; arc from `(u,v)` to `(u',v')`
/// iff `v = u'`. Arc-vertices are numbered in the sorted order of `d.arcs()`.
pub fn line_digraph(d: &OrientedGraph) -> OrientedGraph {
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let mut new_arcs = Vec::new();
    for (i, &(_, head)) in arcs.iter().enumerate() {
        for (j, &(tail, _)) in arcs.iter().enumerate() {
            if head == tail {
                new_arcs.push((i, j));
            }
        }
    }
    OrientedGraph::new(arcs.len(), new_arcs)
        .expect("the line digraph of an oriented graph is oriented")
}

// ---------------------------------------------------------------------------
// Orientation enumeration
// ---------------------------------------------------------------------------

/// A fixed ordering of the edges of a graph, used to index orientations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder {
    edges: Vec<(usize, usize)>,
}

impl EdgeOrder {
    /// Edges sorted by `(min, max)`; the default order everywhere.
    pub fn lexicographic(g: &UndirectedGraph) -> Self {
        EdgeOrder {
            edges: g.edges().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// The orientation of `g` selected by `index`, read as a binary counter over
/// `order`: bit `i` = 0 orients edge `i` from its smaller endpoint to its
/// larger one, bit `i` = 1 the other way. Pure in `(g, order, index)`, so
/// index ranges can be partitioned freely across workers.
pub fn orientation_at(g: &UndirectedGraph, order: &EdgeOrder, index: u64) -> OrientedGraph {
    debug_assert_eq!(order.len(), g.edge_count());
    let arcs = order.edges().iter().enumerate().map(|(i, &(u, v))| {
        if index >> i & 1 == 0 {
            (u, v)
        } else {
            (v, u)
        }
    });
    OrientedGraph::new(g.order(), arcs).expect("an orientation of a simple graph is oriented")
}

/// Iterator over all `2^|E|` orientations of `g` in counter order.
pub struct Orientations<'a> {
    g: &'a UndirectedGraph,
    order: &'a EdgeOrder,
    next: u64,
    total: u64,
}

impl<'a> Iterator for Orientations<'a> {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        if self.next >= self.total {
            return None;
        }
        let d = orientation_at(self.g, self.order, self.next);
        self.next += 1;
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl<'a> ExactSizeIterator for Orientations<'a> {}

/// Streams every orientation of `g`. Rejects graphs with more than
/// `caps.orientation_edges` edges so a sweep cannot silently run for days.
pub fn orientations<'a>(
    g: &'a UndirectedGraph,
    order: &'a EdgeOrder,
    caps: &Caps,
) -> Result<Orientations<'a>> {
    let m = order.len();
    let cap = caps.orientation_edges.min(62);
    if m > cap {
        return Err(Error::CapExceeded {
            what: "orientation sweep edges",
            cap,
            actual: m,
        });
    }
    Ok(Orientations {
        g,
        order,
        next: 0,
        total: 1u64 << m,
    })
}

/// Number of orientations of `g` (2^|E|), subject to the same cap.
pub fn orientation_count(g: &UndirectedGraph, caps: &Caps) -> Result<u64> {
    let m = g.edge_count();
    let cap = caps.orientation_edges.min(62);
    if m > cap {
        return Err(Error::CapExceeded {
            what: "orientation sweep edges",
            cap,
            actual: m,
        });
    }
    Ok(1u64 << m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_family() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let p1 = path(1).unwrap();
        assert_eq!(p1.order(), 1);
        assert_eq!(p1.edge_count(), 0);
        assert_eq!(path(5).unwrap().edge_count(), 4);
        assert!(path(0).is_err());
    }

    #[test]
    fn cycle_complete_bipartite_families() {
        assert_eq!(complete(3).unwrap().edge_count(), 3);
        assert_eq!(complete_bipartite(2, 4).unwrap().edge_count(), 8);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn directed_path_family() {
        let dp3 = directed_path(3).unwrap();
        assert_eq!(dp3.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(directed_path(1).unwrap().arc_count(), 0);
        assert!(directed_path(0).is_err());
        assert!(is_oriented_clique(&dp3));
    }

    #[test]
    fn circulant_tournament_examples() {
        let s: BTreeSet<usize> = [1, 2, 3].into_iter().collect();
        let t7 = circulant_tournament(7, &s).unwrap();
        assert!(t7.has_arc(0, 1));
        assert!(!t7.has_arc(0, 4));
        // (0 - 6) mod 7 = 1, so the wrap-around arc points forward.
        assert!(t7.has_arc(6, 0));
        assert_eq!(t7.arc_count(), 7 * 6 / 2);

        let s1: BTreeSet<usize> = [1].into_iter().collect();
        let c3 = circulant_tournament(3, &s1).unwrap();
        assert_eq!(
            c3.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 0)]
        );

        let bad: BTreeSet<usize> = [1, 6].into_iter().collect();
        assert!(circulant_tournament(7, &bad).is_err());
        assert!(circulant_tournament(4, &s1).is_err());
    }

    #[test]
    fn square_examples() {
        let p4 = path(4).unwrap();
        let sq = square(&p4);
        assert_eq!(sq.edge_count(), 5);
        assert!(sq.has_edge(0, 2) && sq.has_edge(1, 3) && !sq.has_edge(0, 3));
        assert_eq!(square(&complete(4).unwrap()), complete(4).unwrap());
        assert_eq!(square(&path(3).unwrap()), complete(3).unwrap());
        // Monotone under iteration, and always a supergraph.
        assert!(sq.is_subgraph_of(&square(&sq)));
        assert!(p4.is_subgraph_of(&sq));
    }

    #[test]
    fn antisymmetry_enforced() {
        assert!(OrientedGraph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(OrientedGraph::new(2, [(0, 0)]).is_err());
        assert!(OrientedGraph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn orientation_enumeration() {
        let p3 = path(3).unwrap();
        let order = EdgeOrder::lexicographic(&p3);
        let caps = Caps::default();
        let all: Vec<_> = orientations(&p3, &order, &caps).unwrap().collect();
        assert_eq!(all.len(), 4);
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 4);
        for d in &all {
            assert_eq!(d.underlying(), p3);
        }
        // Index 0 keeps every edge pointing from min to max.
        assert_eq!(all[0], directed_path(3).unwrap());

        let p1 = path(1).unwrap();
        let order1 = EdgeOrder::lexicographic(&p1);
        assert_eq!(orientations(&p1, &order1, &caps).unwrap().count(), 1);

        let small = Caps {
            orientation_edges: 1,
            ..Caps::default()
        };
        assert!(orientations(&p3, &order, &small).is_err());
    }

    #[test]
    fn oriented_clique_examples() {
        let s: BTreeSet<usize> = [1, 2, 3].into_iter().collect();
        assert!(is_oriented_clique(&circulant_tournament(7, &s).unwrap()));
        assert!(!is_oriented_clique(&OrientedGraph::empty(2)));
        assert!(is_oriented_clique(&OrientedGraph::empty(1)));
        assert!(is_oriented_clique(&OrientedGraph::empty(0)));
    }

    #[test]
    fn line_digraph_examples() {
        let dp3 = directed_path(3).unwrap();
        let ld = line_digraph(&dp3);
        assert_eq!(ld.order(), 2);
        assert_eq!(ld.arc_count(), 1);

        let s1: BTreeSet<usize> = [1].into_iter().collect();
        let c3 = circulant_tournament(3, &s1).unwrap();
        let ldc3 = line_digraph(&c3);
        assert_eq!(ldc3.order(), 3);
        assert_eq!(ldc3.arc_count(), 3);
        // The directed 3-cycle reproduces itself.
        assert!(is_oriented_clique(&ldc3));

        assert_eq!(line_digraph(&OrientedGraph::empty(4)).order(), 0);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5).unwrap();
        let sub = c5.induced(&[0, 1, 2]).unwrap();
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(c5.induced(&[0, 0]).is_err());
        assert!(c5.induced(&[7]).is_err());
    }
}
