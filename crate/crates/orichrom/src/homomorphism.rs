//! Homomorphism search and verification for oriented graphs, and oriented
//! coloring validity and search.
//!
//! All searches are exact, deterministic backtracking tuned for desk-scale
//! inputs: the variable order is most-constrained-first (ties by smallest
//! index) and values are tried in ascending target order.

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// Total map from source vertices to target vertices (or color ids).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    images: Vec<usize>,
}

impl VertexMap {
    /// Builds a map and checks that every image lies below `target_order`.
    pub fn new(images: Vec<usize>, target_order: usize) -> Result<Self> {
        for &im in &images {
            if im >= target_order {
                return Err(Error::ImageOutOfRange {
                    image: im,
                    order: target_order,
                });
            }
        }
        Ok(VertexMap { images })
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            images: (0..n).collect(),
        }
    }

    pub fn get(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of distinct values used.
    pub fn color_count(&self) -> usize {
        let mut seen: Vec<usize> = self.images.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// `then` after `self`: `v -> then(self(v))`.
    pub fn compose(&self, then: &VertexMap) -> VertexMap {
        VertexMap {
            images: self.images.iter().map(|&v| then.get(v)).collect(),
        }
    }
}

/// True iff `m` is total on `d` and maps every arc of `d` onto an arc of `t`.
pub fn verify_homomorphism(d: &OrientedGraph, t: &OrientedGraph, m: &VertexMap) -> bool {
    if m.len() != d.order() {
        return false;
    }
    if m.images().iter().any(|&im| im >= t.order()) {
        return false;
    }
    let tm = t.matrix();
    d.arcs().all(|(u, v)| tm.has(m.get(u), m.get(v)))
}

/// True iff `c` is a valid oriented coloring of `d`: endpoints of every arc
/// get distinct colors, and all arcs between any two color classes share one
/// direction.
pub fn verify_oriented_coloring(d: &OrientedGraph, c: &VertexMap) -> bool {
    if c.len() != d.order() {
        return false;
    }
    let k = c.images().iter().copied().max().map_or(0, |m| m + 1);
    let mut forward = vec![false; k * k];
    for (u, v) in d.arcs() {
        let (a, b) = (c.get(u), c.get(v));
        if a == b {
            return false;
        }
        forward[a * k + b] = true;
    }
    for a in 0..k {
        for b in a + 1..k {
            if forward[a * k + b] && forward[b * k + a] {
                return false;
            }
        }
    }
    true
}

/// The quotient of `d` by a coloring: one vertex per color in `0..=max(c)`,
/// with the arcs induced by `c`. Construction fails exactly when `c` is not a
/// valid oriented coloring (a loop or an opposite arc pair appears).
pub fn coloring_quotient(d: &OrientedGraph, c: &VertexMap) -> Result<OrientedGraph> {
    if c.len() != d.order() {
        return Err(Error::MapSizeMismatch {
            expected: d.order(),
            got: c.len(),
        });
    }
    let k = c.images().iter().copied().max().map_or(0, |m| m + 1);
    OrientedGraph::new(k, d.arcs().map(|(u, v)| (c.get(u), c.get(v))))
}

/// Exact homomorphism search from `d` to `t`. Returns a verified map, or
/// `None` exactly when no homomorphism exists.
pub fn find_homomorphism(d: &OrientedGraph, t: &OrientedGraph) -> Option<VertexMap> {
    let nd = d.order();
    let nt = t.order();
    if nd == 0 {
        return Some(VertexMap { images: vec![] });
    }
    if nt == 0 {
        return None;
    }

    let words = nt.div_ceil(64);
    let full = full_mask(nt);
    // Candidate images of each target vertex, split by arc direction.
    let mut out_mask = vec![vec![0u64; words]; nt];
    let mut in_mask = vec![vec![0u64; words]; nt];
    for (a, b) in t.arcs() {
        out_mask[a][b / 64] |= 1 << (b % 64);
        in_mask[b][a / 64] |= 1 << (a % 64);
    }
    let mut out_adj = vec![Vec::new(); nd];
    let mut in_adj = vec![Vec::new(); nd];
    for (u, v) in d.arcs() {
        out_adj[u].push(v);
        in_adj[v].push(u);
    }

    let mut domains = vec![full.clone(); nd];
    let mut assignment = vec![usize::MAX; nd];
    if search(
        &mut domains,
        &mut assignment,
        &out_adj,
        &in_adj,
        &out_mask,
        &in_mask,
        nd,
        0,
    ) {
        Some(VertexMap {
            images: assignment,
        })
    } else {
        None
    }
}

fn full_mask(n: usize) -> Vec<u64> {
    let words = n.div_ceil(64);
    let mut mask = vec![u64::MAX; words];
    let rem = n % 64;
    if rem != 0 {
        mask[words - 1] = (1u64 << rem) - 1;
    }
    if n == 0 {
        mask.clear();
    }
    mask
}

fn popcount(mask: &[u64]) -> u32 {
    mask.iter().map(|w| w.count_ones()).sum()
}

fn intersect_into(dst: &mut [u64], src: &[u64]) -> bool {
    let mut any = false;
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
        any |= *d != 0;
    }
    any
}

#[allow(clippy::too_many_arguments)]
fn search(
    domains: &mut Vec<Vec<u64>>,
    assignment: &mut Vec<usize>,
    out_adj: &[Vec<usize>],
    in_adj: &[Vec<usize>],
    out_mask: &[Vec<u64>],
    in_mask: &[Vec<u64>],
    nd: usize,
    depth: usize,
) -> bool {
    if depth == nd {
        return true;
    }
    // Most constrained vertex first, ties by smallest index.
    let mut pick = usize::MAX;
    let mut best = u32::MAX;
    for v in 0..nd {
        if assignment[v] == usize::MAX {
            let size = popcount(&domains[v]);
            if size < best {
                best = size;
                pick = v;
            }
        }
    }
    let v = pick;
    let candidates: Vec<usize> = iter_bits(&domains[v]).collect();
    for a in candidates {
        assignment[v] = a;
        let saved = domains.clone();
        // Lock the domain of v to the chosen image.
        for w in domains[v].iter_mut() {
            *w = 0;
        }
        domains[v][a / 64] = 1 << (a % 64);
        let mut ok = true;
        for &w in &out_adj[v] {
            if assignment[w] == usize::MAX {
                if !intersect_into(&mut domains[w], &out_mask[a]) {
                    ok = false;
                    break;
                }
            } else if out_mask[a][assignment[w] / 64] >> (assignment[w] % 64) & 1 == 0 {
                ok = false;
                break;
            }
        }
        if ok {
            for &w in &in_adj[v] {
                if assignment[w] == usize::MAX {
                    if !intersect_into(&mut domains[w], &in_mask[a]) {
                        ok = false;
                        break;
                    }
                } else if in_mask[a][assignment[w] / 64] >> (assignment[w] % 64) & 1 == 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok
            && search(
                domains, assignment, out_adj, in_adj, out_mask, in_mask, nd, depth + 1,
            )
        {
            return true;
        }
        *domains = saved;
        assignment[v] = usize::MAX;
    }
    false
}

fn iter_bits(mask: &[u64]) -> impl Iterator<Item = usize> + '_ {
    mask.iter().enumerate().flat_map(|(wi, &w)| {
        (0..64).filter_map(move |b| {
            if w >> b & 1 == 1 {
                Some(wi * 64 + b)
            } else {
                None
            }
        })
    })
}

/// Exact search for an oriented coloring of `d` with at most `k` colors.
///
/// The search assigns color classes vertex by vertex while maintaining a
/// direction matrix between classes: an arc from class `a` to class `b`
/// forbids any later arc from `b` to `a`. Color symmetry is broken by only
/// opening one fresh color per step.
pub fn find_oriented_coloring(d: &OrientedGraph, k: usize) -> Option<VertexMap> {
    let n = d.order();
    if n == 0 {
        return Some(VertexMap { images: vec![] });
    }
    if k == 0 {
        return None;
    }

    // Static order: highest degree first, ties by index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.degree(v)), v));

    let mut out_adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); n];
    for (u, v) in d.arcs() {
        out_adj[u].push(v);
        in_adj[v].push(u);
    }

    let mut state = ColoringState {
        colors: vec![usize::MAX; n],
        counts: vec![0u32; k * k],
        k,
        out_adj,
        in_adj,
    };
    if state.solve(&order, 0, 0) {
        let images = state.colors;
        Some(VertexMap { images })
    } else {
        None
    }
}

struct ColoringState {
    colors: Vec<usize>,
    /// counts[a * k + b] = number of arcs currently going from class a to b.
    counts: Vec<u32>,
    k: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl ColoringState {
    fn solve(&mut self, order: &[usize], depth: usize, used: usize) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.assign(v, c) {
                let next_used = used.max(c + 1);
                if self.solve(order, depth + 1, next_used) {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        false
    }

    /// Applies the assignment if consistent; leaves the state untouched
    /// otherwise.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        let k = self.k;
        let mut applied: Vec<(usize, usize)> = Vec::new();
        let mut ok = true;
        for i in 0..self.out_adj[v].len() {
            let w = self.out_adj[v][i];
            let cw = self.colors[w];
            if cw == usize::MAX {
                continue;
            }
            if cw == c || self.counts[cw * k + c] > 0 {
                ok = false;
                break;
            }
            self.counts[c * k + cw] += 1;
            applied.push((c, cw));
        }
        if ok {
            for i in 0..self.in_adj[v].len() {
                let w = self.in_adj[v][i];
                let cw = self.colors[w];
                if cw == usize::MAX {
                    continue;
                }
                if cw == c || self.counts[c * k + cw] > 0 {
                    ok = false;
                    break;
                }
                self.counts[cw * k + c] += 1;
                applied.push((cw, c));
            }
        }
        if ok {
            self.colors[v] = c;
            true
        } else {
            for (a, b) in applied {
                self.counts[a * k + b] -= 1;
            }
            false
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        let k = self.k;
        self.colors[v] = usize::MAX;
        for i in 0..self.out_adj[v].len() {
            let w = self.out_adj[v][i];
            let cw = self.colors[w];
            if cw != usize::MAX {
                self.counts[c * k + cw] -= 1;
            }
        }
        for i in 0..self.in_adj[v].len() {
            let w = self.in_adj[v][i];
            let cw = self.colors[w];
            if cw != usize::MAX {
                self.counts[cw * k + c] -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, directed_path, orientation_at, EdgeOrder, OrientedGraph};

    fn directed_cycle(k: usize) -> OrientedGraph {
        OrientedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    /// Independent validity oracle: the definition, checked pairwise over all
    /// arcs, with no direction matrix.
    fn naive_valid_coloring(d: &OrientedGraph, colors: &[usize]) -> bool {
        for (u, v) in d.arcs() {
            if colors[u] == colors[v] {
                return false;
            }
        }
        let arcs: Vec<_> = d.arcs().collect();
        for &(u, v) in &arcs {
            for &(w, x) in &arcs {
                if colors[v] == colors[w] && colors[u] == colors[x] {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn verify_homomorphism_examples() {
        let c3 = directed_cycle(3);
        let id = VertexMap::identity(3);
        assert!(verify_homomorphism(&c3, &c3, &id));

        let dp7 = directed_path(7).unwrap();
        let m = VertexMap::new((0..7).map(|i| i % 3).collect(), 3).unwrap();
        assert!(verify_homomorphism(&dp7, &c3, &m));

        // Transitive tournament on 3 vertices: no map works (brute force).
        let tt3 = OrientedGraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let mut any = false;
        for code in 0..27 {
            let images = vec![code % 3, code / 3 % 3, code / 9 % 3];
            let m = VertexMap::new(images, 3).unwrap();
            any |= verify_homomorphism(&tt3, &c3, &m);
        }
        assert!(!any);
        assert!(find_homomorphism(&tt3, &c3).is_none());
    }

    #[test]
    fn find_homomorphism_examples() {
        let dp5 = directed_path(5).unwrap();
        let c3 = directed_cycle(3);
        let m = find_homomorphism(&dp5, &c3).expect("residues mod 3 are a witness");
        assert!(verify_homomorphism(&dp5, &c3, &m));
    }

    #[test]
    fn find_agrees_with_exhaustive_enumeration_small() {
        // Oracle: enumerate all |V(t)|^|V(d)| maps.
        let exhaustive = |d: &OrientedGraph, t: &OrientedGraph| -> bool {
            let nd = d.order();
            let nt = t.order();
            if nd == 0 {
                return true;
            }
            if nt == 0 {
                return false;
            }
            let total = nt.pow(nd as u32);
            (0..total).any(|code| {
                let mut c = code;
                let mut images = Vec::with_capacity(nd);
                for _ in 0..nd {
                    images.push(c % nt);
                    c /= nt;
                }
                let m = VertexMap::new(images, nt).unwrap();
                verify_homomorphism(d, t, &m)
            })
        };

        let mut mismatches = 0;
        for dcode in 0..81u32 {
            // Oriented graphs on 3 vertices from a base-3 pair counter.
            let d = decode_oriented(3, dcode as u64);
            for tcode in [0u64, 5, 13, 26, 60] {
                let t = decode_oriented(4, tcode * 7 % 729);
                let found = find_homomorphism(&d, &t).is_some();
                if found != exhaustive(&d, &t) {
                    mismatches += 1;
                }
                if let Some(m) = find_homomorphism(&d, &t) {
                    assert!(verify_homomorphism(&d, &t, &m));
                }
            }
        }
        assert_eq!(mismatches, 0);
    }

    fn decode_oriented(n: usize, mut code: u64) -> OrientedGraph {
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                match code % 3 {
                    1 => arcs.push((i, j)),
                    2 => arcs.push((j, i)),
                    _ => {}
                }
                code /= 3;
            }
        }
        OrientedGraph::new(n, arcs).unwrap()
    }

    #[test]
    fn oriented_coloring_validity() {
        let c3 = directed_cycle(3);
        let distinct = VertexMap::identity(3);
        assert!(verify_oriented_coloring(&c3, &distinct));

        let dp3 = directed_path(3).unwrap();
        let bad = VertexMap::new(vec![0, 1, 0], 2).unwrap();
        assert!(!verify_oriented_coloring(&dp3, &bad));
        assert!(!naive_valid_coloring(&dp3, &[0, 1, 0]));

        // Alternating P3: both end vertices point at the middle.
        let alt = OrientedGraph::new(3, [(0, 1), (2, 1)]).unwrap();
        let c = VertexMap::new(vec![0, 1, 0], 2).unwrap();
        assert!(naive_valid_coloring(&alt, &[0, 1, 0]));
        assert!(verify_oriented_coloring(&alt, &c));
    }

    #[test]
    fn oriented_coloring_search() {
        let c3 = directed_cycle(3);
        let found = find_oriented_coloring(&c3, 3).unwrap();
        assert!(verify_oriented_coloring(&c3, &found));
        assert!(find_oriented_coloring(&c3, 2).is_none());

        let c5 = directed_cycle(5);
        // Oracle: all 4^5 colorings are invalid.
        let mut any = false;
        for code in 0..1024u32 {
            let colors: Vec<usize> = (0..5).map(|i| (code >> (2 * i) & 3) as usize).collect();
            any |= naive_valid_coloring(&c5, &colors);
        }
        assert!(!any);
        assert!(find_oriented_coloring(&c5, 4).is_none());
        assert!(find_oriented_coloring(&c5, 5).is_some());

        // Identity coloring always works with n colors.
        let tt3 = OrientedGraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(find_oriented_coloring(&tt3, 3).is_some());
        assert!(find_oriented_coloring(&OrientedGraph::empty(0), 0).is_some());
    }

    #[test]
    fn quotient_characterizes_valid_colorings() {
        let g = complete(3).unwrap();
        let order = EdgeOrder::lexicographic(&g);
        for idx in 0..8 {
            let d = orientation_at(&g, &order, idx);
            for code in 0..27usize {
                let colors = vec![code % 3, code / 3 % 3, code / 9 % 3];
                let c = VertexMap::new(colors.clone(), 3).unwrap();
                let valid = verify_oriented_coloring(&d, &c);
                let quotient = coloring_quotient(&d, &c);
                assert_eq!(valid, quotient.is_ok());
                if let Ok(t) = quotient {
                    assert!(verify_homomorphism(&d, &t, &c));
                }
            }
        }
    }

    #[test]
    fn homomorphisms_compose() {
        let dp5 = directed_path(5).unwrap();
        let c3 = directed_cycle(3);
        let m1 = find_homomorphism(&dp5, &c3).unwrap();
        let m2 = VertexMap::new(vec![1, 2, 0], 3).unwrap();
        assert!(verify_homomorphism(&c3, &c3, &m2));
        let composed = m1.compose(&m2);
        assert!(verify_homomorphism(&dp5, &c3, &composed));
    }
}
