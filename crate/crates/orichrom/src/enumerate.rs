//! Exhaustive enumeration of small oriented graphs and tournaments up to
//! isomorphism, via brute-force canonical forms (minimum relabeling over all
//! vertex permutations). Intended for orders where `k!` is tiny.

use crate::graph::OrientedGraph;

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut result = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    permute(&mut items, 0, &mut result);
    result.sort();
    result
}

fn permute(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, out);
        items.swap(start, i);
    }
}

/// Number of unordered pairs over `0..k`.
pub fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Index of the unordered pair `(i, j)`, `i < j`, in lexicographic pair order
/// over `0..k`.
pub fn pair_index(i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k);
    // pairs (0,1),(0,2),...,(0,k-1),(1,2),...
    i * k - i * (i + 1) / 2 + (j - i - 1)
}

/// Pair-state encoding of an oriented graph of order `k`: entry `p` for the
/// `p`-th pair `(i, j)` (`i < j`) is 0 (no arc), 1 (arc `i -> j`) or
/// 2 (arc `j -> i`).
pub fn orientation_code(d: &OrientedGraph) -> Vec<u8> {
    let k = d.order();
    let mut code = vec![0u8; pair_count(k)];
    for (u, v) in d.arcs() {
        let p = pair_index(u.min(v), u.max(v), k);
        code[p] = if u < v { 1 } else { 2 };
    }
    code
}

/// Rebuilds the oriented graph from a pair-state code.
pub fn decode_orientation_code(k: usize, code: &[u8]) -> OrientedGraph {
    let mut arcs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            match code[pair_index(i, j, k)] {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
        }
    }
    OrientedGraph::new(k, arcs).expect("pair-state codes are antisymmetric by construction")
}

/// Applies a vertex relabeling to a pair-state code.
pub fn relabel_code(k: usize, code: &[u8], perm: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; code.len()];
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (perm[i], perm[j]);
            let state = code[pair_index(i, j, k)];
            let (p, swapped) = if a < b {
                (pair_index(a, b, k), false)
            } else {
                (pair_index(b, a, k), true)
            };
            out[p] = match (state, swapped) {
                (0, _) => 0,
                (s, false) => s,
                (1, true) => 2,
                (2, true) => 1,
                _ => unreachable!(),
            };
        }
    }
    out
}

/// Canonical form: the minimum relabeled code over all `k!` permutations.
/// Two oriented graphs of the same order are isomorphic iff their canonical
/// codes agree.
pub fn canonical_code(k: usize, code: &[u8], perms: &[Vec<usize>]) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    for perm in perms {
        let candidate = relabel_code(k, code, perm);
        match &best {
            Some(b) if *b <= candidate => {}
            _ => best = Some(candidate),
        }
    }
    best.unwrap_or_default()
}

/// One representative per isomorphism class of oriented graphs of order `k`,
/// in first-seen order of the base-3 pair counter (pair `(0,1)` most
/// significant). Results are cached per order.
pub fn oriented_graph_representatives(k: usize) -> Vec<OrientedGraph> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<std::collections::HashMap<usize, Vec<OrientedGraph>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()));
    if let Some(reps) = cache.lock().unwrap().get(&k) {
        return reps.clone();
    }
    let np = pair_count(k);
    let perms = permutations(k);
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    let total = 3u64.pow(np as u32);
    for counter in 0..total {
        let mut code = vec![0u8; np];
        let mut c = counter;
        for p in (0..np).rev() {
            code[p] = (c % 3) as u8;
            c /= 3;
        }
        let canon = canonical_code(k, &code, &perms);
        if seen.insert(canon) {
            reps.push(decode_orientation_code(k, &code));
        }
    }
    cache.lock().unwrap().insert(k, reps.clone());
    reps
}

/// One representative per isomorphism class of tournaments of order `k`.
pub fn tournament_representatives(k: usize) -> Vec<OrientedGraph> {
    let np = pair_count(k);
    let perms = permutations(k);
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for bits in 0..1u64 << np {
        let code: Vec<u8> = (0..np)
            .map(|p| if bits >> (np - 1 - p) & 1 == 0 { 1 } else { 2 })
            .collect();
        let canon = canonical_code(k, &code, &perms);
        if seen.insert(canon) {
            reps.push(decode_orientation_code(k, &code));
        }
    }
    reps
}

/// Number of isomorphism classes among the given same-order graphs.
pub fn isomorphism_class_count<I>(k: usize, graphs: I) -> usize
where
    I: IntoIterator<Item = OrientedGraph>,
{
    let perms = permutations(k);
    let mut seen = std::collections::HashSet::new();
    for g in graphs {
        assert_eq!(g.order(), k);
        seen.insert(canonical_code(k, &orientation_code(&g), &perms));
    }
    seen.len()
}
