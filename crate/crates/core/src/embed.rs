//! Monochromatic containment: fast closed-form paths for stars and bistars,
//! a spine-first embedder for caterpillars, and a generic backtracking
//! embedder for augmented patterns.
//!
//! All functions are pure; containment is ordinary (non-induced) subgraph
//! containment throughout.

use crate::graph::{Color, TwoColoring};
use crate::pattern::{pattern_graph, PatternGraph, PatternSpec};

/// True iff some vertex has `color`-degree at least `n`, i.e. the coloring
/// contains a monochromatic `S_n` in that color. Valid on partial colorings.
pub fn contains_mono_star(c: &TwoColoring, color: Color, n: usize) -> bool {
    (0..c.n_vertices()).any(|v| c.color_degree(v, color) >= n)
}

/// True iff the (complete) coloring contains a monochromatic `B(m, n)` in
/// the given color. Rejects incomplete colorings; use
/// [`partial_contains_mono`] for partial ones.
///
/// An edge `{u, v}` of the color centers a copy iff, with
/// `A = N(u) \ {v}` and `B = N(v) \ {u}` inside the color class,
/// `|A| >= m`, `|B| >= n` and `|A ∪ B| >= m + n` (either orientation).
pub fn contains_mono_bistar(c: &TwoColoring, color: Color, m: usize, n: usize) -> bool {
    assert!(
        c.is_complete(),
        "contains_mono_bistar requires a complete coloring"
    );
    assert!(1 <= m && m <= n);
    let adj = c.adjacency(color);
    for u in 0..c.n_vertices() {
        let mut nbrs = adj[u] & !((1u64 << (u + 1)) - 1); // v > u only
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if bistar_at_edge(adj, u, v, m, n) {
                return true;
            }
        }
    }
    false
}

/// Checks the two-set defect condition for a bistar centered on `{u, v}`,
/// in both center orientations.
pub(crate) fn bistar_at_edge(adj: &[u64], u: usize, v: usize, m: usize, n: usize) -> bool {
    let a = adj[u] & !(1 << v);
    let b = adj[v] & !(1 << u);
    let da = a.count_ones() as usize;
    let db = b.count_ones() as usize;
    let union = (a | b).count_ones() as usize;
    if union < m + n {
        return false;
    }
    (da >= m && db >= n) || (da >= n && db >= m)
}

/// True iff the color class of `c` contains a subgraph isomorphic to `p`.
/// Works on partial colorings (only colored edges count).
pub fn contains_mono_pattern(c: &TwoColoring, color: Color, p: &PatternSpec) -> bool {
    contains_in_graph(c.adjacency(color), c.n_vertices(), p)
}

/// True iff either color class, restricted to already-colored edges,
/// contains `p`. Sound for pruning: a `true` result is preserved under any
/// extension of the partial coloring.
pub fn partial_contains_mono(c: &TwoColoring, p: &PatternSpec) -> bool {
    contains_mono_pattern(c, Color::Blue, p) || contains_mono_pattern(c, Color::Red, p)
}

/// Containment of `p` in an arbitrary graph given as neighbor bitmasks.
pub(crate) fn contains_in_graph(adj: &[u64], n_vertices: usize, p: &PatternSpec) -> bool {
    if p.vertex_count() > n_vertices {
        return false;
    }
    match p.leaf_counts() {
        Some(counts) => embed_caterpillar(adj, n_vertices, &counts),
        None => embed_generic(adj, n_vertices, &pattern_graph(p)),
    }
}

/// Spine-first caterpillar embedding: enumerate injective paths for the
/// spine with degree-feasibility filtering, then check leaf assignment by
/// the subset-union defect condition (Hall, over at most 2^k subsets).
fn embed_caterpillar(adj: &[u64], n_vertices: usize, counts: &[usize]) -> bool {
    let k = counts.len();
    assert!(
        k <= 16,
        "caterpillar spines longer than 16 are out of scope"
    );
    // Required host degree at each spine position.
    let req: Vec<usize> = (0..k)
        .map(|i| {
            let spine_deg = if k == 1 {
                0
            } else if i == 0 || i == k - 1 {
                1
            } else {
                2
            };
            counts[i] + spine_deg
        })
        .collect();
    let mut path = vec![0usize; k];

    fn extend(
        adj: &[u64],
        n_vertices: usize,
        counts: &[usize],
        req: &[usize],
        path: &mut [usize],
        used: u64,
        pos: usize,
    ) -> bool {
        let k = counts.len();
        if pos == k {
            return leaves_assignable(adj, counts, path, used);
        }
        let mut cands = if pos == 0 {
            if n_vertices == 64 {
                u64::MAX
            } else {
                (1u64 << n_vertices) - 1
            }
        } else {
            adj[path[pos - 1]] & !used
        };
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if (adj[v].count_ones() as usize) < req[pos] {
                continue;
            }
            path[pos] = v;
            if extend(adj, n_vertices, counts, req, path, used | (1 << v), pos + 1) {
                return true;
            }
        }
        false
    }

    fn leaves_assignable(adj: &[u64], counts: &[usize], path: &[usize], spine_mask: u64) -> bool {
        let k = counts.len();
        let cand: Vec<u64> = (0..k).map(|i| adj[path[i]] & !spine_mask).collect();
        // Disjoint leaf sets of the required sizes exist iff every subset's
        // candidate union is large enough.
        for subset in 1u32..(1 << k) {
            let mut union = 0u64;
            let mut need = 0usize;
            let mut bits = subset;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                union |= cand[i];
                need += counts[i];
            }
            if (union.count_ones() as usize) < need {
                return false;
            }
        }
        true
    }

    extend(adj, n_vertices, counts, &req, &mut path, 0, 0)
}

/// Backtracking subgraph search for arbitrary small patterns.
fn embed_generic(adj: &[u64], n_vertices: usize, pg: &PatternGraph) -> bool {
    let padj = pg.adjacency();
    let order = embed_order(&padj, None);
    run_embedding(
        adj,
        n_vertices,
        &padj,
        &order,
        &mut vec![usize::MAX; pg.n_vertices],
        0,
        0,
    )
}

/// As [`embed_generic`], but only embeddings that use the host edge
/// `{hu, hv}` are considered: some pattern edge is pinned onto it, in both
/// orientations. Complete for incremental search pruning, where every new
/// monochromatic copy must pass through the most recently colored edge.
pub(crate) fn contains_through_edge(
    adj: &[u64],
    n_vertices: usize,
    pg: &PatternGraph,
    hu: usize,
    hv: usize,
) -> bool {
    let padj = pg.adjacency();
    for &(a, b) in &pg.edges {
        for (pa, pb) in [(a, b), (b, a)] {
            if (adj[hu].count_ones() as usize) < padj[pa].count_ones() as usize
                || (adj[hv].count_ones() as usize) < padj[pb].count_ones() as usize
            {
                continue;
            }
            let order = embed_order(&padj, Some((pa, pb)));
            let mut mapping = vec![usize::MAX; pg.n_vertices];
            mapping[pa] = hu;
            mapping[pb] = hv;
            let used = (1u64 << hu) | (1u64 << hv);
            if run_embedding(adj, n_vertices, &padj, &order, &mut mapping, used, 2) {
                return true;
            }
        }
    }
    false
}

/// Static vertex order: optional anchor pair first, then greedily the
/// unplaced vertex with the most placed neighbors (ties by degree, then
/// index). For connected patterns every non-initial vertex has a placed
/// neighbor, so candidate sets stay small.
fn embed_order(padj: &[u64], anchor: Option<(usize, usize)>) -> Vec<usize> {
    let n = padj.len();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    if let Some((a, b)) = anchor {
        order.push(a);
        order.push(b);
        placed |= (1 << a) | (1 << b);
    } else {
        let start = (0..n).max_by_key(|&v| padj[v].count_ones()).unwrap();
        order.push(start);
        placed |= 1 << start;
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| {
                (
                    (padj[v] & placed).count_ones(),
                    padj[v].count_ones(),
                    usize::MAX - v,
                )
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    order
}

fn run_embedding(
    adj: &[u64],
    n_vertices: usize,
    padj: &[u64],
    order: &[usize],
    mapping: &mut Vec<usize>,
    used: u64,
    pos: usize,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let q = order[pos];
    let all = if n_vertices == 64 {
        u64::MAX
    } else {
        (1u64 << n_vertices) - 1
    };
    let mut cands = all & !used;
    let mut nbrs = padj[q];
    while nbrs != 0 {
        let p = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if mapping[p] != usize::MAX {
            cands &= adj[mapping[p]];
        }
    }
    let need = padj[q].count_ones();
    while cands != 0 {
        let v = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if adj[v].count_ones() < need {
            continue;
        }
        mapping[q] = v;
        if run_embedding(
            adj,
            n_vertices,
            padj,
            order,
            mapping,
            used | (1 << v),
            pos + 1,
        ) {
            return true;
        }
        mapping[q] = usize::MAX;
    }
    false
}
