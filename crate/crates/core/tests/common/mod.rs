//! Independent oracles for cross-checking the optimized code paths:
//! a plain injection-enumeration subgraph test, exhaustive and random
//! coloring generators, and brute-force graph isomorphism.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use ramsey_core::graph::{Color, TwoColoring};
use ramsey_core::pattern::{pattern_graph, PatternGraph, PatternSpec};
use rand::Rng;

/// Containment test by enumerating every injection of pattern vertices
/// into host vertices. Exponential and obviously correct.
pub fn oracle_contains(c: &TwoColoring, color: Color, p: &PatternSpec) -> bool {
    let g = pattern_graph(p);
    let host_n = c.n_vertices();
    if g.n_vertices > host_n {
        return false;
    }
    let mut assignment = vec![usize::MAX; g.n_vertices];
    let mut used = vec![false; host_n];
    extend(c, color, &g, &mut assignment, &mut used, 0)
}

fn extend(
    c: &TwoColoring,
    color: Color,
    g: &PatternGraph,
    assignment: &mut [usize],
    used: &mut [bool],
    k: usize,
) -> bool {
    if k == assignment.len() {
        return true;
    }
    'host: for h in 0..used.len() {
        if used[h] {
            continue;
        }
        for &(a, b) in &g.edges {
            let other = if a == k {
                b
            } else if b == k {
                a
            } else {
                continue;
            };
            if other < k && c.color_of(assignment[other], h) != Some(color) {
                continue 'host;
            }
        }
        assignment[k] = h;
        used[h] = true;
        if extend(c, color, g, assignment, used, k + 1) {
            return true;
        }
        used[h] = false;
        assignment[k] = usize::MAX;
    }
    false
}

/// All 2^C(n,2) complete colorings of K_n; bit i of the counter colors
/// linear edge i blue.
pub fn all_colorings(n: usize) -> impl Iterator<Item = TwoColoring> {
    let edges = n * (n - 1) / 2;
    assert!(edges < 30, "exhaustive enumeration capped");
    (0u64..1 << edges).map(move |mask| coloring_from_mask(n, mask))
}

pub fn coloring_from_mask(n: usize, mask: u64) -> TwoColoring {
    let mut c = TwoColoring::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let color = if mask >> idx & 1 == 1 {
                Color::Blue
            } else {
                Color::Red
            };
            c.set(i, j, color);
            idx += 1;
        }
    }
    c
}

pub fn random_coloring<R: Rng>(n: usize, rng: &mut R) -> TwoColoring {
    let mut c = TwoColoring::new(n);
    for j in 1..n {
        for i in 0..j {
            c.set(
                i,
                j,
                if rng.gen_bool(0.5) {
                    Color::Blue
                } else {
                    Color::Red
                },
            );
        }
    }
    c
}

/// Brute-force isomorphism by permutation search; fine for <= 9 vertices.
pub fn graphs_isomorphic(a: &PatternGraph, b: &PatternGraph) -> bool {
    if a.n_vertices != b.n_vertices || a.edges.len() != b.edges.len() {
        return false;
    }
    let n = a.n_vertices;
    let adj_a = a.adjacency();
    let adj_b = b.adjacency();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &|perm| {
        (0..n).all(|u| {
            (0..n).all(|v| u == v || (adj_a[u] >> v & 1) == (adj_b[perm[u]] >> perm[v] & 1))
        })
    })
}

fn permute(perm: &mut Vec<usize>, k: usize, check: &dyn Fn(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permute(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Every pattern expressible in the grammar with at most `max_vertices`
/// vertices: stars, bistars, caterpillars, and the star/bistar
/// augmentations.
pub fn small_patterns(max_vertices: usize) -> Vec<PatternSpec> {
    use ramsey_core::pattern::{AugmentationClass, CenterSide};
    let mut out = Vec::new();
    for n in 1..max_vertices {
        out.push(PatternSpec::star(n).unwrap());
    }
    for m in 1..=max_vertices {
        for n in m..=max_vertices {
            if m + n + 2 <= max_vertices {
                out.push(PatternSpec::bistar(m, n).unwrap());
            }
        }
    }
    // caterpillars with 3..=4 spine vertices (shorter spines are stars
    // and bistars, already listed)
    for k in 3..=4usize {
        let mut counts = vec![0usize; k];
        loop {
            let p = PatternSpec::caterpillar(counts.clone());
            if let Ok(p) = p {
                if p.vertex_count() <= max_vertices && !out.contains(&p) {
                    out.push(p);
                }
            }
            let mut i = 0;
            loop {
                if i == k {
                    break;
                }
                counts[i] += 1;
                if counts[i] <= 3 {
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    let classes = [
        AugmentationClass::LeafLeaf,
        AugmentationClass::LeafLeafSameCenter(CenterSide::Small),
        AugmentationClass::LeafLeafSameCenter(CenterSide::Large),
        AugmentationClass::LeafLeafDifferentCenters,
        AugmentationClass::LeafToFarCenter(CenterSide::Small),
        AugmentationClass::LeafToFarCenter(CenterSide::Large),
    ];
    let bases: Vec<PatternSpec> = out.clone();
    for base in bases {
        for class in classes {
            if let Ok(p) = PatternSpec::plus_edge(base.clone(), class) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}
