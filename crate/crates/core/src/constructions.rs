//! The explicit extremal colorings used as lower-bound witnesses.
//!
//! Vertex layout conventions are frozen so certificates are
//! byte-reproducible: the first block is always the larger clique, and in
//! [`star_plus_edge_coloring`] the special vertex `v` is the last vertex.

use crate::bounds::spine_split;
use crate::embed::contains_mono_pattern;
use crate::graph::{Color, TwoColoring};
use crate::pattern::PatternSpec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("circulant coloring needs an odd leaf count >= 3, got {0}")]
    EvenCirculant(usize),
}

/// Coloring of `K_{a+b}`: edges inside the first `a` vertices blue, inside
/// the last `b` vertices blue, all cross edges red.
pub fn split_clique_coloring(a: usize, b: usize) -> TwoColoring {
    assert!(a >= 1);
    let mut c = TwoColoring::new(a + b);
    for j in 1..a + b {
        for i in 0..j {
            let color = if (i < a) == (j < a) {
                Color::Blue
            } else {
                Color::Red
            };
            c.set(i, j, color);
        }
    }
    c
}

/// Circulant coloring of `K_{2n-1}` for odd `n`: edge `{v_i, v_{i+j}}` blue
/// for jumps `j` in `1..=(n-1)/2` (indices mod `2n-1`), all others red.
/// Every vertex ends with blue and red degree `n - 1`.
pub fn circulant_star_coloring(n: usize) -> Result<TwoColoring, ConstructionError> {
    if n < 3 || n % 2 == 0 {
        return Err(ConstructionError::EvenCirculant(n));
    }
    let order = 2 * n - 1;
    let mut c = TwoColoring::new(order);
    for j in 1..order {
        for i in 0..j {
            let diff = (j - i).min(order - (j - i));
            let color = if diff <= (n - 1) / 2 {
                Color::Blue
            } else {
                Color::Red
            };
            c.set(i, j, color);
        }
    }
    debug_assert!((0..order).all(|v| c.color_degree(v, Color::Blue) == n - 1));
    Ok(c)
}

/// Coloring of `K_{2n}` on `V = U ∪ W ∪ {v}` with `|U| = n`, `|W| = n - 1`:
/// blue inside `U`, inside `W` and on `v`–`W`; red on `v`–`U` and `U`–`W`.
/// Avoids a monochromatic `S_n + e`.
///
/// Layout: `U = 0..n`, `W = n..2n-1`, `v = 2n - 1`.
pub fn star_plus_edge_coloring(n: usize) -> TwoColoring {
    assert!(n >= 2);
    let order = 2 * n;
    let v = order - 1;
    let in_u = |x: usize| x < n;
    let in_w = |x: usize| x >= n && x < v;
    let mut c = TwoColoring::new(order);
    for j in 1..order {
        for i in 0..j {
            let blue = (in_u(i) && in_u(j)) || (in_w(i) && in_w(j)) || (in_w(i) && j == v);
            c.set(i, j, if blue { Color::Blue } else { Color::Red });
        }
    }
    c
}

/// The universal lower-bound witness for a caterpillar pattern `p`:
/// `split_clique_coloring(|V(p)| - 1, m - 1)` with `m` from the spine
/// split. The output is re-verified to contain no monochromatic copy of
/// `p`; a violation indicates a bug and panics.
pub fn lower_bound_witness(p: &PatternSpec) -> TwoColoring {
    let m = spine_split(p).m;
    let c = split_clique_coloring(p.vertex_count() - 1, m - 1);
    for color in [Color::Blue, Color::Red] {
        assert!(
            !contains_mono_pattern(&c, color, p),
            "lower-bound witness for {p} contains a {color} copy"
        );
    }
    c
}
