//! Vertices, edge indexing and partial edge 2-colorings of complete graphs.

use std::fmt;

/// One of the two edge colors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Blue => write!(f, "blue"),
            Color::Red => write!(f, "red"),
        }
    }
}

/// An unordered edge `{i, j}` of a complete graph, stored with `i < j`.
///
/// The linear index `j(j-1)/2 + i` is a bijection onto `[0, N(N-1)/2)`;
/// certificate files reference edges by this index, so the convention is
/// frozen.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EdgeIndex {
    i: usize,
    j: usize,
}

impl EdgeIndex {
    /// Builds the edge `{a, b}`, ordering the endpoints. Panics on a loop.
    pub fn new(a: usize, b: usize) -> EdgeIndex {
        assert_ne!(a, b, "edge endpoints must be distinct");
        if a < b {
            EdgeIndex { i: a, j: b }
        } else {
            EdgeIndex { i: b, j: a }
        }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn to_linear(&self) -> usize {
        self.j * (self.j - 1) / 2 + self.i
    }

    pub fn from_linear(idx: usize) -> EdgeIndex {
        // Largest j with j(j-1)/2 <= idx.
        let mut j = 1;
        while (j + 1) * j / 2 <= idx {
            j += 1;
        }
        let i = idx - j * (j - 1) / 2;
        EdgeIndex { i, j }
    }
}

impl fmt::Display for EdgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

/// A (possibly partial) red/blue assignment to the edges of `K_N`, `N <= 64`.
///
/// Each color is stored as per-vertex neighbor bitmasks; an edge carries at
/// most one color. Values are cheap to clone and safe to share between
/// threads once frozen; the search mutates only thread-local copies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoColoring {
    n: usize,
    blue: Vec<u64>,
    red: Vec<u64>,
}

impl TwoColoring {
    /// An entirely uncolored `K_n`.
    pub fn new(n: usize) -> TwoColoring {
        assert!(n <= 64, "colorings are limited to 64 vertices");
        TwoColoring {
            n,
            blue: vec![0; n],
            red: vec![0; n],
        }
    }

    /// A complete monochromatic `K_n`.
    pub fn monochromatic(n: usize, color: Color) -> TwoColoring {
        let mut c = TwoColoring::new(n);
        for j in 1..n {
            for i in 0..j {
                c.set(i, j, color);
            }
        }
        c
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edge_total(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn masks(&self, color: Color) -> &[u64] {
        match color {
            Color::Blue => &self.blue,
            Color::Red => &self.red,
        }
    }

    fn masks_mut(&mut self, color: Color) -> &mut [u64] {
        match color {
            Color::Blue => &mut self.blue,
            Color::Red => &mut self.red,
        }
    }

    /// Colors the edge `{u, v}`. The edge must be uncolored.
    pub fn set(&mut self, u: usize, v: usize, color: Color) {
        assert!(u < self.n && v < self.n && u != v);
        debug_assert!(self.color_of(u, v).is_none(), "edge already colored");
        let m = self.masks_mut(color);
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }

    /// Removes the color of the edge `{u, v}`.
    pub fn unset(&mut self, u: usize, v: usize) {
        let bit_u = 1u64 << u;
        let bit_v = 1u64 << v;
        self.blue[u] &= !bit_v;
        self.blue[v] &= !bit_u;
        self.red[u] &= !bit_v;
        self.red[v] &= !bit_u;
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        if self.blue[u] & (1 << v) != 0 {
            Some(Color::Blue)
        } else if self.red[u] & (1 << v) != 0 {
            Some(Color::Red)
        } else {
            None
        }
    }

    /// Neighbor bitmask of `v` in the given color class.
    pub fn neighbors(&self, v: usize, color: Color) -> u64 {
        self.masks(color)[v]
    }

    /// Per-vertex neighbor masks of one color class.
    pub fn adjacency(&self, color: Color) -> &[u64] {
        self.masks(color)
    }

    /// Number of colored edges of the given color incident to `v`.
    pub fn color_degree(&self, v: usize, color: Color) -> usize {
        self.masks(color)[v].count_ones() as usize
    }

    pub fn colored_count(&self) -> usize {
        let b: u32 = self.blue.iter().map(|m| m.count_ones()).sum();
        let r: u32 = self.red.iter().map(|m| m.count_ones()).sum();
        (b + r) as usize / 2
    }

    /// True iff every edge of `K_n` carries a color.
    pub fn is_complete(&self) -> bool {
        self.colored_count() == self.edge_total()
    }

    /// Blue and red exchanged; an involution.
    pub fn complement(&self) -> TwoColoring {
        TwoColoring {
            n: self.n,
            blue: self.red.clone(),
            red: self.blue.clone(),
        }
    }

    /// Edges of one color, ascending by linear index.
    pub fn edges_of(&self, color: Color) -> Vec<EdgeIndex> {
        let mut out = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.masks(color)[i] & (1 << j) != 0 {
                    out.push(EdgeIndex::new(i, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_index_roundtrip_small() {
        for n in 2..=16usize {
            let total = n * (n - 1) / 2;
            for idx in 0..total {
                let e = EdgeIndex::from_linear(idx);
                assert!(e.i() < e.j() && e.j() < n || e.j() >= n);
                assert_eq!(e.to_linear(), idx);
            }
            // and the other direction
            for j in 1..n {
                for i in 0..j {
                    let e = EdgeIndex::new(i, j);
                    assert_eq!(EdgeIndex::from_linear(e.to_linear()), e);
                }
            }
        }
    }

    #[test]
    fn color_degree_all_blue_k5() {
        let c = TwoColoring::monochromatic(5, Color::Blue);
        assert_eq!(c.color_degree(0, Color::Blue), 4);
        assert_eq!(c.color_degree(0, Color::Red), 0);
    }

    #[test]
    fn color_degree_uncolored_k6() {
        let c = TwoColoring::new(6);
        assert_eq!(c.color_degree(2, Color::Red), 0);
    }

    #[test]
    fn complete_degrees_sum() {
        let c = TwoColoring::monochromatic(7, Color::Red);
        assert!(c.is_complete());
        for v in 0..7 {
            assert_eq!(
                c.color_degree(v, Color::Blue) + c.color_degree(v, Color::Red),
                6
            );
        }
    }

    #[test]
    fn complement_swaps_partial_edges() {
        let mut c = TwoColoring::new(4);
        let e0 = EdgeIndex::from_linear(0);
        let e3 = EdgeIndex::from_linear(3);
        c.set(e0.i(), e0.j(), Color::Blue);
        c.set(e3.i(), e3.j(), Color::Red);
        let d = c.complement();
        assert_eq!(d.color_of(e0.i(), e0.j()), Some(Color::Red));
        assert_eq!(d.color_of(e3.i(), e3.j()), Some(Color::Blue));
        assert_eq!(d.complement(), c);
    }

    #[test]
    fn complement_all_blue() {
        let c = TwoColoring::monochromatic(4, Color::Blue);
        let d = c.complement();
        assert_eq!(d, TwoColoring::monochromatic(4, Color::Red));
    }

    proptest! {
        #[test]
        fn complement_involution_and_degree_swap(seed in 0u64..1u64 << 48) {
            let n = 2 + (seed % 7) as usize;
            let mut c = TwoColoring::new(n);
            let mut s = seed;
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    match s >> 62 {
                        0 => c.set(i, j, Color::Blue),
                        1 => c.set(i, j, Color::Red),
                        _ => {}
                    }
                }
            }
            let d = c.complement();
            prop_assert_eq!(&d.complement(), &c);
            for v in 0..n {
                prop_assert_eq!(d.color_degree(v, Color::Blue), c.color_degree(v, Color::Red));
            }
        }
    }
}
