//! Closed-form bound engine: every formulaic lower/upper bound on r(P)
//! combined into a provenance-tagged interval per pattern.

use crate::pattern::PatternSpec;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bound formulas apply to tree patterns only, not {0}")]
    NotATree(String),
}

/// Where an interval endpoint comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundSource {
    SpineSplit,
    StarSubgraph,
    StarExact,
    SmallM1,
    SmallM2,
    UpperBigN,
    UpperSmallN,
    TheoremEqual,
    ErdosGraham,
    Exhaustive,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundSource::SpineSplit => "spine-split",
            BoundSource::StarSubgraph => "star-subgraph",
            BoundSource::StarExact => "star-exact",
            BoundSource::SmallM1 => "smallm-1",
            BoundSource::SmallM2 => "smallm-2",
            BoundSource::UpperBigN => "upper-bign",
            BoundSource::UpperSmallN => "upper-smalln",
            BoundSource::TheoremEqual => "theorem-equal",
            BoundSource::ErdosGraham => "erdos-graham",
            BoundSource::Exhaustive => "exhaustive",
        };
        write!(f, "{s}")
    }
}

/// `[lo, hi]` on `r(P)` with a provenance tag per endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundInterval {
    pub lo: usize,
    pub hi: usize,
    pub lo_source: BoundSource,
    pub hi_source: BoundSource,
}

impl BoundInterval {
    fn new(lo: usize, lo_source: BoundSource, hi: usize, hi_source: BoundSource) -> BoundInterval {
        debug_assert!(lo <= hi);
        BoundInterval {
            lo,
            hi,
            lo_source,
            hi_source,
        }
    }

    fn exact(v: usize, lo_source: BoundSource, hi_source: BoundSource) -> BoundInterval {
        BoundInterval::new(v, lo_source, v, hi_source)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for BoundInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi && self.lo_source == self.hi_source {
            write!(f, "lo={} hi={} ({})", self.lo, self.hi, self.lo_source)
        } else {
            write!(
                f,
                "lo={} ({}) hi={} ({})",
                self.lo, self.lo_source, self.hi, self.hi_source
            )
        }
    }
}

/// The two alternating spine sums and their minimum: `m1` counts the
/// odd-position leaves plus `⌊k/2⌋`, `m2` the even-position leaves plus
/// `⌈k/2⌉`, and `m = min{m1, m2}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpineSplit {
    pub m1: usize,
    pub m2: usize,
    pub m: usize,
}

/// Evaluates the spine split of a tree pattern. Panics on augmented
/// patterns, which have no spine split.
pub fn spine_split(p: &PatternSpec) -> SpineSplit {
    let counts = p
        .leaf_counts()
        .unwrap_or_else(|| panic!("spine_split applies to tree patterns only, not {p}"));
    let k = counts.len();
    let odd: usize = counts.iter().step_by(2).sum(); // positions 1, 3, ... (1-based)
    let even: usize = counts.iter().skip(1).step_by(2).sum();
    let m1 = odd + k / 2;
    let m2 = even + k.div_ceil(2);
    SpineSplit {
        m1,
        m2,
        m: m1.min(m2),
    }
}

/// The universal lower bound `|V(p)| + m - 1`.
pub fn caterpillar_lower(p: &PatternSpec) -> usize {
    p.vertex_count() + spine_split(p).m - 1
}

/// `r(S_n)`: `2n - 1` for even `n`, `2n` for odd `n`.
pub fn star_exact(n: usize) -> usize {
    assert!(n >= 1);
    if n % 2 == 0 {
        2 * n - 1
    } else {
        2 * n
    }
}

/// The general tree upper bound `4|V(p)| - 3`.
pub fn erdos_graham_upper(p: &PatternSpec) -> usize {
    assert!(
        p.leaf_counts().is_some(),
        "erdos_graham_upper applies to tree patterns only"
    );
    4 * p.vertex_count() - 3
}

/// The interval on `r(B(m, n))` for `1 <= m <= n`, assembled from every
/// applicable closed-form bound. Rejects `m > n`; callers must normalize.
pub fn bistar_bounds(m: usize, n: usize) -> BoundInterval {
    assert!(1 <= m && m <= n, "bistar_bounds requires 1 <= m <= n");
    if (m, n) == (1, 1) {
        // r(B(1,1)) = r(P_4) = 5, pinned.
        return BoundInterval::exact(5, BoundSource::SpineSplit, BoundSource::SmallM1);
    }
    if m == 1 {
        // r(B(1,n)) = r(S_{n+1}) for n >= 2.
        let v = star_exact(n + 1);
        return BoundInterval::exact(v, BoundSource::StarSubgraph, BoundSource::SmallM1);
    }

    // Lower bound: spine split vs. the star-subgraph bound r(S_{n+1}),
    // valid for every m since B(m, n) contains S_{n+1}; ties go to
    // spine-split.
    let spine = 2 * m + n + 2;
    let star = star_exact(n + 1);
    let (lo, lo_source) = if star > spine {
        (star, BoundSource::StarSubgraph)
    } else {
        (spine, BoundSource::SpineSplit)
    };

    // Upper bound: minimum over the applicable cases; on ties the
    // earlier-listed (sharper-statement) source wins.
    let mut candidates: Vec<(usize, BoundSource)> = Vec::new();
    if (m, n) == (2, 2) {
        candidates.push((8, BoundSource::SmallM2));
    }
    if m >= 2 && (n == m || n == m + 1) {
        candidates.push((2 * m + n + 2, BoundSource::TheoremEqual));
    }
    if m == 2 && n >= 3 {
        candidates.push((2 * n + 3, BoundSource::SmallM2));
    }
    if m >= 3 && n >= m + 2 && n <= 2 * m - 1 {
        candidates.push((2 * n + m + 1, BoundSource::UpperBigN));
    }
    candidates.push((4 * (m + n + 2) - 3, BoundSource::ErdosGraham));
    let (hi, hi_source) = candidates.into_iter().min_by_key(|&(v, _)| v).unwrap();

    BoundInterval::new(lo, lo_source, hi, hi_source)
}

/// The interval on `r(p)` for any tree pattern: exact star and bistar
/// cases where the pattern is structurally one, otherwise spine-split
/// below and Erdős–Graham above.
pub fn caterpillar_bounds(p: &PatternSpec) -> Result<BoundInterval, BoundsError> {
    if p.leaf_counts().is_none() {
        return Err(BoundsError::NotATree(p.to_string()));
    }
    if let Some(n) = p.as_star() {
        return Ok(BoundInterval::exact(
            star_exact(n),
            BoundSource::StarExact,
            BoundSource::StarExact,
        ));
    }
    if let Some((m, n)) = p.as_bistar() {
        return Ok(bistar_bounds(m, n));
    }
    Ok(BoundInterval::new(
        caterpillar_lower(p),
        BoundSource::SpineSplit,
        erdos_graham_upper(p),
        BoundSource::ErdosGraham,
    ))
}
