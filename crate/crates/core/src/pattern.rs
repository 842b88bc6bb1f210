//! The pattern vocabulary: stars, bistars, caterpillars and their
//! single-edge augmentations, plus the text grammar shared by the CLI and
//! certificate files.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("star needs at least one leaf")]
    EmptyStar,
    #[error("bistar leaf counts must be at least 1")]
    EmptyBistarCenter,
    #[error("caterpillar spine must be nonempty")]
    EmptySpine,
    #[error("path needs at least 2 vertices")]
    ShortPath,
    #[error("caterpillar end spine vertices must carry a leaf (all-zero counts denote a path)")]
    BareSpineEnd,
    #[error("augmentation {class} is not realizable on {base}")]
    UnrealizableAugmentation { base: String, class: String },
    #[error("augmentations apply only to star and bistar bases")]
    UnsupportedBase,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty pattern expression")]
    Empty,
    #[error("unknown pattern kind `{0}` (expected star, bistar, caterpillar or path)")]
    UnknownKind(String),
    #[error("`{0}` is not a count")]
    BadNumber(String),
    #[error("wrong number of arguments for `{0}`")]
    Arity(String),
    #[error("unknown augmentation class `{0}` (expected ll-same, ll-same-large, ll-diff, leaf-far-center, leaf-far-center-large or ll)")]
    UnknownClass(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Which of a bistar's two centers an augmentation refers to: the one with
/// `m` leaves (`Small`) or the one with `n` leaves (`Large`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CenterSide {
    Small,
    Large,
}

/// How the single augmenting edge is placed on the base pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AugmentationClass {
    /// Star base: edge between two leaves.
    LeafLeaf,
    /// Bistar base: edge between two leaves of the same center.
    LeafLeafSameCenter(CenterSide),
    /// Bistar base: edge between leaves of different centers.
    LeafLeafDifferentCenters,
    /// Bistar base: edge from a leaf of the named center to the other center.
    LeafToFarCenter(CenterSide),
}

impl fmt::Display for AugmentationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AugmentationClass::LeafLeaf => "ll",
            AugmentationClass::LeafLeafSameCenter(CenterSide::Small) => "ll-same",
            AugmentationClass::LeafLeafSameCenter(CenterSide::Large) => "ll-same-large",
            AugmentationClass::LeafLeafDifferentCenters => "ll-diff",
            AugmentationClass::LeafToFarCenter(CenterSide::Small) => "leaf-far-center",
            AugmentationClass::LeafToFarCenter(CenterSide::Large) => "leaf-far-center-large",
        };
        write!(f, "{s}")
    }
}

impl AugmentationClass {
    pub fn parse(token: &str) -> Result<AugmentationClass, ParseError> {
        Ok(match token {
            "ll" => AugmentationClass::LeafLeaf,
            "ll-same" => AugmentationClass::LeafLeafSameCenter(CenterSide::Small),
            "ll-same-large" => AugmentationClass::LeafLeafSameCenter(CenterSide::Large),
            "ll-diff" => AugmentationClass::LeafLeafDifferentCenters,
            "leaf-far-center" => AugmentationClass::LeafToFarCenter(CenterSide::Small),
            "leaf-far-center-large" => AugmentationClass::LeafToFarCenter(CenterSide::Large),
            other => return Err(ParseError::UnknownClass(other.to_string())),
        })
    }
}

/// The target subgraph of a containment query or Ramsey computation.
///
/// Equality is structural: all patterns in scope are canonically
/// parameterized, so no isomorphism test is performed. An all-zero
/// caterpillar of length `k >= 2` is the canonical encoding of the
/// path `P_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PatternSpec {
    Star(usize),
    Bistar(usize, usize),
    Caterpillar(Vec<usize>),
    PlusEdge(Box<PatternSpec>, AugmentationClass),
}

impl PatternSpec {
    pub fn star(n: usize) -> Result<PatternSpec, PatternError> {
        if n == 0 {
            return Err(PatternError::EmptyStar);
        }
        Ok(PatternSpec::Star(n))
    }

    /// `B(m, n)`; the leaf counts are normalized so that `m <= n`.
    pub fn bistar(a: usize, b: usize) -> Result<PatternSpec, PatternError> {
        if a == 0 || b == 0 {
            return Err(PatternError::EmptyBistarCenter);
        }
        Ok(PatternSpec::Bistar(a.min(b), a.max(b)))
    }

    pub fn caterpillar(counts: Vec<usize>) -> Result<PatternSpec, PatternError> {
        if counts.is_empty() {
            return Err(PatternError::EmptySpine);
        }
        if counts.iter().all(|&c| c == 0) {
            if counts.len() < 2 {
                return Err(PatternError::ShortPath);
            }
            return Ok(PatternSpec::Caterpillar(counts));
        }
        if counts[0] == 0 || *counts.last().unwrap() == 0 {
            return Err(PatternError::BareSpineEnd);
        }
        Ok(PatternSpec::Caterpillar(counts))
    }

    /// The path `P_k`, encoded as the all-zero caterpillar of length `k`.
    pub fn path(k: usize) -> Result<PatternSpec, PatternError> {
        if k < 2 {
            return Err(PatternError::ShortPath);
        }
        Ok(PatternSpec::Caterpillar(vec![0; k]))
    }

    pub fn plus_edge(
        base: PatternSpec,
        class: AugmentationClass,
    ) -> Result<PatternSpec, PatternError> {
        let realizable = match (&base, class) {
            (PatternSpec::Star(n), AugmentationClass::LeafLeaf) => *n >= 2,
            (PatternSpec::Star(_), _) => false,
            (
                PatternSpec::Bistar(m, _),
                AugmentationClass::LeafLeafSameCenter(CenterSide::Small),
            ) => *m >= 2,
            (
                PatternSpec::Bistar(_, n),
                AugmentationClass::LeafLeafSameCenter(CenterSide::Large),
            ) => *n >= 2,
            (PatternSpec::Bistar(..), AugmentationClass::LeafLeafDifferentCenters) => true,
            (PatternSpec::Bistar(..), AugmentationClass::LeafToFarCenter(_)) => true,
            (PatternSpec::Bistar(..), AugmentationClass::LeafLeaf) => false,
            _ => return Err(PatternError::UnsupportedBase),
        };
        if !realizable {
            return Err(PatternError::UnrealizableAugmentation {
                base: base.to_string(),
                class: class.to_string(),
            });
        }
        Ok(PatternSpec::PlusEdge(Box::new(base), class))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            PatternSpec::Star(n) => n + 1,
            PatternSpec::Bistar(m, n) => m + n + 2,
            PatternSpec::Caterpillar(counts) => counts.len() + counts.iter().sum::<usize>(),
            PatternSpec::PlusEdge(base, _) => base.vertex_count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            PatternSpec::PlusEdge(base, _) => base.edge_count() + 1,
            _ => self.vertex_count() - 1,
        }
    }

    /// Leaf counts per spine vertex for tree patterns; `None` for
    /// augmented (non-tree) patterns.
    pub fn leaf_counts(&self) -> Option<Vec<usize>> {
        match self {
            PatternSpec::Star(n) => Some(vec![*n]),
            PatternSpec::Bistar(m, n) => Some(vec![*m, *n]),
            PatternSpec::Caterpillar(counts) => Some(counts.clone()),
            PatternSpec::PlusEdge(..) => None,
        }
    }

    pub fn is_path(&self) -> bool {
        matches!(self, PatternSpec::Caterpillar(c) if c.iter().all(|&x| x == 0))
    }

    /// `Some(n)` when the pattern is structurally the star `S_n`,
    /// whatever its encoding.
    pub fn as_star(&self) -> Option<usize> {
        match self {
            PatternSpec::Star(n) => Some(*n),
            PatternSpec::Caterpillar(c) if c.len() == 1 => Some(c[0]),
            PatternSpec::Caterpillar(c) if c.len() == 2 && c.iter().all(|&x| x == 0) => Some(1),
            PatternSpec::Caterpillar(c) if c.len() == 3 && c.iter().all(|&x| x == 0) => Some(2),
            _ => None,
        }
    }

    /// `Some((m, n))` when the pattern is structurally the bistar `B(m, n)`.
    pub fn as_bistar(&self) -> Option<(usize, usize)> {
        match self {
            PatternSpec::Bistar(m, n) => Some((*m, *n)),
            PatternSpec::Caterpillar(c) if c.len() == 2 && c[0] >= 1 => {
                Some((c[0].min(c[1]), c[0].max(c[1])))
            }
            PatternSpec::Caterpillar(c) if c.len() == 4 && c.iter().all(|&x| x == 0) => {
                Some((1, 1))
            }
            _ => None,
        }
    }

    /// Parses the pattern grammar: `star <n>`, `bistar <m> <n>`,
    /// `caterpillar <n1> <n2> ...`, `path <k>`, `<base> +e <class>`.
    pub fn parse(text: &str) -> Result<PatternSpec, ParseError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        Self::parse_tokens(&tokens)
    }

    pub fn parse_tokens(tokens: &[&str]) -> Result<PatternSpec, ParseError> {
        if tokens.is_empty() {
            return Err(ParseError::Empty);
        }
        if let Some(pos) = tokens.iter().position(|&t| t == "+e") {
            if pos + 2 != tokens.len() {
                return Err(ParseError::Arity("+e".to_string()));
            }
            let base = Self::parse_tokens(&tokens[..pos])?;
            let class = AugmentationClass::parse(tokens[pos + 1])?;
            return Ok(PatternSpec::plus_edge(base, class)?);
        }
        let kind = tokens[0];
        let nums: Vec<usize> = tokens[1..]
            .iter()
            .map(|t| t.parse().map_err(|_| ParseError::BadNumber(t.to_string())))
            .collect::<Result<_, _>>()?;
        let spec = match kind {
            "star" => {
                if nums.len() != 1 {
                    return Err(ParseError::Arity(kind.to_string()));
                }
                PatternSpec::star(nums[0])?
            }
            "bistar" => {
                if nums.len() != 2 {
                    return Err(ParseError::Arity(kind.to_string()));
                }
                PatternSpec::bistar(nums[0], nums[1])?
            }
            "caterpillar" => PatternSpec::caterpillar(nums)?,
            "path" => {
                if nums.len() != 1 {
                    return Err(ParseError::Arity(kind.to_string()));
                }
                PatternSpec::path(nums[0])?
            }
            other => return Err(ParseError::UnknownKind(other.to_string())),
        };
        Ok(spec)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Star(n) => write!(f, "star {n}"),
            PatternSpec::Bistar(m, n) => write!(f, "bistar {m} {n}"),
            PatternSpec::Caterpillar(counts) => {
                if self.is_path() {
                    write!(f, "path {}", counts.len())
                } else {
                    write!(f, "caterpillar")?;
                    for c in counts {
                        write!(f, " {c}")?;
                    }
                    Ok(())
                }
            }
            PatternSpec::PlusEdge(base, class) => write!(f, "{base} +e {class}"),
        }
    }
}

/// Explicit vertex/edge form of a pattern, with a designated spine ordering.
#[derive(Clone, Debug)]
pub struct PatternGraph {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub spine: Vec<usize>,
}

impl PatternGraph {
    /// Per-vertex neighbor bitmasks.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n_vertices];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency()
            .iter()
            .map(|m| m.count_ones() as usize)
            .collect()
    }
}

/// Builds the explicit graph of a pattern.
///
/// Layout conventions are frozen so that certificates and augmentation
/// placements are reproducible:
/// - Star(n): center 0, leaves 1..=n.
/// - Bistar(m, n): small center 0, large center 1, small-center leaves
///   2..2+m, large-center leaves 2+m..2+m+n.
/// - Caterpillar: spine 0..k as a path, then the leaves of each spine
///   vertex in spine order.
/// - PlusEdge: the base layout plus one edge placed per its class.
pub fn pattern_graph(p: &PatternSpec) -> PatternGraph {
    match p {
        PatternSpec::Star(n) => PatternGraph {
            n_vertices: n + 1,
            edges: (1..=*n).map(|v| (0, v)).collect(),
            spine: vec![0],
        },
        PatternSpec::Bistar(m, n) => {
            let mut edges = vec![(0, 1)];
            for l in 0..*m {
                edges.push((0, 2 + l));
            }
            for l in 0..*n {
                edges.push((1, 2 + m + l));
            }
            PatternGraph {
                n_vertices: m + n + 2,
                edges,
                spine: vec![0, 1],
            }
        }
        PatternSpec::Caterpillar(counts) => {
            let k = counts.len();
            let mut edges: Vec<(usize, usize)> =
                (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            let mut next = k;
            for (i, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    edges.push((i, next));
                    next += 1;
                }
            }
            PatternGraph {
                n_vertices: next,
                edges,
                spine: (0..k).collect(),
            }
        }
        PatternSpec::PlusEdge(base, class) => {
            let mut g = pattern_graph(base);
            let extra = match (base.as_ref(), class) {
                (PatternSpec::Star(_), AugmentationClass::LeafLeaf) => (1, 2),
                (
                    PatternSpec::Bistar(..),
                    AugmentationClass::LeafLeafSameCenter(CenterSide::Small),
                ) => (2, 3),
                (
                    PatternSpec::Bistar(m, _),
                    AugmentationClass::LeafLeafSameCenter(CenterSide::Large),
                ) => (2 + m, 3 + m),
                (PatternSpec::Bistar(m, _), AugmentationClass::LeafLeafDifferentCenters) => {
                    (2, 2 + m)
                }
                (
                    PatternSpec::Bistar(..),
                    AugmentationClass::LeafToFarCenter(CenterSide::Small),
                ) => (1, 2),
                (
                    PatternSpec::Bistar(m, _),
                    AugmentationClass::LeafToFarCenter(CenterSide::Large),
                ) => (0, 2 + m),
                _ => unreachable!("constructor rejects unrealizable augmentations"),
            };
            let e = (extra.0.min(extra.1), extra.0.max(extra.1));
            debug_assert!(!g.edges.contains(&e));
            g.edges.push(e);
            g
        }
    }
}
