//! Exact Ramsey numbers of small trees — stars, bistars, caterpillars and
//! their single-edge augmentations — by exhaustive 2-coloring search with
//! degree-window pruning, plus the explicit extremal colorings that
//! certify every lower bound.

pub mod bounds;
pub mod certificate;
pub mod constructions;
pub mod embed;
pub mod graph;
pub mod pattern;
pub mod saturation;
pub mod search;

pub use bounds::{BoundInterval, BoundSource, SpineSplit};
pub use graph::{Color, EdgeIndex, TwoColoring};
pub use pattern::{AugmentationClass, CenterSide, PatternGraph, PatternSpec};
pub use search::{RamseyComputation, SearchConfig, SearchOutcome};
