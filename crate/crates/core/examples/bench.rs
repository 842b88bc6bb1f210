use ramsey_core::pattern::{AugmentationClass, PatternSpec};
use ramsey_core::search::{decide_arrow, SearchConfig};
use std::time::Instant;

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "b22".into());
    let workers: usize = std::env::args()
        .nth(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let mut cfg = SearchConfig::default();
    cfg.worker_count = workers;
    let (p, order) = match which.as_str() {
        "b22" => (PatternSpec::bistar(2, 2).unwrap(), 8),
        "b22e" => (
            PatternSpec::plus_edge(
                PatternSpec::bistar(2, 2).unwrap(),
                AugmentationClass::LeafLeafDifferentCenters,
            )
            .unwrap(),
            8,
        ),
        "b12e" => (
            PatternSpec::plus_edge(
                PatternSpec::bistar(1, 2).unwrap(),
                AugmentationClass::LeafLeafDifferentCenters,
            )
            .unwrap(),
            6,
        ),
        other => panic!("unknown bench {other}"),
    };
    let t = Instant::now();
    let out = decide_arrow(&p, order, &cfg);
    println!(
        "{which} workers={workers}: all_contain={} nodes={} elapsed={:?}",
        out.is_all_contain(),
        out.nodes_explored(),
        t.elapsed()
    );
}
