//! The acceptance gate: one test per criterion, each printing a single
//! pass line on success (run with `--nocapture` to see them).

mod common;

use common::{oracle_contains, small_patterns};
use ramsey_core::bounds::bistar_bounds;
use ramsey_core::certificate::{verify, Certificate, VerifyOutcome};
use ramsey_core::constructions::{circulant_star_coloring, lower_bound_witness};
use ramsey_core::embed::contains_mono_pattern;
use ramsey_core::graph::Color;
use ramsey_core::pattern::PatternSpec;
use ramsey_core::saturation::{verify_bistar_unsaturated, verify_star_saturated, Verdict};
use ramsey_core::search::{compute_ramsey, decide_arrow, RamseyComputation, SearchConfig};
use std::time::Instant;

fn pass(id: u32, what: &str, started: Instant) {
    println!(
        "criterion {id:2}: PASS  {what}  ({:.2?})",
        started.elapsed()
    );
}

fn exact_value(p: &PatternSpec, cfg: &SearchConfig) -> usize {
    match compute_ramsey(p, cfg) {
        RamseyComputation::Exact {
            value,
            lower_certificate,
            ..
        } => {
            assert_eq!(lower_certificate.n_vertices(), value - 1);
            assert!(lower_certificate.is_complete());
            for color in [Color::Blue, Color::Red] {
                assert!(!contains_mono_pattern(&lower_certificate, color, p));
            }
            value
        }
        RamseyComputation::BoundedOnly { interval, .. } => {
            panic!("expected exact value for `{p}`, got {interval}")
        }
    }
}

#[test]
fn criterion_01_exact_star_values() {
    let t = Instant::now();
    let cfg = SearchConfig::default();
    for (n, expected) in [(2, 3), (3, 6), (4, 7)] {
        let p = PatternSpec::star(n).unwrap();
        assert_eq!(exact_value(&p, &cfg), expected, "r(S_{n})");
    }
    pass(1, "r(S_2)=3 r(S_3)=6 r(S_4)=7, exhaustive", t);
}

#[test]
fn criterion_02_exact_small_bistars() {
    let t = Instant::now();
    let cfg = SearchConfig::default();
    assert_eq!(exact_value(&PatternSpec::path(4).unwrap(), &cfg), 5);
    assert_eq!(exact_value(&PatternSpec::bistar(1, 2).unwrap(), &cfg), 6);
    assert_eq!(exact_value(&PatternSpec::bistar(1, 3).unwrap(), &cfg), 7);
    pass(2, "r(P_4)=5 r(B(1,2))=6 r(B(1,3))=7, exhaustive", t);
}

#[test]
fn criterion_03_b22_is_8() {
    let t = Instant::now();
    let cfg = SearchConfig::default();
    let p = PatternSpec::bistar(2, 2).unwrap();
    let at7 = decide_arrow(&p, 7, &cfg);
    let cex = at7
        .counterexample()
        .expect("K_7 must admit a B(2,2)-free coloring");
    for color in [Color::Blue, Color::Red] {
        assert!(!contains_mono_pattern(cex, color, &p));
    }
    let at8 = decide_arrow(&p, 8, &cfg);
    assert!(
        at8.is_all_contain(),
        "K_8 must force a monochromatic B(2,2)"
    );
    pass(
        3,
        "r(B(2,2))=8: counterexample at K_7, exhaustive at K_8",
        t,
    );
}

#[test]
fn criterion_04_lower_bound_witness_suite() {
    let t = Instant::now();
    let mut checked = 0usize;
    let mut targets: Vec<PatternSpec> = Vec::new();
    for m in 1..=6usize {
        for n in m..=6usize {
            targets.push(PatternSpec::bistar(m, n).unwrap());
        }
    }
    for k in 2..=4usize {
        let mut counts = vec![0usize; k];
        loop {
            if let Ok(p) = PatternSpec::caterpillar(counts.clone()) {
                if !targets.contains(&p) {
                    targets.push(p);
                }
            }
            let mut i = 0;
            while i < k {
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
    for p in &targets {
        let w = lower_bound_witness(p);
        for color in [Color::Blue, Color::Red] {
            assert!(
                !contains_mono_pattern(&w, color, p),
                "witness for `{p}` contains a {color} copy"
            );
        }
        checked += 1;
    }
    for n in (3..=9usize).step_by(2) {
        let w = circulant_star_coloring(n).unwrap();
        let p = PatternSpec::star(n).unwrap();
        assert_eq!(w.n_vertices(), 2 * n - 1);
        for color in [Color::Blue, Color::Red] {
            assert!(!contains_mono_pattern(&w, color, &p));
        }
        checked += 1;
    }
    pass(4, &format!("{checked} lower-bound witnesses verified"), t);
}

#[test]
fn criterion_05_bound_table_conformance() {
    let t = Instant::now();
    for m in 1..=12usize {
        for n in m..=12usize {
            let b = bistar_bounds(m, n);
            assert!(b.lo <= b.hi, "inverted interval for B({m},{n})");
            if (m, n) == (2, 2) {
                assert!(b.is_exact() && b.lo == 8, "B(2,2) must pin to 8, got {b}");
            } else if m >= 2 && (n == m || n == m + 1) {
                assert!(
                    b.is_exact() && b.lo == 2 * m + n + 2,
                    "B({m},{n}) must pin to {}, got {b}",
                    2 * m + n + 2
                );
            } else if m == 1 {
                assert!(b.is_exact(), "B(1,{n}) is star-determined, got {b}");
            } else if m == 2 {
                assert!(
                    2 * n + 1 <= b.lo && b.hi <= 2 * n + 3,
                    "B(2,{n}) must sit in [{}, {}], got {b}",
                    2 * n + 1,
                    2 * n + 3
                );
            } else if m + 2 <= n && n <= 2 * m - 1 {
                assert_eq!(b.hi, 2 * n + m + 1, "hi for B({m},{n}), got {b}");
            }
        }
    }
    pass(5, "bistar bound table 1<=m<=n<=12 conforms", t);
}

#[test]
fn criterion_06_pruning_soundness() {
    let t = Instant::now();
    let on = SearchConfig::default();
    let mut off = SearchConfig::default();
    off.prune_containment = false;
    off.prune_degree = false;
    off.prune_maxdeg_lemma = false;
    let mut off_nosym = off.clone();
    off_nosym.symmetry_color_swap = false;
    let patterns = small_patterns(6);
    let mut runs = 0usize;
    for p in &patterns {
        for order in 2..=6usize {
            let a = decide_arrow(p, order, &on).is_all_contain();
            let b = decide_arrow(p, order, &off).is_all_contain();
            let c = decide_arrow(p, order, &off_nosym).is_all_contain();
            assert!(
                a == b && b == c,
                "classification differs for `{p}` at K_{order}: pruned={a} unpruned={b} raw={c}"
            );
            runs += 1;
        }
    }
    pass(
        6,
        &format!("{runs} decisions identical with pruning on/off"),
        t,
    );
}

#[test]
fn criterion_07_oracle_equivalence() {
    let t = Instant::now();
    use common::{all_colorings, random_coloring};
    use ramsey_core::embed::{contains_mono_bistar, contains_mono_star};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    let check = |c: &ramsey_core::graph::TwoColoring, exhaustive: bool| {
        let host = c.n_vertices();
        for color in [Color::Blue, Color::Red] {
            for n in 1..=host {
                let p = PatternSpec::star(n).unwrap();
                let fast = contains_mono_star(c, color, n);
                assert_eq!(fast, contains_mono_pattern(c, color, &p));
                if exhaustive {
                    assert_eq!(fast, oracle_contains(c, color, &p));
                }
            }
            for m in 1..=host {
                for n in m..=host {
                    if m + n + 2 > host {
                        continue;
                    }
                    let p = PatternSpec::bistar(m, n).unwrap();
                    let fast = contains_mono_bistar(c, color, m, n);
                    assert_eq!(
                        fast,
                        contains_mono_pattern(c, color, &p),
                        "B({m},{n}) on K_{host}"
                    );
                    if exhaustive {
                        assert_eq!(fast, oracle_contains(c, color, &p));
                    }
                }
            }
        }
    };

    for c in all_colorings(5) {
        check(&c, true);
    }
    let mut rng = StdRng::seed_from_u64(0xacce97);
    for host in 6..=9usize {
        for _ in 0..10_000 {
            check(&random_coloring(host, &mut rng), false);
        }
    }
    pass(
        7,
        "fast star/bistar tests agree with embedder and oracle",
        t,
    );
}

#[test]
fn criterion_08_degree_rules() {
    let t = Instant::now();
    use common::{all_colorings, random_coloring};
    use ramsey_core::embed::contains_mono_bistar;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    let check = |c: &ramsey_core::graph::TwoColoring| {
        let host = c.n_vertices();
        for m in 1..=host {
            for n in m..=host {
                if 2 * m + n + 2 > host {
                    continue;
                }
                // a large color degree anywhere forces a copy in some color
                let high_degree = (0..host).any(|v| {
                    c.color_degree(v, Color::Blue)
                        .max(c.color_degree(v, Color::Red))
                        >= m + n + 1
                });
                if high_degree {
                    assert!(
                        contains_mono_bistar(c, Color::Blue, m, n)
                            || contains_mono_bistar(c, Color::Red, m, n),
                        "degree rule fails for B({m},{n}) on K_{host}"
                    );
                }
                // bistar-free colorings keep every degree inside the window
                if !contains_mono_bistar(c, Color::Blue, m, n)
                    && !contains_mono_bistar(c, Color::Red, m, n)
                {
                    for v in 0..host {
                        let db = c.color_degree(v, Color::Blue);
                        assert!(
                            host - m - n - 1 <= db && db <= m + n,
                            "window violated at v={v} for B({m},{n}) on K_{host}"
                        );
                    }
                }
            }
        }
    };

    for c in all_colorings(5) {
        check(&c);
    }
    let mut rng = StdRng::seed_from_u64(0xde6);
    for host in 6..=9usize {
        for _ in 0..10_000 {
            check(&random_coloring(host, &mut rng));
        }
    }
    pass(
        8,
        "max-degree and degree-window rules hold, zero violations",
        t,
    );
}

#[test]
fn criterion_09_saturation_audits() {
    let t = Instant::now();
    for n in 2..=8usize {
        let report = verify_star_saturated(n).unwrap();
        assert!(report.witness_ok, "star witness failed at n={n}");
        assert_eq!(report.verdict, Verdict::Confirms, "star audit at n={n}");
    }
    let cfg = SearchConfig::default();
    let r11 = verify_bistar_unsaturated(1, 1, &cfg).unwrap();
    assert_eq!(r11.ramsey_value, 5);
    assert_ne!(r11.verdict, Verdict::Inconclusive);
    let shown = r11.to_string();
    assert!(
        shown.contains(&r11.verdict.to_string()),
        "verdict must be surfaced in the report"
    );
    if r11.verdict == Verdict::Contradicts {
        // the augmented B(1,1) is the 4-cycle; the report must be loud
        assert!(shown.contains("!!"), "contradiction must be loud:\n{shown}");
        println!("note: B(1,1) audit CONTRADICTS as the augmentation is C_4 (r = 6 > 5); surfaced report:\n{shown}");
    }
    for (m, n) in [(1, 2), (2, 2)] {
        let r = verify_bistar_unsaturated(m, n, &cfg).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::Confirms,
            "bistar audit at ({m},{n}):\n{r}"
        );
    }
    pass(
        9,
        "star audits n<=8 confirm; bistar audits (1,1),(1,2),(2,2) definitive",
        t,
    );
}

#[test]
fn criterion_10_determinism_and_certificates() {
    let t = Instant::now();
    let targets: Vec<(PatternSpec, usize)> = vec![
        (PatternSpec::star(2).unwrap(), 3),
        (PatternSpec::star(3).unwrap(), 6),
        (PatternSpec::star(4).unwrap(), 7),
        (PatternSpec::path(4).unwrap(), 5),
        (PatternSpec::bistar(1, 2).unwrap(), 6),
        (PatternSpec::bistar(1, 3).unwrap(), 7),
        (PatternSpec::bistar(2, 2).unwrap(), 8),
    ];
    for workers in [1usize, 2, 8] {
        let mut cfg = SearchConfig::default();
        cfg.worker_count = workers;
        for (p, expected) in &targets {
            assert_eq!(
                exact_value(p, &cfg),
                *expected,
                "`{p}` with {workers} workers"
            );
            assert!(decide_arrow(p, *expected, &cfg).is_all_contain());
            assert!(decide_arrow(p, expected - 1, &cfg)
                .counterexample()
                .is_some());
        }
    }
    // byte-identical certificate round-trips for every computed witness
    let cfg = SearchConfig::default();
    for (p, _) in &targets {
        if let RamseyComputation::Exact {
            lower_certificate, ..
        } = compute_ramsey(p, &cfg)
        {
            let cert = Certificate::no_mono(p.clone(), lower_certificate);
            let text = cert.emit();
            let reparsed = Certificate::parse(&text).unwrap();
            assert_eq!(reparsed.emit(), text, "round-trip for `{p}`");
            assert_eq!(verify(&reparsed), VerifyOutcome::Valid);
        } else {
            panic!("expected exact computation for `{p}`");
        }
    }
    pass(
        10,
        "classifications identical across 1/2/8 workers; certificates byte-stable",
        t,
    );
}
