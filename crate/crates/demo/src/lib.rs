//! Browser demo bindings: three small operations over the core library,
//! each returning a self-contained string (JSON or SVG) so the page needs
//! no framework and no serializer on the JS side.

use ramsey_core::bounds::caterpillar_bounds;
use ramsey_core::graph::{Color, TwoColoring};
use ramsey_core::pattern::PatternSpec;
use ramsey_core::search::{decide_arrow, witness_at, SearchConfig, SearchOutcome};
use std::time::Duration;
use wasm_bindgen::prelude::wasm_bindgen;

fn json_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn json_error(msg: &str) -> String {
    format!("{{\"error\":\"{}\"}}", json_escape(msg))
}

fn parse(pattern: &str) -> Result<PatternSpec, String> {
    PatternSpec::parse(pattern.trim()).map_err(|e| e.to_string())
}

/// Closed-form bound interval and basic shape data for a pattern
/// expression, as a JSON object.
#[wasm_bindgen]
pub fn bounds_info(pattern: &str) -> String {
    let p = match parse(pattern) {
        Ok(p) => p,
        Err(e) => return json_error(&e),
    };
    match caterpillar_bounds(&p) {
        Ok(b) => format!(
            "{{\"pattern\":\"{}\",\"vertices\":{},\"edges\":{},\"lo\":{},\"loSource\":\"{}\",\
             \"hi\":{},\"hiSource\":\"{}\",\"exact\":{}}}",
            json_escape(&p.to_string()),
            p.vertex_count(),
            p.edge_count(),
            b.lo,
            b.lo_source,
            b.hi,
            b.hi_source,
            b.is_exact()
        ),
        Err(_) => json_error(&format!(
            "`{p}` is an augmented pattern with no closed-form bounds; use the decision search"
        )),
    }
}

/// An extremal coloring of `K_order` avoiding the pattern, rendered as an
/// SVG with blue and red edges on a circular vertex layout. Returns a
/// JSON object with either `svg` or `error`.
#[wasm_bindgen]
pub fn witness_svg(pattern: &str, order: u32) -> String {
    let p = match parse(pattern) {
        Ok(p) => p,
        Err(e) => return json_error(&e),
    };
    if order == 0 || order > 24 {
        return json_error("the demo renders witnesses for 1 <= order <= 24");
    }
    match witness_at(&p, order as usize) {
        Some(c) => format!(
            "{{\"pattern\":\"{}\",\"order\":{order},\"svg\":\"{}\"}}",
            json_escape(&p.to_string()),
            json_escape(&render_svg(&c))
        ),
        None => json_error(&format!("no known construction avoids `{p}` on K_{order}")),
    }
}

/// Exhaustively decides whether every 2-coloring of `K_order` contains a
/// monochromatic copy. Small orders only, with a defensive budget so the
/// page stays responsive. Returns JSON: `verdict` plus an SVG
/// counterexample when one exists.
#[wasm_bindgen]
pub fn decide_small(pattern: &str, order: u32) -> String {
    let p = match parse(pattern) {
        Ok(p) => p,
        Err(e) => return json_error(&e),
    };
    if !(2..=9).contains(&order) {
        return json_error("the demo decides orders between 2 and 9");
    }
    let mut cfg = SearchConfig::default();
    cfg.node_budget = 200_000_000;
    cfg.wall_budget = Duration::from_secs(20);
    let key = json_escape(&p.to_string());
    match decide_arrow(&p, order as usize, &cfg) {
        SearchOutcome::AllColoringsContain { nodes_explored } => format!(
            "{{\"pattern\":\"{key}\",\"order\":{order},\"verdict\":\"arrow\",\
             \"nodes\":{nodes_explored}}}"
        ),
        SearchOutcome::Counterexample {
            coloring,
            nodes_explored,
        } => format!(
            "{{\"pattern\":\"{key}\",\"order\":{order},\"verdict\":\"counterexample\",\
             \"nodes\":{nodes_explored},\"svg\":\"{}\"}}",
            json_escape(&render_svg(&coloring))
        ),
        SearchOutcome::BudgetExhausted { nodes_explored } => format!(
            "{{\"pattern\":\"{key}\",\"order\":{order},\"verdict\":\"inconclusive\",\
             \"nodes\":{nodes_explored}}}"
        ),
    }
}

/// Circular layout; blue edges solid blue, red edges light red, vertices
/// labeled.
fn render_svg(c: &TwoColoring) -> String {
    let n = c.n_vertices();
    let size = 360.0f64;
    let r = size / 2.0 - 28.0;
    let cx = size / 2.0;
    let cy = size / 2.0;
    let pos: Vec<(f64, f64)> = (0..n)
        .map(|v| {
            let angle = std::f64::consts::TAU * v as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
            (cx + r * angle.cos(), cy + r * angle.sin())
        })
        .collect();
    let mut svg = format!(
        "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 {size} {size}' width='{size}' height='{size}'>"
    );
    // red underneath so the sparser blue class stays readable
    for color in [Color::Red, Color::Blue] {
        let (stroke, width) = match color {
            Color::Blue => ("#2456d8", 2.0),
            Color::Red => ("#e08585", 1.2),
        };
        for e in c.edges_of(color) {
            let (x1, y1) = pos[e.i()];
            let (x2, y2) = pos[e.j()];
            svg.push_str(&format!(
                "<line x1='{x1:.1}' y1='{y1:.1}' x2='{x2:.1}' y2='{y2:.1}' stroke='{stroke}' stroke-width='{width}'/>"
            ));
        }
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        svg.push_str(&format!(
            "<circle cx='{x:.1}' cy='{y:.1}' r='11' fill='#fff' stroke='#333'/>\
             <text x='{x:.1}' y='{:.1}' text-anchor='middle' font-size='11' font-family='sans-serif'>{v}</text>",
            y + 4.0
        ));
    }
    svg.push_str("</svg>");
    svg
}
