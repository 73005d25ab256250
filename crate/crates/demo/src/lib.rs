//! Browser demo bindings.
//!
//! Three operations over the edge-list text format, each returning a JSON
//! string so the page needs no structured marshalling: `check_graph`
//! reports chordality, independence number, and any blocking quadruple with
//! its obstruction certificate; `represent_graph` builds and verifies a
//! circular-arc model and returns it with an SVG drawing; `generate_graph`
//! emits a seeded random chordal edge list to play with.

use chordarc::arcs::construct_representation;
use chordarc::chordal::{alpha_and_cover, is_chordal};
use chordarc::gen::{random_chordal, GenParams};
use chordarc::graph::Graph;
use chordarc::obstruction::{extract_obstruction, find_blocking_quadruple};
use chordarc::oracle::brute_force_alpha;
use chordarc::render::arc_svg;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn parse(text: &str) -> Result<Graph, String> {
    Graph::parse(text).map_err(|e| e.to_string())
}

fn check_value(text: &str) -> serde_json::Value {
    let g = match parse(text) {
        Ok(g) => g,
        Err(e) => return json!({ "error": e }),
    };
    let peo = is_chordal(&g);
    let alpha = match &peo {
        Some(peo) => alpha_and_cover(&g, peo).ok().map(|(ind, _)| ind.len()),
        None if g.n() <= 18 => Some(brute_force_alpha(&g)),
        None => None,
    };
    let bq = find_blocking_quadruple(&g);
    let cert = bq.as_ref().and_then(|bq| extract_obstruction(&g, bq).ok());
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "chordal": peo.is_some(),
        "alpha": alpha,
        "bq": bq.as_ref().map(|b| b.quad.map(|v| g.label(v).to_string())),
        "obstruction": cert.map(|c| c.to_json(&g)),
    })
}

fn represent_value(text: &str) -> serde_json::Value {
    let g = match parse(text) {
        Ok(g) => g,
        Err(e) => return json!({ "ok": false, "error": e }),
    };
    match construct_representation(&g) {
        Ok(rep) => json!({
            "ok": true,
            "rep": rep.to_json(&g),
            "svg": arc_svg(&g, &rep),
        }),
        Err(e) => json!({ "ok": false, "error": e.to_string() }),
    }
}

fn generate_value(n: usize, seed: u64, alpha_max: i32) -> serde_json::Value {
    if n == 0 || n > 64 {
        return json!({ "ok": false, "error": "vertex count must be between 1 and 64" });
    }
    let mut params = GenParams::new(n, seed);
    if alpha_max > 0 {
        params.alpha_max = Some(alpha_max as usize);
    }
    match random_chordal(&params) {
        Ok(g) => json!({ "ok": true, "edges": g.to_edge_list() }),
        Err(e) => json!({ "ok": false, "error": e.to_string() }),
    }
}

#[wasm_bindgen]
pub fn check_graph(text: &str) -> String {
    check_value(text).to_string()
}

#[wasm_bindgen]
pub fn represent_graph(text: &str) -> String {
    represent_value(text).to_string()
}

#[wasm_bindgen]
pub fn generate_graph(n: usize, seed: u64, alpha_max: i32) -> String {
    generate_value(n, seed, alpha_max).to_string()
}
