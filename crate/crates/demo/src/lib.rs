//! Browser bindings: build a spectrum blocker, check a document, draw it.
//!
//! Each export wraps a plain function returning `Result<String, String>` so
//! the logic is testable off the browser.

use serde_json::json;
use triblock::characterization::{verdict, Recognized};
use triblock::constructions::{build_spectrum_blocker_traced, max_reachable};
use triblock::document::BlockerDocument;
use triblock::render::{render_svg, RenderOptions};
use triblock::witness_triangulation;
use wasm_bindgen::prelude::*;

/// Largest size the constructions reach for `n`, or 0 when `n < 4`.
pub fn reach(n: usize) -> usize {
    if n < 4 {
        0
    } else {
        max_reachable(n)
    }
}

/// A spectrum blocker as a JSON document.
pub fn construct(n: usize, t: usize) -> Result<String, String> {
    if n > 200 {
        return Err(format!("n = {n} is more than this demo draws (200)"));
    }
    let built = build_spectrum_blocker_traced(n, t).map_err(|e| e.to_string())?;
    Ok(BlockerDocument::from_edge_set(&built.blocker)
        .with("construction", "spectrum")
        .with("band", built.band.label())
        .to_json())
}

/// Verdict of a JSON document, as a JSON object.
pub fn check(document: &str) -> Result<String, String> {
    let doc = BlockerDocument::parse(document).map_err(|e| e.to_string())?;
    let b = doc.to_edge_set().map_err(|e| e.to_string())?;
    let v = verdict(&b);
    let report = json!({
        "n": b.n(),
        "t": b.len(),
        "is_blocker": v.is_blocker,
        "is_saturated": v.is_saturated,
        "classification": v.recognized.as_ref().map(Recognized::label),
    });
    Ok(report.to_string())
}

/// SVG of a JSON document; with `witness`, a non-blocker gets a
/// triangulation avoiding it drawn underneath.
pub fn render(document: &str, witness: bool) -> Result<String, String> {
    let doc = BlockerDocument::parse(document).map_err(|e| e.to_string())?;
    let b = doc.to_edge_set().map_err(|e| e.to_string())?;
    let mut opts = RenderOptions::default();
    if let Some(Recognized::OneAbove(c)) = verdict(&b).recognized {
        opts.special = Some(c.special_edges(b.n()));
    }
    if witness {
        opts.witness = witness_triangulation(&b.complement()).map(|t| t.into_diagonals());
    }
    Ok(render_svg(&b, &opts))
}

#[wasm_bindgen(js_name = maxReachable)]
pub fn max_reachable_js(n: usize) -> usize {
    reach(n)
}

#[wasm_bindgen(js_name = construct)]
pub fn construct_js(n: usize, t: usize) -> Result<String, JsValue> {
    construct(n, t).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = check)]
pub fn check_js(document: &str) -> Result<String, JsValue> {
    check(document).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = render)]
pub fn render_js(document: &str, witness: bool) -> Result<String, JsValue> {
    render(document, witness).map_err(|e| JsValue::from_str(&e))
}
