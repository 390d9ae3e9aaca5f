//! Browser bindings. Each export takes and returns plain strings; results are
//! JSON objects with either the payload or an `error` field.

use ngsplit::bijection;
use ngsplit::census::{census_up_to, BalancedRatio};
use ngsplit::oracle::chromatic_number;
use ngsplit::{abc_partition, classify, emit_graph6, parse_graph6, profile, Graph};
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Census tables larger than this take too long for a page.
pub const BROWSER_CENSUS_LIMIT: usize = 7;

#[derive(Serialize)]
struct Abc {
    chi: usize,
    a: Vec<usize>,
    b: Vec<usize>,
    c: Vec<usize>,
    ng_kind: Option<String>,
}

fn describe(g: &Graph) -> Value {
    let label = classify(g);
    let m = profile(g).split_index;
    let abc = if g.order() == 0 {
        None
    } else {
        let chi = if label.split || label.ng3 {
            Some(m)
        } else if g.order() <= 12 {
            chromatic_number(g).ok()
        } else {
            None
        };
        chi.and_then(|chi| abc_partition(g, chi).ok()).map(|p| Abc {
            chi: p.chi,
            a: p.a.to_vec(),
            b: p.b.to_vec(),
            c: p.c.to_vec(),
            ng_kind: p.ng_kind.map(|k| k.to_string()),
        })
    };
    json!({
        "graph6": emit_graph6(g),
        "n": g.order(),
        "m": m,
        "labels": label.names(),
        "edges": g.edges(),
        "abc": abc,
    })
}

fn error(msg: impl ToString) -> Value {
    json!({ "error": msg.to_string() })
}

pub fn analyze_value(graph6: &str) -> Value {
    match parse_graph6(graph6.trim().as_bytes()) {
        Ok(g) => describe(&g),
        Err(e) => error(e),
    }
}

/// Apply a named map. `target_n` is only read by the maps that grow a graph;
/// zero means "not given".
pub fn apply_map_value(graph6: &str, map: &str, target_n: usize) -> Value {
    let g = match parse_graph6(graph6.trim().as_bytes()) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let needs_target = matches!(map, "ng3-grow" | "rebuild-a" | "rebuild-d");
    if needs_target && target_n == 0 {
        return error(format!("{map} needs a target order"));
    }
    let out = match map {
        "ng1-remove" => bijection::ng1_remove(&g),
        "split-to-ng1" => bijection::split_to_ng1(&g),
        "ng1-to-ng2" => bijection::ng1_to_ng2(&g),
        "ng2-to-ng1" => bijection::ng2_to_ng1(&g),
        "ng3-shrink" => bijection::ng3_shrink(&g),
        "ng3-grow" => bijection::ng3_grow(&g, target_n),
        "strip-a" => bijection::strip_a(&g),
        "rebuild-a" => bijection::rebuild_a(&g, target_n),
        "strip-ab" => bijection::strip_ab(&g),
        "rebuild-d" => bijection::rebuild_d(&g, target_n),
        other => return error(format!("unknown map {other}")),
    };
    match out {
        Ok(h) => describe(&h),
        Err(e) => error(e),
    }
}

pub fn census_value(max_n: usize) -> Value {
    if max_n > BROWSER_CENSUS_LIMIT {
        return error(format!(
            "the page counts up to {BROWSER_CENSUS_LIMIT} vertices"
        ));
    }
    match census_up_to(max_n) {
        Ok(rows) => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).unwrap();
                    let ratio = (r.split > 0)
                        .then(|| BalancedRatio::new(r.n, r.balanced, r.split).to_string());
                    v["balanced_ratio"] = json!(ratio);
                    v
                })
                .collect();
            json!({ "rows": rows })
        }
        Err(e) => error(e),
    }
}

/// Build a graph6 string from 0-indexed edges given as "u v" pairs separated
/// by commas or newlines.
pub fn edges_to_graph6_value(n: usize, edges: &str) -> Value {
    let mut pairs = Vec::new();
    for chunk in edges.split([',', '\n', ';']) {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let nums: Vec<_> = chunk
            .split(|c: char| c.is_whitespace() || c == '-')
            .filter(|s| !s.is_empty())
            .map(str::parse::<usize>)
            .collect();
        match nums.as_slice() {
            [Ok(u), Ok(v)] => pairs.push((*u, *v)),
            _ => return error(format!("cannot read edge \"{chunk}\"")),
        }
    }
    match Graph::build(n, &pairs) {
        Ok(g) => describe(&g),
        Err(e) => error(e),
    }
}

#[wasm_bindgen]
pub fn analyze(graph6: &str) -> String {
    analyze_value(graph6).to_string()
}

#[wasm_bindgen]
pub fn apply_map(graph6: &str, map: &str, target_n: usize) -> String {
    apply_map_value(graph6, map, target_n).to_string()
}

#[wasm_bindgen]
pub fn census(max_n: usize) -> String {
    census_value(max_n).to_string()
}

#[wasm_bindgen]
pub fn edges_to_graph6(n: usize, edges: &str) -> String {
    edges_to_graph6_value(n, edges).to_string()
}
