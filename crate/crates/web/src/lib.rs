//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string. The plain functions in [`api`] carry
//! the logic so they can be tested natively.

use wasm_bindgen::prelude::*;

pub mod api {
    use fbbgraph::correspondence::phi;
    use fbbgraph::counting::{emit_triangle, CountKind, TableFormat};
    use fbbgraph::render::{representation_text, GraphDoc};
    use fbbgraph::{build_fbb, rank, unrank, Error, RankSet};
    use serde_json::json;

    /// Largest `n` the page lets a user build a block for.
    pub const MAX_BLOCK_N: u32 = 12;

    /// Largest triangle the page will request.
    pub const MAX_TABLE_N: u32 = 30;

    /// The block for `ranks` with layout levels, its digraph and its
    /// adjunct representation.
    pub fn explore(n: u32, ranks: &str) -> Result<String, String> {
        if n > MAX_BLOCK_N {
            return Err(format!("n is limited to {MAX_BLOCK_N} here"));
        }
        let inner = || -> Result<String, Error> {
            let f = build_fbb(n, &RankSet::parse(n, ranks)?)?;
            let p = f.poset();
            let levels = p.levels();
            let elements: Vec<_> = p
                .elements()
                .iter()
                .zip(&levels)
                .map(|(e, level)| json!({"id": e.id.0, "name": e.name, "level": level}))
                .collect();
            let covers: Vec<_> = p.covers().map(|(a, b)| [a.0, b.0]).collect();
            let graph = GraphDoc::of(&phi(&f)?);
            let doc = json!({
                "n": n,
                "nullity": f.nullity(),
                "ranks": f.ranks().iter().collect::<Vec<_>>(),
                "elements": elements,
                "covers": covers,
                "graph": graph,
                "representation": representation_text(&f.adjunct_representation()?),
            });
            Ok(doc.to_string())
        };
        inner().map_err(|e| e.to_string())
    }

    pub fn rank_pair(n: u32, i: u32, j: u32) -> Result<String, String> {
        let k = rank(n, i, j).map_err(|e| e.to_string())?;
        Ok(json!({"n": n, "i": i, "j": j, "label": k.get()}).to_string())
    }

    pub fn unrank_label(n: u32, k: u32) -> Result<String, String> {
        let (i, j) = unrank(n, k as u64).map_err(|e| e.to_string())?;
        Ok(json!({"n": n, "i": i, "j": j, "label": k}).to_string())
    }

    /// Triangle rows as JSON with the values written as strings, since they
    /// outgrow JavaScript numbers.
    pub fn triangle(kind: &str, max_n: u32) -> Result<String, String> {
        if max_n > MAX_TABLE_N {
            return Err(format!("max_n is limited to {MAX_TABLE_N} here"));
        }
        let kind: CountKind = kind.parse().map_err(|e: Error| e.to_string())?;
        let csv = emit_triangle(kind, max_n, TableFormat::Csv).map_err(|e| e.to_string())?;
        let mut rows: Vec<Vec<String>> = vec![Vec::new(); max_n as usize + 1];
        for line in csv.lines().skip(1) {
            let mut parts = line.split(',');
            let n: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or("bad csv row")?;
            let _q = parts.next();
            rows[n].push(parts.next().ok_or("bad csv row")?.to_string());
        }
        Ok(json!(rows).to_string())
    }
}

fn to_js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explore(n: u32, ranks: &str) -> Result<String, JsValue> {
    to_js(api::explore(n, ranks))
}

#[wasm_bindgen(js_name = rankPair)]
pub fn rank_pair(n: u32, i: u32, j: u32) -> Result<String, JsValue> {
    to_js(api::rank_pair(n, i, j))
}

#[wasm_bindgen(js_name = unrankLabel)]
pub fn unrank_label(n: u32, k: u32) -> Result<String, JsValue> {
    to_js(api::unrank_label(n, k))
}

#[wasm_bindgen]
pub fn triangle(kind: &str, max_n: u32) -> Result<String, JsValue> {
    to_js(api::triangle(kind, max_n))
}
