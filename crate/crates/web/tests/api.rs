use fbbgraph_web::api;
use serde_json::Value;

#[test]
fn explore_small_block() {
    let doc: Value = serde_json::from_str(&api::explore(4, "1,3,4,5").unwrap()).unwrap();
    assert_eq!(doc["nullity"], 4);
    assert_eq!(doc["elements"].as_array().unwrap().len(), 10);
    assert_eq!(doc["covers"].as_array().unwrap().len(), 13);
    assert_eq!(
        doc["graph"]["arcs"],
        serde_json::json!([[1, 2, 1], [1, 4, 3], [2, 3, 4], [2, 4, 5]])
    );
    let u4 = doc["elements"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "u4")
        .unwrap();
    assert_eq!(u4["level"], 5);
}

#[test]
fn explore_errors_are_messages() {
    assert!(api::explore(4, "1").unwrap_err().contains("[3, 4]"));
    assert!(api::explore(4, "1,x").is_err());
    assert!(api::explore(40, "1").is_err());
}

#[test]
fn rank_and_unrank() {
    let r: Value = serde_json::from_str(&api::rank_pair(4, 2, 3).unwrap()).unwrap();
    assert_eq!(r["label"], 4);
    let u: Value = serde_json::from_str(&api::unrank_label(4, 6).unwrap()).unwrap();
    assert_eq!((u["i"].as_u64(), u["j"].as_u64()), (Some(3), Some(4)));
    assert!(api::rank_pair(4, 3, 3).is_err());
}

#[test]
fn triangle_rows_as_strings() {
    let rows: Vec<Vec<String>> = serde_json::from_str(&api::triangle("d", 4).unwrap()).unwrap();
    assert_eq!(rows[4], ["3", "16", "15", "6", "1"]);
    assert!(rows[1].is_empty());
    assert!(api::triangle("z", 4).is_err());
}
