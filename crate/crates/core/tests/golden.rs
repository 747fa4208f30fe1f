//! Snapshot tests against `tests/golden/*.json`. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use hopfkit_core::finset::{
    proper_powerset, table_matches, FinPoset, PowersetMonad, PresheafCategory, TableMonad,
};

fn check_golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; rerun with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "{name} drifted");
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

#[test]
fn powerset_table() {
    let t = TableMonad::materialize(&PowersetMonad, 2);
    assert!(table_matches(&t, &PowersetMonad));
    let text = pretty(&t);
    check_golden("powerset_bound2.json", &text);
    let back = TableMonad::from_json(&text).unwrap();
    assert_eq!(back, t);
}

#[test]
fn proper_powerset_table() {
    let plus = proper_powerset();
    let t = TableMonad::materialize(&plus, 2);
    assert!(table_matches(&t, &plus));
    check_golden("proper_powerset_bound2.json", &pretty(&t));
}

#[test]
fn presheaf_inventory() {
    let cat = PresheafCategory::new(FinPoset::chain(2));
    let inv = cat.inventory(2);
    assert_eq!(inv.len(), 11);
    let lines: Vec<String> = inv.iter().map(|p| format!("{p:?}")).collect();
    check_golden("presheaf_01_inventory.json", &pretty(&lines));
}
