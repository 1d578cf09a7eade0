#![allow(dead_code)]

use std::path::PathBuf;

use hgkit::catalog::transitive_group;
use hgkit::descent::{validate_presentation, CheckedPresentation, SplittingFieldPresentation};
use hgkit::{ExtensionDatum, GroupDocument, PermGroup};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn golden(name: &str) -> Vec<Vec<String>> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    rdr.records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

pub fn grp(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_cycles(n, gens).unwrap()
}

pub fn transitive(degree: usize, name: &str) -> ExtensionDatum {
    let g = transitive_group(degree, name).unwrap().group().unwrap();
    ExtensionDatum::from_transitive(g).unwrap()
}

pub fn field_files(name: &str) -> [PathBuf; 3] {
    let dir = data_dir().join("fields");
    [
        dir.join(format!("{}.json", name)),
        dir.join(format!("{}.group.json", name)),
        dir.join(format!("{}.subgroup.json", name)),
    ]
}

pub fn fixture(name: &str) -> (CheckedPresentation, ExtensionDatum) {
    let [f, g, gp] = field_files(name);
    let read = |p: &PathBuf| std::fs::read_to_string(p).unwrap();
    let p = SplittingFieldPresentation::from_json(&read(&f)).unwrap();
    let g: GroupDocument = serde_json::from_str(&read(&g)).unwrap();
    let gp: GroupDocument = serde_json::from_str(&read(&gp)).unwrap();
    let g = g.to_group().unwrap();
    let e = ExtensionDatum::new(&g, &gp.to_group().unwrap()).unwrap();
    (validate_presentation(&p, &g).unwrap(), e)
}
