#![allow(dead_code)]

use std::path::PathBuf;

use polardeg::input::{parse_input, InputSpec};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

pub fn corpus_path(name: &str) -> PathBuf {
    corpus_dir().join(format!("{name}.txt"))
}

pub fn load(name: &str) -> InputSpec {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap();
    parse_input(&text).unwrap()
}

/// Every corpus entry, sorted by name.
pub fn corpus() -> Vec<(String, InputSpec)> {
    let mut names: Vec<String> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.ok()?.path();
            (p.extension()? == "txt").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}
