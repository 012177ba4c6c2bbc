#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use kbracket::diagram::format::parse;
use kbracket::Diagram;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.diag"))
}

pub fn fixture(name: &str) -> Diagram {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    parse(&text).expect("fixture parses")
}
