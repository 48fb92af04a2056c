//! Replays the checked-in fuzz seeds through the fuzz targets' round-trip
//! properties, so the seeds stay meaningful without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use ortho_core::constructions::parse_tables;
use ortho_core::text::{format_section, parse_section, parse_vector};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            (path.display().to_string(), text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn vector_seeds_round_trip() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_vector") {
        if let Ok(v) = parse_vector(&text) {
            assert_eq!(parse_vector(&v.to_string()), Ok(v), "{name}");
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn section_seeds_round_trip() {
    for (name, text) in seeds("parse_section") {
        for section in ["basis", "witness"] {
            if let Ok(vs) = parse_section(&text, section) {
                let printed = format_section(section, &vs);
                assert_eq!(parse_section(&printed, section), Ok(vs), "{name}");
            }
        }
    }
}

#[test]
fn table_seeds_round_trip() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_tables") {
        if let Ok(tables) = parse_tables(&text) {
            let printed: String = tables.iter().map(|t| t.to_string()).collect();
            assert_eq!(parse_tables(&printed), Ok(tables), "{name}");
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}
