#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load_golden(name: &str) -> String {
    let path = fixture_path("golden").join(name);
    fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("failed to load golden file {}: {e}", path.display()))
}

/// Compares against a golden file, rewriting it when UPDATE_GOLDEN is set.
pub fn assert_golden(name: &str, actual: &str) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(fixture_path("golden").join(name), actual).expect("update golden file");
        return;
    }
    let expected = load_golden(name);
    if actual != expected {
        eprintln!("golden mismatch: {name}\n--- expected\n{expected}--- actual\n{actual}");
        panic!("golden file mismatch: {name}");
    }
}

/// Runs the CLI in-process: (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["hexsticks"];
    argv.extend_from_slice(args);
    let code = hexsticks::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is utf-8"),
        String::from_utf8(err).expect("stderr is utf-8"),
    )
}

/// Deterministic pseudo-random file contents.
pub fn seeded_bytes(seed: u64, len: usize) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = vec![0u8; len];
    rng.fill_bytes(&mut data);
    data
}
