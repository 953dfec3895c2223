//! Helpers for driving the `pathdeg` binary and checking its JSON output.

#![allow(dead_code)]

pub mod schema;

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    pub fn json(&self) -> Value {
        serde_json::from_str(self.stdout.trim())
            .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }
}

/// Runs the binary with `cache` as its cache file.
pub fn pathdeg(cache: &Path, args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_pathdeg"))
        .args(args)
        .env("PATHDEG_CACHE", cache)
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

/// Validates `value` against the named schema file, panicking with every error.
pub fn assert_schema(name: &str, value: &Value) {
    let errors = schema::Validator::new(schema_dir()).validate(name, value);
    assert!(errors.is_empty(), "{name}: {errors:#?}\n{value}");
}
