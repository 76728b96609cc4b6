#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_l3color"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

pub fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

pub fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

pub fn full_lists(n: usize) -> String {
    let entries: Vec<String> = (0..n).map(|v| format!("\"{v}\": [1, 2, 3]")).collect();
    format!("{{\"lists\": {{{}}}}}", entries.join(", "))
}

pub fn path_file(n: usize) -> String {
    let mut s = format!("{n} {}\n", n.saturating_sub(1));
    for i in 1..n {
        s += &format!("{} {}\n", i - 1, i);
    }
    s
}

pub const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
pub const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
