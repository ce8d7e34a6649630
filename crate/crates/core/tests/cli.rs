// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn trelax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trelax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("structured output is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn bounds_command() {
    let out = trelax(&["bounds", "--parts", "7,7,1,1,1", "--t", "3", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["bounds"]["lower_2t"], 3);
    assert_eq!(doc["bounds"]["upper_2t"], 3);

    let doc = json(&trelax(&["bounds", "--parts", "6,6,3,3", "--t", "3", "--format", "structured"]));
    assert_eq!(doc["bounds"]["lower_2t"], 3);
    assert_eq!(doc["bounds"]["upper_2t"], 4);

    let doc = json(&trelax(&["bounds", "--parts", "1", "--t", "1", "--format", "structured"]));
    for key in ["lower_2t", "upper_2t", "upper_delta", "lower_chi"] {
        assert_eq!(doc["bounds"][key], 1, "{key}");
    }
    let text = stdout(&trelax(&["bounds", "--parts", "7,7,1,1,1", "--t", "3"]));
    assert!(text.contains("lower_2t     3"), "{text}");
}

#[test]
fn greedy_on_complete_graph() {
    let out = trelax(&["greedy", "--parts", "1,1,1,1,1,1,1,1,1,1", "--t", "3", "--format", "structured"]);
    assert_eq!(json(&out)["num_colors"], 3);
    let text = stdout(&trelax(&["greedy", "--parts", "1,1,1,1,1,1,1,1,1,1", "--t", "3"]));
    assert!(text.contains(": 3 colors"), "{text}");
}

#[test]
fn greedy_trace_table() {
    let text = stdout(&trelax(&["greedy", "--parts", "13,8,3,3,3,3", "--t", "7"]));
    assert!(text.contains("f^-1(2) = ( 4,  0,  3,  3,  0,  0)  ->  ( 2,  1,  0,  0,  3,  3)"), "{text}");
}

#[test]
fn counterexample_command() {
    let text = stdout(&trelax(&["counterexample", "--t", "7"]));
    assert!(text.contains("exact: 3, greedy: 4"), "{text}");
    let doc = json(&trelax(&["counterexample", "--t", "8", "--search", "--format", "structured"]));
    assert_eq!(doc["exact"], 3);
    assert_eq!(doc["exact_method"], "search");
    assert_eq!(doc["greedy"], 4);
    assert_eq!(doc["certificate_valid"], true);

    let out = trelax(&["counterexample", "--t", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_accepts_the_three_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "g.json",
        r#"{"t": 7, "parts": [13, 8, 3, 3, 3, 3],
            "colors": [[13,0,0,0,0,0], [0,4,3,3,0,0], [0,4,0,0,3,3]]}"#,
    );
    let out = trelax(&["verify", "--coloring", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid\n");
}

#[test]
fn greedy_output_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = trelax(&["greedy", "--parts", "2,9,4,4,1", "--t", "3", "--format", "structured"]);
    let file = write(dir.path(), "greedy.json", &stdout(&out));
    let out = trelax(&["verify", "--coloring", &file, "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.json", r#"{"t": 1, "parts": [2, 2], "colors": [[2, 2]]}"#);
    let out = trelax(&["verify", "--coloring", &file, "--format", "structured"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json(&out);
    assert_eq!(doc["valid"], false);
    assert_eq!(doc["violations"].as_array().unwrap().len(), 2);
    assert_eq!(doc["violations"][0]["excess"], 1);

    let file = write(dir.path(), "short.json", r#"{"t": 1, "parts": [2, 2], "colors": [[2, 1]]}"#);
    let out = trelax(&["verify", "--coloring", &file]);
    assert_eq!(out.status.code(), Some(2));

    let file = write(dir.path(), "junk.json", "{not json");
    assert_eq!(trelax(&["verify", "--coloring", &file]).status.code(), Some(1));
}

#[test]
fn instance_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k.json", "{\n  \"parts\" : [3, 3, 13, 8, 3, 3],\n  \"t\" : 7\n}\n");
    let doc = json(&trelax(&["exact", "--instance", &file, "--format", "structured"]));
    assert_eq!(doc["status"], "solved");
    assert_eq!(doc["chi"], 3);
    assert_eq!(doc["instance"]["parts"], serde_json::json!([3, 3, 13, 8, 3, 3]));
    let doc = json(&trelax(&["sparse", "--instance", &file, "--format", "structured"]));
    assert_eq!(doc["beta_t"], 14);
    assert_eq!(doc["picks"], serde_json::json!([0, 0, 7, 7, 0, 0]));
}

#[test]
fn exit_statuses() {
    assert_eq!(trelax(&["bounds", "--parts", "3,0", "--t", "1"]).status.code(), Some(1));
    assert_eq!(trelax(&["bounds", "--parts", "3", "--t", "-1"]).status.code(), Some(1));
    assert_eq!(trelax(&["bounds"]).status.code(), Some(1));
    assert_eq!(trelax(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(trelax(&["bounds", "--instance", "/nonexistent.json"]).status.code(), Some(1));
    let out = trelax(&["exact", "--parts", "6,6,6,5,5", "--t", "4", "--budget", "10", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(3));
    let doc = json(&out);
    assert_eq!(doc["status"], "inconclusive");
    assert_eq!(doc["lower"], 4);
    assert_eq!(doc["upper"], 5);
    assert_eq!(trelax(&["--help"]).status.code(), Some(0));
}

#[test]
fn bench_command() {
    let out = trelax(&[
        "bench", "--max-s", "4", "--max-n", "6", "--max-t", "4", "--format", "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["instances"], 4 * 209);
    assert_eq!(doc["inconclusive"], 0);
    assert_eq!(doc["greedy_suboptimal"], 0);
    assert_eq!(doc["max_ratio"], 1.0);
}
