use std::process::{Command, Output};

use serde_json::Value;

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer")).args(args).env_remove("BRAUER_MAX_DIM").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn same_block_is_a_predicate() {
    let o = brauer(&["same-block", "--delta", "1", "6,4,4,2,1", "5,2,2"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("different", 1));
    let o = brauer(&["same-block", "--delta", "2", "6,5,5,2,1", "6,4,1"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("same", 0));
    let o = brauer(&["same-block", "--delta", "-1", "3", "1"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn minimal_reports_block_minimum() {
    let o = brauer(&["minimal", "--delta", "1", "2,2"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("2,2 (not minimal; block minimum 0)", 1));
    let o = brauer(&["minimal", "--delta", "1", "3,1"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("3,1 (minimal)", 0));
    let o = brauer(&["minimal", "--delta", "1", "7,6,6,5,2,2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["block_minimum"], serde_json::json!([7, 5, 1, 1, 1, 1]));
}

#[test]
fn blocks_json_joins_two_two_with_empty() {
    let o = brauer(&["blocks", "--n", "4", "--delta", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["n"].as_u64(), v["delta"].as_i64()), (Some(4), Some(1)));
    let blocks = v["blocks"].as_array().unwrap();
    let joint = blocks
        .iter()
        .find(|b| b["members"].as_array().unwrap().contains(&serde_json::json!([2, 2])))
        .unwrap();
    assert!(joint["members"].as_array().unwrap().contains(&serde_json::json!([])));
    assert_eq!(joint["minimal"], serde_json::json!([]));
    let total: usize = blocks.iter().map(|b| b["members"].as_array().unwrap().len()).sum();
    assert_eq!(total, 8);
}

#[test]
fn render_grids() {
    assert_eq!(stdout(&brauer(&["render", "0"])), "(empty)\n");
    assert_eq!(stdout(&brauer(&["render", "2,1"])), " 0  1\n-1\n");
    assert_eq!(stdout(&brauer(&["render", "3,2", "1"])), " .  1  2\n-1  0\n");
    assert_eq!(stdout(&brauer(&["render", "--charges", "--delta", "2", "2"])), "1 3\n");
}

#[test]
fn lattice_dot_has_cube_shape() {
    let o = brauer(&["render", "--format", "dot", "--delta", "1", "6,5,4,3,2,1", "5,4,3,2,1"]);
    assert_eq!(code(&o), 0);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 12);
    assert_eq!(dot.matches("label=").count(), 8);
    let o = brauer(&["lattice", "--delta", "1", "6,5,4,3,2,1", "5,4,3,2,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 3);
}

#[test]
fn hom_target_descends_to_minimum() {
    let o = brauer(&["hom-target", "--delta", "1", "2,2"]);
    assert_eq!(stdout(&o), "2,2 -> 0  removed: (1,1) (1,2) (2,1) (2,2)\n0 (minimal)\n");
    let o = brauer(&["hom-target", "--delta", "1", "7,6,6,5,4,4,2", "5,3,2,2,1,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("7,6,6,5,4,4,2 -> 7,6,4,4,3,2,2\n"));
    let o = brauer(&["hom-target", "--delta", "1", "7,6,6,5,4,4,2", "5,3,2,2,2,1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn hat_lists_strips() {
    let o = brauer(&["hat", "--delta", "1", "7,7,6,5,4,2,1,1"]);
    let text = stdout(&o);
    let strips: Vec<&str> = text.lines().filter(|l| l.starts_with("strip")).collect();
    assert_eq!(strips, ["strip columns 1..1", "strip rows 1..2", "strip columns 1..2", "strip rows 1..3"]);
}

#[test]
fn hom_dim_respects_cap() {
    let o = brauer(&["hom-dim", "--delta", "1", "2,2", "0"]);
    assert_eq!((stdout(&o).trim(), code(&o)), ("1", 0));
    let o = brauer(&["hom-dim", "--delta", "1", "--seed", "99", "2,2", "0"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = brauer(&["hom-dim", "--delta", "1", "4,3,2,1", "3,2,1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("BRAUER_MAX_DIM"));
}

#[test]
fn verify_passes_small_cases() {
    let o = brauer(&["verify", "--n", "4", "--delta", "0", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&brauer(&["same-block", "--delta", "1", "2,3", "1"])), 2);
    assert_eq!(code(&brauer(&["minimal", "--delta", "0", "0"])), 2);
    assert_eq!(code(&brauer(&["blocks", "--n", "4"])), 2);
    assert_eq!(code(&brauer(&["blocks", "--n", "4", "--delta", "1", "--format", "dot"])), 2);
    assert_eq!(code(&brauer(&["frobnicate"])), 2);
}
