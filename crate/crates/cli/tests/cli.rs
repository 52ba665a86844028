use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordcrystal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["version"], 1);
    v
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("chordcrystal-cli-{}-{name}", std::process::id()))
}

#[test]
fn augmented_order_of_the_pentagon() {
    let o = run(&["coxeter", "order", "--m", "5", "--augmented"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "120");
    assert_eq!(stdout(&run(&["coxeter", "order", "--m", "5"])).trim(), "10");
}

#[test]
fn pentagon_verify_layer_table() {
    let v = json(&["pentagon", "verify", "--depth", "8"]);
    assert_eq!(v["schema"], "chordcrystal/pentagon-verify");
    let layers = v["data"]["layers"].as_array().unwrap();
    assert_eq!(layers.len(), 9);
    assert_eq!(layers[8]["closure"], 1141);
    assert_eq!(layers[8]["members"], 1141);
}

#[test]
fn root_diagram_svg() {
    let o = run(&["render", "--target", "root-diagram", "--m", "5"]);
    assert!(o.status.success());
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 20);
    // byte-stable across runs
    assert_eq!(svg, stdout(&run(&["render", "--target", "root-diagram", "--m", "5"])));
}

#[test]
fn alcove_tiling_writes_svg_and_json() {
    let path = scratch("tile.svg");
    let v = json(&["alcove", "tile", "--seed", "4", "--extent", "1", "--svg", path.to_str().unwrap()]);
    assert_eq!(v["data"]["check"]["tiles"], 75);
    assert_eq!(v["data"]["check"]["t1"], 25);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 75);
    std::fs::remove_file(path).ok();
}

#[test]
fn alcove_shapes_lists_twelve_classes() {
    let v = json(&["alcove", "shapes"]);
    assert_eq!(v["data"]["classes"].as_array().unwrap().len(), 12);
    assert_eq!(v["data"]["alcoves"].as_array().unwrap().len(), 120);
}

#[test]
fn other_verbs() {
    assert_eq!(stdout(&run(&["cheb", "poly", "--kind", "Q", "--n", "2"])).trim(), "x^2 - x - 1");
    assert!(run(&["cheb", "identities"]).status.success());
    assert!(run(&["ring", "show", "--m", "7"]).status.success());
    assert_eq!(json(&["crystal", "--m", "5", "--depth", "3"])["data"]["layers"], serde_json::json!([1, 4, 13, 34]));
    assert!(run(&["bridge", "check", "--n", "2", "--depth", "3"]).status.success());
    assert!(run(&["coxeter", "check", "--m", "8"]).status.success());
    assert!(run(&["tile", "verify", "--m", "7"]).status.success());
    let d = json(&["tile", "decompose", "--m", "9", "--angles", "3,3,3", "--method", "nine"]);
    assert_eq!(d["data"]["decomposition"]["parts"].as_array().unwrap().len(), 9);
    assert_eq!(json(&["alcove", "lines", "--n", "2"])["data"]["on_lines"], 30);
}

#[test]
fn unreachable_target_exits_one() {
    // T{1,1,3} alone cannot build the pentagon's other triangle
    let o = run(&["tile", "reach", "--m", "5", "--angles", "1,2,2", "--gen", "1,1,3", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["coxeter", "order", "--m", "five"]).status.code(), Some(2));
    assert_eq!(run(&["crystal", "--m", "6"]).status.code(), Some(2));
    assert_eq!(run(&["tile", "decompose", "--angles", "1,2", "--method", "pair"]).status.code(), Some(2));
}

#[test]
fn config_file_sets_defaults() {
    let path = scratch("cfg.toml");
    std::fs::write(&path, "pentagon_depth = 3\n").unwrap();
    let v = json(&["pentagon", "verify", "--config", path.to_str().unwrap()]);
    assert_eq!(v["data"]["depth"], 3);
    std::fs::write(&path, "no_such_key = 1\n").unwrap();
    assert_eq!(run(&["pentagon", "verify", "--config", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(path).ok();
}
