use std::process::{Command, Output};

use serde_json::Value;

fn segre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segre")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = segre(&all);
    let v = serde_json::from_slice(&out.stdout).expect("json on stdout");
    (v, out.status.code().expect("exit code"))
}

fn text(args: &[&str]) -> (String, i32) {
    let out = segre(args);
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn ulrich_omega_box() {
    let (v, code) = json(&["ulrich", "Om(3)#Om(2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["ulrich"], true);
    assert_eq!(v["results"]["h0"], 24);
    assert_eq!(v["results"]["rank"], 4);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["command"], "ulrich");
}

#[test]
fn extension_example_aes() {
    let (v, code) = json(&["example", "--which", "aes"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["ext_space_dim"], 8);
    assert_eq!(v["results"]["profile"]["a"][0], 3);
    assert_eq!(v["results"]["profile"]["b"][0], 9);
}

#[test]
fn orthogonality_counts() {
    let (v, code) = json(&["orthogonality", "--collection", "col13"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["orthogonality"]["passed"], 81);
    assert_eq!(v["results"]["orthogonality"]["total"], 81);
    let (v, code) = json(&["orthogonality", "--collection", "col15"]);
    assert_eq!(code, 4);
    assert_eq!(v["results"]["orthogonality"]["passed"], 71);
    let (_, code) = json(&["orthogonality", "--collection", "flag-fixed"]);
    assert_eq!(code, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(segre(&["cohom", "Q(1"]).status.code(), Some(2));
    assert_eq!(segre(&["family", "--kind", "e9", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(segre(&["cohom"]).status.code(), Some(2));
    let indet = "ext(Om(0)#O(0)+O(0)#Om(0);O(0,0)+O(0,1);nontriv)";
    assert_eq!(segre(&["cohom", indet]).status.code(), Some(3));
    assert_eq!(segre(&["family", "--kind", "e3", "--rank", "2"]).status.code(), Some(4));
    assert_eq!(segre(&["beilinson", "O(0,0)", "--collection", "col15"]).status.code(), Some(4));
    let (v, code) = json(&["cohom", "Q(1"]);
    assert_eq!(code, 2);
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn text_and_json_agree() {
    let (v, _) = json(&["cohom", "Om(1)#O(-3)", "--twist", "1", "0"]);
    let (t, code) = text(&["cohom", "Om(1)#O(-3)", "--twist", "1", "0"]);
    assert_eq!(code, 0);
    let h: Vec<String> = v["results"]["h"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
    assert!(t.contains(&format!("({})", h.join(","))), "{t}");
    assert!(t.contains(&format!("chi = {}", v["results"]["chi"])));
}

#[test]
fn json_round_trips() {
    let out = segre(&["profile", "Om(3)#Om(2)", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    assert_eq!(v["results"]["a"], serde_json::json!([9, 0, 1, 0, 9]));
    assert_eq!(v["results"]["b"], serde_json::json!([0, 3, 0, 3, 0]));
}

#[test]
fn csv_table_rows() {
    let (t, code) = text(&["table", "O(1,0)", "--window", "-1", "1", "0", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = t.lines().collect();
    assert_eq!(rows[0], "m,n,h0,h1,h2,h3,h4");
    assert_eq!(rows.len(), 1 + 3 * 2);
    assert!(rows.contains(&"0,0,3,0,0,0,0"));
}

#[test]
fn flag_commands() {
    let (v, code) = json(&["flag-cohom", "O(1,1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["h"], serde_json::json!([8, 0, 0, 0]));
    let (v, code) = json(&["flag-ulrich", "O(2,0)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["invariants"]["a"], 1);
    assert_eq!(v["results"]["invariants"]["c"], 1);
    let (t, _) = text(&["flag-ulrich", "O(2,0)"]);
    assert!(t.contains("0 -> O_F(0,1)^1 + O_F(1,0)^0 -> G1(1,1)^0 + G2(1,1)^1 -> V -> 0"));
}

#[test]
fn beilinson_and_resolve() {
    let (v, code) = json(&["beilinson", "Om(2)#Om(1)", "--collection", "col13t"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["monad"]["rank"], 4);
    let (t, code) = text(&["resolve", "--profile", "9,0,1,0,9,0,3,0,3,0,4"]);
    assert_eq!(code, 0);
    assert!(t.contains("0 -> O(0,-1)^1 -> O(0,0)^3 + O(1,-1)^3 -> O(1,0)^9 -> V -> 0"), "{t}");
    let (_, code) = text(&["resolve", "--profile", "1,0,0,0,1,0,0,0,0,0,1"]);
    assert_eq!(code, 4);
}

#[test]
fn regularity_and_family() {
    let (v, code) = json(&["regularity", "Om(3)#Om(2)", "--bm"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["checks"].as_array().unwrap().len(), 8);
    let (v, _) = json(&["regularity", "Om(3)#Om(2)", "--hw"]);
    assert_eq!(v["results"]["checks"].as_array().unwrap().len(), 11);
    assert_eq!(segre(&["regularity", "O(0,0)"]).status.code(), Some(2));
    let (v, code) = json(&["family", "--kind", "e1", "--rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["profile"]["a"], serde_json::json!([0, 2, 0, 0, 4]));
}
