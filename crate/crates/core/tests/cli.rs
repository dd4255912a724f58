use std::process::Command;

use bfcodes::cli::{run, EXIT_IO, EXIT_OK, EXIT_THEOREM_MISMATCH, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bfcodes").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn walsh_const0() {
    let v = json(&["walsh", "--m", "4", "--fn", "const0"]);
    assert_eq!(v["spectrum_summary"], serde_json::json!([[16, 1], [0, 15]]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["field"], "GF(2^4)/0x13");
}

#[test]
fn walsh_classifies_gold_m5() {
    let v = json(&["walsh", "--m", "5", "--fn", "gold:h=1"]);
    assert_eq!(v["class"], "Semibent");
}

#[test]
fn code_csv_rows() {
    let (code, out, _) = call(&["code", "from-support", "--m", "5", "--fn", "gold:h=1", "--csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "6,6\n8,15\n10,10\n");
}

#[test]
fn code_json_routes_agree() {
    let v = json(&["code", "from-image", "--m", "4", "--fn", "translation:h=1", "--star"]);
    assert_eq!(v["routes_agree"], true);
    assert_eq!(v["n"], 15);
    let v = json(&["code", "from-set", "--m", "3", "--elems", "0x1,0x2,0x4"]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(3), Some(3)));
    assert_eq!(v["field"], "GF(2^3)/0xb");
}

#[test]
fn fn_eval_points() {
    let v = json(&["fn", "eval", "--m", "3", "--fn", "power:d=3", "--x", "0x2,1"]);
    assert_eq!(v["values"][0]["value"], 3);
    assert_eq!(v["values"][1]["value"], 1);
    let v = json(&["fn", "list"]);
    assert!(v["families"].as_array().unwrap().iter().any(|s| s == "segre"));
}

#[test]
fn opoly_modes() {
    for mode in ["def", "2to1", "both"] {
        let v = json(&["opoly", "check", "--m", "5", "--fn", "segre:a=0x05", "--mode", mode]);
        assert_eq!(v["is_o_polynomial"], true, "{mode}");
    }
    let v = json(&["opoly", "check", "--m", "5", "--fn", "power:d=3"]);
    assert_eq!(v["is_o_polynomial"], false);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
    assert_eq!(call(&["opoly", "check", "--m", "5", "--fn", "glynn1", "--mode", "sideways"]).0, EXIT_USAGE);
}

#[test]
fn diffset_groups() {
    let v = json(&["diffset", "check", "--m", "5", "--group", "mult", "--set", "image*:dds:a"]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["params"], serde_json::json!([31, 16, 8]));
    let v = json(&["diffset", "check", "--m", "4", "--group", "add", "--set", "support:power:d=3,c=0x2"]);
    assert!(v["verdict"].is_boolean());
    assert_eq!(call(&["diffset", "check", "--m", "4", "--group", "add", "--set", "weird:1"]).0, EXIT_USAGE);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(call(&["walsh", "--m", "40", "--fn", "const0"]).0, EXIT_USAGE);
    assert_eq!(call(&["walsh", "--m", "4", "--fn", "nonsense"]).0, EXIT_USAGE);
    assert_eq!(call(&["code", "from-set", "--m", "3", "--elems", "0x9"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--ids", "[", "--m-min", "3", "--m-max", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn io_error_exits_74() {
    let (code, _, err) = call(&["verify", "--ids", "thm-semibentcodes", "--m-min", "5", "--m-max", "5", "--out", "/nonexistent/dir/r.json"]);
    assert_eq!(code, EXIT_IO, "{err}");
}

#[test]
fn verify_exit_codes() {
    // Conjecture findings do not change the exit code.
    let (code, _, _) = call(&["verify", "--ids", "payne-code-conj", "--m-min", "7", "--m-max", "7"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = call(&["verify", "--ids", "thm-semibentcodes", "--m-min", "3", "--m-max", "7"]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = call(&["verify", "--ids", "trans-remarks/bar", "--m-min", "3", "--m-max", "3"]);
    assert_eq!(code, EXIT_THEOREM_MISMATCH);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["summary"]["mismatch"].as_u64().unwrap() > 0);
}

#[test]
fn verify_out_file_and_reproducibility() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &std::path::Path, t: &str| {
        vec!["verify".to_string(), "--ids".into(), "thm-s*".into(), "--m-min".into(), "3".into(), "--m-max".into(), "6".into(), "--out".into(), p.display().to_string(), "--threads".into(), t.into()]
    };
    for (p, t) in [(&a, "1"), (&b, "2")] {
        let v = args(p, t);
        let (code, out, _) = call(&v.iter().map(String::as_str).collect::<Vec<_>>());
        assert!(code == EXIT_OK || code == EXIT_THEOREM_MISMATCH);
        let summary: Value = serde_json::from_str(&out).unwrap();
        assert!(summary["theorem_mismatches"].is_array());
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let doc: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(doc["schema"], 1);
    assert!(doc["reports"].as_array().unwrap().iter().all(|r| r.get("wall_ms").is_none()));
}

#[test]
fn claims_and_schema_subcommands() {
    let v = json(&["claims"]);
    let disk: Value = serde_json::from_str(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../claims.json")).unwrap()).unwrap();
    assert_eq!(v, disk);
    let s = json(&["schema"]);
    assert_eq!(s["$defs"]["walsh"]["required"][0], "function");
}

#[test]
fn binary_exit_code() {
    let st = Command::new(env!("CARGO_BIN_EXE_bfcodes")).args(["walsh", "--m", "0", "--fn", "const0"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_USAGE));
    let st = Command::new(env!("CARGO_BIN_EXE_bfcodes")).args(["code", "from-support", "--m", "5", "--fn", "gold:h=1", "--csv"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8(st.stdout).unwrap(), "6,6\n8,15\n10,10\n");
}
