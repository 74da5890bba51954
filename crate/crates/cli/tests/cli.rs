use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn nullvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nullvar"))
        .args(args)
        .env_remove("NULLVAR_MAX_G")
        .output()
        .unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let out = nullvar(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn info_values() {
    for (ty, g, l, d, gamma) in [("A1", 3, 1, 2, 3), ("A2", 8, 2, 5, 27), ("C2", 10, 2, 6, 81)] {
        let v = json_out(&["info", "--type", ty]);
        assert_eq!(
            (v["g"].as_u64(), v["l"].as_u64(), v["d"].as_u64(), v["dim_gamma_2rho"].as_u64()),
            (Some(g), Some(l), Some(d), Some(gamma)),
            "{ty}"
        );
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(nullvar(&["verify", "--type", "Z9"]).status.code(), Some(2));
    assert_eq!(nullvar(&["info", "--type", "A0"]).status.code(), Some(2));
    assert_eq!(nullvar(&["verify", "--type", "A2", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(nullvar(&["chart", "--type", "A2", "--t", "1"]).status.code(), Some(2));
    assert_eq!(nullvar(&["chart", "--type", "A2", "--t", "x,1"]).status.code(), Some(2));
    assert_eq!(nullvar(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        nullvar(&["verify", "--type", "A2", "--corrupt-constant", "99,0,0"]).status.code(),
        Some(2)
    );
}

#[test]
fn malformed_basis_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = nullvar(&["membership", "--type", "A2", "--basis", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    let out = nullvar(&["membership", "--type", "A2", "--basis", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // a C2 Borel handed to A2
    let c2 = json_out(&["chart", "--type", "C2", "--t", "0,0"]);
    let path = write(dir.path(), "c2.json", &c2);
    assert_eq!(nullvar(&["membership", "--type", "A2", "--basis", &path]).status.code(), Some(2));
}

#[test]
fn chart_membership_degenerate() {
    let p = json_out(&["chart", "--type", "A2", "--t", "1,1"]);
    assert_eq!(p["dim"], 5);
    let neg = json_out(&["chart", "--type", "A2", "--t", "-1,2/3"]);
    assert_eq!(neg["dim"], 5);

    let dir = tempfile::tempdir().unwrap();
    let borel = json_out(&["chart", "--type", "A2", "--t", "0,0"]);
    let path = write(dir.path(), "borel.json", &borel);
    let m = json_out(&["membership", "--type", "A2", "--basis", &path]);
    assert_eq!(m, serde_json::json!({"is_nullspace": true, "linear_membership": true}));

    let whole: Vec<Vec<String>> = (0..5)
        .map(|i| (0..8).map(|j| if j == i + 3 { "1" } else { "0" }.to_string()).collect())
        .collect();
    let v = serde_json::json!({"rows": 5, "cols": 8, "entries": whole});
    let path = write(dir.path(), "roots.json", &v);
    let m = json_out(&["membership", "--type", "A2", "--basis", &path]);
    assert_eq!(m["is_nullspace"], m["linear_membership"]);

    let d = json_out(&["degenerate", "--type", "A2", "--t", "1,1", "--weight", "2,1"]);
    assert_eq!(d, borel);
    let path = write(dir.path(), "p.json", &p);
    let d2 = json_out(&["degenerate", "--type", "A2", "--basis", &path, "--weight", "2,1"]);
    assert_eq!(d2, borel);
    assert_eq!(
        nullvar(&["degenerate", "--type", "A2", "--t", "1,1", "--weight", "1,-1"]).status.code(),
        Some(2)
    );
}

#[test]
fn equations_and_orbits() {
    let e = json_out(&["equations", "--type", "A2"]);
    assert_eq!(e["rank"], 28);
    assert_eq!(e["ambient_plucker_dim"], 56);
    assert_eq!(e["cols"], 56);
    let e = json_out(&["equations", "--type", "A1"]);
    assert_eq!(e["rank"], 0);
    let o = json_out(&["orbits", "--type", "C2"]);
    assert_eq!(o.as_array().unwrap().len(), 4);
}

#[test]
fn verify_is_reproducible_without_timestamp() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = nullvar(&[
            "verify", "--type", "A2", "--suite", "all", "--seed", "42", "--no-timestamp", "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert!(v["records"].as_array().unwrap().len() >= 40);
    assert_eq!(v["config"]["seed"], 42);
    assert_eq!(v["config"]["membership_samples"], 200);
    assert!(v.get("timestamp").is_none());
    for r in v["records"].as_array().unwrap() {
        assert!(!r["anchor"].as_str().unwrap().is_empty());
    }
}

#[test]
fn corrupted_constant_exits_1_and_still_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("r.json");
    let out = nullvar(&[
        "verify", "--type", "A2", "--suite", "structure", "--corrupt-constant", "2,3,1,1/2",
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["ok"], false);
    assert!(v["timestamp"].is_string());
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL structure.antisymmetry"));
}

#[test]
fn dimension_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_nullvar"))
        .args(["verify", "--type", "A2", "--suite", "exterior"])
        .env("NULLVAR_MAX_G", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // the structure suite never builds exterior powers
    let out = Command::new(env!("CARGO_BIN_EXE_nullvar"))
        .args(["verify", "--type", "A2", "--suite", "structure"])
        .env("NULLVAR_MAX_G", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(nullvar(&["equations", "--type", "A3"]).status.code(), Some(2));
}
