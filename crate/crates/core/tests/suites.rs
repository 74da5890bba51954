use nullvar::report::{run_suite, Suite, SuiteConfig};

fn run(label: &str, suite: Suite) -> nullvar::report::Report {
    run_suite(&SuiteConfig::new(label, suite, 42), false).unwrap()
}

fn assert_green(r: &nullvar::report::Report) {
    let bad: Vec<_> = r.failing().map(|r| (&r.name, &r.expected, &r.got)).collect();
    assert!(r.ok, "{bad:#?}");
}

#[test]
fn a2_all_suites() {
    let r = run("A2", Suite::All);
    assert_green(&r);
    assert!(r.records.len() >= 40, "only {} records", r.records.len());
}

#[test]
fn c2_all_suites() {
    assert_green(&run("C2", Suite::All));
}

#[test]
fn b2_all_suites() {
    assert_green(&run("B2", Suite::All));
}

#[test]
fn a3_structure_and_nullspace() {
    assert_green(&run("A3", Suite::Structure));
    assert_green(&run("A3", Suite::Nullspace));
}

#[test]
fn large_algebra_is_refused_for_exterior_suites() {
    let err = run_suite(&SuiteConfig::new("A3", Suite::Exterior, 1), false).unwrap_err();
    assert!(matches!(err, nullvar::Error::TooLarge { g: 15, cap: 10 }));
    let mut cfg = SuiteConfig::new("A3", Suite::Structure, 1);
    cfg.max_g = 3;
    assert!(run_suite(&cfg, false).is_ok());
}

#[test]
fn corrupted_constant_fails_named_records() {
    let mut cfg = SuiteConfig::new("A2", Suite::Structure, 1);
    cfg.corrupt = Some("2,3,1".parse().unwrap());
    let r = run_suite(&cfg, false).unwrap();
    assert!(!r.ok);
    let names: Vec<_> = r.failing().map(|r| r.name.as_str()).collect();
    assert!(names.contains(&"structure.antisymmetry"), "{names:?}");
    assert!(names.contains(&"structure.jacobi"), "{names:?}");
}

#[test]
fn report_serializes_without_timestamp() {
    let r = run("A1", Suite::Structure);
    let v = r.to_json();
    assert!(v.get("timestamp").is_none());
    assert_eq!(v["config"]["type"], "A1");
    assert_eq!(v["ok"], true);
    let stamped = run_suite(&SuiteConfig::new("A1", Suite::Structure, 1), true).unwrap();
    assert!(stamped.to_json()["timestamp"].is_string());
}
