use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lazy_hopf::io::{self, AlgebraDocument, CocycleDocument, HopfDocument};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lazy-hopf")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_h4_hopf_passes() {
    let o = run(&["verify", "H4", "--suite", "hopf"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_taft9_over_cyclotomic_and_f7() {
    for field in ["zeta3", "f7"] {
        let o = run(&["verify", "taft9", "--suite", "hopf", "--field", field]);
        assert_eq!(code(&o), 0, "{field}: {}", stderr(&o));
    }
    // No primitive cube root of unity in q.
    assert_eq!(code(&run(&["verify", "taft9"])), 2);
}

#[test]
fn verify_sigma_t_runs_every_cocycle_suite() {
    let o = run(&["verify", "sigma_t(1)", "--field", "f5"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    for needle in ["cocycle flags", "yd", "hopf axioms of H4"] {
        assert!(out.contains(needle), "{needle}");
    }
}

#[test]
fn malformed_json_is_a_parse_error_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("h4.json");
    let o = run(&["construct", "dual", "H4", "--field", "f5", "-o", path_str(&good)]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&good).unwrap().replacen("\"mult\": [", "\"mult\": [[0,", 1);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, text).unwrap();
    let o = run(&["verify", path_str(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line "), "{}", stderr(&o));
}

#[test]
fn corrupted_tensor_entry_names_its_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h4.json");
    let h: lazy_hopf::hopf::HopfAlgebra<lazy_hopf::F5> = lazy_hopf::fixtures::sweedler_h4().unwrap();
    let mut doc = io::hopf_to_document(&h);
    doc.mult[2].3 = io::ScalarText::Text("1/0".into());
    fs::write(&path, io::to_json(&doc)).unwrap();
    let o = run(&["verify", path_str(&path)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("mult[2]"), "{}", stderr(&o));
}

#[test]
fn wrong_tensor_value_fails_verification_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h4.json");
    let h: lazy_hopf::hopf::HopfAlgebra<lazy_hopf::F5> = lazy_hopf::fixtures::sweedler_h4().unwrap();
    let mut doc = io::hopf_to_document(&h);
    let k = doc.mult.iter().position(|e| (e.0, e.1) == (2, 1)).unwrap();
    doc.mult[k].3 = io::ScalarText::Text("1".into());
    fs::write(&path, io::to_json(&doc)).unwrap();
    let report = dir.path().join("report.json");
    let o = run(&["verify", path_str(&path), "--report-out", path_str(&report)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("at ("));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(json["status"], "fail");
}

#[test]
fn unknown_fixture_and_inapplicable_suite_are_usage_errors() {
    assert_eq!(code(&run(&["verify", "H5"])), 2);
    assert_eq!(code(&run(&["verify", "H4", "--suite", "yd"])), 2);
    assert_eq!(code(&run(&["verify"])), 2);
}

#[test]
fn construct_double_gives_a_16_dimensional_hopf_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dh4.json");
    let o = run(&["construct", "double", "H4", "-o", path_str(&out)]);
    assert_eq!(code(&o), 0);
    let doc: HopfDocument = io::parse_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.dim, 16);
    assert_eq!(doc.provenance.as_ref().unwrap()["construction"], "drinfeld_double");
    assert_eq!(code(&run(&["verify", path_str(&out), "--suite", "hopf"])), 0);
}

#[test]
fn construct_biproduct_transports_to_h4() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.json");
    let o = run(&["construct", "biproduct", "yd_pair_h4", "--field", "f5", "-o", path_str(&out)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("[ok  ] transported tensors equal H4"));
    let doc: HopfDocument = io::parse_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.dim, 4);
}

#[test]
fn construct_central_extension_of_h4_over_f5() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ext.json");
    let o = run(&["construct", "central-extension", "H4", "--field", "f5", "-o", path_str(&out)]);
    assert_eq!(code(&o), 0);
    let doc: HopfDocument = io::parse_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.dim, 20);
    let prov = doc.provenance.unwrap();
    assert_eq!(prov["group_order"], 5);
    assert!(!prov["pi"].as_array().unwrap().is_empty());
}

/// Every constructed document parses back and re-serializes to the same bytes.
#[test]
fn constructed_documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &str, &str); 8] = [
        ("double", "kZ2", "hopf"),
        ("dual", "H4", "hopf"),
        ("diagonal", "sigma_t(2)", "algebra"),
        ("biproduct", "yd_pair_h4", "hopf"),
        ("smash", "yd_pair_h4", "algebra"),
        ("extension", "sigma_t(2)", "cocycle"),
        ("twist", "sigma_t(2)", "algebra"),
        ("central-extension", "kZ2", "hopf"),
    ];
    for (kind, input, shape) in cases {
        let field = if kind == "central-extension" { "f3" } else { "f5" };
        let out = dir.path().join(format!("{kind}.json"));
        let o = run(&["construct", kind, input, "--field", field, "-o", path_str(&out)]);
        assert_eq!(code(&o), 0, "{kind}: {}{}", stdout(&o), stderr(&o));
        let text = fs::read_to_string(&out).unwrap();
        let again = match shape {
            "hopf" => io::to_json(&io::parse_json::<HopfDocument>(&text).unwrap()),
            "algebra" => io::to_json(&io::parse_json::<AlgebraDocument>(&text).unwrap()),
            _ => io::to_json(&io::parse_json::<CocycleDocument>(&text).unwrap()),
        };
        assert_eq!(again, text, "{kind}");
    }
    // The extended cocycle refers to D(H4) by name and verifies as a cocycle.
    let ext = dir.path().join("extension.json");
    let o = run(&["verify", path_str(&ext), "--suite", "cocycle"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn extension_of_a_yd_cocycle_lands_on_the_biproduct() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sigma.json");
    let o = run(&["construct", "extension", "theta(2)", "--field", "f5", "-o", path_str(&out)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run(&["verify", path_str(&out), "--suite", "cocycle"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn cocycles_enumerate_lists_five_over_f5() {
    let o = run(&["cocycles", "H4", "--field", "f5", "enumerate"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("lazy 2-cocycles -- 5 found"));
}

#[test]
fn cocycles_group_table_is_cyclic_of_order_five() {
    let o = run(&["cocycles", "H4", "--field", "f5", "group-table"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("isomorphic to (F5,+): true"));
}

#[test]
fn cocycles_pipelines_pass() {
    for action in ["lift-demo", "extend-double", "extend-biproduct"] {
        let o = run(&["cocycles", "H4", "--field", "f5", action]);
        assert_eq!(code(&o), 0, "{action}: {}{}", stdout(&o), stderr(&o));
    }
}

#[test]
fn enumeration_guard_exits_with_three() {
    let o = run(&["cocycles", "H4", "--field", "f5", "--bound", "10", "enumerate"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("5^4 = 625"));
    assert_eq!(code(&run(&["cocycles", "H4", "enumerate"])), 2);
}

#[test]
fn output_is_deterministic_and_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let (r1, r2) = (dir.path().join("r1.json"), dir.path().join("r2.json"));
    let a = run(&["verify", "H4", "--field", "f5", "--report-out", path_str(&r1)]);
    let b = run(&["verify", "H4", "--field", "f5", "--report-out", path_str(&r2)]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(fs::read(&r1).unwrap(), fs::read(&r2).unwrap());
    let c = run(&["verify", "H4", "--field", "f5", "--seed", "7"]);
    assert!(stdout(&c).contains("random elements (seed 7)"));
    let t = run(&["verify", "H4", "--timing"]);
    assert!(stdout(&t).lines().next().unwrap().contains(" ms]"));
}
