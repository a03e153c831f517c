use std::path::Path;
use std::process::Command;

use toricfan::formats::FanDocument;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toricfan"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn fan_at(path: &Path) -> toricfan::Fan {
    FanDocument::parse(&std::fs::read_to_string(path).unwrap()).unwrap().to_fan().unwrap()
}

#[test]
fn verify_exit_codes() {
    let (code, text) = run(&["verify", "@barnette"]);
    assert_eq!(code, 0);
    assert!(text.contains("38 facets"));
    assert!(text.contains("singular sigma18 = d1d2d3e4 det -9"));
    assert_eq!(run(&["verify", "@barnette-smooth", "--witness", "1,1,1,1"]).0, 0);
    assert_eq!(run(&["verify", "/no/such/file.json"]).0, 2);
    assert_eq!(run(&["verify", "@barnette", "--witness", "0,1,1,1"]).0, 2);
}

#[test]
fn incomplete_fan_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let fan = toricfan::datasets::barnette_fan();
    let holed = toricfan::Fan::new(4, fan.rays().to_vec(), fan.cones()[1..].to_vec()).unwrap();
    let path = dir.path().join("holed.json");
    std::fs::write(&path, FanDocument::from_fan(&holed, None).to_canonical_string()).unwrap();
    let (code, text) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{text}");
}

#[test]
fn desingularize_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(run(&["desingularize", "--out", a.to_str().unwrap()]).0, 0);
    assert_eq!(run(&["desingularize", "--out", b.to_str().unwrap()]).0, 0);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let fan = fan_at(&a);
    assert_eq!((fan.rays().len(), fan.cones().len()), (18, 55));
    // the written fan is accepted as input
    assert_eq!(run(&["verify", a.to_str().unwrap()]).0, 0);
}

#[test]
fn subdivide_and_family() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sub.json");
    let (code, _) = run(&["subdivide", "@barnette-smooth", "--cone", "d1,e2,d2,d4", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(fan_at(&out).cones().len(), 58);

    let out2 = dir.path().join("pt.json");
    let (code, _) = run(&["subdivide", "@barnette-smooth", "--point", "-2,0,-1,1", "--label", "q", "--out", out2.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(fan_at(&out2).cones().len(), 58);

    let fam = dir.path().join("fam");
    assert_eq!(run(&["family", "--count", "2", "--out-dir", fam.to_str().unwrap()]).0, 0);
    assert_eq!(fan_at(&fam.join("family_01.json")).cones().len(), 58);
    assert_eq!(fan_at(&fam.join("family_02.json")).cones().len(), 61);
}

#[test]
fn complex_queries() {
    let (code, text) = run(&["complex", "@barnette-smooth", "--link", "e1,d3"]);
    assert_eq!(code, 0);
    assert!(text.contains("6 facets"));
    assert!(text.contains("cycle"));
    let (code, text) = run(&["complex", "@barnette-smooth", "--obstruction"]);
    assert_eq!(code, 0);
    assert_eq!(text.matches("[pass]").count(), 4);
    assert_eq!(run(&["complex", "@barnette", "--obstruction"]).0, 2);
    assert_eq!(run(&["complex", "@barnette", "--pseudomanifold"]).0, 0);
}

#[test]
fn certify_rejects_ray_coordinates() {
    let (code, text) = run(&["certify", "@barnette-smooth", "@rays"]);
    assert_eq!(code, 1);
    assert!(text.contains("first violated facet e1e2e3e4"));
}

#[test]
fn json_report_shape() {
    let out = bin().args(["--format", "json", "suspend", "@barnette"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "suspend");
    assert_eq!(v["inputs_digest"].as_str().unwrap().len(), 64);
    assert_eq!(v["verdict"], true);
}

#[test]
fn scan_small_bound() {
    let out = bin().args(["--format", "json", "scan", "@barnette", "--bound", "2", "--workers", "2"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sections"][0]["details"]["counts_by_face_dim"][0], 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["subdivide", "@barnette"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
}
