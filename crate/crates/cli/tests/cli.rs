use std::process::{Command, Output};

fn cutseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutseq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trace_prints_the_letters() {
    let o = cutseq(&["trace", "--surface", "hexagon", "--dir", "10,1", "--start", "0,-1/4", "--n", "20"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "CBBCBCBBCBCBCACBCBCB");
}

#[test]
fn trace_json_carries_the_word() {
    let o = cutseq(&["trace", "--surface", "square", "--dir", "3,5", "--start", "1/3,1/7", "--n", "16", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["word"].as_str().unwrap().len(), 16);
}

#[test]
fn verify_reports_are_byte_identical() {
    let args = ["verify", "dictionary", "--samples", "20", "--seed", "3"];
    let (a, b) = (cutseq(&args), cutseq(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_central_counts() {
    let o = cutseq(&["verify", "central", "--samples", "50", "--seed", "7"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let d = &v["checks"][0]["detail"];
    assert_eq!((d["pass"].as_u64(), d["fail"].as_u64()), (Some(50), Some(0)));
}

#[test]
fn recognize_reads_a_file() {
    let t = cutseq(&["trace", "--dir", "10,1", "--start", "0,-1/4", "--n", "400"]);
    let path = std::env::temp_dir().join(format!("cutseq-word-{}.txt", std::process::id()));
    std::fs::write(&path, &t.stdout).unwrap();
    let o = cutseq(&["recognize", "--word", path.to_str().unwrap(), "--depth", "2"]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["expansion"], serde_json::json!([0, 5, 5]));
    let (lo, hi) = (v["interval"]["lo"]["angle"].as_f64().unwrap(), v["interval"]["hi"]["angle"].as_f64().unwrap());
    let theta = 0.1f64.atan();
    assert!(lo <= theta && theta <= hi);
}

#[test]
fn noncommute_and_bm_moduli_pass() {
    assert!(cutseq(&["noncommute"]).status.success());
    assert!(cutseq(&["bm", "moduli"]).status.success());
}

#[test]
fn render_writes_svg() {
    let path = std::env::temp_dir().join(format!("cutseq-farey-{}.svg", std::process::id()));
    let o = cutseq(&["render", "farey", "--samples", "200", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
}

#[test]
fn bad_input_fails() {
    assert_eq!(cutseq(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(cutseq(&["trace", "--dir", "0,0", "--start", "0,0"]).status.code(), Some(2));
}
