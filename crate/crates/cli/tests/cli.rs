use std::process::{Command, Output};

fn grade3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grade3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn maximal_trim_claim_reproduces() {
    let o = grade3(&["reproduce", "maxideal", "--s", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("2: . 3 2 ."), "{out}");
    assert!(out.contains("3: . 5 7 1"), "{out}");
    assert!(out.trim_end().ends_with("checks passed: ok"));
}

#[test]
fn complete_intersection_table_as_json() {
    let o = grade3(&["betti", "--gens", "x^2,y^2,z^2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let got: Vec<(u64, u64, u64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["beta"].as_u64().unwrap()))
        .collect();
    assert_eq!(got, vec![(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)]);
}

#[test]
fn experiments_are_deterministic() {
    let args = ["experiment", "generic-betti", "--s", "3", "--trials", "5", "--seed", "7", "--format", "json"];
    let a = grade3(&args);
    let b = grade3(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tor_class_of_an_odd_trim() {
    let o = grade3(&["tor-class", "--family", "vodd", "--s", "2", "--index", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class G(4)"));
}

#[test]
fn output_file_is_written() {
    let path = std::env::temp_dir().join(format!("grade3-cli-{}.csv", std::process::id()));
    let o = grade3(&["reproduce", "vodd-trim", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.lines().count() > 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(grade3(&["betti", "--prime", "2", "--family", "hev", "--s", "2"]).status.code(), Some(2));
    assert_eq!(grade3(&["reproduce", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(grade3(&["betti"]).status.code(), Some(2));
    assert_eq!(grade3(&["reproduce", "btab3-even", "--s", "3"]).status.code(), Some(2));
}
