use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knot-shadow")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const TREFOIL: &str = "1+ 2+ 3+ 1+ 2+ 3+";

#[test]
fn validate_and_faces() {
    let o = run(&["validate", TREFOIL]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok crossings=3 faces=5 reduced=true"));
    let o = run(&["faces", TREFOIL]);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["reduced", "1+ 1+"]);
    assert_eq!(stdout(&o), "reducible at 0\n");
}

#[test]
fn domain_errors_exit_one() {
    let o = run(&["validate", "1+ 2+ 1+ 2+"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("NotSphere"));
    let o = run(&["to-trefoil", "1+ 1+"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("NotReduced"));
    let o = run(&["apply", TREFOIL, "A-", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("BadCrossing"));
    let o = run(&["verify", "/nonexistent/route.seq"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("IoError"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["export", TREFOIL, "--format", "png"]).status.code(), Some(2));
    assert_eq!(run(&["simplify", TREFOIL, "--slack", "x"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn apply_moves() {
    let o = run(&["apply", TREFOIL, "B", "0", "--format", "gauss"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).split_whitespace().count(), 1 + 10);
    let o = run(&["apply", TREFOIL, "smooth", "1"]);
    let mut parts: Vec<_> = stdout(&o).split_whitespace().skip(1).map(String::from).collect();
    parts.sort();
    assert_eq!(parts, ["1", "2"]);
    let o = run(&["apply", TREFOIL, "C", "0"]);
    assert!(stdout(&o).starts_with("shadow v=6 "));
    let o = run(&["apply", TREFOIL, "macro", "B-expand-00"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("shadow v=5 "));
}

#[test]
fn route_written_and_verified() {
    let path = std::env::temp_dir().join(format!("knot-shadow-cli-{}.seq", std::process::id()));
    let input = stdout(&run(&["apply", TREFOIL, "C", "0"]));
    let o = run(&["to-trefoil", input.trim()]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&path, stdout(&o)).unwrap();
    let o = run(&["verify", path.to_str().unwrap(), "--reduced"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("ok steps="));
    let text = std::fs::read_to_string(&path).unwrap().replace("step A- k=", "step A- k=9");
    std::fs::write(&path, text).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("ReplayFailure"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn enumerate_connectivity_export() {
    let o = run(&["enumerate", "--max", "4", "--reduced"]);
    let codes: Vec<_> = stdout(&o).lines().filter(|l| l.starts_with("shadow")).map(String::from).collect();
    assert_eq!(codes.len(), 3);
    let o = run(&["connectivity", "--max", "5"]);
    assert!(stdout(&o).contains("to_trefoil witnesses: 4/4 verified"));
    for (fmt, head) in [("dot", "// shadow v=3"), ("svg", "<svg"), ("gauss", "gauss: "), ("mapcode", "shadow v=3")] {
        let o = run(&["export", TREFOIL, "--format", fmt]);
        assert!(stdout(&o).starts_with(head), "{fmt}");
    }
    let svg = stdout(&run(&["export", TREFOIL, "--format", "svg"]));
    let path = std::env::temp_dir().join(format!("knot-shadow-cli-{}.svg", std::process::id()));
    std::fs::write(&path, svg).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn fixtures_directory() {
    let dir = std::env::temp_dir().join(format!("knot-shadow-fx-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("broken.macro"), "macro v1\nname x\n").unwrap();
    let o = run(&["to-trefoil", TREFOIL, "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("SyntaxError") || stderr(&o).starts_with("Format"), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}
