use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn seqmix(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seqmix"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&[u8]>) -> String {
    let out = seqmix(args, stdin);
    assert!(
        out.status.success(),
        "seqmix {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("seqmix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn field(report: &str, name: &str) -> String {
    report
        .lines()
        .find(|l| l.starts_with(name))
        .unwrap_or_else(|| panic!("no `{name}` in\n{report}"))[name.len()..]
        .trim()
        .to_string()
}

#[test]
fn kautz_pipeline_diameter() {
    let k = ok(&["generate", "kautz", "--d", "2", "--n", "2"], None);
    let s = ok(&["build", "seqmix", "--l", "2"], Some(k.as_bytes()));
    let report = ok(&["analyze"], Some(s.as_bytes()));
    assert_eq!(field(&report, "order"), "24");
    assert_eq!(field(&report, "diameter"), "4");
}

#[test]
fn moore_polynomial_value() {
    let delta: u64 = 3;
    let expected = delta.pow(4) + 5 * delta.pow(3) + 7 * delta.pow(2) + 4 * delta + 2;
    let out = ok(&["moore", "--r", "1", "--z", "3", "--k", "4"], None);
    assert_eq!(out.trim(), expected.to_string());
}

#[test]
fn reproduce_passes() {
    let out = ok(&["reproduce"], None);
    for value in ["521", "344", "53", "45", "24", "18"] {
        assert!(
            out.lines().any(|l| l.contains(value) && l.ends_with("PASS")),
            "{value} missing:\n{out}"
        );
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn dot_round_trip() {
    let g = ok(&["generate", "bosak"], None);
    let dot = ok(&["export", "--format", "dot"], Some(g.as_bytes()));
    assert_eq!(dot.matches("dir=none").count(), 27);
    let back = ok(&["export", "--from-format", "dot", "--format", "text"], Some(dot.as_bytes()));
    assert_eq!(back, g);
}

#[test]
fn exit_codes() {
    assert_eq!(seqmix(&["analyze", "/definitely/not/here"], None).status.code(), Some(3));
    assert_eq!(seqmix(&["moore", "--r", "1"], None).status.code(), Some(2));
    assert_eq!(seqmix(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(seqmix(&["analyze"], Some(b"v 2\nX 0 1\n")).status.code(), Some(3));
    let path = scratch("k23.txt");
    std::fs::write(&path, ok(&["generate", "kautz", "--d", "2", "--n", "3"], None)).unwrap();
    let check = seqmix(&["moore", "--check", path.to_str().unwrap()], None);
    assert_eq!(check.status.code(), Some(1));
    let path = scratch("bosak.txt");
    std::fs::write(&path, ok(&["generate", "bosak"], None)).unwrap();
    let check = seqmix(&["moore", "--check", path.to_str().unwrap()], None);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn builds_are_deterministic_and_labeled() {
    let g = ok(&["generate", "kbipartite", "--m", "2", "--n", "2"], None);
    let labels = scratch("labels.txt");
    let args = ["build", "seqmix", "--l", "3", "--emit-labels", labels.to_str().unwrap()];
    let first = ok(&args, Some(g.as_bytes()));
    assert_eq!(first, ok(&args, Some(g.as_bytes())));
    assert!(first.starts_with("v 16\n"));
    let written = std::fs::read_to_string(&labels).unwrap();
    assert_eq!(written.lines().count(), 16);
    assert!(written.lines().all(|l| l.ends_with(" undirected")));
    let seq = ok(&["build", "seq", "--l", "3"], Some(g.as_bytes()));
    assert_eq!(seq, first);
}

#[test]
fn line_digraph_of_pure_kautz() {
    let d = ok(&["generate", "kautz", "--d", "2", "--n", "2", "--pure-digraph"], None);
    let line = ok(&["build", "line", "--l", "2"], Some(d.as_bytes()));
    assert!(line.starts_with("v 24\n"));
    assert_eq!(line.lines().filter(|l| l.starts_with('A')).count(), 48);
}

#[test]
fn reduce_bosak() {
    let g = ok(&["generate", "bosak"], None);
    let out_path = scratch("reduced.txt");
    let report = ok(
        &["reduce", "--l", "1", "--rprime", "1", "-o", out_path.to_str().unwrap()],
        Some(g.as_bytes()),
    );
    assert!(report.contains("344"));
    let reduced = std::fs::read_to_string(&out_path).unwrap();
    let analysis = ok(&["analyze"], Some(reduced.as_bytes()));
    assert_eq!(field(&analysis, "order"), "45");
    assert_eq!(field(&analysis, "max directed degree"), "3");
    assert_eq!(field(&analysis, "diameter"), "3");
}

#[test]
fn reduce_complete_symmetric_digraph() {
    let d = ok(&["generate", "ksym", "--n", "9", "--mode", "digraph"], None);
    let reduced = ok(&["reduce", "--l", "2", "--rprime", "1", "--digraph"], Some(d.as_bytes()));
    let analysis = ok(&["analyze"], Some(reduced.as_bytes()));
    assert_eq!(field(&analysis, "max undirected degree"), "2");
    assert_eq!(field(&analysis, "max directed degree"), "7");
}

#[test]
fn route_in_kautz_sequence_graph() {
    let path = scratch("kautz22.txt");
    std::fs::write(&path, ok(&["generate", "kautz", "--d", "2", "--n", "2"], None)).unwrap();
    let out = ok(
        &["route", "--l", "2", "--from", "0,2,1", "--to", "3,4,0", path.to_str().unwrap()],
        None,
    );
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("length "), "{out}");
    let length: usize = last.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(length <= 4);
    assert_eq!(out.lines().count(), length + 2);
}

#[test]
fn census_table() {
    let g = ok(&["generate", "bosak"], None);
    let out = ok(&["census", "--l", "1"], Some(g.as_bytes()));
    assert!(out.lines().any(|l| l.starts_with("order") && l.contains("45")));
    assert!(!out.contains("FAIL"));
}
