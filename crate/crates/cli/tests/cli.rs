use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ordag(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ordag"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn fixture() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/sample.dag")
}

#[test]
fn sort_hypercube() {
    let out = ordag(&["sort", "--topology", "hypercube:2"], "3 1 2 0");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("0 1 2 3"));
    assert_eq!(
        lines.next(),
        Some("n=4 topology=hypercube:2 insert_cmp=5 remove_cmp=11 total=16 bound=32")
    );
}

#[test]
fn sort_bare_family_sizes_to_input() {
    let out = ordag(&["sort", "--topology", "path"], "5 -2 5 9 0\n");
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("-2 0 5 5 9\n"));
}

#[test]
fn sort_empty_input() {
    let out = ordag(&["sort"], "  \n");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn sort_size_mismatch_exits_3() {
    let out = ordag(&["sort", "--topology", "path:4"], "1 2 3 4 5");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sort_bad_input_exits_2() {
    assert_eq!(ordag(&["sort"], "1 two").status.code(), Some(2));
    assert_eq!(
        ordag(&["sort", "--topology", "torus:3"], "1").status.code(),
        Some(2)
    );
}

#[test]
fn trace_raise_exits_4() {
    let out = ordag(
        &[
            "trace",
            "--input",
            fixture(),
            "--vertex",
            "9",
            "--new-label",
            "20",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn trace_unordered_exits_4() {
    let out = ordag(
        &[
            "trace",
            "--input",
            "-",
            "--vertex",
            "1",
            "--new-label",
            "-5",
        ],
        "2 1\n0 1\nlabels: 5 1\n",
    );
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn trace_bad_vertex_exits_2() {
    let out = ordag(
        &[
            "trace",
            "--input",
            fixture(),
            "--vertex",
            "12",
            "--new-label",
            "0",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_dot_has_one_graph_per_iteration() {
    let out = ordag(
        &[
            "trace",
            "--input",
            fixture(),
            "--vertex",
            "9",
            "--new-label",
            "3",
        ],
        "",
    );
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("digraph").count(), 6);
}

#[test]
fn bench_csv_columns() {
    let out = ordag(
        &[
            "bench",
            "--topology",
            "grid:2",
            "--sizes",
            "2-4",
            "--pattern",
            "random,equal",
        ],
        "",
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 3 * 2);
    assert!(lines.iter().all(|l| l.split(',').count() == 9));
}

#[test]
fn verify_passes() {
    let out = ordag(&["verify", "--seed", "3"], "");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 7);
}
