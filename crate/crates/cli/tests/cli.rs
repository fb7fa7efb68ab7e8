//! End-to-end tests of the `dyncol` and `dyncol-sat` binaries through
//! their public interface: argument parsing, file formats, exit codes,
//! and the promise that every evidence file re-checks standalone.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn dyncol() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dyncol"))
}

fn solver() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dyncol-sat"))
}

fn solver_path() -> &'static str {
    env!("CARGO_BIN_EXE_dyncol-sat")
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary should run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[track_caller]
fn assert_exit(out: &Output, expected: i32) {
    assert_eq!(
        out.status.code(),
        Some(expected),
        "stdout:\n{}\nstderr:\n{}",
        stdout_of(out),
        stderr_of(out)
    );
}

fn str_arg(path: &Path) -> &str {
    path.to_str().expect("temp paths are valid UTF-8")
}

/// Builds the smallest family member and returns (graph, labels) paths.
fn build_c6(dir: &Path) -> (std::path::PathBuf, std::path::PathBuf) {
    let stem = dir.join("c6");
    let out = run(dyncol().args([
        "build",
        "-r",
        "2",
        "-n",
        "2",
        "-m",
        "2",
        "-o",
        str_arg(&stem),
    ]));
    assert_exit(&out, 0);
    (dir.join("c6.col"), dir.join("c6.labels"))
}

#[test]
fn build_reports_sizes_and_writes_the_six_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("c6");
    let out = run(dyncol().args([
        "build",
        "-r",
        "2",
        "-n",
        "2",
        "-m",
        "2",
        "-o",
        str_arg(&stem),
    ]));
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    for line in [
        "vertices 6",
        "edges 6",
        "degree 2",
        "pigeonhole_ok false",
    ] {
        assert!(text.contains(line), "missing `{line}` in:\n{text}");
    }

    let graph = fs::read_to_string(dir.path().join("c6.col")).unwrap();
    assert!(graph.contains("p edge 6 6"));
    let mut edges: Vec<(u32, u32)> = graph
        .lines()
        .filter_map(|l| l.strip_prefix("e "))
        .map(|l| {
            let mut it = l.split_whitespace();
            let u: u32 = it.next().unwrap().parse().unwrap();
            let v: u32 = it.next().unwrap().parse().unwrap();
            (u.min(v), u.max(v))
        })
        .collect();
    edges.sort_unstable();
    assert_eq!(edges, vec![(1, 2), (1, 5), (2, 6), (3, 4), (3, 5), (4, 6)]);
    assert!(dir.path().join("c6.labels").exists());
}

#[test]
fn repeated_builds_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let dir_a = dir.path().join("a");
    let dir_b = dir.path().join("b");
    fs::create_dir_all(&dir_a).unwrap();
    fs::create_dir_all(&dir_b).unwrap();
    let (graph_a, labels_a) = build_c6(&dir_a);
    let (graph_b, labels_b) = build_c6(&dir_b);
    assert_eq!(fs::read(graph_a).unwrap(), fs::read(graph_b).unwrap());
    assert_eq!(fs::read(labels_a).unwrap(), fs::read(labels_b).unwrap());
}

#[test]
fn build_rejects_parameters_outside_the_family() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("bad");
    let out = run(dyncol().args([
        "build",
        "-r",
        "1",
        "-n",
        "2",
        "-m",
        "2",
        "-o",
        str_arg(&stem),
    ]));
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("error:"));
}

#[test]
fn build_requires_exactly_one_sizing_flag() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("x");
    let none = run(dyncol().args(["build", "-r", "2", "-n", "2", "-o", str_arg(&stem)]));
    assert_exit(&none, 2);
    let both = run(dyncol().args([
        "build",
        "-r",
        "2",
        "-n",
        "2",
        "--delta",
        "2",
        "-m",
        "12",
        "-o",
        str_arg(&stem),
    ]));
    assert_exit(&both, 2);
}

#[test]
fn build_honours_the_vertex_budget() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("big");
    let out = run(dyncol().args([
        "build",
        "-r",
        "2",
        "-n",
        "2",
        "--delta",
        "2",
        "--budget-vertices",
        "100",
        "-o",
        str_arg(&stem),
    ]));
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("capacity exceeded"));
}

#[test]
fn witness_only_verification_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    for out_dir in [&out_a, &out_b] {
        let out = run(dyncol().args([
            "verify-theorems",
            "-r",
            "2",
            "-n",
            "2",
            "--delta",
            "2",
            "--claims",
            "witness-only",
            "-o",
            str_arg(out_dir),
        ]));
        assert_exit(&out, 0);
        let text = stdout_of(&out);
        assert!(text.contains("claim chi partial lower unknown upper 2"));
        assert!(text.contains("claim chi-r partial lower unknown upper 4"));
        assert!(text.contains("claim gamma partial lower unknown upper 2"));
    }
    let report_a = fs::read(out_a.join("report.txt")).unwrap();
    let report_b = fs::read(out_b.join("report.txt")).unwrap();
    assert_eq!(report_a, report_b);
    let text = String::from_utf8(report_a).unwrap();
    assert!(text.contains("entry chi-r-lower optional method SAT status unknown"));
    assert!(!text.contains("(0."), "report files must not carry wall times");
}

/// Full verification of the main instance with the bundled solver, then
/// every evidence file re-checked through the `check` subcommand.
#[test]
fn full_verification_leaves_recheckable_evidence() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("v");
    let out = run(dyncol()
        .env("DYNCOL_SAT_SOLVER", solver_path())
        .args([
            "verify-theorems",
            "-r",
            "2",
            "-n",
            "2",
            "--delta",
            "2",
            "-o",
            str_arg(&out_dir),
        ]));
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("claim chi verified value 2"));
    assert!(text.contains("claim chi-r verified value 4"));
    assert!(text.contains("claim gamma verified value 2"));
    assert!(text.contains("entry chi-r-lower required method SAT status verified value 4"));

    let graph = out_dir.join("instance.col");
    let checks: [(&[&str], i32); 6] = [
        (
            &["--colouring", "chi-r-witness.col", "--dynamic", "2"],
            0,
        ),
        (&["--colouring", "chi-witness.col"], 0),
        (&["--colouring", "chi-witness.col", "--dynamic", "2"], 1),
        (&["--set", "chi-clique.set", "--clique"], 0),
        (&["--set", "gamma-dominating.set", "--domination"], 0),
        (
            &["--gamma-witness", "gamma-witness.json", "--palette", "2"],
            0,
        ),
    ];
    for (args, expected) in checks {
        let mut cmd = dyncol();
        cmd.args(["check", "--graph", str_arg(&graph)]);
        let mut resolved = Vec::new();
        for arg in args {
            if arg.contains('.') {
                resolved.push(out_dir.join(arg));
                cmd.arg(resolved.last().unwrap());
            } else {
                cmd.arg(arg);
            }
        }
        let out = run(&mut cmd);
        assert_exit(&out, expected);
    }
}

#[test]
fn refuted_claim_exits_one_and_writes_a_countermodel() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("m3");
    // Three blocks sit below the pigeonhole threshold and the dynamic
    // chromatic number is genuinely 3 there, so the claimed lower bound
    // of 4 must come back refuted.
    let out = run(dyncol().args([
        "verify-theorems",
        "-r",
        "2",
        "-n",
        "2",
        "-m",
        "3",
        "-o",
        str_arg(&out_dir),
    ]));
    assert_exit(&out, 1);
    let text = stdout_of(&out);
    assert!(text.contains("entry chi-r-lower required method SAT status refuted value 3"));
    assert!(text.contains("claim chi-r refuted"));
    assert!(text.contains("claim chi verified value 2"));

    let recheck = run(dyncol().args([
        "check",
        "--graph",
        str_arg(&out_dir.join("instance.col")),
        "--colouring",
        str_arg(&out_dir.join("chi-r-counter.col")),
        "--dynamic",
        "2",
    ]));
    assert_exit(&recheck, 0);
}

#[test]
fn refute_writes_a_certificate_that_matches_the_pinned_one() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("v");
    let out = run(dyncol().args([
        "verify-theorems",
        "-r",
        "2",
        "-n",
        "2",
        "--delta",
        "2",
        "--claims",
        "witness-only",
        "-o",
        str_arg(&out_dir),
    ]));
    assert_exit(&out, 0);

    let cert_path = dir.path().join("cert.json");
    let out = run(dyncol().args([
        "refute",
        "--graph",
        str_arg(&out_dir.join("instance.col")),
        "--labels",
        str_arg(&out_dir.join("instance.labels")),
        "-r",
        "2",
        "--colouring",
        str_arg(&out_dir.join("chi-witness.col")),
        "-o",
        str_arg(&cert_path),
    ]));
    assert_exit(&out, 0);
    assert!(stdout_of(&out).contains("refuted:"));

    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    assert_eq!(cert["starved"], 264);
    assert_eq!(cert["part"], 1);
    assert_eq!(cert["pool"], serde_json::json!([1]));
    assert_eq!(cert["blocks"], serde_json::json!([1, 2]));
    assert_eq!(cert["rows"].as_array().unwrap().len(), 12);
}

#[test]
fn refute_rejects_colourings_with_too_many_colours() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, labels) = build_c6(dir.path());
    let colouring = dir.path().join("four.col");
    // Proper on the six-cycle, but four colours exceed the refuter's
    // ceiling of rn - 1 = 3.
    fs::write(
        &colouring,
        "p colouring 6 4\n1 1\n2 2\n3 1\n4 4\n5 2\n6 3\n",
    )
    .unwrap();

    let out = run(dyncol().args([
        "refute",
        "--graph",
        str_arg(&graph),
        "--labels",
        str_arg(&labels),
        "-r",
        "2",
        "--colouring",
        str_arg(&colouring),
        "-o",
        str_arg(&dir.path().join("cert.json")),
    ]));
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("refutation requires at most"));
}

#[test]
fn refute_domination_finds_the_undominated_selector() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, labels) = build_c6(dir.path());
    // Both part-1 vertices: selectors of part 2 have no neighbour here.
    let set = dir.path().join("part1.set");
    fs::write(&set, "p set 6 2\n1\n3\n").unwrap();

    let cert_path = dir.path().join("dom.json");
    let out = run(dyncol().args([
        "refute",
        "--graph",
        str_arg(&graph),
        "--labels",
        str_arg(&labels),
        "-r",
        "2",
        "--set",
        str_arg(&set),
        "-o",
        str_arg(&cert_path),
    ]));
    assert_exit(&out, 0);
    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    let undominated = &cert["Undominated"];
    assert_eq!(undominated["part"], 2);
    assert_eq!(undominated["blocks"], serde_json::json!([1, 2]));
}

#[test]
fn sampling_fallback_verifies_without_a_solver() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("fb");
    let out = run(dyncol()
        .env_remove("DYNCOL_SAT_SOLVER")
        .args([
            "verify-theorems",
            "-r",
            "2",
            "-n",
            "2",
            "--delta",
            "2",
            "--samples",
            "10",
            "-o",
            str_arg(&out_dir),
        ]));
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("entry chi-r-lower required method refuter status verified value 4"));
    assert!(text.contains("entry gamma-lower required method refuter status verified value 2"));
    assert!(text.contains("entry gamma-sat-witness optional method SAT status unknown"));

    // The retained sample pairs re-check standalone.
    let sample = out_dir.join("samples/chi-r-colouring-000.col");
    let check = run(dyncol().args([
        "check",
        "--graph",
        str_arg(&out_dir.join("instance.col")),
        "--colouring",
        str_arg(&sample),
    ]));
    assert_exit(&check, 0);
}

#[test]
fn malformed_artifacts_are_format_errors() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, _) = build_c6(dir.path());
    let garbled = dir.path().join("garbled.col");
    fs::write(&garbled, "p colouring 6 2\n1 one\n").unwrap();
    let out = run(dyncol().args([
        "check",
        "--graph",
        str_arg(&graph),
        "--colouring",
        str_arg(&garbled),
    ]));
    assert_exit(&out, 2);

    let short = dir.path().join("short.col");
    fs::write(&short, "p colouring 5 2\n1 1\n2 2\n3 1\n4 2\n5 1\n").unwrap();
    let out = run(dyncol().args([
        "check",
        "--graph",
        str_arg(&graph),
        "--colouring",
        str_arg(&short),
    ]));
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("error:"));
}

#[test]
fn unknown_claim_names_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dyncol().args([
        "verify-theorems",
        "-r",
        "2",
        "-n",
        "2",
        "-m",
        "2",
        "--claims",
        "chi,everything",
        "-o",
        str_arg(&dir.path().join("x")),
    ]));
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("unknown claim"));
}

#[test]
fn solver_binary_speaks_the_dimacs_protocol() {
    let dir = tempfile::tempdir().unwrap();
    let sat = dir.path().join("sat.cnf");
    fs::write(&sat, "c tiny\np cnf 2 2\n1 2 0\n-1 0\n").unwrap();
    let out = run(solver().arg(&sat));
    assert_exit(&out, 10);
    let text = stdout_of(&out);
    assert!(text.contains("s SATISFIABLE"));
    assert!(text.contains("v -1 2"));
    assert!(text.trim_end().ends_with("v 0"));

    let unsat = dir.path().join("unsat.cnf");
    fs::write(&unsat, "p cnf 1 2\n1 0\n-1 0\n").unwrap();
    let out = run(solver().arg(&unsat));
    assert_exit(&out, 20);
    assert!(stdout_of(&out).contains("s UNSATISFIABLE"));

    let garbage = dir.path().join("garbage.cnf");
    fs::write(&garbage, "p cnf 1 1\n2 0\n").unwrap();
    let out = run(solver().arg(&garbage));
    assert_exit(&out, 2);

    let out = run(&mut solver());
    assert_exit(&out, 2);
}
