//! End-to-end tests of the `serre` binary: the documented invocations, the
//! exit-status contract, and byte stability of the output.

use std::process::{Command, Output};

fn serre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_serre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = serre(args);
    assert!(
        out.status.success(),
        "`serre {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn seq_s2_verdicts_for_cycles() {
    let odd = stdout(&["check", "seq-s", "2", "--graph", "cycle:9"]);
    assert!(odd.contains("verdict: true"));
    let even = stdout(&["check", "seq-s", "2", "--graph", "cycle:6"]);
    assert!(even.contains("verdict: false"));
    assert!(even.contains("witness:"));
}

#[test]
fn false_verdicts_are_not_errors() {
    let out = serre(&["check", "seq-s", "2", "--graph", "cycle:6"]);
    assert!(out.status.success());
}

#[test]
fn classify_cycles_matches_parity() {
    let table = stdout(&["classify-cycles", "--max", "11"]);
    for n in 3..=11 {
        let expected = if n % 2 == 1 { "true" } else { "false" };
        assert!(
            table.contains(&format!("C_{n}: {expected}")),
            "row for C_{n} wrong in:\n{table}"
        );
    }
}

#[test]
fn betti_of_the_dual_ideal_of_c7() {
    let json = stdout(&[
        "betti",
        "--ideal-of-dual",
        "--graph",
        "cycle:7",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(value["schema"], "serre-report/1");
    let entries = value["table"]["entries"].as_array().expect("entries");
    // generated in degree 4, linear at steps 0 and 1, nonlinear entry at step 2
    let triple = |i: u64, j: u64| {
        entries
            .iter()
            .find(|e| e["i"] == i && e["j"] == j)
            .map(|e| e["value"].as_u64().unwrap())
    };
    assert_eq!(triple(0, 4), Some(7));
    assert_eq!(triple(1, 5), Some(7));
    assert_eq!(triple(2, 7), Some(1));
    assert_eq!(entries.len(), 3);
}

#[test]
fn json_check_reports_carry_schema_field_and_witness() {
    let json = stdout(&[
        "check",
        "seq-s",
        "2",
        "--graph",
        "cycle:4",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(value["schema"], "serre-report/1");
    assert_eq!(value["report"]["verdict"], false);
    assert_eq!(value["report"]["r"], 2);
    assert_eq!(value["report"]["field"], "q");
    assert!(value["report"]["witness"].is_object());
    assert!(value["caps"]["max_n"].is_number());
}

#[test]
fn output_is_byte_stable() {
    let args = [
        vec!["check", "seq-s", "2", "--graph", "cycle:8"],
        vec!["betti", "--graph", "cycle:5", "--format", "json"],
        vec!["classify-cycles", "--max", "8"],
        vec!["generate", "bipartite-random:3:4:0.5:11"],
        vec!["bipartite-battery", "--graph", "bipartite-random:3:3:0.4:7"],
    ];
    for a in &args {
        assert_eq!(stdout(a), stdout(a), "unstable output for {a:?}");
    }
}

#[test]
fn generator_grammar() {
    let c5 = stdout(&["generate", "cycle:5"]);
    assert_eq!(c5, "n 5\n1 2\n1 5\n2 3\n3 4\n4 5\n");

    let p4 = stdout(&["generate", "path:4"]);
    assert_eq!(p4, "n 4\n1 2\n2 3\n3 4\n");

    let whiskered = stdout(&["generate", "whisker:cycle:4:1,2"]);
    assert_eq!(whiskered, "n 6\n1 2\n1 4\n1 5\n2 3\n2 6\n3 4\n");

    // seed in the spec wins over --seed; omitted seed falls back to --seed
    let fixed = stdout(&["generate", "bipartite-random:2:3:0.6:5"]);
    let fallback = stdout(&["generate", "bipartite-random:2:3:0.6", "--seed", "5"]);
    assert_eq!(fixed, fallback);
}

#[test]
fn complex_output_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join("serre-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dual.cx");
    std::fs::write(&path, stdout(&["dual", "--graph", "cycle:5"])).unwrap();
    let verdict = stdout(&["check", "cm", "--complex", path.to_str().unwrap()]);
    assert!(verdict.contains("verdict:"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn relative_homology_between_files() {
    let dir = std::env::temp_dir().join("serre-cli-relative");
    std::fs::create_dir_all(&dir).unwrap();
    let ambient = dir.join("c5.cx");
    let sub = dir.join("points.cx");
    std::fs::write(&ambient, stdout(&["generate", "cycle:5", "--as", "complex"])).unwrap();
    std::fs::write(
        &sub,
        stdout(&["skeleton", "--complex", ambient.to_str().unwrap(), "-i", "0", "--pure"]),
    )
    .unwrap();
    // the complex of C_5 is a circle; modulo its vertices every edge becomes
    // a relative 1-cycle
    let text = stdout(&[
        "homology",
        "--complex",
        ambient.to_str().unwrap(),
        "--relative-to",
        sub.to_str().unwrap(),
    ]);
    assert!(text.contains("homology: 1:5"), "{text}");
    std::fs::remove_file(&ambient).ok();
    std::fs::remove_file(&sub).ok();
}

#[test]
fn negative_skeleton_index_gives_the_empty_face_complex() {
    let text = stdout(&["skeleton", "--graph", "cycle:5", "-i", "-1"]);
    assert_eq!(text, "n 5\n-\n");
}

#[test]
fn battery_reports_five_verdicts_and_agreement() {
    let text = stdout(&["bipartite-battery", "--graph", "path:5"]);
    for name in [
        "vertex-decomposable",
        "shellable",
        "seq-cm",
        "condition-iv",
        "seq-s2",
    ] {
        assert!(text.contains(&format!("{name}: true")), "{text}");
    }
    assert!(text.contains("agreement: true"));

    let out = serre(&["bipartite-battery", "--graph", "cycle:5"]);
    assert!(!out.status.success(), "odd cycles are not bipartite");
}

#[test]
fn join_experiment_reports_three_verdicts() {
    let text = stdout(&["join-experiment", "cycle:3", "cycle:5", "--r", "2"]);
    assert!(text.contains("left sequentially S_2: true"));
    assert!(text.contains("right sequentially S_2: true"));
    assert!(text.contains("join sequentially S_2:"));
}

#[test]
fn exit_codes_distinguish_input_and_resource_errors() {
    // malformed input
    let bad = serre(&["check", "seq-s", "--graph", "cycle:one"]);
    assert_eq!(bad.status.code(), Some(2));
    let missing = serre(&["check", "seq-s"]);
    assert_eq!(missing.status.code(), Some(2));
    let unreadable = serre(&["check", "seq-s", "--complex", "/no/such/file"]);
    assert_eq!(unreadable.status.code(), Some(2));

    // exceeded cap
    let capped = serre(&["check", "shellable", "--graph", "cycle:12", "--cap-facets", "3"]);
    assert_eq!(capped.status.code(), Some(3));
    let capped_n = serre(&["check", "seq-s", "--graph", "cycle:9", "--cap-n", "4"]);
    assert_eq!(capped_n.status.code(), Some(3));
}

#[test]
fn field_flag_switches_the_field() {
    let gf2 = stdout(&["homology", "--graph", "cycle:7", "--field", "2"]);
    assert!(gf2.contains("field: 2"));
    let bad = serre(&["homology", "--graph", "cycle:7", "--field", "6"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn support_only_prints_the_label_map() {
    let text = stdout(&["link", "--graph", "cycle:5", "--face", "1", "--support-only"]);
    assert!(text.contains("# 1 = 3"));
    assert!(text.contains("# 2 = 4"));
    assert!(text.ends_with("n 2\n1\n2\n"));
}
