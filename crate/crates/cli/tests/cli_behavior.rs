//! Behavior of the compiled binary: pinned text outputs, CSV and JSON
//! shapes, SVG structure, and the exit-code contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twocoin"))
        .args(args)
        .output()
        .expect("failed to spawn the twocoin binary")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn pinned_text_outputs() {
    for (args, expected) in [
        (vec!["frobenius", "3", "7"], "11\n"),
        (vec!["frobenius", "12", "25"], "263\n"),
        (vec!["frobenius", "1", "9"], "none\n"),
        (vec!["frobenius", "3", "7", "--verbose"], "11\ncertificate: x=6 y=-1\n"),
        (vec!["check", "5", "8", "27"], "not representable; certificate x=7 y=-1\n"),
        (vec!["check", "5", "8", "26"], "representable; witness x=2 y=2\n"),
        (vec!["check", "3", "7", "11"], "not representable; certificate x=6 y=-1\n"),
        (vec!["count", "3", "7", "21"], "2\n"),
        (vec!["count", "3", "7", "2"], "0\n"),
        (vec!["gaps", "3", "7"], "1\n2\n4\n5\n8\n11\n"),
        (vec!["solve", "3", "7", "21"], "0 3\n7 0\n"),
        (vec!["solve", "5", "8", "27"], "none\n"),
        (vec!["pick", "3", "7"], "area=10 B=4 I=9 pick=ok\n"),
        (vec!["pick", "5", "8"], "area=13 B=4 I=12 pick=ok\n"),
        (vec!["chain", "3", "7", "13"], "12 4 0 second\n13 2 1 second\n"),
        (vec!["chain", "2", "3", "2"], "2 1 0 second\n"),
    ] {
        let output = run(&args);
        assert!(output.status.success(), "{args:?} failed: {}", stderr(&output));
        assert_eq!(stdout(&output), expected, "wrong output for {args:?}");
    }
}

#[test]
fn table_text_has_header_and_one_line_per_row() {
    let output = run(&["table", "2", "3", "1"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["x", "y", "d", "equation", "note"]);
    assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["-", "-", "1", "-", "Impossible"]);

    let output = run(&["table", "3", "7", "30"]);
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 36, "header plus 35 rows");
    assert!(text.lines().all(|l| l == l.trim_end()), "no trailing spaces");
}

#[test]
fn table_csv_shape() {
    let output = run(&["table", "3", "7", "4", "--format", "csv"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(!text.contains('\r'), "LF line endings only");
    assert_eq!(
        text,
        "x,y,d,equation,note\n\
         ,,1,,Impossible\n\
         ,,2,,Impossible\n\
         1,0,3,3·1 + 7·0 = 3,\n\
         ,,4,,Impossible\n"
    );
}

#[test]
fn table_json_shape() {
    let output = run(&["table", "3", "7", "30", "--format", "json"]);
    assert!(output.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    let rows = rows.as_array().expect("an array of rows");
    assert_eq!(rows.len(), 35);
    let gap = &rows[0];
    assert_eq!(gap["x"], serde_json::Value::Null);
    assert_eq!(gap["y"], serde_json::Value::Null);
    assert_eq!(gap["d"], 1);
    assert_eq!(gap["note"], "Impossible");
    let hit = &rows[2];
    assert_eq!(hit["x"], 1);
    assert_eq!(hit["y"], 0);
    assert_eq!(hit["d"], 3);
    assert_eq!(hit["equation"], "3·1 + 7·0 = 3");
    assert_eq!(hit["note"], "");
}

#[test]
fn scalar_json_reports() {
    let output = run(&["frobenius", "3", "7", "--format", "json", "--verbose"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["frobenius"], 11);
    assert_eq!(report["certificate"]["x"], 6);
    assert_eq!(report["certificate"]["y"], -1);

    let output = run(&["frobenius", "1", "9", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["frobenius"], serde_json::Value::Null);

    let output = run(&["check", "5", "8", "26", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["representable"], true);
    assert_eq!(report["witness"]["x"], 2);
    assert!(report.get("certificate").is_none());

    let output = run(&["gaps", "3", "7", "--format", "json"]);
    let gaps: Vec<i64> = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(gaps, vec![1, 2, 4, 5, 8, 11]);

    let output = run(&["solve", "3", "7", "21", "--format", "json"]);
    let solutions: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(solutions[0]["x"], 0);
    assert_eq!(solutions[1]["x"], 7);

    let output = run(&["chain", "3", "7", "13", "--format", "json"]);
    let steps: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(steps[0]["d"], 12);
    assert_eq!(steps[0]["added"], "second");
}

/// Segments with each stroke class, from a parsed SVG document.
fn svg_line_classes(svg: &str) -> (usize, usize) {
    let doc = roxmltree::Document::parse(svg).expect("well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("version"), Some("1.1"));
    assert!(root.attribute("width").is_some());
    assert!(root.attribute("height").is_some());
    let mut hits = 0;
    let mut gaps = 0;
    for node in root.descendants().filter(|n| n.has_tag_name("line")) {
        match node.attribute("class") {
            Some("line-hit") => hits += 1,
            Some("line-gap") => gaps += 1,
            Some("axis") => {}
            other => panic!("unexpected line class {other:?}"),
        }
    }
    (hits, gaps)
}

#[test]
fn plots_classify_gap_lines() {
    for (args, expected_hits, expected_gaps) in [
        (["plot", "3", "7", "30"], 24, 6),
        (["plot", "5", "8", "40"], 26, 14),
        (["plot", "2", "3", "3"], 2, 1),
    ] {
        let output = run(&args);
        assert!(output.status.success());
        let (hits, gaps) = svg_line_classes(&stdout(&output));
        assert_eq!((hits, gaps), (expected_hits, expected_gaps), "class counts for {args:?}");
    }
}

#[test]
fn plot_markers_sit_on_lattice_points() {
    let output = run(&["plot", "3", "7", "30"]);
    let svg = stdout(&output);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let circles = doc
        .root_element()
        .descendants()
        .filter(|n| n.has_tag_name("circle"))
        .count();
    // one marker per table row that is a solution: 29 for this range
    assert_eq!(circles, 29);
}

#[test]
fn validation_failures_exit_2() {
    for args in [
        vec!["frobenius", "4", "6"],
        vec!["frobenius", "0", "7"],
        vec!["check", "3", "7", "-5"],
        vec!["table", "3", "7", "0"],
        vec!["plot", "3", "7", "0"],
        vec!["plot", "3", "7", "30", "--format", "json"],
        vec!["plot", "3", "7", "30", "--width", "50"],
        vec!["chain", "3", "7", "11"],
        vec!["pick", "1", "9"],
        vec!["frobenius", "seven", "3"],
        vec!["frobenius", "3"],
    ] {
        let output = run(&args);
        assert_eq!(output.status.code(), Some(2), "expected exit 2 for {args:?}");
        assert!(!stderr(&output).is_empty(), "no diagnostic for {args:?}");
    }
}

#[test]
fn diagnostics_name_the_violated_precondition() {
    let output = run(&["frobenius", "4", "6"]);
    assert!(stderr(&output).contains("coprime"), "got: {}", stderr(&output));
    let output = run(&["check", "3", "7", "-5"]);
    assert!(stderr(&output).contains("negative"), "got: {}", stderr(&output));
}

#[test]
fn overflow_exits_3() {
    let output = run(&["frobenius", "9223372036854775807", "2"]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stderr(&output).contains("overflow"));

    let output = run(&["gaps", "9223372036854775807", "2"]);
    assert_eq!(output.status.code(), Some(3));
}
