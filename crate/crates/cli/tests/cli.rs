//! End-to-end checks of the lpk binary: round-trips, golden exports, exit
//! codes, and byte-identical suite reports for a fixed seed.

use std::process::{Command, Output};

fn lpk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn letterplace_output_matches_spec_example() {
    let out = lpk(&["ideal", "letterplace", "--n", "2", "--poset", "chain:2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "vars: x(1,1) x(1,2) x(2,1) x(2,2)\nx(1,1)*x(2,1)\nx(1,1)*x(2,2)\nx(1,2)*x(2,2)\n"
    );
}

#[test]
fn printed_ideals_reparse_to_equal_ideals() {
    for args in [
        vec!["ideal", "coletterplace", "--n", "3", "--poset", "v"],
        vec!["ideal", "letterplace", "--n", "2", "--poset", "prod(chain:2,chain:2)"],
        vec![
            "family",
            "cointerval",
            "--param",
            "d=2",
            "--param",
            "n=3",
            "--param",
            "gens=1,3;2,2",
        ],
    ] {
        let first = lpk(&args);
        assert!(first.status.success(), "{args:?}");
        let text = stdout(&first);
        // feeding the printed ideal back through `dual` twice returns it
        let dir = tempdir();
        let path = dir.join("ideal.txt");
        std::fs::write(&path, &text).unwrap();
        let once = lpk(&["dual", "--ideal", path.to_str().unwrap()]);
        assert!(once.status.success(), "{args:?}");
        let path2 = dir.join("dual.txt");
        std::fs::write(&path2, stdout(&once)).unwrap();
        let twice = lpk(&["dual", "--ideal", path2.to_str().unwrap()]);
        assert!(twice.status.success());
        assert_eq!(stdout(&twice), text, "dual of dual differs for {args:?}");
    }
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("lpk-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn betti_matches_known_table() {
    let out = lpk(&[
        "betti",
        "--ideal",
        concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/m2.ideal"),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1  .  ."), "table header row:\n{text}");
    assert!(text.contains(".  3  2"), "linear strand row:\n{text}");
    let json = lpk(&[
        "betti",
        "--json",
        "--ideal",
        concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/m2.ideal"),
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(parsed["1,2"], 3);
    assert_eq!(parsed["2,3"], 2);
}

#[test]
fn hilbert_output() {
    let out = lpk(&[
        "hilbert",
        "--ideal",
        concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/m2.ideal"),
    ]);
    assert_eq!(stdout(&out), "1 - 3*t^2 + 2*t^3\n");
}

#[test]
fn export_golden_files() {
    for dialect in ["m2", "singular"] {
        let out = lpk(&[
            "export",
            "--ideal",
            concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/m2.ideal"),
            "--dialect",
            dialect,
        ]);
        assert!(out.status.success());
        let expected = std::fs::read_to_string(format!(
            "{}/tests/golden/m2.ideal.{}",
            env!("CARGO_MANIFEST_DIR"),
            dialect
        ))
        .unwrap();
        assert_eq!(stdout(&out), expected, "golden mismatch for {dialect}");
    }
}

#[test]
fn exit_codes() {
    // parse error -> 2
    let out = lpk(&["ideal", "letterplace", "--n", "2", "--poset", "chain:zero"]);
    assert_eq!(out.status.code(), Some(2));
    // failing check -> 1 (the artinian square is separable)
    let dir = tempdir();
    let path = dir.join("separable.txt");
    std::fs::write(&path, "vars: x y\nx^2\nx*y\ny^2\n").unwrap();
    let out = lpk(&["check", "unseparable", "--ideal", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    // passing check -> 0
    let path = dir.join("unseparable.txt");
    std::fs::write(&path, "vars: a b c d\na*c\na*d\nb*d\n").unwrap();
    let out = lpk(&["check", "unseparable", "--ideal", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_examples_pass() {
    let out = lpk(&["check", "duality", "--n", "2", "--poset", "prod(chain:2,chain:2)"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS"));
    let out = lpk(&["check", "cm", "--n", "2", "--poset", "chain:3"]);
    assert!(out.status.success());
    let out = lpk(&["check", "colon-cert", "--n", "2", "--poset", "chain:2"]);
    assert!(out.status.success());
    let out = lpk(&["check", "linear-res", "--n", "2", "--poset", "v", "--downset", "1,2,2"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = lpk(&[
        "check",
        "regular-seq",
        "--poset",
        "chain:2",
        "--map",
        "mult:s=2,m=2",
    ]);
    assert!(out.status.success());
}

#[test]
fn map_json_round() {
    let dir = tempdir();
    let path = dir.join("map.json");
    // artinian projection (i,p) -> p on [2] x [2]
    std::fs::write(
        &path,
        r#"{"pairs": [["(1,1)","1"], ["(1,2)","2"], ["(2,1)","1"], ["(2,2)","2"]]}"#,
    )
    .unwrap();
    let out = lpk(&[
        "check",
        "regular-seq",
        "--poset",
        "prod(chain:2,chain:2)",
        "--map-json",
        path.to_str().unwrap(),
        "--target",
        "chain:2",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn suite_reports_are_deterministic() {
    // the randomized criteria (1, 2, 3, 6) plus 9, twice, byte for byte
    let dir = tempdir();
    let j1 = dir.join("r1.json");
    let j2 = dir.join("r2.json");
    let run1 = lpk(&[
        "suite",
        "--seed",
        "7",
        "--criteria",
        "1,2,3,6,9",
        "--json",
        j1.to_str().unwrap(),
    ]);
    let run2 = lpk(&[
        "suite",
        "--seed",
        "7",
        "--criteria",
        "1,2,3,6,9",
        "--json",
        j2.to_str().unwrap(),
    ]);
    assert!(run1.status.success());
    assert_eq!(stdout(&run1), stdout(&run2));
    assert_eq!(
        std::fs::read(&j1).unwrap(),
        std::fs::read(&j2).unwrap(),
        "JSON reports differ between runs"
    );
    let text = stdout(&run1);
    for k in [1, 2, 3, 6, 9] {
        assert!(text.contains(&format!("criterion {k}: PASS")), "{text}");
    }
}

#[test]
fn lpk_char_env_var() {
    let dir = tempdir();
    let path = dir.join("ci.txt");
    std::fs::write(&path, "vars: x y\nx^2\ny^2\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lpk"))
        .args(["betti", "--json", "--ideal", path.to_str().unwrap()])
        .env("LPK_CHAR", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(parsed["2,4"], 1);
    let bad = Command::new(env!("CARGO_BIN_EXE_lpk"))
        .args(["betti", "--ideal", path.to_str().unwrap()])
        .env("LPK_CHAR", "six")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
