use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rectlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectlab")).args(args).env("RECTLAB_MAX_N", "5").output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rectlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn printed_counts() {
    assert_eq!(stdout(&rectlab(&["count", "strong", "5"])), "116\n");
    assert_eq!(stdout(&rectlab(&["count", "strong-guillotine", "8"])), "21434\n");
    assert_eq!(stdout(&rectlab(&["count", "schroder", "5"])), "90\n");
    assert_eq!(stdout(&rectlab(&["count", "baxter", "6"])), "422\n");
    assert_eq!(stdout(&rectlab(&["count", "u", "5"])), "112\n");
    assert_eq!(stdout(&rectlab(&["count", "o", "5"])), "72\n");
    assert_eq!(stdout(&rectlab(&["count", "weighted-guillotine", "3", "--y", "1"])), "6\n");
}

#[test]
fn classify_separable_absent() {
    let out = stdout(&rectlab(&["classify", "2 4 1 3"]));
    assert!(out.lines().any(|l| l == "separable no"), "{out}");
    assert!(stdout(&rectlab(&["classify", "1 2 3"])).lines().any(|l| l == "separable yes"));
}

#[test]
fn map_key_map_preserves_strong_key() {
    let perm = "3 1 4 2 6 5";
    let json = stdout(&rectlab(&["map", "--strong", perm]));
    let key = with_stdin(&["key", "--strong", "-"], &json);
    let key = stdout(&key);
    let again = stdout(&rectlab(&["map", "--strong", key.trim()]));
    assert_eq!(stdout(&with_stdin(&["key", "--strong", "-"], &again)), key);
    let fiber = stdout(&with_stdin(&["fiber", "--strong", "-"], &json));
    assert!(fiber.lines().any(|l| l == perm));
}

#[test]
fn walk_round_trip() {
    let walk = stdout(&rectlab(&["walk", "encode", "--weak", "2 4 1 3"]));
    let json = stdout(&with_stdin(&["walk", "decode", "--weak", "-"], &walk));
    let key = stdout(&with_stdin(&["key", "--weak", "-"], &json));
    assert_eq!(key, stdout(&with_stdin(&["key", "--weak", "-"], &stdout(&rectlab(&["map", "--weak", "2 4 1 3"])))));
}

#[test]
fn output_is_deterministic() {
    for args in
        [&["flipgraph", "4", "--dot"][..], &["map", "--weak", "5 2 7 1 4 6 3", "--svg"], &["fiber", "--weak", "-"]]
    {
        if args[0] == "fiber" {
            let json = stdout(&rectlab(&["map", "--weak", "2 1 4 3"]));
            assert_eq!(stdout(&with_stdin(args, &json)), stdout(&with_stdin(args, &json)));
        } else {
            assert_eq!(rectlab(args).stdout, rectlab(args).stdout);
        }
    }
    let dot = stdout(&rectlab(&["flipgraph", "3", "--dot"]));
    assert!(dot.starts_with("graph quotient_3 {"));
    let svg = stdout(&rectlab(&["map", "--strong", "2 1", "--svg"]));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}

#[test]
fn verify_suites() {
    let ok = rectlab(&["verify", "all", "--table-rows", "12"]);
    assert!(ok.status.success(), "{}", stdout(&ok));
    assert!(stdout(&ok).lines().all(|l| l.starts_with("PASS ")));
    let json = stdout(&rectlab(&["verify", "sequences", "--json", "--table-rows", "8"]));
    assert!(json.contains("\"millis\""));
    assert_eq!(rectlab(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(rectlab(&["map", "1 2"]).status.code(), Some(2));
    assert_eq!(rectlab(&["map", "--weak", "--strong", "1 2"]).status.code(), Some(2));
    assert_eq!(rectlab(&["count", "nope", "3"]).status.code(), Some(2));
    assert_eq!(rectlab(&["bogus"]).status.code(), Some(2));
    assert_eq!(rectlab(&["count", "strong", "5", "--unknown"]).status.code(), Some(2));
    let bad = rectlab(&["map", "--weak", "1 x"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 1"));
    let bad_json = with_stdin(&["key", "--weak", "-"], "{\n  \"n\": 1,\n  \"rects\": [}\n");
    assert_eq!(bad_json.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_json.stderr).contains("line 3"));
    assert_eq!(rectlab(&["flipgraph", "9"]).status.code(), Some(1));
}

#[test]
fn every_subcommand_has_help() {
    for sub in ["map", "fiber", "classify", "count", "key", "flipgraph", "walk", "verify", "constants"] {
        let o = rectlab(&[sub, "--help"]);
        assert_eq!(o.status.code(), Some(0), "{sub}");
        assert!(stdout(&o).contains("Usage"));
    }
}
