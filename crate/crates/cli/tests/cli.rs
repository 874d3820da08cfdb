//! End-to-end tests of the `cobord` binary: exit codes, JSON round-trips,
//! and golden output fragments.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cobord"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn genus_flag3_table() {
    let out = run(&["genus", "flag:3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("euler characteristic: 6"), "{text}");
    assert!(text.contains("s_(3,0,0) = 6"), "{text}");
    assert!(text.contains("s_(1,1,0) = 6"), "{text}");
    assert!(text.contains("s_(0,0,1) = -6"), "{text}");
    assert!(text.contains("c1^3 = 48"), "{text}");
    assert!(text.contains("c1*c2 = 24"), "{text}");
}

#[test]
fn genus_m10_j2_chern_numbers() {
    let out = run(&["genus", "m10:J2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for frag in [
        "c1^5 = 4860",
        "c1^3*c2 = 2268",
        "c1*c2^2 = 1068",
        "c1^2*c3 = 612",
        "c2*c3 = 292",
        "c1*c4 = 108",
        "c5 = 12",
    ] {
        assert!(text.contains(frag), "missing {frag:?} in {text}");
    }
}

#[test]
fn json_output_round_trips() {
    let out = run(&["genus", "grassmann:4:2", "--json", "--check-independence"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.ends_with('\n'));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["dimension"], 8);
    assert_eq!(doc["euler_characteristic"], 6);
    assert_eq!(doc["checks"]["point_independence"], true);
    // byte-for-byte reproducible
    let again = run(&["genus", "grassmann:4:2", "--json", "--check-independence"]);
    assert_eq!(text, stdout(&again));
}

#[test]
fn single_s_number_query() {
    let out = run(&["genus", "flag:4", "--omega", "1,0,0,0,1,0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 80"));
}

#[test]
fn user_point_reproduces_s4() {
    let out = run(&["genus", "grassmann:4:2", "--point", "1,2,3,4", "--omega", "0,0,0,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= -20"));
}

#[test]
fn verify_flag4_passes() {
    let out = run(&["verify", "flag:4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("residual 0"), "{text}");
    assert!(text.contains("verdict: ok"), "{text}");
}

#[test]
fn verify_single_fixed_point_fails_with_2() {
    let path = write_temp(
        "cobord-bad.json",
        r#"{
            "name": "bad",
            "rank": 2,
            "mode": "explicit",
            "fixed_points": [
                { "sign": 1, "weights": [[1, -1]] }
            ]
        }"#,
    );
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("degree 0"), "{text}");
    assert!(text.contains("verdict: constraint violation"), "{text}");
}

#[test]
fn space_file_matches_builtin() {
    let path = write_temp(
        "cobord-g42.json",
        r#"{
            "name": "g42",
            "rank": 4,
            "mode": "unitary_quotient",
            "blocks": [[1, 2], [3, 4]],
            "identity_weights": [[1, 0, -1, 0], [1, 0, 0, -1], [0, 1, -1, 0], [0, 1, 0, -1]]
        }"#,
    );
    let from_file = run(&["genus", path.to_str().unwrap(), "--json"]);
    assert!(from_file.status.success());
    let builtin = run(&["genus", "grassmann:4:2", "--json"]);
    let a: serde_json::Value = serde_json::from_str(&stdout(&from_file)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&builtin)).unwrap();
    assert_eq!(a["cobordism_class"], b["cobordism_class"]);
    assert_eq!(a["chern_numbers"], b["chern_numbers"]);
}

#[test]
fn exact_route_cross_checks() {
    let out = run(&["exact", "flag:4", "--cross-check", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["checks"]["cross_check"], true);
}

#[test]
fn exact_grassmann_matches_known_class() {
    let out = run(&["exact", "grassmann:4:2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("s_(0,0,0,1) = -20"), "{text}");
    assert!(text.contains("s_(4,0,0,0) = 6"), "{text}");
}

#[test]
fn exact_out_of_range_exits_1() {
    let out = run(&["exact", "flag:6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exact_m10_has_no_closed_form() {
    let out = run(&["exact", "m10:J1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["genus"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate", "flag:3"]).status.code(), Some(1));
    assert_eq!(run(&["genus", "flag:0"]).status.code(), Some(1));
    assert_eq!(run(&["genus", "flag:3", "--omega", "nope"]).status.code(), Some(1));
}

#[test]
fn singular_point_is_a_usage_error() {
    let out = run(&["genus", "flag:3", "--point", "1,1,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_omega_degree_is_rejected() {
    let out = run(&["genus", "flag:3", "--omega", "1,0,0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    assert!(run(&["--help"]).status.success());
    assert!(run(&["genus", "--help"]).status.success());
}
