//! End-to-end runs of the command-line binary.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liftings"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

#[test]
fn lift_scheme_run_and_json_report() {
    let dir = tempdir();
    let json_path = dir.join("report.json");
    let out = bin()
        .args(["--input"])
        .arg(data("lex_segment.job"))
        .args(["--command", "lift_scheme", "--json"])
        .arg(&json_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("parameters: 16"));
    assert!(text.contains("affine space: false"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(json["parameter_count"], 16);
    assert_eq!(json["eliminated_count"], 8);
    // the canonical parameter enumeration table is embedded
    assert_eq!(json["parameter_table"].as_array().unwrap().len(), 16);
    assert_eq!(json["parameter_table"][0]["name"], "C1");
    assert_eq!(json["parameter_table"][0]["tail_term"], "x0*x3");
    assert_eq!(json["schema"], serde_json::Value::Null); // nested under meta
    assert_eq!(json["meta"]["schema"], "liftings-report/1");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn acm_lift_over_q_with_decomposition() {
    let out = bin()
        .args(["--input"])
        .arg(data("fat_point_q.job"))
        .args([
            "--command",
            "acm_lift",
            "--t-values",
            "1",
            "--scalars",
            "x0:0,-1;x1:0,-1,1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("is_lifting=true decomposition_verified=true"), "{text}");
    assert!(text.contains("x0^2 - x1^2 + x0*x3 + 2*x1*x3 - 3*x3^2"));
}

#[test]
fn acm_lift_char_two_with_chi() {
    let out = bin()
        .args(["--input"])
        .arg(data("char2_chi.job"))
        .args([
            "--command",
            "acm_lift",
            "--t-values",
            "1",
            "--scalars",
            "x0:0,1;x1:0,1,chi",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("decomposition_verified=true"), "{text}");
}

#[test]
fn isom_run_produces_the_morphism_table() {
    let out = bin()
        .args(["--input"])
        .arg(data("two_orders.job"))
        .args(["--command", "isom", "--order2", "deglex"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("parameters: 21 / 39"));
    assert!(text.contains("phi(D22) = C9 + C5"));
    assert!(text.contains("chi_identity=true"));
}

#[test]
fn exit_codes_follow_the_error_families() {
    // parse error -> 2
    let dir = tempdir();
    let bad = dir.join("bad.job");
    std::fs::write(&bad, "ring Q[x0]; ideal H = y9;").unwrap();
    let out = bin()
        .args(["--input"])
        .arg(&bad)
        .args(["--command", "gb"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // precondition error (inhomogeneous) -> 3
    let inhom = dir.join("inhom.job");
    std::fs::write(&inhom, "ring Q[x0,x1]; ideal H = x0^2 + x1;").unwrap();
    let out = bin()
        .args(["--input"])
        .arg(&inhom)
        .args(["--command", "gb"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // specialization failure -> 5 (t = 0 is skipped, nothing remains)
    let out = bin()
        .args(["--input"])
        .arg(data("fat_point_q.job"))
        .args(["--command", "acm_lift", "--t-values", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn repeated_runs_are_byte_identical() {
    let run = || {
        let out = bin()
            .args(["--input"])
            .arg(data("lex_segment.job"))
            .args(["--command", "lift_scheme", "--seed", "42"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn remaining_commands_round_trip() {
    // stratum
    let dir = tempdir();
    let j = dir.join("stratum.job");
    std::fs::write(&j, "ring Q[x0,x1]; order degrevlex; ideal J = x0^2, x0*x1, x1^2;").unwrap();
    let out = bin()
        .args(["--input"]).arg(&j)
        .args(["--command", "stratum"])
        .output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("parameters: 3") && text.contains("affine space: true"), "{text}");

    // verify_lifting with a certificate
    let out = bin()
        .args(["--input"]).arg(data("verify_pair.job"))
        .args(["--command", "verify_lifting"])
        .output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("is_lifting: true"), "{text}");
    assert!(text.contains("x0*x3 + 2*x1*x3 - 3*x3^2"), "{text}");

    // saturate strips the xn powers
    let sat = dir.join("sat.job");
    std::fs::write(&sat, "ring Q[x0,x1,x3]; order degrevlex; ideal I = x0*x3, x1*x3^2;").unwrap();
    let out = bin()
        .args(["--input"]).arg(&sat)
        .args(["--command", "saturate"])
        .output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\n  x1\n") && text.contains("\n  x0\n"), "{text}");

    // truncate pads by monomials
    let tr = dir.join("tr.job");
    std::fs::write(&tr, "ring Q[x0,x1]; order degrevlex; ideal I = x0;").unwrap();
    let out = bin()
        .args(["--input"]).arg(&tr)
        .args(["--command", "truncate", "--m", "2"])
        .output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("x0^2") && text.contains("x0*x1"), "{text}");

    // intersect
    let cap = dir.join("cap.job");
    std::fs::write(&cap, "ring Q[x0,x1]; order degrevlex; ideal I = x0; ideal J = x1;").unwrap();
    let out = bin()
        .args(["--input"]).arg(&cap)
        .args(["--command", "intersect"])
        .output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("x0*x1"));

    // discriminant
    let disc = dir.join("disc.job");
    std::fs::write(&disc, "ring Q[x0,x3]; order degrevlex; ideal F = x0^2 + x0*x3 - 3*x3^2;").unwrap();
    let out = bin()
        .args(["--input"]).arg(&disc)
        .args(["--command", "discriminant", "--var", "x0"])
        .output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("13*x3^2"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn prime_field_job_runs_end_to_end() {
    let out = bin()
        .args(["--input"]).arg(data("gf13.job"))
        .args(["--command", "acm_lift", "--t-values", "7",
               "--scalars", "x0:0,-1;x1:0,-1,1"])
        .output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("final t: 7"), "{text}");
    assert!(text.contains("x0^2 + 12*x1^2 + 8*x0*x3 + 3*x1*x3 + 4*x3^2"), "{text}");
}

#[test]
fn thread_count_does_not_change_reports() {
    let run = |threads: &str| {
        let out = bin()
            .args(["--input"])
            .arg(data("two_orders.job"))
            .args(["--command", "lift_scheme", "--threads", threads])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "liftings-cli-test-{}-{}",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
