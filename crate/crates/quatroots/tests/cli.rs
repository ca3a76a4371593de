use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quatroots"))
}

#[test]
fn batch_mode_keeps_input_order_and_skips_comments() {
    let dir = std::env::temp_dir().join("quatroots_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let batch = dir.join("batch.txt");
    std::fs::write(
        &batch,
        "# a comment line\nt - 1\n\nt - (1+i+j+k)   # trailing comment\nt^2 + 1\n",
    )
    .unwrap();
    let out = bin()
        .args(["bounds", "--batch"])
        .arg(&batch)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let pos1 = text.find("== t - 1").unwrap();
    let pos2 = text.find("== t - (1+i+j+k)").unwrap();
    let pos3 = text.find("== t^2 + 1").unwrap();
    assert!(pos1 < pos2 && pos2 < pos3);
    assert!(text.contains("|q| < 3 for any root"));
}

#[test]
fn batch_json_is_an_array() {
    let dir = std::env::temp_dir().join("quatroots_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let batch = dir.join("batch_json.txt");
    std::fs::write(&batch, "t - 1\nt - 2\n").unwrap();
    let out = bin()
        .args(["integer-roots", "--json", "--batch"])
        .arg(&batch)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[0][0]["x0"]["num"], "1");
    assert_eq!(arr[1][0]["x0"]["num"], "2");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("quatroots_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bin()
        .args(["classify", "--json", "t^2 + 1", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["has_spherical_root"], serde_json::Value::Bool(true));
}

#[test]
fn quadratic_no_complex_root_is_not_an_error() {
    let out = bin().args(["quadratic", "t^2 + 1 + k"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("no complex root"));
}

#[test]
fn quadratic_reports_both_roots() {
    let out = bin()
        .args(["quadratic", "--json", "t^2 - (1+2i+j)*t + (i-1-k)"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["q"]["im"]["num"], "1");
    assert_eq!(v["sigma"]["x1"]["num"], "4");
    assert_eq!(v["sigma"]["x1"]["den"], "3");
    assert_eq!(v["coincident"], serde_json::Value::Bool(false));
}

#[test]
fn no_numeric_agrees_on_exact_fields() {
    let expr = "t^3 - k*t^2 + t - k";
    let full = bin()
        .args(["classify", "--json", expr])
        .output()
        .unwrap();
    let exact = bin()
        .args(["classify", "--json", "--no-numeric", expr])
        .output()
        .unwrap();
    assert!(full.status.success() && exact.status.success());
    let a: serde_json::Value = serde_json::from_slice(&full.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&exact.stdout).unwrap();
    for key in [
        "monic_input",
        "f",
        "g",
        "e",
        "d",
        "rank_bez_fg",
        "rank_barnett",
        "has_complex_root",
        "max_complex_roots",
        "has_real_root",
        "has_spherical_root",
        "has_isolated_complex_root",
        "real_roots",
        "spherical_classes",
        "bounds",
    ] {
        assert_eq!(a[key], b[key], "mismatch on {}", key);
    }
    assert!(b["isolated_complex_roots"].as_array().unwrap().is_empty());
}

#[test]
fn bezout_debug_view() {
    let out = bin()
        .args(["bezout", "--json", "t^2 - (i+j)*t - k"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rank_bez_fg"], 1);
    assert_eq!(v["rank_barnett"], 2);
    assert_eq!(v["bez_f_g"]["rows"], 2);
    assert_eq!(v["barnett_stack"]["rows"], 6);
    // resultant vanishes exactly when a complex root exists
    assert_eq!(v["resultant_f_g"]["re"]["num"], "0");
    assert_eq!(v["resultant_f_g"]["im"]["num"], "0");
}

#[test]
fn parse_errors_exit_two_and_point_at_the_problem() {
    let out = bin().args(["classify", "t^2 + $"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("position 6"), "got: {}", text);
}

#[test]
fn constant_input_is_rejected_as_bad_input() {
    let out = bin().args(["classify", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
