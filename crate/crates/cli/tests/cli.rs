use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use transmission::elastic2d::LameParameters;
use transmission::elastic3d::{bracket_bi_3d, find_eigenvalue_3d, Condition};

const BIN: &str = env!("CARGO_BIN_EXE_etrans");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn etrans")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Header-row-keyed records of a CSV body with '#' comment lines.
fn records(text: &str) -> Vec<std::collections::HashMap<String, String>> {
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let head = rdr.headers().unwrap().clone();
    rdr.records()
        .map(|r| head.iter().zip(r.unwrap().iter()).map(|(h, v)| (h.to_string(), v.to_string())).collect())
        .collect()
}

fn num(r: &std::collections::HashMap<String, String>, key: &str) -> f64 {
    r[key].parse().unwrap_or_else(|_| panic!("{key} = {:?}", r[key]))
}

#[test]
fn zeros_default_table() {
    let rows = records(&stdout(&["zeros", "--m-range", "0..5", "--s-range", "1..3", "--reproducible"]));
    assert_eq!(rows.len(), 18);
    assert!(rows.iter().all(|r| r["bound_ok"] == "true" && r["status"] == "ok"));
    let j41 = rows.iter().find(|r| r["m"] == "4" && r["s"] == "1").unwrap();
    assert!((num(j41, "j") - 7.588_342_434_5).abs() < 1e-9);
}

#[test]
fn empty_and_malformed_ranges() {
    let rows = records(&stdout(&["zeros", "--m-range", "5..2"]));
    assert!(rows.is_empty());
    for bad in ["5-2", "a..3", "1..", "..4"] {
        assert_eq!(run(&["zeros", "--m-range", bad]).status.code(), Some(1), "{bad}");
    }
}

#[test]
fn eig_reproduces_the_bi_column() {
    let rows = records(&stdout(&["eig", "--reproducible"]));
    let want = [(4, 2.19), (8, 3.21), (13, 4.46), (17, 5.43), (22, 6.63), (34, 9.48), (42, 11.36)];
    for (m, w) in want {
        let r = rows.iter().find(|r| r["m"] == m.to_string()).unwrap();
        assert!((num(r, "omega") - w).abs() < 0.01, "m={m}: {}", r["omega"]);
        assert!(num(r, "sv_ratio") < 1e-6 && num(r, "det_ratio") <= 1e-7);
        assert!(num(r, "bracket_lo") < num(r, "omega") && num(r, "omega") < num(r, "bracket_hi"));
    }
}

#[test]
#[ignore = "the m = 27 root is 7.8223; the reference value 7.58 is the m = 26 root"]
fn eig_m27_matches_the_reference_value() {
    let rows = records(&stdout(&["eig", "--m-list", "27", "--reproducible"]));
    assert!((num(&rows[0], "omega") - 7.58).abs() < 0.01, "{}", rows[0]["omega"]);
}

#[test]
fn eig_mono_and_3d() {
    let rows = records(&stdout(&["eig", "--kind", "mono", "--m-list", "30", "--gamma", "0.3,0.8"]));
    let r = &rows[0];
    assert_eq!(r["status"], "ok");
    assert!(num(r, "bracket_lo") < num(r, "omega") && num(r, "omega") < num(r, "bracket_hi"));

    let rows = records(&stdout(&["eig", "--dimension", "3", "--m-list", "6"]));
    let p = LameParameters::reference();
    let want = find_eigenvalue_3d(&bracket_bi_3d(6, 1, &p).unwrap(), 6, &p, Condition::FTilde).unwrap();
    assert!((num(&rows[0], "omega") - want).abs() < 1e-9);
    assert_eq!(rows[0]["status"], "ok");

    let rows = records(&stdout(&["eig", "--dimension", "3", "--kind", "mono", "--m-list", "10,20"]));
    assert!(rows.iter().all(|r| r["status"] == "ok"));
}

#[test]
fn localize_tables() {
    let text = stdout(&["localize", "--m-list", "4,13,34", "--tau-list", "0.5,0.999"]);
    let rows = records(&text);
    assert_eq!(rows.len(), 3 * 2 * 6);
    let ratio = |m: &str, tau: f64, side: &str| {
        let r = rows
            .iter()
            .find(|r| r["m"] == m && (num(r, "tau") - tau).abs() < 1e-12 && r["side"] == side)
            .unwrap();
        num(r, "ratio")
    };
    for side in ["u", "v"] {
        assert!(ratio("34", 0.5, side) < ratio("13", 0.5, side));
        assert!(ratio("13", 0.5, side) < ratio("4", 0.5, side));
    }
    assert!(rows.iter().filter(|r| (num(r, "tau") - 0.999).abs() < 1e-12).all(|r| num(r, "ratio") > 0.9));

    let rows = records(&stdout(&["localize", "--kind", "mono", "--m-list", "20,30,40"]));
    assert!(rows.iter().filter(|r| r["side"] == "v^s").all(|r| num(r, "ratio") > 0.5));
}

#[test]
fn resonance_sweep_and_fits() {
    let text = stdout(&["resonance", "--m-list", "4,8", "--format", "json", "--reproducible"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let mu_rows: Vec<&Value> = rows.iter().filter(|r| r["block"] == "mu").collect();
    let want = [3.96, 5.58, 6.82, 7.87, 8.79, 9.62, 10.39, 11.10];
    assert_eq!(mu_rows.len(), want.len());
    for (r, w) in mu_rows.iter().zip(want) {
        assert!((r["omega"].as_f64().unwrap() - w).abs() < 0.011, "{r}");
    }
    let fit = doc["fits"]
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["quantity"] == "e_u_literal" && f["against"] == "mu")
        .unwrap();
    let slope = fit["slope"].as_f64().unwrap();
    assert!((0.8..=1.1).contains(&slope), "{slope}");
}

#[test]
fn resonance_rejects_non_bi_configs() {
    assert_eq!(run(&["resonance", "--kind", "mono"]).status.code(), Some(1));
    assert_eq!(run(&["resonance", "--dimension", "3"]).status.code(), Some(1));
}

#[test]
fn mode_eval_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m13.csv");
    let out = run(&["mode-eval", "--m-list", "13", "--grid", "100x256", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows = records(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(rows.len(), 25600);
    for r in &rows {
        assert!(num(r, "abs_u") <= (num(r, "abs_u_p") + num(r, "abs_u_s")) * (1.0 + 1e-12) + 1e-300);
        assert!(num(r, "abs_v") <= (num(r, "abs_v_p") + num(r, "abs_v_s")) * (1.0 + 1e-12) + 1e-300);
    }

    let rows = records(&stdout(&["mode-eval", "--m-list", "34", "--grid", "50x64"]));
    let peak = rows.iter().max_by(|a, b| num(a, "abs_u").total_cmp(&num(b, "abs_u"))).unwrap();
    assert!(num(peak, "r") >= 0.9, "{}", peak["r"]);
}

#[test]
fn reproducible_output_is_byte_identical() {
    let args = ["localize", "--m-list", "4,13", "--reproducible"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let one = stdout(&["localize", "--m-list", "4,13", "--reproducible", "--threads", "1"]);
    let four = stdout(&["localize", "--m-list", "4,13", "--reproducible", "--threads", "4"]);
    assert_eq!(a, one);
    assert_eq!(one, four);
    assert!(a.lines().all(|l| !l.contains("generated_unix")));
    assert!(stdout(&["zeros"]).contains("# generated_unix: "));
}

fn echoed_config(text: &str) -> String {
    text.lines().find_map(|l| l.strip_prefix("# config: ")).unwrap().to_string()
}

#[test]
fn config_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let first = stdout(&["eig", "--kind", "mono", "--m-list", "20,30", "--gamma", "0.25,0.75", "--rho-tilde", "10", "--reproducible"]);
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, echoed_config(&first)).unwrap();
    let again = stdout(&["eig", "--config", cfg.to_str().unwrap(), "--reproducible"]);
    assert_eq!(first, again);

    // flags win over the file
    let over = stdout(&["eig", "--config", cfg.to_str().unwrap(), "--m-list", "20", "--reproducible"]);
    assert_eq!(records(&over).len(), 1);
}

#[test]
fn json_mirrors_csv() {
    let csv_rows = records(&stdout(&["zeros", "--reproducible"]));
    let doc: Value = serde_json::from_str(&stdout(&["zeros", "--format", "json", "--reproducible"])).unwrap();
    for key in ["config", "rows", "fits", "diagnostics"] {
        assert!(doc.get(key).is_some(), "{key}");
    }
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), csv_rows.len());
    for (j, c) in rows.iter().zip(&csv_rows) {
        let rel = (j["j"].as_f64().unwrap() - num(c, "j")).abs() / num(c, "j");
        assert!(rel < 1e-11);
    }
    assert_eq!(doc["diagnostics"]["command"], "zeros");
    assert!(doc["diagnostics"].get("generated_unix").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["eig", "--m-list", "8,4"]).status.code(), Some(1));
    assert_eq!(run(&["eig", "--rho-tilde", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["eig", "--config", "/nonexistent/run.json"]).status.code(), Some(2));
    assert_eq!(run(&["zeros", "--out", "/nonexistent/dir/z.csv"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"m_list": [4], "unknown_field": 1}"#).unwrap();
    assert_eq!(run(&["eig", "--config", bad.to_str().unwrap()]).status.code(), Some(1));

    // every row hits a degenerate bracket
    let out = run(&["eig", "--kind", "mono", "--m-list", "3", "--gamma", "0.3,0.35"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("degenerate bracket"));
    // one failing row among good ones is not fatal
    assert_eq!(run(&["eig", "--kind", "mono", "--m-list", "3,30", "--gamma", "0.3,0.35"]).status.code(), Some(0));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.csv");
    assert_eq!(run(&["zeros", "--reproducible", "--out", path.to_str().unwrap()]).status.code(), Some(0));
    assert!(Path::new(&path).exists());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["zeros", "--reproducible"]));
}
